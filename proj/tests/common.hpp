#pragma once

#include <map>
#include <string>
#include <vector>

#include "wgauss/curve.hpp"

namespace wgauss::testing {

inline Scalar rnd(FieldPtr f, Rng& rng) {
    std::vector<uint32_t> c(static_cast<std::size_t>(f->degree()));
    for (auto& v : c) v = static_cast<uint32_t>(rng.below(f->p()));
    return Scalar::from_coeffs(f, c);
}

// Homogeneous form from {exponent: coefficient}.
inline MPoly form(FieldPtr f, int nvars, const std::map<std::vector<int>, long long>& terms) {
    MPoly m(f, nvars);
    for (const auto& [e, c] : terms) m.add_term(e, Scalar::from_int(f, c));
    return m;
}

inline CurvePtr hyperelliptic(FieldPtr f, std::initializer_list<long long> coeffs) {
    return make_hyperelliptic(Poly::from_ints(f, coeffs));
}

// y^2 = x^7 - x
inline CurvePtr x7_minus_x(uint32_t p) {
    return hyperelliptic(Field::prime(p), {0, -1, 0, 0, 0, 0, 0, 1});
}

// x^3 y + y^3 z + z^3 x
inline MPoly klein_form(FieldPtr f) {
    return form(f, 3, {{{3, 1, 0}, 1}, {{0, 3, 1}, 1}, {{1, 0, 3}, 1}});
}

inline CurvePtr klein(FieldPtr f) { return make_plane_quartic(klein_form(f)); }

// Q = x0 x3 - x1 x2 (rulings (a:b) x (c:d) -> (ac, ad, bc, bd)) with a
// fixed cubic; smooth over the fields used in the tests.
inline MPoly g4_quadric(FieldPtr f) { return form(f, 4, {{{1, 0, 0, 1}, 1}, {{0, 1, 1, 0}, -1}}); }

inline MPoly g4_cubic(FieldPtr f) {
    return form(f, 4, {{{3, 0, 0, 0}, 1},
                       {{0, 3, 0, 0}, 2},
                       {{0, 0, 3, 0}, 3},
                       {{0, 0, 0, 3}, 5},
                       {{1, 1, 1, 0}, 1},
                       {{0, 1, 1, 1}, -1},
                       {{2, 0, 0, 1}, 1},
                       {{1, 0, 2, 0}, 2}});
}

inline CurvePtr g4(FieldPtr f) { return make_canonical_g4(g4_quadric(f), g4_cubic(f)); }

}  // namespace wgauss::testing
