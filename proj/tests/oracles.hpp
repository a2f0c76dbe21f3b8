#pragma once

// Independent reference computations used to freeze expected values.

#include <algorithm>
#include <map>

#include "common.hpp"
#include "wgauss/divisor.hpp"
#include "wgauss/matrix.hpp"

namespace wgauss::testing {

namespace detail {

inline FieldPtr join(FieldPtr a, FieldPtr b) { return a == b ? a : Field::compositum(a, b); }

// y(t) with y(0) = y0 and y^2 = g(t), by the coefficient recurrence
// 2 y0 c_k = g_k - sum_{0<i<k} c_i c_{k-i}.
inline std::vector<Scalar> sqrt_series(const Poly& g, const Scalar& y0, int N) {
    FieldPtr K = y0.field();
    std::vector<Scalar> c{y0};
    Scalar inv2y0 = (y0 + y0).inv();
    for (int k = 1; k < N; ++k) {
        Scalar s = g.coeff(k).coerce(K);
        for (int i = 1; i < k; ++i) s -= c[i] * c[k - i];
        c.push_back(s * inv2y0);
    }
    return c;
}

// Taylor coefficients of a(x0 + t), lowest first.
inline std::vector<Scalar> taylor(const Poly& a, const Scalar& x0) {
    FieldPtr K = x0.field();
    Poly ak = a.coerce(K);
    Poly shifted = ak.compose(Poly(K, {x0, Scalar::one(K)}));
    std::vector<Scalar> out(static_cast<std::size_t>(std::max(0, a.degree() + 1)), Scalar::zero(K));
    for (int i = 0; i <= shifted.degree(); ++i) out[i] = shifted.coeff(i);
    return out;
}

}  // namespace detail

// l(D) on a hyperelliptic curve as the dimension of
//   L(D) = { (a(x) + b(x) y) / c(x) },  c = prod (x - x0)^{e(x0)},
// cut out by explicit order conditions at every point above a zero of c
// and at infinity. Coefficients of a and b are the unknowns.
inline int ell_function_space(const Divisor& D) {
    const Curve& C = *D.curve;
    const int g = C.genus;
    FieldPtr F = C.field;
    const bool odd = C.odd_model();

    // Group D by x-coordinate.
    struct Fiber {
        Scalar x0;
        std::vector<std::pair<Point, int>> pts;
    };
    std::vector<Fiber> fibers;
    std::vector<std::pair<Point, int>> at_inf;
    FieldPtr K = F;
    for (const auto& [P, m] : D.terms) {
        if (P.at_infinity()) {
            at_inf.emplace_back(P, m);
            if (!P.c.empty()) K = detail::join(K, P.field());
            continue;
        }
        K = detail::join(K, P.field());
        bool found = false;
        for (auto& fb : fibers) {
            FieldPtr L = detail::join(fb.x0.field(), P.c[0].field());
            if (fb.x0.coerce(L) == P.c[0].coerce(L)) {
                fb.pts.emplace_back(P, m);
                found = true;
            }
        }
        if (!found) fibers.push_back({P.c[0], {{P, m}}});
    }
    // Exponents of c and the degree of c.
    std::vector<int> e;
    for (const auto& fb : fibers) {
        const bool ram = C.f.coerce(fb.x0.field()).eval(fb.x0).is_zero();
        int need = 0;
        for (const auto& [P, m] : fb.pts) need = std::max(need, ram ? (m + 1) / 2 : m);
        e.push_back(need);
    }
    Poly c = Poly::constant(Scalar::one(K));
    for (std::size_t i = 0; i < fibers.size(); ++i)
        c = c * Poly(K, {-fibers[i].x0.coerce(K), Scalar::one(K)}).pow(static_cast<unsigned>(e[i]));
    const int deg_c = c.degree();

    int Dinf = 0;
    for (const auto& [P, m] : at_inf) Dinf = std::max(Dinf, m);
    int A, B;
    if (odd) {
        int Dw = at_inf.empty() ? 0 : at_inf[0].second;
        // -2 deg a >= -Dw - 2 deg c ; -2 deg b - (2g+1) >= -Dw - 2 deg c
        A = (Dw + 2 * deg_c) / 2;
        int tb = Dw + 2 * deg_c - (2 * g + 1);
        B = tb >= 0 ? tb / 2 : -1;
    } else {
        A = deg_c + Dinf;
        B = deg_c + Dinf - g - 1;
    }
    const int na = A + 1, nb = std::max(B + 1, 0), nu = na + nb;
    if (nu == 0) return 0;

    Matrix M(K, 0, nu);
    auto add_row = [&](const std::vector<Scalar>& r, FieldPtr L) {
        if (L != K) {
            FieldPtr J = detail::join(L, K);
            if (J != K) {
                M = M.coerce(J);
                K = J;
            }
        }
        std::vector<Scalar> rr;
        for (const auto& s : r) rr.push_back(s.coerce(K));
        M.append_row(rr);
    };

    // Affine conditions at every point above each x0.
    for (std::size_t i = 0; i < fibers.size(); ++i) {
        const Scalar& x0 = fibers[i].x0;
        FieldPtr L = x0.field();
        Scalar fx0 = C.f.coerce(L).eval(x0);
        std::vector<std::pair<Point, int>> above;
        if (fx0.is_zero()) {
            above.emplace_back(fibers[i].pts[0].first, fibers[i].pts[0].second);
        } else {
            // both conjugates, with their multiplicity in D
            const Point& P = fibers[i].pts[0].first;
            Point Q = affine_point(P.c[0], -P.c[1]);
            above.emplace_back(P, D.mult(P));
            above.emplace_back(Q, D.mult(Q));
        }
        for (const auto& [P, mD] : above) {
            FieldPtr LP = detail::join(L, P.field());
            if (fx0.is_zero()) {
                // ord_P(x - x0) = 2, ord_P(y) = 1: ord(a + b y) = min(2 ord a, 2 ord b + 1).
                const int need = 2 * e[i] - mD;
                const int ka = (need + 1) / 2, kb = need / 2;  // ord a >= ka, ord b >= kb
                for (int j = 0; j < ka; ++j) {
                    std::vector<Scalar> row(static_cast<std::size_t>(nu), Scalar::zero(LP));
                    for (int d = j; d < na; ++d) {
                        // coefficient of t^j in (x0 + t)^d = binom(d, j) x0^{d-j}
                        Poly mono = Poly::monomial(Scalar::one(LP), d);
                        row[d] = detail::taylor(mono, x0.coerce(LP))[j];
                    }
                    add_row(row, LP);
                }
                for (int j = 0; j < kb; ++j) {
                    std::vector<Scalar> row(static_cast<std::size_t>(nu), Scalar::zero(LP));
                    for (int d = j; d < nb; ++d) {
                        Poly mono = Poly::monomial(Scalar::one(LP), d);
                        row[na + d] = detail::taylor(mono, x0.coerce(LP))[j];
                    }
                    add_row(row, LP);
                }
                continue;
            }
            const int need = e[i] - mD;
            if (need <= 0) continue;
            Poly fshift = C.f.coerce(LP).compose(Poly(LP, {x0.coerce(LP), Scalar::one(LP)}));
            auto ys = detail::sqrt_series(fshift, P.c[1].coerce(LP), need);
            for (int j = 0; j < need; ++j) {
                std::vector<Scalar> row(static_cast<std::size_t>(nu), Scalar::zero(LP));
                for (int d = 0; d < na; ++d) {
                    auto tay = detail::taylor(Poly::monomial(Scalar::one(LP), d), x0.coerce(LP));
                    if (j < static_cast<int>(tay.size())) row[d] = tay[j];
                }
                for (int d = 0; d < nb; ++d) {
                    auto tay = detail::taylor(Poly::monomial(Scalar::one(LP), d), x0.coerce(LP));
                    Scalar s = Scalar::zero(LP);
                    for (int i2 = 0; i2 <= j && i2 < static_cast<int>(tay.size()); ++i2) s += tay[i2] * ys[j - i2];
                    row[na + d] = s;
                }
                add_row(row, LP);
            }
        }
    }

    // Infinity on even models: Laurent expansion in t = 1/x.
    if (!odd) {
        const int top = 2 * g + 2;
        std::vector<Scalar> hc;
        for (int i = 0; i <= top; ++i) hc.push_back(C.f.coeff(top - i));
        Poly h(F, hc);
        Scalar lc = C.f.lead();
        FieldPtr L = F;
        auto s = lc.sqrt();
        if (!s) {
            L = Field::extension(F->p(), 2 * F->degree());
            s = lc.coerce(L).sqrt();
        }
        const int N = std::max(A, B + g + 1);
        for (int sign = 0; sign < 2; ++sign) {
            Scalar s0 = sign ? -*s : *s;
            Point P = infinity_point(s0);
            const int need = N - D.mult(P) - deg_c;  // coefficients t^0 .. t^{need-1} vanish
            if (need <= 0) continue;
            auto w = detail::sqrt_series(h.coerce(L), s0, need + 1);
            for (int j = 0; j < need; ++j) {
                std::vector<Scalar> row(static_cast<std::size_t>(nu), Scalar::zero(L));
                // t^N a(1/t) = sum a_d t^{N-d}
                for (int d = 0; d < na; ++d)
                    if (N - d == j) row[d] = Scalar::one(L);
                // t^N b(1/t) w / t^{g+1} = sum b_d t^{N-d-g-1} w(t)
                for (int d = 0; d < nb; ++d) {
                    int shift = N - d - g - 1;
                    if (j - shift >= 0 && j - shift < static_cast<int>(w.size())) row[na + d] = w[j - shift];
                }
                add_row(row, L);
            }
        }
    }
    return nu - (M.rows() ? rank(M) : 0);
}

}  // namespace wgauss::testing
