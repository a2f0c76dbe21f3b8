#pragma once

#include <functional>
#include <vector>

#include "wgauss/mpoly.hpp"
#include "wgauss/rng.hpp"

namespace wgauss {

// A polynomial in k affine variables known through its restrictions to
// lines parallel to the last axis: given values for the first k-1
// variables, `restrict_last` returns the univariate polynomial in the last.
// `degree` bounds the total degree and is attained by a constant leading
// coefficient in the last variable.
struct Elim {
    FieldPtr field = nullptr;
    int nvars = 0;
    int degree = 0;
    std::function<Poly(const std::vector<Scalar>&)> restrict_last;

    static Elim from_mpoly(const MPoly& m);
    // Res with respect to the last variable, computed by interpolation in
    // the new last variable.
    static Elim resultant_last(const Elim& a, const Elim& b);
    Poly univariate() const { return restrict_last({}); }
};

// `count` distinct elements of f, in a fixed order.
std::vector<Scalar> sample_nodes(FieldPtr f, int count);

// Smallest extension of f with at least `min_size` elements.
FieldPtr roomy_field(FieldPtr f, uint64_t min_size);

// Thrown internally when a random coordinate change is degenerate.
struct RetryError : Error {
    using Error::Error;
};

// True iff the homogeneous forms (n+1 variables) have a common zero in
// P^n over the algebraic closure. Exact: a false answer is a certificate
// obtained from resultants; a true answer comes from an explicit point.
bool has_common_projective_zero(const std::vector<MPoly>& forms, Rng& rng);

}  // namespace wgauss
