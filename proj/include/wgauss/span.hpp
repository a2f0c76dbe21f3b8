#pragma once

#include <vector>

#include "wgauss/divisor.hpp"
#include "wgauss/matrix.hpp"

namespace wgauss {

// A linear subspace of P^{g-1}, stored over the smallest field that
// contains its reduced row echelon form.
struct GrassPoint {
    int g = 0;           // number of homogeneous coordinates
    Matrix basis;        // RREF rows spanning the subspace
    Matrix dual;         // RREF rows of the hyperplanes containing it
    std::vector<Scalar> plucker;

    int dim() const { return basis.rows() - 1; }
    int codim() const { return dual.rows(); }
    FieldPtr field() const { return basis.field(); }
    bool operator==(const GrassPoint& o) const;
    bool operator!=(const GrassPoint& o) const { return !(*this == o); }
    // True when this subspace lies inside `o`.
    bool inside(const GrassPoint& o) const;
};

using LinearSpan = GrassPoint;

GrassPoint subspace_from_rows(int g, const Matrix& rows);
GrassPoint subspace_from_hyperplanes(int g, const Matrix& hyperplanes);

// Descends a vector (or every entry of a matrix) to the smallest field
// containing all its entries.
std::vector<Scalar> canonical_vector(const std::vector<Scalar>& v);
Matrix canonical_matrix(const Matrix& m);

// Rows are the jets of the canonical coordinates at each point up to its
// multiplicity: their span is the linear span of D, and h satisfies
// D <= phi^* H exactly when every row annihilates h.
Matrix hyperplane_conditions(const Divisor& D);

GrassPoint span(const Divisor& D);

// Number of independent hyperplanes containing span(D): l(K - D).
int speciality(const Divisor& D);
// l(D) = deg D - dim span(D).
int ell(const Divisor& D);
inline int dim_complete(const Divisor& D) { return ell(D) - 1; }
// l(D) == 1; requires 1 <= deg D <= g - 1.
bool in_smooth_Wn(const Divisor& D);

// D + P + iota(P).
Divisor sing_shift(const Divisor& D, const Point& P);

// The divisor phi^* H of the hyperplane with coefficient vector h.
Divisor hyperplane_section(CurvePtr C, const std::vector<Scalar>& h);

// F = (H.C) - D for the first hyperplane H of span(D)'s dual basis.
Divisor residual(const Divisor& D);

}  // namespace wgauss
