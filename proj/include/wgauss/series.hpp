#pragma once

#include <functional>
#include <vector>

#include "wgauss/poly.hpp"

namespace wgauss {

// Power series truncated at t^N: coefficients of t^0..t^{N-1} are exact,
// nothing is claimed beyond.
class Series {
public:
    Series() = default;
    Series(FieldPtr f, int N);
    Series(FieldPtr f, int N, std::vector<Scalar> c);
    static Series constant(const Scalar& c, int N);
    static Series from_poly(const Poly& p, int N);
    // t (the parameter itself).
    static Series param(FieldPtr f, int N);

    FieldPtr field() const { return f_; }
    int precision() const { return static_cast<int>(c_.size()); }
    const Scalar& operator[](int i) const { return c_[i]; }
    Scalar& operator[](int i) { return c_[i]; }
    const std::vector<Scalar>& coeffs() const { return c_; }

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series operator*(const Scalar& s) const;
    Series operator-() const;
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }
    bool operator==(const Series& o) const;

    // Requires a unit constant term.
    Series inv() const;
    Series truncate(int N) const;
    Series coerce(FieldPtr to) const;
    // Index of the first nonzero coefficient, or precision() if none is.
    int valuation() const;
    Poly to_poly() const;

private:
    FieldPtr f_ = nullptr;
    std::vector<Scalar> c_;
};

inline Series operator+(const Series& a, const Scalar& c) {
    return a + Series::constant(c, a.precision());
}

// Equation G(t, y) as a polynomial in y with polynomial coefficients in t:
// G = sum_j coeffs[j](t) y^j.
struct BivariateEq {
    std::vector<Poly> coeffs;
    Series eval(const Series& y, int N) const;
    Scalar partial_y(const Scalar& t, const Scalar& y) const;
};

// Hensel lift of y(t) with y(0) = y0 and G(t, y(t)) = 0 mod t^N.
// Throws SingularError when dG/dy vanishes at (0, y0).
Series series_solve(const BivariateEq& G, const Scalar& y0, int N);

// System version: unknowns y_1..y_m as series in t. `eval` returns the m
// residuals given trial series; `jacobian` gives dG_i/dy_j at t = 0.
using SeriesSystem = std::function<std::vector<Series>(const std::vector<Series>&, int)>;
std::vector<Series> series_solve_system(const SeriesSystem& G,
                                        const std::vector<std::vector<Scalar>>& jacobian,
                                        const std::vector<Scalar>& y0, int N);

}  // namespace wgauss
