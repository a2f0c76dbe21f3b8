#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "wgauss/curve.hpp"

namespace wgauss {

// Effective divisor: distinct canonical points with positive multiplicities,
// sorted, so equality is syntactic.
struct Divisor {
    CurvePtr curve;
    std::vector<std::pair<Point, int>> terms;

    Divisor() = default;
    explicit Divisor(CurvePtr c) : curve(std::move(c)) {}
    // Canonicalizes, merges repeated points and sorts.
    static Divisor of(CurvePtr c, std::vector<std::pair<Point, int>> t);
    static Divisor point(CurvePtr c, const Point& P, int m = 1);

    int degree() const;
    bool empty() const { return terms.empty(); }
    int mult(const Point& P) const;
    bool is_reduced() const;
    // Smallest field containing every point (the curve's field if empty).
    FieldPtr field() const;
    std::vector<Point> support() const;

    Divisor operator+(const Divisor& o) const;
    // Throws DomainError unless o <= *this.
    Divisor operator-(const Divisor& o) const;
    Divisor scaled(int k) const;
    bool operator==(const Divisor& o) const;
    bool operator!=(const Divisor& o) const { return !(*this == o); }
    bool operator<(const Divisor& o) const;
    // *this <= o pointwise.
    bool leq(const Divisor& o) const;
    std::string str() const;
};

Divisor gcd_div(const Divisor& a, const Divisor& b);

// Every E <= D with deg E = n, once each, in lexicographic order of the
// multiplicity vectors (last point varying fastest).
std::vector<Divisor> subdivisors(const Divisor& D, int n);
void for_each_subdivisor(const Divisor& D, int n, const std::function<void(const Divisor&)>& fn);

// A point of P^1 = x-line of a hyperelliptic curve.
struct XPoint {
    bool infinity = false;
    Scalar t;
};

// Points above x = t (or above infinity): one Weierstrass point or a
// conjugate pair, over the field where they are defined.
std::vector<Point> points_above(const Curve& C, const XPoint& x);
// The x-coordinate of P (infinity for points at infinity).
XPoint x_of(const Point& P);

Divisor pullback_x(CurvePtr C, const std::vector<std::pair<XPoint, int>>& d);
// Pullback of the binary form of degree `formal_degree` whose affine part
// is h; missing top degree becomes a root at infinity.
Divisor pullback_form(CurvePtr C, const Poly& h, int formal_degree);

struct HyperellipticForm {
    int k = 0;
    Divisor B;
    // One point per extracted pair, in extraction order.
    std::vector<Point> pairs;
};

// Extracts conjugate pairs and doubled Weierstrass points greedily from the
// smallest point on; B is what remains.
HyperellipticForm hyperelliptic_reduce(const Divisor& D);

}  // namespace wgauss
