#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "wgauss/field.hpp"

namespace wgauss {

// Dense univariate polynomial, lowest degree first, no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(FieldPtr f) : f_(f) {}
    Poly(FieldPtr f, std::vector<Scalar> c);

    static Poly constant(const Scalar& c);
    static Poly x(FieldPtr f);
    static Poly monomial(const Scalar& c, int deg);
    static Poly from_ints(FieldPtr f, std::initializer_list<long long> c);
    static Poly from_ints(FieldPtr f, const std::vector<long long>& c);
    static Poly from_roots(FieldPtr f, const std::vector<Scalar>& roots);

    FieldPtr field() const { return f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Scalar coeff(int i) const;
    Scalar lead() const;
    const std::vector<Scalar>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Scalar& s) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::pair<Poly, Poly> divrem(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divrem(d).first; }
    Poly operator%(const Poly& d) const { return divrem(d).second; }
    // Exact division; throws if the remainder is nonzero.
    Poly exact_div(const Poly& d) const;

    Poly monic() const;
    Poly derivative() const;
    Scalar eval(const Scalar& x) const;
    Poly compose(const Poly& g) const;
    Poly pow(unsigned e) const;
    Poly pow_mod(const mpz_class& e, const Poly& m) const;
    Poly shift(int k) const;  // multiply by x^k
    // Multiplicity of x0 as a root.
    int order_at(const Scalar& x0) const;

    Poly coerce(FieldPtr to) const;
    bool descends_to(FieldPtr sub) const;
    Poly descend(FieldPtr sub) const;

    std::string str() const;

private:
    FieldPtr f_ = nullptr;
    std::vector<Scalar> c_;
    void trim();
};

Poly poly_gcd(const Poly& a, const Poly& b);
// Returns (g, s, t) with s a + t b = g, g monic.
std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& a, const Poly& b);

// Determinant of the Sylvester matrix, rows of `a` first. The formal degree
// overloads treat missing top coefficients as zero.
Scalar resultant(const Poly& a, const Poly& b);
Scalar resultant(const Poly& a, const Poly& b, int da, int db);
Scalar discriminant(const Poly& a);

Poly interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys);

struct Factor {
    Poly f;
    int mult;
};
struct Root {
    Scalar r;
    int mult;
};

std::vector<Factor> squarefree(const Poly& a);
std::vector<Factor> factor_finite(const Poly& a);
std::vector<Root> roots_in_field(const Poly& a);
// Field of degree k * lcm(factor degrees) over which `a` splits.
FieldPtr splitting_field(const Poly& a);
std::vector<Root> roots_in_splitting_extension(const Poly& a);
// Every root over the algebraic closure, each one in the smallest field
// containing it (roots of one irreducible factor share a field).
std::vector<Root> all_roots(const Poly& a);

}  // namespace wgauss
