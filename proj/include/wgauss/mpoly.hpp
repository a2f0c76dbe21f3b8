#pragma once

#include <map>
#include <string>
#include <vector>

#include "wgauss/matrix.hpp"
#include "wgauss/poly.hpp"

namespace wgauss {

using Exponent = std::vector<int>;

// Sparse multivariate polynomial in a fixed number of variables.
class MPoly {
public:
    MPoly() = default;
    MPoly(FieldPtr f, int nvars) : f_(f), n_(nvars) {}
    static MPoly var(FieldPtr f, int nvars, int i);
    static MPoly constant(const Scalar& c, int nvars);
    static MPoly monomial(const Scalar& c, const Exponent& e);

    FieldPtr field() const { return f_; }
    int nvars() const { return n_; }
    const std::map<Exponent, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int total_degree() const;
    bool is_homogeneous() const;
    Scalar coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const Scalar& c);

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Scalar& s) const;
    MPoly operator-() const { return *this * Scalar::from_int(f_, -1); }
    bool operator==(const MPoly& o) const { return f_ == o.f_ && n_ == o.n_ && t_ == o.t_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly derivative(int i) const;
    Scalar eval(const std::vector<Scalar>& x) const;
    MPoly coerce(FieldPtr to) const;

    // Value with each variable replaced by an element of any ring T that
    // supports +, * and scalar multiplication.
    template <class T>
    T eval_in(const std::vector<T>& x, const T& zero) const {
        std::vector<std::vector<T>> pw(static_cast<std::size_t>(n_));
        T acc = zero;
        for (const auto& [e, c] : t_) {
            T term = zero + c;
            for (int i = 0; i < n_; ++i) {
                if (!e[i]) continue;
                auto& cache = pw[i];
                while (static_cast<int>(cache.size()) < e[i])
                    cache.push_back(cache.empty() ? x[i] : cache.back() * x[i]);
                term = term * cache[e[i] - 1];
            }
            acc = acc + term;
        }
        return acc;
    }

    // Restriction to x = sum_j t^j a_j (a line or curve given by Poly
    // coordinates); returns a univariate polynomial in t.
    Poly restrict(const std::vector<Poly>& x) const;
    // Substitution x_i = sum_j M(i,j) y_j.
    MPoly linear_subst(const Matrix& M) const;
    // Fix variable i to a value, keeping the variable count.
    MPoly specialize(int i, const Scalar& v) const;

    std::string str() const;

private:
    FieldPtr f_ = nullptr;
    int n_ = 0;
    std::map<Exponent, Scalar> t_;
};

// Scalar addition helpers so eval_in can start from `zero + c`.
inline Poly operator+(const Poly& a, const Scalar& c) { return a + Poly::constant(c); }
inline MPoly operator+(const MPoly& a, const Scalar& c) { return a + MPoly::constant(c, a.nvars()); }

}  // namespace wgauss
