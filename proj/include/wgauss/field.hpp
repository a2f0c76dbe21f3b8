#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wgauss/errors.hpp"

namespace wgauss {

constexpr int kMaxExt = 16;

class Field;
using FieldPtr = const Field*;

// Interned field descriptors: Q, F_p and F_p[x]/(m) where m is the
// lexicographically smallest monic irreducible of its degree (coefficients
// compared from x^{k-1} down to x^0). Descriptors are never freed, so
// pointer equality is field equality.
class Field {
public:
    static FieldPtr rationals();
    static FieldPtr prime(uint32_t p);
    static FieldPtr extension(uint32_t p, int k);

    bool is_rational() const { return p_ == 0; }
    bool is_finite() const { return p_ != 0; }
    uint32_t p() const { return p_; }
    int degree() const { return k_; }
    // Monic modulus, lowest coefficient first, size degree()+1.
    const std::vector<uint32_t>& modulus() const { return mod_; }
    FieldPtr prime_field() const;
    const mpz_class& order() const { return order_; }
    std::string name() const;

    // Smallest field containing both; throws ExtensionOverflow past the cap.
    static FieldPtr compositum(FieldPtr a, FieldPtr b);
    // True if this field embeds in `other` (same p, degree divides).
    bool subfield_of(FieldPtr other) const;

    Field(uint32_t p, int k, std::vector<uint32_t> mod);

private:
    uint32_t p_;
    int k_;
    std::vector<uint32_t> mod_;
    mpz_class order_;
};

// Extension-degree cap used by every routine that builds splitting fields.
int ext_cap();
void set_ext_cap(int cap);

bool is_prime_u32(uint32_t n);

class Scalar {
public:
    using Residue = std::array<uint32_t, kMaxExt>;

    Scalar() : f_(nullptr), v_(Residue{}) {}
    explicit Scalar(FieldPtr f);

    static Scalar zero(FieldPtr f) { return Scalar(f); }
    static Scalar one(FieldPtr f) { return from_int(f, 1); }
    static Scalar from_int(FieldPtr f, long long v);
    static Scalar from_mpz(FieldPtr f, const mpz_class& v);
    static Scalar from_mpq(FieldPtr f, const mpq_class& v);
    // Coefficients of the residue polynomial, lowest first.
    static Scalar from_coeffs(FieldPtr f, const std::vector<uint32_t>& c);
    // The class of x in F_p[x]/(m).
    static Scalar generator(FieldPtr f);

    FieldPtr field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Total order: numeric for Q; lexicographic from the top coefficient otherwise.
    int compare(const Scalar& o) const;
    bool operator<(const Scalar& o) const { return compare(o) < 0; }

    Scalar inv() const;
    Scalar pow(const mpz_class& e) const;
    Scalar pow(uint64_t e) const;
    Scalar frobenius() const { return pow(static_cast<uint64_t>(f_->p())); }
    bool is_square() const;
    std::optional<Scalar> sqrt() const;

    const mpq_class& q() const { return std::get<mpq_class>(v_); }
    uint32_t coeff(int i) const { return std::get<Residue>(v_)[i]; }
    std::vector<uint32_t> coeffs() const;
    const Residue& residue() const { return std::get<Residue>(v_); }

    // Image under the fixed embedding into a larger field.
    Scalar coerce(FieldPtr to) const;
    // Preimage in a subfield if the value lies in it.
    std::optional<Scalar> descend(FieldPtr sub) const;
    // Smallest subfield containing the value (finite fields).
    FieldPtr minimal_field() const;

    std::string str() const;

private:
    FieldPtr f_;
    std::variant<Residue, mpq_class> v_;
    Residue& res() { return std::get<Residue>(v_); }
};

inline void same_field(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field()) throw MixedFieldError();
}

// Image of the generator of `from` in `to`: the smallest root of from's
// modulus in `to`. Cached.
Scalar embed_generator(FieldPtr from, FieldPtr to);

namespace fp {
// Dense F_p polynomials as residue vectors, lowest coefficient first.
using Vec = std::vector<uint32_t>;
void trim(Vec& a);
Vec mul(const Vec& a, const Vec& b, uint32_t p);
Vec mod(const Vec& a, const Vec& m, uint32_t p);
Vec gcd(Vec a, Vec b, uint32_t p);
Vec powmod_x(const mpz_class& e, const Vec& m, uint32_t p);  // x^e mod m
Vec powmod(Vec base, const mpz_class& e, const Vec& m, uint32_t p);
std::pair<Vec, Vec> divrem(const Vec& a, const Vec& b, uint32_t p);
bool irreducible(const Vec& m, uint32_t p);                   // Rabin test
uint32_t inv(uint32_t a, uint32_t p);
uint32_t pow(uint32_t a, uint64_t e, uint32_t p);
}  // namespace fp

}  // namespace wgauss
