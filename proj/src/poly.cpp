#include "wgauss/poly.hpp"

#include <sstream>

namespace wgauss {

namespace {

bool prime_fast(FieldPtr f) { return f && f->is_finite() && f->degree() == 1; }

fp::Vec to_vec(const Poly& a) {
    fp::Vec v(a.coeffs().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeffs()[i].coeff(0);
    return v;
}

Poly from_vec(FieldPtr f, const fp::Vec& v) {
    std::vector<Scalar> c;
    c.reserve(v.size());
    for (uint32_t x : v) c.push_back(Scalar::from_int(f, x));
    return Poly(f, std::move(c));
}

void check_same(const Poly& a, const Poly& b) {
    if (a.field() != b.field()) throw MixedFieldError();
}

}  // namespace

Poly::Poly(FieldPtr f, std::vector<Scalar> c) : f_(f), c_(std::move(c)) {
    for (const auto& s : c_)
        if (s.field() != f_) throw MixedFieldError();
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::x(FieldPtr f) { return Poly(f, {Scalar::zero(f), Scalar::one(f)}); }

Poly Poly::monomial(const Scalar& c, int deg) {
    std::vector<Scalar> v(deg + 1, Scalar::zero(c.field()));
    v[deg] = c;
    return Poly(c.field(), std::move(v));
}

Poly Poly::from_ints(FieldPtr f, std::initializer_list<long long> c) {
    return from_ints(f, std::vector<long long>(c));
}

Poly Poly::from_ints(FieldPtr f, const std::vector<long long>& c) {
    std::vector<Scalar> v;
    for (long long x : c) v.push_back(Scalar::from_int(f, x));
    return Poly(f, std::move(v));
}

Poly Poly::from_roots(FieldPtr f, const std::vector<Scalar>& roots) {
    Poly r = constant(Scalar::one(f));
    for (const auto& a : roots) r = r * Poly(f, {-a, Scalar::one(f)});
    return r;
}

Scalar Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar::zero(f_);
    return c_[i];
}

Scalar Poly::lead() const { return c_.empty() ? Scalar::zero(f_) : c_.back(); }

Poly Poly::operator+(const Poly& o) const {
    check_same(*this, o);
    std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), Scalar::zero(f_));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(f_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    check_same(*this, o);
    std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), Scalar::zero(f_));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Poly(f_, std::move(r));
}

Poly Poly::operator-() const {
    std::vector<Scalar> r;
    for (const auto& c : c_) r.push_back(-c);
    return Poly(f_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    check_same(*this, o);
    if (is_zero() || o.is_zero()) return Poly(f_);
    if (prime_fast(f_)) return from_vec(f_, fp::mul(to_vec(*this), to_vec(o), f_->p()));
    std::vector<Scalar> r(c_.size() + o.c_.size() - 1, Scalar::zero(f_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return Poly(f_, std::move(r));
}

Poly Poly::operator*(const Scalar& s) const {
    if (s.field() != f_) throw MixedFieldError();
    std::vector<Scalar> r;
    for (const auto& c : c_) r.push_back(c * s);
    return Poly(f_, std::move(r));
}

bool Poly::operator==(const Poly& o) const {
    if (f_ != o.f_) throw MixedFieldError();
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    check_same(*this, d);
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    if (degree() < d.degree()) return {Poly(f_), *this};
    if (prime_fast(f_)) {
        auto [q, r] = fp::divrem(to_vec(*this), to_vec(d), f_->p());
        return {from_vec(f_, q), from_vec(f_, r)};
    }
    std::vector<Scalar> r = c_;
    int dd = d.degree();
    std::vector<Scalar> q(degree() - dd + 1, Scalar::zero(f_));
    Scalar li = d.lead().inv();
    for (int i = degree(); i >= dd; --i) {
        Scalar c = r[i] * li;
        q[i - dd] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= dd; ++j) r[i - dd + j] -= c * d.c_[j];
    }
    r.resize(dd);
    return {Poly(f_, std::move(q)), Poly(f_, std::move(r))};
}

Poly Poly::exact_div(const Poly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inv();
}

Poly Poly::derivative() const {
    std::vector<Scalar> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Scalar::from_int(f_, static_cast<long long>(i)));
    return Poly(f_, std::move(r));
}

Scalar Poly::eval(const Scalar& x) const {
    if (x.field() != f_) throw MixedFieldError();
    Scalar acc = Scalar::zero(f_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::compose(const Poly& g) const {
    check_same(*this, g);
    Poly acc(f_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(c_[i]);
    return acc;
}

Poly Poly::pow(unsigned e) const {
    Poly r = constant(Scalar::one(f_)), b = *this;
    for (; e; e >>= 1) {
        if (e & 1) r = r * b;
        if (e > 1) b = b * b;
    }
    return r;
}

Poly Poly::pow_mod(const mpz_class& e, const Poly& m) const {
    check_same(*this, m);
    if (prime_fast(f_)) return from_vec(f_, fp::powmod(to_vec(*this), e, to_vec(m), f_->p()));
    Poly r = constant(Scalar::one(f_)) % m, b = *this % m;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = (r * r) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % m;
    }
    return r;
}

Poly Poly::shift(int k) const {
    if (is_zero()) return *this;
    std::vector<Scalar> r(k, Scalar::zero(f_));
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(f_, std::move(r));
}

int Poly::order_at(const Scalar& x0) const {
    if (is_zero()) throw DomainError("order of the zero polynomial");
    Poly lin(f_, {-x0, Scalar::one(f_)});
    Poly a = *this;
    int m = 0;
    for (;;) {
        auto [q, r] = a.divrem(lin);
        if (!r.is_zero()) return m;
        a = q;
        ++m;
    }
}

Poly Poly::coerce(FieldPtr to) const {
    if (to == f_) return *this;
    std::vector<Scalar> r;
    for (const auto& c : c_) r.push_back(c.coerce(to));
    return Poly(to, std::move(r));
}

bool Poly::descends_to(FieldPtr sub) const {
    for (const auto& c : c_)
        if (!c.descend(sub)) return false;
    return true;
}

Poly Poly::descend(FieldPtr sub) const {
    std::vector<Scalar> r;
    for (const auto& c : c_) {
        auto d = c.descend(sub);
        if (!d) throw DomainError("polynomial does not descend to " + sub->name());
        r.push_back(*d);
    }
    return Poly(sub, std::move(r));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].str();
        if (i >= 1) os << "*x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    check_same(a, b);
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& a, const Poly& b) {
    check_same(a, b);
    FieldPtr f = a.field();
    Poly r0 = a, r1 = b, s0 = Poly::constant(Scalar::one(f)), s1(f), t0(f), t1 = Poly::constant(Scalar::one(f));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Scalar li = r0.lead().inv();
    return {r0 * li, s0 * li, t0 * li};
}

namespace {

Scalar det_inplace(std::vector<std::vector<Scalar>>& m, FieldPtr f) {
    int n = static_cast<int>(m.size());
    Scalar det = Scalar::one(f);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!m[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return Scalar::zero(f);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Scalar iv = m[c][c].inv();
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            Scalar k = m[r][c] * iv;
            for (int j = c; j < n; ++j) m[r][j] -= k * m[c][j];
        }
    }
    return det;
}

}  // namespace

Scalar resultant(const Poly& a, const Poly& b, int da, int db) {
    check_same(a, b);
    FieldPtr f = a.field();
    if (a.degree() > da || b.degree() > db) throw DomainError("formal degree below actual degree");
    int n = da + db;
    if (n == 0) return Scalar::one(f);
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar::zero(f)));
    for (int i = 0; i < db; ++i)
        for (int j = 0; j <= da; ++j) m[i][i + j] = a.coeff(da - j);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j <= db; ++j) m[db + i][i + j] = b.coeff(db - j);
    return det_inplace(m, f);
}

Scalar resultant(const Poly& a, const Poly& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return Scalar::zero(a.field());
    return resultant(a, b, a.degree(), b.degree());
}

Scalar discriminant(const Poly& a) {
    int n = a.degree();
    if (n < 1) throw DomainError("discriminant of a constant");
    Scalar r = resultant(a, a.derivative(), n, n - 1) / a.lead();
    if ((n * (n - 1) / 2) % 2) r = -r;
    return r;
}

Poly interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
    if (xs.size() != ys.size() || xs.empty()) throw DomainError("interpolation size mismatch");
    FieldPtr f = xs[0].field();
    std::size_t n = xs.size();
    // Newton divided differences.
    std::vector<Scalar> c = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            Scalar d = xs[i] - xs[i - j];
            if (d.is_zero()) throw DomainError("repeated interpolation node");
            c[i] = (c[i] - c[i - 1]) / d;
        }
    Poly r = Poly::constant(c[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) r = r * Poly(f, {-xs[i], Scalar::one(f)}) + Poly::constant(c[i]);
    return r;
}

}  // namespace wgauss
