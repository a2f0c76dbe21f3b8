#include "wgauss/field.hpp"

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "wgauss/kernels.hpp"

namespace wgauss {

namespace fp {

void trim(Vec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

uint32_t pow(uint32_t a, uint64_t e, uint32_t p) {
    uint64_t b = a % p, r = 1 % p;
    for (; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<uint32_t>(r);
}

uint32_t inv(uint32_t a, uint32_t p) {
    if (a % p == 0) throw DomainError("inverse of zero");
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr) {
        int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    return static_cast<uint32_t>(t < 0 ? t + p : t);
}

Vec mul(const Vec& a, const Vec& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    if (a.size() >= 16 && b.size() >= 16) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i]) kern::axpy_mod(r.data() + i, b.data(), a[i], b.size(), p);
    } else {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t{a[i]} * b[j]) % p);
        }
    }
    trim(r);
    return r;
}

Vec mod(const Vec& a, const Vec& m, uint32_t p) {
    Vec r = a;
    trim(r);
    std::size_t dm = m.size() - 1;
    if (r.size() <= dm) return r;
    uint32_t li = inv(m.back(), p);
    for (std::size_t i = r.size(); i-- > dm;) {
        uint32_t c = static_cast<uint32_t>(uint64_t{r[i]} * li % p);
        if (!c) continue;
        uint32_t nc = p - c;
        for (std::size_t j = 0; j <= dm; ++j)
            r[i - dm + j] = static_cast<uint32_t>((r[i - dm + j] + uint64_t{nc} * m[j]) % p);
    }
    r.resize(dm);
    trim(r);
    return r;
}

Vec gcd(Vec a, Vec b, uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Vec r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        uint32_t li = inv(a.back(), p);
        for (auto& c : a) c = static_cast<uint32_t>(uint64_t{c} * li % p);
    }
    return a;
}

Vec powmod(Vec base, const mpz_class& e, const Vec& m, uint32_t p) {
    Vec r{1};
    base = mod(base, m, p);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mod(mul(r, r, p), m, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, base, p), m, p);
    }
    return r;
}

Vec powmod_x(const mpz_class& e, const Vec& m, uint32_t p) { return powmod(Vec{0, 1}, e, m, p); }

bool irreducible(const Vec& m, uint32_t p) {
    int k = static_cast<int>(m.size()) - 1;
    if (k <= 0) return false;
    if (k == 1) return true;
    if (m[0] == 0) return false;
    // x^{p^j} mod m for j = 1..k by repeated p-th powers.
    std::vector<Vec> frob(k + 1);
    frob[0] = Vec{0, 1};
    mpz_class pz = p;
    for (int j = 1; j <= k; ++j) frob[j] = powmod(frob[j - 1], pz, m, p);
    Vec x{0, 1};
    if (frob[k] != x) return false;
    for (int r = 2; r <= k; ++r) {
        if (k % r) continue;
        bool prime = true;
        for (int d = 2; d * d <= r; ++d)
            if (r % d == 0) prime = false;
        if (!prime) continue;
        Vec h = frob[k / r];
        h.resize(std::max<std::size_t>(h.size(), 2), 0);
        h[1] = (h[1] + p - 1) % p;
        trim(h);
        if (gcd(h, m, p).size() != 1) return false;
    }
    return true;
}

std::pair<Vec, Vec> divrem(const Vec& a, const Vec& b, uint32_t p) {
    Vec r = a;
    trim(r);
    std::size_t db = b.size() - 1;
    if (r.size() <= db) return {Vec{}, r};
    Vec q(r.size() - db, 0);
    uint32_t li = inv(b.back(), p);
    for (std::size_t i = r.size(); i-- > db;) {
        uint32_t c = static_cast<uint32_t>(uint64_t{r[i]} * li % p);
        q[i - db] = c;
        if (!c) continue;
        for (std::size_t j = 0; j <= db; ++j)
            r[i - db + j] = static_cast<uint32_t>((r[i - db + j] + uint64_t{p - c} * b[j]) % p);
    }
    r.resize(db);
    trim(r);
    trim(q);
    return {q, r};
}

static Vec inv_mod(const Vec& a, const Vec& m, uint32_t p) {
    Vec r0 = m, r1 = a, s0{}, s1{1};
    trim(r1);
    if (r1.empty()) throw DomainError("inverse of zero");
    while (r1.size() > 1) {
        auto [q, rem] = divrem(r0, r1, p);
        Vec qs = mul(q, s1, p);
        Vec ns = s0;
        ns.resize(std::max(ns.size(), qs.size()), 0);
        for (std::size_t i = 0; i < qs.size(); ++i) ns[i] = (ns[i] + p - qs[i]) % p;
        trim(ns);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(ns);
        if (r1.empty()) throw DomainError("element not invertible");
    }
    uint32_t c = inv(r1[0], p);
    for (auto& v : s1) v = static_cast<uint32_t>(uint64_t{v} * c % p);
    return s1;
}

}  // namespace fp

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; uint64_t{d} * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::atomic<int> g_ext_cap{12};

struct Registry {
    std::mutex mu;
    std::map<std::pair<uint32_t, int>, std::unique_ptr<Field>> fields;
    std::unique_ptr<Field> q;
};

Registry& registry() {
    static Registry r;
    return r;
}

std::vector<uint32_t> find_modulus(uint32_t p, int k) {
    if (k == 1) return {0, 1};
    std::vector<uint32_t> c(k, 0);  // c[i] = coefficient of x^i
    for (;;) {
        fp::Vec m(c.begin(), c.end());
        m.push_back(1);
        if (m[0] != 0 && fp::irreducible(m, p)) return m;
        int i = 0;
        while (i < k && ++c[i] == p) c[i++] = 0;
        if (i == k) throw Error("no irreducible polynomial found");
    }
}

struct NonResidueCache {
    std::mutex mu;
    std::map<FieldPtr, Scalar> nr;
};

NonResidueCache& nr_cache() {
    static NonResidueCache c;
    return c;
}

}  // namespace

int ext_cap() { return g_ext_cap.load(); }

void set_ext_cap(int cap) {
    if (cap < 1 || cap > kMaxExt)
        throw DomainError("extension cap must lie in [1, " + std::to_string(kMaxExt) + "]");
    g_ext_cap.store(cap);
}

Field::Field(uint32_t p, int k, std::vector<uint32_t> mod) : p_(p), k_(k), mod_(std::move(mod)) {
    if (p_) mpz_ui_pow_ui(order_.get_mpz_t(), p_, static_cast<unsigned long>(k_));
}

FieldPtr Field::rationals() {
    auto& r = registry();
    std::lock_guard<std::mutex> lk(r.mu);
    if (!r.q) r.q = std::make_unique<Field>(0, 1, std::vector<uint32_t>{});
    return r.q.get();
}

FieldPtr Field::prime(uint32_t p) { return extension(p, 1); }

FieldPtr Field::extension(uint32_t p, int k) {
    auto& r = registry();
    {
        std::lock_guard<std::mutex> lk(r.mu);
        auto it = r.fields.find({p, k});
        if (it != r.fields.end()) return it->second.get();
    }
    if (p < 3 || p % 2 == 0 || p >= (1u << 31) || !is_prime_u32(p))
        throw DomainError("field characteristic must be an odd prime below 2^31, got " +
                          std::to_string(p));
    if (k < 1) throw DomainError("extension degree must be positive");
    if (k > kMaxExt) throw ExtensionOverflow(k, kMaxExt);
    auto m = find_modulus(p, k);
    std::lock_guard<std::mutex> lk(r.mu);
    auto& slot = r.fields[{p, k}];
    if (!slot) slot = std::make_unique<Field>(p, k, std::move(m));
    return slot.get();
}

FieldPtr Field::prime_field() const { return is_rational() ? this : prime(p_); }

std::string Field::name() const {
    if (is_rational()) return "Q";
    if (k_ == 1) return "F_" + std::to_string(p_);
    return "F_" + std::to_string(p_) + "^" + std::to_string(k_);
}

bool Field::subfield_of(FieldPtr other) const {
    if (this == other) return true;
    if (is_rational() || other->is_rational()) return false;
    return p_ == other->p_ && other->k_ % k_ == 0;
}

FieldPtr Field::compositum(FieldPtr a, FieldPtr b) {
    if (a == b) return a;
    if (a->is_rational() || b->is_rational() || a->p() != b->p()) throw MixedFieldError();
    int k = std::lcm(a->degree(), b->degree());
    if (k > ext_cap()) throw ExtensionOverflow(k, ext_cap());
    return extension(a->p(), k);
}

// ---------------------------------------------------------------- Scalar

namespace {

using Residue = Scalar::Residue;

inline uint32_t addm(uint32_t a, uint32_t b, uint32_t p) {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
}
inline uint32_t subm(uint32_t a, uint32_t b, uint32_t p) { return a >= b ? a - b : a + p - b; }

Residue ext_mul(const Residue& a, const Residue& b, FieldPtr f) {
    const uint32_t p = f->p();
    const int k = f->degree();
    if (k == 1) {
        Residue r{};
        r[0] = static_cast<uint32_t>(uint64_t{a[0]} * b[0] % p);
        return r;
    }
    uint64_t t[2 * kMaxExt] = {};
    for (int i = 0; i < k; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < k; ++j) t[i + j] = (t[i + j] + uint64_t{a[i]} * b[j]) % p;
    }
    const auto& m = f->modulus();
    for (int i = 2 * k - 2; i >= k; --i) {
        uint64_t c = t[i];
        if (!c) continue;
        for (int j = 0; j < k; ++j) t[i - k + j] = (t[i - k + j] + (p - c) * uint64_t{m[j]}) % p;
        t[i] = 0;
    }
    Residue r{};
    for (int i = 0; i < k; ++i) r[i] = static_cast<uint32_t>(t[i]);
    return r;
}

}  // namespace

Scalar::Scalar(FieldPtr f) : f_(f), v_(Residue{}) {
    if (f && f->is_rational()) v_ = mpq_class(0);
}

Scalar Scalar::from_int(FieldPtr f, long long v) {
    Scalar s(f);
    if (f->is_rational()) {
        s.v_ = mpq_class(mpz_class(static_cast<long>(v)));
    } else {
        long long m = v % static_cast<long long>(f->p());
        if (m < 0) m += f->p();
        s.res()[0] = static_cast<uint32_t>(m);
    }
    return s;
}

Scalar Scalar::from_mpz(FieldPtr f, const mpz_class& v) {
    Scalar s(f);
    if (f->is_rational()) {
        s.v_ = mpq_class(v);
    } else {
        mpz_class m = v % f->p();
        if (m < 0) m += f->p();
        s.res()[0] = static_cast<uint32_t>(m.get_ui());
    }
    return s;
}

Scalar Scalar::from_mpq(FieldPtr f, const mpq_class& v) {
    if (f->is_rational()) {
        Scalar s(f);
        mpq_class c = v;
        c.canonicalize();
        s.v_ = c;
        return s;
    }
    return from_mpz(f, v.get_num()) / from_mpz(f, v.get_den());
}

Scalar Scalar::from_coeffs(FieldPtr f, const std::vector<uint32_t>& c) {
    if (f->is_rational()) throw DomainError("residue coefficients need a finite field");
    if (static_cast<int>(c.size()) > f->degree())
        throw DomainError("too many residue coefficients for " + f->name());
    Scalar s(f);
    for (std::size_t i = 0; i < c.size(); ++i) s.res()[i] = c[i] % f->p();
    return s;
}

Scalar Scalar::generator(FieldPtr f) {
    if (f->is_rational()) throw DomainError("Q has no generator");
    if (f->degree() == 1) return Scalar(f);
    Scalar s(f);
    s.res()[1] = 1;
    return s;
}

bool Scalar::is_zero() const {
    if (f_->is_rational()) return sgn(q()) == 0;
    const auto& r = residue();
    for (int i = 0; i < f_->degree(); ++i)
        if (r[i]) return false;
    return true;
}

bool Scalar::is_one() const {
    if (f_->is_rational()) return q() == 1;
    const auto& r = residue();
    if (r[0] != 1) return false;
    for (int i = 1; i < f_->degree(); ++i)
        if (r[i]) return false;
    return true;
}

Scalar Scalar::operator+(const Scalar& o) const {
    same_field(*this, o);
    Scalar s(f_);
    if (f_->is_rational()) {
        s.v_ = mpq_class(q() + o.q());
        return s;
    }
    for (int i = 0; i < f_->degree(); ++i) s.res()[i] = addm(residue()[i], o.residue()[i], f_->p());
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    same_field(*this, o);
    Scalar s(f_);
    if (f_->is_rational()) {
        s.v_ = mpq_class(q() - o.q());
        return s;
    }
    for (int i = 0; i < f_->degree(); ++i) s.res()[i] = subm(residue()[i], o.residue()[i], f_->p());
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s(f_);
    if (f_->is_rational()) {
        s.v_ = mpq_class(-q());
        return s;
    }
    for (int i = 0; i < f_->degree(); ++i) s.res()[i] = subm(0, residue()[i], f_->p());
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    same_field(*this, o);
    Scalar s(f_);
    if (f_->is_rational()) {
        s.v_ = mpq_class(q() * o.q());
        return s;
    }
    s.v_ = ext_mul(residue(), o.residue(), f_);
    return s;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DomainError("division by zero");
    Scalar s(f_);
    if (f_->is_rational()) {
        s.v_ = mpq_class(1 / q());
        return s;
    }
    if (f_->degree() == 1) {
        s.res()[0] = fp::inv(residue()[0], f_->p());
        return s;
    }
    fp::Vec a(residue().begin(), residue().begin() + f_->degree());
    fp::Vec r = fp::inv_mod(a, f_->modulus(), f_->p());
    for (std::size_t i = 0; i < r.size(); ++i) s.res()[i] = r[i];
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    same_field(*this, o);
    return *this * o.inv();
}

bool Scalar::operator==(const Scalar& o) const {
    if (f_ != o.f_) throw MixedFieldError();
    if (f_->is_rational()) return q() == o.q();
    for (int i = 0; i < f_->degree(); ++i)
        if (residue()[i] != o.residue()[i]) return false;
    return true;
}

int Scalar::compare(const Scalar& o) const {
    if (f_ != o.f_) throw MixedFieldError();
    if (f_->is_rational()) return cmp(q(), o.q()) < 0 ? -1 : (cmp(q(), o.q()) > 0 ? 1 : 0);
    for (int i = f_->degree() - 1; i >= 0; --i) {
        if (residue()[i] < o.residue()[i]) return -1;
        if (residue()[i] > o.residue()[i]) return 1;
    }
    return 0;
}

Scalar Scalar::pow(uint64_t e) const {
    if (f_->is_finite() && f_->degree() == 1) {
        Scalar s(f_);
        s.res()[0] = fp::pow(residue()[0], e, f_->p());
        return s;
    }
    Scalar r = one(f_), b = *this;
    for (; e; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

Scalar Scalar::pow(const mpz_class& e) const {
    if (e < 0) return inv().pow(mpz_class(-e));
    if (e.fits_ulong_p()) return pow(static_cast<uint64_t>(e.get_ui()));
    Scalar r = one(f_);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r *= r;
        if (mpz_tstbit(e.get_mpz_t(), i)) r *= *this;
    }
    return r;
}

bool Scalar::is_square() const {
    if (f_->is_rational()) {
        if (sgn(q()) < 0) return false;
        return mpz_perfect_square_p(q().get_num_mpz_t()) && mpz_perfect_square_p(q().get_den_mpz_t());
    }
    if (is_zero()) return true;
    return pow(mpz_class((f_->order() - 1) / 2)).is_one();
}

static Scalar non_residue(FieldPtr f) {
    auto& c = nr_cache();
    {
        std::lock_guard<std::mutex> lk(c.mu);
        auto it = c.nr.find(f);
        if (it != c.nr.end()) return it->second;
    }
    const uint32_t p = f->p();
    const int k = f->degree();
    for (uint64_t n = 2;; ++n) {
        std::vector<uint32_t> digits;
        for (uint64_t v = n; v && static_cast<int>(digits.size()) < k; v /= p) digits.push_back(v % p);
        Scalar z = Scalar::from_coeffs(f, digits);
        if (!z.is_zero() && !z.is_square()) {
            std::lock_guard<std::mutex> lk(c.mu);
            c.nr.emplace(f, z);
            return z;
        }
    }
}

std::optional<Scalar> Scalar::sqrt() const {
    if (is_zero()) return *this;
    if (f_->is_rational()) {
        if (!is_square()) return std::nullopt;
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), q().get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), q().get_den_mpz_t());
        return from_mpq(f_, mpq_class(n, d));
    }
    if (!is_square()) return std::nullopt;
    mpz_class qm1 = f_->order() - 1;
    mpz_class t = qm1;
    unsigned s = 0;
    while (mpz_even_p(t.get_mpz_t())) {
        t /= 2;
        ++s;
    }
    Scalar z = non_residue(f_).pow(t);
    Scalar x = pow(mpz_class((t + 1) / 2));
    Scalar b = pow(t);
    unsigned m = s;
    while (!b.is_one()) {
        unsigned i = 0;
        Scalar bb = b;
        while (!bb.is_one()) {
            bb *= bb;
            ++i;
        }
        Scalar w = z;
        for (unsigned j = 0; j + 1 < m - i; ++j) w *= w;
        x *= w;
        z = w * w;
        b *= z;
        m = i;
    }
    // Canonical root: the smaller of the two.
    Scalar nx = -x;
    return nx < x ? nx : x;
}

std::vector<uint32_t> Scalar::coeffs() const {
    const auto& r = residue();
    return std::vector<uint32_t>(r.begin(), r.begin() + f_->degree());
}

Scalar Scalar::coerce(FieldPtr to) const {
    if (to == f_) return *this;
    if (!f_->subfield_of(to)) throw MixedFieldError("cannot embed " + f_->name() + " into " + to->name());
    Scalar out(to);
    if (f_->degree() == 1) {
        out.res()[0] = residue()[0];
        return out;
    }
    Scalar g = embed_generator(f_, to);
    for (int i = f_->degree() - 1; i >= 0; --i) {
        Scalar c(to);
        c.res()[0] = residue()[i];
        out = out * g + c;
    }
    return out;
}

std::optional<Scalar> Scalar::descend(FieldPtr sub) const {
    if (sub == f_) return *this;
    if (!sub->subfield_of(f_)) throw MixedFieldError("not a subfield");
    const uint32_t p = f_->p();
    const int k = f_->degree(), d = sub->degree();
    if (d == 1) {
        for (int i = 1; i < k; ++i)
            if (residue()[i]) return std::nullopt;
        Scalar s(sub);
        s.res()[0] = residue()[0];
        return s;
    }
    // Solve sum a_i gamma^i = value over F_p.
    Scalar g = embed_generator(sub, f_);
    std::vector<std::vector<uint32_t>> M(k, std::vector<uint32_t>(d + 1, 0));
    Scalar pw = one(f_);
    for (int i = 0; i < d; ++i) {
        for (int r = 0; r < k; ++r) M[r][i] = pw.residue()[r];
        pw *= g;
    }
    for (int r = 0; r < k; ++r) M[r][d] = residue()[r];
    int row = 0;
    std::vector<int> piv;
    for (int c = 0; c < d && row < k; ++c) {
        int sel = -1;
        for (int r = row; r < k; ++r)
            if (M[r][c]) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(M[row], M[sel]);
        uint32_t iv = fp::inv(M[row][c], p);
        for (auto& v : M[row]) v = static_cast<uint32_t>(uint64_t{v} * iv % p);
        for (int r = 0; r < k; ++r) {
            if (r == row || !M[r][c]) continue;
            uint32_t f = p - M[r][c];
            for (int j = 0; j <= d; ++j) M[r][j] = static_cast<uint32_t>((M[r][j] + uint64_t{f} * M[row][j]) % p);
        }
        piv.push_back(c);
        ++row;
    }
    for (int r = row; r < k; ++r)
        if (M[r][d]) return std::nullopt;
    Scalar s(sub);
    for (int r = 0; r < row; ++r) s.res()[piv[r]] = M[r][d];
    return s;
}

FieldPtr Scalar::minimal_field() const {
    if (f_->is_rational()) return f_;
    int k = f_->degree();
    for (int d = 1; d < k; ++d) {
        if (k % d) continue;
        Scalar t = *this;
        for (int i = 0; i < d; ++i) t = t.frobenius();
        if (t == *this) return Field::extension(f_->p(), d);
    }
    return f_;
}

std::string Scalar::str() const {
    if (!f_) return "<null>";
    if (f_->is_rational()) return q().get_str();
    if (f_->degree() == 1) return std::to_string(residue()[0]);
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < f_->degree(); ++i) os << (i ? "," : "") << residue()[i];
    os << ']';
    return os.str();
}

}  // namespace wgauss
