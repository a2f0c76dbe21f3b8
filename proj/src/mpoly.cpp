#include "wgauss/mpoly.hpp"

#include <sstream>

namespace wgauss {

MPoly MPoly::var(FieldPtr f, int nvars, int i) {
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[i] = 1;
    return monomial(Scalar::one(f), e);
}

MPoly MPoly::constant(const Scalar& c, int nvars) {
    return monomial(c, Exponent(static_cast<std::size_t>(nvars), 0));
}

MPoly MPoly::monomial(const Scalar& c, const Exponent& e) {
    MPoly m(c.field(), static_cast<int>(e.size()));
    m.add_term(e, c);
    return m;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) {
        int s = 0;
        for (int v : e) s += v;
        d = std::max(d, s);
    }
    return d;
}

bool MPoly::is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : t_) {
        int s = 0;
        for (int v : e) s += v;
        if (d >= 0 && s != d) return false;
        d = s;
    }
    return true;
}

Scalar MPoly::coeff(const Exponent& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Scalar::zero(f_) : it->second;
}

void MPoly::add_term(const Exponent& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != n_) throw DomainError("exponent length mismatch");
    if (c.field() != f_) throw MixedFieldError();
    if (c.is_zero()) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    if (n_ != o.n_) throw DomainError("variable count mismatch");
    MPoly r(f_, n_);
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_) {
            Exponent e(e1);
            for (int i = 0; i < n_; ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MPoly MPoly::operator*(const Scalar& s) const {
    MPoly r(f_, n_);
    for (const auto& [e, c] : t_) r.add_term(e, c * s);
    return r;
}

MPoly MPoly::derivative(int i) const {
    MPoly r(f_, n_);
    for (const auto& [e, c] : t_) {
        if (!e[i]) continue;
        Exponent d(e);
        --d[i];
        r.add_term(d, c * Scalar::from_int(f_, e[i]));
    }
    return r;
}

Scalar MPoly::eval(const std::vector<Scalar>& x) const {
    FieldPtr f = x.empty() ? f_ : x[0].field();
    if (f != f_) return coerce(f).eval(x);
    return eval_in<Scalar>(x, Scalar::zero(f));
}

MPoly MPoly::coerce(FieldPtr to) const {
    if (to == f_) return *this;
    MPoly r(to, n_);
    for (const auto& [e, c] : t_) r.add_term(e, c.coerce(to));
    return r;
}

Poly MPoly::restrict(const std::vector<Poly>& x) const {
    FieldPtr f = x.at(0).field();
    if (f != f_) return coerce(f).restrict(x);
    return eval_in<Poly>(x, Poly(f));
}

MPoly MPoly::linear_subst(const Matrix& M) const {
    FieldPtr f = M.field();
    std::vector<MPoly> lin;
    for (int i = 0; i < n_; ++i) {
        MPoly l(f, M.cols());
        for (int j = 0; j < M.cols(); ++j) l = l + MPoly::var(f, M.cols(), j) * M.at(i, j);
        lin.push_back(l);
    }
    return coerce(f).eval_in<MPoly>(lin, MPoly(f, M.cols()));
}

MPoly MPoly::specialize(int i, const Scalar& v) const {
    FieldPtr f = v.field();
    MPoly src = coerce(f);
    MPoly r(f, n_);
    for (const auto& [e, c] : src.t_) {
        Exponent d(e);
        d[i] = 0;
        r.add_term(d, c * v.pow(static_cast<uint64_t>(e[i])));
    }
    return r;
}

std::string MPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second.str();
        for (int i = 0; i < n_; ++i)
            if (it->first[i]) os << "*x" << i << (it->first[i] > 1 ? "^" + std::to_string(it->first[i]) : "");
    }
    return os.str();
}

}  // namespace wgauss
