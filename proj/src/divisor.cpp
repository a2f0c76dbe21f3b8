#include "wgauss/divisor.hpp"

#include <algorithm>
#include <sstream>

namespace wgauss {

namespace {

void same_curve(const Divisor& a, const Divisor& b) {
    if (a.curve && b.curve && a.curve != b.curve) throw DomainError("divisors live on different curves");
}

CurvePtr curve_of(const Divisor& a, const Divisor& b) { return a.curve ? a.curve : b.curve; }

// Square root in the field of v or its quadratic extension.
Scalar sqrt_anywhere(const Scalar& v) {
    if (auto s = v.sqrt()) return *s;
    FieldPtr f = v.field();
    int k = 2 * f->degree();
    if (k > ext_cap()) throw ExtensionOverflow(k, ext_cap());
    return *v.coerce(Field::extension(f->p(), k)).sqrt();
}

// Merge two sorted term lists with a combining rule.
template <class Op>
std::vector<std::pair<Point, int>> merge(const Divisor& a, const Divisor& b, Op op) {
    std::vector<std::pair<Point, int>> out;
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        int c = i == a.terms.size() ? 1 : j == b.terms.size() ? -1 : a.terms[i].first.compare(b.terms[j].first);
        int ma = 0, mb = 0;
        const Point* P;
        if (c <= 0) {
            P = &a.terms[i].first;
            ma = a.terms[i++].second;
        }
        if (c >= 0) {
            P = &b.terms[j].first;
            mb = b.terms[j++].second;
        }
        int m = op(ma, mb);
        if (m > 0) out.emplace_back(*P, m);
    }
    return out;
}

}  // namespace

Divisor Divisor::of(CurvePtr c, std::vector<std::pair<Point, int>> t) {
    for (auto& [P, m] : t) {
        if (m < 0) throw DomainError("divisor multiplicities must be nonnegative");
        P = canonical(P);
    }
    std::sort(t.begin(), t.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Divisor D(std::move(c));
    for (auto& [P, m] : t) {
        if (!m) continue;
        if (!D.terms.empty() && D.terms.back().first == P)
            D.terms.back().second += m;
        else
            D.terms.emplace_back(std::move(P), m);
    }
    return D;
}

Divisor Divisor::point(CurvePtr c, const Point& P, int m) { return of(std::move(c), {{P, m}}); }

int Divisor::degree() const {
    int d = 0;
    for (const auto& t : terms) d += t.second;
    return d;
}

int Divisor::mult(const Point& P) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), P,
                               [](const auto& t, const Point& q) { return t.first < q; });
    return it != terms.end() && it->first == P ? it->second : 0;
}

bool Divisor::is_reduced() const {
    return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second == 1; });
}

FieldPtr Divisor::field() const {
    FieldPtr f = curve ? curve->field : nullptr;
    for (const auto& [P, m] : terms) {
        FieldPtr g = P.c.empty() ? f : P.field();
        f = f == g ? f : Field::compositum(f, g);
    }
    return f;
}

std::vector<Point> Divisor::support() const {
    std::vector<Point> s;
    for (const auto& t : terms) s.push_back(t.first);
    return s;
}

Divisor Divisor::operator+(const Divisor& o) const {
    same_curve(*this, o);
    Divisor D(curve_of(*this, o));
    D.terms = merge(*this, o, [](int a, int b) { return a + b; });
    return D;
}

Divisor Divisor::operator-(const Divisor& o) const {
    same_curve(*this, o);
    if (!o.leq(*this)) throw DomainError("difference is not effective");
    Divisor D(curve_of(*this, o));
    D.terms = merge(*this, o, [](int a, int b) { return a - b; });
    return D;
}

Divisor Divisor::scaled(int k) const {
    Divisor D(curve);
    if (k <= 0) return D;
    D.terms = terms;
    for (auto& t : D.terms) t.second *= k;
    return D;
}

bool Divisor::operator==(const Divisor& o) const {
    if (terms.size() != o.terms.size()) return false;
    for (std::size_t i = 0; i < terms.size(); ++i)
        if (terms[i].second != o.terms[i].second || terms[i].first != o.terms[i].first) return false;
    return true;
}

bool Divisor::operator<(const Divisor& o) const {
    for (std::size_t i = 0; i < terms.size() && i < o.terms.size(); ++i) {
        int c = terms[i].first.compare(o.terms[i].first);
        if (c) return c < 0;
        if (terms[i].second != o.terms[i].second) return terms[i].second < o.terms[i].second;
    }
    return terms.size() < o.terms.size();
}

bool Divisor::leq(const Divisor& o) const {
    for (const auto& [P, m] : terms)
        if (o.mult(P) < m) return false;
    return true;
}

std::string Divisor::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) os << " + ";
        if (terms[i].second != 1) os << terms[i].second << "*";
        os << terms[i].first.str();
    }
    return os.str();
}

Divisor gcd_div(const Divisor& a, const Divisor& b) {
    same_curve(a, b);
    Divisor D(curve_of(a, b));
    D.terms = merge(a, b, [](int x, int y) { return std::min(x, y); });
    return D;
}

void for_each_subdivisor(const Divisor& D, int n, const std::function<void(const Divisor&)>& fn) {
    const int k = static_cast<int>(D.terms.size());
    if (n < 0 || n > D.degree()) return;
    std::vector<int> suffix(static_cast<std::size_t>(k) + 1, 0);
    for (int i = k - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + D.terms[i].second;
    std::vector<int> pick(static_cast<std::size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == k) {
            if (left) return;
            Divisor E(D.curve);
            for (int j = 0; j < k; ++j)
                if (pick[j]) E.terms.emplace_back(D.terms[j].first, pick[j]);
            fn(E);
            return;
        }
        const int lo = std::max(0, left - suffix[i + 1]), hi = std::min(D.terms[i].second, left);
        for (int m = lo; m <= hi; ++m) {
            pick[i] = m;
            rec(i + 1, left - m);
        }
        pick[i] = 0;
    };
    rec(0, n);
}

std::vector<Divisor> subdivisors(const Divisor& D, int n) {
    std::vector<Divisor> out;
    for_each_subdivisor(D, n, [&](const Divisor& E) { out.push_back(E); });
    return out;
}

std::vector<Point> points_above(const Curve& C, const XPoint& x) {
    if (!C.hyperelliptic()) throw DomainError("points_above: curve is not hyperelliptic");
    if (x.infinity) {
        if (C.odd_model()) return {infinity_point()};
        Scalar s = sqrt_anywhere(C.f.lead());
        return {infinity_point(s), infinity_point(-s)};
    }
    Scalar v = C.f.coerce(x.t.field()).eval(x.t);
    if (v.is_zero()) return {affine_point(x.t, v)};
    Scalar y = sqrt_anywhere(v);
    return {affine_point(x.t, y), affine_point(x.t, -y)};
}

XPoint x_of(const Point& P) {
    if (P.at_infinity()) return {true, Scalar()};
    return {false, P.c[0]};
}

Divisor pullback_x(CurvePtr C, const std::vector<std::pair<XPoint, int>>& d) {
    std::vector<std::pair<Point, int>> t;
    for (const auto& [x, m] : d) {
        auto pts = points_above(*C, x);
        for (const auto& P : pts) t.emplace_back(P, pts.size() == 1 ? 2 * m : m);
    }
    return Divisor::of(std::move(C), std::move(t));
}

Divisor pullback_form(CurvePtr C, const Poly& h, int formal_degree) {
    if (h.is_zero()) throw DomainError("pullback of the zero form");
    std::vector<std::pair<XPoint, int>> d;
    for (const auto& r : all_roots(h)) d.push_back({{false, r.r}, r.mult});
    if (formal_degree > h.degree()) d.push_back({{true, Scalar()}, formal_degree - h.degree()});
    return pullback_x(std::move(C), d);
}

HyperellipticForm hyperelliptic_reduce(const Divisor& D) {
    const Curve& C = *D.curve;
    if (!C.hyperelliptic()) throw DomainError("hyperelliptic_reduce: curve is not hyperelliptic");
    HyperellipticForm out;
    std::vector<std::pair<Point, int>> rest(D.terms.begin(), D.terms.end());
    auto find = [&](const Point& P) -> int* {
        for (auto& t : rest)
            if (t.first == P) return &t.second;
        return nullptr;
    };
    for (auto& [P, m] : rest) {
        if (m == 0) continue;
        Point Q = involution(C, P);
        if (Q == P) {
            while (m >= 2) {
                m -= 2;
                out.pairs.push_back(P);
            }
            continue;
        }
        int* mq = find(Q);
        while (mq && *mq > 0 && m > 0) {
            --m;
            --*mq;
            out.pairs.push_back(P);
        }
    }
    out.k = static_cast<int>(out.pairs.size());
    out.B = Divisor::of(D.curve, rest);
    return out;
}

}  // namespace wgauss
