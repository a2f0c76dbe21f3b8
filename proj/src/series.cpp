#include "wgauss/series.hpp"

#include <algorithm>

#include "wgauss/matrix.hpp"

namespace wgauss {

Series::Series(FieldPtr f, int N) : f_(f), c_(static_cast<std::size_t>(N), Scalar::zero(f)) {}

Series::Series(FieldPtr f, int N, std::vector<Scalar> c) : f_(f), c_(std::move(c)) {
    c_.resize(static_cast<std::size_t>(N), Scalar::zero(f));
}

Series Series::constant(const Scalar& c, int N) {
    Series s(c.field(), N);
    if (N > 0) s.c_[0] = c;
    return s;
}

Series Series::from_poly(const Poly& p, int N) {
    Series s(p.field(), N);
    for (int i = 0; i < N && i <= p.degree(); ++i) s.c_[i] = p.coeff(i);
    return s;
}

Series Series::param(FieldPtr f, int N) {
    Series s(f, N);
    if (N > 1) s.c_[1] = Scalar::one(f);
    return s;
}

Series Series::operator+(const Series& o) const {
    int N = std::min(precision(), o.precision());
    Series r(f_, N);
    for (int i = 0; i < N; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

Series Series::operator-(const Series& o) const {
    int N = std::min(precision(), o.precision());
    Series r(f_, N);
    for (int i = 0; i < N; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Series Series::operator*(const Series& o) const {
    int N = std::min(precision(), o.precision());
    Series r(f_, N);
    for (int i = 0; i < N; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; i + j < N; ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    return r;
}

Series Series::operator*(const Scalar& s) const {
    Series r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

bool Series::operator==(const Series& o) const { return f_ == o.f_ && c_ == o.c_; }

Series Series::inv() const {
    if (c_.empty() || c_[0].is_zero()) throw DomainError("series inverse needs a unit constant term");
    int N = precision();
    Series r(f_, N);
    Scalar i0 = c_[0].inv();
    r.c_[0] = i0;
    for (int k = 1; k < N; ++k) {
        Scalar acc = Scalar::zero(f_);
        for (int j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
        r.c_[k] = -acc * i0;
    }
    return r;
}

Series Series::truncate(int N) const {
    Series r = *this;
    r.c_.resize(static_cast<std::size_t>(std::min(N, precision())));
    return r;
}

Series Series::coerce(FieldPtr to) const {
    Series r(to, precision());
    for (int i = 0; i < precision(); ++i) r.c_[i] = c_[i].coerce(to);
    return r;
}

int Series::valuation() const {
    for (int i = 0; i < precision(); ++i)
        if (!c_[i].is_zero()) return i;
    return precision();
}

Poly Series::to_poly() const { return Poly(f_, c_); }

Series BivariateEq::eval(const Series& y, int N) const {
    FieldPtr f = y.field();
    Series acc(f, N);
    for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j)
        acc = acc * y + Series::from_poly(coeffs[j].coerce(f), N);
    return acc;
}

Scalar BivariateEq::partial_y(const Scalar& t, const Scalar& y) const {
    FieldPtr f = y.field();
    Scalar acc = Scalar::zero(f);
    for (int j = static_cast<int>(coeffs.size()) - 1; j >= 1; --j)
        acc = acc * y + coeffs[j].coerce(f).eval(t) * Scalar::from_int(f, j);
    return acc;
}

Series series_solve(const BivariateEq& G, const Scalar& y0, int N) {
    FieldPtr f = y0.field();
    Scalar d = G.partial_y(Scalar::zero(f), y0);
    if (d.is_zero()) throw SingularError("series_solve: dG/dy vanishes at the seed");
    if (!G.eval(Series::constant(y0, 1), 1)[0].is_zero())
        throw DomainError("series_solve: seed is not on the curve");
    Series y = Series::constant(y0, N);
    // Newton iteration, doubling the precision each pass.
    for (int prec = 1; prec < N;) {
        int next = std::min(N, 2 * prec);
        Series yt = y.truncate(next);
        Series r = G.eval(yt, next);
        // derivative of G along y as a series
        Series dg(f, next);
        for (int j = static_cast<int>(G.coeffs.size()) - 1; j >= 1; --j)
            dg = dg * yt + Series::from_poly(G.coeffs[j].coerce(f), next) * Scalar::from_int(f, j);
        Series step = r * dg.inv();  // r vanishes below t^prec
        for (int i = prec; i < next; ++i) y[i] = y[i] - step[i];
        prec = next;
    }
    return y;
}

std::vector<Series> series_solve_system(const SeriesSystem& G,
                                        const std::vector<std::vector<Scalar>>& jacobian,
                                        const std::vector<Scalar>& y0, int N) {
    const std::size_t m = y0.size();
    FieldPtr f = y0.front().field();
    Matrix J(f, static_cast<int>(m), static_cast<int>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) J.at(static_cast<int>(i), static_cast<int>(j)) = jacobian[i][j];
    auto Jinv = J.inverse();
    if (!Jinv) throw SingularError("series_solve_system: singular Jacobian at the seed");
    std::vector<Series> y;
    for (const auto& v : y0) y.push_back(Series::constant(v, N));
    // One coefficient per pass: the t^k residual is linear in the unknown
    // t^k coefficients through J.
    for (int k = 1; k < N; ++k) {
        std::vector<Series> yt;
        for (const auto& s : y) yt.push_back(s.truncate(k + 1));
        auto r = G(yt, k + 1);
        for (std::size_t i = 0; i < m; ++i) {
            Scalar acc = Scalar::zero(f);
            for (std::size_t j = 0; j < m; ++j) acc += Jinv->at(static_cast<int>(i), static_cast<int>(j)) * r[j][k];
            y[i][k] = -acc;
        }
    }
    for (const auto& s : G(y, N))
        if (s.valuation() < N) throw Error("series_solve_system: residual did not vanish");
    return y;
}

}  // namespace wgauss
