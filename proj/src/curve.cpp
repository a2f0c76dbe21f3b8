#include "wgauss/curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wgauss/elim.hpp"
#include "wgauss/kernels.hpp"

namespace wgauss {

namespace {

Scalar random_scalar(FieldPtr f, Rng& rng) {
    std::vector<uint32_t> c(static_cast<std::size_t>(f->degree()));
    for (auto& v : c) v = static_cast<uint32_t>(rng.below(f->p()));
    return Scalar::from_coeffs(f, c);
}

FieldPtr common_field(const std::vector<Scalar>& v) {
    FieldPtr f = nullptr;
    for (const auto& s : v) f = f ? (f == s.field() ? f : Field::compositum(f, s.field())) : s.field();
    return f;
}

// h(u) = u^{2g+2} f(1/u): the equation w^2 = h(u) of the chart at infinity.
Poly chart_at_infinity(const Curve& C) {
    const int top = 2 * C.genus + 2;
    std::vector<Scalar> c;
    for (int i = 0; i <= top; ++i) c.push_back(C.f.coeff(top - i));
    return Poly(C.field, std::move(c));
}

// Local parametrization of w^2 = h(u) at (u0, w0): (u(t), w(t)).
std::vector<Series> double_cover_param(const Poly& h, const Scalar& u0, const Scalar& w0, int N) {
    FieldPtr K = common_field({u0, w0});
    Poly hk = h.coerce(K);
    Poly shift = Poly(K, {u0, Scalar::one(K)});  // u0 + s
    Poly taylor = hk.compose(shift);             // h(u0 + s)
    if (!w0.is_zero()) {
        BivariateEq G{{-taylor, Poly(K), Poly::constant(Scalar::one(K))}};
        Series w = series_solve(G, w0, N);
        return {Series::from_poly(shift, N), w};
    }
    // Ramified: w = t, u = u0 + s(t) with h(u0 + s) = t^2.
    std::vector<Poly> coeffs;
    for (int j = 0; j <= taylor.degree(); ++j) coeffs.push_back(Poly::constant(taylor.coeff(j)));
    coeffs[0] = coeffs[0] - Poly::monomial(Scalar::one(K), 2);
    Series s = series_solve(BivariateEq{coeffs}, Scalar::zero(K), N);
    return {s + u0, Series::param(K, N)};
}

MPoly reduce_form(const MPoly& m, FieldPtr Fp) {
    MPoly r(Fp, m.nvars());
    for (const auto& [e, c] : m.terms()) r.add_term(e, Scalar::from_mpq(Fp, c.q()));
    return r;
}

bool denominators_ok(const MPoly& m, uint32_t p) {
    for (const auto& [e, c] : m.terms())
        if (mpz_divisible_ui_p(c.q().get_den_mpz_t(), p)) return false;
    return true;
}

// Smooth over the algebraic closure of a finite field iff the forms have no
// common projective zero. Over Q a smooth reduction modulo a good prime
// certifies smoothness.
bool certify_no_common_zero(const std::vector<MPoly>& forms, uint64_t seed) {
    FieldPtr f = forms[0].field();
    Rng rng(seed);
    if (f->is_finite()) return !has_common_projective_zero(forms, rng);
    uint32_t p = 10007;
    for (int tried = 0; tried < 6; ++p) {
        if (!is_prime_u32(p)) continue;
        bool ok = true;
        for (const auto& m : forms) ok = ok && denominators_ok(m, p);
        if (!ok) continue;
        FieldPtr Fp = Field::prime(p);
        std::vector<MPoly> red;
        for (const auto& m : forms) red.push_back(reduce_form(m, Fp));
        bool degrees_kept = true;
        for (std::size_t i = 0; i < forms.size(); ++i)
            degrees_kept = degrees_kept && (forms[i].is_zero() || red[i].total_degree() == forms[i].total_degree());
        ++tried;
        if (!degrees_kept) continue;
        if (!has_common_projective_zero(red, rng)) return true;
    }
    return false;
}

void require_char(FieldPtr f, std::initializer_list<uint32_t> bad, const char* what) {
    if (!f->is_finite()) return;
    for (uint32_t b : bad)
        if (f->p() == b) throw DomainError(std::string(what) + ": characteristic " + std::to_string(b) + " is not supported");
}

std::vector<Scalar> normalize_projective(std::vector<Scalar> c) {
    for (const auto& v : c)
        if (!v.is_zero()) {
            Scalar iv = v.inv();
            for (auto& w : c) w *= iv;
            return c;
        }
    throw DomainError("projective point with all coordinates zero");
}

std::vector<Scalar> eval_gradient(const MPoly& m, const std::vector<Scalar>& x) {
    std::vector<Scalar> g;
    for (int i = 0; i < m.nvars(); ++i) g.push_back(m.derivative(i).eval(x));
    return g;
}

// Projective chart series: coordinate `param` is P + t, `chart` is 1, the
// remaining ones are solved from the forms.
LocalParam projective_param(const Curve& C, const Point& P, int N) {
    const auto& x0 = P.c;
    FieldPtr K = P.field();
    const int n = static_cast<int>(x0.size());
    int chart = 0;
    while (x0[chart].is_zero()) ++chart;
    std::vector<int> others;
    for (int i = 0; i < n; ++i)
        if (i != chart) others.push_back(i);
    std::vector<MPoly> forms;
    for (const auto& m : C.forms) forms.push_back(m.coerce(K));
    std::vector<std::vector<Scalar>> grads;
    for (const auto& m : forms) grads.push_back(eval_gradient(m, x0));
    // Choose the parameter so the remaining unknowns have invertible Jacobian.
    for (int param : others) {
        std::vector<int> unk;
        for (int i : others)
            if (i != param) unk.push_back(i);
        const int m = static_cast<int>(unk.size());
        Matrix J(K, m, m);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) J.at(a, b) = grads[a][unk[b]];
        if (J.det().is_zero()) continue;
        auto assemble = [&, param, unk](const std::vector<Series>& y, int prec) {
            std::vector<Series> X(static_cast<std::size_t>(n), Series(K, prec));
            X[chart] = Series::constant(Scalar::one(K), prec);
            X[param] = Series::param(K, prec) + x0[param];
            for (std::size_t i = 0; i < unk.size(); ++i) X[unk[i]] = y[i].truncate(prec);
            return X;
        };
        SeriesSystem G = [&, assemble](const std::vector<Series>& y, int prec) {
            auto X = assemble(y, prec);
            std::vector<Series> out;
            for (const auto& f : forms) out.push_back(f.eval_in<Series>(X, Series(K, prec)));
            return out;
        };
        std::vector<std::vector<Scalar>> jac(static_cast<std::size_t>(m));
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) jac[a].push_back(J.at(a, b));
        std::vector<Scalar> y0;
        for (int i : unk) y0.push_back(x0[i]);
        auto y = series_solve_system(G, jac, y0, N);
        return LocalParam{assemble(y, N)};
    }
    throw SingularError("local_param: curve is singular at " + P.str());
}

std::vector<Point> projective_points_over(const Curve& C, FieldPtr K) {
    std::vector<MPoly> forms;
    for (const auto& m : C.forms) forms.push_back(m.coerce(K));
    const int n = forms[0].nvars();
    std::vector<Scalar> elems;
    {
        uint64_t q = K->order().get_ui();
        for (uint64_t i = 0; i < q; ++i) {
            std::vector<uint32_t> c(static_cast<std::size_t>(K->degree()));
            uint64_t v = i;
            for (auto& x : c) {
                x = static_cast<uint32_t>(v % K->p());
                v /= K->p();
            }
            elems.push_back(Scalar::from_coeffs(K, c));
        }
    }
    std::vector<Point> out;
    // Points with some nonzero coordinate among the first n-1: walk the
    // projective space P^{n-2} of prefixes and solve for the last one.
    std::vector<Scalar> pre(static_cast<std::size_t>(n - 1), Scalar::zero(K));
    std::function<void(int)> walk = [&](int lead) {
        // prefixes whose first nonzero entry is at `lead` and equals 1
        std::vector<std::size_t> idx(static_cast<std::size_t>(n - 2 - lead), 0);
        for (;;) {
            for (int i = 0; i < n - 1; ++i) pre[i] = Scalar::zero(K);
            pre[lead] = Scalar::one(K);
            for (std::size_t i = 0; i < idx.size(); ++i) pre[lead + 1 + i] = elems[idx[i]];
            std::vector<Poly> line;
            for (const auto& v : pre) line.push_back(Poly::constant(v));
            line.push_back(Poly::x(K));
            Poly g(K);
            for (const auto& f : forms) g = poly_gcd(g, f.restrict(line));
            if (g.degree() >= 1)
                for (const auto& r : roots_in_field(g)) {
                    auto c = pre;
                    c.push_back(r.r);
                    out.push_back(projective_point(c));
                }
            std::size_t i = 0;
            while (i < idx.size() && ++idx[i] == elems.size()) idx[i++] = 0;
            if (i == idx.size()) break;
        }
    };
    for (int lead = 0; lead < n - 1; ++lead) walk(lead);
    std::vector<Scalar> last(static_cast<std::size_t>(n), Scalar::zero(K));
    last.back() = Scalar::one(K);
    bool on = true;
    for (const auto& f : forms) on = on && f.eval(last).is_zero();
    if (on) out.push_back(projective_point(last));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

const char* model_name(Model m) {
    switch (m) {
        case Model::Hyperelliptic: return "hyperelliptic";
        case Model::PlaneQuartic: return "plane_quartic";
        case Model::CanonicalG4: return "canonical_g4";
    }
    return "?";
}

CurvePtr make_hyperelliptic(const Poly& f) {
    if (!f.field()) throw DomainError("hyperelliptic: missing field");
    require_char(f.field(), {2}, "hyperelliptic");
    const int d = f.degree();
    if (d < 5) throw DomainError("hyperelliptic: deg f must be at least 5 (genus >= 2), got " + std::to_string(d));
    if (discriminant(f).is_zero()) throw SingularError("hyperelliptic: f is not squarefree");
    auto C = std::make_shared<Curve>();
    C->model = Model::Hyperelliptic;
    C->field = f.field();
    C->genus = (d - 1) / 2;
    C->f = f;
    return C;
}

CurvePtr make_plane_quartic(const MPoly& F) {
    if (F.nvars() != 3 || !F.is_homogeneous() || F.total_degree() != 4)
        throw DomainError("plane quartic: expected a homogeneous ternary quartic");
    require_char(F.field(), {2}, "plane quartic");
    std::vector<MPoly> gens{F};
    for (int i = 0; i < 3; ++i) gens.push_back(F.derivative(i));
    if (!certify_no_common_zero(gens, 0x5eed0001)) throw SingularError("plane quartic: model is singular");
    auto C = std::make_shared<Curve>();
    C->model = Model::PlaneQuartic;
    C->field = F.field();
    C->genus = 3;
    C->forms = {F};
    return C;
}

CurvePtr make_canonical_g4(const MPoly& Q, const MPoly& E) {
    if (Q.nvars() != 4 || E.nvars() != 4 || !Q.is_homogeneous() || !E.is_homogeneous() ||
        Q.total_degree() != 2 || E.total_degree() != 3)
        throw DomainError("canonical genus 4: expected a quaternary quadric and cubic");
    if (Q.field() != E.field()) throw MixedFieldError();
    require_char(Q.field(), {2, 3}, "canonical genus 4");
    std::vector<MPoly> gens{Q, E};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            gens.push_back(Q.derivative(i) * E.derivative(j) - Q.derivative(j) * E.derivative(i));
    if (!certify_no_common_zero(gens, 0x5eed0002)) throw SingularError("canonical genus 4: model is singular");
    auto C = std::make_shared<Curve>();
    C->model = Model::CanonicalG4;
    C->field = Q.field();
    C->genus = 4;
    C->forms = {Q, E};
    return C;
}

FieldPtr Point::field() const { return c.empty() ? nullptr : common_field(c); }

int Point::compare(const Point& o) const {
    if (kind != o.kind) return kind < o.kind ? -1 : 1;
    if (c.size() != o.c.size()) return c.size() < o.c.size() ? -1 : 1;
    if (c.empty()) return 0;
    FieldPtr a = field(), b = o.field();
    if (a != b) {
        Point x = canonical(*this), y = canonical(o);
        a = x.field();
        b = y.field();
        if (a != b) return a->degree() < b->degree() ? -1 : 1;
        return x.compare(y);
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        int r = c[i].coerce(a).compare(o.c[i].coerce(a));
        if (r) return r;
    }
    return 0;
}

std::string Point::str() const {
    std::ostringstream os;
    if (kind == Kind::Infinity) os << "inf";
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ":" : "") << c[i].str();
    os << ')';
    return os.str();
}

Point affine_point(const Scalar& x, const Scalar& y) {
    FieldPtr K = common_field({x, y});
    return canonical(Point{Point::Kind::Affine, {x.coerce(K), y.coerce(K)}});
}

Point infinity_point(std::optional<Scalar> s) {
    Point P{Point::Kind::Infinity, {}};
    if (s) P.c.push_back(*s);
    return canonical(P);
}

Point projective_point(std::vector<Scalar> coords) {
    FieldPtr K = common_field(coords);
    for (auto& v : coords) v = v.coerce(K);
    return canonical(Point{Point::Kind::Affine, normalize_projective(std::move(coords))});
}

Point canonical(const Point& P) {
    if (P.c.empty() || P.c[0].field()->is_rational()) return P;
    FieldPtr K = P.field();
    int d = 1;
    for (const auto& v : P.c) d = std::lcm(d, v.coerce(K).minimal_field()->degree());
    if (d == K->degree()) {
        Point Q = P;
        for (auto& v : Q.c) v = v.coerce(K);
        return Q;
    }
    FieldPtr sub = Field::extension(K->p(), d);
    Point Q = P;
    for (auto& v : Q.c) v = *v.coerce(K).descend(sub);
    return Q;
}

Point coerce_point(const Point& P, FieldPtr to) {
    Point Q = P;
    for (auto& v : Q.c) v = v.coerce(to);
    return Q;
}

bool on_curve(const Curve& C, const Point& P) {
    if (C.hyperelliptic()) {
        if (P.at_infinity()) {
            if (C.odd_model()) return P.c.empty();
            return P.c.size() == 1 && P.c[0] * P.c[0] == C.f.lead().coerce(P.c[0].field());
        }
        if (P.c.size() != 2) return false;
        FieldPtr K = P.field();
        return P.c[1] * P.c[1] == C.f.coerce(K).eval(P.c[0].coerce(K));
    }
    if (P.at_infinity() || static_cast<int>(P.c.size()) != C.forms[0].nvars()) return false;
    for (const auto& m : C.forms)
        if (!m.eval(P.c).is_zero()) return false;
    return true;
}

Point sample_point(const Curve& C, Rng& rng) {
    if (!C.field->is_finite()) throw UnsupportedError("sample_point needs a finite field");
    FieldPtr K = C.field;
    for (int attempt = 0; attempt < 4096; ++attempt) {
        if (C.hyperelliptic()) {
            Scalar x = random_scalar(K, rng);
            auto y = C.f.eval(x).sqrt();
            if (!y) continue;
            return affine_point(x, rng.coin() ? -*y : *y);
        }
        if (C.model == Model::PlaneQuartic) {
            std::vector<Scalar> A, B;
            for (int i = 0; i < 3; ++i) {
                A.push_back(random_scalar(K, rng));
                B.push_back(random_scalar(K, rng));
            }
            std::vector<Poly> line;
            for (int i = 0; i < 3; ++i) line.push_back(Poly(K, {A[i], B[i]}));
            Poly r = C.forms[0].restrict(line);
            if (r.degree() < 1) continue;
            auto roots = roots_in_field(r);
            if (roots.empty()) continue;
            const Scalar& t = roots[rng.below(roots.size())].r;
            std::vector<Scalar> c;
            for (int i = 0; i < 3; ++i) c.push_back(A[i] + t * B[i]);
            bool zero = std::all_of(c.begin(), c.end(), [](const Scalar& s) { return s.is_zero(); });
            if (zero) continue;
            return projective_point(c);
        }
        // Genus 4: a random plane, keep a rational point of plane . C.
        Matrix frame(K, 4, 3);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 3; ++j) frame.at(i, j) = random_scalar(K, rng);
        if (rank(frame) < 3) continue;
        MPoly q = C.forms[0].linear_subst(frame), e = C.forms[1].linear_subst(frame);
        std::vector<std::pair<Point, int>> pts;
        try {
            pts = plane_common_zeros(q, e, rng);
        } catch (const Error&) {
            continue;
        }
        std::vector<Point> rational;
        for (const auto& [pt, m] : pts)
            if (pt.field() == K) rational.push_back(pt);
        if (rational.empty()) continue;
        const Point& s = rational[rng.below(rational.size())];
        return projective_point(frame.apply(s.c));
    }
    throw SamplingError("sample_point: budget exhausted");
}

Point sample_point(const Curve& C, uint64_t seed) {
    Rng rng(seed);
    return sample_point(C, rng);
}

Point involution(const Curve& C, const Point& P) {
    if (!C.hyperelliptic()) throw DomainError("involution: curve is not hyperelliptic");
    if (P.at_infinity()) {
        if (P.c.empty()) return P;
        return infinity_point(-P.c[0]);
    }
    return affine_point(P.c[0], -P.c[1]);
}

bool is_weierstrass(const Curve& C, const Point& P) {
    if (!C.hyperelliptic()) return false;
    if (P.at_infinity()) return C.odd_model();
    return P.c[1].is_zero();
}

std::vector<Point> weierstrass_points(const Curve& C) {
    if (!C.hyperelliptic()) throw DomainError("weierstrass_points: curve is not hyperelliptic");
    std::vector<Point> out;
    for (const auto& r : all_roots(C.f))
        out.push_back(affine_point(r.r, Scalar::zero(r.r.field())));
    if (C.odd_model()) out.push_back(infinity_point());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Scalar> canonical_coords(const Curve& C, const Point& P) {
    if (!C.hyperelliptic()) return P.c;
    const int g = C.genus;
    if (P.at_infinity()) {
        FieldPtr K = P.c.empty() ? C.field : P.field();
        std::vector<Scalar> v(static_cast<std::size_t>(g), Scalar::zero(K));
        v.back() = Scalar::one(K);
        return v;
    }
    FieldPtr K = P.field();
    std::vector<Scalar> v{Scalar::one(K)};
    for (int i = 1; i < g; ++i) v.push_back(v.back() * P.c[0]);
    return v;
}

LocalParam local_param(const Curve& C, const Point& P, int N) {
    if (!on_curve(C, P)) throw DomainError("local_param: point is not on the curve");
    if (C.hyperelliptic()) {
        if (P.at_infinity()) {
            FieldPtr K = P.c.empty() ? C.field : P.field();
            Scalar w0 = P.c.empty() ? Scalar::zero(K) : P.c[0];
            return LocalParam{double_cover_param(chart_at_infinity(C), Scalar::zero(K), w0, N)};
        }
        return LocalParam{double_cover_param(C.f, P.c[0], P.c[1], N)};
    }
    return projective_param(C, P, N);
}

std::vector<Series> canonical_series(const Curve& C, const Point& P, int N) {
    auto lp = local_param(C, P, N);
    if (!C.hyperelliptic()) return lp.coords;
    const Series& base = lp.coords[0];  // x(t), or u(t) at infinity
    FieldPtr K = base.field();
    std::vector<Series> pw{Series::constant(Scalar::one(K), N)};
    for (int i = 1; i < C.genus; ++i) pw.push_back(pw.back() * base);
    if (P.at_infinity()) std::reverse(pw.begin(), pw.end());
    return pw;
}

int hyperplane_order(const Curve& C, const std::vector<Scalar>& h, const Point& P, int cap) {
    auto phi = canonical_series(C, P, cap);
    FieldPtr K = phi[0].field();
    for (const auto& v : h)
        if (v.field() != K) K = Field::compositum(K, v.field());
    Series acc(K, cap);
    for (std::size_t i = 0; i < h.size(); ++i) acc += phi[i].coerce(K) * h[i].coerce(K);
    return acc.valuation();
}

std::vector<Point> enumerate_points(const Curve& C, FieldPtr K) {
    if (!K->is_finite() || K->p() != C.field->p()) throw DomainError("enumerate_points: incompatible field");
    if (K->order() > 4000000) throw UnsupportedError("enumerate_points: field too large");
    if (!C.hyperelliptic()) return projective_points_over(C, K);
    std::vector<Point> out;
    Poly f = C.f.coerce(K);
    if (K->degree() == 1) {
        // f(x) for every x at once, then Euler's criterion.
        const uint32_t p = K->p();
        std::vector<uint32_t> xs(p), vals(p), chi(p), coef;
        for (uint32_t i = 0; i < p; ++i) xs[i] = i;
        for (const auto& c : f.coeffs()) coef.push_back(c.residue()[0]);
        kern::horner_mod(coef.data(), coef.size(), xs.data(), vals.data(), p, p);
        kern::pow_mod(vals.data(), chi.data(), p, (p - 1) / 2, p);
        for (uint32_t i = 0; i < p; ++i) {
            Scalar x = Scalar::from_int(K, i);
            if (vals[i] == 0) {
                out.push_back(affine_point(x, Scalar::zero(K)));
            } else if (chi[i] == 1) {
                Scalar y = *Scalar::from_int(K, vals[i]).sqrt();
                out.push_back(affine_point(x, y));
                out.push_back(affine_point(x, -y));
            }
        }
    } else {
        uint64_t q = K->order().get_ui();
        for (uint64_t i = 0; i < q; ++i) {
            std::vector<uint32_t> c(static_cast<std::size_t>(K->degree()));
            uint64_t v = i;
            for (auto& x : c) {
                x = static_cast<uint32_t>(v % K->p());
                v /= K->p();
            }
            Scalar x = Scalar::from_coeffs(K, c);
            auto y = f.eval(x).sqrt();
            if (!y) continue;
            out.push_back(affine_point(x, *y));
            if (!y->is_zero()) out.push_back(affine_point(x, -*y));
        }
    }
    if (C.odd_model()) {
        out.push_back(infinity_point());
    } else if (auto s = f.lead().sqrt()) {
        out.push_back(infinity_point(*s));
        out.push_back(infinity_point(-*s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Point, int>> plane_common_zeros(const MPoly& a, const MPoly& b, Rng& rng, bool multiple_only) {
    FieldPtr K = a.field();
    if (b.field() != K) throw MixedFieldError();
    const int da = a.total_degree(), db = b.total_degree();
    FieldPtr roomy = roomy_field(K, static_cast<uint64_t>(da * db + 1));
    auto pure = [](const MPoly& m, int deg) { return m.coeff({0, 0, deg}); };
    auto drop0 = [](const MPoly& m, const Scalar& v) {
        MPoly s = m.specialize(0, v);
        MPoly r(s.field(), 2);
        for (const auto& [e, c] : s.terms()) r.add_term({e[1], e[2]}, c);
        return r;
    };
    for (int attempt = 0; attempt < 64; ++attempt) {
        Matrix M(K, 3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) M.at(i, j) = random_scalar(K, rng);
        if (M.det().is_zero()) continue;
        MPoly A = a.linear_subst(M), B = b.linear_subst(M);
        // Center (0:0:1) off both curves.
        if (pure(A, da).is_zero() || pure(B, db).is_zero()) continue;
        // No common zero on the line s0 = 0.
        std::vector<Poly> inf{Poly(K), Poly::constant(Scalar::one(K)), Poly::x(K)};
        if (resultant(A.restrict(inf), B.restrict(inf), da, db).is_zero()) continue;
        MPoly A1 = drop0(A, Scalar::one(K)), B1 = drop0(B, Scalar::one(K));
        Elim R = Elim::resultant_last(Elim::from_mpoly(A1.coerce(roomy)), Elim::from_mpoly(B1.coerce(roomy)));
        Poly r = R.univariate();
        if (roomy != K) r = r.descend(K);
        if (r.degree() != da * db) continue;
        std::vector<Root> roots;
        if (multiple_only) {
            for (auto rt : all_roots(poly_gcd(r, r.derivative()))) {
                rt.mult += 1;
                roots.push_back(rt);
            }
        } else {
            roots = all_roots(r);
        }
        std::vector<std::pair<Point, int>> out;
        bool separated = true;
        for (const auto& [t0, m] : roots) {
            FieldPtr L = t0.field() == K ? K : Field::compositum(K, t0.field());
            std::vector<Poly> line{Poly::constant(Scalar::one(L)), Poly::constant(t0.coerce(L)), Poly::x(L)};
            Poly g = poly_gcd(A.coerce(L).restrict(line), B.coerce(L).restrict(line));
            auto pts = roots_in_field(g);
            if (pts.size() != 1) {
                separated = false;
                break;
            }
            std::vector<Scalar> s{Scalar::one(L), t0.coerce(L), pts[0].r};
            out.emplace_back(projective_point(M.coerce(L).apply(s)), m);
        }
        if (!separated) continue;
        std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        return out;
    }
    throw Error("plane_common_zeros: no separating projection found");
}

}  // namespace wgauss
