#include "wgauss/linsys.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "wgauss/elim.hpp"
#include "wgauss/gauss.hpp"

namespace wgauss {

namespace {

FieldPtr join(FieldPtr a, FieldPtr b) { return a == b ? a : Field::compositum(a, b); }

FieldPtr vec_field(const std::vector<Scalar>& v, FieldPtr K) {
    for (const auto& s : v) K = join(K, s.field());
    return K;
}

std::vector<Scalar> coerce_vec(const std::vector<Scalar>& v, FieldPtr K) {
    std::vector<Scalar> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(s.coerce(K));
    return out;
}

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    FieldPtr K = vec_field(b, vec_field(a, a[0].field()));
    Scalar s = Scalar::zero(K);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i].coerce(K) * b[i].coerce(K);
    return s;
}

// Projective normalization: first nonzero entry 1, smallest field.
std::vector<Scalar> normalize(const std::vector<Scalar>& v) {
    for (const auto& s : v)
        if (!s.is_zero()) {
            Scalar inv = s.inv();
            std::vector<Scalar> out;
            for (const auto& t : v) out.push_back(t * inv);
            return canonical_vector(out);
        }
    throw DomainError("normalize: zero vector");
}

Scalar random_scalar(FieldPtr f, Rng& rng) {
    std::vector<uint32_t> c(static_cast<std::size_t>(f->degree()));
    for (auto& v : c) v = static_cast<uint32_t>(rng.below(f->p()));
    return Scalar::from_coeffs(f, c);
}

std::vector<Scalar> random_combo(const std::vector<std::vector<Scalar>>& vs, FieldPtr K, Rng& rng) {
    std::vector<Scalar> out(vs[0].size(), Scalar::zero(K));
    for (const auto& v : vs) {
        Scalar c = random_scalar(K, rng);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * v[i].coerce(K);
    }
    return out;
}

// Polynomial of degree <= bound over K given by its values; evaluated on
// nodes of an extension large enough to hold bound + 1 of them.
Poly interpolate_in(FieldPtr K, int bound, const std::function<Scalar(const Scalar&)>& fn) {
    FieldPtr R = roomy_field(K, static_cast<uint64_t>(bound + 1));
    auto xs = sample_nodes(R, bound + 1);
    std::vector<Scalar> ys;
    ys.reserve(xs.size());
    for (const auto& x : xs) ys.push_back(fn(x));
    Poly p = interpolate(xs, ys);
    return R == K ? p : p.descend(K);
}

// Points where (H.C) may have multiplicity >= 2.
std::vector<Point> repeated_points(const Curve& C, const std::vector<Scalar>& h, Rng& rng) {
    FieldPtr K = vec_field(h, h[0].field());
    std::vector<Scalar> hk = coerce_vec(h, K);
    std::vector<Point> out;
    if (C.hyperelliptic()) {
        Poly hp(K, hk);
        std::vector<XPoint> xs;
        for (const auto& r : all_roots(poly_gcd(hp, hp.derivative()))) xs.push_back({false, r.r});
        for (const auto& r : all_roots(poly_gcd(hp, C.f.coerce(K)))) xs.push_back({false, r.r});
        const int def = C.genus - 1 - hp.degree();
        if (def >= 2 || (def >= 1 && C.odd_model())) xs.push_back({true, Scalar()});
        for (const auto& x : xs)
            for (const auto& P : points_above(C, x)) out.push_back(P);
        return out;
    }
    auto ker = kernel(Matrix::from_rows(K, C.genus, {hk}));
    if (C.model == Model::PlaneQuartic) {
        const auto& A = ker[0];
        const auto& B = ker[1];
        std::vector<Poly> line;
        for (int i = 0; i < 3; ++i) line.push_back(Poly(K, {B[i], A[i]}));
        Poly r = C.forms[0].coerce(K).restrict(line);
        for (const auto& [s0, m] : all_roots(poly_gcd(r, r.derivative()))) {
            FieldPtr L = join(K, s0.field());
            std::vector<Scalar> c;
            for (int i = 0; i < 3; ++i) c.push_back(A[i].coerce(L) * s0.coerce(L) + B[i].coerce(L));
            out.push_back(projective_point(c));
        }
        if (r.degree() <= 2) out.push_back(projective_point(A));
        return out;
    }
    Matrix frame(K, 4, 3);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 4; ++i) frame.at(i, j) = ker[j][i];
    auto pts = plane_common_zeros(C.forms[0].coerce(K).linear_subst(frame), C.forms[1].coerce(K).linear_subst(frame),
                                  rng, true);
    for (const auto& [P, m] : pts) out.push_back(projective_point(frame.coerce(P.field()).apply(P.c)));
    return out;
}

// Candidate parameters of non-reduced members on the pencil h0 + l h1:
// a polynomial in l vanishing at each of them (zero when none could be
// formed).
struct PencilData {
    const Curve& C;
    FieldPtr K;
    std::vector<Scalar> h0, h1;
};

Poly hyperelliptic_candidates(const PencilData& pd) {
    FieldPtr K = pd.K;
    Poly P0(K, pd.h0), P1(K, pd.h1);
    Poly gg = poly_gcd(P0, P1);
    Poly m0 = P0.exact_div(gg), m1 = P1.exact_div(gg);
    const int e = std::max(m0.degree(), m1.degree());
    if (e < 1) return Poly(K);
    const Poly& f = pd.C.f;
    const int df = f.degree();
    return interpolate_in(K, 2 * e + df, [&](const Scalar& lam) {
        FieldPtr R = lam.field();
        Poly m = m0.coerce(R) + m1.coerce(R) * lam;
        return resultant(m, m.derivative(), e, e - 1) * resultant(m, f.coerce(R), e, df) * m.coeff(e);
    });
}

// Moving points x = alpha * O + w(l) on the line H_l through O = ker h0 ∩ ker h1.
Poly quartic_candidates(const PencilData& pd, Rng& rng) {
    FieldPtr K = pd.K;
    auto O = kernel(Matrix::from_rows(K, 3, {pd.h0, pd.h1}))[0];
    auto k0 = kernel(Matrix::from_rows(K, 3, {pd.h0}));
    auto k1 = kernel(Matrix::from_rows(K, 3, {pd.h1}));
    const MPoly& F = pd.C.forms[0];
    for (int attempt = 0; attempt < 32; ++attempt) {
        auto w0 = random_combo(k0, K, rng), w1 = random_combo(k1, K, rng);
        Scalar a = dot(pd.h0, w1), b = dot(pd.h1, w0);
        if (a.is_zero() || b.is_zero()) continue;
        auto M = [&](const Scalar& lam) {
            FieldPtr R = lam.field();
            std::vector<Poly> line;
            for (int i = 0; i < 3; ++i)
                line.push_back(Poly(R, {a.coerce(R) * w0[i].coerce(R) - lam * b.coerce(R) * w1[i].coerce(R),
                                        O[i].coerce(R)}));
            return F.coerce(R).restrict(line);
        };
        FieldPtr R = roomy_field(K, 1000);
        const int d = M(random_scalar(R, rng)).degree();
        if (d < 2) continue;
        return interpolate_in(K, (2 * d - 1) * 4, [&](const Scalar& lam) {
            Poly m = M(lam);
            return resultant(m, m.derivative(), d, d - 1);
        });
    }
    return Poly(K);
}

// Genus 4: moving points alpha u + beta v + w(l) on the plane H_l through
// the line span(u, v); beta is eliminated, which also merges points
// collinear with v, so two centers are intersected.
Poly g4_candidates(const PencilData& pd, Rng& rng) {
    FieldPtr K = pd.K;
    auto ell = kernel(Matrix::from_rows(K, 4, {pd.h0, pd.h1}));
    auto k0 = kernel(Matrix::from_rows(K, 4, {pd.h0}));
    auto k1 = kernel(Matrix::from_rows(K, 4, {pd.h1}));
    const MPoly Q = pd.C.forms[0].coerce(K), E = pd.C.forms[1].coerce(K);
    std::vector<Scalar> w0, w1;
    Scalar a, b;
    for (int attempt = 0;; ++attempt) {
        if (attempt == 32) return Poly(K);
        w0 = random_combo(k0, K, rng);
        w1 = random_combo(k1, K, rng);
        a = dot(pd.h0, w1);
        b = dot(pd.h1, w0);
        if (!a.is_zero() && !b.is_zero()) break;
    }
    bool line_in_quadric = true;
    for (int t = 0; t < 3 && line_in_quadric; ++t) line_in_quadric = Q.eval(random_combo(ell, K, rng)).is_zero();

    auto disc_for_center = [&]() -> Poly {
        for (int attempt = 0; attempt < 32; ++attempt) {
            auto u = random_combo(ell, K, rng), v = random_combo(ell, K, rng);
            if (rank(Matrix::from_rows(K, 4, {u, v})) < 2) continue;
            if (E.eval(v).is_zero()) continue;
            if (!line_in_quadric && Q.eval(v).is_zero()) continue;
            const int dq = line_in_quadric ? 1 : 2;
            auto M = [&](const Scalar& lam) {
                FieldPtr R = lam.field();
                auto xs = sample_nodes(R, 7);
                std::vector<Scalar> ys;
                MPoly QR = Q.coerce(R), ER = E.coerce(R);
                for (const auto& al : xs) {
                    std::vector<Poly> line;
                    for (int i = 0; i < 4; ++i) {
                        Scalar base = al * u[i].coerce(R) + a.coerce(R) * w0[i].coerce(R) -
                                      lam * b.coerce(R) * w1[i].coerce(R);
                        line.push_back(Poly(R, {base, v[i].coerce(R)}));
                    }
                    ys.push_back(resultant(QR.restrict(line), ER.restrict(line), dq, 3));
                }
                return interpolate(xs, ys);
            };
            FieldPtr R = roomy_field(K, 1000);
            const int d = M(random_scalar(R, rng)).degree();
            if (d < 2) continue;
            return interpolate_in(K, (2 * d - 1) * 6, [&](const Scalar& lam) {
                Poly m = M(lam);
                return resultant(m, m.derivative(), d, d - 1);
            });
        }
        return Poly(K);
    };
    Poly d1 = disc_for_center();
    if (d1.is_zero()) return d1;
    Poly d2 = disc_for_center();
    if (d2.is_zero()) return d2;
    return poly_gcd(d1, d2);
}

}  // namespace

std::vector<Scalar> hyperplane_of(const CompleteSystem& L, const std::vector<Scalar>& c) {
    if (static_cast<int>(c.size()) != L.r + 1) throw DomainError("hyperplane_of: parameter has the wrong length");
    FieldPtr K = vec_field(c, L.field());
    const int g = L.curve->genus;
    std::vector<Scalar> h(static_cast<std::size_t>(g), Scalar::zero(K));
    for (int i = 0; i <= L.r; ++i)
        for (int j = 0; j < g; ++j) h[j] += c[i].coerce(K) * L.basis.at(i, j).coerce(K);
    return h;
}

Divisor member(const CompleteSystem& L, const std::vector<Scalar>& c) {
    return hyperplane_section(L.curve, hyperplane_of(L, c)) - L.F;
}

bool contains(const CompleteSystem& L, const Divisor& E) {
    if (E.curve != L.curve || E.degree() != L.d) return false;
    return span(E + L.F).codim() == 1;
}

std::vector<Scalar> parameter_of(const CompleteSystem& L, const Divisor& E) {
    if (!contains(L, E)) throw DomainError("parameter_of: divisor is not a member");
    auto H = span(E + L.F).dual.row(0);
    FieldPtr K = vec_field(H, L.field());
    const int g = L.curve->genus;
    Matrix M(K, g, L.r + 2);
    for (int j = 0; j < g; ++j) {
        for (int i = 0; i <= L.r; ++i) M.at(j, i) = L.basis.at(i, j).coerce(K);
        M.at(j, L.r + 1) = H[j].coerce(K);
    }
    for (const auto& v : kernel(M))
        if (!v[L.r + 1].is_zero()) return normalize(std::vector<Scalar>(v.begin(), v.begin() + L.r + 1));
    throw Error("parameter_of: hyperplane outside the system");
}

CompleteSystem complete_system(const Divisor& D) {
    const Curve& C = *D.curve;
    const int g = C.genus;
    if (D.degree() > 2 * g - 2) throw DomainError("complete_system: degree exceeds 2g - 2");
    GrassPoint WD = span(D);
    if (WD.codim() == 0) throw DomainError("complete_system: divisor is not special");
    CompleteSystem L;
    L.curve = D.curve;
    L.d = D.degree();
    L.D = D;
    L.F = hyperplane_section(D.curve, WD.dual.row(0)) - D;
    L.basis = span(L.F).dual;
    L.r = L.basis.rows() - 1;
    if (L.r != ell(D) - 1) throw Error("complete_system: dimension mismatch");
    std::vector<std::pair<Point, int>> base;
    for (const auto& [P, m] : D.terms) {
        int low = 2 * g;
        for (int i = 0; i <= L.r; ++i) low = std::min(low, hyperplane_order(C, L.basis.row(i), P, 2 * g));
        const int b = std::min(low - L.F.mult(P), m);
        if (b > 0) base.emplace_back(P, b);
    }
    L.B = Divisor::of(D.curve, std::move(base));
    L.origin = parameter_of(L, D);
    return L;
}

MemberClass classify_member(const CompleteSystem& L, const Divisor& E) {
    if (!contains(L, E)) throw DomainError("classify_member: divisor is not a member");
    MemberClass mc;
    Divisor moving = E - L.B;
    mc.reduced = moving.is_reduced();
    const Curve& C = *L.curve;
    if (!C.hyperelliptic()) return mc;
    auto hf = hyperelliptic_reduce(moving);
    if (hf.k != L.r || !hf.B.empty()) throw Error("classify_member: moving part is not a sum of fibers");
    std::vector<Point> fixed;
    for (const auto& [P, m] : L.B.terms)
        for (int i = 0; i < m; ++i) fixed.push_back(P);
    const int r = hf.k;
    mc.nc = false;
    for (uint64_t mask = 0; mask < (uint64_t{1} << r) && !*mc.nc; ++mask) {
        std::vector<Point> pts;
        for (int i = 0; i < r; ++i) pts.push_back(mask >> i & 1 ? involution(C, hf.pairs[i]) : hf.pairs[i]);
        pts.insert(pts.end(), fixed.begin(), fixed.end());
        bool ok = true;
        for (std::size_t i = 0; i < pts.size() && ok; ++i)
            for (std::size_t j = i + 1; j < pts.size() && ok; ++j) ok = pts[i] != involution(C, pts[j]);
        mc.nc = ok;
    }
    return mc;
}

std::vector<Scalar> phi_L(const CompleteSystem& L, const Point& P) {
    const Curve& C = *L.curve;
    const int N = 2 * C.genus;
    auto phi = canonical_series(C, P, N);
    FieldPtr K = join(phi[0].field(), L.field());
    std::vector<Series> s;
    int v = N;
    for (int i = 0; i <= L.r; ++i) {
        Series acc(K, N);
        for (int j = 0; j < C.genus; ++j) acc += phi[j].coerce(K) * L.basis.at(i, j).coerce(K);
        v = std::min(v, acc.valuation());
        s.push_back(acc);
    }
    if (v == N) throw DomainError("phi_L: every basis hyperplane vanishes to the cap");
    std::vector<Scalar> out;
    for (const auto& x : s) out.push_back(x[v]);
    return normalize(out);
}

GrassPoint beta(const Divisor& F, int n) {
    GrassPoint W = span(F);
    if (W.dim() != n - 1) throw DomainError("beta: span has dimension " + std::to_string(W.dim()));
    return W;
}

bool linear_equivalent(const Divisor& a, const Divisor& b) {
    if (a.curve != b.curve) throw DomainError("linear_equivalent: different curves");
    if (a.degree() != b.degree()) return false;
    if (speciality(a) > 0) return span(b + residual(a)).codim() >= 1;
    if (speciality(b) > 0) return false;
    throw UnsupportedError("linear_equivalent: both divisors are nonspecial");
}

bool same_system(const CompleteSystem& a, const CompleteSystem& b) {
    return a.curve == b.curve && a.d == b.d && a.r == b.r && linear_equivalent(a.D, b.D);
}

Reconstruction reconstruct_system(CurvePtr C, const std::vector<GrassPoint>& samples, int n, int k) {
    if (samples.empty()) throw DomainError("reconstruct_system: no samples");
    Reconstruction out;
    for (const auto& W : samples) {
        Divisor E = intersection_divisor(C, W);
        if (E.degree() != n + k) throw DomainError("reconstruct_system: sample is not in B_{n,k}");
        out.members.push_back(E);
    }
    for (std::size_t i = 1; i < out.members.size(); ++i)
        if (!linear_equivalent(out.members[0], out.members[i]))
            throw DomainError("reconstruct_system: samples come from different systems");
    out.L = complete_system(out.members[0]);
    for (std::size_t i = 0; i < samples.size(); ++i)
        if (!(span(out.members[i]) == samples[i])) throw DomainError("reconstruct_system: span round trip failed");
    return out;
}

int DualSample::multiplicity() const {
    int s = 0;
    for (const auto& c : contacts) s += c.excess() - 1;
    return weight * s;
}

int DualReport::total() const {
    int s = 0;
    for (const auto& x : samples) s += x.multiplicity();
    return s;
}

DualReport dual_samples(const CompleteSystem& L, int lines, Rng& rng) {
    if (L.r < 1) throw DomainError("dual_samples: the system must have positive dimension");
    FieldPtr K = L.field();
    if (!K->is_finite()) throw UnsupportedError("dual_samples: finite fields only");
    const Curve& C = *L.curve;
    const int g = C.genus;
    DualReport rep;
    const int nlines = L.r == 1 ? 1 : std::max(lines, 1);
    for (int line = 0; line < nlines; ++line) {
        std::vector<Scalar> c0(static_cast<std::size_t>(L.r + 1), Scalar::zero(K)), c1 = c0;
        if (L.r == 1) {
            c0[0] = Scalar::one(K);
            c1[1] = Scalar::one(K);
        } else {
            do {
                for (auto& s : c0) s = random_scalar(K, rng);
                for (auto& s : c1) s = random_scalar(K, rng);
            } while (rank(Matrix::from_rows(K, L.r + 1, {c0, c1})) < 2);
        }
        auto visit = [&](const std::vector<Scalar>& c, int weight) {
            auto h = hyperplane_of(L, c);
            DualSample s;
            s.param = normalize(c);
            s.hyperplane = normalize(h);
            s.weight = weight;
            std::set<Point> seen;
            for (const auto& P : repeated_points(C, h, rng)) {
                if (!seen.insert(P).second) continue;
                Contact ct{P, hyperplane_order(C, h, P, 2 * g), L.F.mult(P) + L.B.mult(P)};
                if (ct.excess() >= 2) s.contacts.push_back(ct);
            }
            std::sort(s.contacts.begin(), s.contacts.end(), [](const Contact& x, const Contact& y) { return x.P < y.P; });
            if (!s.contacts.empty()) rep.samples.push_back(std::move(s));
        };
        auto at = [&](const Scalar& lam) {
            FieldPtr R = join(K, lam.field());
            std::vector<Scalar> c;
            for (int i = 0; i <= L.r; ++i) c.push_back(c0[i].coerce(R) + lam.coerce(R) * c1[i].coerce(R));
            return c;
        };
        PencilData pd{C, K, hyperplane_of(L, c0), hyperplane_of(L, c1)};
        Poly cand = C.hyperelliptic()                   ? hyperelliptic_candidates(pd)
                    : C.model == Model::PlaneQuartic ? quartic_candidates(pd, rng)
                                                     : g4_candidates(pd, rng);
        if (cand.is_zero()) {
            if (K->order() > 1000000) continue;
            rep.swept = true;
            const uint64_t q = K->order().get_ui();
            for (uint64_t i = 0; i < q; ++i) {
                std::vector<uint32_t> digits;
                for (uint64_t t = i; digits.size() < static_cast<std::size_t>(K->degree()); t /= K->p())
                    digits.push_back(static_cast<uint32_t>(t % K->p()));
                visit(at(Scalar::from_coeffs(K, digits)), 1);
            }
        } else {
            for (const auto& fac : factor_finite(cand)) {
                if (fac.f.degree() < 1) continue;
                try {
                    auto roots = all_roots(fac.f);
                    visit(at(roots[0].r), fac.f.degree());
                } catch (const ExtensionOverflow&) {
                    rep.skipped += fac.f.degree();
                }
            }
        }
        visit(c1, 1);
    }
    return rep;
}

ImageWitness hyperelliptic_image_witness(const Divisor& D, int k) {
    const Curve& C = *D.curve;
    if (!C.hyperelliptic()) throw DomainError("hyperelliptic_image_witness: curve is not hyperelliptic");
    const int n = D.degree();
    if (k < 1 || k > n) throw DomainError("hyperelliptic_image_witness: k must lie in [1, n]");
    GrassPoint W = gauss_eval(D);
    std::vector<Point> pts;
    for (const auto& [P, m] : D.terms)
        for (int i = 0; i < m; ++i) pts.push_back(P);
    std::vector<std::pair<Point, int>> t;
    for (int i = 0; i < n; ++i) {
        t.emplace_back(pts[i], 1);
        if (i < k) t.emplace_back(involution(C, pts[i]), 1);
    }
    ImageWitness w;
    w.F = Divisor::of(D.curve, std::move(t));
    w.L = complete_system(w.F);
    try {
        w.spans_agree = beta(w.F, n) == W;
    } catch (const DomainError&) {
        w.spans_agree = false;
    }
    w.nc = classify_member(w.L, w.F).nc.value_or(false);
    return w;
}

std::vector<Divisor> g13_members(CurvePtr C, const Point& P) {
    if (C->model != Model::CanonicalG4) throw DomainError("g13_members: genus 4 canonical model required");
    if (!on_curve(*C, P)) throw DomainError("g13_members: point is not on the curve");
    FieldPtr K = P.field();
    MPoly Q = C->forms[0].coerce(K);
    std::vector<Scalar> grad;
    for (int i = 0; i < 4; ++i) grad.push_back(Q.derivative(i).eval(P.c));
    auto ker = kernel(Matrix::from_rows(K, 4, {grad}));
    // Two directions completing P to a frame of the tangent plane.
    std::vector<Scalar> d1, d2;
    for (std::size_t i = 0; i < ker.size() && d2.empty(); ++i)
        for (std::size_t j = i + 1; j < ker.size() && d2.empty(); ++j)
            if (rank(Matrix::from_rows(K, 4, {P.c, ker[i], ker[j]})) == 3) {
                d1 = ker[i];
                d2 = ker[j];
            }
    std::vector<Poly> line;
    for (int i = 0; i < 4; ++i) line.push_back(Poly(K, {d2[i], d1[i]}));
    Poly q = Q.restrict(line);
    std::vector<std::vector<Scalar>> dirs;
    for (const auto& r : all_roots(q)) {
        FieldPtr L = join(K, r.r.field());
        std::vector<Scalar> d;
        for (int i = 0; i < 4; ++i) d.push_back(r.r.coerce(L) * d1[i].coerce(L) + d2[i].coerce(L));
        dirs.push_back(d);
    }
    if (q.degree() < 2) dirs.push_back(d1);
    std::vector<Divisor> out;
    for (const auto& d : dirs) {
        FieldPtr L = vec_field(d, K);
        Matrix rows = Matrix::from_rows(L, 4, {coerce_vec(P.c, L), d});
        Divisor E = intersection_divisor(C, subspace_from_rows(4, rows));
        if (E.degree() == 3 && std::find(out.begin(), out.end(), E) == out.end()) out.push_back(E);
    }
    return out;
}

}  // namespace wgauss
