#include "wgauss/gauss.hpp"

#include <algorithm>
#include <set>

namespace wgauss {

namespace {

FieldPtr join(FieldPtr a, FieldPtr b) { return a == b ? a : Field::compositum(a, b); }

// Multiplicity of P in (W.C): the least vanishing order over a basis of
// the hyperplanes containing W.
int gcd_order(const Curve& C, const GrassPoint& W, const Point& P) {
    int best = 2 * C.genus;
    for (int i = 0; i < W.dual.rows(); ++i) best = std::min(best, hyperplane_order(C, W.dual.row(i), P, 2 * C.genus));
    return best;
}

Divisor from_support(CurvePtr C, const GrassPoint& W, const std::vector<Point>& support) {
    std::vector<std::pair<Point, int>> t;
    for (const auto& P : support) {
        int m = gcd_order(*C, W, P);
        if (m > 0) t.emplace_back(P, m);
    }
    return Divisor::of(std::move(C), std::move(t));
}

Divisor hyperelliptic_intersection(CurvePtr C, const GrassPoint& W) {
    FieldPtr K = W.dual.field();
    const int e = C->genus - 1;
    Poly g(K);
    int at_inf = e;
    for (int i = 0; i < W.dual.rows(); ++i) {
        Poly h(K, W.dual.row(i));
        g = poly_gcd(g, h);
        at_inf = std::min(at_inf, e - h.degree());
    }
    return pullback_form(C, g, g.degree() + at_inf);
}

// Points of C on the line through A and B (genus 4).
std::vector<Point> g4_line_points(const Curve& C, const std::vector<Scalar>& A, const std::vector<Scalar>& B) {
    FieldPtr K = A[0].field();
    std::vector<Poly> line;
    for (int i = 0; i < 4; ++i) line.push_back(Poly(K, {B[i], A[i]}));
    Poly q = C.forms[0].coerce(K).restrict(line), e = C.forms[1].coerce(K).restrict(line);
    std::vector<Point> out;
    Poly g = poly_gcd(q, e);
    for (const auto& [s0, m] : all_roots(g)) {
        FieldPtr L = join(K, s0.field());
        std::vector<Scalar> c;
        for (int i = 0; i < 4; ++i) c.push_back(A[i].coerce(L) * s0.coerce(L) + B[i].coerce(L));
        out.push_back(projective_point(c));
    }
    if (q.degree() < 2 && e.degree() < 3) out.push_back(projective_point(A));
    return out;
}

}  // namespace

GrassPoint gauss_eval(const Divisor& D) {
    if (!in_smooth_Wn(D)) throw NotInWnError("gauss_eval: l(D) >= 2, the Gauss map is undefined at " + D.str());
    return span(D);
}

Divisor intersection_divisor(CurvePtr C, const GrassPoint& W) {
    if (W.codim() == 0) throw UnsupportedError("intersection_divisor: W is the whole space");
    if (W.dim() < 0) throw DomainError("intersection_divisor: empty subspace");
    if (C->hyperelliptic()) return hyperelliptic_intersection(C, W);
    if (W.dim() == 0) {
        Point P = projective_point(W.basis.row(0));
        if (!on_curve(*C, P)) return Divisor(C);
        return from_support(C, W, {P});
    }
    if (W.codim() == 1) return hyperplane_section(C, W.dual.row(0));
    if (C->model == Model::CanonicalG4 && W.dim() == 1)
        return from_support(C, W, g4_line_points(*C, W.basis.row(0), W.basis.row(1)));
    throw UnsupportedError("intersection_divisor: unsupported subspace dimension");
}

FiberReport fiber(CurvePtr C, const GrassPoint& W, int n) {
    FiberReport r;
    r.W = W;
    r.WC = intersection_divisor(C, W);
    for_each_subdivisor(r.WC, n, [&](const Divisor& E) {
        if (span(E) == W) r.fiber.push_back(E);
    });
    std::sort(r.fiber.begin(), r.fiber.end());
    r.cardinality = static_cast<int>(r.fiber.size());
    r.nonreduced = !r.WC.is_reduced();
    if (C->hyperelliptic())
        for (const auto& [P, m] : r.WC.terms) r.weierstrass = r.weierstrass || is_weierstrass(*C, P);
    r.p = C->field->p();
    FieldPtr f = r.WC.field();
    r.ext = f ? f->degree() : 1;
    return r;
}

bool in_multiple_locus(const Divisor& D) { return in_Rnk(D, 1); }

bool in_Rnk(const Divisor& D, int k) {
    if (k < 0) throw DomainError("in_Rnk: k must be nonnegative");
    GrassPoint W = gauss_eval(D);
    return intersection_divisor(D.curve, W).degree() >= D.degree() + k;
}

BnkVerdict in_Bnk(CurvePtr C, const GrassPoint& W, int n, int k, bool exact) {
    BnkVerdict v;
    v.exact = exact;
    v.deg_WC = intersection_divisor(std::move(C), W).degree();
    v.value = exact ? v.deg_WC == n + k : v.deg_WC >= n + k;
    return v;
}

long long expected_generic_fiber(const Curve& C, int n) {
    if (n < 1 || n > C.genus - 1) throw DomainError("expected_generic_fiber: n must lie in [1, g-1]");
    if (C.hyperelliptic()) return 1LL << n;
    if (n == C.genus - 1) {
        long long b = 1;
        for (int i = 1; i <= C.genus - 1; ++i) b = b * (C.genus - 1 + i) / i;
        return b;
    }
    return 1;
}

FiberPrediction hyperelliptic_fiber_prediction(const Divisor& D) {
    const Curve& C = *D.curve;
    if (!C.hyperelliptic()) throw DomainError("hyperelliptic_fiber_prediction: curve is not hyperelliptic");
    std::vector<Point> pts;
    FiberPrediction out;
    for (const auto& [P, m] : D.terms) {
        for (int i = 0; i < m; ++i) pts.push_back(P);
        out.strictly_smaller = out.strictly_smaller || m > 1 || is_weierstrass(C, P);
    }
    const std::size_t n = pts.size();
    std::set<Divisor> seen;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        std::vector<std::pair<Point, int>> t;
        for (std::size_t i = 0; i < n; ++i) t.emplace_back(mask >> i & 1 ? involution(C, pts[i]) : pts[i], 1);
        Divisor E = Divisor::of(D.curve, std::move(t));
        if (seen.count(E)) continue;
        seen.insert(E);
        if (ell(E) == 1) out.members.push_back(E);
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

}  // namespace wgauss
