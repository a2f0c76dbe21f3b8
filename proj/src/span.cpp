#include "wgauss/span.hpp"

#include <numeric>

namespace wgauss {

namespace {

FieldPtr smallest_common_field(const std::vector<Scalar>& v, FieldPtr fallback) {
    if (v.empty() || !fallback->is_finite()) return fallback;
    int d = 1;
    for (const auto& s : v) d = std::lcm(d, s.minimal_field()->degree());
    return Field::extension(fallback->p(), d);
}

std::vector<Scalar> descend_all(const std::vector<Scalar>& v, FieldPtr to) {
    std::vector<Scalar> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(s.field() == to ? s : *s.descend(to));
    return out;
}

FieldPtr join(FieldPtr a, FieldPtr b) { return a == b ? a : Field::compositum(a, b); }

}  // namespace

std::vector<Scalar> canonical_vector(const std::vector<Scalar>& v) {
    if (v.empty()) return v;
    return descend_all(v, smallest_common_field(v, v[0].field()));
}

Matrix canonical_matrix(const Matrix& m) {
    if (!m.field() || !m.field()->is_finite() || m.rows() == 0) return m;
    std::vector<Scalar> all;
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& s : m.row(i)) all.push_back(s);
    FieldPtr to = smallest_common_field(all, m.field());
    if (to == m.field()) return m;
    Matrix out(to, 0, m.cols());
    for (int i = 0; i < m.rows(); ++i) out.append_row(descend_all(m.row(i), to));
    return out;
}

bool GrassPoint::operator==(const GrassPoint& o) const {
    if (g != o.g || dim() != o.dim() || plucker.size() != o.plucker.size()) return false;
    if (plucker.empty()) return true;
    if (plucker[0].field() != o.plucker[0].field()) return false;
    return plucker == o.plucker;
}

bool GrassPoint::inside(const GrassPoint& o) const {
    if (g != o.g) return false;
    if (o.dual.rows() == 0 || basis.rows() == 0) return true;
    FieldPtr K = join(basis.field(), o.dual.field());
    Matrix A = basis.coerce(K), H = o.dual.coerce(K);
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < H.rows(); ++j) {
            Scalar s = Scalar::zero(K);
            for (int c = 0; c < g; ++c) s += A.at(i, c) * H.at(j, c);
            if (!s.is_zero()) return false;
        }
    return true;
}

GrassPoint subspace_from_rows(int g, const Matrix& rows) {
    GrassPoint W;
    W.g = g;
    auto rk = rank_kernel_rref(rows);
    W.basis = canonical_matrix(rk.rref);
    FieldPtr f = W.basis.field() ? W.basis.field() : rows.field();
    if (W.basis.rows() == 0) W.basis = Matrix(f, 0, g);
    Matrix dual(rows.field(), 0, g);
    for (const auto& v : rk.kernel) dual.append_row(v);
    W.dual = dual.rows() ? canonical_matrix(rref(dual).rref) : Matrix(f, 0, g);
    W.plucker = W.basis.rows() ? canonical_vector(plucker(W.basis)) : std::vector<Scalar>{Scalar::one(f)};
    return W;
}

GrassPoint subspace_from_hyperplanes(int g, const Matrix& hyperplanes) {
    Matrix rows(hyperplanes.field(), 0, g);
    for (const auto& v : kernel(hyperplanes)) rows.append_row(v);
    return subspace_from_rows(g, rows);
}

Matrix hyperplane_conditions(const Divisor& D) {
    const Curve& C = *D.curve;
    FieldPtr K = D.field();
    Matrix M(K, 0, C.genus);
    for (const auto& [P, m] : D.terms) {
        auto phi = canonical_series(C, P, m);
        for (int j = 0; j < m; ++j) {
            std::vector<Scalar> row;
            for (const auto& s : phi) row.push_back(s[j].coerce(K));
            M.append_row(row);
        }
    }
    return M;
}

GrassPoint span(const Divisor& D) { return subspace_from_rows(D.curve->genus, hyperplane_conditions(D)); }

int speciality(const Divisor& D) { return D.curve->genus - rank(hyperplane_conditions(D)); }

int ell(const Divisor& D) { return D.degree() - (rank(hyperplane_conditions(D)) - 1); }

bool in_smooth_Wn(const Divisor& D) {
    if (D.degree() < 1 || D.degree() > D.curve->genus - 1)
        throw DomainError("in_smooth_Wn: degree must lie in [1, g-1]");
    return ell(D) == 1;
}

Divisor sing_shift(const Divisor& D, const Point& P) {
    const Curve& C = *D.curve;
    return D + Divisor::of(D.curve, {{P, 1}, {involution(C, P), 1}});
}

Divisor hyperplane_section(CurvePtr C, const std::vector<Scalar>& h) {
    if (static_cast<int>(h.size()) != C->genus) throw DomainError("hyperplane_section: wrong length");
    FieldPtr K = h[0].field();
    for (const auto& s : h) K = join(K, s.field());
    std::vector<Scalar> hk;
    for (const auto& s : h) hk.push_back(s.coerce(K));
    if (C->hyperelliptic()) return pullback_form(C, Poly(K, hk), C->genus - 1);
    Matrix H = Matrix::from_rows(K, C->genus, {hk});
    auto ker = kernel(H);
    if (C->model == Model::PlaneQuartic) {
        const auto& A = ker[0];
        const auto& B = ker[1];
        std::vector<Poly> line;
        for (int i = 0; i < 3; ++i) line.push_back(Poly(K, {B[i], A[i]}));
        Poly r = C->forms[0].coerce(K).restrict(line);
        std::vector<std::pair<Point, int>> t;
        for (const auto& [s0, m] : all_roots(r)) {
            FieldPtr L = join(K, s0.field());
            std::vector<Scalar> c;
            for (int i = 0; i < 3; ++i) c.push_back(A[i].coerce(L) * s0.coerce(L) + B[i].coerce(L));
            t.emplace_back(projective_point(c), m);
        }
        if (r.degree() < 4) t.emplace_back(projective_point(A), 4 - r.degree());
        return Divisor::of(C, std::move(t));
    }
    Matrix frame(K, 4, 3);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 4; ++i) frame.at(i, j) = ker[j][i];
    Rng rng(0x5ec7);
    auto pts = plane_common_zeros(C->forms[0].linear_subst(frame), C->forms[1].linear_subst(frame), rng);
    std::vector<std::pair<Point, int>> t;
    for (const auto& [P, m] : pts) t.emplace_back(projective_point(frame.coerce(P.field()).apply(P.c)), m);
    return Divisor::of(C, std::move(t));
}

Divisor residual(const Divisor& D) {
    GrassPoint W = span(D);
    if (W.codim() == 0) throw DomainError("residual: divisor is not special");
    return hyperplane_section(D.curve, W.dual.row(0)) - D;
}

}  // namespace wgauss
