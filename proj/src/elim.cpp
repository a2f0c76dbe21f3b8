#include "wgauss/elim.hpp"

namespace wgauss {

namespace {

Scalar random_scalar(FieldPtr f, Rng& rng) {
    std::vector<uint32_t> c(static_cast<std::size_t>(f->degree()));
    for (auto& v : c) v = static_cast<uint32_t>(rng.below(f->p()));
    return Scalar::from_coeffs(f, c);
}

MPoly drop_var(const MPoly& m, int i) {
    MPoly r(m.field(), m.nvars() - 1);
    for (const auto& [e, c] : m.terms()) {
        Exponent d;
        for (int j = 0; j < m.nvars(); ++j)
            if (j != i) d.push_back(e[j]);
        r.add_term(d, c);
    }
    return r;
}

Scalar pure_power_coeff(const MPoly& m, int var, int deg) {
    Exponent e(static_cast<std::size_t>(m.nvars()), 0);
    e[var] = deg;
    return m.coeff(e);
}

Elim combine(const std::vector<Elim>& parts, const std::vector<Scalar>& w) {
    Elim out;
    out.field = parts[0].field;
    out.nvars = parts[0].nvars;
    for (const auto& p : parts) out.degree = std::max(out.degree, p.degree);
    out.restrict_last = [parts, w](const std::vector<Scalar>& pre) {
        Poly acc(pre.empty() ? parts[0].field : pre[0].field());
        for (std::size_t i = 0; i < parts.size(); ++i) acc += parts[i].restrict_last(pre) * w[i];
        return acc;
    };
    return out;
}

// Leading coefficient in the last variable is a constant; test it once.
bool attains_degree(const Elim& e, Rng& rng) {
    std::vector<Scalar> pre;
    for (int i = 0; i + 1 < e.nvars; ++i) pre.push_back(random_scalar(e.field, rng));
    return e.restrict_last(pre).degree() == e.degree;
}

// Resultants of the pivot (constant leading coefficient) with up to three
// random combinations of the rest: one variable less.
std::vector<Elim> eliminate_once(const std::vector<Elim>& in, Rng& rng) {
    std::vector<Elim> rest(in.begin() + 1, in.end());
    std::vector<Elim> out;
    const int want = std::min<int>(3, static_cast<int>(rest.size()));
    for (int j = 0; j < want; ++j) {
        std::vector<Scalar> w;
        for (std::size_t i = 0; i < rest.size(); ++i) w.push_back(random_scalar(in[0].field, rng));
        Elim c = rest.size() == 1 ? rest[0] : combine(rest, w);
        out.push_back(Elim::resultant_last(in[0], c));
    }
    return out;
}

bool affine_zero(std::vector<MPoly> polys, Rng& rng) {
    std::vector<MPoly> nz;
    for (auto& p : polys)
        if (!p.is_zero()) nz.push_back(p);
    if (nz.empty()) return true;
    for (const auto& p : nz)
        if (p.total_degree() == 0) return false;
    const int k = nz[0].nvars();
    FieldPtr K = nz[0].field();
    if (k == 1) {
        Poly g(K);
        for (const auto& p : nz) g = poly_gcd(g, p.restrict({Poly::x(K)}));
        return g.degree() >= 1;
    }
    // Pivot: lowest degree with a constant leading coefficient in x_{k-1}.
    std::sort(nz.begin(), nz.end(), [](const MPoly& a, const MPoly& b) { return a.total_degree() < b.total_degree(); });
    int piv = -1;
    for (std::size_t i = 0; i < nz.size(); ++i)
        if (!pure_power_coeff(nz[i], k - 1, nz[i].total_degree()).is_zero()) {
            piv = static_cast<int>(i);
            break;
        }
    if (piv < 0) throw RetryError("no monic pivot");
    if (nz.size() == 1) return true;  // a hypersurface
    std::vector<Elim> level;
    level.push_back(Elim::from_mpoly(nz[piv]));
    for (std::size_t i = 0; i < nz.size(); ++i)
        if (static_cast<int>(i) != piv) level.push_back(Elim::from_mpoly(nz[i]));
    level = eliminate_once(level, rng);
    while (level[0].nvars > 1) {
        if (level.size() < 2) throw RetryError("ran out of equations");
        if (!attains_degree(level[0], rng)) throw RetryError("degenerate pivot");
        level = eliminate_once(level, rng);
    }
    Poly g(K);
    for (const auto& e : level) g = poly_gcd(g, e.univariate());
    if (g.degree() < 1) return false;
    for (const auto& [fac, m] : factor_finite(g)) {
        int d = K->degree() * fac.degree();
        if (d > kMaxExt) throw UnsupportedError("common-zero search needs degree " + std::to_string(d));
        FieldPtr L = Field::extension(K->p(), d);
        Scalar a = roots_in_field(fac.coerce(L)).front().r;
        std::vector<MPoly> sub;
        for (const auto& p : nz) sub.push_back(drop_var(p.specialize(0, a), 0));
        if (affine_zero(sub, rng)) return true;
    }
    return false;
}

}  // namespace

std::vector<Scalar> sample_nodes(FieldPtr f, int count) {
    if (f->is_finite() && f->order() < count) throw DomainError("field too small for interpolation");
    std::vector<Scalar> out;
    for (int i = 0; i < count; ++i) {
        if (f->is_rational()) {
            out.push_back(Scalar::from_int(f, i));
            continue;
        }
        std::vector<uint32_t> c(static_cast<std::size_t>(f->degree()));
        uint64_t v = static_cast<uint64_t>(i);
        for (auto& x : c) {
            x = static_cast<uint32_t>(v % f->p());
            v /= f->p();
        }
        out.push_back(Scalar::from_coeffs(f, c));
    }
    return out;
}

FieldPtr roomy_field(FieldPtr f, uint64_t min_size) {
    if (f->is_rational() || f->order() >= min_size) return f;
    int k = f->degree();
    mpz_class q = f->order();
    while (q < min_size) {
        k += f->degree();
        q *= f->order();
    }
    return Field::extension(f->p(), k);
}

Elim Elim::from_mpoly(const MPoly& m) {
    Elim e;
    e.field = m.field();
    e.nvars = m.nvars();
    e.degree = m.total_degree();
    e.restrict_last = [m](const std::vector<Scalar>& pre) {
        FieldPtr K = pre.empty() ? m.field() : pre[0].field();
        std::vector<Poly> x;
        for (const auto& v : pre) x.push_back(Poly::constant(v));
        x.push_back(Poly::x(K));
        return m.restrict(x);
    };
    return e;
}

Elim Elim::resultant_last(const Elim& a, const Elim& b) {
    Elim r;
    r.field = a.field;
    r.nvars = a.nvars - 1;
    r.degree = a.degree * b.degree;
    r.restrict_last = [a, b](const std::vector<Scalar>& pre) {
        FieldPtr K = pre.empty() ? a.field : pre[0].field();
        const int D = a.degree * b.degree;
        auto nodes = sample_nodes(K, D + 1);
        std::vector<Scalar> vals;
        std::vector<Scalar> full = pre;
        full.push_back(Scalar::zero(K));
        for (const auto& c : nodes) {
            full.back() = c;
            vals.push_back(resultant(a.restrict_last(full), b.restrict_last(full), a.degree, b.degree));
        }
        return interpolate(nodes, vals);
    };
    return r;
}

bool has_common_projective_zero(const std::vector<MPoly>& forms, Rng& rng) {
    std::vector<MPoly> nz;
    for (const auto& f : forms)
        if (!f.is_zero()) nz.push_back(f);
    if (nz.empty()) return true;
    for (const auto& f : nz) {
        if (!f.is_homogeneous()) throw DomainError("has_common_projective_zero: forms must be homogeneous");
        if (f.total_degree() == 0) return false;
    }
    const int n1 = nz[0].nvars();
    if (n1 == 1) return false;
    FieldPtr K = roomy_field(nz[0].field(), 1000);
    for (auto& f : nz) f = f.coerce(K);
    for (int attempt = 0; attempt < 32; ++attempt) {
        Matrix M(K, n1, n1);
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n1; ++j) M.at(i, j) = random_scalar(K, rng);
        if (M.det().is_zero()) continue;
        std::vector<MPoly> g;
        for (const auto& f : nz) g.push_back(f.linear_subst(M));
        try {
            std::vector<MPoly> at_inf, affine;
            for (const auto& f : g) {
                at_inf.push_back(drop_var(f.specialize(0, Scalar::zero(K)), 0));
                affine.push_back(drop_var(f.specialize(0, Scalar::one(K)), 0));
            }
            if (has_common_projective_zero(at_inf, rng)) return true;
            return affine_zero(affine, rng);
        } catch (const RetryError&) {
        }
    }
    throw Error("has_common_projective_zero: no generic coordinates found");
}

}  // namespace wgauss
