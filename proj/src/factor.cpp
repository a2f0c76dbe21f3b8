#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "wgauss/poly.hpp"
#include "wgauss/rng.hpp"

namespace wgauss {

namespace {

void require_finite(const Poly& a) {
    if (!a.field() || a.field()->is_rational())
        throw UnsupportedError("factorization over Q is not supported");
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        int c = a.coeff(i).compare(b.coeff(i));
        if (c) return c < 0;
    }
    return false;
}

uint64_t poly_hash(const Poly& a) {
    uint64_t h = 1469598103934665603ULL;
    for (const auto& c : a.coeffs())
        for (uint32_t v : c.coeffs()) {
            h ^= v;
            h *= 1099511628211ULL;
        }
    return h;
}

Scalar random_scalar(FieldPtr f, Rng& rng) {
    std::vector<uint32_t> c(f->degree());
    for (auto& v : c) v = static_cast<uint32_t>(rng.below(f->p()));
    return Scalar::from_coeffs(f, c);
}

// p-th root of a polynomial in x^p over F_q.
Poly pth_root(const Poly& a) {
    FieldPtr f = a.field();
    uint32_t p = f->p();
    mpz_class e = f->order() / p;  // a^{q/p} is the p-th root in F_q
    std::vector<Scalar> r;
    for (int i = 0; i <= a.degree(); i += static_cast<int>(p)) r.push_back(a.coeff(i).pow(e));
    return Poly(f, std::move(r));
}

std::vector<Factor> squarefree_rec(const Poly& a) {
    std::vector<Factor> out;
    if (a.degree() < 1) return out;
    uint32_t p = a.field()->p();
    Poly d = a.derivative();
    Poly c = poly_gcd(a, d);
    Poly w = a.exact_div(c).monic();
    int i = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(w, c);
        Poly fac = w.exact_div(y);
        if (fac.degree() > 0) out.push_back({fac.monic(), i});
        w = y;
        c = c.exact_div(y);
        ++i;
    }
    if (c.degree() > 0) {
        for (auto& [g, m] : squarefree_rec(pth_root(c.monic()))) out.push_back({g, m * static_cast<int>(p)});
    }
    return out;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<Factor> ddf(Poly a) {
    std::vector<Factor> out;
    FieldPtr f = a.field();
    Poly x = Poly::x(f);
    Poly h = x;
    const mpz_class& q = f->order();
    for (int d = 1; 2 * d <= a.degree(); ++d) {
        h = h.pow_mod(q, a);
        Poly g = poly_gcd(h - x, a);
        if (g.degree() > 0) {
            out.push_back({g, d});
            a = a.exact_div(g);
            h = h % a;
        }
    }
    if (a.degree() > 0) out.push_back({a.monic(), a.degree()});
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus), deterministic per input.
void edf(const Poly& a, int d, Rng& rng, std::vector<Poly>& out) {
    if (a.degree() == d) {
        out.push_back(a.monic());
        return;
    }
    FieldPtr f = a.field();
    mpz_class qd;
    mpz_pow_ui(qd.get_mpz_t(), f->order().get_mpz_t(), static_cast<unsigned long>(d));
    mpz_class e = (qd - 1) / 2;
    for (;;) {
        std::vector<Scalar> c;
        for (int i = 0; i < a.degree(); ++i) c.push_back(random_scalar(f, rng));
        Poly r(f, std::move(c));
        if (r.degree() < 1) continue;
        Poly b = r.pow_mod(e, a) - Poly::constant(Scalar::one(f));
        Poly g = poly_gcd(b, a);
        if (g.degree() > 0 && g.degree() < a.degree()) {
            edf(g, d, rng, out);
            edf(a.exact_div(g), d, rng, out);
            return;
        }
    }
}

struct EmbedCache {
    std::mutex mu;
    std::map<std::pair<FieldPtr, FieldPtr>, Scalar> gen;
};

EmbedCache& embed_cache() {
    static EmbedCache c;
    return c;
}

}  // namespace

std::vector<Factor> squarefree(const Poly& a) {
    require_finite(a);
    if (a.is_zero()) throw DomainError("squarefree decomposition of zero");
    auto out = squarefree_rec(a.monic());
    std::sort(out.begin(), out.end(), [](const Factor& x, const Factor& y) {
        if (x.mult != y.mult) return x.mult < y.mult;
        return poly_less(x.f, y.f);
    });
    return out;
}

std::vector<Factor> factor_finite(const Poly& a) {
    require_finite(a);
    if (a.is_zero()) throw DomainError("factorization of zero");
    std::vector<Factor> out;
    for (const auto& [s, m] : squarefree(a)) {
        Rng rng(poly_hash(s));
        for (const auto& [g, d] : ddf(s)) {
            std::vector<Poly> parts;
            edf(g, d, rng, parts);
            for (auto& p : parts) out.push_back({p, m});
        }
    }
    std::sort(out.begin(), out.end(), [](const Factor& x, const Factor& y) {
        if (x.f.degree() != y.f.degree() || x.f != y.f) return poly_less(x.f, y.f);
        return x.mult < y.mult;
    });
    return out;
}

std::vector<Root> roots_in_field(const Poly& a) {
    require_finite(a);
    if (a.is_zero()) throw DomainError("roots of zero");
    std::vector<Root> out;
    FieldPtr f = a.field();
    for (const auto& [s, m] : squarefree(a)) {
        Poly lin = poly_gcd(Poly::x(f).pow_mod(f->order(), s) - Poly::x(f), s);
        if (lin.degree() < 1) continue;
        Rng rng(poly_hash(lin));
        std::vector<Poly> parts;
        edf(lin, 1, rng, parts);
        for (const auto& p : parts) out.push_back({-p.coeff(0), m});
    }
    std::sort(out.begin(), out.end(), [](const Root& x, const Root& y) { return x.r < y.r; });
    return out;
}

FieldPtr splitting_field(const Poly& a) {
    require_finite(a);
    FieldPtr f = a.field();
    int l = 1;
    for (const auto& [g, m] : factor_finite(a)) l = std::lcm(l, g.degree());
    int k = f->degree() * l;
    if (k > ext_cap()) throw ExtensionOverflow(k, ext_cap());
    return Field::extension(f->p(), k);
}

std::vector<Root> roots_in_splitting_extension(const Poly& a) {
    FieldPtr K = splitting_field(a);
    return roots_in_field(a.coerce(K));
}

std::vector<Root> all_roots(const Poly& a) {
    require_finite(a);
    FieldPtr f = a.field();
    std::vector<Root> out;
    for (const auto& [g, m] : factor_finite(a)) {
        int k = f->degree() * g.degree();
        if (k > ext_cap()) throw ExtensionOverflow(k, ext_cap());
        FieldPtr K = Field::extension(f->p(), k);
        for (const auto& r : roots_in_field(g.coerce(K))) {
            FieldPtr mf = r.r.minimal_field();
            out.push_back({mf == K ? r.r : *r.r.descend(mf), m});
        }
    }
    return out;
}

Scalar embed_generator(FieldPtr from, FieldPtr to) {
    auto& c = embed_cache();
    {
        std::lock_guard<std::mutex> lk(c.mu);
        auto it = c.gen.find({from, to});
        if (it != c.gen.end()) return it->second;
    }
    // Embeddings of composite index go through the tower of the smallest
    // prime step, so chains like F_{p^2} -> F_{p^4} -> F_{p^8} commute.
    int idx = to->degree() / from->degree();
    int step = 2;
    while (idx % step) ++step;
    Scalar g;
    if (step < idx) {
        FieldPtr mid = Field::extension(to->p(), to->degree() / step);
        g = embed_generator(from, mid).coerce(to);
    } else {
        std::vector<Scalar> m;
        for (uint32_t v : from->modulus()) m.push_back(Scalar::from_int(to, v));
        auto roots = roots_in_field(Poly(to, std::move(m)));
        if (roots.empty()) throw Error("modulus has no root in " + to->name());
        g = roots.front().r;
    }
    std::lock_guard<std::mutex> lk(c.mu);
    c.gen.emplace(std::make_pair(from, to), g);
    return g;
}

}  // namespace wgauss
