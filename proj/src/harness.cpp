#include "wgauss/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "wgauss/gauss.hpp"
#include "wgauss/linsys.hpp"

namespace wgauss {

namespace {

class ExtCapGuard {
public:
    explicit ExtCapGuard(int cap) : saved_(ext_cap()) {
        if (cap > 0) set_ext_cap(cap);
    }
    ~ExtCapGuard() { set_ext_cap(saved_); }

private:
    int saved_;
};

Json header(const std::string& command, const Curve& C, const ExperimentConfig& cfg) {
    Json j;
    j["tool"] = "wgauss";
    j["version"] = WGAUSS_VERSION;
    j["command"] = command;
    j["config"] = cfg.to_json();
    j["curve"] = curve_summary(C);
    return j;
}

void finish(Report& r) {
    Json v = Json::array();
    for (const auto& x : r.verdicts) v.push_back(Json{{"name", x.name}, {"pass", x.pass}, {"detail", x.detail}});
    r.json["verdicts"] = v;
    r.json["pass"] = r.passed();
}

void check_n(const Curve& C, int n) {
    if (n < 1 || n > C.genus - 1) throw UnsupportedError("n must lie in [1, g-1]");
}

std::string count_detail(int bad, int total) {
    return std::to_string(bad) + " of " + std::to_string(total) + " failed";
}

std::vector<Scalar> random_param(const CompleteSystem& L, Rng& rng) {
    FieldPtr K = L.field();
    std::vector<Scalar> c;
    for (int i = 0; i <= L.r; ++i) {
        std::vector<uint32_t> v(static_cast<std::size_t>(K->degree()));
        for (auto& x : v) x = static_cast<uint32_t>(rng.below(K->p()));
        c.push_back(Scalar::from_coeffs(K, v));
    }
    c[0] = Scalar::one(K);
    return c;
}

// Every point of P^r(K), first nonzero coordinate 1.
std::vector<std::vector<Scalar>> projective_points(FieldPtr K, int r) {
    const uint32_t q = K->p();
    std::vector<std::vector<Scalar>> out;
    for (int lead = 0; lead <= r; ++lead) {
        const int free = r - lead;
        uint64_t count = 1;
        for (int i = 0; i < free; ++i) count *= q;
        for (uint64_t idx = 0; idx < count; ++idx) {
            std::vector<Scalar> c(static_cast<std::size_t>(r + 1), Scalar::zero(K));
            c[static_cast<std::size_t>(lead)] = Scalar::one(K);
            uint64_t t = idx;
            for (int i = lead + 1; i <= r; ++i) {
                c[static_cast<std::size_t>(i)] = Scalar::from_int(K, static_cast<long long>(t % q));
                t /= q;
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

bool certificates_hold(const Curve& C, const DualReport& rep, int precision, int& checked) {
    bool ok = true;
    for (const auto& s : rep.samples)
        for (const auto& ct : s.contacts) {
            const int o = contact_order(C, s.hyperplane, ct.P, precision);
            ok = ok && o == ct.order && o >= ct.base + 2;
            ++checked;
        }
    return ok;
}

}  // namespace

Json ExperimentConfig::to_json() const {
    Json j;
    j["curve"] = curve_path;
    j["experiment"] = experiment;
    j["n"] = n;
    j["k"] = k;
    j["trials"] = trials;
    j["seed"] = seed;
    j["ext_cap"] = ext_cap > 0 ? ext_cap : wgauss::ext_cap();
    j["planted"] = planted;
    j["q_degree"] = q_degree;
    j["out"] = out;
    return j;
}

bool Report::passed() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

std::string hex_hash(uint64_t h) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json curve_summary(const Curve& C) {
    Json j;
    j["hash"] = hex_hash(curve_hash(C));
    j["model"] = curve_to_json(C)["model"];
    j["genus"] = C.genus;
    j["field"] = Json{{"type", C.field->is_finite() ? "prime" : "rational"},
                      {"characteristic", C.field->is_finite() ? C.field->p() : 0}};
    return j;
}

Divisor random_divisor(CurvePtr C, Rng& rng, int n) {
    Divisor D(C);
    for (int i = 0; i < n; ++i) D = D + Divisor::point(C, sample_point(*C, rng));
    return D;
}

Divisor conjugate_free_divisor(CurvePtr C, Rng& rng, int n) {
    for (;;) {
        Divisor D = random_divisor(C, rng, n);
        if (!D.is_reduced()) continue;
        bool ok = true;
        for (const auto& [P, m] : D.terms)
            ok = ok && !(C->hyperelliptic() && (is_weierstrass(*C, P) || D.mult(involution(*C, P)) > 0));
        if (ok) return D;
    }
}

std::vector<Point> q_candidates(const Curve& C, int max_degree) {
    if (!C.field->is_finite()) throw UnsupportedError("q_search needs a finite field");
    std::vector<Point> out;
    for (int m = 1; m <= max_degree; ++m) {
        FieldPtr K = m == 1 ? C.field : Field::extension(C.field->p(), m);
        for (const auto& q : enumerate_points(C, K))
            if (m == 1 || q.field()->degree() == m) out.push_back(q);
    }
    return out;
}

bool q_search(const Divisor& D, const std::vector<Point>& candidates) {
    for (const auto& q : candidates)
        if (ell(D + Divisor::point(D.curve, q)) >= 2) return true;
    return false;
}

bool q_search(const Divisor& D, int max_degree) { return q_search(D, q_candidates(*D.curve, max_degree)); }

Divisor planted_g13_pair(CurvePtr C, Rng& rng) {
    if (C->model != Model::CanonicalG4) throw UnsupportedError("planted g13 pairs need a genus 4 canonical model");
    for (;;) {
        Point P = sample_point(*C, rng);
        for (const auto& E : g13_members(C, P)) {
            if (E.field() != C->field || !E.is_reduced()) continue;
            for (const auto& [Q, m] : E.terms)
                if (!(Q == P)) return Divisor::of(C, {{P, 1}, {Q, 1}});
        }
    }
}

int contact_order(const Curve& C, const std::vector<Scalar>& h, const Point& P, int precision) {
    auto lp = local_param(C, P, precision);
    std::vector<Series> phi;
    if (C.hyperelliptic()) {
        Series x = lp.coords[0];
        phi.push_back(Series::constant(Scalar::one(x.field()), precision));
        for (int i = 1; i < C.genus; ++i) phi.push_back(phi.back() * x);
        if (P.at_infinity()) std::reverse(phi.begin(), phi.end());
    } else {
        phi = lp.coords;
    }
    FieldPtr K = phi[0].field();
    for (const auto& s : h) K = K == s.field() ? K : Field::compositum(K, s.field());
    Series acc(K, precision);
    for (std::size_t i = 0; i < h.size(); ++i) acc += phi[i].coerce(K) * h[i].coerce(K);
    return acc.valuation();
}

Report fiber_census(CurvePtr C, const ExperimentConfig& cfg) {
    check_n(*C, cfg.n);
    if (C->model == Model::PlaneQuartic && cfg.n > 2) throw UnsupportedError("plane quartic: n <= 2");
    ExtCapGuard guard(cfg.ext_cap);
    const int n = cfg.n;
    const long long expected = expected_generic_fiber(*C, n);
    const bool singleton = expected == 1 && !C->hyperelliptic();
    const bool biconditional = C->model == Model::PlaneQuartic && n == 2;

    Report r;
    r.json = header("fiber-census", *C, cfg);
    Json trials = Json::array();
    std::map<int, int> hist;
    int unflagged = 0, flagged = 0, bad_generic = 0, bad_prediction = 0, bad_wc = 0, bad_bicond = 0, ok_trials = 0;
    for (int i = 0; i < cfg.trials; ++i) {
        Rng rng(Rng::derive(cfg.seed, static_cast<uint64_t>(i)));
        Divisor D = random_divisor(C, rng, n);
        Json t;
        t["trial"] = i;
        t["D"] = divisor_to_json(D);
        try {
            FiberReport fr = fiber(C, gauss_eval(D), n);
            t["status"] = "ok";
            t["report"] = fiber_report_to_json(fr);
            t["flagged"] = fr.flagged();
            ++ok_trials;
            if (fr.flagged()) {
                ++flagged;
            } else {
                ++unflagged;
                ++hist[fr.cardinality];
                if (fr.cardinality != expected) ++bad_generic;
                if (singleton && fr.WC != D) ++bad_wc;
            }
            if (C->hyperelliptic() && fr.fiber != hyperelliptic_fiber_prediction(D).members) ++bad_prediction;
            if (biconditional && (fr.cardinality < 6) != fr.nonreduced) ++bad_bicond;
        } catch (const NotInWnError&) {
            t["status"] = "not_in_smooth_Wn";
            t["flagged"] = true;
            ++flagged;
        } catch (const ExtensionOverflow& e) {
            t["status"] = "extension_overflow";
            t["detail"] = e.what();
            t["flagged"] = true;
            ++flagged;
        }
        trials.push_back(t);
    }
    r.json["trials"] = trials;
    Json h = Json::object();
    for (const auto& [c, m] : hist) h[std::to_string(c)] = m;
    r.json["summary"] = Json{{"expected_generic_fiber", expected},
                             {"unflagged", unflagged},
                             {"flagged", flagged},
                             {"histogram", h}};

    r.verdicts.push_back({"trial_count", static_cast<int>(trials.size()) == cfg.trials, std::to_string(trials.size())});
    r.verdicts.push_back({"unflagged_present", unflagged > 0, std::to_string(unflagged) + " unflagged"});
    r.verdicts.push_back({"generic_fiber", bad_generic == 0, count_detail(bad_generic, unflagged)});
    if (singleton) r.verdicts.push_back({"WC_equals_D", bad_wc == 0, count_detail(bad_wc, unflagged)});
    if (C->hyperelliptic())
        r.verdicts.push_back({"fiber_matches_prediction", bad_prediction == 0, count_detail(bad_prediction, ok_trials)});
    if (biconditional)
        r.verdicts.push_back({"small_fiber_iff_nonreduced", bad_bicond == 0, count_detail(bad_bicond, ok_trials)});
    finish(r);
    return r;
}

Report locus_census(CurvePtr C, const ExperimentConfig& cfg) {
    check_n(*C, cfg.n);
    if (C->model == Model::PlaneQuartic && cfg.n > 2) throw UnsupportedError("plane quartic: n <= 2");
    if (cfg.planted > 0 && !C->hyperelliptic() && !(C->model == Model::CanonicalG4 && cfg.n == 2))
        throw UnsupportedError("planted witnesses: hyperelliptic curves or genus 4 with n = 2");
    ExtCapGuard guard(cfg.ext_cap);
    const int n = cfg.n;
    const bool applicable = !C->hyperelliptic() && n >= 2 && n <= C->genus - 2;

    Report r;
    r.json = header("locus-census", *C, cfg);
    Json trials = Json::array();
    std::vector<int> counts(static_cast<std::size_t>(n + 1), 0);
    std::vector<Json> witnesses(static_cast<std::size_t>(n + 1));
    int in_wn = 0, bad_nest = 0, q_checked = 0, q_disagree = 0, bad_witness = 0;
    const std::vector<Point> candidates = cfg.q_degree > 0 ? q_candidates(*C, cfg.q_degree) : std::vector<Point>{};
    const int total = cfg.trials + cfg.planted;
    for (int i = 0; i < total; ++i) {
        Rng rng(Rng::derive(cfg.seed, static_cast<uint64_t>(i)));
        const bool planted = i >= cfg.trials;
        Divisor D = !planted                 ? random_divisor(C, rng, n)
                    : C->hyperelliptic()     ? conjugate_free_divisor(C, rng, n)
                                             : planted_g13_pair(C, rng);
        Json t;
        t["trial"] = i;
        t["kind"] = planted ? "planted" : "random";
        t["D"] = divisor_to_json(D);
        if (!in_smooth_Wn(D)) {
            t["status"] = "not_in_smooth_Wn";
            trials.push_back(t);
            continue;
        }
        ++in_wn;
        t["status"] = "ok";
        try {
            const int deg = intersection_divisor(C, gauss_eval(D)).degree();
            t["deg_WC"] = deg;
            Json flags = Json::array();
            bool prev = true;
            for (int k = 0; k <= n; ++k) {
                const bool in = in_Rnk(D, k);
                flags.push_back(in);
                if (in && !prev) ++bad_nest;
                if (in != (deg >= n + k)) ++bad_nest;
                prev = in;
                if (in) {
                    ++counts[static_cast<std::size_t>(k)];
                    if (witnesses[static_cast<std::size_t>(k)].is_null()) {
                        Json w;
                        w["trial"] = i;
                        w["D"] = divisor_to_json(D);
                        if (C->hyperelliptic() && k >= 1) {
                            try {
                                auto iw = hyperelliptic_image_witness(D, k);
                                w["F"] = divisor_to_json(iw.F);
                                if (!iw.spans_agree || !iw.nc || iw.F.degree() != n + k) ++bad_witness;
                            } catch (const DomainError&) {
                                w = Json();
                            }
                        }
                        if (!w.is_null()) witnesses[static_cast<std::size_t>(k)] = w;
                    }
                }
            }
            t["in_Rnk"] = flags;
            if (cfg.q_degree > 0) {
                const bool q = q_search(D, candidates);
                t["q_search"] = q;
                ++q_checked;
                if (q != in_multiple_locus(D)) ++q_disagree;
            }
        } catch (const ExtensionOverflow& e) {
            t["status"] = "extension_overflow";
            t["detail"] = e.what();
        }
        trials.push_back(t);
    }
    r.json["trials"] = trials;
    Json cj = Json::object(), wj = Json::object();
    for (int k = 0; k <= n; ++k) {
        cj[std::to_string(k)] = counts[static_cast<std::size_t>(k)];
        if (!witnesses[static_cast<std::size_t>(k)].is_null()) wj[std::to_string(k)] = witnesses[static_cast<std::size_t>(k)];
    }
    r.json["summary"] = Json{{"in_smooth_Wn", in_wn}, {"R_nk_counts", cj}, {"witnesses", wj}};

    r.verdicts.push_back({"trial_count", static_cast<int>(trials.size()) == total, std::to_string(trials.size())});
    r.verdicts.push_back({"nested", bad_nest == 0, count_detail(bad_nest, in_wn)});
    if (cfg.q_degree > 0) r.verdicts.push_back({"q_search_agrees", q_disagree == 0, count_detail(q_disagree, q_checked)});
    if (C->hyperelliptic()) {
        bool all = bad_witness == 0;
        for (int k = 1; k <= n - 1; ++k) all = all && !witnesses[static_cast<std::size_t>(k)].is_null();
        r.verdicts.push_back({"witnesses_below_n", all, "k = 1 .. n-1"});
    }
    if (applicable) {
        const bool empty = counts[static_cast<std::size_t>(n)] == 0;
        r.verdicts.push_back({"empty_for_k_ge_n", empty, std::to_string(counts[static_cast<std::size_t>(n)]) + " in R_{n,n}"});
        if (cfg.planted > 0)
            r.verdicts.push_back({"planted_witness_k1", counts[1] > 0, std::to_string(counts[1]) + " in R_{n,1}"});
    }
    finish(r);
    return r;
}

Report reconstruct(CurvePtr C, const ExperimentConfig& cfg) {
    check_n(*C, cfg.n);
    const bool g4 = C->model == Model::CanonicalG4 && cfg.n == 2 && cfg.k == 1;
    const bool hyp = C->hyperelliptic() && cfg.k == cfg.n;
    if (!g4 && !hyp) throw UnsupportedError("reconstruct: genus 4 with n = 2, k = 1, or hyperelliptic with k = n");
    ExtCapGuard guard(cfg.ext_cap);
    const int n = cfg.n, k = cfg.k;

    Report r;
    r.json = header("reconstruct", *C, cfg);
    Rng rng(Rng::derive(cfg.seed, 0));
    CompleteSystem L;
    if (g4) {
        L = complete_system(g13_members(C, sample_point(*C, rng))[0]);
    } else {
        Divisor D = conjugate_free_divisor(C, rng, n);
        auto w = hyperelliptic_image_witness(D, k);
        r.verdicts.push_back({"gauss_image", w.spans_agree && w.nc, "beta(F) == gauss_eval(D), F nc"});
        L = w.L;
    }
    r.json["source"] = complete_system_to_json(L);
    r.verdicts.push_back({"system_dimension", L.r == k, "r = " + std::to_string(L.r)});

    std::vector<Divisor> src;
    std::vector<GrassPoint> spans;
    for (int i = 0; i < cfg.trials; ++i) {
        Rng trng(Rng::derive(cfg.seed, static_cast<uint64_t>(i) + 1));
        Divisor E = member(L, random_param(L, trng));
        if (C->hyperelliptic() && !classify_member(L, E).reduced) continue;
        src.push_back(E);
        spans.push_back(beta(E, n));
    }
    Json samples = Json::array();
    for (std::size_t i = 0; i < src.size(); ++i)
        samples.push_back(Json{{"member", divisor_to_json(src[i])}, {"span", span_to_json(spans[i])}});
    r.json["samples"] = samples;
    try {
        auto rec = reconstruct_system(C, spans, n, k);
        r.verdicts.push_back({"members_recovered", rec.members == src, std::to_string(src.size()) + " members"});
        r.verdicts.push_back({"same_system", same_system(rec.L, L), ""});
    } catch (const DomainError& e) {
        r.verdicts.push_back({"members_recovered", false, e.what()});
    }

    if (hyp) {
        // Parameter-to-span injectivity: exhaustive when P^r(K) is small.
        FieldPtr K = L.field();
        long long size = 1;
        for (int i = 0; i < L.r && size <= 20000; ++i) size *= K->p();
        std::vector<std::vector<Scalar>> params;
        const bool exhaustive = K->degree() == 1 && size <= 20000;
        if (exhaustive) {
            params = projective_points(K, L.r);
        } else {
            std::set<std::vector<Scalar>> seen;
            for (int i = 0; i < cfg.trials; ++i) {
                Rng trng(Rng::derive(cfg.seed, static_cast<uint64_t>(i) + 1));
                auto c = random_param(L, trng);
                if (seen.insert(c).second) params.push_back(c);
            }
        }
        std::set<std::vector<Scalar>> images;
        for (const auto& c : params) images.insert(beta(member(L, c), n).plucker);
        r.verdicts.push_back({"parameter_injective", images.size() == params.size(),
                              std::to_string(images.size()) + " spans from " + std::to_string(params.size()) +
                                  (exhaustive ? " (exhaustive)" : " (sampled)")});
    }

    auto rep = dual_samples(L, 1, rng);
    r.json["dual"] = dual_report_to_json(rep);
    int checked = 0;
    const bool certs = certificates_hold(*C, rep, 4 * C->genus, checked);
    r.verdicts.push_back({"certificates", certs && rep.skipped == 0,
                          std::to_string(rep.samples.size()) + " samples, " + std::to_string(checked) +
                              " contacts rechecked, " + std::to_string(rep.skipped) + " skipped"});
    if (L.r == 1) {
        // Riemann-Hurwitz for the pencil with its base points removed.
        const int d = L.d - L.B.degree();
        const int expected = 2 * C->genus - 2 + 2 * d;
        r.verdicts.push_back({"dual_count", rep.total() == expected,
                              std::to_string(rep.total()) + " vs " + std::to_string(expected)});
    }
    finish(r);
    return r;
}

}  // namespace wgauss
