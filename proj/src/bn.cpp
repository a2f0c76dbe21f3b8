#include "wgauss/bn.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "wgauss/errors.hpp"

namespace wgauss {

long long rho(long long g, long long r, long long d) { return g - (r + 1) * (g - d + r); }

WnFlags wn_smoothness_predicates(int g, int n) {
    if (n < 1 || n > g - 1) throw DomainError("wn_smoothness_predicates: n must lie in [1, g-1]");
    WnFlags f;
    f.always_singular = 2 * n >= g + 2;
    f.generically_smooth = !f.always_singular;
    return f;
}

SeedWindows seed_windows(int g, int n, int k) {
    if (g < 3 || k < 1 || k > n || n > g - 1) throw DomainError("seed_windows: need g >= 3 and 1 <= k <= n <= g-1");
    const long long G = g, N = n, K = k;
    SeedWindows w;
    w.main_range = k <= n - 1 && n - 1 <= g - 3;
    w.generic_existence = K * G <= (K + 1) * N;
    w.below_rho_window = !w.generic_existence && (K + 1) * N >= (K - 1) * G + 3;
    w.upper_g_window = (K + 2) * N < (K + 1) * G && w.generic_existence;
    const bool edge = n + k + 1 == g - 1;
    w.below_rho_edge_window = !w.generic_existence && K * G <= (K + 2) * N - (edge ? 3 : 2);
    w.smooth_generic_existence = wn_smoothness_predicates(g, n).generically_smooth && w.generic_existence;
    w.g_le_2n = G <= 2 * N;
    w.hyperelliptic_has = true;
    return w;
}

std::vector<BnRow> bn_table(const BnRange& r) {
    if (r.g_min < 3) throw DomainError("bn_table: g_min must be at least 3");
    std::vector<BnRow> rows;
    for (int g = r.g_min; g <= r.g_max; ++g)
        for (int n = std::max(1, r.n_min); n <= std::min(g - 1, r.n_max); ++n)
            for (int k = std::max(1, r.k_min); k <= std::min(n, r.k_max); ++k) {
                BnRow row;
                row.g = g;
                row.n = n;
                row.k = k;
                row.rho_1_n = rho(g, 1, n);
                row.rho_1_n1 = rho(g, 1, n + 1);
                row.rho_k = rho(g, k, n + k);
                row.rho_k1 = rho(g, k + 1, n + k + 1);
                row.dim_lower_bound = std::max<long long>(k, k + row.rho_k);
                row.wn = wn_smoothness_predicates(g, n);
                row.w = seed_windows(g, n, k);
                rows.push_back(row);
            }
    return rows;
}

const std::vector<std::string>& bn_columns() {
    static const std::vector<std::string> cols{
        "g", "n", "k", "rho_g_1_n", "rho_g_1_n1", "rho_g_k_nk", "rho_g_k1_nk1", "dim_lower_bound",
        "always_singular", "generically_smooth", "main_range", "generic_existence", "below_rho_window",
        "upper_g_window", "below_rho_edge_window", "smooth_generic_existence", "g_le_2n", "hyperelliptic_has"};
    return cols;
}

namespace {

std::vector<long long> values(const BnRow& r) {
    return {r.g,          r.n,           r.k,           r.rho_1_n,     r.rho_1_n1,      r.rho_k,
            r.rho_k1,     r.dim_lower_bound, r.wn.always_singular, r.wn.generically_smooth, r.w.main_range,
            r.w.generic_existence, r.w.below_rho_window, r.w.upper_g_window, r.w.below_rho_edge_window, r.w.smooth_generic_existence, r.w.g_le_2n, r.w.hyperelliptic_has};
}

constexpr std::size_t kIntColumns = 8;

}  // namespace

std::string bn_csv(const std::vector<BnRow>& rows) {
    std::ostringstream out;
    const auto& cols = bn_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << "\n";
    for (const auto& r : rows) {
        auto v = values(r);
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out << ",";
            if (i < kIntColumns)
                out << v[i];
            else
                out << (v[i] ? "true" : "false");
        }
        out << "\n";
    }
    return out.str();
}

std::string bn_json(const std::vector<BnRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    const auto& cols = bn_columns();
    for (const auto& r : rows) {
        auto v = values(r);
        nlohmann::ordered_json o;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i < kIntColumns)
                o[cols[i]] = v[i];
            else
                o[cols[i]] = v[i] != 0;
        }
        arr.push_back(o);
    }
    return arr.dump(1) + "\n";
}

}  // namespace wgauss
