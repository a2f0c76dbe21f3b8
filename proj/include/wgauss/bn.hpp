#pragma once

#include <string>
#include <vector>

namespace wgauss {

// rho(g, r, d) = g - (r + 1)(g - d + r).
long long rho(long long g, long long r, long long d);

struct WnFlags {
    bool always_singular = false;     // 2n >= g + 2
    bool generically_smooth = false;  // 2n < g + 2
};
// Requires 1 <= n <= g - 1.
WnFlags wn_smoothness_predicates(int g, int n);

// Inequality windows for (g, n, k), all by integer cross-multiplication.
struct SeedWindows {
    bool main_range = false;         // 1 <= k <= n - 1 <= g - 3
    bool generic_existence = false;  // k g <= (k + 1) n, i.e. rho(g, k, n + k) >= 0
    bool below_rho_window = false;       // k g > (k + 1) n and (k + 1) n >= (k - 1) g + 3
    bool upper_g_window = false;         // (k + 2) n < (k + 1) g and k g <= (k + 1) n
    bool below_rho_edge_window = false;  // k g > (k + 1) n and k g <= (k + 2) n - 2 (- 3 when n + k + 2 = g)
    bool smooth_generic_existence = false;  // generically smooth W_n and generic existence
    bool g_le_2n = false;            // g <= 2n
    bool hyperelliptic_has = false;  // 1 <= k <= n: k g12 + B exists
};
// Requires g >= 3 and 1 <= k <= n <= g - 1.
SeedWindows seed_windows(int g, int n, int k);

struct BnRow {
    int g = 0, n = 0, k = 0;
    long long rho_1_n = 0;          // rho(g, 1, n)
    long long rho_1_n1 = 0;         // rho(g, 1, n + 1)
    long long rho_k = 0;            // rho(g, k, n + k)
    long long rho_k1 = 0;           // rho(g, k + 1, n + k + 1)
    long long dim_lower_bound = 0;  // max{k, k + rho(g, k, n + k)}
    WnFlags wn;
    SeedWindows w;
};

struct BnRange {
    int g_min = 3, g_max = 12;
    int n_min = 1, n_max = 1 << 20;
    int k_min = 1, k_max = 1 << 20;
};
// One row per (g, n, k) with 1 <= k <= n <= g - 1 inside the ranges, in
// increasing (g, n, k). Empty ranges give an empty table; throws
// DomainError when g_min < 3.
std::vector<BnRow> bn_table(const BnRange& range);

const std::vector<std::string>& bn_columns();
std::string bn_csv(const std::vector<BnRow>& rows);
std::string bn_json(const std::vector<BnRow>& rows);

}  // namespace wgauss
