#pragma once

#include <string>
#include <vector>

#include "wgauss/json_io.hpp"

namespace wgauss {

struct ExperimentConfig {
    std::string curve_path;
    std::string experiment;
    int n = 2;
    int k = 1;
    int trials = 200;
    uint64_t seed = 1;
    int ext_cap = 0;    // 0 keeps the library default
    int planted = 0;    // extra constructed witnesses (locus census)
    int q_degree = 0;   // q-search over F_{p^m}, m <= q_degree; 0 disables
    std::string out;

    Json to_json() const;
};

struct Verdict {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    Json json;
    std::vector<Verdict> verdicts;
    bool passed() const;
    // 0 when every verdict passes, 2 otherwise.
    int exit_code() const { return passed() ? 0 : 2; }
};

// {hash, model, genus, field{type, characteristic}}
Json curve_summary(const Curve& C);
std::string hex_hash(uint64_t h);

// Sum of n independently sampled rational points.
Divisor random_divisor(CurvePtr C, Rng& rng, int n);
// n rational points, none Weierstrass, no two conjugate (hyperelliptic).
Divisor conjugate_free_divisor(CurvePtr C, Rng& rng, int n);

// Points of C over F_{p^m}, m <= max_degree, each listed over its own field.
std::vector<Point> q_candidates(const Curve& C, int max_degree);
// Exists a candidate q with l(D + q) >= 2.
bool q_search(const Divisor& D, const std::vector<Point>& candidates);
bool q_search(const Divisor& D, int max_degree);
// Two rational points on a line of the quadric (genus 4 only).
Divisor planted_g13_pair(CurvePtr C, Rng& rng);

// ord_P of sum h_i phi_i, recomputed from the local parametrization.
int contact_order(const Curve& C, const std::vector<Scalar>& h, const Point& P, int precision);

// Trial i draws from Rng(Rng::derive(seed, i)). Throws UnsupportedError for
// models or (n, k) the experiment does not cover.
Report fiber_census(CurvePtr C, const ExperimentConfig& cfg);
Report locus_census(CurvePtr C, const ExperimentConfig& cfg);
Report reconstruct(CurvePtr C, const ExperimentConfig& cfg);

}  // namespace wgauss
