#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "wgauss/bn.hpp"
#include "wgauss/harness.hpp"

using namespace wgauss;

namespace {

enum Exit { kPass = 0, kVerdict = 2, kUnsupported = 3, kIo = 4 };

int emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return kPass;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) {
        std::cerr << "wgauss: cannot write " << out << "\n";
        return kIo;
    }
    f << text;
    return f ? kPass : kIo;
}

void experiment_options(CLI::App* cmd, ExperimentConfig& cfg) {
    cmd->add_option("--curve", cfg.curve_path, "Curve description (JSON)")->required();
    cmd->add_option("--n", cfg.n, "Divisor degree")->capture_default_str();
    cmd->add_option("--trials", cfg.trials, "Number of trials")->capture_default_str()->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
    cmd->add_option("--ext-cap", cfg.ext_cap, "Largest extension degree (0: library default)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--out", cfg.out, "Report path (stdout when omitted)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gauss map experiments on curves over finite fields"};
    app.set_version_flag("--version", std::string(WGAUSS_VERSION));
    app.require_subcommand(1);

    std::string validate_path;
    auto* curve = app.add_subcommand("curve", "Curve utilities");
    curve->require_subcommand(1);
    auto* validate = curve->add_subcommand("validate", "Parse and validate a curve file");
    validate->add_option("file", validate_path)->required();

    ExperimentConfig fc, lc, rc;
    auto* fcmd = app.add_subcommand("fiber-census", "Fiber cardinalities of the Gauss map");
    experiment_options(fcmd, fc);
    auto* lcmd = app.add_subcommand("locus-census", "Membership in the intersection loci R_{n,k}");
    experiment_options(lcmd, lc);
    lcmd->add_option("--planted", lc.planted, "Constructed witnesses appended to the trials")
        ->check(CLI::NonNegativeNumber);
    lcmd->add_option("--q-degree", lc.q_degree, "Cross-check with a q-search over F_{p^m}, m <= this")
        ->check(CLI::Range(0, 4));
    auto* rcmd = app.add_subcommand("reconstruct", "Recover a linear system from Gauss images");
    experiment_options(rcmd, rc);
    rc.trials = 5;
    rcmd->add_option("--k", rc.k, "System dimension")->capture_default_str();

    BnRange range;
    std::string format = "csv", bn_out;
    auto* bcmd = app.add_subcommand("bn-table", "Brill-Noether numbers and seed windows");
    bcmd->add_option("--g-min", range.g_min)->capture_default_str();
    bcmd->add_option("--g-max", range.g_max)->capture_default_str();
    bcmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    bcmd->add_option("--out", bn_out, "Output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc_ = app.exit(e);
        return rc_ == 0 ? kPass : kUnsupported;
    }

    try {
        if (*validate) {
            try {
                auto C = load_curve(validate_path);
                Json j;
                j["valid"] = true;
                j["curve"] = curve_summary(*C);
                j["description"] = curve_to_json(*C);
                std::cout << j.dump(2) << "\n";
                return kPass;
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                Json j;
                j["valid"] = false;
                j["error"] = e.what();
                std::cout << j.dump(2) << "\n";
                return kVerdict;
            }
        }
        if (*bcmd) {
            if (range.g_min < 3 || range.g_max < range.g_min) {
                std::cerr << "wgauss: bn-table needs 3 <= g-min <= g-max\n";
                return kUnsupported;
            }
            auto rows = bn_table(range);
            return emit(format == "csv" ? bn_csv(rows) : bn_json(rows), bn_out);
        }
        ExperimentConfig* cfg = *fcmd ? &fc : *lcmd ? &lc : &rc;
        cfg->experiment = *fcmd ? "fiber-census" : *lcmd ? "locus-census" : "reconstruct";
        auto C = load_curve(cfg->curve_path);
        Report r = *fcmd ? fiber_census(C, *cfg) : *lcmd ? locus_census(C, *cfg) : reconstruct(C, *cfg);
        const int io = emit(r.json.dump(2) + "\n", cfg->out);
        if (io != kPass) return io;
        for (const auto& v : r.verdicts)
            std::cerr << (v.pass ? "PASS " : "FAIL ") << v.name << (v.detail.empty() ? "" : ": " + v.detail) << "\n";
        return r.exit_code();
    } catch (const ParseError& e) {
        std::cerr << "wgauss: " << e.what() << "\n";
        return kIo;
    } catch (const UnsupportedError& e) {
        std::cerr << "wgauss: unsupported: " << e.what() << "\n";
        return kUnsupported;
    } catch (const DomainError& e) {
        std::cerr << "wgauss: " << e.what() << "\n";
        return kUnsupported;
    }
}
