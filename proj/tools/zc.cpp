// zc: detect entanglement of small bipartite states via the PPT test and
// generalized concurrences, generate the state families used by the tests,
// reduce 2x4 rank-2 states to canonical form, and sweep the ZCE family.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "zc/detect.hpp"
#include "zc/io.hpp"
#include "zc/log.hpp"
#include "zc/states.hpp"
#include "zc/symmetries.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;  // documented default, see README

constexpr int kExitSeparable = 0;
constexpr int kExitEntangled = 10;
constexpr int kExitZCE = 11;
constexpr int kExitInconclusive = 12;
constexpr int kExitUsage = 2;
constexpr int kExitRank = 3;

int exit_code_for(zc::VerdictTag tag) {
    switch (tag) {
        case zc::VerdictTag::SeparableCertified: return kExitSeparable;
        case zc::VerdictTag::EntangledByPPT:
        case zc::VerdictTag::EntangledByConcurrence: return kExitEntangled;
        case zc::VerdictTag::ZCEUndetectedByConcurrence: return kExitZCE;
        case zc::VerdictTag::Inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw zc::ParseError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw zc::Error("cannot open output file: " + out_path);
    out << content;
}

zc::ParsedState load_state(const std::string& path) {
    return zc::parse_state(zc::parse_json_text(read_file(path)));
}

std::string verdict_text(const zc::DetectionVerdict& v) {
    std::string s;
    s += "tag: " + std::string(zc::to_string(v.tag)) + "\n";
    s += "ppt_min_eig: " + zc::fmt_double(v.ppt_min_eig) + "\n";
    s += "concurrence: " + (v.concurrence ? zc::fmt_double(*v.concurrence) : "none") + "\n";
    s += "thresholds: zero " + zc::fmt_double(zc::kZeroThreshold) + ", witness " +
         zc::fmt_double(zc::kWitnessThreshold) + "\n";
    if (!v.notes.empty()) s += "notes: " + v.notes + "\n";
    return s;
}

std::vector<double> grid(double lo, double hi, int steps) {
    std::vector<double> g;
    if (steps <= 1) {
        g.push_back(lo);
        return g;
    }
    for (int i = 0; i < steps; ++i)
        g.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1));
    return g;
}

// Rank of a density matrix with the module-wide 1e-9 eigenvalue cutoff,
// together with the leading eigenpairs.
struct RankInfo {
    std::size_t rank = 0;
    zc::EigResult eig;
};

RankInfo rank_info(const zc::DensityMatrix& rho) {
    RankInfo r;
    r.eig = zc::herm_eig(rho.mat());
    while (r.rank < r.eig.values.size() && r.eig.values[r.rank] > 1e-9) ++r.rank;
    return r;
}

zc::DensityMatrix gen_separable(std::uint64_t seed, int terms) {
    if (terms < 1) throw zc::WeightError("--terms must be >= 1");
    zc::Rng rng(seed);
    std::vector<double> w(static_cast<std::size_t>(terms));
    double wsum = 0.0;
    for (double& x : w) {
        x = rng.uniform(0.2, 1.0);
        wsum += x;
    }
    std::vector<zc::ProductTerm> ts;
    for (int j = 0; j < terms; ++j) {
        zc::CVector a = rng.gaussian_vector(2);
        zc::CVector b = rng.gaussian_vector(4);
        const double na = zc::vnorm(a), nb = zc::vnorm(b);
        for (auto& z : a) z /= na;
        for (auto& z : b) z /= nb;
        ts.push_back({w[static_cast<std::size_t>(j)] / wsum, a, b});
    }
    return zc::make_separable(ts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entanglement detection for 2x4 (and 2x2) states: PPT test, "
                 "generalized concurrences, zero-concurrence classification"};
    app.require_subcommand(1);

    std::string in_path, out_path, format = "json", family, tilde_path, params_path;
    std::uint64_t seed = kDefaultSeed;
    int restarts = 8;
    int terms = 3;
    double q1 = 0.70710678118654752;
    double phi = 0.0;
    double q1_min = 0.2, q1_max = 0.8, phi_min = 0.0, phi_max = 3.141592653589793;
    int q1_steps = 5, phi_steps = 5;

    auto* cmd_detect = app.add_subcommand("detect", "classify a state file");
    cmd_detect->add_option("--in", in_path, "state file (JSON)")->required();
    cmd_detect->add_option("--out", out_path, "report destination (default stdout)");
    cmd_detect->add_option("--seed", seed, "search seed");
    cmd_detect->add_option("--restarts", restarts, "concurrence search restarts");
    cmd_detect->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* cmd_gen = app.add_subcommand("gen", "generate a state file");
    cmd_gen->add_option("family", family, "separable | zce | pptform | random")->required();
    cmd_gen->add_option("--out", out_path, "state destination (default stdout)");
    cmd_gen->add_option("--seed", seed, "generator seed");
    cmd_gen->add_option("--terms", terms, "product terms for separable");
    cmd_gen->add_option("--q1", q1, "first coefficient for zce, in (0, 1)");
    cmd_gen->add_option("--phi", phi, "phase for zce");
    cmd_gen->add_option("--tilde", tilde_path, "two-qubit state file for pptform");

    auto* cmd_canonical = app.add_subcommand("canonical", "canonical form of a 2x4 rank-2 state");
    cmd_canonical->add_option("--in", in_path, "state file (JSON)")->required();
    cmd_canonical->add_option("--out", out_path, "destination (default stdout)");

    auto* cmd_conc = app.add_subcommand("concurrence",
                                        "evaluate one generalized concurrence");
    cmd_conc->add_option("--in", in_path, "state file (JSON)")->required();
    cmd_conc->add_option("--params", params_path, "conjugation parameter file (JSON)")->required();
    cmd_conc->add_option("--out", out_path, "destination (default stdout)");

    auto* cmd_ppt = app.add_subcommand("ppt", "run the PPT test");
    cmd_ppt->add_option("--in", in_path, "state file (JSON)")->required();
    cmd_ppt->add_option("--out", out_path, "destination (default stdout)");

    auto* cmd_sweep = app.add_subcommand("sweep", "CSV sweep over the ZCE family grid");
    cmd_sweep->add_option("--out", out_path, "CSV destination (default stdout)");
    cmd_sweep->add_option("--seed", seed, "search seed");
    cmd_sweep->add_option("--restarts", restarts, "concurrence search restarts");
    cmd_sweep->add_option("--q1-min", q1_min, "grid start for q1");
    cmd_sweep->add_option("--q1-max", q1_max, "grid end for q1");
    cmd_sweep->add_option("--q1-steps", q1_steps, "grid points for q1");
    cmd_sweep->add_option("--phi-min", phi_min, "grid start for phi");
    cmd_sweep->add_option("--phi-max", phi_max, "grid end for phi");
    cmd_sweep->add_option("--phi-steps", phi_steps, "grid points for phi");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (cmd_detect->parsed()) {
            const zc::ParsedState st = load_state(in_path);
            const zc::DetectionVerdict v = zc::detect(st.rho, zc::DetectOptions{restarts, seed});
            write_output(out_path,
                         format == "json" ? zc::json_verdict(v) + "\n" : verdict_text(v));
            return exit_code_for(v.tag);
        }

        if (cmd_gen->parsed()) {
            if (family == "zce") {
                if (!(q1 > 0.0 && q1 < 1.0)) {
                    zc::log_error("zce requires q1 in (0, 1)");
                    return kExitUsage;
                }
                const zc::RankTwoState s = zc::make_zce(q1, phi);
                write_output(out_path, zc::json_state(s.assemble(), s) + "\n");
            } else if (family == "separable") {
                write_output(out_path, zc::json_state(gen_separable(seed, terms)) + "\n");
            } else if (family == "random") {
                const zc::RankTwoState s = zc::random_rank_two(2, 4, seed);
                write_output(out_path, zc::json_state(s.assemble(), s) + "\n");
            } else if (family == "pptform") {
                if (tilde_path.empty()) {
                    zc::log_error("pptform requires --tilde");
                    return kExitUsage;
                }
                const nlohmann::json j = zc::parse_json_text(read_file(tilde_path));
                zc::ParsedState tilde = zc::parse_state(j);
                if (tilde.rho.n_a() != 2 || tilde.rho.n_b() != 2) {
                    zc::log_error("pptform input must be a two-qubit state (n_a = n_b = 2)");
                    return kExitUsage;
                }
                const auto [is_ppt, min_eig] = zc::ppt_test(tilde.rho);
                if (!is_ppt) {
                    zc::log_error("pptform input fails its own PPT test (min eig " +
                                  zc::fmt_double(min_eig) + "); the embedding requires a "
                                  "separable two-qubit state");
                    return kExitUsage;
                }
                write_output(out_path, zc::json_state(zc::make_ppt_form(tilde.rho)) + "\n");
            } else {
                zc::log_error("unknown family: " + family);
                return kExitUsage;
            }
            return 0;
        }

        if (cmd_canonical->parsed()) {
            const zc::ParsedState st = load_state(in_path);
            std::optional<zc::RankTwoState> s = st.rank_two;
            if (!s) {
                const RankInfo ri = rank_info(st.rho);
                if (ri.rank != 2) {
                    zc::log_error("canonical form needs a rank-2 state (rank " +
                                  std::to_string(ri.rank) + ")");
                    return kExitRank;
                }
                const double l1 = ri.eig.values[0], l2 = ri.eig.values[1];
                s.emplace(2, 4, l1 / (l1 + l2), ri.eig.vectors.col(0), ri.eig.vectors.col(1));
            }
            const zc::CanonicalizeResult res = zc::canonicalize(*s);
            if (res.both_separable) {
                write_output(out_path, zc::json_both_separable() + "\n");
                return 0;
            }
            const zc::CanonicalForm& cf = *res.form;
            const zc::CMatrix u = zc::kron(cf.x1, cf.x2);
            const double residual =
                zc::max_abs_diff(u * s->assemble().mat() * u.dagger(), cf.assemble().mat());
            write_output(out_path, zc::json_canonical(cf, residual) + "\n");
            return 0;
        }

        if (cmd_conc->parsed()) {
            const zc::ParsedState st = load_state(in_path);
            const zc::CartanParams p = zc::parse_cartan(zc::parse_json_text(read_file(params_path)));
            const zc::Conjugation m = zc::conjugation_from_params(p);
            double value = 0.0;
            if (st.rank_two) {
                value = zc::mixed_concurrence_reduced(*st.rank_two, m).value;
            } else {
                value = zc::mixed_concurrence_full(st.rho, m).value;
            }
            write_output(out_path, "{\"concurrence\":" + zc::fmt_double(value) + "}\n");
            return 0;
        }

        if (cmd_ppt->parsed()) {
            const zc::ParsedState st = load_state(in_path);
            const auto [is_ppt, min_eig] = zc::ppt_test(st.rho);
            write_output(out_path, std::string("{\"is_ppt\":") + (is_ppt ? "true" : "false") +
                                       ",\"min_eig\":" + zc::fmt_double(min_eig) + "}\n");
            return 0;
        }

        if (cmd_sweep->parsed()) {
            const std::vector<double> q1s = grid(q1_min, q1_max, q1_steps);
            const std::vector<double> phis = grid(phi_min, phi_max, phi_steps);
            for (double q : q1s)
                if (!(q > 0.0 && q < 1.0)) {
                    zc::log_error("sweep requires every q1 grid point in (0, 1)");
                    return kExitUsage;
                }
            std::string csv = "q1,phi,max_concurrence,ppt_min_eig\n";
            std::uint64_t row = 0;
            for (double q : q1s)
                for (double ph : phis) {
                    const zc::RankTwoState s = zc::make_zce(q, ph);
                    const zc::SearchResult sr =
                        zc::max_concurrence_search(s, restarts, zc::derive_seed(seed, row));
                    const auto [is_ppt, min_eig] = zc::ppt_test(s.assemble());
                    (void)is_ppt;
                    csv += zc::fmt_double(q) + "," + zc::fmt_double(ph) + "," +
                           zc::fmt_double(sr.value) + "," + zc::fmt_double(min_eig) + "\n";
                    ++row;
                }
            write_output(out_path, csv);
            return 0;
        }
    } catch (const zc::ParseError& e) {
        zc::log_error(e.what());
        return kExitUsage;
    } catch (const zc::UnsupportedShape& e) {
        zc::log_error(e.what());
        return kExitUsage;
    } catch (const zc::Error& e) {
        zc::log_error(e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        zc::log_error(e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
