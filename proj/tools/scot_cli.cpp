#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "scot/acceptance.hpp"
#include "scot/adversary.hpp"
#include "scot/bounds.hpp"
#include "scot/classical.hpp"
#include "scot/optimizer.hpp"
#include "scot/protocol.hpp"
#include "scot/qsim.hpp"
#include "scot/spacetime.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitAssertionFailure = 1;
constexpr int kExitUsage = 2;

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

struct GeometryFlags {
    int n = 1;
    double h = 1.0;
    double v = 0.1;
    double delta = 0.1;
    std::string variant = "slab";
};

void add_geometry_flags(CLI::App* cmd, GeometryFlags& g) {
    cmd->set_help_flag("--help", "print help");  // frees -h/--h for the geometry flag
    cmd->add_option("--n", g.n, "password length");
    cmd->add_option("--h", g.h, "half distance between the output sites");
    cmd->add_option("--v", g.v, "output region extent");
    cmd->add_option("--delta", g.delta, "per-bit point spacing");
    cmd->add_option("--variant", g.variant, "geometry variant")
        ->check(CLI::IsMember({"slab", "perbit"}));
}

scot::spacetime::ProtocolGeometry build_geometry(const GeometryFlags& f) {
    scot::spacetime::ProtocolGeometry g;
    g.n = f.n;
    g.h = f.h;
    g.v = f.v;
    g.delta = f.delta;
    g.variant = (f.variant == "perbit") ? scot::spacetime::GeometryVariant::PerBitPoints
                                        : scot::spacetime::GeometryVariant::MainSlab;
    return g;
}

scot::protocol::Bits parse_bits(const std::string& text, int n) {
    if (static_cast<int>(text.size()) != n)
        throw CLI::ValidationError("bit string must have length " + std::to_string(n));
    scot::protocol::Bits bits;
    for (char c : text) {
        if (c != '0' && c != '1') throw CLI::ValidationError("bit strings use characters 0/1");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return bits;
}

std::string bits_text(const scot::protocol::Bits& bits) {
    std::string s;
    for (auto b : bits) s += static_cast<char>('0' + b);
    return s;
}

// Writes to the path if given, stdout otherwise.
int with_output(const std::string& path, const std::function<void(std::ostream&)>& body) {
    if (path.empty()) {
        body(std::cout);
        return kExitPass;
    }
    std::ofstream os(path);
    if (!os) {
        std::cerr << "cannot open output file: " << path << "\n";
        return kExitUsage;
    }
    body(os);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spacetime-constrained oblivious transfer laboratory"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value configuration file merged under explicit flags");

    // honest -------------------------------------------------------------
    auto* honest = app.add_subcommand("honest", "run the honest protocol");
    GeometryFlags hg;
    add_geometry_flags(honest, hg);
    int honest_b = 0;
    std::uint64_t honest_seed = 1;
    double honest_gamma = 0.0;
    std::string honest_x0, honest_x1, honest_out;
    honest->add_option("--b", honest_b, "Bob's choice bit")->check(CLI::Range(0, 1));
    honest->add_option("--seed", honest_seed, "random seed");
    honest->add_option("--gamma", honest_gamma, "per-qubit flip probability")
        ->check(CLI::Range(0.0, 0.5));
    honest->add_option("--x0", honest_x0, "password 0 as a 0/1 string (default: from seed)");
    honest->add_option("--x1", honest_x1, "password 1 as a 0/1 string (default: from seed)");
    honest->add_option("--out", honest_out, "transcript output path (default: stdout)");

    // attack ---------------------------------------------------------------
    auto* attack = app.add_subcommand("attack", "evaluate a cheating strategy");
    GeometryFlags ag;
    add_geometry_flags(attack, ag);
    std::string attack_strategy = "breidbart", attack_mode = "exact", attack_format = "csv",
                attack_out;
    long attack_trials = 100000;
    std::uint64_t attack_seed = 1;
    int attack_side = 0;
    std::optional<double> attack_gamma;
    attack->add_option("--strategy", attack_strategy, "breidbart | random-guess | cloning")
        ->check(CLI::IsMember({"breidbart", "random-guess", "cloning"}));
    attack->add_option("--mode", attack_mode, "exact | mc")->check(CLI::IsMember({"exact", "mc"}));
    attack->add_option("--trials", attack_trials, "Monte Carlo trials")
        ->check(CLI::PositiveNumber);
    attack->add_option("--seed", attack_seed, "random seed");
    attack->add_option("--b", attack_side, "honest side for random-guess")->check(CLI::Range(0, 1));
    attack->add_option("--gamma", attack_gamma, "accept within gamma*n flips (mc only)");
    attack->add_option("--format", attack_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    attack->add_option("--out", attack_out, "result output path (default: stdout)");

    // timelike-demo --------------------------------------------------------
    auto* demo = app.add_subcommand("timelike-demo",
                                    "relay both outputs to the common causal future");
    GeometryFlags dg;
    dg.n = 3;
    add_geometry_flags(demo, dg);
    std::uint64_t demo_seed = 5;
    bool demo_strict = false;
    std::string demo_out;
    demo->add_option("--seed", demo_seed, "random seed");
    demo->add_flag("--strict", demo_strict,
                   "keep the original output regions (the relay must be rejected)");
    demo->add_option("--out", demo_out, "transcript output path (default: stdout)");

    // classical --------------------------------------------------------------
    auto* cls = app.add_subcommand("classical", "attacks on classical protocol tables");
    std::uint64_t cls_seed = 1;
    int cls_count = 1, cls_scan = 0;
    std::string cls_format = "csv", cls_out;
    cls->add_option("--seed", cls_seed, "first protocol seed");
    cls->add_option("--count", cls_count, "number of seeded protocols")->check(CLI::PositiveNumber);
    cls->add_option("--scan", cls_scan, "emit the leak/error tradeoff curve on a grid instead");
    cls->add_option("--format", cls_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    cls->add_option("--out", cls_out, "output path (default: stdout)");

    // bounds -----------------------------------------------------------------
    auto* bnd = app.add_subcommand("bounds", "security bound tables");
    double bnd_gamma = 0.015;
    int bnd_n = 10;
    std::string bnd_out;
    bnd->add_option("--gamma", bnd_gamma, "error rate")->check(CLI::Range(0.0, 0.5));
    bnd->add_option("--n", bnd_n, "table rows 1..n")->check(CLI::PositiveNumber);
    bnd->add_option("--out", bnd_out, "output path (default: stdout)");

    // optimize -----------------------------------------------------------------
    auto* opt = app.add_subcommand("optimize", "maximize the mu_0 form");
    int opt_restarts = 64, opt_iters = 2000;
    double opt_tol = 1e-8;
    std::uint64_t opt_seed = 7;
    std::string opt_witness, opt_format = "json", opt_out;
    opt->add_option("--restarts", opt_restarts, "random restarts")->check(CLI::PositiveNumber);
    opt->add_option("--iters", opt_iters, "ascent iterations per penalty level")
        ->check(CLI::PositiveNumber);
    opt->add_option("--tol", opt_tol, "feasibility tolerance")->check(CLI::PositiveNumber);
    opt->add_option("--seed", opt_seed, "random seed");
    opt->add_option("--emit-witness", opt_witness, "write the maximizing variables to this path");
    opt->add_option("--format", opt_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    opt->add_option("--out", opt_out, "result output path (default: stdout)");

    // verify-all ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify-all", "run the full verification suite");
    bool verify_quick = false;
    verify->add_flag("--quick", verify_quick, "accepted for manifest compatibility");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;  // help/version exit 0
    }

    try {
        if (honest->parsed()) {
            const auto geom = build_geometry(hg);
            const auto report = scot::spacetime::validate_geometry(geom);
            if (!report.ok) {
                std::cerr << "invalid geometry: " << report.issues.front() << "\n";
                return kExitUsage;
            }
            const auto x0 = honest_x0.empty() ? scot::protocol::random_bits(hg.n, honest_seed + 100)
                                              : parse_bits(honest_x0, hg.n);
            const auto x1 = honest_x1.empty() ? scot::protocol::random_bits(hg.n, honest_seed + 200)
                                              : parse_bits(honest_x1, hg.n);
            const auto t = honest_gamma > 0.0
                               ? scot::protocol::run_noisy_honest(geom, x0, x1, honest_b,
                                                                  honest_gamma, honest_seed)
                               : scot::protocol::run_honest(geom, x0, x1, honest_b, honest_seed);
            scot::protocol::Bits y(static_cast<std::size_t>(hg.n), 0);
            for (const auto& out : t.outputs) {
                if (out.side != honest_b) continue;
                if (out.bit_index < 0)
                    y = out.bits;
                else
                    y[static_cast<std::size_t>(out.bit_index)] = out.bits.at(0);
            }
            const auto& want = (honest_b == 0) ? x0 : x1;
            const int code = with_output(honest_out, [&](std::ostream& os) {
                scot::protocol::serialize_transcript(os, t);
            });
            if (code != kExitPass) return code;
            const bool valid = scot::protocol::validate_transcript(t).ok;
            const bool match = honest_gamma > 0.0
                                   ? scot::protocol::accept_noisy(y, want, honest_gamma)
                                   : (y == want);
            std::cout << "y = " << bits_text(y) << ", x_" << honest_b << " = " << bits_text(want)
                      << ", " << (match ? "match" : "MISMATCH") << ", transcript "
                      << (valid ? "valid" : "INVALID") << "\n";
            return (match && valid) ? kExitPass : kExitAssertionFailure;
        }

        if (attack->parsed()) {
            scot::adversary::Strategy strategy;
            if (attack_strategy == "breidbart")
                strategy = scot::adversary::strategy_breidbart();
            else if (attack_strategy == "cloning")
                strategy = scot::adversary::strategy_cloning();
            else
                strategy = scot::adversary::strategy_random_guess(attack_side);
            scot::adversary::AttackResult result;
            if (attack_mode == "exact") {
                result = scot::adversary::evaluate_exact(strategy, ag.n);
            } else {
                const auto geom = build_geometry(ag);
                const auto report = scot::spacetime::validate_geometry(geom);
                if (!report.ok) {
                    std::cerr << "invalid geometry: " << report.issues.front() << "\n";
                    return kExitUsage;
                }
                scot::adversary::MonteCarloOptions options;
                options.trials = attack_trials;
                options.seed = attack_seed;
                options.noisy_gamma = attack_gamma;
                result = scot::adversary::evaluate_monte_carlo(strategy, geom, ag.n, options);
            }
            const int code = with_output(attack_out, [&](std::ostream& os) {
                if (attack_format == "json")
                    os << result.to_json() << "\n";
                else
                    os << scot::adversary::AttackResult::csv_header() << "\n"
                       << result.csv_row() << "\n";
            });
            if (code != kExitPass) return code;
            return result.bound_ok ? kExitPass : kExitAssertionFailure;
        }

        if (demo->parsed()) {
            const auto geom = build_geometry(dg);
            const auto report = scot::spacetime::validate_geometry(geom);
            if (!report.ok) {
                std::cerr << "invalid geometry: " << report.issues.front() << "\n";
                return kExitUsage;
            }
            const auto x0 = scot::protocol::random_bits(dg.n, demo_seed + 100);
            const auto x1 = scot::protocol::random_bits(dg.n, demo_seed + 200);
            const auto result =
                scot::adversary::timelike_relay_demo(geom, x0, x1, demo_seed, !demo_strict);
            const int code = with_output(demo_out, [&](std::ostream& os) {
                scot::protocol::serialize_transcript(os, result.transcript);
            });
            if (code != kExitPass) return code;
            std::cout << "both outputs correct: " << (result.success ? "yes" : "no")
                      << "; transcript " << (result.validation.ok ? "valid" : "rejected") << "\n";
            if (!result.validation.ok)
                std::cout << "rejection: " << result.validation.issues.front() << "\n";
            // strict mode demonstrates enforcement: rejection is the expected outcome
            const bool as_expected =
                demo_strict ? !result.validation.ok : (result.success && result.validation.ok);
            return as_expected ? kExitPass : kExitAssertionFailure;
        }

        if (cls->parsed()) {
            if (cls_scan > 0) {
                const auto points = scot::classical::tradeoff_scan(cls_scan);
                return with_output(cls_out, [&](std::ostream& os) {
                    scot::classical::write_tradeoff_csv(os, points);
                });
            }
            bool all_hold = true;
            const int code = with_output(cls_out, [&](std::ostream& os) {
                if (cls_format == "csv")
                    os << "seed,delta,epsilon,p_b_cheat,bound_rhs,bound_holds\n";
                for (int k = 0; k < cls_count; ++k) {
                    const std::uint64_t seed = cls_seed + static_cast<std::uint64_t>(k);
                    const auto p = scot::classical::random_protocol(seed);
                    const auto rep = scot::classical::bob_double_run_attack(p);
                    all_hold = all_hold && rep.bound_holds;
                    if (cls_format == "json")
                        os << "{\"seed\":" << seed << ",\"delta\":" << fmt(rep.delta)
                           << ",\"epsilon\":" << fmt(rep.epsilon)
                           << ",\"p_b_cheat\":" << fmt(rep.p_b_cheat)
                           << ",\"bound_rhs\":" << fmt(rep.bound_rhs)
                           << ",\"bound_holds\":" << (rep.bound_holds ? "true" : "false") << "}\n";
                    else
                        os << seed << "," << fmt(rep.delta) << "," << fmt(rep.epsilon) << ","
                           << fmt(rep.p_b_cheat) << "," << fmt(rep.bound_rhs) << ","
                           << (rep.bound_holds ? 1 : 0) << "\n";
                }
            });
            if (code != kExitPass) return code;
            return all_hold ? kExitPass : kExitAssertionFailure;
        }

        if (bnd->parsed()) {
            const double gamma_star = scot::bounds::max_tolerable_gamma(1e-12);
            return with_output(bnd_out, [&](std::ostream& os) {
                os << "gamma_star," << fmt(gamma_star) << "\n";
                os << "n,p_bar,noisy_bound\n";
                for (int n = 1; n <= bnd_n; ++n)
                    os << n << "," << fmt(scot::bounds::p_bar(n)) << ","
                       << fmt(scot::bounds::noisy_bound(bnd_gamma, n)) << "\n";
            });
        }

        if (opt->parsed()) {
            const auto result =
                scot::optimizer::maximize_mu0(opt_restarts, opt_iters, opt_tol, opt_seed);
            if (!opt_witness.empty()) {
                std::ofstream ws(opt_witness);
                if (!ws) {
                    std::cerr << "cannot open witness file: " << opt_witness << "\n";
                    return kExitUsage;
                }
                scot::optimizer::write_witness(ws, result.variables);
            }
            const int code = with_output(opt_out, [&](std::ostream& os) {
                if (opt_format == "json")
                    os << result.to_json() << "\n";
                else
                    os << "best_value,max_constraint_residual,restarts,iterations,converged\n"
                       << fmt(result.best_value) << "," << fmt(result.max_constraint_residual)
                       << "," << result.restarts_used << "," << result.iterations << ","
                       << (result.converged ? 1 : 0) << "\n";
            });
            if (code != kExitPass) return code;
            const double cap = 2.0 + std::sqrt(2.0) + 1e-6;
            return (result.converged && result.best_value <= cap) ? kExitPass
                                                                  : kExitAssertionFailure;
        }

        if (verify->parsed()) {
            std::string first_failure;
            for (const auto& r : scot::acceptance::run_all()) {
                std::cout << scot::acceptance::format_line(r) << "\n" << std::flush;
                if (!r.pass && first_failure.empty()) first_failure = r.name;
            }
            if (!first_failure.empty()) {
                std::cout << "first failing criterion: " << first_failure << "\n";
                return kExitAssertionFailure;
            }
            return kExitPass;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAssertionFailure;
    }
    return kExitUsage;
}
