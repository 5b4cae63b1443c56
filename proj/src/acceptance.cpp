#include "scot/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "scot/adversary.hpp"
#include "scot/bounds.hpp"
#include "scot/classical.hpp"
#include "scot/optimizer.hpp"
#include "scot/protocol.hpp"
#include "scot/qsim.hpp"
#include "scot/spacetime.hpp"

namespace scot::acceptance {

namespace {

using protocol::Bits;

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

Bits int_to_bits(unsigned value, int n) {
    Bits b(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) b[j] = static_cast<std::uint8_t>((value >> j) & 1u);
    return b;
}

// Reassembles Bob's output string on side b from whole-string or per-bit
// output records.
Bits assemble_output(const protocol::Transcript& t, int b, int n) {
    Bits y(static_cast<std::size_t>(n), 2);  // 2 marks a missing bit
    for (const auto& out : t.outputs) {
        if (out.side != b) continue;
        if (out.bit_index < 0) return out.bits;
        y[static_cast<std::size_t>(out.bit_index)] = out.bits.at(0);
    }
    return y;
}

spacetime::ProtocolGeometry make_geometry(spacetime::GeometryVariant variant, int n) {
    spacetime::ProtocolGeometry g;
    g.h = 1.0;
    g.v = 0.5;
    g.variant = variant;
    g.delta = 0.2;
    g.n = n;
    return g;
}

CriterionResult timed(int id, const std::string& name,
                      const std::function<bool(std::string&)>& body) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        r.pass = body(r.detail);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

CriterionResult check_honest_correctness() {
    return timed(1, "honest correctness, exhaustive inputs n<=6", [](std::string& detail) {
        long runs = 0;
        std::uint64_t seed = 1;
        for (auto variant :
             {spacetime::GeometryVariant::MainSlab, spacetime::GeometryVariant::PerBitPoints}) {
            for (int n = 1; n <= 6; ++n) {
                const auto geom = make_geometry(variant, n);
                for (unsigned x0 = 0; x0 < (1u << n); ++x0)
                    for (unsigned x1 = 0; x1 < (1u << n); ++x1)
                        for (int b = 0; b < 2; ++b) {
                            const Bits bx0 = int_to_bits(x0, n);
                            const Bits bx1 = int_to_bits(x1, n);
                            const auto t = protocol::run_honest(geom, bx0, bx1, b, seed++);
                            const Bits y = assemble_output(t, b, n);
                            const Bits& want = (b == 0) ? bx0 : bx1;
                            if (y != want) {
                                detail = "wrong output at n=" + std::to_string(n);
                                return false;
                            }
                            const auto report = protocol::validate_transcript(t);
                            if (!report.ok) {
                                detail = "invalid transcript: " + report.issues.front();
                                return false;
                            }
                            ++runs;
                        }
            }
        }
        detail = std::to_string(runs) + " runs, 0 failures, all transcripts valid";
        return true;
    });
}

CriterionResult check_breidbart_tightness() {
    return timed(2, "intermediate-basis attack tightness", [](std::string& detail) {
        const auto s = adversary::strategy_breidbart();
        double worst = 0;
        for (int n = 1; n <= 20; ++n) {
            const auto res = adversary::evaluate_exact(s, n);
            worst = std::max(worst, std::abs(res.p_n - bounds::p_bar(n)));
        }
        if (worst >= 1e-12) {
            detail = "exact mismatch, max error " + fmt(worst);
            return false;
        }
        const auto geom = make_geometry(spacetime::GeometryVariant::MainSlab, 2);
        adversary::MonteCarloOptions opt;
        opt.trials = 100000;
        opt.seed = 2;
        const auto mc = adversary::evaluate_monte_carlo(s, geom, 2, opt);
        const double target = 0.7285533906;
        const double dev = std::abs(mc.p_n - target);
        if (dev > 4.0 * mc.std_error) {
            detail = "Monte Carlo p_2 = " + fmt(mc.p_n) + " deviates " + fmt(dev) +
                     " > 4 sigma = " + fmt(4.0 * mc.std_error);
            return false;
        }
        detail = "max exact error " + fmt(worst) + "; MC p_2 = " + fmt(mc.p_n) + " within " +
                 fmt(dev / std::max(mc.std_error, 1e-300)) + " sigma";
        return true;
    });
}

CriterionResult check_random_guess() {
    return timed(3, "random-guess baseline p_n = 2^-n", [](std::string& detail) {
        double worst = 0;
        for (int b = 0; b < 2; ++b) {
            const auto s = adversary::strategy_random_guess(b);
            for (int n = 1; n <= 10; ++n) {
                const auto res = adversary::evaluate_exact(s, n);
                worst = std::max(worst, std::abs(res.p_n - std::ldexp(1.0, -n)));
            }
        }
        detail = "max error " + fmt(worst);
        return worst < 1e-12;
    });
}

CriterionResult check_bound_compliance() {
    return timed(4, "bound compliance and violation rejection", [](std::string& detail) {
        const adversary::Strategy strategies[] = {
            adversary::strategy_breidbart(), adversary::strategy_random_guess(0),
            adversary::strategy_random_guess(1), adversary::strategy_cloning()};
        for (const auto& s : strategies)
            for (int n = 1; n <= 6; ++n) {
                const auto res = adversary::evaluate_exact(s, n);
                if (!res.bound_ok) {
                    detail = s.name + " exceeds the bound at n=" + std::to_string(n) +
                             ": p_n = " + fmt(res.p_n) + " > " + fmt(res.bound);
                    return false;
                }
            }
        const auto geom = make_geometry(spacetime::GeometryVariant::MainSlab, 3);
        adversary::MonteCarloOptions opt;
        opt.trials = 20000;
        opt.seed = 4;
        for (const auto& s : strategies) {
            const auto mc = adversary::evaluate_monte_carlo(s, geom, 3, opt);
            if (!mc.bound_ok) {
                detail = s.name + " sampled p_3 = " + fmt(mc.p_n) + " above bound + 4 sigma";
                return false;
            }
        }
        // deliberately corrupted result: the predicate must reject it
        for (int n = 1; n <= 6; ++n)
            if (bounds::security_predicate(1.0, n)) {
                detail = "p_n = 1 not rejected at n=" + std::to_string(n);
                return false;
            }
        detail = "4 strategies x n<=6 exact + sampled within bound; p_n=1 fixture rejected";
        return true;
    });
}

CriterionResult check_cloning_sum() {
    return timed(5, "cloning and intermediate-basis success sums", [](std::string& detail) {
        const double target = 1.0 + 1.0 / std::sqrt(2.0);
        const double sc = optimizer::strategy_sum(adversary::strategy_cloning());
        const double sb = optimizer::strategy_sum(adversary::strategy_breidbart());
        detail = "cloning " + fmt(sc) + ", intermediate basis " + fmt(sb) + ", target " +
                 fmt(target);
        return std::abs(sc - target) < 1e-9 && std::abs(sb - target) < 1e-9;
    });
}

CriterionResult check_optimizer() {
    return timed(6, "mu_0 maximization reaches 2 + sqrt(2)", [](std::string& detail) {
        const auto res = optimizer::maximize_mu0(64, 2000, 1e-8, 7);
        if (res.best_value < 3.41411 || res.best_value > 3.41422) {
            detail = "best value " + fmt(res.best_value) + " outside [3.41411, 3.41422]";
            return false;
        }
        if (res.max_constraint_residual >= 1e-8) {
            detail = "constraint residual " + fmt(res.max_constraint_residual);
            return false;
        }
        const double cap = 2.0 + std::sqrt(2.0) + 1e-6;
        qsim::Rng rng(99);
        double max_seen = -1e300;
        for (int i = 0; i < 100000; ++i) {
            const auto v = optimizer::random_feasible_point(rng);
            max_seen = std::max(max_seen, optimizer::mu0_objective(v));
            if (max_seen > cap) {
                detail = "feasible point exceeds the cap: " + fmt(max_seen);
                return false;
            }
        }
        detail = "best " + fmt(res.best_value) + ", residual " +
                 fmt(res.max_constraint_residual) + ", 1e5 feasible samples max " + fmt(max_seen);
        return true;
    });
}

CriterionResult check_error_tolerance() {
    return timed(7, "noise threshold near 1.5%", [](std::string& detail) {
        if (!(bounds::noisy_bound(0.015, 1) < 1.0)) {
            detail = "bound at gamma = 0.015 not below 1";
            return false;
        }
        if (!(bounds::noisy_bound(0.02, 1) > 1.0)) {
            detail = "bound at gamma = 0.02 not above 1";
            return false;
        }
        const double gs = bounds::max_tolerable_gamma(1e-12);
        if (!(gs > 0.0150 && gs < 0.0160)) {
            detail = "threshold " + fmt(gs) + " outside (0.0150, 0.0160)";
            return false;
        }
        double prev = 1.0;
        for (int n = 1; n <= 200; ++n) {
            const double b = bounds::noisy_bound(0.015, n);
            if (!(b < prev)) {
                detail = "bound not decreasing at n=" + std::to_string(n);
                return false;
            }
            prev = b;
        }
        detail = "threshold gamma* = " + fmt(gs) + "; bound monotone for n = 1..200";
        return true;
    });
}

CriterionResult check_classical() {
    return timed(8, "classical protocols cannot hide b", [](std::string& detail) {
        for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
            const auto p = classical::random_protocol(seed);
            // alice_attack cross-checks the partition rule against the
            // closed form internally and throws on disagreement
            for (int x0 = 0; x0 < p.inputs(); ++x0)
                for (int x1 = 0; x1 < p.inputs(); ++x1) (void)classical::alice_attack(p, x0, x1);
            const auto rep = classical::bob_double_run_attack(p);
            if (!rep.bound_holds) {
                detail = "seed " + std::to_string(seed) + ": cheat " + fmt(rep.p_b_cheat) +
                         " < 1 - 2 eps - 4 delta = " + fmt(rep.bound_rhs);
                return false;
            }
        }
        // b-independent protocol with a perfect decoder: the double run
        // recovers both strings with certainty
        classical::ClassicalProtocol perfect;
        perfect.n = 1;
        perfect.size_g = 4;
        perfect.size_g0 = 1;
        perfect.size_g1 = 1;
        perfect.prob.assign(static_cast<std::size_t>(2 * 2 * 2 * 4), 0.0);
        perfect.decoder.assign(static_cast<std::size_t>(2 * 2 * 2 * 4), 0.0);
        for (int x0 = 0; x0 < 2; ++x0)
            for (int x1 = 0; x1 < 2; ++x1) {
                const int g = 2 * x0 + x1;
                for (int b = 0; b < 2; ++b) perfect.prob[perfect.prob_index(x0, x1, b, g)] = 1.0;
                for (int i = 0; i < 2; ++i)
                    for (int gd = 0; gd < 4; ++gd) {
                        const int xi = (i == 0) ? x0 : x1;
                        const int decoded = (i == 0) ? (gd >> 1) : (gd & 1);
                        perfect.decoder[perfect.decoder_index(i, x0, x1, gd)] =
                            (decoded == xi) ? 1.0 : 0.0;
                    }
            }
        perfect.validate();
        const auto rep = classical::bob_double_run_attack(perfect);
        if (std::abs(rep.p_b_cheat - 1.0) > 1e-12) {
            detail = "perfect-decoder fixture gave " + fmt(rep.p_b_cheat);
            return false;
        }
        detail = "1000 random tables: identity held, cheat >= 1 - 2 eps - 4 delta; fixture = 1";
        return true;
    });
}

CriterionResult check_timelike_relay() {
    return timed(9, "timelike reuse of both outputs", [](std::string& detail) {
        const auto geom = make_geometry(spacetime::GeometryVariant::MainSlab, 3);
        const Bits x0 = protocol::random_bits(3, 11);
        const Bits x1 = protocol::random_bits(3, 12);
        const auto relaxed = adversary::timelike_relay_demo(geom, x0, x1, 5, true);
        if (!relaxed.success) {
            detail = "relaxed run failed to output both strings";
            return false;
        }
        if (!relaxed.validation.ok) {
            detail = "relaxed run rejected: " + relaxed.validation.issues.front();
            return false;
        }
        const auto strict = adversary::timelike_relay_demo(geom, x0, x1, 5, false);
        if (strict.validation.ok) {
            detail = "strict geometry accepted the relay plan";
            return false;
        }
        detail = "relaxed: both strings correct and valid; strict: rejected (" +
                 strict.validation.issues.front() + ")";
        return true;
    });
}

CriterionResult check_numerics() {
    return timed(10, "sampling statistics and gradient checks", [](std::string& detail) {
        // measurement statistics against the exact outcome distribution
        qsim::Rng rng(10);
        const long trials = 100000;
        for (int r = 0; r < 2; ++r)
            for (int s = 0; s < 2; ++s)
                for (auto basis :
                     {qsim::Basis::Computational, qsim::Basis::Hadamard, qsim::Basis::Breidbart}) {
                    const auto state = qsim::bb84_state(r, s);
                    const double p = qsim::born_probability(state, 0, basis, 0);
                    long hits = 0;
                    for (long t = 0; t < trials; ++t)
                        if (qsim::measure(state, 0, basis, rng).first == 0) ++hits;
                    const double freq = static_cast<double>(hits) / trials;
                    const double sigma = std::sqrt(p * (1.0 - p) / trials);
                    if (std::abs(freq - p) > 4.0 * sigma + 1e-12) {
                        detail = "frequency " + fmt(freq) + " vs probability " + fmt(p);
                        return false;
                    }
                }
        // analytic gradients against central finite differences
        qsim::Rng grng(777);
        double worst = 0;
        for (int point = 0; point < 100; ++point) {
            std::array<double, optimizer::kMu0VariableCount> x{};
            for (double& xi : x) xi = 2.0 * grng.uniform() - 1.0;
            const double rho = std::pow(10.0, point % 5);
            const auto v = optimizer::unpack(x);
            std::array<double, optimizer::kMu0VariableCount> grad{};
            optimizer::penalized_objective(v, rho, &grad);
            const double step = 1e-6;
            double num = 0, den = 0;
            for (int i = 0; i < optimizer::kMu0VariableCount; ++i) {
                auto xp = x, xm = x;
                xp[i] += step;
                xm[i] -= step;
                const double fd = (optimizer::penalized_objective(optimizer::unpack(xp), rho,
                                                                  nullptr) -
                                   optimizer::penalized_objective(optimizer::unpack(xm), rho,
                                                                  nullptr)) /
                                  (2.0 * step);
                num += (grad[i] - fd) * (grad[i] - fd);
                den += fd * fd;
            }
            worst = std::max(worst, std::sqrt(num) / std::max(std::sqrt(den), 1.0));
        }
        if (worst >= 1e-5) {
            detail = "gradient relative error " + fmt(worst);
            return false;
        }
        detail = "sampling within 4 sigma; worst gradient relative error " + fmt(worst);
        return true;
    });
}

std::vector<CriterionResult> run_all() {
    return {check_honest_correctness(), check_breidbart_tightness(), check_random_guess(),
            check_bound_compliance(),   check_cloning_sum(),         check_optimizer(),
            check_error_tolerance(),    check_classical(),           check_timelike_relay(),
            check_numerics()};
}

std::string format_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << "  ("
       << fmt(r.seconds) << " s)  " << r.detail;
    return os.str();
}

}  // namespace scot::acceptance
