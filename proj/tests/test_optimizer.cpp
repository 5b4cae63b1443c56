#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "scot/adversary.hpp"
#include "scot/optimizer.hpp"
#include "scot/qsim.hpp"

using namespace scot::optimizer;

namespace {
const double kMu0Max = 2.0 + std::sqrt(2.0);
}

TEST_CASE("objective values at pinned points") {
    Mu0Variables zero;
    CHECK(mu0_objective(zero) == doctest::Approx(2.0).epsilon(1e-15));
    Mu0Variables one;
    one.c[0][0][0] = 1.0;
    CHECK(mu0_objective(one) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("constraint residuals at pinned points") {
    Mu0Variables zero;
    const auto r = constraint_residuals(zero);
    CHECK(r.norm[0] == doctest::Approx(1.0));
    CHECK(r.norm[1] == doctest::Approx(1.0));
    CHECK(r.orth[0] == 0.0);
    CHECK(r.orth[1] == 0.0);
    for (double c : r.cap) CHECK(c == 0.0);
    Mu0Variables capped;
    capped.g[0][0] = 2.0;
    CHECK(constraint_residuals(capped).cap[0] == doctest::Approx(3.0));
}

TEST_CASE("pack and unpack round trip") {
    scot::qsim::Rng rng(3);
    std::array<double, kMu0VariableCount> x{};
    for (double& xi : x) xi = rng.uniform() - 0.5;
    const auto back = pack(unpack(x));
    for (int i = 0; i < kMu0VariableCount; ++i) CHECK(back[i] == x[i]);
}

TEST_CASE("witness extracted from the broadcast strategy") {
    const auto s = scot::adversary::strategy_breidbart();
    const auto w = witness_from_strategy(s);
    CHECK(constraint_residuals(w).max_residual() < 1e-10);
    const double via_form = mu0_objective(w);
    const double direct = mu0_direct_from_strategy(s);
    CHECK(std::abs(via_form - direct) < 1e-9);
    CHECK(via_form == doctest::Approx(kMu0Max).epsilon(1e-9));
}

TEST_CASE("witness extracted from the cloning strategy stays feasible") {
    const auto s = scot::adversary::strategy_cloning();
    const auto w = witness_from_strategy(s);
    CHECK(constraint_residuals(w).max_residual() < 1e-9);
    CHECK(std::abs(mu0_objective(w) - mu0_direct_from_strategy(s)) < 1e-9);
    CHECK(mu0_objective(w) <= kMu0Max + 1e-9);
}

TEST_CASE("strategy success sums") {
    CHECK(strategy_sum(scot::adversary::strategy_breidbart()) ==
          doctest::Approx(1.0 + 1.0 / std::sqrt(2.0)).epsilon(1e-9));
    CHECK(strategy_sum(scot::adversary::strategy_cloning()) ==
          doctest::Approx(1.0 + 1.0 / std::sqrt(2.0)).epsilon(1e-9));
    // honest on side 0, uniform guess on side 1
    CHECK(strategy_sum(scot::adversary::strategy_random_guess(0)) ==
          doctest::Approx(1.5).epsilon(1e-9));
    for (const auto& s :
         {scot::adversary::strategy_breidbart(), scot::adversary::strategy_random_guess(0),
          scot::adversary::strategy_random_guess(1), scot::adversary::strategy_cloning()})
        CHECK(strategy_sum(s) <= kMu0Max / 2.0 + 1e-9);
}

TEST_CASE("projection produces feasible points below the maximum") {
    scot::qsim::Rng rng(5);
    for (int i = 0; i < 2000; ++i) {
        const auto v = random_feasible_point(rng);
        CHECK(constraint_residuals(v).max_residual() < 1e-8);
        CHECK(mu0_objective(v) <= kMu0Max + 1e-6);
    }
}

TEST_CASE("analytic gradient agrees with finite differences") {
    scot::qsim::Rng rng(6);
    for (int point = 0; point < 20; ++point) {
        std::array<double, kMu0VariableCount> x{};
        for (double& xi : x) xi = 2.0 * rng.uniform() - 1.0;
        const double rho = std::pow(10.0, point % 4);
        std::array<double, kMu0VariableCount> grad{};
        penalized_objective(unpack(x), rho, &grad);
        for (int i = 0; i < kMu0VariableCount; ++i) {
            auto xp = x, xm = x;
            xp[i] += 1e-6;
            xm[i] -= 1e-6;
            const double fd = (penalized_objective(unpack(xp), rho, nullptr) -
                               penalized_objective(unpack(xm), rho, nullptr)) /
                              2e-6;
            CHECK(std::abs(grad[i] - fd) <= 1e-5 * std::max(1.0, std::abs(fd)));
        }
    }
}

TEST_CASE("maximization reaches the known optimum and is deterministic") {
    const auto a = maximize_mu0(16, 2000, 1e-8, 7);
    CHECK(a.converged);
    CHECK(a.best_value == doctest::Approx(kMu0Max).epsilon(1e-4));
    CHECK(a.best_value <= kMu0Max + 1e-6);
    CHECK(a.max_constraint_residual < 1e-8);
    const auto b = maximize_mu0(16, 2000, 1e-8, 7);
    CHECK(a.best_value == b.best_value);
    const auto pa = pack(a.variables), pb = pack(b.variables);
    for (int i = 0; i < kMu0VariableCount; ++i) CHECK(pa[i] == pb[i]);
    const auto json = a.to_json();
    CHECK(json.find("\"best_value\"") != std::string::npos);
}

TEST_CASE("single adversarial restart stays below the cap") {
    const auto r = maximize_mu0(1, 300, 1e-8, 1234567);
    if (r.converged) CHECK(r.best_value <= kMu0Max + 1e-6);
}

TEST_CASE("witness file format") {
    Mu0Variables v;
    v.c[0][0][0] = 0.25;
    std::ostringstream os;
    write_witness(os, v);
    int lines = 0;
    for (char c : os.str())
        if (c == '\n') ++lines;
    CHECK(lines == kMu0VariableCount);
    CHECK(os.str().rfind("0.25\n", 0) == 0);
}
