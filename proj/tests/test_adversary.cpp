#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "scot/adversary.hpp"
#include "scot/bounds.hpp"
#include "scot/protocol.hpp"
#include "scot/spacetime.hpp"

using namespace scot::adversary;
using scot::protocol::Bits;
using scot::spacetime::GeometryVariant;
using scot::spacetime::ProtocolGeometry;

namespace {

const double kP1 = 0.5 + 0.5 / std::sqrt(2.0);

ProtocolGeometry slab(int n) {
    ProtocolGeometry g;
    g.h = 1.0;
    g.v = 0.5;
    g.n = n;
    return g;
}

}  // namespace

TEST_CASE("intermediate-basis strategy values") {
    const auto s = strategy_breidbart();
    const auto r1 = evaluate_exact(s, 1);
    CHECK(r1.p_n == doctest::Approx(kP1).epsilon(1e-12));
    CHECK(r1.q0 == doctest::Approx(kP1).epsilon(1e-12));
    CHECK(r1.q1 == doctest::Approx(kP1).epsilon(1e-12));
    const auto r3 = evaluate_exact(s, 3);
    CHECK(r3.p_n == doctest::Approx(0.6218592168).epsilon(1e-9));
    for (int n = 1; n <= 8; ++n)
        CHECK(std::abs(evaluate_exact(s, n).p_n - scot::bounds::p_bar(n)) < 1e-12);
}

TEST_CASE("random-guess strategy values") {
    const auto s = strategy_random_guess(0);
    const auto r4 = evaluate_exact(s, 4);
    CHECK(r4.p_n == doctest::Approx(0.0625).epsilon(1e-12));
    CHECK(r4.q0 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r4.q1 == doctest::Approx(0.0625).epsilon(1e-12));
    MonteCarloOptions opt;
    opt.trials = 100000;
    opt.seed = 12;
    const auto mc = evaluate_monte_carlo(s, slab(1), 1, opt);
    CHECK(std::abs(mc.p_n - 0.5) <= 4 * mc.std_error);
}

TEST_CASE("cloning strategy values") {
    const auto s = strategy_cloning();
    const auto r = evaluate_exact(s, 1);
    CHECK(r.q0 + r.q1 == doctest::Approx(1.0 + 1.0 / std::sqrt(2.0)).epsilon(1e-9));
    CHECK(r.q0 == doctest::Approx(r.q1).epsilon(1e-12));
}

TEST_CASE("sampled estimates agree with exact values") {
    MonteCarloOptions opt;
    opt.trials = 100000;
    opt.seed = 8;
    const auto mc = evaluate_monte_carlo(strategy_breidbart(), slab(2), 2, opt);
    CHECK(std::abs(mc.p_n - kP1 * kP1) <= 4 * mc.std_error);
    opt.trials = 20000;
    for (int n = 1; n <= 4; ++n) {
        for (const auto& s :
             {strategy_breidbart(), strategy_random_guess(1), strategy_cloning()}) {
            const auto r = evaluate_monte_carlo(s, slab(n), n, opt);
            CHECK(r.p_n <= r.bound + 4 * r.std_error);
            CHECK(r.bound_ok);
        }
    }
}

TEST_CASE("p_n is non-increasing in n") {
    for (const auto& s : {strategy_breidbart(), strategy_random_guess(0), strategy_cloning()}) {
        double prev = 1.0;
        for (int n = 1; n <= 6; ++n) {
            const double p = evaluate_exact(s, n).p_n;
            CHECK(p <= prev + 1e-12);
            prev = p;
        }
    }
}

TEST_CASE("structural rejection of peer communication") {
    auto s = strategy_breidbart();
    s.planned_peer_messages = 1;
    CHECK_THROWS_AS(validate_strategy(s), std::invalid_argument);
}

TEST_CASE("structural rejection of a broken measurement") {
    auto s = strategy_breidbart();
    // destroy completeness of one measurement
    s.product->projectors[0][0][0] =
        scot::qsim::Matrix::identity(s.product->projectors[0][0][0].dim);
    CHECK_THROWS_AS(validate_strategy(s), std::invalid_argument);
}

TEST_CASE("general-form strategy reproduces the per-qubit one") {
    // rebuild the broadcast strategy as a one-qubit general strategy
    const auto p = strategy_breidbart();
    GeneralStrategy g;
    g.n = 1;
    g.ancilla_qubits = p.product->ancilla_qubits;
    g.prepare = p.product->prepare;
    g.ancilla = p.product->ancilla;
    g.share0 = p.product->share0;
    g.share1 = p.product->share1;
    g.projectors.assign(2, std::vector<std::vector<scot::qsim::Matrix>>(2));
    for (int i = 0; i < 2; ++i)
        for (int s = 0; s < 2; ++s)
            g.projectors[i][s] = {p.product->projectors[i][s][0], p.product->projectors[i][s][1]};
    Strategy wrapped;
    wrapped.name = "general-broadcast";
    wrapped.general = g;
    validate_strategy(wrapped);
    MonteCarloOptions opt;
    opt.trials = 100000;
    opt.seed = 77;
    const auto mc = evaluate_monte_carlo(wrapped, slab(1), 1, opt);
    CHECK(std::abs(mc.p_n - kP1) <= 4 * mc.std_error);
}

TEST_CASE("cheating transcript template is causally valid") {
    const auto t = cheat_transcript_template(strategy_breidbart(), slab(3), 3, 5);
    CHECK(scot::protocol::validate_transcript(t).ok);
}

TEST_CASE("relay to the common future") {
    const auto g = slab(4);
    const Bits x0 = scot::protocol::random_bits(4, 1);
    const Bits x1 = scot::protocol::random_bits(4, 2);
    const auto relaxed = timelike_relay_demo(g, x0, x1, 6, true);
    CHECK(relaxed.success);
    CHECK(relaxed.validation.ok);
    // the relayed output happens at the earliest common future point, t = 2h
    bool found = false;
    for (const auto& out : relaxed.transcript.outputs)
        if (out.side == 1) {
            CHECK(out.event.t == doctest::Approx(2.0 * g.h));
            CHECK(out.event.x == doctest::Approx(0.0));
            CHECK(out.bits == x1);
            found = true;
        }
    CHECK(found);
    const auto strict = timelike_relay_demo(g, x0, x1, 6, false);
    CHECK_FALSE(strict.validation.ok);
}

TEST_CASE("result serialization") {
    const auto r = evaluate_exact(strategy_breidbart(), 2);
    CHECK(AttackResult::csv_header() == "strategy,n,mode,p_n,q0,q1,trials,stderr,bound,ok");
    const auto row = r.csv_row();
    CHECK(row.find("breidbart") != std::string::npos);
    const auto json = r.to_json();
    CHECK(json.find("\"p_n\"") != std::string::npos);
}

TEST_CASE("sampling is deterministic per seed") {
    MonteCarloOptions opt;
    opt.trials = 5000;
    opt.seed = 99;
    const auto a = evaluate_monte_carlo(strategy_cloning(), slab(2), 2, opt);
    const auto b = evaluate_monte_carlo(strategy_cloning(), slab(2), 2, opt);
    CHECK(a.p_n == b.p_n);
    CHECK(a.q0 == b.q0);
}
