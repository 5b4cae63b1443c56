#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "scot/protocol.hpp"
#include "scot/qsim.hpp"

using namespace scot::protocol;
using scot::spacetime::GeometryVariant;
using scot::spacetime::ProtocolGeometry;

namespace {

ProtocolGeometry slab(int n, double h = 1.0, double v = 0.5) {
    ProtocolGeometry g;
    g.h = h;
    g.v = v;
    g.n = n;
    return g;
}

Bits from_int(unsigned value, int n) {
    Bits b(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) b[j] = static_cast<std::uint8_t>((value >> j) & 1u);
    return b;
}

Bits output_on_side(const Transcript& t, int side, int n) {
    Bits y(static_cast<std::size_t>(n), 2);
    for (const auto& out : t.outputs) {
        if (out.side != side) continue;
        if (out.bit_index < 0) return out.bits;
        y[static_cast<std::size_t>(out.bit_index)] = out.bits.at(0);
    }
    return y;
}

std::string serial(const Transcript& t) {
    std::ostringstream os;
    serialize_transcript(os, t);
    return os.str();
}

}  // namespace

TEST_CASE("single-bit run outputs the chosen password") {
    const auto t = run_honest(slab(1), Bits{0}, Bits{1}, 1, 42);
    CHECK(output_on_side(t, 1, 1) == Bits{1});
    CHECK(validate_transcript(t).ok);
}

TEST_CASE("exhaustive correctness at n = 4") {
    const auto g = slab(4);
    std::uint64_t seed = 7;
    for (unsigned x0 = 0; x0 < 16; ++x0)
        for (unsigned x1 = 0; x1 < 16; ++x1)
            for (int b = 0; b < 2; ++b) {
                const auto t =
                    run_honest(g, from_int(x0, 4), from_int(x1, 4), b, seed++);
                CHECK(output_on_side(t, b, 4) == from_int(b == 0 ? x0 : x1, 4));
            }
}

TEST_CASE("pad identity with pinned secrets") {
    const Bits x0{1, 0, 1}, x1{0, 0, 1};
    PinnedSecrets pinned{Bits{1, 1, 0}, Bits{0, 1, 0}};
    const auto t = run_honest(slab(3), x0, x1, 0, 5, pinned);
    CHECK(t.inputs.r == pinned.r);
    CHECK(t.inputs.s == pinned.s);
    // the message from A_i to B_i carries s then t_i = r xor x_i
    for (int i = 0; i < 2; ++i) {
        const AgentId from = (i == 0) ? AgentId::A0 : AgentId::A1;
        bool found = false;
        for (const auto& m : t.messages) {
            if (m.sender != from || m.kind != PayloadKind::ClassicalBits) continue;
            REQUIRE(m.bits.size() == 6);
            for (int j = 0; j < 3; ++j) {
                CHECK(m.bits[static_cast<std::size_t>(j)] == pinned.s[static_cast<std::size_t>(j)]);
                const auto& xi = (i == 0) ? x0 : x1;
                CHECK(m.bits[static_cast<std::size_t>(3 + j)] ==
                      (pinned.r[static_cast<std::size_t>(j)] ^ xi[static_cast<std::size_t>(j)]));
            }
            found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("per-bit variant outputs at the per-bit points") {
    ProtocolGeometry g;
    g.variant = GeometryVariant::PerBitPoints;
    g.h = 1.0;
    g.delta = 0.1;
    g.n = 5;
    const Bits x0 = random_bits(5, 1), x1 = random_bits(5, 2);
    const auto t = run_honest(g, x0, x1, 1, 9);
    CHECK(t.outputs.size() == 5);
    for (const auto& out : t.outputs) {
        const auto q = g.point_q_ij(1, out.bit_index);
        CHECK(out.event.t == doctest::Approx(q.t));
        CHECK(out.event.x == doctest::Approx(q.x));
    }
    CHECK(output_on_side(t, 1, 5) == x1);
    CHECK(validate_transcript(t).ok);
}

TEST_CASE("validation flags tampering") {
    auto t = run_honest(slab(2), Bits{0, 1}, Bits{1, 1}, 0, 3);
    REQUIRE(validate_transcript(t).ok);

    auto superluminal = t;
    for (auto& m : superluminal.messages)
        if (m.sender == AgentId::A && m.receiver == AgentId::A1) m.receive_event.t = 0.2;
    const auto r1 = validate_transcript(superluminal);
    CHECK_FALSE(r1.ok);

    auto displaced = t;
    for (auto& out : displaced.outputs) out.event = {0.5, -1.0, 0, 0};
    const auto r2 = validate_transcript(displaced);
    CHECK_FALSE(r2.ok);
}

TEST_CASE("noiseless noisy run equals the honest run") {
    const Bits x0 = random_bits(4, 3), x1 = random_bits(4, 4);
    const auto a = run_honest(slab(4), x0, x1, 1, 77);
    const auto b = run_noisy_honest(slab(4), x0, x1, 1, 0.0, 77);
    CHECK(serial(a) == serial(b));
}

TEST_CASE("noise statistics at gamma = 0.015") {
    const int n = 1000, trials = 1000;
    const auto g = slab(n);
    const Bits x0 = random_bits(n, 5), x1 = random_bits(n, 6);
    double total = 0;
    for (int trial = 0; trial < trials; ++trial) {
        const auto t =
            run_noisy_honest(g, x0, x1, 0, 0.015, 1000 + static_cast<std::uint64_t>(trial));
        total += hamming_distance(output_on_side(t, 0, n), x0);
    }
    const double mean = total / trials;
    const double sigma = std::sqrt(n * 0.015 * 0.985 / trials);
    CHECK(std::abs(mean - 15.0) <= 4 * sigma);
}

TEST_CASE("noisy acceptance rule") {
    const Bits x{1, 0, 1, 1, 0, 0, 1, 0, 1, 0};
    Bits y = x;
    CHECK(accept_noisy(y, x, 0.1));
    y[3] ^= 1;
    CHECK(accept_noisy(y, x, 0.1));  // 1 <= 0.1 * 10
    y[7] ^= 1;
    CHECK_FALSE(accept_noisy(y, x, 0.1));
}

TEST_CASE("Alice receives nothing from Bob") {
    const auto t = run_honest(slab(3), random_bits(3, 8), random_bits(3, 9), 1, 12);
    for (const auto& m : t.messages)
        CHECK_FALSE((is_alice(m.receiver) && !is_alice(m.sender)));
}

TEST_CASE("transcripts are deterministic per seed") {
    const Bits x0 = random_bits(5, 10), x1 = random_bits(5, 11);
    const auto a = run_honest(slab(5), x0, x1, 0, 123);
    const auto b = run_honest(slab(5), x0, x1, 0, 123);
    const auto c = run_honest(slab(5), x0, x1, 0, 124);
    CHECK(serial(a) == serial(b));
    CHECK(serial(a) != serial(c));
}

TEST_CASE("honest transcripts validate over random geometries") {
    scot::qsim::Rng rng(13);
    for (int i = 0; i < 25; ++i) {
        ProtocolGeometry g;
        g.h = 0.5 + rng.uniform() * 2.0;
        g.v = rng.uniform() * (2.0 * g.h / 3.0) * 0.95 + 1e-3;
        g.n = 1 + static_cast<int>(rng.uniform() * 5);
        if (!scot::spacetime::validate_geometry(g).ok) continue;
        const Bits x0 = random_bits(g.n, 20 + static_cast<std::uint64_t>(i));
        const Bits x1 = random_bits(g.n, 40 + static_cast<std::uint64_t>(i));
        const auto t = run_honest(g, x0, x1, i % 2, 300 + static_cast<std::uint64_t>(i));
        CHECK(validate_transcript(t).ok);
    }
}

TEST_CASE("serialization field order") {
    const auto t = run_honest(slab(2), Bits{1, 0}, Bits{0, 1}, 0, 2);
    std::istringstream is(serial(t));
    std::string line;
    int message_lines = 0;
    while (std::getline(is, line)) {
        if (line.rfind("quantum ", 0) == 0 || line.rfind("classical ", 0) == 0) {
            std::istringstream fields(line);
            std::string kind, from, to, payload;
            double ts, xs, tr, xr;
            fields >> kind >> from >> to >> ts >> xs >> tr >> xr >> payload;
            CHECK_FALSE(fields.fail());
            CHECK(tr >= ts);
            ++message_lines;
        }
    }
    CHECK(message_lines == static_cast<int>(t.messages.size()));
}

TEST_CASE("input validation errors") {
    CHECK_THROWS_AS((void)run_honest(slab(2), Bits{1}, Bits{0, 1}, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)run_honest(slab(2), Bits{1, 0}, Bits{0, 1}, 2, 1),
                    std::invalid_argument);
    ProtocolGeometry bad = slab(2, 1.0, 1.0);  // v >= 2h/3
    CHECK_THROWS_AS((void)run_honest(bad, Bits{1, 0}, Bits{0, 1}, 0, 1), std::invalid_argument);
}
