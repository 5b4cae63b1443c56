#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "scot/qsim.hpp"

using namespace scot::qsim;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kAdvantage = 0.5 + 0.5 * kInvSqrt2;  // cos^2(pi/8)
}  // namespace

TEST_CASE("transmitted state amplitudes") {
    const auto s00 = bb84_state(0, 0);
    CHECK(std::abs(s00.amplitudes[0] - cplx{1, 0}) < kScalarTol);
    CHECK(std::abs(s00.amplitudes[1]) < kScalarTol);
    const auto s11 = bb84_state(1, 1);
    CHECK(std::abs(s11.amplitudes[0] - cplx{kInvSqrt2, 0}) < kScalarTol);
    CHECK(std::abs(s11.amplitudes[1] - cplx{-kInvSqrt2, 0}) < kScalarTol);
    CHECK(std::abs(inner_product(bb84_state(0, 0), bb84_state(0, 1)) - cplx{kInvSqrt2, 0}) <
          kScalarTol);
}

TEST_CASE("basis states") {
    const auto [w0, w1] = basis_states(Basis::Breidbart);
    const double c = std::cos(std::numbers::pi / 8), s = std::sin(std::numbers::pi / 8);
    CHECK(std::abs(w0.amplitudes[0] - cplx{c, 0}) < kScalarTol);
    CHECK(std::abs(w0.amplitudes[1] - cplx{s, 0}) < kScalarTol);
    CHECK(std::abs(w1.amplitudes[0] - cplx{-s, 0}) < kScalarTol);
    CHECK(std::abs(w1.amplitudes[1] - cplx{c, 0}) < kScalarTol);
    CHECK(std::abs(inner_product(w0, w1)) < kScalarTol);
    const auto [e0, e1] = basis_states(Basis::Computational);
    CHECK(std::abs(e0.amplitudes[0] - cplx{1, 0}) < kScalarTol);
    CHECK(std::abs(e1.amplitudes[1] - cplx{1, 0}) < kScalarTol);
    for (auto b : {Basis::Computational, Basis::Hadamard, Basis::Breidbart}) {
        const auto [u0, u1] = basis_states(b);
        CHECK(u0.norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(u1.norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(inner_product(u0, u1)) < kScalarTol);
    }
}

TEST_CASE("born probabilities") {
    CHECK(born_probability(bb84_state(0, 1), 0, Basis::Hadamard, 0) == doctest::Approx(1.0));
    CHECK(born_probability(bb84_state(1, 0), 0, Basis::Computational, 1) == doctest::Approx(1.0));
    CHECK(born_probability(bb84_state(0, 0), 0, Basis::Hadamard, 0) == doctest::Approx(0.5));
    CHECK(born_probability(bb84_state(0, 0), 0, Basis::Breidbart, 0) ==
          doctest::Approx(kAdvantage).epsilon(1e-12));
    // the intermediate basis favors r uniformly over all four states
    for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) {
            CHECK(born_probability(bb84_state(r, s), 0, Basis::Breidbart, r) ==
                  doctest::Approx(kAdvantage).epsilon(1e-12));
            // honest decoding: measuring in the sent basis recovers r exactly
            const auto sent = (s == 0) ? Basis::Computational : Basis::Hadamard;
            CHECK(born_probability(bb84_state(r, s), 0, sent, r) == doctest::Approx(1.0));
            double total = 0;
            for (int o = 0; o < 2; ++o) total += born_probability(bb84_state(r, s), 0, sent, o);
            CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        }
}

TEST_CASE("unitary application") {
    Matrix h(2);
    h.at(0, 0) = kInvSqrt2;
    h.at(0, 1) = kInvSqrt2;
    h.at(1, 0) = kInvSqrt2;
    h.at(1, 1) = -kInvSqrt2;
    const auto plus = apply_unitary(bb84_state(0, 0), h, {0});
    CHECK(std::abs(plus.amplitudes[0] - cplx{kInvSqrt2, 0}) < kScalarTol);
    CHECK(std::abs(plus.amplitudes[1] - cplx{kInvSqrt2, 0}) < kScalarTol);
    const auto same = apply_unitary(plus, Matrix::identity(2), {0});
    CHECK(std::abs(same.amplitudes[0] - plus.amplitudes[0]) < kScalarTol);

    // norm preserved by a random unitary built by orthonormalization
    Rng rng(31);
    Matrix m(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = cplx{rng.uniform() - 0.5, rng.uniform() - 0.5};
    for (int col = 0; col < 4; ++col) {  // Gram-Schmidt over columns
        for (int prev = 0; prev < col; ++prev) {
            cplx dot{0, 0};
            for (int i = 0; i < 4; ++i) dot += std::conj(m.at(i, prev)) * m.at(i, col);
            for (int i = 0; i < 4; ++i) m.at(i, col) -= dot * m.at(i, prev);
        }
        double norm = 0;
        for (int i = 0; i < 4; ++i) norm += std::norm(m.at(i, col));
        norm = std::sqrt(norm);
        for (int i = 0; i < 4; ++i) m.at(i, col) /= norm;
    }
    REQUIRE(m.is_unitary(kMatrixTol));
    StateVector state = tensor(bb84_state(0, 1), bb84_state(1, 0));
    state = apply_unitary(state, m, {0, 1});
    CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-10));

    Matrix not_unitary(2);
    not_unitary.at(0, 0) = 2.0;
    not_unitary.at(1, 1) = 1.0;
    CHECK_THROWS_AS((void)apply_unitary(plus, not_unitary, {0}), std::invalid_argument);
}

TEST_CASE("entangled pair steering") {
    const auto bell = bell_phi_plus();
    CHECK(std::abs(bell.amplitudes[0] - cplx{kInvSqrt2, 0}) < kScalarTol);
    CHECK(std::abs(bell.amplitudes[3] - cplx{kInvSqrt2, 0}) < kScalarTol);
    CHECK(std::abs(bell.amplitudes[1]) < kScalarTol);
    for (int s = 0; s < 2; ++s) {
        const auto basis = (s == 0) ? Basis::Computational : Basis::Hadamard;
        for (int r = 0; r < 2; ++r) {
            // project qubit 0 on outcome r and compare qubit 1 with the sent state
            const auto proj = basis_projector(basis, r);
            auto post = apply_matrix(bell, proj, {0});
            const double p = post.norm() * post.norm();
            CHECK(p == doctest::Approx(0.5).epsilon(1e-12));
            for (auto& amp : post.amplitudes) amp /= std::sqrt(p);
            // post must equal |outcome state on qubit 0> x |psi_r^s on qubit 1|
            const auto target =
                tensor((r == 0) ? basis_states(basis).first : basis_states(basis).second,
                       bb84_state(r, s));
            CHECK(std::abs(inner_product(target, post)) == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("tensor products") {
    const auto t = tensor(bb84_state(0, 0), bb84_state(1, 0));  // (1,0) x (0,1)
    CHECK(std::abs(t.amplitudes[2] - cplx{1, 0}) < kScalarTol);  // qubit0 low bit: index 10b
    CHECK(std::abs(t.amplitudes[0]) < kScalarTol);
    CHECK(t.norm() == doctest::Approx(1.0).epsilon(1e-12));
    const auto u = tensor(bb84_state(0, 1), bb84_state(1, 1));
    CHECK(u.qubit_count == 2);
    for (int i = 0; i < 4; ++i) {
        const cplx direct = bb84_state(0, 1).amplitudes[i & 1] * bb84_state(1, 1).amplitudes[i >> 1];
        CHECK(std::abs(u.amplitudes[i] - direct) < kScalarTol);
    }
}

TEST_CASE("measurement sampling matches exact probabilities") {
    Rng rng(32);
    const long trials = 100000;
    const auto state = bb84_state(0, 0);
    const double p = born_probability(state, 0, Basis::Breidbart, 0);
    long hits = 0;
    for (long i = 0; i < trials; ++i)
        if (measure(state, 0, Basis::Breidbart, rng).first == 0) ++hits;
    const double freq = static_cast<double>(hits) / trials;
    const double sigma = std::sqrt(p * (1 - p) / trials);
    CHECK(std::abs(freq - p) <= 4 * sigma);
}

TEST_CASE("measurement determinism per seed") {
    const auto state = tensor(bb84_state(0, 1), bb84_state(1, 1));
    Rng a(33), b(33);
    for (int i = 0; i < 200; ++i)
        CHECK(measure(state, i % 2, Basis::Breidbart, a).first ==
              measure(state, i % 2, Basis::Breidbart, b).first);
}

TEST_CASE("projector measurement completeness is enforced") {
    const auto state = bb84_state(0, 1);
    Rng rng(34);
    std::vector<Matrix> incomplete{basis_projector(Basis::Computational, 0)};
    CHECK_THROWS_AS((void)measure_projectors(state, incomplete, {0}, rng), std::invalid_argument);
    std::vector<Matrix> complete{basis_projector(Basis::Computational, 0),
                                 basis_projector(Basis::Computational, 1)};
    const auto [outcome, post] = measure_projectors(state, complete, {0}, rng);
    CHECK((outcome == 0 || outcome == 1));
    CHECK(post.norm() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("amplitude dump format") {
    const auto text = dump_amplitudes(bb84_state(1, 1));
    CHECK(text.find(",") != std::string::npos);
    int lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    CHECK(lines == 2);
}
