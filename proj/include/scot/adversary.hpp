#ifndef SCOT_ADVERSARY_HPP
#define SCOT_ADVERSARY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scot/protocol.hpp"
#include "scot/qsim.hpp"
#include "scot/spacetime.hpp"

// Cheating-Bob framework. A strategy is a preparation unitary acting on the
// transmitted qubit(s) and an ancilla, a bipartition of the resulting system
// between the two receiving agents, and per-basis projective measurements.
// Measurements may depend on the published basis string s but never on t_i.

namespace scot::adversary {

using protocol::Bits;
using spacetime::ProtocolGeometry;

// Product (per-qubit) strategy: the same single-qubit block is applied to
// every transmitted qubit independently. Qubit 0 of the block is A_j; the
// ancilla occupies the higher block qubits.
struct ProductQubitStrategy {
    int ancilla_qubits = 0;
    qsim::Matrix prepare;          // unitary on 1 + ancilla_qubits qubits
    qsim::StateVector ancilla;     // |chi>, ancilla_qubits qubits (empty if none)
    std::vector<int> share0;       // block qubit indices held by agent B_0
    std::vector<int> share1;       // held by agent B_1
    // projectors[i][s][r] acts on share_i (dimension 2^|share_i|)
    std::array<std::array<std::array<qsim::Matrix, 2>, 2>, 2> projectors;
};

// General strategy over all n transmitted qubits at once (Monte Carlo only).
// Qubits 0..n-1 are A_0..A_{n-1}; ancilla occupies n..n+ancilla_qubits-1.
struct GeneralStrategy {
    int n = 0;
    int ancilla_qubits = 0;
    qsim::Matrix prepare;       // unitary on n + ancilla_qubits qubits
    qsim::StateVector ancilla;
    std::vector<int> share0;
    std::vector<int> share1;
    // projectors for (i, s): 2^n projectors indexed by the outcome string r_i,
    // each acting on share_i. s is indexed little-endian (s_0 = low bit).
    // measurement(i, s_index) -> projector family
    std::vector<std::vector<std::vector<qsim::Matrix>>> projectors;  // [i][s_index][r_index]
};

struct Strategy {
    std::string name;
    std::optional<ProductQubitStrategy> product;
    std::optional<GeneralStrategy> general;
    // Structural message plan: strategies must not schedule any B_0 <-> B_1
    // communication after the qubit handoff; construction rejects it.
    int planned_peer_messages = 0;

    bool is_product() const { return product.has_value(); }
};

// Throws std::invalid_argument on any violated structural invariant
// (non-unitary preparation, bad bipartition, incomplete or non-orthogonal
// measurements, planned peer communication).
void validate_strategy(const Strategy& s);

// Measure in the Breidbart basis at P and broadcast the classical outcome to
// both agents; both output it regardless of s. Achieves p_n = p_bar(n).
Strategy strategy_breidbart();

// Honest on side b, uniform random guess on the other side. p_n = 2^-n.
Strategy strategy_random_guess(int b);

// 1 -> 2 symmetric cloning covariant on the BB84 plane; each agent measures
// its clone in D_s. Construction verifies that every BB84 input yields the
// correct bit on each clone with probability 1/2 + 1/(2*sqrt(2)).
Strategy strategy_cloning();

struct AttackResult {
    std::string strategy;
    int n = 0;
    std::string mode;  // "exact" or "monte_carlo"
    double p_n = 0.0;
    double q0 = 0.0;
    double q1 = 0.0;
    long trials = 0;        // 0 for exact
    double std_error = 0.0; // 0 for exact
    double bound = 0.0;     // p_bar(n)
    bool bound_ok = false;

    std::string csv_row() const;
    static std::string csv_header();
    std::string to_json() const;
};

// Exact p_n, q0, q1 for a product strategy by enumerating the four (r, s)
// pairs per qubit; string-level values are n-th powers of per-qubit values.
AttackResult evaluate_exact(const Strategy& s, int n);

struct MonteCarloOptions {
    long trials = 100000;
    std::uint64_t seed = 1;
    int qubit_budget = qsim::kDefaultQubitBudget;
    // Success under the noisy acceptance rule instead of exact equality.
    std::optional<double> noisy_gamma;
    // Validate the causal transcript of every trial (slower); the message
    // plan is identical across trials, so the default validates it once.
    bool validate_every_trial = false;
};

AttackResult evaluate_monte_carlo(const Strategy& s, const ProtocolGeometry& geometry, int n,
                                  const MonteCarloOptions& options);

// Builds the cheating run's causal message plan as a transcript (qubits to
// both agents, outputs at both Q_0 and Q_1) for validation purposes.
protocol::Transcript cheat_transcript_template(const Strategy& s,
                                               const ProtocolGeometry& geometry, int n,
                                               std::uint64_t seed);

struct TimelikeDemoResult {
    protocol::Transcript transcript;
    bool success = false;  // both strings output correctly
    spacetime::ValidationReport validation;
};

// Bob plays honestly with b = 0, outputs x_0 at Q_0, and relays r and t_1 at
// light speed to agent B at Qbar = earliest_common_future(Q_0, Q_1), where
// x_1 = r xor t_1 is output. With relax_r1 the transcript declares R_1 as a
// neighborhood of Qbar and validates; without it the same plan is rejected.
TimelikeDemoResult timelike_relay_demo(const ProtocolGeometry& geometry, const Bits& x0,
                                       const Bits& x1, std::uint64_t seed, bool relax_r1);

}  // namespace scot::adversary

#endif
