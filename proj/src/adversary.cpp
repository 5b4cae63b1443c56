#include "scot/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "scot/bounds.hpp"

namespace scot::adversary {

using protocol::AgentId;
using protocol::Channel;
using protocol::Message;
using protocol::OutputRecord;
using protocol::PayloadKind;
using protocol::Transcript;
using qsim::Basis;
using qsim::Matrix;
using qsim::StateVector;
using spacetime::Event;
using spacetime::GeometryVariant;

namespace {

Basis bb84_basis(int s) { return s == 0 ? Basis::Computational : Basis::Hadamard; }

std::array<Matrix, 2> basis_pair(Basis b) {
    return {qsim::basis_projector(b, 0), qsim::basis_projector(b, 1)};
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void check_bipartition(const std::vector<int>& share0, const std::vector<int>& share1,
                       int total) {
    std::vector<bool> seen(static_cast<std::size_t>(total), false);
    for (const auto* share : {&share0, &share1}) {
        for (int q : *share) {
            if (q < 0 || q >= total) throw std::invalid_argument("bipartition index out of range");
            if (seen[static_cast<std::size_t>(q)])
                throw std::invalid_argument("bipartition shares overlap");
            seen[static_cast<std::size_t>(q)] = true;
        }
    }
    for (bool s : seen)
        if (!s) throw std::invalid_argument("bipartition does not cover all qubits");
}

void check_measurement(const std::vector<const Matrix*>& projectors, int dim) {
    Matrix sum(dim);
    for (const Matrix* p : projectors) {
        if (p->dim != dim) throw std::invalid_argument("projector dimension mismatch");
        if (!p->is_projector()) throw std::invalid_argument("measurement element not a projector");
        sum = sum + *p;
    }
    if (sum.frobenius_distance(Matrix::identity(dim)) > qsim::kMatrixTol)
        throw std::invalid_argument("measurement projectors not complete");
    for (std::size_t i = 0; i < projectors.size(); ++i)
        for (std::size_t j = i + 1; j < projectors.size(); ++j)
            if ((*projectors[i] * *projectors[j]).frobenius_distance(Matrix(dim)) >
                qsim::kMatrixTol)
                throw std::invalid_argument("measurement projectors not orthogonal");
}

StateVector prepared_block_state(const ProductQubitStrategy& ps, int r, int s) {
    StateVector state = qsim::bb84_state(r, s);
    if (ps.ancilla_qubits > 0) state = qsim::tensor(state, ps.ancilla);
    std::vector<int> all(static_cast<std::size_t>(1 + ps.ancilla_qubits));
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return qsim::apply_unitary(state, ps.prepare, all);
}

}  // namespace

void validate_strategy(const Strategy& s) {
    if (s.planned_peer_messages != 0)
        throw std::invalid_argument(
            "strategy plans communication between the receiving agents after the handoff");
    if (s.product.has_value() == s.general.has_value())
        throw std::invalid_argument("strategy must be exactly one of product or general form");
    if (s.product) {
        const auto& ps = *s.product;
        const int block = 1 + ps.ancilla_qubits;
        if (ps.prepare.dim != (1 << block))
            throw std::invalid_argument("preparation unitary has wrong dimension");
        if (!ps.prepare.is_unitary())
            throw std::invalid_argument("preparation matrix is not unitary");
        if (ps.ancilla_qubits > 0 &&
            (ps.ancilla.qubit_count != ps.ancilla_qubits || !ps.ancilla.normalized()))
            throw std::invalid_argument("ancilla state invalid");
        check_bipartition(ps.share0, ps.share1, block);
        for (int i = 0; i < 2; ++i) {
            const auto& share = (i == 0) ? ps.share0 : ps.share1;
            const int dim = 1 << share.size();
            for (int sv = 0; sv < 2; ++sv)
                check_measurement({&ps.projectors[i][sv][0], &ps.projectors[i][sv][1]}, dim);
        }
    } else {
        const auto& gs = *s.general;
        const int total = gs.n + gs.ancilla_qubits;
        if (gs.n < 1) throw std::invalid_argument("general strategy requires n >= 1");
        if (gs.prepare.dim != (1 << total))
            throw std::invalid_argument("preparation unitary has wrong dimension");
        if (!gs.prepare.is_unitary())
            throw std::invalid_argument("preparation matrix is not unitary");
        check_bipartition(gs.share0, gs.share1, total);
        if (gs.projectors.size() != 2)
            throw std::invalid_argument("general strategy needs measurements for both agents");
        const std::size_t s_count = std::size_t{1} << gs.n;
        const std::size_t r_count = std::size_t{1} << gs.n;
        for (int i = 0; i < 2; ++i) {
            if (gs.projectors[i].size() != s_count)
                throw std::invalid_argument("general strategy: one measurement per s string");
            const auto& share = (i == 0) ? gs.share0 : gs.share1;
            const int dim = 1 << share.size();
            for (const auto& family : gs.projectors[i]) {
                if (family.size() != r_count)
                    throw std::invalid_argument("general strategy: one projector per outcome");
                std::vector<const Matrix*> ptrs;
                for (const auto& p : family) ptrs.push_back(&p);
                check_measurement(ptrs, dim);
            }
        }
    }
}

Strategy strategy_breidbart() {
    const double c = std::cos(std::numbers::pi / 8);
    const double sn = std::sin(std::numbers::pi / 8);
    // |j>|0> -> sum_k <w_k|j> |k>|k>: the Breidbart outcome is copied into
    // both block qubits; columns 2,3 complete the unitary on span{01,10}.
    Matrix u(4);
    u.at(0, 0) = c;
    u.at(3, 0) = -sn;
    u.at(0, 1) = sn;
    u.at(3, 1) = c;
    u.at(1, 2) = 1.0;
    u.at(2, 3) = 1.0;

    ProductQubitStrategy ps;
    ps.ancilla_qubits = 1;
    ps.prepare = u;
    ps.ancilla = StateVector::basis_state(1, 0);
    ps.share0 = {0};
    ps.share1 = {1};
    for (int i = 0; i < 2; ++i)
        for (int sv = 0; sv < 2; ++sv) {
            auto pair = basis_pair(Basis::Computational);
            ps.projectors[i][sv][0] = pair[0];
            ps.projectors[i][sv][1] = pair[1];
        }
    Strategy s{"breidbart", std::move(ps), std::nullopt, 0};
    validate_strategy(s);
    return s;
}

Strategy strategy_random_guess(int b) {
    if (b != 0 && b != 1) throw std::invalid_argument("b must be a bit");
    const double inv = 1.0 / std::numbers::sqrt2;

    ProductQubitStrategy ps;
    ps.ancilla_qubits = 1;
    ps.prepare = Matrix::identity(4);
    ps.ancilla = StateVector(1, {inv, inv});  // |+>: uniform guess when measured
    if (b == 0) {
        ps.share0 = {0};
        ps.share1 = {1};
    } else {
        ps.share0 = {1};
        ps.share1 = {0};
    }
    for (int sv = 0; sv < 2; ++sv) {
        auto honest = basis_pair(bb84_basis(sv));
        auto guess = basis_pair(Basis::Computational);
        ps.projectors[b][sv][0] = honest[0];
        ps.projectors[b][sv][1] = honest[1];
        ps.projectors[1 - b][sv][0] = guess[0];
        ps.projectors[1 - b][sv][1] = guess[1];
    }
    Strategy s{"random-guess", std::move(ps), std::nullopt, 0};
    validate_strategy(s);
    return s;
}

Strategy strategy_cloning() {
    // Cloner covariant on the great circle that carries the BB84 states,
    // obtained by conjugating the equatorial cloner with V = exp(-i pi X / 4),
    // which maps the equator onto the BB84 plane.
    const double inv = 1.0 / std::numbers::sqrt2;
    Matrix u_eq(4);
    u_eq.at(0, 0) = 1.0;                      // |00> -> |00>
    u_eq.at(1, 1) = inv;                      // |10> -> (|10>+|01>)/sqrt(2)
    u_eq.at(2, 1) = inv;
    u_eq.at(1, 2) = inv;                      // completes the unitary
    u_eq.at(2, 2) = -inv;
    u_eq.at(3, 3) = 1.0;

    Matrix v(2);
    v.at(0, 0) = inv;
    v.at(0, 1) = qsim::cplx{0, -inv};
    v.at(1, 0) = qsim::cplx{0, -inv};
    v.at(1, 1) = inv;

    Matrix vv = qsim::kron(v, v);
    Matrix vdag_i = qsim::kron(Matrix::identity(2), v.adjoint());
    // blank qubit untouched before cloning; v acts on the input qubit only
    Matrix u = vv * u_eq * vdag_i;

    ProductQubitStrategy ps;
    ps.ancilla_qubits = 1;
    ps.prepare = u;
    ps.ancilla = StateVector::basis_state(1, 0);
    ps.share0 = {0};
    ps.share1 = {1};
    for (int i = 0; i < 2; ++i)
        for (int sv = 0; sv < 2; ++sv) {
            auto pair = basis_pair(bb84_basis(sv));
            ps.projectors[i][sv][0] = pair[0];
            ps.projectors[i][sv][1] = pair[1];
        }
    Strategy s{"cloning", std::move(ps), std::nullopt, 0};
    validate_strategy(s);

    // Contract: every BB84 input yields the correct bit on each clone with
    // probability 1/2 + 1/(2*sqrt(2)).
    const double expect = 0.5 + 0.5 / std::numbers::sqrt2;
    for (int r = 0; r < 2; ++r)
        for (int sv = 0; sv < 2; ++sv) {
            const StateVector psi = prepared_block_state(*s.product, r, sv);
            for (int clone = 0; clone < 2; ++clone) {
                const double p =
                    qsim::expectation(psi, qsim::basis_projector(bb84_basis(sv), r), {clone});
                if (std::abs(p - expect) > 1e-9)
                    throw std::runtime_error("cloning fidelity check failed");
            }
        }
    return s;
}

std::string AttackResult::csv_header() {
    return "strategy,n,mode,p_n,q0,q1,trials,stderr,bound,ok";
}

std::string AttackResult::csv_row() const {
    std::ostringstream os;
    os << strategy << "," << n << "," << mode << "," << fmt_double(p_n) << "," << fmt_double(q0)
       << "," << fmt_double(q1) << "," << trials << "," << fmt_double(std_error) << ","
       << fmt_double(bound) << "," << (bound_ok ? "1" : "0");
    return os.str();
}

std::string AttackResult::to_json() const {
    std::ostringstream os;
    os << "{\"strategy\":\"" << strategy << "\",\"n\":" << n << ",\"mode\":\"" << mode
       << "\",\"p_n\":" << fmt_double(p_n) << ",\"q0\":" << fmt_double(q0)
       << ",\"q1\":" << fmt_double(q1) << ",\"trials\":" << trials
       << ",\"stderr\":" << fmt_double(std_error) << ",\"bound\":" << fmt_double(bound)
       << ",\"ok\":" << (bound_ok ? "true" : "false") << "}";
    return os.str();
}

AttackResult evaluate_exact(const Strategy& s, int n) {
    validate_strategy(s);
    if (!s.is_product())
        throw std::invalid_argument("exact evaluation requires a product strategy");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    const auto& ps = *s.product;

    double joint = 0, p0 = 0, p1 = 0;
    for (int r = 0; r < 2; ++r) {
        for (int sv = 0; sv < 2; ++sv) {
            const StateVector psi = prepared_block_state(ps, r, sv);
            const Matrix& pi0 = ps.projectors[0][sv][r];
            const Matrix& pi1 = ps.projectors[1][sv][r];
            const StateVector after0 = qsim::apply_matrix(psi, pi0, ps.share0);
            const StateVector after01 = qsim::apply_matrix(after0, pi1, ps.share1);
            joint += qsim::inner_product(psi, after01).real();
            p0 += qsim::expectation(psi, pi0, ps.share0);
            p1 += qsim::expectation(psi, pi1, ps.share1);
        }
    }
    joint /= 4;
    p0 /= 4;
    p1 /= 4;

    AttackResult res;
    res.strategy = s.name;
    res.n = n;
    res.mode = "exact";
    res.p_n = std::pow(joint, n);
    res.q0 = std::pow(p0, n);
    res.q1 = std::pow(p1, n);
    res.bound = bounds::p_bar(n);
    res.bound_ok = res.p_n <= res.bound + 1e-12;
    return res;
}

Transcript cheat_transcript_template(const Strategy& s, const ProtocolGeometry& geometry, int n,
                                     std::uint64_t seed) {
    validate_strategy(s);
    Transcript t;
    t.geometry = geometry;
    t.geometry.n = n;
    t.seed = seed;
    t.inputs.x0 = protocol::random_bits(n, seed);
    t.inputs.x1 = protocol::random_bits(n, seed ^ 0x1);
    t.inputs.b = 0;
    t.inputs.r = protocol::random_bits(n, seed ^ 0x2);
    t.inputs.s = protocol::random_bits(n, seed ^ 0x3);
    const bool per_bit = geometry.variant == GeometryVariant::PerBitPoints;
    if (per_bit && !s.is_product())
        throw std::invalid_argument("per-bit geometry admits only per-qubit strategies");
    if (!per_bit) t.regions = {geometry.region(0), geometry.region(1)};

    const int anc = s.is_product() ? s.product->ancilla_qubits : s.general->ancilla_qubits;
    auto block_handle = [&](int j, int block_qubit) {
        // block qubit 0 is A_j (handle j); ancilla qubits get fresh handles
        return block_qubit == 0 ? j : n + j * anc + (block_qubit - 1);
    };

    for (int j = 0; j < n; ++j) {
        const Event pj = per_bit ? geometry.point_p_j(j) : geometry.point_p();
        const Event q0j = per_bit ? geometry.point_q_ij(0, j) : geometry.point_q(0);
        const Event q1j = per_bit ? geometry.point_q_ij(1, j) : geometry.point_q(1);
        t.messages.push_back(Message{AgentId::A, AgentId::B, pj, pj, Channel::CrossParty,
                                     PayloadKind::QuantumHandle, {}, j});
        if (s.is_product()) {
            for (int q : s.product->share0)
                t.messages.push_back(Message{AgentId::B, AgentId::B0, pj, q0j,
                                             Channel::BobQuantum, PayloadKind::QuantumHandle,
                                             {}, block_handle(j, q)});
            for (int q : s.product->share1)
                t.messages.push_back(Message{AgentId::B, AgentId::B1, pj, q1j,
                                             Channel::BobQuantum, PayloadKind::QuantumHandle,
                                             {}, block_handle(j, q)});
        }
    }
    if (!s.is_product()) {
        const Event p = geometry.point_p();
        for (int q : s.general->share0)
            t.messages.push_back(Message{AgentId::B, AgentId::B0, p, geometry.point_q(0),
                                         Channel::BobQuantum, PayloadKind::QuantumHandle, {}, q});
        for (int q : s.general->share1)
            t.messages.push_back(Message{AgentId::B, AgentId::B1, p, geometry.point_q(1),
                                         Channel::BobQuantum, PayloadKind::QuantumHandle, {}, q});
    }
    // Alice's classical legs and the cross-party handoffs, as in the honest run.
    for (int i = 0; i < 2; ++i) {
        const AgentId ai = (i == 0) ? AgentId::A0 : AgentId::A1;
        const AgentId bi = (i == 0) ? AgentId::B0 : AgentId::B1;
        if (per_bit) {
            for (int j = 0; j < n; ++j) {
                const Event pj = geometry.point_p_j(j);
                const Event qij = geometry.point_q_ij(i, j);
                t.messages.push_back(Message{AgentId::A, ai, pj, qij, Channel::AliceClassical,
                                             PayloadKind::ClassicalBits, Bits{0, 0}, -1});
                t.messages.push_back(Message{ai, bi, qij, qij, Channel::CrossParty,
                                             PayloadKind::ClassicalBits, Bits{0, 0}, -1});
            }
        } else {
            const Event p = geometry.point_p();
            const Event qi = geometry.point_q(i);
            Bits payload(static_cast<std::size_t>(2 * n), 0);
            t.messages.push_back(Message{AgentId::A, ai, p, qi, Channel::AliceClassical,
                                         PayloadKind::ClassicalBits, payload, -1});
            t.messages.push_back(Message{ai, bi, qi, qi, Channel::CrossParty,
                                         PayloadKind::ClassicalBits, payload, -1});
        }
    }
    for (int i = 0; i < 2; ++i) {
        const AgentId bi = (i == 0) ? AgentId::B0 : AgentId::B1;
        if (per_bit) {
            for (int j = 0; j < n; ++j)
                t.outputs.push_back(
                    OutputRecord{bi, geometry.point_q_ij(i, j), Bits{0}, i, j});
        } else {
            t.outputs.push_back(OutputRecord{bi, geometry.point_q(i),
                                             Bits(static_cast<std::size_t>(n), 0), i, -1});
        }
    }
    return t;
}

AttackResult evaluate_monte_carlo(const Strategy& s, const ProtocolGeometry& geometry, int n,
                                  const MonteCarloOptions& options) {
    validate_strategy(s);
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (options.trials < 1) throw std::invalid_argument("trials must be at least 1");
    const auto geo_report = spacetime::validate_geometry(geometry);
    if (!geo_report.ok)
        throw std::invalid_argument("invalid geometry: " + geo_report.issues.front());

    if (s.is_product()) {
        if (1 + s.product->ancilla_qubits > options.qubit_budget)
            throw std::invalid_argument("strategy exceeds the qubit budget");
    } else {
        if (s.general->n != n)
            throw std::invalid_argument("general strategy was built for a different n");
        if (n + s.general->ancilla_qubits > options.qubit_budget)
            throw std::invalid_argument("strategy exceeds the qubit budget");
        if (geometry.variant == GeometryVariant::PerBitPoints)
            throw std::invalid_argument("per-bit geometry admits only per-qubit strategies");
    }

    // The causal message plan does not vary across trials; validate it once
    // unless per-trial validation was requested.
    {
        const Transcript tmpl = cheat_transcript_template(s, geometry, n, options.seed);
        const auto tr = validate_transcript(tmpl);
        if (!tr.ok)
            throw std::invalid_argument("strategy message plan fails causal validation: " +
                                        tr.issues.front());
    }

    qsim::Rng root(options.seed);
    long successes = 0;
    long q0_hits = 0, q1_hits = 0;
    for (long trial = 0; trial < options.trials; ++trial) {
        qsim::Rng rng = root.split(static_cast<std::uint64_t>(trial));
        Bits x0(static_cast<std::size_t>(n)), x1(static_cast<std::size_t>(n));
        Bits r(static_cast<std::size_t>(n)), sv(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            x0[j] = static_cast<std::uint8_t>(rng.bit());
            x1[j] = static_cast<std::uint8_t>(rng.bit());
            r[j] = static_cast<std::uint8_t>(rng.bit());
            sv[j] = static_cast<std::uint8_t>(rng.bit());
        }
        Bits r0(static_cast<std::size_t>(n)), r1(static_cast<std::size_t>(n));
        if (s.is_product()) {
            const auto& ps = *s.product;
            for (int j = 0; j < n; ++j) {
                const StateVector psi = prepared_block_state(ps, r[j], sv[j]);
                auto [o0, post] = qsim::measure_projectors(
                    psi, {ps.projectors[0][sv[j]][0], ps.projectors[0][sv[j]][1]}, ps.share0,
                    rng);
                auto [o1, post2] = qsim::measure_projectors(
                    post, {ps.projectors[1][sv[j]][0], ps.projectors[1][sv[j]][1]}, ps.share1,
                    rng);
                (void)post2;
                r0[j] = static_cast<std::uint8_t>(o0);
                r1[j] = static_cast<std::uint8_t>(o1);
            }
        } else {
            const auto& gs = *s.general;
            StateVector state = qsim::bb84_state(r[0], sv[0]);
            for (int j = 1; j < n; ++j) state = qsim::tensor(state, qsim::bb84_state(r[j], sv[j]));
            if (gs.ancilla_qubits > 0) state = qsim::tensor(state, gs.ancilla);
            std::vector<int> all(static_cast<std::size_t>(n + gs.ancilla_qubits));
            for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
            state = qsim::apply_unitary(state, gs.prepare, all);
            std::size_t s_index = 0;
            for (int j = 0; j < n; ++j) s_index |= (static_cast<std::size_t>(sv[j]) << j);
            auto [o0, post] =
                qsim::measure_projectors(state, gs.projectors[0][s_index], gs.share0, rng);
            auto [o1, post2] =
                qsim::measure_projectors(post, gs.projectors[1][s_index], gs.share1, rng);
            (void)post2;
            for (int j = 0; j < n; ++j) {
                r0[j] = static_cast<std::uint8_t>((o0 >> j) & 1);
                r1[j] = static_cast<std::uint8_t>((o1 >> j) & 1);
            }
        }
        // y_i = r_i xor t_i with t_i = r xor x_i
        Bits y0(static_cast<std::size_t>(n)), y1(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            y0[j] = static_cast<std::uint8_t>(r0[j] ^ r[j] ^ x0[j]);
            y1[j] = static_cast<std::uint8_t>(r1[j] ^ r[j] ^ x1[j]);
        }
        bool ok0, ok1;
        if (options.noisy_gamma) {
            ok0 = protocol::accept_noisy(y0, x0, *options.noisy_gamma);
            ok1 = protocol::accept_noisy(y1, x1, *options.noisy_gamma);
        } else {
            ok0 = (y0 == x0);
            ok1 = (y1 == x1);
        }
        if (ok0) ++q0_hits;
        if (ok1) ++q1_hits;
        if (ok0 && ok1) ++successes;

        if (options.validate_every_trial) {
            Transcript tr = cheat_transcript_template(s, geometry, n, options.seed);
            tr.inputs.x0 = x0;
            tr.inputs.x1 = x1;
            tr.inputs.r = r;
            tr.inputs.s = sv;
            tr.outputs[0].bits = y0;
            tr.outputs[1].bits = y1;
            const auto rep = validate_transcript(tr);
            if (!rep.ok) throw std::runtime_error("trial transcript failed causal validation");
        }
    }

    AttackResult res;
    res.strategy = s.name;
    res.n = n;
    res.mode = "monte_carlo";
    res.trials = options.trials;
    res.p_n = static_cast<double>(successes) / static_cast<double>(options.trials);
    res.q0 = static_cast<double>(q0_hits) / static_cast<double>(options.trials);
    res.q1 = static_cast<double>(q1_hits) / static_cast<double>(options.trials);
    res.std_error = std::sqrt(std::max(res.p_n * (1.0 - res.p_n), 1e-12) /
                              static_cast<double>(options.trials));
    res.bound = bounds::p_bar(n);
    res.bound_ok = res.p_n <= res.bound + 4.0 * res.std_error;
    return res;
}

TimelikeDemoResult timelike_relay_demo(const ProtocolGeometry& geometry, const Bits& x0,
                                       const Bits& x1, std::uint64_t seed, bool relax_r1) {
    if (geometry.variant != GeometryVariant::MainSlab)
        throw std::invalid_argument("timelike relay demo uses the main geometry");

    Transcript t = protocol::run_honest(geometry, x0, x1, 0, seed);
    const Bits& r = t.inputs.r;
    Bits t1(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) t1[j] = r[j] ^ x1[j];

    const Event q0 = geometry.point_q(0);
    const Event q1 = geometry.point_q(1);
    const Event qbar = spacetime::earliest_common_future(q0, q1);

    // B_0 relays r, B_1 relays t_1; both arrive at B exactly at Qbar (t = 2h).
    t.messages.push_back(Message{AgentId::B0, AgentId::B, q0, qbar, Channel::BobQuantum,
                                 PayloadKind::ClassicalBits, r, -1});
    t.messages.push_back(Message{AgentId::B1, AgentId::B, q1, qbar, Channel::BobQuantum,
                                 PayloadKind::ClassicalBits, t1, -1});
    Bits y1(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) y1[j] = r[j] ^ t1[j];
    t.outputs.push_back(OutputRecord{AgentId::B, qbar, y1, 1, -1});

    if (relax_r1) t.regions[1] = spacetime::OutputRegion::relaxed(1, qbar, geometry.v);

    TimelikeDemoResult result;
    result.success = (t.outputs[0].bits == x0) && (y1 == x1);
    result.validation = protocol::validate_transcript(t);
    result.transcript = std::move(t);
    return result;
}

}  // namespace scot::adversary
