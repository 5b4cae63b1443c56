#include "scot/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "scot/qsim.hpp"

namespace scot::protocol {

using spacetime::CausalRelation;
using spacetime::GeometryVariant;
using spacetime::kLightlikeTol;

const char* to_string(AgentId a) {
    switch (a) {
        case AgentId::A: return "A";
        case AgentId::A0: return "A0";
        case AgentId::A1: return "A1";
        case AgentId::B: return "B";
        case AgentId::B0: return "B0";
        case AgentId::B1: return "B1";
    }
    return "?";
}

bool is_alice(AgentId a) {
    return a == AgentId::A || a == AgentId::A0 || a == AgentId::A1;
}

double agent_site_x(AgentId a, double h) {
    switch (a) {
        case AgentId::A:
        case AgentId::B: return 0.0;
        case AgentId::A0:
        case AgentId::B0: return -h;
        case AgentId::A1:
        case AgentId::B1: return h;
    }
    return 0.0;
}

const char* to_string(Channel c) {
    switch (c) {
        case Channel::AliceClassical: return "alice-classical";
        case Channel::BobQuantum: return "bob-quantum";
        case Channel::CrossParty: return "cross-party";
    }
    return "?";
}

Bits random_bits(int n, std::uint64_t seed_word) {
    qsim::Rng rng(seed_word);
    Bits out(static_cast<std::size_t>(n));
    for (auto& bit : out) bit = static_cast<std::uint8_t>(rng.bit());
    return out;
}

int hamming_distance(const Bits& a, const Bits& b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]) ? 1 : 0;
    return d;
}

bool accept_noisy(const Bits& y, const Bits& x, double gamma) {
    return hamming_distance(y, x) <= gamma * static_cast<double>(x.size());
}

namespace {

// Sends ordered by (time, agent id, sequence number); local processing is
// instantaneous, so ties are common.
struct PlannedSend {
    double t;
    int agent_order;
    int seq;
    Message message;
};

struct SendOrder {
    bool operator()(const PlannedSend& a, const PlannedSend& b) const {
        if (a.t != b.t) return a.t > b.t;
        if (a.agent_order != b.agent_order) return a.agent_order > b.agent_order;
        return a.seq > b.seq;
    }
};

class Scheduler {
  public:
    void plan(Message m) {
        queue_.push(PlannedSend{m.send_event.t, static_cast<int>(m.sender), seq_, std::move(m)});
        ++seq_;
    }

    std::vector<Message> drain() {
        std::vector<Message> out;
        while (!queue_.empty()) {
            out.push_back(queue_.top().message);
            queue_.pop();
        }
        return out;
    }

  private:
    std::priority_queue<PlannedSend, std::vector<PlannedSend>, SendOrder> queue_;
    int seq_ = 0;
};

Message classical_message(AgentId from, AgentId to, const Event& send, const Event& recv,
                          Channel channel, Bits bits) {
    return Message{from, to, send, recv, channel, PayloadKind::ClassicalBits, std::move(bits), -1};
}

Message quantum_message(AgentId from, AgentId to, const Event& send, const Event& recv,
                        Channel channel, int handle) {
    return Message{from, to, send, recv, channel, PayloadKind::QuantumHandle, {}, handle};
}

Bits xor_bits(const Bits& a, const Bits& b) {
    Bits out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
    return out;
}

Transcript run_honest_impl(const ProtocolGeometry& geometry, const Bits& x0, const Bits& x1,
                           int b, double gamma, std::uint64_t seed,
                           const std::optional<PinnedSecrets>& pinned) {
    const auto geo_report = spacetime::validate_geometry(geometry);
    if (!geo_report.ok)
        throw std::invalid_argument("invalid geometry: " + geo_report.issues.front());
    const int n = geometry.n;
    if (static_cast<int>(x0.size()) != n || static_cast<int>(x1.size()) != n)
        throw std::invalid_argument("input strings must have length n");
    if (b != 0 && b != 1) throw std::invalid_argument("b must be a bit");
    if (gamma < 0.0 || gamma > 0.5) throw std::invalid_argument("gamma must be in [0, 1/2]");

    qsim::Rng root(seed);
    qsim::Rng rng_alice = root.split(0);
    qsim::Rng rng_bob = root.split(3 + b);  // agent B_b's measurement stream
    qsim::Rng rng_noise = root.split(7);

    Transcript t;
    t.geometry = geometry;
    t.seed = seed;
    t.inputs.x0 = x0;
    t.inputs.x1 = x1;
    t.inputs.b = b;
    if (pinned) {
        if (static_cast<int>(pinned->r.size()) != n || static_cast<int>(pinned->s.size()) != n)
            throw std::invalid_argument("pinned secrets must have length n");
        t.inputs.r = pinned->r;
        t.inputs.s = pinned->s;
    } else {
        // generated in the past light cone of P
        t.inputs.r.resize(n);
        t.inputs.s.resize(n);
        for (int j = 0; j < n; ++j) t.inputs.r[j] = static_cast<std::uint8_t>(rng_alice.bit());
        for (int j = 0; j < n; ++j) t.inputs.s[j] = static_cast<std::uint8_t>(rng_alice.bit());
    }
    const Bits& r = t.inputs.r;
    const Bits& s = t.inputs.s;
    const Bits t0 = xor_bits(r, x0);
    const Bits t1 = xor_bits(r, x1);

    // Quantum register: handle j holds qubit A_j.
    std::vector<qsim::StateVector> reg;
    reg.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) reg.push_back(qsim::bb84_state(r[j], s[j]));

    const AgentId bob_site = (b == 0) ? AgentId::B0 : AgentId::B1;
    const bool per_bit = geometry.variant == GeometryVariant::PerBitPoints;
    Scheduler sched;

    if (!per_bit) {
        t.regions = {geometry.region(0), geometry.region(1)};
        const Event p = geometry.point_p();
        const Event q0 = geometry.point_q(0);
        const Event q1 = geometry.point_q(1);
        const Event qb = (b == 0) ? q0 : q1;

        for (int j = 0; j < n; ++j)
            sched.plan(quantum_message(AgentId::A, AgentId::B, p, p, Channel::CrossParty, j));
        Bits st0 = s;
        st0.insert(st0.end(), t0.begin(), t0.end());
        Bits st1 = s;
        st1.insert(st1.end(), t1.begin(), t1.end());
        sched.plan(classical_message(AgentId::A, AgentId::A0, p, q0, Channel::AliceClassical, st0));
        sched.plan(classical_message(AgentId::A, AgentId::A1, p, q1, Channel::AliceClassical, st1));
        for (int j = 0; j < n; ++j)
            sched.plan(quantum_message(AgentId::B, bob_site, p, qb, Channel::BobQuantum, j));
        sched.plan(classical_message(AgentId::A0, AgentId::B0, q0, q0, Channel::CrossParty, st0));
        sched.plan(classical_message(AgentId::A1, AgentId::B1, q1, q1, Channel::CrossParty, st1));
        t.messages = sched.drain();

        Bits y(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            const auto basis = (s[j] == 0) ? qsim::Basis::Computational : qsim::Basis::Hadamard;
            auto [outcome, post] = qsim::measure(reg[j], 0, basis, rng_bob);
            reg[j] = std::move(post);
            if (gamma > 0.0 && rng_noise.uniform() < gamma) outcome ^= 1;
            const Bits& tb = (b == 0) ? t0 : t1;
            y[j] = static_cast<std::uint8_t>(outcome ^ tb[j]);
        }
        t.outputs.push_back(OutputRecord{bob_site, qb, y, b, -1});
    } else {
        t.regions = {};
        for (int j = 0; j < n; ++j) {
            const Event pj = geometry.point_p_j(j);
            const Event q0j = geometry.point_q_ij(0, j);
            const Event q1j = geometry.point_q_ij(1, j);
            const Event qbj = (b == 0) ? q0j : q1j;

            sched.plan(quantum_message(AgentId::A, AgentId::B, pj, pj, Channel::CrossParty, j));
            sched.plan(classical_message(AgentId::A, AgentId::A0, pj, q0j,
                                         Channel::AliceClassical, Bits{s[j], t0[j]}));
            sched.plan(classical_message(AgentId::A, AgentId::A1, pj, q1j,
                                         Channel::AliceClassical, Bits{s[j], t1[j]}));
            sched.plan(quantum_message(AgentId::B, bob_site, pj, qbj, Channel::BobQuantum, j));
            sched.plan(classical_message(AgentId::A0, AgentId::B0, q0j, q0j, Channel::CrossParty,
                                         Bits{s[j], t0[j]}));
            sched.plan(classical_message(AgentId::A1, AgentId::B1, q1j, q1j, Channel::CrossParty,
                                         Bits{s[j], t1[j]}));
        }
        t.messages = sched.drain();

        for (int j = 0; j < n; ++j) {
            const auto basis = (s[j] == 0) ? qsim::Basis::Computational : qsim::Basis::Hadamard;
            auto [outcome, post] = qsim::measure(reg[j], 0, basis, rng_bob);
            reg[j] = std::move(post);
            if (gamma > 0.0 && rng_noise.uniform() < gamma) outcome ^= 1;
            const Bits& tb = (b == 0) ? t0 : t1;
            const Event qbj = geometry.point_q_ij(b, j);
            t.outputs.push_back(OutputRecord{
                bob_site, qbj, Bits{static_cast<std::uint8_t>(outcome ^ tb[j])}, b, j});
        }
    }
    return t;
}

}  // namespace

Transcript run_honest(const ProtocolGeometry& geometry, const Bits& x0, const Bits& x1, int b,
                      std::uint64_t seed, const std::optional<PinnedSecrets>& pinned) {
    return run_honest_impl(geometry, x0, x1, b, 0.0, seed, pinned);
}

Transcript run_noisy_honest(const ProtocolGeometry& geometry, const Bits& x0, const Bits& x1,
                            int b, double gamma, std::uint64_t seed,
                            const std::optional<PinnedSecrets>& pinned) {
    return run_honest_impl(geometry, x0, x1, b, gamma, seed, pinned);
}

ValidationReport validate_transcript(const Transcript& t) {
    ValidationReport report;
    const double h = t.geometry.h;

    for (std::size_t i = 0; i < t.messages.size(); ++i) {
        const Message& m = t.messages[i];
        std::ostringstream tag;
        tag << "message " << i << " (" << to_string(m.sender) << "->" << to_string(m.receiver)
            << ")";

        // lightlike or slower
        const double dist = spacetime::spatial_distance(m.send_event, m.receive_event);
        if (m.receive_event.t < m.send_event.t + dist - kLightlikeTol)
            report.fail(tag.str() + ": superluminal transmission");

        // world-line consistency
        if (std::abs(m.send_event.x - agent_site_x(m.sender, h)) > kLightlikeTol ||
            std::abs(m.send_event.y) > kLightlikeTol || std::abs(m.send_event.z) > kLightlikeTol)
            report.fail(tag.str() + ": send event off the sender's world line");
        if (std::abs(m.receive_event.x - agent_site_x(m.receiver, h)) > kLightlikeTol)
            report.fail(tag.str() + ": receive event off the receiver's world line");

        // channel endpoint security
        switch (m.channel) {
            case Channel::AliceClassical:
                if (!is_alice(m.sender) || !is_alice(m.receiver))
                    report.fail(tag.str() + ": alice-classical channel carries non-Alice traffic");
                if (m.kind != PayloadKind::ClassicalBits)
                    report.fail(tag.str() + ": alice-classical channel carries a quantum payload");
                break;
            case Channel::BobQuantum:
                if (is_alice(m.sender) || is_alice(m.receiver))
                    report.fail(tag.str() + ": bob-quantum channel carries non-Bob traffic");
                break;
            case Channel::CrossParty:
                if (is_alice(m.sender) == is_alice(m.receiver))
                    report.fail(tag.str() + ": cross-party handoff within one party");
                if (spacetime::spatial_distance(m.send_event, m.receive_event) > kLightlikeTol)
                    report.fail(tag.str() + ": cross-party handoff is not colocated");
                break;
        }
    }

    // Transcript-level no-cloning: each handle's hops form a single causal
    // chain; a handle is never sent twice from the same place.
    std::map<int, std::vector<const Message*>> hops;
    for (const Message& m : t.messages)
        if (m.kind == PayloadKind::QuantumHandle) hops[m.handle].push_back(&m);
    for (auto& [handle, chain] : hops) {
        std::stable_sort(chain.begin(), chain.end(), [](const Message* a, const Message* b) {
            return a->send_event.t < b->send_event.t;
        });
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
            const Message* cur = chain[k];
            const Message* nxt = chain[k + 1];
            std::ostringstream tag;
            tag << "quantum handle " << handle;
            if (nxt->sender != cur->receiver)
                report.fail(tag.str() + ": re-sent by an agent that does not hold it");
            if (!spacetime::in_future_cone(cur->receive_event, nxt->send_event))
                report.fail(tag.str() + ": forwarded before it was received");
        }
    }

    // outputs inside the declared regions
    for (std::size_t i = 0; i < t.outputs.size(); ++i) {
        const OutputRecord& out = t.outputs[i];
        std::ostringstream tag;
        tag << "output " << i << " (" << to_string(out.agent) << ")";
        if (t.geometry.variant == GeometryVariant::PerBitPoints) {
            const Event expect = t.geometry.point_q_ij(out.side, out.bit_index);
            if (std::abs(out.event.t - expect.t) > kLightlikeTol ||
                spacetime::spatial_distance(out.event, expect) > kLightlikeTol)
                report.fail(tag.str() + ": not at the required output point");
        } else {
            if (out.side < 0 || out.side >= static_cast<int>(t.regions.size())) {
                report.fail(tag.str() + ": unknown region side");
            } else if (!spacetime::region_contains(t.regions[out.side], out.event)) {
                report.fail(tag.str() + ": output event outside its region");
            }
        }
    }
    return report;
}

std::string bits_to_hex(const Bits& bits) {
    if (bits.empty()) return "-";
    std::string out;
    // bit i lives in nibble i/4, low bit first
    for (std::size_t base = 0; base < bits.size(); base += 4) {
        int nibble = 0;
        for (std::size_t j = 0; j < 4 && base + j < bits.size(); ++j)
            nibble |= (bits[base + j] & 1) << j;
        out += "0123456789abcdef"[nibble];
    }
    return out;
}

namespace {

std::string coord(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

}  // namespace

void serialize_transcript(std::ostream& os, const Transcript& t) {
    os << "# scot-transcript v1\n";
    os << "geometry"
       << " variant="
       << (t.geometry.variant == GeometryVariant::PerBitPoints ? "perbit" : "mainslab")
       << " n=" << t.geometry.n << " h=" << coord(t.geometry.h) << " v=" << coord(t.geometry.v)
       << " delta=" << coord(t.geometry.delta) << "\n";
    os << "seed " << t.seed << "\n";
    for (const Message& m : t.messages) {
        const char* kind = (m.kind == PayloadKind::QuantumHandle) ? "quantum" : "classical";
        std::string payload;
        if (m.kind == PayloadKind::QuantumHandle) {
            char buf[20];
            std::snprintf(buf, sizeof(buf), "%x", m.handle);
            payload = buf;
        } else {
            payload = bits_to_hex(m.bits);
        }
        os << kind << " " << to_string(m.sender) << " " << to_string(m.receiver) << " "
           << coord(m.send_event.t) << " " << coord(m.send_event.x) << " "
           << coord(m.receive_event.t) << " " << coord(m.receive_event.x) << " " << payload
           << "\n";
    }
    for (const OutputRecord& out : t.outputs) {
        os << "output " << to_string(out.agent) << " side=" << out.side;
        if (out.bit_index >= 0) os << " j=" << out.bit_index;
        os << " t=" << coord(out.event.t) << " x=" << coord(out.event.x)
           << " y=" << bits_to_hex(out.bits) << "\n";
    }
}

}  // namespace scot::protocol
