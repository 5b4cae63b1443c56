#ifndef SCOT_PROTOCOL_HPP
#define SCOT_PROTOCOL_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "scot/spacetime.hpp"

// Honest protocol execution among the six agents, producing a verifiable
// transcript of lightlike message exchanges and region-constrained outputs.

namespace scot::protocol {

using spacetime::Event;
using spacetime::OutputRegion;
using spacetime::ProtocolGeometry;
using spacetime::ValidationReport;

using Bits = std::vector<std::uint8_t>;  // one bit per entry, values 0/1

enum class AgentId { A, A0, A1, B, B0, B1 };

const char* to_string(AgentId a);
bool is_alice(AgentId a);

// Lab site of an agent: A, B at x = 0; A_i, B_i at x = -(-1)^i h.
double agent_site_x(AgentId a, double h);

enum class Channel { AliceClassical, BobQuantum, CrossParty };

const char* to_string(Channel c);

enum class PayloadKind { ClassicalBits, QuantumHandle };

struct Message {
    AgentId sender;
    AgentId receiver;
    Event send_event;
    Event receive_event;
    Channel channel;
    PayloadKind kind;
    Bits bits;        // ClassicalBits payload
    int handle = -1;  // QuantumHandle payload
};

struct OutputRecord {
    AgentId agent;
    Event event;
    Bits bits;
    int side;            // region index the output claims
    int bit_index = -1;  // PerBitPoints: which j; -1 for whole-string outputs
};

struct ProtocolInputs {
    Bits x0, x1;
    int b = 0;
    Bits r, s;  // Alice's secrets
};

struct Transcript {
    ProtocolGeometry geometry;
    std::vector<OutputRegion> regions;  // index = side
    ProtocolInputs inputs;
    std::uint64_t seed = 0;
    std::vector<Message> messages;
    std::vector<OutputRecord> outputs;
};

struct PinnedSecrets {
    Bits r, s;
};

// Executes the honest protocol. Secrets are drawn from the seed unless
// pinned. The output of agent B_b equals x_b exactly.
Transcript run_honest(const ProtocolGeometry& geometry, const Bits& x0, const Bits& x1, int b,
                      std::uint64_t seed, const std::optional<PinnedSecrets>& pinned = {});

// Honest run in which each measurement outcome is independently flipped
// with probability gamma.
Transcript run_noisy_honest(const ProtocolGeometry& geometry, const Bits& x0, const Bits& x1,
                            int b, double gamma, std::uint64_t seed,
                            const std::optional<PinnedSecrets>& pinned = {});

// Checks: messages lightlike or slower and consistent with agent sites,
// channel endpoint security, transcript-level no-cloning of quantum
// handles, outputs inside the declared regions.
ValidationReport validate_transcript(const Transcript& t);

// Acceptance rule for noisy passwords: Hamming(y, x) <= gamma * n.
bool accept_noisy(const Bits& y, const Bits& x, double gamma);

int hamming_distance(const Bits& a, const Bits& b);

// Line-delimited record format, fields in fixed order:
// kind sender receiver t_send x_send t_recv x_recv payload-hex
void serialize_transcript(std::ostream& os, const Transcript& t);

std::string bits_to_hex(const Bits& bits);
Bits random_bits(int n, std::uint64_t seed_word);

}  // namespace scot::protocol

#endif
