#ifndef SCOT_CLASSICAL_HPP
#define SCOT_CLASSICAL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

// Finite classical protocols as distribution tables over the three
// communication events (at P, Q_0, Q_1), Alice's distinguishing attack and
// Bob's copy-and-double-run attack, and the impossibility trade-off.

namespace scot::classical {

// A finite classical protocol: the distribution P(gbar | x0, x1, b) over
// gbar = (g, g0, g1) and the honest decoder success probabilities
// P_B^h(x_i | gbar, x0, x1, i). Bob's extra classical resources are folded
// into the decoder values.
struct ClassicalProtocol {
    int n = 1;         // bit length of x_i
    int size_g = 1;    // |G|
    int size_g0 = 1;   // |G_0|
    int size_g1 = 1;   // |G_1|

    // prob[x0][x1][b][gbar], flattened; each (x0,x1,b) slice sums to 1
    std::vector<double> prob;
    // decoder[i][x0][x1][gbar] in [0,1]
    std::vector<double> decoder;

    int inputs() const { return 1 << n; }
    int events() const { return size_g * size_g0 * size_g1; }

    std::size_t prob_index(int x0, int x1, int b, int gbar) const;
    std::size_t decoder_index(int i, int x0, int x1, int gbar) const;
    double p(int x0, int x1, int b, int gbar) const { return prob[prob_index(x0, x1, b, gbar)]; }
    double dec(int i, int x0, int x1, int gbar) const {
        return decoder[decoder_index(i, x0, x1, gbar)];
    }

    // Throws std::invalid_argument if a distribution does not sum to 1 or a
    // decoder value leaves [0,1].
    void validate() const;
};

// Alice's guessing probability for fixed inputs: the partition rule (guess
// b = i when gbar falls in the set favoring i) and the closed form
// 1/2 + TVD-sum/4 are both evaluated and must agree.
double alice_attack(const ClassicalProtocol& p, int x0, int x1);

struct ImpossibilityReport {
    double delta = 0;       // max over fixed inputs of (P_A^c - 1/2)
    double epsilon = 0;     // max_i (1 - P_B^{h,i})
    double tvd_sum = 0;     // max over inputs of sum |P(.|0) - P(.|1)|
    double p_b_honest[2] = {0, 0};   // P_B^{h,i}
    double p_b_crossed[2] = {0, 0};  // P_B^{i-bar}: honest-(1-i) decoder on b=i events
    double p_b_cheat = 0;   // double-run success (best i)
    double bound_rhs = 0;   // 1 - 2*epsilon - 4*delta
    bool bound_holds = false;        // p_b_cheat >= bound_rhs
    bool chain_holds = false;        // P_B^{i-bar} >= P_B^{h,i-bar} - 4*delta for both i
};

// Exact enumeration of the copy-and-double-run attack. The two simultaneous
// runs use independent copies of Bob's extra resources, so the joint success
// given an event is the product of the per-run decoder values.
ImpossibilityReport bob_double_run_attack(const ClassicalProtocol& p);

// Seeded random protocol: distributions drawn uniformly from the simplex,
// decoder values Beta(2, 2/3)-distributed (skewed toward competent decoders).
ClassicalProtocol random_protocol(std::uint64_t seed, int max_n = 2, int max_events = 4);

// One-parameter family: theta = 0 leaks b through the event at P, theta = 1
// is b-independent; the crossed-run decoder degrades with the leak.
ClassicalProtocol tradeoff_family(double theta);

struct TradeoffPoint {
    double theta = 0, delta = 0, epsilon = 0, p_b_cheat = 0;
};

std::vector<TradeoffPoint> tradeoff_scan(int grid_points);

// CSV: theta,delta,epsilon,p_b_cheat
void write_tradeoff_csv(std::ostream& os, const std::vector<TradeoffPoint>& points);

// Text table format: header "n |G| |G0| |G1|", probability lines in
// (x0, x1, b, gbar) order, then decoder lines in (i, x0, x1, gbar) order.
void save_protocol(std::ostream& os, const ClassicalProtocol& p);
ClassicalProtocol load_protocol(std::istream& is);

}  // namespace scot::classical

#endif
