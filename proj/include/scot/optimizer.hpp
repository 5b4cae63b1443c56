#ifndef SCOT_OPTIMIZER_HPP
#define SCOT_OPTIMIZER_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "scot/adversary.hpp"

// Constrained maximization of the mu_0 form over 24 real variables: the
// real/imaginary parts c, d of the coefficients a_{jkl} and the parts g, h
// of the overlaps <alpha_0kl|alpha_1kl>. Constraints: unit norm per j,
// two vanishing bilinear forms, and per-pair overlap caps g^2 + h^2 <= 1.

namespace scot::optimizer {

struct Mu0Variables {
    double c[2][2][2] = {};  // [j][k][l]
    double d[2][2][2] = {};
    double g[2][2] = {};     // [k][l]
    double h[2][2] = {};
};

// Fixed flattening order: c 000..111, d 000..111, g 00..11, h 00..11.
inline constexpr int kMu0VariableCount = 24;
std::array<double, kMu0VariableCount> pack(const Mu0Variables& v);
Mu0Variables unpack(const std::array<double, kMu0VariableCount>& x);

// The objective, evaluated exactly as the polynomial form; defined for all
// inputs, feasibility handled separately.
double mu0_objective(const Mu0Variables& v);

struct ConstraintResiduals {
    double norm[2] = {};   // | sum |a_jkl|^2 - 1 |
    double orth[2] = {};   // |Re|, |Im| of the bilinear form
    double cap[4] = {};    // max(0, g^2 + h^2 - 1) per (k,l)
    double max_residual() const;
};

ConstraintResiduals constraint_residuals(const Mu0Variables& v);

// Objective minus rho * (squared orthogonality residuals), with analytic
// gradient; the norm and cap constraints are handled by projection.
double penalized_objective(const Mu0Variables& v, double rho,
                           std::array<double, kMu0VariableCount>* gradient);

// Renormalizes each a_j block to the unit sphere and clips each (g,h) pair
// to the unit disk; then corrects the overlaps onto the two bilinear
// equalities by alternating least-squares projection.
Mu0Variables project_feasible(const Mu0Variables& v, int max_rounds = 200);

// A random point on the norm spheres and in the overlap disks, projected
// onto the bilinear equalities.
Mu0Variables random_feasible_point(qsim::Rng& rng);

struct OptimizationResult {
    double best_value = 0;
    Mu0Variables variables;
    double max_constraint_residual = 0;  // recomputed at the returned point
    int restarts_used = 0;
    long iterations = 0;
    bool converged = false;

    std::string to_json() const;
};

// Multi-start projected-gradient ascent with an escalating quadratic
// penalty on the bilinear equalities.
OptimizationResult maximize_mu0(int restarts, int max_iterations, double feasibility_tol,
                                std::uint64_t seed);

// --emit-witness format: one decimal per line in the pack() order.
void write_witness(std::ostream& os, const Mu0Variables& v);

// Decomposition of a per-qubit strategy's states |Psi_j^0> along the
// projector pairs (Pi_{0,0}^k, Pi_{1,1}^l); always feasible.
Mu0Variables witness_from_strategy(const adversary::Strategy& s);

// mu_0 evaluated directly from the strategy's states and projectors.
double mu0_direct_from_strategy(const adversary::Strategy& s);

// q_0 + q_1 for a per-qubit strategy by direct linear algebra.
double strategy_sum(const adversary::Strategy& s);

}  // namespace scot::optimizer

#endif
