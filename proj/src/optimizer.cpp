#include "scot/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace scot::optimizer {

using qsim::cplx;
using qsim::Matrix;
using qsim::StateVector;

namespace {

cplx a_of(const Mu0Variables& v, int j, int k, int l) {
    return cplx{v.c[j][k][l], v.d[j][k][l]};
}

cplx w_of(const Mu0Variables& v, int k, int l) { return cplx{v.g[k][l], v.h[k][l]}; }

// The bilinear form whose real and imaginary parts must vanish.
cplx bilinear(const Mu0Variables& v) {
    cplx z{0, 0};
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) z += std::conj(a_of(v, 0, k, l)) * a_of(v, 1, k, l) * w_of(v, k, l);
    return z;
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

}  // namespace

std::array<double, kMu0VariableCount> pack(const Mu0Variables& v) {
    std::array<double, kMu0VariableCount> x{};
    int idx = 0;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) x[idx++] = v.c[j][k][l];
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) x[idx++] = v.d[j][k][l];
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) x[idx++] = v.g[k][l];
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) x[idx++] = v.h[k][l];
    return x;
}

Mu0Variables unpack(const std::array<double, kMu0VariableCount>& x) {
    Mu0Variables v;
    int idx = 0;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) v.c[j][k][l] = x[idx++];
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) v.d[j][k][l] = x[idx++];
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) v.g[k][l] = x[idx++];
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) v.h[k][l] = x[idx++];
    return v;
}

double mu0_objective(const Mu0Variables& v) {
    double value = 2.0;
    for (int l = 0; l < 2; ++l)
        value += v.c[0][0][l] * v.c[0][0][l] + v.d[0][0][l] * v.d[0][0][l] -
                 v.c[1][0][l] * v.c[1][0][l] - v.d[1][0][l] * v.d[1][0][l];
    // 2 Re(conj(a_0k0) a_1k0 w_k0) for k = 0, 1
    for (int k = 0; k < 2; ++k)
        value += 2.0 * std::real(std::conj(a_of(v, 0, k, 0)) * a_of(v, 1, k, 0) * w_of(v, k, 0));
    return value;
}

double ConstraintResiduals::max_residual() const {
    double m = std::max({norm[0], norm[1], orth[0], orth[1]});
    for (double c : cap) m = std::max(m, c);
    return m;
}

ConstraintResiduals constraint_residuals(const Mu0Variables& v) {
    ConstraintResiduals r;
    for (int j = 0; j < 2; ++j) {
        double sum = 0;
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l)
                sum += v.c[j][k][l] * v.c[j][k][l] + v.d[j][k][l] * v.d[j][k][l];
        r.norm[j] = std::abs(sum - 1.0);
    }
    const cplx z = bilinear(v);
    r.orth[0] = std::abs(z.real());
    r.orth[1] = std::abs(z.imag());
    int idx = 0;
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
            r.cap[idx++] = std::max(0.0, v.g[k][l] * v.g[k][l] + v.h[k][l] * v.h[k][l] - 1.0);
    return r;
}

double penalized_objective(const Mu0Variables& v, double rho,
                           std::array<double, kMu0VariableCount>* gradient) {
    const cplx z = bilinear(v);
    const double value = mu0_objective(v) - rho * std::norm(z);
    if (!gradient) return value;

    Mu0Variables gv;  // accumulate gradient in structured form

    // objective: norm-difference terms (k = 0 blocks)
    for (int l = 0; l < 2; ++l) {
        gv.c[0][0][l] += 2.0 * v.c[0][0][l];
        gv.d[0][0][l] += 2.0 * v.d[0][0][l];
        gv.c[1][0][l] -= 2.0 * v.c[1][0][l];
        gv.d[1][0][l] -= 2.0 * v.d[1][0][l];
    }
    // objective: cross terms 2 Re(conj(a0) a1 w) at (k, l=0)
    for (int k = 0; k < 2; ++k) {
        const cplx a0 = a_of(v, 0, k, 0);
        const cplx a1 = a_of(v, 1, k, 0);
        const cplx w = w_of(v, k, 0);
        gv.c[0][k][0] += 2.0 * std::real(a1 * w);
        gv.d[0][k][0] += 2.0 * std::imag(a1 * w);
        gv.c[1][k][0] += 2.0 * std::real(std::conj(a0) * w);
        gv.d[1][k][0] -= 2.0 * std::imag(std::conj(a0) * w);
        gv.g[k][0] += 2.0 * std::real(std::conj(a0) * a1);
        gv.h[k][0] -= 2.0 * std::imag(std::conj(a0) * a1);
    }
    // penalty: -rho |Z|^2, dP/dx = 2 Re(conj(Z) dZ/dx)
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
            const cplx a0 = a_of(v, 0, k, l);
            const cplx a1 = a_of(v, 1, k, l);
            const cplx w = w_of(v, k, l);
            const auto add = [&](double& slot, cplx dz) {
                slot -= rho * 2.0 * std::real(std::conj(z) * dz);
            };
            add(gv.c[0][k][l], a1 * w);
            add(gv.d[0][k][l], cplx{0, -1} * a1 * w);
            add(gv.c[1][k][l], std::conj(a0) * w);
            add(gv.d[1][k][l], cplx{0, 1} * std::conj(a0) * w);
            add(gv.g[k][l], std::conj(a0) * a1);
            add(gv.h[k][l], cplx{0, 1} * std::conj(a0) * a1);
        }
    *gradient = pack(gv);
    return value;
}

namespace {

// Sphere and disk projections (norm and cap constraints).
void project_bounds(Mu0Variables& v) {
    for (int j = 0; j < 2; ++j) {
        double sum = 0;
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l)
                sum += v.c[j][k][l] * v.c[j][k][l] + v.d[j][k][l] * v.d[j][k][l];
        double scale;
        if (sum < 1e-30) {
            // degenerate block: place all weight on one coefficient
            v.c[j][0][0] = 1.0;
            continue;
        }
        scale = 1.0 / std::sqrt(sum);
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) {
                v.c[j][k][l] *= scale;
                v.d[j][k][l] *= scale;
            }
    }
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
            const double r2 = v.g[k][l] * v.g[k][l] + v.h[k][l] * v.h[k][l];
            if (r2 > 1.0) {
                const double scale = 1.0 / std::sqrt(r2);
                v.g[k][l] *= scale;
                v.h[k][l] *= scale;
            }
        }
}

// Given the a coefficients, the bilinear form is linear in the overlaps:
// alternate least-squares correction onto the equalities with disk clipping.
void project_orthogonality(Mu0Variables& v, int max_rounds) {
    for (int round = 0; round < max_rounds; ++round) {
        const cplx z = bilinear(v);
        if (std::abs(z) < 1e-14) return;
        double denom = 0;
        cplx u[2][2];
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) {
                u[k][l] = std::conj(a_of(v, 0, k, l)) * a_of(v, 1, k, l);
                denom += std::norm(u[k][l]);
            }
        if (denom < 1e-26) return;  // every coefficient product vanishes: Z = 0 already
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) {
                const cplx corr = std::conj(u[k][l]) * (z / denom);
                v.g[k][l] -= corr.real();
                v.h[k][l] -= corr.imag();
                const double r2 = v.g[k][l] * v.g[k][l] + v.h[k][l] * v.h[k][l];
                if (r2 > 1.0) {
                    const double scale = 1.0 / std::sqrt(r2);
                    v.g[k][l] *= scale;
                    v.h[k][l] *= scale;
                }
            }
    }
}

double gaussian(qsim::Rng& rng) {
    // Box-Muller
    double u1 = rng.uniform();
    while (u1 <= 1e-300) u1 = rng.uniform();
    const double u2 = rng.uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

}  // namespace

Mu0Variables project_feasible(const Mu0Variables& v, int max_rounds) {
    Mu0Variables out = v;
    project_bounds(out);
    project_orthogonality(out, max_rounds);
    return out;
}

Mu0Variables random_feasible_point(qsim::Rng& rng) {
    Mu0Variables v;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) {
                v.c[j][k][l] = gaussian(rng);
                v.d[j][k][l] = gaussian(rng);
            }
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
            // uniform in the unit disk
            const double r = std::sqrt(rng.uniform());
            const double phi = 2.0 * 3.14159265358979323846 * rng.uniform();
            v.g[k][l] = r * std::cos(phi);
            v.h[k][l] = r * std::sin(phi);
        }
    return project_feasible(v);
}

std::string OptimizationResult::to_json() const {
    std::ostringstream os;
    os << "{\"best_value\":" << fmt_double(best_value)
       << ",\"max_constraint_residual\":" << fmt_double(max_constraint_residual)
       << ",\"restarts\":" << restarts_used << ",\"iterations\":" << iterations
       << ",\"converged\":" << (converged ? "true" : "false") << "}";
    return os.str();
}

OptimizationResult maximize_mu0(int restarts, int max_iterations, double feasibility_tol,
                                std::uint64_t seed) {
    if (restarts < 1) throw std::invalid_argument("restarts must be at least 1");
    if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
    if (feasibility_tol <= 0) throw std::invalid_argument("feasibility_tol must be positive");

    qsim::Rng root(seed);
    OptimizationResult best;
    best.best_value = -1e300;
    long total_iterations = 0;

    for (int restart = 0; restart < restarts; ++restart) {
        qsim::Rng rng = root.split(static_cast<std::uint64_t>(restart));
        Mu0Variables v = random_feasible_point(rng);

        // a point found earlier in the ladder survives if a later rho stalls
        for (double rho = 10.0; rho <= 1e9; rho *= 10.0) {
            double step = 0.05;
            std::array<double, kMu0VariableCount> grad{};
            double value = penalized_objective(v, rho, &grad);
            for (int iter = 0; iter < max_iterations; ++iter) {
                ++total_iterations;
                auto x = pack(v);
                // backtracking projected-gradient step
                bool improved = false;
                while (step > 1e-14) {
                    std::array<double, kMu0VariableCount> xt{};
                    for (int i = 0; i < kMu0VariableCount; ++i) xt[i] = x[i] + step * grad[i];
                    Mu0Variables trial = unpack(xt);
                    project_bounds(trial);
                    const double trial_value = penalized_objective(trial, rho, nullptr);
                    if (trial_value > value + 1e-15) {
                        v = trial;
                        value = penalized_objective(v, rho, &grad);
                        improved = true;
                        step *= 1.5;
                        break;
                    }
                    step *= 0.5;
                }
                if (!improved) break;
            }
        }

        // exact restoration of the bilinear equalities, then honest recompute
        Mu0Variables polished = v;
        project_bounds(polished);
        project_orthogonality(polished, 500);
        const double value = mu0_objective(polished);
        const double residual = constraint_residuals(polished).max_residual();
        if (residual <= feasibility_tol && value > best.best_value) {
            best.best_value = value;
            best.variables = polished;
            best.max_constraint_residual = residual;
            best.converged = true;
        }
    }
    best.restarts_used = restarts;
    best.iterations = total_iterations;
    if (!best.converged) {
        best.best_value = 0;
        best.max_constraint_residual =
            constraint_residuals(best.variables).max_residual();
    }
    return best;
}

void write_witness(std::ostream& os, const Mu0Variables& v) {
    for (double x : pack(v)) os << fmt_double(x) << "\n";
}

namespace {

struct StrategyStates {
    const adversary::ProductQubitStrategy* ps;
    StateVector psi[2][2];  // [r][s]
};

StrategyStates prepared_states(const adversary::Strategy& s) {
    adversary::validate_strategy(s);
    if (!s.is_product())
        throw std::invalid_argument("per-qubit strategy required");
    StrategyStates st;
    st.ps = &*s.product;
    for (int r = 0; r < 2; ++r)
        for (int sv = 0; sv < 2; ++sv) {
            StateVector state = qsim::bb84_state(r, sv);
            if (st.ps->ancilla_qubits > 0) state = qsim::tensor(state, st.ps->ancilla);
            std::vector<int> all(static_cast<std::size_t>(1 + st.ps->ancilla_qubits));
            for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
            st.psi[r][sv] = qsim::apply_unitary(state, st.ps->prepare, all);
        }
    return st;
}

}  // namespace

Mu0Variables witness_from_strategy(const adversary::Strategy& s) {
    const StrategyStates st = prepared_states(s);
    const auto& ps = *st.ps;

    StateVector comp[2][2][2];  // [j][k][l]
    double norms[2][2][2];
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) {
                StateVector c = qsim::apply_matrix(st.psi[j][0], ps.projectors[0][0][k], ps.share0);
                c = qsim::apply_matrix(c, ps.projectors[1][1][l], ps.share1);
                norms[j][k][l] = c.norm();
                comp[j][k][l] = std::move(c);
            }

    Mu0Variables v;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) {
                // phases absorbed into the alpha vectors: a_jkl real, >= 0
                v.c[j][k][l] = norms[j][k][l];
                v.d[j][k][l] = 0.0;
            }
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
            if (norms[0][k][l] > 1e-12 && norms[1][k][l] > 1e-12) {
                const cplx overlap = qsim::inner_product(comp[0][k][l], comp[1][k][l]) /
                                     (norms[0][k][l] * norms[1][k][l]);
                v.g[k][l] = overlap.real();
                v.h[k][l] = overlap.imag();
            }  // otherwise the overlap is unconstrained; leave it at 0
        }
    return v;
}

double mu0_direct_from_strategy(const adversary::Strategy& s) {
    const StrategyStates st = prepared_states(s);
    const auto& ps = *st.ps;
    double value = 0;
    value += qsim::expectation(st.psi[0][0], ps.projectors[0][0][0], ps.share0);
    value += qsim::expectation(st.psi[1][0], ps.projectors[0][0][1], ps.share0);
    value += qsim::expectation(st.psi[0][1], ps.projectors[1][1][0], ps.share1);
    value += qsim::expectation(st.psi[1][1], ps.projectors[1][1][1], ps.share1);
    return value;
}

double strategy_sum(const adversary::Strategy& s) {
    const StrategyStates st = prepared_states(s);
    const auto& ps = *st.ps;
    double sum = 0;
    for (int r = 0; r < 2; ++r)
        for (int sv = 0; sv < 2; ++sv) {
            sum += qsim::expectation(st.psi[r][sv], ps.projectors[0][sv][r], ps.share0);
            sum += qsim::expectation(st.psi[r][sv], ps.projectors[1][sv][r], ps.share1);
        }
    return sum / 4.0;
}

}  // namespace scot::optimizer
