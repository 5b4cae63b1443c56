#ifndef SCOT_QSIM_HPP
#define SCOT_QSIM_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

// Minimal dense state-vector simulator. Qubit 0 is the least significant
// amplitude index (little-endian); all arithmetic in double precision.
// Tolerance ladder: 1e-12 scalars, 1e-10 norms, 1e-9 matrices.

namespace scot::qsim {

using cplx = std::complex<double>;

inline constexpr double kScalarTol = 1e-12;
inline constexpr double kNormTol = 1e-10;
inline constexpr double kMatrixTol = 1e-9;
inline constexpr int kDefaultQubitBudget = 12;

// Seedable generator; split() derives an independent stream deterministically.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() { return dist_(gen_); }
    std::uint64_t raw() { return gen_(); }
    int bit() { return uniform() < 0.5 ? 0 : 1; }

    Rng split(std::uint64_t stream) {
        // splitmix64 on (seed-derived word, stream id)
        std::uint64_t z = gen_() + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

  private:
    std::mt19937_64 gen_;
    std::uniform_real_distribution<double> dist_{0.0, 1.0};
};

// Dense square complex matrix of dimension 2^k.
struct Matrix {
    int dim = 0;
    std::vector<cplx> a;  // row-major

    Matrix() = default;
    explicit Matrix(int d) : dim(d), a(static_cast<std::size_t>(d) * d, cplx{0, 0}) {}

    cplx& at(int r, int c) { return a[static_cast<std::size_t>(r) * dim + c]; }
    const cplx& at(int r, int c) const { return a[static_cast<std::size_t>(r) * dim + c]; }

    static Matrix identity(int d);
    Matrix adjoint() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;

    double frobenius_distance(const Matrix& rhs) const;
    bool is_unitary(double tol = kMatrixTol) const;
    bool is_hermitian(double tol = kMatrixTol) const;
    bool is_projector(double tol = kMatrixTol) const;
};

Matrix kron(const Matrix& a, const Matrix& b);

struct StateVector {
    int qubit_count = 0;
    std::vector<cplx> amplitudes;

    StateVector() = default;
    StateVector(int qubits, std::vector<cplx> amps)
        : qubit_count(qubits), amplitudes(std::move(amps)) {}

    std::size_t dim() const { return amplitudes.size(); }
    double norm() const;
    bool normalized(double tol = kNormTol) const;

    // |index> of k qubits
    static StateVector basis_state(int qubits, std::size_t index);
};

enum class Basis { Computational, Hadamard, Breidbart };

const char* to_string(Basis b);

// |psi_r^s>: s = 0 computational, s = 1 Hadamard.
StateVector bb84_state(int r, int s);

// Orthonormal pair of single-qubit basis states.
std::pair<StateVector, StateVector> basis_states(Basis b);

// 2x2 projector |b_outcome><b_outcome|.
Matrix basis_projector(Basis b, int outcome);

// (|00> + |11>)/sqrt(2)
StateVector bell_phi_plus();

StateVector tensor(const StateVector& a, const StateVector& b);

cplx inner_product(const StateVector& a, const StateVector& b);

// Applies a 2^k-dimensional matrix to qubits `targets` (targets[0] is the
// least significant local qubit). No unitarity requirement.
StateVector apply_matrix(const StateVector& state, const Matrix& m,
                         const std::vector<int>& targets);

// Same, but rejects non-unitary matrices.
StateVector apply_unitary(const StateVector& state, const Matrix& u,
                          const std::vector<int>& targets);

// Re <psi| M_{targets} |psi>
double expectation(const StateVector& state, const Matrix& m, const std::vector<int>& targets);

double born_probability(const StateVector& state, int qubit_index, Basis basis, int outcome);

// Samples an outcome with Born probability, returns (outcome, renormalized
// post-measurement state). Deterministic given the rng state.
std::pair<int, StateVector> measure(const StateVector& state, int qubit_index, Basis basis,
                                    Rng& rng);

// General projective measurement: projectors must act on `targets`, be
// pairwise orthogonal and complete. Returns (projector index, post state).
std::pair<int, StateVector> measure_projectors(const StateVector& state,
                                               const std::vector<Matrix>& projectors,
                                               const std::vector<int>& targets, Rng& rng);

// Debug dump: one "re,im" line per amplitude.
std::string dump_amplitudes(const StateVector& state);

}  // namespace scot::qsim

#endif
