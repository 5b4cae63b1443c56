#include "scot/qsim.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

namespace scot::qsim {

Matrix Matrix::identity(int d) {
    Matrix m(d);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1.0;
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m.at(c, r) = std::conj(at(r, c));
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (dim != rhs.dim) throw std::invalid_argument("matrix dimension mismatch");
    Matrix m(dim);
    for (int r = 0; r < dim; ++r) {
        for (int k = 0; k < dim; ++k) {
            const cplx v = at(r, k);
            if (v == cplx{0, 0}) continue;
            for (int c = 0; c < dim; ++c) m.at(r, c) += v * rhs.at(k, c);
        }
    }
    return m;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (dim != rhs.dim) throw std::invalid_argument("matrix dimension mismatch");
    Matrix m(dim);
    for (std::size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] + rhs.a[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (dim != rhs.dim) throw std::invalid_argument("matrix dimension mismatch");
    Matrix m(dim);
    for (std::size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] - rhs.a[i];
    return m;
}

double Matrix::frobenius_distance(const Matrix& rhs) const {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - rhs.a[i]);
    return std::sqrt(s);
}

bool Matrix::is_unitary(double tol) const {
    return (adjoint() * *this).frobenius_distance(identity(dim)) <= tol;
}

bool Matrix::is_hermitian(double tol) const { return frobenius_distance(adjoint()) <= tol; }

bool Matrix::is_projector(double tol) const {
    return is_hermitian(tol) && (*this * *this).frobenius_distance(*this) <= tol;
}

Matrix kron(const Matrix& x, const Matrix& y) {
    Matrix m(x.dim * y.dim);
    for (int rx = 0; rx < x.dim; ++rx)
        for (int cx = 0; cx < x.dim; ++cx)
            for (int ry = 0; ry < y.dim; ++ry)
                for (int cy = 0; cy < y.dim; ++cy)
                    // qubit 0 least significant: y occupies the low bits
                    m.at(rx * y.dim + ry, cx * y.dim + cy) = x.at(rx, cx) * y.at(ry, cy);
    return m;
}

double StateVector::norm() const {
    double s = 0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
}

bool StateVector::normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

StateVector StateVector::basis_state(int qubits, std::size_t index) {
    std::vector<cplx> amps(std::size_t{1} << qubits, cplx{0, 0});
    amps.at(index) = 1.0;
    return StateVector(qubits, std::move(amps));
}

const char* to_string(Basis b) {
    switch (b) {
        case Basis::Computational: return "computational";
        case Basis::Hadamard: return "hadamard";
        case Basis::Breidbart: return "breidbart";
    }
    return "?";
}

StateVector bb84_state(int r, int s) {
    if ((r & ~1) || (s & ~1)) throw std::invalid_argument("bb84_state: r, s must be bits");
    if (s == 0) return StateVector::basis_state(1, static_cast<std::size_t>(r));
    const double inv = 1.0 / std::numbers::sqrt2;
    return StateVector(1, {inv, (r == 0) ? inv : -inv});
}

std::pair<StateVector, StateVector> basis_states(Basis b) {
    switch (b) {
        case Basis::Computational: return {bb84_state(0, 0), bb84_state(1, 0)};
        case Basis::Hadamard: return {bb84_state(0, 1), bb84_state(1, 1)};
        case Basis::Breidbart: {
            const double c = std::cos(std::numbers::pi / 8);
            const double s = std::sin(std::numbers::pi / 8);
            return {StateVector(1, {c, s}), StateVector(1, {-s, c})};
        }
    }
    throw std::invalid_argument("unknown basis");
}

Matrix basis_projector(Basis b, int outcome) {
    const auto [b0, b1] = basis_states(b);
    const StateVector& v = (outcome == 0) ? b0 : b1;
    Matrix m(2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m.at(r, c) = v.amplitudes[r] * std::conj(v.amplitudes[c]);
    return m;
}

StateVector bell_phi_plus() {
    const double inv = 1.0 / std::numbers::sqrt2;
    return StateVector(2, {inv, 0, 0, inv});
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    StateVector out(a.qubit_count + b.qubit_count,
                    std::vector<cplx>(a.dim() * b.dim(), cplx{0, 0}));
    // a occupies the low qubits
    for (std::size_t ib = 0; ib < b.dim(); ++ib)
        for (std::size_t ia = 0; ia < a.dim(); ++ia)
            out.amplitudes[(ib << a.qubit_count) | ia] = a.amplitudes[ia] * b.amplitudes[ib];
    return out;
}

cplx inner_product(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("state dimension mismatch");
    cplx s{0, 0};
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    return s;
}

namespace {

void check_targets(const StateVector& state, const Matrix& m, const std::vector<int>& targets) {
    if (m.dim != (1 << targets.size())) throw std::invalid_argument("matrix dim != 2^targets");
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= state.qubit_count)
            throw std::invalid_argument("target qubit out of range");
        for (std::size_t j = i + 1; j < targets.size(); ++j)
            if (targets[i] == targets[j]) throw std::invalid_argument("duplicate target qubit");
    }
}

}  // namespace

StateVector apply_matrix(const StateVector& state, const Matrix& m,
                         const std::vector<int>& targets) {
    check_targets(state, m, targets);
    const int k = static_cast<int>(targets.size());
    const std::size_t local_dim = std::size_t{1} << k;
    StateVector out = state;

    std::size_t target_mask = 0;
    for (int q : targets) target_mask |= (std::size_t{1} << q);

    std::vector<cplx> in(local_dim), res(local_dim);
    for (std::size_t base = 0; base < state.dim(); ++base) {
        if (base & target_mask) continue;  // enumerate group representatives
        for (std::size_t l = 0; l < local_dim; ++l) {
            std::size_t idx = base;
            for (int b = 0; b < k; ++b)
                if (l & (std::size_t{1} << b)) idx |= (std::size_t{1} << targets[b]);
            in[l] = state.amplitudes[idx];
        }
        for (std::size_t r = 0; r < local_dim; ++r) {
            cplx s{0, 0};
            for (std::size_t c = 0; c < local_dim; ++c)
                s += m.at(static_cast<int>(r), static_cast<int>(c)) * in[c];
            res[r] = s;
        }
        for (std::size_t l = 0; l < local_dim; ++l) {
            std::size_t idx = base;
            for (int b = 0; b < k; ++b)
                if (l & (std::size_t{1} << b)) idx |= (std::size_t{1} << targets[b]);
            out.amplitudes[idx] = res[l];
        }
    }
    return out;
}

StateVector apply_unitary(const StateVector& state, const Matrix& u,
                          const std::vector<int>& targets) {
    if (!u.is_unitary()) throw std::invalid_argument("apply_unitary: matrix is not unitary");
    return apply_matrix(state, u, targets);
}

double expectation(const StateVector& state, const Matrix& m, const std::vector<int>& targets) {
    const StateVector applied = apply_matrix(state, m, targets);
    return inner_product(state, applied).real();
}

double born_probability(const StateVector& state, int qubit_index, Basis basis, int outcome) {
    if (qubit_index < 0 || qubit_index >= state.qubit_count)
        throw std::invalid_argument("qubit index out of range");
    return expectation(state, basis_projector(basis, outcome), {qubit_index});
}

std::pair<int, StateVector> measure(const StateVector& state, int qubit_index, Basis basis,
                                    Rng& rng) {
    std::vector<Matrix> projectors{basis_projector(basis, 0), basis_projector(basis, 1)};
    return measure_projectors(state, projectors, {qubit_index}, rng);
}

std::pair<int, StateVector> measure_projectors(const StateVector& state,
                                               const std::vector<Matrix>& projectors,
                                               const std::vector<int>& targets, Rng& rng) {
    const double u = rng.uniform();
    double acc = 0;
    std::vector<double> probs(projectors.size());
    for (std::size_t i = 0; i < projectors.size(); ++i) {
        probs[i] = expectation(state, projectors[i], targets);
        acc += probs[i];
    }
    if (std::abs(acc - 1.0) > kNormTol)
        throw std::invalid_argument("measurement projectors are not complete");
    double cum = 0;
    std::size_t pick = projectors.size() - 1;
    for (std::size_t i = 0; i < projectors.size(); ++i) {
        cum += probs[i];
        if (u < cum) {
            pick = i;
            break;
        }
    }
    StateVector post = apply_matrix(state, projectors[pick], targets);
    const double norm = post.norm();
    if (norm < 1e-9)
        throw std::runtime_error("internal error: zero-norm post-measurement projection");
    for (auto& a : post.amplitudes) a /= norm;
    return {static_cast<int>(pick), std::move(post)};
}

std::string dump_amplitudes(const StateVector& state) {
    std::string out;
    char buf[80];
    for (const auto& a : state.amplitudes) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", a.real(), a.imag());
        out += buf;
    }
    return out;
}

}  // namespace scot::qsim
