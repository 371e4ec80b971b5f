#include "fiberising/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

namespace fiberising {

ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0,
         1.0, 0.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << 0.0, Complex(0.0, -1.0),
         Complex(0.0, 1.0), 0.0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.0,
         0.0, -1.0;
    return m;
}

ComplexMatrix sigma_plus() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    return m;
}

ComplexMatrix sigma_minus() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

bool is_hermitian(const ComplexMatrix& a, double rel_tol) {
    if (a.rows() != a.cols()) return false;
    const double scale = a.cwiseAbs().maxCoeff();
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

HermitianEigen eigh(const ComplexMatrix& h) {
    if (!is_hermitian(h)) {
        throw NonHermitianInput("eigh: matrix exceeds Hermiticity tolerance");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw NumericalBreakdown("eigh: eigensolver failed to converge");
    }
    return HermitianEigen{solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix expm_hermitian(const HermitianEigen& eig, double t) {
    const Eigen::Index n = eig.values.size();
    Eigen::VectorXcd phases(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        phases(k) = std::exp(Complex(0.0, -eig.values(k) * t));
    }
    return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t) {
    return expm_hermitian(eigh(h), t);
}

namespace {

// Sorted, validated copy of the kept labels plus the traced complement.
struct SubsetSplit {
    std::vector<int> kept;
    std::vector<int> traced;
};

SubsetSplit split_subset(std::span<const int> keep, int num_qubits) {
    SubsetSplit s;
    s.kept.assign(keep.begin(), keep.end());
    std::sort(s.kept.begin(), s.kept.end());
    if (s.kept.empty() || static_cast<int>(s.kept.size()) >= num_qubits) {
        throw BadSubset("partial_trace: keep must be a non-empty proper subset");
    }
    for (size_t i = 0; i < s.kept.size(); ++i) {
        if (s.kept[i] < 1 || s.kept[i] > num_qubits) {
            throw BadSubset("partial_trace: qubit label out of range");
        }
        if (i > 0 && s.kept[i] == s.kept[i - 1]) {
            throw BadSubset("partial_trace: duplicate qubit label");
        }
    }
    for (int q = 1; q <= num_qubits; ++q) {
        if (!std::binary_search(s.kept.begin(), s.kept.end(), q)) s.traced.push_back(q);
    }
    return s;
}

// Scatter the bits of `value` (MSB first) into the given label positions.
int embed_bits(int value, const std::vector<int>& labels, int num_qubits) {
    int idx = 0;
    const int n = static_cast<int>(labels.size());
    for (int i = 0; i < n; ++i) {
        const int bit = (value >> (n - 1 - i)) & 1;
        idx |= bit << (num_qubits - labels[i]);
    }
    return idx;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const int> keep,
                            int num_qubits) {
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    if (rho.rows() != dim || rho.cols() != dim) {
        throw std::invalid_argument("partial_trace: dimension does not match qubit count");
    }
    const SubsetSplit s = split_subset(keep, num_qubits);
    const int kd = 1 << s.kept.size();
    const int td = 1 << s.traced.size();

    ComplexMatrix out = ComplexMatrix::Zero(kd, kd);
    for (int a = 0; a < kd; ++a) {
        const int ra = embed_bits(a, s.kept, num_qubits);
        for (int b = 0; b < kd; ++b) {
            const int rb = embed_bits(b, s.kept, num_qubits);
            Complex sum = 0.0;
            for (int o = 0; o < td; ++o) {
                const int ro = embed_bits(o, s.traced, num_qubits);
                sum += rho(ra | ro, rb | ro);
            }
            out(a, b) = sum;
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexVector& psi, std::span<const int> keep,
                            int num_qubits) {
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    if (psi.size() != dim) {
        throw std::invalid_argument("partial_trace: state dimension does not match qubit count");
    }
    if (std::abs(psi.norm() - 1.0) > 1e-6) {
        throw std::invalid_argument("partial_trace: state is not normalized");
    }
    const ComplexMatrix rho = psi * psi.adjoint();
    return partial_trace(rho, keep, num_qubits);
}

std::array<double, 4> sorted_sqrt_eigvals_rr(const ComplexMatrix& rho,
                                             const ComplexMatrix& rho_tilde) {
    if (rho.rows() != 4 || rho.cols() != 4 || rho_tilde.rows() != 4 || rho_tilde.cols() != 4) {
        throw std::invalid_argument("sorted_sqrt_eigvals_rr: expected 4x4 matrices");
    }
    if (!is_hermitian(rho)) {
        throw NumericalBreakdown("sorted_sqrt_eigvals_rr: rho is not Hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > 1e-6 || std::abs(rho.trace().imag()) > 1e-6) {
        throw NumericalBreakdown("sorted_sqrt_eigvals_rr: rho trace is not 1");
    }
    static const ComplexMatrix flip = tensor_product(pauli_y(), pauli_y());
    const double scale = std::max(1.0, rho.cwiseAbs().maxCoeff());
    if ((rho_tilde - ComplexMatrix(flip * rho.conjugate() * flip)).cwiseAbs().maxCoeff() >
        1e-10 * scale) {
        throw NumericalBreakdown("sorted_sqrt_eigvals_rr: rho_tilde is not the spin flip of rho");
    }

    // The sqrt eigenvalues of rho * rho_tilde equal the singular values of
    // sqrt(rho) * (sigma_y x sigma_y) * conj(sqrt(rho)); the non-Hermitian
    // product loses half the significant digits at its degenerate kernel, the
    // singular-value form does not.
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> rho_eig(rho);
    if (rho_eig.info() != Eigen::Success) {
        throw NumericalBreakdown("sorted_sqrt_eigvals_rr: eigensolver failed");
    }
    Eigen::Vector4d d = rho_eig.eigenvalues();
    for (Eigen::Index k = 0; k < 4; ++k) {
        if (d(k) < tol::kEigRealFloor) {
            throw NumericalBreakdown("sorted_sqrt_eigvals_rr: rho eigenvalue " +
                                     std::to_string(d(k)) + " below the tolerated floor");
        }
        d(k) = std::sqrt(std::max(0.0, d(k)));
    }
    const ComplexMatrix sqrt_rho =
        rho_eig.eigenvectors() * d.asDiagonal() * rho_eig.eigenvectors().adjoint();

    Eigen::JacobiSVD<ComplexMatrix> svd(sqrt_rho * flip * sqrt_rho.conjugate());
    std::array<double, 4> out{};
    for (Eigen::Index k = 0; k < 4; ++k) out[static_cast<size_t>(k)] = svd.singularValues()(k);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace fiberising
