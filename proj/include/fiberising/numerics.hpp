// numerics.hpp — dense complex-matrix kernel for three-qubit work:
// tensor products, Hermitian matrix exponential, partial trace, and the
// small eigenproblem behind the concurrence.
//
// Basis convention (fixed globally): |e> = index 0, |g> = index 1, so
// sigma_z|e> = +|e> and sigma_z|g> = -|g>. Composite states are indexed
// atom1 (x) atom2 (x) atom3 with atom 1 as the most significant bit.

#pragma once

#include <array>
#include <complex>
#include <span>

#include <Eigen/Dense>

#include "fiberising/errors.hpp"
#include "fiberising/tolerances.hpp"

namespace fiberising {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// ---- 2x2 operators --------------------------------------------------------

ComplexMatrix identity(Eigen::Index n);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix sigma_plus();   // |e><g|
ComplexMatrix sigma_minus();  // |g><e|

// ---- core operations ------------------------------------------------------

// Kronecker product; entry ((i1 i2),(j1 j2)) = a(i1,j1) * b(i2,j2).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& a, double rel_tol = tol::kHermiticity);

// Spectral decomposition of a Hermitian matrix, reusable across a time grid.
struct HermitianEigen {
    Eigen::VectorXd values;
    ComplexMatrix vectors;  // columns are the eigenvectors
};

// Throws NonHermitianInput if the Hermiticity tolerance is violated.
HermitianEigen eigh(const ComplexMatrix& h);

// U = exp(-i h t) via spectral decomposition; unitary to tol::kUnitarity.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t);
ComplexMatrix expm_hermitian(const HermitianEigen& eig, double t);

// Reduced density matrix of the qubits listed in `keep` (labels 1..num_qubits,
// label 1 = most significant bit; kept qubits stay in ascending label order).
// Throws BadSubset if keep is empty, full, out of range, or has duplicates.
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const int> keep,
                            int num_qubits);
ComplexMatrix partial_trace(const ComplexVector& psi, std::span<const int> keep,
                            int num_qubits);

// Non-negative square roots of the four eigenvalues of rho * rho_tilde,
// sorted descending. rho_tilde must be (sigma_y x sigma_y) rho* (sigma_y x sigma_y).
// Throws NumericalBreakdown if any eigenvalue falls outside the tolerated range.
std::array<double, 4> sorted_sqrt_eigvals_rr(const ComplexMatrix& rho,
                                             const ComplexMatrix& rho_tilde);

}  // namespace fiberising
