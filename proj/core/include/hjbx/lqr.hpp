#pragma once

#include <utility>

#include <Eigen/Core>

#include "hjbx/poly_system.hpp"

namespace hjbx {

/// Solution of the LQR problem attached to a PolySystem's quadratic part.
struct LqrData {
    Eigen::MatrixXd P;   ///< quadratic cost kernel, symmetric >= 0
    Eigen::MatrixXd K;   ///< feedback gain, K = -R^-1 (PG + S)'
    Eigen::VectorXcd mu; ///< closed-loop eigenvalues, sorted (Re desc, Im asc)
    Eigen::MatrixXcd Psi;///< rows: unit-norm left eigenvectors of F + GK, same order
};

/// Solve A'X + XA + C = 0 for symmetric C (Bartels-Stewart via complex Schur).
Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& A, const Eigen::MatrixXd& C);

/// Gain K with F + GK Hurwitz (K = 0 when F already is). Shifted-Lyapunov
/// construction; throws NonStabilizable when no stabilizing gain is found.
Eigen::MatrixXd stabilizing_gain(const Eigen::MatrixXd& F, const Eigen::MatrixXd& G);

/// Residual of the algebraic Riccati equation
/// F'P + PF + Q - (PG+S) R^-1 (PG+S)'  (Frobenius norm).
double are_residual(const PolySystem& sys, const Eigen::MatrixXd& P);

/// Newton-Kleinman solution of the ARE: repeated Lyapunov solves from a
/// stabilizing initial gain, residual threshold 1e-12*(1+|P|), max 100
/// iterations. Deterministic for fixed input.
LqrData solve_are(const PolySystem& sys);

/// Eigenvalues (sorted by descending real part, ascending imaginary part)
/// and unit-norm left row eigenvectors of a real matrix.
/// Throws DefectiveMatrix when the eigenvector basis is deficient.
std::pair<Eigen::VectorXcd, Eigen::MatrixXcd> left_spectrum(const Eigen::MatrixXd& A);

/// Spectrum of the closed loop F + G K.
std::pair<Eigen::VectorXcd, Eigen::MatrixXcd> closed_loop_spectrum(const PolySystem& sys,
                                                                   const LqrData& lqr);

} // namespace hjbx
