#pragma once

#include <map>
#include <vector>

#include <Eigen/Core>

#include "hjbx/sym_tensor.hpp"

namespace hjbx {

/// Smooth control system and Lagrangian as graded Taylor data around the
/// origin. Higher-degree tensors live over the n+m concatenated variables
/// (z_0..z_{n-1}, u_0..u_{m-1}).
///
///   zdot = F z + G u + sum_{k>=2} f^[k](z,u)
///   l    = (z'Qz + 2 z'Su + u'Ru)/2 + sum_{k>=3} l^[k](z,u)
struct PolySystem {
    int n = 0; ///< state dimension
    int m = 0; ///< control dimension
    Eigen::MatrixXd F, G, Q, S, R;
    std::map<int, std::vector<SymTensor>> dynamics_terms;  ///< degree -> one tensor per state coordinate
    std::map<int, SymTensor> lagrangian_terms;             ///< degree -> tensor

    /// Checks dimensions, R > 0 (throws IndefiniteR) and
    /// Q - S R^-1 S' >= -1e-10 (throws DimensionMismatch on shape errors,
    /// NonStabilizable-adjacent failures surface later in solve_are).
    void validate() const;

    Eigen::VectorXd dynamics(const Eigen::VectorXd& z, const Eigen::VectorXd& u) const;
    double lagrangian(const Eigen::VectorXd& z, const Eigen::VectorXd& u) const;
};

/// Linear-quadratic system with no higher terms.
PolySystem make_lq_system(const Eigen::MatrixXd& F, const Eigen::MatrixXd& G,
                          const Eigen::MatrixXd& Q, const Eigen::MatrixXd& S,
                          const Eigen::MatrixXd& R);

/// The scalar benchmark xdot = u + x^2, l = (x^2 + u^2)/2.
PolySystem make_scalar_quadratic_system();

} // namespace hjbx
