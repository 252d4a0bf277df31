#include "hjbx/poly_system.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "hjbx/errors.hpp"

namespace hjbx {

void PolySystem::validate() const {
    if (n < 1 || m < 1) throw DimensionMismatch("PolySystem: n and m must be >= 1");
    if (F.rows() != n || F.cols() != n) throw DimensionMismatch("PolySystem: F must be n x n");
    if (G.rows() != n || G.cols() != m) throw DimensionMismatch("PolySystem: G must be n x m");
    if (Q.rows() != n || Q.cols() != n) throw DimensionMismatch("PolySystem: Q must be n x n");
    if (S.rows() != n || S.cols() != m) throw DimensionMismatch("PolySystem: S must be n x m");
    if (R.rows() != m || R.cols() != m) throw DimensionMismatch("PolySystem: R must be m x m");

    Eigen::LLT<Eigen::MatrixXd> rchol(R);
    if (rchol.info() != Eigen::Success) throw IndefiniteR("R is not positive definite");

    // standard LQR detectability surrogate
    const Eigen::MatrixXd qtil = Q - S * rchol.solve(S.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (qtil + qtil.transpose()));
    if (es.eigenvalues().minCoeff() < -1e-10) {
        throw DimensionMismatch("Q - S R^-1 S' is not positive semidefinite");
    }

    for (const auto& [deg, per_state] : dynamics_terms) {
        if (deg < 2) throw DimensionMismatch("dynamics term of degree < 2");
        if (static_cast<int>(per_state.size()) != n) {
            throw DimensionMismatch("dynamics term needs one tensor per state coordinate");
        }
        for (const auto& t : per_state) {
            if (t.dim() != n + m || t.degree() != deg) {
                throw DimensionMismatch("dynamics tensor dim/degree mismatch");
            }
        }
    }
    for (const auto& [deg, t] : lagrangian_terms) {
        if (deg < 3) throw DimensionMismatch("lagrangian term of degree < 3");
        if (t.dim() != n + m || t.degree() != deg) {
            throw DimensionMismatch("lagrangian tensor dim/degree mismatch");
        }
    }
}

Eigen::VectorXd PolySystem::dynamics(const Eigen::VectorXd& z, const Eigen::VectorXd& u) const {
    if (z.size() != n || u.size() != m) throw DimensionMismatch("dynamics: state/control size");
    Eigen::VectorXd out = F * z + G * u;
    if (!dynamics_terms.empty()) {
        Eigen::VectorXd w(n + m);
        w << z, u;
        for (const auto& [deg, per_state] : dynamics_terms) {
            (void)deg;
            for (int s = 0; s < n; ++s) out(s) += per_state[static_cast<std::size_t>(s)].eval(w);
        }
    }
    return out;
}

double PolySystem::lagrangian(const Eigen::VectorXd& z, const Eigen::VectorXd& u) const {
    if (z.size() != n || u.size() != m) throw DimensionMismatch("lagrangian: state/control size");
    double l = 0.5 * (z.dot(Q * z) + 2.0 * z.dot(S * u) + u.dot(R * u));
    if (!lagrangian_terms.empty()) {
        Eigen::VectorXd w(n + m);
        w << z, u;
        for (const auto& [deg, t] : lagrangian_terms) {
            (void)deg;
            l += t.eval(w);
        }
    }
    return l;
}

PolySystem make_lq_system(const Eigen::MatrixXd& F, const Eigen::MatrixXd& G,
                          const Eigen::MatrixXd& Q, const Eigen::MatrixXd& S,
                          const Eigen::MatrixXd& R) {
    PolySystem sys;
    sys.n = static_cast<int>(F.rows());
    sys.m = static_cast<int>(G.cols());
    sys.F = F;
    sys.G = G;
    sys.Q = Q;
    sys.S = S;
    sys.R = R;
    return sys;
}

PolySystem make_scalar_quadratic_system() {
    PolySystem sys = make_lq_system(Eigen::MatrixXd::Zero(1, 1), Eigen::MatrixXd::Ones(1, 1),
                                    Eigen::MatrixXd::Ones(1, 1), Eigen::MatrixXd::Zero(1, 1),
                                    Eigen::MatrixXd::Ones(1, 1));
    SymTensor x2(2, 2); // variables (z, u)
    x2.set_coeff(MultiIndex{0, 0}, 1.0);
    sys.dynamics_terms[2] = {x2};
    return sys;
}

} // namespace hjbx
