// Truncated evaluation of the vector-valued Siegel theta kernels with
// polynomial insertion and heat-operator correction, plus the modular
// transformation checks for the generators S and T.
#pragma once

#include <complex>

#include "ortheta/lattice.hpp"
#include "ortheta/poly.hpp"
#include "ortheta/weil.hpp"

namespace ortheta {

using Cplx = std::complex<double>;

struct ThetaValue {
    Eigen::VectorXcd components; // indexed like D.coset_reps
    double radius = 0;
    double tail_estimate = 0;
};

// theta_{L+gamma}(tau, g; (alpha, beta); p), truncated at majorant radius R.
// p lives in the first b_plus variables (degree (k,0) grading enforced).
Cplx theta_coset(const EvenLattice& L, const Isometry& v0, const RatVec& gamma, Cplx tau,
                 const Eigen::MatrixXd& g, const Eigen::VectorXd& alpha,
                 const Eigen::VectorXd& beta, const HomPoly& p, double R,
                 double* tail_out = nullptr);

ThetaValue theta_full(const EvenLattice& L, const Isometry& v0, const DiscriminantForm& D,
                      Cplx tau, const Eigen::MatrixXd& g, const HomPoly& p, double R);

ThetaValue theta_full_ab(const EvenLattice& L, const Isometry& v0, const DiscriminantForm& D,
                         Cplx tau, const Eigen::MatrixXd& g, const Eigen::VectorXd& alpha,
                         const Eigen::VectorXd& beta, const HomPoly& p, double R);

struct TransformReport {
    double defect = 0;
    double tail_estimate = 0;
    bool pass = false;
};

// verifies Theta(M tau, g; M(alpha,beta); p) = phi^{2k+sig} rho(M) Theta(tau, g; ...)
// for M = T ('T') or M = S ('S'); throws TruncationInsufficient when the
// defect exceeds tol and the truncation tail dominates it
TransformReport check_transformation(const EvenLattice& L, const Isometry& v0,
                                     const DiscriminantForm& D, Cplx tau,
                                     const Eigen::MatrixXd& g, const HomPoly& p, char which,
                                     double R, double tol);

// grading guard: p must involve only the first b_plus variables
void require_plus_grading(const HomPoly& p, int b_plus, int b);

} // namespace ortheta
