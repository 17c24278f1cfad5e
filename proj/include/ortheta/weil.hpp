// The Weil representation of the metaplectic modular group on C[D_L],
// given on the standard generators S and T, with relation checks.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

#include "ortheta/lattice.hpp"

namespace ortheta {

// e(x) = exp(2 pi i x) with the rational argument reduced mod 1 first
std::complex<double> unit_phase(const Rat& x);

struct WeilOperator {
    Eigen::MatrixXcd matrix;
};

// rho(T) e_gamma = e(q(gamma)) e_gamma
WeilOperator rho_T(const DiscriminantForm& D);
// rho(S) e_gamma = e(-sig/8)/sqrt(|D|) sum_delta e(-(gamma,delta)) e_delta
WeilOperator rho_S(const DiscriminantForm& D, int sig);
// word over {S, T, t} with t = T^{-1}; left-to-right product of images
WeilOperator rho_word(const DiscriminantForm& D, int sig, const std::string& word);

struct WeilReport {
    double unitarity_S = 0, unitarity_T = 0;
    double braid_defect = 0; // |(ST)^3 - S^2|
    double s8_defect = 0;    // |S^8 - 1|
    bool pass(double tol) const {
        return unitarity_S < tol && unitarity_T < tol && braid_defect < tol && s8_defect < tol;
    }
};

WeilReport verify_relations(const DiscriminantForm& D, int sig, double tol);

} // namespace ortheta
