#include "ortheta/weil.hpp"

#include <cmath>

namespace ortheta {

std::complex<double> unit_phase(const Rat& x) {
    Rat r = frac_mod1(x);
    return std::polar(1.0, 2.0 * M_PI * r.get_d());
}

WeilOperator rho_T(const DiscriminantForm& D) {
    int n = D.size();
    WeilOperator op;
    op.matrix = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) op.matrix(i, i) = unit_phase(D.q_values[i]);
    return op;
}

WeilOperator rho_S(const DiscriminantForm& D, int sig) {
    int n = D.size();
    WeilOperator op;
    op.matrix = Eigen::MatrixXcd(n, n);
    std::complex<double> pref = unit_phase(Rat(-sig, 8)) / std::sqrt(static_cast<double>(n));
    for (int g = 0; g < n; ++g)
        for (int d = 0; d < n; ++d)
            op.matrix(d, g) = pref * unit_phase(-D.bilinear_mod1(g, d));
    return op;
}

WeilOperator rho_word(const DiscriminantForm& D, int sig, const std::string& word) {
    if (word.empty()) throw BadSymbol("empty word");
    int n = D.size();
    Eigen::MatrixXcd S = rho_S(D, sig).matrix;
    Eigen::MatrixXcd T = rho_T(D).matrix;
    Eigen::MatrixXcd Tinv = T.conjugate(); // T is diagonal unitary
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(n, n);
    for (char c : word) {
        switch (c) {
            case 'S': M = M * S; break;
            case 'T': M = M * T; break;
            case 't': M = M * Tinv; break;
            default: throw BadSymbol(std::string("bad generator symbol: ") + c);
        }
    }
    WeilOperator op;
    op.matrix = M;
    return op;
}

WeilReport verify_relations(const DiscriminantForm& D, int sig, double tol) {
    (void)tol;
    int n = D.size();
    Eigen::MatrixXcd S = rho_S(D, sig).matrix;
    Eigen::MatrixXcd T = rho_T(D).matrix;
    Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
    WeilReport r;
    r.unitarity_S = (S.adjoint() * S - I).cwiseAbs().maxCoeff();
    r.unitarity_T = (T.adjoint() * T - I).cwiseAbs().maxCoeff();
    Eigen::MatrixXcd ST = S * T;
    r.braid_defect = (ST * ST * ST - S * S).cwiseAbs().maxCoeff();
    Eigen::MatrixXcd S2 = S * S;
    Eigen::MatrixXcd S4 = S2 * S2;
    r.s8_defect = (S4 * S4 - I).cwiseAbs().maxCoeff();
    return r;
}

} // namespace ortheta
