#include "ortheta/theta.hpp"

#include <cmath>

namespace ortheta {

void require_plus_grading(const HomPoly& p, int b_plus, int b) {
    if (p.n != b && p.n != b_plus) throw BadPolynomialGrading("p has wrong variable count");
    if (p.n == b) {
        for (const auto& [e, c] : p.terms)
            for (int i = b_plus; i < b; ++i)
                if (e[i] != 0) throw BadPolynomialGrading("p must be of degree (k, 0)");
    }
}

namespace {

Eigen::MatrixXd gram_to_dense(const IntMat& g) {
    Eigen::MatrixXd G(g.rows, g.cols);
    for (int i = 0; i < g.rows; ++i)
        for (int j = 0; j < g.cols; ++j) G(i, j) = g(i, j).get_d();
    return G;
}

void require_orthogonal(const Eigen::MatrixXd& g, const IntMat& gram) {
    Eigen::MatrixXd G = gram_to_dense(gram);
    if ((g.transpose() * G * g - G).cwiseAbs().maxCoeff() > 1e-9)
        throw NotInOrthogonalGroup();
}

} // namespace

Cplx theta_coset(const EvenLattice& L, const Isometry& v0, const RatVec& gamma, Cplx tau,
                 const Eigen::MatrixXd& g, const Eigen::VectorXd& alpha,
                 const Eigen::VectorXd& beta, const HomPoly& p, double R, double* tail_out) {
    if (tau.imag() <= 0) throw DomainError("tau must be in the upper half plane");
    require_orthogonal(g, L.gram);
    require_plus_grading(p, L.b_plus, L.rank());
    int b = L.rank();
    double y = tau.imag(), x = tau.real();
    HomPoly pb = (p.n == b) ? p : p.embed(b, 0);
    std::vector<HomPoly> heat = heat_terms(pb);

    // the Gaussian weight decays in the majorant of g^{-1}(lambda + beta)
    Isometry vg = v0;
    vg.m = v0.m * g.inverse();
    Eigen::VectorXd Galpha = gram_to_dense(L.gram) * alpha;
    Eigen::VectorXd center = -beta;

    Cplx sum = 0;
    double shell_sum = 0;
    enumerate_coset_visit(
        L, gamma, vg, R,
        [&](const std::vector<long>&, const RatVec& lam) {
            Eigen::VectorXd xv(b);
            for (int i = 0; i < b; ++i) xv[i] = lam[i].get_d() + beta[i];
            Eigen::VectorXd v = vg.m * xv;
            double qp = 0.5 * v.head(L.b_plus).squaredNorm();
            double qm = -0.5 * v.tail(L.b_minus).squaredNorm();
            Cplx pval = heat_eval(heat, y, v);
            double phase = 0;
            for (int i = 0; i < b; ++i) phase += (lam[i].get_d() + 0.5 * beta[i]) * Galpha[i];
            Cplx expo = 2.0 * M_PI * Cplx(0, 1) * (x * (qp + qm) - phase) +
                        Cplx(-2.0 * M_PI * y * (qp - qm), 0);
            Cplx term = pval * std::exp(expo);
            sum += term;
            double maj = qp - qm; // majorant^2 / 2
            if (2 * maj > 0.81 * R * R) shell_sum += std::abs(term);
        },
        &center);
    double rho = std::exp(-0.2 * M_PI * y * R * R);
    // geometric extrapolation of the outer shell plus a Gaussian floor for
    // the first omitted shell (covers tiny radii where the shell is empty)
    double floor_term = std::exp(-M_PI * y * R * R) * std::pow(R + 1.0, b + p.k);
    double tail = shell_sum * rho / std::max(1e-12, 1.0 - rho) + floor_term;
    if (tail_out) *tail_out = tail;
    return std::pow(y, 0.5 * L.b_minus) * sum;
}

ThetaValue theta_full_ab(const EvenLattice& L, const Isometry& v0, const DiscriminantForm& D,
                         Cplx tau, const Eigen::MatrixXd& g, const Eigen::VectorXd& alpha,
                         const Eigen::VectorXd& beta, const HomPoly& p, double R) {
    ThetaValue out;
    out.radius = R;
    out.components = Eigen::VectorXcd::Zero(D.size());
    for (int i = 0; i < D.size(); ++i) {
        double t = 0;
        out.components[i] = theta_coset(L, v0, D.coset_reps[i], tau, g, alpha, beta, p, R, &t);
        out.tail_estimate = std::max(out.tail_estimate, t);
    }
    return out;
}

ThetaValue theta_full(const EvenLattice& L, const Isometry& v0, const DiscriminantForm& D,
                      Cplx tau, const Eigen::MatrixXd& g, const HomPoly& p, double R) {
    int b = L.rank();
    Eigen::VectorXd zero = Eigen::VectorXd::Zero(b);
    return theta_full_ab(L, v0, D, tau, g, zero, zero, p, R);
}

TransformReport check_transformation(const EvenLattice& L, const Isometry& v0,
                                     const DiscriminantForm& D, Cplx tau,
                                     const Eigen::MatrixXd& g, const HomPoly& p, char which,
                                     double R, double tol) {
    int b = L.rank();
    Eigen::VectorXd zero = Eigen::VectorXd::Zero(b);
    int k = p.k;
    TransformReport rep;
    if (which == 'T') {
        ThetaValue lhs = theta_full_ab(L, v0, D, tau + 1.0, g, zero, zero, p, R);
        ThetaValue rhs0 = theta_full_ab(L, v0, D, tau, g, zero, zero, p, R);
        Eigen::VectorXcd rhs = rho_T(D).matrix * rhs0.components;
        rep.defect = (lhs.components - rhs).cwiseAbs().maxCoeff();
        rep.tail_estimate = lhs.tail_estimate + rhs0.tail_estimate;
    } else if (which == 'S') {
        ThetaValue lhs = theta_full_ab(L, v0, D, -1.0 / tau, g, zero, zero, p, R);
        ThetaValue rhs0 = theta_full_ab(L, v0, D, tau, g, zero, zero, p, R);
        // phi(tau)^{2k+sig} with the principal logarithm
        Cplx weight = std::exp(0.5 * (2.0 * k + L.sig()) * std::log(tau));
        Eigen::VectorXcd rhs = weight * (rho_S(D, L.sig()).matrix * rhs0.components);
        rep.defect = (lhs.components - rhs).cwiseAbs().maxCoeff();
        rep.tail_estimate = lhs.tail_estimate + rhs0.tail_estimate;
    } else {
        throw BadSymbol("which must be S or T");
    }
    rep.pass = rep.defect < tol;
    if (!rep.pass && rep.tail_estimate > tol) throw TruncationInsufficient();
    return rep;
}

} // namespace ortheta
