// Homogeneous polynomial algebra with exact Gaussian-rational coefficients:
// Laplacian, harmonic projection, Gegenbauer polynomials, the spherical
// harmonic basis indexed by weakly decreasing multi-indices, and the heat
// operator correction used inside theta kernels.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <vector>

#include "ortheta/exact.hpp"
#include "ortheta/errors.hpp"

namespace ortheta {

// Gaussian rational a + b i
struct QQi {
    Rat re, im;
    QQi() : re(0), im(0) {}
    QQi(const Rat& r) : re(r), im(0) {}
    QQi(const Rat& r, const Rat& i) : re(r), im(i) {}
    QQi operator+(const QQi& o) const { return {re + o.re, im + o.im}; }
    QQi operator-(const QQi& o) const { return {re - o.re, im - o.im}; }
    QQi operator*(const QQi& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const QQi& o) const { return re == o.re && im == o.im; }
    bool is_zero() const { return re == 0 && im == 0; }
    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

struct HomPoly {
    int n = 0; // number of variables
    int k = 0; // homogeneity degree
    std::map<std::vector<int>, QQi> terms;

    HomPoly() = default;
    HomPoly(int nvars, int degree) : n(nvars), k(degree) {}

    static HomPoly zero(int n, int k) { return HomPoly(n, k); }
    static HomPoly one(int n);
    static HomPoly variable(int n, int i); // x_i, 0-indexed
    static HomPoly norm2(int n);           // sum_i x_i^2
    // |x|_j^2 = x_j^2 + ... + x_{n-1}^2 (0-indexed tail norm)
    static HomPoly tail_norm2(int n, int j);

    bool is_zero() const { return terms.empty(); }
    void add_term(const std::vector<int>& e, const QQi& c);

    HomPoly operator+(const HomPoly& o) const;
    HomPoly operator-(const HomPoly& o) const;
    HomPoly operator*(const HomPoly& o) const;
    HomPoly scaled(const QQi& c) const;
    HomPoly pow(int e) const;

    std::complex<double> eval(const Eigen::VectorXd& x) const;
    std::complex<double> eval(const Eigen::VectorXcd& x) const;
    QQi eval_exact(const RatVec& x) const;

    // p(M y) for a rational square matrix M
    HomPoly compose_linear(const RatMat& M) const;
    // view the same polynomial in more variables (prepend `offset` unused ones)
    HomPoly embed(int new_n, int offset) const;
};

HomPoly laplacian(const HomPoly& p);

// orthogonal projection of P^k(R^n) onto harmonic polynomials
HomPoly project_H(const HomPoly& p);

// Gegenbauer polynomial C_deg^lam evaluated exactly at rational z
Rat gegenbauer_value(int deg, const Rat& lam, const Rat& z);
// |x|_j^deg * C_deg^lam(x_{j}/|x|_j) as a genuine polynomial (0-indexed axis)
HomPoly gegenbauer_axial(int n, int j, int deg, const Rat& lam);

struct MultiIndexKappa {
    std::vector<int> ks; // k_0 >= k_1 >= ... >= k_{n-2} >= 0
    int sign = +1;       // sign carried by the last entry

    int top() const { return ks.empty() ? 0 : ks.front(); }
    int second() const { return ks.size() > 1 ? ks[1] : ks.front(); }
    MultiIndexKappa drop_first() const;
    std::string to_string() const;
};

// basis of harmonic polynomials of degree k in n >= 2 variables
std::vector<std::pair<MultiIndexKappa, HomPoly>> vilenkin_basis(int n, int k);
// the single basis polynomial for a given multi-index
HomPoly vilenkin_poly(int n, const MultiIndexKappa& kappa);

long harmonic_dimension(int n, int k);

// residual of H(x_0^{k-l} h(x')) - ((k-l)!/2^{k-l}) |x|^{k-l} C_{k-l}^{(n-2)/2+l}(x_0/|x|) h(x')
// for h harmonic of degree l in n-1 variables; must vanish identically
HomPoly one_step_projection_residual(int k, int l, const HomPoly& h);

// truncating exponential of the (-1/8 pi y) Laplacian: [p, Dp, D^2 p, ...]
std::vector<HomPoly> heat_terms(const HomPoly& p);
std::complex<double> heat_eval(const std::vector<HomPoly>& terms, double y,
                               const Eigen::VectorXd& x);
// coefficients of exp(-Lap/8 pi y) p as a double-precision sparse map
std::map<std::vector<int>, std::complex<double>> heat_coeffs(const HomPoly& p, double y);

} // namespace ortheta
