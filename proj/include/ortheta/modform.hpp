// Vector-valued cusp form data as Fourier coefficient maps: ingestion,
// reference coefficients (Ramanujan tau, classical Poincare series),
// the descent to the split-off lattice, and theta contraction.
#pragma once

#include <complex>
#include <map>
#include <random>

#include "ortheta/lattice.hpp"

namespace ortheta {

using Cplx = std::complex<double>;

struct CuspFormCoeffs {
    DiscriminantForm D;
    Rat weight;
    Rat max_n; // precision horizon
    std::map<std::pair<int, Rat>, Cplx> c;

    // 0 for absent on-support keys; HorizonExceeded beyond max_n
    Cplx coeff(int gamma, const Rat& n) const;
    // validates the support condition n > 0, n = q(gamma) mod 1
    void set(int gamma, const Rat& n, Cplx value);
    bool on_support(int gamma, const Rat& n) const;
};

CuspFormCoeffs make_coeffs(const DiscriminantForm& D, const Rat& weight, const Rat& horizon);

// Ramanujan tau via the 24th power of the Euler product
std::vector<Int> ramanujan_tau(int prec);
// tau(n) packaged as a weight-12 form on a trivial discriminant group
CuspFormCoeffs delta_coeffs(const DiscriminantForm& D, int prec);

// Kloosterman sum S(m,n;c) by direct summation over units mod c
double kloosterman(long m, long n, long c);
// classical weight-k index-m Poincare series coefficients (trivial D_L)
CuspFormCoeffs classical_poincare_coeffs(const DiscriminantForm& D, int k, int m, int prec,
                                         int c_cutoff = 300, double* tail_note = nullptr);

// coefficient level descent f -> f_{L1}(tau; (r,t))
CuspFormCoeffs descend_coeffs(const CuspFormCoeffs& f, const IsotropicSplit& split, long r,
                              long t);

struct ContractionResult {
    CuspFormCoeffs F;        // coefficients on D_K
    EvenLattice K;           // the sublattice with its own gram
    IntMat K_basis;          // columns in L-coordinates
    DiscriminantForm DK;
    bool truncated = false;  // some fiber terms fell beyond the source horizon
};

// theta contraction onto a primitive sublattice K (basis columns in L-coords);
// K^perp must be definite. With allow_truncated the positive definite case
// keeps the fiber sums cut at the source horizon and flags the result.
ContractionResult contract_theta(const CuspFormCoeffs& f, const EvenLattice& L,
                                 const IntMat& K_basis, const Rat& horizon_out,
                                 bool allow_truncated = false);

// deterministic random coefficients respecting the support condition
CuspFormCoeffs synthetic_coeffs(const DiscriminantForm& D, const Rat& weight,
                                const Rat& horizon, unsigned seed);

} // namespace ortheta
