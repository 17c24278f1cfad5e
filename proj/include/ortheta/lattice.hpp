// Even lattices: discriminant forms, isotropic splits, adapted isometries,
// and lattice point enumeration under a positive definite majorant.
#pragma once

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ortheta/exact.hpp"
#include "ortheta/errors.hpp"

namespace ortheta {

struct EvenLattice {
    IntMat gram;
    int b_plus = 0, b_minus = 0;
    std::string name;

    int rank() const { return gram.rows; }
    int sig() const { return b_plus - b_minus; }

    Rat bilin(const RatVec& x, const RatVec& y) const;
    Rat q(const RatVec& x) const; // (x,x)/2
    bool in_dual(const RatVec& x) const;
};

// rejects non-symmetric, odd-diagonal and degenerate input
EvenLattice make_lattice(const IntMat& gram, const std::string& name = "");

// signature of a rational symmetric matrix by exact congruence diagonalization
std::pair<int, int> exact_signature(const RatMat& A);

struct DiscriminantForm {
    EvenLattice lattice;
    std::vector<Int> invariant_factors;   // nontrivial elementary divisors
    std::vector<RatVec> coset_reps;       // canonical reps, coordinates in [0,1)
    std::vector<Rat> q_values;            // q mod 1 per coset

    int size() const { return static_cast<int>(coset_reps.size()); }
    int index_of(const RatVec& x) const;  // x reduced mod 1, must exist
    int reduce(const RatVec& x) const;    // arbitrary dual vector -> coset index
    int add(int i, int j) const;
    int neg(int i) const;
    Rat bilinear_mod1(int i, int j) const;

  private:
    std::map<RatVec, int> index_;
    friend DiscriminantForm discriminant_group(const EvenLattice&);
};

DiscriminantForm discriminant_group(const EvenLattice& L);

std::optional<IntVec> find_isotropic(const EvenLattice& L, long height_bound);

struct IsotropicSplit {
    EvenLattice L;
    IntVec z;          // primitive isotropic, L-coordinates
    RatVec z_prime;    // in L', (z, z') = 1
    Int N;             // (z, L) = N Z
    IntVec zeta;       // (zeta, z) = N
    IntMat L1_basis;   // columns: basis of L1 in L-coordinates
    EvenLattice L1;
    DiscriminantForm DL;        // discriminant form of L
    DiscriminantForm DL1;       // discriminant form of L1
    std::vector<int> Mprime_reps;  // D_L coset indices lying in M'/L

    RatVec z_star() const;              // z' - q(z') z, isotropic companion
    RatVec project_L1(const RatVec& x) const;  // orthogonal projection, L-coords
    RatVec to_L1_coords(const RatVec& x_in_L_coords) const;
    RatVec from_L1_coords(const RatVec& c) const;
};

IsotropicSplit split_at(const EvenLattice& L, const IntVec& z);

// pi(lambda) = lambda_{L1} - ((lambda,z)/N) zeta_{L1}, result in L1-coordinates
RatVec project_pi(const IsotropicSplit& split, const RatVec& lambda);
// induced surjection M'/L -> D_{L1} on coset indices
int project_pi_coset(const IsotropicSplit& split, int coset_of_DL);

struct Isometry {
    Eigen::MatrixXd m;  // maps L-coordinates to R^{b+,b-} coordinates
    int b_plus = 0, b_minus = 0;
    double tolerance = 1e-12;

    Eigen::VectorXd apply(const RatVec& x) const;
    Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
    // squared norms of the positive / negative parts
    double plus_norm2(const Eigen::VectorXd& v) const;
    double minus_norm2(const Eigen::VectorXd& v) const;
    double majorant2(const Eigen::VectorXd& v) const { return plus_norm2(v) + minus_norm2(v); }
    double isometry_defect(const IntMat& gram) const;
};

Isometry standard_isometry(const EvenLattice& L);

// repeatedly split at a found isotropic vector until the core is anisotropic
std::vector<IsotropicSplit> build_tower(const EvenLattice& L, long height_bound = 10);

// v(z_j + z_j^*/2) = e_{j+1}, v(z_j - z_j^*/2) = e_{b-j}, spectral core
Isometry adapted_isometry(const EvenLattice& L, const std::vector<IsotropicSplit>& tower);

// restriction of an adapted isometry to L1 of the leading split,
// as an isometry of L1 onto R^{b+-1, b--1}
Isometry restrict_isometry(const Isometry& v, const IsotropicSplit& split);

inline constexpr long kDefaultEnumCap = 10000000;

// all x in L+gamma with majorant(x - center) <= R^2; deterministic order
using PointVisitor = std::function<void(const std::vector<long>& n, const RatVec& x)>;

void enumerate_coset_visit(const EvenLattice& L, const RatVec& gamma, const Isometry& v0,
                           double R, const PointVisitor& visit,
                           const Eigen::VectorXd* center = nullptr, long cap = kDefaultEnumCap);

std::vector<RatVec> enumerate_coset(const EvenLattice& L, const RatVec& gamma,
                                    const Isometry& v0, double R, long cap = kDefaultEnumCap);

struct HyperboloidSlice {
    std::vector<RatVec> points;
    bool empty_slice = false;  // flagged when B^2 < 2m
};

// all x in L+beta with q(x) = m and |v0^+(x)| <= B
HyperboloidSlice enumerate_hyperboloid(const EvenLattice& L, const RatVec& beta, const Rat& m,
                                       const Isometry& v0, double B, long cap = kDefaultEnumCap);

} // namespace ortheta
