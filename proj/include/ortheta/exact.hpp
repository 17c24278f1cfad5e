// Exact integer and rational linear algebra on top of GMP.
// Row-reduced solves, Smith normal form with unimodular transforms,
// integer kernels and basis completion. Everything here is exact.
#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ortheta {

using Int = mpz_class;
using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

// x mod 1 reduced into [0, 1)
Rat frac_mod1(const Rat& x);

// parse/print "p/q" (also accepts plain integers)
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& x);

struct RatMat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;
    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}
    Rat& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rat& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
    static RatMat identity(int n);
};

struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;
    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {}
    Int& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
    static IntMat identity(int n);
    RatMat to_rat() const;
};

RatMat rat_mul(const RatMat& A, const RatMat& B);
IntMat transposed(const IntMat& A);
RatVec rat_mul_vec(const RatMat& A, const RatVec& x);
Rat rat_dot(const RatVec& x, const RatVec& y);

// Solve A x = b exactly; nullopt when inconsistent. A need not be square;
// when underdetermined the solution with free variables set to zero is returned.
std::optional<RatVec> rat_solve(const RatMat& A, const RatVec& b);
// Inverse of a square nonsingular matrix; throws std::domain_error if singular.
RatMat rat_inverse(const RatMat& A);
Rat rat_det(const RatMat& A);
int rat_rank(RatMat A);

Int int_gcd(const Int& a, const Int& b);
// g = gcd(v), and coefficients w with sum w_i v_i = g (v not all zero)
Int int_ext_gcd_vec(const IntVec& v, IntVec& w);

// Smith normal form: U*A*V = D diagonal with d_1 | d_2 | ..., d_i >= 0,
// U, V unimodular.
struct SmithResult {
    IntMat D, U, V;
};
SmithResult smith_normal_form(const IntMat& A);

IntMat int_mul(const IntMat& A, const IntMat& B);
Int int_det(const IntMat& A);

// Basis of {x in Z^cols : A x = 0}, as columns of the returned matrix.
IntMat int_kernel(const IntMat& A);

// B has p primitive columns in Z^b (invariant factors all 1).
bool is_primitive_sublattice(const IntMat& B);
// Columns extending the columns of a primitive B to a Z-basis of Z^b.
IntMat complete_to_basis(const IntMat& B);

} // namespace ortheta
