#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ortheta/lattice.hpp"

using namespace ortheta;

namespace {

IntMat mat(const std::vector<std::vector<long>>& rows) {
    IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

EvenLattice U() { return make_lattice(mat({{0, 1}, {1, 0}}), "U"); }
EvenLattice U2() { return make_lattice(mat({{0, 2}, {2, 0}}), "U(2)"); }
EvenLattice A1() { return make_lattice(mat({{2}}), "A1"); }
EvenLattice A1m() { return make_lattice(mat({{-2}}), "A1(-1)"); }
EvenLattice UA1() {
    return make_lattice(mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 2}}), "U+A1");
}
EvenLattice UU() {
    return make_lattice(mat({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}), "U+U");
}

RatVec rv(const std::vector<Rat>& v) { return v; }

} // namespace

TEST_CASE("smith normal form basics") {
    IntMat A = mat({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    SmithResult s = smith_normal_form(A);
    IntMat lhs = int_mul(int_mul(s.U, A), s.V);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(lhs(i, j) == s.D(i, j));
    // invariant factors: gcd of entries 2, gcd of 2x2 minors 4, |det| 624
    CHECK(s.D(0, 0) == 2);
    CHECK(s.D(1, 1) == 2);
    CHECK(s.D(2, 2) == 156);
    CHECK(s.D(1, 1) % s.D(0, 0) == 0);
    CHECK(s.D(2, 2) % s.D(1, 1) == 0);
    CHECK(abs(int_det(s.U)) == 1);
    CHECK(abs(int_det(s.V)) == 1);
}

TEST_CASE("integer kernel") {
    IntMat A = mat({{1, 2, 3}});
    IntMat K = int_kernel(A);
    CHECK(K.cols == 2);
    for (int k = 0; k < K.cols; ++k) {
        Int acc(0);
        for (int j = 0; j < 3; ++j) acc += A(0, j) * K(j, k);
        CHECK(acc == 0);
    }
}

TEST_CASE("make_lattice validation and signatures") {
    CHECK(U().b_plus == 1);
    CHECK(U().b_minus == 1);
    CHECK(A1().b_plus == 1);
    CHECK(A1().b_minus == 0);
    CHECK(A1m().b_minus == 1);
    CHECK(UU().b_plus == 2);
    CHECK(UU().b_minus == 2);
    CHECK_THROWS_AS(make_lattice(mat({{2, 1}, {1, 1}})), OddDiagonal);
    CHECK_THROWS_AS(make_lattice(mat({{0, 0}, {0, 0}})), Degenerate);
    CHECK_THROWS_AS(make_lattice(mat({{0, 1}, {2, 0}})), NotSymmetric);
}

TEST_CASE("discriminant groups") {
    DiscriminantForm dU = discriminant_group(U());
    CHECK(dU.size() == 1);
    CHECK(dU.q_values[0] == 0);

    DiscriminantForm dA = discriminant_group(A1());
    CHECK(dA.size() == 2);
    // reps are 0 and 1/2, q(1/2) = 1/4
    REQUIRE(dA.coset_reps[1][0] == Rat(1, 2));
    CHECK(dA.q_values[1] == Rat(1, 4));

    DiscriminantForm dU2 = discriminant_group(U2());
    CHECK(dU2.size() == 4);
    CHECK(dU2.invariant_factors.size() == 2);
    // q(e1/2) = 0, q((e1+e2)/2) = 1/2
    int i10 = dU2.index_of(rv({Rat(1, 2), Rat(0)}));
    int i11 = dU2.index_of(rv({Rat(1, 2), Rat(1, 2)}));
    CHECK(dU2.q_values[i10] == 0);
    CHECK(dU2.q_values[i11] == Rat(1, 2));
}

TEST_CASE("bilinear-quadratic compatibility on the lattice suite") {
    for (const EvenLattice& L : {U(), U2(), A1(), A1m(), UA1(), UU()}) {
        DiscriminantForm D = discriminant_group(L);
        for (int i = 0; i < D.size(); ++i)
            for (int j = 0; j < D.size(); ++j) {
                int s = D.add(i, j);
                Rat lhs = frac_mod1(D.q_values[s] - D.q_values[i] - D.q_values[j]);
                CHECK(lhs == D.bilinear_mod1(i, j));
            }
    }
}

TEST_CASE("find_isotropic") {
    auto z = find_isotropic(U(), 1);
    REQUIRE(z.has_value());
    CHECK((*z)[0] == 1);
    CHECK((*z)[1] == 0);
    CHECK(!find_isotropic(A1(), 10).has_value());
    auto z3 = find_isotropic(UA1(), 2);
    REQUIRE(z3.has_value());
    CHECK((*z3)[0] == 1);
    CHECK((*z3)[1] == 0);
    CHECK((*z3)[2] == 0);
}

TEST_CASE("split_at U") {
    EvenLattice L = U();
    IsotropicSplit s = split_at(L, {Int(1), Int(0)});
    CHECK(s.N == 1);
    CHECK(s.zeta[0] == 0);
    CHECK(s.zeta[1] == 1);
    CHECK(s.z_prime[0] == 0);
    CHECK(s.z_prime[1] == 1);
    CHECK(s.L1.rank() == 0);
    RatVec lam = {Rat(0), Rat(0)};
    RatVec p = project_pi(s, lam);
    CHECK(p.empty());
}

TEST_CASE("split_at U(2)") {
    IsotropicSplit s = split_at(U2(), {Int(1), Int(0)});
    CHECK(s.N == 2);
    CHECK(s.zeta[1] == 1);
    CHECK(s.z_prime[0] == 0);
    CHECK(s.z_prime[1] == Rat(1, 2));
    // |D_L| = N^2 |D_L1|
    CHECK(s.DL.size() == 4);
    CHECK(s.DL1.size() == 1);
    CHECK(static_cast<long>(s.Mprime_reps.size()) == 2); // |M'/L| = |D_L|/N
}

TEST_CASE("split_at U+A1 and projection pi") {
    EvenLattice L = UA1();
    IsotropicSplit s = split_at(L, {Int(1), Int(0), Int(0)});
    CHECK(s.N == 1);
    CHECK(s.L1.rank() == 1);
    CHECK(s.L1.gram(0, 0) == 2);
    // lambda = (0,0,1/2) in L' projects to 1/2 in A1' coordinates
    RatVec lam = {Rat(0), Rat(0), Rat(1, 2)};
    RatVec p = project_pi(s, lam);
    REQUIRE(p.size() == 1);
    CHECK(abs(p[0]) == Rat(1, 2));
    // pi(zeta) = 0
    RatVec zeta(3);
    for (int i = 0; i < 3; ++i) zeta[i] = Rat(s.zeta[i]);
    RatVec p0 = project_pi(s, zeta);
    CHECK(p0[0] == 0);
    // pi maps L onto L1: images of basis vectors are integral and span
    bool surj = false;
    for (int i = 0; i < 3; ++i) {
        RatVec e(3, Rat(0));
        e[i] = 1;
        RatVec pi = project_pi(s, e);
        if (abs(pi[0]) == 1) surj = true;
        CHECK(pi[0].get_den() == 1);
    }
    CHECK(surj);
}

TEST_CASE("split determinant consistency across suite") {
    for (const EvenLattice& L : {U(), U2(), UA1(), UU()}) {
        auto z = find_isotropic(L, 2);
        REQUIRE(z.has_value());
        IsotropicSplit s = split_at(L, *z);
        Int detL = abs(int_det(L.gram));
        Int detL1 = s.L1.rank() ? abs(int_det(s.L1.gram)) : Int(1);
        CHECK(detL == s.N * s.N * detL1);
        CHECK(s.L1.b_plus == L.b_plus - 1);
        CHECK(s.L1.b_minus == L.b_minus - 1);
    }
}

TEST_CASE("standard isometry") {
    Isometry i1 = standard_isometry(A1());
    CHECK(i1.m(0, 0) == doctest::Approx(std::sqrt(2.0)));
    CHECK(i1.isometry_defect(A1().gram) < 1e-12);

    EvenLattice D2 = make_lattice(mat({{2, 0}, {0, -2}}), "diag(2,-2)");
    Isometry i2 = standard_isometry(D2);
    CHECK(i2.m(0, 0) == doctest::Approx(std::sqrt(2.0)));
    CHECK(i2.m(1, 1) == doctest::Approx(std::sqrt(2.0)));
    CHECK(i2.isometry_defect(D2.gram) < 1e-12);

    Isometry iu = standard_isometry(U());
    CHECK(iu.isometry_defect(U().gram) < 1e-12);
    CHECK(std::abs(std::abs(iu.m(0, 0)) - 1 / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("adapted isometry on towers") {
    for (const EvenLattice& L : {U(), UA1(), UU(), U2()}) {
        auto tower = build_tower(L, 2);
        CHECK(!tower.empty());
        Isometry v = adapted_isometry(L, tower);
        CHECK(v.isometry_defect(L.gram) < 1e-12);
        // v(z) has plus part e_1/2, so |v0^+(z)| = 1/2
        RatVec zr(L.rank());
        for (int i = 0; i < L.rank(); ++i) zr[i] = Rat(tower[0].z[i]);
        Eigen::VectorXd vz = v.apply(zr);
        CHECK(std::abs(vz[0] - 0.5) < 1e-12);
        CHECK(std::sqrt(v.plus_norm2(vz)) == doctest::Approx(0.5));
    }
    // anisotropic: adapted == standard
    Isometry va = adapted_isometry(A1(), {});
    CHECK(va.isometry_defect(A1().gram) < 1e-12);
}

TEST_CASE("restricted isometry follows the tower") {
    EvenLattice L = UU();
    auto tower = build_tower(L, 2);
    Isometry v = adapted_isometry(L, tower);
    Isometry v1 = restrict_isometry(v, tower[0]);
    CHECK(v1.b_plus == 1);
    CHECK(v1.b_minus == 1);
    CHECK(v1.isometry_defect(tower[0].L1.gram) < 1e-10);
}

TEST_CASE("enumerate_coset basics and brute force comparison") {
    EvenLattice L = A1();
    Isometry v = standard_isometry(L);
    DiscriminantForm D = discriminant_group(L);

    auto pts = enumerate_coset(L, D.coset_reps[0], v, 3.0);
    // 2 n^2 <= 9  =>  |n| <= 2
    CHECK(pts.size() == 5);

    int ihalf = D.index_of(rv({Rat(1, 2)}));
    auto pts2 = enumerate_coset(L, D.coset_reps[ihalf], v, 2.0);
    // 2 (n+1/2)^2 <= 4  =>  n+1/2 in {-1/2, 1/2}
    CHECK(pts2.size() == 2);
    auto pts3 = enumerate_coset(L, D.coset_reps[ihalf], v, 2.2);
    // radius 2.2 admits n+1/2 = +-3/2 as well
    CHECK(pts3.size() == 4);

    // zero radius: {0} iff gamma = 0
    CHECK(enumerate_coset(L, D.coset_reps[0], v, 0.0).size() == 1);
    CHECK(enumerate_coset(L, D.coset_reps[ihalf], v, 0.0).empty());

    // monotonicity and brute force count on rank 3
    EvenLattice M = UA1();
    Isometry vm = standard_isometry(M);
    DiscriminantForm DM = discriminant_group(M);
    auto small = enumerate_coset(M, DM.coset_reps[0], vm, 2.0);
    auto big = enumerate_coset(M, DM.coset_reps[0], vm, 4.0);
    CHECK(small.size() < big.size());
    for (const auto& p : small) CHECK(std::find(big.begin(), big.end(), p) != big.end());
    // brute force box count
    long cnt = 0;
    for (long a = -12; a <= 12; ++a)
        for (long b = -12; b <= 12; ++b)
            for (long c = -12; c <= 12; ++c) {
                RatVec x = {Rat(a), Rat(b), Rat(c)};
                Eigen::VectorXd vx = vm.apply(x);
                if (vx.squaredNorm() <= 16.0 + 1e-9) ++cnt;
            }
    CHECK(cnt == static_cast<long>(big.size()));
}

TEST_CASE("enumeration budget cap") {
    EvenLattice L = A1();
    Isometry v = standard_isometry(L);
    DiscriminantForm D = discriminant_group(L);
    CHECK_THROWS_AS(enumerate_coset(L, D.coset_reps[0], v, 100.0, 5), BudgetExceeded);
}

TEST_CASE("enumerate_hyperboloid") {
    EvenLattice L = A1();
    Isometry v = standard_isometry(L);
    DiscriminantForm D = discriminant_group(L);
    auto h = enumerate_hyperboloid(L, D.coset_reps[0], Rat(1), v, 2.0);
    CHECK(h.points.size() == 2); // +-e1 with q = 1

    int ihalf = D.index_of(rv({Rat(1, 2)}));
    auto h2 = enumerate_hyperboloid(L, D.coset_reps[ihalf], Rat(1, 4), v, 1.0);
    CHECK(h2.points.size() == 2); // +-(1/2)e1

    EvenLattice M = U();
    Isometry vm = standard_isometry(M);
    DiscriminantForm DM = discriminant_group(M);
    auto h3 = enumerate_hyperboloid(M, DM.coset_reps[0], Rat(1), vm, 10.0);
    // pq = 1 within slice |v+| <= 10: points (1,1), (-1,-1) and nothing else small
    CHECK(h3.points.size() >= 2);
    for (const auto& p : h3.points) CHECK(M.q(p) == Rat(1));

    auto h4 = enumerate_hyperboloid(L, D.coset_reps[0], Rat(9), v, 1.0);
    CHECK(h4.empty_slice);
    CHECK(h4.points.empty());
}
