#include "ortheta/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace ortheta {

Rat EvenLattice::bilin(const RatVec& x, const RatVec& y) const {
    RatVec gy = rat_mul_vec(gram.to_rat(), y);
    return rat_dot(x, gy);
}

Rat EvenLattice::q(const RatVec& x) const { return bilin(x, x) / 2; }

bool EvenLattice::in_dual(const RatVec& x) const {
    RatVec gx = rat_mul_vec(gram.to_rat(), x);
    for (const Rat& v : gx)
        if (v.get_den() != 1) return false;
    return true;
}

std::pair<int, int> exact_signature(const RatMat& A) {
    RatMat M = A;
    int n = A.rows;
    std::vector<bool> done(n, false);
    int pos = 0, neg = 0;
    for (int step = 0; step < n; ++step) {
        int piv = -1;
        for (int i = 0; i < n; ++i)
            if (!done[i] && M(i, i) != 0) { piv = i; break; }
        if (piv < 0) {
            // all remaining diagonal entries vanish; pull in an off-diagonal one
            int a = -1, b = -1;
            for (int i = 0; i < n && a < 0; ++i) {
                if (done[i]) continue;
                for (int j = 0; j < n; ++j)
                    if (!done[j] && j != i && M(i, j) != 0) { a = i; b = j; break; }
            }
            if (a < 0) break; // remaining block zero
            for (int j = 0; j < n; ++j) M(a, j) += M(b, j);
            for (int i = 0; i < n; ++i) M(i, a) += M(i, b);
            piv = a;
        }
        Rat d = M(piv, piv);
        if (d > 0) ++pos; else ++neg;
        done[piv] = true;
        for (int i = 0; i < n; ++i) {
            if (done[i] || M(i, piv) == 0) continue;
            Rat f = M(i, piv) / d;
            for (int j = 0; j < n; ++j) M(i, j) -= f * M(piv, j);
            for (int j = 0; j < n; ++j) M(j, i) -= f * M(j, piv);
        }
    }
    return {pos, neg};
}

EvenLattice make_lattice(const IntMat& gram, const std::string& name) {
    if (gram.rows != gram.cols) throw NotSymmetric("gram matrix is not square");
    for (int i = 0; i < gram.rows; ++i)
        for (int j = i + 1; j < gram.cols; ++j)
            if (gram(i, j) != gram(j, i)) throw NotSymmetric();
    for (int i = 0; i < gram.rows; ++i)
        if (gram(i, i) % 2 != 0) throw OddDiagonal();
    if (int_det(gram) == 0) throw Degenerate();
    auto [p, n] = exact_signature(gram.to_rat());
    EvenLattice L;
    L.gram = gram;
    L.b_plus = p;
    L.b_minus = n;
    L.name = name;
    return L;
}

int DiscriminantForm::index_of(const RatVec& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) throw NotInLattice("coset rep not found");
    return it->second;
}

int DiscriminantForm::reduce(const RatVec& x) const {
    if (!lattice.in_dual(x)) throw NotInLattice("vector not in dual lattice");
    RatVec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = frac_mod1(x[i]);
    return index_of(r);
}

int DiscriminantForm::add(int i, int j) const {
    RatVec s(coset_reps[i].size());
    for (size_t k = 0; k < s.size(); ++k) s[k] = frac_mod1(coset_reps[i][k] + coset_reps[j][k]);
    return index_of(s);
}

int DiscriminantForm::neg(int i) const {
    RatVec s(coset_reps[i].size());
    for (size_t k = 0; k < s.size(); ++k) s[k] = frac_mod1(-coset_reps[i][k]);
    return index_of(s);
}

Rat DiscriminantForm::bilinear_mod1(int i, int j) const {
    return frac_mod1(lattice.bilin(coset_reps[i], coset_reps[j]));
}

DiscriminantForm discriminant_group(const EvenLattice& L) {
    DiscriminantForm D;
    D.lattice = L;
    int b = L.rank();
    SmithResult s = smith_normal_form(L.gram);
    for (int i = 0; i < b; ++i)
        if (s.D(i, i) > 1) D.invariant_factors.push_back(s.D(i, i));

    // L'/L ~ Z^b / gram Z^b; with U gram V = S the classes are indexed by
    // y mod S, x = U^{-1} y, rep = frac(gram^{-1} x)
    RatMat Uinv = rat_inverse(s.U.to_rat());
    RatMat graminv = rat_inverse(L.gram.to_rat());
    std::vector<long> d(b);
    long total = 1;
    for (int i = 0; i < b; ++i) {
        d[i] = s.D(i, i).get_si();
        total *= d[i];
    }
    std::vector<long> y(b, 0);
    for (long idx = 0; idx < total; ++idx) {
        RatVec x(b, Rat(0));
        for (int i = 0; i < b; ++i)
            for (int k = 0; k < b; ++k)
                if (y[k] != 0) x[i] += Uinv(i, k) * Rat(y[k]);
        RatVec rep = rat_mul_vec(graminv, x);
        for (int i = 0; i < b; ++i) rep[i] = frac_mod1(rep[i]);
        if (D.index_.emplace(rep, static_cast<int>(D.coset_reps.size())).second) {
            D.coset_reps.push_back(rep);
        }
        for (int i = b - 1; i >= 0; --i) {
            if (++y[i] < d[i]) break;
            y[i] = 0;
        }
    }
    if (static_cast<long>(D.coset_reps.size()) != std::llabs(int_det(L.gram).get_si()))
        throw std::logic_error("discriminant_group: wrong coset count");
    // sort reps for a canonical deterministic order, rebuild index
    std::vector<RatVec> reps = D.coset_reps;
    std::sort(reps.begin(), reps.end());
    D.coset_reps = reps;
    D.index_.clear();
    for (size_t i = 0; i < reps.size(); ++i) D.index_.emplace(reps[i], static_cast<int>(i));
    D.q_values.resize(reps.size());
    for (size_t i = 0; i < reps.size(); ++i) D.q_values[i] = frac_mod1(D.lattice.q(reps[i]));
    return D;
}

namespace {

Int coord_gcd(const IntVec& v) {
    Int g(0);
    for (const Int& x : v) g = int_gcd(g, x);
    return g;
}

bool lex_greater(const IntVec& a, const IntVec& b) {
    return a > b;
}

} // namespace

std::optional<IntVec> find_isotropic(const EvenLattice& L, long height_bound) {
    int b = L.rank();
    std::optional<IntVec> best;
    long best_norm = height_bound + 1;
    std::vector<long> x(b, -height_bound);
    while (true) {
        long maxn = 0;
        for (long c : x) maxn = std::max(maxn, std::labs(c));
        if (maxn > 0 && maxn <= best_norm) {
            IntVec v(b);
            for (int i = 0; i < b; ++i) v[i] = x[i];
            // normalize sign: first nonzero coordinate positive
            for (int i = 0; i < b; ++i) {
                if (v[i] == 0) continue;
                if (v[i] < 0)
                    for (int k = 0; k < b; ++k) v[k] = -v[k];
                break;
            }
            if (coord_gcd(v) == 1) {
                RatVec rv(b);
                for (int i = 0; i < b; ++i) rv[i] = Rat(v[i]);
                if (L.q(rv) == 0) {
                    if (!best || maxn < best_norm || (maxn == best_norm && lex_greater(v, *best))) {
                        best = v;
                        best_norm = maxn;
                    }
                }
            }
        }
        int i = b - 1;
        while (i >= 0 && x[i] == height_bound) x[i--] = -height_bound;
        if (i < 0) break;
        ++x[i];
    }
    return best;
}

RatVec IsotropicSplit::z_star() const {
    RatVec zr(z.size()), zs(z.size());
    for (size_t i = 0; i < z.size(); ++i) zr[i] = Rat(z[i]);
    Rat qzp = L.q(z_prime);
    for (size_t i = 0; i < z.size(); ++i) zs[i] = z_prime[i] - qzp * zr[i];
    return zs;
}

RatVec IsotropicSplit::project_L1(const RatVec& x) const {
    // x_{L1} = x - (x,z) z' - ((x,z') - (x,z)(z',z')) z
    RatVec zr(z.size());
    for (size_t i = 0; i < z.size(); ++i) zr[i] = Rat(z[i]);
    Rat xz = L.bilin(x, zr);
    Rat xzp = L.bilin(x, z_prime);
    Rat zpzp = L.bilin(z_prime, z_prime);
    RatVec r(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        r[i] = x[i] - xz * z_prime[i] - (xzp - xz * zpzp) * zr[i];
    return r;
}

RatVec IsotropicSplit::to_L1_coords(const RatVec& x) const {
    auto sol = rat_solve(L1_basis.to_rat(), x);
    if (!sol) throw NotInLattice("vector not in span of L1");
    return *sol;
}

RatVec IsotropicSplit::from_L1_coords(const RatVec& c) const {
    return rat_mul_vec(L1_basis.to_rat(), c);
}

IsotropicSplit split_at(const EvenLattice& L, const IntVec& z) {
    int b = L.rank();
    if (static_cast<int>(z.size()) != b) throw NotInLattice("z has wrong dimension");
    if (coord_gcd(z) != 1) throw NotPrimitive();
    RatVec zr(b);
    for (int i = 0; i < b; ++i) zr[i] = Rat(z[i]);
    if (L.q(zr) != 0) throw NotIsotropic();

    IsotropicSplit S;
    S.L = L;
    S.z = z;

    // N = gcd of (z, e_i) = gcd of entries of gram z
    IntVec gz(b);
    for (int i = 0; i < b; ++i) {
        Int acc(0);
        for (int j = 0; j < b; ++j) acc += L.gram(i, j) * z[j];
        gz[i] = acc;
    }
    S.N = coord_gcd(gz);

    // zeta with (zeta, z) = N
    IntVec wz;
    int_ext_gcd_vec(gz, wz);
    S.zeta = wz;

    // z' = gram^{-1} w with z^T w = 1, then size-reduced modulo L' cap z^perp
    IntVec w;
    int_ext_gcd_vec(z, w); // sum w_i z_i = 1
    IntMat zrow(1, b);
    for (int i = 0; i < b; ++i) zrow(0, i) = z[i];
    IntMat ker = int_kernel(zrow); // {v : z^T v = 0}
    RatMat graminv = rat_inverse(L.gram.to_rat());
    // greedy reduction of gram^{-1} w against gram^{-1} ker columns (Euclidean coords)
    auto dual_vec = [&](const IntVec& u) {
        RatVec ur(b);
        for (int i = 0; i < b; ++i) ur[i] = Rat(u[i]);
        return rat_mul_vec(graminv, ur);
    };
    IntVec wcur = w;
    bool changed = true;
    int guard = 0;
    while (changed && guard++ < 64) {
        changed = false;
        RatVec zp = dual_vec(wcur);
        for (int k = 0; k < ker.cols; ++k) {
            IntVec kv(b);
            for (int i = 0; i < b; ++i) kv[i] = ker(i, k);
            RatVec dk = dual_vec(kv);
            Rat num = rat_dot(zp, dk), den = rat_dot(dk, dk);
            if (den == 0) continue;
            Rat t = num / den;
            // round half up: floor(t + 1/2), deterministic
            Rat th = t + Rat(1, 2);
            Int ti;
            mpz_fdiv_q(ti.get_mpz_t(), th.get_num().get_mpz_t(), th.get_den().get_mpz_t());
            if (ti != 0) {
                for (int i = 0; i < b; ++i) wcur[i] -= ti * kv[i];
                zp = dual_vec(wcur);
                changed = true;
            }
        }
    }
    S.z_prime = dual_vec(wcur);

    // L1 = kernel over Z of (z,.) and (z',.)
    IntMat rows(2, b);
    for (int i = 0; i < b; ++i) {
        rows(0, i) = gz[i]; // (x, z) = x^T gram z
        rows(1, i) = wcur[i]; // (x, z') = x^T w
    }
    S.L1_basis = int_kernel(rows);
    if (S.L1_basis.cols != b - 2) throw InvalidTower("L1 has unexpected rank");

    IntMat gram1(b - 2, b - 2);
    {
        RatMat g1 = rat_mul(rat_mul(transposed(S.L1_basis).to_rat(), L.gram.to_rat()),
                            S.L1_basis.to_rat());
        for (int i = 0; i < b - 2; ++i)
            for (int j = 0; j < b - 2; ++j) {
                if (g1(i, j).get_den() != 1) throw std::logic_error("gram1 non-integral");
                gram1(i, j) = g1(i, j).get_num();
            }
    }
    S.L1 = make_lattice(gram1, L.name.empty() ? "L1" : L.name + ".L1");
    if (S.L1.b_plus != L.b_plus - 1 || S.L1.b_minus != L.b_minus - 1)
        throw InvalidTower("L1 has unexpected signature");

    // additive decomposition L = L1 + Z zeta + Z z must be unimodular
    IntMat full(b, b);
    for (int i = 0; i < b; ++i) {
        for (int j = 0; j < b - 2; ++j) full(i, j) = S.L1_basis(i, j);
        full(i, b - 2) = S.zeta[i];
        full(i, b - 1) = z[i];
    }
    Int det = int_det(full);
    if (det != 1 && det != -1) throw InvalidTower("L != L1 + Z zeta + Z z");

    S.DL = discriminant_group(L);
    S.DL1 = discriminant_group(S.L1);
    for (int i = 0; i < S.DL.size(); ++i) {
        Rat ip = L.bilin(S.DL.coset_reps[i], zr);
        if (ip.get_den() != 1) throw std::logic_error("(gamma, z) not integral");
        if (ip.get_num() % S.N == 0) S.Mprime_reps.push_back(i);
    }
    if (static_cast<long>(S.Mprime_reps.size()) * S.N.get_si() != S.DL.size())
        throw std::logic_error("|M'/L| != |D_L|/N");
    return S;
}

RatVec project_pi(const IsotropicSplit& split, const RatVec& lambda) {
    const EvenLattice& L = split.L;
    if (!L.in_dual(lambda)) throw NotInMPrime("lambda not in L'");
    RatVec zr(split.z.size());
    for (size_t i = 0; i < split.z.size(); ++i) zr[i] = Rat(split.z[i]);
    Rat lz = L.bilin(lambda, zr);
    if (lz.get_den() != 1 || lz.get_num() % split.N != 0)
        throw NotInMPrime("(lambda, z) not divisible by N");
    RatVec lam1 = split.project_L1(lambda);
    RatVec zetar(split.zeta.size());
    for (size_t i = 0; i < split.zeta.size(); ++i) zetar[i] = Rat(split.zeta[i]);
    RatVec zeta1 = split.project_L1(zetar);
    Rat f = lz / Rat(split.N);
    RatVec res(lambda.size());
    for (size_t i = 0; i < res.size(); ++i) res[i] = lam1[i] - f * zeta1[i];
    RatVec c = split.to_L1_coords(res);
    if (!split.L1.in_dual(c)) throw std::logic_error("pi(lambda) not in L1'");
    return c;
}

int project_pi_coset(const IsotropicSplit& split, int coset_of_DL) {
    RatVec c = project_pi(split, split.DL.coset_reps[coset_of_DL]);
    return split.DL1.reduce(c);
}

Eigen::VectorXd Isometry::apply(const RatVec& x) const {
    Eigen::VectorXd v(m.cols());
    for (int i = 0; i < m.cols(); ++i) v[i] = x[i].get_d();
    return m * v;
}

Eigen::VectorXd Isometry::apply(const Eigen::VectorXd& x) const { return m * x; }

double Isometry::plus_norm2(const Eigen::VectorXd& v) const {
    return v.head(b_plus).squaredNorm();
}
double Isometry::minus_norm2(const Eigen::VectorXd& v) const {
    return v.tail(b_minus).squaredNorm();
}

double Isometry::isometry_defect(const IntMat& gram) const {
    int b = b_plus + b_minus;
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(b, b);
    for (int i = 0; i < b_plus; ++i) J(i, i) = 1;
    for (int i = b_plus; i < b; ++i) J(i, i) = -1;
    Eigen::MatrixXd G(b, b);
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) G(i, j) = gram(i, j).get_d();
    return (m.transpose() * J * m - G).cwiseAbs().maxCoeff();
}

Isometry standard_isometry(const EvenLattice& L) {
    int b = L.rank();
    Eigen::MatrixXd G(b, b);
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) G(i, j) = L.gram(i, j).get_d();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
    // order eigenvalues descending so positive directions come first
    std::vector<int> order(b);
    for (int i = 0; i < b; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int c) { return es.eigenvalues()[a] > es.eigenvalues()[c]; });
    Eigen::MatrixXd V(b, b);
    Eigen::VectorXd lam(b);
    for (int k = 0; k < b; ++k) {
        Eigen::VectorXd col = es.eigenvectors().col(order[k]);
        int imax = 0;
        for (int i = 1; i < b; ++i)
            if (std::abs(col[i]) > std::abs(col[imax]) + 1e-14) imax = i;
        if (col[imax] < 0) col = -col;
        V.col(k) = col;
        lam[k] = es.eigenvalues()[order[k]];
    }
    Isometry iso;
    iso.b_plus = L.b_plus;
    iso.b_minus = L.b_minus;
    iso.m = lam.cwiseAbs().cwiseSqrt().asDiagonal() * V.transpose();
    if (iso.isometry_defect(L.gram) > 1e-10)
        throw std::logic_error("standard_isometry: defect too large");
    return iso;
}

std::vector<IsotropicSplit> build_tower(const EvenLattice& L, long height_bound) {
    std::vector<IsotropicSplit> tower;
    EvenLattice cur = L;
    while (cur.rank() >= 2 && cur.b_plus >= 1 && cur.b_minus >= 1) {
        auto z = find_isotropic(cur, height_bound);
        if (!z) break;
        tower.push_back(split_at(cur, *z));
        cur = tower.back().L1;
    }
    return tower;
}

Isometry adapted_isometry(const EvenLattice& L, const std::vector<IsotropicSplit>& tower) {
    int b = L.rank();
    int s = static_cast<int>(tower.size());
    if (2 * s > b) throw InvalidTower("tower too long");
    // embed the tower data into L-coordinates
    std::vector<RatVec> zplus, zminus;
    RatMat embed = RatMat::identity(b); // coords of L_j basis in L
    for (int j = 0; j < s; ++j) {
        const IsotropicSplit& sp = tower[j];
        if (sp.L.rank() != b - 2 * j) throw InvalidTower("split rank mismatch");
        RatVec zj(b, Rat(0)), zsj(b, Rat(0));
        RatVec zloc(sp.z.size()), zsloc = sp.z_star();
        for (size_t i = 0; i < sp.z.size(); ++i) zloc[i] = Rat(sp.z[i]);
        RatVec ze = rat_mul_vec(embed, zloc);
        RatVec zse = rat_mul_vec(embed, zsloc);
        RatVec zp(b), zm(b);
        for (int i = 0; i < b; ++i) {
            zp[i] = ze[i] + zse[i] / 2;
            zm[i] = ze[i] - zse[i] / 2;
        }
        zplus.push_back(zp);
        zminus.push_back(zm);
        // chain the next embedding: columns of L1 basis in L coords
        RatMat next(b, sp.L1_basis.cols);
        RatMat l1r = sp.L1_basis.to_rat();
        next = rat_mul(embed, l1r);
        embed = next;
    }
    // core basis columns (embed now maps L_s coords to L coords)
    int core_rank = b - 2 * s;
    Isometry core_iso;
    if (core_rank > 0) {
        EvenLattice core = s == 0 ? L : tower.back().L1;
        core_iso = standard_isometry(core);
    }
    // solve v * B = T
    Eigen::MatrixXd B(b, b), T = Eigen::MatrixXd::Zero(b, b);
    for (int j = 0; j < s; ++j) {
        for (int i = 0; i < b; ++i) {
            B(i, 2 * j) = zplus[j][i].get_d();
            B(i, 2 * j + 1) = zminus[j][i].get_d();
        }
        T(j, 2 * j) = 1.0;          // e_{j+1}
        T(b - 1 - j, 2 * j + 1) = 1.0;  // e_{b-j}
    }
    for (int k = 0; k < core_rank; ++k) {
        for (int i = 0; i < b; ++i) B(i, 2 * s + k) = embed(i, k).get_d();
        for (int r = 0; r < core_rank; ++r) {
            // plus rows of the core go to e_{s+1}..e_{b+}, minus rows to e_{b+ +1}..e_{b-s}
            int target_row = (r < L.b_plus - s) ? (s + r) : (L.b_plus + (r - (L.b_plus - s)));
            T(target_row, 2 * s + k) = core_iso.m(r, k);
        }
    }
    Isometry iso;
    iso.b_plus = L.b_plus;
    iso.b_minus = L.b_minus;
    iso.m = T * B.inverse();
    if (iso.isometry_defect(L.gram) > 1e-10) throw InvalidTower("adapted isometry defect");
    return iso;
}

Isometry restrict_isometry(const Isometry& v, const IsotropicSplit& split) {
    int b = v.b_plus + v.b_minus;
    int r = split.L1_basis.cols;
    Eigen::MatrixXd Bl(b, r);
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < r; ++j) Bl(i, j) = split.L1_basis(i, j).get_d();
    Eigen::MatrixXd full = v.m * Bl; // b x r, rows 0 and b-1 expected ~0
    Isometry out;
    out.b_plus = v.b_plus - 1;
    out.b_minus = v.b_minus - 1;
    out.m = Eigen::MatrixXd(b - 2, r);
    for (int i = 1; i < b - 1; ++i) out.m.row(i - 1) = full.row(i);
    double leak = full.row(0).cwiseAbs().maxCoeff() + full.row(b - 1).cwiseAbs().maxCoeff();
    if (leak > 1e-9) throw InvalidTower("isometry does not respect the split");
    if (out.isometry_defect(split.L1.gram) > 1e-9)
        throw InvalidTower("restricted isometry defect");
    return out;
}

namespace {

struct Enumerator {
    int b;
    Eigen::MatrixXd Rchol;     // upper triangular, A = R^T R
    std::vector<double> shift; // gamma - center, real offsets per coordinate
    long cap;
    long count = 0;
    const RatVec* gamma;
    const PointVisitor* visit;
    std::vector<long> n;

    void run(int level, double rem) {
        if (level < 0) {
            if (++count > cap) throw BudgetExceeded("enumeration cap exceeded");
            RatVec x(b);
            for (int i = 0; i < b; ++i) x[i] = (*gamma)[i] + Rat(n[i]);
            (*visit)(n, x);
            return;
        }
        // x = sum_j R(level,j) (n_j + shift_j); bound the level coordinate
        double diag = Rchol(level, level);
        double off = 0;
        for (int j = level + 1; j < b; ++j) off += Rchol(level, j) * (n[j] + shift[j]);
        double half = std::sqrt(std::max(rem, 0.0)) / diag;
        double centerv = -off / diag - shift[level];
        long lo = static_cast<long>(std::ceil(centerv - half - 1e-9));
        long hi = static_cast<long>(std::floor(centerv + half + 1e-9));
        for (long k = lo; k <= hi; ++k) {
            n[level] = k;
            double t = diag * (k + shift[level]) + off;
            double rem2 = rem - t * t;
            if (rem2 < -1e-9) continue;
            run(level - 1, rem2);
        }
        n[level] = 0;
    }
};

} // namespace

void enumerate_coset_visit(const EvenLattice& L, const RatVec& gamma, const Isometry& v0,
                           double R, const PointVisitor& visit, const Eigen::VectorXd* center,
                           long cap) {
    if (R < 0) throw DomainError("negative radius");
    int b = L.rank();
    Eigen::MatrixXd A = v0.m.transpose() * v0.m;
    // Cholesky A = R^T R with R upper triangular
    Eigen::LLT<Eigen::MatrixXd> llt(A);
    if (llt.info() != Eigen::Success) throw std::logic_error("majorant not positive definite");
    Eigen::MatrixXd Rc = llt.matrixU();
    Enumerator e;
    e.b = b;
    e.Rchol = Rc;
    e.cap = cap;
    e.gamma = &gamma;
    e.visit = &visit;
    e.n.assign(b, 0);
    e.shift.resize(b);
    for (int i = 0; i < b; ++i) {
        double c = center ? (*center)[i] : 0.0;
        e.shift[i] = gamma[i].get_d() - c;
    }
    e.run(b - 1, R * R * (1 + 1e-12) + 1e-12);
}

std::vector<RatVec> enumerate_coset(const EvenLattice& L, const RatVec& gamma,
                                    const Isometry& v0, double R, long cap) {
    std::vector<RatVec> pts;
    enumerate_coset_visit(
        L, gamma, v0, R,
        [&](const std::vector<long>&, const RatVec& x) { pts.push_back(x); }, nullptr, cap);
    std::sort(pts.begin(), pts.end());
    return pts;
}

HyperboloidSlice enumerate_hyperboloid(const EvenLattice& L, const RatVec& beta, const Rat& m,
                                       const Isometry& v0, double B, long cap) {
    HyperboloidSlice out;
    double md = m.get_d();
    if (B * B < 2 * md) {
        out.empty_slice = true;
        return out;
    }
    double R2 = 2 * B * B - 2 * md;
    enumerate_coset_visit(
        L, beta, v0, std::sqrt(std::max(R2, 0.0)) + 1e-9,
        [&](const std::vector<long>&, const RatVec& x) {
            if (L.q(x) == m) out.points.push_back(x);
        },
        nullptr, cap);
    std::sort(out.points.begin(), out.points.end());
    return out;
}

} // namespace ortheta
