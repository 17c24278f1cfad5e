#include "ortheta/modform.hpp"

#include <cmath>
#include <functional>

#include "ortheta/specfn.hpp"

namespace ortheta {

bool CuspFormCoeffs::on_support(int gamma, const Rat& n) const {
    if (n <= 0) return false;
    return frac_mod1(n) == D.q_values[gamma];
}

Cplx CuspFormCoeffs::coeff(int gamma, const Rat& n) const {
    if (n > max_n) throw HorizonExceeded("coefficient beyond stored horizon");
    auto it = c.find({gamma, n});
    return it == c.end() ? Cplx(0, 0) : it->second;
}

void CuspFormCoeffs::set(int gamma, const Rat& n, Cplx value) {
    if (!on_support(gamma, n))
        throw SupportViolation("(n, gamma) violates the support condition");
    if (n > max_n) throw HorizonExceeded("entry beyond declared horizon");
    c[{gamma, n}] = value;
}

CuspFormCoeffs make_coeffs(const DiscriminantForm& D, const Rat& weight, const Rat& horizon) {
    CuspFormCoeffs f;
    f.D = D;
    f.weight = weight;
    f.max_n = horizon;
    return f;
}

std::vector<Int> ramanujan_tau(int prec) {
    if (prec < 1) throw DomainError("prec >= 1");
    // q prod (1-q^m)^24 up to q^prec
    std::vector<Int> eta(prec, Int(0)); // coefficients of prod (1-q^m)^24, degree < prec
    eta[0] = 1;
    for (int m = 1; m < prec; ++m)
        for (int rep = 0; rep < 24; ++rep)
            for (int d = prec - 1; d >= m; --d) eta[d] -= eta[d - m];
    std::vector<Int> tau(prec + 1, Int(0)); // tau[n] for 1 <= n <= prec
    for (int n = 1; n <= prec; ++n) tau[n] = eta[n - 1];
    return tau;
}

CuspFormCoeffs delta_coeffs(const DiscriminantForm& D, int prec) {
    if (D.size() != 1) throw NontrivialDiscriminant();
    CuspFormCoeffs f = make_coeffs(D, Rat(12), Rat(prec));
    std::vector<Int> tau = ramanujan_tau(prec);
    for (int n = 1; n <= prec; ++n) f.set(0, Rat(n), Cplx(tau[n].get_d(), 0));
    return f;
}

double kloosterman(long m, long n, long c) {
    if (c < 1) throw DomainError("c >= 1");
    if (c == 1) return 1.0;
    double s = 0;
    for (long d = 1; d < c; ++d) {
        // extended gcd for the inverse of d mod c
        long a0 = d, b0 = c;
        long x0 = 1, x1 = 0;
        while (b0) {
            long q = a0 / b0;
            long t = a0 - q * b0;
            a0 = b0;
            b0 = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        if (a0 != 1) continue; // d not a unit mod c
        long dinv = ((x0 % c) + c) % c;
        double arg = 2.0 * M_PI *
                     (static_cast<double>(m % c) * d + static_cast<double>(n % c) * dinv) / c;
        s += std::cos(arg);
    }
    return s;
}

CuspFormCoeffs classical_poincare_coeffs(const DiscriminantForm& D, int k, int m, int prec,
                                         int c_cutoff, double* tail_note) {
    if (D.size() != 1) throw NontrivialDiscriminant();
    if (k < 4 || k % 2 != 0) throw NotEven("weight must be even and >= 4");
    if (m < 1) throw DomainError("index m >= 1");
    CuspFormCoeffs f = make_coeffs(D, Rat(k), Rat(prec));
    double sign = (k / 2) % 2 ? -1.0 : 1.0;
    for (int n = 1; n <= prec; ++n) {
        double series = 0;
        for (int cc = 1; cc <= c_cutoff; ++cc) {
            double x = 4.0 * M_PI * std::sqrt(static_cast<double>(m) * n) / cc;
            double term = kloosterman(m, n, cc) / cc * bessel_J(k - 1, x).value;
            series += term;
        }
        double val = (n == m ? 1.0 : 0.0) +
                     2.0 * M_PI * sign * std::pow(static_cast<double>(n) / m, (k - 1) / 2.0) *
                         series;
        f.set(0, Rat(n), Cplx(val, 0));
    }
    if (tail_note) {
        // heuristic Weil-bound style tail of the c-sum
        *tail_note = 10.0 / std::pow(static_cast<double>(c_cutoff), 1.5);
    }
    return f;
}

CuspFormCoeffs descend_coeffs(const CuspFormCoeffs& f, const IsotropicSplit& split, long r,
                              long t) {
    const DiscriminantForm& DL1 = split.DL1;
    CuspFormCoeffs out = make_coeffs(DL1, f.weight, f.max_n);
    Rat zpzp = split.L.q(split.z_prime) * 2; // (z', z')
    for (int di : split.Mprime_reps) {
        int lam = project_pi_coset(split, di);
        // delta + t z' reduced into D_L
        RatVec shifted(split.L.rank());
        for (int i = 0; i < split.L.rank(); ++i)
            shifted[i] = split.DL.coset_reps[di][i] + Rat(t) * split.z_prime[i];
        int src = split.DL.reduce(shifted);
        Rat dzp = split.L.bilin(split.DL.coset_reps[di], split.z_prime);
        Rat phase_arg = frac_mod1(Rat(-r) * dzp - Rat(r) * Rat(t) * zpzp / 2);
        Cplx phase = std::polar(1.0, 2.0 * M_PI * phase_arg.get_d());
        for (const auto& [key, val] : f.c) {
            if (key.first != src) continue;
            const Rat& n = key.second;
            auto it = out.c.find({lam, n});
            Cplx add = phase * val;
            if (it == out.c.end()) {
                if (!out.on_support(lam, n))
                    throw SupportViolation("descent landed off support");
                out.c[{lam, n}] = add;
            } else {
                it->second += add;
            }
        }
    }
    return out;
}

ContractionResult contract_theta(const CuspFormCoeffs& f, const EvenLattice& L,
                                 const IntMat& K_basis, const Rat& horizon_out,
                                 bool allow_truncated) {
    if (!is_primitive_sublattice(K_basis)) throw NotPrimitive("K is not primitive in L");
    if (horizon_out > f.max_n) throw HorizonExceeded("output horizon beyond source horizon");
    int b = L.rank(), p = K_basis.cols;
    ContractionResult res;
    res.K_basis = K_basis;

    RatMat Bq = K_basis.to_rat();
    RatMat G = L.gram.to_rat();
    RatMat BtG = rat_mul(transposed(K_basis).to_rat(), G);  // p x b
    RatMat gramK = rat_mul(BtG, Bq);                        // p x p
    IntMat gramKi(p, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            if (gramK(i, j).get_den() != 1) throw std::logic_error("gram_K non-integral");
            gramKi(i, j) = gramK(i, j).get_num();
        }
    res.K = make_lattice(gramKi, L.name.empty() ? "K" : L.name + ".K");
    res.DK = discriminant_group(res.K);
    res.F = make_coeffs(res.DK, f.weight, horizon_out);

    RatMat gramK_inv = rat_inverse(gramK);
    // orthogonal projection onto K_Q in K-coordinates: a(x) = gramK^{-1} B^T G x
    auto project_K_coords = [&](const RatVec& x) {
        return rat_mul_vec(gramK_inv, rat_mul_vec(BtG, x));
    };

    // complement of K in L and the perp quadratic form on it
    IntMat C = complete_to_basis(K_basis);
    int cdim = C.cols;
    std::vector<RatVec> c_perp(cdim);
    for (int j = 0; j < cdim; ++j) {
        RatVec cj(b);
        for (int i = 0; i < b; ++i) cj[i] = Rat(C(i, j));
        RatVec a = project_K_coords(cj);
        RatVec proj = rat_mul_vec(Bq, a);
        c_perp[j].resize(b);
        for (int i = 0; i < b; ++i) c_perp[j][i] = cj[i] - proj[i];
    }
    RatMat Gperp(cdim, cdim);
    for (int i = 0; i < cdim; ++i)
        for (int j = 0; j < cdim; ++j) Gperp(i, j) = L.bilin(c_perp[i], c_perp[j]);
    auto [pp, pn] = exact_signature(Gperp);
    if (pp + pn != cdim || (pp > 0 && pn > 0))
        throw DomainError("K-perp must be definite for the contraction");
    bool posdef = pp == cdim && cdim > 0;

    // fibers: mu = gamma_rep + C t; q_perp(mu) = q_perp(gamma_rep + sum t_j c_perp_j)
    // enumerate t with |q_perp| below the relevant bound
    Rat qbound = posdef ? f.max_n : horizon_out;
    for (int gi = 0; gi < f.D.size(); ++gi) {
        const RatVec& grep = f.D.coset_reps[gi];
        RatVec gperp(b);
        {
            RatVec a = project_K_coords(grep);
            RatVec proj = rat_mul_vec(Bq, a);
            for (int i = 0; i < b; ++i) gperp[i] = grep[i] - proj[i];
        }
        // box bound from the smallest eigenvalue of the definite form
        std::vector<long> t(cdim, 0);
        double bound = qbound.get_d() + 1.0;
        long box = 0;
        if (cdim > 0) {
            Eigen::MatrixXd Gp(cdim, cdim);
            for (int i = 0; i < cdim; ++i)
                for (int j = 0; j < cdim; ++j) Gp(i, j) = std::abs(Gperp(i, j).get_d());
            Eigen::MatrixXd Gd(cdim, cdim);
            for (int i = 0; i < cdim; ++i)
                for (int j = 0; j < cdim; ++j) Gd(i, j) = Gperp(i, j).get_d();
            if (posdef == false) Gd = -Gd;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Gd);
            double lmin = es.eigenvalues().minCoeff();
            double shift = std::sqrt(std::abs(L.q(gperp).get_d()) * 2.0 / std::max(lmin, 1e-9));
            box = static_cast<long>(std::sqrt(2.0 * bound / std::max(lmin, 1e-9)) + shift) + 2;
        }
        std::function<void(int)> loop = [&](int pos) {
            if (pos == cdim) {
                RatVec mu(b);
                for (int i = 0; i < b; ++i) {
                    mu[i] = grep[i];
                    for (int j = 0; j < cdim; ++j) mu[i] += Rat(t[j]) * Rat(C(i, j));
                }
                RatVec a = project_K_coords(mu);
                RatVec muK = rat_mul_vec(Bq, a);
                RatVec muperp(b);
                for (int i = 0; i < b; ++i) muperp[i] = mu[i] - muK[i];
                Rat qperp = L.q(muperp);
                if (abs(qperp) > qbound) return;
                if (!res.K.in_dual(a)) throw std::logic_error("p_K(mu) not in K'");
                int dk = res.DK.reduce(a);
                // add c(m + qperp, gamma) into C(m, dk) for all stored m-support
                for (const auto& [key, val] : f.c) {
                    if (key.first != gi) continue;
                    Rat m = key.second - qperp;
                    if (m <= 0 || m > horizon_out) continue;
                    auto it = res.F.c.find({dk, m});
                    if (it == res.F.c.end()) {
                        if (!res.F.on_support(dk, m))
                            throw SupportViolation("contraction landed off support");
                        res.F.c[{dk, m}] = val;
                    } else {
                        it->second += val;
                    }
                }
                if (posdef && qperp + horizon_out > f.max_n) res.truncated = true;
                return;
            }
            for (long v = -box; v <= box; ++v) {
                t[pos] = v;
                loop(pos + 1);
            }
        };
        loop(0);
    }
    if (res.truncated && !allow_truncated)
        throw HorizonExceeded("contraction fibers truncated by the source horizon");
    return res;
}

CuspFormCoeffs synthetic_coeffs(const DiscriminantForm& D, const Rat& weight,
                                const Rat& horizon, unsigned seed) {
    CuspFormCoeffs f = make_coeffs(D, weight, horizon);
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int gi = 0; gi < D.size(); ++gi) {
        Rat base = D.q_values[gi]; // in [0,1)
        Rat n = base == 0 ? Rat(1) : base;
        for (; n <= horizon; n += 1) {
            double re = u(rng), im = u(rng);
            f.set(gi, n, Cplx(re, im));
        }
    }
    return f;
}

} // namespace ortheta
