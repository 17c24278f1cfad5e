#include "ortheta/poly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace ortheta {

HomPoly HomPoly::one(int n) {
    HomPoly p(n, 0);
    p.terms[std::vector<int>(n, 0)] = QQi(Rat(1));
    return p;
}

HomPoly HomPoly::variable(int n, int i) {
    HomPoly p(n, 1);
    std::vector<int> e(n, 0);
    e[i] = 1;
    p.terms[e] = QQi(Rat(1));
    return p;
}

HomPoly HomPoly::norm2(int n) { return tail_norm2(n, 0); }

HomPoly HomPoly::tail_norm2(int n, int j) {
    HomPoly p(n, 2);
    for (int i = j; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 2;
        p.terms[e] = QQi(Rat(1));
    }
    return p;
}

void HomPoly::add_term(const std::vector<int>& e, const QQi& c) {
    if (c.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

HomPoly HomPoly::operator+(const HomPoly& o) const {
    if (n != o.n || (k != o.k && !is_zero() && !o.is_zero()))
        throw BadPolynomialGrading("adding inhomogeneous polynomials");
    HomPoly r = *this;
    r.k = is_zero() ? o.k : k;
    for (const auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
}

HomPoly HomPoly::operator-(const HomPoly& o) const {
    return *this + o.scaled(QQi(Rat(-1)));
}

HomPoly HomPoly::operator*(const HomPoly& o) const {
    if (n != o.n) throw BadPolynomialGrading("multiplying across variable counts");
    HomPoly r(n, k + o.k);
    for (const auto& [e1, c1] : terms)
        for (const auto& [e2, c2] : o.terms) {
            std::vector<int> e(n);
            for (int i = 0; i < n; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

HomPoly HomPoly::scaled(const QQi& c) const {
    HomPoly r(n, k);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms) r.terms[e] = v * c;
    return r;
}

HomPoly HomPoly::pow(int e) const {
    HomPoly r = HomPoly::one(n);
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

std::complex<double> HomPoly::eval(const Eigen::VectorXd& x) const {
    Eigen::VectorXcd xc(x.size());
    for (int i = 0; i < x.size(); ++i) xc[i] = x[i];
    return eval(xc);
}

std::complex<double> HomPoly::eval(const Eigen::VectorXcd& x) const {
    std::complex<double> s = 0;
    for (const auto& [e, c] : terms) {
        std::complex<double> t = c.to_complex();
        for (int i = 0; i < n; ++i)
            for (int r = 0; r < e[i]; ++r) t *= x[i];
        s += t;
    }
    return s;
}

QQi HomPoly::eval_exact(const RatVec& x) const {
    QQi s;
    for (const auto& [e, c] : terms) {
        QQi t = c;
        for (int i = 0; i < n; ++i)
            for (int r = 0; r < e[i]; ++r) t = t * QQi(x[i]);
        s = s + t;
    }
    return s;
}

HomPoly HomPoly::compose_linear(const RatMat& M) const {
    if (M.rows != n || M.cols != n) throw BadPolynomialGrading("compose_linear shape");
    std::vector<HomPoly> forms;
    for (int i = 0; i < n; ++i) {
        HomPoly f(n, 1);
        for (int j = 0; j < n; ++j)
            if (M(i, j) != 0) f.add_term([&] {
                std::vector<int> e(n, 0);
                e[j] = 1;
                return e;
            }(), QQi(M(i, j)));
        forms.push_back(f);
    }
    HomPoly r(n, k);
    for (const auto& [e, c] : terms) {
        HomPoly t = HomPoly::one(n).scaled(c);
        for (int i = 0; i < n; ++i)
            for (int rdeg = 0; rdeg < e[i]; ++rdeg) t = t * forms[i];
        r = r + t;
    }
    return r;
}

HomPoly HomPoly::embed(int new_n, int offset) const {
    HomPoly r(new_n, k);
    for (const auto& [e, c] : terms) {
        std::vector<int> ne(new_n, 0);
        for (int i = 0; i < n; ++i) ne[offset + i] = e[i];
        r.terms[ne] = c;
    }
    return r;
}

HomPoly laplacian(const HomPoly& p) {
    HomPoly r(p.n, p.k >= 2 ? p.k - 2 : 0);
    for (const auto& [e, c] : p.terms)
        for (int i = 0; i < p.n; ++i) {
            if (e[i] < 2) continue;
            std::vector<int> ne = e;
            ne[i] -= 2;
            r.add_term(ne, c * QQi(Rat(e[i]) * Rat(e[i] - 1)));
        }
    return r;
}

HomPoly project_H(const HomPoly& p) {
    // Hp = sum_j (-1)^j Gamma(n/2+k-j-1)/(4^j j! Gamma(n/2+k-1)) |x|^{2j} Lap^j p
    int n = p.n, k = p.k;
    if (n < 2) throw BadPolynomialGrading("project_H needs n >= 2");
    HomPoly nrm = HomPoly::norm2(n);
    HomPoly result = p;
    HomPoly lap = p;
    HomPoly nrm_pow = HomPoly::one(n);
    Rat gamma_ratio(1); // Gamma(a-j)/Gamma(a) with a = n/2 + k - 1
    Rat jfact(1), four_pow(1);
    for (int j = 1; 2 * j <= k; ++j) {
        lap = laplacian(lap);
        if (lap.is_zero()) break;
        nrm_pow = nrm_pow * nrm;
        gamma_ratio /= Rat(n, 2) + k - 1 - j;
        jfact *= j;
        four_pow *= 4;
        Rat c = gamma_ratio / (four_pow * jfact);
        if (j % 2) c = -c;
        result = result + (nrm_pow * lap).scaled(QQi(c));
    }
    return result;
}

Rat gegenbauer_value(int deg, const Rat& lam, const Rat& z) {
    Rat s(0);
    for (int j = 0; 2 * j <= deg; ++j) {
        // (-1)^j (lam)_{deg-j} / (j! (deg-2j)!) (2z)^{deg-2j}
        Rat rising(1);
        for (int t = 0; t < deg - j; ++t) rising *= lam + t;
        Rat fact(1);
        for (int t = 2; t <= j; ++t) fact *= t;
        for (int t = 2; t <= deg - 2 * j; ++t) fact *= t;
        Rat term = rising / fact;
        Rat zp(1);
        for (int t = 0; t < deg - 2 * j; ++t) zp *= 2 * z;
        s += (j % 2 ? -term : term) * zp;
    }
    return s;
}

HomPoly gegenbauer_axial(int n, int axis, int deg, const Rat& lam) {
    // |x|_axis^deg C_deg^lam(x_axis / |x|_axis) expanded as a polynomial:
    // sum_j (-1)^j (lam)_{deg-j}/(j!(deg-2j)!) 2^{deg-2j} x_axis^{deg-2j} (|x|_axis^2)^j
    HomPoly tail = HomPoly::tail_norm2(n, axis);
    HomPoly xa = HomPoly::variable(n, axis);
    HomPoly r(n, deg);
    for (int j = 0; 2 * j <= deg; ++j) {
        Rat rising(1);
        for (int t = 0; t < deg - j; ++t) rising *= lam + t;
        Rat fact(1);
        for (int t = 2; t <= j; ++t) fact *= t;
        for (int t = 2; t <= deg - 2 * j; ++t) fact *= t;
        Rat c = rising / fact;
        Rat p2(1);
        for (int t = 0; t < deg - 2 * j; ++t) p2 *= 2;
        c *= p2;
        if (j % 2) c = -c;
        r = r + (xa.pow(deg - 2 * j) * tail.pow(j)).scaled(QQi(c));
    }
    return r;
}

MultiIndexKappa MultiIndexKappa::drop_first() const {
    MultiIndexKappa r;
    r.ks.assign(ks.begin() + 1, ks.end());
    r.sign = sign;
    return r;
}

std::string MultiIndexKappa::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < ks.size(); ++i) {
        if (i) os << ",";
        if (i + 1 == ks.size() && sign < 0) os << "-";
        os << ks[i];
    }
    return os.str();
}

long harmonic_dimension(int n, int k) {
    auto binom = [](long a, long b) -> long {
        if (b < 0 || a < 0 || b > a) return 0;
        long r = 1;
        for (long i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    return binom(n + k - 1, k) - binom(n + k - 3, k - 2);
}

HomPoly vilenkin_poly(int n, const MultiIndexKappa& kappa) {
    if (n < 2) throw BadPolynomialGrading("vilenkin_poly needs n >= 2");
    if (static_cast<int>(kappa.ks.size()) != n - 1)
        throw BadPolynomialGrading("kappa length must be n-1");
    int klast = kappa.ks.back();
    // (x_{n-1} +- i x_n)^{k_{n-2}}, 0-indexed variables n-2 and n-1
    HomPoly base(n, klast);
    {
        HomPoly u = HomPoly::variable(n, n - 2);
        HomPoly v = HomPoly::variable(n, n - 1).scaled(QQi(Rat(0), Rat(kappa.sign)));
        base = (u + v).pow(klast);
    }
    HomPoly r = base;
    for (int j = n - 3; j >= 0; --j) {
        int deg = kappa.ks[j] - kappa.ks[j + 1];
        Rat lam = Rat(kappa.ks[j + 1]) + Rat(n - j - 2, 2);
        r = gegenbauer_axial(n, j, deg, lam) * r;
    }
    return r;
}

std::vector<std::pair<MultiIndexKappa, HomPoly>> vilenkin_basis(int n, int k) {
    if (n < 2) throw BadPolynomialGrading("vilenkin_basis needs n >= 2");
    std::vector<MultiIndexKappa> idx;
    std::vector<int> cur;
    // weakly decreasing sequences k = k_0 >= ... >= k_{n-2} >= 0
    std::function<void(int, int)> rec = [&](int pos, int bound) {
        if (pos == n - 1) {
            MultiIndexKappa kp;
            kp.ks = cur;
            kp.sign = +1;
            idx.push_back(kp);
            if (cur.back() > 0) {
                kp.sign = -1;
                idx.push_back(kp);
            }
            return;
        }
        int lo = (pos == 0) ? k : 0;
        int hi = (pos == 0) ? k : bound;
        for (int v = hi; v >= lo; --v) {
            cur.push_back(v);
            rec(pos + 1, v);
            cur.pop_back();
        }
    };
    rec(0, k);
    std::vector<std::pair<MultiIndexKappa, HomPoly>> out;
    for (const auto& kp : idx) out.emplace_back(kp, vilenkin_poly(n, kp));
    return out;
}

HomPoly one_step_projection_residual(int k, int l, const HomPoly& h) {
    int n = h.n + 1;
    if (!laplacian(h).is_zero()) throw NotHarmonic("h must be harmonic");
    if (h.k != l) throw BadPolynomialGrading("h must have degree l");
    HomPoly hemb = h.embed(n, 1);
    HomPoly lhs = project_H(HomPoly::variable(n, 0).pow(k - l) * hemb);
    // constant is m!/(2^m (lam)_m); the bare m!/2^m misses the Pochhammer factor
    int m = k - l;
    Rat lam = Rat(n - 2, 2) + l;
    Rat pref(1);
    for (int t = 2; t <= m; ++t) pref *= t;
    for (int t = 0; t < m; ++t) pref /= 2;
    for (int t = 0; t < m; ++t) pref /= lam + t;
    HomPoly rhs = (gegenbauer_axial(n, 0, m, lam) * hemb).scaled(QQi(pref));
    return lhs - rhs;
}

std::vector<HomPoly> heat_terms(const HomPoly& p) {
    std::vector<HomPoly> out;
    HomPoly cur = p;
    out.push_back(cur);
    while (true) {
        cur = laplacian(cur);
        if (cur.is_zero()) break;
        out.push_back(cur);
    }
    return out;
}

std::complex<double> heat_eval(const std::vector<HomPoly>& terms, double y,
                               const Eigen::VectorXd& x) {
    std::complex<double> s = 0;
    double fac = 1.0;
    for (size_t j = 0; j < terms.size(); ++j) {
        if (j > 0) fac *= -1.0 / (8.0 * M_PI * y * static_cast<double>(j));
        s += fac * terms[j].eval(x);
    }
    return s;
}

std::map<std::vector<int>, std::complex<double>> heat_coeffs(const HomPoly& p, double y) {
    std::map<std::vector<int>, std::complex<double>> out;
    auto terms = heat_terms(p);
    double fac = 1.0;
    for (size_t j = 0; j < terms.size(); ++j) {
        if (j > 0) fac *= -1.0 / (8.0 * M_PI * y * static_cast<double>(j));
        for (const auto& [e, c] : terms[j].terms) out[e] += fac * c.to_complex();
    }
    return out;
}

} // namespace ortheta
