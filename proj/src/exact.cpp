#include "ortheta/exact.hpp"

#include <algorithm>

namespace ortheta {

Rat frac_mod1(const Rat& x) {
    Int num = x.get_num(), den = x.get_den();
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Rat r = x - Rat(q);
    r.canonicalize();
    return r;
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str() + "/1";
    return x.get_str();
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMat IntMat::to_rat() const {
    RatMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Rat((*this)(i, j));
    return m;
}

RatMat rat_mul(const RatMat& A, const RatMat& B) {
    if (A.cols != B.rows) throw std::invalid_argument("rat_mul: shape mismatch");
    RatMat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            if (A(i, k) == 0) continue;
            for (int j = 0; j < B.cols; ++j) C(i, j) += A(i, k) * B(k, j);
        }
    return C;
}

IntMat transposed(const IntMat& A) {
    IntMat T(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T(j, i) = A(i, j);
    return T;
}

RatVec rat_mul_vec(const RatMat& A, const RatVec& x) {
    if (A.cols != static_cast<int>(x.size())) throw std::invalid_argument("rat_mul_vec: shape mismatch");
    RatVec y(A.rows, Rat(0));
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j)
            if (A(i, j) != 0) y[i] += A(i, j) * x[j];
    return y;
}

Rat rat_dot(const RatVec& x, const RatVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("rat_dot: size mismatch");
    Rat s(0);
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

namespace {

// Gaussian elimination to reduced row echelon form; returns pivot columns.
std::vector<int> rref(RatMat& M) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < M.cols && r < M.rows; ++c) {
        int p = -1;
        for (int i = r; i < M.rows; ++i)
            if (M(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < M.cols; ++j) std::swap(M(p, j), M(r, j));
        Rat inv = 1 / M(r, c);
        for (int j = 0; j < M.cols; ++j) M(r, j) *= inv;
        for (int i = 0; i < M.rows; ++i) {
            if (i == r || M(i, c) == 0) continue;
            Rat f = M(i, c);
            for (int j = 0; j < M.cols; ++j) M(i, j) -= f * M(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::optional<RatVec> rat_solve(const RatMat& A, const RatVec& b) {
    if (A.rows != static_cast<int>(b.size())) throw std::invalid_argument("rat_solve: shape mismatch");
    RatMat M(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) M(i, j) = A(i, j);
        M(i, A.cols) = b[i];
    }
    std::vector<int> pivots = rref(M);
    for (size_t k = 0; k < pivots.size(); ++k)
        if (pivots[k] == A.cols) return std::nullopt; // pivot in the rhs column
    RatVec x(A.cols, Rat(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = M(static_cast<int>(k), A.cols);
    return x;
}

RatMat rat_inverse(const RatMat& A) {
    if (A.rows != A.cols) throw std::invalid_argument("rat_inverse: not square");
    int n = A.rows;
    RatMat M(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) M(i, j) = A(i, j);
        M(i, n + i) = 1;
    }
    std::vector<int> pivots = rref(M);
    if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() != n - 1))
        throw std::domain_error("rat_inverse: singular matrix");
    RatMat R(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) R(i, j) = M(i, n + j);
    return R;
}

Rat rat_det(const RatMat& A) {
    if (A.rows != A.cols) throw std::invalid_argument("rat_det: not square");
    RatMat M = A;
    int n = A.rows;
    Rat det(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (M(i, c) != 0) { p = i; break; }
        if (p < 0) return Rat(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(M(p, j), M(c, j));
            det = -det;
        }
        det *= M(c, c);
        Rat inv = 1 / M(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (M(i, c) == 0) continue;
            Rat f = M(i, c) * inv;
            for (int j = c; j < n; ++j) M(i, j) -= f * M(c, j);
        }
    }
    return det;
}

int rat_rank(RatMat A) {
    return static_cast<int>(rref(A).size());
}

Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int int_ext_gcd_vec(const IntVec& v, IntVec& w) {
    w.assign(v.size(), Int(0));
    Int g(0);
    // fold the extended gcd over the entries
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (g == 0) {
            g = abs(v[i]);
            w[i] = (v[i] > 0) ? 1 : -1;
            continue;
        }
        Int s, t, g2;
        mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
        for (size_t j = 0; j < i; ++j) w[j] *= s;
        w[i] = t;
        g = g2;
    }
    if (g == 0) throw std::domain_error("int_ext_gcd_vec: zero vector");
    return g;
}

namespace {

bool snf_block_clear(IntMat& D, IntMat& U, IntMat& V, int s) {
    // returns true when row s and column s are clear beyond the pivot
    for (int i = s + 1; i < D.rows; ++i)
        if (D(i, s) != 0) return false;
    for (int j = s + 1; j < D.cols; ++j)
        if (D(s, j) != 0) return false;
    (void)U;
    (void)V;
    return true;
}

void add_row(IntMat& M, int dst, int src, const Int& f) {
    for (int j = 0; j < M.cols; ++j) M(dst, j) += f * M(src, j);
}
void add_col(IntMat& M, int dst, int src, const Int& f) {
    for (int i = 0; i < M.rows; ++i) M(i, dst) += f * M(i, src);
}
void swap_row(IntMat& M, int a, int b) {
    for (int j = 0; j < M.cols; ++j) std::swap(M(a, j), M(b, j));
}
void swap_col(IntMat& M, int a, int b) {
    for (int i = 0; i < M.rows; ++i) std::swap(M(i, a), M(i, b));
}

} // namespace

SmithResult smith_normal_form(const IntMat& A) {
    SmithResult r;
    r.D = A;
    r.U = IntMat::identity(A.rows);
    r.V = IntMat::identity(A.cols);
    IntMat& D = r.D;
    int n = std::min(A.rows, A.cols);
    for (int s = 0; s < n; ++s) {
        while (true) {
            // locate smallest nonzero |entry| in the trailing block
            int pi = -1, pj = -1;
            Int best(0);
            for (int i = s; i < D.rows; ++i)
                for (int j = s; j < D.cols; ++j) {
                    if (D(i, j) == 0) continue;
                    Int v = abs(D(i, j));
                    if (pi < 0 || v < best) { best = v; pi = i; pj = j; }
                }
            if (pi < 0) break; // block is zero
            if (pi != s) { swap_row(D, pi, s); swap_row(r.U, pi, s); }
            if (pj != s) { swap_col(D, pj, s); swap_col(r.V, pj, s); }
            bool reduced = true;
            for (int i = s + 1; i < D.rows; ++i) {
                if (D(i, s) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), D(i, s).get_mpz_t(), D(s, s).get_mpz_t());
                add_row(D, i, s, -q);
                add_row(r.U, i, s, -q);
                if (D(i, s) != 0) reduced = false;
            }
            for (int j = s + 1; j < D.cols; ++j) {
                if (D(s, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), D(s, j).get_mpz_t(), D(s, s).get_mpz_t());
                add_col(D, j, s, -q);
                add_col(r.V, j, s, -q);
                if (D(s, j) != 0) reduced = false;
            }
            if (!reduced || !snf_block_clear(D, r.U, r.V, s)) continue;
            // pivot must divide the remaining block
            bool divides = true;
            for (int i = s + 1; i < D.rows && divides; ++i)
                for (int j = s + 1; j < D.cols && divides; ++j)
                    if (D(i, j) % D(s, s) != 0) {
                        add_row(D, s, i, Int(1));
                        add_row(r.U, s, i, Int(1));
                        divides = false;
                    }
            if (divides) break;
        }
        if (D(s, s) < 0) {
            for (int j = 0; j < D.cols; ++j) D(s, j) = -D(s, j);
            for (int j = 0; j < r.U.cols; ++j) r.U(s, j) = -r.U(s, j);
        }
    }
    return r;
}

IntMat int_mul(const IntMat& A, const IntMat& B) {
    if (A.cols != B.rows) throw std::invalid_argument("int_mul: shape mismatch");
    IntMat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            if (A(i, k) == 0) continue;
            for (int j = 0; j < B.cols; ++j) C(i, j) += A(i, k) * B(k, j);
        }
    return C;
}

Int int_det(const IntMat& A) {
    Rat d = rat_det(A.to_rat());
    if (d.get_den() != 1) throw std::logic_error("int_det: non-integer determinant");
    return d.get_num();
}

IntMat int_kernel(const IntMat& A) {
    SmithResult s = smith_normal_form(A);
    int n = std::min(A.rows, A.cols);
    int rank = 0;
    for (int i = 0; i < n; ++i)
        if (s.D(i, i) != 0) ++rank;
    int kdim = A.cols - rank;
    IntMat K(A.cols, kdim);
    // A x = 0  <=>  x = V y with D y = 0, so the last cols-rank columns of V
    for (int k = 0; k < kdim; ++k)
        for (int i = 0; i < A.cols; ++i) K(i, k) = s.V(i, rank + k);
    return K;
}

bool is_primitive_sublattice(const IntMat& B) {
    SmithResult s = smith_normal_form(B);
    int n = std::min(B.rows, B.cols);
    for (int i = 0; i < n; ++i)
        if (s.D(i, i) != 1) return false;
    return true;
}

IntMat complete_to_basis(const IntMat& B) {
    if (!is_primitive_sublattice(B)) throw std::domain_error("complete_to_basis: not primitive");
    int b = B.rows, p = B.cols;
    SmithResult s = smith_normal_form(B); // U B V = [I_p; 0]
    // columns of U^{-1} beyond the first p complete B V (hence B) to a basis
    RatMat Uinv = rat_inverse(s.U.to_rat());
    IntMat C(b, b - p);
    for (int j = 0; j < b - p; ++j)
        for (int i = 0; i < b; ++i) {
            Rat v = Uinv(i, p + j);
            if (v.get_den() != 1) throw std::logic_error("complete_to_basis: U not unimodular");
            C(i, j) = v.get_num();
        }
    return C;
}

} // namespace ortheta
