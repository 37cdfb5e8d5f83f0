#include "exactmath.hpp"

#include <algorithm>
#include <cstdlib>

namespace exactmath {

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return rat(Int(s), Int(1));
    return rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

std::string to_string(const Rat& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat qpow(const Rat& base, unsigned long e) {
    return Rat(ipow(base.get_num(), e), ipow(base.get_den(), e));
}

Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// ---------------------------------------------------------------------------

namespace {

// Row echelon over Q in place; returns pivot columns.
std::vector<std::size_t> echelon(std::vector<std::vector<Rat>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t QMatrix::rank() const {
    std::vector<std::vector<Rat>> m(rows_, std::vector<Rat>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m[i][j] = at(i, j);
    return echelon(m).size();
}

QSolveResult solve_linear_q(const QMatrix& a, const std::vector<Rat>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_linear_q: size mismatch");
    std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = a.at(i, j);
        m[i][cols] = b[i];
    }
    auto pivots = echelon(m);
    // Inconsistent iff the augmented column is a pivot.
    if (!pivots.empty() && pivots.back() == cols) return {SolveStatus::Inconsistent, {}};
    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = m[k][cols];
    SolveStatus st = (pivots.size() == cols) ? SolveStatus::Unique : SolveStatus::Underdetermined;
    return {st, std::move(x)};
}

// ---------------------------------------------------------------------------

std::size_t IntMatrix::rank_q() const {
    QMatrix q(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) q.at(i, j) = Rat(at(i, j));
    return q.rank();
}

namespace {

struct SnfWork {
    IntMatrix a;
    bool want;
    IntMatrix u, v;  // track row ops in u, column ops in v

    void row_swap(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        if (want)
            for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void col_swap(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        if (want)
            for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void row_add(std::size_t dst, std::size_t src, const Int& f) {  // row dst += f*row src
        for (std::size_t c = 0; c < a.cols(); ++c) a.at(dst, c) += f * a.at(src, c);
        if (want)
            for (std::size_t c = 0; c < u.cols(); ++c) u.at(dst, c) += f * u.at(src, c);
    }
    void col_add(std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t r = 0; r < a.rows(); ++r) a.at(r, dst) += f * a.at(r, src);
        if (want)
            for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, dst) += f * v.at(r, src);
    }
    void row_negate(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
        if (want)
            for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m, bool want_transforms) {
    SnfWork w;
    w.a = m;
    w.want = want_transforms;
    std::size_t rows = m.rows(), cols = m.cols();
    if (want_transforms) {
        w.u = IntMatrix(rows, rows);
        w.v = IntMatrix(cols, cols);
        for (std::size_t i = 0; i < rows; ++i) w.u.at(i, i) = 1;
        for (std::size_t j = 0; j < cols; ++j) w.v.at(j, j) = 1;
    }

    std::size_t t = 0;
    std::size_t n = std::min(rows, cols);
    while (t < n) {
        // locate minimal nonzero |entry| in the remaining block
        bool found = false;
        std::size_t pi = 0, pj = 0;
        Int best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                const Int& e = w.a.at(i, j);
                if (e == 0) continue;
                Int ab = abs(e);
                if (!found || ab < best) {
                    found = true;
                    best = ab;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (w.a.at(i, t) == 0) continue;
            Int q = w.a.at(i, t) / w.a.at(t, t);  // truncated division keeps remainders small
            if (q != 0) w.row_add(i, t, -q);
            if (w.a.at(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (w.a.at(t, j) == 0) continue;
            Int q = w.a.at(t, j) / w.a.at(t, t);
            if (q != 0) w.col_add(j, t, -q);
            if (w.a.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // smaller pivot now exists; redo this step

        // divisibility: pivot must divide every entry of the rest of the block
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i)
            for (std::size_t j = t + 1; j < cols && divides; ++j) {
                if (w.a.at(i, j) % w.a.at(t, t) != 0) {
                    w.row_add(t, i, 1);
                    divides = false;
                }
            }
        if (!divides) continue;

        if (w.a.at(t, t) < 0) w.row_negate(t);
        ++t;
    }

    SmithResult res;
    for (std::size_t i = 0; i < t; ++i) res.factors.push_back(w.a.at(i, i));
    res.rank = t;
    if (want_transforms) {
        res.u = std::move(w.u);
        res.v = std::move(w.v);
    }
    return res;
}

CokernelStructure cokernel(const IntMatrix& m) {
    auto snf = smith_normal_form(m);
    CokernelStructure s;
    s.free_rank = m.rows() - snf.rank;
    for (const Int& d : snf.factors)
        if (d > 1) s.torsion.push_back(d);
    return s;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve_integer: size mismatch");
    auto snf = smith_normal_form(m, /*want_transforms=*/true);
    // u m v = d  =>  m y = b with y = v z, d z = u b
    std::vector<Int> ub(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) ub[i] += snf.u->at(i, j) * b[j];
    std::vector<Int> z(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i < snf.rank) {
            if (ub[i] % snf.factors[i] != 0) return std::nullopt;
            z[i] = ub[i] / snf.factors[i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Int> y(m.cols(), 0);
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) y[i] += snf.v->at(i, j) * z[j];
    return y;
}

long mod_p(const Int& v, long p) {
    Int r = v % p;
    long x = r.get_si();
    return x < 0 ? x + p : x;
}

long inv_mod_p(long v, long p) {
    v %= p;
    if (v < 0) v += p;
    if (v == 0) throw std::domain_error("inv_mod_p: not invertible");
    for (long k = 1; k < p; ++k)
        if (k * v % p == 1) return k;
    throw std::domain_error("inv_mod_p: not invertible");
}

}  // namespace exactmath
