#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Exact arithmetic kernel: arbitrary-precision integers and rationals,
// dense linear algebra over Q, and Smith normal form over Z.
// All values are immutable-by-convention and safe to share across threads.
namespace exactmath {

using Int = mpz_class;
using Rat = mpq_class;

// Rational in lowest terms with positive denominator.
inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}
inline Rat rat(long num, long den = 1) { return rat(Int(num), Int(den)); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Parses "a" or "a/b" (optional leading minus).
Rat parse_rat(const std::string& s);
std::string to_string(const Rat& r);

// power with non-negative integer exponent
Int ipow(const Int& base, unsigned long e);
Rat qpow(const Rat& base, unsigned long e);
Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

// ---------------------------------------------------------------------------
// Dense rational matrix, row-major.
class QMatrix {
  public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::size_t rank() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct QSolveResult {
    SolveStatus status;
    std::vector<Rat> x;  // a solution when status != Inconsistent
};

// Exact solution of a x = b.  "Underdetermined" means consistent with a
// nontrivial kernel (one solution is still returned).
QSolveResult solve_linear_q(const QMatrix& a, const std::vector<Rat>& b);

// ---------------------------------------------------------------------------
// Integer matrix and Smith normal form.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::size_t rank_q() const;  // rank over Q

  private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

struct SmithResult {
    std::vector<Int> factors;  // nonzero invariant factors d1 | d2 | ... | dr, all positive
    std::size_t rank = 0;      // = factors.size()
    // When transforms were requested: u * input * v == diag(factors), with
    // u, v unimodular.
    std::optional<IntMatrix> u, v;
};

// Smith normal form by elementary row/column reduction, pivot = minimal
// nonzero |entry|.  Matrices here are small, asymptotics are irrelevant.
SmithResult smith_normal_form(const IntMatrix& m, bool want_transforms = false);

// Structure of coker(m : Z^cols_src -> Z^rows)?  We use the convention that
// the matrix columns span the relation subgroup of Z^rows: the cokernel of
// the column lattice.  free_rank = rows - rank, torsion = factors > 1.
struct CokernelStructure {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, in divisibility order
};
CokernelStructure cokernel(const IntMatrix& m);

// Solves m y = b over the integers; nullopt when no integral solution exists.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& b);

// Least non-negative residue; p in {2,3,5} everywhere in this project.
long mod_p(const Int& v, long p);
// Inverse mod p for residues coprime to p.
long inv_mod_p(long v, long p);

}  // namespace exactmath
