#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exactmath.hpp"

// Sparse multivariate polynomials over Q with a topological-degree grading.
//
// Variables live in a single process-wide registry keyed by name; every
// variable carries a positive even topological degree.  Polynomials are
// immutable values: a sorted term vector in a fixed graded order, no zero
// coefficients stored.  Equality is structural.
namespace polyring {

using exactmath::Int;
using exactmath::Rat;

using VarId = std::uint32_t;

struct VarInfo {
    std::string name;
    int degree;  // topological degree, positive and even
};

// Process-wide interned variable table.  Registration is idempotent; a
// degree mismatch on re-registration is an error.
class VarTable {
  public:
    static VarTable& instance();

    VarId intern(const std::string& name, int degree);
    std::optional<VarId> lookup(const std::string& name) const;
    const VarInfo& info(VarId v) const;
    std::size_t size() const;

  private:
    VarTable() = default;
    std::vector<VarInfo> vars_;
    std::map<std::string, VarId> by_name_;
};

inline VarId var(const std::string& name, int degree) {
    return VarTable::instance().intern(name, degree);
}

// ---------------------------------------------------------------------------

struct Factor {
    VarId var;
    std::uint32_t exp;
    bool operator==(const Factor&) const = default;
};

// Sparse exponent vector, sorted by VarId, no zero exponents.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<Factor> sorted_factors);
    static Monomial unit() { return Monomial(); }
    static Monomial of(VarId v, std::uint32_t e = 1);

    const std::vector<Factor>& factors() const { return f_; }
    bool is_unit() const { return f_.empty(); }
    int degree() const;  // topological degree
    std::uint32_t exp_of(VarId v) const;

    Monomial times(const Monomial& o) const;
    bool divisible_by(const Monomial& o) const;
    Monomial divide_by(const Monomial& o) const;  // requires divisibility

    // graded order: degree first, then a fixed lexicographic tie-break
    static int cmp(const Monomial& a, const Monomial& b);
    bool operator==(const Monomial& o) const { return f_ == o.f_; }
    bool operator<(const Monomial& o) const { return cmp(*this, o) < 0; }

    std::size_t hash() const;

  private:
    std::vector<Factor> f_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// ---------------------------------------------------------------------------

struct Term {
    Monomial mon;
    Rat coeff;
};

class Poly;
Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

class Poly {
  public:
    Poly() = default;  // zero
    static Poly zero() { return Poly(); }
    static Poly constant(const Rat& c);
    static Poly variable(VarId v);
    static Poly term(const Rat& c, const Monomial& m);
    // Consumes an unsorted term list; merges duplicates, drops zeros.
    static Poly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly neg() const;
    Poly scale(const Rat& c) const;
    Poly pow(unsigned e) const;

    // grading
    bool is_homogeneous() const;
    int degree() const;          // max term degree; -1 for zero
    int homogeneous_degree() const;  // throws unless homogeneous nonzero
    Poly graded_component(int degree) const;

    // coefficient queries
    Rat coeff_of(const Monomial& m) const;
    bool integer_coeffs() const;
    Int content() const;  // gcd of integer coefficients; requires integer_coeffs

    // coefficientwise reduction to least non-negative residues mod p.
    // Rejects denominators divisible by p; inverts other denominators mod p.
    Poly reduce_mod_p(long p) const;

    // evaluation at a rational point (used by oracles and property tests)
    Rat evaluate(const std::map<VarId, Rat>& point) const;

    std::string str() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);

  private:
    std::vector<Term> t_;  // sorted by Monomial order, ascending
};

inline Poly operator*(const Rat& c, const Poly& p) { return p.scale(c); }
inline Poly operator-(const Poly& p) { return p.neg(); }

// convenience for building small linear combinations
Poly pvar(const std::string& name);  // must already be registered

// ---------------------------------------------------------------------------

// Variable -> homogeneous polynomial of the same topological degree.
// Degree violations are rejected at insertion.
class Substitution {
  public:
    Substitution() = default;

    void set(VarId v, Poly image);
    bool has(VarId v) const;
    const Poly& image(VarId v) const;
    const std::map<VarId, Poly>& images() const { return map_; }

    // Ring homomorphism; variables outside the domain map to themselves.
    Poly apply(const Poly& p) const;
    // Composition: (this after other)(x) = this(other(x)).
    Substitution after(const Substitution& other) const;

  private:
    std::map<VarId, Poly> map_;
};

// ---------------------------------------------------------------------------
// Exact text format: terms joined by " + " / " - ", coefficient as integer or
// "a/b", monomial factors as "var^e" joined by "*", e.g. "-480*t^2*c2 + 3*c4^2".
// Round trips exactly.  Parsing requires every variable to be registered.

std::string to_text(const Poly& p);
Poly parse_poly(const std::string& text);

// Extended expression syntax for relation-library files and tests:
// +, -, *, ^, parentheses and rational literals.  Superset of the exact
// text format above.
Poly parse_expr(const std::string& text);

}  // namespace polyring
