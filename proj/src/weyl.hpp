#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyring.hpp"

// Variable systems and Weyl-group actions on H^2(BT): the simple-reflection
// tables for the t-, tau- and xi-coordinates, the root-system orbit sets,
// and the linear basis changes connecting all coordinate systems.
namespace weyl {

using polyring::Poly;
using polyring::Substitution;
using polyring::VarId;

// Registers every variable name used anywhere in this project (idempotent).
void register_all_variables();

// E8 Cartan matrix in Bourbaki numbering: the chain 1-3-4-5-6-7-8 with
// node 2 attached to node 4.
struct CartanData {
    int a[8][8];
    static CartanData e8();
    bool adjacent(int i, int j) const;  // 1-based
    // Simple reflection s_i on the fundamental-weight basis om1..om8.
    Substitution reflection_on_weights(int i) const;
};

// A set of simple reflections acting on a fixed variable list.
struct ActionTable {
    std::string name;
    int generators = 0;                // s_1 .. s_generators
    std::vector<VarId> variables;      // the variables the table acts on
    std::vector<Substitution> action;  // action[i-1] = s_i

    const Substitution& s(int i) const { return action.at(i - 1); }
};

ActionTable table1();             // transcribed t-action
ActionTable table2();             // transcribed tau-action
ActionTable table3_as_printed();  // contains the suspect xi5/s6 cell verbatim
ActionTable table3_corrected();   // xi5/s6 read as xi6

// Table 2 conjugated to the chi-coordinates (acts on chi1..chi8).
ActionTable table2_on_chi();
// The same reflection data on the primed alphabet (t'-coordinates), and
// conjugated to the x'-coordinates.
ActionTable table_e7_primed();
ActionTable table_e7_on_xprime();

struct Derivation {
    ActionTable derived;
    std::vector<std::string> mismatches;  // cell-level differences vs the transcription
    int cells_checked = 0;
    int nontrivial_cells = 0;
};

// Re-derives Table 1 from the Cartan-matrix reflection formula and the
// t_i staircase; any difference against the transcription is reported,
// never auto-corrected.
Derivation derive_table1();
// Translates Table 1 through the tau / xi basis changes.
Derivation derive_table2();
Derivation derive_table3();  // expected to flag exactly the xi5/s6 cell

// s_i^2 = id on every listed variable; empty result means success.
// `elim`, when given, compares modulo the c1 = 3t type relation of the
// table's alphabet (needed for the tau-table, whose printed tau-row picks
// a representative that is only correct modulo cbar1 = 3tau).
std::vector<std::string> check_involutions(const ActionTable& t, const Substitution* elim = nullptr);
// (s_i s_j)^m = id with m = 3 for adjacent nodes, 2 otherwise.
std::vector<std::string> check_braid(const ActionTable& t, const CartanData& cartan,
                                     const Substitution* elim = nullptr);

// ---------------------------------------------------------------------------

// Finite set of degree-2 linear forms, closed under negation; forms are
// stored with canonical sign (leading coefficient positive).
struct OrbitSet {
    std::string name;
    std::vector<Poly> forms;
};

OrbitSet orbit_S();       // +-(xi_i - xi_j), +-(xi_i + xi_j + xi_k); 240 forms
OrbitSet orbit_Sigma();   // +-(chi_i + chi_j); 56 forms
OrbitSet orbit_Sprime();  // +-(x'_i + x'_j); 56 forms

Poly canonical_sign(const Poly& form);

// True iff every generator permutes the set as a multiset of canonical
// forms; on failure returns the first non-fixed element description.
//
// Forms and images are compared in honest base coordinates: `to_base`
// rewrites the orbit alphabet into the t/tau/t' alphabet and `elim`
// realizes the c1 = 3t type relation of that alphabet, without which the
// orbits are only stable modulo the relation.  Either may be null.
std::optional<std::string> check_orbit_invariance(const OrbitSet& set, const ActionTable& t,
                                                  const Substitution* to_base,
                                                  const Substitution* elim);

// ---------------------------------------------------------------------------
// Basis changes (exact linear substitutions).

Substitution tau_to_t();  // tau-family expressed in t-coordinates
Substitution t_to_tau();
Substitution xi_to_t();
Substitution t_to_xi();
Substitution chi_to_tau();
Substitution tau_to_chi();
Substitution xprime_to_primed();
Substitution primed_to_xprime();

// Restriction map g* = i*: t_i -> t'_i, t8 -> 0, t -> t'.  Not invertible.
Substitution restriction_to_primed();

// t8 -> 3t - (t1 + ... + t7): realizes c1 = 3t as an identity.
Substitution eliminate_t8();
// tau7 -> 3tau - (tau1+...+tau6): realizes cbar1 = 3tau.
Substitution eliminate_tau7();
// t'7 -> 3t' - (t'1+...+t'6).
Substitution eliminate_tprime7();

// Conjugates an action table through a basis change: the result acts on
// `vars`, with s_i = new_from_old after t.s(i) after old_from_new.
ActionTable conjugate(const ActionTable& t, const std::vector<VarId>& vars,
                      const Substitution& old_from_new, const Substitution& new_from_old,
                      const std::string& name);

// JSON export of a table (deterministic ordering).
std::string table_to_json(const ActionTable& t);

// lookup that throws on unknown names
VarId v(const std::string& name);

}  // namespace weyl
