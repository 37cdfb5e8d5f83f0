#include "weyl.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace weyl {

using exactmath::Rat;
using exactmath::rat;
using polyring::Monomial;
using polyring::Term;
using polyring::VarTable;
using polyring::pvar;

VarId v(const std::string& name) {
    auto id = VarTable::instance().lookup(name);
    if (!id) throw std::invalid_argument("weyl: unknown variable '" + name + "'");
    return *id;
}

void register_all_variables() {
    using polyring::var;
    static std::once_flag once;
    std::call_once(once, [] {
        for (int i = 1; i <= 8; ++i) var("om" + std::to_string(i), 2);
        for (int i = 1; i <= 8; ++i) var("t" + std::to_string(i), 2);
        var("t", 2);
        var("u", 2);
        var("tau", 2);
        for (int i = 1; i <= 7; ++i) var("tau" + std::to_string(i), 2);
        for (int i = 1; i <= 9; ++i) var("xi" + std::to_string(i), 2);
        for (int i = 1; i <= 8; ++i) var("chi" + std::to_string(i), 2);
        for (int i = 2; i <= 8; ++i) var("c" + std::to_string(i), 2 * i);
        for (int i = 1; i <= 7; ++i) var("cb" + std::to_string(i), 2 * i);   // sigma_i(tau_*)
        for (int i = 1; i <= 7; ++i) var("ct" + std::to_string(i), 2 * i);   // sigma_i(t_1..t_7)
        var("t'", 2);
        for (int i = 1; i <= 7; ++i) var("t" + std::to_string(i) + "'", 2);
        for (int i = 2; i <= 7; ++i) var("c" + std::to_string(i) + "'", 2 * i);
        for (int i = 1; i <= 8; ++i) var("x" + std::to_string(i) + "'", 2);
        // degree-2i generators of the flag-manifold presentations
        var("g3", 6);
        var("g4", 8);
        var("g5", 10);
        var("g6h", 12);   // hatted degree-12 generator
        var("g6t", 12);   // tilde degree-12 generator
        var("g9", 18);
        var("g10", 20);
        var("g15h", 30);
        var("g3'", 6);
        var("g4'", 8);
        var("g5'", 10);
        var("g9'", 18);
        // ring generators of the quotient space cohomology
        var("v", 12);
        var("w", 20);
        var("x", 30);
    });
}

// ---------------------------------------------------------------------------

CartanData CartanData::e8() {
    CartanData c{};
    static const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) c.a[i][j] = (i == j) ? 2 : 0;
    for (auto& e : edges) {
        c.a[e[0] - 1][e[1] - 1] = -1;
        c.a[e[1] - 1][e[0] - 1] = -1;
    }
    return c;
}

bool CartanData::adjacent(int i, int j) const { return i != j && a[i - 1][j - 1] == -1; }

Substitution CartanData::reflection_on_weights(int i) const {
    register_all_variables();
    // s_i fixes om_k for k != i and sends om_i to om_i - alpha_i where
    // alpha_i = sum_j a[i][j] om_j (simply laced: all root lengths equal).
    Poly image = pvar("om" + std::to_string(i));
    for (int j = 1; j <= 8; ++j) {
        if (a[i - 1][j - 1] != 0)
            image = image - Rat(a[i - 1][j - 1]) * pvar("om" + std::to_string(j));
    }
    Substitution s;
    s.set(v("om" + std::to_string(i)), image);
    return s;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<VarId> name_list(std::vector<std::string> names) {
    std::vector<VarId> out;
    out.reserve(names.size());
    for (auto& n : names) out.push_back(v(n));
    return out;
}

ActionTable make_table(const std::string& name, int gens, std::vector<std::string> vars,
                       const std::vector<std::tuple<std::string, int, std::string>>& cells) {
    register_all_variables();
    ActionTable t;
    t.name = name;
    t.generators = gens;
    t.variables = name_list(std::move(vars));
    t.action.resize(gens);
    for (const auto& [row, col, image] : cells)
        t.action[col - 1].set(v(row), polyring::parse_poly(image));
    return t;
}

}  // namespace

ActionTable table1() {
    return make_table(
        "table1", 8, {"t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8", "t"},
        {
            {"t1", 1, "t2"},
            {"t1", 2, "t - t2 - t3"},
            {"t2", 1, "t1"},
            {"t2", 2, "t - t1 - t3"},
            {"t2", 3, "t3"},
            {"t3", 2, "t - t1 - t2"},
            {"t3", 3, "t2"},
            {"t3", 4, "t4"},
            {"t4", 4, "t3"},
            {"t4", 5, "t5"},
            {"t5", 5, "t4"},
            {"t5", 6, "t6"},
            {"t6", 6, "t5"},
            {"t6", 7, "t7"},
            {"t7", 7, "t6"},
            {"t7", 8, "t8"},
            {"t8", 8, "t7"},
            {"t", 2, "2*t - t1 - t2 - t3"},
        });
}

ActionTable table2() {
    return make_table(
        "table2", 7, {"tau1", "tau2", "tau3", "tau4", "tau5", "tau6", "tau7", "tau", "u"},
        {
            {"tau1", 1, "tau2"},
            {"tau1", 2, "tau - tau2 - tau3"},
            {"tau2", 1, "tau1"},
            {"tau2", 2, "tau - tau1 - tau3"},
            {"tau2", 3, "tau3"},
            {"tau3", 2, "tau - tau1 - tau2"},
            {"tau3", 3, "tau2"},
            {"tau3", 4, "tau4"},
            {"tau4", 4, "tau3"},
            {"tau4", 5, "tau5"},
            {"tau5", 5, "tau4"},
            {"tau5", 6, "tau6"},
            {"tau6", 6, "tau5"},
            {"tau6", 7, "tau7"},
            {"tau7", 7, "tau6"},
            {"tau", 2, "-1*tau + tau4 + tau5 + tau6 + tau7"},
        });
}

namespace {

// eta = (xi1 + xi2 + xi3)/3 enters only as a derived quantity
std::string eta_shift(const std::string& var, int multiple) {
    std::ostringstream os;
    os << var;
    std::string c = (std::abs(multiple) == 1) ? "1/3" : "2/3";
    for (int k = 0; k < 3; ++k) {
        os << (multiple > 0 ? " + " : " - ") << c << "*xi" << (k + 1);
    }
    return os.str();
}

ActionTable table3_base(bool corrected) {
    std::vector<std::tuple<std::string, int, std::string>> cells = {
        {"xi1", 1, "xi2"},
        {"xi2", 1, "xi1"},
        {"xi2", 3, "xi3"},
        {"xi3", 3, "xi2"},
        {"xi3", 4, "xi4"},
        {"xi4", 4, "xi3"},
        {"xi4", 5, "xi5"},
        {"xi5", 5, "xi4"},
        {"xi5", 6, corrected ? "xi6" : "t6"},  // the one suspect cell
        {"xi6", 6, "xi5"},
        {"xi6", 7, "xi7"},
        {"xi7", 7, "xi6"},
        {"xi7", 8, "xi8"},
        {"xi8", 8, "xi7"},
    };
    for (int i = 1; i <= 3; ++i) cells.push_back({"xi" + std::to_string(i), 2, eta_shift("xi" + std::to_string(i), -2)});
    for (int i = 4; i <= 9; ++i) cells.push_back({"xi" + std::to_string(i), 2, eta_shift("xi" + std::to_string(i), 1)});
    return make_table(corrected ? "table3-corrected" : "table3-as-printed", 8,
                      {"xi1", "xi2", "xi3", "xi4", "xi5", "xi6", "xi7", "xi8", "xi9"}, cells);
}

}  // namespace

ActionTable table3_as_printed() { return table3_base(false); }
ActionTable table3_corrected() { return table3_base(true); }

ActionTable table2_on_chi() {
    std::vector<std::string> chis;
    for (int i = 1; i <= 8; ++i) chis.push_back("chi" + std::to_string(i));
    return conjugate(table2(), name_list(chis), chi_to_tau(), tau_to_chi(), "table2-on-chi");
}

ActionTable table_e7_primed() {
    // the tau-action transcribed onto the primed alphabet
    auto prime = [](int i) { return "t" + std::to_string(i) + "'"; };
    std::vector<std::tuple<std::string, int, std::string>> cells = {
        {prime(1), 1, prime(2)},
        {prime(1), 2, "t' - t2' - t3'"},
        {prime(2), 1, prime(1)},
        {prime(2), 2, "t' - t1' - t3'"},
        {prime(2), 3, prime(3)},
        {prime(3), 2, "t' - t1' - t2'"},
        {prime(3), 3, prime(2)},
        {prime(3), 4, prime(4)},
        {prime(4), 4, prime(3)},
        {prime(4), 5, prime(5)},
        {prime(5), 5, prime(4)},
        {prime(5), 6, prime(6)},
        {prime(6), 6, prime(5)},
        {prime(6), 7, prime(7)},
        {prime(7), 7, prime(6)},
        // same representative as the tau-row of table 2
        {"t'", 2, "-1*t' + t4' + t5' + t6' + t7'"},
    };
    return make_table("table-e7-primed", 7,
                      {prime(1), prime(2), prime(3), prime(4), prime(5), prime(6), prime(7), "t'"},
                      cells);
}

ActionTable table_e7_on_xprime() {
    std::vector<std::string> xs;
    for (int i = 1; i <= 8; ++i) xs.push_back("x" + std::to_string(i) + "'");
    return conjugate(table_e7_primed(), name_list(xs), xprime_to_primed(), primed_to_xprime(),
                     "table-e7-on-xprime");
}

// ---------------------------------------------------------------------------
// Basis changes.

namespace {

Substitution build_sub(const std::vector<std::pair<std::string, std::string>>& images) {
    register_all_variables();
    Substitution s;
    for (auto& [name, image] : images) s.set(v(name), polyring::parse_poly(image));
    return s;
}

}  // namespace

Substitution tau_to_t() {
    std::vector<std::pair<std::string, std::string>> img = {{"u", "t8"}, {"tau", "t - 3/2*t8"}};
    for (int i = 1; i <= 7; ++i)
        img.push_back({"tau" + std::to_string(i), "t" + std::to_string(i) + " - 1/2*t8"});
    return build_sub(img);
}

Substitution t_to_tau() {
    std::vector<std::pair<std::string, std::string>> img = {{"t8", "u"}, {"t", "tau + 3/2*u"}};
    for (int i = 1; i <= 7; ++i)
        img.push_back({"t" + std::to_string(i), "tau" + std::to_string(i) + " + 1/2*u"});
    return build_sub(img);
}

Substitution xi_to_t() {
    std::vector<std::pair<std::string, std::string>> img = {{"xi9", "-2/3*t"}};
    for (int i = 1; i <= 8; ++i)
        img.push_back({"xi" + std::to_string(i), "2*t" + std::to_string(i) + " - 2/3*t"});
    return build_sub(img);
}

Substitution t_to_xi() {
    std::vector<std::pair<std::string, std::string>> img = {{"t", "-3/2*xi9"}};
    for (int i = 1; i <= 8; ++i)
        img.push_back({"t" + std::to_string(i), "1/2*xi" + std::to_string(i) + " - 1/2*xi9"});
    return build_sub(img);
}

Substitution chi_to_tau() {
    std::vector<std::pair<std::string, std::string>> img = {{"chi8", "tau"}};
    for (int i = 1; i <= 7; ++i)
        img.push_back({"chi" + std::to_string(i), "2*tau" + std::to_string(i) + " - tau"});
    return build_sub(img);
}

Substitution tau_to_chi() {
    std::vector<std::pair<std::string, std::string>> img = {{"tau", "chi8"}};
    for (int i = 1; i <= 7; ++i)
        img.push_back({"tau" + std::to_string(i), "1/2*chi" + std::to_string(i) + " + 1/2*chi8"});
    return build_sub(img);
}

Substitution xprime_to_primed() {
    std::vector<std::pair<std::string, std::string>> img = {{"x8'", "t'"}};
    for (int i = 1; i <= 7; ++i)
        img.push_back({"x" + std::to_string(i) + "'", "2*t" + std::to_string(i) + "' - t'"});
    return build_sub(img);
}

Substitution primed_to_xprime() {
    std::vector<std::pair<std::string, std::string>> img = {{"t'", "x8'"}};
    for (int i = 1; i <= 7; ++i)
        img.push_back({"t" + std::to_string(i) + "'", "1/2*x" + std::to_string(i) + "' + 1/2*x8'"});
    return build_sub(img);
}

Substitution restriction_to_primed() {
    register_all_variables();
    std::vector<std::pair<std::string, std::string>> img = {{"t", "t'"}};
    for (int i = 1; i <= 7; ++i) img.push_back({"t" + std::to_string(i), "t" + std::to_string(i) + "'"});
    Substitution s = build_sub(img);
    s.set(v("t8"), Poly::zero());
    return s;
}

Substitution eliminate_t8() {
    return build_sub({{"t8", "3*t - t1 - t2 - t3 - t4 - t5 - t6 - t7"}});
}

Substitution eliminate_tau7() {
    return build_sub({{"tau7", "3*tau - tau1 - tau2 - tau3 - tau4 - tau5 - tau6"}});
}

Substitution eliminate_tprime7() {
    return build_sub({{"t7'", "3*t' - t1' - t2' - t3' - t4' - t5' - t6'"}});
}

// ---------------------------------------------------------------------------

ActionTable conjugate(const ActionTable& t, const std::vector<VarId>& vars,
                      const Substitution& old_from_new, const Substitution& new_from_old,
                      const std::string& name) {
    ActionTable out;
    out.name = name;
    out.generators = t.generators;
    out.variables = vars;
    out.action.resize(t.generators);
    for (int i = 1; i <= t.generators; ++i) {
        for (VarId var : vars) {
            Poly in_old = old_from_new.apply(Poly::variable(var));
            Poly moved = t.s(i).apply(in_old);
            Poly image = new_from_old.apply(moved);
            if (image != Poly::variable(var)) out.action[i - 1].set(var, image);
        }
    }
    return out;
}

namespace {

Derivation compare_tables(const ActionTable& derived, const ActionTable& transcribed,
                          const Substitution* to_common) {
    Derivation d;
    d.derived = derived;
    for (int i = 1; i <= transcribed.generators; ++i) {
        for (VarId var : transcribed.variables) {
            ++d.cells_checked;
            Poly lhs = derived.s(i).apply(Poly::variable(var));
            Poly rhs = transcribed.s(i).apply(Poly::variable(var));
            if (!(rhs == Poly::variable(var))) ++d.nontrivial_cells;
            Poly diff = lhs - rhs;
            if (to_common) diff = to_common->apply(diff);
            if (!diff.is_zero()) {
                const auto& info = polyring::VarTable::instance().info(var);
                d.mismatches.push_back("s" + std::to_string(i) + "(" + info.name + "): derived " +
                                       polyring::to_text(lhs) + ", transcribed " +
                                       polyring::to_text(rhs));
            }
        }
    }
    return d;
}

}  // namespace

Derivation derive_table1() {
    register_all_variables();
    CartanData cartan = CartanData::e8();

    // the staircase defining t8, ..., t2 via t_i = s_{i+1}(t_{i+1}),
    // then t1 = s_1(t_2), and t = om2
    std::vector<Poly> t_in_om(10);  // index 1..8 for t_i, 9 for t
    t_in_om[8] = pvar("om8");
    for (int i = 7; i >= 2; --i)
        t_in_om[i] = cartan.reflection_on_weights(i + 1).apply(t_in_om[i + 1]);
    t_in_om[1] = cartan.reflection_on_weights(1).apply(t_in_om[2]);
    t_in_om[9] = pvar("om2");

    // section expressing each weight as an integral combination of t-variables
    Substitution om_to_t = build_sub({
        {"om8", "t8"},
        {"om7", "t7 + t8"},
        {"om6", "t6 + t7 + t8"},
        {"om5", "t5 + t6 + t7 + t8"},
        {"om4", "t4 + t5 + t6 + t7 + t8"},
        {"om3", "t3 + t4 + t5 + t6 + t7 + t8 - t"},
        {"om2", "t"},
        {"om1", "t - t1"},
    });
    Substitution t_to_om_check = build_sub({
        {"t8", polyring::to_text(t_in_om[8])},
        {"t7", polyring::to_text(t_in_om[7])},
        {"t6", polyring::to_text(t_in_om[6])},
        {"t5", polyring::to_text(t_in_om[5])},
        {"t4", polyring::to_text(t_in_om[4])},
        {"t3", polyring::to_text(t_in_om[3])},
        {"t2", polyring::to_text(t_in_om[2])},
        {"t1", polyring::to_text(t_in_om[1])},
        {"t", polyring::to_text(t_in_om[9])},
    });
    // sanity: the section is a genuine right inverse on the weight span
    for (int k = 1; k <= 8; ++k) {
        Poly om = pvar("om" + std::to_string(k));
        if (!(t_to_om_check.apply(om_to_t.apply(om)) == om))
            throw std::logic_error("derive_table1: section mismatch at om" + std::to_string(k));
    }

    ActionTable derived;
    derived.name = "table1-derived";
    derived.generators = 8;
    derived.variables = name_list({"t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8", "t"});
    derived.action.resize(8);
    for (int i = 1; i <= 8; ++i) {
        Substitution refl = cartan.reflection_on_weights(i);
        for (int k = 1; k <= 9; ++k) {
            Poly image_om = refl.apply(t_in_om[k]);
            Poly image_t = om_to_t.apply(image_om);
            VarId var = derived.variables[k - 1];
            if (!(image_t == Poly::variable(var))) derived.action[i - 1].set(var, image_t);
        }
    }

    // cells are compared in weight coordinates, where representation is unique
    return compare_tables(derived, table1(), &t_to_om_check);
}

Derivation derive_table2() {
    register_all_variables();
    ActionTable t1 = table1();
    ActionTable derived =
        conjugate(t1, name_list({"tau1", "tau2", "tau3", "tau4", "tau5", "tau6", "tau7", "tau", "u"}),
                  tau_to_t(), t_to_tau(), "table2-derived");
    derived.generators = 7;
    derived.action.resize(7);
    // printed tau-row entries are representatives modulo cbar1 = 3 tau
    Substitution elim = eliminate_tau7();
    return compare_tables(derived, table2(), &elim);
}

Derivation derive_table3() {
    register_all_variables();
    ActionTable t1 = table1();
    ActionTable derived = conjugate(
        t1, name_list({"xi1", "xi2", "xi3", "xi4", "xi5", "xi6", "xi7", "xi8", "xi9"}),
        xi_to_t(), t_to_xi(), "table3-derived");
    return compare_tables(derived, table3_as_printed(), nullptr);
}

// ---------------------------------------------------------------------------

namespace {

bool same_mod(const Poly& a, const Poly& b, const Substitution* elim) {
    Poly diff = a - b;
    if (elim) diff = elim->apply(diff);
    return diff.is_zero();
}

}  // namespace

std::vector<std::string> check_involutions(const ActionTable& t, const Substitution* elim) {
    std::vector<std::string> failures;
    for (int i = 1; i <= t.generators; ++i) {
        for (VarId var : t.variables) {
            Poly once = t.s(i).apply(Poly::variable(var));
            Poly twice = t.s(i).apply(once);
            if (!same_mod(twice, Poly::variable(var), elim))
                failures.push_back(t.name + ": s" + std::to_string(i) + "^2 moves " +
                                   polyring::VarTable::instance().info(var).name + " to " +
                                   polyring::to_text(twice));
        }
    }
    return failures;
}

std::vector<std::string> check_braid(const ActionTable& t, const CartanData& cartan,
                                     const Substitution* elim) {
    std::vector<std::string> failures;
    for (int i = 1; i <= t.generators; ++i) {
        for (int j = i + 1; j <= t.generators; ++j) {
            int m = cartan.adjacent(i, j) ? 3 : 2;
            for (VarId var : t.variables) {
                Poly p = Poly::variable(var);
                for (int k = 0; k < m; ++k) {
                    p = t.s(j).apply(p);
                    p = t.s(i).apply(p);
                }
                if (!same_mod(p, Poly::variable(var), elim))
                    failures.push_back(t.name + ": (s" + std::to_string(i) + " s" +
                                       std::to_string(j) + ")^" + std::to_string(m) + " moves " +
                                       polyring::VarTable::instance().info(var).name);
            }
        }
    }
    return failures;
}

// ---------------------------------------------------------------------------

Poly canonical_sign(const Poly& form) {
    if (form.is_zero()) return form;
    if (form.terms().front().coeff < 0) return form.neg();
    return form;
}

namespace {

int poly_cmp(const Poly& a, const Poly& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::size_t n = std::min(ta.size(), tb.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = Monomial::cmp(ta[i].mon, tb[i].mon);
        if (c != 0) return c;
        if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff ? -1 : 1;
    }
    if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
    return 0;
}

}  // namespace

OrbitSet orbit_S() {
    register_all_variables();
    OrbitSet s{"S", {}};
    auto xi = [](int i) { return pvar("xi" + std::to_string(i)); };
    for (int i = 1; i <= 9; ++i)
        for (int j = i + 1; j <= 9; ++j) {
            s.forms.push_back(xi(i) - xi(j));
            s.forms.push_back(xi(j) - xi(i));
        }
    for (int i = 1; i <= 9; ++i)
        for (int j = i + 1; j <= 9; ++j)
            for (int k = j + 1; k <= 9; ++k) {
                Poly f = xi(i) + xi(j) + xi(k);
                s.forms.push_back(f);
                s.forms.push_back(f.neg());
            }
    return s;
}

OrbitSet orbit_Sigma() {
    register_all_variables();
    OrbitSet s{"Sigma", {}};
    auto chi = [](int i) { return pvar("chi" + std::to_string(i)); };
    for (int i = 1; i <= 8; ++i)
        for (int j = i + 1; j <= 8; ++j) {
            Poly f = chi(i) + chi(j);
            s.forms.push_back(f);
            s.forms.push_back(f.neg());
        }
    return s;
}

OrbitSet orbit_Sprime() {
    register_all_variables();
    OrbitSet s{"S'", {}};
    auto xp = [](int i) { return pvar("x" + std::to_string(i) + "'"); };
    for (int i = 1; i <= 8; ++i)
        for (int j = i + 1; j <= 8; ++j) {
            Poly f = xp(i) + xp(j);
            s.forms.push_back(f);
            s.forms.push_back(f.neg());
        }
    return s;
}

std::optional<std::string> check_orbit_invariance(const OrbitSet& set, const ActionTable& t,
                                                  const Substitution* to_base,
                                                  const Substitution* elim) {
    auto normalize = [&](const Poly& f) {
        Poly g = to_base ? to_base->apply(f) : f;
        if (elim) g = elim->apply(g);
        return canonical_sign(g);
    };
    std::vector<Poly> reference;
    reference.reserve(set.forms.size());
    for (const Poly& f : set.forms) reference.push_back(normalize(f));
    std::sort(reference.begin(), reference.end(),
              [](const Poly& a, const Poly& b) { return poly_cmp(a, b) < 0; });

    for (int i = 1; i <= t.generators; ++i) {
        std::vector<Poly> image;
        image.reserve(set.forms.size());
        for (const Poly& f : set.forms) image.push_back(t.s(i).apply(f));
        std::vector<Poly> img_sorted;
        img_sorted.reserve(image.size());
        for (const Poly& f : image) img_sorted.push_back(normalize(f));
        std::sort(img_sorted.begin(), img_sorted.end(),
                  [](const Poly& a, const Poly& b) { return poly_cmp(a, b) < 0; });
        for (std::size_t k = 0; k < reference.size(); ++k) {
            if (poly_cmp(img_sorted[k], reference[k]) != 0) {
                // locate a concrete non-member for the report
                for (std::size_t j = 0; j < image.size(); ++j) {
                    Poly cf = normalize(image[j]);
                    bool found = std::binary_search(
                        reference.begin(), reference.end(), cf,
                        [](const Poly& a, const Poly& b) { return poly_cmp(a, b) < 0; });
                    if (!found)
                        return set.name + ": s" + std::to_string(i) + " sends " +
                               polyring::to_text(set.forms[j]) + " to " +
                               polyring::to_text(image[j]) + ", not in the set";
                }
                return set.name + ": multiset changed under s" + std::to_string(i);
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

std::string table_to_json(const ActionTable& t) {
    std::ostringstream os;
    os << "{\"name\":\"" << t.name << "\",\"generators\":" << t.generators << ",\"cells\":[";
    bool first = true;
    for (int i = 1; i <= t.generators; ++i) {
        for (VarId var : t.variables) {
            Poly img = t.s(i).apply(Poly::variable(var));
            if (img == Poly::variable(var)) continue;
            if (!first) os << ",";
            first = false;
            os << "{\"s\":" << i << ",\"var\":\""
               << polyring::VarTable::instance().info(var).name << "\",\"image\":\""
               << polyring::to_text(img) << "\"}";
        }
    }
    os << "]}";
    return os.str();
}

}  // namespace weyl
