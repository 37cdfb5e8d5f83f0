#include "presentation.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "invariants.hpp"
#include "relationdata.hpp"
#include "steenrod.hpp"
#include "weyl.hpp"

namespace presentation {

using exactmath::Rat;
using exactmath::ipow;
using exactmath::rat;
using polyring::Monomial;
using polyring::parse_expr;
using polyring::pvar;
using polyring::to_text;
using relationdata::library;
using weyl::v;

namespace {

Poly P(const std::string& s) { return parse_expr(s); }

CheckResult make_check(const std::string& id, const std::string& statement, bool pass,
                       const std::string& note = "", bool flagged = false) {
    return CheckResult{id, statement, pass, flagged, note};
}

CheckResult residue_check(const std::string& id, const std::string& statement, const Poly& residue,
                          const std::string& extra = "") {
    bool ok = residue.is_zero();
    std::string note = extra;
    if (!ok) {
        if (!note.empty()) note += "; ";
        note += "residue = " + to_text(residue);
    }
    return make_check(id, statement, ok, note);
}

// iterate a substitution until the result is stable
Poly fixpoint(const Substitution& s, Poly p) {
    for (int guard = 0; guard < 16; ++guard) {
        Poly next = s.apply(p);
        if (next == p) return p;
        p = std::move(next);
    }
    throw std::logic_error("fixpoint: substitution did not stabilize");
}

}  // namespace

// ---------------------------------------------------------------------------
// reductions

Substitution c_elim_gamma() {
    weyl::register_all_variables();
    Substitution s;
    s.set(v("c2"), P("4*t^2"));
    s.set(v("c3"), P("2*g3"));
    s.set(v("c4"), P("3*g4 - 2*t^4"));
    s.set(v("c5"), P("2*g5 + 3*t*g4 - 2*t^2*g3"));
    s.set(v("c6"), P("5*g6h + 2*g3^2 + t*g5 - t^2*g4 + 2*t^6"));
    return s;
}

Substitution c8_elim_gamma() {
    Substitution s;
    s.set(v("c8"), library().get("c8_gamma"));
    return s;
}

Substitution g_elim_q() {
    // degree-18 and degree-20 generators solved over Q from their relations
    Substitution s;
    s.set(v("g9"), P("1/2*(2*c6*g3 + t*c8 + t^2*c7 - 3*t^3*c6)"));
    s.set(v("g10"), P("1/3*(g5^2 - 2*c7*g3 - t^2*c8 + 3*t^3*c7)"));
    return s;
}

Poly gamma_reduce(const Poly& p, bool keep_c8, bool eliminate_g) {
    Substitution s = c_elim_gamma();
    if (!keep_c8) {
        Substitution c8s = c8_elim_gamma();
        for (const auto& [var, img] : c8s.images()) s.set(var, img);
    }
    if (eliminate_g) {
        Substitution gs = g_elim_q();
        for (const auto& [var, img] : gs.images()) s.set(var, img);
    }
    return fixpoint(s, p);
}

Substitution cprime_elim() {
    weyl::register_all_variables();
    Substitution s;
    s.set(v("c2'"), P("4*t'^2"));
    s.set(v("c3'"), P("2*g3'"));
    s.set(v("c4'"), P("3*g4' - 2*t'^4"));
    s.set(v("c5'"), P("2*g5' + 3*t'*g4' - 2*t'^2*g3'"));
    s.set(v("c6'"), P("1/2*(-(g3'^2) + 2*t'*g5' + 3*t'^2*g4' - t'^6)"));
    return s;
}

Substitution gprime_elim() {
    Substitution s;
    s.set(v("g9'"), P("1/2*(2*c6'*g3' + t'^2*c7' - 3*t'^3*c6')"));
    return s;
}

Substitution istar() {
    weyl::register_all_variables();
    Substitution s;
    s.set(v("t"), P("t'"));
    s.set(v("u"), Poly::zero());
    for (int i = 2; i <= 7; ++i) s.set(v("c" + std::to_string(i)), pvar("c" + std::to_string(i) + "'"));
    s.set(v("c8"), Poly::zero());
    s.set(v("g3"), P("g3'"));
    s.set(v("g4"), P("g4'"));
    s.set(v("g5"), P("g5'"));
    s.set(v("g9"), P("g9'"));
    s.set(v("g6h"), P("c6' - t'*g5' - t'^2*g4'"));
    s.set(v("g10"), Poly::zero());
    s.set(v("g15h"), Poly::zero());
    return s;
}

// ---------------------------------------------------------------------------
// relation scalings

std::vector<CheckResult> verify_rho_scalings() {
    std::vector<CheckResult> out;
    struct Item {
        int j;
        Int n;
    };
    const std::vector<Item> items = {
        {8, ipow(2, 15) * ipow(3, 2) * 5},
        {12, ipow(2, 18) * ipow(3, 4) * 5 * 7},
        {14, ipow(2, 20) * ipow(3, 2) * ipow(5, 2) * 7 * 11},
        {18, ipow(2, 26) * ipow(3, 4) * ipow(5, 2) * 7 * 13},
    };
    for (const auto& item : items) {
        const Poly& rho = library().get("rho" + std::to_string(item.j));
        Poly lhs = Rat(item.n) * gamma_reduce(rho, /*keep_c8=*/true);
        Poly rhs = gamma_reduce(invariants::I(item.j), /*keep_c8=*/true);
        out.push_back(residue_check(
            "e8t/scaling-" + std::to_string(item.j),
            "n_" + std::to_string(item.j) + " * rho_" + std::to_string(item.j) +
                " equals the degree-" + std::to_string(2 * item.j) +
                " invariant modulo the lower relations, n = " + item.n.get_str(),
            lhs - rhs));
        // maximality witness: the displayed relation is primitive over Z
        bool primitive = rho.integer_coeffs() && rho.content() == 1;
        out.push_back(make_check("e8t/content-" + std::to_string(item.j),
                                 "rho_" + std::to_string(item.j) +
                                     " has integer coefficients with unit content",
                                 primitive));
    }
    // a halved constant leaves a nonzero residue
    {
        const Poly& rho8 = library().get("rho8");
        Poly lhs = Rat(Int(ipow(2, 14) * ipow(3, 2) * 5)) * gamma_reduce(rho8, true);
        Poly rhs = gamma_reduce(invariants::I(8), true);
        out.push_back(make_check("e8t/scaling-8-negative",
                                 "halving n_8 breaks the degree-16 scaling",
                                 !(lhs - rhs).is_zero()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Steenrod characterization of the generators

namespace {

// reduce an integral polynomial by the named c-eliminations and test
// divisibility of every coefficient by p
bool vanishes_mod(const Poly& diff, const std::vector<std::string>& elim_names, long p,
                  Poly* residue_out) {
    Substitution s;
    Substitution full = c_elim_gamma();
    for (const auto& name : elim_names) s.set(v(name), full.image(v(name)));
    Poly reduced = fixpoint(s, diff);
    Poly residue = reduced.reduce_mod_p(p);
    if (residue_out) *residue_out = residue;
    return residue.is_zero();
}

struct DeltaItem {
    std::string name;
    long p;
    Poly input;       // gamma-free class the operation is applied to
    int k;            // total-operation component: Sq^{2k} or P^k
    Poly delta;       // the generator-defining class
    std::vector<std::string> stated;  // c-eliminations from the stated lower relations
};

}  // namespace

std::vector<CheckResult> verify_delta_congruences() {
    weyl::register_all_variables();
    std::vector<CheckResult> out;

    const Poly rho15h = library().get("rho15h");
    Poly delta15 = rho15h + Rat(2) * pvar("g15h");

    std::vector<DeltaItem> items;
    items.push_back({"delta3 = Sq2(rho2)", 2, P("c2 - 4*t^2"), 1, P("c3"), {"c2"}});
    items.push_back({"delta4 = P1(rho2) mod 3", 3, P("c2 - 4*t^2"), 1, P("c4 + 2*t^4"), {"c2"}});
    items.push_back({"delta5 = Sq4(delta3)", 2, P("c3"), 2, P("c5 - 3*t*g4 + 2*t^2*g3"),
                     {"c2", "c3", "c4"}});
    items.push_back({"delta6 = P1(rho2) mod 5", 5, P("c2 - 4*t^2"), 1,
                     P("c6 - 2*g3^2 - t*g5 + t^2*g4 - 2*t^6"), {"c2", "c3", "c4", "c5"}});
    items.push_back({"delta9 = Sq8(delta5)", 2, P("c5 + t*c4"), 4,
                     P("2*c6*g3 + t*c8 + t^2*c7 - 3*t^3*c6"), {"c2", "c3", "c5"}});
    items.push_back({"delta10 = P3(delta4) mod 3", 3, P("c4 + 2*t^4"), 3,
                     P("g5^2 - 2*c7*g3 - t^2*c8 + 3*t^3*c7"), {"c2", "c3", "c4", "c5", "c6"}});

    for (const auto& item : items) {
        int target = item.input.homogeneous_degree() + 2 * item.k * static_cast<int>(item.p - 1);
        Poly image = steenrod::total_sym(item.input, item.p).graded_component(target);
        Poly diff = image - item.delta;
        Poly residue;
        if (vanishes_mod(diff, item.stated, item.p, &residue)) {
            out.push_back(make_check("e8t/" + item.name, item.name, true));
            continue;
        }
        // retry with the full elimination list: congruence true modulo all
        // lower relations, while the stated subset was too small
        if (vanishes_mod(diff, {"c2", "c3", "c4", "c5", "c6"}, item.p, nullptr)) {
            out.push_back(make_check("e8t/" + item.name, item.name, true,
                                     "holds modulo all lower relations; the stated subset "
                                     "leaves residue " + to_text(residue),
                                     /*flagged=*/true));
            continue;
        }
        out.push_back(make_check("e8t/" + item.name, item.name, false,
                                 "residue " + to_text(residue)));
    }

    // the representative used for the Sq8 input agrees with delta5
    {
        Poly diff = P("c5 - 3*t*g4 + 2*t^2*g3") - P("c5 + t*c4");
        Poly residue;
        bool ok = vanishes_mod(diff, {"c2", "c3", "c4"}, 2, &residue);
        out.push_back(make_check("e8t/delta5-representative",
                                 "delta5 and c5 + t c4 agree modulo (2, lower relations)", ok,
                                 ok ? "" : "residue " + to_text(residue)));
    }
    // the degree-16 relation reduces to the Sq14 input mod 2
    {
        Poly diff = library().get("rho8") - P("c8 + c4^2 + t^2*c6 + t^4*c4 + t^8");
        Poly residue;
        bool ok = vanishes_mod(diff, {"c2", "c3", "c4", "c5", "c6"}, 2, &residue);
        out.push_back(make_check("e8t/rho8-mod2-representative",
                                 "rho8 reduces mod 2 to c8 + c4^2 + t^2 c6 + t^4 c4 + t^8", ok,
                                 ok ? "" : "residue " + to_text(residue)));
    }
    // delta15 = Sq14(rho8): reduce with the c-eliminations and the degree-18
    // relation rewritten as a rule for t*c8
    {
        Poly input = P("c8 + c4^2 + t^2*c6 + t^4*c4 + t^8");
        Poly image = steenrod::total_sym(input, 2).graded_component(30);
        Poly diff = image - delta15;

        rewrite::IdealSpec spec;
        spec.name = "delta15-mod2";
        spec.prep = c_elim_gamma();
        // t c8 = 2 g9 - 2 c6 g3 - t^2 c7 + 3 t^3 c6, with c6 eliminated
        Poly tc8_rhs = fixpoint(c_elim_gamma(), P("2*g9 - 2*c6*g3 - t^2*c7 + 3*t^3*c6"));
        spec.add_rule("rho9", P("t*c8").terms()[0].mon, tc8_rhs);
        rewrite::Engine eng(spec);
        Poly residue = eng.normal_form(diff).reduce_mod_p(2);
        out.push_back(make_check("e8t/delta15 = Sq14(rho8)", "delta15 = Sq14(rho8) mod 2",
                                 residue.is_zero(),
                                 residue.is_zero() ? "" : "residue " + to_text(residue)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// restriction kernel

namespace {

Poly e7_reduce(const Poly& p) {
    Substitution s = cprime_elim();
    Substitution gprime_elim_sub = gprime_elim();
    for (const auto& [var, img] : gprime_elim_sub.images()) s.set(var, img);
    return fixpoint(s, p);
}

rewrite::IdealSpec e7_engine_spec() {
    rewrite::IdealSpec spec;
    spec.name = "e7-quotient";
    Substitution s = cprime_elim();
    Substitution gprime_elim_sub = gprime_elim();
    for (const auto& [var, img] : gprime_elim_sub.images()) s.set(var, img);
    // build a stable prep by composing to a fixpoint on the generators
    Substitution stable;
    for (const auto& [var, img] : s.images()) stable.set(var, fixpoint(s, img));
    spec.prep = stable;
    Poly rho8r = fixpoint(s, library().get("rho8'"));
    spec.add_rule_from_relation("rho8'", P("g4'^2").terms()[0].mon, rho8r);
    Poly rho10r = fixpoint(s, library().get("rho10'"));
    spec.add_rule_from_relation("rho10'", P("g5'^2").terms()[0].mon, rho10r);
    return spec;
}

}  // namespace

std::vector<CheckResult> verify_ker_istar() {
    std::vector<CheckResult> out;
    Substitution is = istar();

    // the eleven paired relations (the degree-2 pair is definitional)
    out.push_back(make_check("kernel/rho1", "restriction matches the degree-2 relations",
                             true, "c1 - 3t maps to c1' - 3t' by the alphabet conventions"));
    rewrite::Engine e7eng(e7_engine_spec());
    for (int i : {2, 3, 4, 5, 8, 9, 10, 12, 14, 18}) {
        Poly image = is.apply(library().get("rho" + std::to_string(i)));
        Poly target = library().get("rho" + std::to_string(i) + "'");
        Poly residue = e7eng.normal_form(image - target);
        if (!residue.is_zero()) {
            // allow cofactors of the remaining primed relations
            std::vector<Poly> gens = {e7_reduce(library().get("rho12'")),
                                      e7_reduce(library().get("rho14'"))};
            std::vector<VarId> alphabet = {v("t'"), v("g3'"), v("g4'"), v("g5'"), v("c7'")};
            auto mem = ideal_membership(residue, gens, e7eng, alphabet);
            if (mem.member) residue = Poly::zero();
        }
        out.push_back(residue_check("kernel/rho" + std::to_string(i),
                                    "restriction of rho" + std::to_string(i) +
                                        " equals rho" + std::to_string(i) +
                                        "' modulo the lower primed relations",
                                    residue));
    }
    // gamma6-tilde maps exactly onto the degree-12 primed relation
    {
        Poly g6t_expr = P("2*g6h + g3^2 - t^2*g4 + t^6");
        Poly image = is.apply(g6t_expr);
        out.push_back(residue_check("kernel/g6t", "restriction of the degree-12 kernel class "
                                                  "is exactly the primed degree-12 relation",
                                    image - library().get("rho6'")));
    }
    // the hatted relations land in the primed ideal
    {
        Poly image = is.apply(library().get("rho6h"));
        Poly residue = e7_reduce(image);
        out.push_back(residue_check("kernel/rho6h", "restriction of the hatted degree-12 "
                                                    "relation lies in the primed ideal",
                                    residue, "equals -2 times the primed degree-12 relation"));
    }
    {
        Poly image = is.apply(library().get("rho15h"));
        rewrite::Engine eng(e7_engine_spec());
        Poly residue = eng.normal_form(image);
        if (residue.is_zero()) {
            out.push_back(make_check("kernel/rho15h",
                                     "restriction of the degree-30 relation lies in the primed ideal",
                                     true));
        } else {
            std::vector<Poly> gens = {e7_reduce(library().get("rho12'")),
                                      e7_reduce(library().get("rho14'"))};
            std::vector<VarId> alphabet = {v("t'"), v("g3'"), v("g4'"), v("g5'"), v("c7'")};
            auto mem = ideal_membership(residue, gens, eng, alphabet);
            out.push_back(make_check("kernel/rho15h",
                                     "restriction of the degree-30 relation lies in the primed ideal",
                                     mem.member,
                                     mem.member ? "needs degree-24/28 primed relations"
                                                : "residue " + to_text(mem.residue)));
        }
    }
    // image equations for the symmetric classes
    out.push_back(make_check("kernel/c8", "restriction kills the top symmetric class",
                             is.apply(pvar("c8")).is_zero()));
    out.push_back(make_check("kernel/g10-g15h", "restriction kills the degree-20 and degree-30 "
                                                "kernel generators",
                             is.apply(pvar("g10")).is_zero() && is.apply(pvar("g15h")).is_zero()));
    return out;
}

// ---------------------------------------------------------------------------
// generators v and w

namespace {

rewrite::IdealSpec gamma_w_spec() {
    rewrite::IdealSpec spec;
    spec.name = "gamma-ring-mod-rho8";
    Substitution s = c_elim_gamma();
    Substitution c8_elim_gamma_sub = c8_elim_gamma();
    for (const auto& [var, img] : c8_elim_gamma_sub.images()) s.set(var, img);
    Substitution g_elim_q_sub = g_elim_q();
    for (const auto& [var, img] : g_elim_q_sub.images()) s.set(var, img);
    Substitution stable;
    for (const auto& [var, img] : s.images()) stable.set(var, fixpoint(s, img));
    spec.prep = stable;
    Poly rho8r = fixpoint(s, library().get("rho8"));
    spec.add_rule_from_relation("rho8", P("g4^2").terms()[0].mon, rho8r);
    return spec;
}

}  // namespace

std::vector<CheckResult> verify_generators_vw() {
    std::vector<CheckResult> out;
    const Poly& v_a = invariants::v_in_a();
    const Poly& w_a = invariants::w_in_a();
    Poly jt6 = rat(1, 46080) * invariants::barc_to_c().apply(invariants::J(6));
    Poly jt10 = rat(1, 15482880) * invariants::barc_to_c().apply(invariants::J(10));

    Substitution i2;
    i2.set(v("c2"), P("4*t^2"));

    // displayed (t, u, c) forms modulo the degree-4 invariant
    out.push_back(residue_check("generators/jt6-tuc",
                                "scaled degree-6 invariant matches its (t, u, c) display",
                                fixpoint(i2, jt6 - library().get("jt6_tuc"))));
    out.push_back(residue_check("generators/jt10-tuc",
                                "scaled degree-10 invariant matches its (t, u, c) display",
                                fixpoint(i2, jt10 - library().get("jt10_tuc"))));

    // reductions in the invariant subring of A
    {
        rewrite::Engine eng(rewrite::a_mod_t_a8());
        out.push_back(residue_check("generators/v-mod",
                                    "v reduces to its display modulo (t, degree-16 invariants)",
                                    eng.normal_form(v_a - library().get("v_mod_display"))));
    }
    {
        rewrite::Engine eng(rewrite::a_stage(12));
        out.push_back(residue_check("generators/w-mod",
                                    "w reduces to its display modulo (t, c8, degree-24 invariants)",
                                    eng.normal_form(w_a - library().get("w_mod_display"))));
    }

    // gamma-alphabet identities
    {
        Poly reduced = gamma_reduce(v_a);
        out.push_back(residue_check("generators/v-gamma",
                                    "v equals its presentation-generator expression exactly",
                                    reduced - library().get("generator_v")));
        out.push_back(make_check("generators/v-integral",
                                 "the generator expression for v is integral",
                                 library().get("generator_v").integer_coeffs() &&
                                     reduced.integer_coeffs()));
        Substitution u0;
        u0.set(v("u"), Poly::zero());
        out.push_back(residue_check("generators/v-mod-u",
                                    "v modulo u is the degree-12 kernel class",
                                    u0.apply(library().get("generator_v")) -
                                        P("2*g6h + g3^2 - t^2*g4 + t^6")));
    }
    {
        rewrite::Engine eng(gamma_w_spec());
        out.push_back(residue_check(
            "generators/jt10-gamma",
            "scaled degree-10 invariant matches its presentation expression modulo the "
            "degree-16/18/20 relations",
            eng.normal_form(jt10 - library().get("jt10_gamma"))));
        out.push_back(residue_check(
            "generators/w-gamma",
            "w equals its presentation-generator expression modulo the degree-16/18/20 relations",
            eng.normal_form(w_a - library().get("generator_w"))));
        out.push_back(make_check("generators/w-integral",
                                 "the generator expression for w is integral",
                                 library().get("generator_w").integer_coeffs()));
        // w modulo (u, v) is the degree-20 kernel generator
        Substitution u0;
        u0.set(v("u"), Poly::zero());
        out.push_back(residue_check("generators/w-mod-u",
                                    "w modulo u reduces to the degree-20 kernel class",
                                    u0.apply(library().get("generator_w")) - pvar("g10")));
    }
    return out;
}

// ---------------------------------------------------------------------------
// the degree-30 generator x

namespace {

Poly build_x_combination() {
    // relations with the symmetric classes eliminated, c8 included
    Substitution s = c_elim_gamma();
    Substitution c8_elim_gamma_sub = c8_elim_gamma();
    for (const auto& [var, img] : c8_elim_gamma_sub.images()) s.set(var, img);
    auto red = [&s](const std::string& name) { return fixpoint(s, library().get(name)); };

    Poly inner = pvar("u").pow(15);
    inner = inner + library().get("xcof_15") * red("rho15h");
    inner = inner + library().get("xcof_14") * red("rho14");
    inner = inner + library().get("xcof_12") * red("rho12");
    inner = inner + library().get("xcof_10") * red("rho10");
    inner = inner + library().get("xcof_9") * red("rho9");
    inner = inner + library().get("xcof_8") * red("rho8");
    return rat(1, 2) * inner + library().get("xcof_extra10") * red("rho10");
}

}  // namespace

std::vector<CheckResult> verify_x() {
    std::vector<CheckResult> out;
    Poly x = build_x_combination();
    const Poly& display = library().get("x_expansion");

    out.push_back(make_check("x/integral", "the half-integral combination for x is integral",
                             x.integer_coeffs()));
    out.push_back(residue_check("x/expansion", "expanded x matches the displayed form term "
                                               "for term (one printed token read as -20 t^3 u^5)",
                                x - display));
    out.push_back(make_check(
        "x/leading", "x contains the degree-30 generator once and -58 u^15",
        x.coeff_of(P("g15h").terms()[0].mon) == 1 &&
            x.coeff_of(pvar("u").pow(15).terms()[0].mon) == Rat(-58)));
    // 2x - u^15 is by construction an explicit combination of the relations
    out.push_back(make_check("x/double", "doubling the combination recovers u^15 modulo the "
                                         "relation ideal (explicit cofactors recorded in the "
                                         "relation library)",
                             true, "2x - u^15 = sum of the xcof_* multiples of the relations"));

    // x reduces to the degree-30 generator modulo (u, v, w)
    {
        Substitution pre = c_elim_gamma();
        Substitution c8_elim_gamma_sub = c8_elim_gamma();
        for (const auto& [var, img] : c8_elim_gamma_sub.images()) pre.set(var, img);
        pre.set(v("u"), Poly::zero());
        pre.set(v("g10"), Poly::zero());
        // degree-18 generator solved over Q, with u already 0
        Substitution pre_stable;
        for (const auto& [var, img] : pre.images()) pre_stable.set(var, fixpoint(pre, img));
        Poly g9_img = fixpoint(pre_stable, P("1/2*(2*c6*g3 + t*c8 + t^2*c7 - 3*t^3*c6)"));

        rewrite::IdealSpec spec;
        spec.name = "mod-u-v-w";
        spec.prep = pre_stable;
        spec.prep.set(v("g9"), g9_img);
        // v modulo u gives the degree-6 square rule
        spec.add_rule("v-mod-u", P("g3^2").terms()[0].mon, P("-2*g6h + t^2*g4 - t^6"));
        rewrite::Engine boot(spec);
        // the degree-16 relation reduced in this quotient orients g4^2
        Poly rho8r = boot.normal_form(library().get("rho8"));
        spec.add_rule_from_relation("rho8", P("g4^2").terms()[0].mon, rho8r);
        rewrite::Engine boot2(spec);
        Poly rho10r = boot2.normal_form(library().get("rho10"));
        spec.add_rule_from_relation("rho10", P("g5^2").terms()[0].mon, rho10r);

        rewrite::Engine eng(spec);
        Poly residue = eng.normal_form(display - pvar("g15h"));
        if (residue.is_zero()) {
            out.push_back(make_check("x/mod-uvw", "x reduces to the degree-30 generator "
                                                  "modulo (u, v, w)", true));
        } else {
            std::vector<Poly> gens = {eng.spec().prep.apply(library().get("rho12")),
                                      eng.spec().prep.apply(library().get("rho14")),
                                      eng.spec().prep.apply(library().get("rho15h"))};
            std::vector<VarId> alphabet = {v("t"), v("g3"), v("g4"), v("g5"), v("g6h"),
                                           v("c7"), v("g15h")};
            auto mem = ideal_membership(residue, gens, eng, alphabet);
            out.push_back(make_check("x/mod-uvw",
                                     "x reduces to the degree-30 generator modulo (u, v, w)",
                                     mem.member,
                                     mem.member ? "uses the degree-24/28/30 relations"
                                                : "residue " + to_text(mem.residue)));
        }
    }
    // the displayed c8-eliminated degree-16 relation (with the printed 15u^6
    // read as 15u^2: the printed token is inhomogeneous)
    {
        Substitution s = c_elim_gamma();
        Substitution c8_elim_gamma_sub = c8_elim_gamma();
        for (const auto& [var, img] : c8_elim_gamma_sub.images()) s.set(var, img);
        Poly reduced = fixpoint(s, library().get("rho8"));
        Poly diff = reduced - library().get("rho8_c8elim_corrected");
        out.push_back(make_check("x/rho8-c8elim",
                                 "the c8-eliminated degree-16 relation matches its display",
                                 diff.is_zero(),
                                 diff.is_zero()
                                     ? "printed coefficient 15u^6 is inhomogeneous; weight "
                                       "bookkeeping and recomputation give 15u^2"
                                     : "residue " + to_text(diff),
                                 /*flagged=*/true));
    }
    return out;
}

// ---------------------------------------------------------------------------
// main theorem

std::vector<polyring::Monomial> monomials_of_degree(const std::vector<VarId>& vars, int degree) {
    std::vector<Monomial> out;
    std::vector<polyring::Factor> acc;
    std::function<void(std::size_t, int)> gen = [&](std::size_t idx, int rest) {
        if (idx == vars.size()) {
            if (rest == 0) {
                auto fs = acc;
                std::sort(fs.begin(), fs.end(),
                          [](const polyring::Factor& a, const polyring::Factor& b) {
                              return a.var < b.var;
                          });
                out.push_back(Monomial(fs));
            }
            return;
        }
        int d = polyring::VarTable::instance().info(vars[idx]).degree;
        for (int e = 0; e * d <= rest; ++e) {
            if (e > 0) acc.push_back({vars[idx], static_cast<std::uint32_t>(e)});
            gen(idx + 1, rest - e * d);
            if (e > 0) acc.pop_back();
        }
    };
    gen(0, degree);
    return out;
}

GradedModuleStructure graded_z_structure(const std::vector<VarId>& generators,
                                         const std::vector<Poly>& relations, int max_degree) {
    GradedModuleStructure result;
    for (int d = 0; d <= max_degree; d += 2) {
        auto cols = monomials_of_degree(generators, d);
        if (cols.empty()) {
            result.by_degree[d] = GradedPiece{0, {}};
            continue;
        }
        std::map<Monomial, std::size_t> index;
        for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);

        std::vector<std::vector<Int>> rows;
        for (const Poly& r : relations) {
            if (r.is_zero()) continue;
            int rd = r.homogeneous_degree();
            if (rd > d) continue;
            for (const Monomial& m : monomials_of_degree(generators, d - rd)) {
                Poly prod = Poly::term(Rat(1), m) * r;
                std::vector<Int> row(cols.size(), Int(0));
                for (const auto& term : prod.terms()) {
                    if (!exactmath::is_integer(term.coeff))
                        throw std::invalid_argument("graded_z_structure: non-integral relation");
                    row[index.at(term.mon)] = Int(term.coeff.get_num());
                }
                rows.push_back(std::move(row));
            }
        }
        exactmath::IntMatrix mat(cols.size(), rows.size());
        for (std::size_t j = 0; j < rows.size(); ++j)
            for (std::size_t i = 0; i < cols.size(); ++i) mat.at(i, j) = rows[j][i];
        auto ck = exactmath::cokernel(mat);
        result.by_degree[d] = GradedPiece{ck.free_rank, ck.torsion};
    }
    return result;
}

MembershipResult ideal_membership(const Poly& target, const std::vector<Poly>& generators,
                                  rewrite::Engine& engine, const std::vector<VarId>& cofactor_vars) {
    Poly reduced_target = engine.normal_form(target);
    if (reduced_target.is_zero()) return {true, Poly::zero()};
    int degree = reduced_target.homogeneous_degree();
    std::vector<Poly> candidates;
    for (const Poly& g : generators) {
        if (g.is_zero()) continue;
        Poly gr = engine.normal_form(g);
        int gd = g.homogeneous_degree();
        if (gd > degree) continue;
        for (const Monomial& m : monomials_of_degree(cofactor_vars, degree - gd))
            candidates.push_back(engine.normal_form(Poly::term(Rat(1), m) * gr));
    }
    auto sol = rewrite::solve_coeffs(reduced_target, candidates, engine);
    if (sol.solved && sol.residue.is_zero()) return {true, Poly::zero()};
    return {false, reduced_target};
}

std::vector<CheckResult> verify_main_theorem(int max_degree) {
    std::vector<CheckResult> out;
    const Poly& r15 = library().get("r15");
    const Poly& r20 = library().get("r20");
    const Poly& r24 = library().get("r24");
    const Poly& r30 = library().get("r30");

    out.push_back(residue_check("main/r20", "the degree-40 relation is the degree-40 invariant",
                                r20 - invariants::itilde(20)));
    out.push_back(residue_check("main/r24", "the degree-48 relation is the degree-48 invariant",
                                r24 - invariants::itilde(24)));
    {
        Substitution half;
        half.set(v("x"), rat(1, 2) * pvar("u").pow(15));
        out.push_back(residue_check(
            "main/r30", "four times the degree-60 relation at x = u^15/2 is the degree-60 invariant",
            Rat(4) * half.apply(r30) - invariants::itilde(30)));
        out.push_back(residue_check("main/r15", "the degree-30 relation is u^15 - 2x",
                                    r15 - (pvar("u").pow(15) - Rat(2) * pvar("x"))));
    }

    // integral graded structure: torsion free, ranks equal the rational ones
    auto gb = rewrite::buchberger3(
        {invariants::itilde(20), invariants::itilde(24), invariants::itilde(30)}, max_degree / 2);
    auto structure = graded_z_structure({v("u"), v("v"), v("w"), v("x")}, {r15, r20, r24, r30},
                                        max_degree);
    bool torsion_free = true;
    bool ranks_match = true;
    std::size_t total = 0;
    std::string first_bad;
    for (const auto& [d, piece] : structure.by_degree) {
        if (!piece.torsion.empty()) {
            torsion_free = false;
            if (first_bad.empty()) first_bad = "torsion at degree " + std::to_string(d);
        }
        std::size_t expect = (d / 2 <= (int)gb.hilbert.size() - 1) ? gb.hilbert[d / 2] : 0;
        if (piece.free_rank != expect) {
            ranks_match = false;
            if (first_bad.empty())
                first_bad = "rank mismatch at degree " + std::to_string(d) + ": " +
                            std::to_string(piece.free_rank) + " vs " + std::to_string(expect);
        }
        total += piece.free_rank;
    }
    out.push_back(make_check("main/torsion-free",
                             "the integral quotient is torsion free in every degree",
                             torsion_free, first_bad));
    out.push_back(make_check("main/ranks",
                             "integral ranks equal the rational Betti numbers degreewise",
                             ranks_match, ranks_match ? "" : first_bad));
    out.push_back(make_check("main/total-rank",
                             "total rank equals 240 over degrees 0.." + std::to_string(max_degree),
                             total == 240, "total = " + std::to_string(total)));
    out.push_back(make_check("main/spot-ranks", "rank 1 in degrees 0 and 2, rank 2 in degree 12",
                             structure.by_degree.at(0).free_rank == 1 &&
                                 structure.by_degree.at(2).free_rank == 1 &&
                                 structure.by_degree.at(12).free_rank == 2));
    return out;
}

// ---------------------------------------------------------------------------
// change of the degree-12 generator

std::vector<CheckResult> verify_appendixA2() {
    std::vector<CheckResult> out;
    Substitution sub;
    sub.set(v("g6h"), library().get("g6h_from_g6t"));

    // the defining identity of the tilde generator becomes the new relation
    {
        Poly def = Rat(2) * pvar("g6h") + P("g3^2 - t^2*g4 + t^6") - pvar("g6t");
        out.push_back(residue_check("appendix/rho6t",
                                    "the substituted definition of the tilde generator is the "
                                    "displayed degree-12 relation",
                                    sub.apply(def) - library().get("rho6t")));
    }
    // the hatted degree-12 relation becomes -2 times the new one
    {
        Poly img = sub.apply(library().get("rho6h"));
        out.push_back(residue_check("appendix/rho6h",
                                    "the hatted degree-12 relation transforms to -2 times the "
                                    "displayed one",
                                    img + Rat(2) * library().get("rho6t")));
    }
    // higher relations transform to the displayed ones modulo the new
    // degree-12 relation (c6 solved over Q) and the degree-18/20 relations
    // (the displayed forms absorb multiples of those as well)
    Substitution mod_lower;
    mod_lower.set(v("c6"), P("1/2*(5*g6t - g3^2 + 2*t*g5 + 3*t^2*g4 - t^6)"));
    Substitution g_elim_q_sub = g_elim_q();
    for (const auto& [var, img] : g_elim_q_sub.images()) mod_lower.set(var, img);
    for (int j : {8, 12, 14, 18}) {
        Poly img = sub.apply(library().get("rho" + std::to_string(j)));
        Poly diff = img - library().get("rho" + std::to_string(j) + "_A2");
        Poly residue = fixpoint(mod_lower, diff);
        out.push_back(residue_check("appendix/rho" + std::to_string(j),
                                    "the degree-" + std::to_string(2 * j) +
                                        " relation transforms to its displayed form modulo the "
                                        "degree-12/18/20 relations",
                                    residue));
    }
    // round trip between the hatted and tilde degree-12 generators
    {
        Substitution back;
        back.set(v("g6t"), P("2*g6h + g3^2 - t^2*g4 + t^6"));
        Poly round = back.apply(library().get("g6h_from_g6t"));
        Poly residue = fixpoint(c_elim_gamma(), round - pvar("g6h"));
        out.push_back(residue_check("appendix/roundtrip",
                                    "hatted -> tilde -> hatted is the identity modulo the "
                                    "degree-12 relation", residue));
    }
    return out;
}

}  // namespace presentation
