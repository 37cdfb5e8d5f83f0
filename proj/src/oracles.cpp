#include "oracles.hpp"

#include "weyl.hpp"

namespace oracles {

using exactmath::Rat;
using polyring::pvar;

namespace {

// the nine xi forms written directly in eliminated t-coordinates
std::vector<Poly> xi_forms_t() {
    weyl::register_all_variables();
    auto elim = weyl::eliminate_t8();
    auto to_t = weyl::xi_to_t();
    std::vector<Poly> out;
    for (int i = 1; i <= 9; ++i)
        out.push_back(elim.apply(to_t.apply(pvar("xi" + std::to_string(i)))));
    return out;
}

std::vector<Poly> orbit_forms(const weyl::OrbitSet& set, const polyring::Substitution& to_base,
                              const polyring::Substitution& elim) {
    std::vector<Poly> out;
    out.reserve(set.forms.size());
    for (const Poly& f : set.forms) out.push_back(elim.apply(to_base.apply(f)));
    return out;
}

Poly orbit_power_sum(const std::vector<Poly>& forms, int n) {
    Poly total;
    for (const Poly& f : forms) total = total + f.pow(n);
    return total;
}

// elementary symmetric polynomials of a list of linear forms
std::vector<Poly> elementary_of(const std::vector<Poly>& forms) {
    std::vector<Poly> e(forms.size() + 1);
    e[0] = Poly::constant(Rat(1));
    std::size_t used = 0;
    for (const Poly& f : forms) {
        ++used;
        for (std::size_t k = used; k >= 1; --k) e[k] = e[k] + (e[k - 1].is_zero() ? Poly() : e[k - 1] * f);
    }
    return e;
}

}  // namespace

Poly brute_force_In(int n) {
    auto set = weyl::orbit_S();
    auto forms = orbit_forms(set, weyl::xi_to_t(), weyl::eliminate_t8());
    return orbit_power_sum(forms, n);
}

Poly brute_force_Jn(int n) {
    auto set = weyl::orbit_Sigma();
    auto forms = orbit_forms(set, weyl::chi_to_tau(), weyl::eliminate_tau7());
    return orbit_power_sum(forms, n);
}

Poly brute_force_Iprime_n(int n) {
    auto set = weyl::orbit_Sprime();
    auto forms = orbit_forms(set, weyl::xprime_to_primed(), weyl::eliminate_tprime7());
    return orbit_power_sum(forms, n);
}

Poly brute_force_d_n(int n) {
    if (n < 0 || n > 9) return Poly::zero();
    auto e = elementary_of(xi_forms_t());
    return e[n];
}

Poly brute_force_xi_power_sum(int n) { return orbit_power_sum(xi_forms_t(), n); }

namespace {

polyring::Substitution symmetric_expansion(const std::string& cname, int c_lo, int c_hi,
                                           const std::vector<Poly>& base_forms,
                                           const std::string& suffix) {
    polyring::Substitution s;
    auto e = elementary_of(base_forms);
    for (int i = c_lo; i <= c_hi; ++i)
        s.set(weyl::v(cname + std::to_string(i) + suffix), e[i]);
    return s;
}

}  // namespace

Poly expand_bt(const Poly& p) {
    weyl::register_all_variables();
    auto elim = weyl::eliminate_t8();
    std::vector<Poly> ts;
    for (int i = 1; i <= 8; ++i) ts.push_back(elim.apply(pvar("t" + std::to_string(i))));
    auto s = symmetric_expansion("c", 2, 8, ts, "");
    return s.apply(p);
}

Poly expand_tau(const Poly& p) {
    weyl::register_all_variables();
    auto elim = weyl::eliminate_tau7();
    std::vector<Poly> taus;
    for (int i = 1; i <= 7; ++i) taus.push_back(elim.apply(pvar("tau" + std::to_string(i))));
    auto s = symmetric_expansion("cb", 2, 7, taus, "");
    return s.apply(p);
}

Poly expand_primed(const Poly& p) {
    weyl::register_all_variables();
    auto elim = weyl::eliminate_tprime7();
    std::vector<Poly> ts;
    for (int i = 1; i <= 7; ++i) ts.push_back(elim.apply(pvar("t" + std::to_string(i) + "'")));
    auto s = symmetric_expansion("c", 2, 7, ts, "'");
    return s.apply(p);
}

}  // namespace oracles
