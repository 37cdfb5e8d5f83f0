#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invariants.hpp"
#include "oracles.hpp"
#include "weyl.hpp"

using namespace invariants;
using exactmath::Rat;
using exactmath::rat;
using polyring::Poly;
using polyring::parse_poly;
using polyring::pvar;

TEST_CASE("elementary symmetric coefficients of the xi family") {
    weyl::register_all_variables();
    // d1 = 2(c1 - 3t) which is identically zero once c1 = 3t is eliminated
    CHECK(compute_d_n(1).is_zero());
    CHECK(compute_d_n(10).is_zero());
    CHECK(compute_d_n(0) == Poly::constant(Rat(1)));

    // the closed formula agrees with the generating identity for all n
    auto gen = d_from_generating_identity();
    for (int n = 0; n <= 9; ++n) CHECK(compute_d_n(n) == gen[n]);

    // and with the brute-force expansion at t-level
    for (int n = 1; n <= 4; ++n)
        CHECK(oracles::expand_bt(compute_d_n(n)) == oracles::brute_force_d_n(n));
}

TEST_CASE("Newton recursion") {
    weyl::register_all_variables();
    auto s = xi_power_sums(6);
    CHECK(s[0] == Poly::constant(Rat(9)));
    CHECK(s[1] == compute_d_n(1));  // s1 = d1
    CHECK(s[1].is_zero());
    // s2 = s1 d1 - 2 d2
    CHECK(s[2] == s[1] * compute_d_n(1) - Rat(2) * compute_d_n(2));
    // s4 against the brute-force power sum
    CHECK(oracles::expand_bt(s[4]) == oracles::brute_force_xi_power_sum(4));
    CHECK(oracles::expand_bt(s[3]) == oracles::brute_force_xi_power_sum(3));
}

TEST_CASE("I_n values and oracle") {
    CHECK(I(0) == Poly::constant(Rat(240)));
    CHECK(I(3).is_zero());
    CHECK(I(5).is_zero());
    // I2 = -2^5*3*5 (c2 - 4t^2)
    CHECK(I(2) == Rat(-480) * parse_poly("c2 - 4*t^2"));
    // closed pipeline equals the 240-form brute-force sum
    for (int n = 2; n <= 6; n += 2) CHECK(oracles::expand_bt(I(n)) == oracles::brute_force_In(n));
}

TEST_CASE("truncated exponential orbit sum splits into graded pieces") {
    Poly sum;
    for (int n = 0; n <= 4; ++n) {
        Rat inv_fact = rat(exactmath::Int(1), exactmath::factorial(n));
        sum = sum + inv_fact * I(n);
    }
    CHECK(sum.graded_component(4) == rat(1, 2) * I(2));
    CHECK(sum.graded_component(8) == rat(1, 24) * I(4));
}

TEST_CASE("J_n values and oracle") {
    CHECK(J(0) == Poly::constant(Rat(56)));
    CHECK(J(1).is_zero());
    // J2 = -2^5*3 (cb2 - 4 tau^2)
    CHECK(J(2) == Rat(-96) * parse_poly("cb2 - 4*tau^2"));
    for (int n = 2; n <= 6; n += 2) CHECK(oracles::expand_tau(J(n)) == oracles::brute_force_Jn(n));
}

TEST_CASE("explicit degree-6 C8 invariant") {
    // 2^8 * 3 = 768
    Poly expected = Rat(768) * parse_poly(
        "24*cb6 + 3*cb3^2 - 4*cb2*cb4 - 2*cb2^3"
        " - 12*cb5*tau - 6*cb2*cb3*tau"
        " + 31*cb2^2*tau^2 + 16*cb4*tau^2"
        " + 12*cb3*tau^3 - 136*cb2*tau^4 + 188*tau^6");
    CHECK(J(6) == expected);
}

TEST_CASE("I'_n values, oracle, and the structural renaming identity") {
    CHECK(Iprime(0) == Poly::constant(Rat(56)));
    CHECK(Iprime(2) == Rat(-96) * parse_poly("c2' - 4*t'^2"));
    for (int n = 2; n <= 6; n += 2)
        CHECK(oracles::expand_primed(Iprime(n)) == oracles::brute_force_Iprime_n(n));
    // J_n in (tau, cb) equals I'_n in (t', c') under renaming
    auto rename = tau_alphabet_to_primed();
    for (int n = 0; n <= 10; n += 2) CHECK(rename.apply(J(n)) == Iprime(n));
}

TEST_CASE("cbar to c conversion") {
    auto conv = barc_to_c();
    CHECK(conv.apply(pvar("cb2")) == parse_poly("c2 - 12*t*u + 37/4*u^2"));
    // cb1 = 3 tau maps to 3t - 9/2 u
    CHECK(conv.apply(Rat(3) * pvar("tau")) == parse_poly("3*t - 9/2*u"));
    CHECK(conv.apply(pvar("cb3")) == parse_poly("c3 - 7/2*c2*u + 87/4*t*u^2 - 93/8*u^3"));
    CHECK(conv.apply(pvar("cb4")) ==
          parse_poly("c4 - 3*c3*u + 11/2*c2*u^2 - 24*t*u^3 + 163/16*u^4"));
    CHECK(conv.apply(pvar("cb5")) ==
          parse_poly("c5 - 5/2*c4*u + 4*c3*u^2 - 21/4*c2*u^3 + 297/16*t*u^4 - 219/32*u^5"));
    CHECK(conv.apply(pvar("cb6")) ==
          parse_poly("c6 - 2*c5*u + 11/4*c4*u^2 - 13/4*c3*u^3 + 57/16*c2*u^4 - 45/4*t*u^5 "
                     "+ 247/64*u^6"));
    CHECK(conv.apply(pvar("cb7")) ==
          parse_poly("c7 - 3/2*c6*u + 7/4*c5*u^2 - 15/8*c4*u^3 + 31/16*c3*u^4 - 63/32*c2*u^5 "
                     "+ 381/64*t*u^6 - 255/128*u^7"));

    // round trip c -> cbar -> c
    auto back = c_to_barc();
    CHECK(conv.apply(back.apply(pvar("c5"))) == pvar("c5"));
    CHECK(conv.apply(back.apply(pvar("c7"))) == pvar("c7"));
    CHECK(back.apply(conv.apply(pvar("cb5"))) == pvar("cb5"));
}

TEST_CASE("ctilde relations") {
    auto down = c_to_ctilde();
    auto up = ctilde_to_c();
    // c_n = ct_n + u ct_{n-1}
    CHECK(down.apply(pvar("c5")) == parse_poly("ct5 + u*ct4"));
    CHECK(down.apply(pvar("c8")) == parse_poly("u*ct7"));
    for (int n = 2; n <= 7; ++n) {
        Poly cn = pvar("c" + std::to_string(n));
        CHECK(up.apply(down.apply(cn)) == cn);
    }
}

TEST_CASE("c8 embeds into the A ring consistently with the t-level identity") {
    auto embed = a_ring_embed();
    Poly lhs = oracles::expand_bt(pvar("c8"));
    // u = t8 at t-level
    polyring::Substitution u_is_t8;
    u_is_t8.set(weyl::v("u"), weyl::eliminate_t8().apply(pvar("t8")));
    Poly rhs = oracles::expand_bt(u_is_t8.apply(embed.apply(pvar("c8"))));
    CHECK(lhs == rhs);
}

TEST_CASE("v and w are exact elements of A") {
    const Poly& v = v_in_a();
    const Poly& w = w_in_a();
    CHECK(v.is_homogeneous());
    CHECK(v.homogeneous_degree() == 12);
    CHECK(w.is_homogeneous());
    CHECK(w.homogeneous_degree() == 20);
}

TEST_CASE("rational relation polynomials") {
    Poly i20 = itilde(20);
    polyring::Substitution kill;
    kill.set(weyl::v("v"), Poly::zero());
    kill.set(weyl::v("w"), Poly::zero());
    CHECK(kill.apply(i20) == parse_poly("9*u^20"));
    CHECK(itilde(24).is_homogeneous());
    CHECK(itilde(24).homogeneous_degree() == 48);
    CHECK(itilde(30).homogeneous_degree() == 60);
    CHECK_THROWS(itilde(21));
}
