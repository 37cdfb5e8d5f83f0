#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "steenrod.hpp"
#include "weyl.hpp"

using namespace steenrod;
using polyring::Poly;
using polyring::parse_poly;

namespace {

ModPoly random_form(std::mt19937& rng, long p) {
    std::uniform_int_distribution<long> c(0, p - 1);
    ModPoly f = mp_zero(p);
    for (int s = 0; s < 8; ++s) f = mp_add(f, mp_scale(generator(s, p), c(rng)));
    return f;
}

ModPoly random_poly(std::mt19937& rng, long p, int max_wordlen) {
    std::uniform_int_distribution<int> e(0, max_wordlen);
    std::uniform_int_distribution<long> c(1, p - 1);
    ModPoly f = mp_zero(p);
    for (int k = 0; k < 5; ++k) {
        ModPoly m{p, {{0, static_cast<std::uint8_t>(c(rng))}}};
        for (int s = 0; s < 8; ++s) {
            int ex = e(rng) / 4;
            if (ex) m = mp_mul(m, mp_pow(generator(s, p), ex));
        }
        f = mp_add(f, m);
    }
    return f;
}

}  // namespace

TEST_CASE("mod-p ring basics") {
    ModPoly t = generator(7, 2);
    CHECK(mp_add(t, t).is_zero());
    CHECK(mp_size(mp_mul(t, t)) == 1);
    CHECK(word_length(mp_mul(t, t).terms[0].first) == 2);
    // c1 = 3t holds identically after the t8 elimination
    ModPoly c1 = c_expansion(1, 3);
    CHECK(c1.is_zero());  // 3t = 0 mod 3
    ModPoly c1_mod2 = c_expansion(1, 2);
    CHECK(c1_mod2 == generator(7, 2));  // 3t = t mod 2
}

TEST_CASE("total operation on a degree-2 generator") {
    for (long p : {2L, 3L, 5L}) {
        ModPoly t = generator(7, p);
        ModPoly tot = total_op(t);
        // unit condition: degree-2 piece is the class itself
        CHECK(component_word(tot, 1) == t);
        // top condition: the p-th power
        CHECK(component_word(tot, static_cast<int>(p)) == mp_pow(t, static_cast<unsigned>(p)));
        // nothing else
        CHECK(mp_size(tot) == 2);
    }
    // total mod 2 on t is t + t^2
    ModPoly t2 = generator(7, 2);
    CHECK(total_op(t2) == mp_add(t2, mp_mul(t2, t2)));
}

TEST_CASE("total operation is additive on degree-2 classes and multiplicative on products") {
    std::mt19937 rng(5);
    for (long p : {2L, 3L, 5L}) {
        for (int k = 0; k < 6; ++k) {
            ModPoly y = random_form(rng, p);
            ModPoly z = random_form(rng, p);
            CHECK(total_op(mp_add(y, z)) == mp_add(total_op(y), total_op(z)));
            // T(y) = y + y^p for an arbitrary linear form
            CHECK(total_op(y) == mp_add(y, mp_pow(y, static_cast<unsigned>(p))));
            ModPoly a = random_poly(rng, p, 4);
            ModPoly b = random_poly(rng, p, 4);
            CHECK(total_op(mp_mul(a, b)) == mp_mul(total_op(a), total_op(b)));
        }
    }
}

TEST_CASE("Wu formula for i = 2..8") {
    for (int i = 2; i <= 8; ++i) {
        auto fail = verify_wu(i);
        CHECK_FALSE(fail.has_value());
        if (fail) MESSAGE(*fail);
    }
    // Sq^0 is the identity
    for (int i = 2; i <= 8; ++i) {
        ModPoly ci = c_expansion(i, 2);
        CHECK(power_op(total_op(ci), i, 0, 2) == ci);
    }
    // spot value: Sq2(c2) = c3 + t c2 with c1 = t mod 2
    weyl::register_all_variables();
    ModPoly lhs = power_op(total_op(c_expansion(2, 2)), 2, 1, 2);
    ModPoly rhs = mp_add(c_expansion(3, 2), mp_mul(generator(7, 2), c_expansion(2, 2)));
    CHECK(lhs == rhs);
}

TEST_CASE("displayed operation congruences") {
    auto checks = verify_lemma_operation();
    CHECK(checks.size() == 7);
    for (const auto& c : checks) {
        CHECK(c.ok);
        if (!c.ok) MESSAGE(c.name, ": ", c.note);
    }
    // the degree-30 display needs the lower relations and is flagged
    int flagged = 0;
    for (const auto& c : checks) flagged += c.flagged ? 1 : 0;
    CHECK(flagged == 1);
    CHECK(checks[3].flagged);
    CHECK(checks[3].note.find("difference") != std::string::npos);
}

TEST_CASE("mod-3 Newton reductions") {
    auto checks = verify_newton_mod3();
    for (const auto& c : checks) {
        CHECK(c.ok);
        if (!c.ok) MESSAGE(c.name, ": ", c.note);
    }
}

TEST_CASE("symmetric-coordinate total operation tables match the t-level route") {
    weyl::register_all_variables();
    for (long p : {2L, 3L, 5L}) {
        for (int n = 1; n <= 8; ++n) {
            Poly table = total_c_sym(n, p);
            ModPoly via_table = t_level(table, p);
            ModPoly direct = total_op(c_expansion(n, p));
            ModPoly diff = mp_add(via_table, mp_scale(direct, p - 1));
            CHECK(diff.is_zero());
            if (!diff.is_zero()) MESSAGE("n=", n, " p=", p, " diff size ", mp_size(diff));
        }
    }
}

TEST_CASE("symmetric total operation is multiplicative") {
    weyl::register_all_variables();
    Poly a = parse_poly("c2 + t^2");
    Poly b = parse_poly("c3 + t*c2");
    for (long p : {2L, 3L, 5L}) {
        Poly lhs = total_sym(a * b, p);
        Poly rhs = (total_sym(a, p) * total_sym(b, p)).reduce_mod_p(p);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("power sums in symmetric coordinates") {
    weyl::register_all_variables();
    // p2 = c1^2 - 2c2 = 9t^2 - 2c2
    CHECK(power_sum_sym(2) == parse_poly("9*t^2 - 2*c2"));
    // t-level cross-check for a few k
    for (int k = 1; k <= 6; ++k) {
        ModPoly direct = mp_zero(3);
        for (int s = 0; s < 7; ++s) direct = mp_add(direct, mp_pow(generator(s, 3), k));
        direct = mp_add(direct, mp_pow(t8_eliminated(3), k));
        CHECK(t_level(power_sum_sym(k), 3) == direct);
    }
}
