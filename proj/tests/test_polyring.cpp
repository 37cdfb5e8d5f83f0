#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyring.hpp"

using namespace polyring;
using exactmath::rat;
using exactmath::Rat;

namespace {

void register_vars() {
    for (int i = 1; i <= 8; ++i) var("t" + std::to_string(i), 2);
    var("t", 2);
    for (int i = 2; i <= 8; ++i) var("c" + std::to_string(i), 2 * i);
}

Poly p(const std::string& s) { return parse_poly(s); }

std::mt19937 g_rng(2024);

Poly random_poly(const std::vector<std::string>& names, int max_terms, int max_exp) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<Term> terms;
    int n = nterms(g_rng);
    for (int k = 0; k < n; ++k) {
        std::vector<Factor> fs;
        for (const auto& name : names) {
            int e = exp(g_rng);
            if (e > 0) fs.push_back({*VarTable::instance().lookup(name), (std::uint32_t)e});
        }
        std::sort(fs.begin(), fs.end(), [](auto a, auto b) { return a.var < b.var; });
        terms.push_back({Monomial(fs), rat(num(g_rng), den(g_rng))});
    }
    return Poly::from_terms(std::move(terms));
}

std::map<VarId, Rat> random_point(const std::vector<std::string>& names) {
    std::uniform_int_distribution<long> num(-7, 7);
    std::uniform_int_distribution<long> den(1, 4);
    std::map<VarId, Rat> pt;
    for (const auto& name : names) pt[*VarTable::instance().lookup(name)] = rat(num(g_rng), den(g_rng));
    return pt;
}

}  // namespace

TEST_CASE("basic ring arithmetic") {
    register_vars();
    CHECK(p("t1 + t2") * p("t1 - t2") == p("t1^2 - t2^2"));
    CHECK((p("t1 + t2") * Poly::zero()).is_zero());
    CHECK(p("t1 + t2") - p("t1 + t2") == Poly::zero());
    CHECK(p("2*t1").scale(rat(1, 2)) == p("t1"));
}

TEST_CASE("sigma_2 of eight variables has C(8,2) terms") {
    register_vars();
    // expand prod (1+t_i) and take the degree-4 part
    Poly prod = Poly::constant(Rat(1));
    for (int i = 1; i <= 8; ++i) prod = prod * (Poly::constant(Rat(1)) + pvar("t" + std::to_string(i)));
    Poly c2 = prod.graded_component(4);
    CHECK(c2.size() == 28);
    for (const Term& t : c2.terms()) CHECK(t.coeff == 1);
}

TEST_CASE("mixed/unknown variables are rejected") {
    register_vars();
    CHECK_THROWS(parse_poly("nosuchvar + t1"));
    CHECK_THROWS(pvar("alsonothere"));
}

TEST_CASE("substitution: reflection cells and involution") {
    register_vars();
    Substitution s8;
    s8.set(*VarTable::instance().lookup("t8"), p("t7"));
    s8.set(*VarTable::instance().lookup("t7"), p("t8"));
    CHECK(s8.apply(p("t8")) == p("t7"));
    // applying the same reflection twice is the identity
    CHECK(s8.apply(s8.apply(p("3*t7^2*t8 + t1"))) == p("3*t7^2*t8 + t1"));

    Substitution s2;
    s2.set(*VarTable::instance().lookup("t"), p("2*t - t1 - t2 - t3"));
    CHECK(s2.apply(p("t")) == p("2*t - t1 - t2 - t3"));

    // degree-mismatched image is rejected
    Substitution bad;
    CHECK_THROWS(bad.set(*VarTable::instance().lookup("c4"), p("t1")));
    CHECK_THROWS(bad.set(*VarTable::instance().lookup("t1"), p("t1 + t1^2")));
}

TEST_CASE("substitution is a ring homomorphism") {
    register_vars();
    std::vector<std::string> names = {"t1", "t2", "t3"};
    Substitution s;
    s.set(*VarTable::instance().lookup("t1"), p("t2 + 2*t3"));
    s.set(*VarTable::instance().lookup("t2"), p("t1 - t3"));
    for (int k = 0; k < 30; ++k) {
        Poly a = random_poly(names, 4, 3), b = random_poly(names, 4, 3);
        CHECK(s.apply(a * b) == s.apply(a) * s.apply(b));
        CHECK(s.apply(a + b) == s.apply(a) + s.apply(b));
    }
}

TEST_CASE("graded component") {
    register_vars();
    CHECK(p("t + t^2").graded_component(4) == p("t^2"));
    Poly h = p("t1*t2 + t3^2");
    CHECK(h.graded_component(4) == h);
    CHECK(h.graded_component(6).is_zero());
    CHECK(h.is_homogeneous());
    CHECK(h.homogeneous_degree() == 4);
    CHECK_FALSE(p("t + t^2").is_homogeneous());
}

TEST_CASE("reduce_mod_p") {
    register_vars();
    CHECK(p("3*t").reduce_mod_p(3).is_zero());
    // -3 = 1 mod 2
    Poly c1m3t = p("c2 - 3*t");
    CHECK(c1m3t.reduce_mod_p(2) == p("c2 + t"));
    // direct coefficient reduction of -2^5*3*5*(c2-4t^2) mod 7 is nonzero
    Poly i2 = p("c2 - 4*t^2").scale(rat(-480, 1));
    CHECK_FALSE(i2.reduce_mod_p(7).is_zero());
    CHECK(i2.reduce_mod_p(7) == p("3*c2 + 2*t^2"));
    // denominator not invertible mod p
    CHECK_THROWS(p("t").scale(rat(1, 2)).reduce_mod_p(2));
    CHECK(p("t").scale(rat(1, 3)).reduce_mod_p(2) == p("t"));
}

TEST_CASE("add(p, -p) cancels structurally") {
    register_vars();
    std::vector<std::string> names = {"t1", "t2", "c2"};
    for (int k = 0; k < 50; ++k) {
        Poly a = random_poly(names, 6, 4);
        CHECK((a + a.neg()).is_zero());
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("distributivity and associativity vs evaluation at random points") {
    register_vars();
    std::vector<std::string> names = {"t1", "t2", "t3", "c2", "c3"};
    for (int k = 0; k < 40; ++k) {
        Poly a = random_poly(names, 4, 2), b = random_poly(names, 4, 2), c = random_poly(names, 4, 2);
        Poly lhs = a * (b + c);
        Poly rhs = a * b + a * c;
        CHECK(lhs == rhs);
        Poly assoc1 = (a * b) * c, assoc2 = a * (b * c);
        CHECK(assoc1 == assoc2);
        auto pt = random_point(names);
        CHECK(lhs.evaluate(pt) == a.evaluate(pt) * (b.evaluate(pt) + c.evaluate(pt)));
        CHECK(assoc1.evaluate(pt) == a.evaluate(pt) * b.evaluate(pt) * c.evaluate(pt));
    }
}

TEST_CASE("substitution preserves grading for degree-preserving maps") {
    register_vars();
    Substitution s;
    s.set(*VarTable::instance().lookup("t1"), p("t2 - t3 + 2*t"));
    for (int k = 0; k < 20; ++k) {
        Poly a = random_poly({"t1", "t2", "t3"}, 5, 3);
        if (a.is_zero()) continue;
        Poly h = a.graded_component(a.degree());
        Poly img = s.apply(h);
        if (!img.is_zero()) {
            CHECK(img.is_homogeneous());
            CHECK(img.homogeneous_degree() == h.homogeneous_degree());
        }
    }
}

TEST_CASE("text format round trips exactly") {
    register_vars();
    CHECK(to_text(p("-480*t^2*c2 + 3*c4^2")) == "-480*t^2*c2 + 3*c4^2");
    CHECK(to_text(Poly::zero()) == "0");
    CHECK(parse_poly("0").is_zero());
    CHECK(to_text(p("1/2*t")) == "1/2*t");
    CHECK(p("t*t") == p("t^2"));

    std::vector<std::string> names = {"t", "t1", "c2", "c5"};
    for (int k = 0; k < 60; ++k) {
        Poly a = random_poly(names, 7, 5);
        CHECK(parse_poly(to_text(a)) == a);
    }
}

TEST_CASE("content and integrality") {
    register_vars();
    CHECK(p("6*t1 + 9*t2").content() == 3);
    CHECK(p("6*t1 + 9*t2").integer_coeffs());
    CHECK_FALSE(p("1/2*t1").integer_coeffs());
    CHECK_THROWS(p("1/2*t1").content());
}

TEST_CASE("pow by repeated squaring") {
    register_vars();
    Poly b = p("t1 + t2");
    CHECK(b.pow(0) == Poly::constant(Rat(1)));
    CHECK(b.pow(1) == b);
    CHECK(b.pow(3) == b * b * b);
}
