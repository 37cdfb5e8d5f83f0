#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exactmath.hpp"

using namespace exactmath;

TEST_CASE("rationals are canonical") {
    Rat a = rat(2, 4);
    CHECK(a.get_num() == 1);
    CHECK(a.get_den() == 2);
    Rat b = rat(3, -6);
    CHECK(b.get_num() == -1);
    CHECK(b.get_den() == 2);
    CHECK(rat(0, 7) == 0);
    CHECK_THROWS(rat(1, 0));

    // arithmetic keeps lowest terms and positive denominators
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-40, 40);
    for (int k = 0; k < 500; ++k) {
        long n1 = d(rng), n2 = d(rng), d1 = d(rng), d2 = d(rng);
        if (d1 == 0 || d2 == 0) continue;
        Rat x = rat(n1, d1), y = rat(n2, d2);
        for (Rat r : {Rat(x + y), Rat(x * y), Rat(x - y)}) {
            CHECK(r.get_den() > 0);
            Int g;
            Int num = r.get_num(), den = r.get_den();
            mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            CHECK(g == 1);
        }
    }
}

TEST_CASE("rat parsing round trips") {
    CHECK(parse_rat("-7/3") == rat(-7, 3));
    CHECK(parse_rat("42") == 42);
    CHECK(to_string(rat(-7, 3)) == "-7/3");
    CHECK(to_string(rat(6, 3)) == "2");
}

TEST_CASE("binomial and powers") {
    CHECK(binomial(8, 2) == 28);
    CHECK(binomial(9, 3) == 84);
    CHECK(binomial(3, 7) == 0);
    CHECK(ipow(Int(2), 38) == Int("274877906944"));
    CHECK(qpow(rat(-2, 3), 3) == rat(-8, 27));
}

TEST_CASE("solve_linear_q: identity system") {
    QMatrix a(2, 2);
    a.at(0, 0) = 1;
    a.at(1, 1) = 1;
    auto r = solve_linear_q(a, {Rat(3), Rat(15)});
    REQUIRE(r.status == SolveStatus::Unique);
    CHECK(r.x[0] == 3);
    CHECK(r.x[1] == 15);
}

TEST_CASE("solve_linear_q: rank deficiency is flagged") {
    QMatrix a(1, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 1;
    auto r = solve_linear_q(a, {Rat(2)});
    REQUIRE(r.status == SolveStatus::Underdetermined);
    CHECK(r.x[0] + r.x[1] == 2);
}

TEST_CASE("solve_linear_q: inconsistent") {
    QMatrix a(2, 1);
    a.at(0, 0) = 1;
    a.at(1, 0) = 2;
    auto r = solve_linear_q(a, {Rat(1), Rat(3)});
    CHECK(r.status == SolveStatus::Inconsistent);
}

TEST_CASE("solve_linear_q solutions satisfy a*x = b exactly") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + trial % 5, m = 1 + (trial / 2) % 5;
        QMatrix a(n, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) a.at(i, j) = rat(d(rng), 1 + std::abs(d(rng)));
        std::vector<Rat> b(n);
        for (auto& v : b) v = rat(d(rng), 1 + std::abs(d(rng)));
        auto r = solve_linear_q(a, b);
        if (r.status == SolveStatus::Inconsistent) continue;
        for (std::size_t i = 0; i < n; ++i) {
            Rat s(0);
            for (std::size_t j = 0; j < m; ++j) s += a.at(i, j) * r.x[j];
            CHECK(s == b[i]);
        }
    }
}

TEST_CASE("smith normal form: diagonal gcd/lcm") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 3;
    auto s = smith_normal_form(m);
    REQUIRE(s.factors.size() == 2);
    CHECK(s.factors[0] == 1);
    CHECK(s.factors[1] == 6);
}

TEST_CASE("smith normal form: zero map and multiplication by 2") {
    IntMatrix z(1, 1);
    auto s = smith_normal_form(z);
    CHECK(s.factors.empty());
    CHECK(s.rank == 0);
    auto ck = cokernel(z);
    CHECK(ck.free_rank == 1);
    CHECK(ck.torsion.empty());

    IntMatrix two(1, 1);
    two.at(0, 0) = 2;
    auto ck2 = cokernel(two);
    CHECK(ck2.free_rank == 0);
    REQUIRE(ck2.torsion.size() == 1);
    CHECK(ck2.torsion[0] == 2);
}

TEST_CASE("smith normal form: divisibility chain and transform identity") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> d(-6, 6);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + trial % 4, m = 1 + (trial / 3) % 4;
        IntMatrix a(n, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) a.at(i, j) = d(rng);
        auto s = smith_normal_form(a, true);
        for (std::size_t i = 0; i + 1 < s.factors.size(); ++i)
            CHECK(s.factors[i + 1] % s.factors[i] == 0);
        CHECK(s.rank == a.rank_q());
        // u a v == diag(factors)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                Int acc = 0;
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < m; ++l)
                        acc += s.u->at(i, k) * a.at(k, l) * s.v->at(l, j);
                Int expect = (i == j && i < s.factors.size()) ? s.factors[i] : Int(0);
                CHECK(acc == expect);
            }
    }
}

TEST_CASE("solve_integer") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 0;
    m.at(1, 0) = 1;
    m.at(1, 1) = 3;
    auto y = solve_integer(m, {Int(4), Int(5)});
    REQUIRE(y.has_value());
    CHECK(m.at(0, 0) * (*y)[0] + m.at(0, 1) * (*y)[1] == 4);
    CHECK(m.at(1, 0) * (*y)[0] + m.at(1, 1) * (*y)[1] == 5);
    CHECK_FALSE(solve_integer(m, {Int(3), Int(1)}).has_value());
}

TEST_CASE("mod_p helpers") {
    CHECK(mod_p(Int(-1), 5) == 4);
    CHECK(mod_p(Int(10), 5) == 0);
    CHECK(inv_mod_p(2, 5) == 3);
    CHECK(inv_mod_p(2, 3) == 2);
    CHECK_THROWS(inv_mod_p(0, 3));
}
