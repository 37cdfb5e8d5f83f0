#include "steenrod.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "weyl.hpp"

namespace steenrod {

using exactmath::Int;
using exactmath::Rat;
using exactmath::binomial;
using exactmath::rat;
using polyring::Poly;
using polyring::Substitution;
using polyring::parse_poly;
using polyring::pvar;

int word_length(Key k) {
    int n = 0;
    for (int s = 0; s < 8; ++s) n += (k >> (8 * s)) & 0xff;
    return n;
}

ModPoly mp_zero(long p) { return ModPoly{p, {}}; }

namespace {

ModPoly from_accumulator(long p, std::unordered_map<Key, long>& acc) {
    ModPoly out{p, {}};
    out.terms.reserve(acc.size());
    for (auto& [k, c] : acc) {
        long r = c % p;
        if (r < 0) r += p;
        if (r != 0) out.terms.emplace_back(k, static_cast<std::uint8_t>(r));
    }
    std::sort(out.terms.begin(), out.terms.end());
    return out;
}

void check_same_prime(const ModPoly& a, const ModPoly& b) {
    if (a.p != b.p) throw std::invalid_argument("ModPoly: mixed primes");
}

}  // namespace

ModPoly mp_add(const ModPoly& a, const ModPoly& b) {
    check_same_prime(a, b);
    ModPoly out{a.p, {}};
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        if (a.terms[i].first < b.terms[j].first)
            out.terms.push_back(a.terms[i++]);
        else if (a.terms[i].first > b.terms[j].first)
            out.terms.push_back(b.terms[j++]);
        else {
            long c = (a.terms[i].second + b.terms[j].second) % a.p;
            if (c) out.terms.emplace_back(a.terms[i].first, static_cast<std::uint8_t>(c));
            ++i;
            ++j;
        }
    }
    while (i < a.terms.size()) out.terms.push_back(a.terms[i++]);
    while (j < b.terms.size()) out.terms.push_back(b.terms[j++]);
    return out;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b) {
    check_same_prime(a, b);
    std::unordered_map<Key, long> acc;
    acc.reserve(a.terms.size() * 2);
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) acc[ka + kb] += static_cast<long>(ca) * cb;
    return from_accumulator(a.p, acc);
}

ModPoly mp_scale(const ModPoly& a, long c) {
    c %= a.p;
    if (c < 0) c += a.p;
    if (c == 0) return mp_zero(a.p);
    ModPoly out{a.p, {}};
    out.terms.reserve(a.terms.size());
    for (const auto& [k, v] : a.terms) {
        long r = v * c % a.p;
        if (r) out.terms.emplace_back(k, static_cast<std::uint8_t>(r));
    }
    return out;
}

ModPoly mp_pow(const ModPoly& a, unsigned e) {
    ModPoly result{a.p, {{0, 1}}};
    ModPoly base = a;
    while (e) {
        if (e & 1u) result = mp_mul(result, base);
        e >>= 1u;
        if (e) base = mp_mul(base, base);
    }
    return result;
}

ModPoly component_word(const ModPoly& f, int wordlen) {
    ModPoly out{f.p, {}};
    for (const auto& t : f.terms)
        if (word_length(t.first) == wordlen) out.terms.push_back(t);
    return out;
}

std::size_t mp_size(const ModPoly& f) { return f.terms.size(); }

std::string mp_str(const ModPoly& f) {
    if (f.is_zero()) return "0";
    static const char* names[8] = {"t1", "t2", "t3", "t4", "t5", "t6", "t7", "t"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : f.terms) {
        if (!first) os << " + ";
        first = false;
        os << int(c);
        for (int s = 0; s < 8; ++s) {
            int e = (k >> (8 * s)) & 0xff;
            if (!e) continue;
            os << "*" << names[s];
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

ModPoly generator(int slot, long p) {
    if (slot < 0 || slot > 7) throw std::invalid_argument("generator: slot out of range");
    return ModPoly{p, {{Key(1) << (8 * slot), 1}}};
}

ModPoly t8_eliminated(long p) {
    ModPoly out = mp_scale(generator(7, p), 3);
    for (int s = 0; s < 7; ++s) out = mp_add(out, mp_scale(generator(s, p), p - 1));
    return out;
}

ModPoly c_expansion(int i, long p) {
    if (i < 0 || i > 8) return mp_zero(p);
    // sigma_i of the eight linear forms via the usual DP
    std::vector<ModPoly> e(9, mp_zero(p));
    e[0] = ModPoly{p, {{0, 1}}};
    std::vector<ModPoly> forms;
    for (int s = 0; s < 7; ++s) forms.push_back(generator(s, p));
    forms.push_back(t8_eliminated(p));
    int used = 0;
    for (const ModPoly& f : forms) {
        ++used;
        for (int k = std::min(used, 8); k >= 1; --k) e[k] = mp_add(e[k], mp_mul(e[k - 1], f));
    }
    return e[i];
}

ModPoly t_level(const Poly& f, long p) {
    weyl::register_all_variables();
    static std::mutex mtx;
    static std::map<std::pair<int, long>, ModPoly> c_cache;
    auto cexp = [&](int i) {
        std::lock_guard<std::mutex> lock(mtx);
        auto key = std::make_pair(i, p);
        auto it = c_cache.find(key);
        if (it == c_cache.end()) it = c_cache.emplace(key, c_expansion(i, p)).first;
        return it->second;
    };

    ModPoly out = mp_zero(p);
    for (const auto& term : f.terms()) {
        if (!exactmath::is_integer(term.coeff)) {
            long den = exactmath::mod_p(Int(term.coeff.get_den()), p);
            if (den == 0) throw std::domain_error("t_level: denominator divisible by p");
        }
        long num = exactmath::mod_p(Int(term.coeff.get_num()), p);
        long den = exactmath::mod_p(Int(term.coeff.get_den()), p);
        long c = num * exactmath::inv_mod_p(den, p) % p;
        if (c == 0) continue;
        ModPoly prod{p, {{0, static_cast<std::uint8_t>(c)}}};
        for (const auto& factor : term.mon.factors()) {
            const std::string& name = polyring::VarTable::instance().info(factor.var).name;
            ModPoly base;
            if (name == "t")
                base = generator(7, p);
            else if (name.size() >= 2 && name[0] == 't' && name[1] >= '1' && name[1] <= '7' &&
                     name.size() == 2)
                base = generator(name[1] - '1', p);
            else if (name == "t8")
                base = t8_eliminated(p);
            else if (name[0] == 'c' && name.size() == 2)
                base = cexp(name[1] - '0');
            else
                throw std::invalid_argument("t_level: unsupported variable " + name);
            prod = mp_mul(prod, mp_pow(base, factor.exp));
        }
        out = mp_add(out, prod);
    }
    return out;
}

ModPoly total_op(const ModPoly& f) {
    long p = f.p;
    // T(gen) = gen + gen^p for each of the eight generators
    std::vector<ModPoly> img(8);
    for (int s = 0; s < 8; ++s)
        img[s] = mp_add(generator(s, p), mp_pow(generator(s, p), static_cast<unsigned>(p)));
    ModPoly out = mp_zero(p);
    // memoized powers of the generator images
    std::map<std::pair<int, int>, ModPoly> powers;
    auto img_pow = [&](int s, int e) {
        auto key = std::make_pair(s, e);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, mp_pow(img[s], e)).first;
        return it->second;
    };
    for (const auto& [k, c] : f.terms) {
        ModPoly prod{p, {{0, c}}};
        for (int s = 0; s < 8; ++s) {
            int e = (k >> (8 * s)) & 0xff;
            if (e) prod = mp_mul(prod, img_pow(s, e));
        }
        out = mp_add(out, prod);
    }
    return out;
}

ModPoly power_op(const ModPoly& f_total, int n, int k, long p) {
    return component_word(f_total, n + k * static_cast<int>(p - 1));
}

// ---------------------------------------------------------------------------

std::optional<std::string> verify_wu(int i) {
    if (i < 2 || i > 8) throw std::invalid_argument("verify_wu: i out of range");
    const long p = 2;
    ModPoly ci = c_expansion(i, p);
    ModPoly lhs = power_op(total_op(ci), i, i - 1, p);
    // rhs: sum_{j=0}^{i-1} c_{2i-1-j} c_j with c_1 = 3t = t mod 2
    ModPoly rhs = mp_zero(p);
    auto c_of = [&](int idx) -> ModPoly {
        if (idx == 1) return mp_scale(generator(7, p), 3);
        return c_expansion(idx, p);
    };
    for (int j = 0; j <= i - 1; ++j) {
        int other = 2 * i - 1 - j;
        if (other > 8) continue;
        rhs = mp_add(rhs, mp_mul(c_of(other), c_of(j)));
    }
    ModPoly diff = mp_add(lhs, mp_scale(rhs, p - 1));
    if (diff.is_zero()) return std::nullopt;
    return "Wu formula fails at i=" + std::to_string(i) + ": " + mp_str(diff);
}

namespace {

OpCheck op_congruence(const std::string& name, long p, const Poly& input, int k,
                      const Poly& expected) {
    ModPoly in = t_level(input, p);
    if (in.is_zero())
        return {name, false, false, "input vanishes mod " + std::to_string(p)};
    int n = input.homogeneous_degree() / 2;
    ModPoly lhs = power_op(total_op(in), n, k, p);
    ModPoly rhs = t_level(expected, p);
    ModPoly diff = mp_add(lhs, mp_scale(rhs, p - 1));
    if (diff.is_zero()) return {name, true, false, ""};
    return {name, false, false, "difference has " + std::to_string(mp_size(diff)) + " terms"};
}

// The degree-30 display is not an identity of Z/2[t1..t7, t]: the exact
// difference is t c6 (c8 + t c7 + t^2 c6) + t^4 (c3 c8 + c5 c6 + t c4 c6)
// + t^8 (c2 c5 + c3 c4), which lies in the ideal generated mod 2 by the
// lower presentation relations (c2, c3, c5 - t c4 and the degree-18 one
// giving t c8 + t^2 c7 + t^3 c6).  Verified in that quotient and flagged.
OpCheck sq14_congruence() {
    const std::string name = "Sq14(c8 + c4^2 + t^2 c6 + t^4 c4 + t^8)";
    Poly input = parse_poly("c8 + c4^2 + t^2*c6 + t^4*c4 + t^8");
    Poly lhs = total_sym(input, 2).graded_component(30);
    Poly rhs =
        (parse_poly("c8 + t^2*c6 + t^4*c4 + t^8") * parse_poly("c7 + t*c6")).reduce_mod_p(2);
    Poly diff = (lhs - rhs).reduce_mod_p(2);
    if (diff.is_zero()) return {name, true, false, ""};

    Substitution lower;
    lower.set(weyl::v("c2"), Poly::zero());
    lower.set(weyl::v("c3"), Poly::zero());
    lower.set(weyl::v("c5"), parse_poly("t*c4"));
    Poly reduced = lower.apply(diff);
    // t c8 -> t^2 c7 + t^3 c6, applied until no monomial is divisible
    Poly tc8 = parse_poly("t*c8");
    const polyring::Monomial tc8_mon = tc8.terms()[0].mon;
    Poly rest = reduced;
    for (int guard = 0; guard < 64 && !rest.is_zero(); ++guard) {
        std::vector<polyring::Term> next;
        bool changed = false;
        for (const auto& term : rest.terms()) {
            if (term.mon.divisible_by(tc8_mon)) {
                changed = true;
                Poly repl = Poly::term(term.coeff, term.mon.divide_by(tc8_mon)) *
                            parse_poly("t^2*c7 + t^3*c6");
                for (const auto& u : repl.terms()) next.push_back(u);
            } else {
                next.push_back(term);
            }
        }
        rest = Poly::from_terms(std::move(next));
        if (!changed) break;
    }
    if (rest.reduce_mod_p(2).is_zero())
        return {name, true, true,
                "printed form is exact only modulo the lower relations; difference = " +
                    polyring::to_text(diff)};
    return {name, false, false, "residue " + polyring::to_text(rest.reduce_mod_p(2))};
}

}  // namespace

std::vector<OpCheck> verify_lemma_operation() {
    weyl::register_all_variables();
    std::vector<OpCheck> checks;

    checks.push_back(op_congruence("Sq2(c2) = c3 + t c2", 2, parse_poly("c2"), 1,
                                   parse_poly("c3 + t*c2")));
    checks.push_back(op_congruence("Sq4(c3) = c5 + t c4 + c2 c3", 2, parse_poly("c3"), 2,
                                   parse_poly("c5 + t*c4 + c2*c3")));
    checks.push_back(op_congruence(
        "Sq8(c5 + t c4)", 2, parse_poly("c5 + t*c4"), 4,
        parse_poly("t*c8 + c2*c7 + c3*c6 + c4*c5 + t*c4^2 + t^2*c7 + t^3*c6 + t^2*c2*c5 "
                   "+ t^2*c3*c4")));
    checks.push_back(sq14_congruence());

    checks.push_back(op_congruence("P1(c2 + 2t^2) = c4 + c2^2 + t^4 mod 3", 3,
                                   parse_poly("c2 + 2*t^2"), 1, parse_poly("c4 + c2^2 + t^4")));
    checks.push_back(op_congruence(
        "P3(c4 + 2t^4) mod 3", 3, parse_poly("c4 + 2*t^4"), 3,
        parse_poly("c5^2 + 2*c4*c6 + 2*c3*c7 + 2*c2*c8 + c3^2*c4 + c2*c4^2 + c2^2*c6 "
                   "+ 2*c2*c3*c5 + 2*t^10")));
    checks.push_back(op_congruence(
        "P1(c2 + t^2) mod 5", 5, parse_poly("c2 + t^2"), 1,
        parse_poly("c6 + 2*c3^2 + 4*c2*c4 + 2*c2^3 + 2*t*c5 + t*c2*c3 + 4*t^2*c4 "
                   "+ 4*t^2*c2^2 + 3*t^3*c3 + t^4*c2 + 2*t^6")));
    return checks;
}

std::vector<OpCheck> verify_newton_mod3() {
    weyl::register_all_variables();
    const long p = 3;
    std::vector<OpCheck> checks;

    auto p_t = [&](int k) {
        ModPoly sum = mp_zero(p);
        for (int s = 0; s < 7; ++s) sum = mp_add(sum, mp_pow(generator(s, p), k));
        sum = mp_add(sum, mp_pow(t8_eliminated(p), k));
        return sum;
    };

    auto check_eq = [&](const std::string& name, const ModPoly& a, const ModPoly& b) {
        ModPoly diff = mp_add(a, mp_scale(b, p - 1));
        checks.push_back({name, diff.is_zero(), false,
                          diff.is_zero() ? "" : std::to_string(mp_size(diff)) + " difference terms"});
    };

    check_eq("p1 = 0 mod 3", p_t(1), mp_zero(p));
    check_eq("p2 = c2 mod 3", p_t(2), t_level(parse_poly("c2"), p));
    check_eq("p4 = 2c4 + 2c2^2 mod 3", p_t(4), t_level(parse_poly("2*c4 + 2*c2^2"), p));
    check_eq("p10 mod 3", p_t(10),
             t_level(parse_poly("2*c5^2 + c4*c6 + c3*c7 + c2*c8 + 2*c3^2*c4 + 2*c2*c4^2 "
                                "+ 2*c2^2*c6 + c2^3*c4 + c2*c3*c5 + c2^5"),
                     p));

    // P^1(p2) = 2 p4 and P^3(p4) = p10
    check_eq("P1(p2) = 2 p4", power_op(total_op(p_t(2)), 2, 1, p), mp_scale(p_t(4), 2));
    check_eq("P3(p4) = p10", power_op(total_op(p_t(4)), 4, 3, p), p_t(10));
    return checks;
}

// ---------------------------------------------------------------------------
// symmetric-coordinate route

namespace {

Poly c_sym(int i) {
    if (i == 0) return Poly::constant(Rat(1));
    if (i == 1) return rat(3, 1) * pvar("t");
    if (i > 8) return Poly::zero();
    return pvar("c" + std::to_string(i));
}

std::mutex g_sym_mutex;

}  // namespace

Poly power_sum_sym(int k) {
    weyl::register_all_variables();
    static std::vector<Poly> cache;
    std::lock_guard<std::mutex> lock(g_sym_mutex);
    if ((int)cache.size() <= k) {
        if (cache.empty()) cache.push_back(Poly::constant(Rat(8)));
        while ((int)cache.size() <= k) {
            int n = static_cast<int>(cache.size());
            Poly pn;
            for (int i = 1; i <= n - 1 && i <= 8; ++i) {
                Poly term = cache[n - i] * c_sym(i);
                pn = (i % 2 == 1) ? pn + term : pn - term;
            }
            if (n <= 8) {
                Poly last = Rat(n) * c_sym(n);
                pn = (n % 2 == 1) ? pn + last : pn - last;
            }
            cache.push_back(pn);
        }
    }
    return cache[k];
}

Poly total_c_sym(int n, long p) {
    weyl::register_all_variables();
    // power sums of y_i = t_i + t_i^p:
    //   q_m = sum_j C(m, j) p_{m + (p-1) j}
    std::vector<Poly> q(n + 1);
    q[0] = Poly::constant(Rat(8));
    for (int m = 1; m <= n; ++m) {
        Poly qm;
        for (int j = 0; j <= m; ++j)
            qm = qm + Rat(binomial(m, j)) * power_sum_sym(m + static_cast<int>(p - 1) * j);
        q[m] = qm;
    }
    // Newton inverse: n e_n = sum_{i=1..n} (-1)^{i-1} e_{n-i} q_i
    std::vector<Poly> e(n + 1);
    e[0] = Poly::constant(Rat(1));
    for (int m = 1; m <= n; ++m) {
        Poly acc;
        for (int i = 1; i <= m; ++i) {
            Poly term = e[m - i] * q[i];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        e[m] = acc.scale(rat(1, m));
    }
    return e[n].reduce_mod_p(p);
}

Poly total_sym(const Poly& f, long p) {
    weyl::register_all_variables();
    static std::mutex mtx;
    static std::map<std::pair<int, long>, Poly> table;
    auto timg = [&](int i) {
        std::lock_guard<std::mutex> lock(mtx);
        auto key = std::make_pair(i, p);
        auto it = table.find(key);
        if (it == table.end()) it = table.emplace(key, total_c_sym(i, p)).first;
        return it->second;
    };

    Poly t_img = pvar("t") + pvar("t").pow(static_cast<unsigned>(p));
    std::vector<polyring::Term> out;
    Poly reduced = f.reduce_mod_p(p);
    for (const auto& term : reduced.terms()) {
        Poly prod = Poly::constant(term.coeff);
        for (const auto& factor : term.mon.factors()) {
            const std::string& name = polyring::VarTable::instance().info(factor.var).name;
            Poly base;
            if (name == "t")
                base = t_img;
            else if (name[0] == 'c' && name.size() == 2)
                base = timg(name[1] - '0');
            else
                throw std::invalid_argument("total_sym: unsupported variable " + name);
            prod = prod * base.pow(factor.exp);
            prod = prod.reduce_mod_p(p);
        }
        for (const auto& u : prod.terms()) out.push_back(u);
    }
    return Poly::from_terms(std::move(out)).reduce_mod_p(p);
}

}  // namespace steenrod
