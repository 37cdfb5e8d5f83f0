#include "rewrite.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <sstream>

#include "invariants.hpp"
#include "weyl.hpp"

namespace rewrite {

using exactmath::Int;
using polyring::Term;
using polyring::parse_poly;
using polyring::pvar;

namespace {

Monomial mono(const std::string& text) {
    Poly p = parse_poly(text);
    if (p.size() != 1 || p.terms()[0].coeff != 1)
        throw std::invalid_argument("mono: expected a single monic monomial: " + text);
    return p.terms()[0].mon;
}

}  // namespace

void IdealSpec::add_rule(const std::string& rule_name, const Monomial& lhs, const Poly& rhs) {
    if (!rhs.is_zero()) {
        if (!rhs.is_homogeneous() || rhs.homogeneous_degree() != lhs.degree())
            throw std::invalid_argument("rule " + rule_name + ": weight mismatch");
        if (rhs.coeff_of(lhs) != 0)
            throw std::invalid_argument("rule " + rule_name + ": lhs occurs in rhs");
    }
    rules.push_back({rule_name, lhs, rhs});
}

void IdealSpec::add_rule_from_relation(const std::string& rule_name, const Monomial& lhs,
                                       const Poly& relation) {
    Rat lead = relation.coeff_of(lhs);
    if (lead == 0)
        throw std::invalid_argument("rule " + rule_name +
                                    ": designated monomial missing from relation");
    Rat inv = Rat(Rat(-1) / lead);
    Poly rhs = (relation - Poly::term(lead, lhs)).scale(inv);
    add_rule(rule_name, lhs, rhs);
}

std::string IdealSpec::to_json() const {
    std::ostringstream os;
    os << "{\"name\":\"" << name << "\",\"kills\":[";
    bool first = true;
    for (const auto& [var, image] : prep.images()) {
        if (!first) os << ",";
        first = false;
        os << "{\"var\":\"" << polyring::VarTable::instance().info(var).name << "\",\"image\":\""
           << polyring::to_text(image) << "\"}";
    }
    os << "],\"rules\":[";
    first = true;
    for (const Rule& r : rules) {
        if (!first) os << ",";
        first = false;
        os << "{\"name\":\"" << r.name << "\",\"lhs\":\""
           << polyring::to_text(Poly::term(Rat(1), r.lhs)) << "\",\"rhs\":\""
           << polyring::to_text(r.rhs) << "\"}";
    }
    os << "]}";
    return os.str();
}

std::uint64_t IdealSpec::checksum() const {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : to_json()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

// ---------------------------------------------------------------------------

Engine::Engine(IdealSpec spec, std::uint64_t seed) : spec_(std::move(spec)), seed_(seed) {}

const Rule* Engine::pick_rule(const Monomial& m) const {
    if (seed_ == 0) {
        for (const Rule& r : spec_.rules)
            if (m.divisible_by(r.lhs)) return &r;
        return nullptr;
    }
    std::vector<const Rule*> applicable;
    for (const Rule& r : spec_.rules)
        if (m.divisible_by(r.lhs)) applicable.push_back(&r);
    if (applicable.empty()) return nullptr;
    std::mt19937_64 rng(seed_ ^ m.hash());
    return applicable[rng() % applicable.size()];
}

bool Engine::is_basis_monomial(const Monomial& m) const {
    for (const Rule& r : spec_.rules)
        if (m.divisible_by(r.lhs)) return false;
    return true;
}

Poly Engine::nf_known(const Poly& p) const {
    std::vector<Term> out;
    for (const Term& t : p.terms()) {
        auto it = memo_.find(t.mon);
        if (it == memo_.end()) throw std::logic_error("nf_known: unresolved monomial");
        for (const Term& u : it->second.terms()) out.push_back({u.mon, Rat(t.coeff * u.coeff)});
    }
    return Poly::from_terms(std::move(out));
}

void Engine::strongconnect(const Monomial& m) {
    {
        Node& node = nodes_[m];
        node.index = node.lowlink = counter_++;
        node.on_stack = true;
        const Rule* rule = pick_rule(m);
        if (!rule) throw std::logic_error("strongconnect called on an irreducible monomial");
        Monomial cof = m.divide_by(rule->lhs);
        node.expansion = Poly::term(Rat(1), cof) * rule->rhs;
    }
    stack_.push_back(m);

    Poly expansion = nodes_[m].expansion;
    for (const Term& t : expansion.terms()) {
        const Monomial& child = t.mon;
        if (memo_.count(child)) continue;
        if (is_basis_monomial(child)) {
            memo_.emplace(child, Poly::term(Rat(1), child));
            continue;
        }
        auto it = nodes_.find(child);
        if (it == nodes_.end() || it->second.index < 0) {
            strongconnect(child);
            Node& me = nodes_[m];
            me.lowlink = std::min(me.lowlink, nodes_[child].lowlink);
        } else if (it->second.on_stack) {
            Node& me = nodes_[m];
            me.lowlink = std::min(me.lowlink, it->second.index);
        }
    }

    Node& node = nodes_[m];
    if (node.lowlink != node.index) return;

    // pop one strongly connected component
    std::vector<Monomial> scc;
    while (true) {
        Monomial top = stack_.back();
        stack_.pop_back();
        nodes_[top].on_stack = false;
        scc.push_back(top);
        if (top == m) break;
    }

    // solve x_i = sum_j A_ij x_j + nf(rest_i) exactly
    std::size_t k = scc.size();
    std::vector<std::vector<Rat>> a(k, std::vector<Rat>(k, Rat(0)));
    std::vector<Poly> b(k);
    std::map<Monomial, std::size_t> pos;
    for (std::size_t i = 0; i < k; ++i) pos[scc[i]] = i;
    for (std::size_t i = 0; i < k; ++i) {
        const Poly& exp = nodes_[scc[i]].expansion;
        std::vector<Term> rest;
        for (const Term& t : exp.terms()) {
            auto it = pos.find(t.mon);
            if (it != pos.end())
                a[i][it->second] += t.coeff;
            else
                rest.push_back(t);
        }
        b[i] = nf_known(Poly::from_terms(std::move(rest)));
    }
    // (I - A) x = b via Gaussian elimination with polynomial right-hand sides
    std::vector<std::vector<Rat>> mtx(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) mtx[i][j] = Rat((i == j ? Rat(1) : Rat(0)) - a[i][j]);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && mtx[piv][col] == 0) ++piv;
        if (piv == k)
            throw std::runtime_error(
                "rewrite: singular reduction cycle in spec '" + spec_.name +
                "' (quotient basis claim fails near " +
                polyring::to_text(Poly::term(Rat(1), scc[col])) + ")");
        std::swap(mtx[piv], mtx[col]);
        std::swap(b[piv], b[col]);
        Rat inv = Rat(Rat(1) / mtx[col][col]);
        for (std::size_t j = col; j < k; ++j) mtx[col][j] = Rat(mtx[col][j] * inv);
        b[col] = b[col].scale(inv);
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col || mtx[r][col] == 0) continue;
            Rat f = mtx[r][col];
            for (std::size_t j = col; j < k; ++j) mtx[r][j] = Rat(mtx[r][j] - f * mtx[col][j]);
            b[r] = b[r] - b[col].scale(f);
        }
    }
    for (std::size_t i = 0; i < k; ++i) memo_.emplace(scc[i], std::move(b[i]));
}

Poly Engine::normal_form(const Poly& p) {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    Poly prepared = spec_.prep.apply(p);
    std::vector<Term> out;
    for (const Term& t : prepared.terms()) {
        auto it = memo_.find(t.mon);
        if (it == memo_.end()) {
            if (is_basis_monomial(t.mon)) {
                memo_.emplace(t.mon, Poly::term(Rat(1), t.mon));
            } else {
                auto nit = nodes_.find(t.mon);
                if (nit == nodes_.end() || nit->second.index < 0) strongconnect(t.mon);
            }
            it = memo_.find(t.mon);
            if (it == memo_.end()) throw std::logic_error("normal_form: reduction incomplete");
        }
        for (const Term& u : it->second.terms()) out.push_back({u.mon, Rat(t.coeff * u.coeff)});
    }
    return Poly::from_terms(std::move(out));
}

std::optional<std::string> Engine::check_local_consistency() {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    std::vector<Monomial> visited;
    visited.reserve(memo_.size());
    for (const auto& [m, nf] : memo_) visited.push_back(m);
    for (const Monomial& m : visited) {
        if (is_basis_monomial(m)) continue;
        Poly expect = memo_.at(m);
        for (const Rule& r : spec_.rules) {
            if (!m.divisible_by(r.lhs)) continue;
            Poly step = Poly::term(Rat(1), m.divide_by(r.lhs)) * r.rhs;
            Poly via = normal_form(step);
            if (!(via == expect))
                return "monomial " + polyring::to_text(Poly::term(Rat(1), m)) + ": rule " +
                       r.name + " gives " + polyring::to_text(via) + " but chosen path gives " +
                       polyring::to_text(expect);
        }
    }
    return std::nullopt;
}

CongruenceResult congruent(const Poly& p, const Poly& q, Engine& engine) {
    Poly residue = engine.normal_form(p - q);
    return {residue.is_zero(), residue};
}

SolveCoeffsResult solve_coeffs(const Poly& target, const std::vector<Poly>& candidates,
                               Engine& engine) {
    SolveCoeffsResult res;
    Poly t_nf = engine.normal_form(target);
    std::vector<Poly> c_nf;
    c_nf.reserve(candidates.size());
    for (const Poly& c : candidates) c_nf.push_back(engine.normal_form(c));

    // collect coordinate monomials
    std::map<Monomial, std::size_t> coords;
    auto index_of = [&coords](const Monomial& m) {
        auto [it, fresh] = coords.try_emplace(m, coords.size());
        (void)fresh;
        return it->second;
    };
    for (const Term& t : t_nf.terms()) index_of(t.mon);
    for (const Poly& c : c_nf)
        for (const Term& t : c.terms()) index_of(t.mon);

    exactmath::QMatrix mat(coords.size(), candidates.size());
    std::vector<Rat> rhs(coords.size(), Rat(0));
    for (std::size_t j = 0; j < c_nf.size(); ++j)
        for (const Term& t : c_nf[j].terms()) mat.at(index_of(t.mon), j) = t.coeff;
    for (const Term& t : t_nf.terms()) rhs[index_of(t.mon)] = t.coeff;

    auto sol = exactmath::solve_linear_q(mat, rhs);
    if (sol.status == exactmath::SolveStatus::Inconsistent) {
        res.solved = false;
        res.residue = t_nf;  // full reduced target as evidence
        return res;
    }
    res.solved = true;
    res.unique = sol.status == exactmath::SolveStatus::Unique;
    res.coeffs = sol.x;
    Poly rebuilt;
    for (std::size_t j = 0; j < c_nf.size(); ++j) rebuilt = rebuilt + c_nf[j].scale(sol.x[j]);
    res.residue = t_nf - rebuilt;
    return res;
}

// ---------------------------------------------------------------------------
// Stage construction.  Rules are harvested from the computed invariants so
// the displayed rule lists of the quotient lemmas remain genuine checks.

namespace {

std::mutex g_stage_mutex;

Poly zero() { return Poly::zero(); }

Substitution kill_vars(std::initializer_list<const char*> names) {
    weyl::register_all_variables();
    Substitution s;
    for (const char* n : names) s.set(weyl::v(n), zero());
    return s;
}

IdealSpec bt_stage_uncached(int j) {
    IdealSpec spec;
    spec.name = "bt-stage-" + std::to_string(j);
    spec.prep = kill_vars({"t", "c8", "c2"});
    struct Step {
        int index;
        const char* lhs;
    };
    static const Step steps[] = {{8, "c4^2"}, {12, "c6^2"}, {14, "c7^2"}, {18, "c3^6"}};
    for (const Step& st : steps) {
        if (st.index >= j) break;
        Engine prev(spec);
        Poly reduced = prev.normal_form(invariants::I(st.index));
        spec.add_rule_from_relation("I" + std::to_string(st.index), mono(st.lhs), reduced);
    }
    return spec;
}

IdealSpec a_stage_uncached(int j) {
    IdealSpec spec;
    spec.name = "a-stage-" + std::to_string(j);
    Substitution kills = kill_vars({"t", "c2"});
    spec.prep = kills.after(invariants::a_ring_embed());
    // killing the c8 element of A forces the u^8 rule
    spec.add_rule_from_relation("c8", mono("u^8"), spec.prep.apply(pvar("c8")));
    struct Step {
        int index;
        const char* lhs;
    };
    static const Step steps[] = {{8, "c4^2"}, {12, "c6^2"}, {14, "c7^2"}, {18, "c3^6"}};
    for (const Step& st : steps) {
        if (st.index >= j) break;
        Engine prev(spec);
        Poly reduced = prev.normal_form(invariants::I(st.index));
        spec.add_rule_from_relation("I" + std::to_string(st.index), mono(st.lhs), reduced);
    }
    return spec;
}

IdealSpec jbar_stage_uncached(int j) {
    IdealSpec spec;
    spec.name = "jbar-stage-" + std::to_string(j);
    Substitution kills = kill_vars({"t", "u"});
    spec.prep = kills.after(invariants::barc_to_c().after(invariants::a_ring_embed()));
    struct Step {
        int index;
        const char* lhs;
    };
    static const Step steps[] = {{2, "c2"},     {6, "c6"},      {8, "c4^2"},
                                 {10, "c5^2"},  {12, "c5*c7"},  {14, "c7^2"}};
    for (const Step& st : steps) {
        if (st.index >= j) break;
        Engine prev(spec);
        Poly reduced = prev.normal_form(invariants::J(st.index));
        spec.add_rule_from_relation("J" + std::to_string(st.index), mono(st.lhs), reduced);
    }
    return spec;
}

IdealSpec primed_stage_uncached(int j) {
    IdealSpec spec;
    spec.name = "primed-stage-" + std::to_string(j);
    spec.prep = kill_vars({"t'"});
    struct Step {
        int index;
        const char* lhs;
    };
    static const Step steps[] = {{2, "c2'"},    {6, "c6'"},      {8, "c4'^2"},
                                 {10, "c5'^2"}, {12, "c5'*c7'"}, {14, "c7'^2"}};
    for (const Step& st : steps) {
        if (st.index >= j) break;
        Engine prev(spec);
        Poly reduced = prev.normal_form(invariants::Iprime(st.index));
        spec.add_rule_from_relation("I'" + std::to_string(st.index), mono(st.lhs), reduced);
    }
    return spec;
}

const IdealSpec& stage_cache(const std::string& key, IdealSpec (*build)(int), int j) {
    static std::map<std::string, IdealSpec> cache;
    {
        std::lock_guard<std::mutex> lock(g_stage_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    IdealSpec built = build(j);
    std::lock_guard<std::mutex> lock(g_stage_mutex);
    return cache.emplace(key, std::move(built)).first->second;
}

}  // namespace

IdealSpec bt_mod_I2() {
    weyl::register_all_variables();
    IdealSpec spec;
    spec.name = "bt-mod-I2";
    spec.prep.set(weyl::v("c2"), parse_poly("4*t^2"));
    return spec;
}

IdealSpec bt_stage(int j) { return stage_cache("bt" + std::to_string(j), &bt_stage_uncached, j); }

IdealSpec a_mod_t_a8() {
    IdealSpec spec;
    spec.name = "a-mod-t-a8";
    Substitution kills = kill_vars({"t", "c2"});
    spec.prep = kills.after(invariants::a_ring_embed());
    return spec;
}

IdealSpec a_stage(int j) { return stage_cache("a" + std::to_string(j), &a_stage_uncached, j); }

IdealSpec kakikae() { return a_stage(20); }

IdealSpec jbar_stage(int j) {
    return stage_cache("jbar" + std::to_string(j), &jbar_stage_uncached, j);
}

IdealSpec primed_stage(int j) {
    return stage_cache("primed" + std::to_string(j), &primed_stage_uncached, j);
}

bool kakikae_basis_contains(const Monomial& m) {
    weyl::register_all_variables();
    static const VarId u = weyl::v("u");
    static const VarId c3 = weyl::v("c3");
    static const VarId c4 = weyl::v("c4");
    static const VarId c5 = weyl::v("c5");
    static const VarId c6 = weyl::v("c6");
    static const VarId c7 = weyl::v("c7");
    for (const auto& f : m.factors()) {
        if (f.var == u) {
            if (f.exp > 7) return false;
        } else if (f.var == c3) {
            if (f.exp > 5) return false;
        } else if (f.var == c4 || f.var == c6 || f.var == c7) {
            if (f.exp > 1) return false;
        } else if (f.var != c5) {
            return false;  // foreign variable
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Buchberger in Q[u, v, w].

namespace {

const Term& lead(const Poly& p) { return p.terms().back(); }

Poly make_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    Int num_gcd = 0, den_lcm = 1;
    for (const Term& t : p.terms()) {
        Int num = t.coeff.get_num(), den = t.coeff.get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
    Rat scale = exactmath::rat(den_lcm, num_gcd);
    Poly out = p.scale(scale);
    if (lead(out).coeff < 0) out = out.neg();
    return out;
}

Monomial monomial_lcm(const Monomial& x, const Monomial& y) {
    std::vector<polyring::Factor> fs;
    auto a = x.factors();
    auto b = y.factors();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].var < b[j].var)
            fs.push_back(a[i++]);
        else if (a[i].var > b[j].var)
            fs.push_back(b[j++]);
        else {
            fs.push_back({a[i].var, std::max(a[i].exp, b[j].exp)});
            ++i;
            ++j;
        }
    }
    while (i < a.size()) fs.push_back(a[i++]);
    while (j < b.size()) fs.push_back(b[j++]);
    return Monomial(fs);
}

Poly spoly(const Poly& f, const Poly& g) {
    const Term& lf = lead(f);
    const Term& lg = lead(g);
    Monomial lcm = monomial_lcm(lf.mon, lg.mon);
    Poly left = Poly::term(Rat(Rat(1) / lf.coeff), lcm.divide_by(lf.mon)) * f;
    Poly right = Poly::term(Rat(Rat(1) / lg.coeff), lcm.divide_by(lg.mon)) * g;
    return left - right;
}

Poly reduce_full(Poly p, const std::vector<Poly>& basis) {
    Poly out;
    while (!p.is_zero()) {
        const Term lt = lead(p);
        bool reduced = false;
        for (const Poly& g : basis) {
            if (g.is_zero()) continue;
            const Term& gl = lead(g);
            if (lt.mon.divisible_by(gl.mon)) {
                Rat f = Rat(lt.coeff / gl.coeff);
                p = p - Poly::term(f, lt.mon.divide_by(gl.mon)) * g;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            out = out + Poly::term(lt.coeff, lt.mon);
            p = p - Poly::term(lt.coeff, lt.mon);
        }
    }
    return out;
}

}  // namespace

GroebnerResult buchberger3(const std::vector<Poly>& generators, int max_half_degree) {
    weyl::register_all_variables();
    const VarId vu = weyl::v("u");
    const VarId vv = weyl::v("v");
    const VarId vw = weyl::v("w");

    std::vector<Poly> basis;
    for (const Poly& g : generators) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw std::invalid_argument("buchberger3: inhomogeneous generator");
        for (const Term& t : g.terms())
            for (const auto& f : t.mon.factors())
                if (f.var != vu && f.var != vv && f.var != vw)
                    throw std::invalid_argument("buchberger3: generator outside Q[u, v, w]");
        basis.push_back(make_primitive(g));
    }

    // normal selection: process pairs by ascending lcm degree; the product
    // criterion drops pairs with coprime leading monomials
    std::multimap<int, std::pair<std::size_t, std::size_t>> pairs;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        const Monomial& mi = lead(basis[i]).mon;
        const Monomial& mj = lead(basis[j]).mon;
        Monomial l = monomial_lcm(mi, mj);
        if (l.degree() == mi.degree() + mj.degree()) return;  // coprime leads
        pairs.emplace(l.degree(), std::make_pair(i, j));
    };
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

    while (!pairs.empty()) {
        auto it = pairs.begin();
        auto [i, j] = it->second;
        pairs.erase(it);
        Poly s = reduce_full(spoly(basis[i], basis[j]), basis);
        if (s.is_zero()) continue;
        s = make_primitive(s);
        basis.push_back(s);
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) push_pair(k, basis.size() - 1);
    }

    // minimal, reduced basis
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (lead(basis[i]).mon.divisible_by(lead(basis[j]).mon)) {
                // keep the one with the smaller leading monomial when equal
                if (!(lead(basis[j]).mon == lead(basis[i]).mon) || j < i) redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = make_primitive(reduce_full(minimal[i], others));
    }
    std::sort(minimal.begin(), minimal.end(), [](const Poly& a, const Poly& b) {
        return Monomial::cmp(lead(a).mon, lead(b).mon) < 0;
    });

    GroebnerResult res;
    res.basis = minimal;

    // finiteness: some pure power of each variable must be a leading term
    auto pure_power_of = [&](VarId var) {
        for (const Poly& g : res.basis) {
            const Monomial& lm = lead(g).mon;
            if (lm.factors().size() == 1 && lm.factors()[0].var == var) return true;
        }
        return false;
    };
    res.finite = pure_power_of(vu) && pure_power_of(vv) && pure_power_of(vw);

    res.hilbert.assign(max_half_degree + 1, 0);
    for (int a = 0; a <= max_half_degree; ++a)
        for (int b = 0; a + 6 * b <= max_half_degree; ++b)
            for (int c = 0; a + 6 * b + 10 * c <= max_half_degree; ++c) {
                int d = a + 6 * b + 10 * c;
                std::vector<polyring::Factor> fs;
                if (a) fs.push_back({vu, (std::uint32_t)a});
                if (b) fs.push_back({vv, (std::uint32_t)b});
                if (c) fs.push_back({vw, (std::uint32_t)c});
                std::sort(fs.begin(), fs.end(),
                          [](const polyring::Factor& x, const polyring::Factor& y) {
                              return x.var < y.var;
                          });
                Monomial m(fs);
                bool standard = true;
                for (const Poly& g : res.basis)
                    if (m.divisible_by(lead(g).mon)) {
                        standard = false;
                        break;
                    }
                if (standard) ++res.hilbert[d];
            }
    for (int d = 0; d <= max_half_degree; ++d) {
        res.total_dimension += res.hilbert[d];
        if (res.hilbert[d] > 0) res.top_degree = 2 * d;
    }
    return res;
}

}  // namespace rewrite
