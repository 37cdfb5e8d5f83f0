#include "polyring.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace polyring {

namespace {
std::mutex g_vartable_mutex;
}

VarTable& VarTable::instance() {
    static VarTable table;
    return table;
}

VarId VarTable::intern(const std::string& name, int degree) {
    std::lock_guard<std::mutex> lock(g_vartable_mutex);
    auto it = by_name_.find(name);
    if (it != by_name_.end()) {
        if (vars_[it->second].degree != degree)
            throw std::invalid_argument("variable '" + name + "' re-registered with degree " +
                                        std::to_string(degree) + " != " +
                                        std::to_string(vars_[it->second].degree));
        return it->second;
    }
    if (degree <= 0 || degree % 2 != 0)
        throw std::invalid_argument("variable '" + name + "': degree must be positive and even");
    VarId id = static_cast<VarId>(vars_.size());
    vars_.push_back({name, degree});
    by_name_.emplace(name, id);
    return id;
}

std::optional<VarId> VarTable::lookup(const std::string& name) const {
    std::lock_guard<std::mutex> lock(g_vartable_mutex);
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

const VarInfo& VarTable::info(VarId v) const {
    std::lock_guard<std::mutex> lock(g_vartable_mutex);
    return vars_.at(v);
}

std::size_t VarTable::size() const {
    std::lock_guard<std::mutex> lock(g_vartable_mutex);
    return vars_.size();
}

// ---------------------------------------------------------------------------

Monomial::Monomial(std::vector<Factor> sorted_factors) : f_(std::move(sorted_factors)) {
    for (std::size_t i = 0; i < f_.size(); ++i) {
        if (f_[i].exp == 0) throw std::invalid_argument("Monomial: zero exponent");
        if (i > 0 && f_[i - 1].var >= f_[i].var)
            throw std::invalid_argument("Monomial: factors not strictly sorted");
    }
}

Monomial Monomial::of(VarId v, std::uint32_t e) {
    if (e == 0) return Monomial();
    return Monomial({{v, e}});
}

int Monomial::degree() const {
    int d = 0;
    auto& tbl = VarTable::instance();
    for (const Factor& f : f_) d += tbl.info(f.var).degree * static_cast<int>(f.exp);
    return d;
}

std::uint32_t Monomial::exp_of(VarId v) const {
    for (const Factor& f : f_)
        if (f.var == v) return f.exp;
    return 0;
}

Monomial Monomial::times(const Monomial& o) const {
    std::vector<Factor> out;
    out.reserve(f_.size() + o.f_.size());
    std::size_t i = 0, j = 0;
    while (i < f_.size() && j < o.f_.size()) {
        if (f_[i].var < o.f_[j].var)
            out.push_back(f_[i++]);
        else if (f_[i].var > o.f_[j].var)
            out.push_back(o.f_[j++]);
        else {
            out.push_back({f_[i].var, f_[i].exp + o.f_[j].exp});
            ++i;
            ++j;
        }
    }
    while (i < f_.size()) out.push_back(f_[i++]);
    while (j < o.f_.size()) out.push_back(o.f_[j++]);
    Monomial m;
    m.f_ = std::move(out);
    return m;
}

bool Monomial::divisible_by(const Monomial& o) const {
    std::size_t i = 0;
    for (const Factor& g : o.f_) {
        while (i < f_.size() && f_[i].var < g.var) ++i;
        if (i == f_.size() || f_[i].var != g.var || f_[i].exp < g.exp) return false;
    }
    return true;
}

Monomial Monomial::divide_by(const Monomial& o) const {
    std::vector<Factor> out;
    std::size_t i = 0;
    for (const Factor& g : o.f_) {
        while (i < f_.size() && f_[i].var < g.var) out.push_back(f_[i++]);
        if (i == f_.size() || f_[i].var != g.var || f_[i].exp < g.exp)
            throw std::invalid_argument("Monomial::divide_by: not divisible");
        if (f_[i].exp > g.exp) out.push_back({g.var, f_[i].exp - g.exp});
        ++i;
    }
    while (i < f_.size()) out.push_back(f_[i++]);
    Monomial m;
    m.f_ = std::move(out);
    return m;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // tie-break: lexicographic on the sorted factor vectors
    std::size_t n = std::min(a.f_.size(), b.f_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.f_[i].var != b.f_[i].var) return a.f_[i].var < b.f_[i].var ? -1 : 1;
        if (a.f_[i].exp != b.f_[i].exp) return a.f_[i].exp < b.f_[i].exp ? -1 : 1;
    }
    if (a.f_.size() != b.f_.size()) return a.f_.size() < b.f_.size() ? -1 : 1;
    return 0;
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ull;  // FNV-1a
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    for (const Factor& f : f_) {
        mix(f.var);
        mix(f.exp);
    }
    return h;
}

// ---------------------------------------------------------------------------

Poly Poly::constant(const Rat& c) {
    Poly p;
    if (c != 0) p.t_.push_back({Monomial::unit(), c});
    return p;
}

Poly Poly::variable(VarId v) {
    Poly p;
    p.t_.push_back({Monomial::of(v), Rat(1)});
    return p;
}

Poly Poly::term(const Rat& c, const Monomial& m) {
    Poly p;
    if (c != 0) p.t_.push_back({m, c});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return Monomial::cmp(a.mon, b.mon) < 0; });
    Poly p;
    for (Term& t : terms) {
        if (!p.t_.empty() && Monomial::cmp(p.t_.back().mon, t.mon) == 0) {
            p.t_.back().coeff += t.coeff;
            if (p.t_.back().coeff == 0) p.t_.pop_back();
        } else if (t.coeff != 0) {
            p.t_.push_back(std::move(t));
        }
    }
    return p;
}

bool Poly::operator==(const Poly& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
        if (t_[i].coeff != o.t_[i].coeff || !(t_[i].mon == o.t_[i].mon)) return false;
    return true;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly out;
    out.t_.reserve(a.t_.size() + b.t_.size());
    std::size_t i = 0, j = 0;
    while (i < a.t_.size() && j < b.t_.size()) {
        int c = Monomial::cmp(a.t_[i].mon, b.t_[j].mon);
        if (c < 0)
            out.t_.push_back(a.t_[i++]);
        else if (c > 0)
            out.t_.push_back(b.t_[j++]);
        else {
            Rat s = a.t_[i].coeff + b.t_[j].coeff;
            if (s != 0) out.t_.push_back({a.t_[i].mon, std::move(s)});
            ++i;
            ++j;
        }
    }
    while (i < a.t_.size()) out.t_.push_back(a.t_[i++]);
    while (j < b.t_.size()) out.t_.push_back(b.t_[j++]);
    return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + b.neg(); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::unordered_map<Monomial, Rat, MonomialHash> acc;
    acc.reserve(a.t_.size() * 2);
    for (const Term& ta : a.t_)
        for (const Term& tb : b.t_) {
            Monomial m = ta.mon.times(tb.mon);
            acc[std::move(m)] += ta.coeff * tb.coeff;
        }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) terms.push_back({m, std::move(c)});
    return Poly::from_terms(std::move(terms));
}

Poly Poly::neg() const {
    Poly p = *this;
    for (Term& t : p.t_) t.coeff = -t.coeff;
    return p;
}

Poly Poly::scale(const Rat& c) const {
    if (c == 0) return Poly();
    Poly p = *this;
    for (Term& t : p.t_) t.coeff *= c;
    return p;
}

Poly Poly::pow(unsigned e) const {
    Poly result = Poly::constant(Rat(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

bool Poly::is_homogeneous() const {
    if (t_.empty()) return true;
    int d = t_.front().mon.degree();
    for (const Term& t : t_)
        if (t.mon.degree() != d) return false;
    return true;
}

int Poly::degree() const {
    int d = -1;
    for (const Term& t : t_) d = std::max(d, t.mon.degree());
    return d;
}

int Poly::homogeneous_degree() const {
    if (t_.empty() || !is_homogeneous())
        throw std::logic_error("homogeneous_degree: polynomial not homogeneous nonzero");
    return t_.front().mon.degree();
}

Poly Poly::graded_component(int degree) const {
    Poly p;
    for (const Term& t : t_)
        if (t.mon.degree() == degree) p.t_.push_back(t);
    return p;
}

Rat Poly::coeff_of(const Monomial& m) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), m, [](const Term& t, const Monomial& mm) {
        return Monomial::cmp(t.mon, mm) < 0;
    });
    if (it != t_.end() && Monomial::cmp(it->mon, m) == 0) return it->coeff;
    return Rat(0);
}

bool Poly::integer_coeffs() const {
    for (const Term& t : t_)
        if (!exactmath::is_integer(t.coeff)) return false;
    return true;
}

Int Poly::content() const {
    if (!integer_coeffs()) throw std::logic_error("content: non-integer coefficients");
    Int g = 0;
    for (const Term& t : t_) {
        Int c = t.coeff.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    return g;
}

Poly Poly::reduce_mod_p(long p) const {
    std::vector<Term> out;
    for (const Term& t : t_) {
        long den = exactmath::mod_p(Int(t.coeff.get_den()), p);
        if (den == 0)
            throw std::domain_error("reduce_mod_p: denominator divisible by " + std::to_string(p));
        long num = exactmath::mod_p(Int(t.coeff.get_num()), p);
        long r = num * exactmath::inv_mod_p(den, p) % p;
        if (r != 0) out.push_back({t.mon, Rat(r)});
    }
    return Poly::from_terms(std::move(out));
}

Rat Poly::evaluate(const std::map<VarId, Rat>& point) const {
    Rat total(0);
    for (const Term& t : t_) {
        Rat v = t.coeff;
        for (const Factor& f : t.mon.factors()) {
            auto it = point.find(f.var);
            if (it == point.end()) throw std::invalid_argument("evaluate: unbound variable");
            v *= exactmath::qpow(it->second, f.exp);
        }
        total += v;
    }
    return total;
}

std::string Poly::str() const { return to_text(*this); }

Poly pvar(const std::string& name) {
    auto v = VarTable::instance().lookup(name);
    if (!v) throw std::invalid_argument("pvar: unknown variable '" + name + "'");
    return Poly::variable(*v);
}

// ---------------------------------------------------------------------------

void Substitution::set(VarId v, Poly image) {
    const VarInfo& info = VarTable::instance().info(v);
    if (!image.is_zero()) {
        if (!image.is_homogeneous() || image.homogeneous_degree() != info.degree)
            throw std::invalid_argument("Substitution: image of '" + info.name +
                                        "' is not homogeneous of degree " +
                                        std::to_string(info.degree));
    }
    map_[v] = std::move(image);
}

bool Substitution::has(VarId v) const { return map_.count(v) != 0; }

const Poly& Substitution::image(VarId v) const {
    auto it = map_.find(v);
    if (it == map_.end()) throw std::invalid_argument("Substitution: variable not in domain");
    return it->second;
}

Poly Substitution::apply(const Poly& p) const {
    // memoize images of powers within one application
    std::map<std::pair<VarId, std::uint32_t>, Poly> powers;
    std::vector<Term> out;
    for (const Term& t : p.terms()) {
        Poly prod = Poly::constant(t.coeff);
        for (const Factor& f : t.mon.factors()) {
            auto it = map_.find(f.var);
            if (it == map_.end()) {
                prod = prod * Poly::term(Rat(1), Monomial::of(f.var, f.exp));
                continue;
            }
            auto key = std::make_pair(f.var, f.exp);
            auto pit = powers.find(key);
            if (pit == powers.end()) pit = powers.emplace(key, it->second.pow(f.exp)).first;
            prod = prod * pit->second;
        }
        for (const Term& u : prod.terms()) out.push_back(u);
    }
    return Poly::from_terms(std::move(out));
}

Substitution Substitution::after(const Substitution& other) const {
    Substitution composed;
    for (const auto& [v, img] : other.map_) composed.map_[v] = apply(img);
    for (const auto& [v, img] : map_)
        if (!composed.map_.count(v)) composed.map_[v] = img;
    return composed;
}

// ---------------------------------------------------------------------------

namespace {

// factor printing order: ascending topological degree, then name
std::vector<Factor> print_order(const Monomial& m) {
    std::vector<Factor> fs = m.factors();
    auto& tbl = VarTable::instance();
    std::stable_sort(fs.begin(), fs.end(), [&tbl](const Factor& a, const Factor& b) {
        const VarInfo& ia = tbl.info(a.var);
        const VarInfo& ib = tbl.info(b.var);
        if (ia.degree != ib.degree) return ia.degree < ib.degree;
        return ia.name < ib.name;
    });
    return fs;
}

}  // namespace

std::string to_text(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest-degree terms last to match the familiar "ascending" layout
    for (const Term& t : p.terms()) {
        Rat c = t.coeff;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        Rat a = neg ? Rat(-c) : c;
        bool unit_coeff = (a == 1) && !t.mon.is_unit();
        if (!unit_coeff) os << exactmath::to_string(a);
        auto fs = print_order(t.mon);
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (!unit_coeff || i > 0) os << "*";
            os << VarTable::instance().info(fs[i].var).name;
            if (fs[i].exp != 1) os << "^" << fs[i].exp;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
    bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
    bool is_name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    }

    std::string read_uint() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw std::invalid_argument("parse_poly: expected number at '" + s.substr(start, 12) + "'");
        return s.substr(start, i - start);
    }

    std::string read_name() {
        skip_ws();
        std::size_t start = i;
        if (i >= s.size() || !is_name_start(s[i]))
            throw std::invalid_argument("parse_poly: expected variable at '" + s.substr(start, 12) + "'");
        ++i;
        while (i < s.size() && is_name_char(s[i])) ++i;
        return s.substr(start, i - start);
    }

    Term read_term() {
        skip_ws();
        Rat coeff(1);
        bool saw_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::string num = read_uint();
            std::string den = "1";
            skip_ws();
            if (i < s.size() && s[i] == '/') {
                ++i;
                den = read_uint();
            }
            coeff = exactmath::rat(Int(num), Int(den));
            saw_coeff = true;
        }
        std::vector<Factor> fs;
        bool expect_factor = !saw_coeff;
        while (true) {
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                expect_factor = true;
                continue;
            }
            if (i < s.size() && is_name_start(s[i])) {
                std::string name = read_name();
                auto v = VarTable::instance().lookup(name);
                if (!v) throw std::invalid_argument("parse_poly: unknown variable '" + name + "'");
                std::uint32_t e = 1;
                skip_ws();
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    e = static_cast<std::uint32_t>(std::stoul(read_uint()));
                }
                fs.push_back({*v, e});
                expect_factor = false;
                continue;
            }
            break;
        }
        if (expect_factor) throw std::invalid_argument("parse_poly: dangling '*'");
        std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) { return a.var < b.var; });
        // merge repeated variables
        std::vector<Factor> merged;
        for (const Factor& f : fs) {
            if (!merged.empty() && merged.back().var == f.var)
                merged.back().exp += f.exp;
            else
                merged.push_back(f);
        }
        return {Monomial(std::move(merged)), coeff};
    }
};

}  // namespace

namespace {

// recursive-descent parser for the extended syntax
struct ExprParser {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool at(char c) {
        skip_ws();
        return i < s.size() && s[i] == c;
    }
    bool eat(char c) {
        if (!at(c)) return false;
        ++i;
        return true;
    }

    Poly parse_expression() {
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly acc = parse_term();
        if (neg) acc = acc.neg();
        while (true) {
            skip_ws();
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                break;
        }
        return acc;
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (true) {
            skip_ws();
            if (eat('*'))
                acc = acc * parse_factor();
            else
                break;
        }
        return acc;
    }

    Poly parse_factor() {
        Poly base = parse_base();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == start) throw std::invalid_argument("parse_expr: expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(s.substr(start, i - start))));
        }
        return base;
    }

    Poly parse_base() {
        skip_ws();
        if (i >= s.size()) throw std::invalid_argument("parse_expr: unexpected end");
        if (eat('(')) {
            Poly inner = parse_expression();
            if (!eat(')')) throw std::invalid_argument("parse_expr: missing ')'");
            return inner;
        }
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            std::string num = s.substr(start, i - start);
            skip_ws();
            if (i < s.size() && s[i] == '/') {
                // lookahead: denominators are plain integers
                std::size_t save = i;
                ++i;
                skip_ws();
                std::size_t dstart = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == dstart) {
                    i = save;
                    return Poly::constant(Rat(Int(num)));
                }
                return Poly::constant(exactmath::rat(Int(num), Int(s.substr(dstart, i - dstart))));
            }
            return Poly::constant(Rat(Int(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            ++i;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' ||
                                    s[i] == '\''))
                ++i;
            std::string name = s.substr(start, i - start);
            auto v = VarTable::instance().lookup(name);
            if (!v) throw std::invalid_argument("parse_expr: unknown variable '" + name + "'");
            return Poly::variable(*v);
        }
        throw std::invalid_argument("parse_expr: unexpected character '" + std::string(1, c) + "'");
    }
};

}  // namespace

Poly parse_expr(const std::string& text) {
    ExprParser p{text};
    Poly result = p.parse_expression();
    p.skip_ws();
    if (p.i != text.size())
        throw std::invalid_argument("parse_expr: trailing input at '" + text.substr(p.i, 16) + "'");
    return result;
}

Poly parse_poly(const std::string& text) {
    Parser p{text};
    std::vector<Term> terms;
    if (p.eof()) throw std::invalid_argument("parse_poly: empty input");
    bool neg = false;
    if (p.peek() == '-') {
        neg = true;
        ++p.i;
    } else if (p.peek() == '+') {
        ++p.i;
    }
    while (true) {
        Term t = p.read_term();
        if (neg) t.coeff = -t.coeff;
        terms.push_back(std::move(t));
        if (p.eof()) break;
        char c = p.peek();
        if (c == '+')
            neg = false;
        else if (c == '-')
            neg = true;
        else
            throw std::invalid_argument("parse_poly: unexpected character '" + std::string(1, c) + "'");
        ++p.i;
    }
    return Poly::from_terms(std::move(terms));
}

}  // namespace polyring
