#include "invariants.hpp"

#include <map>
#include <mutex>

#include "weyl.hpp"

namespace invariants {

using exactmath::Int;
using exactmath::Rat;
using exactmath::binomial;
using exactmath::factorial;
using exactmath::ipow;
using exactmath::rat;
using polyring::parse_poly;
using polyring::pvar;

namespace {

Poly c_of(int i) {
    // c_0 = 1 and c_1 = 3t by the presentation of H*(BT)
    if (i == 0) return Poly::constant(Rat(1));
    if (i == 1) return rat(3, 1) * pvar("t");
    return pvar("c" + std::to_string(i));
}

Poly cb_of(int i) {
    if (i == 0) return Poly::constant(Rat(1));
    if (i == 1) return rat(3, 1) * pvar("tau");
    return pvar("cb" + std::to_string(i));
}

Poly cp_of(int i) {
    if (i == 0) return Poly::constant(Rat(1));
    if (i == 1) return rat(3, 1) * pvar("t'");
    return pvar("c" + std::to_string(i) + "'");
}

}  // namespace

Poly compute_d_n(int n) {
    weyl::register_all_variables();
    if (n < 0) throw std::invalid_argument("compute_d_n: negative n");
    if (n == 0) return Poly::constant(Rat(1));
    if (n > 9) return Poly::zero();
    Poly d;
    Poly mt = rat(-2, 3) * pvar("t");
    for (int i = 0; i <= n && i <= 8; ++i) {
        Int coeff = binomial(8 - i, n - i);
        if (n - i - 1 >= 0) coeff += binomial(8 - i, n - i - 1);
        if (coeff == 0) continue;
        d = d + (Rat(coeff) * ipow(Int(2), i)) * (mt.pow(n - i) * c_of(i));
    }
    return d;
}

std::vector<Poly> d_from_generating_identity() {
    weyl::register_all_variables();
    // prod_{i=1..9} (1 + x xi_i) = (1 - (2/3)t x) sum_i (1 - (2/3)t x)^{8-i} (2x)^i c_i
    Poly mt = rat(-2, 3) * pvar("t");
    std::vector<Poly> coeff(10);  // of x^0 .. x^9
    for (int i = 0; i <= 8; ++i) {
        // (1 + mt x)^{9-i} contributes x^k terms C(9-i, k) mt^k
        for (int k = 0; 9 - i >= k; ++k) {
            int pos = i + k;
            if (pos > 9) continue;
            Poly add = Rat(binomial(9 - i, k)) * mt.pow(k) * (Rat(ipow(Int(2), i)) * c_of(i));
            coeff[pos] = coeff[pos] + add;
        }
    }
    return coeff;
}

std::vector<Poly> newton_power_sums(const std::vector<Poly>& elem, int s0, int N) {
    std::vector<Poly> s(N + 1);
    s[0] = Poly::constant(Rat(s0));
    auto d = [&elem](int i) { return i < (int)elem.size() ? elem[i] : Poly::zero(); };
    for (int n = 1; n <= N; ++n) {
        Poly sn;
        for (int i = 1; i <= n - 1; ++i) {
            if (d(i).is_zero() || s[n - i].is_zero()) continue;
            Poly term = s[n - i] * d(i);
            sn = (i % 2 == 1) ? sn + term : sn - term;
        }
        Poly last = Rat(n) * d(n);
        sn = (n % 2 == 1) ? sn + last : sn - last;
        s[n] = sn;
    }
    return s;
}

namespace {

std::mutex g_xi_mutex;

const std::vector<Poly>& xi_power_sums_cached(int N) {
    static std::vector<Poly> cache;
    std::lock_guard<std::mutex> lock(g_xi_mutex);
    if ((int)cache.size() < N + 1) {
        std::vector<Poly> elem(10);
        elem[0] = Poly::constant(Rat(1));
        for (int n = 1; n <= 9; ++n) elem[n] = compute_d_n(n);
        cache = newton_power_sums(elem, 9, std::max(N, 30));
    }
    return cache;
}

std::vector<Poly> family_power_sums(const std::vector<Poly>& elem, int s0, int N) {
    return newton_power_sums(elem, s0, N);
}

// sigma_n of the eight chi-forms (resp. x'-forms) from
// (1 + h x) sum_{i<=7} (1 - h x)^{7-i} (2x)^i e_i, h = tau or t'.
std::vector<Poly> pair_family_elementary(const Poly& h, const std::vector<Poly>& e) {
    std::vector<Poly> coeff(9);
    Poly mh = h.neg();
    for (int i = 0; i <= 7; ++i) {
        for (int k = 0; 8 - i >= k; ++k) {
            int pos = i + k;
            if (pos > 8) continue;
            // expansion of (1 + hx)(1 - hx)^{7-i}: x^k coefficient is
            // C(7-i,k) (-h)^k + h C(7-i,k-1) (-h)^{k-1}
            Poly xk = Rat(binomial(7 - i, k)) * mh.pow(k);
            if (k >= 1) xk = xk + h * (Rat(binomial(7 - i, k - 1)) * mh.pow(k - 1));
            if (xk.is_zero()) continue;
            coeff[pos] = coeff[pos] + xk * (Rat(ipow(Int(2), i)) * e[i]);
        }
    }
    return coeff;
}

// orbit sum over all pair sums +-(y_i + y_j), i < j, from power sums q
Poly pair_orbit_sum(const std::vector<Poly>& q, int n) {
    if (n % 2 != 0) return Poly::zero();
    // sum_k C(n,k) q_k q_{n-k}  -  2^n q_n
    Poly total;
    for (int k = 0; k <= n; ++k) {
        if (q[k].is_zero() || q[n - k].is_zero()) continue;
        total = total + Rat(binomial(n, k)) * (q[k] * q[n - k]);
    }
    total = total - Rat(ipow(Int(2), n)) * q[n];
    return total;
}

}  // namespace

std::vector<Poly> xi_power_sums(int N) {
    auto& c = xi_power_sums_cached(N);
    return std::vector<Poly>(c.begin(), c.begin() + N + 1);
}

std::vector<Poly> chi_power_sums(int N) {
    weyl::register_all_variables();
    std::vector<Poly> e(8);
    for (int i = 0; i <= 7; ++i) e[i] = cb_of(i);
    auto elem = pair_family_elementary(pvar("tau"), e);
    return family_power_sums(elem, 8, N);
}

std::vector<Poly> xprime_power_sums(int N) {
    weyl::register_all_variables();
    std::vector<Poly> e(8);
    for (int i = 0; i <= 7; ++i) e[i] = cp_of(i);
    auto elem = pair_family_elementary(pvar("t'"), e);
    return family_power_sums(elem, 8, N);
}

Poly compute_I_n(int n) {
    weyl::register_all_variables();
    if (n == 0) return Poly::constant(Rat(240));
    if (n % 2 != 0) return Poly::zero();
    const auto& s = xi_power_sums_cached(n);
    // exponential coefficients E_k = s_k / k!
    std::vector<Poly> E(n + 1);
    for (int k = 0; k <= n; ++k) {
        Rat inv_fact = rat(Int(1), factorial(k));
        E[k] = inv_fact * s[k];
    }

    // sum_i C(n,i) (-1)^{n-i} s_i s_{n-i}
    Poly pm;
    for (int i = 0; i <= n; ++i) {
        if (E[i].is_zero() || E[n - i].is_zero()) continue;
        Poly prod = E[i] * E[n - i];
        pm = ((n - i) % 2 == 0) ? pm + prod : pm - prod;
    }
    // sum_i C(n,i) 2^{n-i} s_i s_{n-i}
    Poly p2;
    for (int i = 0; i <= n; ++i) {
        if (E[i].is_zero() || E[n - i].is_zero()) continue;
        p2 = p2 + Rat(ipow(Int(2), n - i)) * (E[i] * E[n - i]);
    }
    // triple convolution sum_{a+b+c=n} s_a s_b s_c / (a! b! c!)
    std::vector<Poly> Q(n + 1);
    for (int k = 0; k <= n; ++k) {
        Poly qk;
        for (int i = 0; i <= k; ++i) {
            if (E[i].is_zero() || E[k - i].is_zero()) continue;
            qk = qk + E[i] * E[k - i];
        }
        Q[k] = qk;
    }
    Poly triple;
    for (int k = 0; k <= n; ++k) {
        if (Q[k].is_zero() || E[n - k].is_zero()) continue;
        triple = triple + Q[k] * E[n - k];
    }

    Rat nfact = Rat(factorial(n));
    Rat two_pow3 = Rat(Int(2) * ipow(Int(3), n - 1));
    Rat third_nfact = Rat(rat(1, 3) * nfact);
    return nfact * pm + two_pow3 * s[n] - nfact * p2 + third_nfact * triple;
}

Poly compute_J_n(int n) {
    if (n == 0) return Poly::constant(Rat(56));
    if (n % 2 != 0) return Poly::zero();
    return pair_orbit_sum(chi_power_sums(n), n);
}

Poly compute_Iprime_n(int n) {
    if (n == 0) return Poly::constant(Rat(56));
    if (n % 2 != 0) return Poly::zero();
    return pair_orbit_sum(xprime_power_sums(n), n);
}

namespace {

std::mutex g_orbit_cache_mutex;

// compute outside the lock; map references are stable under insertion
const Poly& cached(std::map<int, Poly>& cache, int n, Poly (*compute)(int)) {
    {
        std::lock_guard<std::mutex> lock(g_orbit_cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    Poly value = compute(n);
    std::lock_guard<std::mutex> lock(g_orbit_cache_mutex);
    return cache.emplace(n, std::move(value)).first->second;
}

}  // namespace

const Poly& I(int n) {
    static std::map<int, Poly> cache;
    return cached(cache, n, &compute_I_n);
}

const Poly& J(int n) {
    static std::map<int, Poly> cache;
    return cached(cache, n, &compute_J_n);
}

const Poly& Iprime(int n) {
    static std::map<int, Poly> cache;
    return cached(cache, n, &compute_Iprime_n);
}

Substitution tau_alphabet_to_primed() {
    weyl::register_all_variables();
    Substitution s;
    s.set(weyl::v("tau"), pvar("t'"));
    for (int i = 2; i <= 7; ++i)
        s.set(weyl::v("cb" + std::to_string(i)), pvar("c" + std::to_string(i) + "'"));
    return s;
}

Substitution barc_to_c() {
    weyl::register_all_variables();
    // cb_n + (1/2) u cb_{n-1} = sum_i C(8-i, n-i) (-1/2)^{n-i} c_i u^{n-i}
    Poly u = pvar("u");
    std::vector<Poly> cb(8);
    cb[0] = Poly::constant(Rat(1));
    for (int n = 1; n <= 7; ++n) {
        Poly rhs;
        for (int i = 0; i <= n; ++i) {
            Int b = binomial(8 - i, n - i);
            if (b == 0) continue;
            Rat f = Rat(b) * exactmath::qpow(rat(-1, 2), n - i);
            rhs = rhs + f * (c_of(i) * u.pow(n - i));
        }
        cb[n] = rhs - rat(1, 2) * (u * cb[n - 1]);
    }
    Substitution s;
    s.set(weyl::v("tau"), parse_poly("t - 3/2*u"));
    for (int n = 2; n <= 7; ++n) s.set(weyl::v("cb" + std::to_string(n)), cb[n]);
    return s;
}

Substitution c_to_barc() {
    weyl::register_all_variables();
    // prod (1 + x t_i) = (1 + xu) sum_i (1 + xu/2)^{7-i} x^i cb_i
    Poly u = pvar("u");
    Poly half_u = rat(1, 2) * u;
    Substitution s;
    for (int n = 2; n <= 8; ++n) {
        Poly rhs;
        for (int i = 0; i <= n && i <= 7; ++i) {
            Poly part = Rat(binomial(7 - i, n - i)) * half_u.pow(n - i);
            if (n - 1 - i >= 0) part = part + u * (Rat(binomial(7 - i, n - 1 - i)) * half_u.pow(n - 1 - i));
            if (part.is_zero()) continue;
            rhs = rhs + part * cb_of(i);
        }
        s.set(weyl::v("c" + std::to_string(n)), rhs);
    }
    s.set(weyl::v("t"), parse_poly("tau + 3/2*u"));
    return s;
}

Substitution c_to_ctilde() {
    weyl::register_all_variables();
    Substitution s;
    auto ct = [](int i) -> Poly {
        if (i == 0) return Poly::constant(Rat(1));
        return pvar("ct" + std::to_string(i));
    };
    Poly u = pvar("u");
    for (int n = 2; n <= 8; ++n) {
        Poly rhs = (n <= 7 ? ct(n) : Poly::zero()) + u * ct(n - 1);
        s.set(weyl::v("c" + std::to_string(n)), rhs);
    }
    return s;
}

Substitution ctilde_to_c() {
    weyl::register_all_variables();
    Substitution s;
    Poly u = pvar("u");
    for (int n = 1; n <= 7; ++n) {
        Poly rhs;
        for (int k = 0; k <= n; ++k) {
            Poly term = c_of(n - k) * u.pow(k);
            rhs = (k % 2 == 0) ? rhs + term : rhs - term;
        }
        s.set(weyl::v("ct" + std::to_string(n)), rhs);
    }
    return s;
}

Substitution a_ring_embed() {
    weyl::register_all_variables();
    Substitution s;
    s.set(weyl::v("c8"),
          parse_poly("u*c7 - u^2*c6 + u^3*c5 - u^4*c4 + u^5*c3 - u^6*c2 + 3*t*u^7 - u^8"));
    return s;
}

Poly to_a_ring(const Poly& p) { return a_ring_embed().apply(p); }

const Poly& v_in_a() {
    static Poly v_poly = [] {
        Poly j6 = barc_to_c().apply(J(6));
        return rat(1, 46080) * j6 - rat(273, 640) * pvar("u").pow(6);
    }();
    return v_poly;
}

const Poly& w_in_a() {
    static Poly w_poly = [] {
        Poly j10 = barc_to_c().apply(J(10));
        return rat(1, 15482880) * j10 - rat(55, 24) * (pvar("u").pow(4) * v_in_a()) -
               rat(666919, 645120) * pvar("u").pow(10);
    }();
    return w_poly;
}

Poly itilde(int n) {
    weyl::register_all_variables();
    switch (n) {
        case 20:
            return parse_poly(
                "9*u^20 + 45*u^14*v + 12*u^10*w + 60*u^8*v^2 + 30*u^4*v*w + 10*u^2*v^3 + 3*w^2");
        case 24:
            return parse_poly(
                "11*u^24 + 60*u^18*v + 21*u^14*w + 105*u^12*v^2 + 60*u^8*v*w + 60*u^6*v^3 "
                "+ 9*u^4*w^2 + 30*u^2*v^2*w + 5*v^4");
        case 30:
            return parse_poly(
                "-9*u^30 - 24*u^24*v - 12*u^20*w + 36*u^14*v*w - 40*u^12*v^3 - 12*u^10*w^2 "
                "+ 120*u^8*v^2*w - 140*u^6*v^4 + 24*u^4*v*w^2 - 40*u^2*v^3*w - 16*v^5 - 8*w^3");
        default:
            throw std::invalid_argument("itilde: n must be 20, 24 or 30");
    }
}

}  // namespace invariants
