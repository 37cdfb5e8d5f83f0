#pragma once

#include <vector>

#include "polyring.hpp"

// Invariant forms of the Weyl groups acting on H^2(BT;Q), computed in
// symmetric coordinates:
//   I_n  (E8-invariant)  in Q[t, c2..c8],
//   J_n  (C8-invariant)  in Q[tau, cb2..cb7],
//   I'_n (E7-invariant)  in Q[t', c2'..c7'],
// via the elementary-symmetric generating identity, the Newton recursion
// for power sums, and the orbit-sum formulas.  c1-type variables are
// eliminated on entry (c1 = 3t, cb1 = 3tau, c1' = 3t').
namespace invariants {

using polyring::Poly;
using polyring::Substitution;

// sigma_n of the nine xi-forms in (t, c)-coordinates; zero for n > 9.
Poly compute_d_n(int n);
// Same coefficients derived from the product generating identity, used as
// a second route in tests.
std::vector<Poly> d_from_generating_identity();  // index 0..9

// xi power sums s_0..s_N (s_0 = 9, s_1 = 0).
std::vector<Poly> xi_power_sums(int N);
// Newton recursion used directly: s_n from elementary symmetric inputs.
std::vector<Poly> newton_power_sums(const std::vector<Poly>& elem, int s0, int N);

// Orbit sums.  Odd n gives the zero polynomial (the sets are closed under
// negation); I_0 = 240, J_0 = |Sigma| = 56, I'_0 = |S'| = 56.
Poly compute_I_n(int n);
Poly compute_J_n(int n);
Poly compute_Iprime_n(int n);

// cached accessors (computation at n = 30 is expensive)
const Poly& I(int n);
const Poly& J(int n);
const Poly& Iprime(int n);

// chi / x' power sums in their symmetric coordinates (s_0 = 8).
std::vector<Poly> chi_power_sums(int N);
std::vector<Poly> xprime_power_sums(int N);

// J_n and I'_n share one expression; renames (tau, cb) -> (t', c').
Substitution tau_alphabet_to_primed();

// cb_n -> polynomial in (t, u, c2..c7), tau -> t - 3/2 u.
Substitution barc_to_c();
// inverse direction: c_n -> polynomial in (tau, u, cb2..cb7), t -> tau + 3/2 u.
Substitution c_to_barc();
// c_n -> ct_n + u ct_{n-1} and its inverse ct_n -> sum (-u)^k c_{n-k}.
Substitution c_to_ctilde();
Substitution ctilde_to_c();
// embeds Q[t, c2..c8] into A = Q[u, t, c2..c7] via the c8 identity.
Substitution a_ring_embed();
Poly to_a_ring(const Poly& p);

// the degree-12 and degree-20 generators as exact elements of A
const Poly& v_in_a();
const Poly& w_in_a();

// relation polynomials of the rational quotient ring, in Q[u, v, w]
Poly itilde(int n);  // n in {20, 24, 30}

}  // namespace invariants
