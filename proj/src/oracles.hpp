#pragma once

#include "polyring.hpp"

// Brute-force cross-checks: orbit sums computed by raising every linear
// form to the n-th power in an honest polynomial ring, with dependent
// variables eliminated (t8 = 3t - sum t_i and the tau/t' analogues).
// Deliberately independent of the symmetric-coordinate pipeline they
// validate: no Newton recursion, no generating identities.
namespace oracles {

using polyring::Poly;
using polyring::Substitution;

// sum over the 240 E8 orbit forms, in Q[t1..t7, t]
Poly brute_force_In(int n);
// sum over the 56 chi pair forms, in Q[tau1..tau6, tau] (tau7 eliminated)
Poly brute_force_Jn(int n);
// sum over the 56 x' pair forms, in Q[t1'..t6', t'] (t7' eliminated)
Poly brute_force_Iprime_n(int n);
// sigma_n of the nine xi forms, eliminated t-level
Poly brute_force_d_n(int n);
// xi power sum, eliminated t-level
Poly brute_force_xi_power_sum(int n);

// expansion of symmetric coordinates into the honest eliminated rings,
// used to compare pipeline output with the oracle values
Poly expand_bt(const Poly& p);       // c_i -> sigma_i(t1..t8), t8 eliminated
Poly expand_tau(const Poly& p);      // cb_i -> sigma_i(tau1..tau7), tau7 eliminated
Poly expand_primed(const Poly& p);   // c_i' -> sigma_i(t1'..t7'), t7' eliminated

}  // namespace oracles
