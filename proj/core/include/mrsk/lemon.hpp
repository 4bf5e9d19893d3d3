#pragma once

#include <vector>

#include "mrsk/path_env.hpp"

namespace mrsk {

struct LemonResult {
  // M f restricted to the certified prefix (the final probe, unrestricted,
  // when no prefix could be certified).
  PathEnv env;
  // Largest grid time s such that the last two probes agree on [0, s];
  // zero when none do. When they agree on the whole comparable window the
  // sequence has converged and the full final horizon is certified.
  Rational stable_prefix;
  std::vector<Rational> probe_horizons;
};

// Finite-horizon lemon M_t f = R_t W R_t f; requires t = env.horizon.
PathEnv lemon_t(const PathEnv& env, const Rational& t);

// Sum of the bottom k lines' left limits at x (the quantity the lemon
// identities control).
Rational bottom_sum(const PathEnv& env, int k, const Rational& x);

// Stabilized lemon: runs M_t on a geometric schedule of prefix horizons
// (T/4, T/2, T by default), certifies the largest prefix on which the last
// two probes agree, and asserts the probe monotonicity invariants.
LemonResult lemon(const PathEnv& env);
LemonResult lemon(const PathEnv& env, std::vector<Rational> probes);

// Largest value of (f_{j+1} - f_j)^+ over the horizon, for j = 1..n-1.
std::vector<Rational> sourness_score(const PathEnv& env);

// Checks M(Wf) = Mf and W(Mf) = Wf at the data horizon (the maximal
// certified prefix); both identities are exact there.
bool check_inversion(const PathEnv& env);

}  // namespace mrsk
