#include "mrsk/lemon.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "mrsk/errors.hpp"
#include "mrsk/melon.hpp"

namespace mrsk {

namespace {

// Largest grid time s in (0, min horizon] with matching restrictions.
Rational agreement_prefix(const PathEnv& a, const PathEnv& b) {
  Rational cap = rat_min(a.horizon(), b.horizon());
  std::set<Rational, std::greater<Rational>> times;
  for (const Rational& t : a.grid()) {
    if (t > 0 && t <= cap) times.insert(t);
  }
  for (const Rational& t : b.grid()) {
    if (t > 0 && t <= cap) times.insert(t);
  }
  for (const Rational& s : times) {
    if (restrict_env(a, s) == restrict_env(b, s)) return s;
  }
  return Rational(0);
}

void assert_probe_monotone(const PathEnv& base, const PathEnv& coarse, const PathEnv& fine) {
  // coarse = M at the smaller horizon t, fine = M at the larger horizon t'.
  std::vector<Rational> grid = merge_sorted_times(coarse.grid(), fine.grid());
  int n = base.n();
  for (const Rational& x : grid) {
    for (int k = 1; k <= n; ++k) {
      Rational lo = bottom_sum(base, k, x);
      Rational at_tp = bottom_sum(fine, k, x);
      bool bad = at_tp < lo;
      if (x <= coarse.horizon()) {
        Rational at_t = bottom_sum(coarse, k, x);
        bad = bad || at_tp > at_t || at_t < lo;
      }
      if (bad) {
        fail(errkind::InvariantViolation,
             "probe monotonicity failed at x=" + rat_to_string(x) + ", k=" + std::to_string(k));
      }
    }
  }
}

}  // namespace

PathEnv lemon_t(const PathEnv& env, const Rational& t) {
  if (t != env.horizon()) {
    fail(errkind::HorizonMismatch, "lemon_t requires t equal to the data horizon");
  }
  return rotate(melon_iterated(rotate(env, t)).env, t);
}

Rational bottom_sum(const PathEnv& env, int k, const Rational& x) {
  if (k < 1 || k > env.n()) fail(errkind::IndexOutOfRange, "bottom_sum line count");
  Rational s = 0;
  for (int i = env.n() - k + 1; i <= env.n(); ++i) s += env.eval(i, x, true);
  return s;
}

LemonResult lemon(const PathEnv& env) {
  Rational T = env.horizon();
  return lemon(env, {T / 4, T / 2, T});
}

LemonResult lemon(const PathEnv& env, std::vector<Rational> probes) {
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
  if (probes.empty() || probes.front() <= 0 || probes.back() > env.horizon()) {
    fail(errkind::OutOfHorizon, "probe horizons must lie in (0, horizon]");
  }
  std::vector<PathEnv> results;
  for (const Rational& t : probes) {
    PathEnv prefix = restrict_env(env, t);
    PathEnv m = lemon_t(prefix, t);
    if (!results.empty()) assert_probe_monotone(prefix, results.back(), m);
    results.push_back(std::move(m));
  }
  if (results.size() < 2) {
    // A single probe certifies nothing beyond itself.
    return LemonResult{results.front(), Rational(0), std::move(probes)};
  }
  const PathEnv& prev = results[results.size() - 2];
  Rational s = agreement_prefix(prev, results.back());
  if (s == prev.horizon()) {
    // The probes agree on the whole comparable window: the sequence has
    // converged, so the entire final probe is certified.
    Rational full = results.back().horizon();
    return LemonResult{std::move(results.back()), std::move(full), std::move(probes)};
  }
  PathEnv out = s > 0 ? restrict_env(results.back(), s) : results.back();
  return LemonResult{std::move(out), s, std::move(probes)};
}

std::vector<Rational> sourness_score(const PathEnv& env) {
  if (env.n() < 2) fail(errkind::DimensionMismatch, "sourness_score needs n >= 2");
  std::vector<Rational> out;
  std::vector<Rational> grid = env.grid();
  for (int j = 1; j < env.n(); ++j) {
    Rational best = 0;
    for (const Rational& u : grid) {
      // The positive part can peak at a grid value or just before one.
      best = rat_max(best, env.eval(j + 1, u) - env.eval(j, u));
      best = rat_max(best, env.eval(j + 1, u, true) - env.eval(j, u, true));
    }
    out.push_back(best);
  }
  return out;
}

bool check_inversion(const PathEnv& env) {
  // Both compositions are exact at the data horizon: the sorted lines are
  // successive differences of multipath profiles into line 1, and those
  // profiles are preserved by the sorting map and (after time reversal) by
  // the unsorting map. The horizon itself is the maximal certified prefix.
  Rational t = env.horizon();
  PathEnv w = melon_iterated(env).env;
  PathEnv m = lemon_t(env, t);
  if (lemon_t(w, t) != m) return false;
  if (melon_iterated(m).env != w) return false;
  return true;
}

}  // namespace mrsk
