#pragma once

#include <map>
#include <utility>
#include <vector>

#include "mrsk/path_env.hpp"

namespace mrsk {

// Triangular array g_i(j) for 1 <= i <= j <= depth; row j collects the j
// entries g_1(j), ..., g_j(j).
class GTPattern {
 public:
  GTPattern() = default;
  // rows[j-1] must hold exactly j entries.
  explicit GTPattern(std::vector<std::vector<Rational>> rows);

  static GTPattern zeros(int depth);

  int depth() const { return static_cast<int>(rows_.size()); }
  // g_i(j), 1-based, i <= j.
  const Rational& at(int i, int j) const;
  const std::vector<Rational>& row(int j) const;
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  bool operator==(const GTPattern& other) const { return rows_ == other.rows_; }
  bool operator!=(const GTPattern& other) const { return !(*this == other); }

 private:
  std::vector<std::vector<Rational>> rows_;
};

// True iff rows are ordered and consecutive rows interlace:
// g_i(j) >= g_i(j-1) and g_i(j-1) >= g_{i+1}(j) wherever defined.
bool gt_validate(const GTPattern& g);

// Pattern extraction at the horizon: partial row sums are multipath passage
// values, sum_{i<=k} g_i(s) = f[(0,n)^k -> (t, n-s+1)^k] for k <= s.
GTPattern g_pattern(const PathEnv& env);

// A sorted environment together with the pattern that completes it to a
// bijective image: row depth of g equals w(horizon) coordinatewise.
struct RSKPair {
  PathEnv w;
  GTPattern g;

  bool operator==(const RSKPair& other) const { return w == other.w && g == other.g; }
  bool operator!=(const RSKPair& other) const { return !(*this == other); }
};

// Forward map: (sorted lines, extracted pattern).
RSKPair rsk_t(const PathEnv& env);

// Tail data on the staircase {(t+k, line l) : l <= k <= depth}: atom masses
// keyed by (time, line). Masses can be negative below the alpha threshold;
// has_negative_atom flags that case.
struct TailEnv {
  Rational t;
  int depth = 0;
  std::map<std::pair<Rational, int>, Rational> atoms;
  bool has_negative_atom = false;
};

// Smallest alpha guaranteeing nonnegative tail atoms for this pattern:
// (depth-1) * (g_1(n) - g_n(n)).
Rational alpha_g(const GTPattern& g);

// Explicit tail construction: atoms chosen so the cumulative tail sums
// reproduce the pattern rows shifted by the alpha staircase.
TailEnv delta(const GTPattern& g, const Rational& t, const Rational& alpha);

// The tail's increments as an environment on [0, depth] (line values start at
// zero; gluing after w restores the boundary row).
PathEnv tail_increments(const TailEnv& tail);

// Assembly: w followed by the alpha_g tail, horizon t + depth.
PathEnv o_map(const RSKPair& pair);

// Inverse map: unsort the assembled environment and restrict to [0, t].
// The unsorting horizon is certified per instance by agreement with a flat
// extension run.
PathEnv rsk_inverse(const RSKPair& pair);

// True iff the tail's multipath passage value from (t+r, bottom) to
// (t+depth, top) over k paths equals the collected alpha staircase mass
// sum over i = max(ceil(r), depth-k+1) .. depth of alpha*i.
bool delta_mass_check(const GTPattern& g, const Rational& t, const Rational& alpha,
                      const Rational& r, int k);

}  // namespace mrsk
