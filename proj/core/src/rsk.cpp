#include "mrsk/rsk.hpp"

#include <string>
#include <utility>

#include "mrsk/lemon.hpp"
#include "mrsk/lpp.hpp"
#include "mrsk/melon.hpp"

namespace mrsk {

namespace {

// Cumulative tail row sum: sum_{i<=l} of (row depth of g plus collected atoms
// up to time t+k), expressed directly in terms of g and alpha.
Rational tail_cumulative(const GTPattern& g, const Rational& alpha, int k, int l) {
  int n = g.depth();
  int shift = k > l ? k - l : 0;
  Rational s = 0;
  for (int i = 1 + shift; i <= k; ++i) s += alpha * i;
  for (int i = 1; i <= l; ++i) s += g.at(i, n - shift);
  return s;
}

void validate_pair(const RSKPair& pair) {
  int n = pair.w.n();
  if (pair.g.depth() != n) {
    fail(errkind::InvariantViolation, "pattern depth does not match line count");
  }
  if (!gt_validate(pair.g)) {
    fail(errkind::InvariantViolation, "pattern fails the interlacing inequalities");
  }
  if (!is_pitman_ordered(pair.w)) {
    fail(errkind::InvariantViolation, "pair lines are not ordered");
  }
  for (int i = 1; i <= n; ++i) {
    if (pair.w.eval(i, pair.w.horizon()) != pair.g.at(i, n)) {
      fail(errkind::InvariantViolation, "boundary row does not match line values");
    }
  }
}

}  // namespace

GTPattern::GTPattern(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    if (rows_[j].size() != j + 1) {
      fail(errkind::DimensionMismatch, "row " + std::to_string(j + 1) + " must have " +
                                           std::to_string(j + 1) + " entries");
    }
  }
}

GTPattern GTPattern::zeros(int depth) {
  std::vector<std::vector<Rational>> rows(depth);
  for (int j = 0; j < depth; ++j) rows[j].assign(j + 1, Rational(0));
  return GTPattern(std::move(rows));
}

const Rational& GTPattern::at(int i, int j) const {
  if (j < 1 || j > depth() || i < 1 || i > j) {
    fail(errkind::IndexOutOfRange, "pattern entry (" + std::to_string(i) + ", " +
                                       std::to_string(j) + ") is undefined");
  }
  return rows_[j - 1][i - 1];
}

const std::vector<Rational>& GTPattern::row(int j) const {
  if (j < 1 || j > depth()) fail(errkind::IndexOutOfRange, "pattern row out of range");
  return rows_[j - 1];
}

bool gt_validate(const GTPattern& g) {
  for (int j = 2; j <= g.depth(); ++j) {
    for (int i = 1; i <= j - 1; ++i) {
      if (g.at(i, j) < g.at(i, j - 1)) return false;
      if (g.at(i, j - 1) < g.at(i + 1, j)) return false;
    }
  }
  return true;
}

GTPattern g_pattern(const PathEnv& env) {
  int n = env.n();
  Rational t = env.horizon();
  std::vector<std::vector<Rational>> rows(n);
  for (int s = 1; s <= n; ++s) {
    Rational prev = 0;
    for (int k = 1; k <= s; ++k) {
      EndpointSpec spec;
      spec.starts.assign(k, GridPoint{Rational(0), n});
      spec.ends.assign(k, GridPoint{t, n - s + 1});
      ExtValue v = lpp_multi(env, spec);
      if (!v) fail(errkind::InvariantViolation, "pattern passage value is infeasible");
      rows[s - 1].push_back(*v - prev);
      prev = *v;
    }
  }
  GTPattern g(std::move(rows));
  if (!gt_validate(g)) {
    fail(errkind::InvariantViolation, "extracted pattern fails interlacing");
  }
  return g;
}

RSKPair rsk_t(const PathEnv& env) {
  RSKPair pair{melon_iterated(env).env, g_pattern(env)};
  int n = env.n();
  for (int i = 1; i <= n; ++i) {
    if (pair.w.eval(i, env.horizon()) != pair.g.at(i, n)) {
      fail(errkind::InvariantViolation, "sorted lines and pattern disagree at the horizon");
    }
  }
  return pair;
}

Rational alpha_g(const GTPattern& g) {
  int n = g.depth();
  if (n == 0) fail(errkind::DimensionMismatch, "empty pattern");
  return Rational(n - 1) * (g.at(1, n) - g.at(n, n));
}

TailEnv delta(const GTPattern& g, const Rational& t, const Rational& alpha) {
  if (!gt_validate(g)) fail(errkind::InvalidGT, "tail construction needs a valid pattern");
  if (alpha < 0) fail(errkind::InvalidGT, "tail construction needs alpha >= 0");
  int n = g.depth();
  TailEnv tail;
  tail.t = t;
  tail.depth = n;
  auto place = [&tail](const Rational& time, int line, const Rational& mass) {
    if (mass == 0) return;
    if (mass < 0) tail.has_negative_atom = true;
    tail.atoms[{time, line}] = mass;
  };
  for (int k = 1; k <= n; ++k) {
    Rational diag = alpha;
    for (int i = 1; i <= k - 1; ++i) diag += g.at(i, n) - g.at(i, n - 1);
    place(t + k, k, diag);
    for (int l = 1; l < k; ++l) {
      Rational mass = alpha;
      for (int i = 1; i <= l; ++i) mass -= g.at(i, n - k + l + 1) - g.at(i, n - k + l);
      for (int i = 1; i <= l - 1; ++i) mass += g.at(i, n - k + l) - g.at(i, n - k + l - 1);
      place(t + k, l, mass);
    }
  }
  // Canary: the atoms must reproduce the defining cumulative sums.
  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= n; ++l) {
      Rational got = 0;
      for (int i = 1; i <= l; ++i) {
        got += g.at(i, n);
        for (int kk = 1; kk <= k; ++kk) {
          auto it = tail.atoms.find({t + kk, i});
          if (it != tail.atoms.end()) got += it->second;
        }
      }
      if (got != tail_cumulative(g, alpha, k, l)) {
        fail(errkind::InvariantViolation, "tail atoms break the cumulative row sums");
      }
    }
  }
  return tail;
}

PathEnv tail_increments(const TailEnv& tail) {
  std::vector<LineSpec> lines(tail.depth);
  for (const auto& [key, mass] : tail.atoms) {
    lines[key.second - 1].jumps.push_back({key.first - tail.t, mass});
  }
  return make_env(tail.depth, Rational(tail.depth), lines);
}

PathEnv o_map(const RSKPair& pair) {
  validate_pair(pair);
  TailEnv tail = delta(pair.g, pair.w.horizon(), alpha_g(pair.g));
  return concat(pair.w, tail_increments(tail));
}

PathEnv rsk_inverse(const RSKPair& pair) {
  Rational t = pair.w.horizon();
  int n = pair.w.n();
  PathEnv assembled = o_map(pair);
  PathEnv unsorted = lemon_t(assembled, assembled.horizon());
  // Certify that the unsorting horizon is deep enough: a flat extension must
  // produce the same data on [0, t].
  PathEnv extended = concat(assembled, PathEnv::flat(n, Rational(n)));
  PathEnv check = lemon_t(extended, extended.horizon());
  if (restrict_env(unsorted, t) != restrict_env(check, t)) {
    fail(errkind::InvariantViolation, "unsorting did not stabilize on the data window");
  }
  return restrict_env(unsorted, t);
}

bool delta_mass_check(const GTPattern& g, const Rational& t, const Rational& alpha,
                      const Rational& r, int k) {
  int n = g.depth();
  if (r <= 0 || r > n) fail(errkind::OutOfRange, "start offset must lie in (0, depth]");
  if (k < 1 || k > n) fail(errkind::IndexOutOfRange, "path count must lie in [1, depth]");
  if (!gt_validate(g)) fail(errkind::InvalidGT, "mass check needs a valid pattern");
  if (alpha < alpha_g(g)) fail(errkind::InvalidGT, "mass check needs alpha >= alpha_g");
  PathEnv inc = tail_increments(delta(g, t, alpha));
  EndpointSpec spec;
  spec.starts.assign(k, GridPoint{r, n});
  spec.ends.assign(k, GridPoint{Rational(n), 1});
  ExtValue got = lpp_multi(inc, spec);
  if (!got) return false;
  // Start index: ceil(r) when k is large enough to sweep the whole box,
  // otherwise only the bottom n-k+1..n staircase diagonals are reachable.
  long lo = rat_ceil(r).get_si();
  if (lo < n - k + 1) lo = n - k + 1;
  Rational expected = 0;
  for (long i = lo; i <= n; ++i) expected += alpha * Rational(i);
  return *got == expected;
}

}  // namespace mrsk
