#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mrsk/path_env.hpp"
#include "mrsk/rational.hpp"
#include "mrsk/rng.hpp"

namespace mrsk {

// Componentwise drifts in [0, 1]; sorted() gives the order statistics,
// largest first (matching line 1 = top).
struct DriftVector {
  std::vector<Rational> d;

  explicit DriftVector(std::vector<Rational> drifts);
  int n() const { return static_cast<int>(d.size()); }
  std::vector<Rational> sorted() const;
};

struct StatReport {
  std::string test_name;
  double statistic = 0;
  double threshold = 0;
  long samples = 0;
  bool pass = false;
  std::uint64_t seed = 0;
  std::string details;
};

// Statistical knobs; the defaults are the acceptance defaults.
struct TestConfig {
  double p_threshold = 0.001;   // aggregated p-value must exceed this
  long min_cell_expected = 5;   // Cochran rule for chi-square cells
  Rational lln_tolerance = Rational(1) / 20;
};

// n independent walks on [0, t]; line i rises with probability d_i on each
// unit interval. Deterministic given seed.
PathEnv sample_walks(int n, const DriftVector& d, long t, std::uint64_t seed);

// Number of ordered n-tuples of unit-rise paths from 0 to x in t steps
// (order checked at integer times, which suffices for linear interpolation).
Integer count_nu(const std::vector<long>& x, long t);

// Exact uniform sample from the count_nu(x, t) tuples via backward counting.
PathEnv sample_nu(const std::vector<long>& x, long t, std::uint64_t seed);

// Conditional-uniformity test: sample N sorted-walk tables, bucket by the
// endpoint vector at t, chi-square each bucket with enough mass against the
// uniform law on its count_nu support, aggregate p-values by Fisher's rule.
StatReport test_gibbs(int n, const DriftVector& d, long t, long N, std::uint64_t seed,
                      const TestConfig& cfg = {});

// Two-sample chi-square on the bottom-to-top passage value at t for drifts d
// vs e; requires equal order statistics.
StatReport test_burke(const DriftVector& d, const DriftVector& e, long t, long N,
                      std::uint64_t seed, const TestConfig& cfg = {});

// Single-path drift check: max_i |sorted_walks_i(t)/t - d_sorted_i| must stay
// under cfg.lln_tolerance.
StatReport test_lln(const DriftVector& d, long t, std::uint64_t seed,
                    const TestConfig& cfg = {});

// Integer-valued walk tables (values at 0..t per line) and the exact sorting
// transform on them; agrees with the piecewise-linear route line by line and
// keeps 200k-sample tests cheap.
using WalkTable = std::vector<std::vector<long>>;

WalkTable sample_walk_table(const DriftVector& d, long t, Rng& rng);
WalkTable sort_walks(WalkTable walks);
PathEnv walk_table_env(const WalkTable& walks);

}  // namespace mrsk
