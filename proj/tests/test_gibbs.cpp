#include <doctest.h>

#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mrsk/errors.hpp"
#include "mrsk/gibbs.hpp"
#include "mrsk/melon.hpp"
#include "mrsk/rng.hpp"
#include "util.hpp"

using namespace mrsk;
using namespace mrsk::testutil;

namespace {

DriftVector drifts(std::vector<Rational> d) { return DriftVector(std::move(d)); }

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool is_bernoulli_env(const PathEnv& env) {
  for (int i = 1; i <= env.n(); ++i) {
    const PathLine& line = env.line(i);
    if (line.eval(0) != 0) return false;
    for (const Rational& j : line.jumps()) {
      if (j != 0) return false;
    }
    for (Rational s = 0; s < line.horizon(); s += 1) {
      const Rational slope = line.slope_at(s + rat("1/2"));
      if (slope != 0 && slope != 1) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("drift vectors validate and sort") {
  CHECK(drifts({rat("1/2"), 1, 0}).sorted() ==
        std::vector<Rational>{Rational(1), rat("1/2"), Rational(0)});
  CHECK_ERROR_KIND(drifts({rat("-1/2")}), errkind::BadDrift);
  CHECK_ERROR_KIND(drifts({rat("3/2")}), errkind::BadDrift);
  CHECK_ERROR_KIND(drifts({}), errkind::BadDrift);
}

TEST_CASE("walk sampler hits the trivial drifts exactly") {
  CHECK(sample_walks(2, drifts({0, 0}), 3, 7) == PathEnv::flat(2, 3));
  PathEnv ones = sample_walks(2, drifts({1, 1}), 3, 7);
  for (int i = 1; i <= 2; ++i) CHECK(ones.eval(i, 3) == 3);
  // reproducible and Bernoulli-class
  PathEnv a = sample_walks(2, drifts({rat("1/2"), rat("1/2")}), 4, 20260815);
  PathEnv b = sample_walks(2, drifts({rat("1/2"), rat("1/2")}), 4, 20260815);
  CHECK(a == b);
  CHECK(is_bernoulli_env(a));
  CHECK_ERROR_KIND(sample_walks(1, drifts({0, 0}), 3, 7), errkind::DimensionMismatch);
}

TEST_CASE("tuple counts match closed forms and enumeration") {
  CHECK(count_nu({2}, 5) == binom(5, 2));
  CHECK(count_nu({0}, 3) == 1);
  CHECK(count_nu({1, 0}, 1) == 1);
  CHECK(count_nu({1, 1}, 2) == 2);
  // brute force over all step matrices for two lines
  for (long t = 1; t <= 4; ++t) {
    std::map<std::vector<long>, long> counts;
    for (unsigned top = 0; top < (1u << t); ++top) {
      for (unsigned bot = 0; bot < (1u << t); ++bot) {
        long a = 0;
        long b = 0;
        bool ordered = true;
        for (long s = 0; s < t; ++s) {
          a += (top >> s) & 1;
          b += (bot >> s) & 1;
          ordered = ordered && a >= b;
        }
        if (ordered) counts[{a, b}] += 1;
      }
    }
    for (const auto& [x, c] : counts) CHECK(count_nu(x, t) == c);
  }
  CHECK_ERROR_KIND(count_nu({0, 1}, 2), errkind::BadEndpoint);
  CHECK_ERROR_KIND(count_nu({3}, 2), errkind::BadEndpoint);
  CHECK_ERROR_KIND(count_nu({-1}, 2), errkind::BadEndpoint);
}

TEST_CASE("bridge sampler is exact given the endpoint") {
  CHECK(sample_nu({0, 0}, 3, 9) == PathEnv::flat(2, 3));
  // unique tuple: both walks must rise every step
  CHECK(sample_nu({2, 2}, 2, 9) == sample_walks(2, drifts({1, 1}), 2, 1));
  // frequencies across the 2 tuples for x=(1,1), t=2 stay within 3 sigma
  long first = 0;
  const long N = 100000;
  for (long i = 0; i < N; ++i) {
    PathEnv env = sample_nu({1, 1}, 2, 20260815 + static_cast<std::uint64_t>(i) * 1315423911u);
    if (env.eval(1, 1) == 1) first += 1;
  }
  const double sigma3 = 3.0 * 0.5 * std::sqrt(static_cast<double>(N));
  CHECK(std::abs(static_cast<double>(first) - N / 2.0) < sigma3);
  // both tuples for x=(2,1), t=2 appear (time-1 values separate them)
  std::map<std::string, long> seen;
  for (long i = 0; i < 2000; ++i) {
    PathEnv env = sample_nu({2, 1}, 2, 31 + static_cast<std::uint64_t>(i));
    std::string key = rat_to_string(env.eval(1, 1)) + "," + rat_to_string(env.eval(2, 1));
    seen[key] += 1;
  }
  CHECK(static_cast<long>(seen.size()) == count_nu({2, 1}, 2).get_si());
}

TEST_CASE("integer sorting matches the piecewise transform") {
  Rng rng(20260815, 7);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = static_cast<int>(rng.range(1, 4));
    const long t = rng.range(1, 6);
    std::vector<Rational> d;
    for (int i = 0; i < n; ++i) d.push_back(Rational(rng.range(0, 4)) / 4);
    Rng sampler(99, static_cast<std::uint64_t>(iter));
    WalkTable table = sample_walk_table(DriftVector(d), t, sampler);
    WalkTable sorted = sort_walks(table);
    PathEnv direct = melon_iterated(walk_table_env(table)).env;
    CHECK(walk_table_env(sorted) == direct);
    CHECK(is_pitman_ordered(direct));
    CHECK(is_bernoulli_env(direct));
  }
}

TEST_CASE("conditional law is uniform for fair and biased drifts") {
  StatReport fair = test_gibbs(2, drifts({rat("1/2"), rat("1/2")}), 4, 40000, 20260815);
  CHECK(fair.pass);
  CHECK(fair.test_name == "gibbs");
  CHECK(fair.samples == 40000);
  StatReport biased = test_gibbs(2, drifts({rat("3/10"), rat("4/5")}), 4, 40000, 20260816);
  CHECK(biased.pass);
  StatReport single = test_gibbs(1, drifts({rat("1/2")}), 4, 20000, 20260817);
  CHECK(single.pass);
  CHECK_ERROR_KIND(test_gibbs(4, drifts({0, 0, 0, 0}), 4, 10, 1), errkind::StateSpaceTooLarge);
  CHECK_ERROR_KIND(test_gibbs(2, drifts({0, 0}), 7, 10, 1), errkind::StateSpaceTooLarge);
}

TEST_CASE("passage value law ignores drift order") {
  StatReport self = test_burke(drifts({rat("1/2"), rat("1/2")}), drifts({rat("1/2"), rat("1/2")}),
                               6, 20000, 20260815);
  CHECK(self.pass);
  StatReport swapped = test_burke(drifts({rat("3/10"), rat("7/10")}),
                                  drifts({rat("7/10"), rat("3/10")}), 10, 20000, 20260816);
  CHECK(swapped.pass);
  CHECK(swapped.test_name == "burke");
  StatReport ones = test_burke(drifts({1, 1}), drifts({1, 1}), 5, 500, 3);
  CHECK(ones.pass);  // degenerate support collapses to one bin
  CHECK_ERROR_KIND(test_burke(drifts({rat("3/10"), rat("7/10")}), drifts({rat("1/2"), rat("1/2")}),
                              5, 100, 1),
                   errkind::DriftMismatch);
}

TEST_CASE("long-horizon drift matches the sorted drift vector") {
  StatReport flat = test_lln(drifts({0, 0}), 600, 5);
  CHECK(flat.pass);
  CHECK(flat.statistic == 0.0);
  StatReport ones = test_lln(drifts({1, 1, 1}), 600, 5);
  CHECK(ones.pass);
  CHECK(ones.statistic == 0.0);
  StatReport mixed = test_lln(drifts({rat("1/5"), rat("1/2"), rat("4/5")}), 2000, 20260815);
  CHECK(mixed.pass);
  CHECK(mixed.test_name == "lln");
  CHECK_ERROR_KIND(test_lln(drifts({rat("1/2")}), 100, 1), errkind::OutOfRange);
}

TEST_CASE("sampled bridges respect stochastic monotonicity") {
  // exact enumeration means: nu_t(x) vs nu_t(x') coordinatewise
  const long t = 3;
  auto exact_means = [&](const std::vector<long>& x) {
    std::vector<std::vector<Rational>> sum(x.size(), std::vector<Rational>(static_cast<std::size_t>(t) + 1, 0));
    long total = 0;
    // enumerate tuples via sample-space walk over step masks
    std::function<void(long, std::vector<long>, std::vector<std::vector<long>>)> rec =
        [&](long s, std::vector<long> y, std::vector<std::vector<long>> hist) {
          if (s == t) {
            bool hit = true;
            for (std::size_t i = 0; i < x.size(); ++i) hit = hit && y[i] == x[i];
            if (!hit) return;
            total += 1;
            for (std::size_t i = 0; i < x.size(); ++i) {
              for (long u = 0; u <= t; ++u) sum[i][static_cast<std::size_t>(u)] += hist[static_cast<std::size_t>(u)][i];
            }
            return;
          }
          std::vector<long> next(y.size());
          for (unsigned mask = 0; mask < (1u << x.size()); ++mask) {
            bool ordered = true;
            for (std::size_t i = 0; i < y.size(); ++i) next[i] = y[i] + ((mask >> i) & 1);
            for (std::size_t i = 0; i + 1 < y.size(); ++i) ordered = ordered && next[i] >= next[i + 1];
            if (!ordered) continue;
            auto h = hist;
            h.push_back(next);
            rec(s + 1, next, h);
          }
        };
    rec(0, std::vector<long>(x.size(), 0), {std::vector<long>(x.size(), 0)});
    for (auto& line : sum) {
      for (auto& v : line) v /= total;
    }
    return sum;
  };
  const auto lo = exact_means({1, 1});
  const auto hi = exact_means({3, 2});
  for (std::size_t i = 0; i < lo.size(); ++i) {
    for (std::size_t u = 0; u <= static_cast<std::size_t>(t); ++u) {
      CHECK(lo[i][u] <= hi[i][u]);
    }
  }
  // sampled sanity with a wide margin on the top coordinate at mid-time
  Rational lo_mean = 0;
  Rational hi_mean = 0;
  const long N = 4000;
  for (long i = 0; i < N; ++i) {
    lo_mean += sample_nu({1, 1}, t, 77 + static_cast<std::uint64_t>(i)).eval(1, 2);
    hi_mean += sample_nu({3, 2}, t, 77 + static_cast<std::uint64_t>(i)).eval(1, 2);
  }
  CHECK(lo_mean / N <= hi_mean / N + rat("1/10"));
}
