#include "mrsk/gibbs.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <utility>

#include "mrsk/errors.hpp"
#include "mrsk/melon.hpp"

namespace mrsk {

namespace {

[[noreturn]] void fail(const char* kind, const std::string& msg) { throw Error(kind, msg); }

void check_endpoint(const std::vector<long>& x, long t) {
  if (x.empty()) fail(errkind::BadEndpoint, "endpoint vector is empty");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || x[i] > t) fail(errkind::BadEndpoint, "endpoint outside [0, t]");
    if (i + 1 < x.size() && x[i] < x[i + 1]) {
      fail(errkind::BadEndpoint, "endpoint vector is not weakly decreasing");
    }
  }
}

// Memoized continuation counts: paths from state y at time s to x at time t,
// one 0/1 rise per line per step, kept weakly decreasing at integer times.
struct NuCounter {
  std::vector<long> x;
  long t;
  std::map<std::pair<long, std::vector<long>>, Integer> memo;

  bool reachable(const std::vector<long>& y, long s) const {
    for (std::size_t i = 0; i < y.size(); ++i) {
      const long rise = x[i] - y[i];
      if (rise < 0 || rise > t - s) return false;
    }
    return true;
  }

  const Integer& count(long s, const std::vector<long>& y) {
    auto it = memo.find({s, y});
    if (it != memo.end()) return it->second;
    Integer total = 0;
    if (s == t) {
      total = (y == x) ? 1 : 0;
    } else if (reachable(y, s)) {
      const int n = static_cast<int>(y.size());
      std::vector<long> next(y);
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ordered = true;
        for (int i = 0; i < n; ++i) next[i] = y[i] + ((mask >> i) & 1);
        for (int i = 0; i + 1 < n; ++i) ordered = ordered && next[i] >= next[i + 1];
        if (ordered) total += count(s + 1, next);
      }
    }
    return memo.emplace(std::make_pair(s, y), std::move(total)).first->second;
  }
};

std::vector<PathLine::SegmentSpec> rise_segments(const std::vector<long>& values) {
  std::vector<PathLine::SegmentSpec> segs;
  for (std::size_t j = 0; j + 1 < values.size(); ++j) {
    if (values[j + 1] > values[j]) {
      segs.push_back({Rational(static_cast<long>(j)), Rational(static_cast<long>(j) + 1), 1});
    }
  }
  return segs;
}

// Pitman transform of adjacent table lines i, i+1 (0-based); exact because
// the difference of two unit-rise paths attains extrema at integer times.
void sigma_table(WalkTable& w, int i) {
  std::vector<long>& f1 = w[static_cast<std::size_t>(i)];
  std::vector<long>& f2 = w[static_cast<std::size_t>(i) + 1];
  long run = f2[0] - f1[0];
  for (std::size_t s = 0; s < f1.size(); ++s) {
    run = std::max(run, f2[s] - f1[s]);
    const long top = f1[s] + run;
    f2[s] = f1[s] + f2[s] - top;
    f1[s] = top;
  }
}

double chi_square_p(double statistic, double df) {
  boost::math::chi_squared dist(df);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

std::vector<long> flatten_from_one(const WalkTable& w) {
  std::vector<long> key;
  for (const auto& line : w) key.insert(key.end(), line.begin() + 1, line.end());
  return key;
}

}  // namespace

DriftVector::DriftVector(std::vector<Rational> drifts) : d(std::move(drifts)) {
  if (d.empty()) fail(errkind::BadDrift, "drift vector is empty");
  for (const Rational& di : d) {
    if (di < 0 || di > 1) fail(errkind::BadDrift, "drift outside [0, 1]");
  }
}

std::vector<Rational> DriftVector::sorted() const {
  std::vector<Rational> s(d);
  std::sort(s.begin(), s.end(), [](const Rational& a, const Rational& b) { return a > b; });
  return s;
}

WalkTable sample_walk_table(const DriftVector& d, long t, Rng& rng) {
  WalkTable walks(static_cast<std::size_t>(d.n()), std::vector<long>(static_cast<std::size_t>(t) + 1, 0));
  for (int i = 0; i < d.n(); ++i) {
    for (long s = 0; s < t; ++s) {
      const std::size_t j = static_cast<std::size_t>(s);
      walks[static_cast<std::size_t>(i)][j + 1] =
          walks[static_cast<std::size_t>(i)][j] + (rng.bernoulli(d.d[static_cast<std::size_t>(i)]) ? 1 : 0);
    }
  }
  return walks;
}

WalkTable sort_walks(WalkTable walks) {
  const int n = static_cast<int>(walks.size());
  for (int m = 1; m < n; ++m) {
    for (int j = n - 1; j >= m; --j) sigma_table(walks, j - 1);
  }
  return walks;
}

PathEnv walk_table_env(const WalkTable& walks) {
  const long t = static_cast<long>(walks.at(0).size()) - 1;
  std::vector<PathLine> lines;
  lines.reserve(walks.size());
  for (const auto& v : walks) lines.push_back(PathLine::make(Rational(t), {}, rise_segments(v)));
  return PathEnv(static_cast<int>(walks.size()), Rational(t), std::move(lines));
}

PathEnv sample_walks(int n, const DriftVector& d, long t, std::uint64_t seed) {
  if (n != d.n()) fail(errkind::DimensionMismatch, "drift count differs from line count");
  if (t < 1) fail(errkind::OutOfRange, "horizon must be at least 1");
  Rng rng(seed, 0);
  return walk_table_env(sample_walk_table(d, t, rng));
}

Integer count_nu(const std::vector<long>& x, long t) {
  check_endpoint(x, t);
  NuCounter counter{x, t, {}};
  return counter.count(0, std::vector<long>(x.size(), 0));
}

PathEnv sample_nu(const std::vector<long>& x, long t, std::uint64_t seed) {
  check_endpoint(x, t);
  NuCounter counter{x, t, {}};
  const int n = static_cast<int>(x.size());
  std::vector<long> y(x.size(), 0);
  WalkTable walks(x.size(), std::vector<long>(static_cast<std::size_t>(t) + 1, 0));
  Rng rng(seed, 0);
  for (long s = 0; s < t; ++s) {
    Integer pick = rng.below_big(counter.count(s, y));
    std::vector<long> next(y);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      bool ordered = true;
      for (int i = 0; i < n; ++i) next[i] = y[i] + ((mask >> i) & 1);
      for (int i = 0; i + 1 < n; ++i) ordered = ordered && next[i] >= next[i + 1];
      if (!ordered) continue;
      const Integer& c = counter.count(s + 1, next);
      if (pick < c) {
        y = next;
        break;
      }
      pick -= c;
    }
    for (int i = 0; i < n; ++i) walks[static_cast<std::size_t>(i)][static_cast<std::size_t>(s) + 1] = y[i];
  }
  return walk_table_env(walks);
}

StatReport test_gibbs(int n, const DriftVector& d, long t, long N, std::uint64_t seed,
                      const TestConfig& cfg) {
  if (n != d.n()) fail(errkind::DimensionMismatch, "drift count differs from line count");
  if (n > 3 || t > 6) fail(errkind::StateSpaceTooLarge, "conditional support is only enumerated for n <= 3, t <= 6");
  if (t < 1 || N < 1) fail(errkind::OutOfRange, "need t >= 1 and N >= 1");

  // observed tables, bucketed by endpoint vector
  std::map<std::vector<long>, std::map<std::vector<long>, long>> buckets;
  for (long i = 0; i < N; ++i) {
    Rng rng(seed, static_cast<std::uint64_t>(i));
    WalkTable sorted = sort_walks(sample_walk_table(d, t, rng));
    std::vector<long> endpoint;
    endpoint.reserve(sorted.size());
    for (const auto& line : sorted) endpoint.push_back(line.back());
    buckets[endpoint][flatten_from_one(sorted)] += 1;
  }

  double fisher = 0;
  long used = 0;
  for (const auto& [endpoint, observed] : buckets) {
    const Integer cells_big = count_nu(endpoint, t);
    const long cells = static_cast<long>(cells_big.get_si());
    if (cells < 2) continue;
    long total = 0;
    for (const auto& [key, c] : observed) total += c;
    if (total < cfg.min_cell_expected * cells) continue;

    // enumerate the full support so empty cells count
    std::map<std::vector<long>, long> support;
    WalkTable tuple(endpoint.size(), std::vector<long>(static_cast<std::size_t>(t) + 1, 0));
    std::vector<long> y(endpoint.size(), 0);
    NuCounter counter{endpoint, t, {}};
    std::function<void(long)> emit = [&](long s) {
      if (s == t) {
        support[flatten_from_one(tuple)] = 0;
        return;
      }
      std::vector<long> next(y.size());
      for (unsigned mask = 0; mask < (1u << endpoint.size()); ++mask) {
        bool ordered = true;
        for (std::size_t i = 0; i < y.size(); ++i) next[i] = y[i] + ((mask >> i) & 1);
        for (std::size_t i = 0; i + 1 < y.size(); ++i) ordered = ordered && next[i] >= next[i + 1];
        if (!ordered || !counter.reachable(next, s + 1)) continue;
        std::vector<long> save(y);
        y = next;
        for (std::size_t i = 0; i < y.size(); ++i) tuple[i][static_cast<std::size_t>(s) + 1] = y[i];
        emit(s + 1);
        y = save;
      }
    };
    emit(0);
    if (static_cast<long>(support.size()) != cells) {
      fail(errkind::InvariantViolation, "support enumeration disagrees with the tuple count");
    }
    for (const auto& [key, c] : observed) {
      auto it = support.find(key);
      if (it == support.end()) {
        fail(errkind::InvariantViolation, "sorted walk table escapes the conditional support");
      }
      it->second = c;
    }
    const double expected = static_cast<double>(total) / static_cast<double>(cells);
    double chi2 = 0;
    for (const auto& [key, c] : support) {
      const double diff = static_cast<double>(c) - expected;
      chi2 += diff * diff / expected;
    }
    const double p = chi_square_p(chi2, static_cast<double>(cells - 1));
    fisher += -2.0 * std::log(std::max(p, std::numeric_limits<double>::min()));
    used += 1;
  }

  StatReport report;
  report.test_name = "gibbs";
  report.threshold = cfg.p_threshold;
  report.samples = N;
  report.seed = seed;
  report.statistic = used > 0 ? chi_square_p(fisher, 2.0 * static_cast<double>(used)) : 0.0;
  report.pass = used > 0 && report.statistic > cfg.p_threshold;
  std::ostringstream info;
  info << used << " endpoint classes aggregated";
  report.details = info.str();
  return report;
}

StatReport test_burke(const DriftVector& d, const DriftVector& e, long t, long N,
                      std::uint64_t seed, const TestConfig& cfg) {
  if (d.sorted() != e.sorted()) fail(errkind::DriftMismatch, "drift vectors are not permutations of each other");
  if (t < 1 || N < 1) fail(errkind::OutOfRange, "need t >= 1 and N >= 1");

  std::vector<long> histo_d(static_cast<std::size_t>(t) + 1, 0);
  std::vector<long> histo_e(static_cast<std::size_t>(t) + 1, 0);
  for (long i = 0; i < N; ++i) {
    Rng rng_d(seed, 2 * static_cast<std::uint64_t>(i));
    Rng rng_e(seed, 2 * static_cast<std::uint64_t>(i) + 1);
    histo_d[static_cast<std::size_t>(sort_walks(sample_walk_table(d, t, rng_d))[0].back())] += 1;
    histo_e[static_cast<std::size_t>(sort_walks(sample_walk_table(e, t, rng_e))[0].back())] += 1;
  }

  // adjacent-merge bins so each sample expects at least the cell minimum
  std::vector<std::pair<long, long>> bins;
  long acc_d = 0;
  long acc_e = 0;
  for (std::size_t v = 0; v <= static_cast<std::size_t>(t); ++v) {
    acc_d += histo_d[v];
    acc_e += histo_e[v];
    if (acc_d + acc_e >= 4 * cfg.min_cell_expected) {
      bins.emplace_back(acc_d, acc_e);
      acc_d = acc_e = 0;
    }
  }
  if (acc_d + acc_e > 0) {
    if (bins.empty()) {
      bins.emplace_back(acc_d, acc_e);
    } else {
      bins.back().first += acc_d;
      bins.back().second += acc_e;
    }
  }

  StatReport report;
  report.test_name = "burke";
  report.threshold = cfg.p_threshold;
  report.samples = N;
  report.seed = seed;
  if (bins.size() < 2) {
    // both laws are concentrated on the same merged class
    report.statistic = 1.0;
    report.pass = true;
    report.details = "degenerate support after merging";
    return report;
  }
  double chi2 = 0;
  for (const auto& [o1, o2] : bins) {
    const double pooled = static_cast<double>(o1 + o2) / (2.0 * static_cast<double>(N));
    const double ex = static_cast<double>(N) * pooled;
    const double d1 = static_cast<double>(o1) - ex;
    const double d2 = static_cast<double>(o2) - ex;
    chi2 += d1 * d1 / ex + d2 * d2 / ex;
  }
  report.statistic = chi_square_p(chi2, static_cast<double>(bins.size()) - 1.0);
  report.pass = report.statistic > cfg.p_threshold;
  std::ostringstream info;
  info << bins.size() << " merged bins";
  report.details = info.str();
  return report;
}

StatReport test_lln(const DriftVector& d, long t, std::uint64_t seed, const TestConfig& cfg) {
  if (t < 500) fail(errkind::OutOfRange, "drift check needs t >= 500");
  Rng rng(seed, 0);
  WalkTable sorted = sort_walks(sample_walk_table(d, t, rng));
  const std::vector<Rational> target = d.sorted();

  StatReport report;
  report.test_name = "lln";
  report.threshold = cfg.lln_tolerance.get_d();
  report.samples = 1;
  report.seed = seed;
  report.pass = true;
  Rational worst = 0;
  std::ostringstream devs;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    Rational dev = Rational(sorted[i].back()) / t - target[i];
    if (dev < 0) dev = -dev;
    if (dev > worst) worst = dev;
    report.pass = report.pass && dev < cfg.lln_tolerance;
    if (i > 0) devs << " ";
    devs << rat_to_string(dev);
  }
  report.statistic = worst.get_d();
  report.details = devs.str();
  return report;
}

}  // namespace mrsk
