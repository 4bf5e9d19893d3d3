#include "mrsk/generators.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "mrsk/errors.hpp"

namespace mrsk {

namespace {

// Distinct sorted times from the grid {i/den : 0 <= i <= h*den}.
std::vector<Rational> sample_times(Rng& rng, int count, int horizon, int den,
                                   bool allow_zero) {
  long cells = static_cast<long>(horizon) * den;
  std::set<long> picked;
  long lo = allow_zero ? 0 : 1;
  if (cells < lo) return {};
  int want = std::min<long>(count, cells - lo + 1);
  while (static_cast<int>(picked.size()) < want) picked.insert(rng.range(lo, cells));
  std::vector<Rational> out;
  for (long i : picked) {
    Rational t(i, den);
    t.canonicalize();
    out.push_back(t);
  }
  return out;
}

Rational random_mass(Rng& rng, const EnvGenOptions& opt, bool integer_only) {
  long num = rng.range(1, opt.max_mass);
  long den = integer_only ? 1 : rng.range(1, opt.max_denominator);
  Rational m(num, den);
  m.canonicalize();
  return m;
}

Rational random_slope(Rng& rng, const EnvGenOptions& opt) {
  long num = rng.range(opt.allow_negative_slopes ? -opt.max_mass : 0, opt.max_mass);
  long den = rng.range(1, 2);
  Rational s(num, den);
  s.canonicalize();
  return s;
}

// Contiguous segments over [0, horizon] with breakpoints on the half grid.
std::vector<PathLine::SegmentSpec> random_segments(Rng& rng, const EnvGenOptions& opt) {
  int cuts = static_cast<int>(rng.below(static_cast<std::uint64_t>(opt.max_events_per_line) + 1));
  std::vector<Rational> inner = sample_times(rng, cuts, opt.horizon, 2, false);
  inner.erase(std::remove(inner.begin(), inner.end(), Rational(opt.horizon)), inner.end());
  std::vector<Rational> bk;
  bk.push_back(0);
  bk.insert(bk.end(), inner.begin(), inner.end());
  bk.push_back(opt.horizon);
  std::vector<PathLine::SegmentSpec> segs;
  for (std::size_t i = 0; i + 1 < bk.size(); ++i) {
    Rational s = random_slope(rng, opt);
    if (s != 0) segs.push_back({bk[i], bk[i + 1], s});
  }
  return segs;
}

}  // namespace

PathEnv random_env(Rng& rng, const EnvGenOptions& opt) {
  std::vector<LineSpec> lines;
  for (int i = 0; i < opt.n; ++i) {
    LineSpec spec;
    int jumps = static_cast<int>(rng.below(static_cast<std::uint64_t>(opt.max_events_per_line) + 1));
    for (const Rational& t : sample_times(rng, jumps, opt.horizon, 2, true)) {
      spec.jumps.push_back({t, random_mass(rng, opt, false)});
    }
    spec.segments = random_segments(rng, opt);
    lines.push_back(std::move(spec));
  }
  return make_env(opt.n, Rational(opt.horizon), lines);
}

PathEnv random_class_env(Rng& rng, EnvClass cls, const EnvGenOptions& opt) {
  std::vector<LineSpec> lines(opt.n);
  switch (cls) {
    case EnvClass::Continuous: {
      for (auto& spec : lines) spec.segments = random_segments(rng, opt);
      break;
    }
    case EnvClass::UnitJumps: {
      // Jump locations must be distinct across the whole environment.
      std::vector<Rational> times =
          sample_times(rng, opt.n * opt.max_events_per_line, opt.horizon, 4, true);
      // Shuffle, then deal times out to lines.
      for (std::size_t i = times.size(); i > 1; --i)
        std::swap(times[i - 1], times[rng.below(i)]);
      std::size_t next = 0;
      for (auto& spec : lines) {
        int jumps = static_cast<int>(rng.below(static_cast<std::uint64_t>(opt.max_events_per_line) + 1));
        std::vector<Rational> mine;
        for (int j = 0; j < jumps && next < times.size(); ++j) mine.push_back(times[next++]);
        std::sort(mine.begin(), mine.end());
        for (const Rational& t : mine) spec.jumps.push_back({t, Rational(1)});
      }
      break;
    }
    case EnvClass::RealJumpsIntegerTimes:
    case EnvClass::IntegerJumpsIntegerTimes: {
      bool integer_only = cls == EnvClass::IntegerJumpsIntegerTimes;
      for (auto& spec : lines) {
        int jumps = static_cast<int>(rng.below(static_cast<std::uint64_t>(opt.max_events_per_line) + 1));
        for (const Rational& t : sample_times(rng, jumps, opt.horizon, 1, true)) {
          spec.jumps.push_back({t, random_mass(rng, opt, integer_only)});
        }
      }
      break;
    }
    case EnvClass::BernoulliPaths: {
      for (auto& spec : lines) {
        for (int i = 0; i < opt.horizon; ++i) {
          if (rng.bernoulli(Rational(1, 2)))
            spec.segments.push_back({Rational(i), Rational(i + 1), Rational(1)});
        }
      }
      break;
    }
  }
  PathEnv env = make_env(opt.n, Rational(opt.horizon), lines);
  if (!class_check(env, cls))
    fail(errkind::InvariantViolation, "random_class_env produced an off-class environment");
  return env;
}

PathEnv with_atom(const PathEnv& env, int line, const Rational& t, const Rational& mass) {
  if (mass < 0) fail(errkind::NegativeJump, "with_atom: negative mass");
  if (t < 0 || t > env.horizon()) fail(errkind::OutOfHorizon, "with_atom: time outside horizon");
  std::vector<PathLine> lines = env.lines();
  const PathLine& src = env.line(line);
  std::vector<Rational> bk = src.breakpoints();
  std::vector<Rational> jump = src.jumps();
  std::vector<Rational> slope = src.slopes();
  auto it = std::lower_bound(bk.begin(), bk.end(), t);
  std::size_t idx = it - bk.begin();
  if (it != bk.end() && *it == t) {
    jump[idx] += mass;
  } else {
    bk.insert(it, t);
    jump.insert(jump.begin() + idx, mass);
    Rational left_slope = slope[idx - 1];
    slope.insert(slope.begin() + idx, left_slope);
  }
  lines[line - 1] = PathLine::from_grid(std::move(bk), std::move(jump), std::move(slope));
  return PathEnv(env.n(), env.horizon(), std::move(lines));
}

}  // namespace mrsk
