#include "mrsk/path_env.hpp"

#include <algorithm>
#include <set>

#include "mrsk/errors.hpp"

namespace mrsk {

PathLine PathLine::make(const Rational& horizon, const std::vector<JumpSpec>& jumps,
                        const std::vector<SegmentSpec>& segments) {
  if (horizon <= 0) fail(errkind::HorizonMismatch, "horizon must be positive");
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    if (jumps[i].mass < 0) {
      fail(errkind::NegativeJump, "jump of mass " + rat_to_string(jumps[i].mass) + " at t=" +
                                      rat_to_string(jumps[i].time));
    }
    if (jumps[i].time < 0 || jumps[i].time > horizon) {
      fail(errkind::HorizonMismatch, "jump at t=" + rat_to_string(jumps[i].time) +
                                         " outside [0, " + rat_to_string(horizon) + "]");
    }
    if (i > 0 && !(jumps[i - 1].time < jumps[i].time)) {
      fail(errkind::UnsortedBreakpoints, "jump times must be strictly increasing");
    }
  }
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    if (!(s.t0 < s.t1)) {
      fail(errkind::UnsortedBreakpoints, "segment must have t0 < t1");
    }
    if (s.t0 < 0 || s.t1 > horizon) {
      fail(errkind::HorizonMismatch, "segment [" + rat_to_string(s.t0) + ", " +
                                         rat_to_string(s.t1) + "] outside horizon");
    }
    if (i > 0 && segments[i - 1].t1 > s.t0) {
      fail(errkind::UnsortedBreakpoints, "segments must be sorted and non-overlapping");
    }
  }

  std::set<Rational> grid{Rational(0), horizon};
  for (const auto& j : jumps) grid.insert(j.time);
  for (const auto& s : segments) {
    grid.insert(s.t0);
    grid.insert(s.t1);
  }
  std::vector<Rational> bk(grid.begin(), grid.end());
  std::vector<Rational> jump(bk.size(), Rational(0));
  std::vector<Rational> slope(bk.size() - 1, Rational(0));
  {
    std::size_t gi = 0;
    for (const auto& j : jumps) {
      while (bk[gi] != j.time) ++gi;
      jump[gi] = j.mass;
    }
  }
  // Each gap lies inside at most one segment because segment endpoints are
  // grid points.
  std::size_t si = 0;
  for (std::size_t g = 0; g + 1 < bk.size(); ++g) {
    while (si < segments.size() && segments[si].t1 <= bk[g]) ++si;
    if (si < segments.size() && segments[si].t0 <= bk[g] && bk[g + 1] <= segments[si].t1) {
      slope[g] = segments[si].slope;
    }
  }
  return from_grid(std::move(bk), std::move(jump), std::move(slope));
}

PathLine PathLine::flat(const Rational& horizon) {
  return make(horizon, {}, {});
}

PathLine PathLine::from_grid(std::vector<Rational> bk, std::vector<Rational> jump,
                             std::vector<Rational> slope) {
  if (bk.size() < 2 || jump.size() != bk.size() || slope.size() + 1 != bk.size()) {
    fail(errkind::InvariantViolation, "malformed breakpoint grid");
  }
  if (bk.front() != 0) fail(errkind::UnsortedBreakpoints, "first breakpoint must be 0");
  for (std::size_t i = 0; i + 1 < bk.size(); ++i) {
    if (!(bk[i] < bk[i + 1])) {
      fail(errkind::UnsortedBreakpoints, "breakpoints must be strictly increasing");
    }
  }
  for (const auto& j : jump) {
    if (j < 0) fail(errkind::NegativeJump, "negative jump of mass " + rat_to_string(j));
  }
  PathLine line;
  line.horizon_ = bk.back();
  line.bk_ = std::move(bk);
  line.jump_ = std::move(jump);
  line.slope_ = std::move(slope);
  line.canonicalize();
  return line;
}

void PathLine::canonicalize() {
  std::vector<Rational> nbk{bk_.front()};
  std::vector<Rational> njump{jump_.front()};
  std::vector<Rational> nslope;
  Rational cur = slope_.front();
  for (std::size_t i = 1; i < bk_.size(); ++i) {
    const bool last = (i + 1 == bk_.size());
    if (!last && jump_[i] == 0 && slope_[i] == cur) continue;
    nslope.push_back(cur);
    nbk.push_back(bk_[i]);
    njump.push_back(jump_[i]);
    if (!last) cur = slope_[i];
  }
  bk_ = std::move(nbk);
  jump_ = std::move(njump);
  slope_ = std::move(nslope);
  recompute_values();
}

void PathLine::recompute_values() {
  value_.assign(bk_.size(), Rational(0));
  value_[0] = jump_[0];
  for (std::size_t i = 1; i < bk_.size(); ++i) {
    value_[i] = value_[i - 1] + slope_[i - 1] * (bk_[i] - bk_[i - 1]) + jump_[i];
  }
}

std::size_t PathLine::locate(const Rational& t) const {
  auto it = std::upper_bound(bk_.begin(), bk_.end(), t);
  return static_cast<std::size_t>(it - bk_.begin()) - 1;
}

Rational PathLine::eval(const Rational& t, bool left_limit) const {
  if (t < 0 || t > horizon_) {
    fail(errkind::OutOfHorizon, "t=" + rat_to_string(t) + " outside [0, " +
                                    rat_to_string(horizon_) + "]");
  }
  std::size_t i = locate(t);
  if (t == bk_[i]) {
    return left_limit ? Rational(value_[i] - jump_[i]) : value_[i];
  }
  return value_[i] + slope_[i] * (t - bk_[i]);
}

Rational PathLine::measure(const Rational& x, const Rational& y) const {
  if (x < 0 || y > horizon_ || x > y) {
    fail(errkind::OutOfHorizon, "bad interval [" + rat_to_string(x) + ", " +
                                    rat_to_string(y) + "]");
  }
  return eval(y) - eval(x, true);
}

Rational PathLine::jump_at(const Rational& t) const {
  if (t < 0 || t > horizon_) fail(errkind::OutOfHorizon, "t outside horizon");
  std::size_t i = locate(t);
  return t == bk_[i] ? jump_[i] : Rational(0);
}

Rational PathLine::slope_at(const Rational& t) const {
  if (t < 0 || t > horizon_) fail(errkind::OutOfHorizon, "t outside horizon");
  if (t == horizon_) return slope_.back();
  return slope_[locate(t)];
}

bool PathLine::operator==(const PathLine& other) const {
  return horizon_ == other.horizon_ && bk_ == other.bk_ && jump_ == other.jump_ &&
         slope_ == other.slope_;
}

namespace {

PathLine combine_lines(const PathLine& a, const PathLine& b, int sign) {
  if (a.horizon() != b.horizon()) {
    fail(errkind::HorizonMismatch, "line horizons differ");
  }
  std::vector<Rational> grid = merge_sorted_times(a.breakpoints(), b.breakpoints());
  std::vector<Rational> jump(grid.size());
  std::vector<Rational> slope(grid.size() - 1);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    jump[i] = a.jump_at(grid[i]) + sign * b.jump_at(grid[i]);
    if (sign < 0 && jump[i] < 0) {
      fail(errkind::InvariantViolation,
           "difference has a negative jump at t=" + rat_to_string(grid[i]));
    }
    if (i + 1 < grid.size()) {
      slope[i] = a.slope_at(grid[i]) + sign * b.slope_at(grid[i]);
    }
  }
  return PathLine::from_grid(std::move(grid), std::move(jump), std::move(slope));
}

}  // namespace

PathLine add(const PathLine& a, const PathLine& b) { return combine_lines(a, b, 1); }

PathLine sub_checked(const PathLine& a, const PathLine& b) { return combine_lines(a, b, -1); }

PathEnv::PathEnv(int n, const Rational& horizon, std::vector<PathLine> lines)
    : n_(n), horizon_(horizon), lines_(std::move(lines)) {
  if (n_ < 1) fail(errkind::DimensionMismatch, "need at least one line");
  if (static_cast<int>(lines_.size()) != n_) {
    fail(errkind::DimensionMismatch, "expected " + std::to_string(n_) + " lines, got " +
                                         std::to_string(lines_.size()));
  }
  for (const auto& line : lines_) {
    if (line.horizon() != horizon_) {
      fail(errkind::HorizonMismatch, "line horizon differs from env horizon");
    }
  }
}

PathEnv PathEnv::flat(int n, const Rational& horizon) {
  std::vector<PathLine> lines(static_cast<std::size_t>(n), PathLine::flat(horizon));
  return PathEnv(n, horizon, std::move(lines));
}

const PathLine& PathEnv::line(int i) const {
  if (i < 1 || i > n_) {
    fail(errkind::IndexOutOfRange, "line " + std::to_string(i) + " outside 1.." +
                                       std::to_string(n_));
  }
  return lines_[static_cast<std::size_t>(i - 1)];
}

Rational PathEnv::eval(int i, const Rational& t, bool left_limit) const {
  return line(i).eval(t, left_limit);
}

Rational PathEnv::measure(int i, const Rational& x, const Rational& y) const {
  return line(i).measure(x, y);
}

std::vector<Rational> PathEnv::grid() const {
  std::vector<Rational> g;
  for (const auto& line : lines_) g = merge_sorted_times(g, line.breakpoints());
  return g;
}

bool PathEnv::operator==(const PathEnv& other) const {
  return n_ == other.n_ && horizon_ == other.horizon_ && lines_ == other.lines_;
}

PathEnv make_env(int n, const Rational& horizon, const std::vector<LineSpec>& lines) {
  if (static_cast<int>(lines.size()) != n) {
    fail(errkind::DimensionMismatch, "expected " + std::to_string(n) + " line specs");
  }
  std::vector<PathLine> built;
  built.reserve(lines.size());
  for (const auto& spec : lines) {
    built.push_back(PathLine::make(horizon, spec.jumps, spec.segments));
  }
  return PathEnv(n, horizon, std::move(built));
}

PathEnv rotate(const PathEnv& env, const Rational& t) {
  if (t != env.horizon()) {
    fail(errkind::HorizonMismatch, "rotation requires t = horizon");
  }
  std::vector<PathLine> lines;
  lines.reserve(static_cast<std::size_t>(env.n()));
  for (int i = 1; i <= env.n(); ++i) {
    const PathLine& src = env.line(env.n() + 1 - i);
    const auto& bk = src.breakpoints();
    const auto& jump = src.jumps();
    const auto& slope = src.slopes();
    std::size_t m = bk.size();
    std::vector<Rational> nbk(m), njump(m), nslope(m - 1);
    for (std::size_t r = 0; r < m; ++r) {
      nbk[r] = t - bk[m - 1 - r];
      njump[r] = jump[m - 1 - r];
    }
    for (std::size_t r = 0; r + 1 < m; ++r) nslope[r] = slope[m - 2 - r];
    lines.push_back(PathLine::from_grid(std::move(nbk), std::move(njump), std::move(nslope)));
  }
  return PathEnv(env.n(), t, std::move(lines));
}

PathEnv concat(const PathEnv& head, const PathEnv& tail) {
  if (head.n() != tail.n()) {
    fail(errkind::DimensionMismatch, "line counts differ");
  }
  const Rational& h1 = head.horizon();
  std::vector<PathLine> lines;
  lines.reserve(static_cast<std::size_t>(head.n()));
  for (int i = 1; i <= head.n(); ++i) {
    const PathLine& a = head.line(i);
    const PathLine& b = tail.line(i);
    std::vector<Rational> bk = a.breakpoints();
    std::vector<Rational> jump = a.jumps();
    std::vector<Rational> slope = a.slopes();
    jump.back() += b.jumps().front();
    for (std::size_t k = 1; k < b.breakpoints().size(); ++k) {
      bk.push_back(h1 + b.breakpoints()[k]);
      jump.push_back(b.jumps()[k]);
    }
    slope.insert(slope.end(), b.slopes().begin(), b.slopes().end());
    lines.push_back(PathLine::from_grid(std::move(bk), std::move(jump), std::move(slope)));
  }
  return PathEnv(head.n(), h1 + tail.horizon(), std::move(lines));
}

PathEnv oplus_alpha(const PathEnv& env, const Rational& alpha) {
  std::vector<PathLine> tail_lines;
  tail_lines.reserve(static_cast<std::size_t>(env.n()));
  for (int i = 1; i <= env.n(); ++i) {
    tail_lines.push_back(PathLine::make(
        Rational(env.n()), {{Rational(i), alpha * i}}, {}));
  }
  return concat(env, PathEnv(env.n(), Rational(env.n()), std::move(tail_lines)));
}

PathEnv restrict_env(const PathEnv& env, const Rational& s) {
  if (s <= 0 || s > env.horizon()) {
    fail(errkind::OutOfHorizon, "restriction point outside (0, horizon]");
  }
  if (s == env.horizon()) return env;
  std::vector<PathLine> lines;
  lines.reserve(static_cast<std::size_t>(env.n()));
  for (int i = 1; i <= env.n(); ++i) {
    const PathLine& src = env.line(i);
    const auto& bk = src.breakpoints();
    std::vector<Rational> nbk, njump, nslope;
    for (std::size_t k = 0; k < bk.size() && bk[k] <= s; ++k) {
      nbk.push_back(bk[k]);
      njump.push_back(src.jumps()[k]);
      if (k + 1 < bk.size()) nslope.push_back(src.slopes()[k]);
    }
    if (nbk.back() != s) {
      nbk.push_back(s);
      njump.push_back(Rational(0));
    } else {
      nslope.pop_back();
    }
    lines.push_back(PathLine::from_grid(std::move(nbk), std::move(njump), std::move(nslope)));
  }
  return PathEnv(env.n(), s, std::move(lines));
}

const char* env_class_name(EnvClass c) {
  switch (c) {
    case EnvClass::Continuous: return "Continuous";
    case EnvClass::UnitJumps: return "UnitJumps";
    case EnvClass::RealJumpsIntegerTimes: return "RealJumpsIntegerTimes";
    case EnvClass::IntegerJumpsIntegerTimes: return "IntegerJumpsIntegerTimes";
    case EnvClass::BernoulliPaths: return "BernoulliPaths";
  }
  return "?";
}

namespace {

bool no_jumps(const PathEnv& env) {
  for (const auto& line : env.lines()) {
    for (const auto& j : line.jumps()) {
      if (j != 0) return false;
    }
  }
  return true;
}

bool pure_jump(const PathEnv& env) {
  for (const auto& line : env.lines()) {
    for (const auto& s : line.slopes()) {
      if (s != 0) return false;
    }
  }
  return true;
}

}  // namespace

bool class_check(const PathEnv& env, EnvClass c) {
  switch (c) {
    case EnvClass::Continuous:
      return no_jumps(env);
    case EnvClass::UnitJumps: {
      if (!pure_jump(env)) return false;
      std::set<Rational> seen;
      for (const auto& line : env.lines()) {
        for (std::size_t k = 0; k < line.jumps().size(); ++k) {
          const Rational& mass = line.jumps()[k];
          if (mass == 0) continue;
          if (mass != 1) return false;
          if (!seen.insert(line.breakpoints()[k]).second) return false;
        }
      }
      return true;
    }
    case EnvClass::RealJumpsIntegerTimes:
    case EnvClass::IntegerJumpsIntegerTimes: {
      if (!pure_jump(env)) return false;
      for (const auto& line : env.lines()) {
        for (std::size_t k = 0; k < line.jumps().size(); ++k) {
          const Rational& mass = line.jumps()[k];
          if (mass == 0) continue;
          if (!rat_is_integer(line.breakpoints()[k])) return false;
          if (c == EnvClass::IntegerJumpsIntegerTimes && !rat_is_integer(mass)) return false;
        }
      }
      return true;
    }
    case EnvClass::BernoulliPaths: {
      if (!rat_is_integer(env.horizon())) return false;
      if (!no_jumps(env)) return false;
      for (const auto& line : env.lines()) {
        for (const auto& b : line.breakpoints()) {
          if (!rat_is_integer(b)) return false;
        }
        for (const auto& s : line.slopes()) {
          if (s != 0 && s != 1) return false;
        }
      }
      return true;
    }
  }
  return false;
}

}  // namespace mrsk
