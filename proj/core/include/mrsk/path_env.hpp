#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mrsk/rational.hpp"

namespace mrsk {

// One line of an environment: a piecewise function on [0, horizon] made of
// nonnegative atoms at breakpoints plus linear slopes between them. The value
// convention is cadlag with f(0^-) = 0; a positive value at 0 is stored as a
// jump at time 0. Slopes may be negative; jumps may not.
class PathLine {
 public:
  struct JumpSpec {
    Rational time;
    Rational mass;
  };
  struct SegmentSpec {
    Rational t0;
    Rational t1;
    Rational slope;
  };

  // Validates and canonicalizes a user-facing spec. Jump times must be
  // strictly increasing, segments sorted and non-overlapping; uncovered gaps
  // get slope zero.
  static PathLine make(const Rational& horizon, const std::vector<JumpSpec>& jumps,
                       const std::vector<SegmentSpec>& segments);

  static PathLine flat(const Rational& horizon);

  // Internal constructor from a full breakpoint grid: bk strictly increasing
  // with bk.front()=0 and bk.back()=horizon, jump[i] at bk[i] (>= 0), slope[i]
  // on (bk[i], bk[i+1]). Canonicalizes.
  static PathLine from_grid(std::vector<Rational> bk, std::vector<Rational> jump,
                            std::vector<Rational> slope);

  const Rational& horizon() const { return horizon_; }
  const std::vector<Rational>& breakpoints() const { return bk_; }
  const std::vector<Rational>& jumps() const { return jump_; }
  const std::vector<Rational>& slopes() const { return slope_; }

  // f(t), or the left limit f(t^-) when left_limit is set. f(0^-) = 0.
  Rational eval(const Rational& t, bool left_limit = false) const;

  // df([x, y] x {this line}) = f(y) - f(x^-); includes an atom exactly at x.
  Rational measure(const Rational& x, const Rational& y) const;

  // Atom mass at t (zero when t is not a jump location).
  Rational jump_at(const Rational& t) const;

  // Slope of the segment containing t: for bk[i] <= t < bk[i+1] the slope on
  // (bk[i], bk[i+1]); at the horizon, the final slope.
  Rational slope_at(const Rational& t) const;

  // Cached f(bk[i]) (jump at bk[i] included).
  const Rational& value_at(std::size_t i) const { return value_[i]; }

  bool operator==(const PathLine& other) const;
  bool operator!=(const PathLine& other) const { return !(*this == other); }

  // Pointwise sum on the merged grid (horizons must match).
  friend PathLine add(const PathLine& a, const PathLine& b);

  // Pointwise difference a - b; a negative jump in the result means a caller
  // invariant broke, reported as InvariantViolation.
  friend PathLine sub_checked(const PathLine& a, const PathLine& b);

 private:
  PathLine() = default;
  void canonicalize();
  void recompute_values();
  // Index of the last breakpoint <= t.
  std::size_t locate(const Rational& t) const;

  Rational horizon_ = 0;
  std::vector<Rational> bk_;
  std::vector<Rational> jump_;
  std::vector<Rational> slope_;
  std::vector<Rational> value_;
};

// An n-tuple of lines on a shared horizon; line 1 is the top line.
class PathEnv {
 public:
  PathEnv(int n, const Rational& horizon, std::vector<PathLine> lines);

  static PathEnv flat(int n, const Rational& horizon);

  int n() const { return n_; }
  const Rational& horizon() const { return horizon_; }
  // 1-based line access.
  const PathLine& line(int i) const;
  const std::vector<PathLine>& lines() const { return lines_; }

  Rational eval(int i, const Rational& t, bool left_limit = false) const;
  Rational measure(int i, const Rational& x, const Rational& y) const;

  // Merged breakpoint grid over all lines (sorted, deduplicated; includes 0
  // and the horizon).
  std::vector<Rational> grid() const;

  bool operator==(const PathEnv& other) const;
  bool operator!=(const PathEnv& other) const { return !(*this == other); }

 private:
  int n_ = 0;
  Rational horizon_ = 0;
  std::vector<PathLine> lines_;
};

struct LineSpec {
  std::vector<PathLine::JumpSpec> jumps;
  std::vector<PathLine::SegmentSpec> segments;
};

// Validated construction from per-line specs.
PathEnv make_env(int n, const Rational& horizon, const std::vector<LineSpec>& lines);

// 180-degree rotation of [0, t] x {1..n}: line i of the output carries the
// time-reversed increments of line n+1-i. Requires t = env.horizon.
PathEnv rotate(const PathEnv& env, const Rational& t);

// Increment-gluing concatenation: the tail's increments are appended after the
// head's horizon (the tail's jump at 0 becomes an atom at the seam).
PathEnv concat(const PathEnv& head, const PathEnv& tail);

// f ⊕ alpha: extends by n time units with a single atom of mass alpha*i at
// time horizon+i on line i.
PathEnv oplus_alpha(const PathEnv& env, const Rational& alpha);

// Restriction to [0, s], 0 < s <= horizon. Atoms at s are kept.
PathEnv restrict_env(const PathEnv& env, const Rational& s);

enum class EnvClass {
  Continuous,
  UnitJumps,
  RealJumpsIntegerTimes,
  IntegerJumpsIntegerTimes,
  BernoulliPaths,
};

const char* env_class_name(EnvClass c);

// Membership in one of the five restriction classes.
bool class_check(const PathEnv& env, EnvClass c);

}  // namespace mrsk
