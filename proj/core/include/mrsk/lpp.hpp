#pragma once

#include <vector>

#include "mrsk/path_env.hpp"
#include "mrsk/rational.hpp"

namespace mrsk {

// Endpoint side: LeftOpen drops the vertical-line atom at that endpoint
// (the p+ / q- variants).
enum class Side { Closed, LeftOpen };

struct GridPoint {
  Rational time;
  int line = 1;
  Side side = Side::Closed;
};

// An up-right staircase path from start=(x,a) to end=(y,b), b <= a. The path
// sits on line i over [t_i, t_{i-1}] where t_a = x and t_{b-1} = y;
// jump_times lists t_{a-1}, ..., t_b in that order (nondecreasing).
struct LatticePath {
  GridPoint start;
  GridPoint end;
  std::vector<Rational> jump_times;
};

struct DisjointTuple {
  std::vector<LatticePath> paths;
};

// k start/end pairs; path j runs from starts[j] to ends[j] and must stay to
// the left of path j+1.
struct EndpointSpec {
  std::vector<GridPoint> starts;
  std::vector<GridPoint> ends;
};

enum class OptSide { Leftmost, Rightmost };

// |pi|_f: sum over lines of f_i(t_{i-1}) - f_i(t_i^-), open sides excluded.
Rational path_length(const PathEnv& env, const LatticePath& path);

// df of the union of the tuple's paths; atoms shared between touching paths
// count once. Validates order and essential disjointness.
Rational tuple_length(const PathEnv& env, const DisjointTuple& tuple);

// Single-path last passage value; nullopt encodes -infinity (no path).
ExtValue lpp(const PathEnv& env, const GridPoint& from, const GridPoint& to);

// Multi-path last passage value over disjoint k-tuples.
ExtValue lpp_multi(const PathEnv& env, const EndpointSpec& spec);

// Extremal optimizer; jump-time vector is lexicographically and pointwise
// minimal (leftmost) or maximal (rightmost) among event-grid optimizers.
DisjointTuple optimizer(const PathEnv& env, const EndpointSpec& spec, OptSide side);

// Quadrangle inequality check: all starts on one line, all ends on another,
// x <= x' and y <= y' coordinatewise; evaluates
// f[p->q'] + f[p'->q] <= f[p->q] + f[p'->q'].
bool check_quadrangle(const PathEnv& env, const std::vector<GridPoint>& p,
                      const std::vector<GridPoint>& p_prime, const std::vector<GridPoint>& q,
                      const std::vector<GridPoint>& q_prime);

// Metric composition law check at split line i: lpp_multi(spec) equals the
// max over event-grid split vectors z of
// f[p -> (z,i)] + f[(z,i-1) -> q].
bool check_composition(const PathEnv& env, const EndpointSpec& spec, int i);

// Exact profile y -> lpp_multi(env, (0,n)^k -> (y,m)^k) as a piecewise line
// on [0, horizon].
PathLine lpp_profile(const PathEnv& env, int k, int m);

// Brute-force oracle: enumerates all grid tuples (use only on small
// instances). extra_times refines the candidate grid.
ExtValue lpp_multi_naive(const PathEnv& env, const EndpointSpec& spec,
                         const std::vector<Rational>& extra_times = {});

// All grid optimizers found by the naive enumeration (for optimizer tests).
std::vector<DisjointTuple> optimizers_naive(const PathEnv& env, const EndpointSpec& spec);

}  // namespace mrsk
