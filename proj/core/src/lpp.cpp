#include "mrsk/lpp.hpp"

#include <algorithm>
#include <functional>

#include "mrsk/errors.hpp"

namespace mrsk {

namespace {

struct PairWindow {
  Rational x, y;
  int a = 1, b = 1;
  bool open_start = false, open_end = false;
};

std::vector<PairWindow> normalize_spec(const PathEnv& env, const EndpointSpec& spec) {
  if (spec.starts.size() != spec.ends.size()) {
    fail(errkind::DimensionMismatch, "starts and ends must have equal length");
  }
  std::vector<PairWindow> w;
  w.reserve(spec.starts.size());
  for (std::size_t j = 0; j < spec.starts.size(); ++j) {
    const GridPoint& p = spec.starts[j];
    const GridPoint& q = spec.ends[j];
    if (p.line < 1 || p.line > env.n() || q.line < 1 || q.line > env.n()) {
      fail(errkind::IndexOutOfRange, "endpoint line outside 1..n");
    }
    if (p.time < 0 || p.time > env.horizon() || q.time < 0 || q.time > env.horizon()) {
      fail(errkind::OutOfHorizon, "endpoint time outside [0, horizon]");
    }
    w.push_back({p.time, q.time, p.line, q.line, p.side == Side::LeftOpen,
                 q.side == Side::LeftOpen});
  }
  return w;
}

// One path's closed intervals per line: line i in [b, a] carries
// [enter(i), leave(i)].
struct PathIntervals {
  int a = 1, b = 1;
  std::vector<Rational> enter;  // index i-b
  std::vector<Rational> leave;
  bool open_start = false, open_end = false;
  Rational start_time, end_time;

  const Rational& lo(int i) const { return enter[static_cast<std::size_t>(i - b)]; }
  const Rational& hi(int i) const { return leave[static_cast<std::size_t>(i - b)]; }
  bool has_line(int i) const { return b <= i && i <= a; }
};

PathIntervals path_intervals(const PathEnv& env, const LatticePath& path) {
  const int a = path.start.line;
  const int b = path.end.line;
  if (a < 1 || a > env.n() || b < 1 || b > env.n() || b > a) {
    fail(errkind::OutOfRange, "path lines outside environment");
  }
  const Rational& x = path.start.time;
  const Rational& y = path.end.time;
  if (x < 0 || y > env.horizon() || x > y) {
    fail(errkind::OutOfRange, "path window outside horizon");
  }
  if (static_cast<int>(path.jump_times.size()) != a - b) {
    fail(errkind::OutOfRange, "expected " + std::to_string(a - b) + " jump times");
  }
  // jump_times[r] = t_{a-1-r}, the time the path enters line a-1-r; the chain
  // x = t_a <= t_{a-1} <= ... <= t_b <= y must be nondecreasing.
  {
    Rational prev = x;
    for (const auto& t : path.jump_times) {
      if (t < prev) fail(errkind::OutOfRange, "jump times must be nondecreasing");
      prev = t;
    }
    if (prev > y) fail(errkind::OutOfRange, "jump times must not exceed the end time");
  }
  PathIntervals iv;
  iv.a = a;
  iv.b = b;
  iv.open_start = path.start.side == Side::LeftOpen;
  iv.open_end = path.end.side == Side::LeftOpen;
  iv.start_time = x;
  iv.end_time = y;
  iv.enter.resize(static_cast<std::size_t>(a - b + 1));
  iv.leave.resize(static_cast<std::size_t>(a - b + 1));
  for (int i = b; i <= a; ++i) {
    iv.enter[static_cast<std::size_t>(i - b)] =
        (i == a) ? x : path.jump_times[static_cast<std::size_t>(a - 1 - i)];
    iv.leave[static_cast<std::size_t>(i - b)] =
        (i == b) ? y : path.jump_times[static_cast<std::size_t>(a - i)];
  }
  return iv;
}

// Official left-of relation: no point of A strictly below and strictly later
// than a point of B.
bool left_of(const PathIntervals& A, const PathIntervals& B) {
  for (int la = A.b; la <= A.a; ++la) {
    for (int lb = B.b; lb <= B.a && lb < la; ++lb) {
      if (A.hi(la) > B.lo(lb)) return false;
    }
  }
  return true;
}

bool essentially_disjoint(const PathIntervals& A, const PathIntervals& B) {
  int lo = std::max(A.b, B.b);
  int hi = std::min(A.a, B.a);
  for (int i = lo; i <= hi; ++i) {
    if (rat_max(A.lo(i), B.lo(i)) < rat_min(A.hi(i), B.hi(i))) return false;
  }
  return true;
}

Rational intervals_length(const PathEnv& env, const PathIntervals& iv) {
  Rational total = 0;
  for (int i = iv.b; i <= iv.a; ++i) {
    const PathLine& line = env.line(i);
    Rational left = (i == iv.a && iv.open_start) ? line.eval(iv.lo(i)) : line.eval(iv.lo(i), true);
    Rational right = (i == iv.b && iv.open_end) ? line.eval(iv.hi(i), true) : line.eval(iv.hi(i));
    total += right - left;
  }
  return total;
}

// Whether the interval of iv on line i includes the atom at time u.
bool includes_atom(const PathIntervals& iv, int i, const Rational& u) {
  if (!iv.has_line(i)) return false;
  if (u < iv.lo(i) || u > iv.hi(i)) return false;
  if (u == iv.lo(i) && i == iv.a && iv.open_start) return false;
  if (u == iv.hi(i) && i == iv.b && iv.open_end) return false;
  return true;
}

}  // namespace

Rational path_length(const PathEnv& env, const LatticePath& path) {
  return intervals_length(env, path_intervals(env, path));
}

Rational tuple_length(const PathEnv& env, const DisjointTuple& tuple) {
  std::vector<PathIntervals> ivs;
  ivs.reserve(tuple.paths.size());
  for (const auto& p : tuple.paths) ivs.push_back(path_intervals(env, p));
  for (std::size_t j = 0; j < ivs.size(); ++j) {
    for (std::size_t j2 = j + 1; j2 < ivs.size(); ++j2) {
      if (!left_of(ivs[j], ivs[j2])) {
        fail(errkind::NotDisjoint, "path " + std::to_string(j + 1) + " is not left of path " +
                                       std::to_string(j2 + 1));
      }
      if (!essentially_disjoint(ivs[j], ivs[j2])) {
        fail(errkind::NotDisjoint, "paths " + std::to_string(j + 1) + " and " +
                                       std::to_string(j2 + 1) + " share a line segment");
      }
    }
  }
  Rational total = 0;
  for (const auto& iv : ivs) total += intervals_length(env, iv);
  // Atoms at points shared by several paths were counted multiple times.
  for (int i = 1; i <= env.n(); ++i) {
    std::vector<Rational> touch;
    for (const auto& iv : ivs) {
      if (iv.has_line(i)) {
        touch.push_back(iv.lo(i));
        touch.push_back(iv.hi(i));
      }
    }
    std::sort(touch.begin(), touch.end());
    touch.erase(std::unique(touch.begin(), touch.end()), touch.end());
    for (const auto& u : touch) {
      int count = 0;
      for (const auto& iv : ivs) {
        if (includes_atom(iv, i, u)) ++count;
      }
      if (count > 1) total -= (count - 1) * env.line(i).jump_at(u);
    }
  }
  return total;
}

namespace {

struct DPValue {
  bool feasible = false;
  Rational value;
  Rational tie;
};

struct DPOutcome {
  ExtValue value;
  std::vector<std::vector<Rational>> jump_times;  // per path, when traced
};

// Enumerates strictly increasing line assignments for active paths; inactive
// entries are 0.
void enumerate_states(const std::vector<PairWindow>& w, const std::vector<bool>& active,
                      std::vector<std::vector<int>>& out) {
  const std::size_t k = w.size();
  std::vector<int> cur(k, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t j, int min_line) {
    if (j == k) {
      out.push_back(cur);
      return;
    }
    if (!active[j]) {
      cur[j] = 0;
      rec(j + 1, min_line);
      return;
    }
    for (int line = std::max(min_line + 1, w[j].b); line <= w[j].a; ++line) {
      cur[j] = line;
      rec(j + 1, line);
    }
    cur[j] = 0;
  };
  rec(0, 0);
}

DPOutcome dp_run(const PathEnv& env, const std::vector<PairWindow>& w, OptSide side,
                 bool trace) {
  DPOutcome out;
  const std::size_t k = w.size();
  if (k == 0) {
    out.value = Rational(0);
    return out;
  }
  for (const auto& p : w) {
    if (p.x > p.y || p.a < p.b) {
      out.value = std::nullopt;
      return out;
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t j2 = j + 1; j2 < k; ++j2) {
      // Disjoint activity windows with the later-indexed path entirely
      // earlier force a line separation.
      if (w[j2].y < w[j].x && w[j].a > w[j2].b) {
        out.value = std::nullopt;
        return out;
      }
    }
  }

  std::vector<Rational> U = env.grid();
  {
    std::vector<Rational> extra;
    for (const auto& p : w) {
      extra.push_back(p.x);
      extra.push_back(p.y);
    }
    std::sort(extra.begin(), extra.end());
    extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
    U = merge_sorted_times(U, extra);
  }
  const std::size_t R = U.size();

  const bool leftmost = side == OptSide::Leftmost;
  std::vector<std::vector<int>> prev_states{std::vector<int>(k, 0)};
  std::vector<DPValue> prev_vals(1);
  prev_vals[0].feasible = true;
  prev_vals[0].value = 0;
  prev_vals[0].tie = 0;

  // Kept per column for optimizer reconstruction.
  std::vector<std::vector<std::vector<int>>> all_states;
  std::vector<std::vector<int>> all_back;

  std::vector<int> P(k), C(k);
  for (std::size_t r = 0; r < R; ++r) {
    const Rational& u = U[r];
    std::vector<bool> involved(k), next_active(k, false);
    for (std::size_t j = 0; j < k; ++j) {
      involved[j] = (w[j].x <= u && u <= w[j].y);
      if (r + 1 < R) next_active[j] = (w[j].x <= u && U[r + 1] <= w[j].y);
    }
    std::vector<std::vector<int>> next_states;
    enumerate_states(w, next_active, next_states);
    std::vector<DPValue> next_vals(next_states.size());
    std::vector<int> back(next_states.size(), -1);

    for (std::size_t ns = 0; ns < next_states.size(); ++ns) {
      const auto& sn = next_states[ns];
      DPValue best;
      int best_prev = -1;
      for (std::size_t ps = 0; ps < prev_states.size(); ++ps) {
        if (!prev_vals[ps].feasible) continue;
        const auto& sp = prev_states[ps];
        bool valid = true;
        for (std::size_t j = 0; j < k && valid; ++j) {
          if (!involved[j]) continue;
          P[j] = sp[j] != 0 ? sp[j] : w[j].a;
          C[j] = sn[j] != 0 ? sn[j] : w[j].b;
          if (C[j] > P[j]) valid = false;
        }
        if (valid) {
          for (std::size_t j = 0; j < k && valid; ++j) {
            if (!involved[j]) continue;
            for (std::size_t j2 = j + 1; j2 < k && valid; ++j2) {
              if (!involved[j2]) continue;
              // Path j must stay left of path j2: its post-column line may
              // not pass below an ending path, and a freshly started path
              // may not reach below a predecessor's pre-column line.
              if (w[j].y > u && w[j2].y == u && C[j] > C[j2]) valid = false;
              if (w[j].x == u && w[j2].x < u && P[j] > P[j2]) valid = false;
            }
          }
        }
        if (!valid) continue;
        Rational atoms = 0;
        for (int i = 1; i <= env.n(); ++i) {
          bool covered = false;
          for (std::size_t j = 0; j < k && !covered; ++j) {
            if (!involved[j] || i < C[j] || i > P[j]) continue;
            if (w[j].open_start && u == w[j].x && i == w[j].a) continue;
            if (w[j].open_end && u == w[j].y && i == w[j].b) continue;
            covered = true;
          }
          if (covered) atoms += env.line(i).jump_at(u);
        }
        Rational tie_add = 0;
        for (std::size_t j = 0; j < k; ++j) {
          if (involved[j] && P[j] > C[j]) tie_add += u * (P[j] - C[j]);
        }
        Rational cand_value = prev_vals[ps].value + atoms;
        Rational cand_tie = prev_vals[ps].tie + tie_add;
        bool better = !best.feasible || cand_value > best.value ||
                      (cand_value == best.value &&
                       (leftmost ? cand_tie < best.tie : cand_tie > best.tie));
        if (better) {
          best.feasible = true;
          best.value = cand_value;
          best.tie = cand_tie;
          best_prev = static_cast<int>(ps);
        }
      }
      if (best.feasible && r + 1 < R) {
        Rational dt = U[r + 1] - u;
        for (std::size_t j = 0; j < k; ++j) {
          if (sn[j] != 0) best.value += env.line(sn[j]).slope_at(u) * dt;
        }
      }
      next_vals[ns] = best;
      back[ns] = best_prev;
    }
    if (trace) {
      all_states.push_back(next_states);
      all_back.push_back(back);
    }
    prev_states = std::move(next_states);
    prev_vals = std::move(next_vals);
  }

  // Terminal state: nothing active after the last column.
  if (prev_states.size() != 1 || !prev_vals[0].feasible) {
    out.value = std::nullopt;
    return out;
  }
  out.value = prev_vals[0].value;

  if (trace) {
    std::vector<int> chain(R);
    int idx = 0;
    for (std::size_t r = R; r-- > 0;) {
      chain[r] = idx;
      idx = all_back[r][static_cast<std::size_t>(idx)];
    }
    out.jump_times.assign(k, {});
    std::vector<int> zero(k, 0);
    for (std::size_t r = 0; r < R; ++r) {
      const auto& sp = (r == 0) ? zero : all_states[r - 1][static_cast<std::size_t>(
                                             all_back[r][static_cast<std::size_t>(chain[r])])];
      const auto& sn = all_states[r][static_cast<std::size_t>(chain[r])];
      for (std::size_t j = 0; j < k; ++j) {
        if (!(w[j].x <= U[r] && U[r] <= w[j].y)) continue;
        int pj = sp[j] != 0 ? sp[j] : w[j].a;
        int cj = sn[j] != 0 ? sn[j] : w[j].b;
        for (int i = pj; i > cj; --i) out.jump_times[j].push_back(U[r]);
      }
    }
  }
  return out;
}

}  // namespace

ExtValue lpp(const PathEnv& env, const GridPoint& from, const GridPoint& to) {
  return lpp_multi(env, EndpointSpec{{from}, {to}});
}

ExtValue lpp_multi(const PathEnv& env, const EndpointSpec& spec) {
  return dp_run(env, normalize_spec(env, spec), OptSide::Leftmost, false).value;
}

DisjointTuple optimizer(const PathEnv& env, const EndpointSpec& spec, OptSide side) {
  auto w = normalize_spec(env, spec);
  DPOutcome got = dp_run(env, w, side, true);
  if (!got.value) {
    fail(errkind::NoPathExists, "no disjoint tuple joins the endpoints");
  }
  DisjointTuple tuple;
  for (std::size_t j = 0; j < w.size(); ++j) {
    tuple.paths.push_back(
        LatticePath{spec.starts[j], spec.ends[j], std::move(got.jump_times[j])});
  }
  return tuple;
}

bool check_quadrangle(const PathEnv& env, const std::vector<GridPoint>& p,
                      const std::vector<GridPoint>& p_prime, const std::vector<GridPoint>& q,
                      const std::vector<GridPoint>& q_prime) {
  const std::size_t k = p.size();
  if (p_prime.size() != k || q.size() != k || q_prime.size() != k || k == 0) {
    fail(errkind::DimensionMismatch, "all four endpoint vectors need equal size");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (p[i].line != p[0].line || p_prime[i].line != p[0].line || q[i].line != q[0].line ||
        q_prime[i].line != q[0].line) {
      fail(errkind::BadOrdering, "starts (and ends) must share a line");
    }
    if (p[i].time > p_prime[i].time || q[i].time > q_prime[i].time) {
      fail(errkind::BadOrdering, "need x <= x' and y <= y' coordinatewise");
    }
  }
  ExtValue cross1 = lpp_multi(env, EndpointSpec{p, q_prime});
  ExtValue cross2 = lpp_multi(env, EndpointSpec{p_prime, q});
  ExtValue straight1 = lpp_multi(env, EndpointSpec{p, q});
  ExtValue straight2 = lpp_multi(env, EndpointSpec{p_prime, q_prime});
  if (!cross1 || !cross2) return true;
  if (!straight1 || !straight2) return false;
  return *cross1 + *cross2 <= *straight1 + *straight2;
}

bool check_composition(const PathEnv& env, const EndpointSpec& spec, int i) {
  auto w = normalize_spec(env, spec);
  if (w.empty()) fail(errkind::DimensionMismatch, "empty spec");
  for (const auto& pw : w) {
    if (pw.a != w[0].a || pw.b != w[0].b) {
      fail(errkind::BadOrdering, "composition check needs common start/end lines");
    }
  }
  const int ell = w[0].a;
  const int m = w[0].b;
  if (i < m + 1 || i > ell) {
    fail(errkind::IndexOutOfRange, "split line outside {m+1, ..., ell}");
  }
  ExtValue direct = lpp_multi(env, spec);

  std::vector<Rational> U = env.grid();
  {
    std::vector<Rational> extra;
    for (const auto& pw : w) {
      extra.push_back(pw.x);
      extra.push_back(pw.y);
    }
    std::sort(extra.begin(), extra.end());
    extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
    U = merge_sorted_times(U, extra);
  }

  const std::size_t k = w.size();
  ExtValue best = std::nullopt;
  std::vector<Rational> z(k);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == k) {
      EndpointSpec first, second;
      for (std::size_t jj = 0; jj < k; ++jj) {
        first.starts.push_back(spec.starts[jj]);
        first.ends.push_back(GridPoint{z[jj], i});
        second.starts.push_back(GridPoint{z[jj], i - 1});
        second.ends.push_back(spec.ends[jj]);
      }
      ExtValue v1 = lpp_multi(env, first);
      if (!v1) return;
      ExtValue v2 = lpp_multi(env, second);
      if (!v2) return;
      best = ext_max(best, Rational(*v1 + *v2));
      return;
    }
    for (const auto& t : U) {
      if (t < w[j].x || t > w[j].y) continue;
      if (j > 0 && t < z[j - 1]) continue;
      z[j] = t;
      rec(j + 1);
    }
  };
  rec(0);
  if (!direct && !best) return true;
  if (!direct || !best) return false;
  return *direct == *best;
}

namespace {

struct HullPiece {
  Rational entry;  // offset within the segment
  Rational value;  // value at offset 0 of the segment
  Rational slope;
};

// Upper envelope of affine functions value + slope * xi on [0, delta);
// returns pieces sorted by entry offset.
std::vector<HullPiece> upper_envelope(std::vector<std::pair<Rational, Rational>> funcs,
                                      const Rational& delta) {
  std::sort(funcs.begin(), funcs.end(), [](const auto& f, const auto& g) {
    if (f.second != g.second) return f.second < g.second;
    return f.first > g.first;
  });
  // Keep only the highest function per slope.
  std::vector<std::pair<Rational, Rational>> uniq;
  for (const auto& f : funcs) {
    if (!uniq.empty() && uniq.back().second == f.second) continue;
    uniq.push_back(f);
  }
  std::vector<HullPiece> hull;
  for (const auto& [v, s] : uniq) {
    bool discard = false;
    while (!hull.empty()) {
      const HullPiece& top = hull.back();
      if (v >= top.value) {
        hull.pop_back();
        continue;
      }
      Rational crossing = (top.value - v) / (s - top.slope);
      if (crossing <= top.entry) {
        hull.pop_back();
        continue;
      }
      if (crossing >= delta) {
        discard = true;
      } else {
        hull.push_back(HullPiece{crossing, v, s});
      }
      break;
    }
    if (hull.empty() && !discard) hull.push_back(HullPiece{Rational(0), v, s});
  }
  return hull;
}

}  // namespace

PathLine lpp_profile(const PathEnv& env, int k, int m) {
  if (m < 1 || m > env.n()) fail(errkind::IndexOutOfRange, "profile line outside 1..n");
  if (k < 1 || k > env.n() - m + 1) {
    fail(errkind::NoPathExists, "no disjoint k-tuple fits between lines m and n");
  }
  const int n = env.n();
  std::vector<std::vector<int>> states;
  {
    std::vector<int> cur(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int j, int min_line) {
      if (j == k) {
        states.push_back(cur);
        return;
      }
      for (int line = min_line + 1; line <= n; ++line) {
        cur[static_cast<std::size_t>(j)] = line;
        rec(j + 1, line);
      }
    };
    rec(0, m - 1);
  }
  const std::size_t S = states.size();
  const std::vector<Rational> U = env.grid();
  const std::size_t R = U.size();

  std::vector<Rational> obk, ojump, oslope;
  std::vector<Rational> v_end(S), v_after(S);
  Rational left_limit = 0;

  for (std::size_t r = 0; r < R; ++r) {
    const Rational& u = U[r];
    // Atom mass prefix sums at u: atom_from[i] = sum of jumps on lines i..n.
    std::vector<Rational> atom_from(static_cast<std::size_t>(n) + 2, Rational(0));
    for (int i = n; i >= 1; --i) {
      atom_from[static_cast<std::size_t>(i)] =
          atom_from[static_cast<std::size_t>(i) + 1] + env.line(i).jump_at(u);
    }
    for (std::size_t s = 0; s < S; ++s) {
      const auto& sn = states[s];
      if (r == 0) {
        // All paths start at (0, n); runs [sn[j], n] union to [sn[0], n].
        v_after[s] = atom_from[static_cast<std::size_t>(sn[0])] -
                     atom_from[static_cast<std::size_t>(n) + 1];
        continue;
      }
      bool found = false;
      Rational best;
      for (std::size_t ps = 0; ps < S; ++ps) {
        const auto& sp = states[ps];
        bool ok = true;
        for (int j = 0; j < k; ++j) {
          if (sn[static_cast<std::size_t>(j)] > sp[static_cast<std::size_t>(j)]) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        // Union of runs [sn[j], sp[j]].
        Rational atoms = 0;
        int cover_hi = 0;  // highest line index already counted
        for (int j = 0; j < k; ++j) {
          int lo = sn[static_cast<std::size_t>(j)];
          int hi = sp[static_cast<std::size_t>(j)];
          if (lo <= cover_hi) lo = cover_hi + 1;
          if (lo <= hi) {
            atoms += atom_from[static_cast<std::size_t>(lo)] -
                     atom_from[static_cast<std::size_t>(hi) + 1];
            cover_hi = hi;
          } else {
            cover_hi = std::max(cover_hi, hi);
          }
        }
        Rational cand = v_end[ps] + atoms;
        if (!found || cand > best) {
          found = true;
          best = cand;
        }
      }
      v_after[s] = best;
    }
    Rational F = v_after[0];
    for (std::size_t s = 1; s < S; ++s) F = rat_max(F, v_after[s]);
    obk.push_back(u);
    ojump.push_back(F - left_limit);

    if (r + 1 < R) {
      Rational delta = U[r + 1] - u;
      std::vector<std::pair<Rational, Rational>> funcs;
      funcs.reserve(S);
      std::vector<Rational> state_slope(S);
      for (std::size_t s = 0; s < S; ++s) {
        Rational slope = 0;
        for (int j = 0; j < k; ++j) {
          slope += env.line(states[s][static_cast<std::size_t>(j)]).slope_at(u);
        }
        state_slope[s] = slope;
        funcs.emplace_back(v_after[s], slope);
      }
      auto hull = upper_envelope(std::move(funcs), delta);
      for (std::size_t h = 0; h < hull.size(); ++h) {
        if (hull[h].entry > 0) {
          obk.push_back(u + hull[h].entry);
          ojump.push_back(Rational(0));
        }
        oslope.push_back(hull[h].slope);
      }
      const HullPiece& last = hull.back();
      left_limit = last.value + last.slope * delta;
      for (std::size_t s = 0; s < S; ++s) {
        v_end[s] = v_after[s] + state_slope[s] * delta;
      }
    }
  }
  return PathLine::from_grid(std::move(obk), std::move(ojump), std::move(oslope));
}

namespace {

void enumerate_paths(const GridPoint& start, const GridPoint& end,
                     const std::vector<Rational>& times, std::vector<LatticePath>& out) {
  const int len = start.line - end.line;
  if (start.time > end.time || len < 0) return;
  std::vector<Rational> candidates;
  for (const auto& t : times) {
    if (start.time <= t && t <= end.time) candidates.push_back(t);
  }
  std::vector<Rational> cur(static_cast<std::size_t>(len));
  std::function<void(int, std::size_t)> rec = [&](int pos, std::size_t from) {
    if (pos == len) {
      out.push_back(LatticePath{start, end, cur});
      return;
    }
    for (std::size_t c = from; c < candidates.size(); ++c) {
      cur[static_cast<std::size_t>(pos)] = candidates[c];
      rec(pos + 1, c);
    }
  };
  rec(0, 0);
}

void enumerate_tuples(const PathEnv& env, const EndpointSpec& spec,
                      const std::vector<Rational>& times,
                      const std::function<void(const DisjointTuple&, const Rational&)>& visit) {
  const std::size_t k = spec.starts.size();
  std::vector<std::vector<LatticePath>> options(k);
  for (std::size_t j = 0; j < k; ++j) {
    enumerate_paths(spec.starts[j], spec.ends[j], times, options[j]);
    if (options[j].empty()) return;
  }
  std::vector<std::size_t> pick(k, 0);
  std::vector<PathIntervals> ivs(k);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == k) {
      DisjointTuple tuple;
      for (std::size_t jj = 0; jj < k; ++jj) tuple.paths.push_back(options[jj][pick[jj]]);
      Rational total = 0;
      for (const auto& iv : ivs) total += intervals_length(env, iv);
      for (int i = 1; i <= env.n(); ++i) {
        std::vector<Rational> touch;
        for (const auto& iv : ivs) {
          if (iv.has_line(i)) {
            touch.push_back(iv.lo(i));
            touch.push_back(iv.hi(i));
          }
        }
        std::sort(touch.begin(), touch.end());
        touch.erase(std::unique(touch.begin(), touch.end()), touch.end());
        for (const auto& u : touch) {
          int count = 0;
          for (const auto& iv : ivs) {
            if (includes_atom(iv, i, u)) ++count;
          }
          if (count > 1) total -= (count - 1) * env.line(i).jump_at(u);
        }
      }
      visit(tuple, total);
      return;
    }
    for (std::size_t c = 0; c < options[j].size(); ++c) {
      pick[j] = c;
      ivs[j] = path_intervals(env, options[j][c]);
      bool ok = true;
      for (std::size_t j2 = 0; j2 < j && ok; ++j2) {
        ok = left_of(ivs[j2], ivs[j]) && essentially_disjoint(ivs[j2], ivs[j]);
      }
      if (ok) rec(j + 1);
    }
  };
  rec(0);
}

std::vector<Rational> naive_grid(const PathEnv& env, const EndpointSpec& spec,
                                 const std::vector<Rational>& extra_times) {
  std::vector<Rational> times = env.grid();
  std::vector<Rational> extra = extra_times;
  for (const auto& p : spec.starts) extra.push_back(p.time);
  for (const auto& q : spec.ends) extra.push_back(q.time);
  std::sort(extra.begin(), extra.end());
  extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
  return merge_sorted_times(times, extra);
}

}  // namespace

ExtValue lpp_multi_naive(const PathEnv& env, const EndpointSpec& spec,
                         const std::vector<Rational>& extra_times) {
  if (spec.starts.size() != spec.ends.size()) {
    fail(errkind::DimensionMismatch, "starts and ends must have equal length");
  }
  if (spec.starts.empty()) return Rational(0);
  ExtValue best = std::nullopt;
  enumerate_tuples(env, spec, naive_grid(env, spec, extra_times),
                   [&](const DisjointTuple&, const Rational& value) {
                     best = ext_max(best, ExtValue(value));
                   });
  return best;
}

std::vector<DisjointTuple> optimizers_naive(const PathEnv& env, const EndpointSpec& spec) {
  std::vector<DisjointTuple> out;
  ExtValue best = std::nullopt;
  enumerate_tuples(env, spec, naive_grid(env, spec, {}),
                   [&](const DisjointTuple& tuple, const Rational& value) {
                     if (!best || value > *best) {
                       best = value;
                       out.clear();
                     }
                     if (best && value == *best) out.push_back(tuple);
                   });
  return out;
}

}  // namespace mrsk
