#include "mrsk/melon.hpp"

#include <utility>
#include <vector>

#include "mrsk/errors.hpp"
#include "mrsk/lpp.hpp"

namespace mrsk {

namespace {

// Running supremum S(t) = sup_{z in [0,t]} (f2(z) - f1(z^-)) as a PathLine.
// S is nondecreasing and cadlag: at a grid point the candidate f2(u)-f1(u^-)
// may lift it by a jump; along a gap it can only grow by following a rising
// segment of f2-f1 after the exact crossing time, because the gap's starting
// value f2(u)-f1(u) never exceeds the running value.
PathLine running_sup(const PathLine& f1, const PathLine& f2) {
  std::vector<Rational> grid = merge_sorted_times(f1.breakpoints(), f2.breakpoints());
  std::vector<Rational> bk, jump, slope;
  Rational cur = f2.eval(Rational(0));  // z = 0 candidate: f2(0) - f1(0^-)
  bk.push_back(Rational(0));
  jump.push_back(cur);
  for (std::size_t r = 0; r + 1 < grid.size(); ++r) {
    const Rational& u = grid[r];
    const Rational& v = grid[r + 1];
    Rational d = f2.slope_at(u) - f1.slope_at(u);
    Rational g_start = f2.eval(u) - f1.eval(u);
    Rational g_end = g_start + d * (v - u);
    if (d > 0 && g_end > cur) {
      // Crossing point of the rising line with the running value.
      Rational zstar = u + (cur - g_start) / d;
      if (zstar > u) {
        slope.push_back(Rational(0));
        bk.push_back(zstar);
        jump.push_back(Rational(0));
      }
      slope.push_back(d);
      cur = g_end;
    } else {
      slope.push_back(Rational(0));
    }
    // Candidate at the right grid point, evaluated with the left limit of f1.
    Rational g_point = f2.eval(v) - f1.eval(v, true);
    bk.push_back(v);
    jump.push_back(g_point > cur ? g_point - cur : Rational(0));
    if (g_point > cur) cur = g_point;
  }
  return PathLine::from_grid(std::move(bk), std::move(jump), std::move(slope));
}

}  // namespace

std::pair<PathLine, PathLine> pitman2(const PathLine& f1, const PathLine& f2) {
  if (f1.horizon() != f2.horizon()) {
    fail(errkind::HorizonMismatch, "pitman2 needs a shared horizon");
  }
  PathLine w1 = add(f1, running_sup(f1, f2));
  PathLine w2 = sub_checked(add(f1, f2), w1);
  return {std::move(w1), std::move(w2)};
}

PathEnv sigma(const PathEnv& env, int i) {
  if (i < 1 || i >= env.n()) {
    fail(errkind::IndexOutOfRange,
         "sigma index " + std::to_string(i) + " outside 1.." + std::to_string(env.n() - 1));
  }
  std::vector<PathLine> lines = env.lines();
  auto [w1, w2] = pitman2(lines[i - 1], lines[i]);
  lines[i - 1] = std::move(w1);
  lines[i] = std::move(w2);
  return PathEnv(env.n(), env.horizon(), std::move(lines));
}

PathEnv tau(const PathEnv& env, int m) {
  if (m < 1 || m > env.n()) {
    fail(errkind::IndexOutOfRange,
         "tau index " + std::to_string(m) + " outside 1.." + std::to_string(env.n()));
  }
  PathEnv out = env;
  for (int j = env.n() - 1; j >= m; --j) out = sigma(out, j);
  return out;
}

MelonResult melon_iterated(const PathEnv& env) {
  PathEnv out = env;
  for (int m = 1; m < env.n(); ++m) out = tau(out, m);
  return MelonResult{std::move(out), MelonMethod::iterated};
}

MelonResult melon_direct(const PathEnv& env) {
  std::vector<PathLine> lines;
  PathLine prev = PathLine::flat(env.horizon());
  for (int k = 1; k <= env.n(); ++k) {
    PathLine profile = lpp_profile(env, k, 1);
    lines.push_back(k == 1 ? profile : sub_checked(profile, prev));
    prev = std::move(profile);
  }
  return MelonResult{PathEnv(env.n(), env.horizon(), std::move(lines)), MelonMethod::direct};
}

PathLine car_positions(const PathEnv& env, int m) {
  if (m < 1 || m > env.n()) {
    fail(errkind::IndexOutOfRange,
         "line " + std::to_string(m) + " outside 1.." + std::to_string(env.n()));
  }
  if (m == env.n()) return env.line(m);
  return tau(env, m).line(m);
}

bool is_pitman_ordered(const PathEnv& env) {
  std::vector<Rational> grid = env.grid();
  for (int i = 1; i < env.n(); ++i) {
    for (const Rational& u : grid) {
      if (env.eval(i + 1, u) > env.eval(i, u, true)) return false;
    }
  }
  return true;
}

}  // namespace mrsk
