#include <doctest.h>

#include <string>
#include <vector>

#include "mrsk/generators.hpp"
#include "mrsk/json_io.hpp"
#include "mrsk/lpp.hpp"
#include "mrsk/melon.hpp"
#include "mrsk/rng.hpp"
#include "util.hpp"

using namespace mrsk;
using namespace mrsk::testutil;

namespace {

PathLine atom_line(const Rational& horizon, const Rational& t, const Rational& mass) {
  return PathLine::make(horizon, {{t, mass}}, {});
}

PathEnv three_atoms() {
  return make_env(3, Rational(3),
                  {LineSpec{{{Rational(3), Rational(1)}}, {}},
                   LineSpec{{{Rational(2), Rational(1)}}, {}},
                   LineSpec{{{Rational(1), Rational(1)}}, {}}});
}

PathEnv random_mixed_env(Rng& rng, int n, int horizon) {
  EnvGenOptions opt;
  opt.n = n;
  opt.horizon = horizon;
  opt.max_events_per_line = 2;
  return random_env(rng, opt);
}

}  // namespace

TEST_SUITE("melon") {

TEST_CASE("pitman2 on the two-atom lines") {
  PathEnv env = atoms_env();
  auto [w1, w2] = pitman2(env.line(1), env.line(2));
  CHECK(w1 == PathLine::make(Rational(3),
                             {{Rational(1), Rational(1)}, {Rational(2), Rational(1)}}, {}));
  CHECK(w2 == PathLine::flat(Rational(3)));
}

TEST_CASE("pitman2 on crossing slopes") {
  PathEnv env = bernoulli_env();
  auto [w1, w2] = pitman2(env.line(1), env.line(2));
  CHECK(w1 == PathLine::make(Rational(2), {}, {{Rational(0), Rational(2), Rational(1)}}));
  CHECK(w2 == PathLine::flat(Rational(2)));
}

TEST_CASE("pitman2 fixes ordered pairs") {
  PathLine f1 = atom_line(Rational(3), Rational(1), Rational(2));
  PathLine f2 = PathLine::flat(Rational(3));
  auto [w1, w2] = pitman2(f1, f2);
  CHECK(w1 == f1);
  CHECK(w2 == f2);
  CHECK_ERROR_KIND(pitman2(f1, PathLine::flat(Rational(2))), errkind::HorizonMismatch);
}

TEST_CASE("pitman2 agrees with the passage profile and preserves sums") {
  Rng rng(301, 21);
  for (int trial = 0; trial < 40; ++trial) {
    PathEnv env = random_mixed_env(rng, 2, 3);
    std::string js = env_to_json(env);
    CAPTURE(js);
    auto [w1, w2] = pitman2(env.line(1), env.line(2));
    CHECK(w1 == lpp_profile(env, 1, 1));
    CHECK(add(w1, w2) == add(env.line(1), env.line(2)));
    CHECK(is_pitman_ordered(PathEnv(2, env.horizon(), {w1, w2})));
  }
}

TEST_CASE("sigma is idempotent and local") {
  Rng rng(302, 22);
  PathEnv env = random_mixed_env(rng, 3, 3);
  PathEnv once = sigma(env, 2);
  CHECK(sigma(once, 2) == once);
  CHECK(once.line(1) == env.line(1));
  CHECK_ERROR_KIND(sigma(env, 0), errkind::IndexOutOfRange);
  CHECK_ERROR_KIND(sigma(env, 3), errkind::IndexOutOfRange);
}

TEST_CASE("iterated melon on the worked examples") {
  MelonResult r = melon_iterated(atoms_env());
  CHECK(r.method == MelonMethod::iterated);
  CHECK(r.env.line(1) ==
        PathLine::make(Rational(3), {{Rational(1), Rational(1)}, {Rational(2), Rational(1)}}, {}));
  CHECK(r.env.line(2) == PathLine::flat(Rational(3)));

  MelonResult r3 = melon_iterated(three_atoms());
  CHECK(r3.env.line(1) ==
        PathLine::make(Rational(3),
                       {{Rational(1), Rational(1)},
                        {Rational(2), Rational(1)},
                        {Rational(3), Rational(1)}},
                       {}));
  CHECK(r3.env.line(2) == PathLine::flat(Rational(3)));
  CHECK(r3.env.line(3) == PathLine::flat(Rational(3)));

  PathEnv one = make_env(1, Rational(2), {LineSpec{{{Rational(1), Rational(1)}}, {}}});
  CHECK(melon_iterated(one).env == one);
}

TEST_CASE("direct melon equals iterated melon bit-exactly") {
  CHECK(melon_direct(PathEnv::flat(3, Rational(2))).env == PathEnv::flat(3, Rational(2)));
  CHECK(melon_direct(atoms_env()).env == melon_iterated(atoms_env()).env);
  CHECK(melon_direct(bernoulli_env()).env == melon_iterated(bernoulli_env()).env);
  CHECK(melon_direct(three_atoms()).env == melon_iterated(three_atoms()).env);
  CHECK(melon_direct(atoms_env()).method == MelonMethod::direct);

  Rng rng(303, 23);
  for (int trial = 0; trial < 30; ++trial) {
    int n = static_cast<int>(rng.range(1, 4));
    PathEnv env = random_mixed_env(rng, n, 3);
    std::string js = env_to_json(env);
    CAPTURE(js);
    CHECK(melon_direct(env).env == melon_iterated(env).env);
  }
}

TEST_CASE("melonization preserves multi-path passage values") {
  Rng rng(304, 24);
  for (int trial = 0; trial < 8; ++trial) {
    int n = static_cast<int>(rng.range(2, 3));
    PathEnv env = random_mixed_env(rng, n, 2);
    PathEnv w = melon_iterated(env).env;
    std::string js = env_to_json(env);
    CAPTURE(js);
    std::vector<Rational> g = merge_sorted_times(env.grid(), w.grid());
    for (int k = 1; k <= n; ++k) {
      for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = a; b < g.size(); ++b) {
          EndpointSpec spec;
          for (int i = 0; i < k; ++i) {
            spec.starts.push_back(gp(g[a], n));
            spec.ends.push_back(gp(g[b], 1));
          }
          CHECK(lpp_multi(env, spec) == lpp_multi(w, spec));
        }
      }
    }
  }
}

TEST_CASE("melon is idempotent") {
  Rng rng(305, 25);
  for (int trial = 0; trial < 15; ++trial) {
    int n = static_cast<int>(rng.range(1, 3));
    PathEnv w = melon_iterated(random_mixed_env(rng, n, 3)).env;
    CHECK(melon_iterated(w).env == w);
    CHECK(is_pitman_ordered(w));
  }
}

TEST_CASE("pitman order detection") {
  CHECK_FALSE(is_pitman_ordered(atoms_env()));
  CHECK(is_pitman_ordered(PathEnv::flat(3, Rational(2))));
  CHECK(is_pitman_ordered(melon_iterated(three_atoms()).env));
  // A bottom line with mass at 0 can never sit below the top line.
  PathEnv at_zero = make_env(2, Rational(1),
                             {LineSpec{{{Rational(0), Rational(5)}}, {}},
                              LineSpec{{{Rational(0), Rational(1)}}, {}}});
  CHECK_FALSE(is_pitman_ordered(at_zero));
}

TEST_CASE("car positions match passage profiles") {
  PathEnv env = atoms_env();
  CHECK(car_positions(env, 2) == env.line(2));
  CHECK(car_positions(env, 1) ==
        PathLine::make(Rational(3), {{Rational(1), Rational(1)}, {Rational(2), Rational(1)}}, {}));
  CHECK_ERROR_KIND(car_positions(env, 0), errkind::IndexOutOfRange);
  CHECK_ERROR_KIND(car_positions(env, 3), errkind::IndexOutOfRange);

  Rng rng(306, 26);
  for (int trial = 0; trial < 12; ++trial) {
    int n = static_cast<int>(rng.range(2, 3));
    PathEnv env2 = random_mixed_env(rng, n, 3);
    std::string js = env_to_json(env2);
    CAPTURE(js);
    for (int m = 1; m <= n; ++m) {
      CHECK(car_positions(env2, m) == lpp_profile(env2, 1, m));
    }
  }
}

TEST_CASE("braid relation on three lines") {
  Rng rng(307, 27);
  EnvGenOptions opt;
  opt.n = 3;
  opt.horizon = 3;
  opt.max_events_per_line = 2;
  for (int trial = 0; trial < 12; ++trial) {
    PathEnv env = trial % 2 == 0 ? random_env(rng, opt)
                                 : random_class_env(rng, EnvClass::Continuous, opt);
    std::string js = env_to_json(env);
    CAPTURE(js);
    PathEnv lhs = sigma(sigma(sigma(env, 1), 2), 1);
    PathEnv rhs = sigma(sigma(sigma(env, 2), 1), 2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("tau squared equals the shifted product") {
  Rng rng(308, 28);
  for (int trial = 0; trial < 10; ++trial) {
    int n = static_cast<int>(rng.range(2, 4));
    PathEnv env = random_mixed_env(rng, n, 3);
    std::string js = env_to_json(env);
    CAPTURE(js);
    for (int m = 1; m < n; ++m) {
      PathEnv once = tau(env, m);
      CHECK(tau(once, m) == tau(once, m + 1));
    }
  }
}

TEST_CASE("melon optimizers never move right on two lines") {
  Rng rng(309, 29);
  for (int trial = 0; trial < 20; ++trial) {
    PathEnv env = random_mixed_env(rng, 2, 3);
    PathEnv w = melon_iterated(env).env;
    std::string js = env_to_json(env);
    CAPTURE(js);
    for (const Rational& y : env.grid()) {
      EndpointSpec spec = spec1(0, 2, y, 1);
      for (OptSide side : {OptSide::Leftmost, OptSide::Rightmost}) {
        Rational tf = optimizer(env, spec, side).paths[0].jump_times[0];
        Rational tw = optimizer(w, spec, side).paths[0].jump_times[0];
        CHECK(tw <= tf);
      }
    }
  }
}

}  // TEST_SUITE
