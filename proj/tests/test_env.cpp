#include <doctest.h>

#include <string>
#include <vector>

#include "mrsk/generators.hpp"
#include "mrsk/json_io.hpp"
#include "mrsk/path_env.hpp"
#include "mrsk/rng.hpp"
#include "util.hpp"

using namespace mrsk;
using namespace mrsk::testutil;

TEST_SUITE("path_env") {

TEST_CASE("eval with atoms and left limits") {
  PathEnv env = atoms_env();
  CHECK(env.eval(2, Rational(1)) == 1);
  CHECK(env.eval(2, Rational(1), true) == 0);
  CHECK(env.eval(1, Rational(2)) == 1);
  CHECK(env.eval(1, Rational(2), true) == 0);
  CHECK(env.eval(1, Rational(0), true) == 0);
  CHECK(env.eval(2, Rational(3)) == 1);
  CHECK_ERROR_KIND(env.eval(1, Rational(4)), errkind::OutOfHorizon);
  CHECK_ERROR_KIND(env.eval(1, Rational(-1)), errkind::OutOfHorizon);
  CHECK_ERROR_KIND(env.eval(3, Rational(1)), errkind::IndexOutOfRange);
}

TEST_CASE("eval on slopes") {
  PathEnv env = bernoulli_env();
  CHECK(env.eval(2, Rational(1)) == 1);
  CHECK(env.eval(1, Rational(1)) == 0);
  CHECK(env.eval(1, Rational(2)) == 1);
  CHECK(env.eval(1, rat("3/2")) == rat("1/2"));
  CHECK(env.eval(2, rat("1/2"), true) == rat("1/2"));
}

TEST_CASE("a value at zero is a jump at zero") {
  PathEnv env = make_env(1, Rational(2), {LineSpec{{{Rational(0), Rational(3)}}, {}}});
  CHECK(env.eval(1, Rational(0)) == 3);
  CHECK(env.eval(1, Rational(0), true) == 0);
}

TEST_CASE("measure includes the atom at the left endpoint") {
  PathEnv env = atoms_env();
  CHECK(env.measure(2, Rational(1), Rational(3)) == 1);
  CHECK(env.measure(2, rat("3/2"), Rational(3)) == 0);
  CHECK(bernoulli_env().measure(1, Rational(0), Rational(2)) == 1);
}

TEST_CASE("measure is additive once the interior atom is deduplicated") {
  PathEnv env = atoms_env();
  Rational whole = env.measure(2, Rational(0), Rational(3));
  Rational left = env.measure(2, Rational(0), Rational(1));
  Rational right = env.measure(2, Rational(1), Rational(3));
  CHECK(whole == left + right - env.line(2).jump_at(Rational(1)));
}

TEST_CASE("construction validation") {
  CHECK_ERROR_KIND(
      make_env(1, Rational(2), {LineSpec{{{Rational(1), Rational(-1)}}, {}}}),
      errkind::NegativeJump);
  CHECK_ERROR_KIND(
      make_env(1, Rational(2), {LineSpec{{{Rational(3), Rational(1)}}, {}}}),
      errkind::HorizonMismatch);
  CHECK_ERROR_KIND(make_env(1, Rational(0), {LineSpec{}}), errkind::HorizonMismatch);
  CHECK_ERROR_KIND(
      make_env(1, Rational(2),
               {LineSpec{{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}}, {}}}),
      errkind::UnsortedBreakpoints);
  CHECK_ERROR_KIND(
      make_env(1, Rational(3),
               {LineSpec{{}, {{Rational(0), Rational(2), Rational(1)},
                              {Rational(1), Rational(3), Rational(1)}}}}),
      errkind::UnsortedBreakpoints);
  CHECK_ERROR_KIND(make_env(2, Rational(2), {LineSpec{}}), errkind::DimensionMismatch);
}

TEST_CASE("canonical form ignores zero jumps and merges equal slopes") {
  PathEnv a = make_env(1, Rational(2),
                       {LineSpec{{{Rational(1), Rational(0)}},
                                 {{Rational(0), Rational(1), Rational(1)},
                                  {Rational(1), Rational(2), Rational(1)}}}});
  PathEnv b = make_env(1, Rational(2), {LineSpec{{}, {{Rational(0), Rational(2), Rational(1)}}}});
  CHECK(a == b);
  CHECK(a.line(1).breakpoints().size() == 2);
}

TEST_CASE("rotate maps atoms to mirrored times") {
  PathEnv env = atoms_env();
  PathEnv r = rotate(env, Rational(3));
  // Line 1 of the rotation carries old line 2's atom at 3-1=2, and vice versa.
  CHECK(r.line(1).jump_at(Rational(2)) == 1);
  CHECK(r.line(2).jump_at(Rational(1)) == 1);
  CHECK(r == env);
  CHECK_ERROR_KIND(rotate(env, Rational(2)), errkind::HorizonMismatch);
}

TEST_CASE("rotate reverses slopes") {
  // Line 1 slopes (0,1) and line 2 slopes (1,0) swap and reverse into
  // themselves, so this environment is rotation-symmetric.
  PathEnv env = bernoulli_env();
  CHECK(rotate(env, Rational(2)) == env);
  PathEnv lone = make_env(1, Rational(2), {LineSpec{{}, {{Rational(0), Rational(1), Rational(2)}}}});
  PathEnv r = rotate(lone, Rational(2));
  CHECK(r.line(1).slope_at(Rational(0)) == 0);
  CHECK(r.line(1).slope_at(rat("3/2")) == 2);
}

TEST_CASE("rotate is an involution") {
  Rng rng(20260815, 1);
  EnvGenOptions opt;
  opt.n = 3;
  opt.horizon = 4;
  for (int trial = 0; trial < 25; ++trial) {
    PathEnv env = random_env(rng, opt);
    CHECK(rotate(rotate(env, env.horizon()), env.horizon()) == env);
  }
  PathEnv flat = PathEnv::flat(2, Rational(5));
  CHECK(rotate(flat, Rational(5)) == flat);
}

TEST_CASE("concat glues increments") {
  PathEnv env = atoms_env();
  PathEnv glued = concat(env, PathEnv::flat(2, Rational(2)));
  CHECK(glued.horizon() == 5);
  CHECK(glued.eval(1, Rational(4)) == 1);
  CHECK(glued.eval(2, Rational(5)) == 1);

  PathEnv delayed = concat(PathEnv::flat(2, Rational(2)), env);
  CHECK(delayed.eval(2, Rational(3)) == 1);
  CHECK(delayed.eval(2, Rational(3), true) == 0);

  // A tail jump at time 0 becomes an atom at the seam.
  PathEnv tail = make_env(2, Rational(1),
                          {LineSpec{{{Rational(0), Rational(2)}}, {}}, LineSpec{}});
  PathEnv seam = concat(env, tail);
  CHECK(seam.eval(1, Rational(3)) == 3);
  CHECK(seam.eval(1, Rational(3), true) == 1);

  CHECK_ERROR_KIND(concat(env, PathEnv::flat(3, Rational(1))), errkind::DimensionMismatch);
}

TEST_CASE("oplus_alpha staircase atoms") {
  PathEnv env = atoms_env();
  PathEnv e2 = oplus_alpha(env, Rational(2));
  CHECK(e2.horizon() == 5);
  CHECK(e2.line(1).jump_at(Rational(4)) == 2);
  CHECK(e2.line(2).jump_at(Rational(5)) == 4);
  CHECK(e2.line(1).jump_at(Rational(5)) == 0);

  PathEnv e0 = oplus_alpha(env, Rational(0));
  CHECK(e0.eval(1, Rational(5)) == env.eval(1, Rational(3)));

  PathEnv three = oplus_alpha(PathEnv::flat(3, Rational(1)), Rational(1));
  for (int i = 1; i <= 3; ++i) CHECK(three.line(i).jump_at(Rational(1 + i)) == i);

  CHECK_ERROR_KIND(oplus_alpha(env, Rational(-1)), errkind::NegativeJump);
}

TEST_CASE("restrict_env keeps atoms at the cut") {
  PathEnv env = atoms_env();
  PathEnv cut = restrict_env(env, Rational(2));
  CHECK(cut.horizon() == 2);
  CHECK(cut.line(1).jump_at(Rational(2)) == 1);
  CHECK(cut.line(2).jump_at(Rational(1)) == 1);
  PathEnv half = restrict_env(env, rat("3/2"));
  CHECK(half.line(1).eval(rat("3/2")) == 0);
  CHECK(half.line(2).eval(rat("3/2")) == 1);
  CHECK_ERROR_KIND(restrict_env(env, Rational(4)), errkind::OutOfHorizon);
  CHECK_ERROR_KIND(restrict_env(env, Rational(0)), errkind::OutOfHorizon);
}

TEST_CASE("class membership") {
  CHECK(class_check(bernoulli_env(), EnvClass::BernoulliPaths));
  CHECK(class_check(atoms_env(), EnvClass::IntegerJumpsIntegerTimes));
  CHECK(class_check(atoms_env(), EnvClass::UnitJumps));
  CHECK_FALSE(class_check(atoms_env(), EnvClass::Continuous));
  CHECK_FALSE(class_check(bernoulli_env(), EnvClass::UnitJumps));
  CHECK(class_check(bernoulli_env(), EnvClass::Continuous));

  // Two unit jumps at the same time on different lines break UnitJumps.
  PathEnv clash = make_env(2, Rational(2),
                           {LineSpec{{{Rational(1), Rational(1)}}, {}},
                            LineSpec{{{Rational(1), Rational(1)}}, {}}});
  CHECK_FALSE(class_check(clash, EnvClass::UnitJumps));
  CHECK(class_check(clash, EnvClass::IntegerJumpsIntegerTimes));
}

TEST_CASE("random class environments satisfy their class") {
  Rng rng(99, 2);
  EnvGenOptions opt;
  opt.n = 3;
  opt.horizon = 5;
  for (EnvClass cls : {EnvClass::Continuous, EnvClass::UnitJumps,
                       EnvClass::RealJumpsIntegerTimes, EnvClass::IntegerJumpsIntegerTimes,
                       EnvClass::BernoulliPaths}) {
    for (int trial = 0; trial < 10; ++trial) {
      PathEnv env = random_class_env(rng, cls, opt);
      CHECK(class_check(env, cls));
    }
  }
}

TEST_CASE("classes are closed under concatenation") {
  Rng rng(7, 3);
  EnvGenOptions opt;
  opt.n = 2;
  opt.horizon = 3;
  for (EnvClass cls : {EnvClass::Continuous, EnvClass::RealJumpsIntegerTimes,
                       EnvClass::IntegerJumpsIntegerTimes, EnvClass::BernoulliPaths}) {
    for (int trial = 0; trial < 5; ++trial) {
      PathEnv a = random_class_env(rng, cls, opt);
      PathEnv b = random_class_env(rng, cls, opt);
      CHECK(class_check(concat(a, b), cls));
    }
  }
}

TEST_CASE("json round trip is exact") {
  Rng rng(123, 4);
  EnvGenOptions opt;
  opt.n = 3;
  opt.horizon = 4;
  CHECK(env_from_json(env_to_json(atoms_env())) == atoms_env());
  CHECK(env_from_json(env_to_json(bernoulli_env())) == bernoulli_env());
  for (int trial = 0; trial < 20; ++trial) {
    PathEnv env = random_env(rng, opt);
    CHECK(env_from_json(env_to_json(env)) == env);
  }
}

TEST_CASE("json parse errors") {
  CHECK_ERROR_KIND(env_from_json("not json"), errkind::ParseError);
  CHECK_ERROR_KIND(env_from_json("{\"n\": 1}"), errkind::ParseError);
  CHECK_ERROR_KIND(env_from_json("{\"format\": 2, \"n\": 1, \"horizon\": \"1\", \"lines\": [{}]}"),
                   errkind::ParseError);
  CHECK_ERROR_KIND(env_from_json("{\"n\": 1, \"horizon\": \"1/0\", \"lines\": [{}]}"),
                   errkind::ParseError);
  // Domain errors surface with their own kinds, not ParseError.
  CHECK_ERROR_KIND(
      env_from_json("{\"n\": 1, \"horizon\": \"2\", \"lines\": [{\"jumps\": [[\"1\", \"-1\"]]}]}"),
      errkind::NegativeJump);
}

}  // TEST_SUITE
