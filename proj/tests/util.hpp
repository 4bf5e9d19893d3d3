#pragma once

#include <string>

#include "mrsk/errors.hpp"
#include "mrsk/lpp.hpp"
#include "mrsk/path_env.hpp"
#include "mrsk/rational.hpp"

// Shared fixtures for the unit tests.
namespace mrsk::testutil {

inline Rational rat(const std::string& s) { return rat_parse(s); }

// Two lines on [0,3]: line 1 has a unit atom at 2, line 2 a unit atom at 1.
inline PathEnv atoms_env() {
  return make_env(2, Rational(3),
                  {LineSpec{{{Rational(2), Rational(1)}}, {}},
                   LineSpec{{{Rational(1), Rational(1)}}, {}}});
}

// Two lines on [0,2]: line 1 slopes (0,1), line 2 slopes (1,0).
inline PathEnv bernoulli_env() {
  return make_env(2, Rational(2),
                  {LineSpec{{}, {{Rational(1), Rational(2), Rational(1)}}},
                   LineSpec{{}, {{Rational(0), Rational(1), Rational(1)}}}});
}

inline GridPoint gp(const Rational& t, int line, Side side = Side::Closed) {
  return GridPoint{t, line, side};
}

inline EndpointSpec spec1(const Rational& x, int from_line, const Rational& y, int to_line) {
  return EndpointSpec{{gp(x, from_line)}, {gp(y, to_line)}};
}

inline EndpointSpec speck(const Rational& x, int from_line, const Rational& y, int to_line,
                          int k) {
  EndpointSpec s;
  for (int i = 0; i < k; ++i) {
    s.starts.push_back(gp(x, from_line));
    s.ends.push_back(gp(y, to_line));
  }
  return s;
}

}  // namespace mrsk::testutil

// Asserts that `expr` throws mrsk::Error with the given kind.
#define CHECK_ERROR_KIND(expr, kind_expected)                      \
  do {                                                             \
    bool thrown_ = false;                                          \
    try {                                                          \
      (void)(expr);                                                \
    } catch (const mrsk::Error& e_) {                              \
      thrown_ = true;                                              \
      CHECK(std::string(e_.kind()) == std::string(kind_expected)); \
    }                                                              \
    CHECK(thrown_);                                                \
  } while (0)
