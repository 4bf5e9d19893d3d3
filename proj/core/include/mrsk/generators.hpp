#pragma once

#include "mrsk/path_env.hpp"
#include "mrsk/rng.hpp"

namespace mrsk {

// Knobs for random environment generation used by tests and the CLI.
struct EnvGenOptions {
  int n = 2;
  int horizon = 4;             // integer horizon
  int max_events_per_line = 3; // jump or breakpoint count per line
  int max_mass = 5;            // numerator bound for masses/slopes
  int max_denominator = 4;     // denominator bound for rational masses
  bool allow_negative_slopes = true;
};

// Mixed environment: rational-time jumps plus piecewise-linear drift.
PathEnv random_env(Rng& rng, const EnvGenOptions& opt);

// Environment drawn from one of the restriction classes; the result
// always satisfies class_check for that class.
PathEnv random_class_env(Rng& rng, EnvClass cls, const EnvGenOptions& opt);

// Copy of env with one extra atom of the given mass at (t, line).
PathEnv with_atom(const PathEnv& env, int line, const Rational& t, const Rational& mass);

}  // namespace mrsk
