#pragma once

#include <utility>

#include "mrsk/path_env.hpp"

namespace mrsk {

enum class MelonMethod { direct, iterated };

struct MelonResult {
  PathEnv env;
  MelonMethod method;
};

// Two-line Pitman transform: Wf1(t) = f1(t) + sup_{z in [0,t]} (f2(z) -
// f1(z^-)) and Wf2 = f1 + f2 - Wf1, computed exactly by a left-to-right sweep
// that emits breakpoints where rising segments cross the running supremum.
std::pair<PathLine, PathLine> pitman2(const PathLine& f1, const PathLine& f2);

// Lines i, i+1 replaced by their Pitman transform (1 <= i <= n-1).
PathEnv sigma(const PathEnv& env, int i);

// tau_m = sigma_m sigma_{m+1} ... sigma_{n-1}, rightmost factor applied
// first; tau_n is the identity.
PathEnv tau(const PathEnv& env, int m);

// Bubble-sort melon: tau_{n-1} ... tau_1, with tau_1 applied first.
MelonResult melon_iterated(const PathEnv& env);

// Melon from the multi-path definition: line k is the difference of the
// k- and (k-1)-path passage profiles into line 1.
MelonResult melon_direct(const PathEnv& env);

// (tau_m f)_m, which equals y -> f[(0,n) -> (y,m)].
PathLine car_positions(const PathEnv& env, int m);

// True iff f_{i+1}(t) <= f_i(t^-) for every i and t.
bool is_pitman_ordered(const PathEnv& env);

}  // namespace mrsk
