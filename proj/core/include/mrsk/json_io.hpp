#pragma once

#include <string>

#include "mrsk/lattice.hpp"
#include "mrsk/lpp.hpp"
#include "mrsk/path_env.hpp"
#include "mrsk/rsk.hpp"

namespace mrsk {

// Serialized formats carry every rational as an exact "p/q" string ("p" when
// the denominator is 1). Parsers accept an optional "format": 1 marker
// field and reject any other value.

std::string env_to_json(const PathEnv& env);
PathEnv env_from_json(const std::string& text);

std::string tuple_to_json(const DisjointTuple& tuple);
DisjointTuple tuple_from_json(const std::string& text);

// Pair format: {"w": <env>, "g": [[g_1(1)], [g_1(2), g_2(2)], ...]}.
std::string pair_to_json(const RSKPair& pair);
RSKPair pair_from_json(const std::string& text);

// Matrix format: {"rows": n, "cols": m, "entries": [[row 1...], ...]}
// row-major with row 1 first; entries are rational strings or bare integers.
std::string matrix_to_json(const LatticeMatrix& A);
LatticeMatrix matrix_from_json(const std::string& text);

// File helpers (IoError on filesystem problems).
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

PathEnv env_from_file(const std::string& path);
void env_to_file(const PathEnv& env, const std::string& path);

}  // namespace mrsk
