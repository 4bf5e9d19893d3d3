#include "mrsk/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mrsk/errors.hpp"

namespace mrsk {

using nlohmann::json;

namespace {

json rat_json(const Rational& r) { return json(rat_to_string(r)); }

Rational rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (!j.is_string()) fail(errkind::ParseError, "expected a rational string");
  return rat_parse(j.get<std::string>());
}

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(errkind::ParseError, "malformed JSON");
  return doc;
}

void check_format(const json& doc) {
  if (doc.contains("format") && doc["format"] != 1) {
    fail(errkind::ParseError, "unsupported format version");
  }
}

json env_to_json_obj(const PathEnv& env) {
  json lines = json::array();
  for (const auto& line : env.lines()) {
    json jumps = json::array();
    const auto& bk = line.breakpoints();
    for (std::size_t i = 0; i < bk.size(); ++i) {
      if (line.jumps()[i] != 0) {
        jumps.push_back(json::array({rat_json(bk[i]), rat_json(line.jumps()[i])}));
      }
    }
    json segments = json::array();
    for (std::size_t i = 0; i + 1 < bk.size(); ++i) {
      if (line.slopes()[i] != 0) {
        segments.push_back(
            json::array({rat_json(bk[i]), rat_json(bk[i + 1]), rat_json(line.slopes()[i])}));
      }
    }
    lines.push_back(json{{"jumps", jumps}, {"segments", segments}});
  }
  return json{{"n", env.n()}, {"horizon", rat_to_string(env.horizon())}, {"lines", lines}};
}

PathEnv env_from_json_obj(const json& doc) {
  check_format(doc);
  if (!doc.contains("n") || !doc.contains("horizon") || !doc.contains("lines")) {
    fail(errkind::ParseError, "environment JSON needs n, horizon, lines");
  }
  if (!doc["n"].is_number_integer()) fail(errkind::ParseError, "n must be an integer");
  int n = doc["n"].get<int>();
  Rational horizon = rat_from_json(doc["horizon"]);
  if (!doc["lines"].is_array()) fail(errkind::ParseError, "lines must be an array");
  std::vector<LineSpec> specs;
  for (const auto& jline : doc["lines"]) {
    LineSpec spec;
    if (jline.contains("jumps")) {
      if (!jline["jumps"].is_array()) fail(errkind::ParseError, "jumps must be an array");
      for (const auto& pair : jline["jumps"]) {
        if (!pair.is_array() || pair.size() != 2) {
          fail(errkind::ParseError, "each jump is a [time, mass] pair");
        }
        spec.jumps.push_back({rat_from_json(pair[0]), rat_from_json(pair[1])});
      }
    }
    if (jline.contains("segments")) {
      if (!jline["segments"].is_array()) fail(errkind::ParseError, "segments must be an array");
      for (const auto& triple : jline["segments"]) {
        if (!triple.is_array() || triple.size() != 3) {
          fail(errkind::ParseError, "each segment is a [t0, t1, slope] triple");
        }
        spec.segments.push_back(
            {rat_from_json(triple[0]), rat_from_json(triple[1]), rat_from_json(triple[2])});
      }
    }
    specs.push_back(std::move(spec));
  }
  return make_env(n, horizon, specs);
}

}  // namespace

std::string env_to_json(const PathEnv& env) { return env_to_json_obj(env).dump(); }

PathEnv env_from_json(const std::string& text) {
  return env_from_json_obj(parse_document(text));
}

std::string tuple_to_json(const DisjointTuple& tuple) {
  json paths = json::array();
  for (const auto& p : tuple.paths) {
    json times = json::array();
    for (const auto& t : p.jump_times) times.push_back(rat_json(t));
    json jp{{"start", json::array({rat_json(p.start.time), p.start.line})},
            {"end", json::array({rat_json(p.end.time), p.end.line})},
            {"jump_times", times}};
    if (p.start.side == Side::LeftOpen) jp["start_open"] = true;
    if (p.end.side == Side::LeftOpen) jp["end_open"] = true;
    paths.push_back(jp);
  }
  return json{{"paths", paths}}.dump();
}

DisjointTuple tuple_from_json(const std::string& text) {
  json doc = parse_document(text);
  check_format(doc);
  if (!doc.contains("paths") || !doc["paths"].is_array()) {
    fail(errkind::ParseError, "tuple JSON needs a paths array");
  }
  DisjointTuple tuple;
  for (const auto& jp : doc["paths"]) {
    LatticePath p;
    if (!jp.contains("start") || !jp.contains("end") || !jp["start"].is_array() ||
        !jp["end"].is_array() || jp["start"].size() != 2 || jp["end"].size() != 2) {
      fail(errkind::ParseError, "each path needs start and end [time, line] pairs");
    }
    p.start.time = rat_from_json(jp["start"][0]);
    p.start.line = jp["start"][1].get<int>();
    p.end.time = rat_from_json(jp["end"][0]);
    p.end.line = jp["end"][1].get<int>();
    if (jp.value("start_open", false)) p.start.side = Side::LeftOpen;
    if (jp.value("end_open", false)) p.end.side = Side::LeftOpen;
    if (jp.contains("jump_times")) {
      for (const auto& t : jp["jump_times"]) p.jump_times.push_back(rat_from_json(t));
    }
    tuple.paths.push_back(std::move(p));
  }
  return tuple;
}

std::string pair_to_json(const RSKPair& pair) {
  json rows = json::array();
  for (const auto& row : pair.g.rows()) {
    json jrow = json::array();
    for (const auto& v : row) jrow.push_back(rat_json(v));
    rows.push_back(jrow);
  }
  return json{{"w", env_to_json_obj(pair.w)}, {"g", rows}}.dump();
}

RSKPair pair_from_json(const std::string& text) {
  json doc = parse_document(text);
  check_format(doc);
  if (!doc.contains("w") || !doc.contains("g") || !doc["g"].is_array()) {
    fail(errkind::ParseError, "pair JSON needs a w environment and a g row array");
  }
  PathEnv w = env_from_json_obj(doc["w"]);
  std::vector<std::vector<Rational>> rows;
  for (const auto& jrow : doc["g"]) {
    if (!jrow.is_array()) fail(errkind::ParseError, "pattern rows must be arrays");
    std::vector<Rational> row;
    for (const auto& v : jrow) row.push_back(rat_from_json(v));
    rows.push_back(std::move(row));
  }
  return RSKPair{std::move(w), GTPattern(std::move(rows))};
}

std::string matrix_to_json(const LatticeMatrix& A) {
  json entries = json::array();
  for (const auto& row : A.entries()) {
    json jrow = json::array();
    for (const auto& e : row) jrow.push_back(rat_json(e));
    entries.push_back(jrow);
  }
  return json{{"rows", A.rows()}, {"cols", A.cols()}, {"entries", entries}}.dump();
}

LatticeMatrix matrix_from_json(const std::string& text) {
  json doc = parse_document(text);
  check_format(doc);
  if (!doc.contains("rows") || !doc.contains("cols") || !doc.contains("entries")) {
    fail(errkind::ParseError, "matrix JSON needs rows, cols, entries");
  }
  if (!doc["rows"].is_number_integer() || !doc["cols"].is_number_integer()) {
    fail(errkind::ParseError, "rows and cols must be integers");
  }
  if (!doc["entries"].is_array()) fail(errkind::ParseError, "entries must be an array");
  std::vector<std::vector<Rational>> entries;
  for (const auto& jrow : doc["entries"]) {
    if (!jrow.is_array()) fail(errkind::ParseError, "each matrix row must be an array");
    std::vector<Rational> row;
    for (const auto& e : jrow) row.push_back(rat_from_json(e));
    entries.push_back(std::move(row));
  }
  return LatticeMatrix(doc["rows"].get<int>(), doc["cols"].get<int>(), std::move(entries));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errkind::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errkind::IoError, "cannot write " + path);
  out << content;
  if (!out.good()) fail(errkind::IoError, "write failed for " + path);
}

PathEnv env_from_file(const std::string& path) {
  return env_from_json(read_text_file(path));
}

void env_to_file(const PathEnv& env, const std::string& path) {
  write_text_file(path, env_to_json(env) + "\n");
}

}  // namespace mrsk
