#include "mrsk/lattice.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "mrsk/errors.hpp"
#include "mrsk/lpp.hpp"

namespace mrsk {

namespace {

struct PathSpec {
  long x = 0;  // start column
  long a = 0;  // start row
  long y = 0;  // end column
  long b = 0;  // end row
};

// Canonical pairing: top path first. Nonnegative weights let any disjoint
// tuple be uncrossed into this order without changing the total.
std::vector<PathSpec> pair_endpoints(std::vector<LatticePoint> starts,
                                     std::vector<LatticePoint> ends, bool dual) {
  if (starts.size() != ends.size()) {
    fail(errkind::DimensionMismatch, "lattice_lpp needs as many starts as ends");
  }
  auto by_row_col = [](const LatticePoint& l, const LatticePoint& r) {
    return l.row != r.row ? l.row < r.row : l.col < r.col;
  };
  std::sort(starts.begin(), starts.end(), by_row_col);
  std::sort(ends.begin(), ends.end(), by_row_col);
  std::vector<PathSpec> ps(starts.size());
  for (std::size_t j = 0; j < starts.size(); ++j) {
    ps[j] = {starts[j].col, starts[j].row, ends[j].col, ends[j].row};
    if (ps[j].x > ps[j].y || ps[j].a < ps[j].b) {
      fail(errkind::NoPathExists, "endpoint pair admits no path");
    }
    if (dual && ps[j].x == ps[j].y && ps[j].a != ps[j].b) {
      fail(errkind::NoPathExists, "single-column dual path cannot change row");
    }
  }
  return ps;
}

Rational column_sum(const LatticeMatrix& A, long c, long r1, long r2) {
  Rational s = 0;
  for (long r = std::max<long>(r1, 1); r <= std::min<long>(r2, A.rows()); ++r) {
    s += A.at(c, r);
  }
  return s;
}

using StateMap = std::map<std::vector<long>, Rational>;

void keep_max(StateMap& states, std::vector<long> key, const Rational& val) {
  auto [it, inserted] = states.emplace(std::move(key), val);
  if (!inserted && it->second < val) it->second = val;
}

// Column sweep for ordinary paths. A path occupies a contiguous row interval
// [exit, entry] per column; the exit row becomes the entry row one column to
// the right, and adjacent active paths keep entry(upper) < exit(lower).
Rational lpp_ordinary(const LatticeMatrix& A, const std::vector<PathSpec>& ps) {
  long cmin = ps[0].x, cmax = ps[0].y;
  for (const PathSpec& p : ps) {
    cmin = std::min(cmin, p.x);
    cmax = std::max(cmax, p.y);
  }
  StateMap states;
  states[{}] = 0;
  for (long c = cmin; c <= cmax; ++c) {
    std::vector<int> active;
    for (int j = 0; j < static_cast<int>(ps.size()); ++j) {
      if (ps[j].x <= c && c <= ps[j].y) active.push_back(j);
    }
    StateMap next;
    for (const auto& [rows, val] : states) {
      // entry rows: carried over for crossing paths, start row for new ones
      std::vector<long> entry(active.size());
      std::size_t cross = 0;
      for (std::size_t idx = 0; idx < active.size(); ++idx) {
        entry[idx] = ps[active[idx]].x == c ? ps[active[idx]].a : rows[cross++];
      }
      std::vector<long> exits(active.size());
      auto choose = [&](auto&& self, std::size_t idx, long prev_entry, const Rational& acc) -> void {
        if (idx == active.size()) {
          std::vector<long> key;
          for (std::size_t i = 0; i < active.size(); ++i) {
            if (ps[active[i]].y > c) key.push_back(exits[i]);
          }
          keep_max(next, std::move(key), acc);
          return;
        }
        const PathSpec& p = ps[active[idx]];
        long lo_min = std::max(p.b, idx == 0 ? p.b : prev_entry + 1);
        long lo_max = p.y == c ? p.b : entry[idx];
        for (long lo = lo_min; lo <= std::min(lo_max, entry[idx]); ++lo) {
          exits[idx] = lo;
          self(self, idx + 1, entry[idx], acc + column_sum(A, c, lo, entry[idx]));
        }
      };
      choose(choose, 0, 0, val);
    }
    states = std::move(next);
    if (states.empty()) fail(errkind::NoPathExists, "no disjoint path tuple");
  }
  return states.at({});
}

// Column sweep for dual paths: one row per active path and column, rows
// weakly decreasing along each path, strictly increasing across paths.
Rational lpp_dual(const LatticeMatrix& A, const std::vector<PathSpec>& ps) {
  long cmin = ps[0].x, cmax = ps[0].y;
  for (const PathSpec& p : ps) {
    cmin = std::min(cmin, p.x);
    cmax = std::max(cmax, p.y);
  }
  StateMap states;
  states[{}] = 0;
  for (long c = cmin; c <= cmax; ++c) {
    std::vector<int> active;
    for (int j = 0; j < static_cast<int>(ps.size()); ++j) {
      if (ps[j].x <= c && c <= ps[j].y) active.push_back(j);
    }
    StateMap next;
    for (const auto& [rows, val] : states) {
      std::vector<long> prev(active.size(), 0);
      std::size_t cross = 0;
      for (std::size_t idx = 0; idx < active.size(); ++idx) {
        if (ps[active[idx]].x < c) prev[idx] = rows[cross++];
      }
      std::vector<long> cur(active.size());
      auto choose = [&](auto&& self, std::size_t idx, long prev_row, const Rational& acc) -> void {
        if (idx == active.size()) {
          std::vector<long> key;
          for (std::size_t i = 0; i < active.size(); ++i) {
            if (ps[active[i]].y > c) key.push_back(cur[i]);
          }
          keep_max(next, std::move(key), acc);
          return;
        }
        const PathSpec& p = ps[active[idx]];
        long r_min = std::max(p.b, idx == 0 ? p.b : prev_row + 1);
        long r_max = p.x == c ? p.a : prev[idx];
        if (p.x == c) r_min = std::max(r_min, p.a);
        if (p.y == c) {
          r_min = std::max(r_min, p.b);
          r_max = std::min(r_max, p.b);
        }
        for (long r = r_min; r <= r_max; ++r) {
          cur[idx] = r;
          self(self, idx + 1, r, acc + A.at(c, r));
        }
      };
      choose(choose, 0, 0, val);
    }
    states = std::move(next);
    if (states.empty()) fail(errkind::NoPathExists, "no disjoint path tuple");
  }
  return states.at({});
}

}  // namespace

LatticeMatrix::LatticeMatrix(int rows, int cols, std::vector<std::vector<Rational>> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ < 1 || cols_ < 1) {
    fail(errkind::DimensionMismatch, "matrix needs at least one row and column");
  }
  if (static_cast<int>(entries_.size()) != rows_) {
    fail(errkind::DimensionMismatch, "matrix row count mismatch");
  }
  for (const auto& row : entries_) {
    if (static_cast<int>(row.size()) != cols_) {
      fail(errkind::DimensionMismatch, "matrix column count mismatch");
    }
    for (const Rational& e : row) {
      if (e < 0) fail(errkind::OutOfRange, "matrix entries must be nonnegative");
    }
  }
}

LatticeMatrix LatticeMatrix::zeros(int rows, int cols) {
  return LatticeMatrix(rows, cols,
                       std::vector<std::vector<Rational>>(rows, std::vector<Rational>(cols, 0)));
}

Rational LatticeMatrix::at(long col, long row) const {
  if (col < 1 || col > cols_ || row < 1 || row > rows_) return 0;
  return entries_[row - 1][col - 1];
}

bool LatticeMatrix::is_integer() const {
  for (const auto& row : entries_) {
    for (const Rational& e : row) {
      if (!rat_is_integer(e)) return false;
    }
  }
  return true;
}

bool LatticeMatrix::is_binary() const {
  for (const auto& row : entries_) {
    for (const Rational& e : row) {
      if (e != 0 && e != 1) return false;
    }
  }
  return true;
}

LatticeMatrix LatticeMatrix::truncate_cols(int c) const {
  std::vector<std::vector<Rational>> entries = entries_;
  for (auto& row : entries) {
    for (int i = std::max(c, 0); i < cols_; ++i) row[i] = 0;
  }
  return LatticeMatrix(rows_, cols_, std::move(entries));
}

bool LatticeMatrix::operator==(const LatticeMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

std::vector<LatticePoint> staggered_starts(const LatticePoint& p, int k) {
  std::vector<LatticePoint> out;
  for (int j = 1; j <= k; ++j) out.push_back({p.col, p.row - k + j});
  return out;
}

std::vector<LatticePoint> staggered_ends(const LatticePoint& q, int k) {
  std::vector<LatticePoint> out;
  for (int j = 1; j <= k; ++j) out.push_back({q.col + j - 1, q.row});
  return out;
}

Rational lattice_lpp(const LatticeMatrix& A, const std::vector<LatticePoint>& starts,
                     const std::vector<LatticePoint>& ends, bool dual) {
  if (starts.empty() && ends.empty()) return 0;
  std::vector<PathSpec> ps = pair_endpoints(starts, ends, dual);
  return dual ? lpp_dual(A, ps) : lpp_ordinary(A, ps);
}

namespace {

void enumerate_ordinary(const LatticePoint& at, const LatticePoint& end,
                        std::vector<LatticePoint>& prefix,
                        std::vector<std::vector<LatticePoint>>& out) {
  prefix.push_back(at);
  if (at == end) {
    out.push_back(prefix);
  } else {
    if (at.col < end.col) enumerate_ordinary({at.col + 1, at.row}, end, prefix, out);
    if (at.row > end.row) enumerate_ordinary({at.col, at.row - 1}, end, prefix, out);
  }
  prefix.pop_back();
}

}  // namespace

Rational lattice_lpp_overlap(const LatticeMatrix& A, const std::vector<LatticePoint>& starts,
                             const std::vector<LatticePoint>& ends) {
  if (starts.empty() && ends.empty()) return 0;
  std::vector<PathSpec> ps = pair_endpoints(starts, ends, false);
  std::vector<std::vector<std::vector<LatticePoint>>> paths(ps.size());
  for (std::size_t j = 0; j < ps.size(); ++j) {
    std::vector<LatticePoint> prefix;
    enumerate_ordinary({ps[j].x, ps[j].a}, {ps[j].y, ps[j].b}, prefix, paths[j]);
    if (paths[j].empty()) fail(errkind::NoPathExists, "endpoint pair admits no path");
  }
  std::vector<std::size_t> pick(ps.size(), 0);
  Rational best = 0;
  bool first = true;
  auto tuple_value = [&]() {
    std::vector<std::pair<long, long>> seen;
    for (std::size_t j = 0; j < ps.size(); ++j) {
      for (const LatticePoint& v : paths[j][pick[j]]) seen.emplace_back(v.col, v.row);
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    Rational s = 0;
    for (const auto& [c, r] : seen) s += A.at(c, r);
    return s;
  };
  while (true) {
    Rational v = tuple_value();
    if (first || best < v) best = v;
    first = false;
    std::size_t j = 0;
    while (j < ps.size() && ++pick[j] == paths[j].size()) pick[j++] = 0;
    if (j == ps.size()) break;
  }
  return best;
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (const auto& row : rows_) {
    if (row.empty()) fail(errkind::DimensionMismatch, "interior tableau row is empty");
  }
}

std::vector<int> Tableau::shape() const {
  std::vector<int> s;
  for (const auto& row : rows_) s.push_back(static_cast<int>(row.size()));
  return s;
}

Tableau Tableau::transposed() const {
  for (std::size_t i = 0; i + 1 < rows_.size(); ++i) {
    if (rows_[i].size() < rows_[i + 1].size()) {
      fail(errkind::DimensionMismatch, "transpose needs a partition shape");
    }
  }
  std::vector<std::vector<int>> out(rows_.empty() ? 0 : rows_[0].size());
  for (const auto& row : rows_) {
    for (std::size_t j = 0; j < row.size(); ++j) out[j].push_back(row[j]);
  }
  return Tableau(std::move(out));
}

bool is_semistandard(const Tableau& t) {
  const auto& rows = t.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i + 1 < rows.size() && rows[i].size() < rows[i + 1].size()) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] < 1) return false;
      if (j + 1 < rows[i].size() && rows[i][j] > rows[i][j + 1]) return false;
      if (i + 1 < rows.size() && j < rows[i + 1].size() && rows[i][j] >= rows[i + 1][j]) return false;
    }
  }
  return true;
}

std::vector<int> conjugate_shape(const std::vector<int>& shape) {
  std::vector<int> out(shape.empty() ? 0 : shape[0], 0);
  for (int len : shape) {
    for (int j = 0; j < len; ++j) ++out[j];
  }
  return out;
}

GreeneValues greene_values(const LatticeMatrix& A, bool dual) {
  const int n = A.rows();
  const int m = A.cols();
  const long start_col = dual ? 0 : 1;
  GreeneValues out;
  out.q_values.assign(n, std::vector<Rational>(m, 0));
  out.p_values.assign(n, std::vector<Rational>(n, 0));
  // dual cells occupy (col-1, col], so dual tuples run between virtual
  // columns: starts at column 0, ends one column past the last one counted
  for (int k = 1; k <= n; ++k) {
    for (int i = 1; i <= m; ++i) {
      // truncated matrix: paths may overshoot column i only through zeros
      const int kk = dual ? k : std::min(k, i);
      LatticeMatrix trunc = A.truncate_cols(i);
      out.q_values[k - 1][i - 1] =
          lattice_lpp(trunc, staggered_starts({start_col, n}, kk),
                      staggered_ends({dual ? i + 1 : i, 1}, kk), dual);
    }
    for (int i = 1; i <= n; ++i) {
      const int kk = std::min(k, i);
      out.p_values[k - 1][i - 1] =
          lattice_lpp(A, staggered_starts({start_col, n}, kk),
                      staggered_ends({dual ? m + 1 : m, n - i + 1}, kk), dual);
    }
  }
  return out;
}

namespace {

// Second difference of a passage-value table at (k, i), with zero boundary.
long multiplicity_at(const std::vector<std::vector<Rational>>& v, int k, int i) {
  auto get = [&](int kk, int ii) -> Rational {
    return (kk >= 1 && ii >= 1) ? v[kk - 1][ii - 1] : Rational(0);
  };
  Rational d = (get(k, i) - get(k - 1, i)) - (get(k, i - 1) - get(k - 1, i - 1));
  if (!rat_is_integer(d)) {
    fail(errkind::InvariantViolation, "tableau multiplicity is not an integer");
  }
  if (d < 0) fail(errkind::InvariantViolation, "tableau multiplicity is negative");
  if (!d.get_num().fits_slong_p()) fail(errkind::OutOfRange, "tableau multiplicity too large");
  return d.get_num().get_si();
}

}  // namespace

TableauPair greene_tableaux(const LatticeMatrix& A, bool dual) {
  if (!dual && !A.is_integer()) {
    fail(errkind::NonIntegerEntries, "tableau decoding needs integer entries");
  }
  if (dual && !A.is_binary()) fail(errkind::NotBinary, "dual tableau decoding needs 0/1 entries");
  GreeneValues v = greene_values(A, dual);
  const int n = A.rows();
  const int m = A.cols();
  std::vector<std::vector<int>> qrows(n), prows(n);
  for (int k = 1; k <= n; ++k) {
    for (int i = 1; i <= m; ++i) {
      long mult = multiplicity_at(v.q_values, k, i);
      if (dual && mult > 1) {
        fail(errkind::InvariantViolation, "transposed recording row repeats a value");
      }
      qrows[k - 1].insert(qrows[k - 1].end(), mult, i);
    }
    for (int i = 1; i <= n; ++i) {
      long mult = multiplicity_at(v.p_values, k, i);
      prows[k - 1].insert(prows[k - 1].end(), mult, i);
    }
  }
  auto to_tableau = [](std::vector<std::vector<int>> rows) {
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].empty() || (i + 1 < rows.size() && rows[i].size() < rows[i + 1].size())) {
        fail(errkind::InvariantViolation, "decoded rows do not form a partition shape");
      }
    }
    return Tableau(std::move(rows));
  };
  TableauPair pair;
  pair.q = dual ? to_tableau(std::move(qrows)).transposed() : to_tableau(std::move(qrows));
  pair.p = to_tableau(std::move(prows));
  if (!is_semistandard(pair.q) || !is_semistandard(pair.p)) {
    fail(errkind::InvariantViolation, "decoded tableau is not semistandard");
  }
  const std::vector<int> qshape = dual ? conjugate_shape(pair.q.shape()) : pair.q.shape();
  if (qshape != pair.p.shape()) {
    fail(errkind::InvariantViolation, "decoded tableau shapes do not match");
  }
  return pair;
}

TableauPair bumping_rsk(const LatticeMatrix& A, bool dual) {
  if (!dual && !A.is_integer()) {
    fail(errkind::NonIntegerEntries, "row insertion needs integer entries");
  }
  if (dual && !A.is_binary()) fail(errkind::NotBinary, "dual row insertion needs 0/1 entries");
  const int n = A.rows();
  const int m = A.cols();
  std::vector<std::vector<int>> p, q;
  auto insert = [&](int value, int label) {
    for (std::size_t row = 0;; ++row) {
      if (row == p.size()) {
        p.push_back({});
        q.push_back({});
      }
      auto it = std::upper_bound(p[row].begin(), p[row].end(), value);
      if (it == p[row].end()) {
        p[row].push_back(value);
        q[row].push_back(label);
        return;
      }
      std::swap(*it, value);
    }
  };
  for (int r = 1; r <= m; ++r) {
    // letter for matrix row k counts from the bottom line up
    if (!dual) {
      for (int k = n; k >= 1; --k) {
        const Rational e = A.at(r, k);
        if (!e.get_num().fits_slong_p()) fail(errkind::OutOfRange, "entry too large to bump");
        for (long c = 0; c < e.get_num().get_si(); ++c) insert(n - k + 1, r);
      }
    } else {
      for (int k = 1; k <= n; ++k) {
        if (A.at(r, k) == 1) insert(n - k + 1, r);
      }
    }
  }
  TableauPair pair;
  pair.p = Tableau(std::move(p));
  pair.q = Tableau(std::move(q));
  if (dual) pair.q = pair.q.transposed();
  return pair;
}

PathEnv embed_matrix(const LatticeMatrix& A) {
  std::vector<LineSpec> lines(A.rows());
  for (int k = 1; k <= A.rows(); ++k) {
    for (int r = 1; r <= A.cols(); ++r) {
      if (A.at(r, k) != 0) lines[k - 1].jumps.push_back({Rational(r), A.at(r, k)});
    }
  }
  return make_env(A.rows(), Rational(A.cols()), lines);
}

PathEnv embed_binary(const LatticeMatrix& A) {
  if (!A.is_binary()) fail(errkind::NotBinary, "slope embedding needs 0/1 entries");
  std::vector<LineSpec> lines(A.rows());
  for (int k = 1; k <= A.rows(); ++k) {
    for (int r = 1; r <= A.cols(); ++r) {
      if (A.at(r, k) == 1) lines[k - 1].segments.push_back({Rational(r - 1), Rational(r), 1});
    }
  }
  return make_env(A.rows(), Rational(A.cols()), lines);
}

bool check_embedding(const LatticeMatrix& A, const std::vector<LatticePoint>& starts,
                     const std::vector<LatticePoint>& ends, bool dual) {
  const long m = A.cols();
  for (const LatticePoint& s : starts) {
    if (s.row < 1 || s.row > A.rows() || s.col < (dual ? 0 : 1) || s.col > m) {
      fail(errkind::OutOfRange, "start outside the embedded window");
    }
  }
  for (const LatticePoint& e : ends) {
    if (e.row < 1 || e.row > A.rows()) fail(errkind::OutOfRange, "end row outside the matrix");
  }
  Rational lattice = lattice_lpp(A, starts, ends, dual);
  PathEnv env = dual ? embed_binary(A) : embed_matrix(A);
  // lpp_multi pairs starts[j] with ends[j] positionally and requires path j
  // left of path j+1; present both lists in the engine's canonical order.
  auto canon = [](std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const LatticePoint& p, const LatticePoint& q) {
      return p.row != q.row ? p.row < q.row : p.col < q.col;
    });
    return pts;
  };
  EndpointSpec spec;
  for (const LatticePoint& s : canon(starts)) {
    spec.starts.push_back({Rational(dual ? std::max<long>(s.col - 1, 0) : s.col),
                           static_cast<int>(s.row)});
  }
  for (const LatticePoint& e : canon(ends)) {
    spec.ends.push_back({Rational(std::min<long>(e.col, m)), static_cast<int>(e.row)});
  }
  ExtValue v = lpp_multi(env, spec);
  return v.has_value() && *v == lattice;
}

RSKPair lattice_rsk_pair(const LatticeMatrix& A, bool dual) {
  const int n = A.rows();
  const int m = A.cols();
  GreeneValues v = greene_values(A, dual);
  auto level = [](const std::vector<std::vector<Rational>>& tab, int k, int i) -> Rational {
    if (k < 1 || i < 1) return 0;
    return (tab[k - 1][i - 1]) - (k > 1 ? tab[k - 2][i - 1] : Rational(0));
  };
  std::vector<LineSpec> lines(n);
  for (int j = 1; j <= n; ++j) {
    for (int r = 1; r <= m; ++r) {
      Rational d = level(v.q_values, j, r) - (r > 1 ? level(v.q_values, j, r - 1) : Rational(0));
      if (d == 0) continue;
      if (dual) {
        lines[j - 1].segments.push_back({Rational(r - 1), Rational(r), d});
      } else {
        lines[j - 1].jumps.push_back({Rational(r), d});
      }
    }
  }
  std::vector<std::vector<Rational>> grows;
  for (int i = 1; i <= n; ++i) {
    std::vector<Rational> row;
    for (int j = 1; j <= i; ++j) row.push_back(level(v.p_values, j, i));
    grows.push_back(std::move(row));
  }
  RSKPair decoded{make_env(n, Rational(m), lines), GTPattern(grows)};
  RSKPair direct = rsk_t(dual ? embed_binary(A) : embed_matrix(A));
  if (!(decoded == direct)) {
    fail(errkind::InvariantViolation, "passage-value route disagrees with sorting route");
  }
  return direct;
}

}  // namespace mrsk
