#pragma once

#include <vector>

#include "mrsk/path_env.hpp"
#include "mrsk/rational.hpp"
#include "mrsk/rsk.hpp"

namespace mrsk {

// Nonnegative array A_{col,row} on a rows x cols box, row 1 on top; reads
// outside the box return zero. col is the time direction (1..cols), row the
// line direction (1..rows).
class LatticeMatrix {
 public:
  // entries[k-1][r-1] = A_{r,k} (row-major, row 1 first). All entries >= 0.
  LatticeMatrix(int rows, int cols, std::vector<std::vector<Rational>> entries);

  static LatticeMatrix zeros(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  // A_{col,row}; zero outside the box.
  Rational at(long col, long row) const;
  const std::vector<std::vector<Rational>>& entries() const { return entries_; }

  bool is_integer() const;
  bool is_binary() const;

  // Copy with every column beyond c zeroed; decoding a recording tableau
  // reads passage values of these truncations.
  LatticeMatrix truncate_cols(int c) const;

  bool operator==(const LatticeMatrix& other) const;
  bool operator!=(const LatticeMatrix& other) const { return !(*this == other); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::vector<Rational>> entries_;
};

struct LatticePoint {
  long col = 0;
  long row = 0;

  bool operator==(const LatticePoint& other) const = default;
};

// Staggered endpoint tuples: starts stack upward from p, ends fan rightward
// from q, so k disjoint paths "from p to q" are well defined.
std::vector<LatticePoint> staggered_starts(const LatticePoint& p, int k);
std::vector<LatticePoint> staggered_ends(const LatticePoint& q, int k);

// Max total weight of k vertex-disjoint lattice paths, path j from starts[j]
// to ends[j]. Ordinary paths step right or up a line (row - 1) and collect
// every vertex; dual paths step strictly right and weakly up, one vertex per
// column. Endpoints must be listed top path first (row asc, col asc).
// Throws NoPathExists when no disjoint tuple exists.
Rational lattice_lpp(const LatticeMatrix& A, const std::vector<LatticePoint>& starts,
                     const std::vector<LatticePoint>& ends, bool dual);

// Relaxation of lattice_lpp for ordinary paths: tuples may overlap and
// shared vertices count once. Exhaustive enumeration; small instances only.
Rational lattice_lpp_overlap(const LatticeMatrix& A, const std::vector<LatticePoint>& starts,
                             const std::vector<LatticePoint>& ends);

// Row-lists of positive integers; a plain container, validity is checked
// where semistandardness is actually promised.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  std::vector<int> shape() const;

  // Conjugate filling; the shape must be a partition.
  Tableau transposed() const;

  bool operator==(const Tableau& other) const { return rows_ == other.rows_; }
  bool operator!=(const Tableau& other) const { return !(*this == other); }

 private:
  std::vector<std::vector<int>> rows_;
};

// Rows weakly increasing, columns strictly increasing, shape a partition.
bool is_semistandard(const Tableau& t);

std::vector<int> conjugate_shape(const std::vector<int>& shape);

struct TableauPair {
  Tableau q;
  Tableau p;

  bool operator==(const TableauPair& other) const = default;
};

// Passage-value arrays behind the tableau pair; defined for any nonnegative
// entries. q_values[k-1][i-1] reads the column-truncated matrix with k paths
// into (i, 1); p_values[k-1][i-1] reads the full matrix with min(k, i) paths
// into (cols, rows-i+1). Dual cells occupy (col-1, col], so dual tuples run
// between virtual columns: starts at column 0, ends one column past the end.
struct GreeneValues {
  std::vector<std::vector<Rational>> q_values;  // rows() x cols()
  std::vector<std::vector<Rational>> p_values;  // rows() x rows()
};

GreeneValues greene_values(const LatticeMatrix& A, bool dual);

// Tableau pair decoded from greene_values by exact differencing: entry i
// appears in row k of Q as often as the (k, i) second difference says.
// Ordinary: shapes of Q and P are equal; dual: conjugate (the Q side decodes
// the transposed filling). Requires integer (ordinary) or 0/1 (dual) entries.
TableauPair greene_tableaux(const LatticeMatrix& A, bool dual);

// Independent oracle: classical row-insertion with recording. Letters are
// indexed from the bottom row up (row k inserts value rows-k+1); columns are
// read left to right, within a column bottom-up (ordinary) or top-down
// (dual), and the dual recording tableau is transposed at the end.
TableauPair bumping_rsk(const LatticeMatrix& A, bool dual);

// Pure-jump environment: atom A_{r,k} at time r on line k, horizon cols.
PathEnv embed_matrix(const LatticeMatrix& A);

// Piecewise-linear environment: slope A_{r,k} on [r-1, r] for line k.
// Requires 0/1 entries.
PathEnv embed_binary(const LatticeMatrix& A);

// True iff the lattice passage value equals the multi-path value over the
// embedded environment. Ordinary vertices map to their own times; dual cells
// occupy (col-1, col], so dual starts map to time col-1 (the virtual column
// 0 maps to time 0) and the equality is exact on the correspondence endpoint
// families (interior dual starts can pin a cell the cadlag path may skip).
bool check_embedding(const LatticeMatrix& A, const std::vector<LatticePoint>& starts,
                     const std::vector<LatticePoint>& ends, bool dual);

// The pair (sorted lines, pattern) of the embedded environment, computed
// both by sorting the embedding and by differencing greene_values; the two
// routes must agree exactly.
RSKPair lattice_rsk_pair(const LatticeMatrix& A, bool dual);

}  // namespace mrsk
