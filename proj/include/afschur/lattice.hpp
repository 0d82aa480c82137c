#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "afschur/numeric.hpp"

namespace afschur {

// Position of one stored entry of a periodic matrix.  Rows are canonical
// representatives in [1..n]; columns range over all integers.  The full
// matrix is recovered through a_{i+kn, j+kn} = a_{i,j}.
using Pos = std::pair<int, long long>;

// Shift (i, j) by the unique multiple of n that puts the row in [1..n].
Pos canonicalize(long long i, long long j, int n);

// Periodic column class of j, in [1..n].
int column_class(long long j, int n);

// lambda = (lambda_1, ..., lambda_n), nonnegative parts, read periodically.
class Composition {
 public:
  explicit Composition(std::vector<Int> parts);
  static Composition zero(int n);
  static Composition unit(long long i, int n);  // e_i

  int size() const { return static_cast<int>(parts_.size()); }
  const std::vector<Int>& parts() const { return parts_; }
  const Int& part(int i) const;             // 1-based
  const Int& at_mod(long long i) const;     // periodic read
  Int degree() const;

  // lambda with delta added at class i; ZERO-FLAG (nullopt) when a part
  // would become negative.
  std::optional<Composition> bumped(long long i, const Int& delta) const;

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Composition& a, const Composition& b) {
    return !(a == b);
  }
  friend bool operator<(const Composition& a, const Composition& b) {
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<Int> parts_;
};

struct MatrixSplit;

// Z-periodic, finitely supported matrix with nonnegative integer entries.
// Zero entries are never stored; all constructors canonicalize positions.
// Values are immutable after construction and safe to share across threads.
class AffineMatrix {
 public:
  explicit AffineMatrix(int n);
  static AffineMatrix unit(long long i, long long j, int n);  // E_{i,j}
  static AffineMatrix diagonal(const Composition& diag);
  // Canonicalizes rows; rejects values < 1 and duplicate positions.
  static AffineMatrix from_entries(
      int n, const std::vector<std::tuple<long long, long long, Int>>& triples);

  int period() const { return n_; }
  bool is_zero() const { return entries_.empty(); }
  const std::map<Pos, Int>& entries() const { return entries_; }
  Int entry(long long i, long long j) const;  // 0 when absent

  Int sigma() const;                 // total of all stored entries
  Int off_diagonal_sigma() const;    // total away from the diagonal
  Composition row_sum() const;       // ro(A)
  Composition col_sum() const;       // co(A)
  Composition sigma_vec() const;     // (sigma_i(A))_i

  bool has_zero_diagonal() const;
  bool is_diagonal() const;

  AffineMatrix add_unit(long long i, long long j) const;
  // ZERO-FLAG (nullopt) when the entry at (i, j) is already 0.
  std::optional<AffineMatrix> sub_unit(long long i, long long j) const;

  AffineMatrix transpose() const;
  AffineMatrix operator+(const AffineMatrix& o) const;

  MatrixSplit split_pm() const;

  // Slices of the off-diagonal parts: the upper part decomposes by
  // column class and row, the lower part by row class and column.
  // Arguments are read as periodic classes.
  AffineMatrix plus_slice(long long i, long long j) const;   // A+_{i,j}
  AffineMatrix minus_slice(long long j, long long i) const;  // A-_{j,i}
  AffineMatrix plus_column(long long j) const;               // A+_j
  AffineMatrix minus_row(long long j) const;                 // A-_j

  friend bool operator==(const AffineMatrix& a, const AffineMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const AffineMatrix& a, const AffineMatrix& b) {
    return !(a == b);
  }
  friend bool operator<(const AffineMatrix& a, const AffineMatrix& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.entries_ < b.entries_;
  }

 private:
  AffineMatrix(int n, std::map<Pos, Int> entries);

  int n_;
  std::map<Pos, Int> entries_;
};

// A = plus + diag + minus, comparisons taken on the canonical
// representative with row in [1..n].
struct MatrixSplit {
  AffineMatrix plus;   // entries with i < j
  Composition diag;    // diagonal as a vector
  AffineMatrix minus;  // entries with i > j
};

}  // namespace afschur
