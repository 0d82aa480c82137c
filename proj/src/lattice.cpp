#include "afschur/lattice.hpp"

namespace afschur {

namespace {

void check_period(int n) {
  if (n < 2) throw std::invalid_argument("period must be at least 2");
}

}  // namespace

Pos canonicalize(long long i, long long j, int n) {
  check_period(n);
  const long long row = ((i - 1) % n + n) % n + 1;
  const long long shift = i - row;
  return {static_cast<int>(row), j - shift};
}

int column_class(long long j, int n) {
  return static_cast<int>(((j - 1) % n + n) % n + 1);
}

Composition::Composition(std::vector<Int> parts) : parts_(std::move(parts)) {
  if (parts_.size() < 2)
    throw std::invalid_argument("composition needs at least 2 parts");
  for (const Int& p : parts_)
    if (sgn(p) < 0)
      throw std::invalid_argument("composition parts must be nonnegative");
}

Composition Composition::zero(int n) {
  check_period(n);
  return Composition(std::vector<Int>(static_cast<size_t>(n), Int(0)));
}

Composition Composition::unit(long long i, int n) {
  auto parts = std::vector<Int>(static_cast<size_t>(n), Int(0));
  parts[static_cast<size_t>(column_class(i, n) - 1)] = 1;
  return Composition(std::move(parts));
}

const Int& Composition::part(int i) const {
  if (i < 1 || i > size()) throw std::out_of_range("composition index");
  return parts_[static_cast<size_t>(i - 1)];
}

const Int& Composition::at_mod(long long i) const {
  return parts_[static_cast<size_t>(column_class(i, size()) - 1)];
}

Int Composition::degree() const {
  Int total = 0;
  for (const Int& p : parts_) total += p;
  return total;
}

std::optional<Composition> Composition::bumped(long long i, const Int& delta) const {
  std::vector<Int> parts = parts_;
  Int& slot = parts[static_cast<size_t>(column_class(i, size()) - 1)];
  slot += delta;
  if (sgn(slot) < 0) return std::nullopt;
  return Composition(std::move(parts));
}

AffineMatrix::AffineMatrix(int n) : n_(n) { check_period(n); }

AffineMatrix::AffineMatrix(int n, std::map<Pos, Int> entries)
    : n_(n), entries_(std::move(entries)) {}

AffineMatrix AffineMatrix::unit(long long i, long long j, int n) {
  AffineMatrix out(n);
  out.entries_[canonicalize(i, j, n)] = 1;
  return out;
}

AffineMatrix AffineMatrix::diagonal(const Composition& diag) {
  AffineMatrix out(diag.size());
  for (int i = 1; i <= diag.size(); ++i)
    if (sgn(diag.part(i)) > 0) out.entries_[{i, i}] = diag.part(i);
  return out;
}

AffineMatrix AffineMatrix::from_entries(
    int n, const std::vector<std::tuple<long long, long long, Int>>& triples) {
  AffineMatrix out(n);
  for (const auto& [i, j, value] : triples) {
    if (sgn(value) <= 0)
      throw std::invalid_argument("stored entries must be positive");
    const Pos pos = canonicalize(i, j, n);
    if (!out.entries_.emplace(pos, value).second)
      throw std::invalid_argument("duplicate entry position");
  }
  return out;
}

Int AffineMatrix::entry(long long i, long long j) const {
  const auto it = entries_.find(canonicalize(i, j, n_));
  return it == entries_.end() ? Int(0) : it->second;
}

Int AffineMatrix::sigma() const {
  Int total = 0;
  for (const auto& [pos, value] : entries_) total += value;
  return total;
}

Int AffineMatrix::off_diagonal_sigma() const {
  Int total = 0;
  for (const auto& [pos, value] : entries_)
    if (pos.first != pos.second) total += value;
  return total;
}

Composition AffineMatrix::row_sum() const {
  std::vector<Int> parts(static_cast<size_t>(n_), Int(0));
  for (const auto& [pos, value] : entries_)
    parts[static_cast<size_t>(pos.first - 1)] += value;
  return Composition(std::move(parts));
}

Composition AffineMatrix::col_sum() const {
  std::vector<Int> parts(static_cast<size_t>(n_), Int(0));
  for (const auto& [pos, value] : entries_)
    parts[static_cast<size_t>(column_class(pos.second, n_) - 1)] += value;
  return Composition(std::move(parts));
}

Composition AffineMatrix::sigma_vec() const {
  // sigma_i(A) = a_{i,i} + sum_{j<i} (a_{i,j} + a_{j,i}).  A stored entry
  // (p, c) lands in the row term when p >= c and in the column term of
  // class c when p < c.
  std::vector<Int> parts(static_cast<size_t>(n_), Int(0));
  for (const auto& [pos, value] : entries_) {
    const int target =
        pos.first >= pos.second ? pos.first : column_class(pos.second, n_);
    parts[static_cast<size_t>(target - 1)] += value;
  }
  return Composition(std::move(parts));
}

bool AffineMatrix::has_zero_diagonal() const {
  for (const auto& [pos, value] : entries_)
    if (pos.first == pos.second) return false;
  return true;
}

bool AffineMatrix::is_diagonal() const {
  for (const auto& [pos, value] : entries_)
    if (pos.first != pos.second) return false;
  return true;
}

AffineMatrix AffineMatrix::add_unit(long long i, long long j) const {
  AffineMatrix out = *this;
  out.entries_[canonicalize(i, j, n_)] += 1;
  return out;
}

std::optional<AffineMatrix> AffineMatrix::sub_unit(long long i, long long j) const {
  AffineMatrix out = *this;
  const auto it = out.entries_.find(canonicalize(i, j, n_));
  if (it == out.entries_.end()) return std::nullopt;
  if (it->second == 1)
    out.entries_.erase(it);
  else
    it->second -= 1;
  return out;
}

AffineMatrix AffineMatrix::transpose() const {
  AffineMatrix out(n_);
  for (const auto& [pos, value] : entries_)
    out.entries_[canonicalize(pos.second, pos.first, n_)] = value;
  return out;
}

AffineMatrix AffineMatrix::operator+(const AffineMatrix& o) const {
  if (n_ != o.n_) throw MismatchError("matrix addition across periods");
  AffineMatrix out = *this;
  for (const auto& [pos, value] : o.entries_) out.entries_[pos] += value;
  return out;
}

MatrixSplit AffineMatrix::split_pm() const {
  // The i < j / i > j comparisons happen on the representative with row
  // in [1..n], matching the L+/L- position sets.
  AffineMatrix plus(n_), minus(n_);
  std::vector<Int> diag(static_cast<size_t>(n_), Int(0));
  for (const auto& [pos, value] : entries_) {
    if (pos.first < pos.second)
      plus.entries_[pos] = value;
    else if (pos.first > pos.second)
      minus.entries_[pos] = value;
    else
      diag[static_cast<size_t>(pos.first - 1)] = value;
  }
  return {plus, Composition(std::move(diag)), minus};
}

AffineMatrix AffineMatrix::plus_slice(long long i, long long j) const {
  const int row = column_class(i, n_);
  const int col = column_class(j, n_);
  AffineMatrix out(n_);
  for (const auto& [pos, value] : entries_)
    if (pos.first == row && pos.first < pos.second &&
        column_class(pos.second, n_) == col)
      out.entries_[pos] = value;
  return out;
}

AffineMatrix AffineMatrix::minus_slice(long long j, long long i) const {
  const int row = column_class(j, n_);
  const int col = column_class(i, n_);
  AffineMatrix out(n_);
  for (const auto& [pos, value] : entries_)
    if (pos.first == row && pos.first > pos.second &&
        column_class(pos.second, n_) == col)
      out.entries_[pos] = value;
  return out;
}

AffineMatrix AffineMatrix::plus_column(long long j) const {
  const int col = column_class(j, n_);
  AffineMatrix out(n_);
  for (const auto& [pos, value] : entries_)
    if (pos.first < pos.second && column_class(pos.second, n_) == col)
      out.entries_[pos] = value;
  return out;
}

AffineMatrix AffineMatrix::minus_row(long long j) const {
  const int row = column_class(j, n_);
  AffineMatrix out(n_);
  for (const auto& [pos, value] : entries_)
    if (pos.first == row && pos.first > pos.second) out.entries_[pos] = value;
  return out;
}

}  // namespace afschur
