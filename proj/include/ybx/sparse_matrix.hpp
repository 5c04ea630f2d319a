#ifndef YBX_SPARSE_MATRIX_HPP
#define YBX_SPARSE_MATRIX_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "ybx/polynomial.hpp"

namespace ybx {

/// Square sparse matrix with exact polynomial entries, 1-based, row-major
/// ordered. No stored entry is the zero polynomial.
class SparseMatrix {
 public:
  using Key = std::pair<int, int>;
  using EntryMap = std::map<Key, Polynomial>;

  explicit SparseMatrix(int dim, ParamSetPtr params = std::make_shared<const ParamSet>())
      : dim_(dim), params_(std::move(params)) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  }

  static SparseMatrix identity(int dim, ParamSetPtr params = std::make_shared<const ParamSet>()) {
    SparseMatrix m(dim, params);
    Polynomial one = Polynomial::constant(m.params_, Rational(1));
    for (int i = 1; i <= dim; ++i) m.entries_.emplace(Key{i, i}, one);
    return m;
  }

  int dim() const { return dim_; }
  const ParamSetPtr& params() const { return params_; }
  const EntryMap& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  void set(int row, int col, Polynomial value) {
    check_index(row);
    check_index(col);
    if (value.is_zero()) {
      entries_.erase({row, col});
    } else {
      entries_.insert_or_assign({row, col}, std::move(value));
    }
  }

  void add_to(int row, int col, const Polynomial& value) {
    check_index(row);
    check_index(col);
    auto it = entries_.find({row, col});
    if (it == entries_.end()) {
      if (!value.is_zero()) entries_.emplace(Key{row, col}, value);
      return;
    }
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }

  Polynomial get(int row, int col) const {
    auto it = entries_.find({row, col});
    return it == entries_.end() ? Polynomial(params_) : it->second;
  }

  bool operator==(const SparseMatrix& o) const {
    return dim_ == o.dim_ && entries_ == o.entries_;
  }
  bool operator!=(const SparseMatrix& o) const { return !(*this == o); }

  /// True iff no parameter occurs in any entry.
  bool is_numeric() const {
    for (const auto& [k, v] : entries_)
      if (!v.is_constant()) return false;
    return true;
  }

 private:
  void check_index(int i) const {
    if (i < 1 || i > dim_) throw std::out_of_range("matrix index out of range");
  }

  int dim_;
  ParamSetPtr params_;
  EntryMap entries_;
};

/// Exact sparse product; cancelling entries are dropped.
inline SparseMatrix sparse_mul(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("sparse_mul: dimension mismatch");
  // group b's entries by row for the inner join
  std::map<int, std::vector<std::pair<int, const Polynomial*>>> b_rows;
  for (const auto& [k, v] : b.entries()) b_rows[k.first].emplace_back(k.second, &v);
  SparseMatrix out(a.dim(), a.params());
  for (const auto& [k, va] : a.entries()) {
    auto it = b_rows.find(k.second);
    if (it == b_rows.end()) continue;
    for (const auto& [col, vb] : it->second) out.add_to(k.first, col, va * *vb);
  }
  return out;
}

/// Exact rank of a fully numeric matrix by fraction-free (Bareiss) Gaussian
/// elimination on the denominator-cleared integer rows.
inline int rational_rank(const SparseMatrix& m) {
  if (!m.is_numeric()) throw std::invalid_argument("rational_rank: symbolic entry present");
  // collect nonzero rows as dense integer vectors
  std::set<int> row_ids;
  for (const auto& [k, v] : m.entries()) row_ids.insert(k.first);
  std::vector<std::vector<Integer>> rows;
  for (int r : row_ids) {
    std::vector<Rational> rat(m.dim() + 1, Rational(0));
    Integer lcm = 1;
    for (const auto& [k, v] : m.entries()) {
      if (k.first != r) continue;
      Rational val = v.constant_value();
      rat[k.second] = val;
      Integer den = boost::multiprecision::denominator(val);
      lcm = boost::multiprecision::lcm(lcm, den);
    }
    std::vector<Integer> irow(m.dim() + 1, 0);
    for (int c = 1; c <= m.dim(); ++c)
      irow[c] = boost::multiprecision::numerator(rat[c]) * (lcm / boost::multiprecision::denominator(rat[c]));
    rows.push_back(std::move(irow));
  }
  int rank = 0;
  Integer prev = 1;
  std::size_t nrows = rows.size();
  int ncols = m.dim();
  for (int col = 1; col <= ncols && rank < static_cast<int>(nrows); ++col) {
    std::size_t pivot = nrows;
    for (std::size_t r = rank; r < nrows; ++r) {
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == nrows) continue;
    std::swap(rows[rank], rows[pivot]);
    const Integer p = rows[rank][col];
    for (std::size_t r = rank + 1; r < nrows; ++r) {
      for (int c = col + 1; c <= ncols; ++c)
        rows[r][c] = (p * rows[r][c] - rows[r][col] * rows[rank][c]) / prev;
      rows[r][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace ybx

#endif
