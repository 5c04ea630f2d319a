#ifndef YBX_RMATRIX_HPP
#define YBX_RMATRIX_HPP

#include <optional>
#include <set>
#include <string>

#include "ybx/ck.hpp"
#include "ybx/sparse_matrix.hpp"
#include "ybx/structure_constants.hpp"

namespace ybx {

/// Row-major pair flattening: (i,j) -> (i-1)*D + j, bijective onto 1..D^2.
inline int flatten(int i, int j, int D) {
  if (i < 1 || i > D || j < 1 || j > D) throw std::out_of_range("flatten: index out of range");
  return (i - 1) * D + j;
}

enum class RSource { TheoremConstructed, UserSupplied };

struct RMatrix {
  int d_states;                 // D
  SparseMatrix matrix;          // D^2 x D^2
  RSource source;

  /// Structural pattern of theorem-constructed matrices: every entry sits in
  /// a row (i,j) with i,j < D and a column (k,l) with exactly one of k,l = D.
  bool matches_theorem_pattern() const {
    int D = d_states;
    for (const auto& [key, v] : matrix.entries()) {
      int row = key.first, col = key.second;
      int i = (row - 1) / D + 1, j = (row - 1) % D + 1;
      int k = (col - 1) / D + 1, l = (col - 1) % D + 1;
      if (i == D || j == D) return false;
      if ((k == D) == (l == D)) return false;
    }
    return true;
  }
};

struct StructuralStats {
  std::size_t nnz;
  int zero_rows;
  int zero_cols;
  std::optional<int> rank;  // numeric matrices only
};

/// Theorem construction: each stored C_{ij}^k (k < D) contributes the two
/// entries R[(i,j),(k,D)] = R[(i,j),(D,k)] = C_{ij}^k, so nnz(R) = 2 nnz(C).
inline RMatrix build_r(const ExtendedConstants& ext) {
  int D = ext.dim_d();
  SparseMatrix m(D * D, ext.params());
  for (const auto& [key, value] : ext.constants().coeffs()) {
    auto [i, j, k] = key;
    int row = flatten(i, j, D);
    m.set(row, flatten(k, D, D), value);
    m.set(row, flatten(D, k, D), value);
  }
  return {D, std::move(m), RSource::TheoremConstructed};
}

/// CK-specific construction straight from the closed-form entry table: for
/// each a<b<c the twelve entries with values +-kappa_ab, +-1, +-kappa_bc in
/// columns (x,D) and (D,x). Independent of build_r; the two must agree.
inline RMatrix build_r_ck(const CKSpec& spec) {
  spec.check();
  int n = spec.n;
  int d = n * (n + 1) / 2;
  int D = d + 1;
  ParamSetPtr ps = spec.params();
  SparseMatrix m(D * D, ps);
  Polynomial one = Polynomial::constant(ps, Rational(1));
  auto put = [&](int ri, int rj, int ck_, int val_is_D_first, const Polynomial& v) {
    int col = val_is_D_first ? flatten(D, ck_, D) : flatten(ck_, D, D);
    m.set(flatten(ri, rj, D), col, v);
  };
  for (int a = 0; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        int ab = ck_index(a, b, n), ac = ck_index(a, c, n), bc = ck_index(b, c, n);
        Polynomial kab = kappa_product(spec, a, b);
        Polynomial kbc = kappa_product(spec, b, c);
        put(ab, ac, bc, 0, kab);
        put(ab, ac, bc, 1, kab);
        put(ac, ab, bc, 0, -kab);
        put(ac, ab, bc, 1, -kab);
        put(ab, bc, ac, 0, -one);
        put(ab, bc, ac, 1, -one);
        put(bc, ab, ac, 0, one);
        put(bc, ab, ac, 1, one);
        put(ac, bc, ab, 0, kbc);
        put(ac, bc, ab, 1, kbc);
        put(bc, ac, ab, 0, -kbc);
        put(bc, ac, ab, 1, -kbc);
      }
    }
  }
  return {D, std::move(m), RSource::TheoremConstructed};
}

inline StructuralStats structural_stats(const RMatrix& r) {
  std::set<int> rows, cols;
  for (const auto& [key, v] : r.matrix.entries()) {
    rows.insert(key.first);
    cols.insert(key.second);
  }
  StructuralStats s;
  s.nnz = r.matrix.nnz();
  s.zero_rows = r.matrix.dim() - static_cast<int>(rows.size());
  s.zero_cols = r.matrix.dim() - static_cast<int>(cols.size());
  if (r.matrix.is_numeric()) s.rank = rational_rank(r.matrix);
  return s;
}

/// Entrywise exact evaluation; entries evaluating to zero leave the pattern.
inline RMatrix specialize(const RMatrix& r, const std::vector<Rational>& assignment) {
  SparseMatrix m(r.matrix.dim());  // parameter-free result
  ParamSetPtr empty = m.params();
  for (const auto& [key, v] : r.matrix.entries()) {
    Rational val = v.eval(assignment);
    if (val != 0) m.set(key.first, key.second, Polynomial::constant(empty, val));
  }
  return {r.d_states, std::move(m), r.source};
}

}  // namespace ybx

#endif
