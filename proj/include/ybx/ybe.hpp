#ifndef YBX_YBE_HPP
#define YBX_YBE_HPP

#include <chrono>
#include <cstdlib>
#include <optional>
#include <string>

#include "ybx/rmatrix.hpp"
#include "ybx/sparse_matrix.hpp"

namespace ybx {

enum class SitePair { S12, S13, S23 };

inline const char* site_name(SitePair s) {
  switch (s) {
    case SitePair::S12: return "12";
    case SitePair::S13: return "13";
    default: return "23";
  }
}

/// Embeds R into the triple tensor product as R_12, R_13 or R_23. Each R
/// entry ((i,j),(k,l)) spawns D replicas indexed by the free site m:
///   12: row (i-1)D^2+(j-1)D+m, col (k-1)D^2+(l-1)D+m
///   13: row (i-1)D^2+(m-1)D+j, col (k-1)D^2+(m-1)D+l
///   23: row (m-1)D^2+(i-1)D+j, col (m-1)D^2+(k-1)D+l
inline SparseMatrix embed(const RMatrix& r, SitePair site) {
  int D = r.d_states;
  int D2 = D * D;
  SparseMatrix out(D * D * D, r.matrix.params());
  for (const auto& [key, v] : r.matrix.entries()) {
    int i = (key.first - 1) / D + 1, j = (key.first - 1) % D + 1;
    int k = (key.second - 1) / D + 1, l = (key.second - 1) % D + 1;
    for (int m = 1; m <= D; ++m) {
      int row, col;
      switch (site) {
        case SitePair::S12:
          row = (i - 1) * D2 + (j - 1) * D + m;
          col = (k - 1) * D2 + (l - 1) * D + m;
          break;
        case SitePair::S13:
          row = (i - 1) * D2 + (m - 1) * D + j;
          col = (k - 1) * D2 + (m - 1) * D + l;
          break;
        case SitePair::S23:
          row = (m - 1) * D2 + (i - 1) * D + j;
          col = (m - 1) * D2 + (k - 1) * D + l;
          break;
      }
      out.set(row, col, v);
    }
  }
  return out;
}

struct YbeWitness {
  int row, col;
  Polynomial lhs, rhs;
};

struct YbeReport {
  int d_states;
  std::size_t lhs_nnz;
  std::size_t rhs_nnz;
  bool sides_equal;
  bool lhs_zero;
  bool rhs_zero;
  double elapsed_seconds;
  std::optional<YbeWitness> witness;  // first differing entry when unequal

  bool verified() const { return sides_equal; }

  std::string machine_line() const {
    auto b = [](bool v) { return v ? "true" : "false"; };
    return std::string("ybe d_states=") + std::to_string(d_states) +
           " lhs_nnz=" + std::to_string(lhs_nnz) + " rhs_nnz=" + std::to_string(rhs_nnz) +
           " sides_equal=" + b(sides_equal) + " lhs_zero=" + b(lhs_zero) +
           " rhs_zero=" + b(rhs_zero) + " elapsed_s=" + std::to_string(elapsed_seconds);
  }
};

enum class TripleSide { Left, Right };

/// Checks R_12 R_13 R_23 = R_23 R_13 R_12 exactly via the sparse pipeline.
/// Inequality is a report outcome, not an error.
inline YbeReport verify_cqybe(const RMatrix& r) {
  auto t0 = std::chrono::steady_clock::now();
  SparseMatrix r12 = embed(r, SitePair::S12);
  SparseMatrix r13 = embed(r, SitePair::S13);
  SparseMatrix r23 = embed(r, SitePair::S23);
  SparseMatrix lhs = sparse_mul(sparse_mul(r12, r13), r23);
  SparseMatrix rhs = sparse_mul(sparse_mul(r23, r13), r12);
  auto t1 = std::chrono::steady_clock::now();

  YbeReport rep;
  rep.d_states = r.d_states;
  rep.lhs_nnz = lhs.nnz();
  rep.rhs_nnz = rhs.nnz();
  rep.lhs_zero = lhs.is_zero();
  rep.rhs_zero = rhs.is_zero();
  rep.sides_equal = lhs == rhs;
  rep.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();
  if (!rep.sides_equal) {
    // first (row, col) where the sides differ
    for (const auto& [key, v] : lhs.entries()) {
      if (rhs.get(key.first, key.second) != v) {
        rep.witness = {key.first, key.second, v, rhs.get(key.first, key.second)};
        break;
      }
    }
    if (!rep.witness) {
      for (const auto& [key, v] : rhs.entries()) {
        if (lhs.get(key.first, key.second) != v) {
          rep.witness = {key.first, key.second, lhs.get(key.first, key.second), v};
          break;
        }
      }
    }
  }
  return rep;
}

inline int oracle_max_d() {
  if (const char* env = std::getenv("YBX_ORACLE_MAX_D")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 7;
}

/// Independent oracle: the same D^3 x D^3 triple product computed by direct
/// summation over the internal site indices, decoding embedded entries from R
/// on the fly. Never forms R_12, R_13, R_23 or any intermediate product.
inline SparseMatrix oracle_triple_product(const RMatrix& r, TripleSide side) {
  int D = r.d_states;
  if (D > oracle_max_d())
    throw std::invalid_argument("oracle_triple_product: D exceeds the oracle bound");
  int D2 = D * D;
  auto at = [&](int i, int j, int k, int l) { return r.matrix.get(flatten(i, j, D), flatten(k, l, D)); };
  SparseMatrix out(D * D2, r.matrix.params());
  if (side == TripleSide::Left) {
    // (R12 R13 R23)[(a1,a2,a3),(q1,b2,b3)] summed over p1,p2,q3
    for (int a1 = 1; a1 <= D; ++a1)
      for (int a2 = 1; a2 <= D; ++a2)
        for (int p1 = 1; p1 <= D; ++p1)
          for (int p2 = 1; p2 <= D; ++p2) {
            Polynomial v1 = at(a1, a2, p1, p2);
            if (v1.is_zero()) continue;
            for (int a3 = 1; a3 <= D; ++a3)
              for (int q1 = 1; q1 <= D; ++q1)
                for (int q3 = 1; q3 <= D; ++q3) {
                  Polynomial v2 = at(p1, a3, q1, q3);
                  if (v2.is_zero()) continue;
                  for (int b2 = 1; b2 <= D; ++b2)
                    for (int b3 = 1; b3 <= D; ++b3) {
                      Polynomial v3 = at(p2, q3, b2, b3);
                      if (v3.is_zero()) continue;
                      int row = (a1 - 1) * D2 + (a2 - 1) * D + a3;
                      int col = (q1 - 1) * D2 + (b2 - 1) * D + b3;
                      out.add_to(row, col, v1 * v2 * v3);
                    }
                }
          }
  } else {
    // (R23 R13 R12)[(a1,a2,a3),(b1,b2,q3)] summed over p2,p3,q1
    for (int a2 = 1; a2 <= D; ++a2)
      for (int a3 = 1; a3 <= D; ++a3)
        for (int p2 = 1; p2 <= D; ++p2)
          for (int p3 = 1; p3 <= D; ++p3) {
            Polynomial v1 = at(a2, a3, p2, p3);
            if (v1.is_zero()) continue;
            for (int a1 = 1; a1 <= D; ++a1)
              for (int q1 = 1; q1 <= D; ++q1)
                for (int q3 = 1; q3 <= D; ++q3) {
                  Polynomial v2 = at(a1, p3, q1, q3);
                  if (v2.is_zero()) continue;
                  for (int b1 = 1; b1 <= D; ++b1)
                    for (int b2 = 1; b2 <= D; ++b2) {
                      Polynomial v3 = at(q1, p2, b1, b2);
                      if (v3.is_zero()) continue;
                      int row = (a1 - 1) * D2 + (a2 - 1) * D + a3;
                      int col = (b1 - 1) * D2 + (b2 - 1) * D + q3;
                      out.add_to(row, col, v1 * v2 * v3);
                    }
                }
          }
  }
  return out;
}

}  // namespace ybx

#endif
