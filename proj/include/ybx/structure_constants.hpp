#ifndef YBX_STRUCTURE_CONSTANTS_HPP
#define YBX_STRUCTURE_CONSTANTS_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ybx/polynomial.hpp"

namespace ybx {

enum class Parity { Even, Odd };

/// Ordered generator labels, with optional Z2 parity for super validation.
struct Basis {
  std::vector<std::string> labels;
  std::optional<std::vector<Parity>> parity;

  std::size_t dim() const { return labels.size(); }

  void check() const {
    if (labels.empty()) throw std::invalid_argument("basis must have at least one generator");
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j)
        if (labels[i] == labels[j])
          throw std::invalid_argument("duplicate basis label: '" + labels[i] + "'");
    if (parity && parity->size() != labels.size())
      throw std::invalid_argument("parity list length does not match basis dimension");
  }
};

/// (i, j, k), 1-based.
using IndexTriple = std::tuple<int, int, int>;

/// Coefficients of a bilinear composition law in a chosen basis; absent key
/// means zero, stored coefficients are never the zero polynomial.
class StructureConstants {
 public:
  using CoeffMap = std::map<IndexTriple, Polynomial>;

  explicit StructureConstants(int dim, ParamSetPtr params = std::make_shared<const ParamSet>())
      : dim_(dim), params_(std::move(params)) {
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  }

  int dim() const { return dim_; }
  const ParamSetPtr& params() const { return params_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  std::size_t nnz() const { return coeffs_.size(); }

  void set(int i, int j, int k, Polynomial value) {
    check_index(i);
    check_index(j);
    check_index(k);
    if (value.is_zero()) {
      coeffs_.erase({i, j, k});
    } else {
      coeffs_.insert_or_assign({i, j, k}, std::move(value));
    }
  }

  /// C_{ij}^k, zero when absent.
  Polynomial get(int i, int j, int k) const {
    auto it = coeffs_.find({i, j, k});
    return it == coeffs_.end() ? Polynomial(params_) : it->second;
  }

  bool operator==(const StructureConstants& o) const {
    return dim_ == o.dim_ && coeffs_ == o.coeffs_;
  }

 private:
  void check_index(int i) const {
    if (i < 1 || i > dim_) throw std::out_of_range("structure constant index out of range");
  }

  int dim_;
  ParamSetPtr params_;
  CoeffMap coeffs_;
};

/// Constants over D = d+1 indices where no stored key touches the central
/// index D. The invariant is enforced on construction.
class ExtendedConstants {
 public:
  explicit ExtendedConstants(StructureConstants inner) : inner_(std::move(inner)) {
    // every key of inner_ is within 1..d, so the D-index invariant holds
  }

  int dim_d() const { return inner_.dim() + 1; }
  int inner_dim() const { return inner_.dim(); }
  const StructureConstants& constants() const { return inner_; }
  std::size_t nnz() const { return inner_.nnz(); }
  const ParamSetPtr& params() const { return inner_.params(); }

  /// C_{ij}^k over 1..D; zero whenever any index equals D.
  Polynomial get(int i, int j, int k) const {
    int D = dim_d();
    if (i < 1 || i > D || j < 1 || j > D || k < 1 || k > D)
      throw std::out_of_range("extended constant index out of range");
    if (i == D || j == D || k == D) return Polynomial(params());
    return inner_.get(i, j, k);
  }

 private:
  StructureConstants inner_;
};

/// Adjoins the central generator as index D = d+1. Coefficients are copied
/// verbatim; the central index never appears in any key.
inline ExtendedConstants centrally_extend(StructureConstants c) {
  return ExtendedConstants(std::move(c));
}

struct AxiomViolation {
  std::vector<int> indices;  // (i,j,k) for antisymmetry, (i,j,k,l) for Jacobi
  Polynomial residual;
  std::string describe() const {
    std::string s = "(";
    for (std::size_t t = 0; t < indices.size(); ++t)
      s += (t ? "," : "") + std::to_string(indices[t]);
    return s + "): residual " + residual.str();
  }
};

namespace detail {

inline int parity_sign(const Basis& basis, int i, int j) {
  const auto& p = *basis.parity;
  bool both_odd = p[i - 1] == Parity::Odd && p[j - 1] == Parity::Odd;
  return both_odd ? 1 : -1;  // the graded sign -(-1)^{p(i)p(j)}
}

inline void require_parity(const Basis& basis) {
  if (!basis.parity)
    throw std::invalid_argument("graded validation requires parity on the basis");
}

}  // namespace detail

/// Checks C_{ji}^k = -(-1)^{p(i)p(j)} C_{ij}^k (plain antisymmetry when
/// graded = false). Returns every violating triple.
inline std::vector<AxiomViolation> validate_antisymmetry(const StructureConstants& c,
                                                         const Basis& basis,
                                                         bool graded = false) {
  if (graded) detail::require_parity(basis);
  std::vector<AxiomViolation> out;
  // scan each unordered pair once via the stored keys
  std::map<IndexTriple, bool> seen;
  for (const auto& [key, value] : c.coeffs()) {
    auto [i, j, k] = key;
    IndexTriple canon = i <= j ? key : IndexTriple{j, i, k};
    if (seen.count(canon)) continue;
    seen[canon] = true;
    int sign = graded ? detail::parity_sign(basis, i, j) : -1;
    Polynomial mirror = c.get(j, i, k);
    Polynomial residual = mirror - Polynomial::constant(c.params(), Rational(sign)) * value;
    if (i == j) residual = value - Polynomial::constant(c.params(), Rational(sign)) * value;
    if (!residual.is_zero()) {
      auto [a, b, t] = canon;
      out.push_back({{a, b, t}, residual});
    }
  }
  return out;
}

/// Checks the (super-)Jacobi identity as exact polynomial identities over all
/// (i, j, k, l). Assumes antisymmetry already holds.
inline std::vector<AxiomViolation> validate_jacobi(const StructureConstants& c,
                                                   const Basis& basis,
                                                   bool graded = false) {
  if (graded) detail::require_parity(basis);
  int d = c.dim();
  auto pair_sign = [&](int a, int b) -> Rational {
    if (!graded) return Rational(1);
    const auto& p = *basis.parity;
    bool both_odd = p[a - 1] == Parity::Odd && p[b - 1] == Parity::Odd;
    return Rational(both_odd ? -1 : 1);  // (-1)^{p(a)p(b)}
  };
  std::vector<AxiomViolation> out;
  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      for (int k = j + 1; k <= d; ++k) {
        for (int l = 1; l <= d; ++l) {
          Polynomial sum(c.params());
          for (int m = 1; m <= d; ++m) {
            sum += Polynomial::constant(c.params(), pair_sign(i, k)) * c.get(i, j, m) * c.get(m, k, l);
            sum += Polynomial::constant(c.params(), pair_sign(j, i)) * c.get(j, k, m) * c.get(m, i, l);
            sum += Polynomial::constant(c.params(), pair_sign(k, j)) * c.get(k, i, m) * c.get(m, j, l);
          }
          if (!sum.is_zero()) out.push_back({{i, j, k, l}, sum});
        }
      }
    }
  }
  return out;
}

/// Fills in the mirror orientation of every stored bracket with the correct
/// (graded) sign. Idempotent; throws on an inconsistent existing mirror.
inline StructureConstants complete_antisymmetric(const StructureConstants& partial,
                                                 const Basis& basis,
                                                 bool graded = false) {
  if (graded) detail::require_parity(basis);
  StructureConstants out = partial;
  for (const auto& [key, value] : partial.coeffs()) {
    auto [i, j, k] = key;
    int sign = graded ? detail::parity_sign(basis, i, j) : -1;
    Polynomial expected = Polynomial::constant(partial.params(), Rational(sign)) * value;
    Polynomial mirror = partial.get(j, i, k);
    if (mirror.is_zero()) {
      if (i == j && !expected.is_zero() && !(expected == value)) {
        throw std::invalid_argument("bracket [X" + std::to_string(i) + ",X" + std::to_string(i) +
                                    "] must vanish under antisymmetry");
      }
      out.set(j, i, k, expected);
    } else if (mirror != expected) {
      throw std::invalid_argument("inconsistent mirror bracket at (" + std::to_string(j) + "," +
                                  std::to_string(i) + "," + std::to_string(k) + ")");
    }
  }
  return out;
}

}  // namespace ybx

#endif
