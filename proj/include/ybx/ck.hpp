#ifndef YBX_CK_HPP
#define YBX_CK_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ybx/structure_constants.hpp"

namespace ybx {

/// A contraction parameter: left symbolic, or fixed to an exact rational.
struct Symbolic {};
using KappaValue = std::variant<Symbolic, Rational>;

/// Specification of one member of the so_kappa(N+1) family.
struct CKSpec {
  int n;
  std::vector<KappaValue> kappas;

  static CKSpec symbolic(int n) { return {n, std::vector<KappaValue>(n, Symbolic{})}; }

  void check() const {
    if (n < 1) throw std::invalid_argument("CK family requires N >= 1");
    if (static_cast<int>(kappas.size()) != n)
      throw std::invalid_argument("kappa list length does not match N");
  }

  /// The parameter set k1..kN; declared in full even for numeric members so
  /// that specialization commutes with construction.
  ParamSetPtr params() const {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("k" + std::to_string(i));
    return make_params(std::move(names));
  }
};

struct CKAlgebra {
  CKSpec spec;
  Basis basis;  // J_ab labels in increasing (a,b) order; central label last
  StructureConstants constants;
};

struct CKClassification {
  std::vector<int> sign_pattern;  // entries in {+1, 0, -1}
  std::string family_name;
  std::optional<std::string> kinematical_name;
};

/// Label for the generator J_ab; underscore separator once indices may have
/// two digits.
inline std::string ck_label(int a, int b, int n) {
  if (n >= 10) return "J" + std::to_string(a) + "_" + std::to_string(b);
  return "J" + std::to_string(a) + std::to_string(b);
}

/// Position (1-based) of J_ab among the N(N+1)/2 generators, ordered by
/// increasing (a,b).
inline int ck_index(int a, int b, int n) {
  // generators with first index < a come before; then b runs a+1..N
  int offset = 0;
  for (int x = 0; x < a; ++x) offset += n - x;
  return offset + (b - a);
}

/// The two-index product kappa_{ab} = kappa_{a+1} * ... * kappa_b.
inline Polynomial kappa_product(const CKSpec& spec, int a, int b) {
  spec.check();
  if (!(0 <= a && a < b && b <= spec.n)) throw std::out_of_range("kappa_product: need 0 <= a < b <= N");
  ParamSetPtr ps = spec.params();
  Polynomial p = Polynomial::constant(ps, Rational(1));
  for (int mu = a + 1; mu <= b; ++mu) {
    const KappaValue& kv = spec.kappas[mu - 1];
    if (std::holds_alternative<Symbolic>(kv)) {
      p *= Polynomial::parameter(ps, mu - 1);
    } else {
      p *= Polynomial::constant(ps, std::get<Rational>(kv));
    }
  }
  return p;
}

/// Builds so_kappa(N+1): for each triple a<b<c the six oriented coefficients
///   C_{(ab)(ac)}^{(bc)} = kappa_ab   C_{(ac)(ab)}^{(bc)} = -kappa_ab
///   C_{(ab)(bc)}^{(ac)} = -1         C_{(bc)(ab)}^{(ac)} = +1
///   C_{(ac)(bc)}^{(ab)} = kappa_bc   C_{(bc)(ac)}^{(ab)} = -kappa_bc
/// Zero kappa products are omitted.
inline CKAlgebra build_ck(const CKSpec& spec) {
  spec.check();
  int n = spec.n;
  int d = n * (n + 1) / 2;
  ParamSetPtr ps = spec.params();

  Basis basis;
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) basis.labels.push_back(ck_label(a, b, n));
  basis.labels.push_back("_central");

  StructureConstants c(d, ps);
  Polynomial one = Polynomial::constant(ps, Rational(1));
  for (int a = 0; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int cc = b + 1; cc <= n; ++cc) {
        int ab = ck_index(a, b, n), ac = ck_index(a, cc, n), bc = ck_index(b, cc, n);
        Polynomial kab = kappa_product(spec, a, b);
        Polynomial kbc = kappa_product(spec, b, cc);
        c.set(ab, ac, bc, kab);
        c.set(ac, ab, bc, -kab);
        c.set(ab, bc, ac, -one);
        c.set(bc, ab, ac, one);
        c.set(ac, bc, ab, kbc);
        c.set(bc, ac, ab, -kbc);
      }
    }
  }
  return {spec, std::move(basis), std::move(c)};
}

/// N=2 classification over the nine sign patterns, with kinematical names for
/// the six algebras with sign(kappa2) <= 0.
inline CKClassification classify_ck2(int s1, int s2) {
  auto bad = [](int s) { return s != 1 && s != 0 && s != -1; };
  if (bad(s1) || bad(s2)) throw std::invalid_argument("signs must be in {+1, 0, -1}");
  CKClassification out;
  out.sign_pattern = {s1, s2};
  if (s1 != 0 && s2 != 0) {
    out.family_name = (s1 > 0 && s2 > 0) ? "so(3)" : "so(2,1)";
  } else if (s1 == 0 && s2 == 0) {
    out.family_name = "iiso(1)";
  } else if (s1 == 0 || s2 == 0) {
    int nz = s1 != 0 ? s1 : s2;
    out.family_name = nz > 0 ? "iso(2)" : "iso(1,1)";
  }
  if (s2 <= 0) {
    if (s1 == 1 && s2 == -1) out.kinematical_name = "anti-de Sitter";
    if (s1 == 0 && s2 == -1) out.kinematical_name = "Minkowskian";
    if (s1 == -1 && s2 == -1) out.kinematical_name = "de Sitter";
    if (s1 == 1 && s2 == 0) out.kinematical_name = "oscillating Newton-Hooke";
    if (s1 == 0 && s2 == 0) out.kinematical_name = "Galilean";
    if (s1 == -1 && s2 == 0) out.kinematical_name = "expanding Newton-Hooke";
  }
  return out;
}

/// All 3^n sign patterns with representative values {+1, 0, -1}, in ternary
/// counting order with kappa_1 most significant (+1 before 0 before -1).
inline std::vector<CKSpec> enumerate_sign_patterns(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  static const Rational reps[3] = {Rational(1), Rational(0), Rational(-1)};
  std::vector<CKSpec> out;
  out.reserve(total);
  for (long code = 0; code < total; ++code) {
    std::vector<KappaValue> kappas(n);
    long rem = code;
    for (int i = n - 1; i >= 0; --i) {
      kappas[i] = reps[rem % 3];
      rem /= 3;
    }
    out.push_back({n, std::move(kappas)});
  }
  return out;
}

}  // namespace ybx

#endif
