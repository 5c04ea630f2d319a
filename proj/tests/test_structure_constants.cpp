#include <doctest.h>

#include "ybx/ck.hpp"
#include "ybx/structure_constants.hpp"

using namespace ybx;

namespace {

ParamSetPtr none() { return std::make_shared<const ParamSet>(); }

Polynomial C(ParamSetPtr ps, int v) { return Polynomial::constant(ps, Rational(v)); }

/// The arbitrary-coefficients d=2 fixture used across the suite.
StructureConstants arbitrary_d2() {
  ParamSetPtr ps = none();
  StructureConstants c(2, ps);
  c.set(1, 2, 1, C(ps, 5));
  c.set(1, 2, 2, C(ps, 7));
  c.set(2, 1, 1, C(ps, 3));
  return c;
}

Basis plain_basis(int d) {
  Basis b;
  for (int i = 1; i <= d; ++i) b.labels.push_back("X" + std::to_string(i));
  return b;
}

}  // namespace

TEST_CASE("centrally_extend copies coefficients verbatim") {
  SUBCASE("so(3)") {
    CKAlgebra alg = build_ck(CKSpec::symbolic(2));
    ExtendedConstants ext = centrally_extend(alg.constants);
    CHECK(ext.dim_d() == 4);
    CHECK(ext.nnz() == 6);
    // the central index never appears
    for (const auto& [key, v] : ext.constants().coeffs()) {
      auto [i, j, k] = key;
      CHECK(i < 4);
      CHECK(j < 4);
      CHECK(k < 4);
    }
  }
  SUBCASE("empty d=1") {
    ExtendedConstants ext = centrally_extend(StructureConstants(1));
    CHECK(ext.dim_d() == 2);
    CHECK(ext.nnz() == 0);
  }
  SUBCASE("arbitrary d=2 fixture") {
    StructureConstants c = arbitrary_d2();
    ExtendedConstants ext = centrally_extend(c);
    CHECK(ext.dim_d() == 3);
    CHECK(ext.nnz() == 3);
    CHECK(ext.get(1, 2, 1) == c.get(1, 2, 1));
    CHECK(ext.get(1, 2, 2) == c.get(1, 2, 2));
    CHECK(ext.get(2, 1, 1) == c.get(2, 1, 1));
    CHECK(ext.get(3, 1, 1).is_zero());
    CHECK(ext.get(1, 3, 1).is_zero());
    CHECK(ext.get(1, 2, 3).is_zero());
  }
}

TEST_CASE("validate_antisymmetry") {
  SUBCASE("so(3) with both orientations") {
    CKAlgebra alg = build_ck(CKSpec::symbolic(2));
    CHECK(validate_antisymmetry(alg.constants, alg.basis).empty());
  }
  SUBCASE("d=2 fixture violates at (1,2,1)") {
    auto v = validate_antisymmetry(arbitrary_d2(), plain_basis(2));
    REQUIRE(!v.empty());
    CHECK(v[0].indices == std::vector<int>{1, 2, 1});
  }
  SUBCASE("all-zero constants pass") {
    CHECK(validate_antisymmetry(StructureConstants(3), plain_basis(3)).empty());
  }
  SUBCASE("graded requires parity") {
    CHECK_THROWS(validate_antisymmetry(StructureConstants(2), plain_basis(2), true));
  }
}

TEST_CASE("validate_jacobi") {
  SUBCASE("symbolic so_k(3) passes") {
    CKAlgebra alg = build_ck(CKSpec::symbolic(2));
    CHECK(validate_jacobi(alg.constants, alg.basis).empty());
  }
  SUBCASE("d=3 cyclic pattern satisfies Jacobi for any coefficients") {
    // the perturbation kappa1 -> kappa1 + 1 keeps the sparsity pattern, and
    // every Jacobi summand has a vanishing factor at d=3
    CKAlgebra alg = build_ck(CKSpec::symbolic(2));
    StructureConstants c = alg.constants;
    ParamSetPtr ps = c.params();
    Polynomial bumped = c.get(1, 2, 3) + Polynomial::constant(ps, Rational(1));
    c.set(1, 2, 3, bumped);
    c.set(2, 1, 3, -bumped);
    CHECK(validate_jacobi(c, alg.basis).empty());
  }
  SUBCASE("perturbing one N=3 coefficient fails locally") {
    // [J01, J02] = kappa1 J12 bumped to (kappa1 + 1) J12; first residual
    // appears at (J01, J02, J13; J23) with value kappa2
    CKAlgebra alg = build_ck(CKSpec::symbolic(3));
    StructureConstants c = alg.constants;
    ParamSetPtr ps = c.params();
    Polynomial bumped = c.get(1, 2, 4) + Polynomial::constant(ps, Rational(1));
    c.set(1, 2, 4, bumped);
    c.set(2, 1, 4, -bumped);
    auto v = validate_jacobi(c, alg.basis);
    REQUIRE(!v.empty());
    CHECK(v[0].indices == std::vector<int>{1, 2, 5, 6});
    CHECK(v[0].residual == Polynomial::parameter(ps, 1));
  }
  SUBCASE("abelian passes") {
    CHECK(validate_jacobi(StructureConstants(4), plain_basis(4)).empty());
  }
}

TEST_CASE("complete_antisymmetric") {
  ParamSetPtr ps = make_params({"k1"});
  SUBCASE("adds the mirror with flipped sign") {
    StructureConstants c(3, ps);
    c.set(1, 2, 3, Polynomial::parameter(ps, 0));
    Basis b = plain_basis(3);
    StructureConstants full = complete_antisymmetric(c, b);
    CHECK(full.nnz() == 2);
    CHECK(full.get(2, 1, 3) == -Polynomial::parameter(ps, 0));
  }
  SUBCASE("idempotent on complete input") {
    CKAlgebra alg = build_ck(CKSpec::symbolic(2));
    StructureConstants once = complete_antisymmetric(alg.constants, alg.basis);
    CHECK(once == alg.constants);
    CHECK(complete_antisymmetric(once, alg.basis) == once);
  }
  SUBCASE("odd-odd pair gets a plus sign") {
    ParamSetPtr empty = none();
    StructureConstants c(3, empty);
    c.set(1, 2, 3, C(empty, 1));
    Basis b = plain_basis(3);
    b.parity = std::vector<Parity>{Parity::Odd, Parity::Odd, Parity::Even};
    StructureConstants full = complete_antisymmetric(c, b, true);
    CHECK(full.get(2, 1, 3) == C(empty, 1));
  }
  SUBCASE("inconsistent mirror is rejected") {
    ParamSetPtr empty = none();
    StructureConstants c(2, empty);
    c.set(1, 2, 1, C(empty, 5));
    c.set(2, 1, 1, C(empty, 3));
    CHECK_THROWS(complete_antisymmetric(c, plain_basis(2)));
  }
}

TEST_CASE("symbolic CK constants pass both axioms for N <= 4") {
  for (int n = 2; n <= 4; ++n) {
    CKAlgebra alg = build_ck(CKSpec::symbolic(n));
    CHECK(validate_antisymmetry(alg.constants, alg.basis).empty());
    CHECK(validate_jacobi(alg.constants, alg.basis).empty());
  }
}
