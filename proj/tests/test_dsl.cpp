#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "ybx/dsl.hpp"
#include "ybx/exporters.hpp"
#include "ybx/ybe.hpp"

using namespace ybx;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kSo3 = R"(# so_{k1,k2}(3)
algebra so_k_3
params k1 k2
basis J01 J02 J12
profile lie
[J01, J02] = k1*J12
[J01, J12] = -J02
[J02, J12] = k2*J01
)";

}  // namespace

TEST_CASE("parse_algebra on the so_k(3) document") {
  AlgebraDocument doc = parse_algebra(kSo3);
  CHECK(doc.name == "so_k_3");
  CHECK(doc.params->names() == std::vector<std::string>{"k1", "k2"});
  CHECK(doc.basis.labels == std::vector<std::string>{"J01", "J02", "J12"});
  CHECK(doc.profile == Profile::Lie);
  REQUIRE(doc.brackets.size() == 3);
  // converts to the CK constants with mirrors completed
  StructureConstants c = doc.to_constants();
  CHECK(c == build_ck(CKSpec::symbolic(2)).constants);
}

TEST_CASE("parse_algebra edge cases") {
  SUBCASE("abelian d=1 document") {
    AlgebraDocument doc = parse_algebra("algebra trivial\nparams\nbasis X\n");
    CHECK(doc.basis.dim() == 1);
    CHECK(doc.brackets.empty());
    CHECK(doc.to_constants().nnz() == 0);
  }
  SUBCASE("conflicting mirror under profile lie") {
    std::string text =
        "algebra bad\nparams k1\nbasis J01 J02 J12\nprofile lie\n"
        "[J01, J02] = k1*J12\n[J02, J01] = k1*J12\n";
    AlgebraDocument doc = parse_algebra(text);
    CHECK_THROWS(doc.to_constants());
  }
  SUBCASE("unknown label") {
    CHECK_THROWS_AS(parse_algebra("algebra a\nbasis X\n[X, Y] = X\n"), ParseError);
  }
  SUBCASE("unknown parameter") {
    CHECK_THROWS_AS(parse_algebra("algebra a\nbasis X Y Z\n[X, Y] = q*Z\n"), ParseError);
  }
  SUBCASE("duplicate bracket with conflicting value") {
    std::string text =
        "algebra a\nparams\nbasis X Y Z\n[X, Y] = Z\n[X, Y] = 2*Z\n";
    CHECK_THROWS_AS(parse_algebra(text), ParseError);
  }
  SUBCASE("duplicate consistent bracket is accepted") {
    std::string text = "algebra a\nparams\nbasis X Y Z\n[X, Y] = Z\n[X, Y] = Z\n";
    CHECK(parse_algebra(text).brackets.size() == 2);
  }
  SUBCASE("errors carry line numbers") {
    try {
      parse_algebra("algebra a\nbasis X\n??\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
    }
  }
  SUBCASE("parity lines require super-style basis labels") {
    std::string text =
        "algebra a\nparams\nbasis X Y Z\nprofile super\nparity X odd\nparity Y odd\n"
        "[X, Y] = Z\n";
    AlgebraDocument doc = parse_algebra(text);
    REQUIRE(doc.basis.parity.has_value());
    StructureConstants c = doc.to_constants();
    CHECK(c.get(2, 1, 3) == c.get(1, 2, 3));  // odd-odd mirror keeps the sign
  }
}

TEST_CASE("parse . print round-trip") {
  SUBCASE("so_k(3)") {
    AlgebraDocument doc = parse_algebra(kSo3);
    CHECK(parse_algebra(print_algebra(doc)) == doc);
  }
  SUBCASE("compound coefficients") {
    std::string text =
        "algebra a\nparams k1 k2\nbasis X Y Z\nprofile none\n"
        "[X, Y] = (k1 + 1)*Z - 1/2*X\n[X, Z] = k1*k2*Y\n";
    AlgebraDocument doc = parse_algebra(text);
    CHECK(parse_algebra(print_algebra(doc)) == doc);
  }
  SUBCASE("ck documents for all N=2 sign patterns") {
    for (auto& spec : enumerate_sign_patterns(2)) {
      AlgebraDocument doc = ck_document(build_ck(spec));
      CHECK(parse_algebra(print_algebra(doc)) == doc);
    }
  }
  SUBCASE("checked-in so3.alg matches the in-memory document") {
    AlgebraDocument from_file = parse_algebra(read_file(std::string(YBX_DATA_DIR) + "/so3.alg"));
    CHECK(from_file.to_constants() == build_ck(CKSpec::symbolic(2)).constants);
  }
}

TEST_CASE("json export and import") {
  SUBCASE("round-trips the arbitrary d=2 fixture") {
    ParamSetPtr ps = std::make_shared<const ParamSet>();
    StructureConstants c(2, ps);
    c.set(1, 2, 1, Polynomial::constant(ps, Rational(5)));
    c.set(1, 2, 2, Polynomial::constant(ps, Rational(7)));
    c.set(2, 1, 1, Polynomial::constant(ps, Rational(3)));
    RMatrix r = build_r(centrally_extend(c));
    RMatrix back = rmatrix_from_json(rmatrix_to_json(r));
    CHECK(back.d_states == r.d_states);
    CHECK(back.matrix == r.matrix);
  }
  SUBCASE("round-trips symbolic CK matrices") {
    for (int n = 1; n <= 3; ++n) {
      RMatrix r = build_r_ck(CKSpec::symbolic(n));
      RMatrix back = rmatrix_from_json(rmatrix_to_json(r));
      CHECK(back.d_states == r.d_states);
      CHECK(back.matrix == r.matrix);
    }
  }
  SUBCASE("export is byte-deterministic") {
    RMatrix r = build_r_ck(CKSpec::symbolic(2));
    CHECK(rmatrix_to_json(r) == rmatrix_to_json(r));
  }
}

TEST_CASE("matrix market export") {
  SUBCASE("zero matrix header") {
    RMatrix r = build_r(centrally_extend(StructureConstants(1)));
    std::string mm = rmatrix_to_mm(r);
    CHECK(mm.find("4 4 0\n") != std::string::npos);
  }
  SUBCASE("rationals rendered n/d") {
    ParamSetPtr ps = std::make_shared<const ParamSet>();
    StructureConstants c(1, ps);
    c.set(1, 1, 1, Polynomial::constant(ps, Rational(-1, 2)));
    std::string mm = rmatrix_to_mm(build_r(centrally_extend(c)));
    CHECK(mm.find("1 2 -1/2\n") != std::string::npos);
  }
  SUBCASE("symbolic entries are rejected") {
    CHECK_THROWS(rmatrix_to_mm(build_r_ck(CKSpec::symbolic(2))));
  }
}

TEST_CASE("latex export") {
  RMatrix r = build_r_ck(CKSpec::symbolic(2));
  std::string tex = rmatrix_to_latex(r);
  // 16 rows, 3 block separators, kappa entries in the displayed cells
  CHECK(std::count(tex.begin(), tex.end(), '\n') >= 16);
  CHECK(tex.find("\\hline") != std::string::npos);
  CHECK(tex.find("\\kappa_{1}") != std::string::npos);
  CHECK(tex.find("-\\kappa_{2}") != std::string::npos);
  CHECK(tex.find("{cccc|cccc|cccc|cccc}") != std::string::npos);
  // row 2 carries kappa_1 in columns 12 and 15
  std::istringstream lines(tex);
  std::string line;
  std::getline(lines, line);  // \left( \begin{array}...
  std::getline(lines, line);  // row 1
  std::getline(lines, line);  // row 2
  std::size_t first = line.find("\\kappa_{1}");
  REQUIRE(first != std::string::npos);
  CHECK(line.find("\\kappa_{1}", first + 1) != std::string::npos);
}
