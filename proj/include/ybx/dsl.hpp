#ifndef YBX_DSL_HPP
#define YBX_DSL_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ybx/ck.hpp"
#include "ybx/structure_constants.hpp"

namespace ybx {

enum class Profile { None, Lie, Super };

inline std::string profile_name(Profile p) {
  switch (p) {
    case Profile::None: return "none";
    case Profile::Lie: return "lie";
    default: return "super";
  }
}

struct BracketTerm {
  Polynomial coeff;
  std::string label;
};

struct BracketLine {
  std::string left, right;
  std::vector<BracketTerm> terms;
};

/// Parsed algebra-definition document. The central charge is implicit: the
/// document describes the d-dimensional algebra only.
struct AlgebraDocument {
  std::string name;
  ParamSetPtr params;
  Basis basis;
  Profile profile = Profile::None;
  std::vector<BracketLine> brackets;

  int label_index(const std::string& label) const {
    for (std::size_t i = 0; i < basis.labels.size(); ++i)
      if (basis.labels[i] == label) return static_cast<int>(i) + 1;
    return 0;
  }

  /// Bracket list as structure constants: verbatim under profile none,
  /// mirror-completed (and graded under super) otherwise.
  StructureConstants to_constants() const {
    StructureConstants c(static_cast<int>(basis.dim()), params);
    for (const auto& br : brackets) {
      int i = label_index(br.left), j = label_index(br.right);
      for (const auto& t : br.terms) {
        int k = label_index(t.label);
        Polynomial cur = c.get(i, j, k);
        c.set(i, j, k, cur + t.coeff);
      }
    }
    if (profile == Profile::None) return c;
    return complete_antisymmetric(c, basis, profile == Profile::Super);
  }
};

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(int line_, int column_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ":" + std::to_string(column_) +
                           ": " + msg),
        line(line_),
        column(column_) {}
};

namespace detail {

class AlgParser {
 public:
  explicit AlgParser(const std::string& text) : text_(text) {}

  AlgebraDocument parse() {
    AlgebraDocument doc;
    std::vector<std::string> param_names;
    std::vector<std::pair<std::string, int>> parity_lines;  // label, line no
    std::vector<std::string> raw_brackets;
    std::vector<int> bracket_lines;
    bool have_params = false;

    std::istringstream in(text_);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::string s = strip_comment(line);
      if (trim(s).empty()) continue;
      s = trim(s);
      if (s.rfind("algebra ", 0) == 0) {
        doc.name = trim(s.substr(8));
        if (!ParamSet::valid_name(doc.name)) fail(lineno, 9, "invalid algebra name");
      } else if (s == "params" || s.rfind("params ", 0) == 0) {
        param_names = split_ws(s.size() > 6 ? s.substr(7) : "");
        have_params = true;
      } else if (s.rfind("basis ", 0) == 0) {
        doc.basis.labels = split_ws(s.substr(6));
      } else if (s.rfind("profile ", 0) == 0) {
        std::string p = trim(s.substr(8));
        if (p == "none") doc.profile = Profile::None;
        else if (p == "lie") doc.profile = Profile::Lie;
        else if (p == "super") doc.profile = Profile::Super;
        else fail(lineno, 9, "unknown profile '" + p + "'");
      } else if (s.rfind("parity ", 0) == 0) {
        parity_lines.emplace_back(trim(s.substr(7)), lineno);
      } else if (s[0] == '[') {
        raw_brackets.push_back(s);
        bracket_lines.push_back(lineno);
      } else {
        fail(lineno, 1, "unrecognized line: '" + s + "'");
      }
    }

    if (doc.name.empty()) fail(1, 1, "missing 'algebra NAME' header");
    if (doc.basis.labels.empty()) fail(1, 1, "missing 'basis' line");
    try {
      doc.params = make_params(param_names);
    } catch (const std::exception& e) {
      fail(1, 1, e.what());
    }
    (void)have_params;
    try {
      doc.basis.check();
    } catch (const std::exception& e) {
      fail(1, 1, e.what());
    }

    if (!parity_lines.empty()) {
      std::vector<Parity> parity(doc.basis.dim(), Parity::Even);
      for (const auto& [spec, ln] : parity_lines) {
        auto parts = split_ws(spec);
        if (parts.size() != 2 || (parts[1] != "odd" && parts[1] != "even"))
          fail(ln, 8, "expected 'parity LABEL odd|even'");
        int idx = find_label(doc, parts[0]);
        if (idx == 0) fail(ln, 8, "unknown label '" + parts[0] + "'");
        parity[idx - 1] = parts[1] == "odd" ? Parity::Odd : Parity::Even;
      }
      doc.basis.parity = parity;
    }

    for (std::size_t b = 0; b < raw_brackets.size(); ++b)
      doc.brackets.push_back(parse_bracket(doc, raw_brackets[b], bracket_lines[b]));

    check_duplicates(doc, bracket_lines);
    return doc;
  }

 private:
  static std::string strip_comment(const std::string& s) {
    auto pos = s.find('#');
    return pos == std::string::npos ? s : s.substr(0, pos);
  }

  static std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
  }

  static std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
  }

  static int find_label(const AlgebraDocument& doc, const std::string& label) {
    return doc.label_index(label);
  }

  [[noreturn]] static void fail(int line, int col, const std::string& msg) {
    throw ParseError(line, col, msg);
  }

  /// `[A, B] = term (± term)*` where term is `LABEL`, `coeff*LABEL`, or a
  /// parenthesized compound coefficient `(...)`*LABEL.
  BracketLine parse_bracket(const AlgebraDocument& doc, const std::string& s, int lineno) {
    std::size_t close = s.find(']');
    if (s[0] != '[' || close == std::string::npos) fail(lineno, 1, "malformed bracket");
    std::string inside = s.substr(1, close - 1);
    auto comma = inside.find(',');
    if (comma == std::string::npos) fail(lineno, 2, "expected '[A, B]'");
    BracketLine br;
    br.left = trim(inside.substr(0, comma));
    br.right = trim(inside.substr(comma + 1));
    for (const auto& lab : {br.left, br.right})
      if (find_label(doc, lab) == 0)
        fail(lineno, 2, "unknown label '" + lab + "'");
    std::size_t eq = s.find('=', close);
    if (eq == std::string::npos) fail(lineno, static_cast<int>(close) + 1, "expected '='");
    std::string rhs = trim(s.substr(eq + 1));
    if (rhs.empty()) fail(lineno, static_cast<int>(eq) + 2, "empty bracket value");
    if (rhs == "0") return br;

    // split on top-level + and -
    std::vector<std::pair<int, std::string>> pieces;  // sign, text
    int depth = 0, sign = 1;
    std::string cur;
    for (std::size_t p = 0; p < rhs.size(); ++p) {
      char ch = rhs[p];
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (depth == 0 && (ch == '+' || ch == '-') && !trim(cur).empty()) {
        pieces.emplace_back(sign, trim(cur));
        cur.clear();
        sign = ch == '-' ? -1 : 1;
      } else if (depth == 0 && ch == '-' && trim(cur).empty()) {
        sign = -sign;
      } else if (depth == 0 && ch == '+' && trim(cur).empty()) {
        // leading plus
      } else {
        cur += ch;
      }
    }
    if (!trim(cur).empty()) pieces.emplace_back(sign, trim(cur));
    if (pieces.empty()) fail(lineno, static_cast<int>(eq) + 2, "empty bracket value");

    for (auto& [sgn, text] : pieces) {
      // the label is the factor after the last top-level '*'
      std::size_t star = std::string::npos;
      depth = 0;
      for (std::size_t p = 0; p < text.size(); ++p) {
        if (text[p] == '(') ++depth;
        if (text[p] == ')') --depth;
        if (depth == 0 && text[p] == '*') star = p;
      }
      std::string coeff_text = star == std::string::npos ? "" : trim(text.substr(0, star));
      std::string label = star == std::string::npos ? text : trim(text.substr(star + 1));
      if (find_label(doc, label) == 0) fail(lineno, 1, "unknown label '" + label + "'");
      Polynomial coeff = Polynomial::constant(doc.params, Rational(sgn));
      if (!coeff_text.empty()) {
        try {
          coeff = coeff * parse_polynomial(coeff_text, doc.params);
        } catch (const std::exception& e) {
          fail(lineno, 1, e.what());
        }
      }
      if (!coeff.is_zero()) br.terms.push_back({std::move(coeff), label});
    }
    return br;
  }

  void check_duplicates(const AlgebraDocument& doc, const std::vector<int>& lines) {
    for (std::size_t a = 0; a < doc.brackets.size(); ++a) {
      for (std::size_t b = a + 1; b < doc.brackets.size(); ++b) {
        const auto& x = doc.brackets[a];
        const auto& y = doc.brackets[b];
        if (x.left == y.left && x.right == y.right) {
          // conflicting only when the values differ
          StructureConstants cx(static_cast<int>(doc.basis.dim()), doc.params);
          StructureConstants cy = cx;
          for (const auto& t : x.terms)
            cx.set(1, 1, doc.label_index(t.label), cx.get(1, 1, doc.label_index(t.label)) + t.coeff);
          for (const auto& t : y.terms)
            cy.set(1, 1, doc.label_index(t.label), cy.get(1, 1, doc.label_index(t.label)) + t.coeff);
          if (!(cx == cy))
            fail(lines[b], 1, "duplicate bracket [" + x.left + ", " + x.right +
                                  "] with conflicting value");
        }
      }
    }
  }

  const std::string& text_;
};

}  // namespace detail

inline AlgebraDocument parse_algebra(const std::string& text) {
  return detail::AlgParser(text).parse();
}

namespace detail {

inline std::string term_str(const Polynomial& coeff, const std::string& label, bool leading) {
  // renders one `coeff*LABEL` term; the sign is folded into the join
  bool neg = false;
  Polynomial c = coeff;
  if (c.terms().size() == 1 && c.terms().begin()->second < 0) {
    neg = true;
    c = -c;
  }
  std::string body;
  if (c.is_constant() && c.constant_value() == 1) {
    body = label;
  } else if (c.terms().size() == 1) {
    body = c.str() + "*" + label;
  } else {
    body = "(" + c.str() + ")*" + label;
  }
  if (leading) return (neg ? "-" : "") + body;
  return (neg ? " - " : " + ") + body;
}

}  // namespace detail

/// Canonical document rendering; parse_algebra(print_algebra(doc)) == doc.
inline std::string print_algebra(const AlgebraDocument& doc) {
  std::string out = "algebra " + doc.name + "\n";
  out += "params";
  for (const auto& n : doc.params->names()) out += " " + n;
  out += "\n";
  out += "basis";
  for (const auto& l : doc.basis.labels) out += " " + l;
  out += "\n";
  out += "profile " + profile_name(doc.profile) + "\n";
  if (doc.basis.parity) {
    for (std::size_t i = 0; i < doc.basis.dim(); ++i)
      if ((*doc.basis.parity)[i] == Parity::Odd)
        out += "parity " + doc.basis.labels[i] + " odd\n";
  }
  for (const auto& br : doc.brackets) {
    out += "[" + br.left + ", " + br.right + "] = ";
    if (br.terms.empty()) {
      out += "0";
    } else {
      for (std::size_t t = 0; t < br.terms.size(); ++t)
        out += detail::term_str(br.terms[t].coeff, br.terms[t].label, t == 0);
    }
    out += "\n";
  }
  return out;
}

/// A CK algebra as a document: one bracket line per stored i<j orientation.
inline AlgebraDocument ck_document(const CKAlgebra& alg) {
  AlgebraDocument doc;
  doc.name = "so_k_" + std::to_string(alg.spec.n + 1);
  doc.params = alg.constants.params();
  doc.basis.labels.assign(alg.basis.labels.begin(), alg.basis.labels.end() - 1);  // drop _central
  doc.profile = Profile::Lie;
  for (const auto& [key, value] : alg.constants.coeffs()) {
    auto [i, j, k] = key;
    if (i >= j) continue;
    BracketLine br;
    br.left = doc.basis.labels[i - 1];
    br.right = doc.basis.labels[j - 1];
    br.terms.push_back({value, doc.basis.labels[k - 1]});
    doc.brackets.push_back(std::move(br));
  }
  return doc;
}

inline bool operator==(const BracketTerm& a, const BracketTerm& b) {
  return a.label == b.label && a.coeff == b.coeff;
}
inline bool operator==(const BracketLine& a, const BracketLine& b) {
  return a.left == b.left && a.right == b.right && a.terms == b.terms;
}
inline bool operator==(const AlgebraDocument& a, const AlgebraDocument& b) {
  return a.name == b.name && *a.params == *b.params && a.basis.labels == b.basis.labels &&
         a.basis.parity == b.basis.parity && a.profile == b.profile && a.brackets == b.brackets;
}

}  // namespace ybx

#endif
