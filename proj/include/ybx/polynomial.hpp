#ifndef YBX_POLYNOMIAL_HPP
#define YBX_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ybx/rational.hpp"

namespace ybx {

/// Ordered list of parameter names shared by every polynomial of one algebra.
/// Names must match [A-Za-z][A-Za-z0-9_]* and be unique.
class ParamSet {
 public:
  ParamSet() = default;

  explicit ParamSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (const auto& n : names_) {
      if (!valid_name(n)) throw std::invalid_argument("invalid parameter name: '" + n + "'");
    }
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw std::invalid_argument("duplicate parameter name: '" + names_[i] + "'");
  }

  static bool valid_name(const std::string& n) {
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])))) return false;
    return std::all_of(n.begin() + 1, n.end(), [](unsigned char c) {
      return std::isalnum(c) || c == '_';
    });
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a name, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t index_of(const std::string& n) const {
    auto it = std::find(names_.begin(), names_.end(), n);
    return it == names_.end() ? npos : static_cast<std::size_t>(it - names_.begin());
  }

  bool operator==(const ParamSet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

using ParamSetPtr = std::shared_ptr<const ParamSet>;

inline ParamSetPtr make_params(std::vector<std::string> names) {
  return std::make_shared<const ParamSet>(std::move(names));
}

/// Dense exponent vector, one entry per declared parameter.
using Monomial = std::vector<unsigned>;

/// Descending graded-lex: higher total degree first, ties broken
/// lexicographically by declaration order (higher exponent first).
struct GradedLexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Exact multivariate polynomial over the rationals in the parameters of one
/// ParamSet. Canonical sparse form: no stored coefficient is zero, so equality
/// is term-map identity.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexDesc>;

  Polynomial() : params_(std::make_shared<const ParamSet>()) {}

  explicit Polynomial(ParamSetPtr params) : params_(std::move(params)) {}

  static Polynomial constant(ParamSetPtr params, const Rational& c) {
    Polynomial p(std::move(params));
    if (c != 0) p.terms_.emplace(Monomial(p.params_->size(), 0u), c);
    return p;
  }

  /// The single parameter of index `i` as a degree-1 polynomial.
  static Polynomial parameter(ParamSetPtr params, std::size_t i) {
    Polynomial p(std::move(params));
    if (i >= p.params_->size()) throw std::out_of_range("parameter index out of range");
    Monomial m(p.params_->size(), 0u);
    m[i] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
  }

  const ParamSetPtr& params() const { return params_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// True iff the polynomial is a constant (possibly zero).
  bool is_constant() const {
    if (terms_.empty()) return true;
    const Monomial& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
  }

  /// The constant value; requires is_constant().
  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    return terms_.begin()->second;
  }

  Polynomial operator-() const {
    Polynomial r(params_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Polynomial operator+(const Polynomial& o) const {
    check_same_params(o);
    Polynomial r(params_);
    r.terms_ = terms_;
    for (const auto& [m, c] : o.terms_) {
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        r.terms_.emplace(m, c);
      } else {
        it->second += c;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
    return r;
  }

  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

  Polynomial operator*(const Polynomial& o) const {
    check_same_params(o);
    Polynomial r(params_);
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : o.terms_) {
        Monomial m(ma.size());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
          r.terms_.emplace(std::move(m), ca * cb);
        } else {
          it->second += ca * cb;
          if (it->second == 0) r.terms_.erase(it);
        }
      }
    }
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  bool operator==(const Polynomial& o) const {
    return *params_ == *o.params_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Exact evaluation; `values` must cover every parameter of the set.
  Rational eval(const std::vector<Rational>& values) const {
    if (values.size() != params_->size())
      throw std::invalid_argument("assignment does not cover the parameter set");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (unsigned e = 0; e < m[i]; ++e) term *= values[i];
      total += term;
    }
    return total;
  }

  /// Canonical textual form: terms in descending graded-lex order, e.g.
  /// `-1/2*k1*k2 + 3`. Round-trips through parse_polynomial.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational a = c;
      if (first) {
        if (a < 0) {
          out += "-";
          a = -a;
        }
      } else {
        out += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
      }
      std::string mono = monomial_str(m);
      if (mono.empty()) {
        out += to_string(a);
      } else if (a == 1) {
        out += mono;
      } else {
        out += to_string(a) + "*" + mono;
      }
      first = false;
    }
    return out;
  }

 private:
  std::string monomial_str(const Monomial& m) const {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += params_->name(i);
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
  }

  void check_same_params(const Polynomial& o) const {
    if (!(*params_ == *o.params_))
      throw std::invalid_argument("polynomials over different parameter sets");
  }

  ParamSetPtr params_;
  TermMap terms_;
};

namespace detail {

/// Recursive-descent parser over `+ - * ^ ( )`, rationals and parameter names.
class PolyParser {
 public:
  PolyParser(const std::string& text, ParamSetPtr params)
      : text_(text), params_(std::move(params)) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        p += term();
      } else if (peek() == '-') {
        ++pos_;
        p += -term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        p *= factor();
      } else {
        return p;
      }
    }
  }

  Polynomial factor() {
    skip_ws();
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '+') {
      ++pos_;
      return factor();
    }
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(params_, rational());
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name = ident();
      std::size_t idx = params_->index_of(name);
      if (idx == ParamSet::npos) fail("unknown parameter '" + name + "'");
      Polynomial p = Polynomial::parameter(params_, idx);
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        unsigned e = exponent();
        Polynomial q = Polynomial::constant(params_, Rational(1));
        for (unsigned i = 0; i < e; ++i) q *= p;
        return q;
      }
      return p;
    }
    fail("expected a term");
  }

  Rational rational() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string s = text_.substr(start, pos_ - start);
    if (peek() == '/') {
      std::size_t save = pos_;
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == dstart) {
        pos_ = save;  // `/` was not part of the number
      } else {
        s += "/" + text_.substr(dstart, pos_ - dstart);
      }
    }
    return parse_rational(s);
  }

  unsigned exponent() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected exponent");
    return static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start)));
  }

  std::string ident() {
    std::size_t start = pos_;
    ++pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) +
                                ": " + msg);
  }

  const std::string& text_;
  ParamSetPtr params_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& text, ParamSetPtr params) {
  return detail::PolyParser(text, std::move(params)).parse();
}

}  // namespace ybx

#endif
