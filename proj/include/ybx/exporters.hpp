#ifndef YBX_EXPORTERS_HPP
#define YBX_EXPORTERS_HPP

#include <regex>
#include <string>

#include <json.hpp>

#include "ybx/rmatrix.hpp"

namespace ybx {

enum class ExportFormat { Json, MatrixMarket, Latex, Dsl };

inline ExportFormat parse_format(const std::string& s) {
  if (s == "json") return ExportFormat::Json;
  if (s == "mm" || s == "mtx") return ExportFormat::MatrixMarket;
  if (s == "latex" || s == "tex") return ExportFormat::Latex;
  if (s == "dsl" || s == "alg") return ExportFormat::Dsl;
  throw std::invalid_argument("unknown format '" + s + "'");
}

/// Lossless JSON form: entries in canonical (row, col) order, coefficients in
/// the canonical polynomial grammar. Byte-deterministic.
inline std::string rmatrix_to_json(const RMatrix& r) {
  nlohmann::ordered_json j;
  j["d_states"] = r.d_states;
  j["params"] = r.matrix.params()->names();
  auto entries = nlohmann::ordered_json::array();
  for (const auto& [key, v] : r.matrix.entries())
    entries.push_back({key.first, key.second, v.str()});
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

inline RMatrix rmatrix_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int D = j.at("d_states").get<int>();
  ParamSetPtr ps = make_params(j.at("params").get<std::vector<std::string>>());
  SparseMatrix m(D * D, ps);
  for (const auto& e : j.at("entries")) {
    int row = e.at(0).get<int>();
    int col = e.at(1).get<int>();
    m.set(row, col, parse_polynomial(e.at(2).get<std::string>(), ps));
  }
  return {D, std::move(m), RSource::UserSupplied};
}

/// MatrixMarket coordinate form, 1-based, exact rationals rendered n/d.
/// Numeric matrices only.
inline std::string rmatrix_to_mm(const RMatrix& r) {
  if (!r.matrix.is_numeric())
    throw std::invalid_argument("MatrixMarket export requires parameter-free entries");
  std::string out = "%%MatrixMarket matrix coordinate real general\n";
  out += "% exact rational values, rendered n or n/d\n";
  out += std::to_string(r.matrix.dim()) + " " + std::to_string(r.matrix.dim()) + " " +
         std::to_string(r.matrix.nnz()) + "\n";
  for (const auto& [key, v] : r.matrix.entries())
    out += std::to_string(key.first) + " " + std::to_string(key.second) + " " +
           to_string(v.constant_value()) + "\n";
  return out;
}

namespace detail {

inline std::string latex_poly(const Polynomial& p) {
  std::string s = p.str();
  s = std::regex_replace(s, std::regex("\\*"), " ");
  s = std::regex_replace(s, std::regex("\\bk([0-9]+)\\b"), "\\kappa_{$1}");
  s = std::regex_replace(s, std::regex("\\^([0-9]+)"), "^{$1}");
  return s;
}

}  // namespace detail

/// D^2 x D^2 array with D x D block rules (vertical bars and \hline every D
/// rows), parameter k<i> rendered as \kappa_i.
inline std::string rmatrix_to_latex(const RMatrix& r) {
  int D = r.d_states;
  int dim = r.matrix.dim();
  std::string cols;
  for (int b = 0; b < D; ++b) {
    if (b) cols += "|";
    for (int i = 0; i < D; ++i) cols += "c";
  }
  std::string out = "\\left( \\begin{array}{" + cols + "}\n";
  for (int row = 1; row <= dim; ++row) {
    for (int col = 1; col <= dim; ++col) {
      if (col > 1) out += " & ";
      Polynomial v = r.matrix.get(row, col);
      out += v.is_zero() ? "0" : detail::latex_poly(v);
    }
    out += " \\\\\n";
    if (row % D == 0 && row != dim) out += "\\hline\n";
  }
  out += "\\end{array} \\right)\n";
  return out;
}

inline std::string export_rmatrix(const RMatrix& r, ExportFormat fmt) {
  switch (fmt) {
    case ExportFormat::Json: return rmatrix_to_json(r);
    case ExportFormat::MatrixMarket: return rmatrix_to_mm(r);
    case ExportFormat::Latex: return rmatrix_to_latex(r);
    case ExportFormat::Dsl:
      throw std::invalid_argument("dsl format applies to algebra documents, not R-matrices");
  }
  throw std::logic_error("unreachable");
}

}  // namespace ybx

#endif
