#pragma once

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eschur/composition.hpp"
#include "eschur/hecke.hpp"
#include "eschur/module_analysis.hpp"
#include "eschur/qsym.hpp"
#include "eschur/tableau.hpp"

namespace eschur {

using nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers; larger ones become strings.
inline json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return json(static_cast<std::int64_t>(v));
  }
  return json(v.str());
}

inline Integer integer_from_json(const json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<std::int64_t>());
}

inline json to_json(const Composition& alpha) { return json(alpha.parts()); }

inline Composition composition_from_json(const json& j) {
  return Composition(j.get<std::vector<int>>());
}

/// {"shape": [...], "rows": [[...], ...]} with rows bottom-up.
inline json to_json(const Tableau& t) {
  return json{{"shape", to_json(t.shape())}, {"rows", t.rows()}};
}

inline Tableau tableau_from_json(const json& j) {
  return Tableau(composition_from_json(j.at("shape")),
                 j.at("rows").get<std::vector<std::vector<int>>>());
}

/// {"degree": n, "basis": "M"|"F", "terms": [{"composition": [...], "coefficient": c}]},
/// terms in lexicographic composition order.
inline json to_json(const QSymElement& x) {
  json terms = json::array();
  for (const auto& [alpha, c] : x.terms()) {
    terms.push_back(json{{"composition", to_json(alpha)}, {"coefficient", integer_to_json(c)}});
  }
  return json{{"degree", x.degree()}, {"basis", basis_tag(x.basis())}, {"terms", terms}};
}

inline QSymElement qsym_from_json(const json& j) {
  const std::string tag = j.at("basis").get<std::string>();
  if (tag != "M" && tag != "F") throw std::invalid_argument("qsym json: unknown basis " + tag);
  QSymElement x(j.at("degree").get<int>(), tag == "M" ? Basis::monomial : Basis::fundamental);
  for (const json& term : j.at("terms")) {
    x.add_term(composition_from_json(term.at("composition")),
               integer_from_json(term.at("coefficient")));
  }
  return x;
}

inline json to_json(const RelationViolation& v) {
  return json{{"relation", v.relation}, {"i", v.i}, {"j", v.j}, {"tableau", to_json(v.tableau)}};
}

inline json to_json(const std::vector<RelationViolation>& report) {
  json out = json::array();
  for (const auto& v : report) out.push_back(to_json(v));
  return out;
}

/// Rows from top to bottom, entries separated by spaces.
inline std::string render_text(const Tableau& t) {
  std::ostringstream os;
  const auto& rows = t.rows();
  for (std::size_t k = rows.size(); k-- > 0;) {
    for (std::size_t c = 0; c < rows[k].size(); ++c) {
      if (c) os << ' ';
      os << rows[k][c];
    }
    if (k) os << '\n';
  }
  return os.str();
}

/// e.g. "F_{(1,1,2,2)} + F_{(1,2,3)} - 2 F_{(2,1,3)}"; "0" for the zero element.
inline std::string render_text(const QSymElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, c] : x.terms()) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag << ' ';
    os << basis_tag(x.basis()) << "_{(" << to_string(alpha) << ")}";
    first = false;
  }
  return os.str();
}

namespace detail {
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}
}  // namespace detail

/// Header row and first column carry composition labels; fields containing
/// commas are quoted.
inline std::string render_csv(const KMatrix& k) {
  std::ostringstream os;
  for (const Composition& beta : k.index) os << ',' << detail::csv_field(to_string(beta));
  os << '\n';
  for (std::size_t r = 0; r < k.index.size(); ++r) {
    os << detail::csv_field(to_string(k.index[r]));
    for (std::size_t c = 0; c < k.index.size(); ++c) os << ',' << k.entries(r, c);
    os << '\n';
  }
  return os.str();
}

inline json to_json(const KMatrix& k) {
  json labels = json::array();
  for (const Composition& alpha : k.index) labels.push_back(to_json(alpha));
  json rows = json::array();
  for (std::size_t r = 0; r < k.index.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < k.index.size(); ++c) row.push_back(integer_to_json(k.entries(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"n", k.n}, {"index", labels}, {"entries", rows}};
}

/// Everything the analyzer reports about X_alpha.
struct AnalysisReport {
  Composition alpha;
  std::size_t dim;
  std::vector<Composition> factors;
  QSymElement characteristic;
  Verdict verdict;
};

inline AnalysisReport analyze(const Composition& alpha) {
  const ModuleMatrices mm = matrices(alpha);
  return AnalysisReport{alpha, mm.dim(), composition_factors(mm), characteristic(mm),
                        is_indecomposable(commutant_basis(mm))};
}

inline json to_json(const AnalysisReport& r) {
  json factors = json::array();
  for (const auto& beta : r.factors) factors.push_back(to_json(beta));
  return json{{"alpha", to_json(r.alpha)},
              {"dim", r.dim},
              {"factors", factors},
              {"characteristic", to_json(r.characteristic)},
              {"commutant_dimension", r.verdict.commutant_dimension},
              {"indecomposable",
               r.verdict.indecomposable ? json(true) : json("inconclusive")}};
}

}  // namespace eschur
