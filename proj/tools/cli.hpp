#pragma once

#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eschur/eschur.hpp"

namespace eschur::cli {

enum class Format { text, json, csv };

/// Global settings shared by every subcommand.
struct CliConfig {
  int max_n = 8;
  Format format = Format::text;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

inline const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> names{"relations", "submodule", "characteristic",
                                              "endomorphism", "schur", "kmatrix", "roundtrip"};
  return names;
}

/// Raised for malformed input or a violated cap; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Composition parse_alpha(const std::string& text, const CliConfig& cfg) {
  Composition alpha;
  try {
    alpha = parse_composition(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (alpha.weight() > cfg.max_n) {
    throw UsageError("composition weight " + std::to_string(alpha.weight()) +
                     " exceeds --max-n " + std::to_string(cfg.max_n));
  }
  return alpha;
}

inline void check_cap(int n, const CliConfig& cfg) {
  if (n < 0) throw UsageError("n must be nonnegative");
  if (n > cfg.max_n) {
    throw UsageError("n = " + std::to_string(n) + " exceeds --max-n " + std::to_string(cfg.max_n));
  }
}

// ---------------------------------------------------------------------------
// expand / char

inline int cmd_expand(const Composition& alpha, Basis basis, const CliConfig& cfg,
                      std::ostream& out) {
  const QSymElement e =
      basis == Basis::fundamental ? extended_schur_in_F(alpha) : extended_schur_in_M(alpha);
  switch (cfg.format) {
    case Format::text:
      out << render_text(e) << '\n';
      break;
    case Format::json:
      out << to_json(e).dump(2) << '\n';
      break;
    case Format::csv:
      out << "composition,coefficient\n";
      for (const auto& [beta, c] : e.terms()) out << detail::csv_field(to_string(beta)) << ',' << c << '\n';
      break;
  }
  return kExitOk;
}

inline int cmd_char(const Composition& alpha, const CliConfig& cfg, std::ostream& out) {
  if (cfg.format == Format::csv) throw UsageError("char supports --format text or json");
  const QSymElement ch = characteristic(alpha);
  if (cfg.format == Format::json) {
    out << to_json(ch).dump(2) << '\n';
  } else {
    out << render_text(ch) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// tableaux

inline int cmd_tableaux(const Composition& alpha, const std::string& kind, bool show_descents,
                        const CliConfig& cfg, std::ostream& out) {
  if (cfg.format == Format::csv) throw UsageError("tableaux supports --format text or json");
  std::vector<Tableau> list;
  if (kind == "set") {
    list = enumerate_set(alpha);
  } else if (kind == "srit") {
    list = enumerate_srit(alpha);
  } else {
    throw UsageError("--kind must be set or srit");
  }
  if (cfg.format == Format::json) {
    json arr = json::array();
    for (const Tableau& t : list) {
      json j = to_json(t);
      if (show_descents) j["descent"] = to_json(descent_composition(t));
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
    return kExitOk;
  }
  for (std::size_t k = 0; k < list.size(); ++k) {
    if (k) out << '\n';
    out << render_text(list[k]) << '\n';
    if (show_descents) out << "Des = (" << to_string(descent_composition(list[k])) << ")\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// analyze

inline int cmd_analyze(const Composition& alpha, const CliConfig& cfg, std::ostream& out) {
  if (cfg.format == Format::csv) throw UsageError("analyze supports --format text or json");
  const AnalysisReport report = analyze(alpha);
  if (cfg.format == Format::json) {
    out << to_json(report).dump(2) << '\n';
    return kExitOk;
  }
  out << "alpha: (" << to_string(report.alpha) << ")\n";
  out << "dim: " << report.dim << '\n';
  out << "factors:";
  for (const auto& beta : report.factors) out << " (" << to_string(beta) << ")";
  out << '\n';
  out << "characteristic: " << render_text(report.characteristic) << '\n';
  out << "commutant_dimension: " << report.verdict.commutant_dimension << '\n';
  out << "indecomposable: " << (report.verdict.indecomposable ? "true" : "inconclusive") << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// kmatrix

inline int cmd_kmatrix(int n, const CliConfig& cfg, std::ostream& out) {
  if (n < 1) throw UsageError("kmatrix needs n >= 1");
  const KMatrix k = k_matrix(n);
  switch (cfg.format) {
    case Format::csv:
      out << render_csv(k);
      break;
    case Format::json:
      out << to_json(k).dump(2) << '\n';
      break;
    case Format::text: {
      std::size_t width = 0;
      for (const auto& a : k.index) width = std::max(width, to_string(a).size());
      out << std::setw(static_cast<int>(width)) << "";
      for (const auto& b : k.index) out << ' ' << std::setw(static_cast<int>(width)) << to_string(b);
      out << '\n';
      for (std::size_t r = 0; r < k.index.size(); ++r) {
        out << std::setw(static_cast<int>(width)) << to_string(k.index[r]);
        for (std::size_t c = 0; c < k.index.size(); ++c) {
          out << ' ' << std::setw(static_cast<int>(width)) << k.entries(r, c).str();
        }
        out << '\n';
      }
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

/// Pass/fail tally of one check over a sweep; keeps the first failure.
struct CheckTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<std::string> first_counterexample;

  void record(const std::optional<std::string>& failure) {
    if (!failure) {
      ++passed;
      return;
    }
    ++failed;
    if (!first_counterexample) first_counterexample = failure;
  }
};

namespace checks {

using Result = std::optional<std::string>;

inline std::string label(const Composition& alpha) { return "(" + to_string(alpha) + ")"; }

inline Result relations(const Composition& alpha) {
  for (ActionKind kind : {ActionKind::full, ActionKind::quotient}) {
    const auto report = verify_relations(alpha, kind);
    if (!report.empty()) {
      const auto& v = report.front();
      return label(alpha) + (kind == ActionKind::full ? " full" : " quotient") + ": " +
             v.relation + " fails for i=" + std::to_string(v.i) + ", j=" + std::to_string(v.j) +
             " on " + to_json(v.tableau).dump();
    }
  }
  const ModuleMatrices mm = matrices(alpha);
  if (!satisfies_hecke_relations(mm)) return label(alpha) + ": action matrices violate relations";
  if (!is_triangular(mm)) return label(alpha) + ": action matrices not triangular in filtration order";
  return std::nullopt;
}

inline Result submodule(const Composition& alpha) {
  if (!verify_submodule_closure(alpha)) return label(alpha) + ": NSET span not closed";
  return std::nullopt;
}

inline Result characteristic_matches(const Composition& alpha) {
  const ModuleMatrices mm = matrices(alpha);
  const auto factors = composition_factors(mm);
  for (std::size_t j = 0; j < mm.dim(); ++j) {
    if (factors[j] != descent_composition(mm.order[j])) {
      return label(alpha) + ": factor " + std::to_string(j + 1) + " is (" +
             to_string(factors[j]) + ") but Des(T_j) is (" +
             to_string(descent_composition(mm.order[j])) + ")";
    }
  }
  const QSymElement ch = characteristic(mm);
  const QSymElement e = extended_schur_in_F(alpha);
  if (ch != e) return label(alpha) + ": characteristic " + render_text(ch) + " != " + render_text(e);
  return std::nullopt;
}

inline Result endomorphism(const Composition& alpha) {
  const ModuleMatrices mm = matrices(alpha);
  const EndomorphismSpace space = commutant_basis(mm);
  for (const auto& e : space.basis) {
    for (const ActionMatrix& p : mm.mats) {
      const auto pr = matrix_cast<Rational>(p);
      if (!(e * pr - pr * e).is_zero()) return label(alpha) + ": basis matrix does not commute";
    }
  }
  if (space.dimension() != 1) {
    return label(alpha) + ": commutant dimension " + std::to_string(space.dimension());
  }
  return std::nullopt;
}

inline Result schur(const Composition& lambda) {
  const QSymElement e = extended_schur_in_F(lambda);
  const QSymElement s = schur_in_F(lambda);
  if (e != s) return label(lambda) + ": " + render_text(e) + " != " + render_text(s);
  return std::nullopt;
}

inline Result kmatrix(int n) {
  const KMatrix k = k_matrix(n);
  for (std::size_t r = 0; r < k.index.size(); ++r) {
    if (k.entries(r, r) != 1) return "n=" + std::to_string(n) + ": diagonal entry at " + label(k.index[r]);
  }
  const Integer det = k.determinant();
  if (det != 1 && det != -1) return "n=" + std::to_string(n) + ": determinant " + det.str();
  return std::nullopt;
}

inline Result roundtrip(const Composition& alpha) {
  const auto f = QSymElement::basis_element(Basis::fundamental, alpha);
  const auto m = QSymElement::basis_element(Basis::monomial, alpha);
  if (monomial_to_fundamental(fundamental_to_monomial(f)) != f) return label(alpha) + ": F->M->F";
  if (fundamental_to_monomial(monomial_to_fundamental(m)) != m) return label(alpha) + ": M->F->M";
  return std::nullopt;
}

}  // namespace checks

/// Runs the selected checks over every composition of every m <= n.
inline std::vector<CheckTally> run_verify(int n, const std::vector<std::string>& selected) {
  std::vector<CheckTally> tallies;
  for (const std::string& name : selected) {
    CheckTally tally{name};
    for (int m = 1; m <= n; ++m) {
      if (name == "kmatrix") {
        tally.record(checks::kmatrix(m));
        continue;
      }
      for (const Composition& alpha : compositions_of(m)) {
        if (name == "relations") {
          tally.record(checks::relations(alpha));
        } else if (name == "submodule") {
          tally.record(checks::submodule(alpha));
        } else if (name == "characteristic") {
          tally.record(checks::characteristic_matches(alpha));
        } else if (name == "endomorphism") {
          tally.record(checks::endomorphism(alpha));
        } else if (name == "schur") {
          if (is_partition(alpha)) tally.record(checks::schur(alpha));
        } else if (name == "roundtrip") {
          tally.record(checks::roundtrip(alpha));
        }
      }
    }
    tallies.push_back(std::move(tally));
  }
  return tallies;
}

/// Prints the verify summary and returns 0 when every check passed, else 1.
inline int report_verify(int n, const std::vector<CheckTally>& tallies, const CliConfig& cfg,
                         std::ostream& out) {
  const bool pass =
      std::all_of(tallies.begin(), tallies.end(), [](const auto& t) { return t.failed == 0; });
  if (cfg.format == Format::json) {
    json arr = json::array();
    for (const auto& t : tallies) {
      arr.push_back(json{{"check", t.name},
                         {"passed", t.passed},
                         {"failed", t.failed},
                         {"first_counterexample",
                          t.first_counterexample ? json(*t.first_counterexample) : json(nullptr)}});
    }
    out << json{{"n", n}, {"checks", arr}, {"pass", pass}}.dump(2) << '\n';
  } else {
    for (const auto& t : tallies) {
      out << std::left << std::setw(16) << t.name << "passed " << t.passed << ", failed "
          << t.failed << '\n';
      if (t.first_counterexample) out << "  first counterexample: " << *t.first_counterexample << '\n';
    }
    out << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? kExitOk : kExitCheckFailed;
}

inline int cmd_verify(int n, const std::vector<std::string>& selected, const CliConfig& cfg,
                      std::ostream& out) {
  check_cap(n, cfg);
  if (cfg.format == Format::csv) throw UsageError("verify supports --format text or json");
  for (const auto& name : selected) {
    if (std::find(all_checks().begin(), all_checks().end(), name) == all_checks().end()) {
      throw UsageError("unknown check: " + name);
    }
  }
  return report_verify(n, run_verify(n, selected), cfg, out);
}

// ---------------------------------------------------------------------------

/// Entry point shared by the executable and the tests. Returns the exit code:
/// 0 success, 1 verification failure, 2 usage error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extended Schur functions and their 0-Hecke modules"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--max-n", cfg.max_n, "Cap on the weight of any composition")
      ->check(CLI::PositiveNumber);

  std::string alpha_text;
  std::string basis = "F";
  std::string kind = "set";
  bool show_descents = false;
  int n = 0;
  std::vector<std::string> selected = all_checks();

  auto* expand = app.add_subcommand("expand", "Extended Schur function in the F or M basis");
  expand->add_option("--alpha", alpha_text, "Composition, e.g. 2,1,3")->required();
  expand->add_option("--basis", basis, "F or M")->check(CLI::IsMember({"F", "M"}));

  auto* tableaux = app.add_subcommand("tableaux", "List standard extended or row-increasing tableaux");
  tableaux->add_option("--alpha", alpha_text, "Composition, e.g. 2,1,3")->required();
  tableaux->add_option("--kind", kind, "set or srit")->check(CLI::IsMember({"set", "srit"}));
  tableaux->add_flag("--show-descents", show_descents, "Print the descent composition of each tableau");

  auto* chr = app.add_subcommand("char", "Quasisymmetric characteristic of X_alpha");
  chr->add_option("--alpha", alpha_text, "Composition, e.g. 2,1,3")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis report for X_alpha");
  analyze_cmd->add_option("--alpha", alpha_text, "Composition, e.g. 2,1,3")->required();

  auto* verify = app.add_subcommand("verify", "Exhaustive checks over all compositions of weight <= n");
  verify->add_option("--n", n, "Largest weight to sweep")->required();
  verify->add_option("--checks", selected, "Subset of checks to run")->delimiter(',');

  auto* kmatrix = app.add_subcommand("kmatrix", "Matrix of K_{alpha,beta} in degree n");
  kmatrix->add_option("--n", n, "Degree")->required();

  for (auto* sub : {expand, tableaux, chr, analyze_cmd, verify, kmatrix}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;

  try {
    if (*expand) {
      return cmd_expand(parse_alpha(alpha_text, cfg),
                        basis == "M" ? Basis::monomial : Basis::fundamental, cfg, out);
    }
    if (*tableaux) return cmd_tableaux(parse_alpha(alpha_text, cfg), kind, show_descents, cfg, out);
    if (*chr) return cmd_char(parse_alpha(alpha_text, cfg), cfg, out);
    if (*analyze_cmd) return cmd_analyze(parse_alpha(alpha_text, cfg), cfg, out);
    if (*verify) return cmd_verify(n, selected, cfg, out);
    if (*kmatrix) {
      check_cap(n, cfg);
      return cmd_kmatrix(n, cfg, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace eschur::cli
