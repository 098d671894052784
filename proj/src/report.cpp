#include "hesspave/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "hesspave/exactla.hpp"
#include "hesspave/paving.hpp"
#include "hesspave/verify.hpp"

namespace hesspave {

using json = nlohmann::ordered_json;

InputError::InputError(std::vector<std::string> problems)
    : std::invalid_argument([&] {
        std::string msg;
        for (const auto& p : problems) msg += (msg.empty() ? "" : "; ") + p;
        return msg;
      }()),
      problems_(std::move(problems)) {}

// -------------------------------------------------------------------- parsing

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::optional<long> parse_int(const std::string& tok) {
  if (tok.empty()) return std::nullopt;
  std::size_t used = 0;
  try {
    const long v = std::stol(tok, &used);
    if (used == tok.size()) return v;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

/// Integers of a comma list; malformed tokens are reported to `problems`.
std::vector<int> parse_int_list(const std::string& text, const std::string& what, std::vector<std::string>& problems) {
  std::vector<int> out;
  std::string body = trim(text);
  if (body.size() >= 2 && (body.front() == '[' || body.front() == '(') && (body.back() == ']' || body.back() == ')'))
    body = body.substr(1, body.size() - 2);
  if (trim(body).empty()) {
    problems.push_back(what + " is empty");
    return out;
  }
  for (const auto& tok : split(body, ',')) {
    const auto v = parse_int(tok);
    if (!v) {
      problems.push_back(what + ": '" + tok + "' is not an integer");
      continue;
    }
    out.push_back(static_cast<int>(*v));
  }
  return out;
}

}  // namespace

Command parse_command(const std::string& name) {
  if (name == "cells") return Command::cells;
  if (name == "poincare") return Command::poincare;
  if (name == "r0") return Command::r0;
  if (name == "verify") return Command::verify;
  if (name == "generic-flag") return Command::generic_flag;
  if (name == "count") return Command::count;
  if (name == "profile") return Command::profile;
  throw InputError({"unknown command '" + name + "'"});
}

std::string command_name(Command c) {
  switch (c) {
    case Command::cells: return "cells";
    case Command::poincare: return "poincare";
    case Command::r0: return "r0";
    case Command::verify: return "verify";
    case Command::generic_flag: return "generic-flag";
    case Command::count: return "count";
    case Command::profile: return "profile";
  }
  return "?";
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  throw InputError({"unknown format '" + name + "' (expected json, csv or text)"});
}

Composition parse_composition(const std::string& text) {
  std::vector<std::string> problems;
  const auto parts = parse_int_list(text, "lambda", problems);
  long total = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] < 0) problems.push_back("lambda part " + std::to_string(k + 1) + " is negative");
    else total += parts[k];
  }
  if (problems.empty() && total < 1) problems.emplace_back("lambda must have at least one box");
  if (!problems.empty()) throw InputError(problems);
  return Composition(parts);
}

HessenbergFunction parse_hessenberg(const std::string& text, int n) {
  const std::string t = trim(text);
  if (t == "springer") return HessenbergFunction::springer(n);
  if (t.rfind("shift:", 0) == 0) {
    const auto k = parse_int(t.substr(6));
    if (!k || *k < 1) throw InputError({"h preset '" + t + "' needs a shift of at least 1"});
    return HessenbergFunction::shifted(n, static_cast<int>(*k));
  }
  std::vector<std::string> problems;
  const auto values = parse_int_list(t, "h", problems);
  if (problems.empty()) {
    if (static_cast<int>(values.size()) != n)
      problems.push_back("h has " + std::to_string(values.size()) + " values but lambda has " + std::to_string(n) +
                         " boxes");
    for (auto& v : HessenbergFunction::violations(values)) problems.push_back(std::move(v));
  }
  if (!problems.empty()) throw InputError(problems);
  return HessenbergFunction(values);
}

Permutation parse_permutation(const std::string& text) {
  std::vector<std::string> problems;
  const auto word = parse_int_list(text, "w", problems);
  if (problems.empty()) {
    std::vector<int> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k)
      if (sorted[k] != static_cast<int>(k) + 1) {
        problems.push_back("w = " + trim(text) + " is not a permutation of 1.." + std::to_string(word.size()));
        break;
      }
  }
  if (!problems.empty()) throw InputError(problems);
  return Permutation(word);
}

Tableau parse_tableau(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), '/', '\n');
  std::replace(s.begin(), s.end(), ',', ' ');
  try {
    return Tableau::from_text(s);
  } catch (const std::invalid_argument& e) {
    throw InputError({std::string("tableau: ") + e.what()});
  }
}

int default_workers() {
  if (const char* env = std::getenv("HESSPAVE_WORKERS")) {
    const auto v = parse_int(trim(env));
    if (v && *v >= 1) return static_cast<int>(*v);
  }
  return 1;
}

// ------------------------------------------------------------------ rendering

namespace {

struct Resolved {
  Composition lambda;
  std::optional<HessenbergFunction> h;  ///< absent only for verify over all h
  FieldSpec field{2};
  std::uint64_t seed = 1;
  std::optional<Permutation> w;
  std::optional<Tableau> tableau;
  std::optional<std::pair<int, int>> trace;
};

json rows_json(const Tableau& t) { return t.rows(); }

json pairs_json(const InversionSet& s) {
  json out = json::array();
  for (const auto& p : s.pairs()) out.push_back({p.high, p.low});
  return out;
}

std::string pairs_text(const InversionSet& s) {
  std::string out;
  for (const auto& p : s.pairs()) out += (out.empty() ? "" : " ") + ("(" + std::to_string(p.high) + "," + std::to_string(p.low) + ")");
  return out;
}

std::string word_csv(const Permutation& w) { return join_ints(w.word(), ","); }

std::string indent(const std::string& block, const std::string& pad) {
  std::string out;
  std::istringstream in(block);
  std::string line;
  while (std::getline(in, line)) out += pad + line + "\n";
  return out;
}

json header(const RunConfig& cfg, const Resolved& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["version"] = HESSPAVE_VERSION;
  j["command"] = command_name(cfg.command);
  j["lambda"] = r.lambda.parts();
  j["h"] = r.h ? json(r.h->values()) : json("all");
  if (cfg.seed) j["seed"] = *cfg.seed;
  return j;
}

std::string text_header(const RunConfig& cfg, const Resolved& r) {
  return "hesspave " + std::string(HESSPAVE_VERSION) + " " + command_name(cfg.command) + " lambda=" +
         r.lambda.to_string() + " h=" + (r.h ? r.h->to_string() : std::string("all")) +
         (cfg.seed ? " seed=" + std::to_string(*cfg.seed) : std::string()) + "\n";
}

std::string poly_text(const std::string& s) {
  return s.find_first_of("+-", 1) == std::string::npos ? s : "(" + s + ")";
}

/// "e3 + x_{5,6}*e2 + (...)*e1", pivot row first.
std::string column_text(const std::vector<Polynomial>& col) {
  std::string out;
  for (int r = static_cast<int>(col.size()); r >= 1; --r) {
    const auto& p = col[r - 1];
    if (p.is_zero()) continue;
    const std::string s = p.to_string();
    std::string term = s == "1" ? "e" + std::to_string(r) : poly_text(s) + "*e" + std::to_string(r);
    out += (out.empty() ? "" : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

// ------------------------------------------------------------------ commands

CommandOutput cmd_cells(const RunConfig& cfg, const Resolved& r) {
  const auto cells = enumerate_cells(r.lambda, *r.h, cfg.workers);
  std::ostringstream out;
  if (cfg.format == OutputFormat::json) {
    json j = header(cfg, r);
    j["cell_count"] = cells.size();
    j["empty"] = cells.empty();
    json arr = json::array();
    for (const auto& c : cells)
      arr.push_back({{"w", c.w.word()}, {"tableau", rows_json(c.tableau)}, {"inversions", pairs_json(c.hess_inversions)},
                     {"dim", c.dim}});
    j["cells"] = std::move(arr);
    out << j.dump(2) << "\n";
  } else if (cfg.format == OutputFormat::csv) {
    out << "w;dim;inversions\n";
    for (const auto& c : cells) out << word_csv(c.w) << ";" << c.dim << ";" << pairs_text(c.hess_inversions) << "\n";
  } else {
    out << text_header(cfg, r);
    if (cells.empty()) out << "EMPTY (no h-strict fillings)\n";
    for (const auto& c : cells) {
      out << "w=" << c.w.to_string() << " dim=" << c.dim << " inversions: " << pairs_text(c.hess_inversions) << "\n";
      out << indent(c.tableau.to_text(), "  ");
    }
    out << cells.size() << " cells\n";
  }
  return {kExitOk, out.str()};
}

CommandOutput cmd_poincare(const RunConfig& cfg, const Resolved& r) {
  const auto pd = poincare(r.lambda, *r.h, cfg.workers);
  std::ostringstream out;
  if (cfg.format == OutputFormat::json) {
    json j = header(cfg, r);
    j["coefficients"] = pd.coeffs;
    j["total"] = pd.total();
    j["empty"] = pd.total() == 0;
    json betti = json::array();
    for (std::size_t k = 0; k < pd.coeffs.size(); ++k) betti.push_back({{"degree", 2 * k}, {"rank", pd.coeffs[k]}});
    j["betti"] = std::move(betti);
    out << j.dump(2) << "\n";
  } else if (cfg.format == OutputFormat::csv) {
    out << "dimension;cells\n";
    for (std::size_t k = 0; k < pd.coeffs.size(); ++k) out << k << ";" << pd.coeffs[k] << "\n";
  } else {
    out << text_header(cfg, r);
    if (pd.total() == 0) {
      out << "EMPTY\n";
    } else {
      std::string poly;
      for (std::size_t k = 0; k < pd.coeffs.size(); ++k) {
        if (!pd.coeffs[k]) continue;
        std::string mono = k == 0 ? "" : (k == 1 ? "q" : "q^" + std::to_string(k));
        std::string coeff = (pd.coeffs[k] == 1 && k) ? "" : std::to_string(pd.coeffs[k]);
        poly += (poly.empty() ? "" : " + ") + coeff + mono;
      }
      out << "P(q) = " << poly << "\n" << "cells: " << pd.total() << "\n";
    }
  }
  return {kExitOk, out.str()};
}

CommandOutput cmd_r0(const RunConfig& cfg, const Resolved& r) {
  const auto r0 = r0_tableau(r.lambda, *r.h);
  const auto cells = enumerate_cells(r.lambda, *r.h, cfg.workers);
  std::vector<const CellDescriptor*> zero;
  for (const auto& c : cells)
    if (c.dim == 0) zero.push_back(&c);
  const bool consistent = cells.empty() ? !r0.has_value()
                                        : zero.size() == 1 && r0.has_value() && zero.front()->tableau == *r0;
  std::ostringstream out;
  if (cfg.format == OutputFormat::json) {
    json j = header(cfg, r);
    j["empty"] = !r0.has_value();
    j["tableau"] = r0 ? rows_json(*r0) : json(nullptr);
    j["zero_dimensional_cells"] = zero.size();
    j["unique"] = consistent;
    out << j.dump(2) << "\n";
  } else if (cfg.format == OutputFormat::csv) {
    out << "row;entries\n";
    if (r0)
      for (std::size_t k = 0; k < r0->rows().size(); ++k) out << k + 1 << ";" << join_ints(r0->rows()[k], ",") << "\n";
  } else {
    out << text_header(cfg, r);
    out << (r0 ? r0->to_text() : std::string("EMPTY\n"));
    out << "zero-dimensional cells: " << zero.size() << (consistent ? " (consistent)" : " (INCONSISTENT)") << "\n";
  }
  return {consistent ? kExitOk : kExitVerificationFailed, out.str()};
}

CommandOutput cmd_generic_flag(const RunConfig& cfg, const Resolved& r) {
  const auto& w = *r.w;
  const auto zeros = hess_zero_coordinates(w, r.lambda, *r.h);
  const auto flag = generic_hessenberg_flag(w, r.lambda, *r.h);
  std::vector<Coordinate> live;
  for (const auto& c : dw_coordinates(w, r.lambda))
    if (std::find(zeros.begin(), zeros.end(), c) == zeros.end()) live.push_back(c);
  std::optional<bool> member;
  if (r.lambda.size() <= 6)
    member = verify_flag_membership(flag, nilpotent_matrix<PolynomialRing>(r.lambda), *r.h);
  const int n = flag.size();
  std::ostringstream out;
  if (cfg.format == OutputFormat::json) {
    json j = header(cfg, r);
    j["w"] = w.word();
    j["tableau"] = rows_json(tableau_of(w, r.lambda));
    json coords = json::array(), zc = json::array();
    for (const auto& c : live) coords.push_back(to_string(c));
    for (const auto& c : zeros) zc.push_back(to_string(c));
    j["coordinates"] = std::move(coords);
    j["zero_coordinates"] = std::move(zc);
    json cols = json::array();
    for (int c = 1; c <= n; ++c) {
      json entries = json::array();
      const auto v = flag.vector(c);
      for (int row = n; row >= 1; --row) {
        if (v[row - 1].is_zero()) continue;
        json terms = json::array();
        for (const auto& [coeff, vars] : v[row - 1].monomial_list()) terms.push_back({coeff, vars});
        entries.push_back({{"row", row}, {"value", v[row - 1].to_string()}, {"terms", std::move(terms)}});
      }
      cols.push_back({{"index", c}, {"text", column_text(v)}, {"entries", std::move(entries)}});
    }
    j["columns"] = std::move(cols);
    j["in_hessenberg"] = member ? json(*member) : json(nullptr);
    out << j.dump(2) << "\n";
  } else if (cfg.format == OutputFormat::csv) {
    out << "column;row;value\n";
    for (int c = 1; c <= n; ++c) {
      const auto v = flag.vector(c);
      for (int row = n; row >= 1; --row)
        if (!v[row - 1].is_zero()) out << c << ";" << row << ";" << v[row - 1].to_string() << "\n";
    }
  } else {
    out << text_header(cfg, r) << "w=" << w.to_string() << "\n";
    out << indent(tableau_of(w, r.lambda).to_text(), "  ");
    std::string zs;
    for (const auto& c : zeros) zs += (zs.empty() ? "" : ", ") + to_string(c) + "=0";
    out << "substituted: " << (zs.empty() ? "none" : zs) << "\n";
    for (int c = 1; c <= n; ++c) out << "v" << c << " = " << column_text(flag.vector(c)) << "\n";
    if (member) out << "in Hess(X, h): " << (*member ? "yes" : "no") << "\n";
  }
  return {(!member || *member) ? kExitOk : kExitVerificationFailed, out.str()};
}

CommandOutput cmd_count(const RunConfig& cfg, const Resolved& r) {
  const auto rep = variety_point_count(r.lambda, *r.h, r.field, cfg.budget_bits, cfg.workers);
  std::ostringstream out;
  if (cfg.format == OutputFormat::json) {
    json j = header(cfg, r);
    j["q"] = rep.q;
    j["budget_bits"] = cfg.budget_bits;
    j["total"] = rep.total;
    j["predicted"] = rep.predicted;
    j["match"] = rep.match;
    json cells = json::array();
    for (const auto& c : rep.per_cell) {
      if (!c.count && !c.predicted) continue;
      cells.push_back({{"w", c.w.word()}, {"count", c.count}, {"predicted", c.predicted},
                       {"dim", c.dim < 0 ? json(nullptr) : json(c.dim)}, {"match", c.match}});
    }
    j["cells"] = std::move(cells);
    out << j.dump(2) << "\n";
  } else if (cfg.format == OutputFormat::csv) {
    out << "w;count;predicted;dim;match\n";
    for (const auto& c : rep.per_cell)
      if (c.count || c.predicted)
        out << word_csv(c.w) << ";" << c.count << ";" << c.predicted << ";" << (c.dim < 0 ? std::string() : std::to_string(c.dim))
            << ";" << (c.match ? "true" : "false") << "\n";
  } else {
    out << text_header(cfg, r) << "q=" << rep.q << " total=" << rep.total << " predicted=" << rep.predicted
        << (rep.match ? " MATCH" : " MISMATCH") << "\n";
    for (const auto& c : rep.per_cell)
      if (!c.match) out << "  cell " << c.w.to_string() << " count=" << c.count << " predicted=" << c.predicted << "\n";
  }
  return {rep.match ? kExitOk : kExitVerificationFailed, out.str()};
}

json profile_json(const InversionProfile& p) {
  json out = json::array();
  for (const auto& [k, d] : p.entries()) out.push_back({{"i", k.first}, {"j", k.second}, {"d", d}});
  return out;
}

std::vector<std::vector<std::optional<int>>> trimmed_grid(const ColumnWindow& w) {
  std::vector<std::vector<std::optional<int>>> out;
  for (const auto& row : w.grid)
    if (std::any_of(row.begin(), row.end(), [](const auto& e) { return e.has_value(); })) out.push_back(row);
  return out;
}

CommandOutput cmd_profile(const RunConfig& cfg, const Resolved& r) {
  const Tableau& t = *r.tableau;
  const auto before = inversion_profile(t, *r.h);
  const Tableau s = standardize(t);
  const bool std_strict = is_h_strict(s, *r.h);
  std::optional<InversionProfile> after;
  if (std_strict) after = inversion_profile(s, *r.h);
  std::vector<SortStep> trace;
  if (r.trace) trace = column_sort_trace(t, r.trace->first, r.trace->second, *r.h);

  std::ostringstream out;
  if (cfg.format == OutputFormat::json) {
    json j = header(cfg, r);
    j["tableau"] = rows_json(t);
    j["profile"] = profile_json(before);
    j["standardized"] = rows_json(s);
    j["standardized_h_strict"] = std_strict;
    j["standardized_profile"] = after ? profile_json(*after) : json(nullptr);
    if (r.trace) {
      json steps = json::array();
      for (std::size_t k = 0; k < trace.size(); ++k) {
        json grid = json::array();
        for (const auto& row : trimmed_grid(trace[k].window)) {
          json jr = json::array();
          for (const auto& e : row) jr.push_back(e ? json(*e) : json(nullptr));
          grid.push_back(std::move(jr));
        }
        steps.push_back({{"step", k}, {"window", std::move(grid)}, {"pairs", trace[k].pairs}, {"h_strict", trace[k].h_strict}});
      }
      j["trace"] = {{"i", r.trace->first}, {"j", r.trace->second}, {"steps", std::move(steps)}};
    }
    out << j.dump(2) << "\n";
  } else if (cfg.format == OutputFormat::csv) {
    out << "tableau;i;j;d\n";
    for (const auto& [k, d] : before.entries()) out << "R;" << k.first << ";" << k.second << ";" << d << "\n";
    if (after)
      for (const auto& [k, d] : after->entries()) out << "std;" << k.first << ";" << k.second << ";" << d << "\n";
  } else {
    out << text_header(cfg, r) << "R:\n" << indent(t.to_text(), "  ");
    for (const auto& [k, d] : before.entries()) out << "  d(" << k.first << "," << k.second << ") = " << d << "\n";
    out << "std(R):\n" << indent(s.to_text(), "  ");
    if (after) {
      for (const auto& [k, d] : after->entries()) out << "  d(" << k.first << "," << k.second << ") = " << d << "\n";
    } else {
      out << "  not h-strict\n";
    }
    for (std::size_t k = 0; k < trace.size(); ++k)
      out << "step " << k << ": pairs=" << trace[k].pairs << (trace[k].h_strict ? "" : " (not h-strict)") << "\n"
          << indent(trace[k].window.to_text(), "  ");
  }
  return {kExitOk, out.str()};
}

CommandOutput cmd_verify(const RunConfig& cfg, const Resolved& r) {
  VerifyOptions opts;
  opts.shape = r.lambda;
  opts.h = r.h;
  opts.oracle.field = r.field;
  opts.oracle.budget_bits = cfg.budget_bits;
  opts.oracle.workers = cfg.workers;
  opts.oracle.seed = r.seed;
  const auto rep = run_verify(opts);
  const int code = rep.budget_error ? kExitBudgetExceeded : (rep.passed() ? kExitOk : kExitVerificationFailed);
  const SuiteResult* first = rep.first_failure();
  std::ostringstream out;
  if (cfg.format == OutputFormat::json) {
    json j = header(cfg, r);
    j["q"] = r.field.q;
    j["budget_bits"] = cfg.budget_bits;
    j["conjugation_seed"] = r.seed;
    j["passed"] = rep.passed();
    json suites = json::array();
    for (const auto& s : rep.suites) {
      json js = {{"name", s.name}, {"checks", s.checks}, {"passed", s.passed()}};
      if (s.skipped) js["skipped"] = *s.skipped;
      if (s.failure) js["failure"] = {{"invariant", s.failure->invariant}, {"witness", s.failure->witness}};
      suites.push_back(std::move(js));
    }
    j["suites"] = std::move(suites);
    j["first_failure"] = first ? json{{"suite", first->name}, {"invariant", first->failure->invariant},
                                      {"witness", first->failure->witness}}
                               : json(nullptr);
    j["budget_exceeded"] = rep.budget_error ? json(*rep.budget_error) : json(nullptr);
    out << j.dump(2) << "\n";
  } else if (cfg.format == OutputFormat::csv) {
    out << "suite;checks;status;invariant;witness\n";
    for (const auto& s : rep.suites)
      out << s.name << ";" << s.checks << ";" << (s.skipped ? "skipped" : s.passed() ? "pass" : "fail") << ";"
          << (s.failure ? s.failure->invariant : "") << ";" << (s.failure ? s.failure->witness : "") << "\n";
    if (rep.budget_error) out << "budget;0;exceeded;" << *rep.budget_error << ";\n";
  } else {
    out << text_header(cfg, r);
    for (const auto& s : rep.suites) {
      out << (s.skipped ? "SKIP " : s.passed() ? "PASS " : "FAIL ") << s.name << " (" << s.checks << " checks)";
      if (s.skipped) out << ": " << *s.skipped;
      out << "\n";
      if (s.failure) out << "  " << s.failure->invariant << " at " << s.failure->witness << "\n";
    }
    if (rep.budget_error) out << "BUDGET EXCEEDED: " << *rep.budget_error << "\n";
    out << (code == kExitOk ? "all suites passed" : "verification did not pass") << "\n";
  }
  return {code, out.str()};
}

Resolved resolve(const RunConfig& cfg) {
  std::vector<std::string> problems;
  auto collect = [&](auto&& f) {
    try {
      f();
    } catch (const InputError& e) {
      problems.insert(problems.end(), e.problems().begin(), e.problems().end());
    } catch (const std::invalid_argument& e) {
      problems.emplace_back(e.what());
    }
  };
  Resolved r;
  std::optional<Composition> lambda = cfg.lambda;
  if (!lambda && cfg.lambda_spec) collect([&] { lambda = parse_composition(*cfg.lambda_spec); });

  if (cfg.tableau_spec) collect([&] { r.tableau = parse_tableau(*cfg.tableau_spec); });
  if (!lambda && r.tableau) lambda = r.tableau->shape();
  if (!lambda && !cfg.lambda_spec) problems.emplace_back("--lambda is required");
  if (!lambda && !cfg.h_spec.empty() && cfg.h_spec.find(':') == std::string::npos && cfg.h_spec != "springer") {
    std::vector<std::string> hp;
    const auto values = parse_int_list(cfg.h_spec, "h", hp);
    if (hp.empty()) hp = HessenbergFunction::violations(values);
    problems.insert(problems.end(), hp.begin(), hp.end());
  }
  if (lambda) {
    r.lambda = *lambda;
    const int n = lambda->size();
    if (cfg.h_spec.empty()) {
      if (cfg.command != Command::verify) r.h = HessenbergFunction::springer(n);
    } else {
      collect([&] { r.h = parse_hessenberg(cfg.h_spec, n); });
    }
    if (r.tableau && !(r.tableau->shape() == *lambda))
      problems.push_back("tableau shape " + r.tableau->shape().to_string() + " differs from lambda " + lambda->to_string());
    if (cfg.w_spec) {
      collect([&] { r.w = parse_permutation(*cfg.w_spec); });
      if (r.w && r.w->size() != n)
        problems.push_back("w has " + std::to_string(r.w->size()) + " letters but lambda has " + std::to_string(n) + " boxes");
    }
  }
  if (cfg.q) collect([&] { r.field = FieldSpec(*cfg.q); });
  if (cfg.budget_bits < 1) problems.emplace_back("--budget-bits must be at least 1");
  if (cfg.workers < 1) problems.emplace_back("--workers must be at least 1");
  if (cfg.seed) r.seed = *cfg.seed;

  if (cfg.command == Command::generic_flag && !cfg.w_spec) problems.emplace_back("generic-flag needs --w");
  if (cfg.command == Command::profile) {
    if (cfg.w_spec && cfg.tableau_spec) problems.emplace_back("profile takes --w or --tableau, not both");
    if (!cfg.w_spec && !cfg.tableau_spec) problems.emplace_back("profile needs --w or --tableau");
    if (r.w && problems.empty()) r.tableau = tableau_of(*r.w, r.lambda);
    if (cfg.trace_spec) {
      std::vector<std::string> tp;
      const auto ij = parse_int_list(*cfg.trace_spec, "trace", tp);
      if (tp.empty() && ij.size() != 2) tp.emplace_back("--trace needs two columns i,j");
      if (tp.empty()) r.trace = std::make_pair(ij[0], ij[1]);
      problems.insert(problems.end(), tp.begin(), tp.end());
    }
  }

  if (problems.empty() && r.h) {
    if (cfg.command == Command::generic_flag && !is_h_strict(tableau_of(*r.w, r.lambda), *r.h))
      problems.push_back("R(w) is not h-strict for w = " + r.w->to_string());
    if (cfg.command == Command::profile && r.tableau && !is_h_strict(*r.tableau, *r.h))
      problems.emplace_back("tableau is not h-strict");
    if (r.trace) {
      const int m = r.tableau->num_columns();
      if (r.trace->first < 1 || r.trace->second < r.trace->first || r.trace->second > m)
        problems.push_back("--trace needs 1 <= i <= j <= " + std::to_string(m));
    }
  }
  if (!problems.empty()) throw InputError(problems);
  return r;
}

std::string render_input_error(const RunConfig& cfg, const InputError& e) {
  if (cfg.format == OutputFormat::json) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["version"] = HESSPAVE_VERSION;
    j["command"] = command_name(cfg.command);
    j["error"] = "input";
    j["problems"] = e.problems();
    return j.dump(2) + "\n";
  }
  std::string out = cfg.format == OutputFormat::csv ? "error\n" : "";
  for (const auto& p : e.problems()) out += (cfg.format == OutputFormat::csv ? "" : "error: ") + p + "\n";
  return out;
}

}  // namespace

CommandOutput run_command(const RunConfig& config) {
  Resolved r;
  try {
    r = resolve(config);
  } catch (const InputError& e) {
    return {kExitInputError, render_input_error(config, e)};
  }
  try {
    switch (config.command) {
      case Command::cells: return cmd_cells(config, r);
      case Command::poincare: return cmd_poincare(config, r);
      case Command::r0: return cmd_r0(config, r);
      case Command::generic_flag: return cmd_generic_flag(config, r);
      case Command::count: return cmd_count(config, r);
      case Command::profile: return cmd_profile(config, r);
      case Command::verify: return cmd_verify(config, r);
    }
  } catch (const BudgetExceeded& e) {
    if (config.format == OutputFormat::json) {
      json j = header(config, r);
      j["error"] = "budget";
      j["message"] = e.what();
      j["bits"] = e.bits();
      j["budget_bits"] = e.budget();
      return {kExitBudgetExceeded, j.dump(2) + "\n"};
    }
    return {kExitBudgetExceeded, std::string("budget exceeded: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {kExitInputError, render_input_error(config, InputError({e.what()}))};
  }
  return {kExitInputError, "unknown command\n"};
}

}  // namespace hesspave
