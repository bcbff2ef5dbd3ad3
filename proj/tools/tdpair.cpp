// tdpair: command-line front end to the exact construction and checks.
//
// Exit status: 0 when every requested check passes, 1 on a failed check or
// invalid parameters, 2 on a malformed command line or parameter file.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tdpair/cob.hpp"
#include "tdpair/errors.hpp"
#include "tdpair/io.hpp"
#include "tdpair/overlap.hpp"
#include "tdpair/tdcore.hpp"
#include "tdpair/verify.hpp"

using namespace tdpair;

namespace {

class ConfigError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string params_path;
  std::string shape;
  std::optional<std::uint64_t> seed;
  int bound = 10;
  std::string format = "text";
  bool deterministic = false;

  // build
  std::string op = "A";
  std::string basis = "split";
  // overlap
  std::string method = "direct_sum";
  std::string kind = "racah";
  std::string function = "T";
  // verify
  std::string checks;
  std::string beta;
  int word_length = 12;
};

void add_source_options(CLI::App* sub, RunConfig& cfg, const std::vector<std::string>& formats) {
  sub->add_option("--params", cfg.params_path, "parameter JSON file");
  sub->add_option("--shape", cfg.shape, "shape l_1,...,l_N for generated parameters");
  sub->add_option("--seed", cfg.seed, "seed for generated parameters");
  sub->add_option("--bound", cfg.bound, "numerator/denominator bound for generated parameters")
      ->check(CLI::Range(4, 1 << 20));
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
  sub->add_flag("--deterministic", cfg.deterministic, "omit timings from reports");
}

TDParameters load_parameters(const RunConfig& cfg) {
  const bool from_file = !cfg.params_path.empty();
  const bool generated = !cfg.shape.empty() || cfg.seed.has_value();
  if (from_file == generated) throw ConfigError("give either --params or both --shape and --seed");
  if (from_file) {
    std::ifstream in(cfg.params_path);
    if (!in) throw ConfigError("cannot read parameter file '" + cfg.params_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return TDParameters::from_json(buf.str());
  }
  if (cfg.shape.empty() || !cfg.seed) throw ConfigError("--shape and --seed must be given together");
  return random_valid_parameters(Shape::parse(cfg.shape), *cfg.seed, cfg.bound);
}

std::string render_matrix(const ExactMatrix& m, const std::string& name, const std::string& format) {
  if (format == "csv") return matrix_to_csv(m, "row\\col (graded-lex)");
  if (format == "json") return matrix_to_json(m, name);
  return name + "\n" + matrix_to_text(m);
}

int emit_report(const VerificationReport& report, const RunConfig& cfg) {
  if (cfg.format == "csv") throw ConfigError("reports support --format text or json");
  std::string text = cfg.format == "json" ? report.to_json(!cfg.deterministic) : report.to_text(!cfg.deterministic);
  if (!text.empty() && text.back() != '\n') text += '\n';
  std::cout << text;
  return report.passed() ? 0 : 1;
}

int run_validate(const RunConfig& cfg) { return emit_report(validate_parameters(load_parameters(cfg)), cfg); }

int run_build(const RunConfig& cfg) {
  const TDParameters p = load_parameters(cfg);
  ExactMatrix m(p.basis());
  const bool cob = cfg.op == "C" || cfg.op == "Cbar" || cfg.op == "D" || cfg.op == "Dbar";
  if (cob) {
    if (cfg.basis != "split") throw ConfigError("change-of-basis matrices are emitted in the split basis only");
    m = cob_matrix(p, parse_cob_kind(cfg.op));
  } else {
    m = build_operator(p, parse_operator(cfg.op));
    if (cfg.basis == "eigA") {
      m = cob_matrix(p, CobKind::Cbar) * m * cob_matrix(p, CobKind::C);
    } else if (cfg.basis == "eigAstar") {
      m = cob_matrix(p, CobKind::Dbar) * m * cob_matrix(p, CobKind::D);
    }
  }
  std::cout << render_matrix(m, cfg.op + " " + cfg.basis, cfg.format);
  return 0;
}

struct NamedTable {
  std::string name;
  ExactMatrix table;
};

std::vector<NamedTable> overlap_tables(const TDParameters& p, const RunConfig& cfg, bool method_given) {
  std::vector<NamedTable> out;
  if (cfg.kind != "racah") {
    if (method_given) throw ConfigError("--method applies to --kind racah only");
    if (cfg.function != "T") throw ConfigError("--kind " + cfg.kind + " has a T table only");
    const LimitKind kind = parse_limit_kind(cfg.kind);
    ExactMatrix m(p.basis());
    const auto& basis = *p.basis();
    for (std::size_t r = 0; r < basis.size(); ++r) {
      for (std::size_t c = 0; c < basis.size(); ++c) {
        m.set(r, c, overlap_limit_kind(p, kind, basis[r], basis[c]));
      }
    }
    out.push_back({"T " + cfg.kind, m});
    return out;
  }
  const bool all = cfg.method == "all";
  if (cfg.function == "T" || cfg.function == "both") {
    if (all) {
      for (TMethod m : {TMethod::direct_sum, TMethod::matrix_product, TMethod::shift_operator}) {
        out.push_back({"T " + to_string(m), overlap_T_table(p, m)});
      }
    } else {
      out.push_back({"T " + cfg.method, overlap_T_table(p, parse_t_method(cfg.method))});
    }
  }
  if (cfg.function == "U" || cfg.function == "both") {
    if (all) {
      for (UMethod m : {UMethod::direct_sum, UMethod::shift_operator, UMethod::linear_solve}) {
        out.push_back({"U " + to_string(m), overlap_U_table(p, m)});
      }
    } else {
      out.push_back({"U " + cfg.method, overlap_U_table(p, parse_u_method(cfg.method))});
    }
  }
  return out;
}

int run_overlap(const RunConfig& cfg, bool method_given) {
  const TDParameters p = load_parameters(cfg);
  const std::vector<NamedTable> tables = overlap_tables(p, cfg, method_given);

  int status = 0;
  for (std::size_t k = 1; k < tables.size(); ++k) {
    const NamedTable& prev = tables[k - 1];
    if (prev.name[0] != tables[k].name[0]) continue;
    if (auto d = prev.table.first_difference(tables[k].table)) {
      std::cerr << "tdpair: " << prev.name << " and " << tables[k].name << " differ at (" << d->row << ","
                << d->col << "): " << d->lhs.to_string() << " vs " << d->rhs.to_string() << "\n";
      status = 1;
    }
  }

  if (cfg.format == "json") {
    nlohmann::json doc;
    doc["kind"] = cfg.kind;
    doc["params"] = nlohmann::json::parse(p.to_json());
    doc["tables"] = nlohmann::json::array();
    for (const auto& t : tables) doc["tables"].push_back(nlohmann::json::parse(matrix_to_json(t.table, t.name)));
    std::cout << doc.dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < tables.size(); ++k) {
      if (cfg.format == "csv") {
        std::cout << "# " << tables[k].name << " (rows i, columns x)\n" << matrix_to_csv(tables[k].table, "i\\x");
      } else {
        if (k) std::cout << "\n";
        std::cout << render_matrix(tables[k].table, tables[k].name, "text");
      }
    }
  }
  return status;
}

int run_verify(const RunConfig& cfg) {
  const TDParameters p = load_parameters(cfg);
  std::vector<Check> checks = default_checks();
  if (cfg.checks == "all") {
    checks = all_checks();
  } else if (!cfg.checks.empty()) {
    checks.clear();
    std::stringstream ss(cfg.checks);
    for (std::string name; std::getline(ss, name, ',');) checks.push_back(parse_check(name));
  }
  SuiteOptions options;
  if (!cfg.beta.empty()) options.beta_override = FieldElement::parse(cfg.beta);
  options.irreducibility_word_length = cfg.word_length;
  return emit_report(run_suite(p, checks, options), cfg);
}

int run_limits(const RunConfig& cfg) { return emit_report(run_suite(load_parameters(cfg), {Check::limits}), cfg); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tridiagonal pairs of type II in the split basis"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* validate = app.add_subcommand("validate", "check the parameter constraints");
  add_source_options(validate, cfg, {"text", "json"});

  auto* build = app.add_subcommand("build", "emit an operator or change-of-basis matrix");
  add_source_options(build, cfg, {"text", "json", "csv"});
  build->add_option("--operator", cfg.op, "matrix to emit")
      ->check(CLI::IsMember({"A", "Astar", "S", "R", "L", "C", "Cbar", "D", "Dbar"}));
  build->add_option("--basis", cfg.basis, "representation")->check(CLI::IsMember({"split", "eigA", "eigAstar"}));

  auto* verify = app.add_subcommand("verify", "run the identity suite");
  add_source_options(verify, cfg, {"text", "json"});
  verify->add_option("--checks", cfg.checks, "comma-separated check names, or 'all'");
  verify->add_option("--beta", cfg.beta, "beta used by td_relations (default 2)");
  verify->add_option("--word-length", cfg.word_length, "maximum word length for irreducibility")
      ->check(CLI::Range(1, 64));

  auto* overlap = app.add_subcommand("overlap", "emit the T and U overlap tables");
  add_source_options(overlap, cfg, {"text", "json", "csv"});
  auto* method_opt =
      overlap->add_option("--method", cfg.method, "evaluator")
          ->check(CLI::IsMember({"direct_sum", "matrix_product", "shift_operator", "linear_solve", "all"}));
  overlap->add_option("--kind", cfg.kind, "family")->check(CLI::IsMember({"racah", "hahn", "krawtchouk"}));
  overlap->add_option("--function", cfg.function, "table")->check(CLI::IsMember({"T", "U", "both"}));

  auto* limits = app.add_subcommand("limits", "check the Hahn and Krawtchouk limits over Q(t)");
  add_source_options(limits, cfg, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return run_validate(cfg);
    if (*build) return run_build(cfg);
    if (*verify) return run_verify(cfg);
    if (*overlap) return run_overlap(cfg, method_opt->count() > 0);
    if (*limits) return run_limits(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "tdpair: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "tdpair: " << e.what() << "\n";
    return 2;
  } catch (const InvalidShape& e) {
    std::cerr << "tdpair: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "tdpair: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
