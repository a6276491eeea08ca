#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "json.hpp"
#include "pencil/census.hpp"
#include "pencil/error.hpp"
#include "pencil/gf.hpp"
#include "pencil/oracle.hpp"
#include "pencil/poly.hpp"
#include "pencil/report.hpp"
#include "pencil/smith.hpp"

namespace pencil::cli {

namespace {

using nlohmann::json;

enum class Format { Json, Csv, Table };

struct Options {
  std::string field = "2";
  std::optional<unsigned> n, k, d, r;
  std::string formula;
  std::string mode = "pencil";
  std::string tuple;
  std::string poly;
  std::string matrix;
  std::string subspace;
  std::string expected_path;
  std::string observed_path;
  std::string format = "table";
  bool pencil = false;
  unsigned workers = 1;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t chunk = 1024;
  unsigned long long seed = 1;
  unsigned samples = 100;
  unsigned max_degree = 8;
  long long y_range = 1000000;
};

// Input problems detected after CLI11 parsing; reported like parse errors.
struct UsageError {
  std::string message;
};

[[noreturn]] void usage(const std::string& message) { throw UsageError{message}; }

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  return Format::Table;
}

unsigned need(const std::optional<unsigned>& value, const char* flag) {
  if (!value) usage(std::string("missing --") + flag);
  return *value;
}

void print_report(const CensusReport& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json: out << to_json(report); break;
    case Format::Csv: out << to_csv(report); break;
    case Format::Table: out << to_table(report); break;
  }
}

void print_value(const std::string& formula, const Field& field, const json& params, const BigCount& value,
                 Format format, std::ostream& out) {
  switch (format) {
    case Format::Json: {
      json doc = {{"formula", formula}, {"field", field.spec()}, {"params", params}, {"value", value.get_str()}};
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv: out << "value\n" << value.get_str() << '\n'; break;
    case Format::Table: out << value.get_str() << '\n'; break;
  }
}

Matrix subspace_or_first(const Field& field, const Options& opt, unsigned k) {
  if (!opt.subspace.empty()) return matrix_from_json(field, opt.subspace, k);
  // Default to span(e_1, ..., e_d).
  const unsigned d = need(opt.d, "d or --subspace");
  if (d > k) usage("--d must not exceed --k");
  return Matrix::identity(k).block(0, d, 0, k);
}

int do_count(const Options& opt, std::ostream& out) {
  const Field field = Field::parse(opt.field);
  const Format format = parse_format(opt.format);
  const unsigned q = field.q();
  const std::string& f = opt.formula;

  if (f == "class") {
    const unsigned n = need(opt.n, "n");
    if (opt.tuple.empty()) {
      print_report(class_census(field, n), format, out);
      return kExitOk;
    }
    const auto tuple = parse_tuple(field, opt.tuple);
    if (tuple.size() != n) usage("--tuple must have n entries");
    print_value(f, field, {{"n", n}, {"tuple", opt.tuple}}, count_conjugacy_class(field, tuple), format, out);
  } else if (f == "snf") {
    const unsigned n = need(opt.n, "n"), k = need(opt.k, "k");
    if (opt.tuple.empty()) {
      print_report(pencil_census(field, n, k), format, out);
      return kExitOk;
    }
    const auto tuple = parse_tuple(field, opt.tuple);
    print_value(f, field, {{"n", n}, {"k", k}, {"tuple", opt.tuple}},
                count_invariant_factors(field, n, k, tuple), format, out);
  } else if (f == "subspace") {
    const unsigned n = need(opt.n, "n"), k = need(opt.k, "k");
    if (opt.tuple.empty()) {
      print_report(subspace_census(field, n, k, subspace_or_first(field, opt, k)), format, out);
      return kExitOk;
    }
    const auto tuple = parse_tuple(field, opt.tuple);
    const unsigned d = opt.d ? *opt.d : static_cast<unsigned>(tuple.total_degree());
    print_value(f, field, {{"n", n}, {"k", k}, {"d", d}, {"tuple", opt.tuple}},
                count_with_subspace(field, n, k, d, tuple), format, out);
  } else if (f == "givenU") {
    const unsigned n = need(opt.n, "n"), k = need(opt.k, "k");
    if (!opt.d) {
      print_report(given_subspace_census(field, n, k), format, out);
      return kExitOk;
    }
    print_value(f, field, {{"n", n}, {"k", k}, {"d", *opt.d}}, count_given_subspace(n, k, *opt.d, q), format, out);
  } else if (f == "reach") {
    const unsigned n = need(opt.n, "n"), k = need(opt.k, "k");
    if (!opt.r) {
      print_report(reachability_census(field, k, n), format, out);
      return kExitOk;
    }
    print_value(f, field, {{"n", n}, {"k", k}, {"r", *opt.r}}, count_reachability(k, n, *opt.r, q), format, out);
  } else if (f == "gr") {
    if (opt.poly.empty()) {
      const unsigned n = need(opt.n, "n");
      print_report(fiber_census(field, n, n), format, out);
      return kExitOk;
    }
    const Poly p = parse_poly(field, opt.poly);
    print_value(f, field, {{"poly", to_string(field, p)}}, count_char_poly_square(field, p), format, out);
  } else if (f == "grext") {
    const unsigned n = need(opt.n, "n"), k = need(opt.k, "k");
    if (opt.poly.empty()) {
      print_report(fiber_census(field, n, k), format, out);
      return kExitOk;
    }
    const Poly p = parse_poly(field, opt.poly);
    print_value(f, field, {{"n", n}, {"k", k}, {"poly", to_string(field, p)}},
                count_char_poly_rect(field, p, n, k), format, out);
  } else if (f == "nilext") {
    const unsigned n = need(opt.n, "n"), k = need(opt.k, "k");
    print_value(f, field, {{"n", n}, {"k", k}}, count_nilpotent_extendable(k, n, q), format, out);
  } else {
    usage("unknown formula '" + f + "'");
  }
  return kExitOk;
}

EnumConfig make_config(const Options& opt) {
  EnumConfig cfg;
  cfg.field = Field::parse(opt.field);
  cfg.n = need(opt.n, "n");
  cfg.k = need(opt.k, "k");
  cfg.mode = parse_census_mode(opt.mode);
  cfg.workers = opt.workers;
  cfg.budget = opt.budget;
  cfg.chunk_size = opt.chunk;
  if (cfg.mode == CensusMode::Subspace) cfg.subspace = subspace_or_first(cfg.field, opt, cfg.k);
  return cfg;
}

int do_enumerate(const Options& opt, std::ostream& out) {
  const EnumConfig cfg = make_config(opt);
  print_report(enumerate(cfg), parse_format(opt.format), out);
  return kExitOk;
}

CensusReport read_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) usage("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return report_from_json(buffer.str());
}

int print_diff(const DiffReport& diff, Format format, std::ostream& out) {
  if (format == Format::Json) {
    json entries = json::array();
    for (const auto& e : diff.entries) {
      entries.push_back({{"key", e.key},
                         {"expected", e.expected.get_str()},
                         {"observed", e.observed.get_str()},
                         {"match", e.match}});
    }
    out << json{{"verdict", diff.verdict}, {"mismatches", diff.mismatches()}, {"entries", entries}}.dump(2)
        << '\n';
  } else {
    for (const auto& e : diff.entries) {
      if (!e.match) {
        out << "MISMATCH " << e.key << ": expected " << e.expected.get_str() << ", observed "
            << e.observed.get_str() << '\n';
      }
    }
    if (diff.verdict) {
      out << "all " << diff.entries.size() << " keys match\n";
    } else {
      out << diff.mismatches() << " of " << diff.entries.size() << " keys differ\n";
    }
  }
  return diff.verdict ? kExitOk : kExitMismatch;
}

int do_verify(const Options& opt, std::ostream& out) {
  const Format format = parse_format(opt.format);
  if (!opt.expected_path.empty() || !opt.observed_path.empty()) {
    if (opt.expected_path.empty() || opt.observed_path.empty()) usage("--expected and --observed go together");
    return print_diff(verify(read_report(opt.expected_path), read_report(opt.observed_path)), format, out);
  }
  const EnumConfig cfg = make_config(opt);
  const CensusReport expected = closed_form(cfg);
  const CensusReport observed = enumerate(cfg);
  int status = print_diff(verify(expected, observed), format, out);
  if (cfg.mode == CensusMode::Nilext) {
    const auto tally = enumerate_nilpotent_extendable(cfg);
    if (tally.disagreements != 0) {
      out << tally.disagreements << " matrices where completion search and criterion disagree\n";
      status = kExitMismatch;
    }
  }
  return status;
}

std::string json_entry_text(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  usage("matrix entries must be integers or polynomial strings");
}

int do_snf(const Options& opt, std::ostream& out) {
  const Field field = Field::parse(opt.field);
  if (opt.matrix.empty()) usage("missing --matrix");
  SnfResult result;
  if (opt.pencil) {
    const Matrix b = matrix_from_json(field, opt.matrix);
    if (opt.n && *opt.n != b.rows()) usage("--n does not match the matrix");
    if (opt.k && *opt.k != b.cols()) usage("--k does not match the matrix");
    const auto factors = pencil_invariant_factors(field, b);
    result.diagonal = factors.polys();
    result.rank = factors.size();
  } else {
    json doc;
    try {
      doc = json::parse(opt.matrix);
    } catch (const json::exception& e) {
      usage(std::string("invalid --matrix: ") + e.what());
    }
    if (!doc.is_array() || doc.empty() || !doc.front().is_array()) usage("--matrix must be an array of rows");
    const std::size_t rows = doc.size(), cols = doc.front().size();
    std::vector<Poly> entries;
    for (const auto& row : doc) {
      if (!row.is_array() || row.size() != cols) usage("--matrix rows must have equal length");
      for (const auto& v : row) entries.push_back(parse_poly(field, json_entry_text(v)));
    }
    result = snf(field, PolyMatrix(rows, cols, std::move(entries)));
  }

  if (parse_format(opt.format) == Format::Json) {
    json diagonal = json::array();
    for (const auto& p : result.diagonal) diagonal.push_back(to_string(field, p));
    out << json{{"field", field.spec()}, {"invariant_factors", diagonal}, {"rank", result.rank}}.dump(2) << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < result.diagonal.size(); ++i) {
    if (i > 0) out << " | ";
    out << to_string(field, result.diagonal[i]);
  }
  out << '\n';
  return kExitOk;
}

int do_factor(const Options& opt, std::ostream& out) {
  const Field field = Field::parse(opt.field);
  if (opt.poly.empty()) usage("missing --poly");
  const Poly g = parse_poly(field, opt.poly);
  const auto fac = factorize(field, g);
  if (parse_format(opt.format) == Format::Json) {
    json factors = json::array();
    for (const auto& [f, e] : fac.factors) factors.push_back({{"factor", to_string(field, f)}, {"multiplicity", e}});
    out << json{{"field", field.spec()}, {"poly", to_string(field, g)}, {"unit", fac.unit.value}, {"factors", factors}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << to_string(field, g) << " =";
  bool first = true;
  if (fac.unit != field.one() || fac.factors.empty()) {
    out << ' ' << to_string(field, Poly::constant(fac.unit));
    first = false;
  }
  for (const auto& [f, e] : fac.factors) {
    out << (first ? " " : " * ") << '(' << to_string(field, f) << ')';
    if (e > 1) out << '^' << e;
    first = false;
  }
  out << '\n';
  return kExitOk;
}

int do_identity(const Options& opt, std::ostream& out) {
  // Here --q is any integer >= 2, not necessarily a field order.
  unsigned long long q = 0;
  try {
    q = std::stoull(opt.field);
  } catch (const std::exception&) {
    usage("--q must be an integer for identity");
  }
  if (q < 2 || q > 1000000) usage("--q must lie in [2, 10^6] for identity");
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<long long> pick(-opt.y_range, opt.y_range);
  std::size_t checked = 0, failed = 0;
  for (unsigned d = 0; d <= opt.max_degree; ++d) {
    for (unsigned s = 0; s < opt.samples; ++s) {
      const mpz_class y(std::to_string(pick(rng)));
      ++checked;
      if (!check_q_identity(d, static_cast<unsigned>(q), y)) {
        ++failed;
        out << "FAIL d=" << d << " y=" << y.get_str() << '\n';
      }
    }
  }
  out << (failed == 0 ? "identity holds" : "identity FAILED") << " on " << checked - failed << "/" << checked
      << " samples (q=" << q << ", d<=" << opt.max_degree << ")\n";
  return failed == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Invariant factors of matrix pencils over finite fields: closed-form counts and brute-force checks",
               "pencil"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"json", "csv", "table"};
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--q,--field", opt.field, "Field spec: p, p^m or a prime power q")->default_val("2");
  };
  auto add_dims = [&](CLI::App* sub) {
    sub->add_option("--n", opt.n, "Dimension of V (rows of B)");
    sub->add_option("--k", opt.k, "Dimension of W (columns of B)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember(formats));
  };
  auto add_run_flags = [&](CLI::App* sub) {
    sub->add_option("--mode", opt.mode, "Census kind")
        ->check(CLI::IsMember({"pencil", "pair", "fiber", "subspace", "nilext"}));
    sub->add_option("--subspace", opt.subspace, "Fixed subspace U as JSON rows of a reduced echelon basis");
    sub->add_option("--d", opt.d, "Dimension of U when --subspace is omitted (uses span(e_1..e_d))");
    sub->add_option("--workers", opt.workers, "Worker threads (0 = all hardware threads)")->envname("PENCIL_WORKERS");
    sub->add_option("--budget", opt.budget, "Maximum number of matrices to evaluate")->envname("PENCIL_BUDGET");
    sub->add_option("--chunk", opt.chunk, "Matrices per work unit")->check(CLI::PositiveNumber);
  };

  auto* count = app.add_subcommand("count", "Evaluate a closed-form counting formula");
  add_field(count);
  add_dims(count);
  add_format(count);
  count->add_option("--formula", opt.formula, "Which formula")
      ->required()
      ->check(CLI::IsMember({"class", "snf", "subspace", "givenU", "reach", "gr", "grext", "nilext"}));
  count->add_option("--d", opt.d, "Dimension of the invariant subspace U");
  count->add_option("--r", opt.r, "Dimension of the reachability subspace");
  count->add_option("--tuple", opt.tuple, "Invariant factors 'p_1|p_2|...|p_k'");
  count->add_option("--poly", opt.poly, "Monic polynomial f");
  count->add_option("--subspace", opt.subspace, "Fixed subspace U as JSON rows");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Tally a census by exhaustive enumeration");
  add_field(enumerate_cmd);
  add_dims(enumerate_cmd);
  add_format(enumerate_cmd);
  add_run_flags(enumerate_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Compare a closed-form census with enumeration");
  add_field(verify_cmd);
  add_dims(verify_cmd);
  add_format(verify_cmd);
  add_run_flags(verify_cmd);
  verify_cmd->add_option("--expected", opt.expected_path, "Expected report (JSON file)");
  verify_cmd->add_option("--observed", opt.observed_path, "Observed report (JSON file)");

  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form diagonal of a matrix or pencil");
  add_field(snf_cmd);
  add_dims(snf_cmd);
  add_format(snf_cmd);
  snf_cmd->add_option("--matrix", opt.matrix, "JSON rows: integers with --pencil, polynomial strings otherwise")
      ->required();
  snf_cmd->add_flag("--pencil", opt.pencil, "Treat --matrix as B and reduce x*I - B");

  auto* factor_cmd = app.add_subcommand("factor", "Factor a polynomial into monic irreducibles");
  add_field(factor_cmd);
  add_format(factor_cmd);
  factor_cmd->add_option("--poly", opt.poly, "Polynomial, e.g. x^4+x^2")->required();

  auto* identity_cmd = app.add_subcommand("identity", "Check the q-binomial power identity on random integers");
  identity_cmd->add_option("--q", opt.field, "Integer q >= 2")->default_val("2");
  identity_cmd->add_option("--max-degree", opt.max_degree, "Largest d to test");
  identity_cmd->add_option("--samples", opt.samples, "Random y per degree");
  identity_cmd->add_option("--range", opt.y_range, "y is drawn from [-range, range]");
  identity_cmd->add_option("--seed", opt.seed, "RNG seed");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run randomized invariant suites");
  selftest_cmd->add_option("--seed", opt.seed, "RNG seed");
  selftest_cmd->add_option("--samples", opt.samples, "Random cases per suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  CLI::App* active = app.get_subcommands().front();
  try {
    if (active == count) return do_count(opt, out);
    if (active == enumerate_cmd) return do_enumerate(opt, out);
    if (active == verify_cmd) return do_verify(opt, out);
    if (active == snf_cmd) return do_snf(opt, out);
    if (active == factor_cmd) return do_factor(opt, out);
    if (active == identity_cmd) return do_identity(opt, out);
    if (active == selftest_cmd) return run_selftest({opt.seed, opt.samples}, out) == 0 ? kExitOk : kExitMismatch;
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n" << active->help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pencil::cli
