#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ordcover/ordcover.hpp"

namespace ordcover::cli {

namespace {

using Json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  return OutputFormat::Table;
}

std::string join(std::span<const std::uint32_t> values, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::uint32_t parse_label(const std::string& token) {
  const std::string t = trim(token);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw Error(ErrorCode::InvalidDesign, "bad point label '" + token + "'");
  }
  const unsigned long long value = std::stoull(t);
  if (value == 0 || value > 0xFFFFFFFFULL) throw Error(ErrorCode::InvalidDesign, "bad point label '" + t + "'");
  return static_cast<std::uint32_t>(value);
}

std::string modulus_text(const FieldSpec& field) {
  const auto& mod = field.modulus();
  if (mod.empty()) return "none";
  std::string out;
  for (std::size_t i = mod.size(); i-- > 0;) {
    if (mod[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (mod[i] != 1 || i == 0) out += std::to_string(mod[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::vector<std::string> read_labels(const std::string& path, std::uint32_t n) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidRange, "cannot open labels file " + path);
  std::vector<std::string> labels;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (line.find_first_of(",\"") != std::string::npos) {
      throw Error(ErrorCode::InvalidRange, "label '" + line + "' contains a comma or quote");
    }
    labels.push_back(line);
  }
  if (labels.size() != n) {
    throw Error(ErrorCode::InvalidRange, "labels file has " + std::to_string(labels.size()) +
                                             " labels, need " + std::to_string(n));
  }
  return labels;
}

DesignFile read_design_path(const std::string& path) {
  if (path == "-") return parse_design(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidDesign, "cannot open design file " + path);
  return parse_design(in);
}

// --- field -----------------------------------------------------------------

void print_field(const FieldSpec& field, bool table, std::ostream& out) {
  const std::uint32_t q = field.order();
  if (!table) {
    out << "order=" << q << "\n"
        << "characteristic=" << field.characteristic() << "\n"
        << "degree=" << field.degree() << "\n"
        << "modulus=" << modulus_text(field) << "\n";
    return;
  }
  const auto print_table = [&](char op, auto&& fn) {
    out << op;
    for (std::uint32_t j = 0; j < q; ++j) out << ',' << j;
    out << '\n';
    for (std::uint32_t i = 0; i < q; ++i) {
      out << i;
      for (std::uint32_t j = 0; j < q; ++j) out << ',' << fn(i, j);
      out << '\n';
    }
  };
  print_table('+', [&](std::uint32_t a, std::uint32_t b) { return field.add_index(a, b); });
  out << '\n';
  print_table('*', [&](std::uint32_t a, std::uint32_t b) { return field.mul_index(a, b); });
}

// --- mols ------------------------------------------------------------------

int print_mols(std::uint32_t q, bool verify, std::ostream& out) {
  const auto squares = mols_complete(q);
  for (std::size_t s = 0; s < squares.size(); ++s) {
    if (s) out << '\n';
    for (std::uint32_t r = 0; r < q; ++r) out << join(squares[s].row(r)) << '\n';
  }
  if (!verify) return kExitOk;

  bool ok = true;
  out << '\n';
  for (std::size_t s = 0; s < squares.size(); ++s) {
    const bool latin = is_latin(squares[s]);
    ok = ok && latin;
    out << "latin," << s + 1 << ',' << (latin ? "pass" : "fail") << '\n';
  }
  for (std::size_t a = 0; a < squares.size(); ++a) {
    for (std::size_t b = a + 1; b < squares.size(); ++b) {
      const bool orth = are_orthogonal(squares[a], squares[b]);
      ok = ok && orth;
      out << "orthogonal," << a + 1 << ',' << b + 1 << ',' << (orth ? "pass" : "fail") << '\n';
    }
  }
  const bool disjoint = check_disjoint_lines(juxtapose(squares));
  ok = ok && disjoint;
  out << "disjoint_lines," << (disjoint ? "pass" : "fail") << '\n';
  out << "result," << (ok ? "pass" : "fail") << '\n';
  return ok ? kExitOk : kExitValidationFailed;
}

// --- bibd ------------------------------------------------------------------

void print_blocks(const Design& design, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    Json blocks = Json::array();
    for (const auto& b : design.blocks) blocks.push_back(b);
    out << blocks.dump() << '\n';
    return;
  }
  for (const auto& b : design.blocks) out << join(b) << '\n';
}

void print_bibd_report(const BibdReport& report, std::ostream& out) {
  out << "v=" << report.v << " b=" << report.b << " t=" << report.t << " lambda=" << report.lambda << '\n';
  if (report.expected) {
    out << "expected_b=" << report.expected->b << " expected_r=" << report.expected->r << '\n';
  } else {
    out << "expected=none\n";
  }
  out << "block_sizes=" << (report.block_sizes_ok ? "ok" : "bad") << '\n';
  if (report.uniform_replication) {
    out << "replication=" << *report.uniform_replication << '\n';
  } else if (!report.replication.empty()) {
    const auto [lo, hi] = std::minmax_element(report.replication.begin(), report.replication.end());
    out << "replication=" << *lo << ".." << *hi << '\n';
  }
  out << "pairs_checked=" << report.pairs_checked << " pairs_off_lambda=" << report.pairs_off_lambda << '\n';
  if (const Violation* v = report.first_counterexample()) {
    out << "violations=" << report.violations.size() << '\n';
    out << "first_counterexample=" << v->describe() << '\n';
  }
  out << "result=" << (report.passed ? "pass" : "fail") << '\n';
}

// --- assign ----------------------------------------------------------------

void print_assignment(const Assignment& a, OutputFormat format,
                      const std::vector<std::string>& labels, std::ostream& out) {
  const std::uint32_t n = a.instance.n;
  const auto label = [&](std::uint32_t p) {
    return labels.empty() ? "p" + std::to_string(p) : labels[p - 1];
  };

  if (format == OutputFormat::Json) {
    Json doc;
    doc["n"] = a.instance.n;
    doc["k"] = a.instance.k;
    doc["referees"] = Json::array();
    for (const auto& r : a.referees) doc["referees"].push_back(r);
    out << doc.dump() << '\n';
    return;
  }

  if (format == OutputFormat::Csv) {
    out << "referee,proposal\n";
    for (std::size_t j = 0; j < a.referees.size(); ++j) {
      for (std::uint32_t p : a.referees[j]) {
        out << j + 1 << ',' << (labels.empty() ? std::to_string(p) : label(p)) << '\n';
      }
    }
    return;
  }

  // One row per referee, one column per proposal, blank where not assigned.
  std::size_t cell = 0;
  for (std::uint32_t p = 1; p <= n; ++p) cell = std::max(cell, label(p).size());
  const std::size_t head = ("r" + std::to_string(a.referees.size())).size();
  for (std::size_t j = 0; j < a.referees.size(); ++j) {
    std::string line = "r" + std::to_string(j + 1);
    line.resize(head, ' ');
    const Block& assigned = a.referees[j];
    for (std::uint32_t p = 1; p <= n; ++p) {
      line += ' ';
      std::string text =
          std::binary_search(assigned.begin(), assigned.end(), p) ? label(p) : std::string();
      text.resize(cell, ' ');
      line += text;
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << '\n';
  }
}

// --- bounds ----------------------------------------------------------------

std::string decimal(const Rational& r) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << r.to_double();
  return s.str();
}

constexpr const char* kBoundsHeader = "n,k,lower,upper_new,upper_prior,ratio_new,ratio_prior,recommended";

void print_bounds_csv_row(const BoundsReport& r, std::ostream& out) {
  out << r.n << ',' << r.k << ',' << r.lower << ',' << r.upper_new << ',' << r.upper_prior << ','
      << r.ratio_new.str() << ',' << r.ratio_prior.str() << ',' << to_string(r.recommended) << '\n';
}

void print_bounds(const BoundsReport& r, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Csv:
      out << kBoundsHeader << '\n';
      print_bounds_csv_row(r, out);
      return;
    case OutputFormat::Json: {
      Json doc;
      doc["n"] = r.n;
      doc["k"] = r.k;
      doc["lower"] = r.lower;
      doc["upper_new"] = r.upper_new;
      doc["upper_prior"] = r.upper_prior;
      doc["ratio_new"] = {{"num", r.ratio_new.num()}, {"den", r.ratio_new.den()},
                          {"decimal", decimal(r.ratio_new)}};
      doc["ratio_prior"] = {{"num", r.ratio_prior.num()}, {"den", r.ratio_prior.den()},
                            {"decimal", decimal(r.ratio_prior)}};
      doc["recommended"] = to_string(r.recommended);
      doc["bibd_applicable"] = r.bibd_applicable;
      out << doc.dump(2) << '\n';
      return;
    }
    case OutputFormat::Table:
      out << "n=" << r.n << '\n'
          << "k=" << r.k << '\n'
          << "lower=" << r.lower << '\n'
          << "upper_new=" << r.upper_new << '\n'
          << "upper_prior=" << r.upper_prior << '\n'
          << "ratio_new=" << r.ratio_new.str() << " (" << decimal(r.ratio_new) << ")\n"
          << "ratio_prior=" << r.ratio_prior.str() << " (" << decimal(r.ratio_prior) << ")\n"
          << "recommended=" << to_string(r.recommended) << '\n'
          << "bibd_applicable=" << (r.bibd_applicable ? "true" : "false") << '\n';
      return;
  }
}

// --- oracle ----------------------------------------------------------------

int print_oracle(const oracle::SearchOutcome& res, std::uint32_t n, std::uint32_t k,
                 OutputFormat format, std::ostream& out) {
  const oracle::Cover* shown = res.minimum ? &*res.minimum : (res.best_found ? &*res.best_found : nullptr);
  if (format == OutputFormat::Json) {
    Json doc;
    doc["n"] = n;
    doc["k"] = k;
    doc["minimum"] = res.minimum ? Json(res.minimum->size()) : Json(nullptr);
    doc["proven_lower"] = res.proven_lower;
    doc["limit"] = res.fired ? Json(std::string(to_string(*res.fired))) : Json(nullptr);
    doc["nodes"] = res.nodes;
    doc["blocks"] = Json::array();
    if (shown) {
      for (const auto& b : shown->blocks) doc["blocks"].push_back(b);
    }
    out << doc.dump() << '\n';
  } else {
    out << "n=" << n << " k=" << k << '\n';
    if (res.minimum) {
      out << "minimum=" << res.minimum->size() << '\n';
    } else {
      out << "minimum=unknown\n"
          << "limit=" << to_string(*res.fired) << '\n'
          << "proven_lower=" << res.proven_lower << '\n';
      if (res.best_found) out << "best_found=" << res.best_found->size() << '\n';
    }
    out << "nodes=" << res.nodes << '\n';
    if (shown) {
      for (const auto& b : shown->blocks) out << join(b) << '\n';
    }
  }
  return res.minimum ? kExitOk : kExitValidationFailed;
}

}  // namespace

DesignFile parse_design(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  DesignFile file;

  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '[') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::InvalidDesign, std::string("bad JSON: ") + e.what());
    }
    if (!doc.is_array()) throw Error(ErrorCode::InvalidDesign, "expected an array of blocks");
    for (const auto& block : doc) {
      if (!block.is_array()) throw Error(ErrorCode::InvalidDesign, "expected an array of blocks");
      Block b;
      for (const auto& label : block) {
        if (!label.is_number_unsigned() || label.get<std::uint64_t>() == 0 ||
            label.get<std::uint64_t>() > 0xFFFFFFFFULL) {
          throw Error(ErrorCode::InvalidDesign, "bad point label " + label.dump());
        }
        b.push_back(label.get<std::uint32_t>());
      }
      file.design.blocks.push_back(std::move(b));
    }
  } else {
    std::istringstream lines(text);
    std::string line;
    bool first = true;
    while (std::getline(lines, line)) {
      line = trim(line);
      if (line.empty() || line.front() == '#') continue;
      if (first && line.find(',') == std::string::npos) {
        std::istringstream header(line);
        std::uint64_t v = 0, t = 0, lambda = 0;
        std::string extra;
        if (!(header >> v >> t >> lambda) || (header >> extra) || v == 0 || v > 0xFFFFFFFFULL) {
          throw Error(ErrorCode::InvalidDesign, "bad header '" + line + "', expected 'v t lambda'");
        }
        file.design.v = static_cast<std::uint32_t>(v);
        file.t = t;
        file.lambda = lambda;
        first = false;
        continue;
      }
      first = false;
      Block b;
      std::istringstream fields(line);
      std::string token;
      while (std::getline(fields, token, ',')) b.push_back(parse_label(token));
      file.design.blocks.push_back(std::move(b));
    }
  }

  if (file.design.v == 0) {
    for (const auto& b : file.design.blocks) {
      for (std::uint32_t label : b) file.design.v = std::max(file.design.v, label);
    }
  }
  return file;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pair-covering referee assignments from (q^2, q, 1) block designs", "ordcover"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  const std::vector<std::string> format_names{"table", "csv", "json"};

  std::uint32_t field_order = 0;
  bool field_table = false;
  auto* field_cmd = app.add_subcommand("field", "Describe GF(q); --table prints + and * tables as CSV");
  field_cmd->add_option("--order", field_order, "Field order q")->required();
  field_cmd->add_flag("--table", field_table, "Print addition and multiplication tables");

  std::uint32_t mols_order = 0;
  bool mols_verify = false;
  auto* mols_cmd = app.add_subcommand("mols", "Print the q-1 mutually orthogonal Latin squares of order q");
  mols_cmd->add_option("--order", mols_order, "Square order q (prime power)")->required();
  mols_cmd->add_flag("--verify", mols_verify, "Append a pass/fail orthogonality report");

  std::uint32_t bibd_q = 0;
  bool bibd_validate = false;
  std::string bibd_format = "table";
  auto* bibd_cmd = app.add_subcommand("bibd", "Emit the (q^2, q, 1) design, or check a design file");
  bibd_cmd->add_option("--q", bibd_q, "Prime power q");
  bibd_cmd->add_flag("--validate", bibd_validate, "Validate the constructed design (report on stderr)");
  bibd_cmd->add_option("--format", bibd_format, "table|csv|json")->check(CLI::IsMember(format_names));

  std::string check_path;
  std::optional<std::uint64_t> check_v, check_t, check_lambda;
  auto* check_cmd = bibd_cmd->add_subcommand("check", "Validate a design file ('-' reads stdin)");
  check_cmd->add_option("file", check_path, "Design file")->required();
  check_cmd->add_option("--v", check_v, "Override point count");
  check_cmd->add_option("--t", check_t, "Override block size");
  check_cmd->add_option("--lambda", check_lambda, "Override pair multiplicity");

  std::uint64_t assign_n = 0, assign_k = 0;
  std::string assign_format = "table";
  std::string assign_labels, assign_design;
  auto* assign_cmd = app.add_subcommand("assign", "Assign n proposals to referees of capacity k");
  assign_cmd->add_option("--proposals", assign_n, "Number of proposals n")->required();
  assign_cmd->add_option("--capacity", assign_k, "Referee capacity k")->required();
  assign_cmd->add_option("--format", assign_format, "table|csv|json")->check(CLI::IsMember(format_names));
  assign_cmd->add_option("--labels", assign_labels, "File with one proposal label per line");
  assign_cmd->add_option("--design", assign_design, "Lift this (q^2, q, 1) design file instead");

  std::optional<std::uint64_t> bounds_n, bounds_k, bounds_grid;
  std::string bounds_format = "table";
  std::string bounds_prior = "k2";
  auto* bounds_cmd = app.add_subcommand("bounds", "Lower and upper referee bounds for (n, k)");
  bounds_cmd->add_option("--proposals", bounds_n, "Number of proposals n");
  bounds_cmd->add_option("--capacity", bounds_k, "Referee capacity k");
  bounds_cmd->add_option("--grid", bounds_grid, "Sweep 4 <= n <= NMAX, 2 <= k <= n as CSV");
  bounds_cmd->add_option("--format", bounds_format, "table|csv|json")->check(CLI::IsMember(format_names));
  bounds_cmd->add_option("--prior-form", bounds_prior, "Prior bound denominator: k2 (k^2) or kk1 (k(k-1))")
      ->check(CLI::IsMember({"k2", "kk1"}));

  std::uint32_t oracle_n = 0, oracle_k = 0;
  oracle::SearchBudget budget;
  double time_limit_s = 300.0;
  std::string oracle_format = "table";
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact minimum covering by branch-and-bound (tiny n)");
  oracle_cmd->add_option("--proposals", oracle_n, "Number of proposals n")->required();
  oracle_cmd->add_option("--capacity", oracle_k, "Referee capacity k")->required();
  oracle_cmd->add_option("--max-blocks", budget.max_blocks, "Largest covering size to consider");
  oracle_cmd->add_option("--time-limit", time_limit_s, "Wall-clock limit in seconds")
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--node-limit", budget.node_limit, "Search node limit")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--max-n", budget.max_points, "Refuse instances with more points");
  oracle_cmd->add_option("--format", oracle_format, "table|csv|json")->check(CLI::IsMember(format_names));

  std::vector<const char*> argv{"ordcover"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (field_cmd->parsed()) {
      print_field(FieldSpec::create(field_order), field_table, out);
      return kExitOk;
    }

    if (mols_cmd->parsed()) return print_mols(mols_order, mols_verify, out);

    if (check_cmd->parsed()) {
      DesignFile file = read_design_path(check_path);
      if (check_v) file.design.v = static_cast<std::uint32_t>(*check_v);
      const std::uint64_t t = check_t.value_or(file.t.value_or(
          file.design.blocks.empty() ? 0 : file.design.blocks.front().size()));
      const std::uint64_t lambda = check_lambda.value_or(file.lambda.value_or(1));
      const BibdReport report = validate_bibd(file.design, t, lambda);
      print_bibd_report(report, out);
      return report.passed ? kExitOk : kExitValidationFailed;
    }

    if (bibd_cmd->parsed()) {
      if (bibd_q == 0) {
        err << "error: bibd needs --q <q> or the 'check <file>' subcommand\n";
        return kExitUsage;
      }
      const Design design = construct_q2_bibd(bibd_q);
      print_blocks(design, parse_format(bibd_format), out);
      if (bibd_validate) {
        const BibdReport report = validate_bibd(design, bibd_q, 1);
        print_bibd_report(report, err);
        return report.passed ? kExitOk : kExitValidationFailed;
      }
      return kExitOk;
    }

    if (assign_cmd->parsed()) {
      const ProblemInstance instance = make_instance(assign_n, assign_k);
      std::vector<std::string> labels;
      if (!assign_labels.empty()) labels = read_labels(assign_labels, instance.n);
      const Assignment assignment = assign_design.empty()
                                        ? assign(instance)
                                        : assign(instance, read_design_path(assign_design).design);
      print_assignment(assignment, parse_format(assign_format), labels, out);
      const CoverageReport coverage = verify_cover(assignment);
      if (!coverage.passed) {
        err << "coverage failed: " << coverage.pairs_total - coverage.pairs_covered
            << " pairs uncovered, first {" << coverage.first_uncovered->first << ","
            << coverage.first_uncovered->second << "}\n";
        return kExitValidationFailed;
      }
      return kExitOk;
    }

    if (bounds_cmd->parsed()) {
      const PriorForm form = bounds_prior == "kk1" ? PriorForm::KTimesKMinus1 : PriorForm::KSquared;
      if (bounds_grid) {
        out << kBoundsHeader << '\n';
        for (std::uint64_t n = 4; n <= *bounds_grid; ++n) {
          for (std::uint64_t k = 2; k <= n; ++k) print_bounds_csv_row(compare(n, k, form), out);
        }
        return kExitOk;
      }
      if (!bounds_n || !bounds_k) {
        err << "error: bounds needs --proposals and --capacity, or --grid NMAX\n";
        return kExitUsage;
      }
      print_bounds(compare(*bounds_n, *bounds_k, form), parse_format(bounds_format), out);
      return kExitOk;
    }

    if (oracle_cmd->parsed()) {
      budget.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(time_limit_s * 1000.0));
      const auto result = oracle::min_cover_exact(oracle_n, oracle_k, budget);
      return print_oracle(result, oracle_n, oracle_k, parse_format(oracle_format), out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace ordcover::cli
