#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pathdet/determinant.hpp"
#include "pathdet/digraph.hpp"
#include "pathdet/linear_subdigraph.hpp"
#include "pathdet/path_gf.hpp"
#include "pathdet/path_matrix.hpp"
#include "pathdet/polynomial.hpp"

namespace pathdet::cli {

namespace {

using nlohmann::json;

struct Limits {
  std::size_t oracle_max_n = kDefaultOracleBound;
  std::size_t lsd_max_n = kDefaultLsdBound;
  std::size_t term_ceiling = kDefaultTermCeiling;
};

class InputError : public std::runtime_error {
 public:
  InputError(std::string kind, const std::string& detail)
      : std::runtime_error(detail), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// A failed check, carried out of the verification loops.
struct VerificationFailure {
  std::string detail;
  json extra;
};

void emit_error(std::ostream& err, const std::string& kind, const std::string& detail,
                json extra = json::object()) {
  json j = {{"error", kind}, {"detail", detail}};
  for (auto& [key, value] : extra.items()) j[key] = value;
  err << j.dump() << "\n";
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw InputError("io", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ColoredDigraph load_graph(const std::string& path) { return graph_from_json_text(read_input(path)); }

Polynomial compute_det(const PolyMatrix& m, const std::string& algorithm, const Limits& limits) {
  if (algorithm == "leibniz") return det_leibniz(m, limits.oracle_max_n);
  if (algorithm == "lsd") return det_via_linear_subdigraphs(m, limits.lsd_max_n);
  return det_division_free(m, limits.term_ceiling);
}

// Lines "  <monomial>: expected a, got b" for every differing coefficient.
std::string polynomial_diff(const Polynomial& expected, const Polynomial& actual) {
  std::string out;
  Polynomial delta = actual - expected;
  for (const Term& t : delta.terms()) {
    out += "  " + format(t.monomial) + ": expected " + expected.coefficient(t.monomial).str() +
           ", got " + actual.coefficient(t.monomial).str() + "\n";
  }
  return out;
}

struct CheckResult {
  std::string name;
  bool ok;
  std::string detail;
};

std::vector<CheckResult> verify_graph(const ColoredDigraph& g, const Limits& limits,
                                      const std::optional<Polynomial>& expected) {
  PolyMatrix m = build_colored_matrix(g);
  Polynomial leibniz = det_leibniz(m, limits.oracle_max_n);
  Polynomial division_free = det_division_free(m, limits.term_ceiling);
  Polynomial lsd = det_via_linear_subdigraphs(m, limits.lsd_max_n);
  Polynomial gf = path_generating_function(g);
  Polynomial words = best_word_sum(g);
  CancellationReport cancel = verify_cancellation(m, limits.lsd_max_n);

  auto compare = [](std::string name, const Polynomial& want, const Polynomial& got) {
    bool ok = want == got;
    return CheckResult{std::move(name), ok, ok ? "" : polynomial_diff(want, got)};
  };
  std::vector<CheckResult> out;
  out.push_back(compare("leibniz == division-free", division_free, leibniz));
  out.push_back(compare("lsd == division-free", division_free, lsd));
  out.push_back(compare("path-gf == det", division_free, gf));
  out.push_back(compare("best-words == path-gf", gf, words));
  std::string cancel_detail;
  for (const auto& f : cancel.failures) cancel_detail += f + "\n";
  out.push_back({"complex cancellation", cancel.passed(), cancel_detail});
  if (expected) out.push_back(compare("det == expected", *expected, division_free));
  return out;
}

int cmd_verify(const std::optional<std::string>& path, const std::vector<std::string>& random_args,
               const std::optional<std::string>& expect_path, const Limits& limits,
               std::ostream& out, std::ostream& err) {
  std::vector<ColoredDigraph> graphs;
  if (!random_args.empty()) {
    std::uint32_t n = 0, k = 0;
    double density = 0;
    std::uint64_t seed = 0, count = 0;
    try {
      n = static_cast<std::uint32_t>(std::stoul(random_args.at(0)));
      k = static_cast<std::uint32_t>(std::stoul(random_args.at(1)));
      density = std::stod(random_args.at(2));
      seed = std::stoull(random_args.at(3));
      count = std::stoull(random_args.at(4));
    } catch (const std::exception&) {
      throw InputError("usage", "--random expects N K DENSITY SEED COUNT");
    }
    if (k == 0 || !(density >= 0 && density <= 1)) {
      throw InputError("usage", "--random needs K >= 1 and 0 <= DENSITY <= 1");
    }
    for (std::uint64_t i = 0; i < count; ++i) {
      graphs.push_back(ColoredDigraph::random(n, k, density, seed + i));
    }
  } else if (path) {
    graphs.push_back(load_graph(*path));
  } else {
    throw InputError("usage", "verify needs a graph file or --random");
  }

  std::optional<Polynomial> expected;
  if (expect_path) {
    try {
      expected = parse_polynomial(read_input(*expect_path));
    } catch (const ParseError& e) {
      throw InputError("parse", std::string("expected determinant: ") + e.what());
    }
  }

  std::vector<std::string> names;
  std::vector<std::size_t> passed;
  std::optional<VerificationFailure> first_failure;
  for (const ColoredDigraph& g : graphs) {
    auto results = verify_graph(g, limits, expected);
    if (names.empty()) {
      for (const auto& r : results) names.push_back(r.name);
      passed.assign(names.size(), 0);
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (results[i].ok) {
        ++passed[i];
      } else if (!first_failure) {
        first_failure = VerificationFailure{
            results[i].name + " failed\n" + results[i].detail,
            {{"check", results[i].name}, {"graph", to_json(g)}}};
      }
    }
  }

  std::size_t width = std::string("check").size();
  for (const auto& n : names) width = std::max(width, n.size());
  out << std::left << std::setw(static_cast<int>(width) + 2) << "check" << "result\n";
  for (std::size_t i = 0; i < names.size(); ++i) {
    out << std::setw(static_cast<int>(width) + 2) << names[i]
        << (passed[i] == graphs.size() ? "PASS" : "FAIL") << " (" << passed[i] << "/"
        << graphs.size() << ")\n";
  }
  if (first_failure) {
    out << first_failure->detail;
    emit_error(err, "verification", first_failure->detail, first_failure->extra);
    return kVerificationFailed;
  }
  out << "all checks passed on " << graphs.size() << " graph(s)\n";
  return kOk;
}

std::string describe(const InvolutionStep& step) {
  std::ostringstream s;
  s << "point " << step.acting_point << ", " << to_string(step.which) << ": ";
  if (const auto* merge = std::get_if<MergeDetail>(&step.detail)) {
    s << "outer edge " << merge->outer_from << "->" << merge->outer_to << ", inner cycle "
      << "entered at " << step.acting_point << " and left from " << merge->inner_last;
  } else {
    const auto& split = std::get<SplitDetail>(step.detail);
    s << "descent " << split.peak << ".." << split.corner_pred << "->" << step.acting_point
      << ", ascent to " << split.ascent_end << ", return edge " << split.return_from << "->"
      << split.return_to;
  }
  return s.str();
}

int cmd_involution(const std::string& path, const std::optional<std::string>& lsd_text,
                   const Limits& limits, std::ostream& out, std::ostream& err) {
  ColoredDigraph g = load_graph(path);
  PolyMatrix m = build_colored_matrix(g);

  if (lsd_text) {
    LinearSubdigraph gamma = parse_linear_subdigraph(*lsd_text);
    if (gamma.n() != g.n()) {
      throw InputError("size-mismatch", "subdigraph has " + std::to_string(gamma.n()) +
                                            " vertices, graph has " + std::to_string(g.n()));
    }
    InvolutionStep step = involution_step(gamma);
    InvolutionStep back = involution_step(step.result);
    SignedWeight w0 = signed_weight(gamma, m);
    SignedWeight w1 = signed_weight(step.result, m);
    out << format(gamma) << "\n  " << describe(step) << "\n  -> " << format(step.result)
        << "\n";
    out << format(step.result) << "\n  " << describe(back) << "\n  -> " << format(back.result)
        << "\n";
    std::string problems;
    if (back.result != gamma) problems += "f(f(gamma)) != gamma\n";
    if (w0.weight != w1.weight) problems += "weights differ\n";
    if (w0.sign == w1.sign) problems += "signs agree\n";
    if (!problems.empty()) {
      out << "FAIL\n";
      emit_error(err, "verification", problems,
                 {{"gamma", format(gamma)}, {"partner", format(step.result)}});
      return kVerificationFailed;
    }
    out << "pair verified: weights equal, signs opposite\n";
    return kOk;
  }

  std::size_t listed = 0;
  for_each_linear_subdigraph(
      g.n(),
      [&](const LinearSubdigraph& gamma) {
        SingularityReport rep = classify(gamma);
        if (!rep.complex) return;
        InvolutionStep step = involution_step(gamma);
        out << format(gamma) << "  cycle " << format(gamma.cycles()[*rep.acting_cycle]) << "  "
            << describe(step) << "  partner " << format(step.result) << "\n";
        ++listed;
      },
      limits.lsd_max_n);

  CancellationReport report = verify_cancellation(m, limits.lsd_max_n);
  if (listed == 0) out << "no complex linear subdigraphs\n";
  out << "complex linear subdigraphs: " << report.complex_count << " in " << report.orbit_count
      << " pairs\n";
  out << "complex signed-weight sum: " << format(report.complex_sum) << "\n";
  if (!report.passed()) {
    std::string dump;
    for (const auto& f : report.failures) dump += f + "\n";
    out << "FAIL\n" << dump;
    emit_error(err, "verification", dump);
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Colored path matrices: determinants, path generating functions, and the "
               "cancellation involution"};
  app.name("pathdet");
  app.require_subcommand(1);

  Limits limits;
  app.add_option("--oracle-max-n", limits.oracle_max_n,
                 "largest n for the permutation expansion")
      ->capture_default_str();
  app.add_option("--lsd-max-n", limits.lsd_max_n, "largest n for linear subdigraph enumeration")
      ->capture_default_str();
  app.add_option("--term-ceiling", limits.term_ceiling,
                 "term budget per layer of the division-free determinant")
      ->capture_default_str();

  std::string graph_path;
  std::string format_name = "text";

  auto* matrix = app.add_subcommand("matrix", "print the colored path matrix");
  bool stanley = false;
  matrix->add_option("graph", graph_path, "graph JSON file ('-' for stdin)")->required();
  matrix->add_flag("--stanley", stanley, "single-color matrix (requires k = 1)");
  matrix->add_option("--format", format_name)->check(CLI::IsMember({"text", "json"}));

  auto* det = app.add_subcommand("det", "print the determinant of the matrix");
  std::string algorithm = "division-free";
  det->add_option("graph", graph_path, "graph JSON file ('-' for stdin)")->required();
  det->add_option("--algorithm", algorithm)
      ->check(CLI::IsMember({"leibniz", "division-free", "lsd"}))
      ->capture_default_str();
  det->add_option("--format", format_name)->check(CLI::IsMember({"text", "json"}));

  auto* paths = app.add_subcommand("paths", "list colored paths or their generating function");
  bool gf = false;
  bool list = false;
  paths->add_option("graph", graph_path, "graph JSON file ('-' for stdin)")->required();
  auto* mode = paths->add_option_group("mode");
  mode->add_flag("--gf", gf, "print the path generating function");
  mode->add_flag("--list", list, "print one colored path per line");
  mode->require_option(1);

  auto* verify = app.add_subcommand("verify", "cross-check determinant, paths and cancellation");
  std::optional<std::string> verify_path;
  std::vector<std::string> random_args;
  std::optional<std::string> expect_path;
  verify->add_option("graph", verify_path, "graph JSON file ('-' for stdin)");
  verify->add_option("--random", random_args, "N K DENSITY SEED COUNT")->expected(5);
  verify->add_option("--expect", expect_path, "file holding the expected determinant");

  auto* invol = app.add_subcommand("involution", "list complex subdigraphs and their partners");
  std::optional<std::string> lsd_text;
  invol->add_option("graph", graph_path, "graph JSON file ('-' for stdin)")->required();
  invol->add_option("--lsd", lsd_text, "apply to one subdigraph, e.g. \"(1 3 2)(4)\"");

  auto* random = app.add_subcommand("random", "print a random graph as JSON");
  std::uint32_t rn = 0, rk = 1;
  double density = 0.5;
  std::uint64_t seed = 0;
  random->add_option("n", rn)->required();
  random->add_option("k", rk)->required()->check(CLI::PositiveNumber);
  random->add_option("density", density)->required()->check(CLI::Range(0.0, 1.0));
  random->add_option("seed", seed)->required();

  std::vector<std::string> argv_storage;
  argv_storage.push_back("pathdet");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "usage", e.what());
    return kInputError;
  }

  try {
    if (matrix->parsed()) {
      ColoredDigraph g = load_graph(graph_path);
      PolyMatrix mat = stanley ? build_stanley_matrix(g) : build_colored_matrix(g);
      if (format_name == "json") {
        out << to_json(mat).dump() << "\n";
      } else {
        out << format_grid(mat);
      }
      return kOk;
    }
    if (det->parsed()) {
      ColoredDigraph g = load_graph(graph_path);
      Polynomial d = compute_det(build_colored_matrix(g), algorithm, limits);
      if (format_name == "json") {
        out << to_json(d).dump() << "\n";
      } else {
        out << format(d) << "\n";
      }
      return kOk;
    }
    if (paths->parsed()) {
      ColoredDigraph g = load_graph(graph_path);
      if (gf) {
        out << format(path_generating_function(g)) << "\n";
      } else {
        for (const ColoredPath& p : enumerate_colored_paths(g)) out << format(p) << "\n";
      }
      return kOk;
    }
    if (verify->parsed()) {
      return cmd_verify(verify_path, random_args, expect_path, limits, out, err);
    }
    if (invol->parsed()) {
      return cmd_involution(graph_path, lsd_text, limits, out, err);
    }
    if (random->parsed()) {
      out << to_json(ColoredDigraph::random(rn, rk, density, seed)).dump() << "\n";
      return kOk;
    }
  } catch (const GraphError& e) {
    emit_error(err, to_string(e.kind()), e.what());
    return kInputError;
  } catch (const ParseError& e) {
    emit_error(err, "parse", e.what(), {{"position", e.position()}});
    return kInputError;
  } catch (const InputError& e) {
    emit_error(err, e.kind(), e.what());
    return kInputError;
  } catch (const PreconditionError& e) {
    emit_error(err, "precondition", e.what());
    return kInputError;
  } catch (const ResourceBoundError& e) {
    emit_error(err, "bound", e.what(),
               {{"bound", e.bound()}, {"limit", e.limit()}, {"actual", e.actual()}});
    return kResourceBound;
  } catch (const InvariantViolation& e) {
    emit_error(err, "invariant", e.what());
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace pathdet::cli
