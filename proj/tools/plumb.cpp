// plumb: command-line front end for the plumbing library.
//
// exit codes: 0 ok (laufer: lattice L-space), 1 laufer: not an L-space,
//             2 bad input or unmet precondition, 3 internal error

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plumbing/classify.hpp"
#include "plumbing/enumerate.hpp"
#include "plumbing/graph_io.hpp"
#include "plumbing/report.hpp"

namespace fs = std::filesystem;
using namespace plumbing;
namespace rp = plumbing::report;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct Common {
  std::string file;
  std::string format = "text";
  bool machine() const { return format == "machine"; }
};

void emit(const Common& c, const rp::json& j, const std::string& text) {
  if (c.machine())
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

TieBreak parse_tie_break(const std::string& s) {
  if (s == "first") return TieBreak::first;
  if (s == "last") return TieBreak::last;
  if (s == "max") return TieBreak::max_pairing;
  if (s == "random") return TieBreak::seeded_random;
  throw precondition_error("unknown tie-break '" + s + "'");
}

std::pair<Weight, Weight> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw precondition_error("weight range must look like a..b, got '" + s + "'");
  try {
    std::size_t used = 0;
    const std::string lo = s.substr(0, dots), hi = s.substr(dots + 2);
    const Weight a = std::stoll(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(lo);
    const Weight b = std::stoll(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(hi);
    return {a, b};
  } catch (const std::logic_error&) {
    throw precondition_error("weight range must look like a..b, got '" + s + "'");
  }
}

// "v=a,b,c" -> cyclic order at v
CyclicOrders parse_orders(const std::vector<std::string>& specs) {
  CyclicOrders out;
  for (const auto& s : specs) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw precondition_error("--order expects v=a,b,..., got '" + s + "'");
    std::vector<std::string> order;
    std::stringstream rest(s.substr(eq + 1));
    for (std::string item; std::getline(rest, item, ',');) order.push_back(item);
    out[s.substr(0, eq)] = std::move(order);
  }
  return out;
}

int cmd_validate(const Common& c) {
  const auto g = read_graph_file(c.file);
  emit(c, rp::validate_json(g), rp::validate_text(g));
  return 0;
}

struct LauferFlags {
  bool trace = false;
  std::string tie_break = "first";
  std::uint64_t seed = 0;
  bool no_early_exit = false;
  bool minimalize = false;
};

int cmd_laufer(const Common& c, const LauferFlags& f) {
  const auto input = read_graph_file(c.file);
  PlumbingGraph analyzed = input;
  if (!is_minimal(input)) {
    if (!f.minimalize)
      throw precondition_error("graph is not minimal; rerun with --minimalize to analyze its minimal form");
    analyzed = minimalize(input);
  }
  if (!is_negative_definite(analyzed))
    throw not_negative_definite("graph is not negative-definite; Laufer's algorithm needs a negative-definite graph");
  LauferOptions opts;
  opts.tie_break = parse_tie_break(f.tie_break);
  opts.seed = f.seed;
  opts.trace = f.trace;
  opts.early_exit = !f.no_early_exit;
  const auto r = laufer_run(analyzed, opts);
  emit(c, rp::laufer_json(input, analyzed, r, opts), rp::laufer_text(input, analyzed, r));
  return r.verdict == Verdict::lattice_L_space ? 0 : 1;
}

int cmd_classify(const Common& c) {
  const auto r = classify(read_graph_file(c.file));
  emit(c, rp::classify_json(r), rp::classify_text(r));
  return 0;
}

int cmd_derationalize(const Common& c, const std::string& root) {
  const auto g = read_graph_file(c.file);
  const MarkedGraph mg(g, root);
  derationalizer(mg);  // checks definiteness
  const auto form = rooted_diagonalize(g, root);
  emit(c, rp::derationalize_json(g, form), rp::derationalize_text(g, form));
  return 0;
}

int cmd_surger(const Common& c, const std::string& root, const std::string& coef, bool minimal) {
  const auto g = read_graph_file(c.file);
  const auto r = Rational::parse(coef);
  auto result = surger(MarkedGraph(g, root), r);
  if (minimal) result = minimalize(result);
  emit(c, rp::surger_json(g, root, r, result), rp::surger_text(g, result));
  return 0;
}

int cmd_pi1(const Common& c, bool abelianization, const std::vector<std::string>& orders) {
  const auto g = read_graph_file(c.file);
  const auto p = mumford_presentation(g, parse_orders(orders));
  emit(c, rp::pi1_json(g, p, abelianization), rp::pi1_text(g, p, abelianization));
  return 0;
}

int cmd_hjcf(const std::string& format, const std::string& value) {
  const auto r = Rational::parse(value);
  const auto x = hj_expand(r);
  Common c;
  c.format = format;
  emit(c, rp::hjcf_json(r, x), rp::hjcf_text(r, x));
  return 0;
}

int cmd_enumerate(const std::string& format, std::size_t max_vertices, const std::string& weights,
                  const std::string& out_dir) {
  const auto [wmin, wmax] = parse_range(weights);
  const bool machine = format == "machine";
  if (!out_dir.empty()) fs::create_directories(out_dir);

  std::map<std::string, std::size_t> counts{{to_string(Prediction::LO_not_Lspace), 0},
                                            {to_string(Prediction::notLO_Lspace), 0},
                                            {to_string(Prediction::undetermined), 0}};
  std::size_t total = 0;
  rp::json rows = rp::json::array();
  std::string table = "index\tvertices\tprediction\tlaufer_verdict\tencoding\n";

  enumerate_and_classify(max_vertices, wmin, wmax, [&](const EnumeratedGraph& e) {
    ++total;
    const std::string pred = to_string(e.report.prediction);
    ++counts[pred];
    std::ostringstream name;
    name << "graph_" << std::setw(5) << std::setfill('0') << total;
    table += std::to_string(total) + "\t" + std::to_string(e.graph.size()) + "\t" + pred + "\t" +
             to_string(e.report.laufer_verdict) + "\t" + e.encoding + "\n";
    rows.push_back({{"index", total},
                    {"vertices", e.graph.size()},
                    {"prediction", pred},
                    {"laufer_verdict", to_string(e.report.laufer_verdict)},
                    {"encoding", e.encoding}});
    if (!out_dir.empty()) {
      std::ofstream f(fs::path(out_dir) / (name.str() + (machine ? ".json" : ".txt")));
      if (machine) {
        auto j = rp::classify_json(e.report);
        j["encoding"] = e.encoding;
        f << j.dump(2) << '\n';
      } else {
        f << "# encoding " << e.encoding << '\n' << rp::classify_text(e.report);
      }
    }
  });

  std::string summary = "prediction\tcount\n";
  for (const auto& [k, v] : counts) summary += k + "\t" + std::to_string(v) + "\n";
  summary += "total\t" + std::to_string(total) + "\n";
  if (!out_dir.empty()) {
    std::ofstream(fs::path(out_dir) / "graphs.tsv") << table;
    std::ofstream(fs::path(out_dir) / "summary.tsv") << summary;
  }

  if (machine) {
    rp::json j;
    j["schema_version"] = rp::kSchemaVersion;
    j["command"] = "enumerate";
    j["input_echo"] = nullptr;
    j["max_vertices"] = max_vertices;
    j["weight_min"] = wmin;
    j["weight_max"] = wmax;
    j["total"] = total;
    j["counts"] = counts;
    j["graphs"] = std::move(rows);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << summary;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plumb: plumbing graph calculations"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  app.fallthrough();

  Common common;
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", common.file, "graph file")->required()->check(CLI::ExistingFile);
  };

  auto* validate = app.add_subcommand("validate", "parse and summarize a graph file");
  add_file(validate);

  LauferFlags lf;
  auto* laufer = app.add_subcommand("laufer", "run Laufer's algorithm");
  add_file(laufer);
  laufer->add_flag("--trace", lf.trace, "print every step");
  laufer->add_option("--tie-break", lf.tie_break, "first|last|max|random")
      ->check(CLI::IsMember({"first", "last", "max", "random"}));
  laufer->add_option("--seed", lf.seed, "seed for --tie-break random");
  laufer->add_flag("--no-early-exit", lf.no_early_exit, "run to convergence even after chi drops");
  laufer->add_flag("--minimalize", lf.minimalize, "blow down to the minimal form first");

  auto* classify_cmd = app.add_subcommand("classify", "structural classification report");
  add_file(classify_cmd);

  std::string root;
  auto* derat = app.add_subcommand("derationalize", "rooted diagonal form and derationalizer");
  add_file(derat);
  derat->add_option("--root", root, "root vertex id")->required();

  std::string coef;
  bool surger_minimalize = false;
  auto* surg = app.add_subcommand("surger", "attach the surgery chain for a rational coefficient");
  add_file(surg);
  surg->add_option("--root", root, "vertex to attach at")->required();
  surg->add_option("--coef", coef, "surgery coefficient p/q")->required();
  surg->add_flag("--minimalize", surger_minimalize, "minimalize the result");

  bool abelianization = false;
  std::vector<std::string> orders;
  auto* pi1 = app.add_subcommand("pi1", "fundamental group presentation");
  add_file(pi1);
  pi1->add_flag("--abelianization", abelianization, "append H1 elementary divisors");
  pi1->add_option("--order", orders, "cyclic neighbor order v=a,b,c (repeatable)");

  std::string hj_value_text;
  auto* hjcf = app.add_subcommand("hjcf", "Hirzebruch-Jung continued fraction of p/q");
  hjcf->add_option("value", hj_value_text, "nonzero rational p/q")->required();

  std::size_t max_vertices = 0;
  std::string weights;
  std::string out_dir;
  auto* enumerate = app.add_subcommand("enumerate", "classify every ND minimal tree in a range");
  enumerate->add_option("--max-vertices", max_vertices, "largest tree size")->required();
  enumerate->add_option("--weights", weights, "weight range a..b")->required();
  enumerate->add_option("--out", out_dir, "directory for per-graph reports and summary.tsv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  common.format = format;

  try {
    if (*validate) return cmd_validate(common);
    if (*laufer) return cmd_laufer(common, lf);
    if (*classify_cmd) return cmd_classify(common);
    if (*derat) return cmd_derationalize(common, root);
    if (*surg) return cmd_surger(common, root, coef, surger_minimalize);
    if (*pi1) return cmd_pi1(common, abelianization, orders);
    if (*hjcf) return cmd_hjcf(format, hj_value_text);
    if (*enumerate) return cmd_enumerate(format, max_vertices, weights, out_dir);
  } catch (const parse_error& e) {
    std::cerr << common.file << ": " << e.what() << '\n';
    return kExitInput;
  } catch (const graph_error& e) {
    std::cerr << common.file << ": " << e.what() << '\n';
    return kExitInput;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const not_negative_definite& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const degenerate_form& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
