#pragma once

// Report rendering for the command-line tool. Every command produces one JSON
// object (machine format) or line-oriented text; the input graph is always echoed.

#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "plumbing/classify.hpp"
#include "plumbing/diagonalize.hpp"
#include "plumbing/graph_io.hpp"
#include "plumbing/hj_fraction.hpp"
#include "plumbing/laufer.hpp"
#include "plumbing/pi1.hpp"

namespace plumbing::report {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Integers that fit in 64 bits are JSON numbers; larger ones are decimal strings.
inline json exact(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline json cycle_json(const PlumbingGraph& g, const LatticeVector& z) {
  json out = json::object();
  for (std::size_t i = 0; i < g.size(); ++i) out[g.id(i)] = exact(z[i]);
  return out;
}

inline json envelope(const std::string& command, const PlumbingGraph& input) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["input_echo"] = serialize(input);
  return j;
}

/// The serialization as `#`-comment lines, so text output stays a valid graph file.
inline std::string echo_comment(const PlumbingGraph& g, const std::string& label = "input") {
  std::string out = "# " + label + "\n";
  std::istringstream in(serialize(g));
  for (std::string line; std::getline(in, line);) out += "#   " + line + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// validate

struct ValidateSummary {
  bool minimal;
  std::size_t blow_downs;
  bool negative_definite;
};

inline ValidateSummary summarize(const PlumbingGraph& g) {
  const bool minimal = is_minimal(g);
  return {minimal, minimal ? 0 : g.size() - minimalize(g).size(), is_negative_definite(g)};
}

inline std::string validate_line(const ValidateSummary& s) {
  std::string out = "valid, ";
  if (s.minimal) {
    out += "minimal";
  } else {
    out += "NOT minimal (" + std::to_string(s.blow_downs) + (s.blow_downs == 1 ? " blow-down" : " blow-downs") +
           " available)";
  }
  out += s.negative_definite ? ", negative-definite" : ", NOT negative-definite";
  return out;
}

inline json validate_json(const PlumbingGraph& g) {
  const auto s = summarize(g);
  json j = envelope("validate", g);
  j["valid"] = true;
  j["minimal"] = s.minimal;
  j["blow_downs_available"] = s.blow_downs;
  j["negative_definite"] = s.negative_definite;
  j["determinant"] = exact(tree_determinant(g));
  return j;
}

inline std::string validate_text(const PlumbingGraph& g) { return echo_comment(g) + validate_line(summarize(g)) + "\n"; }

// ---------------------------------------------------------------------------
// laufer

inline json laufer_json(const PlumbingGraph& input, const PlumbingGraph& analyzed, const LauferResult& r,
                        const LauferOptions& opts) {
  json j = envelope("laufer", input);
  if (!(input == analyzed)) j["analyzed"] = serialize(analyzed);
  j["tie_break"] = to_string(opts.tie_break);
  j["early_exit"] = opts.early_exit;
  j["verdict"] = to_string(r.verdict);
  j["terminal"] = to_string(r.terminal);
  j["steps"] = r.steps;
  j["chi"] = exact(r.chi_min);
  j["z_min"] = r.z_min ? cycle_json(analyzed, *r.z_min) : json(nullptr);
  if (r.trace) {
    json steps = json::array();
    for (const auto& s : r.trace->steps) {
      steps.push_back({{"step", s.index}, {"vertex", s.vertex}, {"chi", exact(s.chi)},
                       {"cycle", cycle_json(analyzed, s.cycle)}});
    }
    j["trace"] = std::move(steps);
  }
  return j;
}

inline std::string laufer_text(const PlumbingGraph& input, const PlumbingGraph& analyzed, const LauferResult& r) {
  std::string out = echo_comment(input);
  if (!(input == analyzed)) out += echo_comment(analyzed, "minimalized");
  if (r.trace)
    for (const auto& s : r.trace->steps) out += format_trace_line(analyzed, s) + "\n";
  out += std::string("verdict: ") + to_string(r.verdict) + "\n";
  out += std::string("terminal: ") + to_string(r.terminal) + "\n";
  out += "steps: " + std::to_string(r.steps) + "\n";
  out += "chi: " + r.chi_min.str() + "\n";
  if (r.z_min) out += "z_min: " + r.z_min->str(analyzed) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// classify

inline json classification_json(const ClassificationReport& r) {
  json j;
  j["minimal"] = r.minimal;
  j["blow_downs"] = r.blow_downs;
  j["analyzed"] = serialize(r.analyzed);
  j["negative_definite"] = r.negative_definite;
  j["very_bad_witness"] = r.very_bad_witness ? json(*r.very_bad_witness) : json(nullptr);
  if (r.proper_e8_witness) {
    json w = json::object();
    for (std::size_t i = 0; i < kE8Roles.size(); ++i) w[kE8Roles[i]] = r.proper_e8_witness->ids[i];
    j["proper_e8_witness"] = std::move(w);
  } else {
    j["proper_e8_witness"] = nullptr;
  }
  j["insulated"] = r.insulated;
  if (r.insulation_violation)
    j["insulation_violation"] = {{"vertex", r.insulation_violation->first},
                                 {"condition", to_string(r.insulation_violation->second)}};
  else
    j["insulation_violation"] = nullptr;
  j["laufer_verdict"] = to_string(r.laufer_verdict);
  j["prediction"] = to_string(r.prediction);
  return j;
}

inline json classify_json(const ClassificationReport& r) {
  json j = envelope("classify", r.input);
  const json body = classification_json(r);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

inline std::string classification_text(const ClassificationReport& r) {
  std::string out;
  out += std::string("minimal: ") + (r.minimal ? "yes" : "no") + "\n";
  if (!r.minimal) {
    out += "blow_downs: " + std::to_string(r.blow_downs) + "\n";
    out += echo_comment(r.analyzed, "minimalized");
  }
  out += std::string("negative_definite: ") + (r.negative_definite ? "yes" : "no") + "\n";
  out += "very_bad_witness: " + (r.very_bad_witness ? *r.very_bad_witness : std::string("none")) + "\n";
  out += "proper_e8_witness: ";
  if (r.proper_e8_witness) {
    for (std::size_t i = 0; i < kE8Roles.size(); ++i)
      out += std::string(i ? "," : "") + kE8Roles[i] + "=" + r.proper_e8_witness->ids[i];
  } else {
    out += "none";
  }
  out += "\n";
  out += std::string("insulated: ") + (r.insulated ? "yes" : "no") + "\n";
  out += "insulation_violation: " +
         (r.insulation_violation
              ? r.insulation_violation->first + " (" + to_string(r.insulation_violation->second) + ")"
              : std::string("none")) +
         "\n";
  out += std::string("laufer_verdict: ") + to_string(r.laufer_verdict) + "\n";
  out += std::string("prediction: ") + to_string(r.prediction) + "\n";
  return out;
}

inline std::string classify_text(const ClassificationReport& r) {
  return echo_comment(r.input) + classification_text(r);
}

// ---------------------------------------------------------------------------
// derationalize / surger / hjcf

inline std::string derationalize_line(const Rational& delta) {
  return "delta=" + delta.str() + " derationalizer=" + delta.reciprocal().str();
}

inline json derationalize_json(const PlumbingGraph& g, const DiagonalForm& form) {
  json j = envelope("derationalize", g);
  j["root"] = form.root;
  j["delta"] = form.root_entry().str();
  j["derationalizer"] = form.root_entry().reciprocal().str();
  json diag = json::object();
  for (std::size_t i = 0; i < form.ids.size(); ++i) diag[form.ids[i]] = form.entries[i].str();
  j["diagonal"] = std::move(diag);
  j["elimination_order"] = form.elimination_order;
  return j;
}

inline std::string derationalize_text(const PlumbingGraph& g, const DiagonalForm& form) {
  std::string out = echo_comment(g);
  out += "diagonal:";
  for (const auto& id : form.elimination_order) out += " " + id + "=" + form.entry(id).str();
  out += "\n" + derationalize_line(form.root_entry()) + "\n";
  return out;
}

inline json surger_json(const PlumbingGraph& input, const std::string& root, const Rational& coef,
                        const PlumbingGraph& result) {
  json j = envelope("surger", input);
  j["root"] = root;
  j["coef"] = coef.str();
  j["chain"] = hj_expand(coef).str();
  j["result"] = serialize(result);
  return j;
}

inline std::string surger_text(const PlumbingGraph& input, const PlumbingGraph& result) {
  return echo_comment(input) + serialize(result);
}

inline json hjcf_json(const Rational& r, const HJExpansion& x) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "hjcf";
  j["value"] = r.str();
  json entries = json::array();
  for (const auto& e : x.entries()) entries.push_back(exact(e));
  j["expansion"] = std::move(entries);
  return j;
}

inline std::string hjcf_text(const Rational& r, const HJExpansion& x) { return r.str() + " = " + x.str() + "\n"; }

// ---------------------------------------------------------------------------
// pi1

inline std::string divisors_line(const std::vector<BigInt>& d) {
  std::string out = "H1 divisors: ";
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? ", " : "") + d[i].str();
  return out;
}

inline json pi1_json(const PlumbingGraph& g, const GroupPresentation& p, bool abelianization) {
  json j = envelope("pi1", g);
  j["generators"] = p.generators;
  json rels = json::array();
  for (const auto& r : p.relations) rels.push_back(format_word(r));
  j["relations"] = std::move(rels);
  json orders = json::object();
  for (const auto& [v, order] : p.neighbor_ordering) orders[v] = order;
  j["neighbor_ordering"] = std::move(orders);
  if (abelianization) {
    json d = json::array();
    for (const auto& x : abelianization_invariants(p)) d.push_back(exact(x));
    j["h1_divisors"] = std::move(d);
  }
  return j;
}

inline std::string pi1_text(const PlumbingGraph& g, const GroupPresentation& p, bool abelianization) {
  std::string out = echo_comment(g);
  out += format_presentation(p);
  for (const auto& [v, order] : p.neighbor_ordering) {
    if (order.size() < 2) continue;
    out += "# order " + v + ":";
    for (const auto& u : order) out += " " + u;
    out += "\n";
  }
  if (abelianization) out += divisors_line(abelianization_invariants(p)) + "\n";
  return out;
}

}  // namespace plumbing::report
