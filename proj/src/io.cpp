#include "sclink/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace sclink {

namespace {

using nlohmann::json;

json star_list(const std::vector<Star>& stars) {
  json list = json::array();
  for (const Star& s : stars) {
    list.push_back({s.first, s.second});
  }
  return list;
}

std::vector<Star> read_star_list(const json& node, const char* field, int max_row, int max_col,
                                 std::vector<std::string>* warnings) {
  if (!node.is_array()) throw ParseError(std::string(field) + " must be an array");
  std::vector<Star> stars;
  std::set<Star> seen;
  for (const json& entry : node) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer()) {
      throw ParseError(std::string(field) + " entries must be [row, col] integer pairs");
    }
    int row = entry[0].get<int>();
    int col = entry[1].get<int>();
    if (row < 1 || row > max_row || col < 1 || col > max_col) {
      throw ParseError(std::string(field) + " star (" + std::to_string(row) + "," +
                       std::to_string(col) + ") out of range");
    }
    if (!seen.insert({row, col}).second) {
      if (warnings) {
        warnings->push_back(std::string("duplicate star (") + std::to_string(row) + "," +
                            std::to_string(col) + ") in " + field + " ignored");
      }
      continue;
    }
    stars.emplace_back(row, col);
  }
  return stars;
}

int read_positive_int(const json& doc, const char* field) {
  if (!doc.contains(field) || !doc[field].is_number_integer()) {
    throw ParseError(std::string("missing or non-integer field ") + field);
  }
  int value = doc[field].get<int>();
  if (value < 1) throw ParseError(std::string(field) + " must be positive");
  return value;
}

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("malformed JSON document");
  return doc;
}

void check_version(const json& doc) {
  if (!doc.contains("version") || !doc["version"].is_string() || doc["version"] != "1") {
    throw ParseError("missing or unsupported document version (expected \"1\")");
  }
}

}  // namespace

CompositeSpec parse_instance(const std::string& text, std::vector<std::string>* warnings) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("instance document must be a JSON object");
  check_version(doc);
  const int k = read_positive_int(doc, "k");
  const int n_s = read_positive_int(doc, "n_s");
  const int m = read_positive_int(doc, "m");
  if (!doc.contains("a_s")) throw ParseError("missing field a_s");
  SparsityPattern a_s(n_s, n_s, read_star_list(doc["a_s"], "a_s", n_s, n_s, warnings));

  const bool has_b = doc.contains("b");
  const bool has_local = doc.contains("b_local");
  if (has_b == has_local) {
    throw ParseError("exactly one of b and b_local must be given");
  }
  SparsityPattern b;
  if (has_b) {
    b = SparsityPattern(k * n_s, m, read_star_list(doc["b"], "b", k * n_s, m, warnings));
  } else {
    SparsityPattern local(n_s, m, read_star_list(doc["b_local"], "b_local", n_s, m, warnings));
    b = input_in_first_subsystem(k, n_s, local);
  }
  CompositeSpec spec{k, SubsystemTemplate{n_s, std::move(a_s)}, std::move(b)};
  spec.validate();
  return spec;
}

std::string emit_instance(const CompositeSpec& spec) {
  spec.validate();
  json doc;
  doc["version"] = "1";
  doc["k"] = spec.k;
  doc["n_s"] = spec.n_s();
  doc["m"] = spec.m();
  doc["a_s"] = star_list(spec.tmpl.a_s.stars());
  doc["b"] = star_list(spec.b.stars());
  return doc.dump(2) + "\n";
}

std::string emit_report(const SynthesisReport& report) {
  json doc;
  doc["version"] = "1";
  doc["feasible"] = report.feasible;
  doc["q"] = report.q;
  doc["alpha"] = report.alpha;
  doc["beta"] = report.beta;
  doc["gamma_d"] = report.gamma_d;
  doc["lower_bound"] = report.lower_bound;
  json links = json::array();
  for (const Interconnection& link : report.interconnections) {
    links.push_back({{link.target.subsystem, link.target.state},
                     {link.source.subsystem, link.source.state}});
  }
  doc["interconnections"] = links;
  json matching = json::array();
  for (const auto& [l, r] : report.matching_witness) {
    matching.push_back({l + 1, r + 1});
  }
  doc["matching"] = matching;
  return doc.dump(2) + "\n";
}

SynthesisReport parse_report(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("report document must be a JSON object");
  check_version(doc);
  SynthesisReport report;
  for (const char* field : {"q", "alpha", "beta", "gamma_d", "lower_bound"}) {
    if (!doc.contains(field) || !doc[field].is_number_integer()) {
      throw ParseError(std::string("missing or non-integer field ") + field);
    }
  }
  if (!doc.contains("feasible") || !doc["feasible"].is_boolean()) {
    throw ParseError("missing or non-boolean field feasible");
  }
  report.feasible = doc["feasible"].get<bool>();
  report.q = doc["q"].get<int>();
  report.alpha = doc["alpha"].get<int>();
  report.beta = doc["beta"].get<int>();
  report.gamma_d = doc["gamma_d"].get<int>();
  report.lower_bound = doc["lower_bound"].get<int>();
  if (!doc.contains("interconnections") || !doc["interconnections"].is_array()) {
    throw ParseError("missing interconnections array");
  }
  for (const json& entry : doc["interconnections"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array() || !entry[1].is_array() ||
        entry[0].size() != 2 || entry[1].size() != 2) {
      throw ParseError("interconnection entries must be [[i,p],[j,q]] pairs");
    }
    Interconnection link{{entry[0][0].get<int>(), entry[0][1].get<int>()},
                         {entry[1][0].get<int>(), entry[1][1].get<int>()}};
    if (link.target.subsystem == link.source.subsystem) {
      throw ParseError("interconnection endpoints must be in distinct subsystems");
    }
    report.interconnections.push_back(link);
  }
  std::sort(report.interconnections.begin(), report.interconnections.end());
  if (doc.contains("matching")) {
    if (!doc["matching"].is_array()) throw ParseError("matching must be an array");
    for (const json& entry : doc["matching"]) {
      if (!entry.is_array() || entry.size() != 2) {
        throw ParseError("matching entries must be [left, right] pairs");
      }
      report.matching_witness.emplace_back(entry[0].get<int>() - 1, entry[1].get<int>() - 1);
    }
    std::sort(report.matching_witness.begin(), report.matching_witness.end());
  }
  return report;
}

std::string emit_verdict(const Verdict& verdict) {
  json doc;
  doc["version"] = "1";
  doc["controllable"] = verdict.controllable;
  doc["inaccessible_states"] = verdict.inaccessible_states;
  doc["dilation_deficiency"] = verdict.dilation_deficiency;
  json matching = json::array();
  for (const auto& [l, r] : verdict.matching_witness.pairs) {
    matching.push_back({l + 1, r + 1});
  }
  doc["matching"] = matching;
  return doc.dump(2) + "\n";
}

std::string export_dot(const LayeredDigraph& g,
                       const std::vector<Interconnection>* highlight) {
  const int n_s = g.subsystem_size();
  auto node_name = [&](int state) {
    std::ostringstream name;
    name << "x" << (state - 1) / n_s + 1 << "_" << (state - 1) % n_s + 1;
    return name.str();
  };

  std::set<std::pair<int, int>> highlighted;
  if (highlight) {
    for (const Interconnection& link : *highlight) {
      int source = n_s * (link.source.subsystem - 1) + link.source.state;
      int target = n_s * (link.target.subsystem - 1) + link.target.state;
      highlighted.insert({source, target});
    }
  }

  std::ostringstream out;
  out << "digraph composite {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  for (int c = 1; c <= g.input_count(); ++c) {
    out << "  u" << c << " [shape=box];\n";
  }
  for (int i = 1; i <= g.subsystem_count(); ++i) {
    out << "  subgraph cluster_s" << i << " {\n";
    out << "    label=\"S" << i << "\";\n";
    for (int p = 1; p <= n_s; ++p) {
      out << "    " << node_name(n_s * (i - 1) + p) << ";\n";
    }
    out << "  }\n";
  }
  for (const DigraphEdge& e : g.edges()) {
    out << "  ";
    if (g.is_input_node(e.from)) {
      out << "u" << e.from - g.state_count();
    } else {
      out << node_name(e.from);
    }
    out << " -> " << node_name(e.to);
    std::vector<std::string> attrs;
    if (e.cls == EdgeClass::I) attrs.push_back("style=dashed");
    if (!g.is_input_node(e.from) && highlighted.count({e.from, e.to})) {
      attrs.push_back("color=red");
      attrs.push_back("penwidth=2.0");
    }
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) {
        if (i) out << ", ";
        out << attrs[i];
      }
      out << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sclink
