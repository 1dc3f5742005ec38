#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sclink/io.hpp"
#include "sclink/oracle.hpp"
#include "sclink/synthesis.hpp"
#include "sclink/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIoError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitNotControllable = 3;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitInternal = 70;

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file << text;
}

sclink::CompositeSpec load_instance(const std::string& path) {
  std::vector<std::string> warnings;
  sclink::CompositeSpec spec = sclink::parse_instance(read_input(path), &warnings);
  for (const std::string& w : warnings) {
    std::cerr << "warning: " << w << "\n";
  }
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum interconnection synthesis and structural controllability checks "
               "for composite systems of identical subsystems"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string output = "-";
  std::string links_path;
  std::string highlight_path;
  int cap = 4;
  int gen_k = 2;
  int gen_ns = 2;
  int gen_m = 1;
  double gen_density = 0.3;
  double gen_input_density = -1.0;
  std::uint64_t gen_seed = 0;

  CLI::App* cmd_synth = app.add_subcommand("synthesize",
                                           "Compute a minimum interconnection set");
  cmd_synth->add_option("instance", input, "instance file, or - for stdin");
  cmd_synth->add_option("-o,--output", output, "output file, or - for stdout");

  CLI::App* cmd_verify = app.add_subcommand("verify", "Check structural controllability");
  cmd_verify->add_option("instance", input, "instance file, or - for stdin");
  cmd_verify->add_option("--links", links_path, "report file whose interconnections to apply");
  cmd_verify->add_option("-o,--output", output, "output file, or - for stdout");

  CLI::App* cmd_analyze = app.add_subcommand("analyze", "Print q, deficiency and SCC summary");
  cmd_analyze->add_option("instance", input, "instance file, or - for stdin");
  cmd_analyze->add_option("-o,--output", output, "output file, or - for stdout");

  CLI::App* cmd_oracle = app.add_subcommand("oracle", "Brute-force minimum (small instances)");
  cmd_oracle->add_option("instance", input, "instance file, or - for stdin");
  cmd_oracle->add_option("--cap", cap, "largest subset size to try")->capture_default_str();
  cmd_oracle->add_option("-o,--output", output, "output file, or - for stdout");

  CLI::App* cmd_gen = app.add_subcommand("gen", "Generate a random instance");
  cmd_gen->add_option("--k", gen_k, "number of subsystems")->required();
  cmd_gen->add_option("--ns", gen_ns, "states per subsystem")->required();
  cmd_gen->add_option("--m", gen_m, "number of inputs")->capture_default_str();
  cmd_gen->add_option("--density", gen_density, "subsystem edge density")->required();
  cmd_gen->add_option("--input-density", gen_input_density,
                      "input density (defaults to --density)");
  cmd_gen->add_option("--seed", gen_seed, "generator seed")->required();
  cmd_gen->add_option("-o,--output", output, "output file, or - for stdout");

  CLI::App* cmd_dot = app.add_subcommand("export-dot", "Render the system digraph as DOT");
  cmd_dot->add_option("instance", input, "instance file, or - for stdin");
  cmd_dot->add_option("--highlight", highlight_path,
                      "report file whose interconnections to apply and color");
  cmd_dot->add_option("-o,--output", output, "output file, or - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_synth->parsed()) {
      sclink::SynthesisReport report = sclink::synthesize(load_instance(input));
      write_output(output, sclink::emit_report(report));
      return report.feasible ? kExitOk : kExitInfeasible;
    }
    if (cmd_verify->parsed()) {
      sclink::CompositeSpec spec = load_instance(input);
      std::vector<sclink::Interconnection> links;
      if (!links_path.empty()) {
        links = sclink::parse_report(read_input(links_path)).interconnections;
      }
      sclink::Verdict verdict = sclink::is_structurally_controllable(
          sclink::apply_interconnections(spec, links), spec.b);
      write_output(output, sclink::emit_verdict(verdict));
      return verdict.controllable ? kExitOk : kExitNotControllable;
    }
    if (cmd_analyze->parsed()) {
      sclink::CompositeSpec spec = load_instance(input);
      sclink::InaccessibleSccSet nset = sclink::inaccessible_nontop_sccs(spec);
      sclink::ClassedBipartite bp = sclink::build_system_bipartite(spec);
      sclink::Matching xu = sclink::max_matching(
          bp, sclink::ClassMask{sclink::EdgeClass::X, sclink::EdgeClass::U});
      nlohmann::json doc;
      doc["version"] = "1";
      doc["k"] = spec.k;
      doc["n_s"] = spec.n_s();
      doc["n_t"] = spec.n_total();
      doc["m"] = spec.m();
      doc["q"] = nset.q();
      doc["deficiency"] = spec.n_total() - static_cast<int>(xu.size());
      doc["lower_bound"] = sclink::lower_bound(spec);
      nlohmann::json sccs = nlohmann::json::array();
      sclink::CompositeSpec lone{1, spec.tmpl,
                                 sclink::SparsityPattern(spec.n_s(), spec.m())};
      sclink::SccPartition part =
          sclink::strongly_connected_components(sclink::build_digraph(lone,
                                                                      sclink::LinkMode::None));
      for (std::size_t c = 0; c < part.components.size(); ++c) {
        sccs.push_back({{"states", part.components[c]},
                        {"non_top_linked", static_cast<bool>(part.non_top_linked[c])}});
      }
      doc["template_sccs"] = sccs;
      doc["inaccessible_sccs"] = nset.sccs;
      write_output(output, doc.dump(2) + "\n");
      return kExitOk;
    }
    if (cmd_oracle->parsed()) {
      sclink::CompositeSpec spec = load_instance(input);
      std::optional<sclink::OracleResult> result = sclink::brute_force_minimum(spec, cap);
      nlohmann::json doc;
      doc["version"] = "1";
      doc["found"] = result.has_value();
      if (result) {
        doc["size"] = result->size;
        nlohmann::json witness = nlohmann::json::array();
        for (const sclink::Interconnection& link : result->witness) {
          witness.push_back({{link.target.subsystem, link.target.state},
                             {link.source.subsystem, link.source.state}});
        }
        doc["witness"] = witness;
      }
      write_output(output, doc.dump(2) + "\n");
      return kExitOk;
    }
    if (cmd_gen->parsed()) {
      sclink::GenParams params;
      params.k = gen_k;
      params.n_s = gen_ns;
      params.m = gen_m;
      params.edge_density = gen_density;
      params.input_density = gen_input_density < 0 ? gen_density : gen_input_density;
      params.seed = gen_seed;
      write_output(output, sclink::emit_instance(sclink::random_spec(params)));
      return kExitOk;
    }
    if (cmd_dot->parsed()) {
      sclink::CompositeSpec spec = load_instance(input);
      std::vector<sclink::Interconnection> links;
      if (!highlight_path.empty()) {
        links = sclink::parse_report(read_input(highlight_path)).interconnections;
      }
      sclink::LayeredDigraph g = sclink::build_digraph(spec, links);
      write_output(output, sclink::export_dot(g, highlight_path.empty() ? nullptr : &links));
      return kExitOk;
    }
  } catch (const sclink::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
