#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sclink/digraph.hpp"
#include "sclink/system.hpp"
#include "sclink/verify.hpp"

namespace sclink {

/// Malformed or invalid instance/report documents.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parses an instance document:
///   {"version":"1","k":2,"n_s":2,"m":1,"a_s":[[2,1]],"b":[[1,1]]}
/// All indices are 1-based; `b` uses composite row indices. A per-subsystem
/// input may be given as "b_local" instead, which is placed in subsystem 1's
/// rows. Duplicate stars are deduplicated with a warning.
CompositeSpec parse_instance(const std::string& text,
                             std::vector<std::string>* warnings = nullptr);

std::string emit_instance(const CompositeSpec& spec);

/// Report documents carry q, alpha, beta, gamma_d, lower_bound, the sorted
/// interconnection list as [[i,p],[j,q]] target/source pairs, the matching
/// witness (1-based, inputs numbered n_T+1..n_T+m), and the verdict.
std::string emit_report(const SynthesisReport& report);
SynthesisReport parse_report(const std::string& text);

std::string emit_verdict(const Verdict& verdict);

/// DOT rendering of a composite digraph: one cluster per subsystem, box
/// inputs, dashed interconnections; `highlight` edges are colored.
std::string export_dot(const LayeredDigraph& g,
                       const std::vector<Interconnection>* highlight = nullptr);

}  // namespace sclink
