#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "bbflow/chains.hpp"
#include "bbflow/flowgraph.hpp"
#include "bbflow/linmodel.hpp"
#include "bbflow/semisection.hpp"

namespace bbflow::io {

using nlohmann::json;

/// Parses `text` as inline JSON when it starts with '{' or '[', otherwise
/// reads it as a file path.
json load_json_arg(const std::string &text);

FlowGraph graph_from_json(const json &j);
json graph_to_json(const FlowGraph &g);

LinearAction action_from_json(const json &j);
json action_to_json(const LinearAction &action);

SemiSection semisection_from_json(const json &j);
json semisection_to_json(const SemiSection &t);

/// Accepts {"strata": [[i,j],...]} or a bare [[i,j],...].
InvariantSubset subset_from_json(const json &j);
json subset_to_json(const InvariantSubset &u);
json strata_to_json(const std::vector<Stratum> &strata);

/// Accepts {"points": [[a,b],...]} or a bare [[a,b],...].
ExponentSet exponents_from_json(const json &j);
json blowup_to_json(const BlowupTree &tree);

json chain_to_json(const MaximalChain &chain);
json trace_to_json(const ChainTrace &trace);

/// Theta/S/E verdicts plus complement and recovery data for one open dense U.
json verify_report(const FlowGraph &g, const InvariantSubset &u);

} // namespace bbflow::io
