#pragma once

#include <iosfwd>
#include <string>

#include "mci/graph.hpp"

namespace mci {

// Graph file format:
//   {"n":int, "names":[str]?, "directed":[[u,v],...],
//    "bidirected":[[u,v],...], "costs":[number|"inf",...]}
// The loader validates DAG-ness, symmetry and index ranges; the writer emits
// canonically sorted edge lists so save/load round-trips are stable.
CausalGraph load_graph(std::istream& in);
CausalGraph load_graph_file(const std::string& path);
void save_graph(const CausalGraph& g, std::ostream& out);
void save_graph_file(const CausalGraph& g, const std::string& path);

}  // namespace mci
