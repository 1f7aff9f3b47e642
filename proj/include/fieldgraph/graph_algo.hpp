#pragma once

#include "fieldgraph/graph.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fieldgraph {

// Thrown by diameter() when the graph is not (strongly) connected; carries
// the offending component partition.
class DisconnectedError : public std::runtime_error {
public:
    explicit DisconnectedError(std::vector<std::uint32_t> component_of)
        : std::runtime_error("graph is not connected"), component_of_(std::move(component_of)) {}
    const std::vector<std::uint32_t>& component_of() const { return component_of_; }

private:
    std::vector<std::uint32_t> component_of_;
};

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

// Component id per vertex (ids are 0-based, assigned in order of the lowest
// vertex contained).  Orientation is ignored.
std::vector<std::uint32_t> components(const FieldGraph& g);

// Strongly connected component id per vertex, same id convention.
std::vector<std::uint32_t> strong_components(const FieldGraph& g);

std::uint32_t component_count(const std::vector<std::uint32_t>& component_of);

// Longest shortest path, by BFS from every vertex; parallel edges count as
// one step.  Directed graphs use directed reachability.  Throws
// DisconnectedError when some pair has no path.
int diameter(const FieldGraph& g);

// Shortest cycle length in an undirected multigraph: a loop gives 1, a
// multiplicity >= 2 pair gives 2, otherwise the shortest simple cycle.
// With simple_graph set, loops and multiplicities are ignored and only
// cycles of length >= 3 count.  Returns kInfiniteGirth for forests.
// Throws std::invalid_argument on directed input.
int girth(const FieldGraph& g, bool simple_graph = false);

// Undirected: connected up to isolated vertices and every weighted degree
// even.  Directed: strongly connected up to isolated vertices and
// in-degree == out-degree everywhere.
bool eulerian_check(const FieldGraph& g);

// Closed trail using every edge exactly once, as edge indices into
// g.edges.  Throws std::invalid_argument if eulerian_check fails.
std::vector<std::size_t> eulerian_circuit(const FieldGraph& g);

struct GraphReport {
    bool connected = false;
    bool strongly_connected = false;
    int diameter = -1;
    int directed_diameter = -1;
    long long diameter_bound = 0;          // 2p(2k+1) - 2k - 4
    long long directed_diameter_bound = 0; // (p-1)(k^2+4k+1) + k
    int girth = -1;
    bool eulerian_undirected = false;
    bool eulerian_directed = false;
};

// Structural facts about the full graph of a model, undirected and directed.
GraphReport analyze_full_graph(const FieldModel& model);

// The five connectivity/algebra flags, each computed independently.  The
// theorems say additive_connected == normal, multiplicative_connected ==
// primitive == cover_connected.  cover_connected is skipped (left empty)
// when include_cover is false; the cover has q(q-1) vertices.
struct FieldPropertyFlags {
    bool additive_connected = false;
    bool multiplicative_connected = false;
    bool normal = false;
    bool primitive = false;
    std::optional<bool> cover_connected;
};

FieldPropertyFlags field_property_flags(const FieldModel& model, bool include_cover = true);

} // namespace fieldgraph
