#pragma once

#include "fieldgraph/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fieldgraph {

// How a multigraph is condensed into a weight matrix before isomorphism
// testing.
//
//   standard ("default"): weight = total multiplicity, edge classes mixed
//   strict              : weight = additive_multiplicity * 16 +
//                         multiplicative_multiplicity, so isomorphisms must
//                         preserve the class split (multiplicities never
//                         exceed 4, so the packing is lossless)
//   simple              : weight = 0/1
enum class IsoMode : std::uint8_t { standard, strict, simple };

const char* iso_mode_name(IsoMode mode);
IsoMode iso_mode_from_name(const std::string& name); // throws on unknown name

// Vertex-colored symmetric weight matrix.  colors[] is the initial
// partition respected by isomorphisms; weights are arbitrary small
// integers with w(v, v) counting loops.
struct WeightedGraph {
    std::uint32_t n = 0;
    std::vector<std::uint32_t> w;      // n*n, symmetric
    std::vector<std::uint32_t> colors; // size n

    std::uint32_t& at(std::uint32_t i, std::uint32_t j) { return w[std::size_t(i) * n + j]; }
    std::uint32_t at(std::uint32_t i, std::uint32_t j) const { return w[std::size_t(i) * n + j]; }
};

WeightedGraph make_weighted(std::uint32_t n);

// Collapses an undirected multigraph to a WeightedGraph under the given
// mode.  Throws std::invalid_argument on directed input.
WeightedGraph weighted_from_graph(const FieldGraph& g, IsoMode mode = IsoMode::standard);

// Does perm preserve colors and weights?  (perm maps vertex -> image.)
bool permutation_preserves(const WeightedGraph& g, const std::vector<std::uint32_t>& perm);

// Relabeled copy: vertex v of g becomes vertex perm[v].
WeightedGraph apply_permutation(const WeightedGraph& g, const std::vector<std::uint32_t>& perm);

} // namespace fieldgraph
