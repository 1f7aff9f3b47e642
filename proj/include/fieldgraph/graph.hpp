#pragma once

#include "fieldgraph/field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fieldgraph {

enum class EdgeClass : std::uint8_t { additive, multiplicative };

// Which generator S[gen_index] produced an edge.
struct EdgeKind {
    EdgeClass cls = EdgeClass::additive;
    std::uint32_t gen_index = 0;

    friend bool operator==(const EdgeKind&, const EdgeKind&) = default;
};

struct Edge {
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    EdgeKind kind;

    friend bool operator==(const Edge&, const Edge&) = default;
};

enum class Variant : std::uint8_t { full, additive, multiplicative, core, cover };

// Edge-list multigraph over a fixed vertex set.  Edges is a multiset: the
// same (from, to, kind) triple may repeat, and for undirected graphs each
// entry is an unordered pair kept in whichever orientation it was built.
//
// Vertex meaning depends on the variant:
//   full / additive / core : vertex i is the field element with code i
//   multiplicative         : vertex i is the nonzero element with code i+1
//   cover                  : vertex i is the pair (y, z) with
//                            i == code(y) * (q-1) + (code(z) - 1)
struct FieldGraph {
    std::uint32_t n = 0;
    bool directed = true;
    Variant variant = Variant::full;
    std::uint32_t core_index = 0; // only meaningful for Variant::core
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::string modulus_text;
    std::vector<Edge> edges;
};

// The directed graph on F_{p^k} with, for every generator s = S[i], additive
// edges y -> y + s at every vertex and multiplicative edges y -> s*y at
// every y != 0.
FieldGraph build_digraph(const FieldModel& model);

// Forgets orientation; edge entries and multiplicities are preserved, so a
// pair joined by antiparallel directed edges has multiplicity 2.
FieldGraph to_undirected(const FieldGraph& g);

// Directed subgraphs of the full construction:
//   additive       : additive edges only, all q vertices
//   multiplicative : multiplicative edges only, restricted to the q-1
//                    nonzero vertices
//   core           : both edge families of the single generator S[i]
FieldGraph build_subgraph(const FieldModel& model, Variant which, std::uint32_t gen_index = 0);

// Directed cover on pairs (y, z) with z != 0: additive edges
// (y, z) -> (y + s, z) at every pair, multiplicative edges
// (y, z) -> (s*y, s*z) whenever y != 0.
FieldGraph build_cover(const FieldModel& model);

// Projection from cover vertices to base vertices: (y, z) |-> y.
std::vector<std::uint32_t> cover_projection(const FieldModel& model);

// Deck transformation F_a(y, z) = (y, a*z) as a permutation of the cover
// vertex set.  Requires a != 0.
std::vector<std::uint32_t> deck_transform(const FieldModel& model, std::uint64_t a);

// Checks that proj maps cover edges to base edges and restricts to a
// kind-preserving bijection between the edges at any cover vertex and the
// edges at its image.  Both graphs must share orientation and model data.
bool verify_covering(const FieldGraph& cover, const FieldGraph& base,
                     const std::vector<std::uint32_t>& proj);

// Sum of incident edge multiplicities per vertex.  For directed graphs
// returns out-degrees; to_undirected first for weighted degrees.  A loop
// contributes 2 to an undirected degree.
std::vector<std::uint64_t> weighted_degrees(const FieldGraph& g);

} // namespace fieldgraph
