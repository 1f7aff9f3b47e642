#pragma once

#include "fieldgraph/field.hpp"
#include "fieldgraph/perm_group.hpp"
#include "fieldgraph/weighted_graph.hpp"

#include <optional>

namespace fieldgraph {

// Canonical byte certificate: two colored weighted graphs have equal forms
// iff some color- and weight-preserving vertex bijection maps one to the
// other.  Bytes are stable across runs and platforms.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        return a.bytes <=> b.bytes;
    }
};

struct CanonicalResult {
    CanonicalForm form;
    std::vector<std::uint32_t> labeling; // vertex -> canonical position
    std::vector<Perm> generators;        // automorphisms discovered en route
};

// Individualization-refinement search over the weight matrix.
CanonicalResult canonical_search(const WeightedGraph& g);
CanonicalForm canonical_form(const WeightedGraph& g);

bool are_isomorphic(const WeightedGraph& a, const WeightedGraph& b);

// Vertex map from a to b preserving colors and weights, if any.
std::optional<Perm> find_isomorphism(const WeightedGraph& a, const WeightedGraph& b);

struct AutGroup {
    std::vector<Perm> generators;
    BigInt order;
    // Stabilizer chain metadata: base points with the orbit size at each
    // level (order == product of orbit sizes).
    std::vector<std::uint32_t> base;
    std::vector<std::uint64_t> chain_orbit_sizes;
    // Smallest member of each vertex's orbit under the full group.
    std::vector<std::uint32_t> vertex_orbits;
};

AutGroup automorphism_group(const WeightedGraph& g);

// The field-theoretic automorphisms of the undirected full graph of a
// model: the k Frobenius powers (identity first) and negation.  Every
// returned permutation has been checked against the default-mode weight
// matrix.
std::vector<Perm> known_automorphisms(const FieldModel& model);

// Reference implementations by exhaustive permutation search; n <= 10.
std::optional<Perm> brute_force_isomorphism(const WeightedGraph& a, const WeightedGraph& b);
BigInt brute_force_aut_order(const WeightedGraph& g);

} // namespace fieldgraph
