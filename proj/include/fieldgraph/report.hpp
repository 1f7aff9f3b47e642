#pragma once

#include "fieldgraph/census.hpp"
#include "fieldgraph/graph_algo.hpp"
#include "fieldgraph/spectral.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace fieldgraph {

// Everything the CLI prints about one model.
struct ModelReport {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint64_t n = 0;
    std::string polynomial;
    std::uint64_t additive_edges = 0;       // directed counts
    std::uint64_t multiplicative_edges = 0;
    GraphReport graph;
    FieldPropertyFlags flags;
    LowerBoundsReport spectral;
    std::string aut_order; // decimal
    std::size_t aut_generators = 0;
    std::string reciprocal_partner;
    bool isomorphic_to_partner = false;
};

// The cover connectivity flag is computed only when p^k <= cover_limit
// (the cover has p^k (p^k - 1) vertices).
ModelReport build_report(std::uint32_t p, const Poly& f, std::uint64_t cover_limit = 1024);

std::string report_text(const ModelReport& r);
std::string report_json(const ModelReport& r);

// Laplacian spectrum of the full undirected graph as
// "index,eigenvalue" CSV with 12 significant digits.
std::string spectrum_csv(std::uint32_t p, const Poly& f);

// Graphviz rendering of a graph variant with a deterministic circular
// layout (vertices in element-code order) and per-generator edge colors:
// orange shades for additive edges, blue shades for multiplicative ones.
// Output is byte-stable for fixed inputs.
std::string export_dot(std::uint32_t p, const Poly& f, Variant variant,
                       std::uint32_t gen_index = 0);

} // namespace fieldgraph
