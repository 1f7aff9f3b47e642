#include "fieldgraph/weighted_graph.hpp"

#include <stdexcept>

namespace fieldgraph {

const char* iso_mode_name(IsoMode mode) {
    switch (mode) {
    case IsoMode::standard: return "default";
    case IsoMode::strict: return "strict";
    case IsoMode::simple: return "simple";
    }
    return "?";
}

IsoMode iso_mode_from_name(const std::string& name) {
    if (name == "default") return IsoMode::standard;
    if (name == "strict") return IsoMode::strict;
    if (name == "simple") return IsoMode::simple;
    throw std::invalid_argument("unknown isomorphism mode \"" + name + "\"");
}

WeightedGraph make_weighted(std::uint32_t n) {
    WeightedGraph g;
    g.n = n;
    g.w.assign(std::size_t(n) * n, 0u);
    g.colors.assign(n, 0u);
    return g;
}

WeightedGraph weighted_from_graph(const FieldGraph& g, IsoMode mode) {
    if (g.directed)
        throw std::invalid_argument("weighted_from_graph: input must be undirected");
    WeightedGraph out = make_weighted(g.n);
    // Count per-class multiplicities first, then condense.
    std::vector<std::uint32_t> add_count, mul_count;
    if (mode == IsoMode::strict) {
        add_count.assign(std::size_t(g.n) * g.n, 0u);
        mul_count.assign(std::size_t(g.n) * g.n, 0u);
    }
    for (const Edge& e : g.edges) {
        std::size_t ij = std::size_t(e.from) * g.n + e.to;
        std::size_t ji = std::size_t(e.to) * g.n + e.from;
        switch (mode) {
        case IsoMode::standard:
            ++out.w[ij];
            if (ij != ji) ++out.w[ji];
            break;
        case IsoMode::simple:
            out.w[ij] = 1;
            out.w[ji] = 1;
            break;
        case IsoMode::strict: {
            auto& cnt = e.kind.cls == EdgeClass::additive ? add_count : mul_count;
            ++cnt[ij];
            if (ij != ji) ++cnt[ji];
            break;
        }
        }
    }
    if (mode == IsoMode::strict) {
        for (std::size_t i = 0; i < out.w.size(); ++i)
            out.w[i] = add_count[i] * 16u + mul_count[i];
    }
    return out;
}

bool permutation_preserves(const WeightedGraph& g, const std::vector<std::uint32_t>& perm) {
    if (perm.size() != g.n) return false;
    std::vector<std::uint8_t> hit(g.n, 0);
    for (std::uint32_t v : perm) {
        if (v >= g.n || hit[v]) return false;
        hit[v] = 1;
    }
    for (std::uint32_t v = 0; v < g.n; ++v)
        if (g.colors[perm[v]] != g.colors[v]) return false;
    for (std::uint32_t i = 0; i < g.n; ++i)
        for (std::uint32_t j = i; j < g.n; ++j)
            if (g.at(perm[i], perm[j]) != g.at(i, j)) return false;
    return true;
}

WeightedGraph apply_permutation(const WeightedGraph& g, const std::vector<std::uint32_t>& perm) {
    if (perm.size() != g.n)
        throw std::invalid_argument("apply_permutation: size mismatch");
    WeightedGraph out = make_weighted(g.n);
    for (std::uint32_t v = 0; v < g.n; ++v) out.colors[perm[v]] = g.colors[v];
    for (std::uint32_t i = 0; i < g.n; ++i)
        for (std::uint32_t j = 0; j < g.n; ++j)
            out.w[std::size_t(perm[i]) * g.n + perm[j]] = g.at(i, j);
    return out;
}

} // namespace fieldgraph
