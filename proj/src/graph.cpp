#include "fieldgraph/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace fieldgraph {

namespace {

FieldGraph graph_shell(const FieldModel& m, Variant variant, std::uint32_t n, bool directed) {
    FieldGraph g;
    g.n = n;
    g.directed = directed;
    g.variant = variant;
    g.p = m.p();
    g.k = m.k();
    g.modulus_text = m.modulus_text();
    return g;
}

void add_additive_edges(const FieldModel& m, std::uint32_t gen_index, FieldGraph& g) {
    std::uint64_t s = m.generators()[gen_index];
    for (std::uint64_t y = 0; y < m.q(); ++y) {
        g.edges.push_back(Edge{static_cast<std::uint32_t>(y),
                               static_cast<std::uint32_t>(m.add(y, s)),
                               EdgeKind{EdgeClass::additive, gen_index}});
    }
}

void add_multiplicative_edges(const FieldModel& m, std::uint32_t gen_index, FieldGraph& g,
                              std::uint32_t vertex_offset) {
    std::uint64_t s = m.generators()[gen_index];
    for (std::uint64_t y = 1; y < m.q(); ++y) {
        g.edges.push_back(Edge{static_cast<std::uint32_t>(y - vertex_offset),
                               static_cast<std::uint32_t>(m.mul(s, y) - vertex_offset),
                               EdgeKind{EdgeClass::multiplicative, gen_index}});
    }
}

} // namespace

FieldGraph build_digraph(const FieldModel& m) {
    FieldGraph g = graph_shell(m, Variant::full, static_cast<std::uint32_t>(m.q()), true);
    g.edges.reserve(static_cast<std::size_t>(m.k()) * (2 * m.q() - 1));
    for (std::uint32_t i = 0; i < m.k(); ++i) {
        add_additive_edges(m, i, g);
        add_multiplicative_edges(m, i, g, 0);
    }
    return g;
}

FieldGraph to_undirected(const FieldGraph& g) {
    FieldGraph u = g;
    u.directed = false;
    return u;
}

FieldGraph build_subgraph(const FieldModel& m, Variant which, std::uint32_t gen_index) {
    switch (which) {
    case Variant::full:
        return build_digraph(m);
    case Variant::cover:
        return build_cover(m);
    case Variant::additive: {
        FieldGraph g = graph_shell(m, Variant::additive, static_cast<std::uint32_t>(m.q()), true);
        for (std::uint32_t i = 0; i < m.k(); ++i) add_additive_edges(m, i, g);
        return g;
    }
    case Variant::multiplicative: {
        FieldGraph g = graph_shell(m, Variant::multiplicative,
                                   static_cast<std::uint32_t>(m.q() - 1), true);
        for (std::uint32_t i = 0; i < m.k(); ++i) add_multiplicative_edges(m, i, g, 1);
        return g;
    }
    case Variant::core: {
        if (gen_index >= m.k())
            throw std::invalid_argument("build_subgraph: generator index out of range");
        FieldGraph g = graph_shell(m, Variant::core, static_cast<std::uint32_t>(m.q()), true);
        g.core_index = gen_index;
        add_additive_edges(m, gen_index, g);
        add_multiplicative_edges(m, gen_index, g, 0);
        return g;
    }
    }
    throw std::invalid_argument("build_subgraph: unknown variant");
}

FieldGraph build_cover(const FieldModel& m) {
    const std::uint64_t q = m.q();
    const std::uint64_t nz = q - 1;
    FieldGraph g = graph_shell(m, Variant::cover, static_cast<std::uint32_t>(q * nz), true);
    g.edges.reserve(static_cast<std::size_t>(m.k()) * (q * nz + nz * nz));
    auto idx = [nz](std::uint64_t y, std::uint64_t z) {
        return static_cast<std::uint32_t>(y * nz + (z - 1));
    };
    for (std::uint32_t i = 0; i < m.k(); ++i) {
        std::uint64_t s = m.generators()[i];
        for (std::uint64_t y = 0; y < q; ++y) {
            std::uint64_t y2 = m.add(y, s);
            for (std::uint64_t z = 1; z < q; ++z)
                g.edges.push_back(Edge{idx(y, z), idx(y2, z), EdgeKind{EdgeClass::additive, i}});
        }
        for (std::uint64_t y = 1; y < q; ++y) {
            std::uint64_t y2 = m.mul(s, y);
            for (std::uint64_t z = 1; z < q; ++z) {
                g.edges.push_back(
                    Edge{idx(y, z), idx(y2, m.mul(s, z)), EdgeKind{EdgeClass::multiplicative, i}});
            }
        }
    }
    return g;
}

std::vector<std::uint32_t> cover_projection(const FieldModel& m) {
    const std::uint64_t nz = m.q() - 1;
    std::vector<std::uint32_t> proj(m.q() * nz);
    for (std::size_t i = 0; i < proj.size(); ++i)
        proj[i] = static_cast<std::uint32_t>(i / nz);
    return proj;
}

std::vector<std::uint32_t> deck_transform(const FieldModel& m, std::uint64_t a) {
    if (a == 0) throw std::invalid_argument("deck_transform: a must be nonzero");
    if (a >= m.q()) throw std::invalid_argument("deck_transform: element code out of range");
    const std::uint64_t q = m.q();
    const std::uint64_t nz = q - 1;
    std::vector<std::uint32_t> perm(q * nz);
    for (std::uint64_t y = 0; y < q; ++y) {
        for (std::uint64_t z = 1; z < q; ++z) {
            perm[y * nz + (z - 1)] =
                static_cast<std::uint32_t>(y * nz + (m.mul(a, z) - 1));
        }
    }
    return perm;
}

namespace {

using LocalEdge = std::tuple<std::uint32_t, std::uint8_t, std::uint32_t, bool>;

LocalEdge local_edge(std::uint32_t other, const EdgeKind& kind, bool loop) {
    return {other, static_cast<std::uint8_t>(kind.cls), kind.gen_index, loop};
}

} // namespace

bool verify_covering(const FieldGraph& cover, const FieldGraph& base,
                     const std::vector<std::uint32_t>& proj) {
    if (cover.directed != base.directed)
        throw std::invalid_argument("verify_covering: orientation mismatch");
    if (cover.p != base.p || cover.k != base.k || cover.modulus_text != base.modulus_text)
        throw std::invalid_argument("verify_covering: graphs come from different models");
    if (proj.size() != cover.n)
        throw std::invalid_argument("verify_covering: projection has wrong size");
    for (std::uint32_t v : proj)
        if (v >= base.n) throw std::invalid_argument("verify_covering: projection out of range");

    // Local picture at each base vertex.  For directed graphs out- and
    // in-edges are compared separately; undirected graphs use a single
    // incidence list with loops recorded once.
    std::vector<std::vector<LocalEdge>> base_out(base.n), base_in(base.n);
    for (const Edge& e : base.edges) {
        bool loop = e.from == e.to;
        if (base.directed) {
            base_out[e.from].push_back(local_edge(e.to, e.kind, loop));
            base_in[e.to].push_back(local_edge(e.from, e.kind, loop));
        } else if (loop) {
            base_out[e.from].push_back(local_edge(e.to, e.kind, true));
        } else {
            base_out[e.from].push_back(local_edge(e.to, e.kind, false));
            base_out[e.to].push_back(local_edge(e.from, e.kind, false));
        }
    }
    for (auto& v : base_out) std::sort(v.begin(), v.end());
    for (auto& v : base_in) std::sort(v.begin(), v.end());

    std::vector<std::vector<LocalEdge>> cov_out(cover.n), cov_in(cover.n);
    for (const Edge& e : cover.edges) {
        bool loop = e.from == e.to;
        std::uint32_t pf = proj[e.from], pt = proj[e.to];
        if (cover.directed) {
            cov_out[e.from].push_back(local_edge(pt, e.kind, loop));
            cov_in[e.to].push_back(local_edge(pf, e.kind, loop));
        } else if (loop) {
            cov_out[e.from].push_back(local_edge(pt, e.kind, true));
        } else {
            cov_out[e.from].push_back(local_edge(pt, e.kind, false));
            cov_out[e.to].push_back(local_edge(pf, e.kind, false));
        }
    }
    for (std::uint32_t v = 0; v < cover.n; ++v) {
        std::sort(cov_out[v].begin(), cov_out[v].end());
        if (cov_out[v] != base_out[proj[v]]) return false;
        if (cover.directed) {
            std::sort(cov_in[v].begin(), cov_in[v].end());
            if (cov_in[v] != base_in[proj[v]]) return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> weighted_degrees(const FieldGraph& g) {
    std::vector<std::uint64_t> deg(g.n, 0u);
    for (const Edge& e : g.edges) {
        if (g.directed) {
            ++deg[e.from];
        } else {
            ++deg[e.from];
            ++deg[e.to];
        }
    }
    return deg;
}

} // namespace fieldgraph

