#include "fieldgraph/graph_algo.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace fieldgraph {

namespace {

// Deduplicated adjacency; if respect_direction is false edges are added in
// both directions.  Loops are dropped (they never shorten a path).
std::vector<std::vector<std::uint32_t>> adjacency(const FieldGraph& g, bool respect_direction) {
    std::vector<std::vector<std::uint32_t>> adj(g.n);
    for (const Edge& e : g.edges) {
        if (e.from == e.to) continue;
        adj[e.from].push_back(e.to);
        if (!respect_direction) adj[e.to].push_back(e.from);
    }
    for (auto& v : adj) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return adj;
}

// Renumber component ids so they appear in increasing order of the lowest
// vertex they contain.
std::vector<std::uint32_t> renumber(const std::vector<std::uint32_t>& raw) {
    std::vector<std::uint32_t> remap(raw.size(), UINT32_MAX);
    std::vector<std::uint32_t> out(raw.size());
    std::uint32_t next = 0;
    for (std::size_t v = 0; v < raw.size(); ++v) {
        if (remap[raw[v]] == UINT32_MAX) remap[raw[v]] = next++;
        out[v] = remap[raw[v]];
    }
    return out;
}

} // namespace

std::vector<std::uint32_t> components(const FieldGraph& g) {
    auto adj = adjacency(g, false);
    std::vector<std::uint32_t> comp(g.n, UINT32_MAX);
    std::uint32_t next = 0;
    std::vector<std::uint32_t> stack;
    for (std::uint32_t s = 0; s < g.n; ++s) {
        if (comp[s] != UINT32_MAX) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            std::uint32_t v = stack.back();
            stack.pop_back();
            for (std::uint32_t w : adj[v]) {
                if (comp[w] == UINT32_MAX) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

std::vector<std::uint32_t> strong_components(const FieldGraph& g) {
    if (!g.directed) return components(g);
    auto fwd = adjacency(g, true);
    std::vector<std::vector<std::uint32_t>> rev(g.n);
    for (std::uint32_t v = 0; v < g.n; ++v)
        for (std::uint32_t w : fwd[v]) rev[w].push_back(v);

    // Kosaraju, both passes iterative.
    std::vector<std::uint32_t> order;
    order.reserve(g.n);
    std::vector<std::uint8_t> seen(g.n, 0);
    std::vector<std::pair<std::uint32_t, std::size_t>> stack;
    for (std::uint32_t s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        stack.emplace_back(s, 0);
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            if (i < fwd[v].size()) {
                std::uint32_t w = fwd[v][i++];
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                order.push_back(v);
                stack.pop_back();
            }
        }
    }
    std::vector<std::uint32_t> comp(g.n, UINT32_MAX);
    std::uint32_t next = 0;
    std::vector<std::uint32_t> dfs;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (comp[*it] != UINT32_MAX) continue;
        comp[*it] = next;
        dfs.push_back(*it);
        while (!dfs.empty()) {
            std::uint32_t v = dfs.back();
            dfs.pop_back();
            for (std::uint32_t w : rev[v]) {
                if (comp[w] == UINT32_MAX) {
                    comp[w] = next;
                    dfs.push_back(w);
                }
            }
        }
        ++next;
    }
    return renumber(comp);
}

std::uint32_t component_count(const std::vector<std::uint32_t>& component_of) {
    std::uint32_t m = 0;
    for (std::uint32_t c : component_of) m = std::max(m, c + 1);
    return m;
}

int diameter(const FieldGraph& g) {
    if (g.n == 0) return 0;
    auto adj = adjacency(g, g.directed);
    std::vector<int> dist(g.n);
    std::vector<std::uint32_t> frontier, next;
    int best = 0;
    for (std::uint32_t s = 0; s < g.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        frontier.assign(1, s);
        int d = 0;
        std::uint32_t reached = 1;
        while (!frontier.empty()) {
            next.clear();
            ++d;
            for (std::uint32_t v : frontier) {
                for (std::uint32_t w : adj[v]) {
                    if (dist[w] < 0) {
                        dist[w] = d;
                        next.push_back(w);
                        ++reached;
                    }
                }
            }
            frontier.swap(next);
            if (!frontier.empty()) best = std::max(best, d);
        }
        if (reached != g.n)
            throw DisconnectedError(g.directed ? strong_components(g) : components(g));
    }
    return best;
}

int girth(const FieldGraph& g, bool simple_graph) {
    if (g.directed) throw std::invalid_argument("girth: input must be undirected");
    if (!simple_graph) {
        // A loop beats a doubled pair, so finish the scan before deciding.
        std::unordered_map<std::uint64_t, std::uint32_t> pair_count;
        bool doubled = false;
        for (const Edge& e : g.edges) {
            if (e.from == e.to) return 1;
            std::uint64_t a = std::min(e.from, e.to);
            std::uint64_t b = std::max(e.from, e.to);
            doubled = ++pair_count[a * g.n + b] >= 2 || doubled;
        }
        if (doubled) return 2;
    }
    // Underlying simple graph: shortest cycle via BFS from every vertex.
    auto adj = adjacency(g, false);
    int best = kInfiniteGirth;
    std::vector<int> dist(g.n);
    std::vector<std::uint32_t> parent(g.n);
    std::deque<std::uint32_t> queue;
    for (std::uint32_t s = 0; s < g.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = s;
        queue.assign(1, s);
        while (!queue.empty()) {
            std::uint32_t v = queue.front();
            queue.pop_front();
            if (2 * dist[v] >= best) break; // no shorter cycle reachable
            for (std::uint32_t w : adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (parent[v] != w) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

namespace {

std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> in_out_degrees(
    const FieldGraph& g) {
    std::vector<std::uint64_t> in(g.n, 0), out(g.n, 0);
    for (const Edge& e : g.edges) {
        ++out[e.from];
        ++in[e.to];
    }
    return {std::move(in), std::move(out)};
}

bool connected_ignoring_isolated(const FieldGraph& g, const std::vector<std::uint64_t>& touch,
                                 bool strongly) {
    auto comp = strongly ? strong_components(g) : components(g);
    std::uint32_t active_comp = UINT32_MAX;
    for (std::uint32_t v = 0; v < g.n; ++v) {
        if (touch[v] == 0) continue;
        if (active_comp == UINT32_MAX) active_comp = comp[v];
        else if (comp[v] != active_comp) return false;
    }
    return true;
}

} // namespace

bool eulerian_check(const FieldGraph& g) {
    if (g.directed) {
        auto [in, out] = in_out_degrees(g);
        for (std::uint32_t v = 0; v < g.n; ++v)
            if (in[v] != out[v]) return false;
        std::vector<std::uint64_t> touch(g.n);
        for (std::uint32_t v = 0; v < g.n; ++v) touch[v] = in[v] + out[v];
        return connected_ignoring_isolated(g, touch, true);
    }
    auto deg = weighted_degrees(g);
    for (std::uint64_t d : deg)
        if (d % 2 != 0) return false;
    return connected_ignoring_isolated(g, deg, false);
}

std::vector<std::size_t> eulerian_circuit(const FieldGraph& g) {
    if (!eulerian_check(g))
        throw std::invalid_argument("eulerian_circuit: graph has no Euler circuit");
    if (g.edges.empty()) return {};

    // Incidence lists of (edge index, other endpoint); undirected loops are
    // entered once.
    std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> inc(g.n);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        inc[e.from].emplace_back(i, e.to);
        if (!g.directed && e.from != e.to) inc[e.to].emplace_back(i, e.from);
    }
    std::uint32_t start = g.edges.front().from;

    std::vector<std::size_t> cursor(g.n, 0);
    std::vector<std::uint8_t> used(g.edges.size(), 0);
    std::vector<std::pair<std::uint32_t, std::size_t>> stack; // (vertex, edge taken to get here)
    std::vector<std::size_t> circuit;
    stack.emplace_back(start, SIZE_MAX);
    while (!stack.empty()) {
        std::uint32_t v = stack.back().first;
        std::size_t& c = cursor[v];
        while (c < inc[v].size() && used[inc[v][c].first]) ++c;
        if (c == inc[v].size()) {
            if (stack.back().second != SIZE_MAX) circuit.push_back(stack.back().second);
            stack.pop_back();
        } else {
            auto [idx, w] = inc[v][c];
            used[idx] = 1;
            stack.emplace_back(w, idx);
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    return circuit;
}

GraphReport analyze_full_graph(const FieldModel& m) {
    FieldGraph dig = build_digraph(m);
    FieldGraph und = to_undirected(dig);

    GraphReport r;
    r.connected = component_count(components(und)) == 1;
    r.strongly_connected = component_count(strong_components(dig)) == 1;
    if (r.connected) r.diameter = diameter(und);
    if (r.strongly_connected) r.directed_diameter = diameter(dig);
    const long long p = m.p(), k = m.k();
    r.diameter_bound = 2 * p * (2 * k + 1) - 2 * k - 4;
    r.directed_diameter_bound = (p - 1) * (k * k + 4 * k + 1) + k;
    r.girth = girth(und);
    r.eulerian_undirected = eulerian_check(und);
    r.eulerian_directed = eulerian_check(dig);
    return r;
}

FieldPropertyFlags field_property_flags(const FieldModel& m, bool include_cover) {
    FieldPropertyFlags f;
    f.additive_connected =
        component_count(components(build_subgraph(m, Variant::additive))) == 1;
    f.multiplicative_connected =
        component_count(components(build_subgraph(m, Variant::multiplicative))) == 1;
    f.normal = m.is_normal();
    f.primitive = m.is_primitive();
    if (include_cover) f.cover_connected = component_count(components(build_cover(m))) == 1;
    return f;
}

} // namespace fieldgraph
