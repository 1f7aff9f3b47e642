#include "fieldgraph/canonical.hpp"

#include "fieldgraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fieldgraph {

namespace {

constexpr std::uint64_t kLoopSentinel = 0xFFFFFFFFull;

void push_u32_le(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 24));
}

// Colorings are stored as cell offsets: colors[v] is the starting position
// of v's cell in the ordered partition, so a discrete coloring is exactly a
// vertex -> position labeling.  Refinement only ever splits a cell within
// its parent's position range, which keeps offsets stable along a search
// path.
class Searcher {
public:
    explicit Searcher(const WeightedGraph& g) : g_(g), n_(g.n) {
        adj_.assign(n_, {});
        loops_.assign(n_, 0);
        for (std::uint32_t i = 0; i < n_; ++i) {
            loops_[i] = g.at(i, i);
            for (std::uint32_t j = 0; j < n_; ++j)
                if (j != i && g.at(i, j) != 0) adj_[i].push_back(j);
        }
        sig_start_.assign(n_ + 1, 0);
        std::size_t total = n_; // one loop sentinel per vertex
        for (auto& a : adj_) total += a.size();
        sig_data_.assign(total, 0);
        for (std::uint32_t v = 0; v < n_; ++v)
            sig_start_[v + 1] = sig_start_[v] + adj_[v].size() + 1;
    }

    CanonicalResult run() {
        CanonicalResult result;
        if (n_ == 0) {
            result.form = serialize({});
            return result;
        }
        std::vector<std::uint32_t> colors = initial_colors();
        refine(colors);
        descend(colors);
        result.form = serialize(best_inv_);
        result.labeling.assign(n_, 0);
        for (std::uint32_t pos = 0; pos < n_; ++pos) result.labeling[best_inv_[pos]] = pos;
        result.generators = std::move(gens_);
        return result;
    }

private:
    std::vector<std::uint32_t> initial_colors() const {
        std::vector<std::uint32_t> order(n_);
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return g_.colors[a] < g_.colors[b];
        });
        std::vector<std::uint32_t> colors(n_, 0);
        std::uint32_t offset = 0;
        for (std::uint32_t i = 0; i < n_; ++i) {
            if (i > 0 && g_.colors[order[i]] != g_.colors[order[i - 1]]) offset = i;
            colors[order[i]] = offset;
        }
        return colors;
    }

    // One equitable-refinement fixpoint: re-sort all vertices by
    // (cell, multiset of (neighbor cell, weight), loop count) until the
    // number of cells stops growing.  Label-independent by construction.
    void refine(std::vector<std::uint32_t>& colors) {
        std::vector<std::uint32_t> order(n_);
        std::iota(order.begin(), order.end(), 0u);
        std::uint32_t cells = 0;
        {
            std::vector<std::uint8_t> seen(n_, 0);
            for (std::uint32_t c : colors)
                if (!seen[c]) {
                    seen[c] = 1;
                    ++cells;
                }
        }
        while (true) {
            for (std::uint32_t v = 0; v < n_; ++v) {
                std::uint64_t* sig = sig_data_.data() + sig_start_[v];
                std::size_t len = 0;
                for (std::uint32_t w : adj_[v])
                    sig[len++] = (static_cast<std::uint64_t>(colors[w]) << 32) |
                                 g_.at(v, w);
                std::sort(sig, sig + len);
                sig[len] = (kLoopSentinel << 32) | loops_[v];
            }
            auto key_less = [&](std::uint32_t a, std::uint32_t b) {
                if (colors[a] != colors[b]) return colors[a] < colors[b];
                const std::uint64_t* sa = sig_data_.data() + sig_start_[a];
                const std::uint64_t* sb = sig_data_.data() + sig_start_[b];
                std::size_t la = sig_start_[a + 1] - sig_start_[a];
                std::size_t lb = sig_start_[b + 1] - sig_start_[b];
                return std::lexicographical_compare(sa, sa + la, sb, sb + lb);
            };
            auto key_equal = [&](std::uint32_t a, std::uint32_t b) {
                if (colors[a] != colors[b]) return false;
                std::size_t la = sig_start_[a + 1] - sig_start_[a];
                std::size_t lb = sig_start_[b + 1] - sig_start_[b];
                if (la != lb) return false;
                const std::uint64_t* sa = sig_data_.data() + sig_start_[a];
                const std::uint64_t* sb = sig_data_.data() + sig_start_[b];
                return std::equal(sa, sa + la, sb);
            };
            std::sort(order.begin(), order.end(), key_less);
            std::uint32_t new_cells = 1;
            std::vector<std::uint32_t> next(n_);
            std::uint32_t offset = 0;
            next[order[0]] = 0;
            for (std::uint32_t i = 1; i < n_; ++i) {
                if (!key_equal(order[i], order[i - 1])) {
                    offset = i;
                    ++new_cells;
                }
                next[order[i]] = offset;
            }
            colors.swap(next);
            if (new_cells == cells) break;
            cells = new_cells;
        }
    }

    void descend(const std::vector<std::uint32_t>& colors) {
        // Find the first smallest non-singleton cell.
        std::vector<std::uint32_t> cell_size(n_, 0);
        for (std::uint32_t c : colors) ++cell_size[c];
        std::uint32_t target = n_, target_size = n_ + 1;
        for (std::uint32_t off = 0; off < n_; ++off) {
            if (cell_size[off] >= 2 && cell_size[off] < target_size) {
                target = off;
                target_size = cell_size[off];
            }
        }
        if (target == n_) {
            process_leaf(colors);
            return;
        }
        std::vector<std::uint32_t> members;
        for (std::uint32_t v = 0; v < n_; ++v)
            if (colors[v] == target) members.push_back(v);

        std::vector<std::uint32_t> explored;
        std::size_t gens_seen = SIZE_MAX;
        std::vector<std::uint32_t> uf;
        auto uf_find = [&](std::uint32_t v) {
            while (uf[v] != v) {
                uf[v] = uf[uf[v]];
                v = uf[v];
            }
            return v;
        };
        for (std::uint32_t v : members) {
            if (!explored.empty()) {
                if (gens_seen != gens_.size()) {
                    // Orbits of the subgroup of discovered automorphisms
                    // fixing the current prefix pointwise.
                    uf.resize(n_);
                    std::iota(uf.begin(), uf.end(), 0u);
                    for (const Perm& gen : gens_) {
                        bool fixes = true;
                        for (std::uint32_t u : prefix_)
                            if (gen[u] != u) {
                                fixes = false;
                                break;
                            }
                        if (!fixes) continue;
                        for (std::uint32_t u = 0; u < n_; ++u) {
                            std::uint32_t a = uf_find(u), b = uf_find(gen[u]);
                            if (a != b) uf[std::max(a, b)] = std::min(a, b);
                        }
                    }
                    gens_seen = gens_.size();
                }
                bool pruned = false;
                for (std::uint32_t u : explored)
                    if (uf_find(u) == uf_find(v)) {
                        pruned = true;
                        break;
                    }
                if (pruned) continue;
            }
            std::vector<std::uint32_t> child = colors;
            for (std::uint32_t w : members)
                if (w != v) ++child[w];
            refine(child);
            prefix_.push_back(v);
            descend(child);
            prefix_.pop_back();
            explored.push_back(v);
        }
    }

    void process_leaf(const std::vector<std::uint32_t>& colors) {
        std::vector<std::uint32_t> inv(n_);
        for (std::uint32_t v = 0; v < n_; ++v) inv[colors[v]] = v;
        if (!have_first_) {
            first_inv_ = inv;
            best_inv_ = std::move(inv);
            have_first_ = true;
            return;
        }
        int c = compare_leaves(inv, first_inv_);
        if (c == 0) {
            record_automorphism(inv, first_inv_);
            return;
        }
        c = compare_leaves(inv, best_inv_);
        if (c == 0) {
            record_automorphism(inv, best_inv_);
            return;
        }
        if (c < 0) best_inv_ = std::move(inv);
    }

    // Lexicographic comparison of the relabeled weight matrices of two
    // discrete labelings (certificates), with early exit.
    int compare_leaves(const std::vector<std::uint32_t>& inv_a,
                       const std::vector<std::uint32_t>& inv_b) const {
        for (std::uint32_t i = 0; i < n_; ++i) {
            const std::uint32_t a_i = inv_a[i], b_i = inv_b[i];
            for (std::uint32_t j = 0; j < n_; ++j) {
                std::uint32_t wa = g_.at(a_i, inv_a[j]);
                std::uint32_t wb = g_.at(b_i, inv_b[j]);
                if (wa != wb) return wa < wb ? -1 : 1;
            }
        }
        return 0;
    }

    void record_automorphism(const std::vector<std::uint32_t>& inv_new,
                             const std::vector<std::uint32_t>& inv_ref) {
        Perm gamma(n_);
        for (std::uint32_t pos = 0; pos < n_; ++pos) gamma[inv_new[pos]] = inv_ref[pos];
        if (is_identity(gamma)) return;
        for (const Perm& g : gens_)
            if (g == gamma) return;
        if (!permutation_preserves(g_, gamma))
            throw std::logic_error("canonical_search: certificate collision is not an automorphism");
        gens_.push_back(std::move(gamma));
    }

    CanonicalForm serialize(const std::vector<std::uint32_t>& inv) const {
        std::uint32_t max_w = 0;
        for (std::uint32_t w : g_.w) max_w = std::max(max_w, w);
        std::uint8_t width = max_w <= 0xFF ? 1 : 4;
        CanonicalForm form;
        form.bytes.reserve(9 + 4 * n_ + std::size_t(width) * n_ * n_);
        form.bytes.insert(form.bytes.end(), {'W', 'G', 'C', '1'});
        form.bytes.push_back(width);
        push_u32_le(form.bytes, n_);
        for (std::uint32_t pos = 0; pos < n_; ++pos)
            push_u32_le(form.bytes, g_.colors[inv[pos]]);
        for (std::uint32_t i = 0; i < n_; ++i) {
            for (std::uint32_t j = 0; j < n_; ++j) {
                std::uint32_t w = g_.at(inv[i], inv[j]);
                if (width == 1) form.bytes.push_back(static_cast<std::uint8_t>(w));
                else push_u32_le(form.bytes, w);
            }
        }
        return form;
    }

    const WeightedGraph& g_;
    std::uint32_t n_;
    std::vector<std::vector<std::uint32_t>> adj_;
    std::vector<std::uint32_t> loops_;
    std::vector<std::size_t> sig_start_;
    std::vector<std::uint64_t> sig_data_;

    std::vector<std::uint32_t> prefix_;
    std::vector<Perm> gens_;
    std::vector<std::uint32_t> first_inv_, best_inv_;
    bool have_first_ = false;
};

} // namespace

CanonicalResult canonical_search(const WeightedGraph& g) {
    if (g.colors.size() != g.n || g.w.size() != std::size_t(g.n) * g.n)
        throw std::invalid_argument("canonical_search: malformed weighted graph");
    for (std::uint32_t i = 0; i < g.n; ++i)
        for (std::uint32_t j = i + 1; j < g.n; ++j)
            if (g.at(i, j) != g.at(j, i))
                throw std::invalid_argument("canonical_search: weight matrix is not symmetric");
    Searcher s(g);
    return s.run();
}

CanonicalForm canonical_form(const WeightedGraph& g) { return canonical_search(g).form; }

bool are_isomorphic(const WeightedGraph& a, const WeightedGraph& b) {
    return canonical_form(a) == canonical_form(b);
}

std::optional<Perm> find_isomorphism(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.n != b.n) return std::nullopt;
    CanonicalResult ra = canonical_search(a);
    CanonicalResult rb = canonical_search(b);
    if (ra.form != rb.form) return std::nullopt;
    std::vector<std::uint32_t> inv_b(b.n);
    for (std::uint32_t v = 0; v < b.n; ++v) inv_b[rb.labeling[v]] = v;
    Perm sigma(a.n);
    for (std::uint32_t v = 0; v < a.n; ++v) sigma[v] = inv_b[ra.labeling[v]];
    // Cross-check the map before handing it out.
    for (std::uint32_t v = 0; v < a.n; ++v)
        if (a.colors[v] != b.colors[sigma[v]])
            throw std::logic_error("find_isomorphism: color mismatch in computed map");
    for (std::uint32_t i = 0; i < a.n; ++i)
        for (std::uint32_t j = 0; j < a.n; ++j)
            if (a.at(i, j) != b.at(sigma[i], sigma[j]))
                throw std::logic_error("find_isomorphism: weight mismatch in computed map");
    return sigma;
}

AutGroup automorphism_group(const WeightedGraph& g) {
    CanonicalResult r = canonical_search(g);
    PermGroup group(g.n);
    for (const Perm& gen : r.generators) group.add_generator(gen);
    AutGroup out;
    out.generators = std::move(r.generators);
    out.order = group.order();
    out.base = group.base();
    out.chain_orbit_sizes = group.orbit_sizes();
    out.vertex_orbits = point_orbits(g.n, out.generators);
    return out;
}

std::vector<Perm> known_automorphisms(const FieldModel& m) {
    WeightedGraph wg = weighted_from_graph(to_undirected(build_digraph(m)));
    std::uint32_t n = static_cast<std::uint32_t>(m.q());
    std::vector<Perm> out;
    Perm frob(n);
    for (std::uint32_t v = 0; v < n; ++v) frob[v] = static_cast<std::uint32_t>(m.frobenius(v));
    Perm cur = identity_perm(n);
    for (std::uint32_t j = 0; j < m.k(); ++j) {
        out.push_back(cur);
        cur = compose(cur, frob);
    }
    Perm negation(n);
    for (std::uint32_t v = 0; v < n; ++v) negation[v] = static_cast<std::uint32_t>(m.neg(v));
    out.push_back(std::move(negation));
    for (const Perm& p : out)
        if (!permutation_preserves(wg, p))
            throw std::logic_error("known_automorphisms: map does not preserve the weight matrix");
    return out;
}

std::optional<Perm> brute_force_isomorphism(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.n > 10 || b.n > 10)
        throw std::invalid_argument("brute_force_isomorphism: n must be <= 10");
    if (a.n != b.n) return std::nullopt;
    Perm sigma = identity_perm(a.n);
    do {
        bool ok = true;
        for (std::uint32_t v = 0; v < a.n && ok; ++v)
            if (a.colors[v] != b.colors[sigma[v]]) ok = false;
        for (std::uint32_t i = 0; i < a.n && ok; ++i)
            for (std::uint32_t j = i; j < a.n && ok; ++j)
                if (a.at(i, j) != b.at(sigma[i], sigma[j])) ok = false;
        if (ok) return sigma;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return std::nullopt;
}

BigInt brute_force_aut_order(const WeightedGraph& g) {
    if (g.n > 10) throw std::invalid_argument("brute_force_aut_order: n must be <= 10");
    if (g.n == 0) return 1;
    BigInt count = 0;
    Perm sigma = identity_perm(g.n);
    do {
        if (permutation_preserves(g, sigma)) ++count;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return count;
}

} // namespace fieldgraph
