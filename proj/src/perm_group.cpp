#include "fieldgraph/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fieldgraph {

Perm identity_perm(std::uint32_t n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0u);
    return p;
}

bool is_identity(const Perm& a) {
    for (std::uint32_t i = 0; i < a.size(); ++i)
        if (a[i] != i) return false;
    return true;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

Perm inverse(const Perm& a) {
    Perm r(a.size());
    for (std::uint32_t i = 0; i < a.size(); ++i) r[a[i]] = i;
    return r;
}

std::vector<std::uint32_t> point_orbits(std::uint32_t n, const std::vector<Perm>& gens) {
    std::vector<std::uint32_t> root(n);
    std::iota(root.begin(), root.end(), 0u);
    auto find = [&](std::uint32_t v) {
        while (root[v] != v) {
            root[v] = root[root[v]];
            v = root[v];
        }
        return v;
    };
    for (const Perm& g : gens) {
        for (std::uint32_t v = 0; v < n; ++v) {
            std::uint32_t a = find(v), b = find(g[v]);
            if (a != b) root[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<std::uint32_t> out(n);
    for (std::uint32_t v = 0; v < n; ++v) out[v] = find(v);
    return out;
}

PermGroup::PermGroup(std::uint32_t n) : n_(n) {}

std::pair<Perm, std::size_t> PermGroup::strip(Perm g, std::size_t from) const {
    for (std::size_t m = from; m < levels_.size(); ++m) {
        const Level& L = levels_[m];
        std::uint32_t x = g[L.beta];
        if (L.where[x] < 0) return {std::move(g), m};
        g = compose(g, inverse(L.transversal[x]));
    }
    return {std::move(g), levels_.size()};
}

void PermGroup::place(Perm h, std::size_t level) {
    if (level == levels_.size()) {
        std::uint32_t beta = 0;
        while (beta < n_ && h[beta] == beta) ++beta;
        Level L;
        L.beta = beta;
        L.orbit.assign(1, beta);
        L.where.assign(n_, -1);
        L.where[beta] = 0;
        L.transversal.assign(n_, Perm{});
        L.transversal[beta] = identity_perm(n_);
        levels_.push_back(std::move(L));
        dirty_.push_back(0);
    }
    for (const Perm& g : levels_[level].gens)
        if (g == h) return;
    levels_[level].gens.push_back(std::move(h));
    for (std::size_t m = 0; m <= level; ++m) dirty_[m] = 1;
}

void PermGroup::extend_orbit(std::size_t level) {
    Level& L = levels_[level];
    bool grown = true;
    while (grown) {
        grown = false;
        for (std::size_t m = level; m < levels_.size(); ++m) {
            for (const Perm& g : levels_[m].gens) {
                // Cursor-free rescan: orbit is append-only and small, so this
                // is cheap relative to sifting.
                for (std::size_t oi = 0; oi < L.orbit.size(); ++oi) {
                    std::uint32_t x = L.orbit[oi];
                    std::uint32_t z = g[x];
                    if (L.where[z] < 0) {
                        L.where[z] = static_cast<std::int64_t>(L.orbit.size());
                        L.transversal[z] = compose(L.transversal[x], g);
                        L.orbit.push_back(z);
                        grown = true;
                    }
                }
            }
        }
    }
}

void PermGroup::process_level(std::size_t level) {
    extend_orbit(level);
    // Schreier pairs (orbit point, visible generator).  place() may grow
    // levels_ or a gens vector, so nothing is held by reference across it;
    // loop bounds are re-read every iteration.
    for (std::size_t m = level; m < levels_.size(); ++m) {
        for (std::size_t gi = 0; gi < levels_[m].gens.size(); ++gi) {
            while (true) {
                std::size_t cur = levels_[level].pair_cursor[{m, gi}];
                if (cur >= levels_[level].orbit.size()) break;
                levels_[level].pair_cursor[{m, gi}] = cur + 1;
                std::uint32_t x = levels_[level].orbit[cur];
                Perm g = levels_[m].gens[gi];
                std::uint32_t z = g[x];
                Perm sg = compose(compose(levels_[level].transversal[x], g),
                                  inverse(levels_[level].transversal[z]));
                auto [h, j] = strip(std::move(sg), level + 1);
                if (!is_identity(h)) {
                    place(std::move(h), j);
                    extend_orbit(level);
                }
            }
        }
    }
}

void PermGroup::close() {
    while (true) {
        std::size_t i = levels_.size();
        while (i > 0 && !dirty_[i - 1]) --i;
        if (i == 0) break;
        dirty_[i - 1] = 0;
        process_level(i - 1);
    }
}

void PermGroup::add_generator(const Perm& g) {
    if (g.size() != n_) throw std::invalid_argument("PermGroup: generator has wrong degree");
    std::vector<std::uint8_t> hit(n_, 0);
    for (std::uint32_t v : g) {
        if (v >= n_ || hit[v]) throw std::invalid_argument("PermGroup: not a permutation");
        hit[v] = 1;
    }
    input_gens_.push_back(g);
    auto [h, j] = strip(g, 0);
    if (is_identity(h)) return;
    place(std::move(h), j);
    close();
}

BigInt PermGroup::order() const {
    BigInt o = 1;
    for (const Level& L : levels_) o *= static_cast<std::uint64_t>(L.orbit.size());
    return o;
}

bool PermGroup::contains(const Perm& g) const {
    if (g.size() != n_) return false;
    auto [h, j] = strip(g, 0);
    (void)j;
    return is_identity(h);
}

std::vector<std::uint32_t> PermGroup::base() const {
    std::vector<std::uint32_t> b;
    b.reserve(levels_.size());
    for (const Level& L : levels_) b.push_back(L.beta);
    return b;
}

std::vector<std::uint64_t> PermGroup::orbit_sizes() const {
    std::vector<std::uint64_t> s;
    s.reserve(levels_.size());
    for (const Level& L : levels_) s.push_back(L.orbit.size());
    return s;
}

} // namespace fieldgraph
