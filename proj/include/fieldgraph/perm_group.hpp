#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace fieldgraph {

using BigInt = boost::multiprecision::cpp_int;

// Permutation of {0, ..., n-1} as an image table.
using Perm = std::vector<std::uint32_t>;

Perm identity_perm(std::uint32_t n);
bool is_identity(const Perm& a);
// a then b: compose(a, b)[i] == b[a[i]].
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);

// Orbit partition of {0..n-1} under a set of permutations; returns the
// smallest member of each point's orbit.
std::vector<std::uint32_t> point_orbits(std::uint32_t n, const std::vector<Perm>& gens);

// Permutation group maintained as a stabilizer chain (incremental
// Schreier-Sims).  Generators can be added at any time; order() and
// contains() are exact.
class PermGroup {
public:
    explicit PermGroup(std::uint32_t n);

    std::uint32_t degree() const { return n_; }
    void add_generator(const Perm& g);

    BigInt order() const;
    bool contains(const Perm& g) const;
    const std::vector<Perm>& generators() const { return input_gens_; }
    std::vector<std::uint32_t> base() const;
    std::vector<std::uint64_t> orbit_sizes() const;

private:
    struct Level {
        std::uint32_t beta = 0;
        std::vector<Perm> gens;           // strong generators assigned here
        std::vector<std::uint32_t> orbit; // discovery order, append-only
        std::vector<std::int64_t> where;  // point -> orbit index, -1 outside
        std::vector<Perm> transversal;    // per point; u maps beta to the point
        // Schreier-pair progress per visible generator, keyed by the
        // generator's (owning level, index); orbits are append-only so a
        // cursor never has to move backwards.
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_cursor;
    };

    // Returns the sifted residue and the level where sifting stopped.
    // Generators visible at level i are those assigned to levels >= i.
    std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;
    void place(Perm h, std::size_t level);
    void extend_orbit(std::size_t level);
    void process_level(std::size_t level);
    void close();

    std::uint32_t n_;
    std::vector<Level> levels_;
    std::vector<Perm> input_gens_;
    std::vector<std::uint8_t> dirty_;
};

} // namespace fieldgraph
