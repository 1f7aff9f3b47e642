#pragma once

#include "fieldgraph/canonical.hpp"
#include "fieldgraph/weighted_graph.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fieldgraph {

// Raised when p^k exceeds the configured census limit.
class LimitExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CensusRow {
    std::string polynomial;
    std::uint32_t class_id = 0; // index of the first row in the same class
    BigInt aut_order;
    bool primitive = false;
    bool normal = false;
    std::string reciprocal_partner;
};

struct CacheIssue {
    std::string key;
    std::string detail;
};

struct CensusOptions {
    IsoMode mode = IsoMode::standard;
    std::string cache_dir;       // empty: use FIELDGRAPH_CACHE env var, if set
    bool verify_cache = false;   // recompute hits and flag mismatches
    std::uint64_t limit = 700;   // maximum p^k
    unsigned jobs = 0;           // 0: hardware concurrency
};

struct CensusResult {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    IsoMode mode = IsoMode::standard;
    std::vector<CensusRow> rows; // enumeration order (ascending coefficient code)
    std::vector<CacheIssue> cache_issues;
};

// Classifies every monic irreducible polynomial of degree k over F_p by the
// isomorphism type of its undirected graph, and attaches the automorphism
// group order and field-theoretic flags.  For k == 1 the degenerate
// modulus x is skipped.
CensusResult classify(std::uint32_t p, std::uint32_t k, const CensusOptions& options = {});

std::string census_csv(const CensusResult& result);
std::string census_markdown(const CensusResult& result);

// One cached canonicalization: the canonical form and |Aut| for a given
// (p, k, polynomial, mode).  Files are one-per-key under dir, written
// atomically; unreadable or mismatching entries count as misses.
struct CacheEntry {
    BigInt aut_order;
    CanonicalForm form;
};

std::string cache_key(std::uint32_t p, std::uint32_t k, const std::string& poly_text,
                      IsoMode mode);
std::string cache_path(const std::string& dir, const std::string& key);
bool cache_load(const std::string& dir, const std::string& key, CacheEntry& out);
void cache_store(const std::string& dir, const std::string& key, const CacheEntry& entry);

} // namespace fieldgraph
