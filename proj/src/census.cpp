#include "fieldgraph/census.hpp"

#include "fieldgraph/field.hpp"
#include "fieldgraph/graph.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace fieldgraph {

namespace {

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string to_hex(const std::vector<std::uint8_t>& bytes) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xF]);
    }
    return out;
}

bool from_hex(const std::string& hex, std::vector<std::uint8_t>& out) {
    if (hex.size() % 2 != 0) return false;
    out.clear();
    out.reserve(hex.size() / 2);
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        return -1;
    };
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
        if (hi < 0 || lo < 0) return false;
        out.push_back(static_cast<std::uint8_t>(hi * 16 + lo));
    }
    return true;
}

constexpr const char* kCacheMagic = "fieldgraph-cache v1";

} // namespace

std::string cache_key(std::uint32_t p, std::uint32_t k, const std::string& poly_text,
                      IsoMode mode) {
    std::ostringstream os;
    os << "v1|p=" << p << "|k=" << k << "|f=" << poly_text << "|mode=" << iso_mode_name(mode);
    return os.str();
}

std::string cache_path(const std::string& dir, const std::string& key) {
    char name[32];
    std::snprintf(name, sizeof(name), "%016llx.entry",
                  static_cast<unsigned long long>(fnv1a64(key)));
    return (std::filesystem::path(dir) / name).string();
}

bool cache_load(const std::string& dir, const std::string& key, CacheEntry& out) {
    std::ifstream in(cache_path(dir, key));
    if (!in) return false;
    std::string magic, stored_key, order_line, form_line;
    if (!std::getline(in, magic) || magic != kCacheMagic) return false;
    if (!std::getline(in, stored_key) || stored_key.rfind("key: ", 0) != 0) return false;
    if (stored_key.substr(5) != key) return false; // hash collision or stale file
    if (!std::getline(in, order_line) || order_line.rfind("aut_order: ", 0) != 0) return false;
    if (!std::getline(in, form_line) || form_line.rfind("form: ", 0) != 0) return false;
    std::string order_text = order_line.substr(11);
    if (order_text.empty() ||
        order_text.find_first_not_of("0123456789") != std::string::npos)
        return false;
    CacheEntry entry;
    entry.aut_order = BigInt(order_text);
    if (!from_hex(form_line.substr(6), entry.form.bytes)) return false;
    out = std::move(entry);
    return true;
}

void cache_store(const std::string& dir, const std::string& key, const CacheEntry& entry) {
    std::filesystem::create_directories(dir);
    std::string path = cache_path(dir, key);
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cache_store: cannot write " + tmp);
        out << kCacheMagic << '\n';
        out << "key: " << key << '\n';
        out << "aut_order: " << entry.aut_order.str() << '\n';
        out << "form: " << to_hex(entry.form.bytes) << '\n';
        if (!out) throw std::runtime_error("cache_store: write failed for " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

CensusResult classify(std::uint32_t p, std::uint32_t k, const CensusOptions& options) {
    if (!is_prime(p)) throw std::invalid_argument("classify: p must be prime");
    if (k < 1) throw std::invalid_argument("classify: k must be >= 1");

    // Overflow-safe p^k against the limit.
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (q > options.limit / p + 1) {
            q = options.limit + 1;
            break;
        }
        q *= p;
    }
    if (q > options.limit) {
        throw LimitExceededError("classify: p^k exceeds the size limit " +
                                 std::to_string(options.limit) +
                                 " (raise it with --limit if intended)");
    }

    std::string cache_dir = options.cache_dir;
    if (cache_dir.empty()) {
        if (const char* env = std::getenv("FIELDGRAPH_CACHE")) cache_dir = env;
    }

    std::vector<Poly> polys = enumerate_irreducibles(p, k);
    if (k == 1) {
        std::erase_if(polys, [](const Poly& f) { return f.coeff(0) == 0; }); // skip f == x
    }

    CensusResult result;
    result.p = p;
    result.k = k;
    result.mode = options.mode;
    result.rows.resize(polys.size());
    std::vector<CanonicalForm> forms(polys.size());

    std::mutex issue_mutex;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&]() {
        while (!failed.load(std::memory_order_relaxed)) {
            std::size_t i = next.fetch_add(1);
            if (i >= polys.size()) break;
            try {
                const Poly& f = polys[i];
                std::string text = format_poly(f);
                FieldModel model(p, f);

                CensusRow row;
                row.polynomial = text;
                row.primitive = model.is_primitive();
                row.normal = model.is_normal();
                row.reciprocal_partner = format_poly(reciprocal(f));

                std::string key = cache_key(p, k, text, options.mode);
                CacheEntry entry;
                bool hit = !cache_dir.empty() && cache_load(cache_dir, key, entry);
                if (!hit || options.verify_cache) {
                    WeightedGraph wg =
                        weighted_from_graph(to_undirected(build_digraph(model)), options.mode);
                    CanonicalResult cr = canonical_search(wg);
                    PermGroup group(wg.n);
                    for (const Perm& gen : cr.generators) group.add_generator(gen);
                    CacheEntry fresh{group.order(), std::move(cr.form)};
                    if (hit && options.verify_cache) {
                        if (fresh.aut_order != entry.aut_order || fresh.form != entry.form) {
                            std::lock_guard<std::mutex> lock(issue_mutex);
                            result.cache_issues.push_back(
                                {key, "cached entry disagrees with recomputation"});
                        }
                    }
                    if (!hit && !cache_dir.empty()) cache_store(cache_dir, key, fresh);
                    entry = std::move(fresh);
                }
                row.aut_order = entry.aut_order;
                forms[i] = std::move(entry.form);
                result.rows[i] = std::move(row);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        }
    };

    unsigned jobs = options.jobs ? options.jobs : std::thread::hardware_concurrency();
    if (jobs <= 1 || polys.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(jobs, polys.size()); ++t)
            pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    // Class id: index of the first polynomial with the same canonical form.
    std::map<CanonicalForm, std::uint32_t> first_seen;
    for (std::uint32_t i = 0; i < forms.size(); ++i) {
        auto [it, inserted] = first_seen.emplace(std::move(forms[i]), i);
        result.rows[i].class_id = it->second;
    }
    return result;
}

std::string census_csv(const CensusResult& result) {
    std::ostringstream os;
    os << "p,k,polynomial,class_id,aut_order,primitive,normal,reciprocal_partner\n";
    for (const CensusRow& r : result.rows) {
        os << result.p << ',' << result.k << ',' << r.polynomial << ',' << r.class_id << ','
           << r.aut_order.str() << ',' << (r.primitive ? "true" : "false") << ','
           << (r.normal ? "true" : "false") << ',' << r.reciprocal_partner << '\n';
    }
    return os.str();
}

std::string census_markdown(const CensusResult& result) {
    std::ostringstream os;
    os << "## F_" << result.p << "^" << result.k << " (mode: " << iso_mode_name(result.mode)
       << ")\n\n";
    os << "| class | polynomials | aut_order | primitive | normal |\n";
    os << "|---|---|---|---|---|\n";
    std::map<std::uint32_t, std::vector<std::uint32_t>> classes;
    for (std::uint32_t i = 0; i < result.rows.size(); ++i)
        classes[result.rows[i].class_id].push_back(i);
    auto flag_text = [&](const std::vector<std::uint32_t>& members, bool CensusRow::* flag) {
        bool first = result.rows[members.front()].*flag;
        for (std::uint32_t i : members)
            if (result.rows[i].*flag != first) return std::string("mixed");
        return std::string(first ? "yes" : "no");
    };
    for (const auto& [cid, members] : classes) {
        os << "| " << cid << " | ";
        for (std::size_t j = 0; j < members.size(); ++j) {
            if (j > 0) os << ", ";
            os << result.rows[members[j]].polynomial;
        }
        os << " | " << result.rows[members.front()].aut_order.str() << " | "
           << flag_text(members, &CensusRow::primitive) << " | "
           << flag_text(members, &CensusRow::normal) << " |\n";
    }
    return os.str();
}

} // namespace fieldgraph
