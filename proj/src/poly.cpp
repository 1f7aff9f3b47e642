#include "fieldgraph/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace fieldgraph {

namespace {

void trim_zeros(std::vector<std::uint32_t>& c) {
    while (!c.empty() && c.back() == 0u) c.pop_back();
}

void require_prime(std::uint32_t p, const char* who) {
    if (!is_prime(p)) {
        throw std::invalid_argument(std::string(who) + ": modulus " + std::to_string(p) +
                                    " is not prime");
    }
}

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
    throw std::invalid_argument("parse_poly: " + why + " in \"" + std::string(text) + "\"");
}

// Parses one additive term of the form "c", "x", "x^e", "c*x^e" or "cx^e"
// and accumulates it into acc (indexed by exponent).
void parse_term(std::string_view term, std::string_view whole, std::uint32_t p,
                std::vector<std::uint32_t>& acc) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < term.size() && std::isspace(static_cast<unsigned char>(term[i]))) ++i;
    };
    auto read_digits = [&](std::uint64_t cap, std::uint64_t mod) -> std::pair<bool, std::uint64_t> {
        if (i >= term.size() || !std::isdigit(static_cast<unsigned char>(term[i])))
            return {false, 0};
        std::uint64_t v = 0;
        while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) {
            v = v * 10 + static_cast<std::uint64_t>(term[i] - '0');
            if (mod) v %= mod;
            if (v > cap) parse_fail(whole, "number too large");
            ++i;
        }
        return {true, v};
    };

    skip_ws();
    auto [has_coeff, coeff] = read_digits(/*cap=*/~0ull, /*mod=*/p);
    skip_ws();
    bool star = false;
    if (i < term.size() && term[i] == '*') {
        if (!has_coeff) parse_fail(whole, "'*' without a coefficient");
        star = true;
        ++i;
        skip_ws();
    }
    std::uint64_t exponent = 0;
    bool has_var = false;
    if (i < term.size() && term[i] == 'x') {
        has_var = true;
        ++i;
        if (i < term.size() && term[i] == '^') {
            ++i;
            auto [ok, e] = read_digits(/*cap=*/10000, /*mod=*/0);
            if (!ok) parse_fail(whole, "missing exponent after '^'");
            exponent = e;
        } else {
            exponent = 1;
        }
    }
    skip_ws();
    if (i != term.size()) parse_fail(whole, "unexpected character");
    if (!has_coeff && !has_var) parse_fail(whole, "empty term");
    if (star && !has_var) parse_fail(whole, "'*' without a variable");

    std::uint32_t c = has_coeff ? static_cast<std::uint32_t>(coeff % p) : 1u;
    if (acc.size() <= exponent) acc.resize(exponent + 1, 0u);
    acc[exponent] = (acc[exponent] + c) % p;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    a %= p;
    if (a == 0) throw std::invalid_argument("mod_inverse: zero has no inverse");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    // r == gcd(a, p) == 1 because p is prime and a != 0.
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

Poly make_poly(std::uint32_t p, std::vector<std::uint32_t> coeffs) {
    require_prime(p, "make_poly");
    for (auto& c : coeffs) c %= p;
    trim_zeros(coeffs);
    return Poly{p, std::move(coeffs)};
}

Poly parse_poly(std::string_view text, std::uint32_t p) {
    require_prime(p, "parse_poly");
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
        parse_fail(text, "empty input");

    std::vector<std::uint32_t> acc;
    if (text.find(',') != std::string_view::npos) {
        // Coefficient list, constant term first.
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t comma = text.find(',', start);
            std::string_view item = text.substr(
                start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            std::size_t i = 0;
            while (i < item.size() && std::isspace(static_cast<unsigned char>(item[i]))) ++i;
            std::size_t j = item.size();
            while (j > i && std::isspace(static_cast<unsigned char>(item[j - 1]))) --j;
            item = item.substr(i, j - i);
            if (item.empty()) parse_fail(text, "empty coefficient");
            std::uint64_t v = 0;
            for (char ch : item) {
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    parse_fail(text, "coefficient is not a number");
                v = (v * 10 + static_cast<std::uint64_t>(ch - '0')) % p;
            }
            acc.push_back(static_cast<std::uint32_t>(v));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    } else {
        std::size_t start = 0;
        while (true) {
            std::size_t plus = text.find('+', start);
            std::string_view term = text.substr(
                start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
            parse_term(term, text, p, acc);
            if (plus == std::string_view::npos) break;
            start = plus + 1;
        }
    }
    trim_zeros(acc);
    return Poly{p, std::move(acc)};
}

std::string format_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        std::uint32_t c = f.coeffs[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) {
                out += std::to_string(c);
                out += '*';
            }
            out += 'x';
            if (i > 1) {
                out += '^';
                out += std::to_string(i);
            }
        }
    }
    return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
    std::vector<std::uint32_t> c(std::max(a.coeffs.size(), b.coeffs.size()), 0u);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + b.coeff(i)) % a.p;
    trim_zeros(c);
    return Poly{a.p, std::move(c)};
}

Poly poly_sub(const Poly& a, const Poly& b) {
    std::vector<std::uint32_t> c(std::max(a.coeffs.size(), b.coeffs.size()), 0u);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + a.p - b.coeff(i)) % a.p;
    trim_zeros(c);
    return Poly{a.p, std::move(c)};
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{a.p, {}};
    std::vector<std::uint32_t> c(a.coeffs.size() + b.coeffs.size() - 1, 0u);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            c[i + j] = static_cast<std::uint32_t>(
                (c[i + j] + static_cast<std::uint64_t>(a.coeffs[i]) * b.coeffs[j]) % a.p);
        }
    }
    return Poly{a.p, std::move(c)};
}

Poly poly_scale(const Poly& a, std::uint32_t c) {
    c %= a.p;
    if (c == 0) return Poly{a.p, {}};
    std::vector<std::uint32_t> out(a.coeffs.size());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        out[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.coeffs[i]) * c % a.p);
    return Poly{a.p, std::move(out)};
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly{a.p, {}}, a};
    std::uint32_t lead_inv = mod_inverse(b.coeffs.back(), b.p);
    std::vector<std::uint32_t> rem = a.coeffs;
    std::vector<std::uint32_t> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0u);
    for (int d = a.degree(); d >= b.degree(); --d) {
        std::uint32_t r = rem[static_cast<std::size_t>(d)];
        if (r == 0) continue;
        std::uint32_t q = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r) * lead_inv % b.p);
        std::size_t shift = static_cast<std::size_t>(d - b.degree());
        quot[shift] = q;
        for (std::size_t i = 0; i < b.coeffs.size(); ++i) {
            std::uint64_t sub = static_cast<std::uint64_t>(q) * b.coeffs[i] % b.p;
            rem[shift + i] = static_cast<std::uint32_t>((rem[shift + i] + b.p - sub) % b.p);
        }
    }
    trim_zeros(rem);
    trim_zeros(quot);
    return {Poly{a.p, std::move(quot)}, Poly{a.p, std::move(rem)}};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.coeffs.back() != 1u) a = poly_scale(a, mod_inverse(a.coeffs.back(), a.p));
    return a;
}

Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& m) {
    if (m.degree() < 1) throw std::invalid_argument("poly_powmod: modulus must have degree >= 1");
    Poly result = make_poly(m.p, {1u});
    Poly b = poly_mod(base, m);
    while (e > 0) {
        if (e & 1) result = poly_mod(poly_mul(result, b), m);
        b = poly_mod(poly_mul(b, b), m);
        e >>= 1;
    }
    return result;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("is_irreducible: degree must be >= 1");
    Poly g = f;
    if (!g.is_monic()) g = poly_scale(g, mod_inverse(g.coeffs.back(), g.p));
    std::uint32_t k = static_cast<std::uint32_t>(g.degree());
    if (k == 1) return true;

    Poly x = make_poly(g.p, {0u, 1u});
    // frob[j] = x^(p^j) mod g; each step is a p-th power, i.e. one Frobenius
    // application in F_p[x]/(g).
    std::vector<Poly> frob(k + 1);
    frob[0] = x;
    for (std::uint32_t j = 1; j <= k; ++j) frob[j] = poly_powmod(frob[j - 1], g.p, g);
    if (frob[k] != x) return false;

    std::vector<std::uint32_t> prime_divs;
    std::uint32_t rest = k;
    for (std::uint32_t t = 2; t * t <= rest; ++t) {
        if (rest % t == 0) {
            prime_divs.push_back(t);
            while (rest % t == 0) rest /= t;
        }
    }
    if (rest > 1) prime_divs.push_back(rest);
    for (std::uint32_t t : prime_divs) {
        Poly h = poly_sub(frob[k / t], x);
        if (poly_gcd(h, g).degree() != 0) return false;
    }
    return true;
}

std::vector<Poly> enumerate_irreducibles(std::uint32_t p, std::uint32_t k) {
    require_prime(p, "enumerate_irreducibles");
    if (k < 1) throw std::invalid_argument("enumerate_irreducibles: degree must be >= 1");
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < k; ++i) total *= p;
    std::vector<Poly> out;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::uint32_t> coeffs(k + 1, 0u);
        std::uint64_t rest = code;
        for (std::uint32_t i = 0; i < k; ++i) {
            coeffs[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        coeffs[k] = 1u;
        Poly f{p, std::move(coeffs)};
        if (is_irreducible(f)) out.push_back(std::move(f));
    }
    return out;
}

Poly reciprocal(const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("reciprocal: degree must be >= 1");
    if (f.coeff(0) == 0)
        throw std::invalid_argument("reciprocal: constant term must be nonzero");
    std::vector<std::uint32_t> rev(f.coeffs.rbegin(), f.coeffs.rend());
    Poly g{f.p, std::move(rev)};
    return poly_scale(g, mod_inverse(f.coeff(0), f.p));
}

} // namespace fieldgraph
