#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fieldgraph {

// Dense polynomial over the prime field F_p.  Coefficients are stored in
// ascending order of degree with no trailing zeros, so the zero polynomial
// has an empty coefficient vector and degree() == -1.
struct Poly {
    std::uint32_t p = 2;
    std::vector<std::uint32_t> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1u; }
    std::uint32_t coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0u; }

    friend bool operator==(const Poly&, const Poly&) = default;
};

bool is_prime(std::uint64_t n);

// a^-1 mod p.  Throws std::invalid_argument when a == 0 mod p.
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

// Builds a polynomial from raw coefficients (constant term first).  Values
// are reduced mod p and trailing zeros stripped.  p must be prime.
Poly make_poly(std::uint32_t p, std::vector<std::uint32_t> coeffs);

// Accepts either sums of terms ("x^4 + 2*x^2 + 3", '*' optional, any term
// order, repeated terms accumulate) or a comma-separated coefficient list
// with the constant term first ("3, 0, 2, 0, 1").  Whitespace is free.
// Coefficients are reduced mod p.  Throws std::invalid_argument on
// malformed input or non-prime p.
Poly parse_poly(std::string_view text, std::uint32_t p);

// Canonical rendering: descending powers, " + " separators, no zero terms,
// no unit coefficients ("x^4 + 2*x^2 + 3").  Zero renders as "0".
std::string format_poly(const Poly& f);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, std::uint32_t c);

// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);

// Monic gcd.
Poly poly_gcd(Poly a, Poly b);

// base^e mod m, for m of degree >= 1.
Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& m);

// Irreducibility over F_p via the Frobenius/gcd criterion: f of degree k is
// irreducible iff x^(p^k) == x (mod f) and gcd(x^(p^(k/t)) - x, f) == 1 for
// every prime t | k.  Requires degree >= 1.
bool is_irreducible(const Poly& f);

// All monic irreducible polynomials of degree k over F_p, ordered by the
// element code of the coefficient tuple, i.e. by sum(a_i * p^i) over the
// non-leading coefficients.  This matches lexicographic order on
// (a_{k-1}, ..., a_1, a_0).
std::vector<Poly> enumerate_irreducibles(std::uint32_t p, std::uint32_t k);

// Monic reciprocal a_0^-1 * x^deg(f) * f(1/x): the coefficient vector is
// reversed and scaled so the result is monic.  Requires a nonzero constant
// term (for degree 1 this excludes f == x).
Poly reciprocal(const Poly& f);

} // namespace fieldgraph
