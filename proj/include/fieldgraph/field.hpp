#pragma once

#include "fieldgraph/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fieldgraph {

// Concrete model of F_{p^k} as F_p[x]/(f) for a monic irreducible f.
//
// Elements are handled as integer codes in [0, p^k): the element
// sum(a_i x^i) has code sum(a_i p^i), so code 0 is the zero element, codes
// 1..p-1 are the prime subfield and code p is the class of x.
//
// The generator set is the Frobenius orbit of x,
//   S = { x, x^p, x^(p^2), ..., x^(p^(k-1)) },
// stored as codes with S[0] == x.  Its elements are pairwise distinct and
// nonzero, and frobenius(S[i]) == S[(i+1) % k].
class FieldModel {
public:
    // Validates that p is prime, f is monic irreducible of degree >= 1 and
    // f has a nonzero constant term.  The last condition only excludes
    // f == x, whose root is the zero class and generates no usable graph.
    FieldModel(std::uint32_t p, Poly f);

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint64_t q() const { return q_; }
    const Poly& modulus() const { return f_; }
    std::string modulus_text() const { return format_poly(f_); }
    const std::vector<std::uint64_t>& generators() const { return gens_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const; // throws std::invalid_argument on 0
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t frobenius(std::uint64_t a) const; // a |-> a^p

    // Multiplicative order of a nonzero element; divides q - 1.
    std::uint64_t element_order(std::uint64_t a) const;

    // x generates the multiplicative group F_{p^k}^*.
    bool is_primitive() const;

    // S spans F_{p^k} as an F_p-vector space, i.e. x is a normal element.
    bool is_normal() const;

    Poly code_to_poly(std::uint64_t code) const;
    std::uint64_t poly_to_code(const Poly& v) const;

    // Compact display form, e.g. "2x^2+x+1"; zero renders as "0".
    std::string element_text(std::uint64_t code) const;

private:
    void check_code(std::uint64_t a) const;
    std::vector<std::uint32_t> decode(std::uint64_t a) const;
    std::uint64_t encode(const std::vector<std::uint32_t>& digits) const;

    std::uint32_t p_ = 2;
    std::uint32_t k_ = 1;
    std::uint64_t q_ = 2;
    Poly f_;
    std::vector<std::uint64_t> gens_;
    // xpow_[j] = coefficients of x^(k+j) reduced mod f, for j in [0, k-1].
    std::vector<std::vector<std::uint32_t>> xpow_;
};

// Element of a specific FieldModel.  Mixing elements from different models
// throws std::invalid_argument.
class FieldElem {
public:
    FieldElem(const FieldModel& model, std::uint64_t code);

    std::uint64_t code() const { return code_; }
    const FieldModel& model() const { return *model_; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inverse() const;
    FieldElem pow(std::uint64_t e) const;
    FieldElem frobenius() const;
    std::uint64_t multiplicative_order() const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

private:
    void check_same(const FieldElem& o) const;
    const FieldModel* model_;
    std::uint64_t code_;
};

// Prime factors (without multiplicity) of n >= 2, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

} // namespace fieldgraph
