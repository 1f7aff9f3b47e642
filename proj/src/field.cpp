#include "fieldgraph/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace fieldgraph {

FieldModel::FieldModel(std::uint32_t p, Poly f) : p_(p), f_(std::move(f)) {
    if (!is_prime(p_)) throw std::invalid_argument("FieldModel: p must be prime");
    if (f_.p != p_) throw std::invalid_argument("FieldModel: modulus is over a different prime");
    if (f_.degree() < 1) throw std::invalid_argument("FieldModel: modulus must have degree >= 1");
    if (!f_.is_monic()) throw std::invalid_argument("FieldModel: modulus must be monic");
    if (!is_irreducible(f_)) {
        throw std::invalid_argument("FieldModel: " + format_poly(f_) + " is reducible over F_" +
                                    std::to_string(p_));
    }
    if (f_.coeff(0) == 0) {
        throw std::invalid_argument(
            "FieldModel: modulus x is not allowed (its root is the zero class)");
    }

    k_ = static_cast<std::uint32_t>(f_.degree());
    q_ = 1;
    for (std::uint32_t i = 0; i < k_; ++i) q_ *= p_;

    // x^k = -(f - x^k); higher powers follow by multiplying by x and reducing.
    xpow_.assign(k_, std::vector<std::uint32_t>(k_, 0u));
    for (std::uint32_t i = 0; i < k_; ++i) xpow_[0][i] = (p_ - f_.coeff(i)) % p_;
    for (std::uint32_t j = 1; j < k_; ++j) {
        const auto& prev = xpow_[j - 1];
        auto& cur = xpow_[j];
        std::uint32_t carry = prev[k_ - 1]; // coefficient that shifts past x^(k-1)
        for (std::uint32_t i = k_ - 1; i > 0; --i) cur[i] = prev[i - 1];
        cur[0] = 0;
        for (std::uint32_t i = 0; i < k_; ++i) {
            cur[i] = static_cast<std::uint32_t>(
                (cur[i] + static_cast<std::uint64_t>(carry) * xpow_[0][i]) % p_);
        }
    }

    std::uint64_t x_code = poly_to_code(poly_mod(make_poly(p_, {0u, 1u}), f_));
    gens_.reserve(k_);
    std::uint64_t g = x_code;
    for (std::uint32_t i = 0; i < k_; ++i) {
        gens_.push_back(g);
        g = frobenius(g);
    }
}

void FieldModel::check_code(std::uint64_t a) const {
    if (a >= q_) throw std::invalid_argument("FieldModel: element code out of range");
}

std::vector<std::uint32_t> FieldModel::decode(std::uint64_t a) const {
    std::vector<std::uint32_t> d(k_, 0u);
    for (std::uint32_t i = 0; i < k_; ++i) {
        d[i] = static_cast<std::uint32_t>(a % p_);
        a /= p_;
    }
    return d;
}

std::uint64_t FieldModel::encode(const std::vector<std::uint32_t>& digits) const {
    std::uint64_t code = 0;
    for (std::uint32_t i = k_; i > 0; --i) code = code * p_ + digits[i - 1];
    return code;
}

std::uint64_t FieldModel::add(std::uint64_t a, std::uint64_t b) const {
    check_code(a);
    check_code(b);
    auto da = decode(a), db = decode(b);
    for (std::uint32_t i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
    return encode(da);
}

std::uint64_t FieldModel::neg(std::uint64_t a) const {
    check_code(a);
    auto d = decode(a);
    for (auto& c : d) c = (p_ - c) % p_;
    return encode(d);
}

std::uint64_t FieldModel::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t FieldModel::mul(std::uint64_t a, std::uint64_t b) const {
    check_code(a);
    check_code(b);
    auto da = decode(a), db = decode(b);
    // Schoolbook product, then reduce the overflow part with xpow_.
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0u);
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < k_; ++j)
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_;
    }
    std::vector<std::uint32_t> out(k_, 0u);
    for (std::uint32_t i = 0; i < k_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    for (std::uint32_t j = 0; j + 1 < k_; ++j) {
        std::uint64_t c = prod[k_ + j];
        if (c == 0) continue;
        for (std::uint32_t i = 0; i < k_; ++i)
            out[i] = static_cast<std::uint32_t>((out[i] + c * xpow_[j][i]) % p_);
    }
    return encode(out);
}

std::uint64_t FieldModel::inv(std::uint64_t a) const {
    check_code(a);
    if (a == 0) throw std::invalid_argument("FieldModel: zero has no inverse");
    // Extended Euclid in F_p[x]: s*f + t*v == gcd == 1, so t is the inverse.
    Poly r0 = f_, r1 = code_to_poly(a);
    Poly t0 = make_poly(p_, {}), t1 = make_poly(p_, {1u});
    while (!r1.is_zero()) {
        auto [quot, rem] = poly_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Poly next = poly_sub(t0, poly_mul(quot, t1));
        t0 = std::move(t1);
        t1 = std::move(next);
    }
    // r0 is a unit constant; normalize.
    Poly result = poly_scale(t0, mod_inverse(r0.coeff(0), p_));
    return poly_to_code(result);
}

std::uint64_t FieldModel::pow(std::uint64_t a, std::uint64_t e) const {
    check_code(a);
    std::uint64_t result = 1 % q_;
    std::uint64_t base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint64_t FieldModel::frobenius(std::uint64_t a) const { return pow(a, p_); }

std::uint64_t FieldModel::element_order(std::uint64_t a) const {
    check_code(a);
    if (a == 0) throw std::invalid_argument("FieldModel: zero has no multiplicative order");
    std::uint64_t order = q_ - 1;
    for (std::uint64_t f : prime_factors(order)) {
        while (order % f == 0 && pow(a, order / f) == 1) order /= f;
    }
    return order;
}

bool FieldModel::is_primitive() const {
    if (q_ == 2) return true; // trivial group
    return element_order(gens_[0]) == q_ - 1;
}

bool FieldModel::is_normal() const {
    // Rank of the k x k matrix whose rows are the coordinate vectors of S.
    std::vector<std::vector<std::uint32_t>> m;
    m.reserve(k_);
    for (std::uint64_t g : gens_) m.push_back(decode(g));
    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < k_ && rank < k_; ++col) {
        std::uint32_t pivot = rank;
        while (pivot < k_ && m[pivot][col] == 0) ++pivot;
        if (pivot == k_) continue;
        std::swap(m[rank], m[pivot]);
        std::uint32_t inv_lead = mod_inverse(m[rank][col], p_);
        for (std::uint32_t j = 0; j < k_; ++j)
            m[rank][j] = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(m[rank][j]) * inv_lead % p_);
        for (std::uint32_t r = 0; r < k_; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            std::uint32_t factor = m[r][col];
            for (std::uint32_t j = 0; j < k_; ++j) {
                std::uint64_t sub = static_cast<std::uint64_t>(factor) * m[rank][j] % p_;
                m[r][j] = static_cast<std::uint32_t>((m[r][j] + p_ - sub) % p_);
            }
        }
        ++rank;
    }
    return rank == k_;
}

Poly FieldModel::code_to_poly(std::uint64_t code) const {
    check_code(code);
    return make_poly(p_, decode(code));
}

std::uint64_t FieldModel::poly_to_code(const Poly& v) const {
    if (v.p != p_) throw std::invalid_argument("FieldModel: polynomial is over a different prime");
    if (v.degree() >= static_cast<int>(k_))
        throw std::invalid_argument("FieldModel: polynomial does not represent a reduced element");
    std::uint64_t code = 0;
    for (std::uint32_t i = k_; i > 0; --i) code = code * p_ + v.coeff(i - 1) % p_;
    return code;
}

std::string FieldModel::element_text(std::uint64_t code) const {
    check_code(code);
    if (code == 0) return "0";
    auto d = decode(code);
    std::string out;
    for (std::uint32_t i = k_; i > 0; --i) {
        std::uint32_t c = d[i - 1];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        std::uint32_t e = i - 1;
        if (e == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += 'x';
            if (e > 1) {
                out += '^';
                out += std::to_string(e);
            }
        }
    }
    return out;
}

FieldElem::FieldElem(const FieldModel& model, std::uint64_t code) : model_(&model), code_(code) {
    if (code >= model.q()) throw std::invalid_argument("FieldElem: code out of range");
}

void FieldElem::check_same(const FieldElem& o) const {
    if (model_ != o.model_)
        throw std::invalid_argument("FieldElem: operands belong to different field models");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same(o);
    return FieldElem(*model_, model_->add(code_, o.code_));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same(o);
    return FieldElem(*model_, model_->sub(code_, o.code_));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same(o);
    return FieldElem(*model_, model_->mul(code_, o.code_));
}

FieldElem FieldElem::operator-() const { return FieldElem(*model_, model_->neg(code_)); }

FieldElem FieldElem::inverse() const { return FieldElem(*model_, model_->inv(code_)); }

FieldElem FieldElem::pow(std::uint64_t e) const { return FieldElem(*model_, model_->pow(code_, e)); }

FieldElem FieldElem::frobenius() const { return FieldElem(*model_, model_->frobenius(code_)); }

std::uint64_t FieldElem::multiplicative_order() const { return model_->element_order(code_); }

bool FieldElem::operator==(const FieldElem& o) const {
    check_same(o);
    return code_ == o.code_;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace fieldgraph
