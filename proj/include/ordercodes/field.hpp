#pragma once

/**
 * @file field.hpp
 * @brief Runtime-configured finite fields GF(p^m), p^m <= 2^16.
 *
 * Elements are stored by their integer code: the base-p digits d_0..d_{m-1}
 * of the code are the coefficients of 1, b, ..., b^{m-1} where b is the
 * residue class of the generator modulo the defining polynomial. Code 0 is
 * zero, code 1 is one, code p is b itself.
 *
 * Multiplication goes through exp/log tables built from a primitive element
 * found at construction; addition is digit-wise (XOR for p = 2).
 */

#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "error.hpp"

namespace ordercodes {

class GaloisField;
using Field = std::shared_ptr<const GaloisField>;

/// Field element: a code plus a non-owning pointer to its field. The field
/// must outlive the element; polynomials and codes keep a shared Field.
class FieldElement {
   public:
    FieldElement() = default;
    FieldElement(const GaloisField* f, std::uint32_t code) noexcept : field_(f), code_(code) {}

    std::uint32_t code() const noexcept { return code_; }
    const GaloisField* field() const noexcept { return field_; }
    bool is_zero() const noexcept { return code_ == 0; }
    bool is_one() const noexcept { return code_ == 1; }

    FieldElement operator+(FieldElement b) const;
    FieldElement operator-(FieldElement b) const;
    FieldElement operator-() const;
    FieldElement operator*(FieldElement b) const;
    FieldElement operator/(FieldElement b) const;
    FieldElement& operator+=(FieldElement b) { return *this = *this + b; }
    FieldElement& operator-=(FieldElement b) { return *this = *this - b; }
    FieldElement& operator*=(FieldElement b) { return *this = *this * b; }
    FieldElement& operator/=(FieldElement b) { return *this = *this / b; }
    FieldElement inv() const;
    FieldElement pow(std::uint64_t e) const;

    friend bool operator==(FieldElement a, FieldElement b) noexcept { return a.code_ == b.code_; }
    friend bool operator!=(FieldElement a, FieldElement b) noexcept { return a.code_ != b.code_; }
    friend bool operator<(FieldElement a, FieldElement b) noexcept { return a.code_ < b.code_; }
    friend std::ostream& operator<<(std::ostream& os, FieldElement a) { return os << a.code_; }

   private:
    const GaloisField* field_ = nullptr;
    std::uint32_t code_ = 0;
};

class GaloisField : public std::enable_shared_from_this<GaloisField> {
    struct Token {};

   public:
    static constexpr std::uint32_t max_size = 1u << 16;

    /// ff_make: modulus holds the m+1 coefficients c_0..c_m of the defining
    /// polynomial (constant first); it must be monic of degree m.
    static Field make(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus) {
        return std::make_shared<const GaloisField>(Token{}, p, m, std::move(modulus));
    }

    /// Prime field GF(p).
    static Field prime(std::uint32_t p) { return make(p, 1, {0, 1}); }

    GaloisField(Token, std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
        : p_(p), m_(m), modulus_(std::move(modulus)) {
        if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
        if (m < 1) throw Error(ErrorCode::TooLarge, "extension degree must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            q *= p;
            if (q > max_size) throw Error(ErrorCode::TooLarge, "field size exceeds 2^16");
        }
        q_ = static_cast<std::uint32_t>(q);
        if (modulus_.size() != m + 1) throw Error(ErrorCode::Reducible, "modulus must have m+1 coefficients");
        for (auto& c : modulus_) {
            if (c >= p) throw Error(ErrorCode::Reducible, "modulus coefficient out of range");
        }
        if (modulus_.back() != 1) throw Error(ErrorCode::Reducible, "modulus must be monic");
        if (m > 1 && !modulus_irreducible()) throw Error(ErrorCode::Reducible, "modulus factors over GF(p)");
        build_tables();
    }

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t m() const noexcept { return m_; }
    std::uint32_t q() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    FieldElement zero() const noexcept { return {this, 0}; }
    FieldElement one() const noexcept { return {this, 1}; }
    /// Residue class of the generator (code p); for m = 1 this is the integer p mod p = 0, so
    /// prime fields return the primitive element instead.
    FieldElement generator() const noexcept { return m_ == 1 ? primitive() : FieldElement{this, p_}; }
    FieldElement primitive() const noexcept { return {this, exp_[1]}; }
    FieldElement element(std::uint32_t code) const {
        if (code >= q_) throw Error(ErrorCode::DimensionMismatch, "element code out of range: " + std::to_string(code));
        return {this, code};
    }
    /// Image of an integer in the prime subfield.
    FieldElement from_integer(long long k) const noexcept {
        long long r = k % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return {this, static_cast<std::uint32_t>(r)};
    }

    std::vector<FieldElement> elements() const {
        std::vector<FieldElement> out;
        out.reserve(q_);
        for (std::uint32_t c = 0; c < q_; ++c) out.emplace_back(this, c);
        return out;
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        if (p_ == 2) return a ^ b;
        std::uint32_t r = 0, scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            r += ((a % p_ + b % p_) % p_) * scale;
            a /= p_;
            b /= p_;
            scale *= p_;
        }
        return r;
    }
    std::uint32_t neg(std::uint32_t a) const noexcept {
        if (p_ == 2) return a;
        std::uint32_t r = 0, scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            r += ((p_ - a % p_) % p_) * scale;
            a /= p_;
            scale *= p_;
        }
        return r;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept {
        if (e == 0) return 1;
        if (a == 0) return 0;
        return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
    }
    /// Discrete log with respect to primitive(); a must be nonzero.
    std::uint32_t log(std::uint32_t a) const {
        if (a == 0) throw Error(ErrorCode::DivisionByZero, "log of zero");
        return log_[a];
    }

    /// Polynomial-basis multiplication straight from the modulus, independent of
    /// the exp/log tables. Used once at construction to build the tables.
    std::uint32_t mul_by_reduction(std::uint32_t a, std::uint32_t b) const {
        auto da = digits(a), db = digits(b);
        std::vector<std::uint32_t> prod(2 * m_, 0);
        for (std::uint32_t i = 0; i < m_; ++i)
            for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (std::uint32_t k = 2 * m_ - 1; k >= m_; --k) {
            std::uint32_t c = prod[k];
            if (c == 0) continue;
            prod[k] = 0;
            for (std::uint32_t i = 0; i < m_; ++i)
                prod[k - m_ + i] = (prod[k - m_ + i] + (p_ - c) * modulus_[i]) % p_;
        }
        prod.resize(m_);
        return from_digits(prod);
    }

    std::vector<std::uint32_t> digits(std::uint32_t a) const {
        std::vector<std::uint32_t> d(m_);
        for (std::uint32_t i = 0; i < m_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }
    std::uint32_t from_digits(const std::vector<std::uint32_t>& d) const {
        std::uint32_t r = 0;
        for (std::size_t i = d.size(); i-- > 0;) r = r * p_ + d[i];
        return r;
    }

    static bool is_prime(std::uint32_t n) noexcept {
        if (n < 2) return false;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

   private:
    // Trial division by every monic polynomial of degree 1..m/2 over GF(p).
    bool modulus_irreducible() const {
        for (std::uint32_t d = 1; 2 * d <= m_; ++d) {
            std::uint32_t count = 1;
            for (std::uint32_t i = 0; i < d; ++i) count *= p_;
            for (std::uint32_t c = 0; c < count; ++c) {
                std::vector<std::uint32_t> div(d + 1);
                std::uint32_t t = c;
                for (std::uint32_t i = 0; i < d; ++i) {
                    div[i] = t % p_;
                    t /= p_;
                }
                div[d] = 1;
                if (remainder_is_zero(div)) return false;
            }
        }
        return true;
    }

    bool remainder_is_zero(const std::vector<std::uint32_t>& div) const {
        std::vector<std::uint32_t> r(modulus_);
        const std::size_t d = div.size() - 1;
        for (std::size_t k = r.size() - 1; k >= d; --k) {
            std::uint32_t c = r[k];
            if (c != 0) {
                for (std::size_t i = 0; i <= d; ++i) r[k - d + i] = (r[k - d + i] + (p_ - c) * div[i]) % p_;
            }
            if (k == 0) break;
        }
        for (std::size_t i = 0; i < d; ++i)
            if (r[i] != 0) return false;
        return true;
    }

    void build_tables() {
        exp_.assign(q_, 0);
        log_.assign(q_, 0);
        const std::uint32_t order = q_ - 1;
        std::vector<std::uint32_t> prime_factors;
        for (std::uint32_t n = order, d = 2; n > 1; ++d) {
            if (d * d > n) {
                prime_factors.push_back(n);
                break;
            }
            if (n % d == 0) {
                prime_factors.push_back(d);
                while (n % d == 0) n /= d;
            }
        }
        auto slow_pow = [&](std::uint32_t a, std::uint32_t e) {
            std::uint32_t r = 1;
            while (e) {
                if (e & 1) r = mul_by_reduction(r, a);
                a = mul_by_reduction(a, a);
                e >>= 1;
            }
            return r;
        };
        std::uint32_t g = 0;
        if (q_ == 2) {
            g = 1;
        } else {
            for (std::uint32_t c = 2; c < q_ && g == 0; ++c) {
                bool primitive = true;
                for (auto f : prime_factors)
                    if (slow_pow(c, order / f) == 1) {
                        primitive = false;
                        break;
                    }
                if (primitive) g = c;
            }
        }
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < order; ++i) {
            exp_[i] = x;
            log_[x] = i;
            x = mul_by_reduction(x, g);
        }
    }

    std::uint32_t p_, m_, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_, log_;
};

inline FieldElement FieldElement::operator+(FieldElement b) const {
    const GaloisField* f = field_ ? field_ : b.field_;
    return {f, f->add(code_, b.code_)};
}
inline FieldElement FieldElement::operator-(FieldElement b) const {
    const GaloisField* f = field_ ? field_ : b.field_;
    return {f, f->sub(code_, b.code_)};
}
inline FieldElement FieldElement::operator-() const { return {field_, field_->neg(code_)}; }
inline FieldElement FieldElement::operator*(FieldElement b) const {
    const GaloisField* f = field_ ? field_ : b.field_;
    return {f, f->mul(code_, b.code_)};
}
inline FieldElement FieldElement::operator/(FieldElement b) const {
    const GaloisField* f = field_ ? field_ : b.field_;
    return {f, f->div(code_, b.code_)};
}
inline FieldElement FieldElement::inv() const { return {field_, field_->inv(code_)}; }
inline FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }

}  // namespace ordercodes
