#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace ordercodes {

/// Exponent vector (u_1, ..., u_s) of a monomial X^u.
class Monomial {
   public:
    Monomial() = default;
    explicit Monomial(std::size_t s) : e_(s, 0) {}
    Monomial(std::initializer_list<int> e) : e_(e) {}
    explicit Monomial(std::vector<int> e) : e_(std::move(e)) {}

    static Monomial one(std::size_t s) { return Monomial(s); }
    static Monomial var(std::size_t s, std::size_t i, int power = 1) {
        Monomial m(s);
        m.e_[i] = power;
        return m;
    }

    std::size_t size() const noexcept { return e_.size(); }
    int operator[](std::size_t i) const noexcept { return e_[i]; }
    int& operator[](std::size_t i) noexcept { return e_[i]; }
    const std::vector<int>& exponents() const noexcept { return e_; }
    int degree() const noexcept { return std::accumulate(e_.begin(), e_.end(), 0); }
    bool is_one() const noexcept {
        return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
    }

    bool divides(const Monomial& b) const noexcept {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > b.e_[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }
    /// Exact quotient; caller guarantees b divides a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
        return r;
    }
    static bool coprime(const Monomial& a, const Monomial& b) noexcept {
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] > 0 && b.e_[i] > 0) return false;
        return true;
    }

    // Storage order only (plain lexicographic on exponents); monomial orders live in WeightOrder.
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

   private:
    std::vector<int> e_;
};

using Weight = std::vector<long>;

/// Total orders on weight vectors in Z^r.
enum class SemigroupOrder { Lex, GradedLex, GradedRevLex, Integer };

inline SemigroupOrder parse_semigroup_order(const std::string& name) {
    if (name == "lex") return SemigroupOrder::Lex;
    if (name == "grlex" || name == "graded-lex") return SemigroupOrder::GradedLex;
    if (name == "grevlex" || name == "graded-reverse-lex") return SemigroupOrder::GradedRevLex;
    if (name == "integer" || name == "int") return SemigroupOrder::Integer;
    throw Error(ErrorCode::Parse, "unknown semigroup order '" + name + "'");
}

inline std::string to_string(SemigroupOrder o) {
    switch (o) {
        case SemigroupOrder::Lex: return "lex";
        case SemigroupOrder::GradedLex: return "grlex";
        case SemigroupOrder::GradedRevLex: return "grevlex";
        case SemigroupOrder::Integer: return "integer";
    }
    return "?";
}

/**
 * The weight order >_{M,tau}: compare M-weights under the semigroup order,
 * break ties lexicographically with the declared variable priority
 * (priority[0] is the most significant variable).
 */
class WeightOrder {
   public:
    WeightOrder() = default;
    WeightOrder(std::vector<std::vector<long>> rows, SemigroupOrder ord, std::vector<std::size_t> priority)
        : rows_(std::move(rows)), ord_(ord), priority_(std::move(priority)) {
        if (rows_.empty()) throw Error(ErrorCode::DimensionMismatch, "weight matrix needs at least one row");
        const std::size_t s = rows_.front().size();
        for (auto& r : rows_) {
            if (r.size() != s) throw Error(ErrorCode::DimensionMismatch, "ragged weight matrix");
            for (long x : r)
                if (x < 0) throw Error(ErrorCode::DimensionMismatch, "weights must be nonnegative");
        }
        if (ord_ == SemigroupOrder::Integer && rows_.size() != 1)
            throw Error(ErrorCode::DimensionMismatch, "integer order needs a single weight row");
        if (priority_.empty()) {
            priority_.resize(s);
            std::iota(priority_.begin(), priority_.end(), std::size_t{0});
        }
        std::vector<std::size_t> check(priority_);
        std::sort(check.begin(), check.end());
        for (std::size_t i = 0; i < check.size(); ++i)
            if (check[i] != i || check.size() != s)
                throw Error(ErrorCode::DimensionMismatch, "tie-break priority must be a permutation of the variables");
        if (!rows_independent()) throw Error(ErrorCode::DependentWeights, "weight matrix rows are linearly dependent");
    }

    /// Plain graded-lex on s variables with x_0 > x_1 > ... (M = identity).
    static WeightOrder graded_lex_identity(std::size_t s) {
        std::vector<std::vector<long>> rows(s, std::vector<long>(s, 0));
        for (std::size_t i = 0; i < s; ++i) rows[i][i] = 1;
        return WeightOrder(std::move(rows), SemigroupOrder::GradedLex, {});
    }
    /// Pure lex with x_0 > x_1 > ...
    static WeightOrder lex_identity(std::size_t s) {
        std::vector<std::vector<long>> rows(s, std::vector<long>(s, 0));
        for (std::size_t i = 0; i < s; ++i) rows[i][i] = 1;
        return WeightOrder(std::move(rows), SemigroupOrder::Lex, {});
    }

    std::size_t nvars() const noexcept { return rows_.empty() ? 0 : rows_.front().size(); }
    std::size_t rank() const noexcept { return rows_.size(); }
    const std::vector<std::vector<long>>& rows() const noexcept { return rows_; }
    SemigroupOrder semigroup_order() const noexcept { return ord_; }
    const std::vector<std::size_t>& priority() const noexcept { return priority_; }

    Weight weight(const Monomial& u) const {
        if (u.size() != nvars()) throw Error(ErrorCode::DimensionMismatch, "exponent length does not match weight matrix");
        Weight w(rows_.size(), 0);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (std::size_t i = 0; i < u.size(); ++i) w[r] += rows_[r][i] * u[i];
        return w;
    }

    std::strong_ordering compare_weights(const Weight& a, const Weight& b) const {
        switch (ord_) {
            case SemigroupOrder::Lex:
            case SemigroupOrder::Integer: return lex(a, b);
            case SemigroupOrder::GradedLex: {
                auto c = sum(a) <=> sum(b);
                return c != 0 ? c : lex(a, b);
            }
            case SemigroupOrder::GradedRevLex: {
                auto c = sum(a) <=> sum(b);
                if (c != 0) return c;
                for (std::size_t i = a.size(); i-- > 0;)
                    if (a[i] != b[i]) return b[i] <=> a[i];
                return std::strong_ordering::equal;
            }
        }
        return std::strong_ordering::equal;
    }

    /// cmp_monomials.
    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        if (a.size() != nvars() || b.size() != nvars())
            throw Error(ErrorCode::DimensionMismatch, "exponent length does not match weight matrix");
        auto c = compare_weights(weight(a), weight(b));
        if (c != 0) return c;
        for (std::size_t v : priority_)
            if (a[v] != b[v]) return a[v] <=> b[v];
        return std::strong_ordering::equal;
    }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    /**
     * A positive integer functional g with g(a) < g(b) => a < b, when one
     * exists for this order: the weight sum for graded orders, the first
     * weight row for lex/integer. Empty when enumeration in order type omega
     * cannot be guaranteed (some variable has zero grading).
     */
    std::vector<long> grading() const {
        std::vector<long> g(nvars(), 0);
        if (ord_ == SemigroupOrder::GradedLex || ord_ == SemigroupOrder::GradedRevLex) {
            for (auto& r : rows_)
                for (std::size_t i = 0; i < g.size(); ++i) g[i] += r[i];
        } else {
            g = rows_.front();
        }
        for (long x : g)
            if (x <= 0) return {};
        return g;
    }
    long grading_of_weight(const Weight& w) const {
        if (ord_ == SemigroupOrder::GradedLex || ord_ == SemigroupOrder::GradedRevLex) return sum(w);
        return w.front();
    }

   private:
    static long sum(const Weight& w) { return std::accumulate(w.begin(), w.end(), 0L); }
    static std::strong_ordering lex(const Weight& a, const Weight& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
    }

    // Fraction-free elimination over the integers.
    bool rows_independent() const {
        std::vector<std::vector<__int128>> a;
        for (auto& r : rows_) a.emplace_back(r.begin(), r.end());
        std::size_t rank = 0;
        const std::size_t cols = nvars();
        for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
            std::size_t piv = rank;
            while (piv < a.size() && a[piv][c] == 0) ++piv;
            if (piv == a.size()) continue;
            std::swap(a[piv], a[rank]);
            for (std::size_t r = rank + 1; r < a.size(); ++r) {
                if (a[r][c] == 0) continue;
                __int128 f = a[r][c], g = a[rank][c];
                for (std::size_t k = 0; k < cols; ++k) a[r][k] = a[r][k] * g - a[rank][k] * f;
            }
            ++rank;
        }
        return rank == a.size();
    }

    std::vector<std::vector<long>> rows_;
    SemigroupOrder ord_ = SemigroupOrder::Lex;
    std::vector<std::size_t> priority_;
};

}  // namespace ordercodes
