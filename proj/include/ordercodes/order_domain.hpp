#pragma once

/**
 * @file order_domain.hpp
 * @brief Order-domain presentations R = F_q[X_1..X_s]/I.
 *
 * A presentation is validated against the Geil-Pellikaan shape: the
 * generators form a Groebner basis for >_{M,tau}, each has exactly two
 * monomials of top M-weight, and standard monomials have distinct weights.
 * The resulting ordered monomial basis Delta is materialized lazily; indices
 * into it are 1-based throughout (the index function o and the semigroup
 * operation on indices follow that convention).
 */

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "groebner.hpp"

namespace ordercodes {

struct Presentation {
    Field field;
    std::vector<std::string> names;
    WeightOrder order;
    std::vector<Polynomial> generators;

    std::size_t nvars() const noexcept { return names.size(); }
    Polynomial parse(const std::string& text) const { return parse_polynomial(text, field, names); }
    std::string format(const Polynomial& f) const { return f.to_string(order, names); }
    std::string format(const Monomial& u) const {
        return Polynomial::monomial(field, u).to_string(order, names);
    }
};

struct ValidationReport {
    bool ok = true;
    std::optional<ErrorCode> code;
    std::string detail;
    std::optional<std::pair<Monomial, Monomial>> collision;
    std::optional<std::size_t> generator_index;
};

namespace detail {

// All exponent vectors with (M u) <= bound componentwise. Variables with a zero
// column are capped at exponent 2, enough to expose a collision with 1.
inline std::vector<Monomial> monomials_under_weight(const WeightOrder& ord, const Weight& bound) {
    const std::size_t s = ord.nvars();
    std::vector<int> cap(s, 2);
    for (std::size_t i = 0; i < s; ++i) {
        long c = -1;
        for (std::size_t r = 0; r < ord.rank(); ++r) {
            long w = ord.rows()[r][i];
            if (w > 0) {
                long e = bound[r] / w;
                c = c < 0 ? e : std::min(c, e);
            }
        }
        if (c >= 0) cap[i] = static_cast<int>(c);
    }
    std::vector<Monomial> out;
    Monomial u(s);
    while (true) {
        Weight w = ord.weight(u);
        bool inside = true;
        for (std::size_t r = 0; r < w.size(); ++r)
            if (w[r] > bound[r]) inside = false;
        if (inside) out.push_back(u);
        std::size_t i = 0;
        while (i < s) {
            if (++u[i] <= cap[i]) break;
            u[i] = 0;
            ++i;
        }
        if (i == s) break;
    }
    return out;
}

inline bool is_standard(const Monomial& u, const std::vector<Monomial>& lead) {
    for (auto& l : lead)
        if (l.divides(u)) return false;
    return true;
}

}  // namespace detail

inline ValidationReport validate_presentation(const Presentation& p) {
    ValidationReport rep;
    const auto& ord = p.order;
    if (ord.nvars() != p.nvars()) {
        rep.ok = false;
        rep.code = ErrorCode::DimensionMismatch;
        rep.detail = "weight matrix column count differs from variable count";
        return rep;
    }
    if (!is_groebner(p.generators, ord)) {
        rep.ok = false;
        rep.code = ErrorCode::NotGroebner;
        rep.detail = "generators are not a Groebner basis for the weight order";
        return rep;
    }
    Weight bound(ord.rank(), 0);
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        Weight w = ord.weight(Monomial::var(p.nvars(), i));
        for (std::size_t r = 0; r < w.size(); ++r) bound[r] = std::max(bound[r], w[r]);
    }
    std::vector<Monomial> lead;
    for (std::size_t gi = 0; gi < p.generators.size(); ++gi) {
        const auto& g = p.generators[gi];
        if (g.is_zero()) continue;
        lead.push_back(g.leading_monomial(ord));
        Weight top = ord.weight(lead.back());
        std::size_t at_top = 0;
        for (auto& [u, c] : g.terms())
            if (ord.weight(u) == top) ++at_top;
        if (at_top != 2) {
            rep.ok = false;
            rep.code = ErrorCode::WrongTopShape;
            rep.generator_index = gi;
            rep.detail = "generator " + std::to_string(gi) + " has " + std::to_string(at_top) +
                         " monomials of top weight (need exactly 2)";
            return rep;
        }
        for (std::size_t r = 0; r < top.size(); ++r) bound[r] = std::max(bound[r], top[r]);
    }
    for (auto& b : bound) b *= 2;
    std::map<Weight, Monomial> seen;
    for (auto& u : detail::monomials_under_weight(ord, bound)) {
        if (!detail::is_standard(u, lead)) continue;
        auto [it, inserted] = seen.try_emplace(ord.weight(u), u);
        if (!inserted) {
            rep.ok = false;
            rep.code = ErrorCode::WeightCollision;
            rep.collision = std::make_pair(it->second, u);
            rep.detail = "standard monomials " + p.format(it->second) + " and " + p.format(u) + " share a weight";
            return rep;
        }
    }
    return rep;
}

struct DeltaBasis {
    std::vector<Monomial> monomials;
    std::vector<Weight> weights;
};

/**
 * A validated presentation together with its ordered basis Delta, the weight
 * function and the index semigroup. Delta is extended on demand behind a
 * mutex, so a shared OrderDomain can be queried from several threads.
 */
class OrderDomain {
   public:
    explicit OrderDomain(Presentation p) : p_(std::move(p)) {
        auto rep = validate_presentation(p_);
        if (!rep.ok) throw Error(*rep.code, rep.detail);
        for (auto& g : p_.generators)
            if (!g.is_zero()) lead_.push_back(g.leading_monomial(p_.order));
        grading_ = p_.order.grading();
    }

    const Presentation& presentation() const noexcept { return p_; }
    const WeightOrder& order() const noexcept { return p_.order; }
    const Field& field() const noexcept { return p_.field; }
    std::size_t nvars() const noexcept { return p_.nvars(); }
    const std::vector<Polynomial>& generators() const noexcept { return p_.generators; }

    DeltaBasis delta_basis(std::size_t count) const {
        std::lock_guard lock(mu_);
        ensure_count(count);
        DeltaBasis b;
        b.monomials.assign(delta_.begin(), delta_.begin() + static_cast<long>(count));
        b.weights.assign(weights_.begin(), weights_.begin() + static_cast<long>(count));
        return b;
    }

    /// Delta[i], 1-based.
    Monomial monomial(std::size_t i) const {
        std::lock_guard lock(mu_);
        ensure_count(i);
        return delta_[i - 1];
    }
    Weight weight_at(std::size_t i) const {
        std::lock_guard lock(mu_);
        ensure_count(i);
        return weights_[i - 1];
    }

    /// 1-based index of the standard monomial with weight w, if w lies in Gamma.
    std::optional<std::size_t> index_of_weight(const Weight& w) const {
        for (long x : w)
            if (x < 0) return std::nullopt;
        std::lock_guard lock(mu_);
        ensure_grading(p_.order.grading_of_weight(w));
        auto it = index_by_weight_.find(w);
        if (it == index_by_weight_.end()) return std::nullopt;
        return it->second;
    }
    /// 1-based index of a standard monomial; nullopt if u is not standard.
    std::optional<std::size_t> index_of_monomial(const Monomial& u) const {
        if (!detail::is_standard(u, lead_)) return std::nullopt;
        return index_of_weight(p_.order.weight(u));
    }
    bool is_standard(const Monomial& u) const { return detail::is_standard(u, lead_); }

    Polynomial reduce(const Polynomial& f) const { return normal_form(f, p_.generators, p_.order); }

    /// rho: weight of the leading standard monomial of NF(f); nullopt for f in I.
    std::optional<Weight> rho(const Polynomial& f) const {
        Polynomial r = reduce(f);
        if (r.is_zero()) return std::nullopt;
        return p_.order.weight(r.leading_monomial(p_.order));
    }

    /// o(f): 1-based index of the leading standard monomial of NF(f); -1 for f in I.
    long o_index(const Polynomial& f) const {
        Polynomial r = reduce(f);
        if (r.is_zero()) return -1;
        return static_cast<long>(*index_of_monomial(r.leading_monomial(p_.order)));
    }

    /// i (+) j = o(X^{alpha(i)} X^{alpha(j)}), computed through weights (rho is additive).
    std::size_t oplus(std::size_t i, std::size_t j) const {
        Weight wi = weight_at(i), wj = weight_at(j);
        for (std::size_t r = 0; r < wi.size(); ++r) wi[r] += wj[r];
        return *index_of_weight(wi);
    }

    /// k with i (+) k = j, if it exists.
    std::optional<std::size_t> ominus(std::size_t j, std::size_t i) const {
        Weight wj = weight_at(j), wi = weight_at(i);
        for (std::size_t r = 0; r < wj.size(); ++r) wj[r] -= wi[r];
        return index_of_weight(wj);
    }
    bool divides(std::size_t i, std::size_t j) const { return ominus(j, i).has_value(); }

    /// Basis element as a polynomial.
    Polynomial basis_polynomial(std::size_t i) const { return Polynomial::monomial(p_.field, monomial(i)); }

   private:
    void ensure_count(std::size_t count) const {
        if (grading_.empty()) throw Error(ErrorCode::NotWellOrdered, "weight order does not enumerate Delta in order type omega");
        long g = std::max(covered_, 1L);
        std::size_t stalls = 0;
        while (delta_.size() < count) {
            std::size_t before = delta_.size();
            g *= 2;
            rebuild(g);
            if (delta_.size() == before && ++stalls > 8)
                throw Error(ErrorCode::NotWellOrdered, "Delta is finite; requested more elements than exist");
        }
    }
    void ensure_grading(long g) const {
        if (grading_.empty()) throw Error(ErrorCode::NotWellOrdered, "weight order does not enumerate Delta in order type omega");
        if (g <= covered_) return;
        rebuild(std::max(g, 2 * covered_));
    }

    // Delta = all standard monomials with grading <= g, sorted ascending. This
    // is a complete prefix because grading(a) < grading(b) implies a < b.
    void rebuild(long g) const {
        const std::size_t s = nvars();
        std::vector<Monomial> all;
        Monomial u(s);
        std::vector<long> level(s + 1, 0);
        std::function<void(std::size_t, long)> rec = [&](std::size_t i, long used) {
            if (i == s) {
                if (detail::is_standard(u, lead_)) all.push_back(u);
                return;
            }
            for (int e = 0; used + e * grading_[i] <= g; ++e) {
                u[i] = e;
                rec(i + 1, used + e * grading_[i]);
            }
            u[i] = 0;
        };
        rec(0, 0);
        std::sort(all.begin(), all.end(), [&](const Monomial& a, const Monomial& b) { return p_.order.less(a, b); });
        delta_ = std::move(all);
        weights_.clear();
        index_by_weight_.clear();
        for (std::size_t k = 0; k < delta_.size(); ++k) {
            weights_.push_back(p_.order.weight(delta_[k]));
            index_by_weight_.emplace(weights_.back(), k + 1);
        }
        covered_ = g;
    }

    Presentation p_;
    std::vector<Monomial> lead_;
    std::vector<long> grading_;
    mutable std::mutex mu_;
    mutable std::vector<Monomial> delta_;
    mutable std::vector<Weight> weights_;
    mutable std::map<Weight, std::size_t> index_by_weight_;
    mutable long covered_ = -1;  // highest grading enumerated so far
};

}  // namespace ordercodes
