#pragma once

/**
 * @file syndrome_table.hpp
 * @brief The decoder's view of the syndrome series S_e.
 *
 * Entries are keyed by the standard monomials of the code's point ideal
 * (I + <X_i^q - X_i> for a full code). Any other monomial is resolved through
 * its normal form against that basis: E_u for every u is a fixed linear
 * combination of the keyed entries, which is how relations such as
 * E_(5,0) = E_(0,4) + E_(0,1) on the Hermitian curve arise.
 */

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "code.hpp"
#include "inverse_system.hpp"

namespace ordercodes {

enum class SyndromeStatus { Unknown, Known, Voted, Derived };

inline const char* to_string(SyndromeStatus s) {
    switch (s) {
        case SyndromeStatus::Unknown: return "unknown";
        case SyndromeStatus::Known: return "known";
        case SyndromeStatus::Voted: return "voted";
        case SyndromeStatus::Derived: return "derived";
    }
    return "?";
}

class SyndromeTable {
   public:
    /// Known entries E_{alpha(i)} = <r, ev(Delta[i])> for i <= l.
    SyndromeTable(std::shared_ptr<const EvaluationCode> code, const Word& received) : code_(std::move(code)) {
        setup();
        auto known = code_->syndromes_known(received);
        for (std::size_t i = 0; i < known.size(); ++i) {
            auto it = pos_.find(code_->delta()[i]);
            if (it == pos_.end()) continue;  // redundant entry, implied by smaller ones
            value_[it->second] = known[i];
            status_[it->second] = SyndromeStatus::Known;
        }
    }

    /// Complete table computed from an error pattern (test oracle view).
    static SyndromeTable from_error(std::shared_ptr<const EvaluationCode> code, const ErrorVector& e) {
        SyndromeTable t(std::move(code));
        for (std::size_t k = 0; k < t.monomials_.size(); ++k) {
            t.value_[k] = error_syndrome(*t.code_, e, t.monomials_[k]);
            t.status_[k] = SyndromeStatus::Known;
        }
        return t;
    }

    const EvaluationCode& code() const noexcept { return *code_; }
    const std::vector<Polynomial>& basis() const noexcept { return code_->derivation_basis(); }
    /// Keyed monomials in increasing order.
    const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
    bool is_keyed(const Monomial& u) const { return pos_.count(u) != 0; }

    SyndromeStatus status(const Monomial& u) const {
        auto it = pos_.find(u);
        if (it != pos_.end()) return status_[it->second];
        Polynomial nf = reduce(Polynomial::monomial(code_->field(), u));
        for (auto& [v, c] : nf.terms())
            if (!value_[pos_.at(v)]) return SyndromeStatus::Unknown;
        return SyndromeStatus::Derived;
    }

    /// NF of f against the point-ideal basis.
    Polynomial reduce(const Polynomial& f) const { return normal_form(f, basis(), code_->domain().order()); }

    /// Syn_e(f) = sum over NF(f) of coefficient * entry; nullopt if any entry is unknown.
    std::optional<FieldElement> syn(const Polynomial& f) const {
        Polynomial nf = reduce(f);
        FieldElement acc = code_->field()->zero();
        for (auto& [v, c] : nf.terms()) {
            const auto& val = value_[pos_.at(v)];
            if (!val) return std::nullopt;
            acc += c * *val;
        }
        return acc;
    }
    std::optional<FieldElement> get(const Monomial& u) const {
        return syn(Polynomial::monomial(code_->field(), u));
    }

    /// Syn_e(f) split as a + b * E_u where E_u is the single unknown keyed
    /// entry allowed; nullopt if some other entry is unknown.
    std::optional<std::pair<FieldElement, FieldElement>> syn_linear(const Polynomial& f, const Monomial& u) const {
        Polynomial nf = reduce(f);
        FieldElement a = code_->field()->zero(), b = a;
        for (auto& [v, c] : nf.terms()) {
            if (v == u) {
                b += c;
                continue;
            }
            const auto& val = value_[pos_.at(v)];
            if (!val) return std::nullopt;
            a += c * *val;
        }
        return std::make_pair(a, b);
    }

    void set_voted(const Monomial& u, FieldElement v) {
        std::size_t k = pos_.at(u);
        if (status_[k] == SyndromeStatus::Known) throw Error(ErrorCode::DimensionMismatch, "known entries are immutable");
        value_[k] = v;
        status_[k] = SyndromeStatus::Voted;
    }

    /// Fill every unknown entry from a locator basis L of I_E: X^u = NF_L(X^u)
    /// modulo I_E, and Syn_e vanishes on I_E.
    void extend_with_locator(std::span<const Polynomial> L) {
        const auto& ord = code_->domain().order();
        for (std::size_t k = 0; k < monomials_.size(); ++k) {
            if (value_[k]) continue;
            Polynomial r = normal_form(Polynomial::monomial(code_->field(), monomials_[k]), L, ord);
            auto v = syn(r);
            if (!v) throw Error(ErrorCode::NeedSyndrome, "locator remainder needs an unknown syndrome");
            value_[k] = *v;
            status_[k] = SyndromeStatus::Derived;
        }
    }

    bool complete() const {
        for (auto& v : value_)
            if (!v) return false;
        return true;
    }

    /// Truncated syndrome series on a window, for the inverse-system routines.
    InverseSeries series(const Monomial& window) const {
        InverseSeries S(code_->field(), window);
        S.for_each_exponent([&](const Monomial& u) {
            auto v = get(u);
            if (!v) throw Error(ErrorCode::NeedSyndrome, "series window needs an unknown syndrome");
            S.set(u, *v);
        });
        return S;
    }

   private:
    explicit SyndromeTable(std::shared_ptr<const EvaluationCode> code) : code_(std::move(code)) { setup(); }

    void setup() {
        monomials_ = finite_footprint(basis(), code_->domain().order(), code_->domain().nvars());
        for (std::size_t k = 0; k < monomials_.size(); ++k) pos_.emplace(monomials_[k], k);
        value_.assign(monomials_.size(), std::nullopt);
        status_.assign(monomials_.size(), SyndromeStatus::Unknown);
    }

    std::shared_ptr<const EvaluationCode> code_;
    std::vector<Monomial> monomials_;
    std::map<Monomial, std::size_t> pos_;
    std::vector<std::optional<FieldElement>> value_;
    std::vector<SyndromeStatus> status_;
};

}  // namespace ordercodes
