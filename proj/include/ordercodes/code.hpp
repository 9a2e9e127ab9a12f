#pragma once

/**
 * @file code.hpp
 * @brief Rational points, evaluation codes Ev_l, dual codes C_l and the
 * Feng-Rao distance bound.
 */

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "linalg.hpp"
#include "order_domain.hpp"

namespace ordercodes {

using Word = std::vector<FieldElement>;
/// Sparse error pattern: 0-based point index -> nonzero value.
using ErrorVector = std::map<std::size_t, FieldElement>;

/// Exhaustive scan of F_q^s; points ordered lexicographically by element code
/// (first coordinate most significant).
inline std::vector<Point> rational_points(const OrderDomain& dom) {
    const auto& F = dom.field();
    const std::size_t s = dom.nvars();
    double total = 1;
    for (std::size_t i = 0; i < s; ++i) total *= F->q();
    if (total > double(1u << 24)) throw Error(ErrorCode::TooLarge, "q^s exceeds 2^24");
    std::vector<Point> out;
    std::vector<std::uint32_t> code(s, 0);
    Point P(s, F->zero());
    while (true) {
        for (std::size_t i = 0; i < s; ++i) P[i] = F->element(code[i]);
        bool on = true;
        for (auto& g : dom.generators())
            if (!g.evaluate(P).is_zero()) {
                on = false;
                break;
            }
        if (on) out.push_back(P);
        std::size_t i = s;
        while (i-- > 0) {
            if (++code[i] < F->q()) break;
            code[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
    return out;
}

/// Reduced Groebner basis of I + <X_i^q - X_i>, the ideal of all
/// rational points.
inline std::vector<Polynomial> field_equation_basis(const OrderDomain& dom) {
    std::vector<Polynomial> gens(dom.generators().begin(), dom.generators().end());
    const auto& F = dom.field();
    for (std::size_t i = 0; i < dom.nvars(); ++i) {
        Polynomial fe = Polynomial::monomial(F, Monomial::var(dom.nvars(), i, static_cast<int>(F->q())));
        fe.add_term(Monomial::var(dom.nvars(), i), -F->one());
        gens.push_back(fe);
    }
    return buchberger(std::move(gens), dom.order());
}

/**
 * Feng-Rao bound d_FR(C_l) = min_{m > l} nu_m with
 * nu_m = #{(i, j) : i (+) j = m}. The scan stops once every index whose
 * monomial X^u could still have nu < current minimum has been passed; this is
 * rigorous because the divisors of X^u are standard, so nu_m >= prod(u_i + 1).
 */
inline std::size_t feng_rao_distance(const OrderDomain& dom, std::size_t ell) {
    const std::size_t s = dom.nvars();
    auto nu = [&](std::size_t m) {
        std::size_t count = 0;
        for (std::size_t i = 1; i <= m; ++i)
            if (dom.divides(i, m)) ++count;
        return count;
    };
    // Largest index among standard monomials with prod(u_i + 1) < bound.
    auto horizon = [&](std::size_t bound) {
        std::size_t far = 0;
        Monomial u(s);
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t prod) {
            if (i == s) {
                if (auto idx = dom.index_of_monomial(u)) far = std::max(far, *idx);
                return;
            }
            for (int e = 0; prod * static_cast<std::size_t>(e + 1) < bound; ++e) {
                u[i] = e;
                rec(i + 1, prod * static_cast<std::size_t>(e + 1));
            }
            u[i] = 0;
        };
        rec(0, 1);
        return far;
    };
    std::size_t best = nu(ell + 1);
    std::size_t limit = horizon(best);
    for (std::size_t m = ell + 2; m <= limit; ++m) {
        std::size_t v = nu(m);
        if (v < best) {
            best = v;
            limit = horizon(best);
        }
    }
    return best;
}

/**
 * Evaluation code on an ordered point set: row i of the evaluation matrix is
 * ev(Delta[i]) for i = 1..l. The dual C_l is the null space of that matrix.
 * Immutable once built and safe to share across threads.
 */
class EvaluationCode {
   public:
    EvaluationCode(std::shared_ptr<const OrderDomain> dom, std::size_t ell, std::vector<Point> points,
                   std::vector<Polynomial> derivation_basis)
        : dom_(std::move(dom)), ell_(ell), points_(std::move(points)), basis_(std::move(derivation_basis)) {
        if (ell_ == 0) throw Error(ErrorCode::DimensionMismatch, "code parameter l must be at least 1");
        const auto* F = dom_->field().get();
        delta_ = dom_->delta_basis(ell_).monomials;
        eval_ = Matrix(F, ell_, points_.size());
        for (std::size_t i = 0; i < ell_; ++i) {
            Polynomial mono = Polynomial::monomial(dom_->field(), delta_[i]);
            for (std::size_t j = 0; j < points_.size(); ++j) eval_(i, j) = mono.evaluate(points_[j]);
        }
        rank_ = eval_.rank();
        parity_basis_ = eval_.nullspace();
        d_fr_ = feng_rao_distance(*dom_, ell_);
    }

    const OrderDomain& domain() const noexcept { return *dom_; }
    std::shared_ptr<const OrderDomain> domain_ptr() const noexcept { return dom_; }
    const Field& field() const noexcept { return dom_->field(); }
    std::size_t ell() const noexcept { return ell_; }
    std::size_t length() const noexcept { return points_.size(); }
    const std::vector<Point>& points() const noexcept { return points_; }
    const Matrix& eval_matrix() const noexcept { return eval_; }
    std::size_t rank() const noexcept { return rank_; }
    std::size_t dual_dimension() const noexcept { return points_.size() - rank_; }
    const std::vector<Monomial>& delta() const noexcept { return delta_; }
    /// Reduced Groebner basis of the ideal of the code's point set.
    const std::vector<Polynomial>& derivation_basis() const noexcept { return basis_; }
    const std::vector<Word>& parity_basis() const noexcept { return parity_basis_; }
    std::size_t feng_rao() const noexcept { return d_fr_; }
    /// Guaranteed correction radius floor((d_FR - 1) / 2).
    std::size_t radius() const noexcept { return (d_fr_ - 1) / 2; }

    Word zero_word() const { return Word(points_.size(), field()->zero()); }

    Word encode(const Word& message) const {
        if (message.size() != dual_dimension())
            throw Error(ErrorCode::LengthMismatch, "message length " + std::to_string(message.size()) +
                                                       " differs from dim C_l = " + std::to_string(dual_dimension()));
        Word c = zero_word();
        for (std::size_t k = 0; k < message.size(); ++k) {
            if (message[k].is_zero()) continue;
            for (std::size_t j = 0; j < c.size(); ++j) c[j] += message[k] * parity_basis_[k][j];
        }
        return c;
    }

    /// E_{alpha(i)} = <r, ev(Delta[i])> for i = 1..l.
    std::vector<FieldElement> syndromes_known(const Word& received) const {
        check_length(received);
        std::vector<FieldElement> out(ell_, field()->zero());
        for (std::size_t i = 0; i < ell_; ++i)
            for (std::size_t j = 0; j < received.size(); ++j) out[i] += received[j] * eval_(i, j);
        return out;
    }

    bool is_codeword(const Word& w) const {
        for (auto& e : syndromes_known(w))
            if (!e.is_zero()) return false;
        return true;
    }

    void check_length(const Word& w) const {
        if (w.size() != points_.size())
            throw Error(ErrorCode::LengthMismatch, "word length " + std::to_string(w.size()) + " differs from n = " +
                                                       std::to_string(points_.size()));
    }

    std::optional<std::size_t> point_index(const Point& P) const {
        for (std::size_t j = 0; j < points_.size(); ++j)
            if (points_[j] == P) return j;
        return std::nullopt;
    }

   private:
    std::shared_ptr<const OrderDomain> dom_;
    std::size_t ell_;
    std::vector<Point> points_;
    std::vector<Polynomial> basis_;
    std::vector<Monomial> delta_;
    Matrix eval_;
    std::size_t rank_ = 0;
    std::vector<Word> parity_basis_;
    std::size_t d_fr_ = 0;
};

/// Code on all rational points of the presentation.
inline std::shared_ptr<const EvaluationCode> build_code(std::shared_ptr<const OrderDomain> dom, std::size_t ell) {
    auto pts = rational_points(*dom);
    auto basis = field_equation_basis(*dom);
    return std::make_shared<const EvaluationCode>(std::move(dom), ell, std::move(pts), std::move(basis));
}

/// Code on an explicit subset of rational points (e.g. F_q^* for Reed-Solomon).
inline std::shared_ptr<const EvaluationCode> build_code(std::shared_ptr<const OrderDomain> dom, std::size_t ell,
                                                        std::vector<Point> points) {
    for (auto& P : points)
        for (auto& g : dom->generators())
            if (!g.evaluate(P).is_zero())
                throw Error(ErrorCode::DimensionMismatch, "point subset contains a point off the variety");
    auto basis = ideal_of_points(points, dom->field(), dom->nvars(), dom->order());
    return std::make_shared<const EvaluationCode>(std::move(dom), ell, std::move(points), std::move(basis));
}

inline Word add_error(const Word& c, const ErrorVector& e) {
    Word r = c;
    for (auto& [j, v] : e) {
        if (j >= r.size()) throw Error(ErrorCode::LengthMismatch, "error index out of range");
        r[j] += v;
    }
    return r;
}

/// E_u = sum_P e_P P^u computed directly from an error pattern.
inline FieldElement error_syndrome(const EvaluationCode& code, const ErrorVector& e, const Monomial& u) {
    Polynomial mono = Polynomial::monomial(code.field(), u);
    FieldElement acc = code.field()->zero();
    for (auto& [j, v] : e) acc += v * mono.evaluate(code.points()[j]);
    return acc;
}

}  // namespace ordercodes
