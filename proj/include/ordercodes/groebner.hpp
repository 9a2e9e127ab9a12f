#pragma once

#include <deque>
#include <span>
#include <vector>

#include "polynomial.hpp"

namespace ordercodes {

using Point = std::vector<FieldElement>;

/**
 * Multivariate division remainder. The divisor is always the first element of
 * G (in the given order) whose leading monomial divides the current leading
 * term; the result has no term divisible by any leading monomial of G.
 */
inline Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, const WeightOrder& ord) {
    std::vector<Monomial> lead;
    std::vector<FieldElement> lead_inv;
    lead.reserve(G.size());
    for (auto& g : G) {
        if (g.is_zero()) {
            lead.emplace_back();
            lead_inv.push_back({});
            continue;
        }
        lead.push_back(g.leading_monomial(ord));
        lead_inv.push_back(g.coeff(lead.back()).inv());
    }
    Polynomial p = f;
    Polynomial r(f.field(), f.nvars());
    while (!p.is_zero()) {
        const Monomial lt = p.leading_monomial(ord);
        const FieldElement lc = p.coeff(lt);
        bool divided = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            if (G[i].is_zero() || !lead[i].divides(lt)) continue;
            p -= G[i].shifted(lt / lead[i], lc * lead_inv[i]);
            divided = true;
            break;
        }
        if (!divided) {
            r.add_term(lt, lc);
            p.add_term(lt, -lc);
        }
    }
    return r;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const WeightOrder& ord) {
    const Monomial& a = f.leading_monomial(ord);
    const Monomial& b = g.leading_monomial(ord);
    const Monomial l = Monomial::lcm(a, b);
    return f.shifted(l / a, f.coeff(a).inv()) - g.shifted(l / b, g.coeff(b).inv());
}

/// True iff every S-polynomial of G reduces to zero modulo G.
inline bool is_groebner(std::span<const Polynomial> G, const WeightOrder& ord) {
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            if (G[i].is_zero() || G[j].is_zero()) continue;
            if (!normal_form(s_polynomial(G[i], G[j], ord), G, ord).is_zero()) return false;
        }
    return true;
}

/// Minimalize, normalize to monic, inter-reduce, then sort by leading monomial
/// (ascending) so equal ideals give identical sequences.
inline std::vector<Polynomial> reduce_basis(std::vector<Polynomial> G, const WeightOrder& ord) {
    std::erase_if(G, [](const Polynomial& g) { return g.is_zero(); });
    for (auto& g : G) g = g.monic(ord);
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        const Monomial& li = G[i].leading_monomial(ord);
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& lj = G[j].leading_monomial(ord);
            if (lj.divides(li) && (lj != li || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        const Monomial lt = minimal[i].leading_monomial(ord);
        Polynomial tail = minimal[i];
        tail.add_term(lt, -tail.coeff(lt));
        Polynomial reduced = normal_form(tail, others, ord);
        reduced.add_term(lt, minimal[i].field()->one());
        minimal[i] = reduced;
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
    });
    return minimal;
}

/// Reduced Groebner basis of the ideal generated by G0. The only pair
/// criterion applied is Buchberger's first (coprime leading monomials).
inline std::vector<Polynomial> buchberger(std::vector<Polynomial> G0, const WeightOrder& ord) {
    std::vector<Polynomial> G;
    for (auto& g : G0)
        if (!g.is_zero()) G.push_back(g.monic(ord));
    if (G.empty()) return {};
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 1; j < G.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        if (Monomial::coprime(G[i].leading_monomial(ord), G[j].leading_monomial(ord))) continue;
        Polynomial r = normal_form(s_polynomial(G[i], G[j], ord), G, ord);
        if (r.is_zero()) continue;
        G.push_back(r.monic(ord));
        if (G.back().leading_monomial(ord).is_one()) return {G.back()};
        for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
    }
    return reduce_basis(std::move(G), ord);
}

/// Standard monomials of a zero-dimensional ideal given by a Groebner basis,
/// in increasing order. Throws if the footprint is not finite.
inline std::vector<Monomial> finite_footprint(std::span<const Polynomial> G, const WeightOrder& ord, std::size_t nvars) {
    std::vector<int> bound(nvars, -1);
    std::vector<Monomial> lead;
    for (auto& g : G) {
        lead.push_back(g.leading_monomial(ord));
        const Monomial& m = lead.back();
        std::size_t nz = 0, which = 0;
        for (std::size_t i = 0; i < nvars; ++i)
            if (m[i] > 0) {
                ++nz;
                which = i;
            }
        if (nz == 0) return {};
        if (nz == 1 && (bound[which] < 0 || m[which] < bound[which])) bound[which] = m[which];
    }
    for (int b : bound)
        if (b < 0) throw Error(ErrorCode::NotWellOrdered, "ideal is not zero-dimensional");
    std::vector<Monomial> out;
    Monomial u(nvars);
    while (true) {
        bool standard = true;
        for (auto& l : lead)
            if (l.divides(u)) {
                standard = false;
                break;
            }
        if (standard) out.push_back(u);
        std::size_t i = 0;
        while (i < nvars) {
            if (++u[i] < bound[i]) break;
            u[i] = 0;
            ++i;
        }
        if (i == nvars) break;
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
    return out;
}

/// Reduced Groebner basis of the vanishing ideal of distinct points, built as
/// the product of their maximal ideals (comaximal, so product = intersection).
inline std::vector<Polynomial> ideal_of_points(std::span<const Point> points, const Field& field, std::size_t nvars,
                                               const WeightOrder& ord) {
    std::vector<Polynomial> G{Polynomial::constant(field, nvars, field->one())};
    for (auto& P : points) {
        std::vector<Polynomial> gens;
        for (auto& g : G)
            for (std::size_t i = 0; i < nvars; ++i) {
                Polynomial lin = Polynomial::variable(field, nvars, i);
                lin.add_term(Monomial::one(nvars), -P[i]);
                gens.push_back(g * lin);
            }
        G = buchberger(std::move(gens), ord);
    }
    return G;
}

}  // namespace ordercodes
