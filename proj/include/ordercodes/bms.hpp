#pragma once

/**
 * @file bms.hpp
 * @brief Berlekamp-Massey-Sakata iteration over the index semigroup of an
 * order domain, with Feng-Rao majority voting for unknown syndromes, and a
 * direct linear-algebra locator oracle.
 *
 * Notation follows the decoder state: after step m the footprint Delta_m is a
 * divisor-closed set of indices, sigma_m its minimal non-members and delta_m
 * its maximal members. For s in sigma_m the polynomial F[s] has o(F[s]) = s
 * and Syn(F[s] X^{alpha(j)}) = 0 whenever s (+) j <= m. For c in delta_m the
 * witness G[c] has span c and fails at or before m.
 */

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <vector>

#include "syndrome_table.hpp"

namespace ordercodes {

struct VoteRecord {
    std::size_t m = 0;
    Monomial monomial;
    FieldElement value;
    std::size_t votes_for = 0;
    std::size_t voters = 0;
    std::vector<std::pair<FieldElement, std::size_t>> tally;
};

struct Witness {
    Polynomial g;
    FieldElement discrepancy;  // Syn(g X^{alpha(span)})
    std::size_t span = 0;
    std::size_t fail = 0;
};

struct BMSState {
    std::size_t m = 0;
    std::vector<std::size_t> footprint;  // Delta_m, sorted
    std::vector<std::size_t> sigma;      // exterior corners
    std::vector<std::size_t> corners;    // interior corners delta_m
    std::map<std::size_t, Polynomial> F;
    std::map<std::size_t, Witness> G;
};

struct StepInfo {
    std::size_t m = 0;
    Monomial monomial;
    const BMSState* state = nullptr;
    std::optional<VoteRecord> vote;
};

struct BMSOptions {
    bool voting = true;
    /// Hard cap on the iteration index; 0 picks 4 * (l + n).
    std::size_t t_max = 0;
    std::function<void(const StepInfo&)> on_step;
};

struct LocatorIdeal {
    std::vector<Polynomial> basis;   // reduced Groebner basis
    std::vector<Monomial> footprint; // Delta_E in increasing order
    std::size_t error_count() const noexcept { return footprint.size(); }
    std::vector<VoteRecord> votes;
    std::size_t final_m = 0;
};

namespace detail {

inline std::vector<std::size_t> down_closure(const OrderDomain& dom, const std::set<std::size_t>& gens) {
    std::set<std::size_t> out;
    for (std::size_t k : gens)
        for (std::size_t j = 1; j <= k; ++j)
            if (!out.count(j) && dom.divides(j, k)) out.insert(j);
    return {out.begin(), out.end()};
}

inline std::vector<std::size_t> exterior_corners(const OrderDomain& dom, const std::vector<std::size_t>& D) {
    if (D.empty()) return {1};
    std::set<std::size_t> inD(D.begin(), D.end());
    std::vector<Weight> atoms;
    for (std::size_t i = 0; i < dom.nvars(); ++i) atoms.push_back(dom.order().weight(Monomial::var(dom.nvars(), i)));
    std::set<std::size_t> cand;
    for (std::size_t d : D) {
        Weight wd = dom.weight_at(d);
        for (auto& a : atoms) {
            Weight w = wd;
            for (std::size_t r = 0; r < w.size(); ++r) w[r] += a[r];
            auto idx = dom.index_of_weight(w);
            if (idx && !inD.count(*idx)) cand.insert(*idx);
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t c : cand) {
        bool minimal = true;
        for (std::size_t o : cand)
            if (o != c && dom.divides(o, c)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(c);
    }
    return out;
}

inline std::vector<std::size_t> interior_corners(const OrderDomain& dom, const std::vector<std::size_t>& D) {
    std::vector<std::size_t> out;
    for (std::size_t c : D) {
        bool maximal = true;
        for (std::size_t o : D)
            if (o != c && dom.divides(c, o)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(c);
    }
    return out;
}

inline Polynomial shift(const OrderDomain& dom, const Polynomial& f, std::size_t t) {
    return dom.reduce(f.shifted(dom.monomial(t), dom.field()->one()));
}

}  // namespace detail

inline BMSState bms_initial(const OrderDomain& dom) {
    BMSState st;
    st.sigma = {1};
    st.F.emplace(1, Polynomial::constant(dom.field(), dom.nvars(), dom.field()->one()));
    return st;
}

/// Syn(f X^{alpha(k)}).
inline std::optional<FieldElement> discrepancy(const SyndromeTable& table, const Polynomial& f, std::size_t k) {
    const auto& dom = table.code().domain();
    return table.syn(f.shifted(dom.monomial(k), dom.field()->one()));
}

/// (span, fail) of f: span is the least index l with Syn(f X^{alpha(l)}) != 0,
/// scanning up to `horizon`; nullopt pair members mean infinity.
inline std::pair<std::optional<std::size_t>, std::optional<std::size_t>> span_fail(const SyndromeTable& table,
                                                                                   const Polynomial& f,
                                                                                   std::size_t horizon) {
    const auto& dom = table.code().domain();
    long o = dom.o_index(f);
    if (o < 0) return {std::nullopt, std::nullopt};
    for (std::size_t l = 1; l <= horizon; ++l) {
        auto d = discrepancy(table, f, l);
        if (!d)
            throw Error(ErrorCode::NeedSyndrome,
                        "span scan needs an unknown syndrome at " + dom.presentation().format(dom.monomial(l)));
        if (!d->is_zero()) return {l, dom.oplus(static_cast<std::size_t>(o), l)};
    }
    return {std::nullopt, std::nullopt};
}

/**
 * Feng-Rao vote for the unknown syndrome at Delta[m+1]. Every s in sigma_m
 * with (m+1) (-) s defined proposes the value that makes F[s] valid at m+1.
 * Voters are the indices j outside Delta_m whose cofactor (m+1) (-) j is also
 * outside Delta_m; each casts the proposal of a corner dividing it.
 */
inline VoteRecord majority_vote(const BMSState& st, const SyndromeTable& table) {
    const auto& dom = table.code().domain();
    const std::size_t M = st.m + 1;
    const Monomial u = dom.monomial(M);
    std::set<std::size_t> inD(st.footprint.begin(), st.footprint.end());
    std::map<std::size_t, FieldElement> proposal;
    for (std::size_t s : st.sigma) {
        auto k = dom.ominus(M, s);
        if (!k) continue;
        Polynomial probe = st.F.at(s).shifted(dom.monomial(*k), dom.field()->one());
        auto lin = table.syn_linear(probe, u);
        if (!lin) throw Error(ErrorCode::NeedSyndrome, "vote needs a second unknown syndrome");
        if (lin->second.is_zero()) continue;
        proposal.emplace(s, -lin->first / lin->second);
    }
    VoteRecord rec;
    rec.m = M;
    rec.monomial = u;
    std::map<std::uint32_t, std::size_t> count;
    for (std::size_t j = 1; j <= M; ++j) {
        if (inD.count(j)) continue;
        auto k = dom.ominus(M, j);
        if (!k || inD.count(*k)) continue;
        std::optional<FieldElement> v;
        for (std::size_t s : st.sigma)
            if (dom.divides(s, j) && proposal.count(s)) {
                v = proposal.at(s);
                break;
            }
        if (!v) continue;
        ++rec.voters;
        ++count[v->code()];
    }
    for (auto& [code, c] : count) rec.tally.emplace_back(dom.field()->element(code), c);
    std::sort(rec.tally.begin(), rec.tally.end(), [](auto& a, auto& b) {
        return a.second != b.second ? a.second > b.second : a.first.code() < b.first.code();
    });
    if (rec.tally.empty() || 2 * rec.tally.front().second <= rec.voters) {
        std::ostringstream os;
        os << "no strict majority for " << dom.presentation().format(u) << " (" << rec.voters << " voters)";
        throw Error(ErrorCode::NoMajority, os.str());
    }
    rec.value = rec.tally.front().first;
    rec.votes_for = rec.tally.front().second;
    return rec;
}

/// One BMS update m -> m+1. Votes first when the syndrome at Delta[m+1] is
/// unknown and voting is enabled.
inline std::optional<VoteRecord> bms_step(BMSState& st, SyndromeTable& table, bool voting = true) {
    const auto& dom = table.code().domain();
    const std::size_t M = st.m + 1;
    const Monomial u = dom.monomial(M);
    std::optional<VoteRecord> vote;
    if (!table.get(u)) {
        if (!voting) throw Error(ErrorCode::NeedSyndrome, "syndrome at " + dom.presentation().format(u) + " is unknown");
        vote = majority_vote(st, table);
        table.set_voted(u, vote->value);
    }
    auto disc = [&](const Polynomial& f, std::size_t k) {
        auto d = discrepancy(table, f, k);
        if (!d) throw Error(ErrorCode::NeedSyndrome, "discrepancy needs an unknown syndrome");
        return *d;
    };

    struct Failure {
        std::size_t span;
        FieldElement d;
    };
    std::map<std::size_t, Failure> failing;
    std::set<std::size_t> grow(st.footprint.begin(), st.footprint.end());
    for (std::size_t s : st.sigma) {
        auto k = dom.ominus(M, s);
        if (!k) continue;
        FieldElement d = disc(st.F.at(s), *k);
        if (d.is_zero()) continue;
        failing.emplace(s, Failure{*k, d});
        grow.insert(*k);
    }

    BMSState next;
    next.m = M;
    next.footprint = failing.empty() ? st.footprint : detail::down_closure(dom, grow);
    next.sigma = detail::exterior_corners(dom, next.footprint);
    next.corners = detail::interior_corners(dom, next.footprint);

    for (std::size_t sp : next.sigma) {
        if (st.F.count(sp) && !failing.count(sp)) {
            next.F.emplace(sp, st.F.at(sp));
            continue;
        }
        std::size_t s = 0;
        if (st.F.count(sp)) {
            s = sp;
        } else {
            for (std::size_t c : st.sigma)
                if (dom.divides(c, sp)) {
                    s = c;
                    break;
                }
        }
        if (s == 0) throw Error(ErrorCode::DecodeFailure, "no old corner divides a new corner");
        Polynomial f1 = detail::shift(dom, st.F.at(s), *dom.ominus(sp, s));
        if (auto k1 = dom.ominus(M, sp)) {
            FieldElement d1 = disc(f1, *k1);
            if (!d1.is_zero()) {
                bool fixed = false;
                for (std::size_t c : st.corners) {
                    auto t = dom.ominus(c, *k1);
                    if (!t) continue;
                    Polynomial h = detail::shift(dom, st.G.at(c).g, *t);
                    FieldElement d2 = disc(h, *k1);
                    if (d2.is_zero()) continue;
                    f1 -= (d1 / d2) * h;
                    fixed = true;
                    break;
                }
                if (!fixed) throw Error(ErrorCode::DecodeFailure, "no witness polynomial to cancel a discrepancy");
            }
        }
        next.F.emplace(sp, f1.monic(dom.order()));
    }

    for (std::size_t c : next.corners) {
        if (auto it = st.G.find(c); it != st.G.end()) {
            next.G.emplace(c, it->second);
            continue;
        }
        for (auto& [s, fl] : failing)
            if (fl.span == c) {
                next.G.emplace(c, Witness{st.F.at(s), fl.d, c, M});
                break;
            }
        if (!next.G.count(c)) throw Error(ErrorCode::DecodeFailure, "interior corner without witness");
    }
    st = std::move(next);
    return vote;
}

/**
 * Last index the iteration must reach given the current state: with at most
 * T = floor((d_FR - 1) / 2) errors, any later failure of a corner polynomial
 * F[s] would add some c to the footprint with |down(c) u Delta_m| <= T, and it
 * would be witnessed at s (+) c. Beyond the maximum of those indices no
 * failure can occur, so F_m generates the locator ideal.
 */
inline std::size_t bms_horizon(const OrderDomain& dom, const BMSState& st, std::size_t T) {
    std::set<std::size_t> inD(st.footprint.begin(), st.footprint.end());
    if (inD.size() > T) throw Error(ErrorCode::DecodeFailure, "footprint exceeds the Feng-Rao radius");
    const std::size_t s = dom.nvars();
    std::vector<std::size_t> cands;
    Monomial u(s);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t prod) {
        if (i == s) {
            if (auto idx = dom.index_of_monomial(u)) cands.push_back(*idx);
            return;
        }
        for (int e = 0; prod * static_cast<std::size_t>(e + 1) <= std::max<std::size_t>(T, 1); ++e) {
            u[i] = e;
            rec(i + 1, prod * static_cast<std::size_t>(e + 1));
        }
        u[i] = 0;
    };
    rec(0, 1);
    std::size_t far = 0;
    for (std::size_t c : cands) {
        std::set<std::size_t> un(inD);
        for (std::size_t j = 1; j <= c; ++j)
            if (dom.divides(j, c)) un.insert(j);
        if (un.size() > T) continue;
        for (std::size_t sg : st.sigma) far = std::max(far, dom.oplus(sg, c));
    }
    return far;
}

/// Reduced Groebner basis from the corner polynomials together with I.
inline std::vector<Polynomial> locator_basis(const OrderDomain& dom, const BMSState& st) {
    std::vector<Polynomial> gens;
    for (auto& [s, f] : st.F) gens.push_back(f);
    for (auto& g : dom.generators()) gens.push_back(g);
    return buchberger(std::move(gens), dom.order());
}

inline LocatorIdeal bms_run(SyndromeTable& table, const BMSOptions& opts = {}) {
    const auto& code = table.code();
    const auto& dom = code.domain();
    const std::size_t T = code.radius();
    const std::size_t cap = opts.t_max ? opts.t_max : 4 * (code.ell() + code.length());
    LocatorIdeal out;
    BMSState st = bms_initial(dom);
    while (st.m < std::max(code.ell(), bms_horizon(dom, st, T))) {
        if (st.m >= cap) throw Error(ErrorCode::DecodeFailure, "iteration cap reached before stabilizing");
        std::optional<VoteRecord> vote;
        try {
            vote = bms_step(st, table, opts.voting);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::NoMajority) throw Error(ErrorCode::DecodeFailure, std::string("vote: ") + e.what());
            throw;
        }
        if (vote) out.votes.push_back(*vote);
        if (opts.on_step) opts.on_step(StepInfo{st.m, dom.monomial(st.m), &st, vote});
    }
    out.final_m = st.m;
    out.basis = locator_basis(dom, st);
    out.footprint = finite_footprint(out.basis, dom.order(), dom.nvars());
    if (out.footprint.size() != st.footprint.size())
        throw Error(ErrorCode::DecodeFailure, "locator footprint disagrees with the BMS footprint");
    return out;
}

inline LocatorIdeal bms_run(std::shared_ptr<const EvaluationCode> code, const Word& received, std::size_t t_max = 0) {
    SyndromeTable table(std::move(code), received);
    BMSOptions opts;
    opts.t_max = t_max;
    return bms_run(table, opts);
}

/**
 * Locator ideal straight from a complete syndrome table: candidate leading
 * monomials are taken in increasing order and X^u + sum_{d in D} c_d X^d is
 * sought with Syn(f X^v) = 0 for every keyed v, which forces f to vanish on
 * the error support. Unsolvable candidates join the footprint D.
 */
inline LocatorIdeal locator_oracle(const SyndromeTable& table, std::size_t bound) {
    const auto& dom = table.code().domain();
    const auto& ord = dom.order();
    const auto& F = dom.field();
    const std::size_t s = dom.nvars();
    auto cmp = [&](const Monomial& a, const Monomial& b) { return ord.less(b, a); };
    std::priority_queue<Monomial, std::vector<Monomial>, decltype(cmp)> queue(cmp);
    std::set<Monomial> queued;
    queue.push(Monomial(s));
    queued.insert(Monomial(s));
    std::vector<Monomial> D, lead;
    std::vector<Polynomial> basis;
    const auto& keys = table.monomials();
    auto entry = [&](const Monomial& a) {
        auto v = table.get(a);
        if (!v) throw Error(ErrorCode::NeedSyndrome, "locator oracle needs a complete table");
        return *v;
    };
    while (!queue.empty()) {
        Monomial u = queue.top();
        queue.pop();
        bool covered = false;
        for (auto& l : lead)
            if (l.divides(u)) covered = true;
        if (covered) continue;
        Matrix A(F.get(), keys.size(), D.size());
        std::vector<FieldElement> b(keys.size(), F->zero());
        for (std::size_t r = 0; r < keys.size(); ++r) {
            for (std::size_t c = 0; c < D.size(); ++c) A(r, c) = entry(D[c] * keys[r]);
            b[r] = -entry(u * keys[r]);
        }
        if (auto x = A.solve(b)) {
            Polynomial f = Polynomial::monomial(F, u);
            for (std::size_t c = 0; c < D.size(); ++c) f.add_term(D[c], (*x)[c]);
            lead.push_back(u);
            basis.push_back(f);
            continue;
        }
        D.push_back(u);
        if (D.size() > bound) throw Error(ErrorCode::RankDeficient, "footprint exceeds the oracle bound");
        for (std::size_t i = 0; i < s; ++i) {
            Monomial v = u * Monomial::var(s, i);
            if (queued.insert(v).second) queue.push(v);
        }
    }
    LocatorIdeal out;
    out.basis = reduce_basis(std::move(basis), ord);
    out.footprint = finite_footprint(out.basis, ord, s);
    return out;
}

}  // namespace ordercodes
