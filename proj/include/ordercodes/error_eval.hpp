#pragma once

/**
 * @file error_eval.hpp
 * @brief Error positions and values from a locator ideal: exhaustive variety
 * search, elimination polynomials by normal-form dependence, and the
 * generalized Forney formula e_P = g(P) / prod f_l'(P_l) with
 * g = (f_1 ... f_s S_e)_+ / (X_1 ... X_s).
 */

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "bms.hpp"

namespace ordercodes {

/// Indices of code points on which every basis polynomial vanishes.
inline std::vector<std::size_t> variety(const LocatorIdeal& L, const std::vector<Point>& points) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < points.size(); ++j) {
        bool zero = true;
        for (auto& f : L.basis)
            if (!f.evaluate(points[j]).is_zero()) {
                zero = false;
                break;
            }
        if (zero) out.push_back(j);
    }
    if (out.size() != L.footprint.size())
        throw Error(ErrorCode::CardinalityMismatch, "variety has " + std::to_string(out.size()) +
                                                        " points, footprint has " + std::to_string(L.footprint.size()));
    return out;
}

/// Monic generator of I_E intersected with F_q[X_i]: the first power X_i^k
/// whose normal form depends linearly on those of 1, X_i, ..., X_i^{k-1}.
inline Polynomial elimination_poly(const LocatorIdeal& L, std::size_t i, const WeightOrder& ord, const Field& field) {
    const std::size_t s = ord.nvars();
    const auto& fp = L.footprint;
    std::map<Monomial, std::size_t> col;
    for (std::size_t k = 0; k < fp.size(); ++k) col.emplace(fp[k], k);
    std::vector<std::vector<FieldElement>> nfs;
    for (int k = 0;; ++k) {
        Polynomial nf = normal_form(Polynomial::monomial(field, Monomial::var(s, i, k)), L.basis, ord);
        std::vector<FieldElement> v(fp.size(), field->zero());
        for (auto& [u, c] : nf.terms()) v[col.at(u)] = c;
        Matrix A(field.get(), fp.size(), nfs.size());
        for (std::size_t r = 0; r < fp.size(); ++r)
            for (std::size_t c = 0; c < nfs.size(); ++c) A(r, c) = nfs[c][r];
        if (auto x = A.solve(v)) {
            Polynomial f = Polynomial::monomial(field, Monomial::var(s, i, k));
            for (std::size_t c = 0; c < nfs.size(); ++c) f.add_term(Monomial::var(s, i, static_cast<int>(c)), -(*x)[c]);
            return f;
        }
        nfs.push_back(std::move(v));
    }
}

/**
 * Forney-style values on the support E. f holds the elimination polynomials
 * f_1..f_s; the syndrome window (deg f_1, ..., deg f_s) is enough for every
 * coefficient of the positive part to be exact.
 */
inline ErrorVector error_values(const std::vector<std::size_t>& support, const std::vector<Point>& points,
                                const std::vector<Polynomial>& f, const SyndromeTable& table) {
    const auto& field = table.code().field();
    const std::size_t s = f.size();
    Polynomial prod = Polynomial::constant(field, s, field->one());
    Monomial window(s);
    for (std::size_t i = 0; i < s; ++i) {
        prod = prod * f[i];
        window[i] = f[i].degree_in(i);
    }
    InverseSeries S = table.series(window);
    PositivePart pp = positive_part(prod, S);
    if (!pp.fully_valid()) throw Error(ErrorCode::WindowExhausted, "syndrome window too small for the positive part");
    Polynomial g = pp.divided_by_variables();
    std::vector<Polynomial> df;
    for (std::size_t i = 0; i < s; ++i) df.push_back(f[i].derivative(i));
    ErrorVector e;
    for (std::size_t j : support) {
        const Point& P = points[j];
        FieldElement den = field->one();
        for (std::size_t i = 0; i < s; ++i) den *= df[i].evaluate(P);
        if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "elimination polynomial has a repeated root");
        FieldElement v = g.evaluate(P) / den;
        if (!v.is_zero()) e.emplace(j, v);
    }
    return e;
}

/// Sum of e_P over the points with X_i(P) = a, from the univariate positive
/// part (f_i S_e)_+ = X_i g.
inline FieldElement aggregate_values(FieldElement a, const Polynomial& fi, std::size_t i, const SyndromeTable& table) {
    const auto& field = table.code().field();
    const std::size_t s = fi.nvars();
    Monomial window(s);
    window[i] = fi.degree_in(i);
    InverseSeries S = table.series(window);
    PositivePart pp = positive_part(fi, S);
    Polynomial g(field, s);
    for (auto& [u, c] : pp.poly.terms()) g.add_term(u / Monomial::var(s, i), c);
    Point P(s, field->zero());
    P[i] = a;
    FieldElement den = fi.derivative(i).evaluate(P);
    if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "a is a repeated root of f_i");
    return g.evaluate(P) / den;
}

struct DecodeResult {
    Word corrected;
    ErrorVector error;
    LocatorIdeal locator;
    std::vector<Polynomial> elimination;
    std::size_t radius = 0;

    std::string diagnostics(const Presentation& p) const {
        std::ostringstream os;
        os << "errors: " << error.size() << " (radius " << radius << ")\n";
        os << "footprint:";
        for (auto& u : locator.footprint) os << ' ' << p.format(u);
        os << "\nlocator basis:\n";
        for (auto& g : locator.basis) os << "  " << p.format(g) << '\n';
        os << "votes:";
        if (locator.votes.empty()) os << " none";
        for (auto& v : locator.votes) os << ' ' << p.format(v.monomial) << '=' << v.value.code() << '(' << v.votes_for << '/' << v.voters << ')';
        os << '\n';
        return os.str();
    }
};

namespace detail {
inline Error stage_failure(const char* stage, const Error& e) {
    return Error(ErrorCode::DecodeFailure, std::string(stage) + ": " + e.message());
}
}  // namespace detail

/// table -> BMS -> variety -> elimination polynomials -> values -> correction.
inline DecodeResult decode(std::shared_ptr<const EvaluationCode> code, const Word& received,
                           const BMSOptions& opts = {}) {
    code->check_length(received);
    SyndromeTable table(code, received);
    DecodeResult res;
    res.radius = code->radius();
    try {
        res.locator = bms_run(table, opts);
    } catch (const Error& e) {
        throw detail::stage_failure("locator", e);
    }
    std::vector<std::size_t> support;
    try {
        support = variety(res.locator, code->points());
    } catch (const Error& e) {
        throw detail::stage_failure("variety", e);
    }
    try {
        const auto& dom = code->domain();
        for (std::size_t i = 0; i < dom.nvars(); ++i)
            res.elimination.push_back(elimination_poly(res.locator, i, dom.order(), dom.field()));
        if (!support.empty()) {
            table.extend_with_locator(res.locator.basis);
            res.error = error_values(support, code->points(), res.elimination, table);
        }
    } catch (const Error& e) {
        throw detail::stage_failure("values", e);
    }
    if (res.error.size() != support.size())
        throw Error(ErrorCode::DecodeFailure, "values: zero error value on a located point");
    res.corrected = received;
    for (auto& [j, v] : res.error) res.corrected[j] -= v;
    if (!code->is_codeword(res.corrected))
        throw Error(ErrorCode::DecodeFailure, "check: corrected word has nonzero syndromes");
    return res;
}

}  // namespace ordercodes
