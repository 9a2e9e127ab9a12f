#pragma once

// Independent reference computations used by the tests. None of these call
// the decoder paths they are compared against.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "ordercodes/ordercodes.hpp"

namespace oracle {

using namespace ordercodes;

/// Schoolbook product of base-p digit vectors reduced by the modulus.
inline std::uint32_t poly_mul(std::uint32_t p, const std::vector<std::uint32_t>& mod, std::uint32_t a, std::uint32_t b) {
    const std::size_t m = mod.size() - 1;
    std::vector<std::uint32_t> da(m), db(m), prod(2 * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        da[i] = a % p;
        a /= p;
        db[i] = b % p;
        b /= p;
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    for (std::size_t k = 2 * m; k-- > m;) {
        std::uint32_t c = prod[k];
        for (std::size_t i = 0; i <= m; ++i) prod[k - m + i] = (prod[k - m + i] + (p - c) * mod[i] % p) % p;
    }
    std::uint32_t r = 0;
    for (std::size_t i = m; i-- > 0;) r = r * p + prod[i];
    return r;
}

/// nu_m by normal forms: #{(i, j) : i, j <= m, o(X^a(i) X^a(j)) = m}.
inline std::size_t nu_by_normal_form(const OrderDomain& dom, std::size_t m) {
    std::size_t count = 0;
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= m; ++j) {
            Polynomial prod = Polynomial::monomial(dom.field(), dom.monomial(i) * dom.monomial(j));
            if (dom.o_index(prod) == static_cast<long>(m)) ++count;
        }
    return count;
}

inline std::size_t feng_rao_by_scan(const OrderDomain& dom, std::size_t ell, std::size_t horizon) {
    std::size_t best = SIZE_MAX;
    for (std::size_t m = ell + 1; m <= horizon; ++m) best = std::min(best, nu_by_normal_form(dom, m));
    return best;
}

/// Uniform random error of the given weight on n positions.
inline ErrorVector random_error(const GaloisField& F, std::size_t n, std::size_t weight, std::mt19937_64& rng) {
    std::vector<std::size_t> idx(n);
    for (std::size_t j = 0; j < n; ++j) idx[j] = j;
    std::shuffle(idx.begin(), idx.end(), rng);
    ErrorVector e;
    std::uniform_int_distribution<std::uint32_t> val(1, F.q() - 1);
    for (std::size_t k = 0; k < weight; ++k) e.emplace(idx[k], F.element(val(rng)));
    return e;
}

/// Reduced Groebner basis of the support's vanishing ideal, from the points alone.
inline std::vector<Polynomial> support_ideal(const EvaluationCode& code, const ErrorVector& e) {
    std::vector<Point> pts;
    for (auto& [j, v] : e) pts.push_back(code.points()[j]);
    return ideal_of_points(pts, code.field(), code.domain().nvars(), code.domain().order());
}

// ---- Textbook Reed-Solomon decoding (univariate vectors, low degree first) ----

using UPoly = std::vector<FieldElement>;

inline FieldElement ueval(const UPoly& f, FieldElement x) {
    FieldElement acc = x.field()->zero();
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

/// Massey's shift-register synthesis: shortest C with C_0 = 1 and
/// sum_i C_i S_{k-i} = 0 for all k >= L.
inline UPoly berlekamp_massey(const std::vector<FieldElement>& S) {
    const GaloisField* F = S.front().field();
    UPoly C{F->one()}, B{F->one()};
    std::size_t L = 0, shift = 1;
    FieldElement b = F->one();
    for (std::size_t k = 0; k < S.size(); ++k) {
        FieldElement d = S[k];
        for (std::size_t i = 1; i <= L && i < C.size(); ++i) d += C[i] * S[k - i];
        if (d.is_zero()) {
            ++shift;
            continue;
        }
        UPoly T = C;
        FieldElement coef = d / b;
        if (C.size() < B.size() + shift) C.resize(B.size() + shift, F->zero());
        for (std::size_t i = 0; i < B.size(); ++i) C[i + shift] -= coef * B[i];
        if (2 * L <= k) {
            L = k + 1 - L;
            B = T;
            b = d;
            shift = 1;
        } else {
            ++shift;
        }
    }
    C.resize(L + 1, F->zero());
    return C;
}

/// Decode a syndrome sequence S_k = sum e_i x_i^k (k = 0..2t-1) over the
/// locators x in `points`; Forney: e_i = -x_i Omega(x_i^{-1}) / Lambda'(x_i^{-1}).
inline std::optional<ErrorVector> rs_decode(const std::vector<FieldElement>& S, const std::vector<FieldElement>& points) {
    const GaloisField* F = S.front().field();
    UPoly lambda = berlekamp_massey(S);
    const std::size_t nu = lambda.size() - 1;
    UPoly omega(S.size(), F->zero());
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = 0; j <= nu && i + j < S.size(); ++j) omega[i + j] += S[i] * lambda[j];
    UPoly dlambda;
    for (std::size_t i = 1; i < lambda.size(); ++i) dlambda.push_back(F->from_integer(static_cast<long long>(i)) * lambda[i]);
    ErrorVector e;
    for (std::size_t j = 0; j < points.size(); ++j) {
        FieldElement xinv = points[j].inv();
        if (!ueval(lambda, xinv).is_zero()) continue;
        FieldElement den = ueval(dlambda, xinv);
        if (den.is_zero()) return std::nullopt;
        FieldElement v = -(points[j] * ueval(omega, xinv)) / den;
        if (v.is_zero()) return std::nullopt;
        e.emplace(j, v);
    }
    if (e.size() != nu) return std::nullopt;
    return e;
}

/// Row space of a set of vectors, as an RREF basis.
inline std::vector<std::vector<FieldElement>> row_space(const GaloisField* F, const std::vector<std::vector<FieldElement>>& rows,
                                                        std::size_t cols) {
    Matrix A(F, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) A(r, c) = rows[r][c];
    auto piv = A.rref();
    std::vector<std::vector<FieldElement>> out;
    for (std::size_t r = 0; r < piv.size(); ++r) out.push_back(A.row(r));
    return out;
}

}  // namespace oracle
