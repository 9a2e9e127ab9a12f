#pragma once

/**
 * @file inverse_system.hpp
 * @brief Window-truncated inverse power series sum c_u X^{-u}, the
 * contraction action of polynomials on them, point generators h_P and
 * positive parts (f g)_+.
 */

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace ordercodes {

/// Truncated series in X_1^{-1}..X_s^{-1}; coefficients are stored for
/// exponents 0 <= u_i <= window[i] and are zero when absent.
class InverseSeries {
   public:
    InverseSeries() = default;
    InverseSeries(Field f, Monomial window) : field_(std::move(f)), window_(std::move(window)) {
        for (std::size_t i = 0; i < window_.size(); ++i)
            if (window_[i] < 0) throw Error(ErrorCode::WindowExhausted, "negative series window");
    }

    const Field& field() const noexcept { return field_; }
    const Monomial& window() const noexcept { return window_; }
    std::size_t nvars() const noexcept { return window_.size(); }
    const std::map<Monomial, FieldElement>& coeffs() const noexcept { return c_; }

    bool in_window(const Monomial& u) const noexcept {
        if (u.size() != window_.size()) return false;
        for (std::size_t i = 0; i < u.size(); ++i)
            if (u[i] < 0 || u[i] > window_[i]) return false;
        return true;
    }

    FieldElement at(const Monomial& u) const {
        if (!in_window(u)) throw Error(ErrorCode::WindowMismatch, "series coefficient requested outside window");
        auto it = c_.find(u);
        return it == c_.end() ? field_->zero() : it->second;
    }
    void set(const Monomial& u, FieldElement v) {
        if (!in_window(u)) throw Error(ErrorCode::WindowMismatch, "series coefficient set outside window");
        if (v.is_zero())
            c_.erase(u);
        else
            c_[u] = v;
    }
    void add(const Monomial& u, FieldElement v) { set(u, at(u) + v); }

    bool is_zero() const noexcept { return c_.empty(); }

    /// Visit every exponent vector of the window.
    void for_each_exponent(const std::function<void(const Monomial&)>& fn) const {
        Monomial u(window_.size());
        while (true) {
            fn(u);
            std::size_t i = 0;
            while (i < u.size()) {
                if (++u[i] <= window_[i]) break;
                u[i] = 0;
                ++i;
            }
            if (i == u.size()) break;
        }
    }

    /// Restriction to a smaller window.
    InverseSeries restricted(const Monomial& w) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] > window_[i]) throw Error(ErrorCode::WindowMismatch, "restriction window exceeds series window");
        InverseSeries r(field_, w);
        for (auto& [u, v] : c_)
            if (r.in_window(u)) r.c_.emplace(u, v);
        return r;
    }

    InverseSeries& operator+=(const InverseSeries& b) {
        require_same_window(b);
        for (auto& [u, v] : b.c_) add(u, v);
        return *this;
    }
    friend InverseSeries operator+(InverseSeries a, const InverseSeries& b) { return a += b; }
    friend InverseSeries operator*(FieldElement k, const InverseSeries& a) {
        InverseSeries r(a.field_, a.window_);
        if (k.is_zero()) return r;
        for (auto& [u, v] : a.c_) r.c_.emplace(u, k * v);
        return r;
    }

    /// Equality is only defined on identical windows.
    friend bool operator==(const InverseSeries& a, const InverseSeries& b) {
        a.require_same_window(b);
        return a.c_ == b.c_;
    }

    /// Dump lines `u_1 ... u_s : code`, sorted by exponent.
    std::string dump() const {
        std::ostringstream os;
        for (auto& [u, v] : c_) {
            for (std::size_t i = 0; i < u.size(); ++i) os << (i ? " " : "") << u[i];
            os << " : " << v.code() << '\n';
        }
        return os.str();
    }

   private:
    void require_same_window(const InverseSeries& b) const {
        if (window_ != b.window_) throw Error(ErrorCode::WindowMismatch, "series windows differ");
    }

    Field field_;
    Monomial window_;
    std::map<Monomial, FieldElement> c_;
};

/// Product of two series in the ring of inverse power series (same window).
inline InverseSeries series_product(const InverseSeries& a, const InverseSeries& b) {
    if (a.window() != b.window()) throw Error(ErrorCode::WindowMismatch, "series windows differ");
    InverseSeries r(a.field(), a.window());
    for (auto& [u, x] : a.coeffs())
        for (auto& [v, y] : b.coeffs()) {
            Monomial w = u * v;
            if (r.in_window(w)) r.add(w, x * y);
        }
    return r;
}

/// f . g: coefficient at r is sum_m f_m g_{m+r}; the window shrinks by deg f.
inline InverseSeries contract(const Polynomial& f, const InverseSeries& g) {
    if (f.nvars() != g.nvars()) throw Error(ErrorCode::DimensionMismatch, "variable counts differ");
    Monomial deg = f.degree_vector();
    Monomial w(g.window());
    for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] -= deg[i];
        if (w[i] < 0) throw Error(ErrorCode::WindowExhausted, "contraction exhausts the series window");
    }
    InverseSeries r(g.field(), w);
    r.for_each_exponent([&](const Monomial& rr) {
        FieldElement acc = g.field()->zero();
        for (auto& [m, c] : f.terms()) acc += c * g.at(m * rr);
        if (!acc.is_zero()) r.set(rr, acc);
    });
    return r;
}

/// h_P: coefficient at u is P^u (with 0^0 = 1).
inline InverseSeries h_point(std::span<const FieldElement> P, const Monomial& window) {
    if (P.size() != window.size()) throw Error(ErrorCode::DimensionMismatch, "point length differs from window");
    if (P.empty()) throw Error(ErrorCode::DimensionMismatch, "empty point");
    const GaloisField* F = P[0].field();
    InverseSeries r(F->shared_from_this(), window);
    r.for_each_exponent([&](const Monomial& u) {
        FieldElement v = F->one();
        for (std::size_t i = 0; i < u.size(); ++i)
            if (u[i] > 0) v *= P[i].pow(static_cast<std::uint64_t>(u[i]));
        r.set(u, v);
    });
    return r;
}

/// S_e = sum_P e_P h_P over an explicit point list.
inline InverseSeries syndrome_series(std::span<const std::vector<FieldElement>> points,
                                     std::span<const FieldElement> values, const Monomial& window, const Field& field) {
    if (points.size() != values.size()) throw Error(ErrorCode::LengthMismatch, "points and values differ in length");
    InverseSeries S(field, window);
    for (std::size_t k = 0; k < points.size(); ++k) S += values[k] * h_point(points[k], window);
    return S;
}

/**
 * Positive part (f g)_+ of the Laurent product: the terms X^r with r >= 0 and
 * r != 0, coefficient sum_u f_{r+u} g_u. With a truncated g the coefficient at
 * r is exact only when every u with f_{r+u} != 0 lies in the window, i.e.
 * r_i >= deg_i(f) - window_i; that lower bound is recorded in valid_from.
 */
struct PositivePart {
    Polynomial poly;
    Monomial valid_from;

    bool fully_valid() const {
        for (std::size_t i = 0; i < valid_from.size(); ++i)
            if (valid_from[i] > 0) return false;
        return true;
    }
    bool valid_at(const Monomial& r) const {
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] < valid_from[i]) return false;
        return true;
    }

    /// poly / (X_1 ... X_s); throws if some term has a zero exponent.
    Polynomial divided_by_variables() const {
        Polynomial q(poly.field(), poly.nvars());
        Monomial all(poly.nvars());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = 1;
        for (auto& [u, c] : poly.terms()) {
            if (!all.divides(u)) throw Error(ErrorCode::NotDivisible, "positive part not divisible by X_1...X_s");
            q.add_term(u / all, c);
        }
        return q;
    }
};

inline PositivePart positive_part(const Polynomial& f, const InverseSeries& g) {
    if (f.nvars() != g.nvars()) throw Error(ErrorCode::DimensionMismatch, "variable counts differ");
    PositivePart out{Polynomial(g.field(), f.nvars()), Monomial(f.nvars())};
    Monomial deg = f.degree_vector();
    for (std::size_t i = 0; i < deg.size(); ++i) out.valid_from[i] = std::max(0, deg[i] - g.window()[i]);
    for (auto& [m, c] : f.terms())
        for (auto& [u, v] : g.coeffs()) {
            bool nonneg = true, positive = false;
            Monomial r(m);
            for (std::size_t i = 0; i < r.size(); ++i) {
                r[i] -= u[i];
                if (r[i] < 0) nonneg = false;
                if (r[i] > 0) positive = true;
            }
            if (nonneg && positive) out.poly.add_term(r, c * v);
        }
    return out;
}

/// True iff every coefficient of f . S outside the exempt set vanishes. With
/// no exemption this is the full key equation f . S_e = 0 on the window.
inline bool key_eq_check(const Polynomial& f, const InverseSeries& S,
                         const std::function<bool(const Monomial&)>& exempt = {}) {
    InverseSeries c = contract(f, S);
    for (auto& [r, v] : c.coeffs())
        if (!exempt || !exempt(r)) return false;
    return true;
}

}  // namespace ordercodes
