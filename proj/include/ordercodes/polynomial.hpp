#pragma once

#include <cctype>
#include <map>
#include <algorithm>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"

namespace ordercodes {

/// Sparse multivariate polynomial over a finite field. Terms are kept in a
/// map keyed by exponent vector; zero coefficients are never stored.
class Polynomial {
   public:
    using TermMap = std::map<Monomial, FieldElement>;

    Polynomial() = default;
    Polynomial(Field f, std::size_t nvars) : field_(std::move(f)), nvars_(nvars) {}

    static Polynomial constant(Field f, std::size_t nvars, FieldElement c) {
        Polynomial p(std::move(f), nvars);
        p.add_term(Monomial::one(nvars), c);
        return p;
    }
    static Polynomial monomial(Field f, const Monomial& u, std::optional<FieldElement> c = std::nullopt) {
        const std::size_t s = u.size();
        Polynomial p(f, s);
        p.add_term(u, c ? *c : f->one());
        return p;
    }
    static Polynomial variable(Field f, std::size_t nvars, std::size_t i) {
        return monomial(std::move(f), Monomial::var(nvars, i));
    }

    const Field& field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    FieldElement coeff(const Monomial& u) const {
        auto it = terms_.find(u);
        return it == terms_.end() ? field_->zero() : it->second;
    }

    void add_term(const Monomial& u, FieldElement c) {
        if (u.size() != nvars_) throw Error(ErrorCode::DimensionMismatch, "monomial length does not match polynomial");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(u, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& b) {
        adopt(b);
        for (auto& [u, c] : b.terms_) add_term(u, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& b) {
        adopt(b);
        for (auto& [u, c] : b.terms_) add_term(u, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const {
        Polynomial r(field_, nvars_);
        for (auto& [u, c] : terms_) r.terms_.emplace(u, -c);
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r(a.field_ ? a.field_ : b.field_, a.nvars_ ? a.nvars_ : b.nvars_);
        for (auto& [u, c] : a.terms_)
            for (auto& [v, d] : b.terms_) r.add_term(u * v, c * d);
        return r;
    }
    friend Polynomial operator*(FieldElement c, const Polynomial& a) {
        Polynomial r(a.field_, a.nvars_);
        if (c.is_zero()) return r;
        for (auto& [u, d] : a.terms_) r.terms_.emplace(u, c * d);
        return r;
    }
    /// Multiply by c * X^u.
    Polynomial shifted(const Monomial& u, FieldElement c) const {
        Polynomial r(field_, nvars_);
        if (c.is_zero()) return r;
        for (auto& [v, d] : terms_) r.terms_.emplace(v * u, c * d);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    /// Largest monomial in the support; requires a nonzero polynomial.
    const Monomial& leading_monomial(const WeightOrder& ord) const {
        if (terms_.empty()) throw Error(ErrorCode::DimensionMismatch, "leading monomial of zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(best); it != terms_.end(); ++it)
            if (ord.less(best->first, it->first)) best = it;
        return best->first;
    }
    FieldElement leading_coeff(const WeightOrder& ord) const { return terms_.at(leading_monomial(ord)); }

    Polynomial monic(const WeightOrder& ord) const {
        if (is_zero()) return *this;
        return leading_coeff(ord).inv() * *this;
    }

    /// Terms sorted from largest to smallest under ord.
    std::vector<std::pair<Monomial, FieldElement>> sorted_terms(const WeightOrder& ord) const {
        std::vector<std::pair<Monomial, FieldElement>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [&](auto& x, auto& y) { return ord.less(y.first, x.first); });
        return v;
    }

    int degree_in(std::size_t i) const {
        int d = 0;
        for (auto& [u, c] : terms_) d = std::max(d, u[i]);
        return d;
    }
    Monomial degree_vector() const {
        Monomial d(nvars_);
        for (auto& [u, c] : terms_)
            for (std::size_t i = 0; i < nvars_; ++i) d[i] = std::max(d[i], u[i]);
        return d;
    }

    FieldElement evaluate(std::span<const FieldElement> point) const {
        if (point.size() != nvars_) throw Error(ErrorCode::DimensionMismatch, "point length does not match variable count");
        FieldElement acc = field_->zero();
        for (auto& [u, c] : terms_) {
            FieldElement t = c;
            // 0^0 = 1
            for (std::size_t i = 0; i < nvars_; ++i)
                if (u[i] > 0) t *= point[i].pow(static_cast<std::uint64_t>(u[i]));
            acc += t;
        }
        return acc;
    }

    /// d/dX_i, with the exponent taken as an element of the prime field.
    Polynomial derivative(std::size_t i) const {
        if (i >= nvars_) throw Error(ErrorCode::DimensionMismatch, "derivative variable out of range");
        Polynomial r(field_, nvars_);
        for (auto& [u, c] : terms_) {
            if (u[i] == 0) continue;
            Monomial v(u);
            v[i] -= 1;
            r.add_term(v, field_->from_integer(u[i]) * c);
        }
        return r;
    }

    /// ASCII form `c*X^a*Y^b + ...`, largest term first, coefficient 1 omitted.
    std::string to_string(const WeightOrder& ord, const std::vector<std::string>& names) const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [u, c] : sorted_terms(ord)) {
            if (!first) os << " + ";
            first = false;
            bool wrote = false;
            if (!c.is_one() || u.is_one()) {
                os << c.code();
                wrote = true;
            }
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (u[i] == 0) continue;
                if (wrote) os << '*';
                os << names[i];
                if (u[i] > 1) os << '^' << u[i];
                wrote = true;
            }
        }
        return os.str();
    }

   private:
    void adopt(const Polynomial& b) {
        if (!field_) {
            field_ = b.field_;
            nvars_ = b.nvars_;
        }
    }

    Field field_;
    std::size_t nvars_ = 0;
    TermMap terms_;
};

/// Parse the ASCII polynomial grammar: terms joined by `+` (a leading `-`
/// negates a term), each term `<code>*X1^e1*X2^e2...` with the integer element
/// code optional. Whitespace is insignificant.
inline Polynomial parse_polynomial(const std::string& text, const Field& field, const std::vector<std::string>& names) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    const std::size_t nv = names.size();
    Polynomial out(field, nv);
    if (s.empty()) throw Error(ErrorCode::Parse, "empty polynomial");
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::Parse, why + " at position " + std::to_string(pos) + " in '" + text + "'");
    };
    auto read_int = [&]() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return std::stoul(s.substr(start, pos - start));
    };
    while (pos < s.size()) {
        bool negate = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negate = s[pos] == '-';
            ++pos;
        } else if (pos != 0) {
            fail("expected '+'");
        }
        FieldElement coef = field->one();
        Monomial u(nv);
        bool any = false;
        while (true) {
            if (pos >= s.size()) fail("unexpected end");
            if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
                auto code = read_int();
                if (code >= field->q()) fail("element code out of range");
                coef *= field->element(static_cast<std::uint32_t>(code));
            } else if (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_') {
                std::size_t start = pos;
                while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
                std::string name = s.substr(start, pos - start);
                auto it = std::find(names.begin(), names.end(), name);
                if (it == names.end()) fail("unknown variable '" + name + "'");
                int e = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    e = static_cast<int>(read_int());
                }
                u[static_cast<std::size_t>(it - names.begin())] += e;
            } else {
                fail("unexpected character");
            }
            any = true;
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!any) fail("empty term");
        out.add_term(u, negate ? -coef : coef);
    }
    return out;
}

}  // namespace ordercodes
