#pragma once

#include <optional>
#include <vector>

#include "field.hpp"

namespace ordercodes {

/// Dense row-major matrix over a finite field.
class Matrix {
   public:
    Matrix() = default;
    Matrix(const GaloisField* f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, f->zero()) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    FieldElement& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    FieldElement operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    const GaloisField* field() const noexcept { return field_; }

    std::vector<FieldElement> row(std::size_t r) const {
        return {a_.begin() + static_cast<long>(r * cols_), a_.begin() + static_cast<long>((r + 1) * cols_)};
    }

    /// In-place reduced row echelon form; returns pivot columns in order.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t piv = r;
            while (piv < rows_ && (*this)(piv, c).is_zero()) ++piv;
            if (piv == rows_) continue;
            if (piv != r)
                for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(piv, k), (*this)(r, k));
            FieldElement inv = (*this)(r, c).inv();
            for (std::size_t k = c; k < cols_; ++k) (*this)(r, k) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || (*this)(i, c).is_zero()) continue;
                FieldElement f = (*this)(i, c);
                for (std::size_t k = c; k < cols_; ++k) (*this)(i, k) -= f * (*this)(r, k);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix m(*this);
        return m.rref().size();
    }

    /// Basis of {x : A x = 0}, one vector per free column in increasing column order.
    std::vector<std::vector<FieldElement>> nullspace() const {
        Matrix m(*this);
        auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<FieldElement>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<FieldElement> v(cols_, field_->zero());
            v[free] = field_->one();
            for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Some solution of A x = b, or nullopt if inconsistent.
    std::optional<std::vector<FieldElement>> solve(const std::vector<FieldElement>& b) const {
        Matrix aug(field_, rows_, cols_ + 1);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
            aug(r, cols_) = b[r];
        }
        auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<FieldElement> x(cols_, field_->zero());
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, cols_);
        return x;
    }

   private:
    const GaloisField* field_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<FieldElement> a_;
};

}  // namespace ordercodes
