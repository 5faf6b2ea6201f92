#pragma once

#include <string>
#include <vector>

#include "quadop/poly.hpp"

namespace quadop {

// Dense rectangular matrix with polynomial entries over a shared ring.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols),
          a_(rows * cols, Poly(ring_)) {}

    static PolyMatrix identity(const RingPtr& ring, std::size_t n) {
        PolyMatrix m(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly(ring, Rational(1));
        return m;
    }

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Poly& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
    }
    // row i += c * row r
    void row_addmul(std::size_t i, std::size_t r, const Poly& c) {
        for (std::size_t k = 0; k < cols_; ++k)
            if (!at(r, k).is_zero()) at(i, k) += c * at(r, k);
    }
    // col j += c * col r
    void col_addmul(std::size_t j, std::size_t r, const Poly& c) {
        for (std::size_t k = 0; k < rows_; ++k)
            if (!at(k, r).is_zero()) at(k, j) += c * at(k, r);
    }
    void scale_row(std::size_t i, const Rational& c) {
        Poly cp(ring_, c);
        for (std::size_t k = 0; k < cols_; ++k) at(i, k) = at(i, k) * cp;
    }

    bool row_is_zero(std::size_t i) const {
        for (std::size_t k = 0; k < cols_; ++k)
            if (!at(i, k).is_zero()) return false;
        return true;
    }
    bool col_is_zero(std::size_t j) const {
        for (std::size_t k = 0; k < rows_; ++k)
            if (!at(k, j).is_zero()) return false;
        return true;
    }

    PolyMatrix operator*(const PolyMatrix& o) const {
        require_same_ring(ring_, o.ring_);
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape");
        PolyMatrix r(ring_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    if (!o.at(k, j).is_zero()) r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

    bool operator==(const PolyMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    PolyMatrix negated() const {
        PolyMatrix r = *this;
        for (auto& p : r.a_) p = -p;
        return r;
    }

    PolyMatrix submatrix(const std::vector<std::size_t>& row_idx,
                         const std::vector<std::size_t>& col_idx) const {
        PolyMatrix r(ring_, row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j)
                r.at(i, j) = at(row_idx[i], col_idx[j]);
        return r;
    }

    // Deletes all-zero rows and columns.
    PolyMatrix pruned() const {
        std::vector<std::size_t> ri, ci;
        for (std::size_t i = 0; i < rows_; ++i)
            if (!row_is_zero(i)) ri.push_back(i);
        for (std::size_t j = 0; j < cols_; ++j)
            if (!col_is_zero(j)) ci.push_back(j);
        return submatrix(ri, ci);
    }

    // Paper display convention: comma-separated canonical entries, '.' for 0.
    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) out += ", ";
                out += at(i, j).is_zero() ? "." : at(i, j).str();
            }
            out += "\n";
        }
        return out;
    }

private:
    RingPtr ring_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Poly> a_;
};

}  // namespace quadop
