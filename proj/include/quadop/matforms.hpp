#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "quadop/groebner.hpp"
#include "quadop/polymatrix.hpp"

namespace quadop {

// Dense matrix over an exact field (Rational or AlgNum).
template <class K>
struct ScalarMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<K> a;

    ScalarMatrix() = default;
    ScalarMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    K& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const K& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    bool operator==(const ScalarMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

// Unique reduced row echelon form; rank = number of nonzero rows.
template <class K>
std::pair<ScalarMatrix<K>, std::size_t> rcf_over_field(ScalarMatrix<K> m) {
    std::size_t r = 0;
    for (std::size_t j = 0; j < m.cols && r < m.rows; ++j) {
        std::size_t piv = r;
        while (piv < m.rows && m.at(piv, j).is_zero()) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (std::size_t k = 0; k < m.cols; ++k)
                std::swap(m.at(piv, k), m.at(r, k));
        K inv = K(1) / m.at(r, j);
        for (std::size_t k = j; k < m.cols; ++k) m.at(r, k) = m.at(r, k) * inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, j).is_zero()) continue;
            K f = m.at(i, j);
            for (std::size_t k = j; k < m.cols; ++k)
                m.at(i, k) = m.at(i, k) - f * m.at(r, k);
        }
        ++r;
    }
    return {std::move(m), r};
}

// Interprets a matrix with constant entries as a scalar matrix.
ScalarMatrix<Rational> as_scalar_matrix(const PolyMatrix& A);

// Hermite normal form over F[x] (exactly one ring variable): row echelon with
// monic leading entries computed by the Euclidean algorithm, entries above
// each leading entry reduced modulo it, zero rows at the bottom.
PolyMatrix hnf_univariate(const PolyMatrix& A);

// One elementary operation of the partial Smith form algorithm.
struct ElemOp {
    enum class Kind { row_swap, col_swap, row_scale, row_add, col_add };
    Kind kind;
    std::size_t i = 0;   // 0-based; for swaps: the found index
    std::size_t j = 0;   // for swaps: the target index; for adds: the pivot
    Poly coeff;          // for adds: the added multiple; for scale: the factor
    std::size_t iteration = 0;  // 1-based pivot count

    std::string str() const;  // "R3 <-> R2", "C3 - a*C1", "R15 - a^2*R14"
};

struct PSFResult {
    std::size_t r = 0;
    PolyMatrix C;  // diag(I_r, B) = U * A * V
    PolyMatrix B;  // (m-r) x (n-r) lower right block, no nonzero scalar entries
    PolyMatrix U, V;
    std::vector<ElemOp> ops;
};

// Partial Smith form: repeatedly scans rows top-down for the first row with a
// nonzero scalar entry in columns >= r, swaps it up, scans its columns left to
// right for the first nonzero scalar, swaps it in, normalizes, clears its row
// and column. All transformations have determinant in F \ {0}.
PSFResult partial_smith(const PolyMatrix& A);

// Row of a free-module Groebner basis together with its expression as a
// P-linear combination of the original input rows.
struct ModRow {
    std::vector<Poly> v;
    std::vector<Poly> expr;

    int lead_pos() const {
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) return static_cast<int>(j);
        return -1;
    }
};

struct ModuleGB {
    RingPtr ring;
    std::size_t cols = 0;
    std::vector<ModRow> rows;  // reduced, monic, sorted by leading position
    std::size_t input_rows = 0;
    std::size_t generic_rank = 0;      // rank of the input over Frac(P)
    std::size_t zero_display_rows = 0; // input_rows - generic_rank, floored at 0

    // Matrix form of the basis, with the display zero rows appended.
    PolyMatrix matrix() const;
};

// Reduced Groebner basis of the row module of A under position-over-term
// order (leftmost column strongest, ties by the ring's monomial order).
// With track_expressions each basis row carries its exact expression as a
// P-linear combination of the input rows.
ModuleGB module_gb(const PolyMatrix& A, bool track_expressions = false);

// Column-sequential canonicalization: processes pivot columns left to right,
// computing at each column the reduced Groebner basis of the ideal of leading
// entries (carried on whole rows, adding S-polynomial rows as needed) and
// normal-forming every other row's entry in that column. Row-equivalent to A
// up to redundant added rows; zero rows are dropped. The rank profile and all
// determinantal ideals of the non-unit block match those of A.
PolyMatrix column_canonical_form(const PolyMatrix& A);

Poly determinant(const PolyMatrix& A);
Poly determinant_cofactor(const PolyMatrix& A);  // subset DP, small matrices
Poly determinant_bareiss(const PolyMatrix& A);   // fraction-free elimination

// Rank over the fraction field of the ring (the rank at generic parameters).
std::size_t generic_rank(const PolyMatrix& A);

// Ideal generated by all r x r minors (monic, deduplicated, zeros dropped).
Ideal determinantal_ideal(const PolyMatrix& B, std::size_t r);

// Number of distinct nonzero monic r x r minors.
std::size_t count_distinct_minors(const PolyMatrix& B, std::size_t r);

std::size_t rank_at_point(const PolyMatrix& A, const std::vector<AlgNum>& point);

// Splits a canonical row form (RCF / HNF / module GB matrix) into its unit-led
// rows and the complementary block: delete every row whose leading entry is
// the constant 1 together with that row's leading column. In a reduced form
// those columns are zero elsewhere, so rank(A|p) = units + rank(block|p).
struct BlockSplit {
    std::size_t units = 0;
    PolyMatrix block;
    std::vector<std::size_t> block_rows, block_cols;  // original indices
};
BlockSplit split_unit_block(const PolyMatrix& canonical);

// diag(I_r, B) with the outer shape (r + B.rows) x (r + B.cols).
PolyMatrix diag_identity_block(const RingPtr& ring, std::size_t r,
                               const PolyMatrix& B);

}  // namespace quadop
