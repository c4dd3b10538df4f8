#pragma once

#include <utility>
#include <vector>

#include "hf/numeric.hpp"

namespace hf {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;
using ZMat = std::vector<std::vector<Int>>;

/// Rank over Q by deterministic fraction-free (Bareiss) elimination.
/// Pivot rule: leftmost nonzero column, then the first row holding a nonzero
/// entry in it. Rows may have different... all rows must share one length.
int exact_rank(const QMat& rows);
int exact_rank_int(ZMat rows);

/// Reduced row echelon form over Q with the same pivot rule.
struct Rref {
    QMat rows;                   // reduced rows, pivots normalized to 1
    std::vector<int> pivot_cols; // ascending
    int n_cols = 0;
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};
Rref rref(QMat rows, int n_cols);

/// Basis of the right kernel {v : M v = 0}, one vector per free column, in
/// ascending free-column order. Deterministic.
QMat kernel_basis(const QMat& rows, int n_cols);

/// Sparse vector over Q inside a fixed coordinate space; entries sorted by
/// column index, no zeros stored.
struct SparseRow {
    std::vector<std::pair<int, Rational>> nz;

    bool empty() const { return nz.empty(); }
    int lead() const { return nz.front().first; }
    void scale(const Rational& c);
    /// this += c * other (merge of sorted supports)
    void axpy(const Rational& c, const SparseRow& other);
};

/// Incremental row echelon of a growing span. Insertion order is part of the
/// contract: the resulting pivot set is deterministic for a fixed sequence.
class SpanEchelon {
public:
    explicit SpanEchelon(int n_cols) : n_cols_(n_cols) {}

    int n_cols() const { return n_cols_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    /// Reduce the leading term of `row` against the echelon until it is
    /// irreducible (in place). Zero result iff the row lies in the span.
    void reduce(SparseRow& row) const;

    /// Full normal form: afterwards the row has no support on any pivot
    /// column, so it is a canonical representative modulo the span.
    void normal_form(SparseRow& row) const;

    /// Reduce and, if a nonzero remainder survives, insert it (monic).
    /// Returns true when the dimension grew.
    bool insert(SparseRow row);

    bool contains(SparseRow row) const;

    /// Pivot columns in ascending order.
    std::vector<int> pivot_cols() const;
    /// Non-pivot columns in ascending order.
    std::vector<int> free_cols() const;
    /// Rows in insertion order (each monic at its pivot).
    const std::vector<SparseRow>& rows() const { return rows_; }

private:
    int n_cols_;
    std::vector<SparseRow> rows_;  // insertion order
    std::vector<int> lead_to_row_; // lead col -> row idx, -1 when absent

    int row_with_lead(int col) const;
};

}  // namespace hf
