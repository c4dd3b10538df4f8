#include "hf/linalg.hpp"

#include <algorithm>

#include "hf/errors.hpp"

namespace hf {

int exact_rank(const QMat& rows) {
    if (rows.empty()) return 0;
    size_t n = rows[0].size();
    ZMat zrows;
    zrows.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != n) throw InputError("exact_rank: ragged matrix");
        Int lcm(1);
        for (const auto& q : r) {
            Int den = q.get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        std::vector<Int> zr;
        zr.reserve(n);
        for (const auto& q : r) zr.push_back(q.get_num() * (lcm / q.get_den()));
        zrows.push_back(std::move(zr));
    }
    return exact_rank_int(std::move(zrows));
}

// Bareiss one-step fraction-free elimination. Pivot: leftmost nonzero column,
// first row. Row scaling by a previous pivot keeps all entries integral.
int exact_rank_int(ZMat m) {
    if (m.empty()) return 0;
    const size_t ncols = m[0].size();
    const size_t nrows = m.size();
    Int prev(1);
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < nrows; ++c) {
        size_t piv = nrows;
        for (size_t i = r; i < nrows; ++i) {
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        }
        if (piv == nrows) continue;
        if (piv != r) std::swap(m[piv], m[r]);
        const Int p = m[r][c];
        for (size_t i = r + 1; i < nrows; ++i) {
            const Int f = m[i][c];
            for (size_t j = c; j < ncols; ++j) {
                m[i][j] = (m[i][j] * p - f * m[r][j]) / prev;
            }
        }
        prev = p;
        ++r;
    }
    return static_cast<int>(r);
}

Rref rref(QMat rows, int n_cols) {
    Rref out;
    out.n_cols = n_cols;
    size_t r = 0;
    const size_t nrows = rows.size();
    for (int c = 0; c < n_cols && r < nrows; ++c) {
        size_t piv = nrows;
        for (size_t i = r; i < nrows; ++i) {
            if (rows[i][static_cast<size_t>(c)] != 0) {
                piv = i;
                break;
            }
        }
        if (piv == nrows) continue;
        if (piv != r) std::swap(rows[piv], rows[r]);
        const Rational inv = Rational(1) / rows[r][static_cast<size_t>(c)];
        for (int j = c; j < n_cols; ++j) rows[r][static_cast<size_t>(j)] *= inv;
        for (size_t i = 0; i < nrows; ++i) {
            if (i == r) continue;
            const Rational f = rows[i][static_cast<size_t>(c)];
            if (f == 0) continue;
            for (int j = c; j < n_cols; ++j)
                rows[i][static_cast<size_t>(j)] -= f * rows[r][static_cast<size_t>(j)];
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    return out;
}

QMat kernel_basis(const QMat& rows, int n_cols) {
    Rref rr = rref(rows, n_cols);
    std::vector<bool> is_pivot(static_cast<size_t>(n_cols), false);
    for (int c : rr.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    QMat basis;
    for (int f = 0; f < n_cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        QVec v(static_cast<size_t>(n_cols), Rational(0));
        v[static_cast<size_t>(f)] = 1;
        for (size_t i = 0; i < rr.rows.size(); ++i)
            v[static_cast<size_t>(rr.pivot_cols[i])] = -rr.rows[i][static_cast<size_t>(f)];
        basis.push_back(std::move(v));
    }
    return basis;
}

void SparseRow::scale(const Rational& c) {
    for (auto& [col, v] : nz) v *= c;
}

void SparseRow::axpy(const Rational& c, const SparseRow& other) {
    std::vector<std::pair<int, Rational>> merged;
    merged.reserve(nz.size() + other.nz.size());
    size_t i = 0, j = 0;
    while (i < nz.size() || j < other.nz.size()) {
        if (j == other.nz.size() || (i < nz.size() && nz[i].first < other.nz[j].first)) {
            merged.push_back(nz[i++]);
        } else if (i == nz.size() || other.nz[j].first < nz[i].first) {
            merged.emplace_back(other.nz[j].first, c * other.nz[j].second);
            ++j;
        } else {
            Rational v = nz[i].second + c * other.nz[j].second;
            if (v != 0) merged.emplace_back(nz[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    nz = std::move(merged);
}

int SpanEchelon::row_with_lead(int col) const {
    if (col < 0 || col >= static_cast<int>(lead_to_row_.size())) return -1;
    return lead_to_row_[static_cast<size_t>(col)];
}

// Leading-term reduction only; enough for dimension and membership since any
// element of the span leads with some pivot column.
void SpanEchelon::reduce(SparseRow& row) const {
    while (!row.empty()) {
        int idx = row_with_lead(row.lead());
        if (idx < 0) return;
        const SparseRow& piv = rows_[static_cast<size_t>(idx)];
        row.axpy(-row.nz.front().second / piv.nz.front().second, piv);
    }
}

// Sweep columns left to right; pivot rows only touch columns at or beyond
// their lead, so one pass clears all pivot support.
void SpanEchelon::normal_form(SparseRow& row) const {
    size_t i = 0;
    while (i < row.nz.size()) {
        int idx = row_with_lead(row.nz[i].first);
        if (idx < 0) {
            ++i;
            continue;
        }
        const SparseRow& piv = rows_[static_cast<size_t>(idx)];
        row.axpy(-row.nz[i].second / piv.nz.front().second, piv);
        // entries before position i are untouched; position i was cleared
    }
}

bool SpanEchelon::insert(SparseRow row) {
    reduce(row);
    if (row.empty()) return false;
    row.scale(Rational(1) / row.nz.front().second);
    if (lead_to_row_.empty()) lead_to_row_.assign(static_cast<size_t>(n_cols_), -1);
    lead_to_row_[static_cast<size_t>(row.lead())] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

bool SpanEchelon::contains(SparseRow row) const {
    reduce(row);
    return row.empty();
}

std::vector<int> SpanEchelon::pivot_cols() const {
    std::vector<int> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.lead());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> SpanEchelon::free_cols() const {
    std::vector<int> pivots = pivot_cols();
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n_cols_) - pivots.size());
    size_t p = 0;
    for (int c = 0; c < n_cols_; ++c) {
        if (p < pivots.size() && pivots[p] == c) {
            ++p;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace hf
