#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace essvar {

// Dense exact rational matrix, row major. Values are immutable in spirit:
// the linear algebra below never mutates its inputs.
class MatQ {
public:
    MatQ() : rows_(0), cols_(0) {}
    MatQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static MatQ identity(std::size_t n) {
        MatQ m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    static MatQ from_rows(const std::vector<std::vector<Rational>>& rows) {
        if (rows.empty()) {
            throw Error("from_rows needs at least one row; use MatQ(0, cols) for empty");
        }
        MatQ m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) {
                throw Error("from_rows: ragged rows");
            }
            for (std::size_t j = 0; j < m.cols_; ++j) {
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::vector<Rational> row(std::size_t i) const {
        return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    MatQ transpose() const {
        MatQ t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    MatQ operator*(const MatQ& o) const {
        if (cols_ != o.rows_) {
            throw ContextMismatch("matrix product size mismatch");
        }
        MatQ p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& a = (*this)(i, k);
                if (a.is_zero()) {
                    continue;
                }
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    p(i, j) += a * o(k, j);
                }
            }
        }
        return p;
    }

    bool is_zero() const {
        for (const auto& e : entries_) {
            if (!e.is_zero()) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const MatQ&, const MatQ&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

struct RrefResult {
    MatQ reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

// Unique reduced row-echelon form by Gauss-Jordan elimination.
// Pivot rule: first nonzero entry in column order; arithmetic is exact,
// so no magnitude pivoting is needed and the result is deterministic.
inline RrefResult rref(const MatQ& m) {
    RrefResult out{m, 0, {}};
    MatQ& a = out.reduced;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!a(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != r) {
            for (std::size_t j = 0; j < cols; ++j) {
                std::swap(a(pivot, j), a(r, j));
            }
        }
        const Rational inv = Rational(1) / a(r, col);
        for (std::size_t j = col; j < cols; ++j) {
            a(r, j) *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, col).is_zero()) {
                continue;
            }
            const Rational factor = a(i, col);
            for (std::size_t j = col; j < cols; ++j) {
                a(i, j) -= factor * a(r, j);
            }
        }
        out.pivot_cols.push_back(col);
        ++r;
    }
    out.rank = r;
    return out;
}

inline std::size_t rank(const MatQ& m) { return rref(m).rank; }

// Canonical basis of {v : m v = 0}: the free-variable basis of the RREF,
// re-reduced so the returned rows are themselves in RREF.
inline std::vector<std::vector<Rational>> null_space(const MatQ& m) {
    const RrefResult rr = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : rr.pivot_cols) {
        is_pivot[p] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) {
            continue;
        }
        std::vector<Rational> v(n);
        v[j] = 1;
        for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k) {
            v[rr.pivot_cols[k]] = -rr.reduced(k, j);
        }
        basis.push_back(std::move(v));
    }
    if (basis.empty()) {
        return basis;
    }
    const RrefResult canon = rref(MatQ::from_rows(basis));
    std::vector<std::vector<Rational>> out;
    out.reserve(canon.rank);
    for (std::size_t i = 0; i < canon.rank; ++i) {
        out.push_back(canon.reduced.row(i));
    }
    return out;
}

// Canonical basis of the left kernel {a : a m = 0}.
inline std::vector<std::vector<Rational>> left_kernel(const MatQ& m) { return null_space(m.transpose()); }

// Extends independent rows to a basis of the full n-dimensional space by
// appending standard unit vectors greedily in ascending index order.
// The input rows come first, in their original order.
inline MatQ complete_to_basis(const std::vector<std::vector<Rational>>& rows, std::size_t n) {
    for (const auto& row : rows) {
        if (row.size() != n) {
            throw ContextMismatch("complete_to_basis: row length differs from dimension");
        }
    }
    if (rows.size() > n) {
        throw DependentInput("more rows than the dimension allows");
    }

    MatQ result(n, n);
    std::size_t filled = 0;
    // Working RREF of the rows accepted so far, used for the independence test.
    MatQ work(n, n);
    std::vector<std::size_t> work_pivots;

    auto try_accept = [&](const std::vector<Rational>& candidate) {
        std::vector<Rational> v = candidate;
        for (std::size_t k = 0; k < work_pivots.size(); ++k) {
            const Rational factor = v[work_pivots[k]];
            if (factor.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                v[j] -= factor * work(k, j);
            }
        }
        std::size_t lead = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (!v[j].is_zero()) {
                lead = j;
                break;
            }
        }
        if (lead == n) {
            return false;  // dependent on what we already have
        }
        const Rational inv = Rational(1) / v[lead];
        for (std::size_t j = 0; j < n; ++j) {
            v[j] *= inv;
        }
        // keep `work` fully reduced
        for (std::size_t k = 0; k < work_pivots.size(); ++k) {
            const Rational factor = work(k, lead);
            if (factor.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                work(k, j) -= factor * v[j];
            }
        }
        const std::size_t slot = work_pivots.size();
        for (std::size_t j = 0; j < n; ++j) {
            work(slot, j) = v[j];
        }
        // maintain pivot order for back-reduction determinism
        work_pivots.push_back(lead);
        for (std::size_t k = work_pivots.size(); k-- > 1;) {
            if (work_pivots[k - 1] <= work_pivots[k]) {
                break;
            }
            std::swap(work_pivots[k - 1], work_pivots[k]);
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(k - 1, j), work(k, j));
            }
        }
        return true;
    };

    for (const auto& row : rows) {
        if (!try_accept(row)) {
            throw DependentInput("input rows are linearly dependent");
        }
        for (std::size_t j = 0; j < n; ++j) {
            result(filled, j) = row[j];
        }
        ++filled;
    }
    for (std::size_t i = 0; i < n && filled < n; ++i) {
        std::vector<Rational> unit(n);
        unit[i] = 1;
        if (try_accept(unit)) {
            result(filled, i) = 1;
            ++filled;
        }
    }
    if (filled != n) {
        throw InternalInconsistency("basis completion fell short");  // unreachable
    }
    return result;
}

// Exact inverse via Gauss-Jordan on [m | I].
inline MatQ invert(const MatQ& m) {
    if (m.rows() != m.cols()) {
        throw Singular("only square matrices are invertible");
    }
    const std::size_t n = m.rows();
    MatQ aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            aug(i, j) = m(i, j);
        }
        aug(i, n + i) = 1;
    }
    const RrefResult rr = rref(aug);
    if (rr.rank < n || rr.pivot_cols.back() >= n) {
        throw Singular("matrix is singular");
    }
    MatQ inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            inv(i, j) = rr.reduced(i, n + j);
        }
    }
    return inv;
}

}  // namespace essvar
