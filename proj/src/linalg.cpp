#include "srcot/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace srcot {

QMatrix QMatrix::transposed() const {
    QMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

QMatrix QMatrix::hcat(const QMatrix& other) const {
    if (rows_ != other.rows_ && cols_ != 0 && other.cols_ != 0)
        throw std::invalid_argument("hcat: row mismatch");
    int rows = std::max(rows_, other.rows_);
    QMatrix m(rows, cols_ + other.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    for (int r = 0; r < other.rows_; ++r)
        for (int c = 0; c < other.cols_; ++c) m.at(r, cols_ + c) = other.at(r, c);
    return m;
}

QMatrix QMatrix::vcat(const QMatrix& other) const {
    if (cols_ != other.cols_ && rows_ != 0 && other.rows_ != 0)
        throw std::invalid_argument("vcat: column mismatch");
    int cols = std::max(cols_, other.cols_);
    QMatrix m(rows_ + other.rows_, cols);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    for (int r = 0; r < other.rows_; ++r)
        for (int c = 0; c < other.cols_; ++c) m.at(rows_ + r, c) = other.at(r, c);
    return m;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
    if ((int)v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    std::vector<Rational> out(rows_);
    for (int r = 0; r < rows_; ++r) {
        Rational s = 0;
        for (int c = 0; c < cols_; ++c)
            if (at(r, c) != 0) s += at(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

bool QMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

QMatrix QMatrix::multiply(const QMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("multiply: size mismatch");
    QMatrix m(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            if (at(r, k) == 0) continue;
            for (int c = 0; c < other.cols_; ++c)
                if (other.at(k, c) != 0) m.at(r, c) += at(r, k) * other.at(k, c);
        }
    return m;
}

QMatrix QMatrix::from_columns(const std::vector<std::vector<Rational>>& cols) {
    if (cols.empty()) return QMatrix(0, 0);
    QMatrix m((int)cols[0].size(), (int)cols.size());
    for (int c = 0; c < (int)cols.size(); ++c) {
        if (cols[c].size() != cols[0].size())
            throw std::invalid_argument("from_columns: ragged input");
        for (int r = 0; r < (int)cols[c].size(); ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

std::vector<Rational> QMatrix::column(int c) const {
    std::vector<Rational> out(rows_);
    for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

int rank(const QMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    // Clear denominators per row, then run fraction-free elimination.
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (int r = 0; r < rows; ++r) {
        BigInt lcm = 1;
        for (int c = 0; c < cols; ++c) {
            BigInt den = boost::multiprecision::denominator(m.at(r, c));
            lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
        }
        for (int c = 0; c < cols; ++c) {
            const Rational& x = m.at(r, c);
            a[r][c] = boost::multiprecision::numerator(x) *
                      (lcm / boost::multiprecision::denominator(x));
        }
    }
    int rk = 0;
    BigInt prev = 1;
    for (int c = 0; c < cols && rk < rows; ++c) {
        int pivot = -1;
        for (int r = rk; r < rows; ++r)
            if (a[r][c] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(a[rk], a[pivot]);
        for (int r = rk + 1; r < rows; ++r) {
            for (int k = c + 1; k < cols; ++k)
                a[r][k] = (a[rk][c] * a[r][k] - a[r][c] * a[rk][k]) / prev;
            a[r][c] = 0;
        }
        prev = a[rk][c];
        ++rk;
    }
    return rk;
}

namespace {

/// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(std::vector<std::vector<Rational>>& a) {
    int rows = (int)a.size();
    int cols = rows ? (int)a[0].size() : 0;
    std::vector<int> pivots;
    int pr = 0;
    for (int c = 0; c < cols && pr < rows; ++c) {
        int pivot = -1;
        for (int r = pr; r < rows; ++r)
            if (a[r][c] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(a[pr], a[pivot]);
        Rational inv = a[pr][c];
        for (int k = c; k < cols; ++k) a[pr][k] /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == pr || a[r][c] == 0) continue;
            Rational factor = a[r][c];
            for (int k = c; k < cols; ++k) a[r][k] -= factor * a[pr][k];
        }
        pivots.push_back(c);
        ++pr;
    }
    return pivots;
}

} // namespace

std::vector<std::vector<Rational>> nullspace(const QMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) a[r][c] = m.at(r, c);
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (int r = 0; r < (int)pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const QMatrix& m,
                                           const std::vector<Rational>& b) {
    if ((int)b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
    int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) a[r][c] = m.at(r, c);
        a[r][cols] = b[r];
    }
    std::vector<int> pivots = rref(a);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // inconsistent
    std::vector<Rational> x(cols);
    for (int r = 0; r < (int)pivots.size(); ++r) x[pivots[r]] = a[r][cols];
    return x;
}

bool RankAccumulator::add(const std::vector<Rational>& row) {
    if ((int)row.size() != cols_)
        throw std::invalid_argument("RankAccumulator: row size mismatch");
    SparseRow s;
    for (int c = 0; c < cols_; ++c)
        if (row[c] != 0) s.emplace_back(c, row[c]);
    return add_sparse(std::move(s));
}

bool RankAccumulator::add_sparse(SparseRow row) {
    for (;;) {
        if (row.empty()) return false;
        int piv = row.front().first;
        if (piv >= cols_) throw std::invalid_argument("RankAccumulator: column out of range");
        auto it = rows_.find(piv);
        if (it == rows_.end()) {
            Rational lead = row.front().second;
            for (auto& [c, v] : row) v /= lead;
            rows_.emplace(piv, std::move(row));
            return true;
        }
        // row -= lead * basis; both sides sorted by column
        Rational f = row.front().second;
        const SparseRow& basis = it->second;
        SparseRow next;
        next.reserve(row.size() + basis.size());
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < basis.size()) {
            if (j == basis.size() ||
                (i < row.size() && row[i].first < basis[j].first)) {
                next.push_back(std::move(row[i++]));
            } else if (i == row.size() || basis[j].first < row[i].first) {
                next.emplace_back(basis[j].first, -f * basis[j].second);
                ++j;
            } else {
                Rational v = row[i].second - f * basis[j].second;
                if (v != 0) next.emplace_back(row[i].first, std::move(v));
                ++i, ++j;
            }
        }
        row = std::move(next);
    }
}

std::vector<int> extend_basis(const QMatrix& base,
                              const std::vector<std::vector<Rational>>& candidates) {
    QMatrix current = base;
    int base_rank = rank(base);
    std::vector<int> chosen;
    for (int i = 0; i < (int)candidates.size(); ++i) {
        QMatrix trial = current.hcat(QMatrix::from_columns({candidates[i]}));
        int r = rank(trial);
        if (r > base_rank + (int)chosen.size()) {
            current = std::move(trial);
            chosen.push_back(i);
        }
    }
    return chosen;
}

} // namespace srcot
