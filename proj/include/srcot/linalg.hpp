#ifndef SRCOT_LINALG_HPP
#define SRCOT_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace srcot {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix of exact rationals. All rank computations in the project go
/// through this type; there is no floating point anywhere.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

    QMatrix transposed() const;
    /// Horizontal concatenation [this | other].
    QMatrix hcat(const QMatrix& other) const;
    /// Stacked vertically on top of other.
    QMatrix vcat(const QMatrix& other) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    bool is_zero() const;
    QMatrix multiply(const QMatrix& other) const;

    static QMatrix from_columns(const std::vector<std::vector<Rational>>& cols);
    std::vector<Rational> column(int c) const;

    bool operator==(const QMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// Rank via fraction-free (Bareiss-style) elimination over exact integers;
/// rational inputs are cleared of denominators row by row first.
int rank(const QMatrix& m);

/// Basis of the right kernel {x : Ax = 0}, as columns.
std::vector<std::vector<Rational>> nullspace(const QMatrix& a);

/// One solution of Ax = b, if any.
std::optional<std::vector<Rational>> solve(const QMatrix& a,
                                           const std::vector<Rational>& b);

/// Incremental row-space rank over exact rationals. Rows are reduced against
/// the stored echelon basis as they arrive, so only O(rank * cols) memory is
/// held no matter how many rows are fed in.
class RankAccumulator {
public:
    /// A sparse row: (column, value) entries sorted by column, values nonzero.
    using SparseRow = std::vector<std::pair<int, Rational>>;

    explicit RankAccumulator(int cols) : cols_(cols) {}

    /// Reduces `row` against the basis; keeps it if independent.
    /// Returns true when the rank grew.
    bool add(const std::vector<Rational>& row);
    bool add_sparse(SparseRow row);
    int rank() const { return (int)rows_.size(); }
    int cols() const { return cols_; }

private:
    int cols_;
    // echelon rows keyed by pivot column, each normalized to pivot 1
    std::map<int, SparseRow> rows_;
};

/// Greedily selects candidates whose addition increases the rank of
/// [base | selected]; returns indices into `candidates`. Used to pick
/// cohomology representatives modulo a coboundary space.
std::vector<int> extend_basis(const QMatrix& base,
                              const std::vector<std::vector<Rational>>& candidates);

} // namespace srcot

#endif
