#include "lowdeg/matrix.hpp"

#include <string>
#include <utility>

#include "lowdeg/error.hpp"

namespace lowdeg::linalg {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::from_rows(Field field, std::size_t cols,
                         const std::vector<std::vector<Scalar>>& rows) {
    Matrix m(field, 0, cols);
    m.data_.reserve(rows.size() * cols);
    for (const auto& row : rows) m.append_row(row);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty() || rows.front().empty()) {
        throw DomainError("cannot infer the field of an empty matrix");
    }
    return from_rows(rows.front().front().field(), rows.front().size(), rows);
}

Matrix Matrix::from_ints(Field field, const std::vector<std::vector<long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, 0, cols);
    for (const auto& row : rows) {
        std::vector<Scalar> converted;
        converted.reserve(row.size());
        for (long v : row) converted.push_back(Scalar::from_int(field, v));
        m.append_row(converted);
    }
    return m;
}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

std::vector<Scalar> Matrix::row_vector(std::size_t r) const {
    auto view = row(r);
    return {view.begin(), view.end()};
}

void Matrix::append_row(std::span<const Scalar> row) {
    if (row.size() != cols_) {
        throw DomainError("row of length " + std::to_string(row.size()) +
                          " does not fit a matrix with " + std::to_string(cols_) + " columns");
    }
    for (const auto& x : row) {
        if (x.field() != field_) {
            throw FieldMismatchError("entry " + x.to_string() + " is not in " + field_.to_string());
        }
    }
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

Matrix Matrix::stacked(const Matrix& other) const {
    if (other.field_ != field_) {
        throw FieldMismatchError("cannot stack matrices over " + field_.to_string() + " and " +
                                 other.field_.to_string());
    }
    if (other.cols_ != cols_) throw DomainError("cannot stack matrices of different widths");
    Matrix out = *this;
    out.data_.insert(out.data_.end(), other.data_.begin(), other.data_.end());
    out.rows_ += other.rows_;
    return out;
}

Matrix rref(const Matrix& m) {
    Matrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t found = pivot_row;
        while (found < rows && a(found, col).is_zero()) ++found;
        if (found == rows) continue;
        if (found != pivot_row) {
            for (std::size_t c = col; c < cols; ++c) std::swap(a(found, c), a(pivot_row, c));
        }
        const Scalar inv = a(pivot_row, col).inverse();
        for (std::size_t c = col; c < cols; ++c) a(pivot_row, c) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || a(r, col).is_zero()) continue;
            const Scalar factor = a(r, col);
            for (std::size_t c = col; c < cols; ++c) a(r, c) -= factor * a(pivot_row, c);
        }
        ++pivot_row;
    }
    Matrix out(a.field(), 0, cols);
    for (std::size_t r = 0; r < pivot_row; ++r) out.append_row(a.row(r));
    return out;
}

Matrix rref(const std::vector<std::vector<Scalar>>& rows) {
    return rref(Matrix::from_rows(rows));
}

std::vector<std::size_t> pivot_columns(const Matrix& reduced) {
    std::vector<std::size_t> pivots;
    pivots.reserve(reduced.rows());
    for (std::size_t r = 0; r < reduced.rows(); ++r) {
        std::size_t c = 0;
        while (c < reduced.cols() && reduced(r, c).is_zero()) ++c;
        if (c == reduced.cols()) throw DomainError("zero row in a reduced matrix");
        pivots.push_back(c);
    }
    return pivots;
}

std::size_t rank(const Matrix& m) { return rref(m).rows(); }

Matrix nullspace(const Matrix& m) {
    const Matrix reduced = rref(m);
    const auto pivots = pivot_columns(reduced);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    const Field& f = m.field();
    Matrix basis(f, 0, m.cols());
    std::vector<Scalar> v(m.cols(), Scalar::zero(f));
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), Scalar::zero(f));
        v[free] = Scalar::one(f);
        for (std::size_t r = 0; r < reduced.rows(); ++r) v[pivots[r]] = -reduced(r, free);
        basis.append_row(v);
    }
    return rref(basis);
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.size() != b.size()) throw DomainError("dot product of vectors of different length");
    if (a.empty()) throw DomainError("dot product of empty vectors");
    Scalar acc = a[0] * b[0];
    for (std::size_t i = 1; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace lowdeg::linalg
