#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lowdeg/scalar.hpp"

namespace lowdeg::linalg {

/// Dense row-major matrix over a single field.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);

    /// All entries must share `field`; rows must have equal length `cols`.
    static Matrix from_rows(Field field, std::size_t cols,
                            const std::vector<std::vector<Scalar>>& rows);
    /// Infers the field from the first entry. Requires at least one entry.
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
    static Matrix from_ints(Field field, const std::vector<std::vector<long>>& rows);
    static Matrix identity(Field field, std::size_t n);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    std::vector<Scalar> row_vector(std::size_t r) const;

    void append_row(std::span<const Scalar> row);
    /// Rows of `other` appended below this matrix's rows.
    Matrix stacked(const Matrix& other) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Reduced row-echelon form with zero rows dropped, so rows() == rank.
Matrix rref(const Matrix& m);
/// Validates that every entry lives in one field before reducing.
Matrix rref(const std::vector<std::vector<Scalar>>& rows);

/// Pivot column of each row of a matrix already in reduced row-echelon form.
std::vector<std::size_t> pivot_columns(const Matrix& reduced);

std::size_t rank(const Matrix& m);

/// Basis (as rows, in reduced row-echelon form) of {x : m x = 0}.
Matrix nullspace(const Matrix& m);

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);

}  // namespace lowdeg::linalg
