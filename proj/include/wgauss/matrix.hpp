#pragma once

#include <optional>
#include <vector>

#include "wgauss/field.hpp"

namespace wgauss {

class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr f, int rows, int cols);
    static Matrix identity(FieldPtr f, int n);
    static Matrix from_rows(FieldPtr f, int cols, const std::vector<std::vector<Scalar>>& rows);

    FieldPtr field() const { return f_; }
    int rows() const { return r_; }
    int cols() const { return c_; }
    Scalar& at(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    std::vector<Scalar> row(int i) const;
    void append_row(const std::vector<Scalar>& v);
    void append_rows(const Matrix& m);

    Matrix operator*(const Matrix& o) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    bool operator==(const Matrix& o) const;
    Matrix transpose() const;
    Matrix coerce(FieldPtr to) const;

    std::optional<Matrix> inverse() const;
    Scalar det() const;

private:
    FieldPtr f_ = nullptr;
    int r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

struct RrefResult {
    Matrix rref;             // nonzero rows only, pivots normalized to 1
    std::vector<int> pivots;
    int rank() const { return static_cast<int>(pivots.size()); }
};

RrefResult rref(const Matrix& m);
int rank(const Matrix& m);
// Basis of {v : m v = 0}, one vector per free column, in column order.
std::vector<std::vector<Scalar>> kernel(const Matrix& m);

struct RankKernelRref {
    int rank;
    std::vector<std::vector<Scalar>> kernel;
    Matrix rref;
};
RankKernelRref rank_kernel_rref(const Matrix& m);

// True when the row spaces agree (both are compared in reduced form).
bool same_row_space(const Matrix& a, const Matrix& b);

// Maximal minors of a k x n full-rank matrix, column subsets in lex order,
// scaled so the first nonzero coordinate is 1. Throws on dependent rows.
std::vector<Scalar> plucker(const Matrix& basis);

}  // namespace wgauss
