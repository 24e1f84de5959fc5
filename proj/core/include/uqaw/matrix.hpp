#ifndef UQAW_MATRIX_HPP
#define UQAW_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "uqaw/scalar.hpp"

namespace uqaw {

/// Dense matrix over the scalar field, acting on column vectors.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int r, int c) { return data_[r * cols_ + c]; }
    const Scalar& at(int r, int c) const { return data_[r * cols_ + c]; }

    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator*(const Matrix& other) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;
    Matrix pow(uint32_t e) const;

    bool operator==(const Matrix& other) const;
    bool is_zero() const;
    /// The scalar c with *this == c I, when one exists.
    std::optional<Scalar> as_scalar_multiple_of_identity() const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

private:
    int rows_, cols_;
    std::vector<Scalar> data_;
};

/// Rank via Gaussian elimination (exact division, first-nonzero pivoting).
int rank(Matrix m);

/// Basis of the right nullspace, deterministic echelon order.
std::vector<std::vector<Scalar>> nullspace(Matrix m);

/// Inverse, or nullopt for singular input.
std::optional<Matrix> inverse(Matrix m);

/// Matrix plus ordered basis labels.
struct LinearOperator {
    Matrix mat;
    std::vector<std::string> basis;
};

}  // namespace uqaw

#endif
