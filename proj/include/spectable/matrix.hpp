#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectable/cyclotomic.hpp"
#include "spectable/polynomial.hpp"

namespace spectable {

/// Dense row-major matrix over Q(zeta_N).
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, int order);
    static Matrix identity(size_t n, int order);
    static Matrix from_rows(const std::vector<std::vector<Cyclotomic>>& rows, int order);
    /// Block-diagonal direct sum.
    static Matrix direct_sum(const std::vector<Matrix>& blocks);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    int order() const { return order_; }
    bool is_square() const { return rows_ == cols_; }

    const Cyclotomic& operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    Cyclotomic& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }

    Matrix adjoint() const;
    Matrix transpose() const;
    Matrix embed(int order) const;
    Cyclotomic trace() const;
    bool is_identity() const;
    bool is_unitary() const;
    bool is_zero() const;

    /// Canonical key: reduced coefficient lists concatenated row-major.
    std::string key() const;
    std::string to_string() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Cyclotomic& s, const Matrix& m);
    friend std::vector<Cyclotomic> operator*(const Matrix& m, const std::vector<Cyclotomic>& v);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    int order_ = 1;
    std::vector<Cyclotomic> a_;
};

/// Det[I - A*lambda] via Faddeev-LeVerrier; equals the reversed characteristic polynomial.
Polynomial det_one_minus_lambda(const Matrix& a);

/// Rank over Q(zeta_N) by exact Gaussian elimination.
size_t rank(Matrix m);

/// Exact inverse by Gauss-Jordan elimination; nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Entrywise restriction to Q(zeta_order); nullopt if an entry lies outside.
std::optional<Matrix> restrict_to(const Matrix& m, int order);

}  // namespace spectable
