#include "spectable/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace spectable {

Matrix::Matrix(size_t rows, size_t cols, int order)
    : rows_(rows), cols_(cols), order_(order), a_(rows * cols, Cyclotomic(order)) {}

Matrix Matrix::identity(size_t n, int order) {
    Matrix m(n, n, order);
    for (size_t i = 0; i < n; ++i) m(i, i) = Cyclotomic(order, 1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Cyclotomic>>& rows, int order) {
    if (rows.empty()) throw std::invalid_argument("matrix needs at least one row");
    Matrix m(rows.size(), rows[0].size(), order);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
        for (size_t c = 0; c < m.cols_; ++c) {
            const auto& x = rows[r][c];
            m(r, c) = x.order() == order ? x : x.embed(order);
        }
    }
    return m;
}

Matrix Matrix::direct_sum(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("direct sum of no blocks");
    size_t n = 0;
    for (const auto& b : blocks) n += b.rows_;
    const int order = blocks.front().order_;
    Matrix m(n, n, order);
    size_t offset = 0;
    for (const auto& b : blocks) {
        if (b.order_ != order) throw std::invalid_argument("direct sum blocks over different fields");
        for (size_t r = 0; r < b.rows_; ++r)
            for (size_t c = 0; c < b.cols_; ++c) m(offset + r, offset + c) = b(r, c);
        offset += b.rows_;
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(cols_, rows_, order_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c).conj();
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_, order_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

Matrix Matrix::embed(int order) const {
    if (order == order_) return *this;
    Matrix m(rows_, cols_, order);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i].embed(order);
    return m;
}

Cyclotomic Matrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
    Cyclotomic t(order_);
    for (size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) {
            const auto& x = (*this)(r, c);
            if (r == c ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_unitary() const { return is_square() && (*this * adjoint()).is_identity(); }

std::string Matrix::key() const {
    std::string k;
    for (const auto& x : a_) {
        for (const auto& c : x.coefficients()) {
            k += c.get_str();
            k += ',';
        }
        k += ';';
    }
    return k;
}

std::string Matrix::to_string() const {
    std::ostringstream out;
    out << '[';
    for (size_t r = 0; r < rows_; ++r) {
        out << (r ? ",[" : "[");
        for (size_t c = 0; c < cols_; ++c) out << (c ? "," : "") << (*this)(r, c).to_string();
        out << ']';
    }
    out << ']';
    return out.str();
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    const int order = a.order_ == 1 ? b.order_ : a.order_;
    Matrix m(a.rows_, b.cols_, order);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const auto& x = a(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                const auto& y = b(k, j);
                if (y.is_zero()) continue;
                m(i, j) += x * y;
            }
        }
    return m;
}

Matrix operator*(const Cyclotomic& s, const Matrix& m) {
    Matrix r(m.rows_, m.cols_, m.order_ == 1 ? s.order() : m.order_);
    for (size_t i = 0; i < m.a_.size(); ++i)
        if (!m.a_[i].is_zero()) r.a_[i] = s * m.a_[i];
    return r;
}

std::vector<Cyclotomic> operator*(const Matrix& m, const std::vector<Cyclotomic>& v) {
    if (v.size() != m.cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<Cyclotomic> r(m.rows_, Cyclotomic(m.order_));
    for (size_t i = 0; i < m.rows_; ++i)
        for (size_t j = 0; j < m.cols_; ++j) {
            const auto& x = m(i, j);
            if (x.is_zero() || v[j].is_zero()) continue;
            r[i] += x * v[j];
        }
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t i = 0; i < a.a_.size(); ++i)
        if (a.a_[i] != b.a_[i]) return false;
    return true;
}

Polynomial det_one_minus_lambda(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("det_one_minus_lambda: matrix is not square");
    const size_t n = a.rows();
    const int order = a.order();
    // M_k = A M_{k-1} + c_{k-1} I,  c_k = -tr(A M_k)/k
    std::vector<Cyclotomic> c{Cyclotomic(order, 1)};
    Matrix m(n, n, order);
    for (size_t k = 1; k <= n; ++k) {
        Matrix next = a * m;
        for (size_t i = 0; i < n; ++i) next(i, i) += c.back();
        m = std::move(next);
        Cyclotomic ck = (a * m).trace();
        ck *= Rational(-1, static_cast<long>(k));
        c.push_back(std::move(ck));
    }
    return Polynomial(order, std::move(c));
}

size_t rank(Matrix m) {
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const Cyclotomic inv = m(r, c).inverse();
        for (size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c).is_zero()) continue;
            const Cyclotomic f = m(i, c) * inv;
            for (size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    const size_t n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::identity(n, m.order());
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) return std::nullopt;
        if (p != c)
            for (size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        const Cyclotomic s = a(c, c).inverse();
        for (size_t j = 0; j < n; ++j) {
            a(c, j) *= s;
            inv(c, j) *= s;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c).is_zero()) continue;
            const Cyclotomic f = a(i, c);
            for (size_t j = 0; j < n; ++j) {
                if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
                if (!inv(c, j).is_zero()) inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::optional<Matrix> restrict_to(const Matrix& m, int order) {
    Matrix out(m.rows(), m.cols(), order);
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            auto v = m(i, j).restrict_to(order);
            if (!v) return std::nullopt;
            out(i, j) = std::move(*v);
        }
    return out;
}

}  // namespace spectable
