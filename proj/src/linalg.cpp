#include "unbend/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace unbend {

RationalMatrix to_rational(const IntMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw std::domain_error("matrix product: shape mismatch");
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

RationalMatrix inverse(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::domain_error("inverse: matrix is not square");
    RationalMatrix work = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work(pivot, col) == 0) ++pivot;
        if (pivot == n) throw std::domain_error("inverse: matrix is singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(pivot, j), work(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const Rational scale = work(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            work(col, j) /= scale;
            inv(col, j) /= scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || work(i, col) == 0) continue;
            const Rational factor = work(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                work(i, j) -= factor * work(col, j);
                inv(i, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

}  // namespace unbend
