#include "kassoc/linalg.hpp"

namespace kassoc {

Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, Vector(cols, Rational(0))); }

Matrix transpose(const Matrix& m) {
    if (m.empty()) return {};
    Matrix t = zeros(m[0].size(), m.size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m[r].size(); ++c) t[c][r] = m[r][c];
    return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    std::size_t inner = b.size();
    std::size_t cols = inner ? b[0].size() : 0;
    Matrix out = zeros(a.size(), cols);
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t t = 0; t < inner; ++t) {
            if (a[r][t] == 0) continue;
            for (std::size_t c = 0; c < cols; ++c) out[r][c] += a[r][t] * b[t][c];
        }
    return out;
}

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (std::size_t t = c; t < cols; ++t) m[r][t] *= inv;
        for (std::size_t q = 0; q < rows; ++q) {
            if (q == r || m[q][c] == 0) continue;
            Rational f = m[q][c];
            for (std::size_t t = c; t < cols; ++t) m[q][t] -= f * m[r][t];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Matrix m) {
    // Forward elimination only.
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t q = r + 1; q < rows; ++q) {
            if (m[q][c] == 0) continue;
            Rational f = m[q][c] / m[r][c];
            for (std::size_t t = c; t < cols; ++t) m[q][t] -= f * m[r][t];
        }
        ++r;
    }
    return r;
}

Rational determinant(Matrix m) {
    std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t q = c + 1; q < n; ++q) {
            if (m[q][c] == 0) continue;
            Rational f = m[q][c] / m[c][c];
            for (std::size_t t = c; t < n; ++t) m[q][t] -= f * m[c][t];
        }
    }
    return det;
}

std::vector<Vector> nullspace(const Matrix& m, std::size_t cols) {
    Matrix r = m;
    std::vector<std::size_t> piv = rref(r);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : piv) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector x(cols, Rational(0));
        x[f] = 1;
        for (std::size_t t = 0; t < piv.size(); ++t) x[piv[t]] = -r[t][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<Vector> solve_unique(const Matrix& a, const Vector& b) {
    std::size_t cols = a.empty() ? 0 : a[0].size();
    Matrix aug = a;
    for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
    std::vector<std::size_t> piv = rref(aug);
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    if (piv.size() != cols) return std::nullopt;
    Vector x(cols);
    for (std::size_t t = 0; t < cols; ++t) x[t] = aug[t][cols];
    return x;
}

Rational dot(const Vector& a, const Vector& b) {
    Rational s = 0;
    for (std::size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
    return s;
}

}  // namespace kassoc
