#include "orbint/vec.hpp"

#include <stdexcept>

namespace orbint {

Vec vec_zero(size_t n) { return Vec(n, Rat(0)); }

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vector dimension mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); i++)
        r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vector dimension mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); i++)
        r[i] = a[i] - b[i];
    return r;
}

Vec operator*(const Rat& c, const Vec& v) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); i++)
        r[i] = c * v[i];
    return r;
}

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vector dimension mismatch");
    Rat s(0);
    for (size_t i = 0; i < a.size(); i++)
        s += a[i] * b[i];
    return s;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

std::optional<std::vector<Rat>> solve_columns(const std::vector<Vec>& cols, const Vec& b) {
    size_t m = b.size(), k = cols.size();
    /* augmented matrix rows */
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(k + 1, Rat(0)));
    for (size_t j = 0; j < k; j++) {
        if (cols[j].size() != m)
            throw std::invalid_argument("vector dimension mismatch");
        for (size_t i = 0; i < m; i++)
            a[i][j] = cols[j][i];
    }
    for (size_t i = 0; i < m; i++)
        a[i][k] = b[i];

    size_t row = 0;
    std::vector<size_t> pivot_row(k, m);
    for (size_t col = 0; col < k && row < m; col++) {
        size_t p = row;
        while (p < m && a[p][col] == 0)
            p++;
        if (p == m)
            throw std::invalid_argument("dependent columns in linear solve");
        std::swap(a[p], a[row]);
        Rat inv = Rat(1) / a[row][col];
        for (size_t j = col; j <= k; j++)
            a[row][j] *= inv;
        for (size_t i = 0; i < m; i++) {
            if (i == row || a[i][col] == 0)
                continue;
            Rat f = a[i][col];
            for (size_t j = col; j <= k; j++)
                a[i][j] -= f * a[row][j];
        }
        pivot_row[col] = row;
        row++;
    }
    /* consistency: remaining rows must have zero rhs */
    for (size_t i = row; i < m; i++)
        if (a[i][k] != 0)
            return std::nullopt;
    std::vector<Rat> x(k, Rat(0));
    for (size_t col = 0; col < k; col++)
        x[col] = a[pivot_row[col]][k];
    return x;
}

Rat gram_det(const std::vector<Vec>& basis) {
    size_t k = basis.size();
    std::vector<std::vector<Rat>> g(k, std::vector<Rat>(k));
    for (size_t i = 0; i < k; i++)
        for (size_t j = 0; j < k; j++)
            g[i][j] = dot(basis[i], basis[j]);
    /* LU-style elimination, tracking the determinant */
    Rat det(1);
    for (size_t col = 0; col < k; col++) {
        size_t p = col;
        while (p < k && g[p][col] == 0)
            p++;
        if (p == k)
            return Rat(0);
        if (p != col) {
            std::swap(g[p], g[col]);
            det = -det;
        }
        det *= g[col][col];
        Rat inv = Rat(1) / g[col][col];
        for (size_t i = col + 1; i < k; i++) {
            Rat f = g[i][col] * inv;
            for (size_t j = col; j < k; j++)
                g[i][j] -= f * g[col][j];
        }
    }
    return det;
}

bool in_lattice(const std::vector<Vec>& basis, const Vec& v) {
    auto x = solve_columns(basis, v);
    if (!x)
        return false;
    for (const auto& c : *x)
        if (!rat_is_integer(c))
            return false;
    return true;
}

}  // namespace orbint
