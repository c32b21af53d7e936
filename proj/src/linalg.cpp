#include "apxpoly/linalg.hpp"

#include "apxpoly/errors.hpp"

namespace apxpoly {

RatVec zero_vec(std::size_t n) { return RatVec(n, Rational(0)); }

RatVec unit_vec(std::size_t n, std::size_t i) {
    RatVec v = zero_vec(n);
    v.at(i) = 1;
    return v;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch();
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch();
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec vec_scale(const Rational& s, const RatVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch();
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero_vec(const RatVec& a) {
    for (const auto& x : a) {
        if (x != 0) return false;
    }
    return true;
}

RatVec sup_normalize(const RatVec& a) {
    Rational m = 0;
    for (const auto& x : a) m = std::max(m, rat_abs(x));
    if (m == 0) return a;
    return vec_scale(Rational(1) / m, a);
}

RatMat identity_mat(std::size_t n) {
    RatMat m(n, zero_vec(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RatVec mat_apply(const RatMat& m, const RatVec& x) {
    RatVec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], x);
    return r;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t n = a.size(), k = b.size(), c = b[0].size();
    RatMat r(n, zero_vec(c));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw DimensionMismatch();
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t l = 0; l < c; ++l) r[i][l] += a[i][j] * b[j][l];
        }
    }
    return r;
}

std::vector<std::size_t> rref(RatMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        const Rational inv = Rational(1) / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

RatMat nullspace(const RatMat& m) {
    if (m.empty()) return {};
    RatMat r = m;
    const std::size_t cols = m[0].size();
    const std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    RatMat basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v = zero_vec(cols);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            v[pivots[k]] = -r[k][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> solve_square(const RatMat& a, const RatVec& b) {
    const std::size_t n = a.size();
    if (n == 0) return RatVec{};
    RatMat aug = a;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw DimensionMismatch();
        aug[i].push_back(b.at(i));
    }
    const auto pivots = rref(aug);
    if (pivots.size() != n) return std::nullopt;
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
    return x;
}

std::optional<RatMat> invert(const RatMat& a) {
    const std::size_t n = a.size();
    RatMat aug = a;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw DimensionMismatch();
        for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? Rational(1) : Rational(0));
    }
    const auto pivots = rref(aug);
    if (pivots.size() != n) return std::nullopt;
    RatMat inv(n, zero_vec(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    }
    return inv;
}

}  // namespace apxpoly
