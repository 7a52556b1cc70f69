#include "spechtkl/polymat.hpp"

#include <algorithm>

namespace skl {

PolyMatrix pm_identity(int m) {
    PolyMatrix a(m, std::vector<LaurentPoly>(m));
    for (int i = 0; i < m; ++i) a[i][i] = LaurentPoly(1);
    return a;
}

PolyMatrix pm_zero(int rows, int cols) { return PolyMatrix(rows, std::vector<LaurentPoly>(cols)); }

PolyMatrix pm_transpose(const PolyMatrix& a) {
    if (a.empty()) return a;
    PolyMatrix t(a[0].size(), std::vector<LaurentPoly>(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

PolyMatrix pm_add(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.size() != b.size() || (!a.empty() && a[0].size() != b[0].size()))
        throw SizeMismatch("matrix sum shape mismatch");
    PolyMatrix r = a;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
    return r;
}

PolyMatrix pm_sub(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.size() != b.size() || (!a.empty() && a[0].size() != b[0].size()))
        throw SizeMismatch("matrix difference shape mismatch");
    PolyMatrix r = a;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
    return r;
}

PolyMatrix pm_mul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.empty() || b.empty()) return {};
    if (a[0].size() != b.size()) throw SizeMismatch("matrix product shape mismatch");
    PolyMatrix r(a.size(), std::vector<LaurentPoly>(b[0].size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < b[0].size(); ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    return r;
}

PolyMatrix pm_scale(const PolyMatrix& a, const LaurentPoly& c) {
    PolyMatrix r = a;
    for (auto& row : r)
        for (auto& x : row) x *= c;
    return r;
}

bool pm_equal(const PolyMatrix& a, const PolyMatrix& b) { return a == b; }

int pm_rank(PolyMatrix a) {
    if (a.empty()) return 0;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    LaurentPoly prev(1);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!a[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c)
                a[r][c] = div_exact(a[rank][col] * a[r][c] - a[r][col] * a[rank][c], prev);
            a[r][col] = LaurentPoly();
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

std::pair<PolyMatrix, LaurentPoly> pm_inverse_scaled(PolyMatrix a) {
    const int m = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != m) throw SizeMismatch("inverse of a non-square matrix");
    // augment with the identity and run one-step fraction-free Gauss-Jordan
    for (int i = 0; i < m; ++i) {
        a[i].resize(2 * m);
        a[i][m + i] = LaurentPoly(1);
    }
    LaurentPoly prev(1);
    for (int k = 0; k < m; ++k) {
        int pivot = -1;
        for (int r = k; r < m; ++r)
            if (!a[r][k].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw Error("singular matrix");
        std::swap(a[k], a[pivot]);
        for (int r = 0; r < m; ++r) {
            if (r == k) continue;
            for (int c = 0; c < 2 * m; ++c) {
                if (c == k) continue;
                a[r][c] = div_exact(a[k][k] * a[r][c] - a[r][k] * a[k][c], prev);
            }
            a[r][k] = LaurentPoly();
        }
        prev = a[k][k];
    }
    const LaurentPoly det = a[m - 1][m - 1];
    for (int i = 0; i < m; ++i)
        if (a[i][i] != det) throw Error("fraction-free elimination lost its invariant");
    PolyMatrix inv(m, std::vector<LaurentPoly>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) inv[i][j] = std::move(a[i][m + j]);
    return {std::move(inv), det};
}

}  // namespace skl
