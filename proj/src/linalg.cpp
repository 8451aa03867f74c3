#include "nestocone/linalg.hpp"

#include "nestocone/errors.hpp"

namespace nestocone {

namespace {

void check_shape(const Matrix& a, std::size_t cols) {
    for (const auto& row : a)
        if (row.size() != cols) throw InvariantViolation("ragged matrix");
}

/// In-place reduced row echelon form; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(Matrix& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        const Rational inv = 1 / a[r][c];
        for (std::size_t k = c; k < a[r].size(); ++k)
            if (a[r][k] != 0) a[r][k] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t k = c; k < a[i].size(); ++k)
                if (a[r][k] != 0) a[i][k] -= f * a[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const Matrix& a, std::size_t cols) {
    check_shape(a, cols);
    Matrix m = a;
    return rref(m, cols).size();
}

std::vector<RowVector> nullspace(const Matrix& a, std::size_t cols) {
    check_shape(a, cols);
    Matrix m = a;
    const auto pivots = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<RowVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RowVector v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RowVector> solve(const LinearSystem& sys) {
    check_shape(sys.a, sys.cols);
    if (sys.rhs.size() != sys.a.size()) throw InvariantViolation("right-hand side length mismatch");
    Matrix m = sys.a;
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(sys.rhs[i]);
    const auto pivots = rref(m, sys.cols);
    for (std::size_t i = pivots.size(); i < m.size(); ++i)
        if (m[i][sys.cols] != 0) return std::nullopt;
    RowVector x(sys.cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][sys.cols];
    return x;
}

std::optional<RowVector> find_nonnegative_solution(const LinearSystem& sys) {
    check_shape(sys.a, sys.cols);
    const std::size_t m = sys.a.size();
    const std::size_t n = sys.cols;
    if (sys.rhs.size() != m) throw InvariantViolation("right-hand side length mismatch");
    if (m == 0) return RowVector(n, Rational(0));

    // Columns: n structural, m artificial, then the right-hand side.
    const std::size_t width = n + m + 1;
    const std::size_t rhs = n + m;
    Matrix t(m, RowVector(width, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = sys.rhs[i] < 0;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-sys.a[i][j]) : sys.a[i][j];
        t[i][rhs] = flip ? Rational(-sys.rhs[i]) : sys.rhs[i];
        t[i][n + i] = 1;
        basis[i] = n + i;
    }
    // Reduced costs of the phase-one objective (sum of artificials).
    RowVector cost(width, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (t[i][j] != 0) cost[j] -= t[i][j];
    for (std::size_t i = 0; i < m; ++i) cost[rhs] -= t[i][rhs];

    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < rhs; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == width) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            const Rational ratio = t[i][rhs] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) throw InvariantViolation("unbounded phase-one objective");

        const Rational inv = 1 / t[leave][enter];
        std::vector<std::size_t> nz;
        for (std::size_t k = 0; k < width; ++k)
            if (t[leave][k] != 0) {
                t[leave][k] *= inv;
                nz.push_back(k);
            }
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (std::size_t k : nz) t[i][k] -= f * t[leave][k];
        }
        if (cost[enter] != 0) {
            const Rational f = cost[enter];
            for (std::size_t k : nz) cost[k] -= f * t[leave][k];
        }
        basis[leave] = enter;
    }
    if (cost[rhs] != 0) return std::nullopt;
    RowVector x(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = t[i][rhs];
    return x;
}

}  // namespace nestocone
