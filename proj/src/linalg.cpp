#include "severi/linalg.hpp"

#include <algorithm>

#include "severi/errors.hpp"

namespace severi {

namespace {

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

void check_rectangular(const QMatrix& m) {
    for (auto& row : m)
        if (row.size() != m.front().size())
            fail(ErrorCode::shape_mismatch, "ragged matrix");
}

} // namespace

long rank_row_echelon(QMatrix m) {
    if (m.empty() || m.front().empty()) return 0;
    check_rectangular(m);
    std::size_t rows = m.size(), cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // pivot: largest absolute value, first row on ties
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            if (best == rows || rat_abs(m[i][c]) > rat_abs(m[best][c])) best = i;
        }
        if (best == rows) continue;
        std::swap(m[r], m[best]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<long>(r);
}

long rank_bareiss(const QMatrix& m) {
    if (m.empty() || m.front().empty()) return 0;
    check_rectangular(m);
    std::size_t rows = m.size(), cols = m.front().size();
    // scale rows to integers; row scaling preserves rank
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Int den = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            Int d = m[i][j].get_den();
            den = den / gcd(den, d) * d;
        }
        for (std::size_t j = 0; j < cols; ++j) {
            Rat scaled = m[i][j] * Rat(den);
            a[i][j] = scaled.get_num();
        }
    }
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Int num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                if (num % prev != 0)
                    fail(ErrorCode::assertion_failure, "Bareiss division not exact");
                a[i][j] = num / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<long>(r);
}

std::optional<std::vector<Rat>> solve_linear(const QMatrix& m, const std::vector<Rat>& rhs) {
    std::size_t rows = m.size();
    if (rhs.size() != rows) fail(ErrorCode::shape_mismatch, "rhs length does not match row count");
    if (rows == 0) return std::vector<Rat>{};
    check_rectangular(m);
    std::size_t cols = m.front().size();
    QMatrix a = m;
    std::vector<Rat> b = rhs;

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            if (best == rows || rat_abs(a[i][c]) > rat_abs(a[best][c])) best = i;
        }
        if (best == rows) continue;
        std::swap(a[r], a[best]);
        std::swap(b[r], b[best]);
        Rat inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!(b[i] == 0)) return std::nullopt;

    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];

    // exact verification against the original system
    for (std::size_t i = 0; i < rows; ++i) {
        Rat acc(0);
        for (std::size_t j = 0; j < cols; ++j) acc += m[i][j] * x[j];
        if (!(acc == rhs[i]))
            fail(ErrorCode::assertion_failure, "solution verification failed");
    }
    return x;
}

bool EchelonAccumulator::add_row(std::vector<Rat> row) {
    if (row.size() != cols_) fail(ErrorCode::shape_mismatch, "row length mismatch");
    for (auto& [c, pivot_row] : pivots_) {
        if (row[c] == 0) continue;
        Rat f = row[c];
        for (std::size_t j = c; j < cols_; ++j) row[j] -= f * pivot_row[j];
    }
    std::size_t lead = cols_;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!(row[j] == 0)) { lead = j; break; }
    if (lead == cols_) return false;
    Rat inv = 1 / row[lead];
    for (std::size_t j = lead; j < cols_; ++j) row[j] *= inv;
    pivots_.emplace(lead, std::move(row));
    return true;
}

} // namespace severi
