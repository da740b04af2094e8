#pragma once

#include <map>
#include <optional>
#include <vector>

#include "severi/rational.hpp"

namespace severi {

using QMatrix = std::vector<std::vector<Rat>>;

/// Rank over Q by row echelon elimination. Pivot choice within a column:
/// the candidate with the largest absolute value, first row on ties, so
/// the elimination is deterministic.
long rank_row_echelon(QMatrix m);

/// Rank by fraction-free Bareiss elimination on an integer-scaled copy;
/// the independent cross-check pipeline for rank_row_echelon.
long rank_bareiss(const QMatrix& m);

/// A particular solution of M x = rhs (free variables set to zero), or
/// nullopt when the system is inconsistent. Any returned solution has
/// been verified exactly against the inputs.
std::optional<std::vector<Rat>> solve_linear(const QMatrix& m, const std::vector<Rat>& rhs);

/// Incremental echelon form for rank computations where rows greatly
/// outnumber columns (the truncated local-algebra quotients).
class EchelonAccumulator {
public:
    explicit EchelonAccumulator(std::size_t cols) : cols_(cols) {}

    /// Reduce the row against the current pivots and absorb it if
    /// independent. Returns true if the rank grew.
    bool add_row(std::vector<Rat> row);

    long rank() const { return static_cast<long>(pivots_.size()); }

private:
    std::size_t cols_;
    std::map<std::size_t, std::vector<Rat>> pivots_; // pivot column -> normalized row
};

} // namespace severi
