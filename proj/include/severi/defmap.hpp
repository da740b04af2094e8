#pragma once

#include <optional>
#include <string>
#include <vector>

#include "severi/linalg.hpp"
#include "severi/rational.hpp"

namespace severi {

/// Per-singularity deformation budget: dim T^1 (conditions imposed on
/// the ambient linear system) and dim of the equisingular subspace (rows
/// contributed to the global-to-local matrix).
struct SingularityBudget {
    enum class Kind { CurveNodeOnSurface, CuspOnSurface, CurveNodeInThreefold, SurfaceODP, Custom };
    Kind kind = Kind::Custom;
    int t1_dim = 1;
    int es_dim = 1;

    // Fixed table: node on surface (1,1); cusp on surface (2,1); node in
    // threefold (1,1); ordinary double point of a surface in a threefold (1,1).
    static SingularityBudget node_surface() { return {Kind::CurveNodeOnSurface, 1, 1}; }
    static SingularityBudget cusp_surface() { return {Kind::CuspOnSurface, 2, 1}; }
    static SingularityBudget node_threefold() { return {Kind::CurveNodeInThreefold, 1, 1}; }
    static SingularityBudget odp_surface() { return {Kind::SurfaceODP, 1, 1}; }

    static SingularityBudget from_name(const std::string& name);
    std::string name() const;
};

/// Rational matrix modeling H^0(N) -> (+) T^{1,es}: one row per
/// es-dimension unit of each singular point, one column per basis vector
/// of the global section space (h^0 is user-supplied, cohomology is
/// never computed here).
struct DeformationMap {
    QMatrix matrix;
    std::vector<SingularityBudget> budgets;

    std::size_t rows() const { return matrix.size(); }
    std::size_t cols() const { return matrix.empty() ? 0 : matrix.front().size(); }

    /// Checks rectangularity and row count == sum of es dims.
    void validate() const;
};

/// rank over Q by exact elimination.
long image_dimension(const DeformationMap& m);

/// Independent fraction-free rank pipeline (cross-check oracle surface).
long image_dimension_bareiss(const DeformationMap& m);

/// A coefficient vector xi with M xi = target, or nullopt (Unrealizable).
/// Returned solutions verify exactly.
std::optional<std::vector<Rat>> realizable(const DeformationMap& m, const std::vector<Rat>& target);

/// image_dimension, guarded by the theorems' hypothesis that every
/// budget has es_dim == 1 (unsupported_budget otherwise).
long max_singular_count(const DeformationMap& m);

/// Sum of t1 dims: conditions imposed on the ambient linear system.
long codim_budget(const std::vector<SingularityBudget>& budgets);

} // namespace severi
