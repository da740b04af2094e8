#include "severi/defmap.hpp"

#include "severi/errors.hpp"

namespace severi {

SingularityBudget SingularityBudget::from_name(const std::string& name) {
    if (name == "node_surface") return node_surface();
    if (name == "cusp_surface") return cusp_surface();
    if (name == "node_threefold") return node_threefold();
    if (name == "odp_surface") return odp_surface();
    fail(ErrorCode::invalid_spec, "unknown singularity budget: " + name);
}

std::string SingularityBudget::name() const {
    switch (kind) {
        case Kind::CurveNodeOnSurface: return "node_surface";
        case Kind::CuspOnSurface: return "cusp_surface";
        case Kind::CurveNodeInThreefold: return "node_threefold";
        case Kind::SurfaceODP: return "odp_surface";
        case Kind::Custom: return "custom";
    }
    return "custom";
}

void DeformationMap::validate() const {
    std::size_t es_total = 0;
    for (auto& b : budgets) {
        if (b.t1_dim < 1 || b.es_dim < 1)
            fail(ErrorCode::invalid_spec, "budget dimensions must be positive");
        es_total += static_cast<std::size_t>(b.es_dim);
    }
    if (matrix.size() != es_total)
        fail(ErrorCode::shape_mismatch,
             "row count " + std::to_string(matrix.size()) +
                 " does not equal total es dimension " + std::to_string(es_total));
    for (auto& row : matrix)
        if (row.size() != cols())
            fail(ErrorCode::shape_mismatch, "ragged matrix");
}

long image_dimension(const DeformationMap& m) {
    m.validate();
    return rank_row_echelon(m.matrix);
}

long image_dimension_bareiss(const DeformationMap& m) {
    m.validate();
    return rank_bareiss(m.matrix);
}

std::optional<std::vector<Rat>> realizable(const DeformationMap& m, const std::vector<Rat>& target) {
    m.validate();
    if (target.size() != m.rows())
        fail(ErrorCode::shape_mismatch, "target length does not equal row count");
    return solve_linear(m.matrix, target);
}

long max_singular_count(const DeformationMap& m) {
    for (auto& b : m.budgets)
        if (b.es_dim != 1)
            fail(ErrorCode::unsupported_budget,
                 "max_singular_count requires es_dim == 1 budgets");
    return image_dimension(m);
}

long codim_budget(const std::vector<SingularityBudget>& budgets) {
    long total = 0;
    for (auto& b : budgets) total += b.t1_dim;
    return total;
}

} // namespace severi
