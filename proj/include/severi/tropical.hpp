#pragma once

#include <array>
#include <string>
#include <vector>

#include "severi/rational.hpp"

namespace severi {

/// Balanced weighted rational graph in the plane. A bounded edge with
/// endpoints (u, v), primitive direction dir and length l satisfies
/// pos[v] = pos[u] + l * dir. Crossings of edges in the plane are not
/// vertices; the abstract graph is what matters.
struct TropicalCurve {
    struct Edge {
        int u = 0, v = 0;
        std::array<long, 2> dir{1, 0}; // primitive, oriented u -> v
        long weight = 1;
        Rat length;
    };
    struct Ray {
        int v = 0;
        std::array<long, 2> dir{1, 0}; // primitive, pointing to infinity
        long weight = 1;
    };

    int degree = 1;
    std::vector<std::array<Rat, 2>> vertices;
    std::vector<Edge> edges;
    std::vector<Ray> rays;
};

/// Every vertex balances exactly: sum of weight * direction over
/// incident edges and rays (outgoing orientation) is zero.
bool check_balancing(const TropicalCurve& c);

/// Degree-d boundary condition: the ray multiset is d copies each of
/// (-1,0), (0,-1), (1,1), counted with weight.
bool check_degree_rays(const TropicalCurve& c);

struct CurveTopology {
    long components = 0;
    long betti1 = 0;       // bounded edges - vertices + components
    long genus() const { return betti1 - (components - 1); }
};
CurveTopology curve_topology(const TropicalCurve& c);

bool is_trivalent(const TropicalCurve& c);

struct CurveRecord {
    std::string type;   // canonical encoding of the dual subdivision
    Int multiplicity;
    TropicalCurve curve;
};

struct EnumerationResult {
    int d = 1;
    int delta = 0;
    long points = 0;    // dim|O(d)| - delta
    Int total;          // sum of multiplicities
    std::vector<CurveRecord> records;
};

/// Enumerate plane tropical curves of degree d with delta nodes through
/// the fixed generic point configuration, via lattice paths in the
/// degree-d triangle. Deterministic canonical ordering. Caps: d <= 4,
/// 0 <= delta <= d(d-1)/2 (reducible curves included).
EnumerationResult enumerate_curves(int d, int delta);

/// Severi degree N(d, delta): total of enumerate_curves.
Int severi_degree(int d, int delta);

/// The same count by floor diagram enumeration; the independent
/// cross-check pipeline for severi_degree.
Int severi_degree_floor(int d, int delta);

struct FloorDiagramRecord {
    std::string type;
    Int multiplicity; // mu(D) * number of markings
};
std::vector<FloorDiagramRecord> enumerate_floor_diagrams(int d, int delta);

struct ContractReport {
    TropicalCurve curve;
    std::vector<long> valences;       // per vertex of the contracted curve
    std::vector<int> vertex_map;      // old vertex index -> new vertex index
    bool balanced = false;
};

/// Set the named bounded edges' lengths to zero and identify endpoints.
/// Vertex positions are re-derived by spanning-tree propagation; a cycle
/// whose closure fails with the remaining lengths makes the contraction
/// unrealizable and raises invalid_edge.
ContractReport contract_edges(const TropicalCurve& c, const std::vector<int>& edge_indices);

struct CuspSignature {
    int vanishing_count = 0;
    int codimension = 0;               // = number of simultaneously vanishing lengths
    std::vector<long> valence_profile; // valences after combinatorial contraction, descending
    bool cusp_candidate = false;       // >= 2 lengths vanish simultaneously
    bool worse_than_cusp = false;      // >= 3 lengths vanish simultaneously
    bool balanced = false;             // re-verified on the contracted graph
};

/// Boundary-event report for a set of simultaneously vanishing edge
/// lengths. Purely combinatorial: the codimension count follows the
/// edge-length accounting; the valence profile is reported alongside,
/// not conflated with it.
CuspSignature cusp_signature(const TropicalCurve& c, const std::vector<int>& vanishing_edges);

/// Edge length from the valuation of a node-smoothing parameter;
/// proportionality constant normalized to 1. val_t = 0 means the node
/// is not smoothed (length 0); negative valuations are rejected.
Rat node_edge_length(const Rat& val_t);

} // namespace severi
