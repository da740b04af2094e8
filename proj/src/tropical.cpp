#include "severi/tropical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "severi/errors.hpp"
#include "severi/linalg.hpp"

namespace severi {

namespace {

// ---- lattice geometry ----------------------------------------------------

using Pt = std::array<long, 2>;

long cross(const Pt& a, const Pt& b) { return a[0] * b[1] - a[1] * b[0]; }
Pt sub(const Pt& a, const Pt& b) { return {a[0] - b[0], a[1] - b[1]}; }
Pt add(const Pt& a, const Pt& b) { return {a[0] + b[0], a[1] + b[1]}; }

long lattice_gcd(long a, long b) { return std::gcd(std::abs(a), std::abs(b)); }

// The generic linear order lambda(i,j) = i + j/1009: the denominator is a
// prime exceeding every coordinate difference at degree <= 4, so lambda
// is injective on the lattice points of the Newton triangle.
constexpr long kEpsDen = 1009;
long lambda_scaled(const Pt& p) { return p[0] * kEpsDen + p[1]; }

bool in_triangle(const Pt& p, int d) {
    return p[0] >= 0 && p[1] >= 0 && p[0] + p[1] <= d;
}

long arithmetic_genus_d(int d) { return static_cast<long>(d - 1) * (d - 2) / 2; }

void check_range(int d, int delta) {
    if (d < 1 || d > 4)
        fail(ErrorCode::out_of_range, "degree must satisfy 1 <= d <= 4");
    long max_delta = static_cast<long>(d) * (d - 1) / 2; // d general lines
    if (delta < 0 || delta > max_delta)
        fail(ErrorCode::out_of_range,
             "delta must satisfy 0 <= delta <= d(d-1)/2 = " + std::to_string(max_delta));
}

// ---- subdivision cells -----------------------------------------------------

struct Cell {
    std::vector<Pt> verts; // triangle: 3 verts; parallelogram: 4, cyclic
    bool parallelogram = false;

    long twice_area() const {
        long acc = 0;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            const Pt& a = verts[i];
            const Pt& b = verts[(i + 1) % verts.size()];
            acc += a[0] * b[1] - a[1] * b[0];
        }
        return std::abs(acc);
    }
};

using Seg = std::pair<Pt, Pt>; // normalized: lexicographically smaller endpoint first

Seg make_seg(const Pt& a, const Pt& b) { return a < b ? Seg{a, b} : Seg{b, a}; }

std::vector<Seg> cell_sides(const Cell& c) {
    std::vector<Seg> out;
    for (std::size_t i = 0; i < c.verts.size(); ++i)
        out.push_back(make_seg(c.verts[i], c.verts[(i + 1) % c.verts.size()]));
    return out;
}

// ---- lattice path enumeration with surgery multiplicities ---------------

using Path = std::vector<Pt>;

Path upper_boundary(int d) {
    Path p;
    for (int j = 0; j <= d; ++j) p.push_back({0, j});
    for (int i = 1; i <= d; ++i) p.push_back({i, d - i});
    return p;
}
Path lower_boundary(int d) {
    Path p;
    for (int i = 0; i <= d; ++i) p.push_back({i, 0});
    return p;
}

struct SideOutcome {
    std::vector<Cell> cells;
    Int mult;
};

// Fill the region between the path and one side of the triangle by corner
// compressions. `side` = +1 sweeps toward the upper boundary (left
// turns), -1 toward the lower boundary (right turns). Every complete
// branch yields one tiling with its multiplicity factor.
void enumerate_side(const Path& path, int side, int d, const Path& target,
                    std::vector<Cell> cells, const Int& mult,
                    std::vector<SideOutcome>& out) {
    std::size_t k = 0;
    long turn = 0;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        long c = cross(sub(path[i], path[i - 1]), sub(path[i + 1], path[i]));
        if (side * c > 0) {
            k = i;
            turn = c;
            break;
        }
    }
    if (k == 0) {
        if (path == target) out.push_back({std::move(cells), mult});
        return;
    }
    const Pt& a = path[k - 1];
    const Pt& b = path[k];
    const Pt& c = path[k + 1];

    // triangle fill: multiplicity factor 2*Area
    {
        Path shorter;
        shorter.reserve(path.size() - 1);
        for (std::size_t i = 0; i < path.size(); ++i)
            if (i != k) shorter.push_back(path[i]);
        std::vector<Cell> cs = cells;
        cs.push_back(Cell{{a, b, c}, false});
        enumerate_side(shorter, side, d, target, std::move(cs), mult * std::abs(turn), out);
    }
    // parallelogram fill: the two dual edges cross, factor 1
    Pt x = sub(add(a, c), b);
    if (in_triangle(x, d)) {
        Path reflected = path;
        reflected[k] = x;
        std::vector<Cell> cs = std::move(cells);
        cs.push_back(Cell{{a, b, c, x}, true});
        enumerate_side(reflected, side, d, target, std::move(cs), mult, out);
    }
}

// All strictly lambda-increasing paths with `steps` steps from the
// lambda-min to the lambda-max vertex of the degree-d triangle.
std::vector<Path> enumerate_paths(int d, int steps) {
    std::vector<Pt> pts;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j + i <= d; ++j) pts.push_back({i, j});
    std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) {
        return lambda_scaled(a) < lambda_scaled(b);
    });
    std::vector<Path> out;
    if (steps < 1 || static_cast<std::size_t>(steps) + 1 > pts.size()) {
        if (steps >= 1) {
            // fewer interior points than steps: no paths
        }
        return out;
    }
    std::size_t middle = pts.size() - 2;
    std::size_t need = static_cast<std::size_t>(steps) - 1;
    std::vector<std::size_t> pick(need);
    // choose `need` of the middle points, in lambda order
    std::vector<std::size_t> idx(need);
    std::iota(idx.begin(), idx.end(), 0);
    if (need > middle) return out;
    while (true) {
        Path p;
        p.push_back(pts.front());
        for (std::size_t i = 0; i < need; ++i) p.push_back(pts[1 + idx[i]]);
        p.push_back(pts.back());
        out.push_back(std::move(p));
        // next combination
        std::size_t i = need;
        while (i > 0 && idx[i - 1] == middle - need + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < need; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

// ---- the point configuration ---------------------------------------------

// Points on a line of direction (1009, 1) with rapidly increasing
// spacing; the denominators/spacing make the configuration tropically
// generic for d <= 4 (validated by the dual enumeration pipelines).
std::vector<std::array<Rat, 2>> point_configuration(int n) {
    std::vector<std::array<Rat, 2>> pts;
    Rat base_x(1, 7), base_y(3, 11);
    Rat t(1);
    const Rat spread(100);
    for (int k = 0; k < n; ++k) {
        t *= spread;
        pts.push_back({base_x + t * kEpsDen, base_y + t});
    }
    return pts;
}

// ---- embedding: solve vertex positions from the subdivision ---------------

struct EdgeInfo {
    Seg seg;
    int cell_a = -1; // left of the directed primitive edge vector
    int cell_b = -1; // right side; -1 when the edge lies on the boundary
    Pt dir{0, 0};    // primitive direction of the segment
    long weight = 1; // lattice length
    int marked = -1; // index of the configuration point on the dual edge
};

struct Embedded {
    TropicalCurve curve;
    bool ok = false;
    std::string why;
};

Pt primitive(const Pt& v) {
    long g = lattice_gcd(v[0], v[1]);
    return {v[0] / g, v[1] / g};
}

Pt rot90(const Pt& v) { return {-v[1], v[0]}; }

// Outward normal of the triangle side containing a boundary segment.
Pt boundary_normal(const Seg& s, int d) {
    if (s.first[1] == 0 && s.second[1] == 0) return {0, -1};
    if (s.first[0] == 0 && s.second[0] == 0) return {-1, 0};
    if (s.first[0] + s.first[1] == d && s.second[0] + s.second[1] == d) return {1, 1};
    fail(ErrorCode::assertion_failure, "segment is not on the triangle boundary");
}

Embedded embed_curve(int d, const std::vector<Cell>& cells,
                     const std::vector<Seg>& marked_edges,
                     const std::vector<std::array<Rat, 2>>& points) {
    Embedded result;
    // collect edges of the complex
    std::map<Seg, std::vector<int>> seg_cells;
    for (std::size_t ci = 0; ci < cells.size(); ++ci)
        for (auto& s : cell_sides(cells[ci])) seg_cells[s].push_back(static_cast<int>(ci));

    long area_total = 0;
    for (auto& c : cells) area_total += c.twice_area();
    if (area_total != static_cast<long>(d) * d)
        fail(ErrorCode::assertion_failure, "cells do not tile the triangle");

    std::vector<EdgeInfo> edges;
    std::map<Seg, int> seg_index;
    for (auto& [seg, cs] : seg_cells) {
        EdgeInfo e;
        e.seg = seg;
        Pt vec = sub(seg.second, seg.first);
        e.dir = primitive(vec);
        e.weight = lattice_gcd(vec[0], vec[1]);
        if (cs.size() == 2) {
            // orient: cell_a on the left of e.dir
            const Cell& c0 = cells[static_cast<std::size_t>(cs[0])];
            long side = 0;
            for (auto& v : c0.verts) {
                long cr = cross(e.dir, sub(v, seg.first));
                if (cr != 0) { side = cr; break; }
            }
            if (side > 0) { e.cell_a = cs[0]; e.cell_b = cs[1]; }
            else { e.cell_a = cs[1]; e.cell_b = cs[0]; }
        } else if (cs.size() == 1) {
            e.cell_a = cs[0];
            e.cell_b = -1;
        } else {
            fail(ErrorCode::assertion_failure, "edge shared by more than two cells");
        }
        seg_index[seg] = static_cast<int>(edges.size());
        edges.push_back(e);
    }
    // attach marked points
    for (std::size_t k = 0; k < marked_edges.size(); ++k) {
        auto it = seg_index.find(marked_edges[k]);
        if (it == seg_index.end())
            fail(ErrorCode::assertion_failure, "marked path edge is not in the complex");
        edges[static_cast<std::size_t>(it->second)].marked = static_cast<int>(k);
    }

    // linear system for the cell positions
    std::size_t nc = cells.size();
    QMatrix A;
    std::vector<Rat> rhs;
    for (auto& e : edges) {
        if (e.cell_b >= 0) {
            // (pos_a - pos_b) . seg_dir = 0
            std::vector<Rat> row(2 * nc, Rat(0));
            row[2 * static_cast<std::size_t>(e.cell_a)] += Rat(e.dir[0]);
            row[2 * static_cast<std::size_t>(e.cell_a) + 1] += Rat(e.dir[1]);
            row[2 * static_cast<std::size_t>(e.cell_b)] -= Rat(e.dir[0]);
            row[2 * static_cast<std::size_t>(e.cell_b) + 1] -= Rat(e.dir[1]);
            A.push_back(std::move(row));
            rhs.push_back(Rat(0));
        }
        if (e.marked >= 0) {
            // pos_a . seg_dir = p . seg_dir
            std::vector<Rat> row(2 * nc, Rat(0));
            row[2 * static_cast<std::size_t>(e.cell_a)] += Rat(e.dir[0]);
            row[2 * static_cast<std::size_t>(e.cell_a) + 1] += Rat(e.dir[1]);
            const auto& p = points[static_cast<std::size_t>(e.marked)];
            A.push_back(std::move(row));
            rhs.push_back(p[0] * e.dir[0] + p[1] * e.dir[1]);
        }
    }
    if (rank_row_echelon(A) != static_cast<long>(2 * nc)) {
        result.why = "position system is not of full rank";
        return result;
    }
    auto sol = solve_linear(A, rhs);
    if (!sol) {
        result.why = "position system inconsistent";
        return result;
    }
    std::vector<std::array<Rat, 2>> cell_pos(nc);
    for (std::size_t i = 0; i < nc; ++i) cell_pos[i] = {(*sol)[2 * i], (*sol)[2 * i + 1]};

    // vertices of the curve = triangle cells
    TropicalCurve curve;
    curve.degree = d;
    std::vector<int> cell_vertex(nc, -1);
    for (std::size_t i = 0; i < nc; ++i) {
        if (cells[i].parallelogram) continue;
        cell_vertex[i] = static_cast<int>(curve.vertices.size());
        curve.vertices.push_back(cell_pos[i]);
    }

    // chains through parallelograms; each chain is one curve edge/ray
    auto opposite_side = [&](const Cell& c, const Seg& s) -> Seg {
        for (std::size_t i = 0; i < 4; ++i) {
            Seg side = make_seg(c.verts[i], c.verts[(i + 1) % 4]);
            if (side == s) return make_seg(c.verts[(i + 2) % 4], c.verts[(i + 3) % 4]);
        }
        fail(ErrorCode::assertion_failure, "side not found on parallelogram");
    };

    struct ChainEnd {
        int cell = -1;      // terminal cell (triangle) or boundary (-1)
        Seg seg;            // terminal segment when cell == -1
    };
    struct Walked {
        ChainEnd end;
        std::vector<int> pieces;
    };
    std::set<int> used_edges;
    auto walk = [&](int start_edge, int from_cell) -> Walked {
        Walked w;
        int ei = start_edge;
        int cur = from_cell;
        while (true) {
            w.pieces.push_back(ei);
            const EdgeInfo& e = edges[static_cast<std::size_t>(ei)];
            int next_cell = (e.cell_a == cur) ? e.cell_b : e.cell_a;
            if (next_cell < 0) {
                w.end = ChainEnd{-1, e.seg};
                return w;
            }
            if (!cells[static_cast<std::size_t>(next_cell)].parallelogram) {
                w.end = ChainEnd{next_cell, e.seg};
                return w;
            }
            Seg nxt = opposite_side(cells[static_cast<std::size_t>(next_cell)], e.seg);
            ei = seg_index.at(nxt);
            cur = next_cell;
        }
    };

    // Marked points must lie on the curve edge their dual carries. Note
    // that parallelogram positions are solver scaffolding only: the cell
    // records a node of the parametrized curve (two independent smoothing
    // parameters), and the two edge images need not literally cross
    // inside both segments.
    auto marked_on_edge = [&](const Walked& w, const std::array<Rat, 2>& from,
                              const std::array<Rat, 2>& to, std::string& why) -> bool {
        for (int piece : w.pieces) {
            const EdgeInfo& e = edges[static_cast<std::size_t>(piece)];
            if (e.marked < 0) continue;
            const auto& p = points[static_cast<std::size_t>(e.marked)];
            Rat dx = to[0] - from[0], dy = to[1] - from[1];
            Rat px = p[0] - from[0], py = p[1] - from[1];
            Rat s;
            if (!(px * dy == py * dx) || (dx == 0 && dy == 0)) {
                why = "marked point not on its edge";
                return false;
            }
            s = dx == 0 ? py / dy : px / dx;
            if (!(s > 0 && s < 1)) {
                why = "marked point outside its edge";
                return false;
            }
        }
        return true;
    };
    auto marked_on_ray = [&](const Walked& w, const std::array<Rat, 2>& from, const Pt& dir,
                             std::string& why) -> bool {
        for (int piece : w.pieces) {
            const EdgeInfo& e = edges[static_cast<std::size_t>(piece)];
            if (e.marked < 0) continue;
            const auto& p = points[static_cast<std::size_t>(e.marked)];
            Rat px = p[0] - from[0], py = p[1] - from[1];
            if (!(px * Rat(dir[1]) == py * Rat(dir[0]))) {
                why = "marked point not on its ray";
                return false;
            }
            Rat s = dir[0] != 0 ? px / Rat(dir[0]) : py / Rat(dir[1]);
            if (!(s > 0)) {
                why = "marked point on the wrong side of its ray";
                return false;
            }
        }
        return true;
    };

    for (std::size_t ei = 0; ei < edges.size(); ++ei) {
        if (used_edges.count(static_cast<int>(ei))) continue;
        const EdgeInfo& e = edges[ei];
        bool a_term = e.cell_a >= 0 && !cells[static_cast<std::size_t>(e.cell_a)].parallelogram;
        bool b_term = e.cell_b < 0 || !cells[static_cast<std::size_t>(e.cell_b)].parallelogram;
        if (!a_term && !b_term) continue; // interior piece; found from an end
        // anchor at a terminal end (triangle cell or the boundary) and
        // walk through any parallelograms to the other end
        int from_cell = a_term ? e.cell_a : e.cell_b;
        ChainEnd start_end{from_cell, e.seg};
        Walked walked = walk(static_cast<int>(ei), from_cell);
        const ChainEnd other = walked.end;
        for (int piece : walked.pieces) used_edges.insert(piece);

        if (other.cell >= 0 && start_end.cell >= 0) {
            // bounded edge between two triangle vertices
            int vu = cell_vertex[static_cast<std::size_t>(start_end.cell)];
            int vv = cell_vertex[static_cast<std::size_t>(other.cell)];
            const auto& pu = curve.vertices[static_cast<std::size_t>(vu)];
            const auto& pv = curve.vertices[static_cast<std::size_t>(vv)];
            Rat ddx = pv[0] - pu[0], ddy = pv[1] - pu[1];
            Pt rdir = rot90(e.dir);
            // pos difference must be parallel to rot90(seg dir)
            if (!(ddx * Rat(rdir[1]) == ddy * Rat(rdir[0]))) {
                result.why = "edge not parallel to its dual direction";
                return result;
            }
            Rat len = rdir[0] != 0 ? ddx / Rat(rdir[0]) : ddy / Rat(rdir[1]);
            if (!(len > 0)) { rdir = {-rdir[0], -rdir[1]}; len = -len; }
            if (!(len > 0)) {
                result.why = "zero-length bounded edge";
                return result;
            }
            if (!marked_on_edge(walked, pu, pv, result.why)) return result;
            TropicalCurve::Edge edge;
            edge.u = vu;
            edge.v = vv;
            edge.dir = {rdir[0], rdir[1]};
            edge.weight = e.weight;
            edge.length = len;
            curve.edges.push_back(edge);
        } else {
            // ray: one end is a triangle vertex, the other the boundary
            int vcell = start_end.cell >= 0 ? start_end.cell : other.cell;
            Seg bseg = start_end.cell >= 0 ? other.seg : start_end.seg;
            if (vcell < 0) {
                result.why = "edge chain crosses the triangle without a vertex";
                return result;
            }
            int vu = cell_vertex[static_cast<std::size_t>(vcell)];
            const auto& pu = curve.vertices[static_cast<std::size_t>(vu)];
            Pt n = boundary_normal(bseg, d);
            Pt rdir = rot90(e.dir);
            if (rdir[0] * n[0] + rdir[1] * n[1] < 0) rdir = {-rdir[0], -rdir[1]};
            if (!marked_on_ray(walked, pu, rdir, result.why)) return result;
            TropicalCurve::Ray ray;
            ray.v = vu;
            ray.dir = {rdir[0], rdir[1]};
            ray.weight = e.weight;
            curve.rays.push_back(ray);
        }
    }

    result.curve = std::move(curve);
    result.ok = true;
    return result;
}

std::string cell_type_string(const std::vector<Cell>& cells, const Path& path) {
    std::vector<std::string> reps;
    for (auto& c : cells) {
        std::vector<Pt> vs = c.verts;
        std::sort(vs.begin(), vs.end());
        std::ostringstream os;
        os << (c.parallelogram ? "P" : "T");
        for (auto& v : vs) os << "(" << v[0] << "," << v[1] << ")";
        reps.push_back(os.str());
    }
    std::sort(reps.begin(), reps.end());
    std::ostringstream os;
    for (auto& r : reps) os << r;
    os << "|path";
    for (auto& p : path) os << "(" << p[0] << "," << p[1] << ")";
    return os.str();
}

} // namespace

// ---- public curve checks ---------------------------------------------------

bool check_balancing(const TropicalCurve& c) {
    std::vector<std::array<Rat, 2>> sums(c.vertices.size(), {Rat(0), Rat(0)});
    for (auto& e : c.edges) {
        sums[static_cast<std::size_t>(e.u)][0] += Rat(e.weight) * e.dir[0];
        sums[static_cast<std::size_t>(e.u)][1] += Rat(e.weight) * e.dir[1];
        sums[static_cast<std::size_t>(e.v)][0] -= Rat(e.weight) * e.dir[0];
        sums[static_cast<std::size_t>(e.v)][1] -= Rat(e.weight) * e.dir[1];
    }
    for (auto& r : c.rays) {
        sums[static_cast<std::size_t>(r.v)][0] += Rat(r.weight) * r.dir[0];
        sums[static_cast<std::size_t>(r.v)][1] += Rat(r.weight) * r.dir[1];
    }
    for (auto& s : sums)
        if (!(s[0] == 0 && s[1] == 0)) return false;
    return true;
}

bool check_degree_rays(const TropicalCurve& c) {
    long w_left = 0, w_down = 0, w_diag = 0;
    for (auto& r : c.rays) {
        if (r.dir == std::array<long, 2>{-1, 0}) w_left += r.weight;
        else if (r.dir == std::array<long, 2>{0, -1}) w_down += r.weight;
        else if (r.dir == std::array<long, 2>{1, 1}) w_diag += r.weight;
        else return false;
    }
    return w_left == c.degree && w_down == c.degree && w_diag == c.degree;
}

CurveTopology curve_topology(const TropicalCurve& c) {
    std::vector<int> parent(c.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (auto& e : c.edges) {
        int a = find(e.u), b = find(e.v);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
    std::set<int> roots;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) roots.insert(find(static_cast<int>(i)));
    CurveTopology t;
    t.components = static_cast<long>(roots.size());
    t.betti1 = static_cast<long>(c.edges.size()) - static_cast<long>(c.vertices.size()) + t.components;
    return t;
}

bool is_trivalent(const TropicalCurve& c) {
    std::vector<long> val(c.vertices.size(), 0);
    for (auto& e : c.edges) {
        ++val[static_cast<std::size_t>(e.u)];
        ++val[static_cast<std::size_t>(e.v)];
    }
    for (auto& r : c.rays) ++val[static_cast<std::size_t>(r.v)];
    for (long v : val)
        if (v != 3) return false;
    return true;
}

// ---- enumeration ------------------------------------------------------------

EnumerationResult enumerate_curves(int d, int delta) {
    check_range(d, delta);
    long g = arithmetic_genus_d(d) - delta;
    int n = 3 * d - 1 + static_cast<int>(g);
    EnumerationResult result;
    result.d = d;
    result.delta = delta;
    result.points = n;
    result.total = 0;

    auto points = point_configuration(n);
    Path upper = upper_boundary(d);
    Path lower = lower_boundary(d);

    for (const Path& path : enumerate_paths(d, n)) {
        std::vector<SideOutcome> ups, downs;
        enumerate_side(path, +1, d, upper, {}, Int(1), ups);
        enumerate_side(path, -1, d, lower, {}, Int(1), downs);
        if (ups.empty() || downs.empty()) continue;
        std::vector<Seg> marked;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            marked.push_back(make_seg(path[i], path[i + 1]));
        for (auto& up : ups) {
            for (auto& down : downs) {
                std::vector<Cell> cells = up.cells;
                cells.insert(cells.end(), down.cells.begin(), down.cells.end());
                Int mult = up.mult * down.mult;

                // internal consistency: the product of twice-areas of the
                // triangle cells is the surgery multiplicity
                Int tri_prod(1);
                for (auto& c : cells)
                    if (!c.parallelogram) tri_prod *= c.twice_area();
                if (tri_prod != mult)
                    fail(ErrorCode::assertion_failure, "multiplicity bookkeeping mismatch");

                Embedded emb = embed_curve(d, cells, marked, points);
                if (!emb.ok)
                    fail(ErrorCode::assertion_failure,
                         "enumerated type failed to embed: " + emb.why);
                if (!check_balancing(emb.curve))
                    fail(ErrorCode::assertion_failure, "enumerated curve unbalanced");
                if (!check_degree_rays(emb.curve))
                    fail(ErrorCode::assertion_failure, "enumerated curve has wrong ray multiset");
                if (!is_trivalent(emb.curve))
                    fail(ErrorCode::assertion_failure, "enumerated curve not trivalent");
                CurveTopology topo = curve_topology(emb.curve);
                if (topo.genus() != g)
                    fail(ErrorCode::assertion_failure, "enumerated curve has wrong genus");

                CurveRecord rec;
                rec.type = cell_type_string(cells, path);
                rec.multiplicity = mult;
                rec.curve = std::move(emb.curve);
                result.records.push_back(std::move(rec));
                result.total += mult;
            }
        }
    }
    std::sort(result.records.begin(), result.records.end(),
              [](const CurveRecord& a, const CurveRecord& b) { return a.type < b.type; });
    return result;
}

Int severi_degree(int d, int delta) { return enumerate_curves(d, delta).total; }

// ---- floor diagrams ---------------------------------------------------------

namespace {

struct Elevator {
    int hi = 2, lo = 1; // floor indices, 1-based, hi > lo
    long w = 1;
    bool operator<(const Elevator& o) const {
        return std::tie(hi, lo, w) < std::tie(o.hi, o.lo, o.w);
    }
    bool operator==(const Elevator& o) const {
        return hi == o.hi && lo == o.lo && w == o.w;
    }
};

struct Diagram {
    int d = 1;
    std::vector<Elevator> elevators;       // sorted
    std::vector<long> rays;                // rays[i] = weight-1 down rays from floor i+1

    bool flux_valid() {
        rays.assign(static_cast<std::size_t>(d), 0);
        for (int i = 1; i <= d; ++i) {
            long out = 0, in = 0;
            for (auto& e : elevators) {
                if (e.hi == i) out += e.w;
                if (e.lo == i) in += e.w;
            }
            long r = 1 - out + in;
            if (r < 0) return false;
            rays[static_cast<std::size_t>(i - 1)] = r;
        }
        return true;
    }
};

// Count compatible assignments of the n height-ordered points to the
// diagram's objects (floors in order, elevators inside their floor
// interval, rays below their floor). Identical parallel elevators and
// same-floor rays are unordered classes, so each geometric marking is
// counted once.
struct MarkingCounter {
    const Diagram& dia;
    std::vector<Elevator> classes;
    std::vector<long> class_count;
    std::map<std::vector<long>, Int> memo;
    int n = 0;

    explicit MarkingCounter(const Diagram& d0) : dia(d0) {
        for (auto& e : dia.elevators) {
            if (!classes.empty() && classes.back() == e) {
                ++class_count.back();
            } else {
                classes.push_back(e);
                class_count.push_back(1);
            }
        }
        long total_rays = 0;
        for (long r : dia.rays) total_rays += r;
        n = dia.d + static_cast<int>(dia.elevators.size() + total_rays);
    }

    Int count() { return rec(initial_state()); }

private:
    // state: [floors placed, per-class placed, per-floor rays placed]
    std::vector<long> initial_state() const {
        return std::vector<long>(1 + classes.size() + static_cast<std::size_t>(dia.d), 0);
    }

    Int rec(const std::vector<long>& st) {
        long placed = 0;
        for (long v : st) placed += v;
        if (placed == n) return Int(1);
        auto it = memo.find(st);
        if (it != memo.end()) return it->second;
        Int acc(0);
        long floors = st[0];
        // place the next floor
        if (floors < dia.d) {
            auto nx = st;
            ++nx[0];
            acc += rec(nx);
        }
        // place an elevator of some class: lower floor placed, upper not
        for (std::size_t k = 0; k < classes.size(); ++k) {
            if (st[1 + k] >= class_count[k]) continue;
            if (classes[k].lo > floors) continue;  // lower floor not placed yet
            if (classes[k].hi <= floors) continue; // upper floor already placed
            auto nx = st;
            ++nx[1 + k];
            acc += rec(nx);
        }
        // place a ray of some floor: floor not placed yet
        for (int i = 1; i <= dia.d; ++i) {
            std::size_t slot = 1 + classes.size() + static_cast<std::size_t>(i - 1);
            if (st[slot] >= dia.rays[static_cast<std::size_t>(i - 1)]) continue;
            if (i <= floors) continue;
            auto nx = st;
            ++nx[slot];
            acc += rec(nx);
        }
        memo[st] = acc;
        return acc;
    }
};

void enumerate_elevator_multisets(int d, int remaining, const Elevator& min_e,
                                  std::vector<Elevator>& current,
                                  const std::function<void(const std::vector<Elevator>&)>& emit) {
    if (remaining == 0) {
        emit(current);
        return;
    }
    // non-decreasing sequences of (hi, lo, w)
    for (int hi = min_e.hi; hi <= d; ++hi) {
        for (int lo = (hi == min_e.hi ? min_e.lo : 1); lo < hi; ++lo) {
            for (long w = (hi == min_e.hi && lo == min_e.lo ? min_e.w : 1); w <= d; ++w) {
                current.push_back({hi, lo, w});
                enumerate_elevator_multisets(d, remaining - 1, {hi, lo, w}, current, emit);
                current.pop_back();
            }
        }
    }
}

std::string diagram_type_string(const Diagram& dia) {
    std::ostringstream os;
    os << "elevators[";
    for (std::size_t i = 0; i < dia.elevators.size(); ++i) {
        if (i) os << ",";
        os << dia.elevators[i].hi << "->" << dia.elevators[i].lo << "w" << dia.elevators[i].w;
    }
    os << "];rays[";
    for (std::size_t i = 0; i < dia.rays.size(); ++i) {
        if (i) os << ",";
        os << dia.rays[i];
    }
    os << "]";
    return os.str();
}

} // namespace

std::vector<FloorDiagramRecord> enumerate_floor_diagrams(int d, int delta) {
    check_range(d, delta);
    long g = arithmetic_genus_d(d) - delta;
    long n_edges = d - 1 + g;
    std::vector<FloorDiagramRecord> out;
    if (n_edges < 0) return out;

    std::vector<Elevator> current;
    enumerate_elevator_multisets(
        d, static_cast<int>(n_edges), {2, 1, 1}, current,
        [&](const std::vector<Elevator>& elevators) {
            Diagram dia;
            dia.d = d;
            dia.elevators = elevators;
            if (!dia.flux_valid()) return;
            MarkingCounter mc(dia);
            Int markings = mc.count();
            if (markings == 0) return;
            Int mu(1);
            for (auto& e : elevators) mu *= Int(e.w) * Int(e.w);
            FloorDiagramRecord rec;
            rec.type = diagram_type_string(dia);
            rec.multiplicity = mu * markings;
            out.push_back(std::move(rec));
        });
    std::sort(out.begin(), out.end(),
              [](const FloorDiagramRecord& a, const FloorDiagramRecord& b) { return a.type < b.type; });
    return out;
}

Int severi_degree_floor(int d, int delta) {
    Int total(0);
    for (auto& rec : enumerate_floor_diagrams(d, delta)) total += rec.multiplicity;
    return total;
}

// ---- contraction ------------------------------------------------------------

namespace {

void validate_edge_indices(const TropicalCurve& c, const std::vector<int>& idx, bool allow_empty) {
    if (!allow_empty && idx.empty())
        fail(ErrorCode::invalid_edge, "at least one edge index required");
    std::set<int> seen;
    for (int i : idx) {
        if (i < 0 || static_cast<std::size_t>(i) >= c.edges.size())
            fail(ErrorCode::invalid_edge, "edge index out of range: " + std::to_string(i));
        if (!seen.insert(i).second)
            fail(ErrorCode::invalid_edge, "duplicate edge index: " + std::to_string(i));
    }
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a); b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

} // namespace

ContractReport contract_edges(const TropicalCurve& c, const std::vector<int>& edge_indices) {
    validate_edge_indices(c, edge_indices, /*allow_empty=*/true);
    std::set<int> contracted(edge_indices.begin(), edge_indices.end());

    UnionFind uf(c.vertices.size());
    for (int i : contracted) uf.unite(c.edges[static_cast<std::size_t>(i)].u,
                                      c.edges[static_cast<std::size_t>(i)].v);

    // new vertex ids in order of class representative
    std::map<int, int> new_id;
    std::vector<int> vertex_map(c.vertices.size());
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        int rep = uf.find(static_cast<int>(i));
        if (!new_id.count(rep)) new_id[rep] = static_cast<int>(new_id.size());
        vertex_map[i] = new_id[rep];
    }

    TropicalCurve out;
    out.degree = c.degree;
    out.vertices.assign(new_id.size(), {Rat(0), Rat(0)});

    // re-derive positions: anchor each component at its smallest old
    // vertex, propagate along a spanning tree of the remaining edges,
    // verify closure on the rest
    std::vector<bool> placed(new_id.size(), false);
    std::vector<std::vector<std::pair<int, int>>> adj(new_id.size()); // (edge index, +1/-1 orientation)
    for (std::size_t ei = 0; ei < c.edges.size(); ++ei) {
        if (contracted.count(static_cast<int>(ei))) continue;
        const auto& e = c.edges[ei];
        int nu = vertex_map[static_cast<std::size_t>(e.u)];
        int nv = vertex_map[static_cast<std::size_t>(e.v)];
        if (nu == nv)
            fail(ErrorCode::invalid_edge,
                 "contraction collapses a cycle containing a positive-length edge");
        adj[static_cast<std::size_t>(nu)].push_back({static_cast<int>(ei), +1});
        adj[static_cast<std::size_t>(nv)].push_back({static_cast<int>(ei), -1});
    }
    for (std::size_t old_v = 0; old_v < c.vertices.size(); ++old_v) {
        int nv = vertex_map[old_v];
        if (placed[static_cast<std::size_t>(nv)]) continue;
        // BFS from this anchor
        out.vertices[static_cast<std::size_t>(nv)] = c.vertices[old_v];
        placed[static_cast<std::size_t>(nv)] = true;
        std::vector<int> queue{nv};
        while (!queue.empty()) {
            int cur = queue.back();
            queue.pop_back();
            for (auto& [ei, orient] : adj[static_cast<std::size_t>(cur)]) {
                const auto& e = c.edges[static_cast<std::size_t>(ei)];
                int other = orient > 0 ? vertex_map[static_cast<std::size_t>(e.v)]
                                       : vertex_map[static_cast<std::size_t>(e.u)];
                std::array<Rat, 2> step{e.length * e.dir[0], e.length * e.dir[1]};
                std::array<Rat, 2> target{
                    out.vertices[static_cast<std::size_t>(cur)][0] + Rat(orient) * step[0],
                    out.vertices[static_cast<std::size_t>(cur)][1] + Rat(orient) * step[1]};
                if (!placed[static_cast<std::size_t>(other)]) {
                    out.vertices[static_cast<std::size_t>(other)] = target;
                    placed[static_cast<std::size_t>(other)] = true;
                    queue.push_back(other);
                } else if (!(out.vertices[static_cast<std::size_t>(other)][0] == target[0] &&
                             out.vertices[static_cast<std::size_t>(other)][1] == target[1])) {
                    fail(ErrorCode::invalid_edge,
                         "contraction is not realizable: cycle closure fails with remaining lengths");
                }
            }
        }
    }

    for (std::size_t ei = 0; ei < c.edges.size(); ++ei) {
        if (contracted.count(static_cast<int>(ei))) continue;
        const auto& e = c.edges[ei];
        TropicalCurve::Edge ne = e;
        ne.u = vertex_map[static_cast<std::size_t>(e.u)];
        ne.v = vertex_map[static_cast<std::size_t>(e.v)];
        out.edges.push_back(ne);
    }
    for (auto& r : c.rays) {
        TropicalCurve::Ray nr = r;
        nr.v = vertex_map[static_cast<std::size_t>(r.v)];
        out.rays.push_back(nr);
    }

    ContractReport rep;
    rep.vertex_map = vertex_map;
    std::vector<long> val(out.vertices.size(), 0);
    for (auto& e : out.edges) {
        ++val[static_cast<std::size_t>(e.u)];
        ++val[static_cast<std::size_t>(e.v)];
    }
    for (auto& r : out.rays) ++val[static_cast<std::size_t>(r.v)];
    rep.valences = std::move(val);
    rep.balanced = check_balancing(out);
    rep.curve = std::move(out);
    return rep;
}

CuspSignature cusp_signature(const TropicalCurve& c, const std::vector<int>& vanishing_edges) {
    validate_edge_indices(c, vanishing_edges, /*allow_empty=*/false);
    std::set<int> vanishing(vanishing_edges.begin(), vanishing_edges.end());

    UnionFind uf(c.vertices.size());
    for (int i : vanishing) uf.unite(c.edges[static_cast<std::size_t>(i)].u,
                                     c.edges[static_cast<std::size_t>(i)].v);
    std::map<int, long> val;
    std::map<int, std::array<Rat, 2>> sums;
    for (std::size_t ei = 0; ei < c.edges.size(); ++ei) {
        const auto& e = c.edges[ei];
        int ru = uf.find(e.u), rv = uf.find(e.v);
        if (vanishing.count(static_cast<int>(ei))) continue;
        ++val[ru];
        ++val[rv];
        sums[ru][0] += Rat(e.weight) * e.dir[0];
        sums[ru][1] += Rat(e.weight) * e.dir[1];
        sums[rv][0] -= Rat(e.weight) * e.dir[0];
        sums[rv][1] -= Rat(e.weight) * e.dir[1];
    }
    for (auto& r : c.rays) {
        int rv = uf.find(r.v);
        ++val[rv];
        sums[rv][0] += Rat(r.weight) * r.dir[0];
        sums[rv][1] += Rat(r.weight) * r.dir[1];
    }
    // make sure isolated merged vertices appear
    for (std::size_t i = 0; i < c.vertices.size(); ++i) val.emplace(uf.find(static_cast<int>(i)), 0);

    CuspSignature sig;
    sig.vanishing_count = static_cast<int>(vanishing.size());
    sig.codimension = sig.vanishing_count;
    sig.cusp_candidate = sig.vanishing_count >= 2;
    sig.worse_than_cusp = sig.vanishing_count >= 3;
    for (auto& [rep, v] : val) sig.valence_profile.push_back(v);
    std::sort(sig.valence_profile.rbegin(), sig.valence_profile.rend());
    sig.balanced = true;
    for (auto& [rep, s] : sums)
        if (!(s[0] == 0 && s[1] == 0)) sig.balanced = false;
    return sig;
}

Rat node_edge_length(const Rat& val_t) {
    if (val_t < 0)
        fail(ErrorCode::non_positive_valuation,
             "valuation of the smoothing parameter must be >= 0");
    return val_t;
}

} // namespace severi
