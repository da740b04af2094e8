#pragma once

#include <string>
#include <vector>

#include "severi/bivar.hpp"
#include "severi/rational.hpp"

namespace severi {

struct AdeLabel {
    enum class Kind { Smooth, A, D, Other };
    Kind kind = Kind::Other;
    int index = 0; // the k of A_k / D_k

    std::string str() const {
        switch (kind) {
            case Kind::Smooth: return "Smooth";
            case Kind::A: return "A" + std::to_string(index);
            case Kind::D: return "D" + std::to_string(index);
            case Kind::Other: return "Other";
        }
        return "Other";
    }
    bool operator==(const AdeLabel& o) const { return kind == o.kind && index == o.index; }
};

/// The numerical data of an isolated plane curve germ. Invariants
/// maintained by classify(): mu = 2*delta - branches + 1 (checked across
/// the two independent pipelines), tau <= mu, and Smooth <=> delta == 0.
struct GermReport {
    long multiplicity = 0;
    long milnor = 0;
    long tjurina = 0;
    long delta = 0;
    long branches = 0;
    AdeLabel ade;
};

/// One infinitely-near point that was actually blown up. `weight` counts
/// the conjugate copies of the point when its coordinates generate a
/// proper extension of Q; all delta/branch accounting is weighted.
struct BlowupNode {
    int id = 0;
    int parent = -1;
    long mult = 0;
    long weight = 1;
    long branches_here = 0;  // weighted branches terminating after this blow-up
    bool bookkeeping = false; // smooth center blown up only for transversality
    std::string center;
    std::string local_equation;
    std::vector<int> children;
};

struct BlowupTree {
    std::vector<BlowupNode> nodes;
    bool smooth_germ = false; // true iff the germ itself is smooth (empty tree)

    long delta() const {
        long d = 0;
        for (auto& n : nodes) d += n.weight * (n.mult * (n.mult - 1)) / 2;
        return d;
    }
    long branches() const {
        if (smooth_germ) return 1;
        long r = 0;
        for (auto& n : nodes) r += n.branches_here;
        return r;
    }
};

struct GermOptions {
    int quotient_degree_cap = 64; // truncation cap for mu/tau stabilization
    int blowup_depth_cap = 48;    // max blow-ups along one chain
};

/// Order of vanishing at the origin (minimal total degree).
long multiplicity(const QPoly& f);

/// dim Q[[x,y]] / (f_x, f_y) by truncated row reduction with a
/// stabilization check between consecutive truncation degrees.
long milnor_number(const QPoly& f, const GermOptions& opt = {});

/// dim Q[[x,y]] / (f, f_x, f_y), same method.
long tjurina_number(const QPoly& f, const GermOptions& opt = {});

/// Embedded resolution by point blow-ups; works in the two standard
/// affine charts, recursing per irreducible factor of the exceptional
/// restriction. Centers with coordinates in a simple extension of Q are
/// handled in that extension; a second nested extension raises
/// resolution_depth_exceeded.
BlowupTree resolve(const QPoly& f, const GermOptions& opt = {});

long delta_invariant(const QPoly& f, const GermOptions& opt = {});
long branch_count(const QPoly& f, const GermOptions& opt = {});

/// Full invariant tuple plus the A/D lookup on (m, mu, r).
GermReport classify(const QPoly& f, const GermOptions& opt = {});

} // namespace severi
