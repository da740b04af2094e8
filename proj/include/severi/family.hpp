#pragma once

#include <optional>
#include <string>
#include <vector>

#include "severi/rational.hpp"
#include "severi/upoly.hpp"

namespace severi {

/// p(x) monic with exact rational coefficients, the right-hand side of
/// the hyperelliptic model y^2 = p(x).
class MonicUnivariate {
public:
    explicit MonicUnivariate(QUPoly p) : poly_(std::move(p)) {
        if (poly_.degree() < 1) fail(ErrorCode::invalid_input, "degree must be >= 1");
        if (!(poly_.leading() == Rat(1)))
            fail(ErrorCode::invalid_input, "polynomial must be monic");
    }

    /// Normalize a nonzero polynomial of positive degree to monic form;
    /// the multiplicity profile of the roots is unchanged by the unit.
    static MonicUnivariate normalized(const QUPoly& p) {
        if (p.degree() < 1) fail(ErrorCode::invalid_input, "degree must be >= 1");
        return MonicUnivariate(p.monic());
    }

    const QUPoly& poly() const { return poly_; }
    int degree() const { return poly_.degree(); }

private:
    QUPoly poly_;
};

/// One singular point of the fiber y^2 = p(x): an x-location that is a
/// repeated root of p. Irrational locations are reported by irreducible
/// factor, never approximated.
struct FiberSingularPoint {
    std::optional<Rat> location;  // set iff the root is rational
    std::string factor;           // defining irreducible factor (in x)
    int factor_degree = 1;        // number of conjugate points it carries
    int root_multiplicity = 2;    // m, the multiplicity of p at the root
    std::string ade() const { return "A" + std::to_string(root_multiplicity - 1); }
    long delta_each() const { return (root_multiplicity - 1 + 1) / 2; } // ceil((m-1)/2)
};

struct FiberClassification {
    // (root multiplicity m >= 2, count of such roots with field degree)
    std::vector<std::pair<int, int>> multiplicity_profile;
    std::vector<FiberSingularPoint> singular_points;
    long total_delta = 0;
    bool smooth = true;
};

struct CubicStratum {
    enum class Label { Smooth, OneNode, Cusp };
    Label label = Label::Smooth;
    Rat discriminant;

    std::string label_str() const {
        switch (label) {
            case Label::Smooth: return "Smooth";
            case Label::OneNode: return "OneNode";
            case Label::Cusp: return "Cusp";
        }
        return "Smooth";
    }
};

/// Square-free decomposition of p; each multiplicity-m factor (m >= 2)
/// of degree e contributes e singular points of type A_{m-1}.
FiberClassification classify_fiber(const MonicUnivariate& p);

/// -(4a^3 + 27b^2); zero iff x^3 + ax + b has a repeated root.
Rat cubic_discriminant(const Rat& a, const Rat& b);

/// Stratum of y^2 = x^3 + ax + b in the versal (a,b)-plane.
CubicStratum stratify_cubic(const Rat& a, const Rat& b);

/// Evaluate stratify_cubic along (a,b) = (-3t^2, 2t^3); asserts OneNode
/// for t != 0 and Cusp at t = 0 (assertion_failure otherwise).
std::vector<CubicStratum> scan_discriminant(const std::vector<Rat>& t_values);

/// Family p_s(x): coefficient of x^i is a polynomial in the parameter s.
struct FamilySpec {
    std::vector<QUPoly> coeffs; // index = power of x
    QUPoly evaluate_coeffs(const Rat& s) const; // returns p_s as a poly in x
};

struct PathSample {
    Rat s;
    FiberClassification fiber;
    std::vector<std::string> labels; // A-type labels at this sample
};

struct PathTransition {
    std::size_t from_index = 0, to_index = 0;
    std::string before, after; // profile renderings
};

struct PathReport {
    std::vector<PathSample> samples;
    bool equigeneric = true; // delta constant across samples
    std::vector<PathTransition> transitions;
};

/// Classify the fiber at each sample of the family; report delta at each
/// sample, whether delta is constant, and every multiplicity-profile
/// transition between consecutive samples.
PathReport equigeneric_path_check(const FamilySpec& family, const std::vector<Rat>& samples);

std::string profile_to_string(const std::vector<std::pair<int, int>>& profile);

} // namespace severi
