#include "severi/family.hpp"

#include <algorithm>
#include <sstream>

#include "severi/bivar.hpp"
#include "severi/factor.hpp"

namespace severi {

FiberClassification classify_fiber(const MonicUnivariate& p) {
    FiberClassification out;
    std::map<int, int> profile; // multiplicity -> weighted root count
    for (auto& [sf, mult] : yun_squarefree(p.poly())) {
        if (mult < 2) continue;
        QUPoly cof;
        auto roots = rational_roots(sf, &cof);
        for (auto& [root, m] : roots) {
            (void)m;
            FiberSingularPoint pt;
            pt.location = root;
            pt.factor = upoly_to_string(QUPoly(std::vector<Rat>{Rat(-root), Rat(1)}), "x");
            pt.factor_degree = 1;
            pt.root_multiplicity = mult;
            out.singular_points.push_back(std::move(pt));
            profile[mult] += 1;
        }
        if (cof.degree() > 0) {
            for (auto& irr : factor_squarefree_rootfree(cof)) {
                FiberSingularPoint pt;
                pt.factor = upoly_to_string(irr, "x");
                pt.factor_degree = irr.degree();
                pt.root_multiplicity = mult;
                out.singular_points.push_back(std::move(pt));
                profile[mult] += irr.degree();
            }
        }
    }
    for (auto& [m, count] : profile) out.multiplicity_profile.emplace_back(m, count);
    for (auto& pt : out.singular_points) out.total_delta += pt.factor_degree * pt.delta_each();
    out.smooth = out.multiplicity_profile.empty();
    return out;
}

Rat cubic_discriminant(const Rat& a, const Rat& b) {
    return -(4 * a * a * a + 27 * b * b);
}

CubicStratum stratify_cubic(const Rat& a, const Rat& b) {
    CubicStratum s;
    s.discriminant = cubic_discriminant(a, b);
    if (a == 0 && b == 0)
        s.label = CubicStratum::Label::Cusp;
    else if (s.discriminant == 0)
        s.label = CubicStratum::Label::OneNode;
    else
        s.label = CubicStratum::Label::Smooth;
    return s;
}

std::vector<CubicStratum> scan_discriminant(const std::vector<Rat>& t_values) {
    std::vector<CubicStratum> out;
    out.reserve(t_values.size());
    for (const Rat& t : t_values) {
        Rat a = -3 * t * t;
        Rat b = 2 * t * t * t;
        CubicStratum s = stratify_cubic(a, b);
        if (t == 0) {
            if (s.label != CubicStratum::Label::Cusp)
                fail(ErrorCode::assertion_failure, "discriminant scan: expected Cusp at t=0");
        } else if (s.label != CubicStratum::Label::OneNode) {
            fail(ErrorCode::assertion_failure,
                 "discriminant scan: expected OneNode at t=" + rat_to_string(t));
        }
        out.push_back(std::move(s));
    }
    return out;
}

QUPoly FamilySpec::evaluate_coeffs(const Rat& s) const {
    std::vector<Rat> c(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i].eval(s);
    return QUPoly(std::move(c));
}

std::string profile_to_string(const std::vector<std::pair<int, int>>& profile) {
    if (profile.empty()) return "smooth";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, count] : profile) {
        if (!first) os << ", ";
        first = false;
        os << count << "xA" << (m - 1);
    }
    return os.str();
}

PathReport equigeneric_path_check(const FamilySpec& family, const std::vector<Rat>& samples) {
    if (family.coeffs.empty())
        fail(ErrorCode::invalid_input, "family has no coefficients");
    PathReport report;
    for (const Rat& s : samples) {
        QUPoly p = family.evaluate_coeffs(s);
        if (p.degree() < 1)
            fail(ErrorCode::invalid_input,
                 "family degenerates to a constant at s=" + rat_to_string(s));
        PathSample sample;
        sample.s = s;
        sample.fiber = classify_fiber(MonicUnivariate::normalized(p));
        for (auto& pt : sample.fiber.singular_points) sample.labels.push_back(pt.ade());
        report.samples.push_back(std::move(sample));
    }
    for (std::size_t i = 0; i + 1 < report.samples.size(); ++i) {
        if (report.samples[i].fiber.total_delta != report.samples[i + 1].fiber.total_delta)
            report.equigeneric = false;
        if (report.samples[i].fiber.multiplicity_profile !=
            report.samples[i + 1].fiber.multiplicity_profile) {
            PathTransition tr;
            tr.from_index = i;
            tr.to_index = i + 1;
            tr.before = profile_to_string(report.samples[i].fiber.multiplicity_profile);
            tr.after = profile_to_string(report.samples[i + 1].fiber.multiplicity_profile);
            report.transitions.push_back(std::move(tr));
        }
    }
    return report;
}

} // namespace severi
