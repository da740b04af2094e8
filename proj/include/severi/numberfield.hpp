#pragma once

#include <memory>
#include <string>
#include <utility>

#include "severi/bivar.hpp"
#include "severi/errors.hpp"
#include "severi/upoly.hpp"

namespace severi {

/// A simple algebraic extension Q(t)/(minpoly), used by the blow-up
/// resolution when a cluster of conjugate singular points has to be
/// recentered. minpoly is monic and irreducible over Q.
struct ExtField {
    QUPoly minpoly;
    int degree() const { return minpoly.degree(); }
};

/// Element of an ExtField, represented by a residue polynomial in the
/// generator. A null field pointer means a plain rational constant, so
/// the type models "rational or extension element" uniformly; arithmetic
/// between elements of two distinct proper fields is a logic error.
class ExtElem {
public:
    ExtElem() : rep_() {}
    explicit ExtElem(int c) : rep_(Rat(c)) {}
    explicit ExtElem(const Rat& c) : rep_(c) {}
    ExtElem(std::shared_ptr<const ExtField> f, QUPoly rep)
        : field_(std::move(f)), rep_(std::move(rep)) {
        reduce();
    }

    static ExtElem generator(std::shared_ptr<const ExtField> f) {
        return ExtElem(std::move(f), QUPoly::variable());
    }

    const std::shared_ptr<const ExtField>& field() const { return field_; }
    const QUPoly& rep() const { return rep_; }

    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.degree() <= 0; }
    Rat rational_value() const {
        if (!is_rational()) fail(ErrorCode::assertion_failure, "extension element is not rational");
        return rep_.coeff(0);
    }

    bool operator==(const ExtElem& o) const { return rep_ == o.rep_; }
    bool operator!=(const ExtElem& o) const { return !(*this == o); }

    ExtElem operator+(const ExtElem& o) const {
        auto f = join(o);
        return ExtElem(f, rep_ + o.rep_);
    }
    ExtElem operator-(const ExtElem& o) const {
        auto f = join(o);
        return ExtElem(f, rep_ - o.rep_);
    }
    ExtElem operator*(const ExtElem& o) const {
        auto f = join(o);
        return ExtElem(f, rep_ * o.rep_);
    }
    ExtElem operator/(const ExtElem& o) const { return *this * o.inverse(); }

    ExtElem inverse() const {
        if (is_zero()) fail(ErrorCode::invalid_input, "division by zero in extension field");
        if (is_rational()) {
            ExtElem r(Rat(1) / rep_.coeff(0));
            r.field_ = field_;
            return r;
        }
        // rep invertible mod minpoly since minpoly is irreducible
        QUPoly g, s, t;
        upoly_ext_gcd(rep_, field_->minpoly, g, s, t);
        if (g.degree() != 0)
            fail(ErrorCode::assertion_failure, "minimal polynomial not irreducible");
        return ExtElem(field_, s);
    }

    std::string to_string() const;

private:
    std::shared_ptr<const ExtField> join(const ExtElem& o) const {
        if (!field_) return o.field_;
        if (o.field_ && o.field_ != field_ && !(o.field_->minpoly == field_->minpoly))
            fail(ErrorCode::assertion_failure, "mixed extension fields");
        return field_;
    }

    void reduce() {
        if (field_ && rep_.degree() >= field_->minpoly.degree())
            rep_ = rep_ % field_->minpoly;
    }

    std::shared_ptr<const ExtField> field_;
    QUPoly rep_;
};

inline std::string ExtElem::to_string() const {
    return upoly_to_string(rep_, "t");
}

/// Lift a rational polynomial into an extension field's coefficient type.
inline BPoly<ExtElem> lift_to_ext(const QPoly& p, const std::shared_ptr<const ExtField>& f) {
    BPoly<ExtElem> r;
    for (auto& [k, c] : p.terms()) {
        ExtElem e(c);
        r.add_term(k.first, k.second, f ? ExtElem(f, QUPoly(c)) : e);
    }
    return r;
}

inline UPoly<ExtElem> lift_to_ext(const QUPoly& p, const std::shared_ptr<const ExtField>& f) {
    std::vector<ExtElem> c;
    c.reserve(static_cast<std::size_t>(p.degree() + 1));
    for (int i = 0; i <= p.degree(); ++i)
        c.push_back(f ? ExtElem(f, QUPoly(p.coeff(i))) : ExtElem(p.coeff(i)));
    return UPoly<ExtElem>(std::move(c));
}

} // namespace severi
