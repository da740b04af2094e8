#include "severi/bivar.hpp"

#include <cctype>
#include <sstream>

namespace severi {

namespace {

struct TermParser {
    const std::string& s;
    std::size_t pos = 0;

    explicit TermParser(const std::string& text) : s(text) {}

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    bool match(const std::string& word) {
        if (s.compare(pos, word.size(), word) == 0) {
            pos += word.size();
            return true;
        }
        return false;
    }

    std::string read_number() {
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start) fail(ErrorCode::parse_error, "expected digits at position " + std::to_string(pos));
        return s.substr(start, pos - start);
    }

    Rat read_rational() {
        std::string num = read_number();
        if (!done() && peek() == '/') {
            ++pos;
            std::string den = read_number();
            return rat_from_string(num + "/" + den);
        }
        return rat_from_string(num);
    }

    int read_exponent() {
        if (!done() && peek() == '^') {
            ++pos;
            std::string digits = read_number();
            if (digits.size() > 6) fail(ErrorCode::parse_error, "exponent too large");
            return std::stoi(digits);
        }
        return 1;
    }
};

std::string strip_spaces(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

QPoly parse_impl(const std::string& text, const std::vector<std::string>& vars) {
    std::string body = strip_spaces(text);
    if (body.empty()) fail(ErrorCode::parse_error, "empty polynomial");
    TermParser p(body);
    QPoly result;
    bool first = true;
    while (!p.done()) {
        int sign = 1;
        if (p.peek() == '+') {
            ++p.pos;
        } else if (p.peek() == '-') {
            sign = -1;
            ++p.pos;
        } else if (!first) {
            fail(ErrorCode::parse_error, "expected + or - at position " + std::to_string(p.pos));
        }
        first = false;
        if (p.done()) fail(ErrorCode::parse_error, "dangling sign");

        Rat coef(1);
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(p.peek()))) {
            coef = p.read_rational();
            have_coef = true;
            if (!p.done() && p.peek() == '*') ++p.pos;
        }
        std::vector<int> exps(vars.size(), 0);
        std::vector<bool> seen(vars.size(), false);
        bool factor_expected = false;
        while (!p.done()) {
            bool matched = false;
            for (std::size_t v = 0; v < vars.size(); ++v) {
                if (vars[v].empty()) continue;
                if (p.match(vars[v])) {
                    if (seen[v]) fail(ErrorCode::parse_error, "variable repeated in term: " + vars[v]);
                    seen[v] = true;
                    exps[v] = p.read_exponent();
                    matched = true;
                    break;
                }
            }
            if (!matched) {
                if (factor_expected)
                    fail(ErrorCode::parse_error, "expected variable at position " + std::to_string(p.pos));
                break;
            }
            factor_expected = false;
            if (!p.done() && p.peek() == '*') {
                ++p.pos;
                factor_expected = true;
            }
        }
        if (factor_expected) fail(ErrorCode::parse_error, "dangling *");
        bool any_var = false;
        for (bool b : seen) any_var = any_var || b;
        if (!have_coef && !any_var)
            fail(ErrorCode::parse_error, "empty term at position " + std::to_string(p.pos));
        int ex = exps.size() > 0 ? exps[0] : 0;
        int ey = exps.size() > 1 ? exps[1] : 0;
        result.add_term(ex, ey, sign == 1 ? coef : Rat(-coef));
    }
    return result;
}

} // namespace

QPoly parse_poly(const std::string& text, const std::string& var_x, const std::string& var_y) {
    return parse_impl(text, {var_x, var_y});
}

QUPoly parse_upoly(const std::string& text, const std::string& var) {
    QPoly p = parse_impl(text, {var});
    std::vector<Rat> c;
    for (auto& [k, cf] : p.terms()) {
        if (static_cast<int>(c.size()) <= k.first) c.resize(static_cast<std::size_t>(k.first) + 1, Rat(0));
        c[static_cast<std::size_t>(k.first)] = cf;
    }
    return QUPoly(std::move(c));
}

namespace {

void append_factor(std::ostringstream& os, bool& star, const std::string& var, int e) {
    if (e == 0) return;
    if (star) os << "*";
    os << var;
    if (e > 1) os << "^" << e;
    star = true;
}

} // namespace

std::string poly_to_string(const QPoly& p, const std::string& var_x, const std::string& var_y) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : p.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool star = false;
        if (a != 1 || (k.first == 0 && k.second == 0)) {
            os << rat_to_string(a);
            star = true;
        }
        append_factor(os, star, var_x, k.first);
        append_factor(os, star, var_y, k.second);
    }
    return os.str();
}

std::string upoly_to_string(const QUPoly& p, const std::string& var) {
    QPoly b;
    for (int i = 0; i <= p.degree(); ++i)
        if (!(p.coeff(i) == Rat(0))) b.add_term(i, 0, p.coeff(i));
    if (b.is_zero()) return "0";
    return poly_to_string(b, var, "");
}

// --- gcd in Q[x][y] ----------------------------------------------------

namespace {

using XPoly = QUPoly;          // polynomials in x
using YXPoly = UPoly<XPoly>;   // polynomials in y with XPoly coefficients

YXPoly to_yx(const QPoly& p) {
    std::vector<XPoly> c(static_cast<std::size_t>(std::max(0, p.degree_y()) + 1), XPoly());
    for (auto& [k, cf] : p.terms()) {
        std::vector<Rat> mono(static_cast<std::size_t>(k.first) + 1, Rat(0));
        mono.back() = cf;
        c[static_cast<std::size_t>(k.second)] = c[static_cast<std::size_t>(k.second)] + XPoly(std::move(mono));
    }
    return YXPoly(std::move(c));
}

QPoly from_yx(const YXPoly& p) {
    QPoly out;
    for (int j = 0; j <= p.degree(); ++j) {
        XPoly cj = p.coeff(j);
        for (int i = 0; i <= cj.degree(); ++i)
            if (!(cj.coeff(i) == Rat(0))) out.add_term(i, j, cj.coeff(i));
    }
    return out;
}

XPoly content_x(const YXPoly& p) {
    XPoly g;
    for (int j = 0; j <= p.degree(); ++j) {
        if (p.coeff(j).is_zero()) continue;
        g = g.is_zero() ? p.coeff(j).monic() : upoly_gcd(g, p.coeff(j));
        if (g.degree() == 0) break;
    }
    return g;
}

YXPoly primitive_part(const YXPoly& p, const XPoly& content) {
    std::vector<XPoly> c(static_cast<std::size_t>(p.degree() + 1), XPoly());
    for (int j = 0; j <= p.degree(); ++j)
        if (!p.coeff(j).is_zero()) c[static_cast<std::size_t>(j)] = p.coeff(j).exact_div(content);
    return YXPoly(std::move(c));
}

// Pseudo-remainder of a by b in (Q[x])[y].
YXPoly pseudo_rem(YXPoly a, const YXPoly& b) {
    const XPoly& lb = b.leading();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        int k = a.degree() - b.degree();
        XPoly la = a.leading();
        a = a * UPoly<XPoly>(lb) - (b * UPoly<XPoly>(la)).shift_up(k);
    }
    return a;
}

} // namespace

QPoly bivariate_gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    YXPoly A = to_yx(a), B = to_yx(b);
    XPoly ca = content_x(A), cb = content_x(B);
    XPoly cg = upoly_gcd(ca, cb);
    A = primitive_part(A, ca);
    B = primitive_part(B, cb);
    if (A.degree() < B.degree()) std::swap(A, B);
    while (B.degree() > 0) {
        YXPoly r = pseudo_rem(A, B);
        if (!r.is_zero()) r = primitive_part(r, content_x(r));
        A = std::move(B);
        B = std::move(r);
    }
    YXPoly result;
    if (B.is_zero()) {
        result = A * UPoly<XPoly>(cg);
    } else {
        // gcd is a constant in y: only the content survives
        result = YXPoly(cg);
    }
    return from_yx(result);
}

} // namespace severi
