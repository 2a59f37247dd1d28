#pragma once

#include <sstream>
#include <string>

#include "pbwtor/resolution.hpp"
#include "pbwtor/tor.hpp"

namespace pbwtor {

inline std::string render_rational(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline std::string render_monomial(const Monomial& m, const std::vector<std::string>& names) {
    if (m.is_one()) return "1";
    std::string s;
    for (int v = 0; v < m.nvars(); ++v) {
        if (m.exp[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[v];
        if (m.exp[v] > 1) s += "^" + std::to_string(m.exp[v]);
    }
    return s;
}

/// Canonical form: terms descending, " + "/" - " separators, unit
/// coefficients and unit monomials suppressed, e.g. "1/2*z^2 + 2*x*y - z".
inline std::string render_polynomial(const Polynomial& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const Term& t : p.terms) {
        bool neg = t.coeff < 0;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        Rational a = neg ? Rational(-t.coeff) : t.coeff;
        if (t.mono.is_one())
            s += render_rational(a);
        else if (a == 1)
            s += render_monomial(t.mono, names);
        else
            s += render_rational(a) + "*" + render_monomial(t.mono, names);
        first = false;
    }
    return s;
}

/// Dense tuple form "(p_0, p_1, ...)".
inline std::string render_vector(const ModuleVector& v, const std::vector<std::string>& names) {
    std::string s = "(";
    for (int pos = 0; pos < v.rank; ++pos) {
        if (pos) s += ", ";
        s += render_polynomial(v.component(pos), names);
    }
    return s + ")";
}

inline std::string render_matrix(const PolyMatrix& M, const std::vector<std::string>& names) {
    std::string s;
    for (const ModuleVector& row : M.rows) {
        s += render_vector(row, names);
        s += "\n";
    }
    return s;
}

/// One-line reproducibility header naming the algebra and order data.
inline std::string order_header(const AlgebraSpec& A, const ModuleOrder& mo) {
    std::string s = "# algebra ";
    for (int v = 0; v < A.nvars(); ++v) {
        if (v) s += ", ";
        s += A.names[v];
    }
    s += " | weights ";
    for (int v = 0; v < A.nvars(); ++v) {
        if (v) s += ", ";
        s += std::to_string(A.order.weights[v]);
    }
    s += " | precedence ";
    bool first = true;
    for (int v : A.order.precedence) {
        if (!first) s += " > ";
        s += A.names[v];
        first = false;
    }
    s += " | module order ";
    s += mo.scheme == ModuleScheme::TermOverPosition ? "TOP" : "POT";
    return s;
}

inline std::string render_presentation(const QuotientPresentation& Q,
                                       const std::vector<std::string>& names) {
    std::string s = "ambient: " + std::to_string(Q.ambient) + "\n";
    s += "numerator:\n";
    for (const ModuleVector& v : Q.numerator) s += "  " + render_vector(v, names) + "\n";
    s += "denominator:\n";
    for (const ModuleVector& v : Q.denominator) s += "  " + render_vector(v, names) + "\n";
    s += std::string("zero: ") + (Q.zero ? "true" : "false") + "\n";
    if (Q.dimension.kind == TorDimension::Kind::Finite) {
        std::ostringstream os;
        os << Q.dimension.value;
        s += "dimension: " + os.str() + "\n";
    } else if (Q.dimension.kind == TorDimension::Kind::Infinite) {
        s += "dimension: infinite\n";
    }
    return s;
}

}  // namespace pbwtor
