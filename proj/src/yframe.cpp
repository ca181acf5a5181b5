#include "pcoh/yframe.hpp"

#include <stdexcept>

namespace pcoh {

namespace {

int comp_count_for(int degree) {
    switch (degree) {
        case 0: case 3: return 1;
        case 1: case 2: return 3;
        default: throw std::invalid_argument("cochain degree must be 0..3");
    }
}

const char* const kYNames[4][3] = {
    {"", "", ""},
    {"Y1", "Y2", "Y3"},
    {"Y23", "Y31", "Y12"},
    {"Y123", "", ""},
};

Poly y_derive(int which, const Poly& p) {
    switch (which) {
        case 1: return Poly::var(1) * p.partial(1) + Poly::var(2) * p.partial(2);
        case 2: return Poly::var(1) * p.partial(2) - Poly::var(2) * p.partial(1);
        case 3: return Poly::var(3) * p.partial(3);
        default: throw std::invalid_argument("frame field index must be 1..3");
    }
}

// Coefficients (u, v, w) of X_which = u Y1 + v Y2 + w Y3 and the factor t
// with X_which(D) = t D (t = 2u + w, from Y1(D) = 2D, Y2(D) = 0, Y3(D) = D).
struct XDerivation {
    Rational u, v, w, t;
};

XDerivation x_derivation(int which, const YFrameCoeffs& c) {
    XDerivation d;
    switch (which) {
        case 1: d = {Rational(0), c.c12, -c.c31, Rational(0)}; break;
        case 2: d = {-c.c12, Rational(0), c.c23, Rational(0)}; break;
        case 3: d = {c.c31, -c.c23, Rational(0), Rational(0)}; break;
        default: throw std::invalid_argument("x operator index must be 1..3");
    }
    d.t = Rational(2) * d.u + d.w;
    return d;
}

}  // namespace

bool YCochain::valid() const {
    if (degree < 0 || degree > 3) return false;
    if (static_cast<int>(numerators.size()) != comp_count_for(degree)) return false;
    if (!grade.valid()) return false;
    for (const auto& p : numerators)
        if (!p.is_homogeneous_of(grade)) return false;
    return true;
}

bool YCochain::is_zero() const {
    for (const auto& p : numerators)
        if (!p.is_zero()) return false;
    return true;
}

std::string YCochain::str() const {
    std::string out;
    for (std::size_t i = 0; i < numerators.size(); ++i) {
        if (numerators[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + numerators[i].str() + ")/D";
        if (degree > 0) out += "*" + std::string(kYNames[degree][i]);
    }
    return out.empty() ? "0" : out;
}

const std::array<MultiVector, 3>& y_fields() {
    static const std::array<MultiVector, 3> ys = {
        MultiVector::vector_field(Poly::var(1), Poly::var(2), Poly()),
        MultiVector::vector_field(Rational(-1) * Poly::var(2), Poly::var(1), Poly()),
        MultiVector::vector_field(Poly(), Poly(), Poly::var(3)),
    };
    return ys;
}

MultiVector y_structure(const YFrameCoeffs& c) {
    const auto& y = y_fields();
    MultiVector t = Rational(c.c23) * wedge(y[1], y[2]);
    t += c.c31 * wedge(y[2], y[0]);
    t += c.c12 * wedge(y[0], y[1]);
    return t;
}

std::vector<Exponent> q_monomials(const Bigrade& g) {
    if (!g.valid()) throw std::invalid_argument("q_monomials: invalid bigrade");
    std::vector<Exponent> b;
    b.reserve(g.k + 1);
    for (int l = 0; l <= g.k; ++l) b.push_back(Exponent{l, g.k - l, g.r - g.k});
    return b;
}

std::vector<Rational> q_coords(const Poly& numerator, const Bigrade& g) {
    std::vector<Rational> v(g.k + 1);
    for (const auto& [e, c] : numerator.terms()) {
        if (e.i2 != g.k - e.i1 || e.i3 != g.r - g.k || e.i1 > g.k)
            throw std::invalid_argument("q_coords: polynomial outside P_{kr}");
        v[e.i1] = c;
    }
    return v;
}

Poly q_poly(const std::vector<Rational>& coords, const Bigrade& g) {
    if (static_cast<int>(coords.size()) != g.k + 1)
        throw std::invalid_argument("q_poly: coordinate length mismatch");
    Poly p;
    for (int l = 0; l <= g.k; ++l) p.add_term(Exponent{l, g.k - l, g.r - g.k}, coords[l]);
    return p;
}

YCochain to_y_frame(const MultiVector& c, const Bigrade& grade) {
    YCochain out;
    out.degree = c.degree();
    out.grade = grade;
    const Poly x1 = Poly::var(1), x2 = Poly::var(2), x3 = Poly::var(3);
    switch (c.degree()) {
        case 0:
            out.numerators = {c.comp(0) * dpoly()};
            break;
        case 1: {
            const Poly &s1 = c.comp(0), &s2 = c.comp(1), &s3 = c.comp(2);
            out.numerators = {x3 * (s1 * x1 + s2 * x2), x3 * (s2 * x1 - s1 * x2), dprime() * s3};
            break;
        }
        case 2: {
            const Poly &s1 = c.comp(0), &s2 = c.comp(1), &s3 = c.comp(2);
            out.numerators = {s1 * x1 + s2 * x2, s2 * x1 - s1 * x2, x3 * s3};
            break;
        }
        case 3:
            out.numerators = {c.comp(0)};
            break;
    }
    if (!out.valid())
        throw std::invalid_argument("to_y_frame: component not homogeneous of the requested bigrade");
    return out;
}

std::optional<MultiVector> from_y_frame(const YCochain& c) {
    if (!c.valid()) throw std::invalid_argument("from_y_frame: malformed cochain");
    const Poly x1 = Poly::var(1), x2 = Poly::var(2);
    switch (c.degree) {
        case 0: {
            auto f = div_by_d(c.numerators[0]);
            if (!f) return std::nullopt;
            return MultiVector::function(*f);
        }
        case 1: {
            const Poly &p1 = c.numerators[0], &p2 = c.numerators[1], &p3 = c.numerators[2];
            auto s1 = div_by_d(p1 * x1 - p2 * x2);
            auto s2 = div_by_d(p1 * x2 + p2 * x1);
            auto s3 = div_by_dprime(p3);
            if (!s1 || !s2 || !s3) return std::nullopt;
            return MultiVector::vector_field(*s1, *s2, *s3);
        }
        case 2: {
            const Poly &p1 = c.numerators[0], &p2 = c.numerators[1], &p3 = c.numerators[2];
            auto s1 = div_by_dprime(p1 * x1 - p2 * x2);
            auto s2 = div_by_dprime(p1 * x2 + p2 * x1);
            auto s3 = div_by_x3(p3);
            if (!s1 || !s2 || !s3) return std::nullopt;
            return MultiVector::bivector(*s1, *s2, *s3);
        }
        case 3:
            return MultiVector::trivector(c.numerators[0]);
    }
    return std::nullopt;
}

QElem x_apply(int which, const YFrameCoeffs& coeffs, const QElem& q) {
    if (!q.valid()) throw std::invalid_argument("x_apply: malformed Q element");
    const XDerivation d = x_derivation(which, coeffs);
    Poly r;
    if (!d.u.is_zero()) r += d.u * y_derive(1, q.numerator);
    if (!d.v.is_zero()) r += d.v * y_derive(2, q.numerator);
    if (!d.w.is_zero()) r += d.w * y_derive(3, q.numerator);
    if (!d.t.is_zero()) r -= d.t * q.numerator;
    return QElem{q.grade, std::move(r)};
}

XOperatorMatrix x_matrix(int which, const Bigrade& g, const YFrameCoeffs& coeffs) {
    if (!g.valid()) throw std::invalid_argument("x_matrix: invalid bigrade");
    const int k = g.k, r = g.r;
    RatMatrix m(k + 1, k + 1);
    // Closed band form of the derivation action on x^{l, k-l, r-k}:
    //   Y1 multiplies by k, Y3 by r-k, and Y2 shifts l by +-1.
    switch (which) {
        case 1: {
            const Rational a = -coeffs.c31 * Rational(r - k - 1);
            for (int l = 0; l <= k; ++l) {
                m.at(l, l) = a;
                if (l + 1 <= k) m.at(l + 1, l) = coeffs.c12 * Rational(k - l);
                if (l - 1 >= 0) m.at(l - 1, l) = -coeffs.c12 * Rational(l);
            }
            break;
        }
        case 2: {
            const Rational a = coeffs.c23 * Rational(r - k - 1) - coeffs.c12 * Rational(k - 2);
            for (int l = 0; l <= k; ++l) m.at(l, l) = a;
            break;
        }
        case 3: {
            const Rational a = coeffs.c31 * Rational(k - 2);
            for (int l = 0; l <= k; ++l) {
                m.at(l, l) = a;
                if (l + 1 <= k) m.at(l + 1, l) = -coeffs.c23 * Rational(k - l);
                if (l - 1 >= 0) m.at(l - 1, l) = coeffs.c23 * Rational(l);
            }
            break;
        }
        default:
            throw std::invalid_argument("x_matrix: operator index must be 1..3");
    }
    return XOperatorMatrix{which, g, coeffs, std::move(m)};
}

SubspaceBasis x_kernel(int which, const Bigrade& g, const YFrameCoeffs& coeffs) {
    return kernel_basis(x_matrix(which, g, coeffs).matrix);
}

}  // namespace pcoh
