#include "pcoh/structures.hpp"

#include <stdexcept>

namespace pcoh {

std::string StructureParams::name() const {
    switch (family) {
        case Family::DH2: return "dh2";
        case Family::DH7: return "dh7";
        default: return "custom";
    }
}

MultiVector build_structure(const StructureParams& p) {
    switch (p.family) {
        case Family::DH2: return y_structure(YFrameCoeffs{Rational(2) * p.b, p.a, p.b});
        case Family::DH7: return y_structure(YFrameCoeffs{Rational(2) * p.b + p.c, p.a, p.b});
        case Family::Custom:
            if (!p.custom) throw std::invalid_argument("custom structure without a tensor");
            return *p.custom;
    }
    throw std::invalid_argument("build_structure: bad family");
}

std::optional<YFrameCoeffs> admissible_coeffs(const MultiVector& tensor) {
    if (tensor.degree() != 2) return std::nullopt;
    YCochain yc;
    try {
        yc = to_y_frame(tensor, Bigrade{2, 3});
    } catch (const std::invalid_argument&) {
        return std::nullopt;  // not quadratic
    }
    YFrameCoeffs out;
    Rational* slots[3] = {&out.c23, &out.c31, &out.c12};
    for (int i = 0; i < 3; ++i) {
        const Poly& num = yc.numerators[i];
        Rational c = num.coeff(Exponent{2, 0, 1});
        if (!(num == c * dpoly())) return std::nullopt;
        *slots[i] = c;
    }
    return out;
}

YFrameCoeffs yframe_coeffs(const StructureParams& p) {
    switch (p.family) {
        case Family::DH2: return YFrameCoeffs{Rational(2) * p.b, p.a, p.b};
        case Family::DH7: return YFrameCoeffs{Rational(2) * p.b + p.c, p.a, p.b};
        case Family::Custom: {
            if (!p.custom) throw std::invalid_argument("custom structure without a tensor");
            auto c = admissible_coeffs(*p.custom);
            if (!c)
                throw std::domain_error(
                    "custom tensor is not admissible: it is not a constant-coefficient "
                    "combination of Y23, Y31, Y12");
            return *c;
        }
    }
    throw std::invalid_argument("yframe_coeffs: bad family");
}

const char* regime_name(RegimeTag t) {
    switch (t) {
        case RegimeTag::ANonzero: return "A_NONZERO";
        case RegimeTag::A0B0: return "A0_B0";
        case RegimeTag::A02BpC0: return "A0_2BpC0";
        case RegimeTag::A0RatioNeg: return "A0_RATIO_NEG";
        default: return "A0_RATIO_POS";
    }
}

Regime classify_regime(const StructureParams& p) {
    if (p.family == Family::Custom)
        throw std::domain_error("classify_regime: preset families only");
    const Rational a = p.a, b = p.b;
    const Rational c = p.family == Family::DH2 ? Rational(0) : p.c;
    if (a.is_zero() && b.is_zero() && c.is_zero())
        throw std::domain_error("classify_regime: zero tensor");
    if (!a.is_zero()) return Regime{RegimeTag::ANonzero};
    if (b.is_zero()) return Regime{RegimeTag::A0B0};
    const Rational two_b_plus_c = Rational(2) * b + c;
    if (two_b_plus_c.is_zero()) return Regime{RegimeTag::A02BpC0};
    if (c.is_zero()) return Regime{RegimeTag::A0RatioPos, mpz_class(1), mpz_class(0)};
    const Rational ratio = b / c;
    Regime reg;
    reg.beta = ratio.num();
    reg.gamma = ratio.den();
    if ((b * two_b_plus_c).sign() < 0) {
        reg.tag = RegimeTag::A0RatioNeg;  // positive denominator form
    } else {
        reg.tag = RegimeTag::A0RatioPos;  // positive numerator form
        if (reg.beta < 0) {
            reg.beta = -reg.beta;
            reg.gamma = -reg.gamma;
        }
    }
    return reg;
}

namespace {

Poly poly_pow(const Poly& p, int n) {
    Poly r = Poly::constant(Rational(1));
    for (int i = 0; i < n; ++i) r = r * p;
    return r;
}

YCochain y_gen(int d, const Bigrade& g, int comp, Poly numerator) {
    YCochain c;
    c.degree = d;
    c.grade = g;
    c.numerators.assign(d == 0 || d == 3 ? 1 : 3, Poly());
    c.numerators[comp] = std::move(numerator);
    if (!c.valid()) throw std::logic_error("oracle generator has the wrong bigrade");
    return c;
}

void add_class(RClassMap& m, int d, const Bigrade& g, YCochain gen) {
    m[{d, g}].push_back(std::move(gen));
}

// Wedge block of a Casimir: the Casimir times 1, Y1..Y3, Y23..Y12, Y123.
// `num` is the numerator of the Casimir as a 0-cochain (Casimir times D).
void add_casimir_block(RClassMap& m, const Poly& num, const Bigrade& g, int rmax) {
    if (g.r > rmax) return;
    add_class(m, 0, g, y_gen(0, g, 0, num));
    for (int i = 0; i < 3; ++i) add_class(m, 1, g, y_gen(1, g, i, num));
    for (int i = 0; i < 3; ++i) add_class(m, 2, g, y_gen(2, g, i, num));
    add_class(m, 3, g, y_gen(3, g, 0, num));
}

// x3^m d12 classes at (0, m+1) and x3^m d123 classes at (0, m).
void add_singular_d12(RClassMap& m, int rmax) {
    for (int r = 1; r <= rmax; ++r)
        add_class(m, 2, Bigrade{0, r}, y_gen(2, Bigrade{0, r}, 2, Poly::monomial({0, 0, r})));
}

void add_singular_d123(RClassMap& m, int rmax) {
    for (int r = 0; r <= rmax; ++r)
        add_class(m, 3, Bigrade{0, r}, y_gen(3, Bigrade{0, r}, 0, Poly::monomial({0, 0, r})));
}

// The extra classes of the ratio regimes: D'^{g/2 - 1} d3 wedged with
// nothing, Y1 or Y2, and Y12, all at bigrade (gamma, gamma).
void add_cgamma_block(RClassMap& m, int gamma, int rmax) {
    if (gamma > rmax) return;
    const Bigrade g{gamma, gamma};
    const Poly num = poly_pow(dprime(), gamma / 2);
    add_class(m, 1, g, y_gen(1, g, 2, num));                       // on Y3
    add_class(m, 2, g, y_gen(2, g, 1, num));                       // Y3 ^ Y1 = Y31
    add_class(m, 2, g, y_gen(2, g, 0, num));                       // Y3 ^ Y2 = -Y23
    add_class(m, 3, g, y_gen(3, g, 0, num));                       // Y3 ^ Y12 = Y123
}

void dh2_classes(const StructureParams& p, int rmax, RClassMap& m) {
    if (p.b.is_zero())
        throw std::domain_error(
            "closed-form tables need b != 0 (b = 0 is the diagonal family, treated elsewhere)");
    if (!p.a.is_zero()) {
        add_casimir_block(m, dpoly(), Bigrade{2, 3}, rmax);
        add_class(m, 3, Bigrade{0, 0}, y_gen(3, Bigrade{0, 0}, 0, Poly::constant(Rational(1))));
        return;
    }
    // Casimirs are the powers of D.
    for (int mm = 0; 3 * mm + 3 <= rmax; ++mm)
        add_casimir_block(m, poly_pow(dpoly(), mm + 1), Bigrade{2 * mm + 2, 3 * mm + 3}, rmax);
    add_singular_d12(m, rmax);
    add_singular_d123(m, rmax);
    // Singular classes on the diagonal: degree 2 at (m, m) for m >= 1 and
    // degree 3 at (m, m) for m >= 1.
    for (int mm = 1; mm <= rmax; ++mm) {
        const Bigrade g{mm, mm};
        MultiVector g1 = MultiVector::bivector(Poly::monomial({mm - 1, 0, 0}), Poly(), Poly());
        MultiVector g2 = MultiVector::bivector(
            mm >= 2 ? Poly::monomial({mm - 2, 1, 0}, Rational(mm - 1)) : Poly(),
            Poly::monomial({mm - 1, 0, 0}), Poly());
        add_class(m, 2, g, to_y_frame(g1, g));
        add_class(m, 2, g, to_y_frame(g2, g));
        add_class(m, 3, g, y_gen(3, g, 0, Poly::monomial({mm, 0, 0})));
        add_class(m, 3, g, y_gen(3, g, 0, Poly::monomial({mm - 1, 1, 0})));
    }
}

void dh7_classes(const StructureParams& p, int rmax, RClassMap& m) {
    const Regime reg = classify_regime(p);
    switch (reg.tag) {
        case RegimeTag::ANonzero:
            add_casimir_block(m, dpoly(), Bigrade{2, 3}, rmax);
            add_class(m, 3, Bigrade{0, 0},
                      y_gen(3, Bigrade{0, 0}, 0, Poly::constant(Rational(1))));
            return;
        case RegimeTag::A0B0:
            // Casimirs are the powers of D'.
            for (int mm = 0; 2 * mm + 3 <= rmax; ++mm)
                add_casimir_block(m, poly_pow(dprime(), mm) * dpoly(),
                                  Bigrade{2 * mm + 2, 2 * mm + 3}, rmax);
            break;
        case RegimeTag::A02BpC0:
            // Casimirs are the powers of x3; extra classes at (2, 2).
            for (int mm = 0; mm + 3 <= rmax; ++mm)
                add_casimir_block(m, Poly::monomial({0, 0, mm}) * dpoly(), Bigrade{2, mm + 3},
                                  rmax);
            add_cgamma_block(m, 2, rmax);
            break;
        case RegimeTag::A0RatioNeg:
            add_casimir_block(m, dpoly(), Bigrade{2, 3}, rmax);
            if (reg.beta == -1 && reg.gamma % 2 == 0 && reg.gamma >= 4)
                add_cgamma_block(m, static_cast<int>(reg.gamma.get_si()), rmax);
            break;
        case RegimeTag::A0RatioPos: {
            // Casimirs D'^{n beta + n gamma / 2} x3^{n beta} over n with
            // n gamma even; terms with negative exponents are skipped.
            const mpz_class two_beta_plus_gamma = 2 * reg.beta + reg.gamma;
            for (mpz_class n = 0;; ++n) {
                if ((n * reg.gamma) % 2 != 0) continue;
                mpz_class e2 = n * two_beta_plus_gamma;  // = 2 * dprime exponent
                mpz_class f = n * reg.beta;
                if (e2 < 0 || f < 0) {
                    if (n > 2 * rmax) break;  // series left the degree window
                    continue;
                }
                mpz_class r_grade = e2 + f + 3;
                if (r_grade > rmax) break;
                const int e = static_cast<int>(mpz_class(e2 / 2).get_si());
                const int fi = static_cast<int>(f.get_si());
                add_casimir_block(m, poly_pow(dprime(), e) * Poly::monomial({0, 0, fi}) * dpoly(),
                                  Bigrade{2 * e + 2, 2 * e + fi + 3}, rmax);
            }
            break;
        }
    }
    add_singular_d12(m, rmax);
    add_singular_d123(m, rmax);
}

}  // namespace

RClassMap expected_r_classes(const StructureParams& p, int rmax) {
    RClassMap m;
    switch (p.family) {
        case Family::DH2:
            dh2_classes(p, rmax, m);
            break;
        case Family::DH7:
            if (p.a.is_zero() && p.b.is_zero() && p.c.is_zero())
                throw std::domain_error("expected_r_classes: zero tensor");
            if (p.c.is_zero()) {
                // Same tensor as the class-2 representative.
                StructureParams q = p;
                q.family = Family::DH2;
                dh2_classes(q, rmax, m);
            } else {
                dh7_classes(p, rmax, m);
            }
            break;
        case Family::Custom:
            throw std::domain_error("expected_r_classes: no closed-form table for custom tensors");
    }
    return m;
}

int expected_dim(const StructureParams& p, int d, const Bigrade& g) {
    auto m = expected_r_classes(p, g.r);
    auto it = m.find({d, g});
    return it == m.end() ? 0 : static_cast<int>(it->second.size());
}

int expected_dim_p(const StructureParams& p, int d, const Bigrade& g) {
    const bool dh2_like = p.family == Family::DH2 || (p.family == Family::DH7 && p.c.is_zero());
    if (!dh2_like)
        throw std::domain_error("expected_dim_p: closed-form table exists for the dh2 family only");
    if (p.b.is_zero()) throw std::domain_error("closed-form tables need b != 0");
    const bool a0 = p.a.is_zero();
    auto cas = [&](const Bigrade& q) {
        if (!a0) return q == Bigrade{2, 3};
        return q.k >= 2 && q.k % 2 == 0 && 3 * q.k == 2 * q.r;
    };
    switch (d) {
        case 0: return cas(g) ? 1 : 0;
        case 1: return cas(g) ? 3 : 0;
        case 2:
            if (cas(g)) return 3;
            if (g == Bigrade{1, 1}) return 2;
            if (a0 && g.k == 0 && g.r >= 1) return 1;
            return 0;
        case 3:
            if (cas(g)) return 1;
            if (!a0) return g == Bigrade{0, 0} ? 1 : 0;
            return g.k == 0 ? 1 : 0;
        default: return 0;
    }
}

int expected_dim_s(const StructureParams& p, int d, const Bigrade& g) {
    const bool dh2_like = p.family == Family::DH2 || (p.family == Family::DH7 && p.c.is_zero());
    if (!dh2_like)
        throw std::domain_error("expected_dim_s: closed-form table exists for the dh2 family only");
    if (p.b.is_zero()) throw std::domain_error("closed-form tables need b != 0");
    const bool a0 = p.a.is_zero();
    if (d == 1 && a0 && g.k == g.r && g.k >= 2) return 2;
    if (d == 2) {
        if (!a0) return g == Bigrade{1, 1} ? 2 : 0;
        if (g.k == g.r && g.k >= 1) return 2;
    }
    return 0;
}

}  // namespace pcoh
