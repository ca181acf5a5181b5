#pragma once

#include <random>

#include "pcoh/multivector.hpp"
#include "pcoh/poly.hpp"
#include "pcoh/yframe.hpp"

namespace pcoh::testutil {

inline std::mt19937_64 make_rng(unsigned seed) { return std::mt19937_64(seed); }

inline Rational random_rational(std::mt19937_64& rng, int lo = -5, int hi = 5) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 4);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, int lo = -5, int hi = 5) {
    Rational r;
    do { r = random_rational(rng, lo, hi); } while (r.is_zero());
    return r;
}

inline Poly random_poly(std::mt19937_64& rng, int max_deg = 3, int nterms = 4) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    Poly p;
    for (int t = 0; t < nterms; ++t) {
        Exponent e{deg(rng), deg(rng), deg(rng)};
        p.add_term(e, random_rational(rng));
    }
    return p;
}

inline Poly random_homogeneous_poly(std::mt19937_64& rng, const Bigrade& g) {
    Poly p;
    std::uniform_int_distribution<int> l(0, g.k);
    for (int t = 0; t <= g.k; ++t) {
        int e1 = l(rng);
        p.add_term(Exponent{e1, g.k - e1, g.r - g.k}, random_rational(rng));
    }
    return p;
}

inline MultiVector random_multivector(std::mt19937_64& rng, int degree, int max_deg = 2) {
    MultiVector v(degree);
    for (int i = 0; i < v.comp_count(); ++i) v.comp(i) = random_poly(rng, max_deg, 3);
    return v;
}

/// Class-2 tensor: coefficients (2b, a, b) over the commuting frame.
inline YFrameCoeffs dh2_coeffs(const Rational& a, const Rational& b) {
    return YFrameCoeffs{Rational(2) * b, a, b};
}

/// Class-7 tensor: coefficients (2b + c, a, b).
inline YFrameCoeffs dh7_coeffs(const Rational& a, const Rational& b, const Rational& c) {
    return YFrameCoeffs{Rational(2) * b + c, a, b};
}

}  // namespace pcoh::testutil
