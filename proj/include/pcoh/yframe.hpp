#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pcoh/linalg.hpp"
#include "pcoh/multivector.hpp"
#include "pcoh/poly.hpp"

namespace pcoh {

/// Element of Q_{kr} = (1/D) P_{kr}: a rational function numerator/D with a
/// bigrade-homogeneous numerator (zero allowed).
struct QElem {
    Bigrade grade;
    Poly numerator;

    bool valid() const { return grade.valid() && numerator.is_homogeneous_of(grade); }
    bool operator==(const QElem&) const = default;
};

/// Cochain written over the commuting frame Y1, Y2, Y3. Component layout
/// mirrors MultiVector (d=1: Y1,Y2,Y3; d=2: Y23,Y31,Y12; d=3: Y123), each
/// component being a numerator polynomial over the common denominator D.
/// All components share one bigrade.
struct YCochain {
    int degree = 0;
    Bigrade grade;
    std::vector<Poly> numerators;

    bool valid() const;
    bool is_zero() const;
    bool operator==(const YCochain&) const = default;
    std::string str() const;
};

/// Wedge coefficients of an admissible quadratic tensor
/// lambda = c23 Y2^Y3 + c31 Y3^Y1 + c12 Y1^Y2.
struct YFrameCoeffs {
    Rational c23, c31, c12;

    bool operator==(const YFrameCoeffs&) const = default;
};

/// Y1 = x1 d1 + x2 d2, Y2 = x1 d2 - x2 d1, Y3 = x3 d3.
const std::array<MultiVector, 3>& y_fields();

/// The tensor of `coeffs` expanded in the coordinate frame.
MultiVector y_structure(const YFrameCoeffs& coeffs);

/// Canonical monomial basis of Q_{kr}: x^{l, k-l, r-k}, l = 0..k.
std::vector<Exponent> q_monomials(const Bigrade& g);

/// Coordinates of a numerator in the canonical Q_{kr} basis; throws when the
/// polynomial does not lie in P_{kr}.
std::vector<Rational> q_coords(const Poly& numerator, const Bigrade& g);
Poly q_poly(const std::vector<Rational>& coords, const Bigrade& g);

/// Exact change of frame. Each component of `c` must be bigrade-homogeneous
/// so that its numerator lands in P_{grade}; otherwise throws.
YCochain to_y_frame(const MultiVector& c, const Bigrade& grade);

/// Inverse change of frame. Returns nullopt when the divisibility conditions
/// fail, i.e. the cochain is potential but not real.
std::optional<MultiVector> from_y_frame(const YCochain& c);

/// Derivation action of the fundamental operator X_which on Q_{kr}, computed
/// on the cleared-denominator form: X(p/D) = (X(p) - t p)/D with X(D) = t D.
/// This is the reference implementation that x_matrix is tested against.
QElem x_apply(int which, const YFrameCoeffs& coeffs, const QElem& q);

struct XOperatorMatrix {
    int which = 0;
    Bigrade grade;
    YFrameCoeffs params;
    RatMatrix matrix;  // (k+1) x (k+1) in the canonical basis
};

/// Matrix of X_which on Q_{kr}, built from the closed tridiagonal form.
XOperatorMatrix x_matrix(int which, const Bigrade& g, const YFrameCoeffs& coeffs);

/// Kernel of X_which on Q_{kr}.
SubspaceBasis x_kernel(int which, const Bigrade& g, const YFrameCoeffs& coeffs);

}  // namespace pcoh
