#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcoh/poly.hpp"

namespace pcoh {

/// Polyvector field on R^3 with polynomial coefficients, written in the
/// coordinate frame. Component layout by degree:
///   d=0: (f)
///   d=1: (s1, s2, s3) for d1, d2, d3
///   d=2: (s1, s2, s3) for d23, d31, d12
///   d=3: (s) for d123
class MultiVector {
public:
    explicit MultiVector(int degree);

    static MultiVector function(Poly f);
    static MultiVector vector_field(Poly s1, Poly s2, Poly s3);
    static MultiVector bivector(Poly s23, Poly s31, Poly s12);
    static MultiVector trivector(Poly s);

    int degree() const { return deg_; }
    int comp_count() const { return static_cast<int>(c_.size()); }
    const Poly& comp(int i) const { return c_[i]; }
    Poly& comp(int i) { return c_[i]; }

    bool is_zero() const;
    bool operator==(const MultiVector& o) const = default;

    MultiVector& operator+=(const MultiVector& o);
    friend MultiVector operator+(MultiVector a, const MultiVector& b) { a += b; return a; }
    friend MultiVector operator-(const MultiVector& a, const MultiVector& b);
    friend MultiVector operator*(const Rational& s, const MultiVector& v);

    std::string str() const;

private:
    int deg_;
    std::vector<Poly> c_;
};

/// Exterior product; throws when the degrees sum past 3.
MultiVector wedge(const MultiVector& a, const MultiVector& b);

/// Schouten-Nijenhuis bracket. Extends the Lie bracket of vector fields,
/// with [X, f] = X(f). Sign convention is pinned by the tests: for a
/// bivector L = X ^ Y with vector fields X, Y and a function f,
/// [L, f] = Y(f) X - X(f) Y. Throws when deg a + deg b > 4 (the result
/// would have degree 4, which this representation does not carry).
MultiVector schouten(const MultiVector& a, const MultiVector& b);

/// Coboundary [lambda, c] of the complex attached to a Poisson bivector.
/// Verifies [lambda, lambda] = 0 once (memoized) and rejects non-Poisson
/// input. Degree-3 cochains map to the zero trivector.
MultiVector lp_coboundary(const MultiVector& lambda, const MultiVector& c);

/// Modular vector field of a bivector with respect to the standard volume.
/// Component j is sum_i d_i(pi_ji) on the antisymmetric coefficient array,
/// i.e. the classical curl of the cyclic component vector.
MultiVector curl(const MultiVector& pi);

/// Bivector with components (d1 h, d2 h, d3 h); always Poisson.
MultiVector jacobian_structure(const Poly& h);

bool is_poisson(const MultiVector& pi);

/// Pushforward along the invertible linear map x -> a x.
MultiVector pushforward(const Mat3& a, const MultiVector& v);

std::optional<MultiVector> parse_multivector(const std::string& text);

}  // namespace pcoh
