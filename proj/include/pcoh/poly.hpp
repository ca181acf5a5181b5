#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcoh/rational.hpp"

namespace pcoh {

/// Monomial multi-index for x1^i1 x2^i2 x3^i3.
struct Exponent {
    int i1 = 0, i2 = 0, i3 = 0;

    auto operator<=>(const Exponent&) const = default;
    int total() const { return i1 + i2 + i3; }
    int partial() const { return i1 + i2; }  // degree in x1, x2
};

/// Bidegree of a homogeneous polynomial: k = degree in (x1,x2), r = total.
struct Bigrade {
    int k = 0, r = 0;

    auto operator<=>(const Bigrade&) const = default;
    bool valid() const { return 0 <= k && k <= r; }
};

using Mat3 = std::array<std::array<Rational, 3>, 3>;

Mat3 mat3_zero();
Mat3 mat3_identity();
Mat3 mat3_mul(const Mat3& a, const Mat3& b);
Mat3 mat3_commutator(const Mat3& a, const Mat3& b);
/// Inverse via adjugate; throws on singular input.
Mat3 mat3_inverse(const Mat3& a);

/// Sparse polynomial in x1, x2, x3 over the rationals. No zero coefficients
/// are stored; the zero polynomial has an empty term map.
class Poly {
public:
    Poly() = default;

    static Poly constant(const Rational& c);
    static Poly monomial(const Exponent& e, const Rational& c = Rational(1));
    static Poly var(int i);  // x_i, i in {1,2,3}

    const std::map<Exponent, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int term_count() const { return static_cast<int>(t_.size()); }

    Rational coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const Rational& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);
    friend Poly operator-(const Poly& p) { return Rational(-1) * p; }
    bool operator==(const Poly& o) const = default;

    Poly partial(int var) const;  // d/dx_var, var in {1,2,3}

    /// Bigrade when homogeneous and nonzero; nullopt otherwise.
    std::optional<Bigrade> homogeneous_bigrade() const;
    bool is_homogeneous_of(const Bigrade& g) const;

    /// Splits into bigrade-homogeneous parts; parts re-sum to the input.
    std::map<Bigrade, Poly> bigrade_split() const;

    std::string str() const;

private:
    std::map<Exponent, Rational> t_;
};

/// D' = x1^2 + x2^2.
const Poly& dprime();
/// D = (x1^2 + x2^2) x3, the determinant of the frame fields.
const Poly& dpoly();

/// Exact quotient p / D' for bigrade-homogeneous p (zero allowed); nullopt
/// when not divisible. Throws on inhomogeneous input.
std::optional<Poly> div_by_dprime(const Poly& p);

/// Exact quotient p / D under the same contract.
std::optional<Poly> div_by_d(const Poly& p);

/// Exact quotient p / x3 for arbitrary p; nullopt when some term lacks x3.
std::optional<Poly> div_by_x3(const Poly& p);

/// Divisibility by D' of a bigrade-homogeneous p via the alternating
/// coefficient sums over each x3 stratum. Independent cross-check of the
/// division route.
bool dprime_divisible_by_alternating_sums(const Poly& p);

/// The derivation sum_ij a_ij x_i d/dx_j applied to p.
Poly apply_linear_field(const Mat3& a, const Poly& p);

/// Composition p(M x): substitutes x_i -> sum_j M_ij x_j.
Poly subs_linear(const Poly& p, const Mat3& m);

std::optional<Poly> parse_poly(const std::string& text);

/// Parses a sum of products of rationals, variables, and frame symbols
/// (d1..d123, arbitrary index order). Returns the polynomial part per
/// canonical frame symbol; the key "" holds the plain scalar part.
std::optional<std::map<std::string, Poly>> parse_frame_expression(const std::string& text);

}  // namespace pcoh
