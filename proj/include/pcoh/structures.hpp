#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcoh/complexes.hpp"
#include "pcoh/multivector.hpp"
#include "pcoh/yframe.hpp"

namespace pcoh {

enum class Family { DH2, DH7, Custom };

/// Parameter block for the built-in quadratic families and custom tensors.
/// DH2 ignores c. The closed-form tables for DH2 assume b != 0.
struct StructureParams {
    Family family = Family::DH2;
    Rational a, b, c;
    std::optional<MultiVector> custom;

    std::string name() const;
};

/// The exact quadratic tensor of the parameter block.
MultiVector build_structure(const StructureParams& p);

/// Wedge coefficients over the commuting frame: DH2 -> (2b, a, b),
/// DH7 -> (2b+c, a, b). Custom tensors are accepted only when admissible;
/// otherwise throws std::domain_error.
YFrameCoeffs yframe_coeffs(const StructureParams& p);

/// Frame coefficients of a bivector when each Y-frame numerator is a constant
/// multiple of D; nullopt otherwise.
std::optional<YFrameCoeffs> admissible_coeffs(const MultiVector& tensor);

enum class RegimeTag { ANonzero, A0B0, A02BpC0, A0RatioNeg, A0RatioPos };

const char* regime_name(RegimeTag t);

/// Parameter regime of the closed-form tables. For the ratio regimes,
/// (beta, gamma) is the irreducible representative of b/c: positive
/// denominator when b(2b+c) < 0, positive numerator when b(2b+c) > 0.
/// A c = 0 family in the positive regime is encoded as (1, 0); its Casimir
/// family consists of the powers of D.
struct Regime {
    RegimeTag tag = RegimeTag::ANonzero;
    mpz_class beta{0}, gamma{0};
};

Regime classify_regime(const StructureParams& p);

/// Expected nonzero cohomology classes of the real complex, as explicit
/// generator cochains per (degree, bigrade), up to numerator degree rmax.
/// Encodes the closed-form tables of both families; throws std::domain_error
/// when no table applies (DH2 with b = 0, the zero tensor, custom tensors).
using RClassMap = std::map<std::pair<int, Bigrade>, std::vector<YCochain>>;
RClassMap expected_r_classes(const StructureParams& p, int rmax);

/// dim H^d_{kr} of the real complex per the closed-form tables.
int expected_dim(const StructureParams& p, int d, const Bigrade& g);

/// dim H^d_{kr} of the potential and supplementary complexes; closed-form
/// tables exist for the DH2 family only.
int expected_dim_p(const StructureParams& p, int d, const Bigrade& g);
int expected_dim_s(const StructureParams& p, int d, const Bigrade& g);

}  // namespace pcoh
