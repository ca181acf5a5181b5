#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pcoh/linalg.hpp"
#include "pcoh/multivector.hpp"
#include "pcoh/yframe.hpp"

namespace pcoh {

enum class Cx { P, R, S };

const char* cx_name(Cx c);

struct SliceSpec {
    Cx cx = Cx::R;
    int d = 0;
    Bigrade grade;
};

/// Component layout of the potential cochain space at one (d, k, r) slice.
/// Out-of-range slices have no components and dimension zero.
struct PLayout {
    int d = 0;
    Bigrade grade;
    std::array<bool, 3> present{};  // by canonical component; d=0,3 use slot 0
    int ncomp = 0;

    int block() const { return grade.k + 1; }
    int dim() const { return ncomp * block(); }
    /// Offset of a component's coordinate block, or -1 when absent.
    int offset(int comp) const;
};

PLayout p_layout(int d, const Bigrade& g);

/// Whether the slice participates in the complex at all.
bool slice_in_range(int d, const Bigrade& g);

/// Monomial of the supplementary space: x1^{k-e} x2^e x3^{r-k}, e in {0,1}.
struct RBasisElem {
    int comp = 0;
    Exponent e;
};

int p_dim(int d, const Bigrade& g);
int r_dim(int d, const Bigrade& g);
int s_dim(int d, const Bigrade& g);

std::vector<RBasisElem> r_basis(int d, const Bigrade& g);
std::vector<YCochain> s_basis(int d, const Bigrade& g);

MultiVector r_elem_multivector(int d, const RBasisElem& e);
MultiVector r_coords_to_multivector(int d, const Bigrade& g, const std::vector<Rational>& coords);
/// Coordinates in the real slice basis; throws when the cochain lies outside
/// the componentwise monomial spaces.
std::vector<Rational> multivector_to_r_coords(const MultiVector& v, int d, const Bigrade& g);
/// Real-basis coordinates of a Y-frame cochain; nullopt when it is potential
/// but not real.
std::optional<std::vector<Rational>> ycochain_to_r_coords(const YCochain& c);
YCochain p_coords_to_ycochain(int d, const Bigrade& g, const std::vector<Rational>& coords);
YCochain s_coords_to_ycochain(int d, const Bigrade& g, const std::vector<Rational>& coords);
std::vector<Rational> ycochain_to_p_coords(const YCochain& c);

/// Columns are the real-cochain basis written in potential coordinates.
RatMatrix r_in_p(int d, const Bigrade& g);
/// Columns are the supplementary basis written in potential coordinates.
RatMatrix s_in_p(int d, const Bigrade& g);

/// Projections of the potential space onto the real and supplementary
/// summands, in their respective bases.
struct Projections {
    RatMatrix onto_r;  // r_dim x p_dim
    RatMatrix onto_s;  // s_dim x p_dim
};
Projections projections(int d, const Bigrade& g);

/// An admissible structure with its frame coefficients and expanded tensor.
struct StructureCx {
    YFrameCoeffs y;
    MultiVector tensor;

    explicit StructureCx(const YFrameCoeffs& coeffs);
};

/// Matrix of the coboundary C^d -> C^{d+1} at one slice, in the canonical
/// basis of the chosen complex. The real-complex matrix is computed twice,
/// through the bracket in the coordinate frame and through the X-operator
/// matrices in the Y frame; a mismatch throws (internal consistency error).
RatMatrix coboundary_matrix(const StructureCx& s, Cx cx, int d, const Bigrade& g);

/// Connecting correction phi: S^d -> R^{d+1}, the real part of the potential
/// coboundary of a supplementary cochain.
RatMatrix phi_matrix(const StructureCx& s, int d, const Bigrade& g);

struct SliceCohomology {
    SliceSpec spec;
    int dim = 0;
    std::vector<std::vector<Rational>> reps;  // cocycle coordinates in the slice basis
};

SliceCohomology slice_cohomology(const StructureCx& s, Cx cx, int d, const Bigrade& g);

/// Expresses a cocycle's class in the basis of `h.reps` modulo the image of
/// the previous coboundary. The cocycle must lie in the kernel.
std::vector<Rational> class_coordinates(const SliceCohomology& h, const SubspaceBasis& image,
                                        const std::vector<Rational>& cocycle);

struct LesNode {
    std::string name;
    bool exact = false;
    int rank_in = 0, rank_out = 0, dim = 0;
};

struct LesReport {
    Bigrade grade;
    bool exact = true;                 // every node exact
    bool dims_consistent = true;       // dim P = dim R + dim S per degree
    bool dirsum_consistent = true;     // rank phi_(d-1) + dim ker pS_d = dim H^d(R)
    std::vector<LesNode> nodes;
    std::array<std::array<int, 4>, 3> h_dims{};  // [complex][degree], order P,R,S

    std::string summary() const;
};

/// Builds the cohomology triangle at one bigrade and verifies exactness of
/// the induced long sequence at every node.
LesReport les_check(const StructureCx& s, const Bigrade& g);

}  // namespace pcoh
