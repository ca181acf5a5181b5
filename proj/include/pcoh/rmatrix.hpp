#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>

#include "pcoh/linalg.hpp"
#include "pcoh/multivector.hpp"
#include "pcoh/yframe.hpp"

namespace pcoh {

/// Basis matrix E_{ij} of gl(3), index p = 3 i + j.
Mat3 gl3_basis(int p);
Mat3 mat3_transpose(const Mat3& m);

/// Element of the second wedge power of gl(3), in coordinates over the
/// sorted basis pairs e_p ^ e_q, p < q.
class BiMatrix {
public:
    static BiMatrix wedge(const Mat3& a, const Mat3& b);

    void accumulate(const BiMatrix& o, const Rational& scale);
    void add_term(int p, int q, const Rational& c);

    const std::map<std::pair<int, int>, Rational>& coords() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool operator==(const BiMatrix&) const = default;

private:
    std::map<std::pair<int, int>, Rational> c_;
};

/// Element of the third wedge power of gl(3).
class TriMatrix {
public:
    void add_term(std::array<int, 3> idx, const Rational& c);
    const std::map<std::array<int, 3>, Rational>& coords() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool operator==(const TriMatrix&) const = default;
    std::string str() const;

private:
    std::map<std::array<int, 3>, Rational> c_;
};

/// Algebraic Schouten bracket on wedges of gl(3):
/// [a^b, c^d] = [a,c]^b^d - [b,c]^a^d - [a,d]^b^c + [b,d]^a^c.
TriMatrix wedge_bracket(const BiMatrix& r1, const BiMatrix& r2);

/// Tangent action of gl(3): a = (a_ij) -> a_ij x_i d_j. A Lie algebra
/// homomorphism onto the linear vector fields.
MultiVector j_map(const Mat3& m);
/// Multiplicative extensions to wedge degrees two and three.
MultiVector j_wedge(const BiMatrix& r);
MultiVector j_wedge3(const TriMatrix& t);

struct YangBaxterResult {
    TriMatrix bracket;      // [r, r] in wedge-cubed coordinates
    bool is_zero = false;   // classical Yang-Baxter equation holds
    bool j_identity = false;  // J^3 [r,r] equals [J^2 r, J^2 r], checked always
};

YangBaxterResult yang_baxter_check(const BiMatrix& r);

/// Basis of {a in gl(3) : [Ja, lambda] = 0} inside the 9-dimensional
/// coordinate space of gl(3).
SubspaceBasis stabilizer(const MultiVector& lambda);

/// Conjugation action matched to the pushforward of linear fields:
/// pushforward(a, j_map(m)) = j_map(ad_push(a, m)).
Mat3 ad_push(const Mat3& a, const Mat3& m);
BiMatrix ad_push(const Mat3& a, const BiMatrix& r);

/// The canonical bi-matrix over the commuting frame matrices whose image
/// under j_wedge is the admissible tensor with these coefficients.
BiMatrix commuting_frame_bimatrix(const YFrameCoeffs& c);

}  // namespace pcoh
