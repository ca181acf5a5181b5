#include "pcoh/rmatrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pcoh {

Mat3 gl3_basis(int p) {
    if (p < 0 || p > 8) throw std::invalid_argument("gl3_basis: index must be 0..8");
    Mat3 m{};
    m[p / 3][p % 3] = Rational(1);
    return m;
}

Mat3 mat3_transpose(const Mat3& m) {
    Mat3 t{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
    return t;
}

namespace {

std::array<Rational, 9> gl3_coords(const Mat3& m) {
    std::array<Rational, 9> c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c[3 * i + j] = m[i][j];
    return c;
}

}  // namespace

BiMatrix BiMatrix::wedge(const Mat3& a, const Mat3& b) {
    auto ca = gl3_coords(a), cb = gl3_coords(b);
    BiMatrix r;
    for (int p = 0; p < 9; ++p)
        for (int q = p + 1; q < 9; ++q) r.add_term(p, q, ca[p] * cb[q] - ca[q] * cb[p]);
    return r;
}

void BiMatrix::accumulate(const BiMatrix& o, const Rational& scale) {
    for (const auto& [pq, c] : o.c_) add_term(pq.first, pq.second, scale * c);
}

void BiMatrix::add_term(int p, int q, const Rational& c) {
    if (c.is_zero()) return;
    int sign = 1;
    if (p == q) return;
    if (p > q) { std::swap(p, q); sign = -1; }
    auto key = std::make_pair(p, q);
    auto [it, inserted] = c_.try_emplace(key, sign < 0 ? -c : c);
    if (!inserted) {
        it->second += sign < 0 ? -c : c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

void TriMatrix::add_term(std::array<int, 3> idx, const Rational& c) {
    if (c.is_zero()) return;
    int sign = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (idx[i] == idx[j]) return;
            if (idx[i] > idx[j]) { std::swap(idx[i], idx[j]); sign = -sign; }
        }
    auto [it, inserted] = c_.try_emplace(idx, sign < 0 ? -c : c);
    if (!inserted) {
        it->second += sign < 0 ? -c : c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

std::string TriMatrix::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : c_) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*e" << idx[0] << "^e" << idx[1] << "^e" << idx[2];
    }
    return os.str();
}

namespace {

// [E_{ab}, E_{cd}] = delta_{bc} E_{ad} - delta_{da} E_{cb}, in coordinates.
void gl3_bracket_terms(int p, int q, std::array<std::pair<int, int>, 2>& out) {
    const int a = p / 3, b = p % 3, c = q / 3, d = q % 3;
    out[0] = b == c ? std::make_pair(3 * a + d, 1) : std::make_pair(-1, 0);
    out[1] = d == a ? std::make_pair(3 * c + b, -1) : std::make_pair(-1, 0);
}

}  // namespace

TriMatrix wedge_bracket(const BiMatrix& r1, const BiMatrix& r2) {
    TriMatrix out;
    std::array<std::pair<int, int>, 2> br;
    auto add_piece = [&](int u, int v, int w1, int w2, const Rational& coeff) {
        // [e_u, e_v] ^ e_{w1} ^ e_{w2}
        gl3_bracket_terms(u, v, br);
        for (const auto& [idx, sign] : br)
            if (idx >= 0) out.add_term({idx, w1, w2}, coeff * Rational(sign));
    };
    for (const auto& [pq, x] : r1.coords())
        for (const auto& [uv, y] : r2.coords()) {
            const int p = pq.first, q = pq.second, u = uv.first, v = uv.second;
            const Rational c = x * y;
            add_piece(p, u, q, v, c);
            add_piece(q, u, p, v, -c);
            add_piece(p, v, q, u, -c);
            add_piece(q, v, p, u, c);
        }
    return out;
}

MultiVector j_map(const Mat3& m) {
    Poly comps[3];
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i)
            if (!m[i][j].is_zero()) comps[j] += m[i][j] * Poly::var(i + 1);
    return MultiVector::vector_field(comps[0], comps[1], comps[2]);
}

MultiVector j_wedge(const BiMatrix& r) {
    MultiVector out(2);
    for (const auto& [pq, c] : r.coords())
        out += c * wedge(j_map(gl3_basis(pq.first)), j_map(gl3_basis(pq.second)));
    return out;
}

MultiVector j_wedge3(const TriMatrix& t) {
    MultiVector out(3);
    for (const auto& [idx, c] : t.coords()) {
        auto w = wedge(wedge(j_map(gl3_basis(idx[0])), j_map(gl3_basis(idx[1]))),
                       j_map(gl3_basis(idx[2])));
        out += c * w;
    }
    return out;
}

YangBaxterResult yang_baxter_check(const BiMatrix& r) {
    YangBaxterResult res;
    res.bracket = wedge_bracket(r, r);
    res.is_zero = res.bracket.is_zero();
    MultiVector lhs = j_wedge3(res.bracket);
    MultiVector tensor = j_wedge(r);
    res.j_identity = lhs == schouten(tensor, tensor);
    return res;
}

SubspaceBasis stabilizer(const MultiVector& lambda) {
    if (lambda.degree() != 2) throw std::invalid_argument("stabilizer: bivector expected");
    std::array<MultiVector, 9> cols{MultiVector(2), MultiVector(2), MultiVector(2),
                                    MultiVector(2), MultiVector(2), MultiVector(2),
                                    MultiVector(2), MultiVector(2), MultiVector(2)};
    std::map<std::pair<int, Exponent>, int> row_of;
    for (int p = 0; p < 9; ++p) {
        cols[p] = schouten(j_map(gl3_basis(p)), lambda);
        for (int comp = 0; comp < 3; ++comp)
            for (const auto& [e, c] : cols[p].comp(comp).terms()) {
                (void)c;
                row_of.try_emplace({comp, e}, 0);
            }
    }
    int nrows = 0;
    for (auto& [key, idx] : row_of) idx = nrows++;
    RatMatrix m(nrows, 9);
    for (int p = 0; p < 9; ++p)
        for (int comp = 0; comp < 3; ++comp)
            for (const auto& [e, c] : cols[p].comp(comp).terms())
                m.at(row_of.at({comp, e}), p) = c;
    return kernel_basis(m);
}

Mat3 ad_push(const Mat3& a, const Mat3& m) {
    const Mat3 at = mat3_transpose(a);
    return mat3_mul(mat3_mul(mat3_inverse(at), m), at);
}

BiMatrix ad_push(const Mat3& a, const BiMatrix& r) {
    BiMatrix out;
    for (const auto& [pq, c] : r.coords()) {
        BiMatrix w = BiMatrix::wedge(ad_push(a, gl3_basis(pq.first)),
                                     ad_push(a, gl3_basis(pq.second)));
        out.accumulate(w, c);
    }
    return out;
}

BiMatrix commuting_frame_bimatrix(const YFrameCoeffs& c) {
    Mat3 m1{};
    m1[0][0] = Rational(1);
    m1[1][1] = Rational(1);
    Mat3 m2{};
    m2[0][1] = Rational(1);
    m2[1][0] = Rational(-1);
    Mat3 m3{};
    m3[2][2] = Rational(1);
    BiMatrix r = BiMatrix::wedge(m2, m3);
    BiMatrix out;
    out.accumulate(r, c.c23);
    out.accumulate(BiMatrix::wedge(m3, m1), c.c31);
    out.accumulate(BiMatrix::wedge(m1, m2), c.c12);
    return out;
}

}  // namespace pcoh
