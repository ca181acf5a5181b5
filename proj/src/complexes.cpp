#include "pcoh/complexes.hpp"

#include <sstream>
#include <stdexcept>

namespace pcoh {

const char* cx_name(Cx c) {
    switch (c) {
        case Cx::P: return "P";
        case Cx::R: return "R";
        default: return "S";
    }
}

bool slice_in_range(int d, const Bigrade& g) {
    if (!g.valid()) return false;
    switch (d) {
        case 0: return g.k >= 2 && g.r >= 3 && g.k <= g.r - 1;
        case 1: return g.k >= 1 && g.r >= 2;
        case 2: return g.r >= 1;
        case 3: return true;
        default: return false;
    }
}

int PLayout::offset(int comp) const {
    if (comp < 0 || comp > 2 || !present[comp]) return -1;
    int off = 0;
    for (int i = 0; i < comp; ++i)
        if (present[i]) off += block();
    return off;
}

PLayout p_layout(int d, const Bigrade& g) {
    PLayout l;
    l.d = d;
    l.grade = g;
    if (!slice_in_range(d, g)) return l;
    switch (d) {
        case 0:
        case 3:
            l.present = {true, false, false};
            break;
        case 1:
            // Y1, Y2 drop out at k = r; Y3 drops out at k = 1.
            l.present = {g.k != g.r, g.k != g.r, g.k != 1};
            break;
        case 2:
            // Y23, Y31 drop out at k = 0; Y12 drops out at k = r.
            l.present = {g.k != 0, g.k != 0, g.k != g.r};
            break;
    }
    for (bool b : l.present) l.ncomp += b ? 1 : 0;
    return l;
}

int p_dim(int d, const Bigrade& g) { return p_layout(d, g).dim(); }

namespace {

int full_comps(int d) { return (d == 0 || d == 3) ? 1 : 3; }

std::vector<Exponent> monomial_space(int k, int r) {
    if (k < 0 || r < k) return {};
    return q_monomials(Bigrade{k, r});
}

// Coordinate-frame monomial spaces of the real slice, per component.
std::array<std::vector<Exponent>, 3> r_spaces(int d, const Bigrade& g) {
    std::array<std::vector<Exponent>, 3> sp;
    if (!slice_in_range(d, g)) return sp;
    const int k = g.k, r = g.r;
    switch (d) {
        case 0:
            sp[0] = monomial_space(k - 2, r - 3);
            break;
        case 1:
            if (k != r) {
                sp[0] = monomial_space(k - 1, r - 2);
                sp[1] = sp[0];
            }
            if (k != 1) sp[2] = monomial_space(k - 2, r - 2);
            break;
        case 2:
            if (k != 0) {
                sp[0] = monomial_space(k - 1, r - 1);
                sp[1] = sp[0];
            }
            if (k != r) sp[2] = monomial_space(k, r - 1);
            break;
        case 3:
            sp[0] = monomial_space(k, r);
            break;
    }
    return sp;
}

Exponent q_monomial(const Bigrade& g, int l) { return Exponent{l, g.k - l, g.r - g.k}; }

}  // namespace

std::vector<RBasisElem> r_basis(int d, const Bigrade& g) {
    std::vector<RBasisElem> b;
    auto sp = r_spaces(d, g);
    for (int comp = 0; comp < 3; ++comp)
        for (const auto& e : sp[comp]) b.push_back(RBasisElem{comp, e});
    return b;
}

int r_dim(int d, const Bigrade& g) { return static_cast<int>(r_basis(d, g).size()); }

std::vector<YCochain> s_basis(int d, const Bigrade& g) {
    std::vector<YCochain> b;
    if (!slice_in_range(d, g) || d == 3) return b;
    const int k = g.k, r = g.r;
    const int nc = full_comps(d);
    auto elem = [&](int comp, int l) {
        YCochain c;
        c.degree = d;
        c.grade = g;
        c.numerators.assign(nc, Poly());
        c.numerators[comp] = Poly::monomial(q_monomial(g, l));
        return c;
    };
    switch (d) {
        case 0:
            b.push_back(elem(0, k));
            b.push_back(elem(0, k - 1));
            break;
        case 1:
            if (k != r) {
                b.push_back(elem(0, k));
                b.push_back(elem(1, k));
            }
            if (k != 1) {
                b.push_back(elem(2, k));
                b.push_back(elem(2, k - 1));
            }
            break;
        case 2:
            if (k != 0) {
                b.push_back(elem(0, k));
                b.push_back(elem(1, k));
            }
            break;
    }
    return b;
}

int s_dim(int d, const Bigrade& g) { return static_cast<int>(s_basis(d, g).size()); }

MultiVector r_elem_multivector(int d, const RBasisElem& e) {
    MultiVector v(d);
    v.comp(d == 0 || d == 3 ? 0 : e.comp) = Poly::monomial(e.e);
    return v;
}

std::vector<Rational> multivector_to_r_coords(const MultiVector& v, int d, const Bigrade& g) {
    auto basis = r_basis(d, g);
    std::vector<Rational> coords(basis.size());
    MultiVector rebuilt(d);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        int comp = (d == 0 || d == 3) ? 0 : basis[i].comp;
        coords[i] = v.comp(comp).coeff(basis[i].e);
        rebuilt.comp(comp) += Poly::monomial(basis[i].e, coords[i]);
    }
    if (!(rebuilt == v))
        throw std::logic_error("multivector_to_r_coords: cochain outside the real slice spaces");
    return coords;
}

std::optional<std::vector<Rational>> ycochain_to_r_coords(const YCochain& c) {
    auto mv = from_y_frame(c);
    if (!mv) return std::nullopt;
    return multivector_to_r_coords(*mv, c.degree, c.grade);
}

MultiVector r_coords_to_multivector(int d, const Bigrade& g,
                                    const std::vector<Rational>& coords) {
    auto basis = r_basis(d, g);
    if (coords.size() != basis.size())
        throw std::invalid_argument("r_coords_to_multivector: length mismatch");
    MultiVector v(d);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        int comp = (d == 0 || d == 3) ? 0 : basis[i].comp;
        v.comp(comp) += Poly::monomial(basis[i].e, coords[i]);
    }
    return v;
}

YCochain p_coords_to_ycochain(int d, const Bigrade& g, const std::vector<Rational>& coords) {
    const PLayout l = p_layout(d, g);
    if (static_cast<int>(coords.size()) != l.dim())
        throw std::invalid_argument("p_coords_to_ycochain: length mismatch");
    YCochain c;
    c.degree = d;
    c.grade = g;
    c.numerators.assign(full_comps(d), Poly());
    for (int comp = 0; comp < full_comps(d); ++comp) {
        int off = l.offset(comp);
        if (off < 0) continue;
        std::vector<Rational> block(coords.begin() + off, coords.begin() + off + l.block());
        c.numerators[comp] = q_poly(block, g);
    }
    return c;
}

YCochain s_coords_to_ycochain(int d, const Bigrade& g, const std::vector<Rational>& coords) {
    auto basis = s_basis(d, g);
    if (coords.size() != basis.size())
        throw std::invalid_argument("s_coords_to_ycochain: length mismatch");
    YCochain c;
    c.degree = d;
    c.grade = g;
    c.numerators.assign(full_comps(d), Poly());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t comp = 0; comp < basis[i].numerators.size(); ++comp)
            c.numerators[comp] += coords[i] * basis[i].numerators[comp];
    return c;
}

std::vector<Rational> ycochain_to_p_coords(const YCochain& c) {
    const PLayout l = p_layout(c.degree, c.grade);
    std::vector<Rational> v(l.dim());
    for (int comp = 0; comp < full_comps(c.degree); ++comp) {
        int off = l.offset(comp);
        if (off < 0) {
            if (!c.numerators[comp].is_zero())
                throw std::logic_error("ycochain_to_p_coords: component outside the slice layout");
            continue;
        }
        auto block = q_coords(c.numerators[comp], c.grade);
        for (int i = 0; i < l.block(); ++i) v[off + i] = block[i];
    }
    return v;
}

RatMatrix r_in_p(int d, const Bigrade& g) {
    auto basis = r_basis(d, g);
    RatMatrix m(p_dim(d, g), static_cast<int>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        auto col = ycochain_to_p_coords(to_y_frame(r_elem_multivector(d, basis[j]), g));
        for (int i = 0; i < m.rows(); ++i) m.at(i, static_cast<int>(j)) = col[i];
    }
    return m;
}

RatMatrix s_in_p(int d, const Bigrade& g) {
    auto basis = s_basis(d, g);
    RatMatrix m(p_dim(d, g), static_cast<int>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        auto col = ycochain_to_p_coords(basis[j]);
        for (int i = 0; i < m.rows(); ++i) m.at(i, static_cast<int>(j)) = col[i];
    }
    return m;
}

Projections projections(int d, const Bigrade& g) {
    const int np = p_dim(d, g), nr = r_dim(d, g), ns = s_dim(d, g);
    if (nr + ns != np)
        throw std::logic_error("projections: real and supplementary parts do not fill the slice");
    if (np == 0) return Projections{RatMatrix(0, 0), RatMatrix(0, 0)};
    RatMatrix f = RatMatrix::hstack(r_in_p(d, g), s_in_p(d, g));
    RatMatrix aug = RatMatrix::hstack(f, RatMatrix::identity(np));
    auto rr = rank_and_rref(aug);
    if (rr.rank != np) throw std::logic_error("projections: decomposition is not direct");
    Projections pr;
    pr.onto_r = RatMatrix(nr, np);
    pr.onto_s = RatMatrix(ns, np);
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j) {
            const Rational& x = rr.rref.at(i, np + j);
            if (i < nr) pr.onto_r.at(i, j) = x;
            else pr.onto_s.at(i - nr, j) = x;
        }
    return pr;
}

StructureCx::StructureCx(const YFrameCoeffs& coeffs) : y(coeffs), tensor(y_structure(coeffs)) {
    if (!is_poisson(tensor)) throw std::logic_error("admissible tensor failed the Jacobi identity");
}

namespace {

// Full block matrix of the potential coboundary over all components, before
// restriction to the slice layout. Rows follow the target component order.
RatMatrix p_cob_full(const YFrameCoeffs& y, int d, const Bigrade& g) {
    const int n = g.k + 1;
    auto X = [&](int i) { return x_matrix(i, g, y).matrix; };
    auto Z = [n]() { return RatMatrix(n, n); };
    auto neg = [](const RatMatrix& m) { return m * Rational(-1); };
    auto compose = [n](const std::vector<std::vector<RatMatrix>>& blocks) {
        const int tr = static_cast<int>(blocks.size());
        const int sc = static_cast<int>(blocks[0].size());
        RatMatrix m(tr * n, sc * n);
        for (int bi = 0; bi < tr; ++bi)
            for (int bj = 0; bj < sc; ++bj)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        m.at(bi * n + i, bj * n + j) = blocks[bi][bj].at(i, j);
        return m;
    };
    switch (d) {
        case 0:
            // f -> X1(f) Y1 + X2(f) Y2 + X3(f) Y3
            return compose({{X(1)}, {X(2)}, {X(3)}});
        case 1:
            // curl pattern: (X2 s3 - X3 s2, X3 s1 - X1 s3, X1 s2 - X2 s1)
            return compose({{Z(), neg(X(3)), X(2)},
                            {X(3), Z(), neg(X(1))},
                            {neg(X(2)), X(1), Z()}});
        case 2:
            // divergence: X1 s1 + X2 s2 + X3 s3
            return compose({{X(1), X(2), X(3)}});
        default:
            return RatMatrix(0, n);
    }
}

// Potential coboundary restricted to the slice layouts. Entries that would
// land on a dropped target component must vanish; anything else is a bug.
RatMatrix p_coboundary(const YFrameCoeffs& y, int d, const Bigrade& g) {
    const PLayout src = p_layout(d, g);
    const PLayout tgt = p_layout(d + 1, g);
    const int n = src.block();
    if (src.dim() == 0 || d == 3) return RatMatrix(tgt.dim(), src.dim());
    RatMatrix full = p_cob_full(y, d, g);
    const int tfull = full.rows() / n;
    RatMatrix m(tgt.dim(), src.dim());
    for (int tc = 0; tc < tfull; ++tc) {
        const int toff = tgt.offset(tc);
        for (int sc = 0; sc < full_comps(d); ++sc) {
            const int soff = src.offset(sc);
            if (soff < 0) continue;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const Rational& x = full.at(tc * n + i, sc * n + j);
                    if (toff < 0) {
                        if (!x.is_zero())
                            throw std::logic_error(
                                "p_coboundary: image hits a component outside the slice");
                        continue;
                    }
                    m.at(toff + i, soff + j) = x;
                }
        }
    }
    return m;
}

RatMatrix r_coboundary(const StructureCx& s, int d, const Bigrade& g) {
    const int src_dim = r_dim(d, g);
    if (d == 3) return RatMatrix(0, src_dim);
    auto src = r_basis(d, g);

    // Route one: Schouten bracket in the coordinate frame.
    RatMatrix direct(r_dim(d + 1, g), src_dim);
    for (std::size_t j = 0; j < src.size(); ++j) {
        MultiVector db = schouten(s.tensor, r_elem_multivector(d, src[j]));
        auto col = multivector_to_r_coords(db, d + 1, g);
        for (int i = 0; i < direct.rows(); ++i) direct.at(i, static_cast<int>(j)) = col[i];
    }

    // Route two: X-operator matrices in the Y frame plus projection back.
    RatMatrix img = p_coboundary(s.y, d, g) * r_in_p(d, g);
    Projections proj = projections(d + 1, g);
    if (!(proj.onto_s * img).is_zero())
        throw std::logic_error("r_coboundary: real cochain image left the real subcomplex");
    RatMatrix via_frames = proj.onto_r * img;

    if (!(direct == via_frames))
        throw std::logic_error("r_coboundary: frame routes disagree");
    return direct;
}

int cochain_dim(Cx cx, int d, const Bigrade& g) {
    if (d < 0 || d > 3) return 0;
    switch (cx) {
        case Cx::P: return p_dim(d, g);
        case Cx::R: return r_dim(d, g);
        default: return s_dim(d, g);
    }
}

}  // namespace

RatMatrix coboundary_matrix(const StructureCx& s, Cx cx, int d, const Bigrade& g) {
    switch (cx) {
        case Cx::P:
            return p_coboundary(s.y, d, g);
        case Cx::R:
            return r_coboundary(s, d, g);
        case Cx::S: {
            if (d == 3) return RatMatrix(0, s_dim(3, g));
            RatMatrix img = p_coboundary(s.y, d, g) * s_in_p(d, g);
            return projections(d + 1, g).onto_s * img;
        }
    }
    throw std::logic_error("coboundary_matrix: bad complex");
}

RatMatrix phi_matrix(const StructureCx& s, int d, const Bigrade& g) {
    if (d == 3) return RatMatrix(0, s_dim(3, g));
    RatMatrix img = p_coboundary(s.y, d, g) * s_in_p(d, g);
    return projections(d + 1, g).onto_r * img;
}

SliceCohomology slice_cohomology(const StructureCx& s, Cx cx, int d, const Bigrade& g) {
    SliceCohomology out;
    out.spec = SliceSpec{cx, d, g};
    RatMatrix up = coboundary_matrix(s, cx, d, g);
    RatMatrix down =
        d == 0 ? RatMatrix(cochain_dim(cx, 0, g), 0) : coboundary_matrix(s, cx, d - 1, g);
    auto ker = kernel_basis(up);
    auto im = image_basis(down);
    auto reps = quotient_basis(ker, im);
    out.dim = reps.dim();
    out.reps = std::move(reps.vectors);
    return out;
}

std::vector<Rational> class_coordinates(const SliceCohomology& h, const SubspaceBasis& image,
                                        const std::vector<Rational>& cocycle) {
    const int n = static_cast<int>(cocycle.size());
    RatMatrix m(n, h.dim + image.dim());
    for (int j = 0; j < h.dim; ++j)
        for (int i = 0; i < n; ++i) m.at(i, j) = h.reps[j][i];
    for (int j = 0; j < image.dim(); ++j)
        for (int i = 0; i < n; ++i) m.at(i, h.dim + j) = image.vectors[j][i];
    auto sol = solve(m, cocycle);
    if (!sol) throw std::logic_error("class_coordinates: vector is not a cocycle class");
    return std::vector<Rational>(sol->begin(), sol->begin() + h.dim);
}

namespace {

struct HNode {
    SliceCohomology h;
    SubspaceBasis image;  // image of the incoming coboundary
};

RatMatrix induced_map(const std::vector<std::vector<Rational>>& source_reps,
                      const RatMatrix& chain_map, const HNode& target) {
    RatMatrix m(target.h.dim, static_cast<int>(source_reps.size()));
    for (std::size_t j = 0; j < source_reps.size(); ++j) {
        auto img = chain_map * source_reps[j];
        auto cls = class_coordinates(target.h, target.image, img);
        for (int i = 0; i < target.h.dim; ++i) m.at(i, static_cast<int>(j)) = cls[i];
    }
    return m;
}

}  // namespace

LesReport les_check(const StructureCx& s, const Bigrade& g) {
    LesReport rep;
    rep.grade = g;

    const Cx order[3] = {Cx::P, Cx::R, Cx::S};
    HNode nodes[3][4];
    for (int c = 0; c < 3; ++c)
        for (int d = 0; d <= 3; ++d) {
            nodes[c][d].h = slice_cohomology(s, order[c], d, g);
            RatMatrix down = d == 0 ? RatMatrix(cochain_dim(order[c], 0, g), 0)
                                    : coboundary_matrix(s, order[c], d - 1, g);
            nodes[c][d].image = image_basis(down);
            rep.h_dims[c][d] = nodes[c][d].h.dim;
        }
    for (int d = 0; d <= 3; ++d)
        rep.dims_consistent = rep.dims_consistent && (p_dim(d, g) == r_dim(d, g) + s_dim(d, g));

    // Induced maps per degree: i (R -> P), pS (P -> S), phi (S -> R at d+1).
    RatMatrix imap[4], pmap[4], fmap[4];
    for (int d = 0; d <= 3; ++d) {
        imap[d] = induced_map(nodes[1][d].h.reps, r_in_p(d, g), nodes[0][d]);
        pmap[d] = induced_map(nodes[0][d].h.reps, projections(d, g).onto_s, nodes[2][d]);
        if (d < 3)
            fmap[d] = induced_map(nodes[2][d].h.reps, phi_matrix(s, d, g), nodes[1][d + 1]);
        else
            fmap[d] = RatMatrix(0, nodes[2][d].h.dim);
    }

    auto check_node = [&rep](const std::string& name, const RatMatrix& in, const RatMatrix& out) {
        LesNode n;
        n.name = name;
        n.dim = in.rows();
        n.rank_in = rank(in);
        n.rank_out = rank(out);
        const bool composite_zero = out.cols() == 0 || in.cols() == 0 || (out * in).is_zero();
        n.exact = composite_zero && (n.rank_in == n.dim - n.rank_out);
        rep.exact = rep.exact && n.exact;
        rep.nodes.push_back(std::move(n));
    };

    for (int d = 0; d <= 3; ++d) {
        const std::string deg = std::to_string(d);
        RatMatrix into_r = d == 0 ? RatMatrix(nodes[1][0].h.dim, 0) : fmap[d - 1];
        check_node("H^" + deg + "(R)", into_r, imap[d]);
        check_node("H^" + deg + "(P)", imap[d], pmap[d]);
        check_node("H^" + deg + "(S)", pmap[d], fmap[d]);
    }

    for (int d = 0; d <= 3; ++d) {
        const int rank_phi_in = d == 0 ? 0 : rank(fmap[d - 1]);
        const int ker_ps = nodes[0][d].h.dim - rank(pmap[d]);
        rep.dirsum_consistent =
            rep.dirsum_consistent && (nodes[1][d].h.dim == rank_phi_in + ker_ps);
    }
    return rep;
}

std::string LesReport::summary() const {
    std::ostringstream os;
    os << "(k,r)=(" << grade.k << "," << grade.r << ") " << (exact ? "exact" : "NOT EXACT");
    if (!dims_consistent) os << " [dim P != dim R + dim S]";
    if (!dirsum_consistent) os << " [direct-sum identity failed]";
    for (const auto& n : nodes)
        if (!n.exact)
            os << " | " << n.name << ": rank_in=" << n.rank_in << " rank_out=" << n.rank_out
               << " dim=" << n.dim;
    return os.str();
}

}  // namespace pcoh
