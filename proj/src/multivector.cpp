#include "pcoh/multivector.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace pcoh {

namespace {

int comp_count_for(int degree) {
    switch (degree) {
        case 0: case 3: return 1;
        case 1: case 2: return 3;
        default: throw std::invalid_argument("multivector degree must be 0..3");
    }
}

// Canonical slot and cyclic-basis sign for a sorted index set (0-based).
// d=2 components are kept in the cyclic order d23, d31, d12, so the sorted
// pair (0,2) carries sign -1 relative to d31.
struct Slot {
    int comp;
    int sign;
};

Slot slot_for_sorted(const std::vector<int>& idx) {
    switch (idx.size()) {
        case 0: return {0, 1};
        case 1: return {idx[0], 1};
        case 2:
            if (idx[0] == 1 && idx[1] == 2) return {0, 1};
            if (idx[0] == 0 && idx[1] == 2) return {1, -1};
            return {2, 1};
        default: return {0, 1};
    }
}

// Accumulates coeff * d_{idx} (indices in arbitrary order) into out.
void add_term(MultiVector& out, const Poly& coeff, std::vector<int> idx) {
    if (coeff.is_zero()) return;
    int sign = 1;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j]) return;
            if (idx[i] > idx[j]) { std::swap(idx[i], idx[j]); sign = -sign; }
        }
    if (static_cast<int>(idx.size()) != out.degree())
        throw std::logic_error("wedge term degree mismatch");
    Slot s = slot_for_sorted(idx);
    out.comp(s.comp) += Rational(sign * s.sign) * coeff;
}

// Terms (coefficient, sorted indices, cyclic sign folded in) of a multivector.
struct Term {
    Poly coeff;
    std::vector<int> idx;
};

std::vector<Term> terms_of(const MultiVector& v) {
    std::vector<Term> ts;
    auto push = [&ts](const Poly& p, std::vector<int> idx, int sign) {
        if (p.is_zero()) return;
        ts.push_back({sign < 0 ? Rational(-1) * p : p, std::move(idx)});
    };
    switch (v.degree()) {
        case 0: push(v.comp(0), {}, 1); break;
        case 1:
            for (int i = 0; i < 3; ++i) push(v.comp(i), {i}, 1);
            break;
        case 2:
            push(v.comp(0), {1, 2}, 1);
            push(v.comp(1), {0, 2}, -1);
            push(v.comp(2), {0, 1}, 1);
            break;
        case 3: push(v.comp(0), {0, 1, 2}, 1); break;
    }
    return ts;
}

// sign * [f d_I, g d_J], accumulated into out. Conventions:
//   [X, f] = X(f), [f, X] = -X(f), [X, Y] = Lie bracket,
//   [A, B] = -(-1)^{(|A|-1)(|B|-1)} [B, A],
//   [A, B ^ C] = [A, B] ^ C + (-1)^{(|A|-1)|B|} B ^ [A, C].
void bracket_terms(const Poly& f, const std::vector<int>& I, const Poly& g,
                   const std::vector<int>& J, const Rational& sign, MultiVector& out) {
    const int p = static_cast<int>(I.size());
    const int q = static_cast<int>(J.size());
    if (f.is_zero() || g.is_zero()) return;
    if (p == 0 && q == 0) return;

    if (p == 1) {
        // [f d_i, g d_J] = f d_i(g) d_J - sum_t g d_{j_t}(f) d_{J with t -> i}
        add_term(out, sign * (f * g.partial(I[0] + 1)), J);
        for (int t = 0; t < q; ++t) {
            Poly df = f.partial(J[t] + 1);
            if (df.is_zero()) continue;
            std::vector<int> jt = J;
            jt[t] = I[0];
            add_term(out, (Rational(-1) * sign) * (g * df), std::move(jt));
        }
        return;
    }

    if (p == 0) {
        // [f, B] = (-1)^q [B, f]
        bracket_terms(g, J, f, {}, q % 2 == 0 ? sign : Rational(-1) * sign, out);
        return;
    }

    if (q == 0) {
        // [f d_I, g] = sum_s (-1)^{p-s} f d_{i_s}(g) d_{I minus s}   (s = 1..p)
        for (int s = 0; s < p; ++s) {
            Poly dg = g.partial(I[s] + 1);
            if (dg.is_zero()) continue;
            std::vector<int> rest;
            rest.reserve(p - 1);
            for (int t = 0; t < p; ++t)
                if (t != s) rest.push_back(I[t]);
            const bool neg = (p - 1 - s) % 2 != 0;
            add_term(out, (neg ? Rational(-1) * sign : sign) * (f * dg), std::move(rest));
        }
        return;
    }

    // p >= 2, q >= 1: split the second argument as (g d_{j0}) ^ d_{J'}.
    const std::vector<int> j0{J[0]};
    const std::vector<int> jrest(J.begin() + 1, J.end());

    // [A, g d_{j0}] ^ d_{J'} with [A, X] = -[X, A].
    MultiVector t1(p);
    bracket_terms(g, j0, f, I, Rational(1), t1);
    for (const Term& t : terms_of(t1)) {
        std::vector<int> idx = t.idx;
        idx.insert(idx.end(), jrest.begin(), jrest.end());
        add_term(out, (Rational(-1) * sign) * t.coeff, std::move(idx));
    }

    // (-1)^{p-1} (g d_{j0}) ^ [A, d_{J'}]
    MultiVector t2(p + static_cast<int>(jrest.size()) - 1);
    bracket_terms(f, I, Poly::constant(Rational(1)), jrest, Rational(1), t2);
    const Rational s2 = (p - 1) % 2 == 0 ? sign : Rational(-1) * sign;
    for (const Term& t : terms_of(t2)) {
        std::vector<int> idx = j0;
        idx.insert(idx.end(), t.idx.begin(), t.idx.end());
        add_term(out, s2 * (g * t.coeff), std::move(idx));
    }
}

}  // namespace

MultiVector::MultiVector(int degree) : deg_(degree), c_(comp_count_for(degree)) {}

MultiVector MultiVector::function(Poly f) {
    MultiVector v(0);
    v.c_[0] = std::move(f);
    return v;
}

MultiVector MultiVector::vector_field(Poly s1, Poly s2, Poly s3) {
    MultiVector v(1);
    v.c_ = {std::move(s1), std::move(s2), std::move(s3)};
    return v;
}

MultiVector MultiVector::bivector(Poly s23, Poly s31, Poly s12) {
    MultiVector v(2);
    v.c_ = {std::move(s23), std::move(s31), std::move(s12)};
    return v;
}

MultiVector MultiVector::trivector(Poly s) {
    MultiVector v(3);
    v.c_[0] = std::move(s);
    return v;
}

bool MultiVector::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

MultiVector& MultiVector::operator+=(const MultiVector& o) {
    if (deg_ != o.deg_) throw std::invalid_argument("multivector sum: degree mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

MultiVector operator-(const MultiVector& a, const MultiVector& b) {
    return a + (Rational(-1) * b);
}

MultiVector operator*(const Rational& s, const MultiVector& v) {
    MultiVector r(v.degree());
    for (int i = 0; i < v.comp_count(); ++i) r.comp(i) = s * v.comp(i);
    return r;
}

MultiVector wedge(const MultiVector& a, const MultiVector& b) {
    const int d = a.degree() + b.degree();
    if (d > 3) throw std::invalid_argument("wedge: degree exceeds 3");
    MultiVector out(d);
    for (const Term& ta : terms_of(a))
        for (const Term& tb : terms_of(b)) {
            std::vector<int> idx = ta.idx;
            idx.insert(idx.end(), tb.idx.begin(), tb.idx.end());
            add_term(out, ta.coeff * tb.coeff, std::move(idx));
        }
    return out;
}

MultiVector schouten(const MultiVector& a, const MultiVector& b) {
    const int p = a.degree(), q = b.degree();
    if (p + q > 4)
        throw std::invalid_argument("schouten: result degree exceeds 3 (unsupported)");
    const int d = p + q == 0 ? 0 : p + q - 1;
    MultiVector out(d);
    for (const Term& ta : terms_of(a))
        for (const Term& tb : terms_of(b))
            bracket_terms(ta.coeff, ta.idx, tb.coeff, tb.idx, Rational(1), out);
    return out;
}

bool is_poisson(const MultiVector& pi) {
    if (pi.degree() != 2) throw std::invalid_argument("is_poisson: bivector expected");
    return schouten(pi, pi).is_zero();
}

MultiVector lp_coboundary(const MultiVector& lambda, const MultiVector& c) {
    if (lambda.degree() != 2) throw std::invalid_argument("lp_coboundary: bivector expected");
    {
        static std::mutex mu;
        static std::unordered_map<std::string, bool> memo;
        const std::string key = lambda.str();
        std::lock_guard<std::mutex> lk(mu);
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, is_poisson(lambda)).first;
        if (!it->second)
            throw std::invalid_argument("lp_coboundary: tensor is not Poisson, [lambda,lambda] != 0");
    }
    if (c.degree() == 3) return MultiVector(3);  // degree-4 output is identically zero on R^3
    return schouten(lambda, c);
}

MultiVector curl(const MultiVector& pi) {
    if (pi.degree() != 2) throw std::invalid_argument("curl: bivector expected");
    const Poly &s1 = pi.comp(0), &s2 = pi.comp(1), &s3 = pi.comp(2);
    return MultiVector::vector_field(s3.partial(2) - s2.partial(3),
                                     s1.partial(3) - s3.partial(1),
                                     s2.partial(1) - s1.partial(2));
}

MultiVector jacobian_structure(const Poly& h) {
    return MultiVector::bivector(h.partial(1), h.partial(2), h.partial(3));
}

MultiVector pushforward(const Mat3& a, const MultiVector& v) {
    const Mat3 ainv = mat3_inverse(a);
    MultiVector out(v.degree());
    for (const Term& t : terms_of(v)) {
        const Poly moved = subs_linear(t.coeff, ainv);
        const int d = static_cast<int>(t.idx.size());
        // Expand the wedge of the pushed frame fields a e_{i1} ^ ... ^ a e_{id}.
        std::vector<int> img(d, 0);
        while (true) {
            Rational c(1);
            for (int s = 0; s < d; ++s) c *= a[img[s]][t.idx[s]];
            if (!c.is_zero()) add_term(out, c * moved, img);
            int s = d - 1;
            while (s >= 0 && img[s] == 2) img[s--] = 0;
            if (s < 0) break;
            ++img[s];
        }
    }
    return out;
}

namespace {
const char* const kCompNames[4][3] = {
    {"", "", ""},
    {"d1", "d2", "d3"},
    {"d23", "d31", "d12"},
    {"d123", "", ""},
};
}

std::string MultiVector::str() const {
    if (deg_ == 0) return c_[0].str();
    std::string out;
    for (int i = 0; i < comp_count(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c_[i].str() + ")*" + kCompNames[deg_][i];
    }
    return out.empty() ? "0" : out;
}

std::optional<MultiVector> parse_multivector(const std::string& text) {
    auto parts = parse_frame_expression(text);
    if (!parts) return std::nullopt;
    int degree = -1;
    auto degree_of_symbol = [](const std::string& s) -> int {
        if (s.empty()) return 0;
        return static_cast<int>(s.size()) - 1;  // "d23" -> 2 etc.
    };
    for (const auto& [sym, p] : *parts) {
        if (p.is_zero()) continue;
        int d = degree_of_symbol(sym);
        if (degree == -1) degree = d;
        else if (degree != d) return std::nullopt;  // mixed degrees
    }
    if (degree == -1) return MultiVector(0);  // zero expression
    MultiVector v(degree);
    for (const auto& [sym, p] : *parts) {
        if (p.is_zero()) continue;
        for (int i = 0; i < v.comp_count(); ++i)
            if (sym == kCompNames[degree][i] || (degree == 0 && sym.empty())) v.comp(i) += p;
    }
    return v;
}

}  // namespace pcoh
