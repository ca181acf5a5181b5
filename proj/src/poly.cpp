#include "pcoh/poly.hpp"

#include <cctype>
#include <stdexcept>

namespace pcoh {

Mat3 mat3_zero() { return Mat3{}; }

Mat3 mat3_identity() {
    Mat3 m{};
    for (int i = 0; i < 3; ++i) m[i][i] = Rational(1);
    return m;
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

Mat3 mat3_commutator(const Mat3& a, const Mat3& b) {
    Mat3 ab = mat3_mul(a, b), ba = mat3_mul(b, a);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) ab[i][j] -= ba[i][j];
    return ab;
}

Mat3 mat3_inverse(const Mat3& a) {
    auto det2 = [&](int r0, int r1, int c0, int c1) {
        return a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
    };
    Rational det = a[0][0] * det2(1, 2, 1, 2) - a[0][1] * det2(1, 2, 0, 2) + a[0][2] * det2(1, 2, 0, 1);
    if (det.is_zero()) throw std::invalid_argument("mat3_inverse: singular matrix");
    Mat3 inv{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            // Cofactor transpose; cyclic index choice keeps signs implicit.
            inv[i][j] = (a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]) / det;
        }
    return inv;
}

Poly Poly::constant(const Rational& c) { return monomial(Exponent{}, c); }

Poly Poly::monomial(const Exponent& e, const Rational& c) {
    Poly p;
    if (!c.is_zero()) p.t_[e] = c;
    return p;
}

Poly Poly::var(int i) {
    switch (i) {
        case 1: return monomial(Exponent{1, 0, 0});
        case 2: return monomial(Exponent{0, 1, 0});
        case 3: return monomial(Exponent{0, 0, 1});
        default: throw std::invalid_argument("Poly::var: index must be 1..3");
    }
}

Rational Poly::coeff(const Exponent& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Rational() : it->second;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_)
            r.add_term(Exponent{ea.i1 + eb.i1, ea.i2 + eb.i2, ea.i3 + eb.i3}, ca * cb);
    return r;
}

Poly operator*(const Rational& s, const Poly& p) {
    Poly r;
    if (s.is_zero()) return r;
    for (const auto& [e, c] : p.t_) r.t_[e] = s * c;
    return r;
}

Poly Poly::partial(int var) const {
    Poly r;
    for (const auto& [e, c] : t_) {
        Exponent d = e;
        int exp = 0;
        switch (var) {
            case 1: exp = e.i1; d.i1 -= 1; break;
            case 2: exp = e.i2; d.i2 -= 1; break;
            case 3: exp = e.i3; d.i3 -= 1; break;
            default: throw std::invalid_argument("Poly::partial: index must be 1..3");
        }
        if (exp > 0) r.add_term(d, Rational(exp) * c);
    }
    return r;
}

std::optional<Bigrade> Poly::homogeneous_bigrade() const {
    if (t_.empty()) return std::nullopt;
    Bigrade g{t_.begin()->first.partial(), t_.begin()->first.total()};
    for (const auto& [e, c] : t_) {
        (void)c;
        if (e.partial() != g.k || e.total() != g.r) return std::nullopt;
    }
    return g;
}

bool Poly::is_homogeneous_of(const Bigrade& g) const {
    if (is_zero()) return true;
    auto h = homogeneous_bigrade();
    return h && *h == g;
}

std::map<Bigrade, Poly> Poly::bigrade_split() const {
    std::map<Bigrade, Poly> parts;
    for (const auto& [e, c] : t_) parts[Bigrade{e.partial(), e.total()}].add_term(e, c);
    return parts;
}

const Poly& dprime() {
    static const Poly p = Poly::monomial({2, 0, 0}) + Poly::monomial({0, 2, 0});
    return p;
}

const Poly& dpoly() {
    static const Poly p = dprime() * Poly::var(3);
    return p;
}

namespace {

void require_homogeneous(const Poly& p, const char* op) {
    if (!p.is_zero() && !p.homogeneous_bigrade())
        throw std::invalid_argument(std::string(op) + ": polynomial is not bigrade-homogeneous");
}

}  // namespace

std::optional<Poly> div_by_dprime(const Poly& p) {
    require_homogeneous(p, "div_by_dprime");
    Poly rem = p, q;
    while (!rem.is_zero()) {
        // Largest term in map order has the highest x1 power.
        auto it = std::prev(rem.terms().end());
        const Exponent e = it->first;
        const Rational c = it->second;
        if (e.i1 < 2) break;
        Exponent qe{e.i1 - 2, e.i2, e.i3};
        q.add_term(qe, c);
        rem -= c * (Poly::monomial(qe) * dprime());
    }
    if (!rem.is_zero()) return std::nullopt;
    return q;
}

std::optional<Poly> div_by_x3(const Poly& p) {
    Poly q;
    for (const auto& [e, c] : p.terms()) {
        if (e.i3 < 1) return std::nullopt;
        q.add_term(Exponent{e.i1, e.i2, e.i3 - 1}, c);
    }
    return q;
}

std::optional<Poly> div_by_d(const Poly& p) {
    require_homogeneous(p, "div_by_d");
    auto q3 = div_by_x3(p);
    if (!q3) return std::nullopt;
    return div_by_dprime(*q3);
}

bool dprime_divisible_by_alternating_sums(const Poly& p) {
    require_homogeneous(p, "dprime_divisible_by_alternating_sums");
    // Per x3 stratum: sum_{l even} (-1)^{l/2} c_l = 0 and
    // sum_{l odd} (-1)^{(l-1)/2} c_l = 0, with l the x1 exponent.
    std::map<int, std::pair<Rational, Rational>> sums;
    for (const auto& [e, c] : p.terms()) {
        auto& [even, odd] = sums[e.i3];
        if (e.i1 % 2 == 0)
            even += ((e.i1 / 2) % 2 == 0 ? c : -c);
        else
            odd += (((e.i1 - 1) / 2) % 2 == 0 ? c : -c);
    }
    for (const auto& [stratum, s] : sums) {
        (void)stratum;
        if (!s.first.is_zero() || !s.second.is_zero()) return false;
    }
    return true;
}

Poly apply_linear_field(const Mat3& a, const Poly& p) {
    Poly r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (a[i][j].is_zero()) continue;
            r += a[i][j] * (Poly::var(i + 1) * p.partial(j + 1));
        }
    return r;
}

Poly subs_linear(const Poly& p, const Mat3& m) {
    std::array<Poly, 3> image;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) image[i] += m[i][j] * Poly::var(j + 1);
    }
    Poly r;
    for (const auto& [e, c] : p.terms()) {
        Poly term = Poly::constant(c);
        for (int i = 0; i < e.i1; ++i) term = term * image[0];
        for (int i = 0; i < e.i2; ++i) term = term * image[1];
        for (int i = 0; i < e.i3; ++i) term = term * image[2];
        r += term;
    }
    return r;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const Exponent& e = it->first;
        Rational c = it->second;
        const bool neg = c.sign() < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        c = c.abs();
        std::string vars;
        auto put = [&vars](const char* name, int exp) {
            if (exp == 0) return;
            if (!vars.empty()) vars += "*";
            vars += name;
            if (exp > 1) vars += "^" + std::to_string(exp);
        };
        put("x1", e.i1);
        put("x2", e.i2);
        put("x3", e.i3);
        if (vars.empty()) {
            out += c.str();
        } else {
            if (!c.is_one()) out += c.str() + "*";
            out += vars;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing. Shared grammar for polynomials and frame expressions:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := uint ('/' uint)? | variable | frame-symbol | '(' expr ')'
// Variables: x1 x2 x3 (aliases x y z). Frame symbols: d followed by distinct
// indices from {1,2,3}; index order contributes the permutation sign and the
// symbol is canonicalized to one of d1 d2 d3 d23 d31 d12 d123.
// ---------------------------------------------------------------------------

namespace {

struct FrameValue {
    // Polynomial coefficient per canonical frame symbol; "" is the scalar part.
    std::map<std::string, Poly> parts;

    static FrameValue scalar(Poly p) {
        FrameValue v;
        if (!p.is_zero()) v.parts[""] = std::move(p);
        return v;
    }
    bool pure_scalar() const {
        return parts.empty() || (parts.size() == 1 && parts.begin()->first.empty());
    }
    Poly scalar_part() const {
        auto it = parts.find("");
        return it == parts.end() ? Poly() : it->second;
    }
};

class Parser {
public:
    Parser(const std::string& s, bool allow_frames) : s_(s), frames_(allow_frames) {}

    std::optional<FrameValue> run() {
        auto v = expr();
        skip_ws();
        if (!v || pos_ != s_.size()) return std::nullopt;
        return v;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
    bool frames_;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    std::optional<mpz_class> uint_lit() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) return std::nullopt;
        return mpz_class(s_.substr(start, pos_ - start));
    }

    std::optional<FrameValue> expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        auto acc = term();
        if (!acc) return std::nullopt;
        if (neg) scale(*acc, Rational(-1));
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            auto t = term();
            if (!t) return std::nullopt;
            if (c == '-') scale(*t, Rational(-1));
            merge(*acc, *t);
        }
        return acc;
    }

    std::optional<FrameValue> term() {
        auto acc = factor();
        if (!acc) return std::nullopt;
        while (eat('*')) {
            auto f = factor();
            if (!f) return std::nullopt;
            auto prod = multiply(*acc, *f);
            if (!prod) return std::nullopt;
            acc = std::move(prod);
        }
        return acc;
    }

    std::optional<FrameValue> factor() {
        auto b = base();
        if (!b) return std::nullopt;
        if (eat('^')) {
            auto n = uint_lit();
            if (!n || !b->pure_scalar()) return std::nullopt;
            if (!n->fits_sint_p()) return std::nullopt;
            long e = n->get_si();
            Poly p = Poly::constant(Rational(1));
            for (long i = 0; i < e; ++i) p = p * b->scalar_part();
            return FrameValue::scalar(p);
        }
        return b;
    }

    std::optional<FrameValue> base() {
        skip_ws();
        if (pos_ >= s_.size()) return std::nullopt;
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = uint_lit();
            if (!n) return std::nullopt;
            if (eat('/')) {
                auto d = uint_lit();
                if (!d || *d == 0) return std::nullopt;
                return FrameValue::scalar(Poly::constant(Rational(*n, *d)));
            }
            return FrameValue::scalar(Poly::constant(Rational(*n)));
        }
        if (c == '(') {
            ++pos_;
            auto v = expr();
            if (!v || !eat(')')) return std::nullopt;
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        return std::nullopt;
    }

    std::optional<FrameValue> identifier() {
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        std::string id = s_.substr(start, pos_ - start);
        if (id == "x" || id == "x1") return FrameValue::scalar(Poly::var(1));
        if (id == "y" || id == "x2") return FrameValue::scalar(Poly::var(2));
        if (id == "z" || id == "x3") return FrameValue::scalar(Poly::var(3));
        if (frames_ && id.size() >= 2 && id[0] == 'd') {
            std::vector<int> idx;
            for (std::size_t i = 1; i < id.size(); ++i) {
                if (id[i] < '1' || id[i] > '3') return std::nullopt;
                idx.push_back(id[i] - '0');
            }
            int sign = 1;
            // Bubble sort, tracking the permutation sign.
            for (std::size_t i = 0; i < idx.size(); ++i)
                for (std::size_t j = i + 1; j < idx.size(); ++j) {
                    if (idx[i] == idx[j]) return std::nullopt;
                    if (idx[i] > idx[j]) { std::swap(idx[i], idx[j]); sign = -sign; }
                }
            std::string canon;
            if (idx.size() == 1) canon = "d" + std::to_string(idx[0]);
            else if (idx.size() == 2 && idx[0] == 1 && idx[1] == 2) canon = "d12";
            else if (idx.size() == 2 && idx[0] == 2 && idx[1] == 3) canon = "d23";
            else if (idx.size() == 2 && idx[0] == 1 && idx[1] == 3) { canon = "d31"; sign = -sign; }
            else if (idx.size() == 3) canon = "d123";
            else return std::nullopt;
            FrameValue v;
            v.parts[canon] = Poly::constant(Rational(sign));
            return v;
        }
        return std::nullopt;
    }

    static void scale(FrameValue& v, const Rational& s) {
        for (auto& [sym, p] : v.parts) p = s * p;
    }
    static void merge(FrameValue& a, const FrameValue& b) {
        for (const auto& [sym, p] : b.parts) {
            auto [it, inserted] = a.parts.try_emplace(sym, p);
            if (!inserted) it->second += p;
        }
    }
    static std::optional<FrameValue> multiply(const FrameValue& a, const FrameValue& b) {
        const FrameValue* scalar = a.pure_scalar() ? &a : (b.pure_scalar() ? &b : nullptr);
        const FrameValue* other = (scalar == &a) ? &b : &a;
        if (!scalar) return std::nullopt;  // product of two frame symbols
        FrameValue r;
        Poly s = scalar->scalar_part();
        for (const auto& [sym, p] : other->parts) {
            Poly q = s * p;
            if (!q.is_zero()) r.parts[sym] = std::move(q);
        }
        return r;
    }
};

}  // namespace

std::optional<std::map<std::string, Poly>> parse_frame_expression(const std::string& text) {
    Parser p(text, true);
    auto v = p.run();
    if (!v) return std::nullopt;
    return v->parts;
}

std::optional<Poly> parse_poly(const std::string& text) {
    Parser p(text, false);
    auto v = p.run();
    if (!v) return std::nullopt;
    if (v->parts.empty()) return Poly();
    if (!v->pure_scalar()) return std::nullopt;
    return v->scalar_part();
}

}  // namespace pcoh
