#include "pcoh/linalg.hpp"

#include <stdexcept>
#include <string>

namespace pcoh {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows, int cols) {
    RatMatrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols)
            throw std::invalid_argument("from_rows: ragged row");
        for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Rational> RatMatrix::row(int i) const {
    std::vector<Rational> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

std::vector<Rational> RatMatrix::col(int j) const {
    std::vector<Rational> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    RatMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

std::vector<Rational> RatMatrix::operator*(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("matrix-vector product: shape mismatch");
    std::vector<Rational> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff: shape mismatch");
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

RatMatrix RatMatrix::operator*(const Rational& s) const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

RatMatrix RatMatrix::vstack(const RatMatrix& top, const RatMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack: column mismatch");
    RatMatrix r(top.rows() + bottom.rows(), top.cols());
    for (int i = 0; i < top.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j) r.at(i, j) = top.at(i, j);
    for (int i = 0; i < bottom.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j) r.at(top.rows() + i, j) = bottom.at(i, j);
    return r;
}

RatMatrix RatMatrix::hstack(const RatMatrix& left, const RatMatrix& right) {
    if (left.rows() != right.rows()) throw std::invalid_argument("hstack: row mismatch");
    RatMatrix r(left.rows(), left.cols() + right.cols());
    for (int i = 0; i < left.rows(); ++i) {
        for (int j = 0; j < left.cols(); ++j) r.at(i, j) = left.at(i, j);
        for (int j = 0; j < right.cols(); ++j) r.at(i, left.cols() + j) = right.at(i, j);
    }
    return r;
}

RatMatrix SubspaceBasis::as_columns() const {
    RatMatrix m(ambient_dim, dim());
    for (int j = 0; j < dim(); ++j) {
        if (static_cast<int>(vectors[j].size()) != ambient_dim)
            throw std::invalid_argument("basis vector length mismatch");
        for (int i = 0; i < ambient_dim; ++i) m.at(i, j) = vectors[j][i];
    }
    return m;
}

RatMatrix SubspaceBasis::as_rows() const {
    RatMatrix m(dim(), ambient_dim);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < ambient_dim; ++j) m.at(i, j) = vectors[i][j];
    return m;
}

RrefResult rank_and_rref(const RatMatrix& m) {
    const int nr = m.rows(), nc = m.cols();

    // Integer working copy: scale each row by the lcm of its denominators.
    std::vector<std::vector<mpz_class>> w(nr, std::vector<mpz_class>(nc));
    for (int i = 0; i < nr; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < nc; ++j) l = lcm(l, m.at(i, j).den());
        for (int j = 0; j < nc; ++j) {
            mpq_class s = m.at(i, j).raw() * l;
            w[i][j] = s.get_num();
        }
    }

    // Fraction-free forward elimination (one-step Bareiss).
    std::vector<int> pivots;
    mpz_class prev = 1;
    int prow = 0;
    for (int pc = 0; pc < nc && prow < nr; ++pc) {
        int sel = -1;
        for (int i = prow; i < nr; ++i)
            if (w[i][pc] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(w[prow], w[sel]);
        const mpz_class piv = w[prow][pc];
        for (int i = prow + 1; i < nr; ++i) {
            for (int j = pc + 1; j < nc; ++j) {
                mpz_class t = w[i][j] * piv - w[i][pc] * w[prow][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                w[i][j] = t;
            }
            w[i][pc] = 0;
        }
        prev = piv;
        pivots.push_back(pc);
        ++prow;
    }
    const int rk = static_cast<int>(pivots.size());

    // Normalize to rational RREF: unit pivots, then eliminate upwards.
    RatMatrix r(nr, nc);
    for (int i = 0; i < rk; ++i) {
        const mpz_class& piv = w[i][pivots[i]];
        for (int j = pivots[i]; j < nc; ++j) r.at(i, j) = Rational(w[i][j], piv);
    }
    for (int i = rk - 1; i >= 0; --i) {
        for (int u = 0; u < i; ++u) {
            const Rational f = r.at(u, pivots[i]);
            if (f.is_zero()) continue;
            for (int j = pivots[i]; j < nc; ++j) r.at(u, j) -= f * r.at(i, j);
        }
    }
    return RrefResult{rk, std::move(r), std::move(pivots)};
}

int rank(const RatMatrix& m) { return rank_and_rref(m).rank; }

SubspaceBasis kernel_basis(const RatMatrix& m) {
    const auto rr = rank_and_rref(m);
    const int nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (int p : rr.pivots) is_pivot[p] = true;

    SubspaceBasis b;
    b.ambient_dim = nc;
    for (int f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(nc);
        v[f] = Rational(1);
        for (int i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = -rr.rref.at(i, f);
        b.vectors.push_back(std::move(v));
    }
    return b;
}

SubspaceBasis image_basis(const RatMatrix& m) {
    const auto rr = rank_and_rref(m);
    SubspaceBasis b;
    b.ambient_dim = m.rows();
    for (int p : rr.pivots) b.vectors.push_back(m.col(p));
    return b;
}

SubspaceBasis quotient_basis(const SubspaceBasis& z, const SubspaceBasis& b) {
    if (b.dim() > 0 && z.ambient_dim != b.ambient_dim)
        throw std::invalid_argument("quotient_basis: ambient dimension mismatch");
    // Containment span(b) <= span(z), reported per offending vector.
    if (z.dim() == 0) {
        for (int j = 0; j < b.dim(); ++j) {
            for (const auto& x : b.vectors[j])
                if (!x.is_zero())
                    throw std::invalid_argument("quotient_basis: vector " + std::to_string(j) +
                                                " of b lies outside span(z)");
        }
        return SubspaceBasis{z.ambient_dim, {}};
    }
    const RatMatrix zc = z.as_columns();
    for (int j = 0; j < b.dim(); ++j) {
        if (!solve(zc, b.vectors[j]))
            throw std::invalid_argument("quotient_basis: vector " + std::to_string(j) +
                                        " of b lies outside span(z)");
    }

    SubspaceBasis reps;
    reps.ambient_dim = z.ambient_dim;
    RatMatrix acc = b.as_rows();
    if (b.dim() == 0) acc = RatMatrix(0, z.ambient_dim);
    int cur = rank(acc);
    for (const auto& v : z.vectors) {
        RatMatrix cand = RatMatrix::vstack(acc, RatMatrix::from_rows({v}, z.ambient_dim));
        int rk = rank(cand);
        if (rk > cur) {
            reps.vectors.push_back(v);
            acc = std::move(cand);
            cur = rk;
        }
        if (cur == z.dim()) break;
    }
    return reps;
}

std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != m.rows())
        throw std::invalid_argument("solve: right-hand side length mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = v[i];
    }
    const auto rr = rank_and_rref(aug);
    for (int p : rr.pivots)
        if (p == m.cols()) return std::nullopt;
    std::vector<Rational> x(m.cols());
    for (int i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.rref.at(i, m.cols());
    return x;
}

bool in_span(const SubspaceBasis& basis, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != basis.ambient_dim)
        throw std::invalid_argument("in_span: length mismatch");
    if (basis.dim() == 0) {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    return solve(basis.as_columns(), v).has_value();
}

std::vector<Rational> char_poly(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: square matrix required");
    const int n = m.rows();
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    if (n == 0) return c;
    RatMatrix mk = m;
    auto trace = [](const RatMatrix& a) {
        Rational t;
        for (int i = 0; i < a.rows(); ++i) t += a.at(i, i);
        return t;
    };
    c[n - 1] = -trace(mk);
    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i < n; ++i) mk.at(i, i) += c[n - k + 1];
        mk = m * mk;
        c[n - k] = -(trace(mk) / Rational(k));
    }
    return c;
}

}  // namespace pcoh
