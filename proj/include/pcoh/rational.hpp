#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace pcoh {

/// Exact rational scalar. Wraps GMP's mpq_class and keeps every value
/// canonical: reduced, positive denominator, zero stored as 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den) : v_(num, den) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) { v_.canonicalize(); }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational inv() const { return Rational(1) / *this; }

    /// Renders as "num" or "num/den".
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_str();
    }

    /// Parses "num", "-num", or "num/den" with an exact integer numerator and
    /// positive integer denominator. Returns nullopt on malformed input.
    static std::optional<Rational> parse(std::string_view s);

private:
    mpq_class v_;
};

inline std::optional<Rational> Rational::parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    auto is_int = [](std::string_view t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(s)) return std::nullopt;
        return Rational(mpz_class{std::string(s)});
    }
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    mpz_class d{std::string(den)};
    if (d == 0) return std::nullopt;
    return Rational(mpz_class{std::string(num)}, d);
}

}  // namespace pcoh
