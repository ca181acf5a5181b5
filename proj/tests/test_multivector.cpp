#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pcoh/multivector.hpp"
#include "pcoh/yframe.hpp"
#include "test_util.hpp"

using namespace pcoh;
using testutil::dh2_coeffs;
using testutil::dh7_coeffs;

namespace {

MultiVector x_of(const YFrameCoeffs& c, int which) {
    const auto& y = y_fields();
    switch (which) {
        case 1: return c.c12 * y[1] + (-c.c31) * y[2];
        case 2: return c.c23 * y[2] + (-c.c12) * y[0];
        default: return c.c31 * y[0] + (-c.c23) * y[1];
    }
}

Poly apply_field(const MultiVector& x, const Poly& f) {
    Poly r;
    for (int i = 0; i < 3; ++i) r += x.comp(i) * f.partial(i + 1);
    return r;
}

}  // namespace

TEST_CASE("wedge of the frame fields is D d123") {
    const auto& y = y_fields();
    auto w = wedge(wedge(y[0], y[1]), y[2]);
    CHECK(w == MultiVector::trivector(dpoly()));
    CHECK_THROWS_AS(wedge(w, y[0]), std::invalid_argument);
}

TEST_CASE("schouten base cases") {
    CHECK(schouten(MultiVector::function(Poly::var(1)), MultiVector::function(Poly::var(2)))
              .is_zero());
    const auto& y = y_fields();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(schouten(y[i], y[j]).is_zero());
    // [X, f] = X(f)
    auto f = Poly::monomial({1, 0, 2});
    auto b = schouten(y[0], MultiVector::function(f));
    CHECK(b == MultiVector::function(apply_field(y[0], f)));
    // degree cap
    CHECK_THROWS_AS(schouten(MultiVector(2), MultiVector(3)), std::invalid_argument);
}

TEST_CASE("coboundary of a function matches the fundamental operators") {
    auto rng = testutil::make_rng(101);
    for (int it = 0; it < 25; ++it) {
        YFrameCoeffs c{testutil::random_rational(rng), testutil::random_rational(rng),
                       testutil::random_rational(rng)};
        MultiVector lambda = y_structure(c);
        if (lambda.is_zero()) continue;
        Poly f = testutil::random_poly(rng, 3, 4);
        MultiVector lhs = schouten(lambda, MultiVector::function(f));
        const auto& y = y_fields();
        MultiVector rhs(1);
        for (int i = 1; i <= 3; ++i)
            rhs += wedge(MultiVector::function(apply_field(x_of(c, i), f)), y[i - 1]);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("class-2 tensor matches its coordinate form") {
    // b D' d12 + x3(2b x1 - a x2) d23 + x3(a x1 + 2b x2) d31
    Rational a(3), b(-2);
    MultiVector lambda = y_structure(dh2_coeffs(a, b));
    Poly x1 = Poly::var(1), x2 = Poly::var(2), x3 = Poly::var(3);
    MultiVector expect = MultiVector::bivector(
        x3 * (Rational(2) * b * x1 - a * x2), x3 * (a * x1 + Rational(2) * b * x2), b * dprime());
    CHECK(lambda == expect);
}

TEST_CASE("graded antisymmetry") {
    auto rng = testutil::make_rng(103);
    for (int pa = 0; pa <= 3; ++pa)
        for (int pb = 0; pb + pa <= 4 && pb <= 3; ++pb) {
            auto a = testutil::random_multivector(rng, pa);
            auto b = testutil::random_multivector(rng, pb);
            auto ab = schouten(a, b);
            auto ba = schouten(b, a);
            int sign = ((pa - 1) * (pb - 1)) % 2 == 0 ? -1 : 1;
            CHECK(ab == Rational(sign) * ba);
        }
}

TEST_CASE("graded Leibniz rule") {
    auto rng = testutil::make_rng(107);
    // [a, b ^ c] = [a, b] ^ c + (-1)^{(|a|-1)|b|} b ^ [a, c]
    const int degs[][3] = {{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}, {2, 2, 0}, {0, 1, 2}, {3, 1, 0}};
    for (const auto& d : degs) {
        for (int it = 0; it < 6; ++it) {
            auto a = testutil::random_multivector(rng, d[0], 1);
            auto b = testutil::random_multivector(rng, d[1], 1);
            auto c = testutil::random_multivector(rng, d[2], 1);
            auto lhs = schouten(a, wedge(b, c));
            auto rhs = wedge(schouten(a, b), c);
            int s = ((d[0] - 1) * d[1]) % 2 == 0 ? 1 : -1;
            rhs += Rational(s) * wedge(b, schouten(a, c));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("coboundary squares to zero") {
    auto rng = testutil::make_rng(109);
    for (int it = 0; it < 10; ++it) {
        Rational a = testutil::random_rational(rng), b = testutil::random_nonzero_rational(rng);
        MultiVector lambda = y_structure(dh2_coeffs(a, b));
        for (int d = 0; d <= 3; ++d) {
            auto c = testutil::random_multivector(rng, d);
            auto once = lp_coboundary(lambda, c);
            CHECK(lp_coboundary(lambda, once).is_zero());
        }
    }
}

TEST_CASE("poisson checks") {
    auto rng = testutil::make_rng(113);
    for (int it = 0; it < 5; ++it) {
        Rational a = testutil::random_rational(rng), b = testutil::random_rational(rng);
        CHECK(is_poisson(y_structure(dh2_coeffs(a, b))));
    }
    CHECK(is_poisson(y_structure(dh7_coeffs(Rational(1), Rational(1), Rational(1)))));

    // x1 x3 d12 + x2 x3 d23 fails the Jacobi identity, with self-bracket
    // 2 x1 x3^2 d123.
    MultiVector pi = MultiVector::bivector(Poly::monomial({0, 1, 1}), Poly(),
                                           Poly::monomial({1, 0, 1}));
    CHECK(!is_poisson(pi));
    CHECK(schouten(pi, pi) ==
          MultiVector::trivector(Rational(2) * Poly::monomial({1, 0, 2})));
    CHECK_THROWS_AS(lp_coboundary(pi, MultiVector::function(Poly::var(1))),
                    std::invalid_argument);
}

TEST_CASE("self-bracket equals -2 <sigma, curl sigma> d123") {
    auto rng = testutil::make_rng(127);
    for (int it = 0; it < 40; ++it) {
        auto pi = testutil::random_multivector(rng, 2);
        Poly pairing;
        auto c = curl(pi);
        for (int i = 0; i < 3; ++i) pairing += pi.comp(i) * c.comp(i);
        CHECK(schouten(pi, pi) == MultiVector::trivector(Rational(-2) * pairing));
    }
}

TEST_CASE("coboundary anchors for the class-2 tensor") {
    Rational a(2), b(3);
    auto lambda = y_structure(dh2_coeffs(a, b));
    CHECK(lp_coboundary(lambda, MultiVector::function(Poly::constant(Rational(1)))).is_zero());
    CHECK(lp_coboundary(y_structure(dh2_coeffs(Rational(0), b)),
                        MultiVector::function(dpoly()))
              .is_zero());
    // [lambda, D] = a D (2 Y3 - Y1)
    const auto& y = y_fields();
    auto expect = wedge(MultiVector::function(a * dpoly()),
                        Rational(2) * y[2] + Rational(-1) * y[0]);
    CHECK(lp_coboundary(lambda, MultiVector::function(dpoly())) == expect);
}

TEST_CASE("modular field anchors") {
    auto l11 = y_structure(dh2_coeffs(Rational(1), Rational(1)));
    CHECK(curl(l11) == MultiVector::vector_field(Rational(-1) * Poly::var(1),
                                                 Rational(-1) * Poly::var(2),
                                                 Rational(2) * Poly::var(3)));
    CHECK(curl(y_structure(dh2_coeffs(Rational(0), Rational(7)))).is_zero());
    CHECK(curl(MultiVector::bivector(Poly(), Poly(), Poly::var(3))).is_zero());

    auto rng = testutil::make_rng(131);
    const auto& y = y_fields();
    for (int it = 0; it < 5; ++it) {
        Rational a = testutil::random_rational(rng), b = testutil::random_nonzero_rational(rng);
        auto lambda = y_structure(dh2_coeffs(a, b));
        auto expect = a * (Rational(2) * y[2] + Rational(-1) * y[0]);
        CHECK(curl(lambda) == expect);
        // The modular field is a cocycle.
        CHECK(lp_coboundary(lambda, curl(lambda)).is_zero());
    }
}

TEST_CASE("jacobian structures") {
    Rational b(5);
    CHECK(jacobian_structure(b * dpoly()) == y_structure(dh2_coeffs(Rational(0), b)));
    CHECK(jacobian_structure(Poly::var(3)) ==
          MultiVector::bivector(Poly(), Poly(), Poly::constant(Rational(1))));

    auto rng = testutil::make_rng(137);
    for (int it = 0; it < 5; ++it) {
        Poly h1 = testutil::random_poly(rng, 3, 4), h2 = testutil::random_poly(rng, 3, 4);
        CHECK(jacobian_structure(h1 + h2) ==
              jacobian_structure(h1) + jacobian_structure(h2));
        CHECK(is_poisson(jacobian_structure(h1)));
        CHECK(curl(jacobian_structure(h1)).is_zero());
    }
}

TEST_CASE("degree-3 cochains are closed") {
    auto lambda = y_structure(dh2_coeffs(Rational(1), Rational(1)));
    auto rng = testutil::make_rng(139);
    auto c3 = testutil::random_multivector(rng, 3);
    CHECK(lp_coboundary(lambda, c3).is_zero());
}

TEST_CASE("text round-trip") {
    auto rng = testutil::make_rng(149);
    for (int d = 0; d <= 3; ++d)
        for (int it = 0; it < 10; ++it) {
            auto v = testutil::random_multivector(rng, d);
            auto back = parse_multivector(v.str());
            REQUIRE(back);
            if (v.is_zero()) CHECK(back->is_zero());
            else CHECK(*back == v);
        }
    auto p = parse_multivector("(x1^2 + x2^2)*d12 + x3*d21");
    REQUIRE(p);
    CHECK(p->degree() == 2);
    CHECK(p->comp(2) == dprime() - Poly::var(3));
    // d13 folds into the cyclic slot with a sign flip.
    auto q = parse_multivector("x1*d13");
    REQUIRE(q);
    CHECK(q->comp(1) == Rational(-1) * Poly::var(1));
    CHECK(!parse_multivector("x1*d12 + x2*d1"));  // mixed degrees
    CHECK(!parse_multivector("d12*d23"));
}

TEST_CASE("pushforward respects products and brackets") {
    auto rng = testutil::make_rng(151);
    Mat3 a = mat3_identity();
    a[0][1] = Rational(2);
    a[2][0] = Rational(-1);
    a[1][1] = Rational(3);

    auto u = testutil::random_multivector(rng, 1, 1);
    auto v = testutil::random_multivector(rng, 1, 1);
    CHECK(pushforward(a, wedge(u, v)) == wedge(pushforward(a, u), pushforward(a, v)));
    CHECK(pushforward(a, schouten(u, v)) == schouten(pushforward(a, u), pushforward(a, v)));

    auto w = testutil::random_multivector(rng, 2, 1);
    CHECK(pushforward(a, schouten(u, w)) == schouten(pushforward(a, u), pushforward(a, w)));
    CHECK(pushforward(mat3_identity(), w) == w);
}
