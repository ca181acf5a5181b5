#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pcoh/structures.hpp"
#include "test_util.hpp"

using namespace pcoh;

namespace {

StructureParams dh2(long a, long b) {
    return StructureParams{Family::DH2, Rational(a), Rational(b), Rational(0), std::nullopt};
}

StructureParams dh7(long a, long b, long c) {
    return StructureParams{Family::DH7, Rational(a), Rational(b), Rational(c), std::nullopt};
}

}  // namespace

TEST_CASE("preset tensors") {
    // dh2(1,1) = (x1^2+x2^2) d12 + x3(2x1 - x2) d23 + x3(x1 + 2x2) d31
    auto t = build_structure(dh2(1, 1));
    Poly x1 = Poly::var(1), x2 = Poly::var(2), x3 = Poly::var(3);
    CHECK(t == MultiVector::bivector(x3 * (Rational(2) * x1 - x2), x3 * (x1 + Rational(2) * x2),
                                     dprime()));
    CHECK(is_poisson(t));

    // dh7 at c = 0 coincides with dh2, exactly.
    auto rng = testutil::make_rng(401);
    for (int it = 0; it < 8; ++it) {
        Rational a = testutil::random_rational(rng), b = testutil::random_rational(rng);
        StructureParams p2{Family::DH2, a, b, Rational(0), std::nullopt};
        StructureParams p7{Family::DH7, a, b, Rational(0), std::nullopt};
        CHECK(build_structure(p2) == build_structure(p7));
    }

    // The exact member of the family is induced by b D.
    for (long b : {1L, -3L}) CHECK(build_structure(dh2(0, b)) == jacobian_structure(Rational(b) * dpoly()));

    CHECK(is_poisson(build_structure(dh7(1, 1, 1))));
    CHECK(is_poisson(build_structure(dh7(0, -1, 4))));
}

TEST_CASE("admissibility extraction") {
    auto t = build_structure(dh7(2, 3, -5));
    auto c = admissible_coeffs(t);
    REQUIRE(c);
    CHECK(c->c23 == Rational(2) * Rational(3) + Rational(-5));
    CHECK(c->c31 == Rational(2));
    CHECK(c->c12 == Rational(3));

    // A Poisson tensor that is not an admissible combination.
    CHECK(!admissible_coeffs(jacobian_structure(Poly::monomial({3, 0, 0}))));
    // Not quadratic at all.
    CHECK(!admissible_coeffs(MultiVector::bivector(Poly::var(1), Poly(), Poly())));
}

TEST_CASE("regime classification") {
    CHECK(classify_regime(dh7(1, 1, 1)).tag == RegimeTag::ANonzero);
    CHECK(classify_regime(dh7(0, 0, 1)).tag == RegimeTag::A0B0);
    CHECK(classify_regime(dh7(0, 1, -2)).tag == RegimeTag::A02BpC0);

    auto neg = classify_regime(dh7(0, -1, 4));
    CHECK(neg.tag == RegimeTag::A0RatioNeg);
    CHECK(neg.beta == -1);
    CHECK(neg.gamma == 4);

    auto neg2 = classify_regime(dh7(0, -1, 3));
    CHECK(neg2.tag == RegimeTag::A0RatioNeg);
    CHECK(neg2.beta == -1);
    CHECK(neg2.gamma == 3);

    auto pos = classify_regime(dh7(0, 1, 1));
    CHECK(pos.tag == RegimeTag::A0RatioPos);
    CHECK(pos.beta == 1);
    CHECK(pos.gamma == 1);

    // Positive-numerator normalization.
    auto posn = classify_regime(dh7(0, -1, -1));
    CHECK(posn.tag == RegimeTag::A0RatioPos);
    CHECK(posn.beta == 1);
    CHECK(posn.gamma == 1);

    // dh2 maps to the a != 0 regime or the c = 0 limit of the positive one.
    CHECK(classify_regime(dh2(1, 1)).tag == RegimeTag::ANonzero);
    auto d2 = classify_regime(dh2(0, 5));
    CHECK(d2.tag == RegimeTag::A0RatioPos);
    CHECK(d2.beta == 1);
    CHECK(d2.gamma == 0);

    CHECK_THROWS_AS(classify_regime(dh7(0, 0, 0)), std::domain_error);
    CHECK_THROWS_AS(
        classify_regime(StructureParams{Family::Custom, {}, {}, {}, MultiVector(2)}),
        std::domain_error);
}

TEST_CASE("expected dimensions, class 2, a nonzero") {
    auto p = dh2(1, 1);
    for (int r = 0; r <= 12; ++r)
        for (int k = 0; k <= r; ++k)
            for (int d = 0; d <= 3; ++d) {
                Bigrade g{k, r};
                int want = 0;
                if (g == Bigrade{2, 3}) want = d == 0 ? 1 : (d == 1 ? 3 : (d == 2 ? 3 : 1));
                if (d == 3 && g == Bigrade{0, 0}) want = 1;
                CHECK(expected_dim(p, d, g) == want);
            }
}

TEST_CASE("expected dimensions, class 2, a = 0") {
    auto p = dh2(0, 1);
    auto is_cas = [](const Bigrade& g) {
        return g.k >= 2 && g.k % 2 == 0 && 3 * g.k == 2 * g.r;
    };
    for (int r = 0; r <= 12; ++r)
        for (int k = 0; k <= r; ++k) {
            Bigrade g{k, r};
            int want0 = is_cas(g) ? 1 : 0;
            int want1 = is_cas(g) ? 3 : 0;
            int want2 = is_cas(g) ? 3 : 0;
            int want3 = is_cas(g) ? 1 : 0;
            if (k == g.r && k >= 1) { want2 += 2; want3 += 2; }
            if (k == 0 && r >= 1) want2 += 1;
            if (k == 0) want3 += 1;
            CHECK(expected_dim(p, 0, g) == want0);
            CHECK(expected_dim(p, 1, g) == want1);
            CHECK(expected_dim(p, 2, g) == want2);
            CHECK(expected_dim(p, 3, g) == want3);
        }
}

TEST_CASE("expected dimensions, class 7 spot checks") {
    // a = 0, 2b + c = 0: one extra class next to d3 at (2,2).
    CHECK(expected_dim(dh7(0, 1, -2), 1, Bigrade{2, 2}) == 1);
    CHECK(expected_dim(dh7(0, 1, -2), 2, Bigrade{2, 2}) == 2);
    CHECK(expected_dim(dh7(0, 1, -2), 3, Bigrade{2, 2}) == 1);
    // Casimirs x3^m put classes at (2, r) for every r >= 3.
    for (int r = 3; r <= 9; ++r) {
        CHECK(expected_dim(dh7(0, 1, -2), 0, Bigrade{2, r}) == 1);
        CHECK(expected_dim(dh7(0, 1, -2), 1, Bigrade{2, r}) == 3);
    }
    // b = 0: Casimirs are powers of D', at (2m+2, 2m+3).
    CHECK(expected_dim(dh7(0, 0, 1), 0, Bigrade{2, 3}) == 1);
    CHECK(expected_dim(dh7(0, 0, 1), 0, Bigrade{4, 5}) == 1);
    CHECK(expected_dim(dh7(0, 0, 1), 0, Bigrade{6, 7}) == 1);
    CHECK(expected_dim(dh7(0, 0, 1), 0, Bigrade{4, 6}) == 0);
    // Ratio < 0 with the gamma family: extras at (4,4).
    CHECK(expected_dim(dh7(0, -1, 4), 1, Bigrade{4, 4}) == 1);
    CHECK(expected_dim(dh7(0, -1, 4), 2, Bigrade{4, 4}) == 2);
    CHECK(expected_dim(dh7(0, -1, 4), 3, Bigrade{4, 4}) == 1);
    // The "otherwise" branch carries no extras.
    CHECK(expected_dim(dh7(0, -1, 3), 1, Bigrade{3, 3}) == 0);
    CHECK(expected_dim(dh7(0, -1, 3), 2, Bigrade{3, 3}) == 0);
    // Ratio > 0: next Casimir beyond the constants sits at (8, 11).
    CHECK(expected_dim(dh7(0, 1, 1), 0, Bigrade{2, 3}) == 1);
    CHECK(expected_dim(dh7(0, 1, 1), 0, Bigrade{8, 11}) == 1);
    for (int r = 4; r <= 10; ++r) CHECK(expected_dim(dh7(0, 1, 1), 0, Bigrade{2, r}) == 0);
    // Singular families shared by every a = 0 regime.
    for (auto p : {dh7(0, 0, 1), dh7(0, 1, -2), dh7(0, -1, 4), dh7(0, 1, 1)}) {
        for (int r = 1; r <= 8; ++r) CHECK(expected_dim(p, 2, Bigrade{0, r}) == 1);
        for (int r = 0; r <= 8; ++r) CHECK(expected_dim(p, 3, Bigrade{0, r}) == 1);
    }
    // The a != 0 regime keeps only the constant singular class.
    CHECK(expected_dim(dh7(1, 1, 1), 3, Bigrade{0, 0}) == 1);
    for (int r = 1; r <= 8; ++r) {
        CHECK(expected_dim(dh7(1, 1, 1), 2, Bigrade{0, r}) == 0);
        CHECK(expected_dim(dh7(1, 1, 1), 3, Bigrade{0, r}) == 0);
    }
}

TEST_CASE("expected generators are valid real cocycle data") {
    for (auto p : {dh2(1, 1), dh2(0, 1), dh7(0, 1, -2), dh7(0, -1, 4), dh7(0, 0, 1)}) {
        auto classes = expected_r_classes(p, 8);
        for (const auto& [key, gens] : classes) {
            for (const auto& gen : gens) {
                CHECK(gen.valid());
                CHECK(gen.degree == key.first);
                CHECK(gen.grade == key.second);
                CHECK(from_y_frame(gen));  // every generator is a real cochain
            }
        }
    }
}

TEST_CASE("theorem tables reject unsupported parameters") {
    CHECK_THROWS_AS(expected_dim(dh2(1, 0), 0, Bigrade{2, 3}), std::domain_error);
    CHECK_THROWS_AS(expected_dim(dh7(0, 0, 0), 0, Bigrade{2, 3}), std::domain_error);
    StructureParams cust{Family::Custom, {}, {}, {}, MultiVector(2)};
    CHECK_THROWS_AS(expected_dim(cust, 0, Bigrade{2, 3}), std::domain_error);
}

TEST_CASE("potential and supplementary tables, class 2") {
    auto pnz = dh2(1, 1);
    CHECK(expected_dim_p(pnz, 2, Bigrade{1, 1}) == 2);
    CHECK(expected_dim_p(pnz, 2, Bigrade{2, 3}) == 3);
    CHECK(expected_dim_p(pnz, 3, Bigrade{0, 0}) == 1);
    CHECK(expected_dim_p(pnz, 3, Bigrade{0, 1}) == 0);
    CHECK(expected_dim_s(pnz, 2, Bigrade{1, 1}) == 2);
    CHECK(expected_dim_s(pnz, 1, Bigrade{3, 3}) == 0);

    auto p0 = dh2(0, 1);
    CHECK(expected_dim_p(p0, 2, Bigrade{0, 5}) == 1);
    CHECK(expected_dim_p(p0, 3, Bigrade{0, 5}) == 1);
    CHECK(expected_dim_p(p0, 0, Bigrade{4, 6}) == 1);
    CHECK(expected_dim_s(p0, 1, Bigrade{4, 4}) == 2);
    CHECK(expected_dim_s(p0, 1, Bigrade{1, 1}) == 0);
    CHECK(expected_dim_s(p0, 2, Bigrade{3, 3}) == 2);
}

TEST_CASE("computed cohomology equals the tables, moderate sweep") {
    for (auto p : {dh2(1, 1), dh2(0, 1)}) {
        StructureCx s(yframe_coeffs(p));
        for (int r = 0; r <= 6; ++r)
            for (int k = 0; k <= r; ++k)
                for (int d = 0; d <= 3; ++d) {
                    Bigrade g{k, r};
                    INFO("d=", d, " k=", k, " r=", r);
                    CHECK(slice_cohomology(s, Cx::R, d, g).dim == expected_dim(p, d, g));
                    CHECK(slice_cohomology(s, Cx::P, d, g).dim == expected_dim_p(p, d, g));
                    CHECK(slice_cohomology(s, Cx::S, d, g).dim == expected_dim_s(p, d, g));
                }
    }
}
