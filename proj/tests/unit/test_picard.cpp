#include <doctest.h>

#include "lowdeg/error.hpp"
#include "lowdeg/picard.hpp"

using namespace lowdeg;
using namespace lowdeg::picard;

namespace {

// Bilinear form from its Gram matrix in the basis (H, F).
Int gram_pair(SurfaceClass x, SurfaceClass y) {
    const Int g[2][2] = {{1, 1}, {1, 0}};
    const Int u[2] = {x.a, x.b};
    const Int v[2] = {y.a, y.b};
    Int total = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) total += u[i] * g[i][j] * v[j];
    return total;
}

}  // namespace

TEST_CASE("pairing table") {
    CHECK(pair(kH, kH) == 1);
    CHECK(pair(kH, kF) == 1);
    CHECK(pair(kF, kH) == 1);
    CHECK(pair(kF, kF) == 0);
    CHECK(canonical_class() == SurfaceClass{-2, 1});
    // K^2 = 0 on the symmetric square of an elliptic curve.
    CHECK(pair(canonical_class(), canonical_class()) == 0);
}

TEST_CASE("pairing is the Gram form and symmetric") {
    for (Int a = -12; a <= 12; ++a)
        for (Int b = -12; b <= 12; ++b)
            for (Int c = -4; c <= 4; ++c)
                for (Int e = -4; e <= 4; ++e) {
                    const SurfaceClass x{a, b}, y{c, e};
                    CHECK(pair(x, y) == gram_pair(x, y));
                    CHECK(pair(x, y) == pair(y, x));
                }
    CHECK_THROWS_AS(pair({Int{1} << 31, 0}, kH), DomainError);
}

TEST_CASE("cone boundary") {
    CHECK(is_effective(kH));
    CHECK(is_effective(kF));
    CHECK(is_effective({2, -1}));   // boundary ray a + 2b = 0
    CHECK(is_effective({0, 0}));
    CHECK_FALSE(is_effective({1, -1}));
    CHECK_FALSE(is_effective({-1, 3}));
    CHECK(is_nef({2, -1}) == is_effective({2, -1}));
}

TEST_CASE("adjunction genus") {
    CHECK(adjunction_genus(kH) == 1);   // a copy of the elliptic curve
    CHECK(adjunction_genus(kF) == 0);   // fibers of the addition map are rational
    CHECK(adjunction_genus({2, 0}) == 2);
    for (Int a = -50; a <= 50; ++a)
        for (Int b = -50; b <= 50; ++b) {
            const SurfaceClass c{a, b};
            const Int twice = gram_pair(c, c) + gram_pair(c, {-2, 1});
            CHECK(twice % 2 == 0);
            CHECK(adjunction_genus(c) == 1 + (a - 1) * (a + 2 * b) / 2);
        }
}

TEST_CASE("Debarre-Fahlaoui classes") {
    const DFParams p(4, 1);
    CHECK(df_class(p) == SurfaceClass{5, -1});
    CHECK(df_genus(p) == 7);
    CHECK(is_effective(df_class(p)));
    CHECK(df_gonality_guard(p));
    CHECK(df_very_ample_certified(p));
    CHECK(df_genus(DFParams(3, 1)) == 4);
    CHECK_FALSE(df_gonality_guard(DFParams(4, 2)));
    CHECK_FALSE(df_very_ample_certified(DFParams(5, 2)));
    CHECK(df_genus(DFParams(6, 6)) == 1);

    for (Int d = 2; d <= 40; ++d)
        for (Int m = 1; m <= d; ++m) {
            const DFParams q(d, m);
            CHECK(pair(df_class(q), kH) == d);
            CHECK(df_genus(q) == 1 + d * (d - 1) / 2 - m * (m - 1) / 2);
        }

    CHECK_THROWS_AS(DFParams(1, 1), DomainError);
    CHECK_THROWS_AS(DFParams(4, 0), DomainError);
    CHECK_THROWS_AS(DFParams(4, 5), DomainError);
    CHECK_THROWS_AS(DFParams(Int{1} << 30, 1), DomainError);
}

TEST_CASE("class arithmetic") {
    CHECK(kH + kF == SurfaceClass{1, 1});
    CHECK(3 * kH - 2 * kF == SurfaceClass{3, -2});
    CHECK(SurfaceClass{5, -1}.to_string() == "(5, -1)");
}
