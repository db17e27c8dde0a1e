#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "lowdeg/error.hpp"
#include "lowdeg/matrix.hpp"

using namespace lowdeg;
using namespace lowdeg::linalg;

namespace {

// Fraction-free elimination over 128-bit integers; independent of the
// library's field arithmetic.
std::size_t bareiss_rank(std::vector<std::vector<long>> rows) {
    __extension__ typedef __int128 W;
    std::vector<std::vector<W>> a;
    for (auto& r : rows) a.emplace_back(r.begin(), r.end());
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    std::size_t rank = 0;
    W prev = 1;
    for (std::size_t c = 0; c < n && rank < m; ++c) {
        std::size_t piv = rank;
        while (piv < m && a[piv][c] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("prime fields are validated") {
    CHECK(is_prime(2));
    CHECK(is_prime(2147483647));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS_AS(Field::prime(4), DomainError);
    CHECK_THROWS_AS(Field::prime(4294967311LL), DomainError);
    CHECK(Field::prime(7).to_string() == "F_7");
    CHECK(Field::rational().to_string() == "Q");
}

TEST_CASE("rational arithmetic stays in lowest terms") {
    const auto a = Scalar::rational(6, -8);
    CHECK(a.to_string() == "-3/4");
    CHECK((a + Scalar::rational(3, 4)).is_zero());
    CHECK((a * a.inverse()).is_one());
    CHECK((Scalar::rational(1, 3) - Scalar::rational(1, 2)).to_string() == "-1/6");
    CHECK((Scalar::rational(2) / Scalar::rational(4)).to_string() == "1/2");
    CHECK_THROWS_AS(Scalar::rational(0).inverse(), DomainError);
    CHECK_THROWS_AS(Scalar::rational(1, 0), DomainError);
}

TEST_CASE("prime field arithmetic") {
    const auto three = Scalar::modular(3, 7);
    CHECK((three * three.inverse()).is_one());
    CHECK(three.inverse().residue() == 5);
    CHECK((-three).residue() == 4);
    CHECK(Scalar::modular(-1, 7).residue() == 6);
    CHECK((three / Scalar::modular(5, 7)).residue() == 2);
    CHECK(three.to_string() == "3 mod 7");
    CHECK_THROWS_AS(Scalar::modular(0, 7).inverse(), DomainError);
    CHECK_THROWS_AS(Scalar::modular(1, 9), DomainError);
}

TEST_CASE("mixing fields is an error") {
    const auto q = Scalar::rational(1);
    const auto f5 = Scalar::modular(1, 5);
    const auto f7 = Scalar::modular(1, 7);
    CHECK_THROWS_AS(q + f5, FieldMismatchError);
    CHECK_THROWS_AS(f5 * f7, FieldMismatchError);
    CHECK_FALSE(q == f5);
    CHECK_THROWS_AS(q.residue(), DomainError);
    CHECK_THROWS_AS(f5.as_rational(), DomainError);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(11);
    for (std::int64_t p : {2, 3, 5, 101, 2147483647}) {
        const auto f = Field::prime(p);
        for (int t = 0; t < 200; ++t) {
            const auto a = Scalar::from_int(f, testgen::uniform(rng, -1000000, 1000000));
            const auto b = Scalar::from_int(f, testgen::uniform(rng, -1000000, 1000000));
            const auto c = Scalar::from_int(f, testgen::uniform(rng, -1000000, 1000000));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - b) + b == a);
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    }
}

TEST_CASE("rref of a known matrix") {
    const auto f = Field::rational();
    const auto m = Matrix::from_ints(f, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    const auto r = rref(m);
    CHECK(r == Matrix::from_ints(f, {{1, 0, 1}, {0, 1, 1}}));
    CHECK(rank(m) == 2);
    CHECK(pivot_columns(r) == std::vector<std::size_t>{0, 1});
    const auto ns = nullspace(m);
    REQUIRE(ns.rows() == 1);
    CHECK(ns.row_vector(0) == std::vector<Scalar>{Scalar::rational(1), Scalar::rational(1), Scalar::rational(-1)});
}

TEST_CASE("empty and degenerate matrices") {
    const auto f = Field::prime(5);
    const Matrix empty(f, 0, 4);
    CHECK(rank(empty) == 0);
    CHECK(nullspace(empty).rows() == 4);
    const Matrix zeros(f, 3, 4);
    CHECK(rref(zeros).rows() == 0);
    CHECK(nullspace(Matrix::identity(f, 4)).rows() == 0);
    CHECK_THROWS_AS(Matrix::from_rows(std::vector<std::vector<Scalar>>{}), DomainError);
    CHECK_THROWS(Matrix::from_rows(f, 2, {{Scalar::modular(1, 5)}}));
    CHECK_THROWS_AS(Matrix::from_rows(f, 1, {{Scalar::rational(1)}}), FieldMismatchError);
}

TEST_CASE("rank agrees with integer elimination over Q and a large prime") {
    std::mt19937_64 rng(2024);
    const auto q = Field::rational();
    const auto big = Field::prime(2147483647);
    for (int t = 0; t < 300; ++t) {
        const int rows = static_cast<int>(testgen::uniform(rng, 1, 6));
        const int cols = static_cast<int>(testgen::uniform(rng, 1, 6));
        auto ints = testgen::int_rows(rng, rows, cols, -4, 4);
        // Force some dependencies.
        if (rows >= 3 && t % 2 == 0) {
            for (int c = 0; c < cols; ++c) ints[2][c] = ints[0][c] - 2 * ints[1][c];
        }
        const auto expected = bareiss_rank(ints);
        CHECK(rank(Matrix::from_ints(q, ints)) == expected);
        CHECK(rank(Matrix::from_ints(big, ints)) == expected);
    }
}

TEST_CASE("rank-nullity and nullspace annihilation") {
    std::mt19937_64 rng(5);
    for (std::int64_t p : {0, 3, 7}) {
        const auto f = p ? Field::prime(p) : Field::rational();
        for (int t = 0; t < 100; ++t) {
            const int rows = static_cast<int>(testgen::uniform(rng, 1, 5));
            const int cols = static_cast<int>(testgen::uniform(rng, 1, 6));
            const auto m = testgen::int_matrix(f, rng, rows, cols);
            const auto ns = nullspace(m);
            CHECK(rank(m) + ns.rows() == static_cast<std::size_t>(cols));
            CHECK(rref(ns) == ns);
            for (std::size_t i = 0; i < ns.rows(); ++i) {
                for (std::size_t r = 0; r < m.rows(); ++r) CHECK(dot(m.row(r), ns.row(i)).is_zero());
            }
            CHECK(rref(rref(m)) == rref(m));
        }
    }
}
