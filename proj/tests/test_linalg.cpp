#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srcot/linalg.hpp"

using namespace srcot;

namespace {

QMatrix mat(int rows, int cols, std::initializer_list<int> entries) {
    QMatrix m(rows, cols);
    auto it = entries.begin();
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = *it++;
    return m;
}

} // namespace

TEST_CASE("rank") {
    CHECK(rank(QMatrix(0, 3)) == 0);
    CHECK(rank(mat(2, 2, {1, 2, 3, 4})) == 2);
    CHECK(rank(mat(2, 2, {1, 2, 2, 4})) == 1);
    CHECK(rank(mat(3, 2, {1, 0, 0, 1, 1, 1})) == 2);
    QMatrix frac(2, 2);
    frac.at(0, 0) = Rational(1, 3);
    frac.at(0, 1) = Rational(2, 3);
    frac.at(1, 0) = Rational(1, 2);
    frac.at(1, 1) = 1;
    CHECK(rank(frac) == 1);
}

TEST_CASE("rank stays exact on entries that overflow doubles") {
    QMatrix m(2, 2);
    BigInt big = 1;
    for (int i = 0; i < 40; ++i) big *= 1000003;
    m.at(0, 0) = Rational(big);
    m.at(0, 1) = Rational(big + 1);
    m.at(1, 0) = Rational(2 * big);
    m.at(1, 1) = Rational(2 * (big + 1));
    CHECK(rank(m) == 1);
    m.at(1, 1) += 1;
    CHECK(rank(m) == 2);
}

TEST_CASE("nullspace") {
    auto z = nullspace(mat(1, 3, {1, 1, 1}));
    REQUIRE(z.size() == 2);
    for (const auto& v : z) CHECK(v[0] + v[1] + v[2] == 0);
    CHECK(nullspace(mat(2, 2, {1, 0, 0, 1})).empty());
    // zero-row matrix: all coordinates free, set to 1 in turn
    auto free = nullspace(QMatrix(0, 2));
    REQUIRE(free.size() == 2);
    CHECK(free[0] == std::vector<Rational>{1, 0});
    CHECK(free[1] == std::vector<Rational>{0, 1});
}

TEST_CASE("solve") {
    auto sol = solve(mat(2, 2, {2, 0, 0, 4}), {6, 8});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 3);
    CHECK((*sol)[1] == 2);
    CHECK(!solve(mat(2, 1, {1, 1}), {1, 2}).has_value());
}

TEST_CASE("matrix operations") {
    QMatrix a = mat(2, 2, {1, 2, 3, 4});
    CHECK(a.transposed().at(0, 1) == 3);
    CHECK(a.hcat(mat(2, 1, {5, 6})).cols() == 3);
    CHECK(a.vcat(mat(1, 2, {5, 6})).rows() == 3);
    CHECK(a.apply({1, 1}) == std::vector<Rational>{3, 7});
    CHECK(a.multiply(mat(2, 1, {1, 0})).at(1, 0) == 3);
    CHECK(!a.is_zero());
    CHECK(QMatrix(3, 3).is_zero());
    QMatrix cols = QMatrix::from_columns({{1, 2}, {3, 4}});
    CHECK(cols.at(0, 1) == 3);
    CHECK(cols.column(1) == std::vector<Rational>{3, 4});
}

TEST_CASE("extend_basis picks representatives modulo a subspace") {
    QMatrix base = QMatrix::from_columns({{1, 0, 0}});
    std::vector<std::vector<Rational>> cands = {
        {2, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
    auto chosen = extend_basis(base, cands);
    REQUIRE(chosen.size() == 2);
    CHECK(chosen[0] == 1);  // first candidate outside the span of base
    CHECK(chosen[1] == 3);
}
