#include <doctest.h>

#include <fstream>
#include <numeric>
#include <set>
#include <tuple>

#include <json.hpp>

#include "utsforge/enumeration.hpp"
#include "utsforge/errors.hpp"

using namespace utsforge;

TEST_SUITE("enumeration") {

TEST_CASE("cantor pairing") {
    CHECK(cantor_pair(0, 0) == 0);
    CHECK(cantor_pair(1, 0) == 1);
    CHECK(cantor_pair(0, 1) == 2);
    CHECK(cantor_pair(2, 0) == 3);
    for (std::uint64_t z = 0; z < 20000; ++z) {
        const auto [x, y] = cantor_unpair(z);
        REQUIRE(cantor_pair(x, y) == z);
    }
    for (std::uint64_t z : {std::uint64_t{1} << 40, (std::uint64_t{1} << 62) + 12345, ~std::uint64_t{0}}) {
        const auto [x, y] = cantor_unpair(z);
        CHECK(cantor_pair(x, y) == z);
    }
    CHECK_THROWS_AS(cantor_pair(std::uint64_t{1} << 40, std::uint64_t{1} << 40), PreconditionError);
}

TEST_CASE("calkin-wilf and signed rationals") {
    const Rational cw[] = {{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 2}, {2, 3}, {3, 1}, {1, 4}};
    for (std::uint64_t k = 1; k <= 8; ++k) CHECK(calkin_wilf(k) == cw[k - 1]);
    CHECK_THROWS_AS(calkin_wilf(0), PreconditionError);

    CHECK(rational_at(0) == Rational{0, 1});
    CHECK(rational_at(1) == Rational{1, 1});
    CHECK(rational_at(2) == Rational{-1, 1});
    CHECK(rational_at(3) == Rational{1, 2});
    CHECK(rational_at(4) == Rational{-1, 2});

    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (std::uint64_t i = 0; i < 50000; ++i) {
        const auto r = rational_at(i);
        REQUIRE(r.q >= 1);
        REQUIRE(std::gcd(r.p, r.q) == (r.p == 0 ? r.q : 1));
        REQUIRE(seen.insert({r.p, r.q}).second);
    }
}

TEST_CASE("first polynomials match the reference decoder") {
    std::ifstream in(UTSFORGE_FIXTURE_DIR "/enumeration_j0_10.json");
    REQUIRE(in.good());
    const auto rows = nlohmann::json::parse(in);
    REQUIRE(rows.size() == 11);
    for (const auto& row : rows) {
        const auto j = row["j"].get<std::uint64_t>();
        const auto got = enumerate_polynomial_exact(j);
        const auto& want = row["coefficients"];
        CAPTURE(j);
        REQUIRE(got.size() == want.size());
        for (std::size_t k = 0; k < got.size(); ++k) {
            CHECK(got[k].re.p == want[k][0][0].get<std::int64_t>());
            CHECK(got[k].re.q == want[k][0][1].get<std::int64_t>());
            CHECK(got[k].im.p == want[k][1][0].get<std::int64_t>());
            CHECK(got[k].im.q == want[k][1][1].get<std::int64_t>());
        }
    }
    CHECK(enumerate_polynomials(0).coefficients.empty());
    CHECK(enumerate_polynomials(1) == ComplexPolynomial({1.0}));
    CHECK(enumerate_polynomials(2) == ComplexPolynomial({0.0, 1.0}));
    CHECK(enumerate_polynomials(3) == ComplexPolynomial({Complex{0, 1}}));
}

TEST_CASE("injective on the first ten thousand indices") {
    std::set<std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>>> seen;
    for (std::uint64_t j = 0; j <= 10000; ++j) {
        const auto p = enumerate_polynomial_exact(j);
        std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>> key;
        for (const auto& c : p) key.emplace_back(c.re.p, c.re.q, c.im.p, c.im.q);
        if (j > 0) REQUIRE_FALSE(p.back().is_zero());
        REQUIRE(seen.insert(key).second);
    }
}

}  // TEST_SUITE
