#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "vdcat/errors.hpp"
#include "vdcat/gendet.hpp"

using namespace vdcat;

namespace {

PosIntMatrix mat(std::vector<std::vector<int>> rows) {
    std::vector<std::vector<BigInt>> out;
    for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
    return PosIntMatrix(out);
}

PosIntMatrix random_matrix(std::mt19937_64& rng, int n, int max_entry) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
    for (auto& r : rows)
        for (int j = 0; j < n; ++j) r.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(max_entry)));
    return mat(rows);
}

}  // namespace

TEST_CASE("determinant examples") {
    CHECK(det_exact(mat({{1, 1}, {2, 4}})) == 2);
    CHECK(det_exact(mat({{1, 1}, {1, 1}})) == 0);
    CHECK(det_exact(mat({{1}})) == 1);
    CHECK(det_exact(mat({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})) == 0);
    CHECK(det_exact(mat({{1, 2}, {1, 1}})) == -1);
    // First pivot vanishes after one step; needs a row swap.
    CHECK(det_exact(mat({{1, 1, 2}, {1, 1, 3}, {2, 3, 1}})) == oracle::cofactor_det(mat({{1, 1, 2}, {1, 1, 3}, {2, 3, 1}}).rows()));
    const BigInt huge("100000000000000000000");
    CHECK(det_exact(PosIntMatrix({{huge, 1}, {1, 1}})) == huge - 1);
}

TEST_CASE("elimination agrees with permutation expansion") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto m = random_matrix(rng, 1 + trial % 5, 9);
        REQUIRE(det_exact(m) == det_by_permutations(m));
        if (m.n() <= 4) REQUIRE(det_exact(m) == oracle::cofactor_det(m.rows()));
    }
    CHECK_THROWS_AS(det_by_permutations(random_matrix(rng, 13, 2)), SizeError);
}

TEST_CASE("vandermonde matrices") {
    const auto v = vandermonde_matrix(ColorVector({1, 2, 3}), SmoothingProfile{{1, 2, 3}});
    CHECK(v == mat({{1, 1, 1}, {2, 4, 8}, {3, 9, 27}}));
    const auto eq = vandermonde_matrix(ColorVector({2, 2}), SmoothingProfile{{1, 2}});
    CHECK(eq == mat({{2, 4}, {2, 4}}));
    CHECK(det_exact(eq) == 0);
    CHECK(det_exact(vandermonde_matrix(ColorVector({1, 2}), SmoothingProfile{{1, 2}})) == 2);
    CHECK_THROWS_AS(vandermonde_matrix(ColorVector({1, 2}), SmoothingProfile{{1}}), PreconditionError);

    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 7;
        std::vector<std::uint32_t> x;
        std::vector<int> s;
        for (int i = 0; i < n; ++i) {
            x.push_back(1 + static_cast<std::uint32_t>(rng() % 12));
            s.push_back(i + 1);
        }
        REQUIRE(det_exact(vandermonde_matrix(ColorVector(x), SmoothingProfile{s})) == oracle::vandermonde_product(x));
    }
}

TEST_CASE("matrix validation and files") {
    CHECK_THROWS_AS(mat({{1, 0}, {1, 1}}), ValidationError);
    CHECK_THROWS_AS(mat({{1, 2}}), ValidationError);
    CHECK_THROWS_AS(mat({}), ValidationError);
    CHECK(parse_matrix(R"({"matrix": [[2, 3], [4, 5]]})") == mat({{2, 3}, {4, 5}}));
    CHECK(parse_matrix(R"({"matrix": [["100000000000000000000"]]})").at(1, 1) == BigInt("100000000000000000000"));
    CHECK_THROWS_AS(parse_matrix("{"), FormatError);
    CHECK_THROWS_AS(parse_matrix(R"({"rows": []})"), FormatError);
    CHECK_THROWS_AS(parse_matrix(R"({"matrix": [[1.5]]})"), FormatError);
    CHECK_THROWS_AS(parse_matrix(R"({"matrix": [[1, -1], [1, 1]]})"), ValidationError);
}

TEST_CASE("matrix complex examples") {
    const auto ones = homology(build_matrix_complex(mat({{1, 1}, {1, 1}})));
    CHECK(ones.cochain_dims == std::vector<std::uint64_t>{1, 1});
    CHECK(*ones.homology_dims == std::vector<std::uint64_t>{0, 0});
    CHECK(ones.euler_characteristic == 0);

    const auto m = homology(build_matrix_complex(mat({{2, 3}, {4, 5}})));
    CHECK(m.cochain_dims == std::vector<std::uint64_t>{10, 12});
    CHECK(m.euler_characteristic == -2);
    CHECK(*m.homology_euler_characteristic == -2);

    const auto v = homology(build_matrix_complex(mat({{1, 1}, {2, 4}})));
    CHECK(v.euler_characteristic == 2);
    CHECK(verify_euler(torus_two_n(2), ColorVector({1, 2})).euler_characteristic == v.euler_characteristic);

    CHECK_THROWS_AS(build_matrix_complex(mat({{2, 3}, {4, 5}}), 21), SizeError);
}

TEST_CASE("matrix complex differentials by direct evaluation") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const auto m = random_matrix(rng, 3, 3);
        const auto c = build_matrix_complex(m);
        const auto& poset = c.poset();
        for (int k = 0; k < c.top_level(); ++k) {
            const auto dense = oracle::from(c.differential(k));
            auto expected = oracle::zeros(dense.size(), dense.empty() ? 0 : dense[0].size());
            for (std::size_t b : poset.level(k)) {
                for (std::size_t t : poset.up(b)) {
                    const auto& p = poset.element(b);
                    const auto& q = poset.element(t);
                    for (std::uint64_t local = 0; local < c.block_size(b); ++local) {
                        auto digits = c.digits(b, local);
                        for (int i = 1; i <= 3; ++i)
                            if (p.at(i) != q.at(i)) digits[static_cast<std::size_t>(i - 1)] = 0;
                        expected[c.block_offset(t) + c.local_index(t, digits)][c.block_offset(b) + local] ^= 1;
                    }
                }
            }
            REQUIRE(dense == expected);
        }
    }
}

TEST_CASE("matrix complexes categorify the determinant") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        const auto m = random_matrix(rng, 1 + trial % 4, 4);
        const auto c = build_matrix_complex(m);
        REQUIRE(d_squared_vanishes(c));
        const auto r = homology(c);
        REQUIRE(r.euler_characteristic == det_exact(m));
        REQUIRE(*r.homology_euler_characteristic == det_exact(m));
    }
}
