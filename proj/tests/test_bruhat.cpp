#include "doctest.h"
#include "oracles.hpp"
#include "vdcat/bruhat.hpp"
#include "vdcat/errors.hpp"

using namespace vdcat;

namespace {

std::vector<std::string> names(const std::vector<Permutation>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

}  // namespace

TEST_CASE("permutation validation and parsing") {
    CHECK(Permutation::parse("213") == Permutation({2, 1, 3}));
    CHECK(Permutation::parse("2,1,3") == Permutation({2, 1, 3}));
    CHECK_THROWS_AS(Permutation({1, 1, 3}), ValidationError);
    CHECK_THROWS_AS(Permutation({0, 1, 2}), ValidationError);
    CHECK_THROWS_AS(Permutation({1, 2, 4}), ValidationError);
    CHECK(Permutation::identity(4).to_string() == "1234");
    CHECK(Permutation::parse("213").swapped(1, 3) == Permutation::parse("312"));
}

TEST_CASE("inversions and sign") {
    CHECK(inversions(Permutation::parse("123")) == 0);
    CHECK(inversions(Permutation::parse("213")) == 1);
    CHECK(inversions(Permutation::parse("321")) == 3);
    for (int n = 1; n <= 6; ++n) {
        for (const auto& p : oracle::all_permutations(n)) {
            const Permutation q(p);
            REQUIRE(inversions(q) == oracle::count_inversions(p));
            REQUIRE(sign(q) == (oracle::count_inversions(p) % 2 ? -1 : 1));
        }
    }
}

TEST_CASE("lex rank enumerates in order") {
    for (int n = 1; n <= 5; ++n) {
        std::size_t expected = 0;
        for (const auto& p : oracle::all_permutations(n)) REQUIRE(lex_rank(Permutation(p)) == expected++);
    }
}

TEST_CASE("covers of small permutations") {
    CHECK(names(covers(Permutation::parse("213"))) == std::vector<std::string>{"231", "312"});
    CHECK(covers(Permutation::parse("321")).empty());
    CHECK(names(covers(Permutation::parse("123"))) == std::vector<std::string>{"132", "213"});
}

TEST_CASE("interchange criterion matches brute force") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& p : oracle::all_permutations(n)) {
            std::vector<std::vector<int>> got;
            for (const auto& c : covers(Permutation(p))) got.emplace_back(c.entries().begin(), c.entries().end());
            REQUIRE(got == oracle::brute_covers(p));
        }
    }
}

TEST_CASE("build_bruhat shapes") {
    const auto p1 = build_bruhat(1);
    CHECK(p1.size() == 1);
    CHECK(p1.cover_edges().empty());

    const auto p3 = build_bruhat(3);
    CHECK(p3.level_sizes() == std::vector<std::size_t>{1, 2, 2, 1});
    CHECK(p3.cover_edges().size() == 8);

    CHECK(build_bruhat(4).level_sizes() == std::vector<std::size_t>{1, 3, 5, 6, 5, 3, 1});

    CHECK_THROWS_AS(build_bruhat(0), ValidationError);
    CHECK_THROWS_AS(build_bruhat(7), SizeError);
    try {
        build_bruhat(7);
    } catch (const SizeError& e) {
        CHECK(std::string(e.what()).find('6') != std::string::npos);
    }
    CHECK(build_bruhat(7, 7).size() == 5040);
}

TEST_CASE("poset structure is consistent") {
    for (int n = 1; n <= 5; ++n) {
        const auto poset = build_bruhat(n);
        std::size_t total = 0;
        const auto sizes = poset.level_sizes();
        for (std::size_t k = 0; k < sizes.size(); ++k) {
            total += sizes[k];
            CHECK(sizes[k] == sizes[sizes.size() - 1 - k]);
        }
        CHECK(total == oracle::all_permutations(n).size());
        CHECK(sizes == mahonian_numbers(n));

        std::size_t edges = 0;
        for (std::size_t id = 0; id < poset.size(); ++id) {
            REQUIRE(poset.id_of(poset.element(id)) == id);
            REQUIRE(poset.rank_of(id) == inversions(poset.element(id)));
            REQUIRE(poset.level(poset.rank_of(id))[poset.index_in_level(id)] == id);
            const auto cs = covers(poset.element(id));
            REQUIRE(poset.up(id).size() == cs.size());
            for (std::size_t i = 0; i < cs.size(); ++i) {
                const std::size_t t = poset.up(id)[i];
                REQUIRE(poset.element(t) == cs[i]);
                REQUIRE(poset.rank_of(t) == poset.rank_of(id) + 1);
                const auto& down = poset.down(t);
                REQUIRE(std::find(down.begin(), down.end(), id) != down.end());
            }
            edges += cs.size();
        }
        CHECK(poset.cover_edges().size() == edges);
        for (const auto& e : poset.cover_edges()) CHECK(poset.rank_of(e.top) == poset.rank_of(e.bottom) + 1);
    }
}

TEST_CASE("mahonian numbers") {
    CHECK(mahonian_numbers(1) == std::vector<std::uint64_t>{1});
    CHECK(mahonian_numbers(3) == std::vector<std::uint64_t>{1, 2, 2, 1});
    CHECK(mahonian_numbers(4) == std::vector<std::uint64_t>{1, 3, 5, 6, 5, 3, 1});
}

TEST_CASE("length-two intervals") {
    const auto poset = build_bruhat(3);
    CHECK(names(length2_middles(poset, Permutation::parse("123"), Permutation::parse("231"))) ==
          std::vector<std::string>{"132", "213"});
    CHECK(names(length2_middles(poset, Permutation::parse("123"), Permutation::parse("312"))) ==
          std::vector<std::string>{"132", "213"});
    CHECK(length2_middles(poset, Permutation::parse("132"), Permutation::parse("321")).size() == 2);
    CHECK_THROWS_AS(length2_middles(poset, Permutation::parse("123"), Permutation::parse("321")), PreconditionError);
    CHECK_THROWS_AS(length2_middles(poset, Permutation::parse("123"), Permutation::parse("213")), PreconditionError);
}

TEST_CASE("every length-two interval is a diamond") {
    for (int n = 2; n <= 5; ++n) {
        const auto poset = build_bruhat(n);
        for (std::size_t b = 0; b < poset.size(); ++b) {
            for (std::size_t t : poset.level(poset.rank_of(b) + 2 <= poset.max_rank() ? poset.rank_of(b) + 2 : 0)) {
                if (poset.rank_of(t) != poset.rank_of(b) + 2) continue;
                // Oracle: middles by exhaustive search over the middle level.
                std::size_t middles = 0;
                for (std::size_t m : poset.level(poset.rank_of(b) + 1)) {
                    const auto& up_b = poset.up(b);
                    const auto& up_m = poset.up(m);
                    middles += std::find(up_b.begin(), up_b.end(), m) != up_b.end() &&
                               std::find(up_m.begin(), up_m.end(), t) != up_m.end();
                }
                if (middles == 0) continue;  // not comparable
                REQUIRE(middles == 2);
                REQUIRE(length2_middles(poset, poset.element(b), poset.element(t)).size() == 2);
            }
        }
    }
}
