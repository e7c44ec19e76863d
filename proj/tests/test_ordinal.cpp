#include "opint/ordinal.hpp"

#include <doctest.h>

#include <algorithm>

using namespace opint;

namespace {

// Every weakly increasing onto map m → n, by brute force over all functions.
std::vector<std::vector<int>> brute_surjections(int m, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(static_cast<std::size_t>(m), 1);
    while (true) {
        bool mono = std::is_sorted(v.begin(), v.end());
        bool onto = true;
        for (int i = 1; i <= n; ++i) onto = onto && std::count(v.begin(), v.end(), i) > 0;
        if (mono && onto) out.push_back(v);
        int k = m - 1;
        while (k >= 0 && v[static_cast<std::size_t>(k)] == n) v[static_cast<std::size_t>(k--)] = 1;
        if (k < 0) break;
        ++v[static_cast<std::size_t>(k)];
    }
    return out;
}

} // namespace

TEST_CASE("surjections validate their values") {
    CHECK_NOTHROW(Surjection(2, {1, 1, 2}));
    CHECK_THROWS_AS(Surjection(2, {2, 1}), Error);
    CHECK_THROWS_AS(Surjection(3, {1, 1, 2}), Error);
    CHECK_THROWS_AS(Surjection(1, {}), Error);
}

TEST_CASE("text form round trips") {
    Surjection g(2, {1, 1, 2});
    CHECK(g.str() == "3->2:[1,1,2]");
    CHECK(Surjection::parse(g.str()) == g);
    CHECK_THROWS_AS(Surjection::parse("3->2:[1,2"), Error);
    CHECK_THROWS_AS(Surjection::parse("nonsense"), Error);
}

TEST_CASE("enumeration agrees with brute force") {
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= m; ++n) {
            auto fast = enumerate_surjections(m, n);
            auto slow = brute_surjections(m, n);
            REQUIRE(fast.size() == slow.size());
            for (std::size_t i = 0; i < fast.size(); ++i)
                CHECK(std::vector<int>(fast[i].values().begin(), fast[i].values().end()) == slow[i]);
        }
}

TEST_CASE("composition is pointwise") {
    for (const auto& f : surjections_up_to(5))
        for (const auto& g : surjections_up_to(5)) {
            if (f.cod() != g.dom()) continue;
            auto gf = compose(f, g);
            for (int i = 1; i <= f.dom(); ++i) CHECK(gf(i) == g(f(i)));
        }
    CHECK_THROWS_AS(compose(Surjection::identity(2), Surjection::identity(3)), Error);
}

TEST_CASE("induced maps reassemble into the original map") {
    for (const auto& f : surjections_up_to(5))
        for (int n = 1; n <= f.cod(); ++n)
            for (const auto& g : enumerate_surjections(f.cod(), n)) {
                std::vector<Surjection> parts;
                for (int i = 1; i <= n; ++i) {
                    auto fi = induced_map(f, g, i);
                    // f^i sends the j-th element of (gf)^{-1}(i) to the position
                    // of its image inside g^{-1}(i).
                    auto src = preimage(compose(f, g), i);
                    auto dst = preimage(g, i);
                    for (int j = 1; j <= fi.dom(); ++j)
                        CHECK(dst.embedding[static_cast<std::size_t>(fi(j) - 1)] == f(src.embedding[static_cast<std::size_t>(j - 1)]));
                    parts.push_back(fi);
                }
                CHECK(reconstruct_triangle(g, compose(f, g), parts) == f);
            }
}

TEST_CASE("ordinal sum shifts and concatenates") {
    std::vector<Surjection> parts{Surjection(1, {1, 1}), Surjection(1, {1})};
    CHECK(ordinal_sum(parts) == Surjection(2, {1, 1, 2}));
}

TEST_CASE("block cut concatenates back") {
    Surjection g(3, {1, 1, 2, 3, 3});
    std::vector<int> seq{10, 20, 30, 40, 50};
    auto blocks = block_cut(seq, g);
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0] == std::vector<int>{10, 20});
    CHECK(blocks[2] == std::vector<int>{40, 50});
    std::vector<int> joined;
    for (auto& b : blocks) joined.insert(joined.end(), b.begin(), b.end());
    CHECK(joined == seq);
    CHECK_THROWS_AS(block_cut(std::vector<int>{1}, g), Error);
}

TEST_CASE("fiber sizes and special maps") {
    CHECK(Surjection(2, {1, 1, 2}).fiber_sizes() == std::vector<int>{2, 1});
    CHECK(Surjection::bang(4).fiber_sizes() == std::vector<int>{4});
    CHECK(Surjection::identity(3).is_identity());
    CHECK(Surjection(2, {1, 1, 2}).key() != Surjection(2, {1, 2, 2}).key());
}
