#include "opint/trees.hpp"

#include <doctest.h>

#include <algorithm>
#include <deque>
#include <set>

using namespace opint;

namespace {

// Reduced planar trees with n leaves are the laminar families of proper
// intervals of length at least two. Counted by subset enumeration.
std::size_t brute_tree_count(int n) {
    std::vector<std::pair<int, int>> iv;
    for (int lo = 1; lo <= n; ++lo)
        for (int hi = lo + 1; hi <= n; ++hi)
            if (!(lo == 1 && hi == n)) iv.emplace_back(lo, hi);
    std::size_t count = 0;
    for (std::uint32_t mask = 0; mask < (1u << iv.size()); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < iv.size() && ok; ++i)
            for (std::size_t j = i + 1; j < iv.size() && ok; ++j) {
                if (!((mask >> i) & 1) || !((mask >> j) & 1)) continue;
                auto [a, b] = iv[i];
                auto [c, d] = iv[j];
                const bool disjoint = b < c || d < a;
                const bool nested = (a <= c && d <= b) || (c <= a && b <= d);
                ok = disjoint || nested;
            }
        count += ok;
    }
    return count;
}

// Grafting as text substitution of the leaves of c.
std::string graft_text(const PlanarTree& c, const std::vector<PlanarTree>& b) {
    const auto s = c.str();
    std::string out;
    std::size_t leaf = 0;
    for (char ch : s) {
        if (ch == 'L') out += b[leaf++].str();
        else out += ch;
    }
    return out;
}

std::set<std::string> reachable_by_contraction(const PlanarTree& s) {
    std::set<std::string> seen{s.str()};
    std::deque<PlanarTree> q{s};
    while (!q.empty()) {
        auto t = q.front();
        q.pop_front();
        for (auto& u : single_contractions(t))
            if (seen.insert(u.str()).second) q.push_back(u);
    }
    return seen;
}

} // namespace

TEST_CASE("tree counts agree with laminar families") {
    const std::size_t expected[] = {1, 1, 3, 11, 45};
    for (int n = 1; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(enumerate_trees(n).size() == brute_tree_count(n));
        CHECK(brute_tree_count(n) == expected[n - 1]);
    }
}

TEST_CASE("enumeration is duplicate free and starts with the corolla") {
    for (int n = 2; n <= 5; ++n) {
        auto ts = enumerate_trees(n);
        CHECK(ts.front() == PlanarTree::corolla(n));
        std::set<std::string> names;
        for (auto& t : ts) {
            CHECK(t.leaves() == n);
            names.insert(t.str());
        }
        CHECK(names.size() == ts.size());
    }
}

TEST_CASE("text form round trips and rejects unary vertices") {
    for (auto& t : enumerate_trees(4)) CHECK(PlanarTree::parse(t.str()) == t);
    CHECK(PlanarTree::parse("L").is_leaf());
    CHECK_THROWS_AS(PlanarTree::parse("(L)"), Error);
    CHECK_THROWS_AS(PlanarTree::parse("(L,L"), Error);
    CHECK_THROWS_AS(PlanarTree::node({PlanarTree::leaf()}), Error);
}

TEST_CASE("contraction agrees with breadth first search over single contractions") {
    for (int n = 1; n <= 5; ++n) {
        auto ts = enumerate_trees(n);
        for (auto& s : ts) {
            auto reach = reachable_by_contraction(s);
            for (auto& t : ts) CHECK(contracts_to(s, t) == (reach.count(t.str()) == 1));
            CHECK(contracts_to(s, PlanarTree::corolla(n)));
        }
    }
}

TEST_CASE("grafting substitutes leaves") {
    for (int n = 1; n <= 3; ++n)
        for (int k = n; k <= 4; ++k)
            for (auto& g : enumerate_surjections(k, n)) {
                auto sizes = g.fiber_sizes();
                for (auto& c : enumerate_trees(n)) {
                    std::vector<PlanarTree> b;
                    for (int s : sizes) b.push_back(enumerate_trees(s).back());
                    auto t = graft(c, g, b);
                    CHECK(t.leaves() == k);
                    CHECK(t.str() == graft_text(c, b));
                }
            }
}

TEST_CASE("tree operad composition is grafting") {
    auto p = tree_operad(4);
    for (const auto& mu : p.mus()) {
        const auto& g = mu.g;
        std::vector<int> args(mu.arities.size());
        std::vector<int> radix = mu.obj_radix;
        std::size_t total = 1;
        for (int r : radix) total *= static_cast<std::size_t>(r);
        for (std::size_t code = 0; code < total; ++code) {
            decode_tuple(code, radix, args);
            std::vector<PlanarTree> b;
            for (std::size_t i = 1; i < args.size(); ++i) b.push_back(tree_of(p, mu.arities[i], args[i]));
            auto expect = graft_text(tree_of(p, g.cod(), args[0]), b);
            CHECK(tree_of(p, g.dom(), p.mu_obj(g, args)).str() == expect);
        }
    }
}

TEST_CASE("the corolla is terminal in each component") {
    auto p = tree_operad(4);
    for (int n = 1; n <= 4; ++n) {
        auto t = terminal_object(p.component(n));
        REQUIRE(t.has_value());
        CHECK(tree_of(p, n, t->object) == PlanarTree::corolla(n));
    }
}

TEST_CASE("grafting a binary tree on the first leaf of a binary tree") {
    auto c2 = PlanarTree::corolla(2);
    std::vector<PlanarTree> b{c2, PlanarTree::leaf()};
    auto t = graft(c2, Surjection(2, {1, 1, 2}), b);
    CHECK(t.str() == "((L,L),L)");
    auto p = tree_operad(3);
    std::vector<int> args{0, 0, 0};
    CHECK(tree_of(p, 3, p.mu_obj(Surjection(2, {1, 1, 2}), args)).str() == "((L,L),L)");
}
