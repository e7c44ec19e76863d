#include "opint/integration.hpp"
#include "opint/trees.hpp"

#include <doctest.h>

#include <set>
#include <thread>

using namespace opint;

namespace {

// The objects p with min(b + p, M) ≥ a, computed directly.
std::set<int> nat_hom_oracle(int m, int a, int b) {
    std::set<int> out;
    for (int p = 0; p <= m; ++p)
        if (std::min(b + p, m) >= a) out.insert(p);
    return out;
}

std::set<int> hom_params(const Integration& ip, int a, int b) {
    std::set<int> out;
    for (auto& c : ip.hom({1, a}, {1, b}).cells) out.insert(c.a.at(0));
    return out;
}

} // namespace

TEST_CASE("nat homs are the sets {p : b + p >= a}") {
    auto p = nat_operad(20);
    Integration ip(p);
    for (int a = 0; a <= 20; a += 3)
        for (int b = 0; b <= 20; b += 4) CHECK(hom_params(ip, a, b) == nat_hom_oracle(20, a, b));

    auto h52 = hom_params(ip, 5, 2);
    CHECK(*h52.begin() == 3);
    CHECK(*h52.rbegin() == 20);
    CHECK(h52.size() == 18);

    auto hc = ip.hom_category({1, 5}, {1, 2});
    auto t = terminal_object(hc);
    REQUIRE(t.has_value());
    CHECK(ip.hom({1, 5}, {1, 2}).cells[static_cast<std::size_t>(t->object)].a.at(0) == 3);

    // The maps 2 → 5 exist: b + p ≥ a holds for every p.
    CHECK(hom_params(ip, 2, 5).size() == 21);
}

TEST_CASE("nat composition adds parameters") {
    auto p = nat_operad(20);
    Integration ip(p);
    for (int x = 0; x <= 20; x += 5)
        for (int y = 0; y <= 20; y += 5)
            for (int z = 0; z <= 20; z += 5)
                for (auto& f : ip.hom({1, x}, {1, y}).cells)
                    for (auto& g : ip.hom({1, y}, {1, z}).cells) {
                        auto gf = ip.h_compose(g, f);
                        CHECK(gf.a.at(0) == std::min(f.a[0] + g.a[0], 20));
                        CHECK_FALSE(ip.one_cell_defect(gf).has_value());
                    }
    auto pick = [&](int a, int b, int param) {
        for (auto& c : ip.hom({1, a}, {1, b}).cells)
            if (c.a[0] == param) return c;
        FAIL("missing cell");
        return ip.identity({1, a});
    };
    auto three = pick(5, 2, 3);
    auto two = pick(2, 0, 2);
    CHECK(ip.h_compose(two, three).a.at(0) == 5);
}

TEST_CASE("identities and units of composition") {
    auto p = tree_operad(3);
    Integration ip(p);
    for (auto& x : ip.zero_cells())
        for (auto& y : ip.zero_cells())
            for (auto& c : ip.hom(x, y).cells) {
                CHECK(ip.h_compose(c, ip.identity(x)) == c);
                CHECK(ip.h_compose(ip.identity(y), c) == c);
                auto id2 = ip.identity2(c);
                CHECK(ip.v_compose(id2, id2) == id2);
            }
}

TEST_CASE("factorization into E then M is unique") {
    for (const auto& p : {nat_operad(4), tree_operad(3), terminal_operad(3)}) {
        CAPTURE(p.name());
        Integration ip(p);
        CHECK(check_factorization(ip).verdict == Verdict::Pass);
        for (auto& x : ip.zero_cells())
            for (auto& y : ip.zero_cells())
                for (auto& c : ip.hom(x, y).cells) {
                    auto [e, m] = ip.factorize(c);
                    CHECK(ip.in_E(e));
                    CHECK(ip.in_M(m));
                    CHECK(ip.h_compose(m, e) == c);
                }
    }
}

TEST_CASE("fibers of a one-cell are the argument objects") {
    auto p = tree_operad(3);
    Integration ip(p);
    for (auto& x : ip.zero_cells())
        for (auto& y : ip.zero_cells())
            for (auto& c : ip.hom(x, y).cells) {
                auto fib = ip.fibers(c);
                auto sizes = c.f.fiber_sizes();
                REQUIRE(fib.size() == sizes.size());
                for (std::size_t i = 0; i < fib.size(); ++i) CHECK(fib[i] == ZeroCell{sizes[i], c.a[i]});
            }
}

TEST_CASE("terminal maps and cartesian lifts have the prescribed ends") {
    auto p = tree_operad(3);
    Integration ip(p);
    for (auto& x : ip.zero_cells()) {
        auto t = ip.terminal_map(x);
        CHECK(t.dst == ZeroCell{1, p.unit()});
        CHECK(t.src == x);
        CHECK(ip.fibers(t) == std::vector<ZeroCell>{x});
    }
    for (auto& g : surjections_up_to(3))
        for (int c = 0; c < p.component(g.cod()).object_count(); ++c) {
            std::vector<ZeroCell> b;
            for (int s : g.fiber_sizes()) b.push_back({s, 0});
            auto l = ip.cartesian_lift(g, {g.cod(), c}, b);
            CHECK(l.dst == ZeroCell{g.cod(), c});
            CHECK(l.src.m == g.dom());
            CHECK(ip.fibers(l) == b);
            CHECK_FALSE(ip.one_cell_defect(l).has_value());
        }
}

TEST_CASE("out of range zero cells are rejected") {
    auto p = nat_operad(3);
    Integration ip(p);
    CHECK_THROWS_AS(ip.zero_id({2, 0}), Error);
    CHECK_THROWS_AS(ip.zero_id({1, 9}), Error);
}

TEST_CASE("hom memoization is thread safe") {
    auto p = tree_operad(3);
    Integration ip(p);
    std::vector<std::size_t> sizes(8);
    std::vector<std::thread> ts;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        ts.emplace_back([&, i] {
            std::size_t total = 0;
            for (auto& x : ip.zero_cells())
                for (auto& y : ip.zero_cells()) total += ip.hom(x, y).cells.size();
            sizes[i] = total;
        });
    for (auto& t : ts) t.join();
    for (auto s : sizes) CHECK(s == sizes[0]);
}

TEST_CASE("materialized integration matches the native homs") {
    auto p = nat_operad(3);
    Integration ip(p);
    auto mi = materialize(ip);
    const auto& cat = mi.fibration.o.cat;
    CHECK(cat.zero_count() == 4);
    for (auto& x : ip.zero_cells())
        for (auto& y : ip.zero_cells())
            CHECK(cat.hom(mi.zero_id(x), mi.zero_id(y)).size() == ip.hom(x, y).cells.size());
    for (auto& r : check_two_category_laws(cat)) CHECK(r.verdict == Verdict::Pass);
}

TEST_CASE("the tree lift is the cut with nothing contracted") {
    auto p = tree_operad(3);
    Integration ip(p);
    const Surjection g(2, {1, 1, 2});
    std::vector<ZeroCell> b{{2, 0}, {1, 0}};
    auto l = ip.cartesian_lift(g, {2, 0}, b);
    CHECK(tree_of(p, 3, l.src.a).str() == "((L,L),L)");
    CHECK(l.alpha == p.component(3).identity(l.src.a));
    CHECK(ip.label(l).find("3->2:[1,1,2]") != std::string::npos);
}
