#include "opint/fincat.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace opint;

namespace {

using Rel = std::vector<std::vector<char>>;

// All partial orders on n labelled elements.
std::vector<Rel> posets(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) pairs.push_back({a, b});
    std::vector<Rel> out;
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
        Rel r(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
        for (int a = 0; a < n; ++a) r[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = 1;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1u) r[static_cast<std::size_t>(pairs[k].first)][static_cast<std::size_t>(pairs[k].second)] = 1;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b) {
                auto ab = r[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                if (a != b && ab && r[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]) ok = false;
                for (int c = 0; c < n && ok; ++c)
                    if (ab && r[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] &&
                        !r[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)])
                        ok = false;
            }
        if (ok) out.push_back(r);
    }
    return out;
}

bool order_isomorphic(const Rel& p, const Rel& q) {
    if (p.size() != q.size()) return false;
    std::vector<int> perm(p.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t a = 0; a < p.size() && ok; ++a)
            for (std::size_t b = 0; b < p.size() && ok; ++b)
                if (p[a][b] != q[static_cast<std::size_t>(perm[a])][static_cast<std::size_t>(perm[b])]) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

FinCat category_of(const Rel& r) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < r.size(); ++i) names.push_back(std::to_string(i));
    return preorder_category(names, [&](int a, int b) { return r[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0; });
}

} // namespace

TEST_CASE("poset counts match the known sequence") {
    CHECK(posets(1).size() == 1);
    CHECK(posets(2).size() == 3);
    CHECK(posets(3).size() == 19);
    CHECK(posets(4).size() == 219);
}

TEST_CASE("preorder, terminal, discrete and product categories validate") {
    for (const auto& r : posets(3)) CHECK(validate_category(category_of(r)).valid());
    CHECK(validate_category(terminal_category()).valid());
    auto d = discrete_category({"a", "b"});
    CHECK(validate_category(d).valid());
    auto chain = category_of(Rel{{1, 1}, {0, 1}});
    const FinCat* fs[] = {&chain, &d, &chain};
    auto p = product(fs);
    CHECK(validate_category(p).valid());
    CHECK(p.object_count() == 8);
    CHECK(p.morphism_count() == 3 * 2 * 3);
}

TEST_CASE("broken tables are reported") {
    FinCat c({"a", "b"}, {"1a", "1b", "f", "g"}, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}, {0, 1}, {});
    auto r = validate_category(c);
    CHECK_FALSE(r.valid());
    CHECK_THROWS_AS(FinCat({"a"}, {"1a"}, {{0, 3}}, {0}, {}), Error);
}

TEST_CASE("categories_isomorphic agrees with poset isomorphism") {
    for (int n = 1; n <= 3; ++n) {
        auto ps = posets(n);
        for (const auto& p : ps)
            for (const auto& q : ps) {
                auto res = categories_isomorphic(category_of(p), category_of(q));
                CHECK((res.status == IsoResult::Status::Found) == order_isomorphic(p, q));
            }
    }
    auto ps = posets(4);
    for (std::size_t i = 0; i < ps.size(); i += 7)
        for (std::size_t j = 0; j < ps.size(); j += 5) {
            auto c = category_of(ps[i]), d = category_of(ps[j]);
            auto res = categories_isomorphic(c, d);
            REQUIRE((res.status == IsoResult::Status::Found) == order_isomorphic(ps[i], ps[j]));
            if (res.status == IsoResult::Status::Found) {
                CHECK_FALSE(functor_defect(c, d, res.forward).has_value());
                CHECK_FALSE(functor_defect(d, c, res.backward).has_value());
            }
        }
}

TEST_CASE("isomorphism search gives up past the object limit") {
    std::vector<std::string> names;
    for (int i = 0; i < 10; ++i) names.push_back(std::to_string(i));
    auto d = discrete_category(names);
    CHECK(categories_isomorphic(d, d, 4).status == IsoResult::Status::TooLarge);
}

TEST_CASE("terminal objects") {
    auto chain = category_of(Rel{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}});
    auto t = terminal_object(chain);
    REQUIRE(t);
    CHECK(t->object == 2);
    CHECK_FALSE(terminal_object(discrete_category({"a", "b"})).has_value());
}

TEST_CASE("functor composition and identities") {
    auto chain = category_of(Rel{{1, 1}, {0, 1}});
    auto id = identity_functor(chain);
    CHECK_FALSE(functor_defect(chain, chain, id).has_value());
    auto twice = compose_functors(id, id);
    CHECK(twice.obj_map == id.obj_map);
    Functor bad{{1, 0}, {0, 0, 0}};
    CHECK(functor_defect(chain, chain, bad).has_value());
}
