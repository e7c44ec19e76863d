#include "opint/equivalence.hpp"
#include "opint/trees.hpp"

#include <doctest.h>

#include <numeric>

using namespace opint;

TEST_CASE("operad round trip") {
    for (const auto& p : {nat_operad(3), tree_operad(2), tree_operad(3), terminal_operad(3)}) {
        CAPTURE(p.name());
        auto cert = roundtrip_operad(p);
        CHECK(cert.ok);
        CHECK_FALSE(cert.failure.has_value());
        CHECK(cert.per_arity_iso.size() == static_cast<std::size_t>(p.bound()));
        CHECK(cert.mu_checked > 0);
    }
}

TEST_CASE("the extracted operad is an operad") {
    auto p = tree_operad(3);
    Integration ip(p);
    auto mi = materialize(ip);
    auto ex = extract_operad(mi.fibration);
    for (auto& r : validate_operad(ex.operad)) CHECK(r.verdict == Verdict::Pass);
    for (int n = 1; n <= 3; ++n)
        CHECK(ex.operad.component(n).object_count() == p.component(n).object_count());
}

TEST_CASE("two-category round trip, also after relabeling 0-cells") {
    auto p = nat_operad(3);
    Integration ip(p);
    auto mi = materialize(ip);
    auto cert = roundtrip_2cat(mi.fibration);
    CHECK(cert.ok);
    std::vector<int> perm(static_cast<std::size_t>(mi.fibration.o.cat.zero_count()));
    std::iota(perm.rbegin(), perm.rend(), 0);
    auto shuffled = relabel_zero_cells(mi.fibration, perm);
    auto again = roundtrip_2cat(shuffled);
    CHECK(again.ok);
    CHECK_FALSE(again.failure.has_value());
}

TEST_CASE("integration is functorial on morphisms") {
    auto p = nat_operad(3);
    Integration ip(p);
    auto mi = materialize(ip);
    auto ms = enumerate_operad_morphisms(p, p);
    for (auto& f : ms) {
        auto iF = integrate_morphism(mi, mi, f);
        CHECK_FALSE(two_functor_defect(mi.fibration.o.cat, mi.fibration.o.cat, iF).has_value());
        CHECK_FALSE(operadic_functor_defect(mi.fibration, mi.fibration, iF).has_value());
        for (auto& g : ms) {
            auto lhs = integrate_morphism(mi, mi, compose_morphisms(f, g));
            auto rhs = compose_two_functors(iF, integrate_morphism(mi, mi, g));
            CHECK(lhs.map0 == rhs.map0);
            CHECK(lhs.map1 == rhs.map1);
            CHECK(lhs.map2 == rhs.map2);
        }
    }
    auto id = integrate_morphism(mi, mi, identity_morphism(p));
    std::vector<int> ids(id.map1.size());
    std::iota(ids.begin(), ids.end(), 0);
    CHECK(id.map1 == ids);
}

TEST_CASE("integration is fully faithful on small operads") {
    auto n2 = check_full_faithfulness(nat_operad(2), nat_operad(2));
    CHECK(n2.bijective);
    CHECK(n2.operad_morphisms == n2.operadic_functors);
    auto t2 = check_full_faithfulness(tree_operad(2), tree_operad(2));
    CHECK(t2.bijective);
    auto to_term = check_full_faithfulness(nat_operad(2), terminal_operad(1));
    CHECK(to_term.bijective);
    CHECK(to_term.operad_morphisms == 1);
}
