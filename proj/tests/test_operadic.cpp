#include "opint/integration.hpp"
#include "opint/trees.hpp"

#include <doctest.h>

using namespace opint;

namespace {

const CheckReport& named(const std::vector<CheckReport>& rs, const std::string& name) {
    for (auto& r : rs)
        if (r.name == name) return r;
    FAIL("no report named " << name);
    return rs.front();
}

} // namespace

TEST_CASE("the simplex category is operadic and split") {
    auto d = delta_s(4);
    const auto& o = d.o;
    CHECK(o.cat.zero_count() == 4);
    for (auto& r : check_two_category_laws(o.cat)) CHECK(r.verdict == Verdict::Pass);
    for (auto& r : check_operadic_axioms(o)) {
        CAPTURE(r.summary());
        CHECK(r.verdict == Verdict::Pass);
    }
    CHECK(check_lifts(d).verdict == Verdict::Pass);
    CHECK(check_splitting(d).verdict == Verdict::Pass);
}

TEST_CASE("a wrong cardinality is caught") {
    auto d = delta_s(3);
    d.o.card0[2] = 1;
    CHECK(named(check_operadic_axioms(d.o), "cardinality functor").verdict == Verdict::Fail);
}

TEST_CASE("a wrong fiber is caught") {
    auto p = nat_operad(3);
    Integration ip(p);
    auto mi = materialize(ip);
    auto& o = mi.fibration.o;
    for (std::size_t c = 0; c < o.fib0.size(); ++c)
        if (!o.cat.one_label(static_cast<int>(c)).empty() && o.fib0[c][0] != 0) {
            o.fib0[c][0] = 0;
            break;
        }
    auto rs = check_operadic_axioms(o);
    CHECK(combine(rs) == Verdict::Fail);
}

TEST_CASE("operadic axioms on small integrations") {
    for (const auto& p : {nat_operad(3), tree_operad(2), terminal_operad(3)}) {
        CAPTURE(p.name());
        Integration ip(p);
        auto mi = materialize(ip);
        auto rs = check_operadic_axioms(mi.fibration.o);
        for (auto& name : {"cardinality functor", "fibers preserve cardinality", "fiber functors",
                           "unit cardinality", "identity fibers", "epsilon fibers", "fiber axiom on objects",
                           "fiber axiom on morphisms", "lali-terminal objects"})
            CHECK(named(rs, name).verdict == Verdict::Pass);
        CHECK(check_lifts(mi.fibration).verdict == Verdict::Pass);
        CHECK(check_splitting(mi.fibration).verdict == Verdict::Pass);
    }
}

TEST_CASE("terminal maps out of non-unit objects have non-unit fibers") {
    // [!; b; α]: [1, c] → [1, e] has fiber [1, b], which differs from the
    // domain [1, c] whenever b ≠ c.
    auto p = nat_operad(3);
    Integration ip(p);
    auto mi = materialize(ip);
    auto rs = check_operadic_axioms(mi.fibration.o);
    CHECK(named(rs, "fiber over a unit is the domain functor").verdict == Verdict::Fail);
    auto t = terminal_operad(2);
    Integration it(t);
    auto mt = materialize(it);
    CHECK(named(check_operadic_axioms(mt.fibration.o), "fiber over a unit is the domain functor").verdict ==
          Verdict::Pass);
}

TEST_CASE("trivial one-cells are those with unit arguments over an identity") {
    auto p = tree_operad(3);
    Integration ip(p);
    auto mi = materialize(ip);
    const auto& o = mi.fibration.o;
    for (int c = 0; c < o.cat.one_count(); ++c) {
        const auto& cell = mi.ones[static_cast<std::size_t>(c)];
        const bool expect = cell.f.is_identity() &&
                            std::all_of(cell.a.begin(), cell.a.end(), [&](int a) { return a == p.unit(); });
        auto r = is_trivial(o, c);
        if (!cell.f.is_identity()) CHECK(r.verdict == Triviality::CardinalityMismatch);
        else CHECK((r.verdict == Triviality::Trivial) == expect);
    }
    for (auto& r : check_trivial_lemmas(o)) CHECK(r.verdict == Verdict::Pass);
}

TEST_CASE("lifts are operadic cartesian") {
    auto p = tree_operad(3);
    Integration ip(p);
    auto mi = materialize(ip);
    const auto& s = mi.fibration;
    for (auto& [key, cell] : s.lifts) CHECK(is_operadic_cartesian(s.o, cell).verdict == Verdict::Pass);
    CHECK_THROWS_AS(s.lift(Surjection::identity(1), 0, {99}), Error);
}

TEST_CASE("a perturbed lift is caught") {
    auto p = nat_operad(3);
    Integration ip(p);
    auto mi = materialize(ip);
    auto s = mi.fibration;
    auto it = s.lifts.begin();
    std::advance(it, 2);
    const int good = it->second;
    for (int c : s.o.cat.hom(s.o.cat.one(good).src, s.o.cat.one(good).dst))
        if (c != good) {
            it->second = c;
            break;
        }
    REQUIRE(it->second != good);
    CHECK(check_lifts(s).verdict == Verdict::Fail);
    CHECK(is_operadic_cartesian(s.o, it->second).verdict == Verdict::Fail);
}

TEST_CASE("serial and parallel axiom checks agree") {
    auto p = tree_operad(2);
    Integration ip(p);
    auto mi = materialize(ip);
    auto a = check_operadic_axioms(mi.fibration.o, {default_cap(), Exec::Serial});
    auto b = check_operadic_axioms(mi.fibration.o, {default_cap(), Exec::Parallel});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].verdict == b[i].verdict);
        CHECK(a[i].counterexample == b[i].counterexample);
    }
}
