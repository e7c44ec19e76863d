#include "opint/operad.hpp"
#include "opint/trees.hpp"

#include <doctest.h>

#include <algorithm>

using namespace opint;

namespace {

// Operad morphisms nat(M) → nat(M): monotone F with F(0) = 0 that commutes
// with saturated addition.
std::size_t brute_nat_endomorphisms(int m) {
    std::size_t count = 0;
    std::vector<int> f(static_cast<std::size_t>(m + 1), 0);
    while (true) {
        bool ok = f[0] == 0;
        for (int a = 0; a <= m && ok; ++a)
            for (int b = 0; b <= m && ok; ++b) {
                auto fa = f[static_cast<std::size_t>(a)], fb = f[static_cast<std::size_t>(b)];
                if (a >= b && fa < fb) ok = false;
                if (f[static_cast<std::size_t>(std::min(a + b, m))] != std::min(fa + fb, m)) ok = false;
            }
        if (ok) ++count;
        int k = m;
        while (k >= 0 && f[static_cast<std::size_t>(k)] == m) f[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) break;
        ++f[static_cast<std::size_t>(k)];
    }
    return count;
}

} // namespace

TEST_CASE("nat composition is saturated addition") {
    auto p = nat_operad(8);
    auto id = Surjection::identity(1);
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= 8; ++b) {
            std::vector<int> args{a, b};
            CHECK(p.mu_obj(id, args) == std::min(a + b, 8));
        }
    // Three-way sums agree with both bracketings.
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= 8; ++b)
            for (int c = 0; c <= 8; ++c) {
                std::vector<int> ab{a, b}, bc{b, c};
                std::vector<int> l{p.mu_obj(id, ab), c}, r{a, p.mu_obj(id, bc)};
                CHECK(p.mu_obj(id, l) == std::min(a + b + c, 8));
                CHECK(p.mu_obj(id, r) == std::min(a + b + c, 8));
            }
}

TEST_CASE("axiom suite passes on the builtin operads") {
    for (const auto& p : {nat_operad(5), nat_operad(8), terminal_operad(3), tree_operad(3), tree_operad(4)}) {
        CAPTURE(p.name());
        auto rs = validate_operad(p);
        for (const auto& r : rs) {
            CAPTURE(r.summary());
            CHECK(r.verdict == Verdict::Pass);
        }
    }
}

TEST_CASE("a planted defect breaks associativity, serial and parallel alike") {
    auto p = nat_operad(5);
    std::vector<int> args{1, 2};
    p.set_mu_obj(Surjection::identity(1), args, 0);
    auto ser = check_associativity(p, {default_cap(), Exec::Serial});
    auto par = check_associativity(p, {default_cap(), Exec::Parallel});
    CHECK(ser.verdict == Verdict::Fail);
    CHECK(par.verdict == Verdict::Fail);
    CHECK(ser.counterexample == par.counterexample);
}

TEST_CASE("a wrong unit breaks unitality") {
    auto bad = nat_operad(4);
    bad.set_unit(1);
    CHECK(check_unitality(bad).verdict == Verdict::Fail);
    auto trees = tree_operad(3);
    CHECK(check_unitality(trees).verdict == Verdict::Pass);
}

TEST_CASE("serial and parallel checks agree on valid operads") {
    auto p = tree_operad(4);
    for (auto fn : {check_associativity, check_unitality, check_functoriality}) {
        auto a = fn(p, {default_cap(), Exec::Serial});
        auto b = fn(p, {default_cap(), Exec::Parallel});
        CHECK(a.verdict == b.verdict);
        CHECK(a.instances == b.instances);
    }
}

TEST_CASE("small caps are reported as capped, never as pass") {
    auto r = check_associativity(tree_operad(4), {10, Exec::Parallel});
    CHECK(r.verdict != Verdict::Pass);
}

TEST_CASE("truncation is enforced") {
    auto p = nat_operad(3);
    CHECK_THROWS_AS(p.mu(Surjection(1, {1, 1})), Error);
    CHECK_FALSE(p.has_mu(Surjection(1, {1, 1})));
}

TEST_CASE("operad morphisms nat(3) to nat(3) match brute force") {
    auto p = nat_operad(3);
    auto ms = enumerate_operad_morphisms(p, p);
    CHECK(ms.size() == brute_nat_endomorphisms(3));
    CHECK(ms.size() == 4);
    for (const auto& m : ms) CHECK(validate_operad_morphism(p, p, m).verdict == Verdict::Pass);
    auto id = identity_morphism(p);
    CHECK(validate_operad_morphism(p, p, id).verdict == Verdict::Pass);
    auto twice = compose_morphisms(ms.back(), ms.back());
    CHECK(validate_operad_morphism(p, p, twice).verdict == Verdict::Pass);
}

TEST_CASE("every operad maps to the terminal one") {
    auto p = tree_operad(3);
    auto t = terminal_operad(3);
    CHECK(validate_operad_morphism(p, t, to_terminal(p, t)).verdict == Verdict::Pass);
    CHECK(enumerate_operad_morphisms(p, t).size() == 1);
}

TEST_CASE("tuple encoding is mixed radix, first digit most significant") {
    std::vector<int> radix{3, 4, 2}, digits{2, 1, 1};
    CHECK(encode_tuple(digits, radix) == 2 * 8 + 1 * 2 + 1);
    std::vector<int> back;
    decode_tuple(encode_tuple(digits, radix), radix, back);
    CHECK(back == digits);
}
