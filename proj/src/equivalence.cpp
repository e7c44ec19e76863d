#include "opint/equivalence.hpp"

#include <algorithm>
#include <set>

namespace opint {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

bool is_permutation_of(const std::vector<int>& v, int n) {
    if (static_cast<int>(v.size()) != n) return false;
    std::vector<char> seen(sz(n), 0);
    for (int x : v) {
        if (x < 0 || x >= n || seen[sz(x)]) return false;
        seen[sz(x)] = 1;
    }
    return true;
}

// Number of μ entries on which the per-arity maps commute; the first
// mismatch is reported.
std::size_t check_mu(const TruncatedOperad& p, const TruncatedOperad& q, const std::vector<ArityIso>& iso,
                     std::optional<std::string>& failure) {
    std::size_t checked = 0;
    std::vector<int> digits, mapped;
    for (const auto& t : p.mus()) {
        const auto& g = t.g;
        const int k = g.dom();
        for (int pass = 0; pass < 2; ++pass) {
            const bool objects = pass == 0;
            const auto& radix = objects ? t.obj_radix : t.mor_radix;
            const auto& table = objects ? t.obj : t.mor;
            for (std::size_t code = 0; code < table.size(); ++code) {
                decode_tuple(code, radix, digits);
                mapped.resize(digits.size());
                for (std::size_t j = 0; j < digits.size(); ++j) {
                    const auto& m = iso[sz(t.arities[j] - 1)];
                    mapped[j] = (objects ? m.obj_map : m.mor_map)[sz(digits[j])];
                }
                const auto& m = iso[sz(k - 1)];
                const int lhs = (objects ? m.obj_map : m.mor_map)[sz(table[code])];
                const int rhs = objects ? q.mu_obj(g, mapped) : q.mu_mor(g, mapped);
                ++checked;
                if (lhs != rhs) {
                    failure = std::string("mu along ") + g.str() + " does not commute on " + (objects ? "objects" : "morphisms") +
                              " at entry " + std::to_string(code);
                    return checked;
                }
            }
        }
    }
    return checked;
}

} // namespace

std::optional<std::string> verify_operad_certificate(const TruncatedOperad& p, const TruncatedOperad& q,
                                                     const OperadCertificate& cert) {
    if (p.bound() != q.bound()) return "bounds differ";
    if (cert.per_arity_iso.size() != sz(p.bound())) return "certificate has the wrong number of arities";
    for (const auto& a : cert.per_arity_iso) {
        if (a.n < 1 || a.n > p.bound()) return "certificate arity out of range";
        const auto& c = p.component(a.n);
        const auto& d = q.component(a.n);
        if (!is_permutation_of(a.obj_map, d.object_count()) || a.obj_map.size() != sz(c.object_count()))
            return "object map in arity " + std::to_string(a.n) + " is not a bijection";
        if (!is_permutation_of(a.mor_map, d.morphism_count()) || a.mor_map.size() != sz(c.morphism_count()))
            return "morphism map in arity " + std::to_string(a.n) + " is not a bijection";
        if (auto e = functor_defect(c, d, Functor{a.obj_map, a.mor_map}))
            return "arity " + std::to_string(a.n) + ": " + *e;
    }
    if (cert.per_arity_iso[0].obj_map[sz(p.unit())] != q.unit()) return "unit is not preserved";
    std::optional<std::string> failure;
    check_mu(p, q, cert.per_arity_iso, failure);
    return failure;
}

OperadCertificate roundtrip_operad(const TruncatedOperad& p) {
    OperadCertificate cert;
    Integration ip(p);
    auto mi = materialize(ip);
    auto ex = extract_operad(mi.fibration, p.name() + "'");
    const auto& q = ex.operad;
    if (q.bound() != p.bound()) {
        cert.failure = "extracted operad has bound " + std::to_string(q.bound());
        return cert;
    }
    for (int n = 1; n <= p.bound(); ++n) {
        const auto& c = p.component(n);
        const auto& d = q.component(n);
        ArityIso a{n, {}, {}};
        std::map<int, int> obj_of_zero, mor_of_one;
        for (std::size_t i = 0; i < ex.objects[sz(n - 1)].size(); ++i) obj_of_zero[ex.objects[sz(n - 1)][i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < ex.morphisms[sz(n - 1)].size(); ++i) mor_of_one[ex.morphisms[sz(n - 1)][i]] = static_cast<int>(i);
        for (int x = 0; x < c.object_count(); ++x) a.obj_map.push_back(obj_of_zero.at(mi.zero_id({n, x})));
        for (int m = 0; m < c.morphism_count(); ++m) {
            const auto& ar = c.arrow(m);
            OneCell cell{{n, ar.dst}, {n, ar.src}, Surjection::identity(n), std::vector<int>(sz(n), p.unit()), m};
            auto it = mor_of_one.find(mi.one_id(cell));
            if (it == mor_of_one.end()) {
                cert.failure = "the 1-cell " + ip.label(cell) + " is not trivial";
                return cert;
            }
            a.mor_map.push_back(it->second);
        }
        auto iso = categories_isomorphic(c, d);
        if (iso.status != IsoResult::Status::Found) {
            cert.failure = "arity " + std::to_string(n) + ": no isomorphism found by search";
            return cert;
        }
        cert.per_arity_iso.push_back(std::move(a));
    }
    cert.failure = verify_operad_certificate(p, q, cert);
    if (!cert.failure) cert.mu_checked = check_mu(p, q, cert.per_arity_iso, cert.failure);
    cert.ok = !cert.failure;
    return cert;
}

TwoCatCertificate roundtrip_2cat(const SplitFibration& s) {
    TwoCatCertificate cert;
    const auto& o = s.o;
    const auto& c = o.cat;
    auto ex = extract_operad(s);
    const auto& q = ex.operad;
    Integration ip(q);
    auto mi = materialize(ip);
    auto& f = cert.map;

    for (const auto& z : mi.zeros) f.map0.push_back(ex.objects[sz(z.m - 1)][sz(z.a)]);
    for (const auto& p : mi.ones) {
        std::vector<int> fib;
        auto sizes = p.f.fiber_sizes();
        for (std::size_t i = 0; i < sizes.size(); ++i) fib.push_back(ex.objects[sz(sizes[i] - 1)][sz(p.a[i])]);
        const int lift = s.lift(p.f, f.map0[sz(mi.zero_id(p.dst))], fib);
        const int alpha = ex.morphisms[sz(p.src.m - 1)][sz(p.alpha)];
        const int img = c.hcomp1(lift, alpha);
        if (img < 0) {
            cert.failure = "no composite for the image of " + ip.label(p);
            return cert;
        }
        f.map1.push_back(img);
    }
    for (const auto& t : mi.twos) {
        const int p1 = f.map1[sz(mi.one_id(t.source))];
        const int p2 = f.map1[sz(mi.one_id(t.target))];
        const int y = c.one(p1).dst;
        auto sizes = t.source.f.fiber_sizes();
        std::vector<int> expected;
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            OneCell cell{{sizes[i], t.target.a[i]}, {1, q.unit()}, Surjection::bang(sizes[i]), {t.source.a[i]}, t.delta[i]};
            expected.push_back(f.map1[sz(mi.one_id(cell))]);
        }
        int found = -1, count = 0;
        for (int gamma : c.twos_between(p1, p2)) {
            const int tr = o.find_triangle(p1, c.id1(y), gamma);
            if (tr >= 0 && o.fib1[sz(tr)] == expected) {
                found = gamma;
                ++count;
            }
        }
        if (count != 1) {
            cert.failure = std::to_string(count) + " 2-cells qualify as the image of " + ip.label(t);
            return cert;
        }
        f.map2.push_back(found);
    }
    cert.cells = f.map0.size() + f.map1.size() + f.map2.size();
    if (!is_permutation_of(f.map0, c.zero_count())) cert.failure = "not bijective on 0-cells";
    else if (!is_permutation_of(f.map1, c.one_count())) cert.failure = "not bijective on 1-cells";
    else if (!is_permutation_of(f.map2, c.two_count())) cert.failure = "not bijective on 2-cells";
    else cert.failure = operadic_functor_defect(mi.fibration, s, f);
    cert.ok = !cert.failure;
    return cert;
}

FullFaithfulness check_full_faithfulness(const TruncatedOperad& p, const TruncatedOperad& q, std::size_t cap) {
    FullFaithfulness r;
    Integration ip(p), iq(q);
    auto sp = materialize(ip);
    auto sq = materialize(iq);
    auto morphisms = enumerate_operad_morphisms(p, q, cap);
    auto functors = enumerate_operadic_functors(sp.fibration, sq.fibration, cap);
    r.operad_morphisms = morphisms.size();
    r.operadic_functors = functors.size();
    using Key = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;
    std::set<Key> image, all;
    for (const auto& f : functors) all.insert({f.map0, f.map1, f.map2});
    for (const auto& m : morphisms) {
        auto f = integrate_morphism(sp, sq, m);
        if (auto d = operadic_functor_defect(sp.fibration, sq.fibration, f)) {
            r.failure = "the integral of an operad morphism is not operadic: " + *d;
            return r;
        }
        if (!image.insert({f.map0, f.map1, f.map2}).second) {
            r.failure = "two operad morphisms have the same integral";
            return r;
        }
    }
    if (image != all) {
        r.failure = std::to_string(all.size()) + " operadic 2-functors but " + std::to_string(image.size()) +
                    " of them are integrals";
        return r;
    }
    r.bijective = true;
    return r;
}

} // namespace opint
