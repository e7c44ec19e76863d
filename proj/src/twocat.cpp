#include "opint/twocat.hpp"

#include <numeric>

namespace opint {

namespace {

void check_id(int id, int count, const char* what) {
    if (id < 0 || id >= count)
        throw Error(Error::Kind::Range, std::string(what) + " id " + std::to_string(id) + " out of range");
}

} // namespace

int TwoCategory::add_zero(std::string label) {
    zero_labels_.push_back(std::move(label));
    id1_.push_back(-1);
    return zero_count() - 1;
}

int TwoCategory::add_one(int src, int dst, std::string label) {
    check_id(src, zero_count(), "0-cell");
    check_id(dst, zero_count(), "0-cell");
    ones_.push_back({src, dst});
    one_labels_.push_back(std::move(label));
    id2_.push_back(-1);
    return one_count() - 1;
}

int TwoCategory::add_two(int src, int dst, std::string label) {
    check_id(src, one_count(), "1-cell");
    check_id(dst, one_count(), "1-cell");
    const auto& a = one(src);
    const auto& b = one(dst);
    if (a.src != b.src || a.dst != b.dst)
        throw Error(Error::Kind::Invalid, "2-cell between non-parallel 1-cells " + one_label(src) +
                                              " and " + one_label(dst));
    twos_.push_back({src, dst});
    two_labels_.push_back(std::move(label));
    return two_count() - 1;
}

void TwoCategory::set_id1(int x, int one_cell) {
    check_id(x, zero_count(), "0-cell");
    check_id(one_cell, one_count(), "1-cell");
    id1_[static_cast<std::size_t>(x)] = one_cell;
}

void TwoCategory::set_id2(int one_cell, int two_cell) {
    check_id(one_cell, one_count(), "1-cell");
    check_id(two_cell, two_count(), "2-cell");
    id2_[static_cast<std::size_t>(one_cell)] = two_cell;
}

void TwoCategory::set_hcomp1(int g, int f, int gf) { hcomp1_[FinCat::pair_key(g, f)] = gf; }
void TwoCategory::set_vcomp(int b, int a, int ba) { vcomp_[FinCat::pair_key(b, a)] = ba; }
void TwoCategory::set_hcomp2(int eps, int delta, int result) { hcomp2_[FinCat::pair_key(eps, delta)] = result; }

void TwoCategory::finalize() {
    const auto n0 = static_cast<std::size_t>(zero_count());
    homs_.assign(n0 * n0, {});
    out_.assign(n0, {});
    in_.assign(n0, {});
    twos_from_.assign(static_cast<std::size_t>(one_count()), {});
    twos_between_.clear();
    for (int p = 0; p < one_count(); ++p) {
        const auto& e = one(p);
        homs_[static_cast<std::size_t>(e.src) * n0 + static_cast<std::size_t>(e.dst)].push_back(p);
        out_[static_cast<std::size_t>(e.src)].push_back(p);
        in_[static_cast<std::size_t>(e.dst)].push_back(p);
    }
    for (int a = 0; a < two_count(); ++a) {
        const auto& e = two(a);
        twos_from_[static_cast<std::size_t>(e.src)].push_back(a);
        twos_between_[FinCat::pair_key(e.src, e.dst)].push_back(a);
    }
}

std::span<const int> TwoCategory::hom(int x, int y) const {
    check_id(x, zero_count(), "0-cell");
    check_id(y, zero_count(), "0-cell");
    return homs_.at(static_cast<std::size_t>(x) * static_cast<std::size_t>(zero_count()) +
                    static_cast<std::size_t>(y));
}

std::span<const int> TwoCategory::twos_between(int p, int q) const {
    auto it = twos_between_.find(FinCat::pair_key(p, q));
    if (it == twos_between_.end()) return {};
    return it->second;
}

TwoCategory::HomCategory TwoCategory::hom_category(int x, int y) const {
    HomCategory h;
    auto cells = hom(x, y);
    h.ones.assign(cells.begin(), cells.end());
    std::unordered_map<int, int> local;
    std::vector<std::string> objects;
    for (std::size_t i = 0; i < h.ones.size(); ++i) {
        local[h.ones[i]] = static_cast<int>(i);
        objects.push_back(one_label(h.ones[i]));
    }
    std::vector<std::string> names;
    std::vector<Arrow> arrows;
    std::unordered_map<int, int> local2;
    for (int p : h.ones)
        for (int a : twos_from(p)) {
            local2[a] = static_cast<int>(h.twos.size());
            h.twos.push_back(a);
            names.push_back(two_label(a));
            arrows.push_back({local.at(two(a).src), local.at(two(a).dst)});
        }
    std::vector<int> ids;
    for (int p : h.ones) ids.push_back(local2.at(id2(p)));
    std::vector<std::array<int, 3>> comp;
    for (int a : h.twos)
        for (int b : twos_from(two(a).dst)) {
            int ba = vcomp(b, a);
            if (ba < 0)
                throw Error(Error::Kind::Composition, "hom category: missing vertical composite of " +
                                                          two_label(b) + " and " + two_label(a));
            comp.push_back({local2.at(b), local2.at(a), local2.at(ba)});
        }
    h.cat = FinCat(std::move(objects), std::move(names), std::move(arrows), std::move(ids), comp);
    return h;
}

std::vector<int> TwoCategory::components() const {
    std::vector<int> parent(static_cast<std::size_t>(zero_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            auto& px = parent[static_cast<std::size_t>(x)];
            px = parent[static_cast<std::size_t>(px)];
            x = px;
        }
        return x;
    };
    for (const auto& e : ones_) {
        int a = find(e.src), b = find(e.dst);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::vector<int> out(parent.size());
    for (int x = 0; x < zero_count(); ++x) out[static_cast<std::size_t>(x)] = find(x);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

CheckReport run_check(std::string name, std::size_t count, std::size_t instances_per_index_hint,
                      const std::function<std::optional<std::string>(std::size_t)>& body, Exec exec) {
    CheckReport r{std::move(name), Verdict::Pass, 0, false, std::nullopt};
    auto fail = find_first_failure(count, body, exec);
    r.instances = count * instances_per_index_hint;
    if (fail) {
        r.verdict = Verdict::Fail;
        r.counterexample = fail->message;
    }
    return r;
}

} // namespace

std::vector<CheckReport> check_two_category_laws(const TwoCategory& c, const CheckOptions& opts) {
    std::vector<CheckReport> out;
    auto L1 = [&](int p) { return c.one_label(p); };
    auto L2 = [&](int a) { return c.two_label(a); };

    // Instance counts, computed up front so that reports are deterministic.
    std::size_t pairs = 0, triples = 0;
    for (int f = 0; f < c.one_count(); ++f)
        for (int g : c.out_of(c.one(f).dst)) {
            ++pairs;
            triples += c.out_of(c.one(g).dst).size();
        }

    {
        auto r = run_check(
            "horizontal composition", static_cast<std::size_t>(c.one_count()), 1,
            [&](std::size_t i) -> std::optional<std::string> {
                const int f = static_cast<int>(i);
                const auto& ef = c.one(f);
                if (c.id1(ef.dst) < 0 || c.id1(ef.src) < 0) return "missing identity 1-cell";
                if (c.hcomp1(c.id1(ef.dst), f) != f) return "left unit fails at " + L1(f);
                if (c.hcomp1(f, c.id1(ef.src)) != f) return "right unit fails at " + L1(f);
                for (int g : c.out_of(ef.dst)) {
                    int gf = c.hcomp1(g, f);
                    if (gf < 0) return "missing composite " + L1(g) + " o " + L1(f);
                    if (c.one(gf).src != ef.src || c.one(gf).dst != c.one(g).dst)
                        return "composite " + L1(g) + " o " + L1(f) + " has wrong endpoints";
                    for (int h : c.out_of(c.one(g).dst)) {
                        int hg = c.hcomp1(h, g);
                        if (hg < 0) return "missing composite " + L1(h) + " o " + L1(g);
                        int a = c.hcomp1(h, gf), b = c.hcomp1(hg, f);
                        if (a < 0 || a != b)
                            return "associativity fails at (" + L1(h) + ", " + L1(g) + ", " + L1(f) + ")";
                    }
                }
                return std::nullopt;
            },
            opts.exec);
        r.instances = pairs + triples + 2 * static_cast<std::size_t>(c.one_count());
        if (r.passed() && c.hcomp1_size() != pairs) {
            r.verdict = Verdict::Fail;
            r.counterexample = "composition table has entries for non-composable pairs";
        }
        out.push_back(r);
    }

    std::size_t vpairs = 0, vtriples = 0;
    for (int a = 0; a < c.two_count(); ++a)
        for (int b : c.twos_from(c.two(a).dst)) {
            ++vpairs;
            vtriples += c.twos_from(c.two(b).dst).size();
        }
    {
        auto r = run_check(
            "hom categories", static_cast<std::size_t>(c.two_count()), 1,
            [&](std::size_t i) -> std::optional<std::string> {
                const int a = static_cast<int>(i);
                const auto& ea = c.two(a);
                const int ida = c.id2(ea.src), idb = c.id2(ea.dst);
                if (ida < 0 || idb < 0) return "missing identity 2-cell";
                if (c.two(ida).src != ea.src || c.two(ida).dst != ea.src)
                    return "identity 2-cell of " + L1(ea.src) + " is not an endomorphism";
                if (c.vcomp(idb, a) != a || c.vcomp(a, ida) != a) return "unit law fails at " + L2(a);
                for (int b : c.twos_from(ea.dst)) {
                    int ba = c.vcomp(b, a);
                    if (ba < 0) return "missing vertical composite " + L2(b) + " . " + L2(a);
                    if (c.two(ba).src != ea.src || c.two(ba).dst != c.two(b).dst)
                        return "vertical composite " + L2(b) + " . " + L2(a) + " has wrong endpoints";
                    for (int d : c.twos_from(c.two(b).dst)) {
                        int x = c.vcomp(d, ba), y = c.vcomp(c.vcomp(d, b), a);
                        if (x < 0 || x != y)
                            return "vertical associativity fails at (" + L2(d) + ", " + L2(b) + ", " + L2(a) + ")";
                    }
                }
                return std::nullopt;
            },
            opts.exec);
        r.instances = vpairs + vtriples + 2 * static_cast<std::size_t>(c.two_count());
        if (r.passed() && c.vcomp_size() != vpairs) {
            r.verdict = Verdict::Fail;
            r.counterexample = "vertical table has entries for non-composable pairs";
        }
        out.push_back(r);
    }

    // 2-cells sitting over 1-cells out of each 0-cell.
    std::vector<std::vector<int>> twos_out(static_cast<std::size_t>(c.zero_count()));
    for (int a = 0; a < c.two_count(); ++a)
        twos_out[static_cast<std::size_t>(c.one(c.two(a).src).src)].push_back(a);
    auto twos_after = [&](int delta) -> const std::vector<int>& {
        return twos_out[static_cast<std::size_t>(c.one(c.two(delta).src).dst)];
    };

    std::size_t hpairs = 0, htriples = 0;
    for (int d = 0; d < c.two_count(); ++d)
        for (int e : twos_after(d)) {
            ++hpairs;
            htriples += twos_after(e).size();
        }
    {
        auto r = run_check(
            "horizontal 2-cell composition", static_cast<std::size_t>(c.two_count()), 1,
            [&](std::size_t i) -> std::optional<std::string> {
                const int d = static_cast<int>(i);
                const auto& ed = c.two(d);
                const auto& pd = c.one(ed.src);
                if (c.hcomp2(c.id2(c.id1(pd.dst)), d) != d || c.hcomp2(d, c.id2(c.id1(pd.src))) != d)
                    return "identity 2-cells of identity 1-cells are not units at " + L2(d);
                for (int e : twos_after(d)) {
                    const auto& ee = c.two(e);
                    int ed_ = c.hcomp2(e, d);
                    if (ed_ < 0) return "missing horizontal composite " + L2(e) + " [] " + L2(d);
                    if (c.two(ed_).src != c.hcomp1(ee.src, ed.src) || c.two(ed_).dst != c.hcomp1(ee.dst, ed.dst))
                        return "horizontal composite " + L2(e) + " [] " + L2(d) + " has wrong endpoints";
                    for (int z : twos_after(e)) {
                        int x = c.hcomp2(z, ed_), y = c.hcomp2(c.hcomp2(z, e), d);
                        if (x < 0 || x != y)
                            return "horizontal 2-cell associativity fails at (" + L2(z) + ", " + L2(e) + ", " + L2(d) + ")";
                    }
                }
                return std::nullopt;
            },
            opts.exec);
        r.instances = hpairs + htriples;
        if (r.passed()) {
            for (int f = 0; f < c.one_count() && r.passed(); ++f)
                for (int g : c.out_of(c.one(f).dst)) {
                    ++r.instances;
                    if (c.hcomp2(c.id2(g), c.id2(f)) != c.id2(c.hcomp1(g, f))) {
                        r.verdict = Verdict::Fail;
                        r.counterexample = "identity 2-cells not preserved at " + L1(g) + " o " + L1(f);
                        break;
                    }
                }
        }
        if (r.passed() && c.hcomp2_size() != hpairs) {
            r.verdict = Verdict::Fail;
            r.counterexample = "horizontal 2-cell table has entries for non-composable pairs";
        }
        out.push_back(r);
    }

    std::size_t inter = 0;
    for (int d = 0; d < c.two_count(); ++d) {
        std::size_t after_d = c.twos_from(c.two(d).dst).size();
        for (int e : twos_after(d)) inter += after_d * c.twos_from(c.two(e).dst).size();
    }
    {
        auto r = run_check(
            "interchange", static_cast<std::size_t>(c.two_count()), 1,
            [&](std::size_t i) -> std::optional<std::string> {
                const int d = static_cast<int>(i);
                for (int d2 : c.twos_from(c.two(d).dst))
                    for (int e : twos_after(d))
                        for (int e2 : c.twos_from(c.two(e).dst)) {
                            int lhs = c.hcomp2(c.vcomp(e2, e), c.vcomp(d2, d));
                            int rhs = c.vcomp(c.hcomp2(e2, d2), c.hcomp2(e, d));
                            if (lhs < 0 || lhs != rhs)
                                return "interchange fails at eps=(" + L2(e2) + " . " + L2(e) + "), delta=(" +
                                       L2(d2) + " . " + L2(d) + ")";
                        }
                return std::nullopt;
            },
            opts.exec);
        r.instances = inter;
        out.push_back(r);
    }
    return out;
}

std::optional<std::string> two_functor_defect(const TwoCategory& s, const TwoCategory& t, const TwoFunctor& f) {
    if (f.map0.size() != static_cast<std::size_t>(s.zero_count()) ||
        f.map1.size() != static_cast<std::size_t>(s.one_count()) ||
        f.map2.size() != static_cast<std::size_t>(s.two_count()))
        return "cell maps have the wrong size";
    auto m0 = [&](int x) { return f.map0[static_cast<std::size_t>(x)]; };
    auto m1 = [&](int p) { return f.map1[static_cast<std::size_t>(p)]; };
    auto m2 = [&](int a) { return f.map2[static_cast<std::size_t>(a)]; };
    for (int x = 0; x < s.zero_count(); ++x) {
        if (m0(x) < 0 || m0(x) >= t.zero_count()) return "0-cell image out of range";
        if (m1(s.id1(x)) != t.id1(m0(x))) return "identity of " + s.zero_label(x) + " not preserved";
    }
    for (int p = 0; p < s.one_count(); ++p) {
        if (m1(p) < 0 || m1(p) >= t.one_count()) return "1-cell image out of range";
        const auto& e = s.one(p);
        const auto& fe = t.one(m1(p));
        if (fe.src != m0(e.src) || fe.dst != m0(e.dst)) return "endpoints of " + s.one_label(p) + " not preserved";
        if (m2(s.id2(p)) != t.id2(m1(p))) return "identity 2-cell of " + s.one_label(p) + " not preserved";
        for (int g : s.out_of(e.dst))
            if (m1(s.hcomp1(g, p)) != t.hcomp1(m1(g), m1(p)))
                return "composite " + s.one_label(g) + " o " + s.one_label(p) + " not preserved";
    }
    for (int a = 0; a < s.two_count(); ++a) {
        if (m2(a) < 0 || m2(a) >= t.two_count()) return "2-cell image out of range";
        const auto& e = s.two(a);
        const auto& fe = t.two(m2(a));
        if (fe.src != m1(e.src) || fe.dst != m1(e.dst)) return "endpoints of " + s.two_label(a) + " not preserved";
        for (int b : s.twos_from(e.dst))
            if (m2(s.vcomp(b, a)) != t.vcomp(m2(b), m2(a)))
                return "vertical composite " + s.two_label(b) + " . " + s.two_label(a) + " not preserved";
    }
    std::vector<std::vector<int>> twos_out(static_cast<std::size_t>(s.zero_count()));
    for (int a = 0; a < s.two_count(); ++a) twos_out[static_cast<std::size_t>(s.one(s.two(a).src).src)].push_back(a);
    for (int d = 0; d < s.two_count(); ++d)
        for (int e : twos_out[static_cast<std::size_t>(s.one(s.two(d).src).dst)])
            if (m2(s.hcomp2(e, d)) != t.hcomp2(m2(e), m2(d)))
                return "horizontal composite " + s.two_label(e) + " [] " + s.two_label(d) + " not preserved";
    return std::nullopt;
}

TwoFunctor compose_two_functors(const TwoFunctor& first, const TwoFunctor& second) {
    TwoFunctor out;
    for (int x : first.map0) out.map0.push_back(second.map0.at(static_cast<std::size_t>(x)));
    for (int p : first.map1) out.map1.push_back(second.map1.at(static_cast<std::size_t>(p)));
    for (int a : first.map2) out.map2.push_back(second.map2.at(static_cast<std::size_t>(a)));
    return out;
}

} // namespace opint
