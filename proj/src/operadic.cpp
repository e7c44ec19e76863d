#include "opint/operadic.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace opint {

namespace {

using Body = std::function<std::optional<std::string>(std::size_t)>;

CheckReport run(std::string name, std::size_t count, const Body& body, Exec exec) {
    CheckReport r{std::move(name), Verdict::Pass, count, false, std::nullopt};
    if (auto fail = find_first_failure(count, body, exec)) {
        r.verdict = Verdict::Fail;
        r.counterexample = fail->message;
    }
    return r;
}

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

std::string list(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// t is terminal in hom(x, v).
bool terminal_in_hom(const TwoCategory& c, int x, int v, int t) {
    if (t < 0 || c.one(t).src != x || c.one(t).dst != v) return false;
    for (int p : c.hom(x, v))
        if (c.twos_between(p, t).size() != 1) return false;
    return true;
}

std::optional<int> hom_terminal(const TwoCategory& c, int x, int v) {
    for (int t : c.hom(x, v))
        if (terminal_in_hom(c, x, v, t)) return t;
    return std::nullopt;
}

// Copies all tables of `src` into a fresh 2-category with 0-cell x renamed perm[x].
TwoCategory relabel(const TwoCategory& src, const std::vector<int>& perm) {
    TwoCategory out;
    std::vector<int> inv(perm.size());
    for (std::size_t x = 0; x < perm.size(); ++x) inv[sz(perm[x])] = static_cast<int>(x);
    for (std::size_t y = 0; y < inv.size(); ++y) out.add_zero(src.zero_label(inv[y]));
    for (int p = 0; p < src.one_count(); ++p)
        out.add_one(perm[sz(src.one(p).src)], perm[sz(src.one(p).dst)], src.one_label(p));
    for (int a = 0; a < src.two_count(); ++a) out.add_two(src.two(a).src, src.two(a).dst, src.two_label(a));
    for (int x = 0; x < src.zero_count(); ++x) out.set_id1(perm[sz(x)], src.id1(x));
    for (int p = 0; p < src.one_count(); ++p) out.set_id2(p, src.id2(p));
    for (int f = 0; f < src.one_count(); ++f)
        for (int g : src.out_of(src.one(f).dst))
            if (int gf = src.hcomp1(g, f); gf >= 0) out.set_hcomp1(g, f, gf);
    for (int a = 0; a < src.two_count(); ++a)
        for (int b : src.twos_from(src.two(a).dst))
            if (int ba = src.vcomp(b, a); ba >= 0) out.set_vcomp(b, a, ba);
    std::vector<std::vector<int>> from_zero(sz(src.zero_count()));
    for (int a = 0; a < src.two_count(); ++a) from_zero[sz(src.one(src.two(a).src).src)].push_back(a);
    for (int d = 0; d < src.two_count(); ++d)
        for (int e : from_zero[sz(src.one(src.two(d).src).dst)])
            if (int r = src.hcomp2(e, d); r >= 0) out.set_hcomp2(e, d, r);
    out.finalize();
    return out;
}

} // namespace

// ---------------------------------------------------------------------------

void OperadicTwoCat::index() {
    triangle_index_.clear();
    by_d0_.assign(sz(cat.one_count()), {});
    by_d0_d1_.clear();
    for (std::size_t t = 0; t < triangles.size(); ++t) {
        const auto& tr = triangles[t];
        const int id = static_cast<int>(t);
        triangle_index_.emplace(std::tuple{tr.psi, tr.phi, tr.alpha}, id);
        by_d0_[sz(tr.phi)].push_back(id);
        by_d0_d1_[{tr.phi, tr.theta}].push_back(id);
    }
    slice_by_source_.assign(triangles.size(), {});
    slice_index_.clear();
    for (std::size_t s = 0; s < slice2.size(); ++s) {
        const auto& sc = slice2[s];
        slice_by_source_[sz(sc.source)].push_back(static_cast<int>(s));
        slice_index_.emplace(std::tuple{sc.source, sc.target, sc.gamma}, static_cast<int>(s));
    }
}

int OperadicTwoCat::find_triangle(int psi, int phi, int alpha) const {
    auto it = triangle_index_.find({psi, phi, alpha});
    return it == triangle_index_.end() ? -1 : it->second;
}

std::span<const int> OperadicTwoCat::triangles_over(int phi) const { return by_d0_.at(sz(phi)); }

std::span<const int> OperadicTwoCat::triangles_between(int phi, int theta) const {
    auto it = by_d0_d1_.find({phi, theta});
    if (it == by_d0_d1_.end()) return {};
    return it->second;
}

std::span<const int> OperadicTwoCat::slice_from(int triangle) const { return slice_by_source_.at(sz(triangle)); }

int OperadicTwoCat::find_slice2(int source, int target, int gamma) const {
    auto it = slice_index_.find({source, target, gamma});
    return it == slice_index_.end() ? -1 : it->second;
}

int OperadicTwoCat::identity_triangle(int phi) const {
    return find_triangle(cat.id1(cat.one(phi).src), phi, cat.id2(phi));
}

int OperadicTwoCat::compose_triangles(int tau2, int tau1) const {
    const auto& t2 = triangles.at(sz(tau2));
    const auto& t1 = triangles.at(sz(tau1));
    if (t1.phi != t2.theta) return -1;
    const int psi = cat.hcomp1(t2.psi, t1.psi);
    const int whisker = cat.hcomp2(t2.alpha, cat.id2(t1.psi));
    if (psi < 0 || whisker < 0) return -1;
    const int alpha = cat.vcomp(t1.alpha, whisker);
    if (alpha < 0) return -1;
    return find_triangle(psi, t2.phi, alpha);
}

int SplitFibration::lift(const Surjection& g, int target, std::vector<int> fibers) const {
    auto it = lifts.find(LiftKey{g, target, std::move(fibers)});
    if (it == lifts.end())
        throw Error(Error::Kind::Range, "no chosen lift along " + g.str() + " into " + o.cat.zero_label(target));
    return it->second;
}

LaliChoice lali_terminals(const TwoCategory& c) {
    LaliChoice out;
    out.component = c.components();
    std::map<int, std::vector<int>> members;
    for (int x = 0; x < c.zero_count(); ++x) members[out.component[sz(x)]].push_back(x);
    for (const auto& [comp, xs] : members) {
        auto& cands = out.candidates[comp];
        for (int v : xs) {
            if (!terminal_in_hom(c, v, v, c.id1(v))) continue;
            bool ok = std::all_of(xs.begin(), xs.end(), [&](int x) { return hom_terminal(c, x, v).has_value(); });
            if (ok) cands.push_back(v);
        }
        if (!cands.empty()) out.chosen[comp] = cands.front();
    }
    out.eps.assign(sz(c.zero_count()), -1);
    for (int x = 0; x < c.zero_count(); ++x) {
        auto it = out.chosen.find(out.component[sz(x)]);
        if (it == out.chosen.end()) continue;
        if (auto t = hom_terminal(c, x, it->second)) out.eps[sz(x)] = *t;
    }
    return out;
}

// ---------------------------------------------------------------------------

std::vector<CheckReport> check_operadic_axioms(const OperadicTwoCat& o, const CheckOptions& opts) {
    const auto& c = o.cat;
    std::vector<CheckReport> out;
    const auto n0 = sz(c.zero_count());
    const auto n1 = sz(c.one_count());
    const auto n2 = sz(c.two_count());
    const auto nt = o.triangles.size();
    const auto ns = o.slice2.size();
    auto L1 = [&](int p) { return c.one_label(p); };

    if (o.card0.size() != n0 || o.card1.size() != n1 || o.fib0.size() != n1 || o.fib1.size() != nt ||
        o.fib2.size() != ns || o.unit.size() != n0 || o.eps.size() != n0) {
        out.push_back({"shape", Verdict::Fail, 1, false, "table sizes do not match the cell counts"});
        return out;
    }

    out.push_back(run(
        "cardinality functor", n1 + n2,
        [&](std::size_t i) -> std::optional<std::string> {
            if (i >= n1) {
                const auto& e = c.two(static_cast<int>(i - n1));
                if (o.card1[sz(e.src)] != o.card1[sz(e.dst)])
                    return "2-cell " + c.two_label(static_cast<int>(i - n1)) + " joins 1-cells of different cardinality";
                return std::nullopt;
            }
            const int p = static_cast<int>(i);
            const auto& e = c.one(p);
            const auto& f = o.card1[i];
            if (f.dom() != o.card0[sz(e.src)] || f.cod() != o.card0[sz(e.dst)])
                return "|" + L1(p) + "| = " + f.str() + " does not match its endpoints";
            if (c.id1(e.src) == p && !f.is_identity()) return "|" + L1(p) + "| is not an identity";
            for (int g : c.out_of(e.dst))
                if (o.card1[sz(c.hcomp1(g, p))] != compose(f, o.card1[sz(g)]))
                    return "|" + L1(g) + " o " + L1(p) + "| != |" + L1(g) + "| o |" + L1(p) + "|";
            return std::nullopt;
        },
        opts.exec));

    out.push_back(run(
        "fibers preserve cardinality", n1 + nt + ns,
        [&](std::size_t i) -> std::optional<std::string> {
            if (i < n1) {
                const int p = static_cast<int>(i);
                auto sizes = o.card1[i].fiber_sizes();
                const auto& fz = o.fib0[i];
                if (fz.size() != sizes.size()) return L1(p) + " has " + std::to_string(fz.size()) + " fibers";
                for (std::size_t k = 0; k < sizes.size(); ++k)
                    if (o.card0[sz(fz[k])] != sizes[k])
                        return "fiber " + std::to_string(k + 1) + " of " + L1(p) + " has the wrong cardinality";
                return std::nullopt;
            }
            if (i < n1 + nt) {
                const auto t = i - n1;
                const auto& tr = o.triangles[t];
                if (c.one(tr.psi).dst != c.one(tr.phi).src || c.two(tr.alpha).src != c.hcomp1(tr.phi, tr.psi) ||
                    c.two(tr.alpha).dst != tr.theta)
                    return "triangle " + std::to_string(t) + " is not a lax triangle";
                const auto& g = o.card1[sz(tr.phi)];
                const auto& f1 = o.fib1[t];
                if (static_cast<int>(f1.size()) != g.cod()) return "triangle " + std::to_string(t) + " has the wrong number of fibers";
                for (int k = 1; k <= g.cod(); ++k) {
                    const int q = f1[sz(k - 1)];
                    if (c.one(q).src != o.fib0[sz(tr.theta)][sz(k - 1)] || c.one(q).dst != o.fib0[sz(tr.phi)][sz(k - 1)])
                        return "fiber " + std::to_string(k) + " of triangle " + std::to_string(t) + " has the wrong endpoints";
                    if (o.card1[sz(q)] != induced_map(o.card1[sz(tr.psi)], g, k))
                        return "fiber " + std::to_string(k) + " of triangle " + std::to_string(t) + " is not over the induced map";
                }
                return std::nullopt;
            }
            const auto s = i - n1 - nt;
            const auto& sc = o.slice2[s];
            const auto& a = o.triangles[sz(sc.source)];
            const auto& b = o.triangles[sz(sc.target)];
            if (a.phi != b.phi || a.theta != b.theta || c.two(sc.gamma).src != a.psi || c.two(sc.gamma).dst != b.psi ||
                c.vcomp(b.alpha, c.hcomp2(c.id2(a.phi), sc.gamma)) != a.alpha)
                return "slice 2-cell " + std::to_string(s) + " is ill-typed";
            const auto& f2 = o.fib2[s];
            if (f2.size() != o.fib1[sz(sc.source)].size()) return "slice 2-cell " + std::to_string(s) + " has the wrong number of fibers";
            for (std::size_t k = 0; k < f2.size(); ++k)
                if (c.two(f2[k]).src != o.fib1[sz(sc.source)][k] || c.two(f2[k]).dst != o.fib1[sz(sc.target)][k])
                    return "fiber " + std::to_string(k + 1) + " of slice 2-cell " + std::to_string(s) + " has the wrong endpoints";
            return std::nullopt;
        },
        opts.exec));

    out.push_back(run(
        "fiber functors", nt + ns,
        [&](std::size_t i) -> std::optional<std::string> {
            if (i < nt) {
                const int t = static_cast<int>(i);
                const auto& tr = o.triangles[i];
                if (tr.psi == c.id1(c.one(tr.phi).src) && tr.alpha == c.id2(tr.phi)) {
                    for (std::size_t k = 0; k < o.fib1[i].size(); ++k)
                        if (o.fib1[i][k] != c.id1(o.fib0[sz(tr.phi)][k]))
                            return "identity triangle of " + L1(tr.phi) + " has a non-identity fiber";
                }
                for (int t1 : o.triangles_over(tr.theta)) {
                    const int comp = o.compose_triangles(t, t1);
                    if (comp < 0) return "missing composite of triangles " + std::to_string(t) + " and " + std::to_string(t1);
                    for (std::size_t k = 0; k < o.fib1[i].size(); ++k)
                        if (o.fib1[sz(comp)][k] != c.hcomp1(o.fib1[i][k], o.fib1[sz(t1)][k]))
                            return "fibers of a composite of triangles over " + L1(tr.phi) + " are not composites";
                }
                const int s = o.find_slice2(t, t, c.id2(tr.psi));
                if (s < 0) return "missing identity slice 2-cell on triangle " + std::to_string(t);
                for (std::size_t k = 0; k < o.fib2[sz(s)].size(); ++k)
                    if (o.fib2[sz(s)][k] != c.id2(o.fib1[i][k])) return "identity slice 2-cell has a non-identity fiber";
                return std::nullopt;
            }
            const auto s = i - nt;
            const auto& a = o.slice2[s];
            for (int b : o.slice_from(a.target)) {
                const auto& sb = o.slice2[sz(b)];
                const int ba = o.find_slice2(a.source, sb.target, c.vcomp(sb.gamma, a.gamma));
                if (ba < 0) return "missing vertical composite of slice 2-cells";
                for (std::size_t k = 0; k < o.fib2[s].size(); ++k)
                    if (o.fib2[sz(ba)][k] != c.vcomp(o.fib2[sz(b)][k], o.fib2[s][k]))
                        return "fibers of a vertical composite of slice 2-cells are not composites";
            }
            // Horizontal composites with slice 2-cells on composable triangles.
            const auto& ta = o.triangles[sz(a.source)];
            for (int t1 : o.triangles_over(ta.theta))
                for (int e : o.slice_from(t1)) {
                    const auto& se = o.slice2[sz(e)];
                    const int src = o.compose_triangles(a.source, se.source);
                    const int dst = o.compose_triangles(a.target, se.target);
                    if (src < 0 || dst < 0) return "missing composite of triangles";
                    const int r = o.find_slice2(src, dst, c.hcomp2(a.gamma, se.gamma));
                    if (r < 0) return "missing horizontal composite of slice 2-cells";
                    for (std::size_t k = 0; k < o.fib2[s].size(); ++k)
                        if (o.fib2[sz(r)][k] != c.hcomp2(o.fib2[s][k], o.fib2[sz(e)][k]))
                            return "fibers of a horizontal composite of slice 2-cells are not composites";
                }
            return std::nullopt;
        },
        opts.exec));

    std::vector<int> is_unit(n0, 0);
    for (int u : o.unit)
        if (u >= 0 && sz(u) < n0) is_unit[sz(u)] = 1;
    out.push_back(run(
        "unit cardinality", n0,
        [&](std::size_t x) -> std::optional<std::string> {
            const int u = o.unit[x];
            if (o.card0[sz(u)] != 1) return "chosen unit " + c.zero_label(u) + " does not have cardinality 1";
            if (o.fib0[sz(o.eps[x])] != std::vector<int>{static_cast<int>(x)})
                return "the fiber of epsilon at " + c.zero_label(static_cast<int>(x)) + " is not its domain";
            return std::nullopt;
        },
        opts.exec));

    // Literal reading: every 1-cell, triangle and slice 2-cell over a unit
    // has its domain as fiber.
    out.push_back(run(
        "fiber over a unit is the domain functor", n1 + nt + ns,
        [&](std::size_t i) -> std::optional<std::string> {
            if (i < n1) {
                const auto& e = c.one(static_cast<int>(i));
                if (!is_unit[sz(e.dst)]) return std::nullopt;
                if (o.fib0[i] != std::vector<int>{e.src})
                    return "the fiber of " + L1(static_cast<int>(i)) + " is " + c.zero_label(o.fib0[i][0]) + ", not its domain";
                return std::nullopt;
            }
            if (i < n1 + nt) {
                const auto& tr = o.triangles[i - n1];
                if (!is_unit[sz(c.one(tr.phi).dst)]) return std::nullopt;
                if (o.fib1[i - n1] != std::vector<int>{tr.psi})
                    return "the fiber of triangle " + std::to_string(i - n1) + " over a unit is not its d2 face";
                return std::nullopt;
            }
            const auto& sc = o.slice2[i - n1 - nt];
            if (!is_unit[sz(c.one(o.triangles[sz(sc.source)].phi).dst)]) return std::nullopt;
            if (o.fib2[i - n1 - nt] != std::vector<int>{sc.gamma})
                return "the fiber of slice 2-cell " + std::to_string(i - n1 - nt) + " over a unit is not its 2-cell";
            return std::nullopt;
        },
        opts.exec));

    out.push_back(run(
        "identity fibers", n0,
        [&](std::size_t x) -> std::optional<std::string> {
            for (int f : o.fib0[sz(c.id1(static_cast<int>(x)))])
                if (o.unit[sz(f)] != f)
                    return "fiber " + c.zero_label(f) + " of the identity on " + c.zero_label(static_cast<int>(x)) +
                           " is not a chosen lali-terminal object";
            return std::nullopt;
        },
        opts.exec));

    out.push_back(run(
        "epsilon fibers", n1,
        [&](std::size_t i) -> std::optional<std::string> {
            const int phi = static_cast<int>(i);
            const int t = o.find_triangle(phi, c.id1(c.one(phi).dst), c.id2(phi));
            if (t < 0) return "missing triangle 1 o " + L1(phi) + " => " + L1(phi);
            for (std::size_t k = 0; k < o.fib1[sz(t)].size(); ++k)
                if (o.fib1[sz(t)][k] != o.eps[sz(o.fib0[i][k])])
                    return "fiber " + std::to_string(k + 1) + " of the triangle 1 o " + L1(phi) + " => " + L1(phi) + " is not epsilon";
            return std::nullopt;
        },
        opts.exec));

    out.push_back(run(
        "fiber axiom on objects", nt,
        [&](std::size_t t) -> std::optional<std::string> {
            const auto& tr = o.triangles[t];
            auto blocks = block_cut(o.fib0[sz(tr.psi)], o.card1[sz(tr.phi)]);
            for (std::size_t k = 0; k < blocks.size(); ++k)
                if (blocks[k] != o.fib0[sz(o.fib1[t][k])])
                    return "fib(" + L1(tr.psi) + ") block " + std::to_string(k + 1) + " = " + list(blocks[k]) +
                           " but fib(fib(triangle " + std::to_string(t) + ")) = " + list(o.fib0[sz(o.fib1[t][k])]);
            return std::nullopt;
        },
        opts.exec));

    // A morphism τ1 → τ2 of (O/x)/φ is a triangle Σ with d0 = d1(τ2) and a
    // slice 2-cell Γ: τ2∘Σ ⇒ τ1.
    out.push_back(run(
        "fiber axiom on morphisms", nt,
        [&](std::size_t t2) -> std::optional<std::string> {
            const auto& tau2 = o.triangles[t2];
            const auto& g = o.card1[sz(tau2.phi)];
            for (int sigma : o.triangles_over(tau2.theta)) {
                const int comp = o.compose_triangles(static_cast<int>(t2), sigma);
                if (comp < 0) return "missing composite of triangles";
                const int s_psi = o.triangles[sz(sigma)].psi;
                for (int gamma_s : o.slice_from(comp)) {
                    const auto& gam = o.slice2[sz(gamma_s)];
                    const int lhs_t = o.find_triangle(s_psi, tau2.psi, gam.gamma);
                    if (lhs_t < 0) return "missing triangle in the slice over the domain";
                    auto lhs = block_cut(o.fib1[sz(lhs_t)], g);
                    for (int k = 1; k <= g.cod(); ++k) {
                        const auto kk = sz(k - 1);
                        const int rt = o.find_triangle(o.fib1[sz(sigma)][kk], o.fib1[t2][kk], o.fib2[sz(gamma_s)][kk]);
                        if (rt < 0) return "missing triangle of fibers";
                        if (o.fib1[sz(rt)] != lhs[kk])
                            return "fiber axiom fails for triangle " + std::to_string(t2) + ", triangle " + std::to_string(sigma) +
                                   " and slice 2-cell " + std::to_string(gamma_s) + " at fiber " + std::to_string(k);
                    }
                }
            }
            return std::nullopt;
        },
        opts.exec));

    auto lali = lali_terminals(c);
    out.push_back(run(
        "lali-terminal objects", n0,
        [&](std::size_t x) -> std::optional<std::string> {
            const int u = o.unit[x];
            const int comp = lali.component[x];
            if (lali.component[sz(u)] != comp) return "unit of " + c.zero_label(static_cast<int>(x)) + " lies in another component";
            const auto& cands = lali.candidates[comp];
            if (std::find(cands.begin(), cands.end(), u) == cands.end())
                return c.zero_label(u) + " is not lali-terminal";
            for (std::size_t y = 0; y < n0; ++y)
                if (lali.component[y] == comp && o.unit[y] != u) return "two chosen units in one component";
            if (!terminal_in_hom(c, static_cast<int>(x), u, o.eps[x]))
                return "epsilon of " + c.zero_label(static_cast<int>(x)) + " is not terminal";
            if (static_cast<int>(x) == u && o.eps[x] != c.id1(u)) return "epsilon of a unit is not the identity";
            return std::nullopt;
        },
        opts.exec));

    return out;
}

CheckReport is_operadic_cartesian(const OperadicTwoCat& o, int phi, const CheckOptions& opts) {
    const auto& c = o.cat;
    const int t = c.one(phi).dst;
    const auto& pf = o.fib0[sz(phi)];
    CheckReport r{"operadic cartesian " + c.one_label(phi), Verdict::Pass, 0, false, std::nullopt};
    for (int theta : c.into(t)) {
        const auto& tf = o.fib0[sz(theta)];
        std::size_t expected = 1;
        for (std::size_t k = 0; k < pf.size(); ++k) {
            expected *= c.hom(tf[k], pf[k]).size();
            if (expected > opts.cap) {
                r.verdict = combine(r.verdict, Verdict::Capped);
                break;
            }
        }
        if (expected > opts.cap) continue;
        r.instances += expected;
        std::set<std::vector<int>> seen;
        for (int tr : o.triangles_between(phi, theta)) {
            if (!seen.insert(o.fib1[sz(tr)]).second) {
                r.verdict = Verdict::Fail;
                r.counterexample = "two triangles over " + c.one_label(phi) + " and " + c.one_label(theta) + " with fibers " +
                                   list(o.fib1[sz(tr)]);
                return r;
            }
        }
        if (seen.size() != expected) {
            r.verdict = Verdict::Fail;
            r.counterexample = std::to_string(seen.size()) + " of " + std::to_string(expected) + " fiber tuples for " +
                               c.one_label(theta) + " are filled by a triangle over " + c.one_label(phi);
            return r;
        }
    }
    return r;
}

CheckReport check_lifts(const SplitFibration& s, const CheckOptions& opts) {
    const auto& o = s.o;
    const auto& c = o.cat;
    std::vector<std::pair<LiftKey, int>> items(s.lifts.begin(), s.lifts.end());

    // Completeness: every (g, c, b) with cardinalities in range.
    int top = 0;
    for (int k : o.card0) top = std::max(top, k);
    std::map<int, std::vector<int>> by_card;
    for (int x = 0; x < c.zero_count(); ++x) by_card[o.card0[sz(x)]].push_back(x);
    std::size_t expected = 0;
    for (const auto& g : surjections_up_to(top)) {
        std::size_t n = by_card[g.cod()].size();
        for (int k : g.fiber_sizes()) n *= by_card[k].size();
        expected += n;
    }
    CheckReport r{"chosen lifts", Verdict::Pass, items.size(), false, std::nullopt};
    if (expected != items.size()) {
        r.verdict = Verdict::Fail;
        r.counterexample = std::to_string(items.size()) + " chosen lifts, expected " + std::to_string(expected);
        return r;
    }
    std::vector<Verdict> capped(items.size(), Verdict::Pass);
    auto fail = find_first_failure(
        items.size(),
        [&](std::size_t i) -> std::optional<std::string> {
            const auto& [key, p] = items[i];
            if (c.one(p).dst != key.target) return "lift along " + key.g.str() + " has the wrong target";
            if (o.card1[sz(p)] != key.g) return "lift " + c.one_label(p) + " is not over " + key.g.str();
            if (o.fib0[sz(p)] != key.fibers) return "lift " + c.one_label(p) + " has the wrong fibers";
            auto cr = is_operadic_cartesian(o, p, opts);
            capped[i] = cr.verdict;
            if (cr.verdict == Verdict::Fail) return *cr.counterexample;
            return std::nullopt;
        },
        opts.exec);
    if (fail) {
        r.verdict = Verdict::Fail;
        r.counterexample = fail->message;
    } else {
        for (auto v : capped) r.verdict = combine(r.verdict, v);
    }
    return r;
}

CheckReport check_splitting(const SplitFibration& s, const CheckOptions& opts) {
    const auto& o = s.o;
    const auto& c = o.cat;
    std::map<int, std::vector<int>> by_card;
    int top = 0;
    for (int x = 0; x < c.zero_count(); ++x) {
        by_card[o.card0[sz(x)]].push_back(x);
        top = std::max(top, o.card0[sz(x)]);
    }

    // (lift, f, a) instances for the composite law.
    struct Inst {
        const LiftKey* key;
        int lift;
        Surjection f;
        std::vector<int> a;
    };
    std::vector<Inst> insts;
    std::vector<int> digits;
    for (const auto& [key, p] : s.lifts) {
        const int k = key.g.dom();
        for (int m = k; m <= top; ++m) {
            for (const auto& f : enumerate_surjections(m, k)) {
                auto sizes = f.fiber_sizes();
                std::vector<int> radix;
                std::size_t n = 1;
                for (int z : sizes) {
                    radix.push_back(static_cast<int>(by_card[z].size()));
                    n *= by_card[z].size();
                }
                for (std::size_t code = 0; code < n; ++code) {
                    decode_tuple(code, radix, digits);
                    std::vector<int> a;
                    for (std::size_t j = 0; j < sizes.size(); ++j) a.push_back(by_card[sizes[j]][sz(digits[j])]);
                    insts.push_back({&key, p, f, std::move(a)});
                    if (insts.size() > opts.cap)
                        return {"splitting", Verdict::Capped, insts.size(), false, std::nullopt};
                }
            }
        }
    }

    const auto n0 = sz(c.zero_count());
    auto r = run(
        "splitting", 2 * n0 + insts.size(),
        [&](std::size_t i) -> std::optional<std::string> {
            if (i < n0) {
                const int x = static_cast<int>(i);
                const int n = o.card0[i];
                if (n == 0) return std::nullopt;
                if (s.lift(Surjection::identity(n), x, o.fib0[sz(c.id1(x))]) != c.id1(x))
                    return "the lift of the identity into " + c.zero_label(x) + " is not the identity";
                return std::nullopt;
            }
            if (i < 2 * n0) {
                const int x = static_cast<int>(i - n0);
                const int n = o.card0[sz(x)];
                if (n == 0) return std::nullopt;
                if (s.lift(Surjection::bang(n), o.unit[sz(x)], {x}) != o.eps[sz(x)])
                    return "the lift of " + Surjection::bang(n).str() + " with fiber " + c.zero_label(x) + " is not epsilon";
                return std::nullopt;
            }
            const auto& in = insts[i - 2 * n0];
            const auto& g = in.key->g;
            const int src = c.one(in.lift).src;
            const int l2 = s.lift(in.f, src, in.a);
            const int lhs = c.hcomp1(in.lift, l2);
            auto blocks = block_cut(in.a, g);
            std::vector<int> fib;
            for (int j = 1; j <= g.cod(); ++j)
                fib.push_back(c.one(s.lift(induced_map(in.f, g, j), in.key->fibers[sz(j - 1)], blocks[sz(j - 1)])).src);
            const int rhs = s.lift(compose(in.f, g), in.key->target, fib);
            if (lhs != rhs)
                return "lift composite " + c.one_label(in.lift) + " o " + c.one_label(l2) + " = " + c.one_label(lhs) +
                       " but the lift of the composite is " + c.one_label(rhs);
            return std::nullopt;
        },
        opts.exec);
    return r;
}

// ---------------------------------------------------------------------------

const char* to_string(Triviality t) {
    switch (t) {
    case Triviality::Trivial: return "trivial";
    case Triviality::NotTrivial: return "not trivial";
    case Triviality::CardinalityMismatch: return "cardinality mismatch";
    }
    return "?";
}

TrivialityResult is_trivial(const OperadicTwoCat& o, int phi) {
    const auto& c = o.cat;
    const int y = c.one(phi).src;
    const int x = c.one(phi).dst;
    if (o.card0[sz(x)] != o.card0[sz(y)])
        return {Triviality::CardinalityMismatch, "|" + c.zero_label(y) + "| != |" + c.zero_label(x) + "|"};
    for (int psi : c.into(y)) {
        const int comp = c.hcomp1(phi, psi);
        const int t = o.find_triangle(psi, phi, c.id2(comp));
        if (t < 0) return {Triviality::NotTrivial, "missing identity triangle over " + c.one_label(psi)};
        const auto& fz = o.fib0[sz(psi)];
        for (std::size_t k = 0; k < fz.size(); ++k)
            if (o.fib1[sz(t)][k] != o.eps[sz(fz[k])])
                return {Triviality::NotTrivial, "fiber " + std::to_string(k + 1) + " of 1 on " + c.one_label(phi) + " o " +
                                                    c.one_label(psi) + " is not epsilon"};
    }
    return {Triviality::Trivial, std::nullopt};
}

std::vector<CheckReport> check_trivial_lemmas(const OperadicTwoCat& o, const CheckOptions& opts) {
    const auto& c = o.cat;
    const auto n1 = sz(c.one_count());
    std::vector<char> triv(n1, 0);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 16) if (opts.exec == Exec::Parallel)
#endif
    for (long long i = 0; i < static_cast<long long>(n1); ++i)
        triv[sz(static_cast<int>(i))] = is_trivial(o, static_cast<int>(i)).verdict == Triviality::Trivial;

    std::vector<CheckReport> out;
    out.push_back(run(
        "identities are trivial", sz(c.zero_count()),
        [&](std::size_t x) -> std::optional<std::string> {
            if (!triv[sz(c.id1(static_cast<int>(x)))]) return "the identity on " + c.zero_label(static_cast<int>(x)) + " is not trivial";
            return std::nullopt;
        },
        opts.exec));
    out.push_back(run(
        "trivial morphisms compose", n1,
        [&](std::size_t i) -> std::optional<std::string> {
            if (!triv[i]) return std::nullopt;
            const int f = static_cast<int>(i);
            for (int g : c.out_of(c.one(f).dst))
                if (triv[sz(g)] && !triv[sz(c.hcomp1(g, f))])
                    return c.one_label(g) + " o " + c.one_label(f) + " is not trivial";
            return std::nullopt;
        },
        opts.exec));
    out.push_back(run(
        "fiber matching", n1,
        [&](std::size_t i) -> std::optional<std::string> {
            if (!triv[i]) return std::nullopt;
            const int phi = static_cast<int>(i);
            for (int u : o.fib0[i])
                if (o.unit[sz(u)] != u) return "a fiber of the trivial " + c.one_label(phi) + " is not lali-terminal";
            for (int psi : c.into(c.one(phi).src))
                if (o.fib0[sz(c.hcomp1(phi, psi))] != o.fib0[sz(psi)])
                    return "fib(" + c.one_label(phi) + " o " + c.one_label(psi) + ") != fib(" + c.one_label(psi) + ")";
            return std::nullopt;
        },
        opts.exec));
    return out;
}

// ---------------------------------------------------------------------------

Extraction extract_operad(const SplitFibration& s, std::string name) {
    const auto& o = s.o;
    const auto& c = o.cat;
    int top = 0;
    for (int k : o.card0) top = std::max(top, k);
    if (top == 0) throw Error(Error::Kind::Invalid, "extract_operad: every 0-cell has cardinality 0");

    std::vector<int> comps = c.components();
    int unit = -1;
    for (int x = 0; x < c.zero_count(); ++x) {
        if (o.card0[sz(x)] == 0) continue;
        if (unit < 0) unit = o.unit[sz(x)];
        else if (o.unit[sz(x)] != unit)
            throw Error(Error::Kind::Invalid, "extract_operad: cells of non-zero cardinality span several components");
    }
    (void)comps;

    Extraction ex;
    ex.objects.resize(sz(top));
    ex.morphisms.resize(sz(top));
    std::vector<int> local(sz(c.zero_count()), -1);
    for (int x = 0; x < c.zero_count(); ++x) {
        const int n = o.card0[sz(x)];
        if (n == 0) continue;
        local[sz(x)] = static_cast<int>(ex.objects[sz(n - 1)].size());
        ex.objects[sz(n - 1)].push_back(x);
    }
    std::vector<int> mor_local(sz(c.one_count()), -1);
    std::vector<FinCat> comps_out;
    for (int n = 1; n <= top; ++n) {
        const auto& objs = ex.objects[sz(n - 1)];
        auto& mors = ex.morphisms[sz(n - 1)];
        std::vector<std::string> onames, mnames;
        for (int x : objs) onames.push_back(c.zero_label(x));
        std::vector<Arrow> arrows;
        for (int a : objs)
            for (int b : objs)
                for (int p : c.hom(b, a))
                    if (is_trivial(o, p).verdict == Triviality::Trivial) {
                        mor_local[sz(p)] = static_cast<int>(mors.size());
                        mors.push_back(p);
                        mnames.push_back(c.one_label(p));
                        arrows.push_back({local[sz(a)], local[sz(b)]});
                    }
        std::vector<int> ids;
        for (int x : objs) {
            const int id = mor_local[sz(c.id1(x))];
            if (id < 0) throw Error(Error::Kind::Invalid, "extract_operad: the identity on " + c.zero_label(x) + " is not trivial");
            ids.push_back(id);
        }
        std::vector<std::array<int, 3>> comp;
        for (std::size_t f = 0; f < mors.size(); ++f)
            for (std::size_t g = 0; g < mors.size(); ++g)
                if (arrows[f].dst == arrows[g].src) {
                    const int h = mor_local[sz(c.hcomp1(mors[f], mors[g]))];
                    if (h < 0) throw Error(Error::Kind::Invalid, "extract_operad: trivial 1-cells do not compose to a trivial 1-cell");
                    comp.push_back({static_cast<int>(g), static_cast<int>(f), h});
                }
        comps_out.emplace_back(std::move(onames), std::move(mnames), std::move(arrows), std::move(ids), comp);
    }

    auto on_objects = [&](const Surjection& g, std::span<const int> args) {
        const int target = ex.objects[sz(g.cod() - 1)][sz(args[0])];
        auto sizes = g.fiber_sizes();
        std::vector<int> fib;
        for (std::size_t i = 0; i < sizes.size(); ++i) fib.push_back(ex.objects[sz(sizes[i] - 1)][sz(args[i + 1])]);
        return local[sz(c.one(s.lift(g, target, fib)).src)];
    };
    auto on_morphisms = [&](const Surjection& g, std::span<const int> args) {
        const int phi = ex.morphisms[sz(g.cod() - 1)][sz(args[0])];  // c'' → c' in O
        auto sizes = g.fiber_sizes();
        std::vector<int> b1, b2, psi;
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            const int p = ex.morphisms[sz(sizes[i] - 1)][sz(args[i + 1])];  // b''_i → b'_i in O
            psi.push_back(p);
            b2.push_back(c.one(p).src);
            b1.push_back(c.one(p).dst);
        }
        const int l1 = s.lift(g, c.one(phi).dst, b1);
        const int l2 = s.lift(g, c.one(phi).src, b2);
        const int theta = c.hcomp1(phi, l2);
        int found = -1;
        for (int t : o.triangles_between(l1, theta))
            if (o.fib1[sz(t)] == psi) {
                if (found >= 0) throw Error(Error::Kind::Invalid, "extract_operad: the chosen lift " + c.one_label(l1) + " is not cartesian");
                found = t;
            }
        if (found < 0) throw Error(Error::Kind::Invalid, "extract_operad: no filler over the chosen lift " + c.one_label(l1));
        const int d2 = o.triangles[sz(found)].psi;
        const int m = mor_local[sz(d2)];
        if (m < 0) throw Error(Error::Kind::Invalid, "extract_operad: the induced 1-cell " + c.one_label(d2) + " is not trivial");
        return m;
    };
    if (o.card0[sz(unit)] != 1) throw Error(Error::Kind::Invalid, "extract_operad: the lali-terminal object has cardinality != 1");
    ex.operad = TruncatedOperad::build(std::move(name), top, std::move(comps_out), local[sz(unit)], on_objects, on_morphisms);
    return ex;
}

SplitFibration relabel_zero_cells(const SplitFibration& s, const std::vector<int>& perm) {
    const auto& o = s.o;
    if (perm.size() != sz(o.cat.zero_count())) throw Error(Error::Kind::Arity, "relabel_zero_cells: permutation has the wrong size");
    std::vector<int> check(perm);
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < check.size(); ++i)
        if (check[i] != static_cast<int>(i)) throw Error(Error::Kind::Invalid, "relabel_zero_cells: not a permutation");
    SplitFibration out;
    auto& n = out.o;
    n.cat = relabel(o.cat, perm);
    n.card0.assign(perm.size(), 0);
    n.unit.assign(perm.size(), 0);
    n.eps.assign(perm.size(), 0);
    for (std::size_t x = 0; x < perm.size(); ++x) {
        n.card0[sz(perm[x])] = o.card0[x];
        n.unit[sz(perm[x])] = perm[sz(o.unit[x])];
        n.eps[sz(perm[x])] = o.eps[x];
    }
    n.card1 = o.card1;
    n.fib0 = o.fib0;
    for (auto& f : n.fib0)
        for (auto& z : f) z = perm[sz(z)];
    n.triangles = o.triangles;
    n.fib1 = o.fib1;
    n.slice2 = o.slice2;
    n.fib2 = o.fib2;
    n.index();
    for (const auto& [k, p] : s.lifts) {
        LiftKey nk{k.g, perm[sz(k.target)], k.fibers};
        for (auto& z : nk.fibers) z = perm[sz(z)];
        out.lifts.emplace(std::move(nk), p);
    }
    return out;
}

std::optional<std::string> operadic_functor_defect(const SplitFibration& s, const SplitFibration& t, const TwoFunctor& f) {
    const auto& a = s.o;
    const auto& b = t.o;
    if (auto d = two_functor_defect(a.cat, b.cat, f)) return d;
    auto m0 = [&](int x) { return f.map0[sz(x)]; };
    for (int x = 0; x < a.cat.zero_count(); ++x) {
        if (b.card0[sz(m0(x))] != a.card0[sz(x)]) return "cardinality of " + a.cat.zero_label(x) + " is not preserved";
        if (a.card0[sz(x)] != 0 && m0(a.unit[sz(x)]) != b.unit[sz(m0(x))])
            return "the chosen lali-terminal object of " + a.cat.zero_label(x) + " is not preserved";
    }
    for (int p = 0; p < a.cat.one_count(); ++p) {
        const int q = f.map1[sz(p)];
        if (b.card1[sz(q)] != a.card1[sz(p)]) return "cardinality of " + a.cat.one_label(p) + " is not preserved";
        std::vector<int> fz;
        for (int z : a.fib0[sz(p)]) fz.push_back(m0(z));
        if (b.fib0[sz(q)] != fz) return "fibers of " + a.cat.one_label(p) + " are not preserved";
    }
    std::vector<int> tmap(a.triangles.size());
    for (std::size_t i = 0; i < a.triangles.size(); ++i) {
        const auto& tr = a.triangles[i];
        const int j = b.find_triangle(f.map1[sz(tr.psi)], f.map1[sz(tr.phi)], f.map2[sz(tr.alpha)]);
        if (j < 0) return "image of triangle " + std::to_string(i) + " is missing";
        tmap[i] = j;
        std::vector<int> f1;
        for (int p : a.fib1[i]) f1.push_back(f.map1[sz(p)]);
        if (b.fib1[sz(j)] != f1) return "fibers of triangle " + std::to_string(i) + " are not preserved";
    }
    for (std::size_t i = 0; i < a.slice2.size(); ++i) {
        const auto& sc = a.slice2[i];
        const int j = b.find_slice2(tmap[sz(sc.source)], tmap[sz(sc.target)], f.map2[sz(sc.gamma)]);
        if (j < 0) return "image of slice 2-cell " + std::to_string(i) + " is missing";
        std::vector<int> f2;
        for (int p : a.fib2[i]) f2.push_back(f.map2[sz(p)]);
        if (b.fib2[sz(j)] != f2) return "fibers of slice 2-cell " + std::to_string(i) + " are not preserved";
    }
    for (const auto& [k, p] : s.lifts) {
        std::vector<int> fz;
        for (int z : k.fibers) fz.push_back(m0(z));
        auto it = t.lifts.find(LiftKey{k.g, m0(k.target), fz});
        if (it == t.lifts.end() || it->second != f.map1[sz(p)])
            return "chosen lift " + a.cat.one_label(p) + " is not preserved";
    }
    return std::nullopt;
}

std::vector<TwoFunctor> enumerate_operadic_functors(const SplitFibration& s, const SplitFibration& t, std::size_t cap) {
    const auto& a = s.o;
    const auto& b = t.o;
    const auto& sc = a.cat;
    const auto& tc = b.cat;
    const int n0 = sc.zero_count(), n1 = sc.one_count(), n2 = sc.two_count();
    std::size_t nodes = 0;
    auto tick = [&] {
        if (++nodes > cap)
            throw Error(Error::Kind::SearchTooLarge, "enumerate_operadic_functors: more than " + std::to_string(cap) + " partial assignments");
    };

    // Constraints checked once all their cells are assigned.
    std::vector<std::vector<std::array<int, 3>>> c1(sz(n1)), c2v(sz(n2)), c2h(sz(n2));
    for (int f = 0; f < n1; ++f)
        for (int g : sc.out_of(sc.one(f).dst)) {
            const int gf = sc.hcomp1(g, f);
            c1[sz(std::max({f, g, gf}))].push_back({g, f, gf});
        }
    std::vector<std::vector<int>> from_zero(sz(n0));
    for (int x = 0; x < n2; ++x) from_zero[sz(sc.one(sc.two(x).src).src)].push_back(x);
    for (int x = 0; x < n2; ++x) {
        for (int y : sc.twos_from(sc.two(x).dst)) {
            const int yx = sc.vcomp(y, x);
            c2v[sz(std::max({x, y, yx}))].push_back({y, x, yx});
        }
        for (int e : from_zero[sz(sc.one(sc.two(x).src).dst)]) {
            const int r = sc.hcomp2(e, x);
            c2h[sz(std::max({x, e, r}))].push_back({e, x, r});
        }
    }

    std::vector<std::vector<int>> cand0(sz(n0));
    for (int x = 0; x < n0; ++x)
        for (int y = 0; y < tc.zero_count(); ++y)
            if (b.card0[sz(y)] == a.card0[sz(x)]) cand0[sz(x)].push_back(y);

    std::vector<TwoFunctor> out;
    TwoFunctor cur;
    cur.map0.assign(sz(n0), -1);
    cur.map1.assign(sz(n1), -1);
    cur.map2.assign(sz(n2), -1);

    std::function<void(int)> assign2 = [&](int x) {
        if (x == n2) {
            if (!operadic_functor_defect(s, t, cur)) out.push_back(cur);
            return;
        }
        const auto& e = sc.two(x);
        for (int y : tc.twos_between(cur.map1[sz(e.src)], cur.map1[sz(e.dst)])) {
            tick();
            cur.map2[sz(x)] = y;
            bool ok = true;
            for (int p = 0; p < n1 && ok; ++p)
                if (sc.id2(p) == x && tc.id2(cur.map1[sz(p)]) != y) ok = false;
            for (const auto& [q, r, qr] : c2v[sz(x)])
                if (ok && tc.vcomp(cur.map2[sz(q)], cur.map2[sz(r)]) != cur.map2[sz(qr)]) ok = false;
            for (const auto& [q, r, qr] : c2h[sz(x)])
                if (ok && tc.hcomp2(cur.map2[sz(q)], cur.map2[sz(r)]) != cur.map2[sz(qr)]) ok = false;
            if (ok) assign2(x + 1);
        }
        cur.map2[sz(x)] = -1;
    };

    std::function<void(int)> assign1 = [&](int p) {
        if (p == n1) {
            assign2(0);
            return;
        }
        const auto& e = sc.one(p);
        std::vector<int> fz;
        for (int z : a.fib0[sz(p)]) fz.push_back(cur.map0[sz(z)]);
        for (int q : tc.hom(cur.map0[sz(e.src)], cur.map0[sz(e.dst)])) {
            if (b.card1[sz(q)] != a.card1[sz(p)] || b.fib0[sz(q)] != fz) continue;
            if (sc.id1(e.src) == p && tc.id1(cur.map0[sz(e.src)]) != q) continue;
            tick();
            cur.map1[sz(p)] = q;
            bool ok = true;
            for (const auto& [g, f, gf] : c1[sz(p)])
                if (tc.hcomp1(cur.map1[sz(g)], cur.map1[sz(f)]) != cur.map1[sz(gf)]) {
                    ok = false;
                    break;
                }
            if (ok) assign1(p + 1);
        }
        cur.map1[sz(p)] = -1;
    };

    std::function<void(int)> assign0 = [&](int x) {
        if (x == n0) {
            for (int z = 0; z < n0; ++z)
                if (a.card0[sz(z)] != 0 && cur.map0[sz(a.unit[sz(z)])] != b.unit[sz(cur.map0[sz(z)])]) return;
            assign1(0);
            return;
        }
        for (int y : cand0[sz(x)]) {
            tick();
            cur.map0[sz(x)] = y;
            assign0(x + 1);
        }
        cur.map0[sz(x)] = -1;
    };
    assign0(0);
    return out;
}

SplitFibration delta_s(int bound) {
    if (bound < 1) throw Error(Error::Kind::Arity, "delta_s: bound must be positive");
    SplitFibration s;
    auto& o = s.o;
    auto& c = o.cat;
    for (int n = 1; n <= bound; ++n) c.add_zero(std::to_string(n));
    std::map<Surjection, int> ids;
    std::vector<Surjection> maps;
    for (const auto& g : surjections_up_to(bound)) {
        ids.emplace(g, c.add_one(g.dom() - 1, g.cod() - 1, g.str()));
        maps.push_back(g);
    }
    for (std::size_t p = 0; p < maps.size(); ++p) c.add_two(static_cast<int>(p), static_cast<int>(p), "1");
    for (int n = 1; n <= bound; ++n) c.set_id1(n - 1, ids.at(Surjection::identity(n)));
    for (std::size_t p = 0; p < maps.size(); ++p) c.set_id2(static_cast<int>(p), static_cast<int>(p));
    for (std::size_t f = 0; f < maps.size(); ++f)
        for (std::size_t g = 0; g < maps.size(); ++g) {
            if (maps[f].cod() != maps[g].dom()) continue;
            const int gf = ids.at(compose(maps[f], maps[g]));
            c.set_hcomp1(static_cast<int>(g), static_cast<int>(f), gf);
            c.set_hcomp2(static_cast<int>(g), static_cast<int>(f), gf);
        }
    for (std::size_t p = 0; p < maps.size(); ++p) c.set_vcomp(static_cast<int>(p), static_cast<int>(p), static_cast<int>(p));
    c.finalize();

    for (int n = 1; n <= bound; ++n) {
        o.card0.push_back(n);
        o.unit.push_back(0);
        o.eps.push_back(ids.at(Surjection::bang(n)));
    }
    for (const auto& g : maps) {
        o.card1.push_back(g);
        std::vector<int> fz;
        for (int k : g.fiber_sizes()) fz.push_back(k - 1);
        o.fib0.push_back(std::move(fz));
    }
    for (std::size_t f = 0; f < maps.size(); ++f)
        for (std::size_t g = 0; g < maps.size(); ++g) {
            if (maps[f].cod() != maps[g].dom()) continue;
            const int gf = ids.at(compose(maps[f], maps[g]));
            o.triangles.push_back({static_cast<int>(f), static_cast<int>(g), gf, gf});
            std::vector<int> f1;
            for (int i = 1; i <= maps[g].cod(); ++i) f1.push_back(ids.at(induced_map(maps[f], maps[g], i)));
            o.fib1.push_back(std::move(f1));
        }
    for (std::size_t t = 0; t < o.triangles.size(); ++t) {
        o.slice2.push_back({static_cast<int>(t), static_cast<int>(t), o.triangles[t].psi});
        o.fib2.push_back(o.fib1[t]);
    }
    o.index();
    for (std::size_t p = 0; p < maps.size(); ++p) {
        const auto& g = maps[p];
        s.lifts.emplace(LiftKey{g, g.cod() - 1, o.fib0[p]}, static_cast<int>(p));
    }
    return s;
}

} // namespace opint
