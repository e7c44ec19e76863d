#include "opint/integration.hpp"

#include <algorithm>

namespace opint {

namespace {

// a_j for j ∈ g^{-1}(i), for every i.
std::vector<std::vector<int>> blocks(std::span<const int> seq, const Surjection& g) {
    return block_cut(seq, g);
}

} // namespace

Integration::Integration(const TruncatedOperad& p) : p_(&p) {
    offsets_.push_back(0);
    for (int m = 1; m <= p.bound(); ++m) {
        for (int a = 0; a < p.component(m).object_count(); ++a) zeros_.push_back({m, a});
        offsets_.push_back(static_cast<int>(zeros_.size()));
    }
    slots_ = std::make_unique<Slot[]>(zeros_.size() * zeros_.size());
}

int Integration::zero_id(const ZeroCell& x) const {
    if (x.m < 1 || x.m > p_->bound())
        throw Error(Error::Kind::Truncation, "0-cell arity " + std::to_string(x.m) + " outside 1.." +
                                                 std::to_string(p_->bound()));
    if (x.a < 0 || x.a >= p_->component(x.m).object_count())
        throw Error(Error::Kind::Range, "0-cell object " + std::to_string(x.a) + " not in P_" + std::to_string(x.m));
    return offsets_[static_cast<std::size_t>(x.m - 1)] + x.a;
}

std::string Integration::label(const ZeroCell& x) const {
    return "[" + std::to_string(x.m) + "," + p_->component(x.m).object_name(x.a) + "]";
}

std::string Integration::label(const OneCell& c) const {
    std::string s = "[" + c.f.str() + ";";
    auto sizes = c.f.fiber_sizes();
    for (std::size_t i = 0; i < c.a.size(); ++i) {
        if (i) s += ",";
        s += p_->component(sizes[i]).object_name(c.a[i]);
    }
    return s + ";" + p_->component(c.f.dom()).morphism_name(c.alpha) + "]";
}

std::string Integration::label(const TwoCell& c) const {
    std::string s = "(";
    auto sizes = c.source.f.fiber_sizes();
    for (std::size_t i = 0; i < c.delta.size(); ++i) {
        if (i) s += ",";
        s += p_->component(sizes[i]).morphism_name(c.delta[i]);
    }
    return s + ")";
}

void Integration::build_hom(const ZeroCell& x, const ZeroCell& y, Hom& out) const {
    const auto& pm = p_->component(x.m);
    std::vector<int> digits, args;
    for (const auto& f : enumerate_surjections(x.m, y.m)) {
        const auto& t = p_->mu(f);
        std::vector<int> radix(t.obj_radix.begin() + 1, t.obj_radix.end());
        std::size_t total = 1;
        for (int r : radix) total *= static_cast<std::size_t>(r);
        const std::size_t first = out.cells.size();
        for (std::size_t code = 0; code < total; ++code) {
            decode_tuple(code, radix, digits);
            args.assign(1, y.a);
            args.insert(args.end(), digits.begin(), digits.end());
            const int s = p_->mu_obj(f, args);
            for (int alpha : pm.hom(s, x.a)) out.cells.push_back({x, y, f, digits, alpha});
        }
        // 2-cells only join 1-cells with the same surjection.
        auto sizes = f.fiber_sizes();
        const int id_b = p_->component(y.m).identity(y.a);
        for (std::size_t i = first; i < out.cells.size(); ++i)
            for (std::size_t j = first; j < out.cells.size(); ++j) {
                const auto& p1 = out.cells[i];
                const auto& p2 = out.cells[j];
                std::vector<std::span<const int>> choices;
                bool empty = false;
                for (std::size_t r = 0; r < sizes.size(); ++r) {
                    choices.push_back(p_->component(sizes[r]).hom(p1.a[r], p2.a[r]));
                    if (choices.back().empty()) empty = true;
                }
                if (empty) continue;
                std::vector<int> cradix;
                for (auto c : choices) cradix.push_back(static_cast<int>(c.size()));
                std::size_t n = 1;
                for (int r : cradix) n *= static_cast<std::size_t>(r);
                for (std::size_t code = 0; code < n; ++code) {
                    decode_tuple(code, cradix, digits);
                    std::vector<int> delta(sizes.size());
                    args.assign(1, id_b);
                    for (std::size_t r = 0; r < sizes.size(); ++r) {
                        delta[r] = choices[r][static_cast<std::size_t>(digits[r])];
                        args.push_back(delta[r]);
                    }
                    auto lhs = pm.compose(p2.alpha, p_->mu_mor(f, args));
                    if (lhs && *lhs == p1.alpha) {
                        out.twos.push_back({static_cast<int>(i), static_cast<int>(j)});
                        out.two_deltas.push_back(std::move(delta));
                    }
                }
            }
    }
}

const Integration::Hom& Integration::hom(const ZeroCell& x, const ZeroCell& y) const {
    const auto ix = static_cast<std::size_t>(zero_id(x));
    const auto iy = static_cast<std::size_t>(zero_id(y));
    auto& slot = slots_[ix * zeros_.size() + iy];
    std::call_once(slot.once, [&] {
        auto h = std::make_unique<Hom>();
        build_hom(x, y, *h);
        slot.hom = std::move(h);
    });
    return *slot.hom;
}

FinCat Integration::hom_category(const ZeroCell& x, const ZeroCell& y) const {
    const auto& h = hom(x, y);
    std::vector<std::string> objects, names;
    for (const auto& c : h.cells) objects.push_back(label(c));
    std::vector<Arrow> arrows;
    std::vector<int> ids(h.cells.size(), -1);
    std::vector<std::vector<int>> from(h.cells.size());
    for (std::size_t t = 0; t < h.twos.size(); ++t) {
        const auto& e = h.twos[t];
        arrows.push_back({e.src, e.dst});
        names.push_back(label(TwoCell{h.cells[static_cast<std::size_t>(e.src)], h.cells[static_cast<std::size_t>(e.dst)],
                                      h.two_deltas[t]}));
        from[static_cast<std::size_t>(e.src)].push_back(static_cast<int>(t));
        if (e.src == e.dst) {
            const auto& c = h.cells[static_cast<std::size_t>(e.src)];
            auto sizes = c.f.fiber_sizes();
            bool all_id = true;
            for (std::size_t r = 0; r < sizes.size(); ++r)
                if (!p_->component(sizes[r]).is_identity(h.two_deltas[t][r])) all_id = false;
            if (all_id) ids[static_cast<std::size_t>(e.src)] = static_cast<int>(t);
        }
    }
    std::map<std::pair<int, std::vector<int>>, int> by_delta;
    for (std::size_t t = 0; t < h.twos.size(); ++t) by_delta[{h.twos[t].src, h.two_deltas[t]}] = static_cast<int>(t);
    std::vector<std::array<int, 3>> comp;
    for (std::size_t a = 0; a < h.twos.size(); ++a)
        for (int b : from[static_cast<std::size_t>(h.twos[a].dst)]) {
            const auto& c = h.cells[static_cast<std::size_t>(h.twos[a].src)];
            auto sizes = c.f.fiber_sizes();
            std::vector<int> d(sizes.size());
            for (std::size_t r = 0; r < sizes.size(); ++r)
                d[r] = p_->component(sizes[r]).compose_or_throw(h.two_deltas[static_cast<std::size_t>(b)][r],
                                                                h.two_deltas[a][r]);
            comp.push_back({b, static_cast<int>(a), by_delta.at({h.twos[a].src, d})});
        }
    return FinCat(std::move(objects), std::move(names), std::move(arrows), std::move(ids), comp);
}

OneCell Integration::identity(const ZeroCell& x) const {
    zero_id(x);
    return {x, x, Surjection::identity(x.m), std::vector<int>(static_cast<std::size_t>(x.m), p_->unit()),
            p_->component(x.m).identity(x.a)};
}

OneCell Integration::h_compose(const OneCell& second, const OneCell& first) const {
    if (first.dst != second.src)
        throw Error(Error::Kind::Composition, "h_compose: " + label(first) + " ends at " + label(first.dst) +
                                                  " but " + label(second) + " starts at " + label(second.src));
    const auto& f = first.f;
    const auto& g = second.f;
    auto blk = blocks(first.a, g);
    std::vector<int> comps;
    for (int i = 1; i <= g.cod(); ++i) {
        std::vector<int> args{second.a[static_cast<std::size_t>(i - 1)]};
        const auto& b = blk[static_cast<std::size_t>(i - 1)];
        args.insert(args.end(), b.begin(), b.end());
        comps.push_back(p_->mu_obj(induced_map(f, g, i), args));
    }
    std::vector<int> args{second.alpha};
    auto sizes = f.fiber_sizes();
    for (std::size_t j = 0; j < first.a.size(); ++j) args.push_back(p_->component(sizes[j]).identity(first.a[j]));
    const int whisker = p_->mu_mor(f, args);
    const int alpha = p_->component(f.dom()).compose_or_throw(first.alpha, whisker);
    return {first.src, second.dst, compose(f, g), std::move(comps), alpha};
}

TwoCell Integration::identity2(const OneCell& c) const {
    auto sizes = c.f.fiber_sizes();
    std::vector<int> d;
    for (std::size_t i = 0; i < c.a.size(); ++i) d.push_back(p_->component(sizes[i]).identity(c.a[i]));
    return {c, c, std::move(d)};
}

TwoCell Integration::v_compose(const TwoCell& second, const TwoCell& first) const {
    if (!(first.target == second.source))
        throw Error(Error::Kind::Composition, "v_compose: 2-cells do not meet at a common 1-cell");
    auto sizes = first.source.f.fiber_sizes();
    std::vector<int> d;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        d.push_back(p_->component(sizes[i]).compose_or_throw(second.delta[i], first.delta[i]));
    return {first.source, second.target, std::move(d)};
}

TwoCell Integration::h_compose_2cells(const TwoCell& eps, const TwoCell& delta) const {
    OneCell src = h_compose(eps.source, delta.source);
    OneCell dst = h_compose(eps.target, delta.target);
    const auto& f = delta.source.f;
    const auto& g = eps.source.f;
    auto blk = blocks(delta.delta, g);
    std::vector<int> d;
    for (int i = 1; i <= g.cod(); ++i) {
        std::vector<int> args{eps.delta[static_cast<std::size_t>(i - 1)]};
        const auto& b = blk[static_cast<std::size_t>(i - 1)];
        args.insert(args.end(), b.begin(), b.end());
        d.push_back(p_->mu_mor(induced_map(f, g, i), args));
    }
    return {std::move(src), std::move(dst), std::move(d)};
}

std::optional<std::string> Integration::one_cell_defect(const OneCell& c) const {
    try {
        zero_id(c.src);
        zero_id(c.dst);
        if (c.f.dom() != c.src.m || c.f.cod() != c.dst.m) return "surjection " + c.f.str() + " does not match the endpoints";
        auto sizes = c.f.fiber_sizes();
        if (c.a.size() != sizes.size()) return "expected " + std::to_string(sizes.size()) + " components";
        std::vector<int> args{c.dst.a};
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            if (c.a[i] < 0 || c.a[i] >= p_->component(sizes[i]).object_count())
                return "component " + std::to_string(i + 1) + " is not an object of P_" + std::to_string(sizes[i]);
            args.push_back(c.a[i]);
        }
        const auto& pm = p_->component(c.src.m);
        if (c.alpha < 0 || c.alpha >= pm.morphism_count()) return "alpha is not a morphism of P_" + std::to_string(c.src.m);
        const auto& ar = pm.arrow(c.alpha);
        if (ar.src != p_->mu_obj(c.f, args)) return "alpha does not start at mu_f(b, a)";
        if (ar.dst != c.src.a) return "alpha does not end at the source object";
    } catch (const Error& e) {
        return std::string(e.what());
    }
    return std::nullopt;
}

std::optional<std::string> Integration::two_cell_defect(const TwoCell& c) const {
    if (auto d = one_cell_defect(c.source)) return "source: " + *d;
    if (auto d = one_cell_defect(c.target)) return "target: " + *d;
    if (c.source.src != c.target.src || c.source.dst != c.target.dst) return "1-cells are not parallel";
    if (c.source.f != c.target.f) return "no 2-cells between 1-cells over different surjections";
    auto sizes = c.source.f.fiber_sizes();
    if (c.delta.size() != sizes.size()) return "wrong number of components";
    std::vector<int> args{p_->component(c.source.dst.m).identity(c.source.dst.a)};
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const auto& pk = p_->component(sizes[i]);
        if (c.delta[i] < 0 || c.delta[i] >= pk.morphism_count()) return "component out of range";
        const auto& ar = pk.arrow(c.delta[i]);
        if (ar.src != c.source.a[i] || ar.dst != c.target.a[i])
            return "component " + std::to_string(i + 1) + " has wrong endpoints";
        args.push_back(c.delta[i]);
    }
    auto lhs = p_->component(c.source.src.m).compose(c.target.alpha, p_->mu_mor(c.source.f, args));
    if (!lhs || *lhs != c.source.alpha) return "alpha'' o mu_f(1, delta) != alpha'";
    return std::nullopt;
}

std::pair<OneCell, OneCell> Integration::factorize(const OneCell& phi) const {
    std::vector<int> args{phi.dst.a};
    args.insert(args.end(), phi.a.begin(), phi.a.end());
    const int s = p_->mu_obj(phi.f, args);
    const int m = phi.src.m;
    ZeroCell mid{m, s};
    OneCell e{phi.src, mid, Surjection::identity(m), std::vector<int>(static_cast<std::size_t>(m), p_->unit()), phi.alpha};
    OneCell mm{mid, phi.dst, phi.f, phi.a, p_->component(m).identity(s)};
    return {e, mm};
}

bool Integration::in_E(const OneCell& c) const {
    return c.f.is_identity() && std::all_of(c.a.begin(), c.a.end(), [&](int a) { return a == p_->unit(); });
}

bool Integration::in_M(const OneCell& c) const { return p_->component(c.src.m).is_identity(c.alpha); }

std::vector<ZeroCell> Integration::fibers(const OneCell& phi) const {
    auto sizes = phi.f.fiber_sizes();
    std::vector<ZeroCell> out;
    for (std::size_t i = 0; i < sizes.size(); ++i) out.push_back({sizes[i], phi.a[i]});
    return out;
}

std::vector<OneCell> Integration::fibers(const LaxTriangle& t) const {
    const auto& g = t.phi.f;
    auto blk = blocks(t.psi.a, g);
    auto csizes = t.theta.f.fiber_sizes();
    auto bsizes = g.fiber_sizes();
    std::vector<OneCell> out;
    for (int i = 1; i <= g.cod(); ++i) {
        const auto ii = static_cast<std::size_t>(i - 1);
        out.push_back({{csizes[ii], t.theta.a[ii]}, {bsizes[ii], t.phi.a[ii]}, induced_map(t.psi.f, g, i),
                       blk[ii], t.delta[ii]});
    }
    return out;
}

std::vector<TwoCell> Integration::fibers(const LaxTriangle& source, const LaxTriangle& target,
                                         std::span<const int> xi) const {
    auto fs = fibers(source);
    auto ft = fibers(target);
    auto blk = blocks(xi, source.phi.f);
    std::vector<TwoCell> out;
    for (std::size_t i = 0; i < fs.size(); ++i) out.push_back({fs[i], ft[i], blk[i]});
    return out;
}

OneCell Integration::cartesian_lift(const Surjection& g, const ZeroCell& c, std::span<const ZeroCell> fib) const {
    zero_id(c);
    if (c.m != g.cod())
        throw Error(Error::Kind::Arity, "cartesian_lift: target arity " + std::to_string(c.m) + " is not the codomain of " + g.str());
    auto sizes = g.fiber_sizes();
    if (fib.size() != sizes.size())
        throw Error(Error::Kind::Arity, "cartesian_lift: expected " + std::to_string(sizes.size()) + " fibers");
    std::vector<int> args{c.a}, a;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (fib[i].m != sizes[i])
            throw Error(Error::Kind::Arity, "cartesian_lift: fiber " + std::to_string(i + 1) + " has arity " +
                                                std::to_string(fib[i].m) + ", expected " + std::to_string(sizes[i]));
        zero_id(fib[i]);
        args.push_back(fib[i].a);
        a.push_back(fib[i].a);
    }
    const int s = p_->mu_obj(g, args);
    return {{g.dom(), s}, c, g, std::move(a), p_->component(g.dom()).identity(s)};
}

OneCell Integration::terminal_map(const ZeroCell& x) const {
    zero_id(x);
    return {x, {1, p_->unit()}, Surjection::bang(x.m), {x.a}, p_->component(x.m).identity(x.a)};
}

// ---------------------------------------------------------------------------

CheckReport check_factorization(const Integration& ip, const CheckOptions& opts) {
    const auto& zs = ip.zero_cells();
    const std::size_t n0 = zs.size();
    // Flatten (x, y, cell).
    std::vector<std::array<int, 3>> items;
    for (std::size_t x = 0; x < n0; ++x)
        for (std::size_t y = 0; y < n0; ++y) {
            const auto& h = ip.hom(zs[x], zs[y]);
            for (std::size_t c = 0; c < h.cells.size(); ++c)
                items.push_back({static_cast<int>(x), static_cast<int>(y), static_cast<int>(c)});
        }
    CheckReport r{"factorization", Verdict::Pass, items.size(), false, std::nullopt};
    auto fail = find_first_failure(
        items.size(),
        [&](std::size_t i) -> std::optional<std::string> {
            const auto& [x, y, c] = items[i];
            const auto& phi = ip.hom(zs[static_cast<std::size_t>(x)], zs[static_cast<std::size_t>(y)]).cells[static_cast<std::size_t>(c)];
            int found = 0;
            for (std::size_t z = 0; z < n0; ++z) {
                const auto& he = ip.hom(zs[static_cast<std::size_t>(x)], zs[z]);
                const auto& hm = ip.hom(zs[z], zs[static_cast<std::size_t>(y)]);
                for (const auto& e : he.cells) {
                    if (!ip.in_E(e)) continue;
                    for (const auto& m : hm.cells)
                        if (ip.in_M(m) && ip.h_compose(m, e) == phi) ++found;
                }
            }
            if (found != 1)
                return ip.label(phi) + " has " + std::to_string(found) + " E-then-M factorizations";
            auto [e, m] = ip.factorize(phi);
            if (!ip.in_E(e) || !ip.in_M(m) || !(ip.h_compose(m, e) == phi))
                return "factorize(" + ip.label(phi) + ") is not the factorization";
            return std::nullopt;
        },
        opts.exec);
    if (fail) {
        r.verdict = Verdict::Fail;
        r.counterexample = fail->message;
    }
    return r;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> one_key(const MaterializedIntegration& mi, const OneCell& c) {
    std::vector<int> k{mi.zero_id(c.src), mi.zero_id(c.dst)};
    for (int v : c.f.values()) k.push_back(v);
    k.insert(k.end(), c.a.begin(), c.a.end());
    k.push_back(c.alpha);
    return k;
}

std::vector<int> two_key(const MaterializedIntegration& mi, const TwoCell& c) {
    std::vector<int> k{mi.one_id(c.source), mi.one_id(c.target)};
    k.insert(k.end(), c.delta.begin(), c.delta.end());
    return k;
}

} // namespace

int MaterializedIntegration::zero_id(const ZeroCell& x) const {
    auto it = zero_index.find(x);
    if (it == zero_index.end())
        throw Error(Error::Kind::Range, "no 0-cell [" + std::to_string(x.m) + "," + std::to_string(x.a) + "]");
    return it->second;
}

int MaterializedIntegration::one_id(const OneCell& c) const {
    auto it = one_index.find(one_key(*this, c));
    if (it == one_index.end()) throw Error(Error::Kind::Range, "1-cell not in the presentation");
    return it->second;
}

int MaterializedIntegration::two_id(const TwoCell& c) const {
    auto it = two_index.find(two_key(*this, c));
    if (it == two_index.end()) throw Error(Error::Kind::Range, "2-cell not in the presentation");
    return it->second;
}

MaterializedIntegration materialize(const Integration& ip, std::size_t cell_limit) {
    const auto& p = ip.operad();
    MaterializedIntegration mi;
    auto& o = mi.fibration.o;
    auto& cat = o.cat;
    mi.zeros = ip.zero_cells();
    for (std::size_t x = 0; x < mi.zeros.size(); ++x) {
        mi.zero_index.emplace(mi.zeros[x], static_cast<int>(x));
        cat.add_zero(ip.label(mi.zeros[x]));
    }
    for (const auto& x : mi.zeros)
        for (const auto& y : mi.zeros) {
            const auto& h = ip.hom(x, y);
            std::vector<int> gid;
            for (const auto& c : h.cells) {
                int id = cat.add_one(mi.zero_id(c.src), mi.zero_id(c.dst), ip.label(c));
                mi.one_index.emplace(one_key(mi, c), id);
                mi.ones.push_back(c);
                gid.push_back(id);
            }
            for (std::size_t t = 0; t < h.twos.size(); ++t) {
                TwoCell tc{h.cells[static_cast<std::size_t>(h.twos[t].src)], h.cells[static_cast<std::size_t>(h.twos[t].dst)],
                           h.two_deltas[t]};
                int id = cat.add_two(gid[static_cast<std::size_t>(h.twos[t].src)], gid[static_cast<std::size_t>(h.twos[t].dst)],
                                     ip.label(tc));
                mi.two_index.emplace(two_key(mi, tc), id);
                mi.twos.push_back(std::move(tc));
            }
        }
    for (std::size_t x = 0; x < mi.zeros.size(); ++x)
        cat.set_id1(static_cast<int>(x), mi.one_id(ip.identity(mi.zeros[x])));
    for (std::size_t p1 = 0; p1 < mi.ones.size(); ++p1)
        cat.set_id2(static_cast<int>(p1), mi.two_id(ip.identity2(mi.ones[p1])));
    cat.finalize();

    for (int f = 0; f < cat.one_count(); ++f)
        for (int g : cat.out_of(cat.one(f).dst))
            cat.set_hcomp1(g, f, mi.one_id(ip.h_compose(mi.ones[static_cast<std::size_t>(g)], mi.ones[static_cast<std::size_t>(f)])));
    for (int a = 0; a < cat.two_count(); ++a)
        for (int b : cat.twos_from(cat.two(a).dst))
            cat.set_vcomp(b, a, mi.two_id(ip.v_compose(mi.twos[static_cast<std::size_t>(b)], mi.twos[static_cast<std::size_t>(a)])));
    std::vector<std::vector<int>> twos_out(mi.zeros.size());
    for (int a = 0; a < cat.two_count(); ++a) twos_out[static_cast<std::size_t>(cat.one(cat.two(a).src).src)].push_back(a);
    for (int d = 0; d < cat.two_count(); ++d)
        for (int e : twos_out[static_cast<std::size_t>(cat.one(cat.two(d).src).dst)])
            cat.set_hcomp2(e, d, mi.two_id(ip.h_compose_2cells(mi.twos[static_cast<std::size_t>(e)], mi.twos[static_cast<std::size_t>(d)])));

    for (const auto& x : mi.zeros) o.card0.push_back(x.m);
    for (const auto& c : mi.ones) {
        o.card1.push_back(c.f);
        std::vector<int> fz;
        for (const auto& z : ip.fibers(c)) fz.push_back(mi.zero_id(z));
        o.fib0.push_back(std::move(fz));
    }

    // Triangles: every 2-cell out of every composite.
    for (int psi = 0; psi < cat.one_count(); ++psi)
        for (int phi : cat.out_of(cat.one(psi).dst)) {
            const int comp = cat.hcomp1(phi, psi);
            for (int alpha : cat.twos_from(comp)) {
                const int theta = cat.two(alpha).dst;
                o.triangles.push_back({psi, phi, theta, alpha});
                if (o.triangles.size() > cell_limit)
                    throw Error(Error::Kind::SearchTooLarge, "materialize: more than " + std::to_string(cell_limit) + " triangles");
                LaxTriangle lt{mi.ones[static_cast<std::size_t>(psi)], mi.ones[static_cast<std::size_t>(phi)],
                               mi.ones[static_cast<std::size_t>(theta)], mi.twos[static_cast<std::size_t>(alpha)].delta};
                std::vector<int> f1;
                for (const auto& c : ip.fibers(lt)) f1.push_back(mi.one_id(c));
                o.fib1.push_back(std::move(f1));
            }
        }
    o.index();

    for (int t = 0; t < static_cast<int>(o.triangles.size()); ++t) {
        const auto& tr = o.triangles[static_cast<std::size_t>(t)];
        for (int gamma : cat.twos_from(tr.psi)) {
            const int psi2 = cat.two(gamma).dst;
            const int whisker = cat.hcomp2(cat.id2(tr.phi), gamma);
            for (int alpha2 : cat.twos_between(cat.hcomp1(tr.phi, psi2), tr.theta)) {
                if (cat.vcomp(alpha2, whisker) != tr.alpha) continue;
                const int t2 = o.find_triangle(psi2, tr.phi, alpha2);
                o.slice2.push_back({t, t2, gamma});
                if (o.slice2.size() > cell_limit)
                    throw Error(Error::Kind::SearchTooLarge, "materialize: more than " + std::to_string(cell_limit) + " slice 2-cells");
                const auto& tr2 = o.triangles[static_cast<std::size_t>(t2)];
                LaxTriangle l1{mi.ones[static_cast<std::size_t>(tr.psi)], mi.ones[static_cast<std::size_t>(tr.phi)],
                               mi.ones[static_cast<std::size_t>(tr.theta)], mi.twos[static_cast<std::size_t>(tr.alpha)].delta};
                LaxTriangle l2{mi.ones[static_cast<std::size_t>(tr2.psi)], mi.ones[static_cast<std::size_t>(tr2.phi)],
                               mi.ones[static_cast<std::size_t>(tr2.theta)], mi.twos[static_cast<std::size_t>(tr2.alpha)].delta};
                std::vector<int> f2;
                for (const auto& c : ip.fibers(l1, l2, mi.twos[static_cast<std::size_t>(gamma)].delta)) f2.push_back(mi.two_id(c));
                o.fib2.push_back(std::move(f2));
            }
        }
    }

    const int u = mi.zero_id({1, p.unit()});
    for (const auto& x : mi.zeros) {
        o.unit.push_back(u);
        o.eps.push_back(mi.one_id(ip.terminal_map(x)));
    }
    o.index();

    for (const auto& g : surjections_up_to(p.bound())) {
        auto sizes = g.fiber_sizes();
        std::vector<int> radix;
        for (int s : sizes) radix.push_back(p.component(s).object_count());
        std::size_t total = 1;
        for (int r : radix) total *= static_cast<std::size_t>(r);
        std::vector<int> digits;
        for (int c = 0; c < p.component(g.cod()).object_count(); ++c)
            for (std::size_t code = 0; code < total; ++code) {
                decode_tuple(code, radix, digits);
                std::vector<ZeroCell> fz;
                std::vector<int> fid;
                for (std::size_t i = 0; i < sizes.size(); ++i) {
                    fz.push_back({sizes[i], digits[i]});
                    fid.push_back(mi.zero_id(fz.back()));
                }
                ZeroCell target{g.cod(), c};
                mi.fibration.lifts.emplace(LiftKey{g, mi.zero_id(target), fid}, mi.one_id(ip.cartesian_lift(g, target, fz)));
            }
    }
    return mi;
}

TwoFunctor integrate_morphism(const MaterializedIntegration& s, const MaterializedIntegration& t, const OperadMorphism& f) {
    auto fo = [&](int n, int a) { return f.components.at(static_cast<std::size_t>(n - 1)).obj_map.at(static_cast<std::size_t>(a)); };
    auto fm = [&](int n, int a) { return f.components.at(static_cast<std::size_t>(n - 1)).mor_map.at(static_cast<std::size_t>(a)); };
    auto map_zero = [&](const ZeroCell& x) { return ZeroCell{x.m, fo(x.m, x.a)}; };
    auto map_one = [&](const OneCell& c) {
        OneCell r{map_zero(c.src), map_zero(c.dst), c.f, {}, fm(c.src.m, c.alpha)};
        auto sizes = c.f.fiber_sizes();
        for (std::size_t i = 0; i < sizes.size(); ++i) r.a.push_back(fo(sizes[i], c.a[i]));
        return r;
    };
    TwoFunctor out;
    for (const auto& x : s.zeros) out.map0.push_back(t.zero_id(map_zero(x)));
    for (const auto& c : s.ones) out.map1.push_back(t.one_id(map_one(c)));
    for (const auto& c : s.twos) {
        TwoCell r{map_one(c.source), map_one(c.target), {}};
        auto sizes = c.source.f.fiber_sizes();
        for (std::size_t i = 0; i < sizes.size(); ++i) r.delta.push_back(fm(sizes[i], c.delta[i]));
        out.map2.push_back(t.two_id(r));
    }
    return out;
}

} // namespace opint
