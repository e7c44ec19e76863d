#include "opint/fincat.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace opint {

FinCat::FinCat(std::vector<std::string> objects, std::vector<std::string> morphism_names,
               std::vector<Arrow> morphisms, std::vector<int> identities,
               const std::vector<std::array<int, 3>>& comp)
    : objects_(std::move(objects)),
      names_(std::move(morphism_names)),
      arrows_(std::move(morphisms)),
      identities_(std::move(identities)) {
    if (names_.size() != arrows_.size())
        throw Error(Error::Kind::Invalid, "fincat: morphism names and arrows differ in length");
    if (identities_.size() != objects_.size())
        throw Error(Error::Kind::Invalid, "fincat: one identity per object is required");
    const int n_obj = object_count();
    const int n_mor = morphism_count();
    for (const auto& a : arrows_)
        if (a.src < 0 || a.src >= n_obj || a.dst < 0 || a.dst >= n_obj)
            throw Error(Error::Kind::Invalid, "fincat: arrow endpoint out of range");
    for (int id : identities_)
        if (id < 0 || id >= n_mor)
            throw Error(Error::Kind::Invalid, "fincat: identity id out of range");
    comp_.reserve(comp.size() + 2 * arrows_.size());
    for (const auto& [g, f, gf] : comp) {
        if (g < 0 || g >= n_mor || f < 0 || f >= n_mor || gf < 0 || gf >= n_mor)
            throw Error(Error::Kind::Invalid, "fincat: composition entry out of range");
        comp_[pair_key(g, f)] = gf;
    }
    for (int m = 0; m < n_mor; ++m) {
        const auto& a = arrows_[static_cast<std::size_t>(m)];
        comp_.try_emplace(pair_key(m, identities_[static_cast<std::size_t>(a.src)]), m);
        comp_.try_emplace(pair_key(identities_[static_cast<std::size_t>(a.dst)], m), m);
    }
}

FinCat::FinCat(const FinCat& other)
    : objects_(other.objects_),
      names_(other.names_),
      arrows_(other.arrows_),
      identities_(other.identities_),
      comp_(other.comp_) {}

FinCat& FinCat::operator=(const FinCat& other) {
    if (this != &other) {
        FinCat copy(other);
        *this = std::move(copy);
    }
    return *this;
}

std::optional<int> FinCat::compose(int g, int f) const {
    if (arrow(f).dst != arrow(g).src) return std::nullopt;
    auto it = comp_.find(pair_key(g, f));
    if (it == comp_.end()) return std::nullopt;
    return it->second;
}

int FinCat::compose_or_throw(int g, int f) const {
    auto r = compose(g, f);
    if (!r)
        throw Error(Error::Kind::Composition,
                    "fincat: no composite " + morphism_name(g) + " o " + morphism_name(f));
    return *r;
}

std::span<const int> FinCat::hom(int a, int b) const {
    std::call_once(index_->once, [this] {
        const auto n = static_cast<std::size_t>(object_count());
        index_->homs.assign(n * n, {});
        for (int m = 0; m < morphism_count(); ++m) {
            const auto& ar = arrows_[static_cast<std::size_t>(m)];
            index_->homs[static_cast<std::size_t>(ar.src) * n + static_cast<std::size_t>(ar.dst)]
                .push_back(m);
        }
    });
    const auto n = static_cast<std::size_t>(object_count());
    return index_->homs.at(static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b));
}

std::optional<int> FinCat::find_object(std::string_view name) const {
    for (int o = 0; o < object_count(); ++o)
        if (objects_[static_cast<std::size_t>(o)] == name) return o;
    return std::nullopt;
}

std::optional<int> FinCat::find_morphism(std::string_view name) const {
    for (int m = 0; m < morphism_count(); ++m)
        if (names_[static_cast<std::size_t>(m)] == name) return m;
    return std::nullopt;
}

FinCat preorder_category(std::vector<std::string> elements,
                         const std::function<bool(int, int)>& related) {
    const int n = static_cast<int>(elements.size());
    std::vector<std::string> names;
    std::vector<Arrow> arrows;
    std::vector<int> ids(static_cast<std::size_t>(n), -1);
    std::vector<int> index(static_cast<std::size_t>(n * n), -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (related(a, b)) {
                index[static_cast<std::size_t>(a * n + b)] = static_cast<int>(arrows.size());
                if (a == b) ids[static_cast<std::size_t>(a)] = static_cast<int>(arrows.size());
                arrows.push_back({a, b});
                names.push_back("(" + elements[static_cast<std::size_t>(a)] + "," +
                                elements[static_cast<std::size_t>(b)] + ")");
            }
    for (int a = 0; a < n; ++a)
        if (ids[static_cast<std::size_t>(a)] < 0)
            throw Error(Error::Kind::Invalid,
                        "preorder: relation is not reflexive at " + elements[static_cast<std::size_t>(a)]);
    std::vector<std::array<int, 3>> comp;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int f = index[static_cast<std::size_t>(a * n + b)];
            if (f < 0) continue;
            for (int c = 0; c < n; ++c) {
                int g = index[static_cast<std::size_t>(b * n + c)];
                if (g < 0) continue;
                int gf = index[static_cast<std::size_t>(a * n + c)];
                if (gf < 0)
                    throw Error(Error::Kind::Invalid, "preorder: relation is not transitive at " +
                                                          elements[static_cast<std::size_t>(a)] + ", " +
                                                          elements[static_cast<std::size_t>(b)] + ", " +
                                                          elements[static_cast<std::size_t>(c)]);
                comp.push_back({g, f, gf});
            }
        }
    return FinCat(std::move(elements), std::move(names), std::move(arrows), std::move(ids), comp);
}

FinCat terminal_category() {
    return FinCat({"*"}, {"1_*"}, {{0, 0}}, {0}, {{0, 0, 0}});
}

FinCat discrete_category(std::vector<std::string> objects) {
    std::vector<std::string> names;
    std::vector<Arrow> arrows;
    std::vector<int> ids;
    for (std::size_t i = 0; i < objects.size(); ++i) {
        names.push_back("1_" + objects[i]);
        arrows.push_back({static_cast<int>(i), static_cast<int>(i)});
        ids.push_back(static_cast<int>(i));
    }
    return FinCat(std::move(objects), std::move(names), std::move(arrows), std::move(ids), {});
}

namespace {

std::string tuple_name(const std::vector<const std::string*>& parts) {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += *parts[i];
    }
    return s + ")";
}

// Mixed-radix decoding with the first digit most significant.
void decode(int code, std::span<const int> radices, std::vector<int>& digits) {
    digits.resize(radices.size());
    for (std::size_t i = radices.size(); i-- > 0;) {
        digits[i] = code % radices[i];
        code /= radices[i];
    }
}

} // namespace

FinCat product(std::span<const FinCat* const> factors) {
    if (factors.empty()) throw Error(Error::Kind::Arity, "product: empty list of categories");
    std::vector<int> obj_radix, mor_radix;
    long long n_obj = 1, n_mor = 1;
    for (const FinCat* c : factors) {
        obj_radix.push_back(c->object_count());
        mor_radix.push_back(c->morphism_count());
        n_obj *= c->object_count();
        n_mor *= c->morphism_count();
    }
    if (n_mor > (1LL << 24))
        throw Error(Error::Kind::SearchTooLarge, "product: too many morphisms to materialize");
    auto encode = [](std::span<const int> digits, std::span<const int> radices) {
        int code = 0;
        for (std::size_t i = 0; i < radices.size(); ++i) code = code * radices[i] + digits[i];
        return code;
    };

    std::vector<std::string> objects;
    std::vector<int> digits, tmp;
    std::vector<const std::string*> parts(factors.size());
    for (int o = 0; o < n_obj; ++o) {
        decode(o, obj_radix, digits);
        for (std::size_t i = 0; i < factors.size(); ++i) parts[i] = &factors[i]->object_name(digits[i]);
        objects.push_back(tuple_name(parts));
    }
    std::vector<std::string> names;
    std::vector<Arrow> arrows;
    for (int m = 0; m < n_mor; ++m) {
        decode(m, mor_radix, digits);
        std::vector<int> s(factors.size()), t(factors.size());
        for (std::size_t i = 0; i < factors.size(); ++i) {
            parts[i] = &factors[i]->morphism_name(digits[i]);
            s[i] = factors[i]->arrow(digits[i]).src;
            t[i] = factors[i]->arrow(digits[i]).dst;
        }
        names.push_back(tuple_name(parts));
        arrows.push_back({encode(s, obj_radix), encode(t, obj_radix)});
    }
    std::vector<int> ids;
    for (int o = 0; o < n_obj; ++o) {
        decode(o, obj_radix, digits);
        for (std::size_t i = 0; i < factors.size(); ++i) digits[i] = factors[i]->identity(digits[i]);
        ids.push_back(encode(digits, mor_radix));
    }
    // Componentwise composition: enumerate composable pairs factor by factor.
    std::vector<std::vector<std::array<int, 3>>> per_factor(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (const auto& [key, gf] : factors[i]->comp_table())
            per_factor[i].push_back({static_cast<int>(key >> 32),
                                     static_cast<int>(key & 0xffffffffu), gf});
    std::vector<std::array<int, 3>> comp;
    std::vector<std::size_t> pick(factors.size(), 0);
    for (auto& v : per_factor)
        if (v.empty()) return FinCat(std::move(objects), std::move(names), std::move(arrows), std::move(ids), {});
    for (;;) {
        std::vector<int> g(factors.size()), f(factors.size()), gf(factors.size());
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const auto& e = per_factor[i][pick[i]];
            g[i] = e[0];
            f[i] = e[1];
            gf[i] = e[2];
        }
        comp.push_back({encode(g, mor_radix), encode(f, mor_radix), encode(gf, mor_radix)});
        std::size_t j = factors.size();
        while (j-- > 0) {
            if (++pick[j] < per_factor[j].size()) break;
            pick[j] = 0;
        }
        if (j == static_cast<std::size_t>(-1)) break;
    }
    return FinCat(std::move(objects), std::move(names), std::move(arrows), std::move(ids), comp);
}

CategoryReport validate_category(const FinCat& c) {
    CategoryReport r;
    auto add = [&](std::string axiom, std::string where) {
        r.violations.push_back({std::move(axiom), std::move(where)});
    };
    for (int o = 0; o < c.object_count(); ++o) {
        const auto& a = c.arrow(c.identity(o));
        if (a.src != o || a.dst != o) add("identity shape", "identity of " + c.object_name(o));
    }
    for (int f = 0; f < c.morphism_count(); ++f) {
        const auto& af = c.arrow(f);
        auto left = c.compose(c.identity(af.dst), f);
        auto right = c.compose(f, c.identity(af.src));
        if (!left || *left != f) add("left identity", c.morphism_name(f));
        if (!right || *right != f) add("right identity", c.morphism_name(f));
    }
    for (const auto& [key, gf] : c.comp_table()) {
        int g = static_cast<int>(key >> 32), f = static_cast<int>(key & 0xffffffffu);
        const auto& ag = c.arrow(g);
        const auto& af = c.arrow(f);
        if (af.dst != ag.src) {
            add("composition typing", c.morphism_name(g) + " o " + c.morphism_name(f) + " is not composable");
            continue;
        }
        const auto& agf = c.arrow(gf);
        if (agf.src != af.src || agf.dst != ag.dst)
            add("composition typing", c.morphism_name(g) + " o " + c.morphism_name(f) + " has wrong endpoints");
    }
    // Totality and associativity over composable pairs and triples.
    for (int f = 0; f < c.morphism_count(); ++f) {
        const auto& af = c.arrow(f);
        for (int b = 0; b < c.object_count(); ++b)
            for (int g : c.hom(af.dst, b)) {
                auto gf = c.compose(g, f);
                if (!gf) {
                    add("composition totality",
                        "missing " + c.morphism_name(g) + " o " + c.morphism_name(f));
                    continue;
                }
                for (int d = 0; d < c.object_count(); ++d)
                    for (int h : c.hom(b, d)) {
                        auto hg = c.compose(h, g);
                        if (!hg) continue;  // reported as totality on its own pass
                        auto lhs = c.compose(h, *gf);
                        auto rhs = c.compose(*hg, f);
                        if (lhs && rhs && *lhs != *rhs)
                            add("associativity", c.morphism_name(h) + ", " + c.morphism_name(g) +
                                                     ", " + c.morphism_name(f));
                    }
            }
    }
    return r;
}

std::optional<std::string> functor_defect(const FinCat& source, const FinCat& target,
                                          const Functor& f) {
    if (static_cast<int>(f.obj_map.size()) != source.object_count() ||
        static_cast<int>(f.mor_map.size()) != source.morphism_count())
        return "functor tables do not cover the source category";
    for (int o : f.obj_map)
        if (o < 0 || o >= target.object_count()) return "object image out of range";
    for (int m : f.mor_map)
        if (m < 0 || m >= target.morphism_count()) return "morphism image out of range";
    for (int m = 0; m < source.morphism_count(); ++m) {
        const auto& a = source.arrow(m);
        const auto& b = target.arrow(f.mor_map[static_cast<std::size_t>(m)]);
        if (b.src != f.obj_map[static_cast<std::size_t>(a.src)] ||
            b.dst != f.obj_map[static_cast<std::size_t>(a.dst)])
            return "endpoints of " + source.morphism_name(m) + " not preserved";
    }
    for (int o = 0; o < source.object_count(); ++o)
        if (f.mor_map[static_cast<std::size_t>(source.identity(o))] !=
            target.identity(f.obj_map[static_cast<std::size_t>(o)]))
            return "identity of " + source.object_name(o) + " not preserved";
    for (const auto& [key, gf] : source.comp_table()) {
        int g = static_cast<int>(key >> 32), h = static_cast<int>(key & 0xffffffffu);
        auto img = target.compose(f.mor_map[static_cast<std::size_t>(g)], f.mor_map[static_cast<std::size_t>(h)]);
        if (!img || *img != f.mor_map[static_cast<std::size_t>(gf)])
            return "composite " + source.morphism_name(g) + " o " + source.morphism_name(h) +
                   " not preserved";
    }
    return std::nullopt;
}

Functor compose_functors(const Functor& first, const Functor& second) {
    Functor out;
    for (int o : first.obj_map) out.obj_map.push_back(second.obj_map.at(static_cast<std::size_t>(o)));
    for (int m : first.mor_map) out.mor_map.push_back(second.mor_map.at(static_cast<std::size_t>(m)));
    return out;
}

Functor identity_functor(const FinCat& c) {
    Functor f;
    f.obj_map.resize(static_cast<std::size_t>(c.object_count()));
    f.mor_map.resize(static_cast<std::size_t>(c.morphism_count()));
    std::iota(f.obj_map.begin(), f.obj_map.end(), 0);
    std::iota(f.mor_map.begin(), f.mor_map.end(), 0);
    return f;
}

std::optional<TerminalObject> terminal_object(const FinCat& c) {
    for (int t = 0; t < c.object_count(); ++t) {
        TerminalObject out{t, {}};
        bool ok = true;
        for (int x = 0; x < c.object_count() && ok; ++x) {
            auto h = c.hom(x, t);
            if (h.size() != 1) ok = false;
            else out.witnesses.push_back(h[0]);
        }
        if (ok) return out;
    }
    return std::nullopt;
}

namespace {

struct IsoSearch {
    const FinCat& c;
    const FinCat& d;
    std::vector<int> obj;       // c-object -> d-object
    std::vector<bool> used;
    std::vector<int> mor;       // c-morphism -> d-morphism
    std::vector<bool> mor_used;
    std::vector<int> order;     // non-identity morphisms of c

    bool hom_sizes_ok(int a) const {
        for (int b = 0; b < c.object_count(); ++b) {
            int fb = obj[static_cast<std::size_t>(b)];
            if (fb < 0) continue;
            int fa = obj[static_cast<std::size_t>(a)];
            if (c.hom(a, b).size() != d.hom(fa, fb).size()) return false;
            if (c.hom(b, a).size() != d.hom(fb, fa).size()) return false;
        }
        return true;
    }

    bool consistent_with(int m) const {
        // Every composite whose three members are all assigned must agree.
        auto img = [&](int x) { return mor[static_cast<std::size_t>(x)]; };
        for (const auto& [key, gf] : c.comp_table()) {
            int g = static_cast<int>(key >> 32), f = static_cast<int>(key & 0xffffffffu);
            if (g != m && f != m && gf != m) continue;
            if (img(g) < 0 || img(f) < 0 || img(gf) < 0) continue;
            auto r = d.compose(img(g), img(f));
            if (!r || *r != img(gf)) return false;
        }
        return true;
    }

    bool assign_morphisms(std::size_t k) {
        if (k == order.size()) return true;
        int m = order[k];
        const auto& a = c.arrow(m);
        for (int cand : d.hom(obj[static_cast<std::size_t>(a.src)], obj[static_cast<std::size_t>(a.dst)])) {
            if (mor_used[static_cast<std::size_t>(cand)] || d.is_identity(cand)) continue;
            mor[static_cast<std::size_t>(m)] = cand;
            mor_used[static_cast<std::size_t>(cand)] = true;
            if (consistent_with(m) && assign_morphisms(k + 1)) return true;
            mor_used[static_cast<std::size_t>(cand)] = false;
            mor[static_cast<std::size_t>(m)] = -1;
        }
        return false;
    }

    bool assign_objects(int a) {
        if (a == c.object_count()) {
            std::fill(mor.begin(), mor.end(), -1);
            std::fill(mor_used.begin(), mor_used.end(), false);
            for (int o = 0; o < c.object_count(); ++o) {
                int id = d.identity(obj[static_cast<std::size_t>(o)]);
                mor[static_cast<std::size_t>(c.identity(o))] = id;
                mor_used[static_cast<std::size_t>(id)] = true;
            }
            for (int o = 0; o < c.object_count(); ++o)
                if (!consistent_with(c.identity(o))) return false;
            return assign_morphisms(0);
        }
        for (int cand = 0; cand < d.object_count(); ++cand) {
            if (used[static_cast<std::size_t>(cand)]) continue;
            obj[static_cast<std::size_t>(a)] = cand;
            used[static_cast<std::size_t>(cand)] = true;
            if (hom_sizes_ok(a) && assign_objects(a + 1)) return true;
            used[static_cast<std::size_t>(cand)] = false;
            obj[static_cast<std::size_t>(a)] = -1;
        }
        return false;
    }
};

} // namespace

IsoResult categories_isomorphic(const FinCat& c, const FinCat& d, int object_limit) {
    IsoResult r;
    if (c.object_count() > object_limit || d.object_count() > object_limit) {
        r.status = IsoResult::Status::TooLarge;
        return r;
    }
    if (c.object_count() != d.object_count() || c.morphism_count() != d.morphism_count()) return r;
    IsoSearch s{c, d,
                std::vector<int>(static_cast<std::size_t>(c.object_count()), -1),
                std::vector<bool>(static_cast<std::size_t>(d.object_count()), false),
                std::vector<int>(static_cast<std::size_t>(c.morphism_count()), -1),
                std::vector<bool>(static_cast<std::size_t>(d.morphism_count()), false),
                {}};
    for (int m = 0; m < c.morphism_count(); ++m)
        if (!c.is_identity(m)) s.order.push_back(m);
    if (!s.assign_objects(0)) return r;
    r.status = IsoResult::Status::Found;
    r.forward = {s.obj, s.mor};
    r.backward.obj_map.assign(s.obj.size(), -1);
    r.backward.mor_map.assign(s.mor.size(), -1);
    for (std::size_t i = 0; i < s.obj.size(); ++i)
        r.backward.obj_map[static_cast<std::size_t>(s.obj[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < s.mor.size(); ++i)
        r.backward.mor_map[static_cast<std::size_t>(s.mor[i])] = static_cast<int>(i);
    return r;
}

} // namespace opint
