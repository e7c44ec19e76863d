#include "opint/operad.hpp"

#include <algorithm>
#include <numeric>

namespace opint {

std::size_t encode_tuple(std::span<const int> digits, std::span<const int> radices) {
    std::size_t code = 0;
    for (std::size_t i = 0; i < radices.size(); ++i)
        code = code * static_cast<std::size_t>(radices[i]) + static_cast<std::size_t>(digits[i]);
    return code;
}

void decode_tuple(std::size_t code, std::span<const int> radices, std::vector<int>& digits) {
    digits.resize(radices.size());
    for (std::size_t i = radices.size(); i-- > 0;) {
        const auto r = static_cast<std::size_t>(radices[i]);
        digits[i] = static_cast<int>(code % r);
        code /= r;
    }
}

namespace {

std::size_t radix_product(std::span<const int> radices) {
    std::size_t total = 1;
    for (int r : radices) {
        if (r == 0) return 0;
        if (total > (std::size_t{1} << 40) / static_cast<std::size_t>(r))
            throw Error(Error::Kind::SearchTooLarge, "tuple space too large to enumerate");
        total *= static_cast<std::size_t>(r);
    }
    return total;
}

std::string join_names(const FinCat& c, std::span<const int> ids, bool objects) {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += ",";
        s += objects ? c.object_name(ids[i]) : c.morphism_name(ids[i]);
    }
    return s;
}

} // namespace

std::vector<int> TruncatedOperad::arities(const Surjection& g) {
    std::vector<int> a{g.cod()};
    for (int k : g.fiber_sizes()) a.push_back(k);
    return a;
}

TruncatedOperad TruncatedOperad::build(std::string name, int bound, std::vector<FinCat> components,
                                       int unit, const TupleFn& on_objects,
                                       const TupleFn& on_morphisms) {
    if (bound < 1) throw Error(Error::Kind::Invalid, "operad: bound must be at least 1");
    if (static_cast<int>(components.size()) != bound)
        throw Error(Error::Kind::Invalid, "operad: expected " + std::to_string(bound) + " components");
    if (unit < 0 || unit >= components[0].object_count())
        throw Error(Error::Kind::Invalid, "operad: unit is not an object of P_1");
    TruncatedOperad p;
    p.name_ = std::move(name);
    p.bound_ = bound;
    p.components_ = std::move(components);
    p.unit_ = unit;

    std::vector<int> digits, src, dst;
    for (const auto& g : surjections_up_to(bound)) {
        MuTable t{g, arities(g), {}, {}, {}, {}};
        for (int a : t.arities) {
            t.obj_radix.push_back(p.component(a).object_count());
            t.mor_radix.push_back(p.component(a).morphism_count());
        }
        const FinCat& target = p.component(g.dom());
        const std::size_t n_obj = radix_product(t.obj_radix);
        const std::size_t n_mor = radix_product(t.mor_radix);
        if (n_mor > (std::size_t{1} << 26))
            throw Error(Error::Kind::SearchTooLarge, "operad: composition table for " + g.str() +
                                                         " is too large to tabulate");
        t.obj.resize(n_obj);
        for (std::size_t code = 0; code < n_obj; ++code) {
            decode_tuple(code, t.obj_radix, digits);
            int v = on_objects(g, digits);
            if (v < 0 || v >= target.object_count())
                throw Error(Error::Kind::Invalid, "operad: object value of mu_" + g.str() + " out of range");
            t.obj[code] = v;
        }
        t.mor.resize(n_mor);
        for (std::size_t code = 0; code < n_mor; ++code) {
            decode_tuple(code, t.mor_radix, digits);
            int v;
            if (on_morphisms) {
                v = on_morphisms(g, digits);
            } else {
                src.resize(digits.size());
                dst.resize(digits.size());
                for (std::size_t i = 0; i < digits.size(); ++i) {
                    const auto& ar = p.component(t.arities[i]).arrow(digits[i]);
                    src[i] = ar.src;
                    dst[i] = ar.dst;
                }
                int s = t.obj[encode_tuple(src, t.obj_radix)];
                int d = t.obj[encode_tuple(dst, t.obj_radix)];
                auto h = target.hom(s, d);
                if (h.size() != 1)
                    throw Error(Error::Kind::Invalid,
                                "operad: cannot derive mu_" + g.str() + " on morphisms; hom(" +
                                    target.object_name(s) + "," + target.object_name(d) + ") has " +
                                    std::to_string(h.size()) + " elements");
                v = h[0];
            }
            if (v < 0 || v >= target.morphism_count())
                throw Error(Error::Kind::Invalid, "operad: morphism value of mu_" + g.str() + " out of range");
            t.mor[code] = v;
        }
        p.mu_index_.emplace(g.key(), static_cast<int>(p.mus_.size()));
        p.mus_.push_back(std::move(t));
    }
    return p;
}

const FinCat& TruncatedOperad::component(int n) const {
    if (n < 1 || n > bound_)
        throw Error(Error::Kind::Truncation, "operad " + name_ + ": arity " + std::to_string(n) +
                                                 " outside 1.." + std::to_string(bound_));
    return components_[static_cast<std::size_t>(n - 1)];
}

int TruncatedOperad::index_of(const Surjection& g) const {
    if (g.dom() > bound_)
        throw Error(Error::Kind::Truncation, "operad " + name_ + ": " + g.str() +
                                                 " exceeds bound " + std::to_string(bound_));
    auto it = mu_index_.find(g.key());
    if (it == mu_index_.end())
        throw Error(Error::Kind::Invalid, "operad " + name_ + ": no table for " + g.str());
    return it->second;
}

bool TruncatedOperad::has_mu(const Surjection& g) const {
    return g.dom() <= bound_ && mu_index_.count(g.key()) != 0;
}

const MuTable& TruncatedOperad::mu(const Surjection& g) const {
    return mus_[static_cast<std::size_t>(index_of(g))];
}

std::size_t TruncatedOperad::checked_code(const MuTable& t, std::span<const int> args,
                                          bool objects) const {
    if (args.size() != t.arities.size())
        throw Error(Error::Kind::Arity, "mu_" + t.g.str() + ": expected " +
                                            std::to_string(t.arities.size()) + " arguments, got " +
                                            std::to_string(args.size()));
    const auto& radix = objects ? t.obj_radix : t.mor_radix;
    for (std::size_t i = 0; i < args.size(); ++i)
        if (args[i] < 0 || args[i] >= radix[i])
            throw Error(Error::Kind::Arity, "mu_" + t.g.str() + ": argument " + std::to_string(i) +
                                                " does not live in P_" + std::to_string(t.arities[i]));
    return encode_tuple(args, radix);
}

int TruncatedOperad::mu_obj(const Surjection& g, std::span<const int> args) const {
    const auto& t = mu(g);
    return t.obj[checked_code(t, args, true)];
}

int TruncatedOperad::mu_mor(const Surjection& g, std::span<const int> args) const {
    const auto& t = mu(g);
    return t.mor[checked_code(t, args, false)];
}

void TruncatedOperad::set_mu_obj(const Surjection& g, std::span<const int> args, int value) {
    auto& t = mus_[static_cast<std::size_t>(index_of(g))];
    t.obj[checked_code(t, args, true)] = value;
}

void TruncatedOperad::set_mu_mor(const Surjection& g, std::span<const int> args, int value) {
    auto& t = mus_[static_cast<std::size_t>(index_of(g))];
    t.mor[checked_code(t, args, false)] = value;
}

// ---------------------------------------------------------------------------
// Axiom checks

namespace {

// Indexes a union of tuple spaces, one per case.
struct CaseSpace {
    std::vector<std::size_t> offsets{0};

    void add(std::size_t count) { offsets.push_back(offsets.back() + count); }
    std::size_t total() const { return offsets.back(); }
    std::pair<std::size_t, std::size_t> locate(std::size_t i) const {
        auto it = std::upper_bound(offsets.begin(), offsets.end(), i);
        auto c = static_cast<std::size_t>(it - offsets.begin()) - 1;
        return {c, i - offsets[c]};
    }
};

// Evenly strided indices when the space exceeds the cap.
struct Sampler {
    std::size_t total;
    std::size_t count;
    bool sampled;

    Sampler(std::size_t total_, std::size_t cap)
        : total(total_), count(std::min(total_, cap)), sampled(total_ > cap) {}

    std::size_t at(std::size_t t) const {
        if (!sampled) return t;
        return static_cast<std::size_t>(static_cast<unsigned __int128>(t) * total / count);
    }
};

struct AssocCase {
    Surjection f, g, gf;
    std::vector<Surjection> fi;  // induced maps f^i
    std::vector<int> radix;      // c, b_1..b_n, a_1..a_k
    std::vector<int> arity;
};

std::vector<AssocCase> assoc_cases(const TruncatedOperad& p, bool objects) {
    std::vector<AssocCase> cases;
    for (int m = 1; m <= p.bound(); ++m)
        for (int k = 1; k <= m; ++k)
            for (const auto& f : enumerate_surjections(m, k))
                for (int n = 1; n <= k; ++n)
                    for (const auto& g : enumerate_surjections(k, n)) {
                        AssocCase c{f, g, compose(f, g), {}, {}, {}};
                        for (int i = 1; i <= n; ++i) c.fi.push_back(induced_map(f, g, i));
                        c.arity.push_back(n);
                        for (int s : g.fiber_sizes()) c.arity.push_back(s);
                        for (int s : f.fiber_sizes()) c.arity.push_back(s);
                        for (int a : c.arity) {
                            const auto& cat = p.component(a);
                            c.radix.push_back(objects ? cat.object_count() : cat.morphism_count());
                        }
                        cases.push_back(std::move(c));
                    }
    return cases;
}

std::optional<std::string> assoc_instance(const TruncatedOperad& p, const AssocCase& c,
                                          std::span<const int> d, bool objects) {
    auto mu = [&](const Surjection& s, std::span<const int> args) {
        return objects ? p.mu_obj(s, args) : p.mu_mor(s, args);
    };
    const int n = c.g.cod();
    const int k = c.f.cod();
    std::vector<int> args;
    args.push_back(d[0]);
    for (int i = 1; i <= n; ++i) args.push_back(d[static_cast<std::size_t>(i)]);
    const int inner = mu(c.g, args);
    args.assign(1, inner);
    for (int j = 1; j <= k; ++j) args.push_back(d[static_cast<std::size_t>(n + j)]);
    const int lhs = mu(c.f, args);

    std::vector<int> rhs_args{d[0]};
    for (int i = 1; i <= n; ++i) {
        std::vector<int> block{d[static_cast<std::size_t>(i)]};
        for (int j = 1; j <= k; ++j)
            if (c.g(j) == i) block.push_back(d[static_cast<std::size_t>(n + j)]);
        rhs_args.push_back(mu(c.fi[static_cast<std::size_t>(i - 1)], block));
    }
    const int rhs = mu(c.gf, rhs_args);
    if (lhs == rhs) return std::nullopt;

    const FinCat& pm = p.component(c.f.dom());
    std::string ctx = "f=" + c.f.str() + ", g=" + c.g.str() + ", args=(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) ctx += "; ";
        const auto& cat = p.component(c.arity[i]);
        ctx += objects ? cat.object_name(d[i]) : cat.morphism_name(d[i]);
    }
    ctx += "): lhs " + (objects ? pm.object_name(lhs) : pm.morphism_name(lhs)) + " != rhs " +
           (objects ? pm.object_name(rhs) : pm.morphism_name(rhs));
    return ctx;
}

} // namespace

CheckReport check_associativity(const TruncatedOperad& p, const CheckOptions& opts) {
    CheckReport r{"associativity", Verdict::Pass, 0, false, std::nullopt};
    for (bool objects : {true, false}) {
        auto cases = assoc_cases(p, objects);
        CaseSpace space;
        for (const auto& c : cases) space.add(radix_product(c.radix));
        if (objects && space.total() > opts.cap) {
            r.verdict = Verdict::Capped;
            r.counterexample = "object tuple space " + std::to_string(space.total()) +
                               " exceeds cap " + std::to_string(opts.cap);
            return r;
        }
        Sampler sample(space.total(), opts.cap);
        auto fail = find_first_failure(
            sample.count,
            [&](std::size_t t) -> std::optional<std::string> {
                auto [ci, local] = space.locate(sample.at(t));
                std::vector<int> digits;
                decode_tuple(local, cases[ci].radix, digits);
                return assoc_instance(p, cases[ci], digits, objects);
            },
            opts.exec);
        r.instances += sample.count;
        r.sampled = r.sampled || sample.sampled;
        if (fail) {
            r.verdict = Verdict::Fail;
            r.counterexample = (objects ? "objects: " : "morphisms: ") + fail->message;
            return r;
        }
    }
    return r;
}

CheckReport check_unitality(const TruncatedOperad& p, const CheckOptions& opts) {
    CheckReport r{"unitality", Verdict::Pass, 0, false, std::nullopt};
    // Instances: (n, object or morphism, which law).
    struct Inst {
        int n;
        bool objects;
        int x;
    };
    std::vector<Inst> insts;
    for (int n = 1; n <= p.bound(); ++n) {
        const auto& c = p.component(n);
        for (int o = 0; o < c.object_count(); ++o) insts.push_back({n, true, o});
        for (int m = 0; m < c.morphism_count(); ++m) insts.push_back({n, false, m});
    }
    const int e = p.unit();
    const int id_e = p.component(1).identity(e);
    auto fail = find_first_failure(
        insts.size(),
        [&](std::size_t i) -> std::optional<std::string> {
            const auto& in = insts[i];
            const auto& c = p.component(in.n);
            const int unit = in.objects ? e : id_e;
            std::vector<int> args{in.x};
            args.insert(args.end(), static_cast<std::size_t>(in.n), unit);
            auto mu = [&](const Surjection& g, std::span<const int> a) {
                return in.objects ? p.mu_obj(g, a) : p.mu_mor(g, a);
            };
            auto name = [&](int v) { return in.objects ? c.object_name(v) : c.morphism_name(v); };
            int right = mu(Surjection::identity(in.n), args);
            if (right != in.x)
                return "mu_{1_" + std::to_string(in.n) + "}(" + name(in.x) + ", e, ..., e) = " +
                       name(right);
            std::vector<int> args2{unit, in.x};
            int left = mu(Surjection::bang(in.n), args2);
            if (left != in.x)
                return "mu_{!_" + std::to_string(in.n) + "}(e, " + name(in.x) + ") = " + name(left);
            return std::nullopt;
        },
        opts.exec);
    r.instances = insts.size();
    if (fail) {
        r.verdict = Verdict::Fail;
        r.counterexample = fail->message;
    }
    return r;
}

CheckReport check_functoriality(const TruncatedOperad& p, const CheckOptions& opts) {
    CheckReport r{"functoriality", Verdict::Pass, 0, false, std::nullopt};
    // Composable pairs per component, identities included through the table.
    std::vector<std::vector<std::array<int, 3>>> pairs(static_cast<std::size_t>(p.bound()));
    for (int n = 1; n <= p.bound(); ++n)
        for (const auto& [key, gf] : p.component(n).comp_table())
            pairs[static_cast<std::size_t>(n - 1)].push_back(
                {static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu), gf});
    for (auto& v : pairs) std::sort(v.begin(), v.end());

    CaseSpace space;
    std::vector<std::vector<int>> radices;
    for (const auto& t : p.mus()) {
        std::vector<int> radix;
        for (int a : t.arities) radix.push_back(static_cast<int>(pairs[static_cast<std::size_t>(a - 1)].size()));
        space.add(radix_product(radix));
        radices.push_back(std::move(radix));
    }
    Sampler sample(space.total(), opts.cap);
    auto mus = p.mus();
    auto fail = find_first_failure(
        sample.count,
        [&](std::size_t s) -> std::optional<std::string> {
            auto [ci, local] = space.locate(sample.at(s));
            const auto& t = mus[ci];
            std::vector<int> digits;
            decode_tuple(local, radices[ci], digits);
            std::vector<int> g(digits.size()), f(digits.size()), gf(digits.size());
            for (std::size_t i = 0; i < digits.size(); ++i) {
                const auto& e = pairs[static_cast<std::size_t>(t.arities[i] - 1)][static_cast<std::size_t>(digits[i])];
                g[i] = e[0];
                f[i] = e[1];
                gf[i] = e[2];
            }
            const auto& target = p.component(t.g.dom());
            int mg = p.mu_mor(t.g, g), mf = p.mu_mor(t.g, f), mgf = p.mu_mor(t.g, gf);
            auto comp = target.compose(mg, mf);
            if (!comp || *comp != mgf)
                return "mu_" + t.g.str() + " does not preserve a composite at argument pairs " +
                       std::to_string(local);
            return std::nullopt;
        },
        opts.exec);
    r.instances = sample.count;
    r.sampled = sample.sampled;
    if (fail) {
        r.verdict = Verdict::Fail;
        r.counterexample = fail->message;
        return r;
    }
    // Identities and endpoints.
    std::vector<int> digits, ids, src, dst;
    for (const auto& t : mus) {
        const auto& target = p.component(t.g.dom());
        for (std::size_t code = 0; code < t.obj.size(); ++code) {
            decode_tuple(code, t.obj_radix, digits);
            ids.resize(digits.size());
            for (std::size_t i = 0; i < digits.size(); ++i) ids[i] = p.component(t.arities[i]).identity(digits[i]);
            ++r.instances;
            if (p.mu_mor(t.g, ids) != target.identity(t.obj[code])) {
                r.verdict = Verdict::Fail;
                r.counterexample = "mu_" + t.g.str() + " does not preserve the identity of (" +
                                   std::to_string(code) + ")";
                return r;
            }
        }
        for (std::size_t code = 0; code < t.mor.size(); ++code) {
            decode_tuple(code, t.mor_radix, digits);
            src.resize(digits.size());
            dst.resize(digits.size());
            for (std::size_t i = 0; i < digits.size(); ++i) {
                const auto& ar = p.component(t.arities[i]).arrow(digits[i]);
                src[i] = ar.src;
                dst[i] = ar.dst;
            }
            const auto& ar = target.arrow(t.mor[code]);
            ++r.instances;
            if (ar.src != p.mu_obj(t.g, src) || ar.dst != p.mu_obj(t.g, dst)) {
                r.verdict = Verdict::Fail;
                r.counterexample = "mu_" + t.g.str() + " sends a morphism tuple to an arrow with wrong endpoints";
                return r;
            }
        }
    }
    return r;
}

std::vector<CheckReport> validate_operad(const TruncatedOperad& p, const CheckOptions& opts) {
    std::vector<CheckReport> out;
    CheckReport cats{"components", Verdict::Pass, 0, false, std::nullopt};
    for (int n = 1; n <= p.bound(); ++n) {
        auto rep = validate_category(p.component(n));
        ++cats.instances;
        if (!rep.valid()) {
            cats.verdict = Verdict::Fail;
            cats.counterexample = "P_" + std::to_string(n) + ": " + rep.violations[0].axiom + " at " +
                                  rep.violations[0].where;
            break;
        }
    }
    out.push_back(cats);
    if (!cats.passed()) return out;
    out.push_back(check_functoriality(p, opts));
    out.push_back(check_associativity(p, opts));
    out.push_back(check_unitality(p, opts));
    return out;
}

// ---------------------------------------------------------------------------
// Morphisms

CheckReport validate_operad_morphism(const TruncatedOperad& source, const TruncatedOperad& target,
                                     const OperadMorphism& f, const CheckOptions& opts) {
    CheckReport r{"operad morphism", Verdict::Pass, 0, false, std::nullopt};
    auto fail_with = [&](std::string msg) {
        r.verdict = Verdict::Fail;
        r.counterexample = std::move(msg);
        return r;
    };
    if (source.bound() != target.bound())
        return fail_with("bounds differ: " + std::to_string(source.bound()) + " vs " +
                         std::to_string(target.bound()));
    if (static_cast<int>(f.components.size()) != source.bound())
        return fail_with("expected one functor per arity");
    for (int n = 1; n <= source.bound(); ++n) {
        ++r.instances;
        if (auto d = functor_defect(source.component(n), target.component(n),
                                    f.components[static_cast<std::size_t>(n - 1)]))
            return fail_with("F_" + std::to_string(n) + " is not a functor: " + *d);
    }
    ++r.instances;
    if (f.components[0].obj_map[static_cast<std::size_t>(source.unit())] != target.unit())
        return fail_with("F_1(e) is not the unit of the target");

    for (bool objects : {true, false}) {
        CaseSpace space;
        for (const auto& t : source.mus()) space.add(objects ? t.obj.size() : t.mor.size());
        Sampler sample(space.total(), opts.cap);
        auto mus = source.mus();
        auto fail = find_first_failure(
            sample.count,
            [&](std::size_t s) -> std::optional<std::string> {
                auto [ci, code] = space.locate(sample.at(s));
                const auto& t = mus[ci];
                std::vector<int> digits;
                decode_tuple(code, objects ? t.obj_radix : t.mor_radix, digits);
                std::vector<int> image(digits.size());
                for (std::size_t i = 0; i < digits.size(); ++i) {
                    const auto& fn = f.components[static_cast<std::size_t>(t.arities[i] - 1)];
                    image[i] = objects ? fn.obj_map[static_cast<std::size_t>(digits[i])]
                                       : fn.mor_map[static_cast<std::size_t>(digits[i])];
                }
                const auto& fk = f.components[static_cast<std::size_t>(t.g.dom() - 1)];
                int top = objects ? fk.obj_map[static_cast<std::size_t>(t.obj[code])]
                                  : fk.mor_map[static_cast<std::size_t>(t.mor[code])];
                int bottom = objects ? target.mu_obj(t.g, image) : target.mu_mor(t.g, image);
                if (top != bottom)
                    return "F o mu_" + t.g.str() + " != nu_" + t.g.str() + " o F on " +
                           (objects ? "objects " : "morphisms ") + join_names(source.component(t.arities[0]), std::span<const int>(digits).first(1), objects) + ",...";
                return std::nullopt;
            },
            opts.exec);
        r.instances += sample.count;
        r.sampled = r.sampled || sample.sampled;
        if (fail) return fail_with(fail->message);
    }
    return r;
}

OperadMorphism identity_morphism(const TruncatedOperad& p) {
    OperadMorphism f;
    for (int n = 1; n <= p.bound(); ++n) f.components.push_back(identity_functor(p.component(n)));
    return f;
}

OperadMorphism compose_morphisms(const OperadMorphism& first, const OperadMorphism& second) {
    OperadMorphism out;
    for (std::size_t i = 0; i < first.components.size(); ++i)
        out.components.push_back(compose_functors(first.components[i], second.components.at(i)));
    return out;
}

std::vector<Functor> enumerate_functors(const FinCat& c, const FinCat& d, std::size_t cap) {
    std::vector<Functor> out;
    const int n_obj = c.object_count();
    std::vector<int> nonid;
    for (int m = 0; m < c.morphism_count(); ++m)
        if (!c.is_identity(m)) nonid.push_back(m);
    Functor f;
    f.obj_map.assign(static_cast<std::size_t>(n_obj), 0);
    f.mor_map.assign(static_cast<std::size_t>(c.morphism_count()), -1);

    auto consistent = [&](int m) {
        for (const auto& [key, gf] : c.comp_table()) {
            int g = static_cast<int>(key >> 32), h = static_cast<int>(key & 0xffffffffu);
            if (g != m && h != m && gf != m) continue;
            int ig = f.mor_map[static_cast<std::size_t>(g)], ih = f.mor_map[static_cast<std::size_t>(h)],
                igf = f.mor_map[static_cast<std::size_t>(gf)];
            if (ig < 0 || ih < 0 || igf < 0) continue;
            auto r = d.compose(ig, ih);
            if (!r || *r != igf) return false;
        }
        return true;
    };
    std::function<void(std::size_t)> assign_mor = [&](std::size_t k) {
        if (k == nonid.size()) {
            if (out.size() >= cap)
                throw Error(Error::Kind::SearchTooLarge, "enumerate_functors: more than cap functors");
            out.push_back(f);
            return;
        }
        int m = nonid[k];
        const auto& a = c.arrow(m);
        for (int cand : d.hom(f.obj_map[static_cast<std::size_t>(a.src)], f.obj_map[static_cast<std::size_t>(a.dst)])) {
            f.mor_map[static_cast<std::size_t>(m)] = cand;
            if (consistent(m)) assign_mor(k + 1);
        }
        f.mor_map[static_cast<std::size_t>(m)] = -1;
    };
    std::function<void(int)> assign_obj = [&](int o) {
        if (o == n_obj) {
            std::fill(f.mor_map.begin(), f.mor_map.end(), -1);
            for (int x = 0; x < n_obj; ++x)
                f.mor_map[static_cast<std::size_t>(c.identity(x))] = d.identity(f.obj_map[static_cast<std::size_t>(x)]);
            for (int x = 0; x < n_obj; ++x)
                if (!consistent(c.identity(x))) return;
            assign_mor(0);
            return;
        }
        for (int cand = 0; cand < d.object_count(); ++cand) {
            f.obj_map[static_cast<std::size_t>(o)] = cand;
            assign_obj(o + 1);
        }
    };
    if (n_obj == 0) {
        out.push_back(f);
        return out;
    }
    if (d.object_count() == 0) return out;
    assign_obj(0);
    return out;
}

std::vector<OperadMorphism> enumerate_operad_morphisms(const TruncatedOperad& source,
                                                       const TruncatedOperad& target,
                                                       std::size_t cap) {
    if (source.bound() != target.bound())
        throw Error(Error::Kind::Invalid, "enumerate_operad_morphisms: bounds differ");
    std::vector<std::vector<Functor>> per_arity;
    std::vector<int> radix;
    for (int n = 1; n <= source.bound(); ++n) {
        per_arity.push_back(enumerate_functors(source.component(n), target.component(n), cap));
        radix.push_back(static_cast<int>(per_arity.back().size()));
    }
    const std::size_t total = radix_product(radix);
    if (total > cap)
        throw Error(Error::Kind::SearchTooLarge, "enumerate_operad_morphisms: " +
                                                     std::to_string(total) + " candidates exceed cap");
    std::vector<OperadMorphism> out;
    std::vector<int> digits;
    CheckOptions opts{cap, Exec::Serial};
    for (std::size_t code = 0; code < total; ++code) {
        decode_tuple(code, radix, digits);
        OperadMorphism f;
        for (std::size_t i = 0; i < digits.size(); ++i)
            f.components.push_back(per_arity[i][static_cast<std::size_t>(digits[i])]);
        if (validate_operad_morphism(source, target, f, opts).passed()) out.push_back(std::move(f));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Builders

TruncatedOperad nat_operad(int saturation) {
    if (saturation < 0) throw Error(Error::Kind::Invalid, "nat_operad: saturation must be non-negative");
    std::vector<std::string> names;
    for (int a = 0; a <= saturation; ++a) names.push_back(std::to_string(a));
    std::vector<FinCat> comps;
    comps.push_back(preorder_category(std::move(names), [](int a, int b) { return a >= b; }));
    return TruncatedOperad::build(
        "nat:" + std::to_string(saturation), 1, std::move(comps), 0,
        [saturation](const Surjection&, std::span<const int> args) {
            return std::min(args[0] + args[1], saturation);
        },
        {});
}

TruncatedOperad terminal_operad(int bound) {
    std::vector<FinCat> comps;
    for (int n = 1; n <= bound; ++n) comps.push_back(terminal_category());
    auto zero = [](const Surjection&, std::span<const int>) { return 0; };
    return TruncatedOperad::build("terminal:" + std::to_string(bound), bound, std::move(comps), 0, zero, zero);
}

OperadMorphism to_terminal(const TruncatedOperad& p, const TruncatedOperad& terminal) {
    if (p.bound() != terminal.bound())
        throw Error(Error::Kind::Invalid, "to_terminal: bounds differ");
    OperadMorphism f;
    for (int n = 1; n <= p.bound(); ++n) {
        const auto& c = p.component(n);
        f.components.push_back({std::vector<int>(static_cast<std::size_t>(c.object_count()), 0),
                                std::vector<int>(static_cast<std::size_t>(c.morphism_count()), 0)});
    }
    return f;
}

} // namespace opint
