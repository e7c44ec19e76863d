#include "opint/io.hpp"

#include <fstream>
#include <sstream>

namespace opint {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

[[noreturn]] void bad(const std::string& what) { throw Error(Error::Kind::Input, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string id_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    bad("ids must be strings or integers");
}

FinCat poset_from_json(const Json& j) {
    std::vector<std::string> elements;
    for (const auto& e : field(j, "elements")) elements.push_back(id_text(e));
    const auto n = elements.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i)
        if (!index.emplace(elements[i], i).second) bad("duplicate poset element " + elements[i]);
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) rel[i][i] = 1;
    for (const auto& pair : field(j, "le")) {
        if (!pair.is_array() || pair.size() != 2) bad("\"le\" entries must be pairs");
        auto a = index.find(id_text(pair[0]));
        auto b = index.find(id_text(pair[1]));
        if (a == index.end() || b == index.end()) bad("\"le\" refers to an unknown element");
        rel[a->second][b->second] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (rel[i][k])
                for (std::size_t l = 0; l < n; ++l)
                    if (rel[k][l]) rel[i][l] = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l)
            if (i != l && rel[i][l] && rel[l][i]) bad("\"le\" is not antisymmetric");
    return preorder_category(elements, [&](int a, int b) { return rel[sz(a)][sz(b)] != 0; });
}

// Object reference: index or name.
int object_ref(const Json& j, const std::vector<std::string>& objects) {
    if (j.is_number_integer()) {
        const auto v = j.get<long long>();
        if (v < 0 || v >= static_cast<long long>(objects.size())) bad("object index out of range");
        return static_cast<int>(v);
    }
    const auto name = id_text(j);
    for (std::size_t i = 0; i < objects.size(); ++i)
        if (objects[i] == name) return static_cast<int>(i);
    bad("unknown object " + name);
}

} // namespace

Json to_json(const Surjection& g) {
    return Json{{"dom", g.dom()}, {"cod", g.cod()}, {"values", std::vector<int>(g.values().begin(), g.values().end())}};
}

Surjection surjection_from_json(const Json& j) {
    try {
        if (j.is_string()) return Surjection::parse(j.get<std::string>());
        auto values = field(j, "values").get<std::vector<int>>();
        if (j.contains("dom") && j.at("dom").get<int>() != static_cast<int>(values.size()))
            bad("surjection \"dom\" disagrees with its values");
        return Surjection(field(j, "cod").get<int>(), std::move(values));
    } catch (const nlohmann::json::exception& e) {
        bad(std::string("malformed surjection: ") + e.what());
    }
}

Json to_json(const FinCat& c) {
    Json objects = Json::array(), morphisms = Json::array(), ids = Json::object(), comp = Json::array();
    for (int o = 0; o < c.object_count(); ++o) {
        objects.push_back(c.object_name(o));
        ids[c.object_name(o)] = c.identity(o);
    }
    for (int m = 0; m < c.morphism_count(); ++m)
        morphisms.push_back({{"id", m}, {"name", c.morphism_name(m)}, {"src", c.arrow(m).src}, {"dst", c.arrow(m).dst}});
    std::vector<std::array<int, 3>> entries;
    for (const auto& [key, gf] : c.comp_table())
        entries.push_back({static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu), gf});
    std::sort(entries.begin(), entries.end());
    for (const auto& e : entries) comp.push_back({e[0], e[1], e[2]});
    return Json{{"objects", objects}, {"morphisms", morphisms}, {"identities", ids}, {"comp", comp}};
}

FinCat fincat_from_json(const Json& j) {
    try {
        if (j.is_object() && j.contains("poset")) return poset_from_json(j.at("poset"));
        std::vector<std::string> objects;
        for (const auto& o : field(j, "objects")) objects.push_back(id_text(o));
        std::vector<std::string> names;
        std::vector<Arrow> arrows;
        std::map<std::string, int> by_id;
        for (const auto& m : field(j, "morphisms")) {
            const auto id = id_text(field(m, "id"));
            if (!by_id.emplace(id, static_cast<int>(arrows.size())).second) bad("duplicate morphism id " + id);
            names.push_back(m.contains("name") ? id_text(m.at("name")) : id);
            arrows.push_back({object_ref(field(m, "src"), objects), object_ref(field(m, "dst"), objects)});
        }
        auto mor = [&](const Json& r) {
            auto it = by_id.find(id_text(r));
            if (it == by_id.end()) bad("unknown morphism id " + id_text(r));
            return it->second;
        };
        std::vector<int> ids(objects.size(), -1);
        const auto& idj = field(j, "identities");
        for (auto it = idj.begin(); it != idj.end(); ++it) {
            const int o = object_ref(Json(it.key()), objects);
            ids[sz(o)] = mor(it.value());
        }
        for (std::size_t o = 0; o < ids.size(); ++o)
            if (ids[o] < 0) bad("object " + objects[o] + " has no identity");
        std::vector<std::array<int, 3>> comp;
        if (j.contains("comp"))
            for (const auto& e : j.at("comp")) {
                if (!e.is_array() || e.size() != 3) bad("\"comp\" entries must be triples");
                comp.push_back({mor(e[0]), mor(e[1]), mor(e[2])});
            }
        FinCat c(std::move(objects), std::move(names), std::move(arrows), std::move(ids), comp);
        auto report = validate_category(c);
        if (!report.valid())
            throw Error(Error::Kind::Invalid, "not a category: " + report.violations.front().axiom + " at " +
                                                  report.violations.front().where);
        return c;
    } catch (const nlohmann::json::exception& e) {
        bad(std::string("malformed category: ") + e.what());
    }
}

Json to_json(const TruncatedOperad& p) {
    Json comps = Json::array(), mus = Json::array();
    for (int n = 1; n <= p.bound(); ++n) comps.push_back(to_json(p.component(n)));
    std::vector<int> digits;
    for (const auto& t : p.mus()) {
        Json graph = Json::array(), graph_mor = Json::array();
        for (std::size_t code = 0; code < t.obj.size(); ++code) {
            decode_tuple(code, t.obj_radix, digits);
            graph.push_back({digits, t.obj[code]});
        }
        for (std::size_t code = 0; code < t.mor.size(); ++code) {
            decode_tuple(code, t.mor_radix, digits);
            graph_mor.push_back({digits, t.mor[code]});
        }
        mus.push_back({{"g", t.g.str()}, {"graph", graph}, {"graph_mor", graph_mor}});
    }
    return Json{{"name", p.name()}, {"bound", p.bound()}, {"unit", p.unit()}, {"components", comps}, {"mu", mus}};
}

TruncatedOperad operad_from_json(const Json& j) {
    try {
        const int bound = field(j, "bound").get<int>();
        if (bound < 1) bad("\"bound\" must be positive");
        std::vector<FinCat> comps;
        for (const auto& c : field(j, "components")) comps.push_back(fincat_from_json(c));
        if (comps.size() != sz(bound)) bad("expected " + std::to_string(bound) + " components");
        std::map<Surjection, std::map<std::vector<int>, int>> obj, mor;
        bool have_mor = true;
        for (const auto& m : field(j, "mu")) {
            auto g = surjection_from_json(field(m, "g"));
            if (g.dom() > bound) throw Error(Error::Kind::Truncation, "mu along " + g.str() + " exceeds the bound");
            for (const auto& e : field(m, "graph")) obj[g][e.at(0).get<std::vector<int>>()] = e.at(1).get<int>();
            if (m.contains("graph_mor")) {
                for (const auto& e : m.at("graph_mor")) mor[g][e.at(0).get<std::vector<int>>()] = e.at(1).get<int>();
            } else {
                have_mor = false;
            }
        }
        auto lookup = [](const auto& table, const char* what) {
            return [&table, what](const Surjection& g, std::span<const int> args) {
                auto t = table.find(g);
                if (t == table.end()) bad(std::string("no ") + what + " table for " + g.str());
                auto v = t->second.find(std::vector<int>(args.begin(), args.end()));
                if (v == t->second.end()) bad(std::string("missing ") + what + " entry for " + g.str());
                return v->second;
            };
        };
        TruncatedOperad::TupleFn on_mor;
        if (have_mor) on_mor = lookup(mor, "morphism");
        return TruncatedOperad::build(j.contains("name") ? j.at("name").get<std::string>() : "json", bound, std::move(comps),
                                      field(j, "unit").get<int>(), lookup(obj, "object"), on_mor);
    } catch (const nlohmann::json::exception& e) {
        bad(std::string("malformed operad: ") + e.what());
    }
}

Json to_json(const PlanarTree& t) {
    if (t.is_leaf()) return "L";
    Json a = Json::array();
    for (const auto& c : t.children()) a.push_back(to_json(c));
    return a;
}

PlanarTree tree_from_json(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() != "L") bad("a leaf is written \"L\"");
        return PlanarTree::leaf();
    }
    if (!j.is_array()) bad("a tree is \"L\" or an array of subtrees");
    std::vector<PlanarTree> children;
    for (const auto& c : j) children.push_back(tree_from_json(c));
    try {
        return PlanarTree::node(std::move(children));
    } catch (const Error& e) {
        bad(e.what());
    }
}

Json to_json(const OperadicTwoCat& o) {
    const auto& c = o.cat;
    Json zeros = Json::array(), homs = Json::object(), pi = Json::object();
    for (int x = 0; x < c.zero_count(); ++x) {
        zeros.push_back(c.zero_label(x));
        pi[c.zero_label(x)] = o.card0[sz(x)];
    }
    for (int p = 0; p < c.one_count(); ++p) pi[c.one_label(p)] = o.card1[sz(p)].str();
    for (int x = 0; x < c.zero_count(); ++x)
        for (int y = 0; y < c.zero_count(); ++y)
            if (!c.hom(x, y).empty()) homs[std::to_string(x) + "|" + std::to_string(y)] = to_json(c.hom_category(x, y).cat);
    return Json{{"zero_cells", zeros}, {"homs", homs}, {"pi", pi}};
}

Json to_json(const CheckReport& r) {
    Json j{{"name", r.name}, {"verdict", to_string(r.verdict)}, {"instances", r.instances}, {"sampled", r.sampled}};
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    return j;
}

Json to_json(const std::vector<CheckReport>& rs) {
    Json a = Json::array();
    for (const auto& r : rs) a.push_back(to_json(r));
    return Json{{"status", to_string(combine(rs))}, {"checks", a}};
}

Json to_json(const OperadCertificate& c) {
    Json per = Json::array();
    for (const auto& a : c.per_arity_iso) per.push_back({{"n", a.n}, {"obj_map", a.obj_map}, {"mor_map", a.mor_map}});
    Json j{{"per_arity_iso", per}, {"mu_checked", c.mu_checked}, {"status", c.ok ? "pass" : "fail"}};
    if (c.failure) j["failure"] = *c.failure;
    return j;
}

Json to_json(const TwoCatCertificate& c) {
    Json j{{"map0", c.map.map0}, {"map1", c.map.map1}, {"map2", c.map.map2}, {"cells", c.cells}, {"status", c.ok ? "pass" : "fail"}};
    if (c.failure) j["failure"] = *c.failure;
    return j;
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        bad("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

} // namespace opint
