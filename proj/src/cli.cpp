#include "opint/cli.hpp"

#include "opint/dot.hpp"
#include "opint/io.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <ostream>

namespace opint {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

int parse_int(std::string_view s, const std::string& what) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw Error(Error::Kind::Input, "expected an integer for " + what + ", got '" + std::string(s) + "'");
    return v;
}

// "[m,name]", "m,name" or a bare object name looked up across arities.
ZeroCell parse_zero(const TruncatedOperad& p, std::string text) {
    if (text.size() >= 2 && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
    auto comma = text.find(',');
    if (comma != std::string::npos) {
        int m = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + comma, m);
        if (ec == std::errc() && ptr == text.data() + comma) {
            if (m < 1 || m > p.bound()) throw Error(Error::Kind::Truncation, "arity " + std::to_string(m) + " exceeds the bound");
            auto o = p.component(m).find_object(text.substr(comma + 1));
            if (!o) throw Error(Error::Kind::Input, "no object '" + text.substr(comma + 1) + "' in arity " + std::to_string(m));
            return {m, *o};
        }
    }
    for (int m = 1; m <= p.bound(); ++m)
        if (auto o = p.component(m).find_object(text)) return {m, *o};
    throw Error(Error::Kind::Input, "no object named '" + text + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

int exit_for(Verdict v) {
    switch (v) {
    case Verdict::Pass: return ExitPass;
    case Verdict::Fail: return ExitFail;
    case Verdict::Capped: return ExitCapped;
    }
    return ExitFail;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw Error(Error::Kind::Input, "cannot write " + path);
    f << text;
}

void print_reports(std::ostream& out, const std::vector<CheckReport>& rs, bool json) {
    if (json) {
        out << to_json(rs).dump(2) << "\n";
        return;
    }
    for (const auto& r : rs) out << r.summary() << "\n";
}

struct Options {
    std::string operad = "nat:5";
    int bound = 0;
    std::size_t cap = default_cap();
    bool json = false;
    std::string out;
    std::string src, dst;
    std::string surjection;
    std::string fibers;
    std::string entity = "tree";
    std::string tree = "(L,L,L)";
    int index = -1;
};

int cmd_validate(const Options& o, std::ostream& out) {
    auto p = load_operad(o.operad, o.bound);
    auto rs = validate_operad(p, {o.cap, Exec::Parallel});
    print_reports(out, rs, o.json);
    return exit_for(combine(rs));
}

int cmd_integrate(const Options& o, std::ostream& out) {
    auto p = load_operad(o.operad, o.bound);
    CheckOptions opts{o.cap, Exec::Parallel};
    Integration ip(p);
    auto mi = materialize(ip);
    const auto& s = mi.fibration;
    std::vector<CheckReport> rs = check_two_category_laws(s.o.cat, opts);
    rs.push_back(check_factorization(ip, opts));
    for (auto& r : check_operadic_axioms(s.o, opts)) rs.push_back(std::move(r));
    rs.push_back(check_lifts(s, opts));
    rs.push_back(check_splitting(s, opts));
    for (auto& r : check_trivial_lemmas(s.o, opts)) rs.push_back(std::move(r));
    if (!o.out.empty()) write_file(o.out, to_json(s.o).dump(2) + "\n");
    if (!o.json)
        out << "integral of " << p.name() << ": " << s.o.cat.zero_count() << " 0-cells, " << s.o.cat.one_count() << " 1-cells, "
            << s.o.cat.two_count() << " 2-cells, " << s.o.triangles.size() << " lax triangles\n";
    print_reports(out, rs, o.json);
    return exit_for(combine(rs));
}

int cmd_hom(const Options& o, std::ostream& out) {
    auto p = load_operad(o.operad, o.bound);
    Integration ip(p);
    auto x = parse_zero(p, o.src), y = parse_zero(p, o.dst);
    auto cat = ip.hom_category(x, y);
    auto term = terminal_object(cat);
    if (o.json) {
        Json j = to_json(cat);
        j["terminal"] = term ? Json(cat.object_name(term->object)) : Json(nullptr);
        out << j.dump(2) << "\n";
        return ExitPass;
    }
    out << "hom(" << ip.label(x) << ", " << ip.label(y) << "): " << cat.object_count() << " 1-cells, " << cat.morphism_count()
        << " 2-cells\n";
    const auto& h = ip.hom(x, y);
    for (std::size_t i = 0; i < h.cells.size(); ++i) {
        out << "  " << ip.label(h.cells[i]) << "  fibers";
        for (const auto& z : ip.fibers(h.cells[i])) out << " " << ip.label(z);
        out << "\n";
    }
    out << "terminal: " << (term ? cat.object_name(term->object) : std::string("none")) << "\n";
    return ExitPass;
}

int cmd_factor(const Options& o, std::ostream& out) {
    auto p = load_operad(o.operad, o.bound);
    Integration ip(p);
    auto x = parse_zero(p, o.src), y = parse_zero(p, o.dst);
    const auto& h = ip.hom(x, y);
    Json arr = Json::array();
    for (std::size_t i = 0; i < h.cells.size(); ++i) {
        if (o.index >= 0 && sz(o.index) != i) continue;
        auto [e, m] = ip.factorize(h.cells[i]);
        if (o.json)
            arr.push_back({{"cell", ip.label(h.cells[i])}, {"E", ip.label(e)}, {"M", ip.label(m)}});
        else
            out << ip.label(h.cells[i]) << " = " << ip.label(m) << " o " << ip.label(e) << "\n";
    }
    if (o.index >= 0 && sz(o.index) >= h.cells.size()) throw Error(Error::Kind::Range, "--index out of range");
    if (o.json) out << arr.dump(2) << "\n";
    return ExitPass;
}

int cmd_lift(const Options& o, std::ostream& out) {
    auto p = load_operad(o.operad, o.bound);
    Integration ip(p);
    auto g = Surjection::parse(o.surjection);
    auto c = parse_zero(p, o.dst);
    std::vector<ZeroCell> fib;
    auto sizes = g.fiber_sizes();
    auto names = o.fibers.empty() ? std::vector<std::string>{} : split(o.fibers, ';');
    if (names.size() != sizes.size())
        throw Error(Error::Kind::Arity, "--fibers needs " + std::to_string(sizes.size()) + " objects separated by ';'");
    for (std::size_t i = 0; i < names.size(); ++i) {
        auto z = parse_zero(p, names[i].find(',') == std::string::npos ? std::to_string(sizes[i]) + "," + names[i] : names[i]);
        fib.push_back(z);
    }
    auto l = ip.cartesian_lift(g, c, fib);
    if (o.json)
        out << Json{{"lift", ip.label(l)}, {"source", ip.label(l.src)}, {"target", ip.label(l.dst)}}.dump(2) << "\n";
    else
        out << ip.label(l) << " : " << ip.label(l.src) << " -> " << ip.label(l.dst) << "\n";
    return ExitPass;
}

int cmd_extract(const Options& o, std::ostream& out) {
    auto p = load_operad(o.operad, o.bound);
    Integration ip(p);
    auto mi = materialize(ip);
    auto ex = extract_operad(mi.fibration, "extracted(" + p.name() + ")");
    auto rs = validate_operad(ex.operad, {o.cap, Exec::Parallel});
    if (!o.out.empty()) write_file(o.out, to_json(ex.operad).dump(2) + "\n");
    if (o.json) {
        out << to_json(ex.operad).dump(2) << "\n";
    } else {
        for (int n = 1; n <= ex.operad.bound(); ++n)
            out << "P_" << n << ": " << ex.operad.component(n).object_count() << " objects, "
                << ex.operad.component(n).morphism_count() << " morphisms\n";
        print_reports(out, rs, false);
    }
    return exit_for(combine(rs));
}

int cmd_roundtrip(const Options& o, std::ostream& out) {
    auto p = load_operad(o.operad, o.bound);
    auto cert = roundtrip_operad(p);
    Integration ip(p);
    auto mi = materialize(ip);
    auto cert2 = roundtrip_2cat(mi.fibration);
    Json j = to_json(cert);
    j["two_category"] = to_json(cert2);
    const std::string path = o.out.empty() ? "roundtrip-certificate.json" : o.out;
    write_file(path, j.dump(2) + "\n");
    if (o.json) {
        out << j.dump(2) << "\n";
    } else {
        out << "operad round trip: " << (cert.ok ? "pass" : "fail") << " (" << cert.mu_checked << " mu entries)";
        if (cert.failure) out << ": " << *cert.failure;
        out << "\n2-category round trip: " << (cert2.ok ? "pass" : "fail") << " (" << cert2.cells << " cells)";
        if (cert2.failure) out << ": " << *cert2.failure;
        out << "\ncertificate: " << path << "\n";
    }
    return cert.ok && cert2.ok ? ExitPass : ExitFail;
}

int cmd_trees(const Options& o, std::ostream& out) {
    const int n = o.bound > 0 ? o.bound : 4;
    Json j = Json::object();
    for (int k = 1; k <= n; ++k) {
        auto ts = enumerate_trees(k);
        if (o.json) {
            Json a = Json::array();
            for (const auto& t : ts) a.push_back(to_json(t));
            j[std::to_string(k)] = a;
            continue;
        }
        out << k << " leaves: " << ts.size() << " trees\n";
        for (const auto& t : ts) out << "  " << t.str() << "\n";
    }
    if (o.json) out << j.dump(2) << "\n";
    return ExitPass;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
    std::string text;
    if (o.entity == "tree") {
        text = tree_dot(PlanarTree::parse(o.tree));
    } else {
        auto p = load_operad(o.operad, o.bound);
        Integration ip(p);
        auto x = parse_zero(p, o.src), y = parse_zero(p, o.dst);
        const auto& h = ip.hom(x, y);
        auto pick = [&]() -> const OneCell& {
            const int i = o.index < 0 ? 0 : o.index;
            if (sz(i) >= h.cells.size()) throw Error(Error::Kind::Range, "hom has no 1-cell with index " + std::to_string(i));
            return h.cells[sz(i)];
        };
        if (o.entity == "hom") text = category_dot(ip.hom_category(x, y), "hom");
        else if (o.entity == "factorization") text = factorization_dot(ip, pick());
        else if (o.entity == "cut") {
            if (p.name().rfind("trees:", 0) != 0) throw Error(Error::Kind::Input, "cut pictures need a tree operad");
            text = cut_dot(ip, pick());
        } else {
            throw Error(Error::Kind::Input, "unknown entity '" + o.entity + "'");
        }
    }
    if (o.out.empty()) out << text;
    else write_file(o.out, text);
    return ExitPass;
}

} // namespace

TruncatedOperad load_operad(const std::string& source, int bound) {
    auto colon = source.find(':');
    const std::string kind = source.substr(0, colon);
    if (kind == "nat" || kind == "trees" || kind == "terminal") {
        int n = bound;
        if (colon != std::string::npos) n = parse_int(std::string_view(source).substr(colon + 1), source);
        if (n < 1) throw Error(Error::Kind::Input, "builtin '" + kind + "' needs a positive parameter");
        if (kind == "nat") return nat_operad(n);
        if (kind == "trees") return tree_operad(n);
        return terminal_operad(n);
    }
    auto p = operad_from_json(read_json_file(source));
    if (bound > 0 && bound != p.bound())
        throw Error(Error::Kind::Truncation, "operad file has bound " + std::to_string(p.bound()));
    return p;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Truncated non-symmetric operads and their integrations"};
    app.require_subcommand(1);
    Options o;
    std::size_t cap = 0;

    auto common = [&](CLI::App* sub, bool operad) {
        if (operad) sub->add_option("--operad", o.operad, "nat:M, trees:N, terminal:N or a JSON file");
        sub->add_option("--bound", o.bound, "arity bound for builtins given without one");
        sub->add_option("--cap", cap, "instance cap for exhaustive checks");
        sub->add_flag("--json", o.json, "machine-readable output");
        sub->add_option("--out", o.out, "output path");
    };
    auto cells = [&](CLI::App* sub) {
        sub->add_option("--src", o.src, "source 0-cell, as m,name or name")->required();
        sub->add_option("--dst", o.dst, "target 0-cell")->required();
    };

    std::map<CLI::App*, std::function<int(const Options&, std::ostream&)>> verbs;
    auto* v = app.add_subcommand("validate", "run the operad axiom suite");
    common(v, true);
    verbs[v] = cmd_validate;
    auto* in = app.add_subcommand("integrate", "build the integration and check it is a split operadic fibration");
    common(in, true);
    verbs[in] = cmd_integrate;
    auto* h = app.add_subcommand("hom", "list a hom category of the integration");
    common(h, true);
    cells(h);
    verbs[h] = cmd_hom;
    auto* f = app.add_subcommand("factor", "factor 1-cells as M after E");
    common(f, true);
    cells(f);
    f->add_option("--index", o.index, "only the 1-cell with this index in the hom");
    verbs[f] = cmd_factor;
    auto* l = app.add_subcommand("lift", "the chosen cartesian lift");
    common(l, true);
    l->add_option("--surjection", o.surjection, "m->n:[v1,...,vm]")->required();
    l->add_option("--dst", o.dst, "target 0-cell")->required();
    l->add_option("--fibers", o.fibers, "fiber objects separated by ';'");
    verbs[l] = cmd_lift;
    auto* e = app.add_subcommand("extract", "extract an operad from the integration");
    common(e, true);
    verbs[e] = cmd_extract;
    auto* r = app.add_subcommand("roundtrip", "certify both round trips");
    common(r, true);
    verbs[r] = cmd_roundtrip;
    auto* t = app.add_subcommand("trees", "enumerate reduced planar trees up to --bound leaves");
    common(t, false);
    verbs[t] = cmd_trees;
    auto* d = app.add_subcommand("export-dot", "write a DOT picture");
    common(d, true);
    d->add_option("--entity", o.entity, "tree, hom, factorization or cut");
    d->add_option("--tree", o.tree, "tree for --entity tree");
    d->add_option("--src", o.src, "source 0-cell");
    d->add_option("--dst", o.dst, "target 0-cell");
    d->add_option("--index", o.index, "1-cell index in the hom");
    verbs[d] = cmd_export_dot;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? ExitPass : ExitUsage;
    }
    if (cap > 0) o.cap = cap;
    try {
        for (auto& [sub, fn] : verbs)
            if (sub->parsed()) return fn(o, out);
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n";
        switch (ex.kind()) {
        case Error::Kind::SearchTooLarge: return ExitCapped;
        case Error::Kind::Invalid: return ExitFail;
        default: return ExitUsage;
        }
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return ExitUsage;
    }
    return ExitUsage;
}

} // namespace opint
