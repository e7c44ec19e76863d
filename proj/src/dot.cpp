#include "opint/dot.hpp"

#include <sstream>

namespace opint {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

class TreeWriter {
public:
    TreeWriter(std::ostringstream& out, std::string prefix) : out_(out), prefix_(std::move(prefix)) {}

    // Emits t and returns its root node id.
    std::string emit(const PlanarTree& t) {
        const std::string id = prefix_ + std::to_string(next_++);
        if (t.is_leaf()) {
            out_ << "  " << id << " [shape=point, width=0.08];\n";
            return id;
        }
        out_ << "  " << id << " [shape=circle, label=\"\", width=0.15, style=filled, fillcolor=black];\n";
        for (const auto& c : t.children()) edge(id, emit(c), false);
        return id;
    }

    // Emits b with a[i] grafted on leaf i; grafting edges are dashed.
    std::string emit_grafted(const PlanarTree& b, const std::vector<PlanarTree>& a, int& leaf) {
        if (b.is_leaf()) return emit(a[static_cast<std::size_t>(leaf++)]);
        const std::string id = prefix_ + std::to_string(next_++);
        out_ << "  " << id << " [shape=circle, label=\"\", width=0.15, style=filled, fillcolor=black];\n";
        for (const auto& c : b.children()) {
            const bool cut = c.is_leaf();
            edge(id, emit_grafted(c, a, leaf), cut);
        }
        return id;
    }

    std::string stub() {
        const std::string id = prefix_ + "root";
        out_ << "  " << id << " [shape=none, label=\"\", width=0, height=0];\n";
        return id;
    }

    void edge(const std::string& from, const std::string& to, bool cut) {
        out_ << "  " << from << " -> " << to;
        if (cut) out_ << " [style=dashed, color=red, label=\"cut\"]";
        out_ << ";\n";
    }

private:
    std::ostringstream& out_;
    std::string prefix_;
    int next_ = 0;
};

} // namespace

std::string tree_dot(const PlanarTree& t, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << quote(name) << " {\n  rankdir=TB;\n  edge [arrowhead=none];\n";
    TreeWriter w(out, "n");
    const auto root = w.stub();
    w.edge(root, w.emit(t), false);
    out << "}\n";
    return out.str();
}

std::string cut_dot(const Integration& trees, const OneCell& c, const std::string& name) {
    const auto& p = trees.operad();
    const auto b = tree_of(p, c.dst.m, c.dst.a);
    std::vector<PlanarTree> a;
    auto sizes = c.f.fiber_sizes();
    for (std::size_t i = 0; i < sizes.size(); ++i) a.push_back(tree_of(p, sizes[i], c.a[i]));
    std::ostringstream out;
    out << "digraph " << quote(name) << " {\n  rankdir=TB;\n  edge [arrowhead=none];\n";
    out << "  label=" << quote(trees.label(c)) << ";\n";
    out << "  subgraph cluster_cut {\n  label=\"cut\";\n";
    TreeWriter w(out, "c");
    const auto root = w.stub();
    int leaf = 0;
    const auto top = w.emit_grafted(b, a, leaf);
    w.edge(root, top, b.is_leaf());
    out << "  }\n  subgraph cluster_source {\n  label=" << quote("contracts to " + trees.label(c.src)) << ";\n";
    TreeWriter s(out, "s");
    const auto sroot = s.stub();
    s.edge(sroot, s.emit(tree_of(p, c.src.m, c.src.a)), false);
    out << "  }\n}\n";
    return out.str();
}

std::string category_dot(const FinCat& c, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << quote(name) << " {\n  rankdir=LR;\n  node [shape=box];\n";
    for (int o = 0; o < c.object_count(); ++o) out << "  o" << o << " [label=" << quote(c.object_name(o)) << "];\n";
    for (int m = 0; m < c.morphism_count(); ++m) {
        if (c.is_identity(m)) continue;
        out << "  o" << c.arrow(m).src << " -> o" << c.arrow(m).dst << " [label=" << quote(c.morphism_name(m)) << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string factorization_dot(const Integration& ip, const OneCell& phi, const std::string& name) {
    auto [e, m] = ip.factorize(phi);
    std::ostringstream out;
    out << "digraph " << quote(name) << " {\n  rankdir=LR;\n  node [shape=box];\n";
    out << "  x [label=" << quote(ip.label(phi.src)) << "];\n";
    out << "  s [label=" << quote(ip.label(e.dst)) << "];\n";
    out << "  y [label=" << quote(ip.label(phi.dst)) << "];\n";
    out << "  x -> s [label=" << quote("E " + ip.label(e)) << "];\n";
    out << "  s -> y [label=" << quote("M " + ip.label(m)) << "];\n";
    out << "  x -> y [label=" << quote(ip.label(phi)) << ", style=dotted];\n";
    out << "}\n";
    return out.str();
}

} // namespace opint
