#include "opint/trees.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace opint {

PlanarTree PlanarTree::corolla(int n) {
    if (n < 1) throw Error(Error::Kind::Invalid, "corolla: need at least one leaf");
    if (n == 1) return leaf();
    return node(std::vector<PlanarTree>(static_cast<std::size_t>(n), leaf()));
}

PlanarTree PlanarTree::node(std::vector<PlanarTree> children) {
    if (children.size() < 2)
        throw Error(Error::Kind::Invalid, "tree vertex needs at least two children");
    PlanarTree t;
    t.leaves_ = 0;
    for (const auto& c : children) t.leaves_ += c.leaves_;
    t.children_ = std::move(children);
    return t;
}

int PlanarTree::internal_vertices() const {
    if (is_leaf()) return 0;
    int n = 1;
    for (const auto& c : children_) n += c.internal_vertices();
    return n;
}

std::string PlanarTree::str() const {
    if (is_leaf()) return "L";
    std::string s = "(";
    for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) s += ",";
        s += children_[i].str();
    }
    return s + ")";
}

namespace {

PlanarTree parse_at(std::string_view text, std::size_t& pos) {
    auto fail = [&](const std::string& what) {
        return Error(Error::Kind::Input, "tree: " + what + " at position " + std::to_string(pos) +
                                             " in \"" + std::string(text) + "\"");
    };
    if (pos >= text.size()) throw fail("unexpected end");
    if (text[pos] == 'L') {
        ++pos;
        return PlanarTree::leaf();
    }
    if (text[pos] != '(') throw fail("expected 'L' or '('");
    ++pos;
    std::vector<PlanarTree> kids;
    for (;;) {
        kids.push_back(parse_at(text, pos));
        if (pos >= text.size()) throw fail("unexpected end");
        if (text[pos] == ',') {
            ++pos;
            continue;
        }
        if (text[pos] == ')') {
            ++pos;
            break;
        }
        throw fail("expected ',' or ')'");
    }
    if (kids.size() < 2) throw fail("vertex with fewer than two children");
    return PlanarTree::node(std::move(kids));
}

} // namespace

PlanarTree PlanarTree::parse(std::string_view text) {
    std::string compact;
    for (char ch : text)
        if (ch != ' ') compact += ch;
    std::size_t pos = 0;
    auto t = parse_at(compact, pos);
    if (pos != compact.size())
        throw Error(Error::Kind::Input, "tree: trailing characters in \"" + std::string(text) + "\"");
    return t;
}

std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b) {
    if (auto c = a.leaves_ <=> b.leaves_; c != 0) return c;
    if (a.is_leaf() || b.is_leaf()) return b.is_leaf() <=> a.is_leaf();
    return std::lexicographical_compare_three_way(a.children_.begin(), a.children_.end(),
                                                  b.children_.begin(), b.children_.end());
}

// ---------------------------------------------------------------------------

namespace {

void compositions(int n, int min_parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        if (static_cast<int>(cur.size()) >= min_parts) out.push_back(cur);
        return;
    }
    for (int p = 1; p <= n; ++p) {
        cur.push_back(p);
        compositions(n - p, min_parts, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<PlanarTree> enumerate_trees(int n) {
    if (n < 1) return {};
    static std::mutex mu;
    static std::map<int, std::vector<PlanarTree>> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(n); it != memo.end()) return it->second;
    }
    std::vector<PlanarTree> out;
    if (n == 1) {
        out.push_back(PlanarTree::leaf());
    } else {
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        compositions(n, 2, cur, comps);
        for (const auto& comp : comps) {
            std::vector<std::vector<PlanarTree>> choices;
            for (int part : comp) choices.push_back(enumerate_trees(part));
            std::vector<std::size_t> idx(comp.size(), 0);
            for (;;) {
                std::vector<PlanarTree> kids;
                for (std::size_t i = 0; i < comp.size(); ++i) kids.push_back(choices[i][idx[i]]);
                out.push_back(PlanarTree::node(std::move(kids)));
                std::size_t i = comp.size();
                while (i > 0) {
                    --i;
                    if (++idx[i] < choices[i].size()) break;
                    idx[i] = 0;
                    if (i == 0) goto next_comp;
                }
            }
        next_comp:;
        }
    }
    std::lock_guard lock(mu);
    memo.emplace(n, out);
    return out;
}

namespace {

void collect_clades(const PlanarTree& t, int offset, bool root, std::vector<std::pair<int, int>>& out) {
    if (t.is_leaf()) return;
    if (!root) out.emplace_back(offset + 1, offset + t.leaves());
    for (const auto& c : t.children()) {
        collect_clades(c, offset, false, out);
        offset += c.leaves();
    }
}

// Contracting the j-th internal edge in preorder, skipping the root.
bool contract_nth(const PlanarTree& t, int& j, PlanarTree& out) {
    std::vector<PlanarTree> kids;
    bool done = false;
    for (const auto& c : t.children()) {
        if (done || c.is_leaf()) {
            kids.push_back(c);
            continue;
        }
        if (j == 0) {
            for (const auto& gc : c.children()) kids.push_back(gc);
            done = true;
            continue;
        }
        --j;
        PlanarTree sub;
        if (contract_nth(c, j, sub)) {
            kids.push_back(std::move(sub));
            done = true;
        } else {
            kids.push_back(c);
        }
    }
    if (done) out = PlanarTree::node(std::move(kids));
    return done;
}

PlanarTree graft_at(const PlanarTree& c, std::span<const PlanarTree> b, std::size_t& next) {
    if (c.is_leaf()) return b[next++];
    std::vector<PlanarTree> kids;
    for (const auto& child : c.children()) kids.push_back(graft_at(child, b, next));
    return PlanarTree::node(std::move(kids));
}

} // namespace

std::vector<std::pair<int, int>> clades(const PlanarTree& t) {
    std::vector<std::pair<int, int>> out;
    collect_clades(t, 0, true, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool contracts_to(const PlanarTree& s, const PlanarTree& t) {
    if (s.leaves() != t.leaves())
        throw Error(Error::Kind::Arity, "contracts_to: leaf counts " + std::to_string(s.leaves()) +
                                            " and " + std::to_string(t.leaves()) + " differ");
    auto cs = clades(s), ct = clades(t);
    return std::includes(cs.begin(), cs.end(), ct.begin(), ct.end());
}

std::vector<PlanarTree> single_contractions(const PlanarTree& t) {
    std::vector<PlanarTree> out;
    const int edges = t.internal_vertices() - 1;
    for (int e = 0; e < edges; ++e) {
        int j = e;
        PlanarTree r;
        if (contract_nth(t, j, r)) out.push_back(std::move(r));
    }
    return out;
}

PlanarTree graft(const PlanarTree& c, const Surjection& g, std::span<const PlanarTree> b) {
    if (c.leaves() != g.cod() || static_cast<int>(b.size()) != g.cod())
        throw Error(Error::Kind::Arity, "graft: " + g.str() + " does not match a tree with " +
                                            std::to_string(c.leaves()) + " leaves and " +
                                            std::to_string(b.size()) + " inputs");
    auto sizes = g.fiber_sizes();
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i].leaves() != sizes[i])
            throw Error(Error::Kind::Arity, "graft: input " + std::to_string(i + 1) + " has " +
                                                std::to_string(b[i].leaves()) + " leaves, expected " +
                                                std::to_string(sizes[i]));
    std::size_t next = 0;
    return graft_at(c, b, next);
}

TruncatedOperad tree_operad(int bound) {
    if (bound < 1) throw Error(Error::Kind::Invalid, "tree_operad: bound must be at least 1");
    std::vector<std::vector<PlanarTree>> trees;
    std::vector<std::map<PlanarTree, int>> ids;
    std::vector<FinCat> comps;
    for (int n = 1; n <= bound; ++n) {
        auto ts = enumerate_trees(n);
        std::vector<std::string> names;
        std::map<PlanarTree, int> id;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            names.push_back(ts[i].str());
            id.emplace(ts[i], static_cast<int>(i));
        }
        comps.push_back(preorder_category(std::move(names), [&ts](int a, int b) {
            return contracts_to(ts[static_cast<std::size_t>(a)], ts[static_cast<std::size_t>(b)]);
        }));
        trees.push_back(std::move(ts));
        ids.push_back(std::move(id));
    }
    auto on_objects = [&](const Surjection& g, std::span<const int> args) {
        const auto& c = trees[static_cast<std::size_t>(g.cod() - 1)][static_cast<std::size_t>(args[0])];
        auto sizes = g.fiber_sizes();
        std::vector<PlanarTree> b;
        for (std::size_t i = 0; i < sizes.size(); ++i)
            b.push_back(trees[static_cast<std::size_t>(sizes[i] - 1)][static_cast<std::size_t>(args[i + 1])]);
        return ids[static_cast<std::size_t>(g.dom() - 1)].at(graft(c, g, b));
    };
    return TruncatedOperad::build("trees:" + std::to_string(bound), bound, std::move(comps), 0,
                                  on_objects, {});
}

PlanarTree tree_of(const TruncatedOperad& trees, int n, int object) {
    return PlanarTree::parse(trees.component(n).object_name(object));
}

} // namespace opint
