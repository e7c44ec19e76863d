#pragma once

// Reduced planar rooted trees: every internal vertex has at least two
// children. The single leaf is the unit tree.

#include "opint/operad.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace opint {

class PlanarTree {
public:
    static PlanarTree leaf() { return PlanarTree(); }
    static PlanarTree corolla(int n);
    /// Throws Invalid for fewer than two children.
    static PlanarTree node(std::vector<PlanarTree> children);

    bool is_leaf() const noexcept { return children_.empty(); }
    const std::vector<PlanarTree>& children() const noexcept { return children_; }
    int leaves() const noexcept { return leaves_; }
    int internal_vertices() const;

    /// "L" for the leaf, "(t1,t2,...)" otherwise.
    std::string str() const;
    static PlanarTree parse(std::string_view text);

    friend bool operator==(const PlanarTree&, const PlanarTree&) = default;
    friend std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b);

private:
    std::vector<PlanarTree> children_;
    int leaves_ = 1;
};

/// All trees with n leaves. Root arities run over compositions of n into at
/// least two parts in lexicographic order, so the corolla comes first.
std::vector<PlanarTree> enumerate_trees(int n);

/// Leaf intervals [lo, hi] (1-indexed) below each non-root internal vertex,
/// sorted. A reduced tree is determined by its leaf count and clades.
std::vector<std::pair<int, int>> clades(const PlanarTree& t);

/// True iff t is obtained from s by contracting internal edges.
bool contracts_to(const PlanarTree& s, const PlanarTree& t);

/// Trees obtained from t by contracting exactly one internal edge.
std::vector<PlanarTree> single_contractions(const PlanarTree& t);

/// Grafts b_i onto leaf i of c. b_i must have |g^{-1}(i)| leaves.
PlanarTree graft(const PlanarTree& c, const Surjection& g, std::span<const PlanarTree> b);

/// Trees with at most N leaves. A morphism s → t exists iff t is obtained
/// from s by contractions, so the corolla is terminal in each component.
TruncatedOperad tree_operad(int bound);

/// The tree an object id of tree_operad(N).component(n) stands for.
PlanarTree tree_of(const TruncatedOperad& trees, int n, int object);

} // namespace opint
