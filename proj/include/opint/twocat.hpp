#pragma once

// Finite strict 2-categories presented by explicit cell and composition
// tables. This is the common currency between the integration of an
// operad and the abstract side (operadic 2-categories, extraction).

#include "opint/fincat.hpp"
#include "opint/report.hpp"

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace opint {

struct CellEnds {
    int src;
    int dst;
};

class TwoCategory {
public:
    int add_zero(std::string label);
    int add_one(int src, int dst, std::string label);
    /// A 2-cell between two parallel 1-cells.
    int add_two(int src, int dst, std::string label);

    void set_id1(int x, int one);
    void set_id2(int one, int two);
    /// g∘f for 1-cells f: x → y, g: y → z.
    void set_hcomp1(int g, int f, int gf);
    /// b·a for 2-cells a: p ⇒ q, b: q ⇒ r.
    void set_vcomp(int b, int a, int ba);
    /// ε□δ for ε over 1-cells y → z and δ over x → y.
    void set_hcomp2(int eps, int delta, int result);

    /// Builds the hom and 2-cell indexes. Call once after the tables are set.
    void finalize();

    int zero_count() const noexcept { return static_cast<int>(zero_labels_.size()); }
    int one_count() const noexcept { return static_cast<int>(ones_.size()); }
    int two_count() const noexcept { return static_cast<int>(twos_.size()); }

    const std::string& zero_label(int x) const { return zero_labels_.at(static_cast<std::size_t>(x)); }
    const std::string& one_label(int p) const { return one_labels_.at(static_cast<std::size_t>(p)); }
    const std::string& two_label(int a) const { return two_labels_.at(static_cast<std::size_t>(a)); }
    const CellEnds& one(int p) const { return ones_.at(static_cast<std::size_t>(p)); }
    const CellEnds& two(int a) const { return twos_.at(static_cast<std::size_t>(a)); }

    int id1(int x) const { return id1_.at(static_cast<std::size_t>(x)); }
    int id2(int p) const { return id2_.at(static_cast<std::size_t>(p)); }

    /// Composites; -1 when the table has no entry.
    int hcomp1(int g, int f) const { return lookup(hcomp1_, g, f); }
    int vcomp(int b, int a) const { return lookup(vcomp_, b, a); }
    int hcomp2(int eps, int delta) const { return lookup(hcomp2_, eps, delta); }

    std::span<const int> hom(int x, int y) const;
    std::span<const int> out_of(int x) const { return out_.at(static_cast<std::size_t>(x)); }
    std::span<const int> into(int x) const { return in_.at(static_cast<std::size_t>(x)); }
    std::span<const int> twos_from(int p) const { return twos_from_.at(static_cast<std::size_t>(p)); }
    std::span<const int> twos_between(int p, int q) const;

    std::size_t hcomp1_size() const noexcept { return hcomp1_.size(); }
    std::size_t vcomp_size() const noexcept { return vcomp_.size(); }
    std::size_t hcomp2_size() const noexcept { return hcomp2_.size(); }

    /// The hom category: objects are the 1-cells of hom(x, y) in that
    /// order, morphisms are the 2-cells between them, listed in `twos`.
    struct HomCategory {
        FinCat cat;
        std::vector<int> ones;
        std::vector<int> twos;
    };
    HomCategory hom_category(int x, int y) const;

    /// Connected component of each 0-cell, numbered by least member.
    std::vector<int> components() const;

private:
    static int lookup(const std::unordered_map<std::uint64_t, int>& t, int a, int b) {
        auto it = t.find(FinCat::pair_key(a, b));
        return it == t.end() ? -1 : it->second;
    }

    std::vector<std::string> zero_labels_, one_labels_, two_labels_;
    std::vector<CellEnds> ones_, twos_;
    std::vector<int> id1_, id2_;
    std::unordered_map<std::uint64_t, int> hcomp1_, vcomp_, hcomp2_;

    std::vector<std::vector<int>> homs_;
    std::vector<std::vector<int>> out_, in_, twos_from_;
    std::unordered_map<std::uint64_t, std::vector<int>> twos_between_;
};

/// Horizontal associativity and units, per-hom category laws, functoriality
/// of horizontal 2-cell composition on identities, and interchange.
std::vector<CheckReport> check_two_category_laws(const TwoCategory& c, const CheckOptions& opts = {});

/// A strict 2-functor given on cells.
struct TwoFunctor {
    std::vector<int> map0, map1, map2;
};

/// Endpoints, identities and all three composition tables are preserved.
std::optional<std::string> two_functor_defect(const TwoCategory& source, const TwoCategory& target,
                                              const TwoFunctor& f);

TwoFunctor compose_two_functors(const TwoFunctor& first, const TwoFunctor& second);

} // namespace opint
