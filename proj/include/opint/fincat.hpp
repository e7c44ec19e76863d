#pragma once

// Finite categories presented by explicit tables.

#include "opint/error.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace opint {

struct Arrow {
    int src;
    int dst;
};

/// A finite category. Objects and morphisms are dense integer ids; the
/// string names are what JSON and reports show. Immutable once built.
class FinCat {
public:
    FinCat() = default;

    /// `comp` lists (g, f, g∘f) for composable pairs. Identity composites may
    /// be omitted; they are filled in.
    FinCat(std::vector<std::string> objects, std::vector<std::string> morphism_names,
           std::vector<Arrow> morphisms, std::vector<int> identities,
           const std::vector<std::array<int, 3>>& comp);

    FinCat(const FinCat& other);
    FinCat& operator=(const FinCat& other);
    FinCat(FinCat&&) noexcept = default;
    FinCat& operator=(FinCat&&) noexcept = default;

    int object_count() const noexcept { return static_cast<int>(objects_.size()); }
    int morphism_count() const noexcept { return static_cast<int>(arrows_.size()); }

    const std::string& object_name(int o) const { return objects_.at(static_cast<std::size_t>(o)); }
    const std::string& morphism_name(int m) const { return names_.at(static_cast<std::size_t>(m)); }
    const Arrow& arrow(int m) const { return arrows_.at(static_cast<std::size_t>(m)); }
    int identity(int o) const { return identities_.at(static_cast<std::size_t>(o)); }
    bool is_identity(int m) const { return identity(arrow(m).src) == m; }

    /// g∘f if the pair is composable and the table defines it.
    std::optional<int> compose(int g, int f) const;
    /// g∘f, throwing on a non-composable pair.
    int compose_or_throw(int g, int f) const;

    /// Morphisms a → b, in id order. Built on first use.
    std::span<const int> hom(int a, int b) const;

    std::optional<int> find_object(std::string_view name) const;
    std::optional<int> find_morphism(std::string_view name) const;

    /// Number of (g, f) entries in the composition table.
    std::size_t comp_size() const noexcept { return comp_.size(); }
    const std::unordered_map<std::uint64_t, int>& comp_table() const noexcept { return comp_; }

    static std::uint64_t pair_key(int g, int f) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) |
               static_cast<std::uint32_t>(f);
    }

private:
    std::vector<std::string> objects_;
    std::vector<std::string> names_;
    std::vector<Arrow> arrows_;
    std::vector<int> identities_;
    std::unordered_map<std::uint64_t, int> comp_;

    struct HomIndex {
        std::once_flag once;
        std::vector<std::vector<int>> homs;  // a * object_count + b
    };
    mutable std::unique_ptr<HomIndex> index_ = std::make_unique<HomIndex>();
};

/// Category of a preorder: one morphism a → b whenever `related(a, b)`.
/// The relation must be reflexive and transitive. Morphisms are named
/// "(a,b)" from the object names.
FinCat preorder_category(std::vector<std::string> elements,
                         const std::function<bool(int, int)>& related);

FinCat terminal_category();
FinCat discrete_category(std::vector<std::string> objects);

/// Product with tuple-named objects and morphisms. Ids follow the
/// mixed-radix order with the first factor most significant.
FinCat product(std::span<const FinCat* const> factors);

struct CategoryViolation {
    std::string axiom;
    std::string where;
};

struct CategoryReport {
    bool valid() const noexcept { return violations.empty(); }
    std::vector<CategoryViolation> violations;
};

/// Lists every violated axiom instance (identity shape, identity laws,
/// totality and typing of composition, associativity).
CategoryReport validate_category(const FinCat& c);

struct Functor {
    std::vector<int> obj_map;
    std::vector<int> mor_map;
};

/// Checks that `f` preserves sources, targets, identities and composites.
std::optional<std::string> functor_defect(const FinCat& source, const FinCat& target,
                                          const Functor& f);

Functor compose_functors(const Functor& first, const Functor& second);
Functor identity_functor(const FinCat& c);

struct TerminalObject {
    int object;
    std::vector<int> witnesses;  // witnesses[x] is the unique arrow x → object
};

std::optional<TerminalObject> terminal_object(const FinCat& c);

struct IsoResult {
    enum class Status { Found, None, TooLarge };
    Status status = Status::None;
    Functor forward;
    Functor backward;
};

/// Exhaustive search over object bijections, pruned by hom-set sizes, then
/// over matching morphism bijections. Aborts with TooLarge past
/// `object_limit` objects.
IsoResult categories_isomorphic(const FinCat& c, const FinCat& d, int object_limit = 64);

} // namespace opint
