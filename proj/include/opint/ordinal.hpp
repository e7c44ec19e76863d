#pragma once

// Finite non-empty ordinals and order-preserving surjections between them.
// Ordinals are 1-indexed: the ordinal n is [1 < 2 < ... < n].

#include "opint/error.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace opint {

class Surjection {
public:
    /// Validates that `values` is weakly increasing and hits every element
    /// of 1..codomain.
    Surjection(int codomain, std::vector<int> values);

    static Surjection identity(int n);
    static Surjection bang(int n);

    int dom() const noexcept { return static_cast<int>(values_.size()); }
    int cod() const noexcept { return cod_; }
    std::span<const int> values() const noexcept { return values_; }

    /// Value at position i, 1-indexed on both sides.
    int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

    bool is_identity() const noexcept { return cod_ == dom(); }

    /// Sizes |g^{-1}(i)| for i = 1..cod.
    std::vector<int> fiber_sizes() const;

    /// "m->n:[v1,v2,...]"
    std::string str() const;
    static Surjection parse(std::string_view text);

    /// Injective packing for domains up to 15 elements.
    std::uint64_t key() const;

    friend bool operator==(const Surjection&, const Surjection&) = default;
    friend auto operator<=>(const Surjection& a, const Surjection& b) {
        if (auto c = a.dom() <=> b.dom(); c != 0) return c;
        if (auto c = a.cod_ <=> b.cod_; c != 0) return c;
        return a.values_ <=> b.values_;
    }

private:
    int cod_;
    std::vector<int> values_;
};

/// g∘f for f: m→k, g: k→n.
Surjection compose(const Surjection& f, const Surjection& g);

struct Preimage {
    int size;
    std::vector<int> embedding;  // strictly increasing positions in 1..dom
};

Preimage preimage(const Surjection& g, int i);

/// The induced map f^i : (g∘f)^{-1}(i) → g^{-1}(i), with both preimages
/// identified with ordinals.
Surjection induced_map(const Surjection& f, const Surjection& g, int i);

/// Shift-and-concatenate of f^1, ..., f^n.
Surjection ordinal_sum(std::span<const Surjection> maps);

/// The unique f with g∘f = h whose induced maps are `parts`.
Surjection reconstruct_triangle(const Surjection& g, const Surjection& h,
                                std::span<const Surjection> parts);

/// All order-preserving surjections m→n, lexicographic in their values.
std::vector<Surjection> enumerate_surjections(int m, int n);

/// Every surjection whose domain is at most `max_dom`, ordered by domain,
/// then codomain, then values.
std::vector<Surjection> surjections_up_to(int max_dom);

/// Cuts `seq` into the blocks seq|g^{-1}(1), ..., seq|g^{-1}(n).
template <class T>
std::vector<std::vector<T>> block_cut(std::span<const T> seq, const Surjection& g) {
    if (static_cast<int>(seq.size()) != g.dom())
        throw Error(Error::Kind::Arity, "block_cut: sequence length " + std::to_string(seq.size()) +
                                            " does not match domain of " + g.str());
    std::vector<std::vector<T>> blocks(static_cast<std::size_t>(g.cod()));
    for (int p = 1; p <= g.dom(); ++p)
        blocks[static_cast<std::size_t>(g(p) - 1)].push_back(seq[static_cast<std::size_t>(p - 1)]);
    return blocks;
}

template <class T>
std::vector<std::vector<T>> block_cut(const std::vector<T>& seq, const Surjection& g) {
    return block_cut(std::span<const T>(seq), g);
}

} // namespace opint
