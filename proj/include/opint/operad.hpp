#pragma once

// Constant-free non-symmetric categorical operads, truncated at a bound N.
//
// An operad stores categories P_1..P_N, a unit object e of P_1, and for every
// surjection g: k → n with k ≤ N a composition functor
//
//     μ_g : P_n × P_{k_1} × ... × P_{k_n} → P_k,   k_i = |g^{-1}(i)|,
//
// tabulated on object tuples and on morphism tuples.

#include "opint/fincat.hpp"
#include "opint/ordinal.hpp"
#include "opint/parallel.hpp"
#include "opint/report.hpp"

#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace opint {

/// Tabulated composition functor for one surjection.
struct MuTable {
    Surjection g;
    std::vector<int> arities;    // n, k_1, ..., k_n
    std::vector<int> obj_radix;  // object counts of the argument categories
    std::vector<int> mor_radix;
    std::vector<int> obj;        // mixed-radix encoded tuple -> object of P_k
    std::vector<int> mor;        // mixed-radix encoded tuple -> morphism of P_k
};

/// Encodes `digits` in the given radices, first digit most significant.
std::size_t encode_tuple(std::span<const int> digits, std::span<const int> radices);
void decode_tuple(std::size_t code, std::span<const int> radices, std::vector<int>& digits);

class TruncatedOperad {
public:
    /// Value of μ_g on an argument tuple (objects or morphisms).
    using TupleFn = std::function<int(const Surjection& g, std::span<const int> args)>;

    TruncatedOperad() = default;

    /// Tabulates μ_g for every g with domain at most `bound`. When
    /// `on_morphisms` is empty every target component must be thin and the
    /// morphism table is derived from the object table.
    static TruncatedOperad build(std::string name, int bound, std::vector<FinCat> components,
                                 int unit, const TupleFn& on_objects, const TupleFn& on_morphisms);

    const std::string& name() const noexcept { return name_; }
    int bound() const noexcept { return bound_; }
    int unit() const noexcept { return unit_; }
    const FinCat& component(int n) const;
    std::span<const MuTable> mus() const noexcept { return mus_; }

    /// Throws Truncation when g.dom() exceeds the bound.
    const MuTable& mu(const Surjection& g) const;
    bool has_mu(const Surjection& g) const;

    /// Argument arities (n, k_1, ..., k_n) for μ_g.
    static std::vector<int> arities(const Surjection& g);

    int mu_obj(const Surjection& g, std::span<const int> args) const;
    int mu_mor(const Surjection& g, std::span<const int> args) const;

    // Table surgery, used by loaders and by tests that plant defects.
    void set_mu_obj(const Surjection& g, std::span<const int> args, int value);
    void set_mu_mor(const Surjection& g, std::span<const int> args, int value);
    void set_unit(int unit) { unit_ = unit; }

private:
    int index_of(const Surjection& g) const;
    std::size_t checked_code(const MuTable& t, std::span<const int> args, bool objects) const;

    std::string name_;
    int bound_ = 0;
    std::vector<FinCat> components_;
    int unit_ = 0;
    std::vector<MuTable> mus_;
    std::unordered_map<std::uint64_t, int> mu_index_;
};

/// Each μ_g preserves identities and composites.
CheckReport check_functoriality(const TruncatedOperad& p, const CheckOptions& opts = {});

/// μ_f(μ_g(c, b), a) = μ_{gf}(c, μ_{f^1}(b_1, a^1), ..., μ_{f^n}(b_n, a^n)) for
/// every composable f: m → k, g: k → n with m ≤ N. Object tuples are checked
/// exhaustively; morphism tuples exhaustively up to the cap and on an evenly
/// strided sample beyond it.
CheckReport check_associativity(const TruncatedOperad& p, const CheckOptions& opts = {});

/// μ_{1_n}(a, e, ..., e) = a and μ_{!_n}(e, a) = a on objects and morphisms.
CheckReport check_unitality(const TruncatedOperad& p, const CheckOptions& opts = {});

/// Components are categories, μ is functorial, associative and unital.
std::vector<CheckReport> validate_operad(const TruncatedOperad& p, const CheckOptions& opts = {});

/// A morphism of operads: functors F_n: P_n → Q_n for n = 1..N.
struct OperadMorphism {
    std::vector<Functor> components;  // index n-1
};

/// Both squares on every argument tuple within the truncation, plus
/// F_1(e) = e.
CheckReport validate_operad_morphism(const TruncatedOperad& source, const TruncatedOperad& target,
                                     const OperadMorphism& f, const CheckOptions& opts = {});

OperadMorphism identity_morphism(const TruncatedOperad& p);
OperadMorphism compose_morphisms(const OperadMorphism& first, const OperadMorphism& second);

/// Every operad morphism P → Q, by enumerating component functors and
/// filtering. Throws SearchTooLarge past `cap` candidate tuples.
std::vector<OperadMorphism> enumerate_operad_morphisms(const TruncatedOperad& source,
                                                       const TruncatedOperad& target,
                                                       std::size_t cap = default_cap());

/// Every functor C → D. Throws SearchTooLarge past `cap` results.
std::vector<Functor> enumerate_functors(const FinCat& c, const FinCat& d,
                                        std::size_t cap = default_cap());

/// (ℕ, ≥, +) saturated at M: bound 1, P_1 = ({0..M}, ≥), μ(a, b) = min(a+b, M).
TruncatedOperad nat_operad(int saturation);

/// Every component the terminal category.
TruncatedOperad terminal_operad(int bound);

/// The unique morphism into the terminal operad of the same bound.
OperadMorphism to_terminal(const TruncatedOperad& p, const TruncatedOperad& terminal);

} // namespace opint
