#pragma once

// Non-symmetric operadic 2-categories presented by finite tables, split
// fibrations over Δ_s, trivial morphisms and extraction of an operad.
//
// A lax triangle α: φ∘ψ ⇒ θ is stored as (ψ, φ, θ, α) with faces d2 = ψ,
// d1 = θ, d0 = φ. Its fibers α^i: θ_i → φ_i are 1-cells.

#include "opint/operad.hpp"
#include "opint/twocat.hpp"

#include <map>
#include <tuple>

namespace opint {

struct Triangle {
    int psi;
    int phi;
    int theta;
    int alpha;  // 2-cell φ∘ψ ⇒ θ
};

/// A 2-cell of the lax slice over x between triangles with equal d0 and d1:
/// γ: d2(source) ⇒ d2(target) with α_target ∘ (1_φ □ γ) = α_source.
struct SliceTwoCell {
    int source;
    int target;
    int gamma;
};

struct OperadicTwoCat {
    TwoCategory cat;
    std::vector<int> card0;                  // per 0-cell
    std::vector<Surjection> card1;           // per 1-cell
    std::vector<std::vector<int>> fib0;      // per 1-cell: fibers, 0-cells
    std::vector<Triangle> triangles;
    std::vector<std::vector<int>> fib1;      // per triangle: 1-cells
    std::vector<SliceTwoCell> slice2;
    std::vector<std::vector<int>> fib2;      // per slice 2-cell: 2-cells
    std::vector<int> unit;                   // u_x, the chosen lali-terminal of x's component
    std::vector<int> eps;                    // ε_x: x → u_x

    /// Builds the triangle and slice indexes.
    void index();

    /// Triangle with the given d2, d0 and filler; -1 if absent.
    int find_triangle(int psi, int phi, int alpha) const;
    std::span<const int> triangles_over(int phi) const;
    std::span<const int> triangles_between(int phi, int theta) const;
    std::span<const int> slice_from(int triangle) const;
    int find_slice2(int source, int target, int gamma) const;

    /// The identity triangle 1_φ∘1_y ⇒ φ, i.e. the identity of φ in the slice.
    int identity_triangle(int phi) const;
    /// τ2∘τ1 in the lax slice: d2 = ψ2∘ψ1, filler α1 · (α2 □ 1_ψ1).
    int compose_triangles(int tau2, int tau1) const;

private:
    std::map<std::tuple<int, int, int>, int> triangle_index_;
    std::vector<std::vector<int>> by_d0_;
    std::map<std::pair<int, int>, std::vector<int>> by_d0_d1_;
    std::vector<std::vector<int>> slice_by_source_;
    std::map<std::tuple<int, int, int>, int> slice_index_;
};

struct LiftKey {
    Surjection g;
    int target;
    std::vector<int> fibers;

    friend bool operator==(const LiftKey&, const LiftKey&) = default;
    friend auto operator<=>(const LiftKey&, const LiftKey&) = default;
};

/// An operadic 2-category with chosen cartesian lifts ℓ(g, c, b_1..b_n).
struct SplitFibration {
    OperadicTwoCat o;
    std::map<LiftKey, int> lifts;

    int lift(const Surjection& g, int target, std::vector<int> fibers) const;
};

/// Candidates and choices of lali-terminal objects, per connected component.
struct LaliChoice {
    std::vector<int> component;                 // per 0-cell, least member
    std::map<int, std::vector<int>> candidates; // component → lali-terminal objects, id order
    std::map<int, int> chosen;                  // first candidate
    std::vector<int> eps;                       // per 0-cell, terminal of hom(x, chosen); -1 if none
};

LaliChoice lali_terminals(const TwoCategory& c);

/// Axioms (i)-(v), functoriality of the fiber assignment and the lali data.
std::vector<CheckReport> check_operadic_axioms(const OperadicTwoCat& o, const CheckOptions& opts = {});

/// For every θ into the target of φ and every tuple ψ^i: θ_i → φ_i there is
/// exactly one lax triangle with d0 = φ, d1 = θ and fibers ψ. The base
/// triangle in Δ_s is determined by these data, so no separate quantifier
/// over it is needed.
CheckReport is_operadic_cartesian(const OperadicTwoCat& o, int phi, const CheckOptions& opts = {});

/// Each chosen lift has the prescribed target, cardinality and fibers and is
/// operadic cartesian; every (g, c, b) within the bound has a lift.
CheckReport check_lifts(const SplitFibration& s, const CheckOptions& opts = {});

/// ℓ(1_n, c, u..u) = 1_c, ℓ(!_n, u, c) = ε_c and, for f: m → k, g: k → n,
/// ℓ(g, c, b) ∘ ℓ(f, ℓ_1(g, c, b), a) = ℓ(gf, c, ℓ_1(f^1, b_1, a^1)..ℓ_1(f^n, b_n, a^n)).
CheckReport check_splitting(const SplitFibration& s, const CheckOptions& opts = {});

enum class Triviality { Trivial, NotTrivial, CardinalityMismatch };
const char* to_string(Triviality t);

struct TrivialityResult {
    Triviality verdict;
    std::optional<std::string> witness;
};

/// φ: y → x with |x| = |y| is trivial if fib^i(1_{φ∘ψ}) = ε_{fib^i(ψ)} for
/// every ψ into y.
TrivialityResult is_trivial(const OperadicTwoCat& o, int phi);

/// Identities are trivial, trivial 1-cells compose, and fib(φ∘ψ) = fib(ψ)
/// for trivial φ.
std::vector<CheckReport> check_trivial_lemmas(const OperadicTwoCat& o, const CheckOptions& opts = {});

struct Extraction {
    TruncatedOperad operad;
    std::vector<std::vector<int>> objects;    // per arity n-1: 0-cell of each object
    std::vector<std::vector<int>> morphisms;  // per arity n-1: 1-cell of each morphism
};

/// P_n has the 0-cells of cardinality n as objects; a morphism a → b is a
/// trivial 1-cell b → a. μ_g on objects is the domain of the lift, on
/// morphisms the d2 face of the unique cartesian filler; the unit is the
/// chosen lali-terminal object.
Extraction extract_operad(const SplitFibration& s, std::string name = "extracted");

/// Reorders 0-cells: old id x becomes perm[x].
SplitFibration relabel_zero_cells(const SplitFibration& s, const std::vector<int>& perm);

/// Strict 2-functor preserving cardinality, fibers, lali-terminals and
/// chosen lifts.
std::optional<std::string> operadic_functor_defect(const SplitFibration& s, const SplitFibration& t,
                                                   const TwoFunctor& f);

/// Every such 2-functor, by backtracking. Throws SearchTooLarge past `cap`
/// partial assignments.
std::vector<TwoFunctor> enumerate_operadic_functors(const SplitFibration& s, const SplitFibration& t,
                                                    std::size_t cap = default_cap());

/// Δ_s restricted to ordinals 1..N, with identity 2-cells only.
SplitFibration delta_s(int bound);

} // namespace opint
