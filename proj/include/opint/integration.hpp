#pragma once

// The integration ∫P of a truncated operad: a 2-category fibered over Δ_s.
//
//   0-cells  [m, a]            a ∈ P_m
//   1-cells  [f; a_1..a_k; α]  [m, a] → [k, b], α: μ_f(b, a_1..a_k) → a
//   2-cells  (δ_1..δ_k)        δ_i: a'_i → a''_i with α''∘μ_f(1, δ) = α'

#include "opint/operadic.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace opint {

struct ZeroCell {
    int m;
    int a;

    friend bool operator==(const ZeroCell&, const ZeroCell&) = default;
    friend auto operator<=>(const ZeroCell&, const ZeroCell&) = default;
};

struct OneCell {
    ZeroCell src;
    ZeroCell dst;
    Surjection f;
    std::vector<int> a;  // a_i ∈ P_{|f^{-1}(i)|}
    int alpha;           // morphism of P_m

    friend bool operator==(const OneCell&, const OneCell&) = default;
};

struct TwoCell {
    OneCell source;
    OneCell target;
    std::vector<int> delta;  // δ_i: a'_i → a''_i

    friend bool operator==(const TwoCell&, const TwoCell&) = default;
};

/// A 2-cell φ∘ψ ⇒ θ. The faces are d2 = ψ, d1 = θ, d0 = φ.
struct LaxTriangle {
    OneCell psi;
    OneCell phi;
    OneCell theta;
    std::vector<int> delta;  // δ_i: μ_{f^i}(b_i, a^i) → c_i
};

class Integration {
public:
    /// Does not validate the operad; callers run validate_operad first.
    explicit Integration(const TruncatedOperad& p);

    const TruncatedOperad& operad() const noexcept { return *p_; }

    /// 0-cells ordered by arity, then object id.
    const std::vector<ZeroCell>& zero_cells() const noexcept { return zeros_; }
    int zero_id(const ZeroCell& x) const;
    std::string label(const ZeroCell& x) const;
    std::string label(const OneCell& c) const;
    std::string label(const TwoCell& c) const;

    struct Hom {
        std::vector<OneCell> cells;
        std::vector<CellEnds> twos;                  // local 1-cell indices
        std::vector<std::vector<int>> two_deltas;    // parallel to twos
    };
    /// Memoized; safe to call from several threads.
    const Hom& hom(const ZeroCell& x, const ZeroCell& y) const;

    /// The hom category with 1-cells as objects and 2-cells as morphisms.
    FinCat hom_category(const ZeroCell& x, const ZeroCell& y) const;

    OneCell identity(const ZeroCell& x) const;
    /// second ∘ first.
    OneCell h_compose(const OneCell& second, const OneCell& first) const;
    TwoCell identity2(const OneCell& c) const;
    /// second · first.
    TwoCell v_compose(const TwoCell& second, const TwoCell& first) const;
    /// ε□δ for ε over second, δ over first.
    TwoCell h_compose_2cells(const TwoCell& eps, const TwoCell& delta) const;

    /// Checks the typing invariant of a cell.
    std::optional<std::string> one_cell_defect(const OneCell& c) const;
    std::optional<std::string> two_cell_defect(const TwoCell& c) const;

    /// (E, M) with M∘E = φ, E = [1; e..e; α], M = [f; a; 1].
    std::pair<OneCell, OneCell> factorize(const OneCell& phi) const;
    bool in_E(const OneCell& c) const;
    bool in_M(const OneCell& c) const;

    std::vector<ZeroCell> fibers(const OneCell& phi) const;
    std::vector<OneCell> fibers(const LaxTriangle& t) const;
    /// Fibers of a slice 2-cell ξ whose triangles sit over φ.
    std::vector<TwoCell> fibers(const LaxTriangle& source, const LaxTriangle& target,
                                std::span<const int> xi) const;

    /// [g; b_1..b_n; 1] with source [k, μ_g(c, b)].
    OneCell cartesian_lift(const Surjection& g, const ZeroCell& c, std::span<const ZeroCell> fibers) const;

    /// [!_n; c; 1_c]: [n, c] → [1, e].
    OneCell terminal_map(const ZeroCell& x) const;

private:
    const TruncatedOperad* p_;
    std::vector<ZeroCell> zeros_;
    std::vector<int> offsets_;

    struct Slot {
        std::once_flag once;
        std::unique_ptr<Hom> hom;
    };
    std::unique_ptr<Slot[]> slots_;

    void build_hom(const ZeroCell& x, const ZeroCell& y, Hom& out) const;
};

/// Exhaustive search of E-then-M factorizations of every 1-cell; each must
/// have exactly one.
CheckReport check_factorization(const Integration& ip, const CheckOptions& opts = {});

/// ∫P as an explicit split-fibered operadic 2-category, with the native
/// cell behind every id.
struct MaterializedIntegration {
    SplitFibration fibration;
    std::vector<ZeroCell> zeros;
    std::vector<OneCell> ones;
    std::vector<TwoCell> twos;

    int zero_id(const ZeroCell& x) const;
    int one_id(const OneCell& c) const;
    int two_id(const TwoCell& c) const;

    std::map<ZeroCell, int> zero_index;
    std::map<std::vector<int>, int> one_index;
    std::map<std::vector<int>, int> two_index;
};

/// Throws SearchTooLarge when the presentation would exceed `cell_limit`
/// triangles or slice 2-cells.
MaterializedIntegration materialize(const Integration& ip, std::size_t cell_limit = 50'000'000);

/// ∫F on cells: [m, a] ↦ [m, Fa], [f; a; α] ↦ [f; Fa; Fα], δ ↦ Fδ.
TwoFunctor integrate_morphism(const MaterializedIntegration& source, const MaterializedIntegration& target,
                              const OperadMorphism& f);

} // namespace opint
