#pragma once

// The equivalence between truncated operads and split-fibered operadic
// 2-categories over Δ_s: both round trips, and full faithfulness of ∫.

#include "opint/integration.hpp"

namespace opint {

struct ArityIso {
    int n;
    std::vector<int> obj_map;  // object of P_n → object of the extracted P_n
    std::vector<int> mor_map;
};

struct OperadCertificate {
    std::vector<ArityIso> per_arity_iso;
    std::size_t mu_checked = 0;
    bool ok = false;
    std::optional<std::string> failure;
};

/// Extracts an operad from ∫P with its canonical lifts and certifies the
/// canonical isomorphism a ↦ [n, a], α ↦ [1; e..e; α] against P: per-arity
/// isomorphisms commuting with every μ_g entry and the unit.
OperadCertificate roundtrip_operad(const TruncatedOperad& p);

/// Replays a certificate against P and its extraction.
std::optional<std::string> verify_operad_certificate(const TruncatedOperad& p, const TruncatedOperad& extracted,
                                                     const OperadCertificate& cert);

struct TwoCatCertificate {
    TwoFunctor map;  // ∫(extract S) → S
    std::size_t cells = 0;
    bool ok = false;
    std::optional<std::string> failure;
};

/// The canonical 2-functor ∫(extract S) → S: [m, a] ↦ a, [f; a; α] ↦
/// ℓ(f, b, a)∘α, and on 2-cells the unique γ with the prescribed fibers.
/// Certifies that it is bijective on cells and operadic.
TwoCatCertificate roundtrip_2cat(const SplitFibration& s);

struct FullFaithfulness {
    std::size_t operad_morphisms = 0;
    std::size_t operadic_functors = 0;
    bool bijective = false;
    std::optional<std::string> failure;
};

/// Enumerates operad morphisms P → Q and lift-preserving operadic 2-functors
/// ∫P → ∫Q and checks that F ↦ ∫F is a bijection between them.
FullFaithfulness check_full_faithfulness(const TruncatedOperad& p, const TruncatedOperad& q,
                                         std::size_t cap = default_cap());

} // namespace opint
