#pragma once

#include "torsorkit/torsor.hpp"

namespace torsorkit {

/// T_Φ = T1 ⊗_Φ T2 for a Hopf isomorphism Φ : H_r(T1) -> H_l(T2) given in
/// carrier coordinates.
struct Composition {
  Torsor torsor;
  /// T_Φ inside T1⊗T2; the torsor's basis is this echelon basis.
  SubspaceBasis carrier;
  Report report;
};

/// Throws NotVerified, PhiNotIso, MembershipFailure, DimensionMismatch, or
/// VerificationFailure if the result is not a torsor.
Composition compose_torsors(const Torsor& t1, const Torsor& t2, const LinearMap& phi);

/// Forward isomorphisms H_l(T1) -> H_l(T_Φ) and H_r(T2) -> H_r(T_Φ) with
/// their stated inverses (Id⊗ε_{H_l(T2)}⊗Id)∘τ_(34) and
/// (Id⊗ε_{H_r(T1)}⊗Id)∘τ_(12).
struct SideIsos {
  LinearMap left, left_inverse;
  LinearMap right, right_inverse;
  Report report;
};

SideIsos induced_side_isos(const Torsor& t1, const Torsor& t2, const LinearMap& phi,
                           const Composition& c);

struct TorsorMorphism {
  LinearMap f;
  /// (f⊗f) between the H_l carriers, and between the H_r carriers.
  LinearMap f_l, f_r;
  Report report;
};

/// Checks f is an algebra morphism with (f⊗f⊗f)∘μ1 = μ2∘f and
/// f∘θ1 = θ2∘f, then certifies f_l and f_r as Hopf morphisms. Throws
/// NotEquivariant when the torsor structure is not preserved.
TorsorMorphism torsor_morphism_check(const Torsor& t1, const Torsor& t2, const LinearMap& f);

/// Torsor with Hopf isomorphisms i_l : H_l(T) -> H and i_r : H_r(T) -> H'.
struct DecoratedTorsor {
  Torsor torsor;
  HopfAlgebra left_ref;
  HopfAlgebra right_ref;
  LinearMap i_l;
  LinearMap i_r;
};

Report verify_decorated(const DecoratedTorsor& d);

/// Trivial torsor of H with i_l = Id⊗ε and i_r = ε⊗Id.
DecoratedTorsor tor_unit(const HopfAlgebra& h);
/// Opposite torsor with i_l = i_r∘(Id⊗θ)^{-1} and i_r = i_l∘(θ⊗Id)^{-1}.
DecoratedTorsor tor_inverse(const DecoratedTorsor& d);

struct TorProduct {
  DecoratedTorsor result;
  Composition composition;
  /// Φ = i_{l,T2}^{-1} ∘ i_{r,T1}.
  LinearMap phi;
  Report report;
};

/// d1 * d2 = T1 ⊗_Φ T2 with i_l = i_{l,T1} ∘ (Id⊗ε⊗Id)∘τ_(34) and
/// i_r = i_{r,T2} ∘ (Id⊗ε⊗Id)∘τ_(12). Throws ReferenceHopfMismatch unless
/// d1's right reference equals d2's left reference.
TorProduct tor_multiply(const DecoratedTorsor& d1, const DecoratedTorsor& d2);

/// f : T1 -> T2 a torsor isomorphism with i_{l,1} = i_{l,2}∘f_l and
/// i_{r,1} = i_{r,2}∘f_r.
Report equivalence_report(const LinearMap& f, const DecoratedTorsor& d1, const DecoratedTorsor& d2);
/// As above; throws WitnessRejected naming the first failing identity.
void verify_equivalence_witness(const LinearMap& f, const DecoratedTorsor& d1,
                                const DecoratedTorsor& d2);

/// Witnesses for the unit laws: (ε⊗Id) on unit(H) * d and (Id⊗ε) on
/// d * unit(H'), in carrier coordinates of the product.
LinearMap left_unit_witness(const HopfAlgebra& h, const TorProduct& p);
LinearMap right_unit_witness(const HopfAlgebra& h, const TorProduct& p);

}  // namespace torsorkit
