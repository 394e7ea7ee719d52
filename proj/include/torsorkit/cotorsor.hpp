#pragma once

#include "torsorkit/compose.hpp"

namespace torsorkit {

/// Coalgebra (C, Δ, ε) with ν : C⊗C^cop⊗C -> C and θ : C -> C.
class Cotorsor {
 public:
  /// Throws ShapeError on inconsistent tables or duplicate labels.
  Cotorsor(FieldSpec field, std::vector<std::string> labels, LinearMap comul, LinearMap counit,
           LinearMap nu, LinearMap theta);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const LinearMap& comul() const noexcept { return comul_; }
  const LinearMap& counit() const noexcept { return counit_; }
  const LinearMap& nu() const noexcept { return nu_; }
  const LinearMap& theta() const noexcept { return theta_; }

  friend bool operator==(const Cotorsor& a, const Cotorsor& b) = default;

 private:
  FieldSpec field_;
  std::vector<std::string> labels_;
  LinearMap comul_, counit_, nu_, theta_;
};

/// Coalgebra axioms, ν and θ coalgebra morphisms (θ invertible), then the
/// five cotorsor axioms. The last one is checked as ν∘(θ⊗θ⊗θ) = θ∘ν.
Report verify_cotorsor(const Cotorsor& c);

/// Transposes every table; labels gain or lose a trailing "*". Throws
/// VerificationFailure unless the result verifies.
Cotorsor dualize(const Torsor& t);
Torsor dualize(const Cotorsor& c);

struct ParmentierResult {
  Cotorsor cotorsor;
  /// C* with i_l : H_l(C*) -> H* and i_r : H_r(C*) -> H_F*.
  DecoratedTorsor dual;
  Report report;
};

/// (H, Δ_H F^{-1}, ε_H) with ν(x⊗y⊗z) = x u_F S(y) z and
/// θ(x) = S²(x) S(u_F) u_F^{-1}. The side Hopf algebras of the dual torsor
/// are certified isomorphic to H* and H_F* through the pairings
/// i_l(φ)(a) = φ((a⊗1)F^{-1}) and i_r(φ)(a) = φ(F^{-1}(1⊗a)).
/// Throws TwistInvalid or VerificationFailure.
ParmentierResult parmentier_cotorsor(const TwistData& t);

}  // namespace torsorkit
