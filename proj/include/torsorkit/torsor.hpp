#pragma once

#include <memory>
#include <optional>
#include <string>

#include "torsorkit/hopf.hpp"

namespace torsorkit {

/// Algebra T with μ : T -> T⊗T^op⊗T and θ : T -> T. When θ is omitted it
/// is derived from m and μ.
class Torsor {
 public:
  Torsor(Algebra algebra, LinearMap mu, std::optional<LinearMap> theta = std::nullopt);

  const Algebra& algebra() const noexcept { return algebra_; }
  const FieldSpec& field() const noexcept { return algebra_.field(); }
  std::size_t dim() const noexcept { return algebra_.dim(); }
  const std::vector<std::string>& labels() const noexcept { return algebra_.labels(); }
  const LinearMap& mu() const noexcept { return mu_; }
  const LinearMap& theta() const noexcept { return theta_; }
  /// True when θ was computed rather than supplied.
  bool theta_derived() const noexcept { return theta_derived_; }
  /// θ from the product formula; equals theta() when derived.
  const LinearMap& derived_theta() const noexcept { return derived_theta_; }

  /// verify_torsor, computed once.
  const Report& report() const;
  bool verified() const;

  friend bool operator==(const Torsor& a, const Torsor& b) {
    return a.algebra_ == b.algebra_ && a.mu_ == b.mu_ && a.theta_ == b.theta_;
  }

 private:
  Algebra algebra_;
  LinearMap mu_;
  LinearMap theta_;
  LinearMap derived_theta_;
  bool theta_derived_;
  mutable std::shared_ptr<const Report> report_;
};

/// μ^op = τ_(13)∘μ.
LinearMap mu_op(const Torsor& t);
/// μ^(0) = Id, μ^(n) = (μ^(n-1)⊗Id⊗Id)∘μ. Throws LegCapExceeded when
/// 2n+1 exceeds the leg cap.
LinearMap mu_iter(const Torsor& t, std::size_t n);
/// θ(x) = x1 · x2^(3) · x2^(2) · x2^(1) · x3 evaluated from m and μ.
LinearMap derive_theta(const Algebra& a, const LinearMap& mu);

/// Seven checks: μ an algebra morphism, θ an automorphism, the two unit
/// axioms, coassociativity, the θ axiom and equivariance. Failing algebra
/// axioms are listed first. Notes carry the commutativity flags and the
/// comparison with the derived θ.
Report verify_torsor(const Torsor& t);
bool has_commutative_law(const Torsor& t);

/// Throws NotVerified unless verify_torsor passes.
void require_verified(const Torsor& t, const std::string& what);

/// (H, m, 1, (Id⊗S⊗Id)∘Δ^(2), S²).
Torsor trivial_torsor(const HopfAlgebra& h);

/// (T^op, m^op, 1, μ^op, θ).
Torsor opposite_torsor(const Torsor& t);

enum class Side { Left, Right };
std::string to_string(Side s);

/// H_l(T) ⊂ T⊗T^op or H_r(T) ⊂ T^op⊗T with its Hopf structure in carrier
/// coordinates. Basis labels are the pivot tuples in brackets.
struct SideHopf {
  Side side;
  SubspaceBasis carrier;
  HopfAlgebra hopf;
  /// Carrier coordinates -> T⊗T.
  LinearMap inclusion;
};

/// Kernel of the side constraint with the structure maps corestricted to it.
/// Throws NotVerified, DimensionMismatch or CorestrictionFailure.
SideHopf compute_side_hopf(const Torsor& t, Side side);

/// ρ_l : T -> H_l⊗T and ρ_r : T -> T⊗H_r, μ corestricted. Throws
/// MembershipFailure when Im μ leaves the slice.
LinearMap left_coaction(const Torsor& t, const SideHopf& hl);
LinearMap right_coaction(const Torsor& t, const SideHopf& hr);

/// Slice membership, counit and coassociativity of both coactions, their
/// multiplicativity and their commutation.
Report verify_coactions(const Torsor& t, const SideHopf& hl, const SideHopf& hr);

struct GaloisResult {
  Report report;
  LinearMap can;
  std::size_t dim_t, dim_hopf;
  std::size_t coinvariant_dim;
};

/// can_l = (Id⊗m)(ρ_l⊗Id) : T⊗T -> H_l⊗T or can_r = (m⊗Id)(Id⊗ρ_r) :
/// T⊗T -> T⊗H_r, with invertibility and coinvariant checks.
GaloisResult galois_can(const Torsor& t, const SideHopf& h);

struct OppositeSideIsos {
  Report report;
  /// (θ⊗Id) : H_l(T) -> H_r(T^op) in carrier coordinates.
  LinearMap left_to_right;
  /// (Id⊗θ) : H_r(T) -> H_l(T^op).
  LinearMap right_to_left;
};

OppositeSideIsos opp_side_iso(const Torsor& t);

/// Restriction of an ambient map T⊗T -> T'⊗T' to carriers, in carrier
/// coordinates. Throws CorestrictionFailure.
LinearMap carrier_map(const LinearMap& ambient, const SideHopf& from, const SideHopf& to);

}  // namespace torsorkit
