#pragma once

#include <string>
#include <vector>

#include "torsorkit/algebra.hpp"

namespace torsorkit {

/// Hopf algebra by structure constants. comul is {n} -> {n, n}, counit
/// {n} -> {} and antipode {n} -> {n}.
class HopfAlgebra {
 public:
  /// Throws ShapeError when a table does not fit the algebra.
  HopfAlgebra(Algebra algebra, LinearMap comul, LinearMap counit, LinearMap antipode);

  const Algebra& algebra() const noexcept { return algebra_; }
  const FieldSpec& field() const noexcept { return algebra_.field(); }
  std::size_t dim() const noexcept { return algebra_.dim(); }
  const std::vector<std::string>& labels() const noexcept { return algebra_.labels(); }
  const LinearMap& mul() const noexcept { return algebra_.mul(); }
  const LinearMap& unit() const noexcept { return algebra_.unit(); }
  const LinearMap& comul() const noexcept { return comul_; }
  const LinearMap& counit() const noexcept { return counit_; }
  const LinearMap& antipode() const noexcept { return antipode_; }

  friend bool operator==(const HopfAlgebra& a, const HopfAlgebra& b) = default;

 private:
  Algebra algebra_;
  LinearMap comul_;
  LinearMap counit_;
  LinearMap antipode_;
};

/// Algebra axioms, coassociativity, counit laws, Δ and ε multiplicative and
/// unital, and both antipode identities.
Report verify_hopf(const HopfAlgebra& h);

/// Checks that f : H -> K is a morphism of Hopf algebras: an algebra
/// morphism commuting with Δ, ε and S.
Report verify_hopf_morphism(const HopfAlgebra& source, const LinearMap& f,
                            const HopfAlgebra& target);
/// Morphism checks plus invertibility of f.
Report verify_hopf_iso(const HopfAlgebra& source, const LinearMap& f, const HopfAlgebra& target);

/// Finite group by labelled multiplication table.
class FiniteGroup {
 public:
  /// Throws NotAGroup unless the table is closed, associative, has an
  /// identity and inverses.
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table);

  std::size_t order() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }
  std::size_t mul(std::size_t g, std::size_t h) const { return table_[g][h]; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t inverse(std::size_t g) const { return inverse_[g]; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

FiniteGroup cyclic_group(std::size_t n);
/// Pairs (a, b) labelled "(a,b)", index a * |H| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// S_3 in one-line notation, identity first.
FiniteGroup symmetric_group_3();

/// kG with Δg = g⊗g, ε(g) = 1, S(g) = g^{-1}.
HopfAlgebra group_algebra(FieldSpec field, const FiniteGroup& g);
/// k^G on idempotents 1_g: pointwise product, Δ1_g = Σ_h 1_h⊗1_{h^{-1}g},
/// ε(1_g) = δ_{g,e}, S(1_g) = 1_{g^{-1}}.
HopfAlgebra function_algebra(FieldSpec field, const FiniteGroup& g);

/// Transposes every table on the coordinate dual basis. Labels gain a
/// trailing "*", or lose it if already present.
HopfAlgebra dual_hopf(const HopfAlgebra& h);
std::string dual_label(const std::string& label);

struct TwistData {
  HopfAlgebra host;
  LinearMap f;      // in H⊗H
  LinearMap f_inv;  // in H⊗H
  LinearMap u;      // m(Id⊗S)(F)
  LinearMap u_inv;  // m(S⊗Id)(F^{-1})
};

/// Computes F^{-1} by inverting left multiplication by F in H⊗H, then u_F
/// and u_F^{-1}. Throws NotInvertible with a kernel witness.
TwistData make_twist(const HopfAlgebra& host, const LinearMap& f);
/// Cocycle identity, both counit normalisations, F F^{-1} = 1⊗1 and
/// u_F u_F^{-1} = 1.
Report verify_twist(const TwistData& t);
/// As above from F alone; a non-invertible F is reported as a failed check
/// alongside the cocycle and normalisation checks.
Report verify_twist(const HopfAlgebra& host, const LinearMap& f);
/// H_F with Δ_F = F Δ F^{-1} and S_F = u_F S u_F^{-1}; throws TwistInvalid
/// when verify_twist fails.
HopfAlgebra twist_hopf(const TwistData& t);

}  // namespace torsorkit
