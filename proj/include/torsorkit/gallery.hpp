#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "torsorkit/torsor.hpp"

namespace torsorkit {

/// Polynomial coefficients, constant term first.
using Polynomial = std::vector<Scalar>;

/// (H, m, 1, (Id⊗S⊗Id)∘Δ^(2), S²). Throws HopfInvalid.
Torsor build_trivial_torsor(const HopfAlgebra& h);

enum class QuadraticVariant { Sqrt, ArtinSchreier };

/// k[X]/(X²-d) with μ(x) = x⊗x^{-1}⊗x, or in characteristic 2
/// k[X]/(X²+X+d) with μ(x) = 1⊗1⊗x + 1⊗x⊗1 + x⊗1⊗1. θ = Id.
/// Throws BadCharacteristic or DNotInvertible.
Torsor build_quadratic_torsor(FieldSpec field, const Scalar& d, QuadraticVariant variant);

struct GaloisBuild {
  Torsor torsor;
  /// σ as matrices on K = k[T]/(P), in the order supplied.
  std::vector<LinearMap> automorphisms;
  /// P_σ in K⊗K, same order.
  std::vector<LinearMap> idempotents;
  /// Σ P_σ = 1⊗1 and P_σ P_τ = δ P_σ.
  Report report;
};

/// K = k[T]/(P) with μ(x) = Σ_σ P_σ ⊗ σ(x), where action[i] is σ_i(t) as a
/// polynomial in t. Throws NotSeparable or NotGaloisAction.
GaloisBuild build_galois(FieldSpec field, const Polynomial& p, const std::vector<Polynomial>& action);
Torsor build_galois_torsor(FieldSpec field, const Polynomial& p, const std::vector<Polynomial>& action);

/// A_{α,β}: x^n = α, y^n = β, xy = q yx on the monomials x^i y^j (index
/// i + n j). Throws QNotPrimitive or AlphaBetaZero.
Algebra cyclic_algebra(FieldSpec field, std::size_t n, const Scalar& q, const Scalar& alpha,
                       const Scalar& beta);
/// μ(x) = x⊗x^{-1}⊗x, μ(y) = y⊗y^{-1}⊗y, θ = Id.
Torsor build_cyclic_algebra_torsor(FieldSpec field, std::size_t n, const Scalar& q,
                                   const Scalar& alpha, const Scalar& beta);

/// Extends generator images to the unique algebra morphism T -> T⊗T^op⊗T,
/// given each basis element as a word in the generators. Throws ShapeError
/// when a word does not multiply out to its basis element.
LinearMap extend_from_generators(const Algebra& a, const std::vector<std::size_t>& generators,
                                 const std::vector<LinearMap>& images,
                                 const std::vector<std::vector<std::size_t>>& words);

struct CyclicSideIso {
  SideHopf left;
  /// H_l -> function_algebra(Z/n × Z/n), m⊗m^{-1} ↦ Σ q^{ia+jc} 1_(a,c).
  LinearMap iso;
  HopfAlgebra functions;
  Report report;
};
/// For a cyclic algebra torsor: H_l = H_r, commutative, spanned by the
/// group-likes x^i y^j ⊗ (x^i y^j)^{-1}, and Hopf isomorphic to functions on
/// Z/n × Z/n.
CyclicSideIso cyclic_side_iso(const Torsor& t, std::size_t n, const Scalar& q);

enum class GalleryKind { Hopf, Torsor, Twist };
std::string to_string(GalleryKind k);

struct GalleryEntry {
  std::string name;
  GalleryKind kind;
  std::string description;
};

using GalleryObject = std::variant<HopfAlgebra, Torsor, TwistData>;

const std::vector<GalleryEntry>& gallery_entries();
/// Builds and verifies a registry entry. Throws UnknownRecipe.
GalleryObject build_gallery(std::string_view name);
Torsor gallery_torsor(std::string_view name);
HopfAlgebra gallery_hopf(std::string_view name);
TwistData gallery_twist(std::string_view name);

/// "quadratic:<field>:<d>" (Artin–Schreier in characteristic 2),
/// "cyclic:<field>:<n>:<q>:<α>:<β>" or a registry name.
GalleryObject build_recipe(std::string_view recipe);

}  // namespace torsorkit
