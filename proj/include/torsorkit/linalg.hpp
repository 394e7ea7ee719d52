#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "torsorkit/linear_map.hpp"

namespace torsorkit {

/// Subspace of a tensor space held as a reduced row-echelon basis: pivots
/// strictly increase, pivot entries are 1, and every other basis vector
/// vanishes at each pivot column.
class SubspaceBasis {
 public:
  SubspaceBasis(FieldSpec field, Shape ambient);

  /// Echelon basis of the span of arbitrary vectors of the ambient space.
  static SubspaceBasis span(FieldSpec field, Shape ambient,
                            const std::vector<std::vector<Scalar>>& vectors);
  static SubspaceBasis span_of_columns(const LinearMap& f);

  const FieldSpec& field() const noexcept { return field_; }
  const Shape& ambient() const noexcept { return ambient_; }
  std::size_t ambient_size() const noexcept { return ambient_size_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<std::vector<Scalar>>& vectors() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Coordinates in this basis (the entries at the pivot columns) when v
  /// lies in the subspace.
  std::optional<std::vector<Scalar>> coordinates(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const { return coordinates(v).has_value(); }
  bool contains(const SubspaceBasis& other) const;

  /// Map from carrier coordinates (one leg of size dim()) into the ambient space.
  LinearMap inclusion() const;
  /// Left inverse of inclusion(): reads the pivot coordinates.
  LinearMap pivot_projection() const;

  /// Stable hex digest of the ambient shape and echelon vectors.
  std::string fingerprint() const;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  FieldSpec field_;
  Shape ambient_;
  std::size_t ambient_size_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Echelon basis of {v : f(v) = 0} inside the source space of f.
SubspaceBasis kernel_basis(const LinearMap& f);
std::size_t rank(const LinearMap& f);
/// Two-sided inverse of a square map; throws SingularError carrying the
/// kernel dimension otherwise.
LinearMap invert_map(const LinearMap& f);

/// Replaces the target legs [leg, leg + carrier arity) of f by a single
/// carrier leg. Throws CorestrictionFailure if some image leaves the slice
/// (the coordinates are re-included and compared entrywise).
LinearMap corestrict_target(const LinearMap& f, std::size_t leg, const SubspaceBasis& carrier);
/// f restricted on source legs [leg, leg + carrier arity) to the carrier.
LinearMap restrict_source(const LinearMap& f, std::size_t leg, const SubspaceBasis& carrier);

}  // namespace torsorkit
