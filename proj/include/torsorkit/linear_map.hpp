#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "torsorkit/scalar.hpp"

namespace torsorkit {

/// Dimensions of the tensor legs of a space, outermost (most significant) first.
using Shape = std::vector<std::size_t>;
/// One coordinate per leg.
using MultiIndex = std::vector<std::size_t>;

std::size_t shape_size(const Shape& shape);
MultiIndex unflatten(std::size_t index, const Shape& shape);
std::size_t flatten(std::span<const std::size_t> index, const Shape& shape);
Shape concat(const Shape& a, const Shape& b);
/// n legs of dimension d.
Shape power_shape(std::size_t d, std::size_t n);

/// Dense linear map between tensor spaces. Vectors are maps with an empty
/// source shape; scalars are maps with both shapes empty.
///
/// Storage is column-major: the image of source basis vector j occupies
/// entries [j * target_size, (j + 1) * target_size).
class LinearMap {
 public:
  LinearMap(FieldSpec field, Shape source, Shape target);

  static LinearMap identity(FieldSpec field, const Shape& shape);
  static LinearMap vector(FieldSpec field, Shape target, std::vector<Scalar> values);
  static LinearMap basis_vector(FieldSpec field, Shape target, std::size_t index);
  static LinearMap scalar(const Scalar& value);

  const FieldSpec& field() const noexcept { return field_; }
  const Shape& source() const noexcept { return source_; }
  const Shape& target() const noexcept { return target_; }
  std::size_t source_size() const noexcept { return source_size_; }
  std::size_t target_size() const noexcept { return target_size_; }
  std::size_t source_arity() const noexcept { return source_.size(); }
  std::size_t target_arity() const noexcept { return target_.size(); }

  const Scalar& at(std::size_t tgt, std::size_t src) const {
    return data_[src * target_size_ + tgt];
  }
  Scalar& at(std::size_t tgt, std::size_t src) { return data_[src * target_size_ + tgt]; }

  std::span<const Scalar> column(std::size_t src) const {
    return {data_.data() + src * target_size_, target_size_};
  }
  std::span<Scalar> column(std::size_t src) {
    return {data_.data() + src * target_size_, target_size_};
  }
  /// For vectors: the single column.
  std::span<const Scalar> values() const { return column(0); }

  bool is_zero() const;

  LinearMap& operator+=(const LinearMap& other);
  LinearMap& operator-=(const LinearMap& other);
  LinearMap& operator*=(const Scalar& c);
  friend LinearMap operator+(LinearMap a, const LinearMap& b) { return a += b; }
  friend LinearMap operator-(LinearMap a, const LinearMap& b) { return a -= b; }
  friend LinearMap operator*(LinearMap a, const Scalar& c) { return a *= c; }

  friend bool operator==(const LinearMap& a, const LinearMap& b);

 private:
  FieldSpec field_;
  Shape source_, target_;
  std::size_t source_size_, target_size_;
  std::vector<Scalar> data_;
};

/// f ∘ g. Throws ArityMismatch unless f.source() == g.target().
LinearMap compose(const LinearMap& f, const LinearMap& g);
/// f ⊗ g, legs of f first on both sides.
LinearMap tensor_product(const LinearMap& f, const LinearMap& g);
/// (Id ⊗ g ⊗ Id) ∘ f, where g consumes the target legs of f starting at `leg`.
LinearMap apply_on_target(const LinearMap& f, std::size_t leg, const LinearMap& g);
/// f ∘ (Id ⊗ g ⊗ Id), where g produces the source legs of f starting at `leg`.
LinearMap apply_on_source(const LinearMap& f, std::size_t leg, const LinearMap& g);
/// New target leg k is old target leg perm[k]. Throws BadPermutation.
LinearMap permute_target(const LinearMap& f, std::span<const std::size_t> perm);
/// New source leg k is old source leg perm[k]. Throws BadPermutation.
LinearMap permute_source(const LinearMap& f, std::span<const std::size_t> perm);
std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm);
/// Swap of legs i and j (0-based) among n legs.
std::vector<std::size_t> transposition(std::size_t n, std::size_t i, std::size_t j);
/// Dual map on the coordinate dual bases; leg order is preserved.
LinearMap transpose(const LinearMap& f);

struct Mismatch {
  MultiIndex target_index;
  MultiIndex source_index;
  Scalar lhs;
  Scalar rhs;
};

/// First differing entry in source-major order, or nullopt when equal.
/// Throws ShapeError on differing shapes.
std::optional<Mismatch> first_mismatch(const LinearMap& lhs, const LinearMap& rhs);

/// Formats a multi-index with per-leg labels, e.g. "x⊗y". Legs without
/// labels are printed as integers.
std::string describe_index(const MultiIndex& index,
                           std::span<const std::vector<std::string>> labels);

/// Sparse view of a vector: (flat index, value) pairs.
std::vector<std::pair<std::size_t, Scalar>> nonzeros(std::span<const Scalar> v);

}  // namespace torsorkit
