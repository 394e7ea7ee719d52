#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torsorkit/error.hpp"
#include "torsorkit/linalg.hpp"
#include "torsorkit/report.hpp"

namespace torsorkit {

/// Finite-dimensional unital algebra given by structure constants:
/// mul is the map {n, n} -> {n} and unit the vector η(1).
class Algebra {
 public:
  /// Throws ShapeError on inconsistent shapes or duplicate labels and
  /// CapExceeded above the dimension cap.
  Algebra(FieldSpec field, std::vector<std::string> labels, LinearMap mul, LinearMap unit);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const LinearMap& mul() const noexcept { return mul_; }
  const LinearMap& unit() const noexcept { return unit_; }
  Shape shape() const { return {dim()}; }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.field_ == b.field_ && a.labels_ == b.labels_ && a.mul_ == b.mul_ &&
           a.unit_ == b.unit_;
  }

 private:
  FieldSpec field_;
  std::vector<std::string> labels_;
  LinearMap mul_;
  LinearMap unit_;
};

/// Elementwise multiplication in A_1 ⊗ ... ⊗ A_k, where each factor may be
/// taken with its opposite product. Products are formed from sparse
/// structure constants without materialising the tensor algebra.
class TensorAlgebra {
 public:
  TensorAlgebra() = default;
  explicit TensorAlgebra(const Algebra& a, bool opposite = false) { append(a, opposite); }

  TensorAlgebra& append(const Algebra& a, bool opposite = false);
  TensorAlgebra& append(const TensorAlgebra& other);

  std::size_t arity() const noexcept { return legs_.size(); }
  Shape shape() const;
  const FieldSpec& field() const;
  LinearMap unit() const;
  /// Product of two vectors of shape shape().
  LinearMap multiply(const LinearMap& x, const LinearMap& y) const;
  /// The map y ↦ x·y.
  LinearMap left_multiplication(const LinearMap& x) const;
  /// The map y ↦ y·x.
  LinearMap right_multiplication(const LinearMap& x) const;

 private:
  struct Leg {
    std::size_t dim;
    // products[a * dim + b]: nonzero coordinates of e_a · e_b
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> products;
    LinearMap unit;
  };
  std::vector<Leg> legs_;
};

Report verify_algebra(const Algebra& a);
bool is_commutative(const Algebra& a);

Algebra opposite_algebra(const Algebra& a);
/// Componentwise product on A ⊗ B with unit 1 ⊗ 1; labels "a⊗b".
Algebra tensor_algebra(const Algebra& a, const Algebra& b);

/// Thrown when an element has no two-sided inverse; carries a nonzero u with
/// x·u = 0 or u·x = 0.
class NotInvertibleError : public Error {
 public:
  NotInvertibleError(std::vector<Scalar> witness, const std::string& what)
      : Error(Errc::NotInvertible, what), witness_(std::move(witness)) {}
  const std::vector<Scalar>& witness() const noexcept { return witness_; }

 private:
  std::vector<Scalar> witness_;
};

LinearMap element(const Algebra& a, std::vector<Scalar> coords);
LinearMap multiply(const Algebra& a, const LinearMap& x, const LinearMap& y);
LinearMap power(const Algebra& a, const LinearMap& x, long exponent);
/// Two-sided inverse; throws NotInvertibleError.
LinearMap inverse(const Algebra& a, const LinearMap& x);

/// Checks f(1) = 1 and f(e_i e_j) = f(e_i) f(e_j) for a linear map
/// f : source -> target given on the coordinate bases.
Report verify_algebra_morphism(const Algebra& source, const LinearMap& map,
                               const TensorAlgebra& target, const LegLabels& target_labels);
Report verify_algebra_morphism(const Algebra& source, const LinearMap& map,
                               const Algebra& target);

/// Two-sided ideal generated by the given elements: iterated closure under
/// left and right multiplication by basis elements.
SubspaceBasis two_sided_ideal(const Algebra& a, const std::vector<std::vector<Scalar>>& generators);

struct CharacterSearch {
  enum class Status { Found, None, Unknown };
  Status status = Status::Unknown;
  /// Each character as its values on the basis.
  std::vector<std::vector<Scalar>> characters;
  std::string reason;
};

/// Whether the functional with the given basis values is unital and
/// multiplicative. On failure `why` names the first failing identity.
bool is_character(const Algebra& a, const std::vector<Scalar>& values, std::string* why = nullptr);
/// Enumerates every functional over F_p; throws SearchSpaceTooLarge when
/// p^dim > 10^6 or the field is Q.
CharacterSearch exhaustive_characters(const Algebra& a);
/// None when the commutator ideal is the whole algebra, otherwise Unknown.
CharacterSearch commutator_obstruction(const Algebra& a);

}  // namespace torsorkit
