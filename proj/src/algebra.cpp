#include "torsorkit/algebra.hpp"

#include <set>

#include "torsorkit/limits.hpp"

namespace torsorkit {

Algebra::Algebra(FieldSpec field, std::vector<std::string> labels, LinearMap mul, LinearMap unit)
    : field_(field), labels_(std::move(labels)), mul_(std::move(mul)), unit_(std::move(unit)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error(Errc::ShapeError, "algebra of dimension 0");
  if (n > max_dim())
    throw Error(Errc::CapExceeded, "dimension " + std::to_string(n) + " above the cap " +
                                       std::to_string(max_dim()));
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n)
    throw Error(Errc::ShapeError, "basis labels are not distinct");
  if (mul_.source() != Shape{n, n} || mul_.target() != Shape{n})
    throw Error(Errc::ShapeError, "multiplication table has the wrong shape");
  if (!unit_.source().empty() || unit_.target() != Shape{n})
    throw Error(Errc::ShapeError, "unit has the wrong shape");
  if (!(mul_.field() == field_) || !(unit_.field() == field_))
    throw Error(Errc::ModulusMismatch, "tables over a different field");
}

TensorAlgebra& TensorAlgebra::append(const Algebra& a, bool opposite) {
  if (!legs_.empty() && !(legs_.front().unit.field() == a.field()))
    throw Error(Errc::ModulusMismatch, "tensor factors over different fields");
  Leg leg{a.dim(), {}, a.unit()};
  leg.products.resize(a.dim() * a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const std::size_t col = opposite ? j * a.dim() + i : i * a.dim() + j;
      leg.products[i * a.dim() + j] = nonzeros(a.mul().column(col));
    }
  legs_.push_back(std::move(leg));
  return *this;
}

TensorAlgebra& TensorAlgebra::append(const TensorAlgebra& other) {
  for (const auto& leg : other.legs_) legs_.push_back(leg);
  return *this;
}

Shape TensorAlgebra::shape() const {
  Shape s;
  for (const auto& leg : legs_) s.push_back(leg.dim);
  return s;
}

const FieldSpec& TensorAlgebra::field() const { return legs_.at(0).unit.field(); }

LinearMap TensorAlgebra::unit() const {
  LinearMap u = legs_.at(0).unit;
  for (std::size_t k = 1; k < legs_.size(); ++k) u = tensor_product(u, legs_[k].unit);
  return u;
}

LinearMap TensorAlgebra::multiply(const LinearMap& x, const LinearMap& y) const {
  const Shape s = shape();
  if (!x.source().empty() || !y.source().empty() || x.target() != s || y.target() != s)
    throw Error(Errc::ShapeError, "multiplying vectors outside the tensor algebra");
  LinearMap out(field(), {}, s);
  auto dst = out.column(0);
  const auto nx = nonzeros(x.values());
  const auto ny = nonzeros(y.values());
  std::vector<MultiIndex> ix, iy;
  for (const auto& [i, c] : nx) ix.push_back(unflatten(i, s));
  for (const auto& [i, c] : ny) iy.push_back(unflatten(i, s));
  const std::size_t k = legs_.size();
  // Depth-first over the sparse leg products.
  std::vector<std::size_t> flat(k + 1, 0);
  std::vector<Scalar> coef(k + 1, Scalar::zero(field()));
  for (std::size_t a = 0; a < nx.size(); ++a)
    for (std::size_t b = 0; b < ny.size(); ++b) {
      coef[0] = nx[a].second * ny[b].second;
      flat[0] = 0;
      std::vector<std::size_t> pos(k, 0);
      std::size_t depth = 0;
      while (true) {
        if (depth == k) {
          dst[flat[k]] += coef[k];
          if (k == 0) break;
          --depth;
          ++pos[depth];
          continue;
        }
        const auto& prods = legs_[depth].products[ix[a][depth] * legs_[depth].dim + iy[b][depth]];
        if (pos[depth] >= prods.size()) {
          pos[depth] = 0;
          if (depth == 0) break;
          --depth;
          ++pos[depth];
          continue;
        }
        const auto& [idx, c] = prods[pos[depth]];
        flat[depth + 1] = flat[depth] * legs_[depth].dim + idx;
        coef[depth + 1] = coef[depth] * c;
        ++depth;
      }
    }
  return out;
}

LinearMap TensorAlgebra::left_multiplication(const LinearMap& x) const {
  const Shape s = shape();
  LinearMap out(field(), s, s);
  for (std::size_t j = 0; j < out.source_size(); ++j) {
    const auto prod = multiply(x, LinearMap::basis_vector(field(), s, j));
    std::copy(prod.values().begin(), prod.values().end(), out.column(j).begin());
  }
  return out;
}

LinearMap TensorAlgebra::right_multiplication(const LinearMap& x) const {
  const Shape s = shape();
  LinearMap out(field(), s, s);
  for (std::size_t j = 0; j < out.source_size(); ++j) {
    const auto prod = multiply(LinearMap::basis_vector(field(), s, j), x);
    std::copy(prod.values().begin(), prod.values().end(), out.column(j).begin());
  }
  return out;
}

Report verify_algebra(const Algebra& a) {
  Report r("algebra of dimension " + std::to_string(a.dim()) + " over " + a.field().to_string());
  const auto id = LinearMap::identity(a.field(), a.shape());
  const LegLabels l1{a.labels()};
  const LegLabels l3{a.labels(), a.labels(), a.labels()};
  r.add(identity_check("associativity m∘(m⊗Id) = m∘(Id⊗m)", apply_on_source(a.mul(), 0, a.mul()),
                       apply_on_source(a.mul(), 1, a.mul()), l3, l1));
  r.add(identity_check("left unit m∘(η⊗Id) = Id", apply_on_source(a.mul(), 0, a.unit()), id, l1,
                       l1));
  r.add(identity_check("right unit m∘(Id⊗η) = Id", apply_on_source(a.mul(), 1, a.unit()), id, l1,
                       l1));
  return r;
}

bool is_commutative(const Algebra& a) {
  const std::vector<std::size_t> swap{1, 0};
  return permute_source(a.mul(), swap) == a.mul();
}

Algebra opposite_algebra(const Algebra& a) {
  const std::vector<std::size_t> swap{1, 0};
  return Algebra(a.field(), a.labels(), permute_source(a.mul(), swap), a.unit());
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) throw Error(Errc::ModulusMismatch, "tensor of algebras");
  std::vector<std::string> labels;
  for (const auto& x : a.labels())
    for (const auto& y : b.labels()) labels.push_back(x + "⊗" + y);
  const std::size_t n = a.dim() * b.dim();
  // (a1⊗b1)(a2⊗b2) = a1a2 ⊗ b1b2: reorder legs a1 b1 a2 b2 -> a1 a2 b1 b2.
  const std::vector<std::size_t> shuffle{0, 2, 1, 3};
  LinearMap m = permute_source(tensor_product(a.mul(), b.mul()), inverse_permutation(shuffle));
  LinearMap flat(a.field(), {n, n}, {n});
  for (std::size_t j = 0; j < flat.source_size(); ++j)
    std::copy(m.column(j).begin(), m.column(j).end(), flat.column(j).begin());
  LinearMap unit(a.field(), {}, {n});
  const auto u = tensor_product(a.unit(), b.unit());
  std::copy(u.values().begin(), u.values().end(), unit.column(0).begin());
  return Algebra(a.field(), std::move(labels), std::move(flat), std::move(unit));
}

LinearMap element(const Algebra& a, std::vector<Scalar> coords) {
  return LinearMap::vector(a.field(), a.shape(), std::move(coords));
}

LinearMap multiply(const Algebra& a, const LinearMap& x, const LinearMap& y) {
  return TensorAlgebra(a).multiply(x, y);
}

LinearMap inverse(const Algebra& a, const LinearMap& x) {
  const TensorAlgebra alg(a);
  const LinearMap left = alg.left_multiplication(x);
  const LinearMap right = alg.right_multiplication(x);
  for (const LinearMap* side : {&left, &right}) {
    const auto k = kernel_basis(*side);
    if (k.dim() > 0) throw NotInvertibleError(k.vectors()[0], "element is a zero divisor");
  }
  const LinearMap w = compose(invert_map(left), a.unit());
  if (!(multiply(a, w, x) == a.unit()))
    throw NotInvertibleError({}, "left and right inverses differ");
  return w;
}

LinearMap power(const Algebra& a, const LinearMap& x, long exponent) {
  LinearMap base = exponent < 0 ? inverse(a, x) : x;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  const TensorAlgebra alg(a);
  LinearMap result = a.unit();
  while (e > 0) {
    if (e & 1UL) result = alg.multiply(result, base);
    base = alg.multiply(base, base);
    e >>= 1UL;
  }
  return result;
}

Report verify_algebra_morphism(const Algebra& source, const LinearMap& map,
                               const TensorAlgebra& target, const LegLabels& target_labels) {
  if (map.source() != source.shape() || map.target() != target.shape())
    throw Error(Errc::ShapeError, "morphism shape does not match its algebras");
  Report r("algebra morphism");
  r.add(identity_check("unit preserved f(1) = 1", compose(map, source.unit()), target.unit(), {},
                       target_labels));
  const std::size_t n = source.dim();
  LinearMap products(source.field(), {n, n}, target.shape());
  std::vector<LinearMap> images;
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = map.column(i);
    images.push_back(LinearMap::vector(source.field(), target.shape(), {c.begin(), c.end()}));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto p = target.multiply(images[i], images[j]);
      std::copy(p.values().begin(), p.values().end(), products.column(i * n + j).begin());
    }
  r.add(identity_check("multiplicative f(xy) = f(x)f(y)", compose(map, source.mul()), products,
                       {source.labels(), source.labels()}, target_labels));
  return r;
}

Report verify_algebra_morphism(const Algebra& source, const LinearMap& map,
                               const Algebra& target) {
  return verify_algebra_morphism(source, map, TensorAlgebra(target), {target.labels()});
}

SubspaceBasis two_sided_ideal(const Algebra& a,
                              const std::vector<std::vector<Scalar>>& generators) {
  const TensorAlgebra alg(a);
  SubspaceBasis ideal = SubspaceBasis::span(a.field(), a.shape(), generators);
  std::vector<LinearMap> left, right;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto e = LinearMap::basis_vector(a.field(), a.shape(), i);
    left.push_back(alg.left_multiplication(e));
    right.push_back(alg.right_multiplication(e));
  }
  for (std::size_t round = 0; round <= a.dim(); ++round) {
    std::vector<std::vector<Scalar>> vecs = ideal.vectors();
    for (const auto& v : ideal.vectors()) {
      const auto vm = LinearMap::vector(a.field(), a.shape(), v);
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (const LinearMap* m : {&left[i], &right[i]}) {
          const auto p = compose(*m, vm);
          vecs.emplace_back(p.values().begin(), p.values().end());
        }
    }
    SubspaceBasis next = SubspaceBasis::span(a.field(), a.shape(), vecs);
    if (next.dim() == ideal.dim()) return next;
    ideal = std::move(next);
  }
  return ideal;
}

bool is_character(const Algebra& a, const std::vector<Scalar>& values, std::string* why) {
  if (values.size() != a.dim()) throw Error(Errc::ShapeError, "character has wrong length");
  auto eval = [&](std::span<const Scalar> v) {
    Scalar s = Scalar::zero(a.field());
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) s.add_product(v[k], values[k]);
    return s;
  };
  if (!eval(a.unit().values()).is_one()) {
    if (why) *why = "φ(1) = " + eval(a.unit().values()).to_string() + " ≠ 1";
    return false;
  }
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Scalar lhs = eval(a.mul().column(i * a.dim() + j));
      const Scalar rhs = values[i] * values[j];
      if (!(lhs == rhs)) {
        if (why)
          *why = "φ(" + a.labels()[i] + "·" + a.labels()[j] + ") = " + lhs.to_string() +
                 " but φ(" + a.labels()[i] + ")φ(" + a.labels()[j] + ") = " + rhs.to_string();
        return false;
      }
    }
  return true;
}

CharacterSearch exhaustive_characters(const Algebra& a) {
  if (a.field().is_rationals())
    throw Error(Errc::SearchSpaceTooLarge, "exhaustive search needs a prime field");
  const std::uint64_t p = a.field().modulus();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    total *= p;
    if (total > 1000000)
      throw Error(Errc::SearchSpaceTooLarge, "p^dim exceeds 10^6");
  }
  CharacterSearch out;
  std::vector<Scalar> values(a.dim(), Scalar::zero(a.field()));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t k = 0; k < a.dim(); ++k) {
      values[k] = Scalar(a.field(), static_cast<long>(c % p));
      c /= p;
    }
    if (is_character(a, values)) out.characters.push_back(values);
  }
  out.status = out.characters.empty() ? CharacterSearch::Status::None
                                      : CharacterSearch::Status::Found;
  out.reason = "exhaustive search over " + std::to_string(total) + " functionals";
  return out;
}

CharacterSearch commutator_obstruction(const Algebra& a) {
  std::vector<std::vector<Scalar>> commutators;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Scalar> c(n, Scalar::zero(a.field()));
      for (std::size_t k = 0; k < n; ++k)
        c[k] = a.mul().at(k, i * n + j) - a.mul().at(k, j * n + i);
      commutators.push_back(std::move(c));
    }
  const auto ideal = two_sided_ideal(a, commutators);
  CharacterSearch out;
  if (ideal.dim() == n) {
    out.status = CharacterSearch::Status::None;
    out.reason = "the commutator ideal is the whole algebra";
  } else {
    out.status = CharacterSearch::Status::Unknown;
    out.reason = "the commutator ideal has dimension " + std::to_string(ideal.dim()) + " < " +
                 std::to_string(n);
  }
  return out;
}

}  // namespace torsorkit
