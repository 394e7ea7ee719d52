#include "torsorkit/linear_map.hpp"

#include <algorithm>
#include <sstream>

#include "torsorkit/error.hpp"
#include "torsorkit/limits.hpp"

namespace torsorkit {

namespace {

using SparseColumn = std::vector<std::pair<std::size_t, Scalar>>;

std::vector<SparseColumn> sparse_columns(const LinearMap& f) {
  std::vector<SparseColumn> cols(f.source_size());
  for (std::size_t j = 0; j < f.source_size(); ++j) cols[j] = nonzeros(f.column(j));
  return cols;
}

Shape slice(const Shape& s, std::size_t begin, std::size_t end) {
  return Shape(s.begin() + static_cast<std::ptrdiff_t>(begin),
               s.begin() + static_cast<std::ptrdiff_t>(end));
}

std::string shape_text(const Shape& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ']';
  return os.str();
}

void check_field(const LinearMap& a, const LinearMap& b) {
  if (!(a.field() == b.field()))
    throw Error(Errc::ModulusMismatch,
                "maps over " + a.field().to_string() + " and " + b.field().to_string());
}

void check_permutation(std::span<const std::size_t> perm, std::size_t n) {
  if (perm.size() != n) throw Error(Errc::BadPermutation, "permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) throw Error(Errc::BadPermutation, "not a bijection");
    seen[p] = true;
  }
}

// Flat-index translation table for a leg permutation.
std::vector<std::size_t> permutation_table(const Shape& old_shape,
                                           std::span<const std::size_t> perm,
                                           Shape& new_shape) {
  new_shape.resize(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) new_shape[k] = old_shape[perm[k]];
  const std::size_t n = shape_size(old_shape);
  std::vector<std::size_t> table(n);
  MultiIndex moved(perm.size());
  for (std::size_t t = 0; t < n; ++t) {
    const MultiIndex old_idx = unflatten(t, old_shape);
    for (std::size_t k = 0; k < perm.size(); ++k) moved[k] = old_idx[perm[k]];
    table[t] = flatten(moved, new_shape);
  }
  return table;
}

}  // namespace

std::size_t shape_size(const Shape& shape) {
  std::size_t n = 1;
  for (std::size_t d : shape) {
    if (d != 0 && n > max_entries() * 4 / d)
      throw Error(Errc::CapExceeded, "tensor space " + shape_text(shape) + " too large");
    n *= d;
  }
  return n;
}

MultiIndex unflatten(std::size_t index, const Shape& shape) {
  MultiIndex out(shape.size());
  for (std::size_t k = shape.size(); k-- > 0;) {
    out[k] = index % shape[k];
    index /= shape[k];
  }
  return out;
}

std::size_t flatten(std::span<const std::size_t> index, const Shape& shape) {
  std::size_t out = 0;
  for (std::size_t k = 0; k < shape.size(); ++k) out = out * shape[k] + index[k];
  return out;
}

Shape concat(const Shape& a, const Shape& b) {
  Shape out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Shape power_shape(std::size_t d, std::size_t n) { return Shape(n, d); }

LinearMap::LinearMap(FieldSpec field, Shape source, Shape target)
    : field_(field),
      source_(std::move(source)),
      target_(std::move(target)),
      source_size_(shape_size(source_)),
      target_size_(shape_size(target_)) {
  if (target_size_ != 0 && source_size_ > max_entries() / target_size_)
    throw Error(Errc::CapExceeded, "map " + shape_text(source_) + " -> " +
                                       shape_text(target_) + " exceeds the entry cap");
  data_.assign(source_size_ * target_size_, Scalar::zero(field_));
}

LinearMap LinearMap::identity(FieldSpec field, const Shape& shape) {
  LinearMap id(field, shape, shape);
  for (std::size_t i = 0; i < id.source_size(); ++i) id.at(i, i) = Scalar::one(field);
  return id;
}

LinearMap LinearMap::vector(FieldSpec field, Shape target, std::vector<Scalar> values) {
  LinearMap v(field, {}, std::move(target));
  if (values.size() != v.target_size())
    throw Error(Errc::ShapeError, "vector length does not match its shape");
  for (std::size_t i = 0; i < values.size(); ++i) v.at(i, 0) = std::move(values[i]);
  return v;
}

LinearMap LinearMap::basis_vector(FieldSpec field, Shape target, std::size_t index) {
  LinearMap v(field, {}, std::move(target));
  if (index >= v.target_size()) throw Error(Errc::IndexOutOfRange, "basis index");
  v.at(index, 0) = Scalar::one(field);
  return v;
}

LinearMap LinearMap::scalar(const Scalar& value) {
  LinearMap s(value.field(), {}, {});
  s.at(0, 0) = value;
  return s;
}

bool LinearMap::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

LinearMap& LinearMap::operator+=(const LinearMap& other) {
  check_field(*this, other);
  if (source_ != other.source_ || target_ != other.target_)
    throw Error(Errc::ShapeError, "adding maps of different shapes");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

LinearMap& LinearMap::operator-=(const LinearMap& other) {
  check_field(*this, other);
  if (source_ != other.source_ || target_ != other.target_)
    throw Error(Errc::ShapeError, "subtracting maps of different shapes");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

LinearMap& LinearMap::operator*=(const Scalar& c) {
  for (auto& s : data_) s *= c;
  return *this;
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  return a.field_ == b.field_ && a.source_ == b.source_ && a.target_ == b.target_ &&
         a.data_ == b.data_;
}

std::vector<std::pair<std::size_t, Scalar>> nonzeros(std::span<const Scalar> v) {
  std::vector<std::pair<std::size_t, Scalar>> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

LinearMap apply_on_target(const LinearMap& f, std::size_t leg, const LinearMap& g) {
  check_field(f, g);
  const std::size_t a = g.source_arity();
  if (leg + a > f.target_arity() || slice(f.target(), leg, leg + a) != g.source())
    throw Error(Errc::ArityMismatch, "cannot apply " + shape_text(g.source()) + " -> " +
                                         shape_text(g.target()) + " at leg " +
                                         std::to_string(leg) + " of " +
                                         shape_text(f.target()));
  const std::size_t mid = g.source_size();
  const std::size_t suffix = shape_size(slice(f.target(), leg + a, f.target_arity()));
  const std::size_t out_mid = g.target_size();
  Shape target = slice(f.target(), 0, leg);
  target = concat(concat(target, g.target()), slice(f.target(), leg + a, f.target_arity()));
  LinearMap out(f.field(), f.source(), std::move(target));
  const auto gcols = sparse_columns(g);
  const std::size_t block = mid * suffix;
  for (std::size_t j = 0; j < f.source_size(); ++j) {
    const auto col = f.column(j);
    auto dst = out.column(j);
    for (std::size_t t = 0; t < col.size(); ++t) {
      if (col[t].is_zero()) continue;
      const std::size_t pre = t / block;
      const std::size_t rem = t % block;
      const std::size_t m = rem / suffix;
      const std::size_t suf = rem % suffix;
      for (const auto& [b, c] : gcols[m])
        dst[(pre * out_mid + b) * suffix + suf].add_product(col[t], c);
    }
  }
  return out;
}

LinearMap apply_on_source(const LinearMap& f, std::size_t leg, const LinearMap& g) {
  check_field(f, g);
  const std::size_t b = g.target_arity();
  if (leg + b > f.source_arity() || slice(f.source(), leg, leg + b) != g.target())
    throw Error(Errc::ArityMismatch, "cannot precompose " + shape_text(g.source()) +
                                         " -> " + shape_text(g.target()) + " at leg " +
                                         std::to_string(leg) + " of " +
                                         shape_text(f.source()));
  const std::size_t mid = g.target_size();
  const std::size_t in_mid = g.source_size();
  const std::size_t prefix = shape_size(slice(f.source(), 0, leg));
  const std::size_t suffix = shape_size(slice(f.source(), leg + b, f.source_arity()));
  Shape source = slice(f.source(), 0, leg);
  source = concat(concat(source, g.source()), slice(f.source(), leg + b, f.source_arity()));
  LinearMap out(f.field(), std::move(source), f.target());
  const auto gcols = sparse_columns(g);
  for (std::size_t pre = 0; pre < prefix; ++pre)
    for (std::size_t a = 0; a < in_mid; ++a)
      for (std::size_t suf = 0; suf < suffix; ++suf) {
        auto dst = out.column((pre * in_mid + a) * suffix + suf);
        for (const auto& [m, c] : gcols[a]) {
          const auto src = f.column((pre * mid + m) * suffix + suf);
          for (std::size_t t = 0; t < src.size(); ++t)
            if (!src[t].is_zero()) dst[t].add_product(src[t], c);
        }
      }
  return out;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  if (f.source() != g.target())
    throw Error(Errc::ArityMismatch, "composing " + shape_text(f.source()) + " -> " +
                                         shape_text(f.target()) + " after " +
                                         shape_text(g.source()) + " -> " +
                                         shape_text(g.target()));
  return apply_on_target(g, 0, f);
}

LinearMap tensor_product(const LinearMap& f, const LinearMap& g) {
  check_field(f, g);
  LinearMap out(f.field(), concat(f.source(), g.source()), concat(f.target(), g.target()));
  const auto fcols = sparse_columns(f);
  const auto gcols = sparse_columns(g);
  const std::size_t gt = g.target_size();
  for (std::size_t i = 0; i < f.source_size(); ++i)
    for (std::size_t j = 0; j < g.source_size(); ++j) {
      auto dst = out.column(i * g.source_size() + j);
      for (const auto& [s, a] : fcols[i])
        for (const auto& [t, b] : gcols[j]) dst[s * gt + t] = a * b;
    }
  return out;
}

LinearMap permute_target(const LinearMap& f, std::span<const std::size_t> perm) {
  check_permutation(perm, f.target_arity());
  Shape target;
  const auto table = permutation_table(f.target(), perm, target);
  LinearMap out(f.field(), f.source(), target);
  for (std::size_t j = 0; j < f.source_size(); ++j) {
    const auto src = f.column(j);
    auto dst = out.column(j);
    for (std::size_t t = 0; t < src.size(); ++t) dst[table[t]] = src[t];
  }
  return out;
}

LinearMap permute_source(const LinearMap& f, std::span<const std::size_t> perm) {
  check_permutation(perm, f.source_arity());
  Shape source;
  const auto table = permutation_table(f.source(), perm, source);
  LinearMap out(f.field(), source, f.target());
  for (std::size_t j = 0; j < f.source_size(); ++j) {
    const auto src = f.column(j);
    auto dst = out.column(table[j]);
    std::copy(src.begin(), src.end(), dst.begin());
  }
  return out;
}

std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm) {
  check_permutation(perm, perm.size());
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) inv[perm[k]] = k;
  return inv;
}

std::vector<std::size_t> transposition(std::size_t n, std::size_t i, std::size_t j) {
  std::vector<std::size_t> p(n);
  for (std::size_t k = 0; k < n; ++k) p[k] = k;
  std::swap(p.at(i), p.at(j));
  return p;
}

LinearMap transpose(const LinearMap& f) {
  LinearMap out(f.field(), f.target(), f.source());
  for (std::size_t j = 0; j < f.source_size(); ++j)
    for (std::size_t t = 0; t < f.target_size(); ++t)
      if (!f.at(t, j).is_zero()) out.at(j, t) = f.at(t, j);
  return out;
}

std::optional<Mismatch> first_mismatch(const LinearMap& lhs, const LinearMap& rhs) {
  check_field(lhs, rhs);
  if (lhs.source() != rhs.source() || lhs.target() != rhs.target())
    throw Error(Errc::ShapeError, "comparing " + shape_text(lhs.source()) + " -> " +
                                      shape_text(lhs.target()) + " with " +
                                      shape_text(rhs.source()) + " -> " +
                                      shape_text(rhs.target()));
  for (std::size_t j = 0; j < lhs.source_size(); ++j)
    for (std::size_t t = 0; t < lhs.target_size(); ++t)
      if (!(lhs.at(t, j) == rhs.at(t, j)))
        return Mismatch{unflatten(t, lhs.target()), unflatten(j, lhs.source()),
                        lhs.at(t, j), rhs.at(t, j)};
  return std::nullopt;
}

std::string describe_index(const MultiIndex& index,
                           std::span<const std::vector<std::string>> labels) {
  if (index.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (k) out += "⊗";
    if (k < labels.size() && index[k] < labels[k].size())
      out += labels[k][index[k]];
    else
      out += std::to_string(index[k]);
  }
  return out;
}

}  // namespace torsorkit
