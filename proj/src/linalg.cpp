#include "torsorkit/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <sstream>

#include "torsorkit/error.hpp"

namespace torsorkit {

namespace {

// Incremental reduced row-echelon form over a fixed number of columns.
class Echelon {
 public:
  Echelon(FieldSpec field, std::size_t cols) : field_(field), cols_(cols) {}

  // Returns true when the row was independent of the rows so far.
  bool insert(std::vector<Scalar> row) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar c = row[pivots_[i]];
      if (c.is_zero()) continue;
      const auto& r = rows_[i];
      for (std::size_t k = pivots_[i]; k < cols_; ++k)
        if (!r[k].is_zero()) row[k] -= c * r[k];
    }
    std::size_t p = 0;
    while (p < cols_ && row[p].is_zero()) ++p;
    if (p == cols_) return false;
    const Scalar inv = row[p].inverse();
    for (std::size_t k = p; k < cols_; ++k)
      if (!row[k].is_zero()) row[k] *= inv;
    for (auto& r : rows_) {
      const Scalar c = r[p];
      if (c.is_zero()) continue;
      for (std::size_t k = p; k < cols_; ++k)
        if (!row[k].is_zero()) r[k] -= c * row[k];
    }
    const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    rows_.insert(rows_.begin() + pos, std::move(row));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == cols_; }
  std::vector<std::vector<Scalar>>& rows() { return rows_; }
  std::vector<std::size_t>& pivots() { return pivots_; }

  std::vector<std::vector<Scalar>> null_space() const {
    std::vector<std::vector<Scalar>> out;
    std::size_t next = 0;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (next < pivots_.size() && pivots_[next] == free) {
        ++next;
        continue;
      }
      std::vector<Scalar> v(cols_, Scalar::zero(field_));
      v[free] = Scalar::one(field_);
      for (std::size_t i = 0; i < rows_.size(); ++i)
        if (!rows_[i][free].is_zero()) v[pivots_[i]] = -rows_[i][free];
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  FieldSpec field_;
  std::size_t cols_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<Scalar> matrix_row(const LinearMap& f, std::size_t t) {
  std::vector<Scalar> row;
  row.reserve(f.source_size());
  for (std::size_t j = 0; j < f.source_size(); ++j) row.push_back(f.at(t, j));
  return row;
}

Echelon row_echelon(const LinearMap& f) {
  Echelon e(f.field(), f.source_size());
  for (std::size_t t = 0; t < f.target_size() && !e.full(); ++t) {
    bool zero = true;
    for (std::size_t j = 0; j < f.source_size() && zero; ++j) zero = f.at(t, j).is_zero();
    if (!zero) e.insert(matrix_row(f, t));
  }
  return e;
}

}  // namespace

SubspaceBasis::SubspaceBasis(FieldSpec field, Shape ambient)
    : field_(field), ambient_(std::move(ambient)), ambient_size_(shape_size(ambient_)) {}

SubspaceBasis SubspaceBasis::span(FieldSpec field, Shape ambient,
                                  const std::vector<std::vector<Scalar>>& vectors) {
  SubspaceBasis out(field, std::move(ambient));
  Echelon e(field, out.ambient_size_);
  for (const auto& v : vectors) {
    if (v.size() != out.ambient_size_)
      throw Error(Errc::ShapeError, "spanning vector has wrong length");
    if (!e.full()) e.insert(v);
  }
  out.rows_ = std::move(e.rows());
  out.pivots_ = std::move(e.pivots());
  return out;
}

SubspaceBasis SubspaceBasis::span_of_columns(const LinearMap& f) {
  std::vector<std::vector<Scalar>> cols;
  for (std::size_t j = 0; j < f.source_size(); ++j) {
    const auto c = f.column(j);
    cols.emplace_back(c.begin(), c.end());
  }
  return span(f.field(), f.target(), cols);
}

std::optional<std::vector<Scalar>> SubspaceBasis::coordinates(std::span<const Scalar> v) const {
  if (v.size() != ambient_size_) throw Error(Errc::ShapeError, "vector not in ambient space");
  std::vector<Scalar> coords;
  coords.reserve(rows_.size());
  for (std::size_t p : pivots_) coords.push_back(v[p]);
  std::vector<Scalar> rebuilt(ambient_size_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (coords[i].is_zero()) continue;
    for (std::size_t k = 0; k < ambient_size_; ++k)
      if (!rows_[i][k].is_zero()) rebuilt[k].add_product(coords[i], rows_[i][k]);
  }
  for (std::size_t k = 0; k < ambient_size_; ++k)
    if (!(rebuilt[k] == v[k])) return std::nullopt;
  return coords;
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  if (other.ambient_ != ambient_) return false;
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const auto& r) { return contains(std::span<const Scalar>(r)); });
}

LinearMap SubspaceBasis::inclusion() const {
  LinearMap inc(field_, {dim()}, ambient_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    std::copy(rows_[i].begin(), rows_[i].end(), inc.column(i).begin());
  return inc;
}

LinearMap SubspaceBasis::pivot_projection() const {
  LinearMap proj(field_, ambient_, {dim()});
  for (std::size_t i = 0; i < pivots_.size(); ++i) proj.at(i, pivots_[i]) = Scalar::one(field_);
  return proj;
}

std::string SubspaceBasis::fingerprint() const {
  // FNV-1a over a canonical text rendering.
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  feed(field_.to_string());
  for (std::size_t d : ambient_) feed(std::to_string(d));
  feed("|");
  for (const auto& r : rows_)
    for (const auto& s : r) feed(s.to_string());
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

SubspaceBasis kernel_basis(const LinearMap& f) {
  const Echelon e = row_echelon(f);
  return SubspaceBasis::span(f.field(), f.source(), e.null_space());
}

std::size_t rank(const LinearMap& f) { return row_echelon(f).rank(); }

LinearMap invert_map(const LinearMap& f) {
  const std::size_t n = f.source_size();
  if (n != f.target_size()) throw Error(Errc::ShapeError, "inverting a non-square map");
  // Gauss-Jordan on [f | I], rows indexed by target coordinates.
  std::vector<std::vector<Scalar>> a(n);
  for (std::size_t t = 0; t < n; ++t) {
    a[t] = matrix_row(f, t);
    a[t].resize(2 * n, Scalar::zero(f.field()));
    a[t][n + t] = Scalar::one(f.field());
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[rank]);
    const Scalar inv = a[rank][col].inverse();
    for (auto& s : a[rank])
      if (!s.is_zero()) s *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      const Scalar c = a[r][col];
      for (std::size_t k = col; k < 2 * n; ++k)
        if (!a[rank][k].is_zero()) a[r][k] -= c * a[rank][k];
    }
    ++rank;
  }
  if (rank < n) throw SingularError(n - rank, "map is not invertible");
  LinearMap inv(f.field(), f.target(), f.source());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) inv.at(r, k) = a[r][n + k];
  return inv;
}

LinearMap corestrict_target(const LinearMap& f, std::size_t leg, const SubspaceBasis& carrier) {
  const std::size_t a = carrier.ambient().size();
  if (leg + a > f.target_arity() ||
      !std::equal(carrier.ambient().begin(), carrier.ambient().end(),
                  f.target().begin() + static_cast<std::ptrdiff_t>(leg)))
    throw Error(Errc::ArityMismatch, "carrier does not match the target legs");
  LinearMap coords = apply_on_target(f, leg, carrier.pivot_projection());
  const LinearMap rebuilt = apply_on_target(coords, leg, carrier.inclusion());
  if (const auto m = first_mismatch(rebuilt, f)) {
    throw Error(Errc::CorestrictionFailure,
                "image of source basis " + describe_index(m->source_index, {}) +
                    " leaves the carrier at target " + describe_index(m->target_index, {}));
  }
  return coords;
}

LinearMap restrict_source(const LinearMap& f, std::size_t leg, const SubspaceBasis& carrier) {
  return apply_on_source(f, leg, carrier.inclusion());
}

}  // namespace torsorkit
