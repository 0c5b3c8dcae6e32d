#include "polycyc/linalg.hpp"

#include "polycyc/errors.hpp"

#include <algorithm>

namespace polycyc {

RingMatrix::RingMatrix(GaloisRing ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_.zero()) {}

RingMatrix::RingMatrix(GaloisRing ring, std::size_t rows, std::size_t cols,
                       std::vector<RingElem> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw PreconditionError("matrix entry count mismatch");
  for (const auto& e : data_) {
    if (!ring_.contains(e)) throw PreconditionError("matrix entry outside " + ring_.name());
  }
}

RingMatrix RingMatrix::identity(const GaloisRing& ring, std::size_t n) {
  RingMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

RingMatrix RingMatrix::from_rows(const GaloisRing& ring, std::size_t cols,
                                 const std::vector<RowVector>& rows) {
  std::vector<RingElem> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw PreconditionError("row length mismatch");
    data.insert(data.end(), r.begin(), r.end());
  }
  return RingMatrix(ring, rows.size(), cols, std::move(data));
}

RingMatrix RingMatrix::diagonal(const GaloisRing& ring, std::span<const RingElem> diag) {
  RingMatrix m(ring, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

RowVector RingMatrix::row(std::size_t i) const {
  return RowVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<RowVector> RingMatrix::row_list() const {
  std::vector<RowVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

RingMatrix RingMatrix::transpose() const {
  RingMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix shape mismatch");
  RingMatrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) ring_.add_assign(s.data_[i], o.data_[i]);
  return s;
}

RingMatrix RingMatrix::operator-(const RingMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix shape mismatch");
  RingMatrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) ring_.sub_assign(s.data_[i], o.data_[i]);
  return s;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
  if (cols_ != o.rows_) throw PreconditionError("matrix shape mismatch in product");
  if (!(ring_ == o.ring_)) throw PreconditionError("matrices over different rings");
  RingMatrix p(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const RingElem& a = (*this)(i, k);
      if (ring_.is_zero(a)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) ring_.add_mul(p(i, j), a, o(k, j));
    }
  }
  return p;
}

RingMatrix RingMatrix::scaled(const RingElem& c) const {
  RingMatrix s = *this;
  for (auto& e : s.data_) e = ring_.mul(c, e);
  return s;
}

RingMatrix RingMatrix::stack(const RingMatrix& below) const {
  if (cols_ != below.cols_) throw PreconditionError("column count mismatch in stack");
  std::vector<RingElem> data = data_;
  data.insert(data.end(), below.data_.begin(), below.data_.end());
  return RingMatrix(ring_, rows_ + below.rows_, cols_, std::move(data));
}

RingMatrix RingMatrix::concat(const RingMatrix& right) const {
  if (rows_ != right.rows_) throw PreconditionError("row count mismatch in concat");
  RingMatrix c(ring_, rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) c(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) c(i, cols_ + j) = right(i, j);
  }
  return c;
}

bool RingMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [&](const RingElem& e) { return ring_.is_zero(e); });
}

bool operator==(const RingMatrix& a, const RingMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.ring_ == b.ring_ && a.data_ == b.data_;
}

RowVector zero_vector(const GaloisRing& ring, std::size_t n) { return RowVector(n, ring.zero()); }

RowVector vec_mul(const GaloisRing& ring, std::span<const RingElem> v, const RingMatrix& m) {
  if (v.size() != m.rows()) throw PreconditionError("vector/matrix shape mismatch");
  RowVector out = zero_vector(ring, m.cols());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (ring.is_zero(v[k])) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) ring.add_mul(out[j], v[k], m(k, j));
  }
  return out;
}

RowVector vec_add(const GaloisRing& ring, std::span<const RingElem> a, std::span<const RingElem> b) {
  if (a.size() != b.size()) throw PreconditionError("vector length mismatch");
  RowVector out(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) ring.add_assign(out[i], b[i]);
  return out;
}

RowVector vec_sub(const GaloisRing& ring, std::span<const RingElem> a, std::span<const RingElem> b) {
  if (a.size() != b.size()) throw PreconditionError("vector length mismatch");
  RowVector out(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) ring.sub_assign(out[i], b[i]);
  return out;
}

RowVector vec_scale(const GaloisRing& ring, const RingElem& c, std::span<const RingElem> v) {
  RowVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(ring.mul(c, x));
  return out;
}

bool vec_is_zero(const GaloisRing& ring, std::span<const RingElem> v) {
  return std::all_of(v.begin(), v.end(), [&](const RingElem& e) { return ring.is_zero(e); });
}

std::size_t hamming_weight(const GaloisRing& ring, std::span<const RingElem> v) {
  return static_cast<std::size_t>(
      std::count_if(v.begin(), v.end(), [&](const RingElem& e) { return !ring.is_zero(e); }));
}

RingMatrix kronecker(const RingMatrix& a, const RingMatrix& b) {
  const GaloisRing& ring = a.ring();
  RingMatrix k(ring, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const RingElem& aij = a(i, j);
      if (ring.is_zero(aij)) continue;
      for (std::size_t u = 0; u < b.rows(); ++u) {
        for (std::size_t v = 0; v < b.cols(); ++v) {
          k(i * b.rows() + u, j * b.cols() + v) = ring.mul(aij, b(u, v));
        }
      }
    }
  }
  return k;
}

RingElem trace(const RingMatrix& m) {
  if (!m.is_square()) throw PreconditionError("trace of a non-square matrix");
  RingElem t = m.ring().zero();
  for (std::size_t i = 0; i < m.rows(); ++i) m.ring().add_assign(t, m(i, i));
  return t;
}

RingMatrix matrix_pow(const RingMatrix& m, std::uint64_t e) {
  if (!m.is_square()) throw PreconditionError("power of a non-square matrix");
  RingMatrix result = RingMatrix::identity(m.ring(), m.rows());
  RingMatrix base = m;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

namespace {

// row -= t * pivot, from column `from` on.
void eliminate(const GaloisRing& ring, RowVector& row, const RingElem& t, const RowVector& pivot,
               std::size_t from) {
  for (std::size_t c = from; c < row.size(); ++c) {
    if (ring.is_zero(pivot[c])) continue;
    ring.sub_assign(row[c], ring.mul(t, pivot[c]));
  }
}

}  // namespace

HowellBasis::HowellBasis(const RingMatrix& m) : basis_(m.ring(), 0, m.cols()) {
  const GaloisRing& ring = m.ring();
  const unsigned r = ring.nilpotency();
  const std::size_t n = m.cols();
  std::vector<RowVector> work;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    RowVector row = m.row(i);
    if (!vec_is_zero(ring, row)) work.push_back(std::move(row));
  }

  std::vector<RowVector> pivot_rows;
  std::vector<unsigned> pivot_vals;
  for (std::size_t col = 0; col < n && !work.empty(); ++col) {
    std::size_t best = work.size();
    unsigned best_val = r;
    for (std::size_t i = 0; i < work.size(); ++i) {
      const unsigned v = ring.valuation(work[i][col]);
      if (v < best_val) {
        best_val = v;
        best = i;
        if (v == 0) break;
      }
    }
    if (best == work.size()) continue;
    RowVector pivot = std::move(work[best]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));

    const RingElem unit = ring.divide_by_p_power(pivot[col], best_val);
    const RingElem unit_inv = ring.invert(unit);
    for (std::size_t c = col; c < n; ++c) pivot[c] = ring.mul(unit_inv, pivot[c]);

    for (auto& row : work) {
      if (ring.is_zero(row[col])) continue;
      const RingElem t = ring.divide_by_p_power(row[col], best_val);
      eliminate(ring, row, t, pivot, col);
    }
    if (best_val > 0) {
      // p^(r-k) * pivot vanishes on the pivot column.
      RowVector extra(n, ring.zero());
      const RingElem factor = ring.pow(ring.from_int(ring.p()), r - best_val);
      for (std::size_t c = col + 1; c < n; ++c) extra[c] = ring.mul(factor, pivot[c]);
      if (!vec_is_zero(ring, extra)) work.push_back(std::move(extra));
    }
    std::erase_if(work, [&](const RowVector& row) { return vec_is_zero(ring, row); });
    pivots_.push_back(col);
    pivot_vals.push_back(best_val);
    pivot_rows.push_back(std::move(pivot));
  }

  // Reduce entries above each pivot into the canonical residue system mod p^k.
  for (std::size_t i = 0; i < pivot_rows.size(); ++i) {
    const std::size_t col = pivots_[i];
    const unsigned k = pivot_vals[i];
    if (k == 0) {
      for (std::size_t l = 0; l < i; ++l) {
        const RingElem a = pivot_rows[l][col];
        if (ring.is_zero(a)) continue;
        eliminate(ring, pivot_rows[l], a, pivot_rows[i], col);
      }
      continue;
    }
    for (std::size_t l = 0; l < i; ++l) {
      const RingElem a = pivot_rows[l][col];
      const RingElem rem = ring.reduce_mod_p_power(a, k);
      if (rem == a) continue;
      const RingElem t = ring.divide_by_p_power(ring.sub(a, rem), k);
      eliminate(ring, pivot_rows[l], t, pivot_rows[i], col);
    }
  }
  basis_ = RingMatrix::from_rows(ring, n, pivot_rows);
}

std::vector<unsigned> HowellBasis::pivot_valuations() const {
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    out.push_back(basis_.ring().valuation(basis_(i, pivots_[i])));
  }
  return out;
}

RowVector HowellBasis::reduce(std::span<const RingElem> v) const {
  const GaloisRing& ring = basis_.ring();
  if (v.size() != basis_.cols()) throw PreconditionError("vector length mismatch");
  RowVector rem(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const std::size_t col = pivots_[i];
    if (ring.is_zero(rem[col])) continue;
    const unsigned k = ring.valuation(basis_(i, col));
    if (ring.valuation(rem[col]) < k) return rem;
    const RingElem t = ring.divide_by_p_power(rem[col], k);
    const RowVector row = basis_.row(i);
    eliminate(ring, rem, t, row, col);
  }
  return rem;
}

bool HowellBasis::contains(std::span<const RingElem> v) const {
  return vec_is_zero(basis_.ring(), reduce(v));
}

bool HowellBasis::contains(const HowellBasis& other) const {
  for (std::size_t i = 0; i < other.rank(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

std::uint64_t HowellBasis::log_size() const {
  const GaloisRing& ring = basis_.ring();
  std::uint64_t total = 0;
  for (unsigned k : pivot_valuations()) total += std::uint64_t{ring.degree()} * (ring.nilpotency() - k);
  return total;
}

std::optional<std::uint64_t> HowellBasis::size() const {
  const std::uint64_t e = log_size();
  const std::uint64_t p = basis_.ring().p();
  std::uint64_t s = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (s > UINT64_MAX / p) return std::nullopt;
    s *= p;
  }
  return s;
}

HowellBasis howell_form(const RingMatrix& m) { return HowellBasis(m); }

HowellBasis kernel(const RingMatrix& m) {
  const GaloisRing& ring = m.ring();
  const std::size_t a = m.rows(), b = m.cols();
  const HowellBasis h(m.concat(RingMatrix::identity(ring, a)));
  std::vector<RowVector> rows;
  for (std::size_t i = 0; i < h.rank(); ++i) {
    if (h.pivot_columns()[i] < b) continue;
    RowVector row = h.matrix().row(i);
    rows.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(b), row.end());
  }
  return HowellBasis(RingMatrix::from_rows(ring, a, rows));
}

RingElem determinant(const RingMatrix& m) {
  if (!m.is_square()) throw PreconditionError("determinant of a non-square matrix");
  const GaloisRing& ring = m.ring();
  const std::size_t n = m.rows();
  std::vector<RowVector> a = m.row_list();
  RingElem det = ring.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = n;
    unsigned best_val = ring.nilpotency();
    for (std::size_t i = col; i < n; ++i) {
      const unsigned v = ring.valuation(a[i][col]);
      if (v < best_val) {
        best_val = v;
        best = i;
      }
    }
    if (best == n) return ring.zero();
    if (best != col) {
      std::swap(a[best], a[col]);
      det = ring.neg(det);
    }
    // In a chain ring the least-valuation entry divides the rest of its column.
    for (std::size_t i = col + 1; i < n; ++i) {
      if (ring.is_zero(a[i][col])) continue;
      const RingElem t = ring.exact_quotient(a[i][col], a[col][col]);
      eliminate(ring, a[i], t, a[col], col);
    }
    det = ring.mul(det, a[col][col]);
  }
  return det;
}

InverseResult try_inverse(const RingMatrix& m) {
  if (!m.is_square()) throw PreconditionError("inverse of a non-square matrix");
  const GaloisRing& ring = m.ring();
  const std::size_t n = m.rows();
  InverseResult result{determinant(m), std::nullopt};
  if (!ring.is_unit(result.det)) return result;

  std::vector<RowVector> a = m.concat(RingMatrix::identity(ring, n)).row_list();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t i = col; i < n; ++i) {
      if (ring.is_unit(a[i][col])) {
        piv = i;
        break;
      }
    }
    if (piv == n) throw MathError("no unit pivot although det is a unit");
    std::swap(a[piv], a[col]);
    const RingElem inv = ring.invert(a[col][col]);
    for (auto& x : a[col]) x = ring.mul(inv, x);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || ring.is_zero(a[i][col])) continue;
      const RingElem t = a[i][col];
      eliminate(ring, a[i], t, a[col], 0);
    }
  }
  RingMatrix inv(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a[i][n + j];
  }
  result.inverse = std::move(inv);
  return result;
}

RingMatrix matrix_inverse(const RingMatrix& m) {
  auto res = try_inverse(m);
  if (!res.inverse) {
    throw MathError("singular matrix: determinant " + m.ring().to_string(res.det) +
                    " is not a unit");
  }
  return std::move(*res.inverse);
}

MonomialWitness is_monomial(const RingMatrix& m) {
  if (!m.is_square()) throw PreconditionError("monomial test of a non-square matrix");
  const GaloisRing& ring = m.ring();
  const std::size_t n = m.rows();
  MonomialWitness w;
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t found = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (ring.is_zero(m(i, j))) continue;
      if (found != n) return MonomialWitness{};
      found = j;
    }
    if (found == n || used[found] || !ring.is_unit(m(i, found))) return MonomialWitness{};
    used[found] = true;
    w.permutation.push_back(found);
    w.units.push_back(m(i, found));
  }
  w.monomial = true;
  return w;
}

}  // namespace polycyc
