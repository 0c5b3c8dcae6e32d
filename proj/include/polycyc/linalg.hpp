#pragma once

// Dense exact linear algebra over GaloisRing. Vectors are row vectors and
// matrices act on the right (v -> vM), matching the row-module view of codes.

#include "polycyc/ring.hpp"

#include <optional>
#include <span>
#include <vector>

namespace polycyc {

using RowVector = std::vector<RingElem>;

class RingMatrix {
 public:
  RingMatrix(GaloisRing ring, std::size_t rows, std::size_t cols);
  RingMatrix(GaloisRing ring, std::size_t rows, std::size_t cols, std::vector<RingElem> entries);
  static RingMatrix identity(const GaloisRing& ring, std::size_t n);
  static RingMatrix from_rows(const GaloisRing& ring, std::size_t cols,
                              const std::vector<RowVector>& rows);
  static RingMatrix diagonal(const GaloisRing& ring, std::span<const RingElem> diag);

  const GaloisRing& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  RingElem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const RingElem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  RowVector row(std::size_t i) const;
  std::vector<RowVector> row_list() const;
  const std::vector<RingElem>& entries() const { return data_; }

  RingMatrix transpose() const;
  RingMatrix operator+(const RingMatrix& o) const;
  RingMatrix operator-(const RingMatrix& o) const;
  RingMatrix operator*(const RingMatrix& o) const;
  RingMatrix scaled(const RingElem& c) const;
  // Stacks the rows of `below` under this matrix.
  RingMatrix stack(const RingMatrix& below) const;
  // Places `right` to the right of this matrix.
  RingMatrix concat(const RingMatrix& right) const;
  bool is_zero() const;

  friend bool operator==(const RingMatrix& a, const RingMatrix& b);

 private:
  GaloisRing ring_;
  std::size_t rows_, cols_;
  std::vector<RingElem> data_;
};

RowVector zero_vector(const GaloisRing& ring, std::size_t n);
RowVector vec_mul(const GaloisRing& ring, std::span<const RingElem> v, const RingMatrix& m);
RowVector vec_add(const GaloisRing& ring, std::span<const RingElem> a, std::span<const RingElem> b);
RowVector vec_sub(const GaloisRing& ring, std::span<const RingElem> a, std::span<const RingElem> b);
RowVector vec_scale(const GaloisRing& ring, const RingElem& c, std::span<const RingElem> v);
bool vec_is_zero(const GaloisRing& ring, std::span<const RingElem> v);
std::size_t hamming_weight(const GaloisRing& ring, std::span<const RingElem> v);

// Kronecker product A (x) B = (a_ij B).
RingMatrix kronecker(const RingMatrix& a, const RingMatrix& b);
RingElem trace(const RingMatrix& m);
RingMatrix matrix_pow(const RingMatrix& m, std::uint64_t e);

// Canonical generating set of a row module: echelon form with pivots p^k,
// entries above each pivot reduced to [0, p^k) coordinates, and the Howell
// property (every module vector vanishing on the first j columns is spanned
// by the rows whose pivot lies beyond column j). Two matrices have the same
// row module iff their Howell bases are equal.
class HowellBasis {
 public:
  explicit HowellBasis(const RingMatrix& m);

  const RingMatrix& matrix() const { return basis_; }
  std::size_t rank() const { return basis_.rows(); }
  std::size_t width() const { return basis_.cols(); }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }
  // Valuation of each pivot entry.
  std::vector<unsigned> pivot_valuations() const;

  bool contains(std::span<const RingElem> v) const;
  bool contains(const HowellBasis& other) const;
  // log_p of the module size; the module has p^(m * sum(r - k_i)) elements.
  std::uint64_t log_size() const;
  std::optional<std::uint64_t> size() const;
  // Reduces v by the basis; the remainder is zero iff v is in the module.
  RowVector reduce(std::span<const RingElem> v) const;

  friend bool operator==(const HowellBasis& a, const HowellBasis& b) {
    return a.basis_ == b.basis_;
  }

 private:
  RingMatrix basis_;
  std::vector<std::size_t> pivots_;
};

HowellBasis howell_form(const RingMatrix& m);
// Howell basis of the left kernel {v : vM = 0}.
HowellBasis kernel(const RingMatrix& m);
RingElem determinant(const RingMatrix& m);

struct InverseResult {
  RingElem det;
  std::optional<RingMatrix> inverse;  // present iff det is a unit
};
InverseResult try_inverse(const RingMatrix& m);
// Throws MathError("singular ...") when det(M) is not a unit.
RingMatrix matrix_inverse(const RingMatrix& m);

struct MonomialWitness {
  bool monomial = false;
  // For a monomial matrix: row i has its single unit entry units[i] in
  // column permutation[i].
  std::vector<std::size_t> permutation;
  std::vector<RingElem> units;
};
MonomialWitness is_monomial(const RingMatrix& m);

}  // namespace polycyc
