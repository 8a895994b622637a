#pragma once

// Dense exact linear algebra over a prime field F_p.
//
// Residues are stored as bytes, so the supported primes are those below 256.
// All values are immutable once built; the shared per-prime tables are created
// on first use and never modified afterwards.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rlie/error.hpp"

namespace rlie {

using Residue = std::uint8_t;
using Vec = std::vector<Residue>;

bool is_prime(unsigned n);

class PrimeField {
 public:
  /// Shared table for p. Throws PreconditionError unless p is a prime below 256.
  static const PrimeField& of(unsigned p);

  unsigned p() const noexcept { return p_; }

  Residue add(Residue a, Residue b) const noexcept {
    unsigned s = unsigned(a) + b;
    return Residue(s >= p_ ? s - p_ : s);
  }
  Residue sub(Residue a, Residue b) const noexcept { return Residue(a >= b ? a - b : a + p_ - b); }
  Residue neg(Residue a) const noexcept { return Residue(a ? p_ - a : 0); }
  Residue mul(Residue a, Residue b) const noexcept { return mul_[std::size_t(a) * p_ + b]; }
  Residue inv(Residue a) const;
  Residue pow(Residue a, unsigned long long e) const noexcept;
  Residue reduce(long long v) const noexcept;

  /// Row of the multiplication table for a fixed left factor.
  const Residue* mul_row(Residue a) const noexcept { return mul_.data() + std::size_t(a) * p_; }

 private:
  explicit PrimeField(unsigned p);

  unsigned p_;
  std::vector<Residue> mul_;
  std::vector<Residue> inv_;
};

class Matrix {
 public:
  Matrix() : Matrix(2, 0, 0) {}
  Matrix(unsigned p, std::size_t rows, std::size_t cols);

  static Matrix identity(unsigned p, std::size_t n);
  /// Integer entries are reduced to canonical residues.
  static Matrix from_ints(unsigned p, const std::vector<std::vector<long long>>& rows);
  static Matrix from_rows(unsigned p, std::size_t cols, const std::vector<Vec>& rows);
  static Matrix from_columns(unsigned p, std::size_t rows, const std::vector<Vec>& cols);

  unsigned p() const noexcept { return p_; }
  const PrimeField& field() const noexcept { return *field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Residue operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  /// Stores v, which must already be a canonical residue.
  void set(std::size_t r, std::size_t c, Residue v) noexcept { data_[r * cols_ + c] = v; }
  void set_int(std::size_t r, std::size_t c, long long v) noexcept { data_[r * cols_ + c] = field_->reduce(v); }

  std::span<const Residue> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<Residue> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }
  Vec column(std::size_t c) const;
  void set_column(std::size_t c, const Vec& v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Residue s) const;
  Vec apply(const Vec& v) const;
  /// Row vector times matrix: v^T * this.
  Vec apply_left(const Vec& v) const;
  Matrix pow(unsigned long long e) const;

  bool is_zero() const noexcept;
  bool operator==(const Matrix& o) const noexcept {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  std::string to_string() const;

 private:
  void check_same_shape(const Matrix& o, const char* op) const;

  unsigned p_;
  const PrimeField* field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix hstack(const Matrix& left, const Matrix& right);

// Vector helpers; every vector argument must have residues below p.
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec vec_add(unsigned p, const Vec& a, const Vec& b);
Vec vec_sub(unsigned p, const Vec& a, const Vec& b);
Vec vec_scale(unsigned p, Residue s, const Vec& a);
/// a += s * b
void vec_axpy(unsigned p, Vec& a, Residue s, const Vec& b);
bool vec_is_zero(const Vec& a) noexcept;
Residue vec_dot(unsigned p, const Vec& a, const Vec& b);

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Rows beyond the rank are zero.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Rows of the result form a basis (in reduced echelon form) of {x : m x = 0}.
Matrix kernel_basis(const Matrix& m);

class Subspace;

struct AffineSolution {
  Vec particular;
  Matrix null_basis;  // rows span the solution space of the homogeneous system
};

/// Solves a x = b. Returns nullopt exactly when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const Matrix& a, const Vec& b);

/// A subspace of F_p^n stored as the row space of a matrix in reduced echelon
/// form with full row rank, so that equal subspaces compare equal structurally.
class Subspace {
 public:
  Subspace() : Subspace(2, 0) {}
  Subspace(unsigned p, std::size_t ambient_dim);

  static Subspace span(const Matrix& rows);
  static Subspace span(unsigned p, std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static Subspace full(unsigned p, std::size_t ambient_dim);

  unsigned p() const noexcept { return basis_.p(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_dim(); }
  const Matrix& basis() const noexcept { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row_vec(i); }
  std::vector<Vec> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Remainder of v after reduction by the echelon basis; zero iff v lies in the subspace.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v with respect to basis(); throws PreconditionError if v is outside.
  Vec coordinates(const Vec& v) const;

  bool operator==(const Subspace& o) const noexcept { return basis_ == o.basis_; }

 private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& v);
/// Zassenhaus intersection.
Subspace intersect(const Subspace& u, const Subspace& v);
/// A complement of u in the ambient space, spanned by unit vectors at non-pivot columns.
Subspace extend_to_complement(const Subspace& u);
/// A complement of inner within outer; requires inner ⊆ outer.
Subspace complement_within(const Subspace& inner, const Subspace& outer);

/// Semi-echelon basis grown one vector at a time; cheaper than re-reducing a
/// Subspace on every insertion.
class IncrementalBasis {
 public:
  IncrementalBasis(unsigned p, std::size_t ambient_dim) : p_(p), n_(ambient_dim) {}

  /// Adds v if it is independent of the current vectors; returns whether it was added.
  bool add(const Vec& v);
  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }
  Vec reduce(const Vec& v) const;
  std::size_t size() const noexcept { return rows_.size(); }
  const std::vector<Vec>& vectors() const noexcept { return rows_; }
  Subspace subspace() const;

 private:
  unsigned p_;
  std::size_t n_;
  std::vector<Vec> rows_;  // normalized so that rows_[i][pivots_[i]] == 1
  std::vector<std::size_t> pivots_;
};

/// An ordered, linearly independent list of vectors with coordinate extraction.
class Frame {
 public:
  explicit Frame(Matrix vectors);

  std::size_t size() const noexcept { return vectors_.rows(); }
  const Matrix& vectors() const noexcept { return vectors_; }
  /// Coordinates of v with respect to the frame; throws PreconditionError if v is outside its span.
  Vec coordinates(const Vec& v) const;

 private:
  Matrix vectors_;
  Matrix echelon_;
  Matrix transform_;  // transform_ * vectors_ == echelon_
  std::vector<std::size_t> pivots_;
};

}  // namespace rlie
