#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pencil {

/// An element of F_q, stored as its canonical integer representative in
/// [0, q). For q = p^m the base-p digits of the value are the coordinates in
/// the polynomial basis {1, t, ..., t^(m-1)}, lowest digit first.
///
/// Elements do not know which field they belong to; every operation takes
/// the Field explicitly.
struct Elem {
  std::uint16_t value = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// The finite field F_q with q = p^m <= 2^16.
///
/// Prime fields use plain modular arithmetic. Extension fields are built over
/// the lexicographically smallest monic irreducible of degree m (coefficients
/// compared from the highest degree down) and multiply through log/antilog
/// tables. A Field is immutable once constructed and may be shared freely
/// between threads.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Throws NotPrime if p is composite and TooLarge if p^m exceeds kMaxOrder.
  Field(std::uint32_t p, std::uint32_t m = 1);

  /// Parses "p", "p^m" or a prime power "q" such as "4" or "8".
  static Field parse(std::string_view spec);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return q_; }
  bool is_prime() const noexcept { return m_ == 1; }

  /// Coefficients over F_p of the defining polynomial, constant term first.
  /// Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  /// "p" for prime fields, "p^m" otherwise. Parses back to an equal field.
  std::string spec() const;

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }

  /// Range-checked construction from a canonical representative.
  Elem elem(std::uint64_t value) const;
  /// The image of an integer in the prime subfield.
  Elem from_int(long long value) const noexcept;
  bool contains(Elem a) const noexcept { return a.value < q_; }

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  /// Throws DivisionByZero on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.p_ == b.p_ && a.m_ == b.m_;
  }

 private:
  Elem mul_by_reduction(Elem a, Elem b) const noexcept;
  void build_tables();

  std::uint32_t p_ = 2;
  std::uint32_t m_ = 1;
  std::uint32_t q_ = 2;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint16_t> exp_;  // exp_[i] = g^i for i in [0, 2(q-1))
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
  std::vector<std::uint16_t> inv_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Dense row-major matrix over F_q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws ShapeError if entries.size() != rows * cols.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> entries() const noexcept { return data_; }

  bool is_zero() const noexcept;

  /// Copies rows [first, first + count) and columns [col, col + ncols).
  Matrix block(std::size_t first, std::size_t count, std::size_t col, std::size_t ncols) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix transpose(const Matrix& a);
Matrix multiply(const Field& field, const Matrix& a, const Matrix& b);
Matrix vstack(std::span<const Matrix> blocks);
Matrix hstack(std::span<const Matrix> blocks);

/// Rank by Gaussian elimination, taking the first nonzero entry in each
/// column as pivot.
std::size_t rank(const Field& field, Matrix a);

/// The nonzero rows of the reduced row-echelon form of `a`.
Matrix rref(const Field& field, Matrix a);

/// True iff every row is nonzero, each leading entry is 1, leading columns
/// strictly increase, and every leading column is zero outside its row.
bool is_rref(const Field& field, const Matrix& a) noexcept;

/// Basis of the common kernel of `mats` (all with the same column count),
/// returned as the rows of a reduced row-echelon matrix. The number of rows is
/// cols - rank(vstack(mats)). Throws ShapeError on an empty or ragged input.
Matrix kernel_intersection(const Field& field, std::span<const Matrix> mats);

}  // namespace pencil
