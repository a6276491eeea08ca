#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pencil/gf.hpp"
#include "pencil/poly.hpp"

namespace pencil {

/// Row-major matrix over F_q[x].
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws ShapeError if entries.size() != rows * cols.
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Poly& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) noexcept;
  void swap_cols(std::size_t a, std::size_t b) noexcept;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> data_;
};

/// The pencil x*I_{n,k} - B for an n x k scalar matrix B.
PolyMatrix pencil_matrix(const Field& field, const Matrix& b);

/// A chain p_1 | p_2 | ... | p_k of monic polynomials.
class InvariantFactors {
 public:
  InvariantFactors() = default;
  /// Throws NonMonic if some entry is not monic and NotChain if p_i does not
  /// divide p_{i+1}.
  InvariantFactors(const Field& field, std::vector<Poly> polys);

  std::size_t size() const noexcept { return polys_.size(); }
  const Poly& operator[](std::size_t i) const noexcept { return polys_[i]; }
  const std::vector<Poly>& polys() const noexcept { return polys_; }
  auto begin() const noexcept { return polys_.begin(); }
  auto end() const noexcept { return polys_.end(); }

  /// deg(p_1 ... p_k).
  int total_degree() const noexcept;
  Poly product(const Field& field) const;

  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;

 private:
  std::vector<Poly> polys_;
};

/// Census key "p_1|p_2|...|p_k" in the polynomial text format.
std::string to_key(const Field& field, const InvariantFactors& factors, std::string_view separator = "|");
/// Parses a '|'-separated tuple; throws ParseError, NonMonic or NotChain.
InvariantFactors parse_tuple(const Field& field, std::string_view text);

struct SnfResult {
  /// min(rows, cols) entries: the monic invariant factors followed by zeros.
  std::vector<Poly> diagonal;
  /// Number of nonzero diagonal entries.
  std::size_t rank = 0;

  InvariantFactors invariant_factors(const Field& field) const;
};

/// Diagonal of the Smith normal form.
///
/// Each pivot is the nonzero entry of least degree in the remaining block
/// (first in row-major order on ties). Its column and row are cleared by
/// division with remainder, and a fresh pivot is chosen whenever a nonzero
/// remainder survives. A final gcd/lcm sweep over the diagonal enforces
/// p_i | p_{i+1}.
SnfResult snf(const Field& field, PolyMatrix a);

/// Determinant by cofactor expansion; for square matrices only.
Poly determinant(const Field& field, const PolyMatrix& a);

/// delta_i: monic gcd of all i x i minors, or zero if they all vanish.
/// Cost grows with the number of minors times i!, so this is intended for
/// min(rows, cols) <= 6. Throws OutOfRange unless 1 <= i <= min(rows, cols).
Poly det_divisor(const Field& field, const PolyMatrix& a, std::size_t i);

/// The k invariant factors of x*I_{n,k} - B. Throws ShapeError if n < k or
/// k = 0.
InvariantFactors pencil_invariant_factors(const Field& field, const Matrix& b);

struct InvariantSubspace {
  std::size_t dimension = 0;
  /// Reduced row-echelon basis, one vector of F_q^k per row.
  Matrix basis;
};

/// Largest subspace of W = F_q^k carried into itself by the map with matrix
/// [A; C] (A is k x k, C is (n-k) x k): the common kernel of C A^i for
/// 0 <= i < k.
InvariantSubspace max_invariant_subspace(const Field& field, const Matrix& a, const Matrix& c);
/// Same, splitting an n x k matrix into its top k rows and the rest.
InvariantSubspace max_invariant_subspace(const Field& field, const Matrix& b);

/// [B AB ... A^(k-1)B] for A k x k and B k x m.
Matrix reachability_matrix(const Field& field, const Matrix& a, const Matrix& b);
/// Rank of the reachability matrix; the pair is reachable iff it equals k.
std::size_t reachability_rank(const Field& field, const Matrix& a, const Matrix& b);

}  // namespace pencil
