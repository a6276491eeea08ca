#include "pencil/smith.hpp"

#include <algorithm>
#include <utility>

#include "pencil/error.hpp"

namespace pencil {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw Error(ErrorKind::ShapeError, "polynomial matrix entry count does not match its shape");
  }
}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void PolyMatrix::swap_cols(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

PolyMatrix pencil_matrix(const Field& field, const Matrix& b) {
  PolyMatrix out(b.rows(), b.cols());
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      std::vector<Elem> coeffs{field.neg(b(r, c))};
      if (r == c) coeffs.push_back(field.one());
      out(r, c) = Poly(std::move(coeffs));
    }
  }
  return out;
}

InvariantFactors::InvariantFactors(const Field& field, std::vector<Poly> polys) : polys_(std::move(polys)) {
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    if (!polys_[i].is_monic()) {
      throw Error(ErrorKind::NonMonic, "invariant factor " + to_string(field, polys_[i]) + " is not monic");
    }
    if (i > 0 && !divides(field, polys_[i - 1], polys_[i])) {
      throw Error(ErrorKind::NotChain,
                  to_string(field, polys_[i - 1]) + " does not divide " + to_string(field, polys_[i]));
    }
  }
}

int InvariantFactors::total_degree() const noexcept {
  int d = 0;
  for (const auto& p : polys_) d += p.degree();
  return d;
}

Poly InvariantFactors::product(const Field& field) const {
  Poly out = Poly::one();
  for (const auto& p : polys_) out = mul(field, out, p);
  return out;
}

std::string to_key(const Field& field, const InvariantFactors& factors, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += separator;
    out += to_string(field, factors[i]);
  }
  return out;
}

InvariantFactors parse_tuple(const Field& field, std::string_view text) {
  std::vector<Poly> polys;
  std::size_t start = 0;
  for (;;) {
    const auto bar = text.find('|', start);
    polys.push_back(parse_poly(field, text.substr(start, bar == std::string_view::npos ? bar : bar - start)));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return InvariantFactors(field, std::move(polys));
}

InvariantFactors SnfResult::invariant_factors(const Field& field) const {
  return InvariantFactors(field, std::vector<Poly>(diagonal.begin(), diagonal.begin() + rank));
}

SnfResult snf(const Field& field, PolyMatrix a) {
  const std::size_t n = a.rows(), k = a.cols();
  const std::size_t len = std::min(n, k);
  SnfResult result;
  result.diagonal.assign(len, Poly());

  std::size_t t = 0;
  for (; t < len; ++t) {
    for (;;) {
      // Nonzero entry of least degree in the trailing block, row-major ties.
      std::size_t pr = n, pc = k;
      int best = 0;
      for (std::size_t r = t; r < n; ++r) {
        for (std::size_t c = t; c < k; ++c) {
          const Poly& e = a(r, c);
          if (e.is_zero()) continue;
          if (pr == n || e.degree() < best) {
            pr = r;
            pc = c;
            best = e.degree();
          }
        }
      }
      if (pr == n) break;
      a.swap_rows(t, pr);
      a.swap_cols(t, pc);

      const Poly pivot = a(t, t);
      bool clean = true;
      for (std::size_t r = t + 1; r < n; ++r) {
        if (a(r, t).is_zero()) continue;
        auto [quotient, remainder] = divmod(field, a(r, t), pivot);
        for (std::size_t c = t + 1; c < k; ++c) {
          if (!a(t, c).is_zero()) a(r, c) = sub(field, a(r, c), mul(field, quotient, a(t, c)));
        }
        if (!remainder.is_zero()) clean = false;
        a(r, t) = std::move(remainder);
      }
      for (std::size_t c = t + 1; c < k; ++c) {
        if (a(t, c).is_zero()) continue;
        auto [quotient, remainder] = divmod(field, a(t, c), pivot);
        for (std::size_t r = t + 1; r < n; ++r) {
          if (!a(r, t).is_zero()) a(r, c) = sub(field, a(r, c), mul(field, quotient, a(r, t)));
        }
        if (!remainder.is_zero()) clean = false;
        a(t, c) = std::move(remainder);
      }
      if (clean) break;
    }
    if (a(t, t).is_zero()) break;
    result.diagonal[t] = make_monic(field, a(t, t));
  }
  result.rank = t;

  // Divisibility sweep: afterwards diagonal[i] | diagonal[j] for i < j.
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      Poly& di = result.diagonal[i];
      Poly& dj = result.diagonal[j];
      if (divides(field, di, dj)) continue;
      Poly g = gcd(field, di, dj);
      Poly l = exact_div(field, mul(field, di, dj), g);
      di = std::move(g);
      dj = std::move(l);
    }
  }
  return result;
}

namespace {

Poly cofactor_det(const Field& field, const PolyMatrix& a, std::vector<std::size_t>& rows,
                  std::vector<std::size_t>& cols) {
  const std::size_t m = rows.size();
  if (m == 0) return Poly::one();
  if (m == 1) return a(rows[0], cols[0]);
  // Expand along the first remaining row.
  const std::size_t r0 = rows.front();
  rows.erase(rows.begin());
  Poly det;
  for (std::size_t j = 0; j < m; ++j) {
    const Poly& entry = a(r0, cols[j]);
    if (entry.is_zero()) continue;
    const std::size_t col = cols[j];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(j));
    Poly term = mul(field, entry, cofactor_det(field, a, rows, cols));
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(j), col);
    det = (j % 2 == 0) ? add(field, det, term) : sub(field, det, term);
  }
  rows.insert(rows.begin(), r0);
  return det;
}

// Advances `idx` to the next i-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t i = idx.size();
  for (std::size_t pos = i; pos-- > 0;) {
    if (idx[pos] < n - i + pos) {
      ++idx[pos];
      for (std::size_t j = pos + 1; j < i; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Poly determinant(const Field& field, const PolyMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::ShapeError, "determinant of a non-square matrix");
  std::vector<std::size_t> rows(a.rows()), cols(a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = cols[i] = i;
  return cofactor_det(field, a, rows, cols);
}

Poly det_divisor(const Field& field, const PolyMatrix& a, std::size_t i) {
  if (i < 1 || i > std::min(a.rows(), a.cols())) {
    throw Error(ErrorKind::OutOfRange, "minor order " + std::to_string(i) + " out of range");
  }
  Poly g;
  std::vector<std::size_t> rows(i);
  for (std::size_t r = 0; r < i; ++r) rows[r] = r;
  do {
    std::vector<std::size_t> cols(i);
    for (std::size_t c = 0; c < i; ++c) cols[c] = c;
    do {
      auto rs = rows;
      auto cs = cols;
      const Poly minor = cofactor_det(field, a, rs, cs);
      if (!minor.is_zero()) {
        g = g.is_zero() ? make_monic(field, minor) : gcd(field, g, minor);
        if (g.is_one()) return g;
      }
    } while (next_combination(cols, a.cols()));
  } while (next_combination(rows, a.rows()));
  return g;
}

InvariantFactors pencil_invariant_factors(const Field& field, const Matrix& b) {
  if (b.cols() == 0 || b.rows() < b.cols()) {
    throw Error(ErrorKind::ShapeError, "pencil needs n >= k >= 1, got " + std::to_string(b.rows()) + "x" +
                                           std::to_string(b.cols()));
  }
  return snf(field, pencil_matrix(field, b)).invariant_factors(field);
}

InvariantSubspace max_invariant_subspace(const Field& field, const Matrix& a, const Matrix& c) {
  const std::size_t k = a.cols();
  if (a.rows() != k || c.cols() != k) {
    throw Error(ErrorKind::ShapeError, "max_invariant_subspace needs A k x k and C (n-k) x k");
  }
  std::vector<Matrix> blocks;
  blocks.reserve(k + 1);
  Matrix ca = c;
  blocks.push_back(ca);
  for (std::size_t i = 1; i < k; ++i) {
    ca = multiply(field, ca, a);
    blocks.push_back(ca);
  }
  if (blocks.empty()) blocks.emplace_back(0, k);
  Matrix basis = kernel_intersection(field, blocks);
  const std::size_t dim = basis.rows();
  return {dim, std::move(basis)};
}

InvariantSubspace max_invariant_subspace(const Field& field, const Matrix& b) {
  const std::size_t k = b.cols();
  if (b.rows() < k) throw Error(ErrorKind::ShapeError, "matrix has fewer rows than columns");
  return max_invariant_subspace(field, b.block(0, k, 0, k), b.block(k, b.rows() - k, 0, k));
}

Matrix reachability_matrix(const Field& field, const Matrix& a, const Matrix& b) {
  const std::size_t k = a.rows();
  if (k == 0 || a.cols() != k || b.rows() != k || b.cols() == 0) {
    throw Error(ErrorKind::ShapeError, "reachability needs A k x k and B k x m with k, m >= 1");
  }
  std::vector<Matrix> blocks;
  blocks.reserve(k);
  blocks.push_back(b);
  for (std::size_t i = 1; i < k; ++i) blocks.push_back(multiply(field, a, blocks.back()));
  return hstack(blocks);
}

std::size_t reachability_rank(const Field& field, const Matrix& a, const Matrix& b) {
  return rank(field, reachability_matrix(field, a, b));
}

}  // namespace pencil
