#include "pencil/gf.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

#include "pencil/error.hpp"

namespace pencil {

namespace {

using Digits = std::vector<std::uint32_t>;

// Minimal F_p[t] helpers used only while choosing and applying the modulus.

void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Digits fp_mod(Digits a, const Digits& b, std::uint32_t p) {
  // b is monic.
  trim(a);
  while (a.size() >= b.size()) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * static_cast<std::uint64_t>(b[i])) % p);
    }
    trim(a);
  }
  return a;
}

Digits digits_of(std::uint32_t value, std::uint32_t p, std::uint32_t len) {
  Digits d(len);
  for (std::uint32_t i = 0; i < len; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

std::uint32_t value_of(const Digits& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

bool fp_irreducible(const Digits& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t e = 1; 2 * e <= deg; ++e) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    for (std::uint32_t tail = 0; tail < count; ++tail) {
      Digits g = digits_of(tail, p, e);
      g.push_back(1);
      if (fp_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Smallest monic irreducible of degree m, coefficients compared from the
// highest degree down: counting `tail` upward visits them in that order
// because its most significant base-p digit is the t^(m-1) coefficient.
Digits smallest_irreducible(std::uint32_t p, std::uint32_t m, std::uint32_t q) {
  for (std::uint32_t tail = 0; tail < q; ++tail) {
    Digits f = digits_of(tail, p, m);
    f.push_back(1);
    if (fp_irreducible(f, p)) return f;
  }
  throw Error(ErrorKind::NotIrreducible, "no irreducible polynomial found");  // unreachable
}

std::uint64_t parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::ParseError, "bad integer '" + std::string(s) + "' in field spec");
  }
  return v;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
  if (!pencil::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorKind::OutOfRange, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw Error(ErrorKind::TooLarge, std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^16");
    }
  }
  q_ = static_cast<std::uint32_t>(q);
  if (m_ > 1) modulus_ = smallest_irreducible(p_, m_, q_);
  build_tables();
}

Field Field::parse(std::string_view spec) {
  spec = strip(spec);
  if (const auto caret = spec.find('^'); caret != std::string_view::npos) {
    const auto p = parse_uint(strip(spec.substr(0, caret)));
    const auto m = parse_uint(strip(spec.substr(caret + 1)));
    if (p > kMaxOrder || m > 16) throw Error(ErrorKind::TooLarge, std::string(spec) + " exceeds 2^16");
    return Field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m));
  }
  const auto q = parse_uint(spec);
  if (q > kMaxOrder) throw Error(ErrorKind::TooLarge, std::string(spec) + " exceeds 2^16");
  if (q < 2) throw Error(ErrorKind::NotPrime, std::string(spec) + " is not a prime power");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0;
  for (auto r = q; r > 1; r /= p) {
    if (r % p != 0) throw Error(ErrorKind::NotPrime, std::string(spec) + " is not a prime power");
    ++m;
  }
  return Field(static_cast<std::uint32_t>(p), m);
}

std::string Field::spec() const {
  if (m_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "^" + std::to_string(m_);
}

Elem Field::elem(std::uint64_t value) const {
  if (value >= q_) {
    throw Error(ErrorKind::OutOfRange,
                std::to_string(value) + " is not an element of F_" + std::to_string(q_));
  }
  return Elem{static_cast<std::uint16_t>(value)};
}

Elem Field::from_int(long long value) const noexcept {
  const long long p = p_;
  long long r = value % p;
  if (r < 0) r += p;
  return Elem{static_cast<std::uint16_t>(r)};
}

Elem Field::add(Elem a, Elem b) const noexcept {
  if (m_ == 1) {
    const std::uint32_t s = std::uint32_t{a.value} + b.value;
    return Elem{static_cast<std::uint16_t>(s >= p_ ? s - p_ : s)};
  }
  if (p_ == 2) return Elem{static_cast<std::uint16_t>(a.value ^ b.value)};
  std::uint32_t x = a.value, y = b.value, out = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return Elem{static_cast<std::uint16_t>(out)};
}

Elem Field::neg(Elem a) const noexcept {
  if (m_ == 1) return Elem{static_cast<std::uint16_t>(a.value == 0 ? 0 : p_ - a.value)};
  if (p_ == 2) return a;
  std::uint32_t x = a.value, out = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return Elem{static_cast<std::uint16_t>(out)};
}

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const noexcept {
  if (m_ == 1) {
    return Elem{static_cast<std::uint16_t>((std::uint32_t{a.value} * b.value) % p_)};
  }
  if (a.value == 0 || b.value == 0) return zero();
  return Elem{exp_[log_[a.value] + log_[b.value]]};
}

Elem Field::inv(Elem a) const {
  if (a.value == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return Elem{inv_[a.value]};
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Elem Field::mul_by_reduction(Elem a, Elem b) const noexcept {
  const Digits x = digits_of(a.value, p_, m_);
  const Digits y = digits_of(b.value, p_, m_);
  Digits prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    for (std::uint32_t j = 0; j < m_; ++j) {
      prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    }
  }
  return Elem{static_cast<std::uint16_t>(value_of(fp_mod(std::move(prod), modulus_, p_), p_))};
}

void Field::build_tables() {
  inv_.assign(q_, 0);
  if (m_ == 1) {
    for (std::uint32_t a = 1; a < q_; ++a) {
      // a^(p-2) by square-and-multiply in 64-bit arithmetic.
      std::uint64_t r = 1, base = a, e = p_ - 2;
      while (e > 0) {
        if (e & 1) r = r * base % p_;
        base = base * base % p_;
        e >>= 1;
      }
      inv_[a] = static_cast<std::uint16_t>(r);
    }
    return;
  }
  // Search for a primitive element, then fill log/antilog tables from it.
  const std::uint32_t order = q_ - 1;
  exp_.assign(2 * order, 0);
  log_.assign(q_, 0);
  for (std::uint32_t g = 2; g < q_; ++g) {
    Elem x = one();
    std::uint32_t i = 0;
    bool primitive = true;
    for (; i < order; ++i) {
      exp_[i] = x.value;
      x = mul_by_reduction(x, Elem{static_cast<std::uint16_t>(g)});
      if (x == one() && i + 1 < order) {
        primitive = false;
        break;
      }
    }
    if (primitive) break;
  }
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i + order] = exp_[i];
    log_[exp_[i]] = i;
  }
  for (std::uint32_t a = 1; a < q_; ++a) {
    inv_[a] = exp_[(order - log_[a]) % order];
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw Error(ErrorKind::ShapeError, "matrix entry count does not match its shape");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Elem{1};
  return m;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e.value == 0; });
}

Matrix Matrix::block(std::size_t first, std::size_t count, std::size_t col, std::size_t ncols) const {
  if (first + count > rows_ || col + ncols > cols_) {
    throw Error(ErrorKind::ShapeError, "block lies outside the matrix");
  }
  Matrix out(count, ncols);
  for (std::size_t r = 0; r < count; ++r) {
    for (std::size_t c = 0; c < ncols; ++c) out(r, c) = (*this)(first + r, col + c);
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
  }
  return t;
}

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeError, "inner dimensions differ");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Elem x = a(i, l);
      if (x.value == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = field.add(out(i, j), field.mul(x, b(l, j)));
      }
    }
  }
  return out;
}

Matrix vstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) return {};
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error(ErrorKind::ShapeError, "vstack: column counts differ");
    rows += b.rows();
  }
  std::vector<Elem> entries;
  entries.reserve(rows * cols);
  for (const auto& b : blocks) entries.insert(entries.end(), b.entries().begin(), b.entries().end());
  return Matrix(rows, cols, std::move(entries));
}

Matrix hstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) return {};
  const std::size_t rows = blocks.front().rows();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw Error(ErrorKind::ShapeError, "hstack: row counts differ");
    cols += b.cols();
  }
  Matrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, offset + c) = b(r, c);
    }
    offset += b.cols();
  }
  return out;
}

namespace {

// Reduces `a` in place to reduced row-echelon form and returns its rank.
std::size_t eliminate(const Field& field, Matrix& a) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < a.rows() && a(r, col).value == 0) ++r;
    if (r == a.rows()) continue;
    if (r != pivot_row) {
      auto x = a.row(r), y = a.row(pivot_row);
      std::swap_ranges(x.begin(), x.end(), y.begin());
    }
    const Elem scale = field.inv(a(pivot_row, col));
    for (auto& e : a.row(pivot_row)) e = field.mul(e, scale);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == pivot_row || a(i, col).value == 0) continue;
      const Elem factor = a(i, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        a(i, c) = field.sub(a(i, c), field.mul(factor, a(pivot_row, c)));
      }
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

std::size_t rank(const Field& field, Matrix a) { return eliminate(field, a); }

Matrix rref(const Field& field, Matrix a) {
  const std::size_t r = eliminate(field, a);
  return a.block(0, r, 0, a.cols());
}

bool is_rref(const Field& field, const Matrix& a) noexcept {
  std::size_t last_lead = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::size_t lead = 0;
    while (lead < a.cols() && a(r, lead).value == 0) ++lead;
    if (lead == a.cols()) return false;
    if (a(r, lead) != field.one()) return false;
    if (r > 0 && lead <= last_lead) return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != r && a(i, lead).value != 0) return false;
    }
    last_lead = lead;
  }
  return true;
}

Matrix kernel_intersection(const Field& field, std::span<const Matrix> mats) {
  if (mats.empty()) throw Error(ErrorKind::ShapeError, "kernel_intersection needs at least one matrix");
  Matrix stacked = vstack(mats);
  const std::size_t k = stacked.cols();
  const std::size_t r = eliminate(field, stacked);

  std::vector<std::size_t> pivot_col(r);
  std::vector<bool> is_pivot(k, false);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t c = 0;
    while (stacked(i, c).value == 0) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }

  Matrix basis(k - r, k);
  std::size_t row = 0;
  for (std::size_t free = 0; free < k; ++free) {
    if (is_pivot[free]) continue;
    basis(row, free) = field.one();
    for (std::size_t i = 0; i < r; ++i) basis(row, pivot_col[i]) = field.neg(stacked(i, free));
    ++row;
  }
  return rref(field, std::move(basis));
}

}  // namespace pencil
