#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pencil/gf.hpp"

namespace pencil {

/// Degree reported for the zero polynomial.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

/// Dense univariate polynomial over F_q, constant term first. The highest
/// stored coefficient is always nonzero, so the zero polynomial is empty.
/// Like Elem, a Poly does not carry its field.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs);

  static Poly constant(Elem c);
  static Poly monomial(Elem c, int degree);
  /// The indeterminate x.
  static Poly x();
  static Poly one() { return constant(Elem{1}); }

  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
  Elem lead() const noexcept { return c_.empty() ? Elem{} : c_.back(); }
  /// Coefficient of x^i, zero past the degree.
  Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Elem{}; }
  std::span<const Elem> coeffs() const noexcept { return c_; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back().value == 1; }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0].value == 1; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<Elem> c_;
};

/// Canonical order: degree ascending, then coefficients compared
/// lexicographically from the constant term up.
struct CanonicalLess {
  bool operator()(const Poly& a, const Poly& b) const noexcept;
};

Poly add(const Field& field, const Poly& a, const Poly& b);
Poly sub(const Field& field, const Poly& a, const Poly& b);
Poly neg(const Field& field, const Poly& a);
Poly mul(const Field& field, const Poly& a, const Poly& b);
Poly scale(const Field& field, const Poly& a, Elem c);
Poly power(const Field& field, const Poly& a, unsigned e);
/// Divides by the leading coefficient; the zero polynomial stays zero.
Poly make_monic(const Field& field, const Poly& a);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// a = quotient * b + remainder with deg remainder < deg b.
/// Throws DivisionByZero if b is zero.
DivMod divmod(const Field& field, const Poly& a, const Poly& b);
Poly rem(const Field& field, const Poly& a, const Poly& b);
/// Exact quotient; throws DegreeMismatch if b does not divide a.
Poly exact_div(const Field& field, const Poly& a, const Poly& b);
/// True iff a divides b (b = 0 is divisible by everything).
bool divides(const Field& field, const Poly& a, const Poly& b);

/// Monic gcd by Euclid's algorithm. Throws BothZero if a = b = 0.
Poly gcd(const Field& field, const Poly& a, const Poly& b);
/// Monic lcm of two nonzero polynomials.
Poly lcm(const Field& field, const Poly& a, const Poly& b);

struct Factor {
  Poly factor;
  unsigned multiplicity = 0;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// unit * prod factor^multiplicity, with factors monic, irreducible,
/// distinct and in canonical order.
struct Factorization {
  Elem unit;
  std::vector<Factor> factors;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Complete factorization by trial division against the irreducible sieve.
/// Throws ZeroArgument for the zero polynomial.
Factorization factorize(const Field& field, const Poly& g);
/// Multiplies a factorization back out.
Poly expand(const Field& field, const Factorization& f);

bool is_irreducible(const Field& field, const Poly& f);

/// Largest e with f^e | g. Throws ZeroArgument if g = 0 and NotIrreducible
/// unless f is monic irreducible.
unsigned nu(const Field& field, const Poly& f, const Poly& g);

/// All monic irreducibles of degree 1..d in canonical order. The sieve is
/// computed once per field and extended on demand; concurrent callers share
/// it read-only.
std::vector<Poly> irreducibles_up_to(const Field& field, int d);

/// All q^d monic polynomials of degree d, in canonical order.
std::vector<Poly> monic_polys(const Field& field, int d);

/// Text form such as "x^3+2*x+1". Extension-field coefficients print as
/// their canonical integer in brackets: "[3]*x^2+[1]". A coefficient of 1 on
/// a non-constant term is omitted; the zero polynomial prints as "0".
std::string to_string(const Field& field, const Poly& a);

/// Inverse of to_string. Also accepts '-' between terms, whitespace, bare
/// integers in extension fields and repeated degrees (which add up).
/// Throws ParseError.
Poly parse_poly(const Field& field, std::string_view text);

}  // namespace pencil
