#include "pencil/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "pencil/error.hpp"

namespace pencil {

Poly::Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().value == 0) c_.pop_back();
}

Poly Poly::constant(Elem c) { return Poly(std::vector<Elem>{c}); }

Poly Poly::monomial(Elem c, int degree) {
  if (c.value == 0 || degree < 0) return Poly();
  std::vector<Elem> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return Poly(std::move(coeffs));
}

Poly Poly::x() { return monomial(Elem{1}, 1); }

bool CanonicalLess::operator()(const Poly& a, const Poly& b) const noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto ca = a.coeffs(), cb = b.coeffs();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

Poly add(const Field& field, const Poly& a, const Poly& b) {
  const auto n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Elem> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = field.add(a.coeff(i), b.coeff(i));
  return Poly(std::move(out));
}

Poly neg(const Field& field, const Poly& a) {
  std::vector<Elem> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& e : out) e = field.neg(e);
  return Poly(std::move(out));
}

Poly sub(const Field& field, const Poly& a, const Poly& b) {
  const auto n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Elem> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = field.sub(a.coeff(i), b.coeff(i));
  return Poly(std::move(out));
}

Poly mul(const Field& field, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const auto ca = a.coeffs(), cb = b.coeffs();
  std::vector<Elem> out(ca.size() + cb.size() - 1);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i].value == 0) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      out[i + j] = field.add(out[i + j], field.mul(ca[i], cb[j]));
    }
  }
  return Poly(std::move(out));
}

Poly scale(const Field& field, const Poly& a, Elem c) {
  std::vector<Elem> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& e : out) e = field.mul(e, c);
  return Poly(std::move(out));
}

Poly power(const Field& field, const Poly& a, unsigned e) {
  Poly result = Poly::one();
  Poly base = a;
  while (e > 0) {
    if (e & 1u) result = mul(field, result, base);
    e >>= 1;
    if (e > 0) base = mul(field, base, base);
  }
  return result;
}

Poly make_monic(const Field& field, const Poly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return scale(field, a, field.inv(a.lead()));
}

DivMod divmod(const Field& field, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Elem> r(a.coeffs().begin(), a.coeffs().end());
  const auto cb = b.coeffs();
  const std::size_t db = cb.size() - 1;
  const Elem lead_inv = field.inv(b.lead());
  std::vector<Elem> quot(r.size() - db);
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i].value == 0) continue;
    const Elem factor = field.mul(r[i], lead_inv);
    quot[i - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) {
      r[i - db + j] = field.sub(r[i - db + j], field.mul(factor, cb[j]));
    }
  }
  r.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(r))};
}

Poly rem(const Field& field, const Poly& a, const Poly& b) { return divmod(field, a, b).remainder; }

Poly exact_div(const Field& field, const Poly& a, const Poly& b) {
  auto [quotient, remainder] = divmod(field, a, b);
  if (!remainder.is_zero()) {
    throw Error(ErrorKind::DegreeMismatch, to_string(field, b) + " does not divide " + to_string(field, a));
  }
  return quotient;
}

bool divides(const Field& field, const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.is_zero();
  return rem(field, b, a).is_zero();
}

Poly gcd(const Field& field, const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::BothZero, "gcd(0, 0) is undefined");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = rem(field, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(field, x);
}

Poly lcm(const Field& field, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::ZeroArgument, "lcm of the zero polynomial");
  return make_monic(field, exact_div(field, mul(field, a, b), gcd(field, a, b)));
}

std::vector<Poly> monic_polys(const Field& field, int d) {
  if (d < 0) return {};
  const std::uint64_t q = field.q();
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= q;
  std::vector<Poly> out;
  out.reserve(count);
  std::vector<Elem> coeffs(static_cast<std::size_t>(d) + 1);
  coeffs.back() = field.one();
  for (std::uint64_t t = 0; t < count; ++t) {
    // c_0 is the most significant digit so that t order is canonical order.
    std::uint64_t v = t;
    for (int i = d - 1; i >= 0; --i) {
      coeffs[static_cast<std::size_t>(i)] = Elem{static_cast<std::uint16_t>(v % q)};
      v /= q;
    }
    out.emplace_back(coeffs);
  }
  return out;
}

namespace {

struct Sieve {
  int bound = 0;
  std::shared_ptr<const std::vector<Poly>> irreducibles = std::make_shared<const std::vector<Poly>>();
};

std::shared_ptr<const std::vector<Poly>> shared_sieve(const Field& field, int d) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, Sieve> cache;

  std::lock_guard lock(mutex);
  Sieve& sieve = cache[{field.p(), field.m()}];
  if (sieve.bound >= d) return sieve.irreducibles;

  auto found = std::make_shared<std::vector<Poly>>(*sieve.irreducibles);
  for (int e = sieve.bound + 1; e <= d; ++e) {
    for (auto& candidate : monic_polys(field, e)) {
      bool irreducible = true;
      for (const auto& f : *found) {
        if (2 * f.degree() > e) break;
        if (divides(field, f, candidate)) {
          irreducible = false;
          break;
        }
      }
      if (irreducible) found->push_back(std::move(candidate));
    }
  }
  sieve.bound = d;
  sieve.irreducibles = std::move(found);
  return sieve.irreducibles;
}

}  // namespace

std::vector<Poly> irreducibles_up_to(const Field& field, int d) {
  if (d < 1) return {};
  const auto sieve = shared_sieve(field, d);
  std::vector<Poly> out;
  for (const auto& f : *sieve) {
    if (f.degree() > d) break;
    out.push_back(f);
  }
  return out;
}

Factorization factorize(const Field& field, const Poly& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroArgument, "cannot factor the zero polynomial");
  Factorization result{g.lead(), {}};
  Poly h = make_monic(field, g);
  if (h.degree() >= 2) {
    const auto sieve = shared_sieve(field, h.degree() / 2);
    for (const auto& f : *sieve) {
      if (2 * f.degree() > h.degree()) break;
      unsigned e = 0;
      for (;;) {
        auto [quotient, remainder] = divmod(field, h, f);
        if (!remainder.is_zero()) break;
        h = std::move(quotient);
        ++e;
      }
      if (e > 0) result.factors.push_back({f, e});
    }
  }
  if (h.degree() > 0) result.factors.push_back({std::move(h), 1});
  std::sort(result.factors.begin(), result.factors.end(),
            [](const Factor& a, const Factor& b) { return CanonicalLess{}(a.factor, b.factor); });
  return result;
}

Poly expand(const Field& field, const Factorization& f) {
  Poly out = Poly::constant(f.unit);
  for (const auto& [factor, e] : f.factors) out = mul(field, out, power(field, factor, e));
  return out;
}

bool is_irreducible(const Field& field, const Poly& f) {
  if (f.degree() < 1) return false;
  const auto fac = factorize(field, f);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

unsigned nu(const Field& field, const Poly& f, const Poly& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroArgument, "nu of the zero polynomial");
  if (!f.is_monic() || !is_irreducible(field, f)) {
    throw Error(ErrorKind::NotIrreducible, to_string(field, f) + " is not monic irreducible");
  }
  unsigned e = 0;
  Poly h = g;
  for (;;) {
    auto [quotient, remainder] = divmod(field, h, f);
    if (!remainder.is_zero()) return e;
    h = std::move(quotient);
    ++e;
  }
}

std::string to_string(const Field& field, const Poly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  const auto c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].value == 0) continue;
    if (!out.empty()) out += '+';
    const std::string coeff =
        field.is_prime() ? std::to_string(c[i].value) : "[" + std::to_string(c[i].value) + "]";
    if (i == 0) {
      out += coeff;
      continue;
    }
    if (c[i].value != 1) out += coeff + "*";
    out += 'x';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(const Field& field, std::string_view text) : field_(field), text_(text) {}

  Poly parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    std::vector<Elem> coeffs;
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = get() == '-';
    }
    for (;;) {
      auto [c, degree] = term();
      if (negate) c = field_.neg(c);
      if (coeffs.size() <= degree) coeffs.resize(degree + 1);
      coeffs[degree] = field_.add(coeffs[degree], c);
      skip_space();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      negate = op == '-';
    }
    return Poly(std::move(coeffs));
  }

 private:
  std::pair<Elem, std::size_t> term() {
    skip_space();
    Elem c = field_.one();
    bool have_coeff = false;
    if (!at_end() && (peek() == '[' || std::isdigit(static_cast<unsigned char>(peek())))) {
      c = coefficient();
      have_coeff = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        get();
        skip_space();
        if (at_end() || peek() != 'x') fail("expected 'x' after '*'");
      }
    }
    if (at_end() || peek() != 'x') {
      if (!have_coeff) fail("expected a term");
      return {c, 0};
    }
    get();
    skip_space();
    std::size_t degree = 1;
    if (!at_end() && peek() == '^') {
      get();
      skip_space();
      degree = integer();
    }
    return {c, degree};
  }

  Elem coefficient() {
    const bool bracket = peek() == '[';
    if (bracket) {
      get();
      skip_space();
    }
    const std::size_t v = integer();
    if (bracket) {
      skip_space();
      if (at_end() || get() != ']') fail("missing ']'");
    }
    if (v >= field_.q()) fail("coefficient " + std::to_string(v) + " outside F_" + std::to_string(field_.q()));
    return Elem{static_cast<std::uint16_t>(v)};
  }

  std::size_t integer() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::size_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::size_t>(get() - '0');
      if (v > (1u << 20)) fail("integer too large");
    }
    return v;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError,
                "cannot parse polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  const Field& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const Field& field, std::string_view text) { return PolyParser(field, text).parse(); }

}  // namespace pencil
