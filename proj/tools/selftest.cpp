#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "cli.hpp"
#include "pencil/census.hpp"
#include "pencil/gf.hpp"
#include "pencil/poly.hpp"
#include "pencil/smith.hpp"

namespace pencil::cli {

namespace {

using Rng = std::mt19937_64;

Elem random_elem(const Field& f, Rng& rng) {
  return Elem{static_cast<std::uint16_t>(std::uniform_int_distribution<std::uint32_t>(0, f.q() - 1)(rng))};
}

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_elem(f, rng);
  return m;
}

Poly random_poly(const Field& f, int degree, Rng& rng) {
  std::vector<Elem> c(static_cast<std::size_t>(degree) + 1);
  for (auto& e : c) e = random_elem(f, rng);
  if (c.back().value == 0) c.back() = f.one();
  return Poly(std::move(c));
}

const std::vector<Field>& fields() {
  static const std::vector<Field> all{Field(2), Field(3), Field(5), Field(2, 2), Field(3, 2), Field(2, 4)};
  return all;
}

// Each suite returns the number of failed checks.
std::size_t field_axioms(Rng&, unsigned) {
  std::size_t bad = 0;
  for (const Field& f : fields()) {
    if (f.q() > 16) continue;
    for (std::uint32_t a = 0; a < f.q(); ++a) {
      const Elem ea{static_cast<std::uint16_t>(a)};
      if (f.add(ea, f.neg(ea)) != f.zero()) ++bad;
      if (a != 0 && f.mul(ea, f.inv(ea)) != f.one()) ++bad;
      for (std::uint32_t b = 0; b < f.q(); ++b) {
        const Elem eb{static_cast<std::uint16_t>(b)};
        if (f.mul(ea, eb) != f.mul(eb, ea)) ++bad;
        for (std::uint32_t c = 0; c < f.q(); ++c) {
          const Elem ec{static_cast<std::uint16_t>(c)};
          if (f.mul(ea, f.add(eb, ec)) != f.add(f.mul(ea, eb), f.mul(ea, ec))) ++bad;
          if (f.mul(f.mul(ea, eb), ec) != f.mul(ea, f.mul(eb, ec))) ++bad;
        }
      }
    }
  }
  return bad;
}

std::size_t rank_transpose(Rng& rng, unsigned samples) {
  std::size_t bad = 0;
  for (unsigned s = 0; s < samples; ++s) {
    const Field& f = fields()[s % fields().size()];
    const auto rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    const Matrix m = random_matrix(f, rows, cols, rng);
    if (rank(f, m) != rank(f, transpose(m))) ++bad;
  }
  return bad;
}

std::size_t rank_nullity(Rng& rng, unsigned samples) {
  std::size_t bad = 0;
  for (unsigned s = 0; s < samples; ++s) {
    const Field& f = fields()[s % fields().size()];
    const auto cols = 1 + rng() % 6;
    std::vector<Matrix> mats;
    const auto count = 1 + rng() % 3;
    for (std::size_t i = 0; i < count; ++i) mats.push_back(random_matrix(f, 1 + rng() % 4, cols, rng));
    const Matrix basis = kernel_intersection(f, mats);
    const std::size_t r = rank(f, vstack(mats));
    if (basis.rows() + r != cols) ++bad;
    for (const Matrix& m : mats)
      if (basis.rows() > 0 && !multiply(f, m, transpose(basis)).is_zero()) ++bad;
  }
  return bad;
}

std::size_t factor_roundtrip(Rng& rng, unsigned samples) {
  std::size_t bad = 0;
  for (unsigned s = 0; s < samples; ++s) {
    const Field& f = fields()[s % fields().size()];
    const Poly g = scale(f, random_poly(f, static_cast<int>(rng() % 9), rng), Elem{static_cast<std::uint16_t>(1 + rng() % (f.q() - 1))});
    const Factorization fac = factorize(f, g);
    if (expand(f, fac) != g) ++bad;
    for (const auto& [p, e] : fac.factors)
      if (!p.is_monic() || !is_irreducible(f, p) || e == 0) ++bad;
  }
  return bad;
}

std::size_t snf_minors(Rng& rng, unsigned samples) {
  std::size_t bad = 0;
  for (unsigned s = 0; s < samples; ++s) {
    const Field& f = fields()[s % 3];
    const auto k = 1 + rng() % 3, n = k + rng() % 2;
    const PolyMatrix pm = pencil_matrix(f, random_matrix(f, n, k, rng));
    const SnfResult res = snf(f, pm);
    Poly prev = Poly::one();
    for (std::size_t i = 1; i <= k; ++i) {
      const Poly d = det_divisor(f, pm, i);
      if (exact_div(f, d, prev) != res.diagonal[i - 1]) ++bad;
      prev = d;
    }
  }
  return bad;
}

std::size_t q_identity(Rng& rng, unsigned samples) {
  std::size_t bad = 0;
  std::uniform_int_distribution<long long> pick(-100000, 100000);
  for (unsigned s = 0; s < samples; ++s) {
    const unsigned q = 2 + static_cast<unsigned>(rng() % 8);
    const unsigned d = static_cast<unsigned>(rng() % 7);
    if (!check_q_identity(d, q, mpz_class(std::to_string(pick(rng))))) ++bad;
  }
  return bad;
}

}  // namespace

int run_selftest(const SelftestOptions& options, std::ostream& out) {
  struct Suite {
    const char* name;
    std::function<std::size_t(Rng&, unsigned)> body;
  };
  const std::vector<Suite> suites{
      {"field axioms (exhaustive, q <= 16)", field_axioms},
      {"rank(M) = rank(M^T)", rank_transpose},
      {"rank-nullity of common kernels", rank_nullity},
      {"factorization round-trip", factor_roundtrip},
      {"SNF diagonal = ratios of determinantal divisors", snf_minors},
      {"q-binomial power identity", q_identity},
  };
  int failed = 0;
  Rng rng(options.seed);
  for (const auto& suite : suites) {
    const std::size_t bad = suite.body(rng, options.samples);
    out << (bad == 0 ? "PASS " : "FAIL ") << suite.name;
    if (bad != 0) out << " (" << bad << " failures)";
    out << '\n';
    if (bad != 0) ++failed;
  }
  out << "seed " << options.seed << ", " << suites.size() - failed << "/" << suites.size() << " suites passed\n";
  return failed;
}

}  // namespace pencil::cli
