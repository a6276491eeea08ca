#include "pencil/census.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "pencil/error.hpp"

namespace pencil {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  std::erase(parts_, 0u);
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

unsigned Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

Partition conjugate(const Partition& lambda) {
  std::vector<unsigned> out(lambda.empty() ? 0 : lambda[0]);
  for (unsigned i = 1; i <= out.size(); ++i) {
    unsigned count = 0;
    for (unsigned part : lambda.parts()) count += part >= i ? 1 : 0;
    out[i - 1] = count;
  }
  return Partition(std::move(out));
}

BigCount q_power(unsigned q, unsigned e) {
  BigCount out;
  mpz_ui_pow_ui(out.get_mpz_t(), q, e);
  return out;
}

BigCount falling_product(unsigned q, unsigned n, unsigned lo, unsigned hi) {
  BigCount out = 1;
  const BigCount qn = q_power(q, n);
  for (unsigned i = lo; i <= hi; ++i) out *= qn - q_power(q, i);
  return out;
}

BigCount centralizer_factor(const Partition& lambda, unsigned d, unsigned q) {
  const Partition dual = conjugate(lambda);
  BigCount out = 1;
  unsigned h = 0;
  for (std::size_t i = 0; i < dual.length(); ++i) {
    h += dual[i];
    const unsigned m = dual[i] - dual[i + 1];
    for (unsigned j = 1; j <= m; ++j) out *= q_power(q, d * h) - q_power(q, d * (h - j));
  }
  return out;
}

BigCount gl_order(unsigned n, unsigned q) {
  if (n == 0) return 1;
  return falling_product(q, n, 0, n - 1);
}

BigCount q_binomial(unsigned k, unsigned d, unsigned q) {
  if (d > k) return 0;
  BigCount num = 1, den = 1;
  for (unsigned i = 0; i < d; ++i) {
    num *= q_power(q, k - i) - 1;
    den *= q_power(q, d - i) - 1;
  }
  return num / den;
}

PhiProfile phi_profile(const Field& field, const InvariantFactors& factors) {
  PhiProfile out;
  if (factors.size() == 0) return out;
  const Poly product = factors.product(field);
  for (const auto& [f, e] : factorize(field, product).factors) {
    std::vector<unsigned> parts;
    for (std::size_t i = factors.size(); i-- > 0;) {
      const unsigned v = nu(field, f, factors[i]);
      if (v == 0) break;
      parts.push_back(v);
    }
    out.emplace(f, Partition(std::move(parts)));
  }
  return out;
}

namespace {

// |GL_d| / prod_f c_f(Phi_I(f)), the number of d x d matrices whose
// invariant factors are the nonunit part of I.
BigCount class_size(const Field& field, unsigned d, const InvariantFactors& factors) {
  BigCount denominator = 1;
  for (const auto& [f, lambda] : phi_profile(field, factors)) {
    denominator *= centralizer_factor(lambda, static_cast<unsigned>(f.degree()), field.q());
  }
  const BigCount numerator = gl_order(d, field.q());
  if (numerator % denominator != 0) throw std::logic_error("class size is not an integer");
  return numerator / denominator;
}

}  // namespace

BigCount count_conjugacy_class(const Field& field, const InvariantFactors& factors) {
  const auto n = static_cast<unsigned>(factors.size());
  if (factors.total_degree() != static_cast<int>(n)) return 0;
  return class_size(field, n, factors);
}

BigCount count_with_subspace(const Field& field, unsigned n, unsigned k, unsigned d,
                             const InvariantFactors& factors) {
  if (factors.size() != k) throw Error(ErrorKind::ShapeError, "tuple length differs from k");
  if (d > k || k > n) throw Error(ErrorKind::OutOfRange, "need d <= k <= n");
  if (factors.total_degree() != static_cast<int>(d)) {
    throw Error(ErrorKind::DegreeMismatch, "tuple degree " + std::to_string(factors.total_degree()) +
                                               " differs from d = " + std::to_string(d));
  }
  return class_size(field, d, factors) * falling_product(field.q(), n, d + 1, k);
}

BigCount count_invariant_factors(const Field& field, unsigned n, unsigned k, const InvariantFactors& factors) {
  if (factors.size() != k) throw Error(ErrorKind::ShapeError, "tuple length differs from k");
  if (k > n) throw Error(ErrorKind::OutOfRange, "need k <= n");
  const int d = factors.total_degree();
  if (d > static_cast<int>(k)) return 0;
  const auto ud = static_cast<unsigned>(d);
  return q_binomial(k, ud, field.q()) * count_with_subspace(field, n, k, ud, factors);
}

BigCount count_given_subspace(unsigned n, unsigned k, unsigned d, unsigned q) {
  if (d > k || k > n) throw Error(ErrorKind::OutOfRange, "need d <= k <= n");
  return q_power(q, d * d) * falling_product(q, n, d + 1, k);
}

BigCount count_reachability(unsigned k, unsigned n, unsigned r, unsigned q) {
  if (r > k || k >= n) throw Error(ErrorKind::OutOfRange, "need r <= k < n");
  return q_binomial(k, r, q) * q_power(q, (k - r) * (k - r)) * falling_product(q, n, k - r + 1, k);
}

namespace {

// F(q, r) = prod_{i=1}^{r} (1 - q^{-i}).
mpq_class f_product(const BigCount& q, unsigned r) {
  mpq_class out = 1;
  BigCount qi = 1;
  for (unsigned i = 1; i <= r; ++i) {
    qi *= q;
    out *= mpq_class(qi - 1, qi);
  }
  out.canonicalize();
  return out;
}

// q^{d^2 - d} F(q, d) / prod_i F(q^{d_i}, e_i) for f of degree d.
BigCount gerstenhaber_reiner(const Field& field, const Poly& f) {
  if (!f.is_monic()) throw Error(ErrorKind::NonMonic, to_string(field, f) + " is not monic");
  const auto d = static_cast<unsigned>(f.degree());
  const unsigned q = field.q();
  mpq_class value(q_power(q, d * d - d));
  value *= f_product(q, d);
  for (const auto& [g, e] : factorize(field, f).factors) {
    value /= f_product(q_power(q, static_cast<unsigned>(g.degree())), e);
  }
  value.canonicalize();
  if (value.get_den() != 1) throw std::logic_error("Gerstenhaber-Reiner quotient is not an integer");
  return value.get_num();
}

}  // namespace

BigCount count_char_poly_square(const Field& field, const Poly& f) { return gerstenhaber_reiner(field, f); }

BigCount count_char_poly_rect(const Field& field, const Poly& f, unsigned n, unsigned k) {
  if (!f.is_monic()) throw Error(ErrorKind::NonMonic, to_string(field, f) + " is not monic");
  const auto d = static_cast<unsigned>(f.degree());
  if (d > k) throw Error(ErrorKind::DegreeTooLarge, "deg f exceeds k");
  if (k > n) throw Error(ErrorKind::OutOfRange, "need k <= n");
  return q_binomial(k, d, field.q()) * gerstenhaber_reiner(field, f) * falling_product(field.q(), n, d + 1, k);
}

BigCount count_nilpotent_extendable(unsigned k, unsigned n, unsigned q) {
  if (k < 1 || k > n) throw Error(ErrorKind::OutOfRange, "need 1 <= k <= n");
  return q_power(q, n * (k - 1)) * (q_power(q, n) - q_power(q, k) + 1);
}

BigCount nilpotent_extendable_by_fibers(const Field& field, unsigned k, unsigned n) {
  if (k < 1 || k > n) throw Error(ErrorKind::OutOfRange, "need 1 <= k <= n");
  BigCount total = 0;
  for (unsigned l = 0; l <= k; ++l) {
    total += count_char_poly_rect(field, Poly::monomial(field.one(), static_cast<int>(l)), n, k);
  }
  return total;
}

bool check_q_identity(unsigned d, unsigned q, const mpz_class& y) {
  BigCount lhs;
  mpz_pow_ui(lhs.get_mpz_t(), y.get_mpz_t(), d);
  BigCount rhs = 0;
  for (unsigned j = 0; j <= d; ++j) {
    BigCount term = q_power(q, j * j) * q_binomial(d, j, q);
    for (unsigned i = j + 1; i <= d; ++i) term *= y - q_power(q, i);
    rhs += term;
  }
  return lhs == rhs;
}

namespace {

// Weakly increasing exponent sequences of length k summing to e.
void exponent_chains(unsigned e, unsigned k, std::vector<std::vector<unsigned>>& out) {
  std::vector<unsigned> chain(k, 0);
  std::function<void(unsigned, unsigned, unsigned)> fill = [&](unsigned pos, unsigned remaining,
                                                               unsigned max_part) {
    // Fill from the top (pos counts down) so parts are non-increasing downward.
    if (pos == 0) {
      if (remaining == 0) out.push_back(chain);
      return;
    }
    const unsigned hi = std::min(remaining, max_part);
    for (unsigned v = hi + 1; v-- > 0;) {
      if (static_cast<std::uint64_t>(v) * pos < remaining) break;
      chain[pos - 1] = v;
      fill(pos - 1, remaining - v, v);
    }
    chain[pos - 1] = 0;
  };
  fill(k, e, e);
}

}  // namespace

std::vector<InvariantFactors> tuples_with_product(const Field& field, const Poly& f, unsigned k) {
  if (!f.is_monic()) throw Error(ErrorKind::NonMonic, to_string(field, f) + " is not monic");
  if (k == 0) return f.is_one() ? std::vector<InvariantFactors>{InvariantFactors()} : std::vector<InvariantFactors>{};
  const auto factorization = factorize(field, f);

  std::vector<std::vector<Poly>> partial{std::vector<Poly>(k, Poly::one())};
  for (const auto& [g, e] : factorization.factors) {
    std::vector<std::vector<unsigned>> chains;
    exponent_chains(e, k, chains);
    std::vector<std::vector<Poly>> next;
    for (const auto& base : partial) {
      for (const auto& chain : chains) {
        auto tuple = base;
        for (unsigned i = 0; i < k; ++i) {
          if (chain[i] > 0) tuple[i] = mul(field, tuple[i], power(field, g, chain[i]));
        }
        next.push_back(std::move(tuple));
      }
    }
    partial = std::move(next);
  }
  std::vector<InvariantFactors> out;
  out.reserve(partial.size());
  for (auto& tuple : partial) out.emplace_back(field, std::move(tuple));
  return out;
}

std::vector<InvariantFactors> invariant_factor_tuples(const Field& field, unsigned k, unsigned max_degree) {
  std::vector<InvariantFactors> out;
  for (unsigned d = 0; d <= max_degree; ++d) {
    for (const auto& f : monic_polys(field, static_cast<int>(d))) {
      auto tuples = tuples_with_product(field, f, k);
      std::move(tuples.begin(), tuples.end(), std::back_inserter(out));
    }
  }
  return out;
}

namespace {

CensusReport make_report(std::string census, const Field& field, unsigned n, unsigned k) {
  CensusReport report;
  report.params.census = std::move(census);
  report.params.field = field.spec();
  report.params.n = n;
  report.params.k = k;
  report.source = Source::ClosedForm;
  return report;
}

void put(CensusReport& report, std::string key, BigCount value) {
  if (value != 0) report.entries.emplace(std::move(key), std::move(value));
}

}  // namespace

CensusReport class_census(const Field& field, unsigned n) {
  auto report = make_report("pencil", field, n, n);
  for (const auto& f : monic_polys(field, static_cast<int>(n))) {
    for (const auto& tuple : tuples_with_product(field, f, n)) {
      put(report, to_key(field, tuple), count_conjugacy_class(field, tuple));
    }
  }
  return report;
}

CensusReport pencil_census(const Field& field, unsigned n, unsigned k) {
  if (k < 1 || k > n) throw Error(ErrorKind::OutOfRange, "need 1 <= k <= n");
  auto report = make_report("pencil", field, n, k);
  for (const auto& tuple : invariant_factor_tuples(field, k, k)) {
    put(report, to_key(field, tuple), count_invariant_factors(field, n, k, tuple));
  }
  return report;
}

CensusReport subspace_census(const Field& field, unsigned n, unsigned k, const Matrix& subspace_basis) {
  if (k < 1 || k > n) throw Error(ErrorKind::OutOfRange, "need 1 <= k <= n");
  if (subspace_basis.cols() != k || !is_rref(field, subspace_basis)) {
    throw Error(ErrorKind::BadSubspace, "subspace basis must be a reduced echelon matrix with k columns");
  }
  auto report = make_report("subspace", field, n, k);
  report.params.subspace = matrix_to_json(subspace_basis);
  const auto d = static_cast<unsigned>(subspace_basis.rows());
  for (const auto& f : monic_polys(field, static_cast<int>(d))) {
    for (const auto& tuple : tuples_with_product(field, f, k)) {
      put(report, to_key(field, tuple), count_with_subspace(field, n, k, d, tuple));
    }
  }
  return report;
}

CensusReport given_subspace_census(const Field& field, unsigned n, unsigned k) {
  auto report = make_report("given-subspace", field, n, k);
  for (unsigned d = 0; d <= k; ++d) put(report, std::to_string(d), count_given_subspace(n, k, d, field.q()));
  return report;
}

CensusReport reachability_census(const Field& field, unsigned k, unsigned n) {
  auto report = make_report("pair", field, n, k);
  for (unsigned r = 0; r <= k; ++r) put(report, std::to_string(r), count_reachability(k, n, r, field.q()));
  return report;
}

CensusReport fiber_census(const Field& field, unsigned n, unsigned k) {
  if (k < 1 || k > n) throw Error(ErrorKind::OutOfRange, "need 1 <= k <= n");
  auto report = make_report("fiber", field, n, k);
  if (n == k) {
    for (const auto& f : monic_polys(field, static_cast<int>(n))) {
      put(report, to_string(field, f), count_char_poly_square(field, f));
    }
    return report;
  }
  for (unsigned d = 0; d <= k; ++d) {
    for (const auto& f : monic_polys(field, static_cast<int>(d))) {
      put(report, to_string(field, f), count_char_poly_rect(field, f, n, k));
    }
  }
  return report;
}

CensusReport nilext_census(const Field& field, unsigned n, unsigned k) {
  auto report = make_report("nilext", field, n, k);
  put(report, "extendable", count_nilpotent_extendable(k, n, field.q()));
  put(report, "criterion", nilpotent_extendable_by_fibers(field, k, n));
  return report;
}

}  // namespace pencil
