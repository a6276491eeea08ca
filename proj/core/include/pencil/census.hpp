#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "pencil/gf.hpp"
#include "pencil/poly.hpp"
#include "pencil/report.hpp"
#include "pencil/smith.hpp"

namespace pencil {

/// A weakly decreasing sequence of positive integers. The empty partition
/// is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Sorts descending and drops zero parts.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  /// Sum of the parts.
  unsigned size() const noexcept;
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  /// The i-th part (0-based), zero past the end.
  unsigned operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
};

Partition conjugate(const Partition& lambda);

/// q^e.
BigCount q_power(unsigned q, unsigned e);
/// prod_{i=lo}^{hi} (q^n - q^i); 1 when lo > hi.
BigCount falling_product(unsigned q, unsigned n, unsigned lo, unsigned hi);

/// c_f(lambda) for an irreducible f of degree d:
///   prod_{i>=1} prod_{j=1}^{m_i} (q^{d h_i} - q^{d (h_i - j)})
/// with m_i = lambda'_i - lambda'_{i+1} and h_i = lambda'_1 + ... + lambda'_i.
/// It depends on f only through d.
BigCount centralizer_factor(const Partition& lambda, unsigned d, unsigned q);

/// |GL_n(F_q)|, with |GL_0| = 1.
BigCount gl_order(unsigned n, unsigned q);

/// Gaussian binomial [k choose d]_q; zero when d > k.
BigCount q_binomial(unsigned k, unsigned d, unsigned q);

using PhiProfile = std::map<Poly, Partition, CanonicalLess>;

/// For every monic irreducible f dividing p_1 ... p_k, the partition
/// (nu_f(p_k), nu_f(p_{k-1}), ...) cut at its first zero.
PhiProfile phi_profile(const Field& field, const InvariantFactors& factors);

/// Size of the conjugacy class in M_n(F_q) with invariant factors `factors`
/// (n = factors.size()); zero if their degrees do not sum to n.
BigCount count_conjugacy_class(const Field& field, const InvariantFactors& factors);

/// Number of maps T: W -> V (dim W = k, dim V = n) whose maximal invariant
/// subspace is a fixed d-dimensional U and whose invariant factors are
/// `factors`. Throws DegreeMismatch if deg(p_1...p_k) != d, ShapeError if
/// factors.size() != k and OutOfRange unless d <= k <= n.
BigCount count_with_subspace(const Field& field, unsigned n, unsigned k, unsigned d,
                             const InvariantFactors& factors);

/// N_q(n, k; I): the number of B in M_{n,k}(F_q) whose pencil has invariant
/// factors I; zero when deg(p_1...p_k) > k. Throws ShapeError if
/// factors.size() != k, OutOfRange if k > n.
BigCount count_invariant_factors(const Field& field, unsigned n, unsigned k, const InvariantFactors& factors);

/// Number of T with maximal invariant subspace equal to a fixed d-dimensional
/// U: q^{d^2} prod_{i=d+1}^{k} (q^n - q^i). Throws OutOfRange unless
/// d <= k <= n.
BigCount count_given_subspace(unsigned n, unsigned k, unsigned d, unsigned q);

/// Number of pairs (A, B) in M_k x M_{k,n-k} with rank [B AB ... A^{k-1}B] = r.
/// Throws OutOfRange unless r <= k < n.
BigCount count_reachability(unsigned k, unsigned n, unsigned r, unsigned q);

/// Number of n x n matrices with characteristic polynomial f (n = deg f).
/// Throws NonMonic.
BigCount count_char_poly_square(const Field& field, const Poly& f);

/// Number of B in M_{n,k}(F_q) with delta_k(x I_{n,k} - B) = f. Throws
/// NonMonic, DegreeTooLarge if deg f > k and OutOfRange if k > n.
BigCount count_char_poly_rect(const Field& field, const Poly& f, unsigned n, unsigned k);

/// q^{n(k-1)} (q^n - q^k + 1): maps W -> V that extend to a nilpotent
/// operator on V. Throws OutOfRange unless 1 <= k <= n.
BigCount count_nilpotent_extendable(unsigned k, unsigned n, unsigned q);

/// The same count assembled as sum_{l=0}^{k} count_char_poly_rect(x^l).
BigCount nilpotent_extendable_by_fibers(const Field& field, unsigned k, unsigned n);

/// Evaluates both sides of
///   y^d = sum_{j=0}^{d} q^{j^2} [d choose j]_q prod_{i=j+1}^{d} (y - q^i)
/// exactly at the integer y and reports whether they agree.
bool check_q_identity(unsigned d, unsigned q, const mpz_class& y);

/// Every chain p_1 | ... | p_k of monic polynomials with p_1 ... p_k = f.
std::vector<InvariantFactors> tuples_with_product(const Field& field, const Poly& f, unsigned k);

/// Every chain of length k whose product has degree at most max_degree.
std::vector<InvariantFactors> invariant_factor_tuples(const Field& field, unsigned k, unsigned max_degree);

// Closed-form censuses. Zero entries are omitted so that key sets line up with
// the enumeration oracle.

/// Conjugacy classes of M_n, keyed by tuple (census "pencil" with n = k).
CensusReport class_census(const Field& field, unsigned n);
/// N_q(n, k; I) for every tuple I (census "pencil").
CensusReport pencil_census(const Field& field, unsigned n, unsigned k);
/// N(V, W, U; I) for every tuple, for the subspace U whose reduced echelon
/// basis is given (census "subspace"). Throws BadSubspace.
CensusReport subspace_census(const Field& field, unsigned n, unsigned k, const Matrix& subspace_basis);
/// count_given_subspace keyed by d (census "given-subspace").
CensusReport given_subspace_census(const Field& field, unsigned n, unsigned k);
/// count_reachability keyed by r (census "pair").
CensusReport reachability_census(const Field& field, unsigned k, unsigned n);
/// count_char_poly_rect keyed by f, over all monic f of degree <= k
/// (census "fiber"); with n = k this is the square-matrix formula.
CensusReport fiber_census(const Field& field, unsigned n, unsigned k);
/// Entries "extendable" (closed form) and "criterion" (the same count summed
/// over the fibers of x^l) (census "nilext").
CensusReport nilext_census(const Field& field, unsigned n, unsigned k);

}  // namespace pencil
