#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pencil/gf.hpp"
#include "pencil/report.hpp"

namespace pencil {

enum class CensusMode { Pencil, Pair, Fiber, Subspace, Nilext };

std::string_view to_string(CensusMode mode) noexcept;
/// Accepts "pencil", "pair", "fiber", "subspace", "nilext". Throws ParseError.
CensusMode parse_census_mode(std::string_view text);

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

struct EnumConfig {
  Field field{2};
  unsigned n = 1;
  unsigned k = 1;
  CensusMode mode = CensusMode::Pencil;
  /// Reduced echelon basis of the fixed subspace U of F_q^k (subspace mode).
  std::optional<Matrix> subspace;
  /// 0 means one worker per hardware thread.
  unsigned workers = 1;
  std::uint64_t chunk_size = 1024;
  /// Upper bound on the number of matrices evaluated.
  std::uint64_t budget = kDefaultBudget;
};

/// The rows x cols matrix whose row-major entry i is base-q digit i of
/// `index` (digit 0 least significant).
Matrix matrix_from_index(const Field& field, std::size_t rows, std::size_t cols, std::uint64_t index);

/// Tallies every B in M_{n,k}(F_q) by its invariant-factor key.
CensusReport enumerate_pencils(const EnumConfig& cfg);
/// Tallies every pair (A, B) in M_k x M_{k,n-k} by the rank of its
/// reachability matrix. Requires k < n.
CensusReport enumerate_pairs(const EnumConfig& cfg);
/// Tallies every B in M_{n,k}(F_q) by delta_k of its pencil.
CensusReport enumerate_fibers(const EnumConfig& cfg);
/// Tallies by invariant-factor key the B whose maximal invariant subspace is
/// exactly cfg.subspace. Throws BadSubspace.
CensusReport enumerate_subspace_census(const EnumConfig& cfg);

struct NilextTally {
  /// B with some completion [B | X] in M_n(F_q) that is nilpotent.
  BigCount completion;
  /// B whose product of invariant factors divides x^n.
  BigCount criterion;
  /// Matrices on which the two memberships differ.
  std::uint64_t disagreements = 0;
};

/// Completion search over all q^{n(n-k)} completions of each B, alongside
/// the divisibility criterion, matrix by matrix.
NilextTally enumerate_nilpotent_extendable(const EnumConfig& cfg);

/// Runs the enumeration selected by cfg.mode. The nilext report has entries
/// "extendable" (completion search) and "criterion".
CensusReport enumerate(const EnumConfig& cfg);

/// The closed-form census with the same params as enumerate(cfg).
CensusReport closed_form(const EnumConfig& cfg);

/// All d-dimensional subspaces of F_q^k as reduced echelon bases.
std::vector<Matrix> all_subspaces(const Field& field, unsigned k, unsigned d);

struct DiffEntry {
  std::string key;
  BigCount expected;
  BigCount observed;
  bool match = false;
};

struct DiffReport {
  std::vector<DiffEntry> entries;
  bool verdict = false;

  std::size_t mismatches() const noexcept;
};

/// Key-by-key comparison; a key missing on one side counts as zero there.
/// Throws ParamMismatch if the reports do not describe the same census.
DiffReport verify(const CensusReport& expected, const CensusReport& observed);

}  // namespace pencil
