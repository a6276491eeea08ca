#include "pencil/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <unordered_map>
#include <utility>

#include "pencil/census.hpp"
#include "pencil/error.hpp"
#include "pencil/smith.hpp"

namespace pencil {

std::string_view to_string(CensusMode mode) noexcept {
  switch (mode) {
    case CensusMode::Pencil: return "pencil";
    case CensusMode::Pair: return "pair";
    case CensusMode::Fiber: return "fiber";
    case CensusMode::Subspace: return "subspace";
    case CensusMode::Nilext: return "nilext";
  }
  return "pencil";
}

CensusMode parse_census_mode(std::string_view text) {
  for (auto mode : {CensusMode::Pencil, CensusMode::Pair, CensusMode::Fiber, CensusMode::Subspace,
                    CensusMode::Nilext}) {
    if (text == to_string(mode)) return mode;
  }
  throw Error(ErrorKind::ParseError, "unknown census mode '" + std::string(text) + "'");
}

Matrix matrix_from_index(const Field& field, std::size_t rows, std::size_t cols, std::uint64_t index) {
  std::vector<Elem> entries(rows * cols);
  const std::uint64_t q = field.q();
  for (auto& e : entries) {
    e = Elem{static_cast<std::uint16_t>(index % q)};
    index /= q;
  }
  return Matrix(rows, cols, std::move(entries));
}

namespace {

// q^entries, or BudgetExceeded once it passes the budget.
std::uint64_t space_size(const Field& field, std::uint64_t entries, std::uint64_t budget, std::string_view what) {
  std::uint64_t size = 1;
  for (std::uint64_t i = 0; i < entries; ++i) {
    size *= field.q();
    if (size > budget) {
      throw Error(ErrorKind::BudgetExceeded, std::string(what) + " needs more than " + std::to_string(budget) +
                                                 " evaluations; raise the budget to proceed");
    }
  }
  return size;
}

void check_shape(const EnumConfig& cfg) {
  if (cfg.k < 1 || cfg.n < cfg.k) {
    throw Error(ErrorKind::ShapeError, "enumeration needs n >= k >= 1");
  }
}

using Emit = std::function<void(const std::string&)>;
using Visitor = std::function<void(std::uint64_t, const Emit&)>;

// Splits [0, total) into contiguous chunks handed out to workers on demand.
// Each worker tallies privately; the merge is plain addition into a sorted
// map, so the result does not depend on scheduling or the worker count.
std::map<std::string, BigCount> parallel_tally(std::uint64_t total, const EnumConfig& cfg, const Visitor& visit) {
  unsigned workers = cfg.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.workers;
  const std::uint64_t chunk = std::max<std::uint64_t>(1, cfg.chunk_size);
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, chunks)));

  std::atomic<std::uint64_t> next{0};
  std::vector<std::unordered_map<std::string, std::uint64_t>> local(workers);
  std::vector<std::exception_ptr> failures(workers);

  auto work = [&](unsigned id) {
    try {
      auto& tally = local[id];
      const Emit emit = [&tally](const std::string& key) { ++tally[key]; };
      for (;;) {
        const std::uint64_t c = next.fetch_add(1);
        if (c >= chunks) break;
        const std::uint64_t end = std::min(total, (c + 1) * chunk);
        for (std::uint64_t i = c * chunk; i < end; ++i) visit(i, emit);
      }
    } catch (...) {
      failures[id] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned id = 0; id < workers; ++id) threads.emplace_back(work, id);
    for (auto& t : threads) t.join();
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  std::map<std::string, BigCount> merged;
  for (const auto& tally : local) {
    for (const auto& [key, count] : tally) merged[key] += BigCount(std::to_string(count));
  }
  return merged;
}

CensusReport make_report(const EnumConfig& cfg) {
  CensusReport report;
  report.params.census = std::string(to_string(cfg.mode));
  report.params.field = cfg.field.spec();
  report.params.n = cfg.n;
  report.params.k = cfg.k;
  report.source = Source::Enumerated;
  return report;
}

bool is_nilpotent(const Field& field, Matrix m) {
  // m^(2^s) with 2^s >= n vanishes iff m is nilpotent.
  for (std::size_t power = 1; power < m.rows(); power *= 2) {
    m = multiply(field, m, m);
    if (m.is_zero()) return true;
  }
  return m.is_zero();
}

}  // namespace

CensusReport enumerate_pencils(const EnumConfig& cfg) {
  check_shape(cfg);
  const auto total = space_size(cfg.field, std::uint64_t{cfg.n} * cfg.k, cfg.budget, "pencil census");
  auto report = make_report(cfg);
  report.params.census = "pencil";
  report.entries = parallel_tally(total, cfg, [&](std::uint64_t index, const Emit& emit) {
    const Matrix b = matrix_from_index(cfg.field, cfg.n, cfg.k, index);
    emit(to_key(cfg.field, pencil_invariant_factors(cfg.field, b)));
  });
  return report;
}

CensusReport enumerate_pairs(const EnumConfig& cfg) {
  check_shape(cfg);
  if (cfg.k >= cfg.n) throw Error(ErrorKind::ShapeError, "pair census needs k < n");
  const auto total = space_size(cfg.field, std::uint64_t{cfg.k} * cfg.n, cfg.budget, "pair census");
  auto report = make_report(cfg);
  report.params.census = "pair";
  const std::size_t k = cfg.k, m = cfg.n - cfg.k;
  report.entries = parallel_tally(total, cfg, [&](std::uint64_t index, const Emit& emit) {
    // [A | B] as one k x n matrix.
    const Matrix ab = matrix_from_index(cfg.field, k, cfg.n, index);
    emit(std::to_string(reachability_rank(cfg.field, ab.block(0, k, 0, k), ab.block(0, k, k, m))));
  });
  return report;
}

CensusReport enumerate_fibers(const EnumConfig& cfg) {
  check_shape(cfg);
  const auto total = space_size(cfg.field, std::uint64_t{cfg.n} * cfg.k, cfg.budget, "fiber census");
  auto report = make_report(cfg);
  report.params.census = "fiber";
  report.entries = parallel_tally(total, cfg, [&](std::uint64_t index, const Emit& emit) {
    const Matrix b = matrix_from_index(cfg.field, cfg.n, cfg.k, index);
    emit(to_string(cfg.field, pencil_invariant_factors(cfg.field, b).product(cfg.field)));
  });
  return report;
}

CensusReport enumerate_subspace_census(const EnumConfig& cfg) {
  check_shape(cfg);
  if (!cfg.subspace || cfg.subspace->cols() != cfg.k || !is_rref(cfg.field, *cfg.subspace)) {
    throw Error(ErrorKind::BadSubspace, "subspace census needs a reduced echelon basis with k columns");
  }
  const auto total = space_size(cfg.field, std::uint64_t{cfg.n} * cfg.k, cfg.budget, "subspace census");
  auto report = make_report(cfg);
  report.params.census = "subspace";
  report.params.subspace = matrix_to_json(*cfg.subspace);
  const Matrix& target = *cfg.subspace;
  report.entries = parallel_tally(total, cfg, [&](std::uint64_t index, const Emit& emit) {
    const Matrix b = matrix_from_index(cfg.field, cfg.n, cfg.k, index);
    const auto invariant = max_invariant_subspace(cfg.field, b);
    if (invariant.basis.rows() != target.rows() || !(invariant.basis == target)) return;
    emit(to_key(cfg.field, pencil_invariant_factors(cfg.field, b)));
  });
  return report;
}

NilextTally enumerate_nilpotent_extendable(const EnumConfig& cfg) {
  check_shape(cfg);
  // Budget covers the full q^{nk} x q^{n(n-k)} completion search.
  space_size(cfg.field, std::uint64_t{cfg.n} * cfg.n, cfg.budget, "nilpotent completion search");
  const auto total = space_size(cfg.field, std::uint64_t{cfg.n} * cfg.k, cfg.budget, "nilpotent completion search");
  const std::size_t n = cfg.n, k = cfg.k;
  const std::uint64_t completions = space_size(cfg.field, std::uint64_t{n} * (n - k), cfg.budget, "completions");
  const Poly x = Poly::x();

  const auto tally = parallel_tally(total, cfg, [&](std::uint64_t index, const Emit& emit) {
    const Matrix b = matrix_from_index(cfg.field, n, k, index);
    bool extendable = false;
    for (std::uint64_t c = 0; c < completions && !extendable; ++c) {
      const Matrix rest = matrix_from_index(cfg.field, n, n - k, c);
      const Matrix blocks[] = {b, rest};
      extendable = is_nilpotent(cfg.field, hstack(blocks));
    }
    const Poly product = pencil_invariant_factors(cfg.field, b).product(cfg.field);
    const bool criterion = divides(cfg.field, product, power(cfg.field, x, static_cast<unsigned>(n)));
    if (extendable) emit("completion");
    if (criterion) emit("criterion");
    if (extendable != criterion) emit("disagree");
  });

  NilextTally out;
  auto get = [&](const char* key) {
    const auto it = tally.find(key);
    return it == tally.end() ? BigCount(0) : it->second;
  };
  out.completion = get("completion");
  out.criterion = get("criterion");
  out.disagreements = get("disagree").get_ui();
  return out;
}

CensusReport enumerate(const EnumConfig& cfg) {
  switch (cfg.mode) {
    case CensusMode::Pencil: return enumerate_pencils(cfg);
    case CensusMode::Pair: return enumerate_pairs(cfg);
    case CensusMode::Fiber: return enumerate_fibers(cfg);
    case CensusMode::Subspace: return enumerate_subspace_census(cfg);
    case CensusMode::Nilext: {
      const auto tally = enumerate_nilpotent_extendable(cfg);
      auto report = make_report(cfg);
      if (tally.completion != 0) report.entries.emplace("extendable", tally.completion);
      if (tally.criterion != 0) report.entries.emplace("criterion", tally.criterion);
      return report;
    }
  }
  throw Error(ErrorKind::ParseError, "unknown census mode");
}

CensusReport closed_form(const EnumConfig& cfg) {
  check_shape(cfg);
  switch (cfg.mode) {
    case CensusMode::Pencil:
      return cfg.n == cfg.k ? class_census(cfg.field, cfg.n) : pencil_census(cfg.field, cfg.n, cfg.k);
    case CensusMode::Pair: return reachability_census(cfg.field, cfg.k, cfg.n);
    case CensusMode::Fiber: return fiber_census(cfg.field, cfg.n, cfg.k);
    case CensusMode::Subspace:
      if (!cfg.subspace) throw Error(ErrorKind::BadSubspace, "subspace census needs a subspace");
      return subspace_census(cfg.field, cfg.n, cfg.k, *cfg.subspace);
    case CensusMode::Nilext: return nilext_census(cfg.field, cfg.n, cfg.k);
  }
  throw Error(ErrorKind::ParseError, "unknown census mode");
}

std::vector<Matrix> all_subspaces(const Field& field, unsigned k, unsigned d) {
  std::vector<Matrix> out;
  if (d > k) return out;
  std::vector<std::size_t> pivots(d);
  for (std::size_t i = 0; i < d; ++i) pivots[i] = i;
  const std::uint64_t q = field.q();
  for (;;) {
    // Free slots: row i, columns right of its pivot that hold no pivot.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t c = pivots[i] + 1; c < k; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(i, c);
      }
    }
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free.size(); ++i) count *= q;
    for (std::uint64_t t = 0; t < count; ++t) {
      Matrix basis(d, k);
      for (std::size_t i = 0; i < d; ++i) basis(i, pivots[i]) = field.one();
      std::uint64_t v = t;
      for (const auto& [r, c] : free) {
        basis(r, c) = Elem{static_cast<std::uint16_t>(v % q)};
        v /= q;
      }
      out.push_back(std::move(basis));
    }
    // Next pivot set in lexicographic order.
    std::size_t pos = d;
    while (pos > 0 && pivots[pos - 1] == k - d + pos - 1) --pos;
    if (pos == 0) break;
    ++pivots[pos - 1];
    for (std::size_t j = pos; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

std::size_t DiffReport::mismatches() const noexcept {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.match; }));
}

DiffReport verify(const CensusReport& expected, const CensusReport& observed) {
  if (!(expected.params == observed.params)) {
    throw Error(ErrorKind::ParamMismatch, "reports describe different censuses");
  }
  DiffReport diff;
  auto e = expected.entries.begin();
  auto o = observed.entries.begin();
  while (e != expected.entries.end() || o != observed.entries.end()) {
    DiffEntry entry;
    if (o == observed.entries.end() || (e != expected.entries.end() && e->first < o->first)) {
      entry = {e->first, e->second, 0, false};
      ++e;
    } else if (e == expected.entries.end() || o->first < e->first) {
      entry = {o->first, 0, o->second, false};
      ++o;
    } else {
      entry = {e->first, e->second, o->second, e->second == o->second};
      ++e;
      ++o;
    }
    diff.entries.push_back(std::move(entry));
  }
  diff.verdict = diff.mismatches() == 0;
  return diff;
}

}  // namespace pencil
