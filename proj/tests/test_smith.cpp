#include "helpers.hpp"

#include "pencil/oracle.hpp"
#include "pencil/smith.hpp"

using namespace pencil;
using pencil::test::kind_of;
using pencil::test::mat;
using pencil::test::P;

namespace {

PolyMatrix pm(const Field& f, std::size_t rows, std::size_t cols, std::initializer_list<const char*> entries) {
  std::vector<Poly> v;
  for (const char* e : entries) v.push_back(P(f, e));
  return PolyMatrix(rows, cols, std::move(v));
}

Matrix inverse(const Field& f, const Matrix& a) {
  const std::vector<Matrix> blocks{a, Matrix::identity(a.rows())};
  const Matrix r = rref(f, hstack(blocks));
  REQUIRE(r.rows() == a.rows());
  REQUIRE(r.block(0, a.rows(), 0, a.cols()) == Matrix::identity(a.rows()));
  return r.block(0, a.rows(), a.cols(), a.cols());
}

void check_chain(const Field& f, const std::vector<Poly>& diagonal, std::size_t rank) {
  for (std::size_t i = 0; i < rank; ++i) {
    CHECK(diagonal[i].is_monic());
    if (i + 1 < rank) CHECK(divides(f, diagonal[i], diagonal[i + 1]));
  }
  for (std::size_t i = rank; i < diagonal.size(); ++i) CHECK(diagonal[i].is_zero());
}

}  // namespace

TEST_SUITE("smith") {
  TEST_CASE("snf examples") {
    const Field f2(2);
    {
      const auto r = snf(f2, pm(f2, 2, 2, {"x", "0", "0", "x^2"}));
      CHECK(r.rank == 2);
      CHECK(r.diagonal == std::vector<Poly>{P(f2, "x"), P(f2, "x^2")});
    }
    {
      const auto r = snf(f2, pm(f2, 2, 2, {"x", "0", "0", "x+1"}));
      CHECK(r.diagonal == std::vector<Poly>{Poly::one(), P(f2, "x^2+x")});
    }
    {
      const auto r = snf(f2, PolyMatrix(2, 3));
      CHECK(r.rank == 0);
      CHECK(r.diagonal.size() == 2);
      CHECK(r.diagonal[0].is_zero());
      CHECK(r.diagonal[1].is_zero());
    }
    {
      // Rank deficient: second row is x times the first.
      const Field f3(3);
      const auto r = snf(f3, pm(f3, 2, 2, {"x+1", "2", "x^2+x", "2*x"}));
      CHECK(r.rank == 1);
      CHECK(r.diagonal[0] == Poly::one());
      CHECK(r.diagonal[1].is_zero());
    }
    CHECK(snf(f2, PolyMatrix(0, 0)).diagonal.empty());
  }

  TEST_CASE("determinantal divisors") {
    const Field f2(2);
    CHECK(det_divisor(f2, pm(f2, 1, 2, {"x", "x^2"}), 1) == P(f2, "x"));
    CHECK(det_divisor(f2, pm(f2, 2, 2, {"x", "0", "0", "x+1"}), 2) == P(f2, "x^2+x"));
    CHECK(det_divisor(f2, PolyMatrix(2, 2), 1).is_zero());
    CHECK(kind_of([&] { det_divisor(f2, pm(f2, 1, 1, {"x"}), 0); }) == ErrorKind::OutOfRange);
    CHECK(kind_of([&] { det_divisor(f2, PolyMatrix(2, 2), 3); }) == ErrorKind::OutOfRange);
    CHECK(determinant(f2, pm(f2, 2, 2, {"x", "1", "1", "x"})) == P(f2, "x^2+1"));
    CHECK(kind_of([&] { determinant(f2, PolyMatrix(2, 3)); }) == ErrorKind::ShapeError);
  }

  TEST_CASE("pencil invariant factors examples") {
    const Field f2(2);
    CHECK(pencil_invariant_factors(f2, Matrix(2, 2)).polys() == std::vector<Poly>{P(f2, "x"), P(f2, "x")});
    CHECK(pencil_invariant_factors(f2, mat(f2, 2, 1, {0, 1})).polys() == std::vector<Poly>{Poly::one()});
    CHECK(pencil_invariant_factors(f2, mat(f2, 2, 1, {1, 1})).polys() == std::vector<Poly>{Poly::one()});
    CHECK(pencil_invariant_factors(f2, mat(f2, 2, 1, {1, 0})).polys() == std::vector<Poly>{P(f2, "x+1")});
    CHECK(pencil_invariant_factors(f2, mat(f2, 2, 1, {0, 0})).polys() == std::vector<Poly>{P(f2, "x")});
    CHECK(kind_of([&] { pencil_invariant_factors(f2, Matrix(1, 2)); }) == ErrorKind::ShapeError);
    CHECK(kind_of([&] { pencil_invariant_factors(f2, Matrix(2, 0)); }) == ErrorKind::ShapeError);
  }

  TEST_CASE("invariant factor tuples") {
    const Field f3(3);
    const InvariantFactors t(f3, {Poly::one(), P(f3, "x"), P(f3, "x^2+x")});
    CHECK(t.total_degree() == 3);
    CHECK(t.product(f3) == P(f3, "x^3+x^2"));
    CHECK(to_key(f3, t) == "1|x|x^2+x");
    CHECK(to_key(f3, t, " | ") == "1 | x | x^2+x");
    CHECK(parse_tuple(f3, "1|x|x^2+x") == t);
    CHECK(parse_tuple(f3, "1 | x | x^2+x") == t);
    CHECK(kind_of([&] { InvariantFactors(f3, {P(f3, "x"), P(f3, "x+1")}); }) == ErrorKind::NotChain);
    CHECK(kind_of([&] { InvariantFactors(f3, {P(f3, "2*x")}); }) == ErrorKind::NonMonic);
    CHECK(kind_of([&] { parse_tuple(f3, "x|x+"); }) == ErrorKind::ParseError);
  }

  TEST_CASE("snf against determinantal divisor quotients, exhaustive") {
    for (const auto& [f, n, k] : std::vector<std::tuple<Field, unsigned, unsigned>>{
             {Field(2), 2, 2}, {Field(2), 3, 2}, {Field(2), 3, 3}, {Field(3), 2, 2}, {Field(3), 3, 1}, {Field(2, 2), 2, 2}}) {
      std::uint64_t total = 1;
      for (unsigned i = 0; i < n * k; ++i) total *= f.q();
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        const Matrix b = matrix_from_index(f, n, k, idx);
        const PolyMatrix a = pencil_matrix(f, b);
        const SnfResult r = snf(f, a);
        REQUIRE(r.rank == k);
        check_chain(f, r.diagonal, r.rank);
        Poly prev = Poly::one();
        for (std::size_t i = 1; i <= k; ++i) {
          const Poly d = det_divisor(f, a, i);
          CHECK(exact_div(f, d, prev) == r.diagonal[i - 1]);
          prev = d;
        }
        if (n == k) CHECK(r.invariant_factors(f).product(f) == determinant(f, a));
      }
    }
  }

  TEST_CASE("snf on random general polynomial matrices") {
    std::mt19937_64 rng(5);
    for (const Field& f : {Field(2), Field(3)}) {
      const auto pool = monic_polys(f, 2);
      for (int t = 0; t < 150; ++t) {
        const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
        std::vector<Poly> entries;
        for (std::size_t i = 0; i < rows * cols; ++i)
          entries.push_back(rng() % 4 == 0 ? Poly() : pool[rng() % pool.size()]);
        const PolyMatrix a(rows, cols, entries);
        const SnfResult r = snf(f, a);
        check_chain(f, r.diagonal, r.rank);
        Poly prev = Poly::one();
        for (std::size_t i = 1; i <= std::min(rows, cols); ++i) {
          const Poly d = det_divisor(f, a, i);
          if (d.is_zero()) {
            CHECK(i > r.rank);
            continue;
          }
          CHECK(exact_div(f, d, prev) == r.diagonal[i - 1]);
          prev = d;
        }
      }
    }
  }

  TEST_CASE("maximal invariant subspace examples") {
    const Field f2(2);
    {
      const auto u = max_invariant_subspace(f2, mat(f2, 2, 2, {1, 1, 0, 1}), Matrix(1, 2));
      CHECK(u.dimension == 2);
      CHECK(u.basis == Matrix::identity(2));
    }
    {
      const auto u = max_invariant_subspace(f2, Matrix(2, 2), Matrix::identity(2));
      CHECK(u.dimension == 0);
    }
    {
      // B = [[0,0],[0,0],[0,1]]: e_1 is fixed inside W, e_2 leaves W.
      const auto u = max_invariant_subspace(f2, mat(f2, 3, 2, {0, 0, 0, 0, 0, 1}));
      CHECK(u.dimension == 1);
      CHECK(u.basis == mat(f2, 1, 2, {1, 0}));
    }
    CHECK(kind_of([&] { max_invariant_subspace(f2, Matrix(2, 2), Matrix(1, 3)); }) == ErrorKind::ShapeError);
    CHECK(kind_of([&] { max_invariant_subspace(f2, Matrix(2, 3), Matrix(1, 3)); }) == ErrorKind::ShapeError);
  }

  TEST_CASE("reachability examples") {
    const Field f2(2);
    CHECK(reachability_rank(f2, Matrix::identity(2), Matrix(2, 1)) == 0);
    CHECK(reachability_rank(f2, mat(f2, 1, 1, {1}), mat(f2, 1, 1, {1})) == 1);
    CHECK(reachability_rank(f2, mat(f2, 2, 2, {0, 0, 1, 0}), mat(f2, 2, 1, {1, 0})) == 2);
    CHECK(reachability_matrix(f2, mat(f2, 2, 2, {0, 0, 1, 0}), mat(f2, 2, 1, {1, 0})) ==
          mat(f2, 2, 2, {1, 0, 0, 1}));
    CHECK(kind_of([&] { reachability_rank(f2, Matrix(2, 2), Matrix(3, 1)); }) == ErrorKind::ShapeError);
    CHECK(kind_of([&] { reachability_rank(f2, Matrix(2, 3), Matrix(2, 1)); }) == ErrorKind::ShapeError);
  }

  TEST_CASE("dim of maximal invariant subspace is the degree of the product") {
    for (const auto& [f, n, k] :
         std::vector<std::tuple<Field, unsigned, unsigned>>{{Field(2), 3, 2}, {Field(2), 4, 2}, {Field(3), 3, 2}, {Field(2), 3, 3}}) {
      std::uint64_t total = 1;
      for (unsigned i = 0; i < n * k; ++i) total *= f.q();
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        const Matrix b = matrix_from_index(f, n, k, idx);
        const auto factors = pencil_invariant_factors(f, b);
        const auto u = max_invariant_subspace(f, b);
        CHECK(u.dimension == static_cast<std::size_t>(factors.total_degree()));
        CHECK(u.basis.rows() == u.dimension);
        if (u.dimension > 0) {
          CHECK(is_rref(f, u.basis));
          // T maps U into U: the image of each basis vector has no component outside W
          // and lies in the row space of the basis.
          const Matrix image = transpose(multiply(f, b, transpose(u.basis)));
          CHECK(image.block(0, image.rows(), k, n - k).is_zero());
          const std::vector<Matrix> both{u.basis, image.block(0, image.rows(), 0, k)};
          CHECK(rank(f, vstack(both)) == u.dimension);
        }
      }
    }
  }

  TEST_CASE("reachability rank is dual to the invariant subspace") {
    for (const auto& [f, k, n] : std::vector<std::tuple<Field, unsigned, unsigned>>{{Field(2), 2, 3}, {Field(2), 2, 4}, {Field(3), 2, 3}, {Field(2), 3, 4}}) {
      std::uint64_t total = 1;
      for (unsigned i = 0; i < k * n; ++i) total *= f.q();
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        const Matrix ab = matrix_from_index(f, k, n, idx);
        const Matrix a = ab.block(0, k, 0, k), b = ab.block(0, k, k, n - k);
        const auto u = max_invariant_subspace(f, transpose(a), transpose(b));
        CHECK(reachability_rank(f, a, b) == k - u.dimension);
      }
    }
  }

  TEST_CASE("invariant factors do not depend on the basis") {
    std::mt19937_64 rng(17);
    for (const auto& [f, n, k] : std::vector<std::tuple<Field, unsigned, unsigned>>{
             {Field(2), 4, 2}, {Field(3), 3, 2}, {Field(5), 4, 3}, {Field(2, 2), 3, 2}, {Field(2), 5, 5}}) {
      for (int t = 0; t < 60; ++t) {
        // P preserves W = span(e_1..e_k): block upper triangular with invertible diagonal blocks.
        Matrix p;
        do {
          p = pencil::test::random_matrix(f, n, n, rng);
          for (unsigned r = k; r < n; ++r)
            for (unsigned c = 0; c < k; ++c) p(r, c) = f.zero();
        } while (rank(f, p) != n);
        const Matrix b = pencil::test::random_matrix(f, n, k, rng);
        const Matrix changed = multiply(f, multiply(f, inverse(f, p), b), p.block(0, k, 0, k));
        CHECK(pencil_invariant_factors(f, changed) == pencil_invariant_factors(f, b));
        CHECK(max_invariant_subspace(f, changed).dimension == max_invariant_subspace(f, b).dimension);
      }
    }
  }
}
