#include "helpers.hpp"

#include "pencil/census.hpp"
#include "pencil/oracle.hpp"

using namespace pencil;
using pencil::test::kind_of;
using pencil::test::P;

namespace {

BigCount reachable_product(unsigned k, unsigned n, unsigned q) { return falling_product(q, n, 1, k); }

InvariantFactors T(const Field& f, const char* key) { return parse_tuple(f, key); }

}  // namespace

TEST_SUITE("census") {
  TEST_CASE("partitions") {
    CHECK(Partition({1, 2}).parts() == std::vector<unsigned>{2, 1});
    CHECK(Partition({3, 0, 1}).parts() == std::vector<unsigned>{3, 1});
    CHECK(Partition({3, 1}).size() == 4);
    CHECK(conjugate(Partition({2, 1})) == Partition({2, 1}));
    CHECK(conjugate(Partition({3})) == Partition({1, 1, 1}));
    CHECK(conjugate(Partition()) == Partition());
    CHECK(conjugate(Partition({4, 2, 1})) == Partition({3, 2, 1, 1}));
    CHECK(conjugate(conjugate(Partition({5, 3, 3, 1}))) == Partition({5, 3, 3, 1}));
  }

  TEST_CASE("centralizer factor") {
    CHECK(centralizer_factor(Partition({1, 1}), 1, 2) == 6);
    CHECK(centralizer_factor(Partition({2}), 1, 2) == 2);
    CHECK(centralizer_factor(Partition(), 3, 2) == 1);
    // For lambda = (1^n) the factor is |GL_n(F_{q^d})|.
    CHECK(centralizer_factor(Partition({1, 1, 1}), 2, 2) == gl_order(3, 4));
  }

  TEST_CASE("gl order and q-binomials") {
    CHECK(gl_order(0, 7) == 1);
    CHECK(gl_order(2, 2) == 6);
    CHECK(gl_order(1, 5) == 4);
    CHECK(gl_order(3, 2) == 168);
    CHECK(q_binomial(2, 1, 2) == 3);
    CHECK(q_binomial(5, 0, 3) == 1);
    CHECK(q_binomial(4, 2, 2) == 35);
    CHECK(q_binomial(2, 3, 2) == 0);
    CHECK(q_power(3, 4) == 81);
    CHECK(falling_product(2, 3, 1, 2) == 24);
    CHECK(falling_product(2, 3, 4, 3) == 1);
  }

  TEST_CASE("phi profile") {
    const Field f2(2);
    {
      const auto prof = phi_profile(f2, T(f2, "x|x"));
      REQUIRE(prof.size() == 1);
      CHECK(prof.at(P(f2, "x")) == Partition({1, 1}));
    }
    {
      const auto prof = phi_profile(f2, T(f2, "1|x^2"));
      REQUIRE(prof.size() == 1);
      CHECK(prof.at(P(f2, "x")) == Partition({2}));
    }
    {
      const auto prof = phi_profile(f2, T(f2, "1|x^2+x"));
      REQUIRE(prof.size() == 2);
      CHECK(prof.at(P(f2, "x")) == Partition({1}));
      CHECK(prof.at(P(f2, "x+1")) == Partition({1}));
    }
    CHECK(phi_profile(f2, T(f2, "1|1")).empty());
  }

  TEST_CASE("conjugacy class sizes") {
    const Field f2(2);
    CHECK(count_conjugacy_class(f2, T(f2, "x|x")) == 1);
    CHECK(count_conjugacy_class(f2, T(f2, "1|x^2")) == 3);
    CHECK(count_conjugacy_class(f2, T(f2, "1|x^2+x+1")) == 2);
    CHECK(count_conjugacy_class(f2, T(f2, "1|x")) == 0);
    const Field f4(2, 2);
    CHECK(count_conjugacy_class(f4, T(f4, "x|x")) == 1);
  }

  TEST_CASE("fixed subspace counts") {
    const Field f2(2);
    CHECK(count_with_subspace(f2, 3, 2, 0, T(f2, "1|1")) == reachable_product(2, 3, 2));
    CHECK(count_with_subspace(f2, 3, 2, 1, T(f2, "1|x")) == 4);
    CHECK(count_with_subspace(f2, 2, 2, 2, T(f2, "1|x^2+x+1")) == count_conjugacy_class(f2, T(f2, "1|x^2+x+1")));
    CHECK(kind_of([&] { count_with_subspace(f2, 3, 2, 2, T(f2, "1|x")); }) == ErrorKind::DegreeMismatch);
    CHECK(kind_of([&] { count_with_subspace(f2, 3, 2, 1, T(f2, "x")); }) == ErrorKind::ShapeError);
    CHECK(kind_of([&] { count_with_subspace(f2, 2, 3, 0, T(f2, "1|1|1")); }) == ErrorKind::OutOfRange);

    CHECK(count_given_subspace(3, 3, 3, 2) == q_power(2, 9));
    CHECK(count_given_subspace(3, 2, 0, 2) == reachable_product(2, 3, 2));
    CHECK(count_given_subspace(3, 2, 1, 2) == 8);
    CHECK(kind_of([] { count_given_subspace(2, 3, 1, 2); }) == ErrorKind::OutOfRange);
    CHECK(kind_of([] { count_given_subspace(3, 2, 3, 2); }) == ErrorKind::OutOfRange);
  }

  TEST_CASE("pencil counts") {
    const Field f2(2);
    CHECK(count_invariant_factors(f2, 3, 2, T(f2, "1|1")) == 24);
    CHECK(count_invariant_factors(f2, 2, 2, T(f2, "1|x^2")) == count_conjugacy_class(f2, T(f2, "1|x^2")));
    CHECK(count_invariant_factors(f2, 3, 1, T(f2, "x^2")) == 0);
    CHECK(kind_of([&] { count_invariant_factors(f2, 3, 2, T(f2, "x")); }) == ErrorKind::ShapeError);
    CHECK(kind_of([&] { count_invariant_factors(f2, 1, 2, T(f2, "1|1")); }) == ErrorKind::OutOfRange);
  }

  TEST_CASE("reachability counts") {
    CHECK(count_reachability(3, 5, 3, 2) == 20160);
    CHECK(count_reachability(1, 2, 0, 2) == 2);
    CHECK(count_reachability(1, 2, 1, 2) == 2);
    CHECK(count_reachability(2, 3, 2, 2) == 24);
    CHECK(kind_of([] { count_reachability(2, 2, 1, 2); }) == ErrorKind::OutOfRange);
    CHECK(kind_of([] { count_reachability(2, 3, 3, 2); }) == ErrorKind::OutOfRange);
    for (unsigned q : {2u, 3u, 4u, 5u}) {
      for (unsigned n = 2; n <= 6; ++n) {
        for (unsigned k = 1; k < n; ++k) {
          BigCount sum = 0;
          for (unsigned r = 0; r <= k; ++r) sum += count_reachability(k, n, r, q);
          CHECK(sum == q_power(q, k * n));
          CHECK(count_reachability(k, n, k, q) == reachable_product(k, n, q));
        }
      }
    }
  }

  TEST_CASE("Gerstenhaber-Reiner") {
    const Field f2(2);
    CHECK(count_char_poly_square(f2, P(f2, "x^2")) == 4);
    CHECK(count_char_poly_square(f2, P(f2, "x^2+x+1")) == 2);
    CHECK(count_char_poly_square(f2, P(f2, "x^3")) == 64);
    CHECK(count_char_poly_square(f2, Poly::one()) == 1);
    CHECK(kind_of([&] { count_char_poly_square(Field(3), P(Field(3), "2*x")); }) == ErrorKind::NonMonic);
    for (const Field& f : {Field(2), Field(3), Field(2, 2), Field(5)}) {
      for (unsigned n = 1; n <= 4; ++n) {
        if (f.q() >= 4 && n > 3) continue;
        BigCount sum = 0;
        for (const Poly& g : monic_polys(f, static_cast<int>(n))) sum += count_char_poly_square(f, g);
        CHECK(sum == q_power(f.q(), n * n));
        CHECK(count_char_poly_square(f, Poly::monomial(f.one(), static_cast<int>(n))) == q_power(f.q(), n * (n - 1)));
      }
    }
  }

  TEST_CASE("extended fiber formula") {
    const Field f2(2);
    CHECK(count_char_poly_rect(f2, Poly::one(), 3, 2) == reachable_product(2, 3, 2));
    CHECK(count_char_poly_rect(f2, P(f2, "x"), 3, 2) == 12);
    CHECK(count_char_poly_rect(f2, P(f2, "x^2+1"), 2, 2) == count_char_poly_square(f2, P(f2, "x^2+1")));
    CHECK(kind_of([&] { count_char_poly_rect(f2, P(f2, "x^3"), 3, 2); }) == ErrorKind::DegreeTooLarge);
    CHECK(kind_of([&] { count_char_poly_rect(f2, P(f2, "x"), 2, 3); }) == ErrorKind::OutOfRange);
    CHECK(kind_of([&] { count_char_poly_rect(Field(3), P(Field(3), "2*x"), 3, 2); }) == ErrorKind::NonMonic);
  }

  TEST_CASE("nilpotent extension") {
    const Field f2(2);
    CHECK(count_nilpotent_extendable(1, 2, 2) == 3);
    CHECK(count_nilpotent_extendable(2, 2, 2) == 4);
    CHECK(count_nilpotent_extendable(2, 3, 2) == 40);
    CHECK(kind_of([] { count_nilpotent_extendable(0, 2, 2); }) == ErrorKind::OutOfRange);
    CHECK(kind_of([] { count_nilpotent_extendable(3, 2, 2); }) == ErrorKind::OutOfRange);
    for (const Field& f : {Field(2), Field(3), Field(2, 2)}) {
      for (unsigned n = 1; n <= 4; ++n) {
        CHECK(count_nilpotent_extendable(n, n, f.q()) == q_power(f.q(), n * (n - 1)));
        for (unsigned k = 1; k <= n; ++k)
          CHECK(nilpotent_extendable_by_fibers(f, k, n) == count_nilpotent_extendable(k, n, f.q()));
      }
    }
  }

  TEST_CASE("q identity") {
    CHECK(check_q_identity(0, 2, 17));
    CHECK(check_q_identity(1, 3, -4));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long> pick(-1000000, 1000000);
    for (unsigned q : {2u, 3u, 5u})
      for (unsigned d = 0; d <= 8; ++d)
        for (int i = 0; i < 20; ++i) CHECK(check_q_identity(d, q, mpz_class(pick(rng))));
  }

  TEST_CASE("tuple generation") {
    const Field f2(2);
    const auto chains = tuples_with_product(f2, P(f2, "x^2"), 2);
    REQUIRE(chains.size() == 2);
    CHECK(to_key(f2, chains[0]) == "1|x^2");
    CHECK(to_key(f2, chains[1]) == "x|x");
    CHECK(tuples_with_product(f2, P(f2, "x^2+x"), 2).size() == 1);
    CHECK(tuples_with_product(f2, Poly::one(), 3).size() == 1);
    for (const Field& f : {Field(2), Field(3)}) {
      for (unsigned k = 1; k <= 3; ++k) {
        for (const auto& t : invariant_factor_tuples(f, k, k)) {
          CHECK(t.size() == k);
          CHECK(t.total_degree() <= static_cast<int>(k));
          CHECK(parse_tuple(f, to_key(f, t)) == t);
        }
      }
    }
  }

  TEST_CASE("completeness, consistency, marginals and fiber sums") {
    for (const Field& f : {Field(2), Field(3), Field(2, 2)}) {
      for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
          if (f.q() > 2 && n > 3) continue;
          CAPTURE(f.spec());
          CAPTURE(n);
          CAPTURE(k);
          BigCount total = 0;
          std::vector<BigCount> by_d(k + 1);
          std::map<Poly, BigCount, CanonicalLess> by_product;
          for (const auto& t : invariant_factor_tuples(f, k, k)) {
            const unsigned d = static_cast<unsigned>(t.total_degree());
            const BigCount n_q = count_invariant_factors(f, n, k, t);
            const BigCount fixed_u = count_with_subspace(f, n, k, d, t);
            CHECK(n_q == q_binomial(k, d, f.q()) * fixed_u);
            total += n_q;
            by_d[d] += fixed_u;
            by_product[t.product(f)] += n_q;
          }
          CHECK(total == q_power(f.q(), n * k));
          for (unsigned d = 0; d <= k; ++d) CHECK(by_d[d] == count_given_subspace(n, k, d, f.q()));
          for (const auto& [g, count] : by_product) CHECK(count == count_char_poly_rect(f, g, n, k));
        }
      }
    }
  }

  TEST_CASE("closed-form reports") {
    const Field f2(2);
    const auto pencil = pencil_census(f2, 3, 2);
    CHECK(pencil.params.census == "pencil");
    CHECK(pencil.source == Source::ClosedForm);
    CHECK(pencil.entries.size() == 9);
    CHECK(pencil.total() == 64);
    CHECK(class_census(f2, 2).entries == pencil_census(f2, 2, 2).entries);
    CHECK(reachability_census(f2, 3, 5).entries.at("3") == 20160);
    CHECK(given_subspace_census(f2, 3, 2).total() == 24 + 8 + 16);
    const auto nil = nilext_census(f2, 3, 2);
    CHECK(nil.entries.at("extendable") == 40);
    CHECK(nil.entries.at("criterion") == 40);
    CHECK(fiber_census(f2, 3, 3).total() == 512);
    const auto u = subspace_census(f2, 3, 2, pencil::test::mat(f2, 1, 2, {1, 1}));
    CHECK(u.params.subspace == "[[1,1]]");
    CHECK(u.total() == 8);
    CHECK(kind_of([&] { subspace_census(f2, 3, 2, pencil::test::mat(f2, 1, 2, {0, 0})); }) == ErrorKind::BadSubspace);
    CHECK(kind_of([&] { subspace_census(f2, 3, 2, pencil::test::mat(f2, 2, 2, {1, 1, 1, 1})); }) == ErrorKind::BadSubspace);
    CHECK(kind_of([&] { subspace_census(f2, 3, 2, pencil::test::mat(f2, 1, 3, {1, 0, 0})); }) == ErrorKind::BadSubspace);
  }
}
