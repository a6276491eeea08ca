#include "helpers.hpp"

#include <map>

using namespace pencil;
using pencil::test::kind_of;
using pencil::test::P;

namespace {

// Number of monic irreducibles of degree d over F_q, by Moebius inversion.
long long necklace(long long q, int d) {
  auto mobius = [](int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
      }
    }
    return n > 1 ? -result : result;
  };
  long long sum = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    long long power = 1;
    for (int i = 0; i < d / e; ++i) power *= q;
    sum += mobius(e) * power;
  }
  return sum / d;
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("basic shape") {
    const Field f2(2);
    CHECK(Poly().is_zero());
    CHECK(Poly().degree() == kNegInfDegree);
    CHECK(Poly({Elem{1}, Elem{0}, Elem{0}}).degree() == 0);
    CHECK(Poly::x().degree() == 1);
    CHECK(Poly::monomial(Elem{1}, 3) == P(f2, "x^3"));
    CHECK(Poly::monomial(Elem{0}, 3).is_zero());
    CHECK(P(f2, "x^2+1").is_monic());
  }

  TEST_CASE("text format round trip") {
    const Field f3(3);
    CHECK(to_string(f3, P(f3, "x^3+2*x+1")) == "x^3+2*x+1");
    CHECK(to_string(f3, P(f3, "x^2 - 1")) == "x^2+2");
    CHECK(to_string(f3, P(f3, "2x+x+1")) == "1");
    CHECK(to_string(f3, P(f3, "x^2+x^2")) == "2*x^2");
    CHECK(to_string(f3, P(f3, "0")) == "0");
    CHECK(kind_of([&] { P(f3, "x+4"); }) == ErrorKind::ParseError);
    const Field f4(2, 2);
    CHECK(to_string(f4, P(f4, "[3]*x^2+[1]")) == "[3]*x^2+[1]");
    CHECK(to_string(f4, P(f4, "x+[2]")) == "x+[2]");
    for (const char* bad : {"x^", "3x^-1", "[4]", "x+", "y", "(x+1)"}) {
      CAPTURE(bad);
      CHECK(kind_of([&] { P(f4, bad); }) == ErrorKind::ParseError);
    }
    for (const Poly& p : monic_polys(f4, 2)) CHECK(P(f4, to_string(f4, p)) == p);
  }

  TEST_CASE("divmod examples") {
    const Field f2(2);
    const auto [q1, r1] = divmod(f2, P(f2, "x^2+1"), P(f2, "x+1"));
    CHECK(q1 == P(f2, "x+1"));
    CHECK(r1.is_zero());
    const auto [q2, r2] = divmod(f2, P(f2, "x"), P(f2, "x^2"));
    CHECK(q2.is_zero());
    CHECK(r2 == P(f2, "x"));

    const Field f3(3);
    const Poly a = P(f3, "x^3+2*x"), b = P(f3, "x+1");
    const auto [q3, r3] = divmod(f3, a, b);
    CHECK(add(f3, mul(f3, q3, b), r3) == a);
    CHECK(r3.degree() < b.degree());
    CHECK(kind_of([&] { divmod(f3, a, Poly()); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([&] { exact_div(f3, add(f3, a, Poly::one()), b); }) == ErrorKind::DegreeMismatch);
  }

  TEST_CASE("gcd examples") {
    const Field f3(3);
    CHECK(gcd(f3, P(f3, "2*x+1"), Poly()) == P(f3, "x+2"));
    CHECK(gcd(f3, P(f3, "x^2-1"), P(f3, "x-1")) == P(f3, "x+2"));
    CHECK(gcd(f3, Poly(), P(f3, "2")) == Poly::one());
    CHECK(kind_of([&] { gcd(f3, Poly(), Poly()); }) == ErrorKind::BothZero);
  }

  TEST_CASE("nu examples") {
    const Field f2(2);
    CHECK(nu(f2, P(f2, "x"), P(f2, "x^3+x^2")) == 2);
    CHECK(nu(f2, P(f2, "x+1"), P(f2, "x^2+1")) == 2);
    CHECK(nu(f2, P(f2, "x"), Poly::one()) == 0);
    CHECK(kind_of([&] { nu(f2, P(f2, "x"), Poly()); }) == ErrorKind::ZeroArgument);
    CHECK(kind_of([&] { nu(f2, P(f2, "x^2+1"), P(f2, "x")); }) == ErrorKind::NotIrreducible);
  }

  TEST_CASE("factorize examples") {
    const Field f2(2);
    {
      const auto fac = factorize(f2, P(f2, "x^2+x"));
      CHECK(fac.unit == f2.one());
      REQUIRE(fac.factors.size() == 2);
      CHECK(fac.factors[0] == Factor{P(f2, "x"), 1});
      CHECK(fac.factors[1] == Factor{P(f2, "x+1"), 1});
    }
    {
      const auto fac = factorize(f2, P(f2, "x^2+x+1"));
      REQUIRE(fac.factors.size() == 1);
      CHECK(fac.factors[0] == Factor{P(f2, "x^2+x+1"), 1});
    }
    {
      const auto fac = factorize(f2, P(f2, "x^4+x^2"));
      REQUIRE(fac.factors.size() == 2);
      CHECK(fac.factors[0] == Factor{P(f2, "x"), 2});
      CHECK(fac.factors[1] == Factor{P(f2, "x+1"), 2});
    }
    const Field f5(5);
    {
      const auto fac = factorize(f5, P(f5, "3"));
      CHECK(fac.unit == Elem{3});
      CHECK(fac.factors.empty());
    }
    {
      const auto fac = factorize(f5, P(f5, "2*x^2+3*x+1"));
      CHECK(fac.unit == Elem{2});
      CHECK(expand(f5, fac) == P(f5, "2*x^2+3*x+1"));
    }
    CHECK(kind_of([&] { factorize(f5, Poly()); }) == ErrorKind::ZeroArgument);
  }

  TEST_CASE("irreducible sieve") {
    const Field f2(2);
    const auto one = irreducibles_up_to(f2, 1);
    REQUIRE(one.size() == 2);
    CHECK(one[0] == P(f2, "x"));
    CHECK(one[1] == P(f2, "x+1"));
    const auto two = irreducibles_up_to(f2, 2);
    REQUIRE(two.size() == 3);
    CHECK(two[2] == P(f2, "x^2+x+1"));
    const Field f3(3);
    const auto lin = irreducibles_up_to(f3, 1);
    REQUIRE(lin.size() == 3);
    CHECK(lin[2] == P(f3, "x+2"));
    CHECK(irreducibles_up_to(f3, 0).empty());
  }

  TEST_CASE("necklace count of irreducibles") {
    for (const Field& f : {Field(2), Field(3), Field(2, 2)}) {
      const auto irr = irreducibles_up_to(f, 6);
      std::map<int, long long> by_degree;
      for (const auto& p : irr) {
        ++by_degree[p.degree()];
        CHECK(p.is_monic());
      }
      for (int d = 1; d <= 6; ++d) {
        CAPTURE(f.spec());
        CAPTURE(d);
        CHECK(by_degree[d] == necklace(f.q(), d));
      }
      CHECK(std::is_sorted(irr.begin(), irr.end(), CanonicalLess{}));
    }
  }

  TEST_CASE("canonical order") {
    const Field f3(3);
    const auto polys = monic_polys(f3, 2);
    REQUIRE(polys.size() == 9);
    CHECK(polys.front() == P(f3, "x^2"));
    // Constant term is the most significant coefficient after the degree.
    CHECK(polys[1] == P(f3, "x^2+x"));
    CHECK(polys[3] == P(f3, "x^2+1"));
    CHECK(std::is_sorted(polys.begin(), polys.end(), CanonicalLess{}));
    CHECK(CanonicalLess{}(P(f3, "x+2"), P(f3, "x^2")));
  }

  TEST_CASE("factorization round trip, exhaustive to degree 6") {
    for (const Field& f : {Field(2), Field(3)}) {
      for (int d = 0; d <= 6; ++d) {
        for (const Poly& g : monic_polys(f, d)) {
          const auto fac = factorize(f, g);
          CHECK(expand(f, fac) == g);
          CHECK(std::is_sorted(fac.factors.begin(), fac.factors.end(),
                               [](const Factor& a, const Factor& b) { return CanonicalLess{}(a.factor, b.factor); }));
          for (std::size_t i = 0; i < fac.factors.size(); ++i) {
            CHECK(fac.factors[i].multiplicity >= 1);
            CHECK(is_irreducible(f, fac.factors[i].factor));
            if (i > 0) CHECK(fac.factors[i - 1].factor != fac.factors[i].factor);
          }
          CHECK(is_irreducible(f, g) == (fac.factors.size() == 1 && fac.factors[0].multiplicity == 1));
        }
      }
    }
  }

  TEST_CASE("nu is additive and gcd times lcm is the product") {
    std::mt19937_64 rng(3);
    for (const Field& f : {Field(2), Field(3), Field(2, 2)}) {
      const auto irr = irreducibles_up_to(f, 2);
      const auto pool = monic_polys(f, 3);
      for (int t = 0; t < 300; ++t) {
        const Poly& g = pool[rng() % pool.size()];
        const Poly& h = pool[rng() % pool.size()];
        const Poly& p = irr[rng() % irr.size()];
        CHECK(nu(f, p, mul(f, g, h)) == nu(f, p, g) + nu(f, p, h));
        CHECK(mul(f, gcd(f, g, h), lcm(f, g, h)) == mul(f, g, h));
        CHECK(divides(f, gcd(f, g, h), g));
        CHECK(divides(f, g, lcm(f, g, h)));
      }
    }
  }

  TEST_CASE("power and make_monic") {
    const Field f3(3);
    CHECK(power(f3, P(f3, "x+1"), 3) == P(f3, "x^3+1"));
    CHECK(power(f3, P(f3, "x"), 0) == Poly::one());
    CHECK(make_monic(f3, P(f3, "2*x+1")) == P(f3, "x+2"));
    CHECK(scale(f3, P(f3, "x+1"), Elem{0}).is_zero());
  }
}
