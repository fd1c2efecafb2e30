#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <doctest.h>

#include "leala/scalar.hpp"

#include <random>

using namespace leala;

namespace {

Scalar q(long long n, long long d = 1) {
  return Scalar(Rational(Int(n)) / Rational(Int(d)));
}

// Random scalar generator for property tests: small rationals and small
// rational functions with nonzero denominators.
struct Gen {
  std::mt19937 rng{20260826};
  Rational rational() {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    return Rational(Int(num(rng)), Int(den(rng)));
  }
  Polynomial poly(int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    int d = deg(rng);
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = rational();
    return Polynomial(std::move(c));
  }
  Scalar scalar() {
    std::uniform_int_distribution<int> kind(0, 2);
    switch (kind(rng)) {
      case 0: return Scalar(rational());
      case 1: return Scalar::from_fraction(poly(3), Polynomial(Rational(1)));
      default: {
        Polynomial den = poly(2);
        while (den.is_zero()) den = poly(2);
        return Scalar::from_fraction(poly(3), den);
      }
    }
  }
};

// Independent oracle: integer vectors v_1..v_n in Z^3 are Q-dependent iff
// some nonzero integer coefficient vector annihilates them. For n <= 3 and
// entries in [-3,3], a minimal dependence has coefficients given by 2x2
// minors, hence bounded by 18, so an exhaustive search over that net is a
// complete decision procedure.
bool dependent_by_net(const std::vector<std::array<long long, 3>>& vecs,
                      int bound) {
  std::size_t n = vecs.size();
  std::vector<int> c(n, -bound);
  while (true) {
    bool all_zero = true;
    for (int x : c)
      if (x != 0) all_zero = false;
    if (!all_zero) {
      long long s0 = 0, s1 = 0, s2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        s0 += c[i] * vecs[i][0];
        s1 += c[i] * vecs[i][1];
        s2 += c[i] * vecs[i][2];
      }
      if (s0 == 0 && s1 == 0 && s2 == 0) return true;
    }
    std::size_t i = 0;
    while (i < n && c[i] == bound) c[i++] = -bound;
    if (i == n) return false;
    ++c[i];
  }
}

} // namespace

TEST_CASE("rational arithmetic and canonical form") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK((q(1, 2) + q(1, 3)).to_string() == "5/6");
  CHECK(q(2, 4) == q(1, 2));
  CHECK(q(-3, -6) == q(1, 2));
  CHECK((q(7) * q(0)).is_zero());
  CHECK(q(-1, 2).to_string() == "-1/2");
  CHECK(q(5).to_string() == "5");
  CHECK_THROWS_AS(q(1) / q(0), ScalarError);
}

TEST_CASE("rational function construction reduces to lowest terms") {
  // (t^2 - 1)/(t - 1) = t + 1
  Polynomial num(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});
  Polynomial den(std::vector<Rational>{Rational(-1), Rational(1)});
  Scalar s = Scalar::from_fraction(num, den);
  CHECK(s == Scalar::t() + q(1));
  CHECK(s.to_string() == "(t+1)/(1)");
}

TEST_CASE("t * (1/t) = 1 and demotion to Q") {
  Scalar t = Scalar::t();
  Scalar inv = q(1) / t;
  Scalar prod = t * inv;
  CHECK(prod.is_one());
  CHECK(prod.is_rational());
}

TEST_CASE("denominators stay monic") {
  // (1)/(2t) should normalize to (1/2)/(t)
  Scalar s = Scalar::from_fraction(Polynomial(Rational(1)),
                                   Polynomial::monomial(Rational(2), 1));
  CHECK(s.to_string() == "(1/2)/(t)");
  CHECK(s * Scalar::t() == q(1, 2));
}

TEST_CASE("string round trips are bit exact") {
  std::vector<Scalar> samples = {
      q(0), q(5), q(-1, 2), q(22, 7),
      Scalar::t(),
      Scalar::t_power(3) - q(1),
      Scalar::from_fraction(
          Polynomial(std::vector<Rational>{Rational(-1), Rational(0), Rational(2)}),
          Polynomial::t()),
      Scalar::from_fraction(Polynomial(Rational(1)),
                            Polynomial(std::vector<Rational>{Rational(1), Rational(1)})),
  };
  for (const auto& s : samples) {
    auto back = Scalar::from_string(s.to_string());
    REQUIRE(back.has_value());
    CHECK(*back == s);
    CHECK(back->to_string() == s.to_string());
  }
  CHECK(samples[5].to_string() == "(t^3-1)/(1)");
  CHECK(samples[6].to_string() == "(2*t^2-1)/(t)");
}

TEST_CASE("malformed input is rejected") {
  CHECK(!Scalar::from_string("").has_value());
  CHECK(!Scalar::from_string("1/0").has_value());
  CHECK(!Scalar::from_string("abc").has_value());
  CHECK(!Scalar::from_string("(t").has_value());
  CHECK(!Scalar::from_string("(t)/(0)").has_value());
  CHECK(!Scalar::from_string("1//2").has_value());
  CHECK(!Scalar::from_string("2t").has_value());
}

TEST_CASE("sign is defined only over Q") {
  CHECK(q(3, 2).sign() == 1);
  CHECK(q(-4).sign() == -1);
  CHECK(q(0).sign() == 0);
  CHECK_THROWS_AS(Scalar::t().sign(), ScalarError);
}

TEST_CASE("field axioms hold on random values") {
  Gen gen;
  for (int iter = 0; iter < 300; ++iter) {
    Scalar a = gen.scalar(), b = gen.scalar(), c = gen.scalar();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + q(0) == a);
    CHECK(a * q(1) == a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) {
      CHECK((a * a.inverse()).is_one());
      CHECK(b / a * a == b);
    }
  }
}

TEST_CASE("total order is consistent") {
  Gen gen;
  for (int iter = 0; iter < 200; ++iter) {
    Scalar a = gen.scalar(), b = gen.scalar(), c = gen.scalar();
    int ab = Scalar::compare(a, b);
    CHECK(Scalar::compare(b, a) == -ab);
    CHECK((ab == 0) == (a == b));
    if (ab <= 0 && Scalar::compare(b, c) <= 0) CHECK(Scalar::compare(a, c) <= 0);
  }
  CHECK(q(1, 3) < q(1, 2));
  CHECK(q(100) < Scalar::t());
}

TEST_CASE("q_linear_independent matches the examples") {
  CHECK(q_linear_independent({q(1), Scalar::t()}));
  CHECK(!q_linear_independent({q(1), q(2), q(3)}));
  CHECK(!q_linear_independent(
      {Scalar::t(), Scalar::t_power(2), Scalar::t() - Scalar::t_power(2)}));
  CHECK(q_linear_independent({}));
  CHECK(q_linear_independent({Scalar::t()}));
  CHECK(!q_linear_independent({q(0)}));
  // 1 and 1/t are independent over Q
  CHECK(q_linear_independent({q(1), q(1) / Scalar::t()}));
}

TEST_CASE("q_linear_independent agrees with a brute-force oracle") {
  Gen gen;
  for (int iter = 0; iter < 100; ++iter) {
    std::uniform_int_distribution<int> len(1, 3);
    int n = len(gen.rng);
    std::uniform_int_distribution<int> small(-3, 3);
    std::vector<std::array<long long, 3>> coords;
    std::vector<Scalar> vals;
    for (int i = 0; i < n; ++i) {
      std::array<long long, 3> v{small(gen.rng), small(gen.rng), small(gen.rng)};
      coords.push_back(v);
      vals.push_back(q(v[0]) + q(v[1]) * Scalar::t() +
                     q(v[2]) * Scalar::t_power(2));
    }
    CHECK(q_linear_independent(vals) == !dependent_by_net(coords, 18));
  }
}

TEST_CASE("integer detection") {
  CHECK(q(6, 3).is_integer_value());
  CHECK(q(6, 3).integer_value() == 2);
  CHECK(!q(1, 2).is_integer_value());
  CHECK(!Scalar::t().is_integer_value());
}
