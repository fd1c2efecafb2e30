#pragma once

#include "leala/polynomial.hpp"
#include "leala/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace leala {

/// Reduced fraction of polynomials over Q: gcd(num, den) = 1, den monic,
/// zero is 0/1. Constant fractions are handled by Scalar, which demotes
/// them to Rational, so a live RationalFunction always involves t.
struct RationalFunction {
  Polynomial num;
  Polynomial den{Rational(1)};

  static RationalFunction make(Polynomial n, Polynomial d);
  bool operator==(const RationalFunction& o) const {
    return num == o.num && den == o.den;
  }
};

class ScalarError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Element of the base field: either Q or Q(t). Arithmetic is exact and
/// results are always in canonical form, so equality is representational.
class Scalar {
public:
  Scalar() : value_(Rational(0)) {}
  Scalar(Rational r) : value_(std::move(r)) {}        // NOLINT: implicit by design
  Scalar(int n) : value_(Rational(n)) {}              // NOLINT: implicit by design
  Scalar(long long n) : value_(Rational(n)) {}        // NOLINT: implicit by design
  static Scalar t();
  static Scalar t_power(unsigned k);
  static Scalar from_fraction(Polynomial num, Polynomial den);

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  /// Only valid when is_rational().
  const Rational& rational() const { return std::get<Rational>(value_); }
  const RationalFunction& function() const { return std::get<RationalFunction>(value_); }
  RationalFunction as_function() const;

  /// Valid only for rational values; throws ScalarError otherwise
  /// (positivity is undefined for Q(t) values in this artifact).
  int sign() const;
  bool is_integer_value() const;
  long long integer_value() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Throws ScalarError on division by zero.
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const { return Scalar(Rational(1)) / *this; }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Total order (rationals numerically; Q(t) values lexicographically),
  /// used for deterministic witness ordering.
  static int compare(const Scalar& a, const Scalar& b);
  bool operator<(const Scalar& o) const { return compare(*this, o) < 0; }

  /// Interchange encoding: "p/q" for rationals, "(num)/(den)" for Q(t).
  std::string to_string() const;
  static std::optional<Scalar> from_string(const std::string& text);

private:
  explicit Scalar(RationalFunction f);
  static Scalar normalized(RationalFunction f);
  std::variant<Rational, RationalFunction> value_;
};

/// True iff no nontrivial rational combination of the values vanishes.
/// Decided exactly by clearing denominators and computing the rank of the
/// resulting rational coefficient matrix.
bool q_linear_independent(const std::vector<Scalar>& values);

/// Expands a list of Scalar vectors into rows of a rational matrix whose
/// Q-row-rank equals the Q-rank of the vectors (per-coordinate common
/// denominators, one column block per coordinate and t-power).
std::vector<std::vector<Rational>>
q_coordinate_rows(const std::vector<std::vector<Scalar>>& vectors);

} // namespace leala
