#pragma once

#include "leala/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace leala {

/// Univariate polynomial over Q in the indeterminate t.
/// Coefficients are stored by ascending degree with no trailing zeros,
/// so the representation of any polynomial is unique.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(Rational constant);               // NOLINT: implicit by design
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial t();                       // the indeterminate
  static Polynomial monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  /// Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t degree) const;
  Rational leading() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Euclidean division; denominator must be nonzero.
  static void divmod(const Polynomial& a, const Polynomial& b,
                     Polynomial& quot, Polynomial& rem);

  /// Monic gcd; gcd(0,0) = 0.
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  /// Multiplies by 1/leading so the result is monic. Zero stays zero.
  Polynomial monic() const;

  /// Total order used for canonical sorting: by degree, then coefficients.
  static int compare(const Polynomial& a, const Polynomial& b);

  /// Descending-power rendering, e.g. "2*t^2-1", "t+1", "-1/2*t", "0".
  std::string to_string() const;
  static std::optional<Polynomial> from_string(const std::string& text);

private:
  void trim();
  std::vector<Rational> coeffs_;
};

} // namespace leala
