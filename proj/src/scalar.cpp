#include "leala/scalar.hpp"

#include <algorithm>
#include <map>

namespace leala {

RationalFunction RationalFunction::make(Polynomial n, Polynomial d) {
  if (d.is_zero()) throw ScalarError("rational function with zero denominator");
  if (n.is_zero()) return RationalFunction{Polynomial(), Polynomial(Rational(1))};
  Polynomial g = Polynomial::gcd(n, d);
  Polynomial qn, qd, rem;
  Polynomial::divmod(n, g, qn, rem);
  Polynomial::divmod(d, g, qd, rem);
  Rational lead = qd.leading();
  qn = qn * (Rational(1) / lead);
  qd = qd * (Rational(1) / lead);
  return RationalFunction{std::move(qn), std::move(qd)};
}

Scalar Scalar::t() { return t_power(1); }

Scalar Scalar::t_power(unsigned k) {
  return normalized(RationalFunction{Polynomial::monomial(Rational(1), k),
                                     Polynomial(Rational(1))});
}

Scalar Scalar::from_fraction(Polynomial num, Polynomial den) {
  return normalized(RationalFunction::make(std::move(num), std::move(den)));
}

Scalar Scalar::normalized(RationalFunction f) {
  if (f.den.degree() == 0 && f.num.degree() <= 0) {
    Rational c = f.num.is_zero() ? Rational(0) : f.num.coeff(0) / f.den.coeff(0);
    return Scalar(std::move(c));
  }
  return Scalar(RationalFunction::make(std::move(f.num), std::move(f.den)));
}

Scalar::Scalar(RationalFunction f) : value_(std::move(f)) {}

bool Scalar::is_zero() const {
  return is_rational() && rational() == 0;
}

bool Scalar::is_one() const {
  return is_rational() && rational() == 1;
}

RationalFunction Scalar::as_function() const {
  if (is_rational())
    return RationalFunction{Polynomial(rational()), Polynomial(Rational(1))};
  return function();
}

int Scalar::sign() const {
  if (!is_rational())
    throw ScalarError("sign of a Q(t) value is undefined");
  const Rational& r = rational();
  if (r == 0) return 0;
  return r < 0 ? -1 : 1;
}

bool Scalar::is_integer_value() const {
  return is_rational() && is_integer(rational());
}

long long Scalar::integer_value() const {
  if (!is_integer_value()) throw ScalarError("value is not an integer");
  return static_cast<long long>(rat_num(rational()));
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(Rational(-rational()));
  const auto& f = function();
  return Scalar(RationalFunction{-f.num, f.den});
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_rational() && o.is_rational())
    return Scalar(Rational(rational() + o.rational()));
  RationalFunction a = as_function(), b = o.as_function();
  return normalized(RationalFunction::make(a.num * b.den + b.num * a.den,
                                           a.den * b.den));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_rational() && o.is_rational())
    return Scalar(Rational(rational() * o.rational()));
  RationalFunction a = as_function(), b = o.as_function();
  return normalized(RationalFunction::make(a.num * b.num, a.den * b.den));
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw ScalarError("division by zero");
  if (is_rational() && o.is_rational())
    return Scalar(Rational(rational() / o.rational()));
  RationalFunction a = as_function(), b = o.as_function();
  return normalized(RationalFunction::make(a.num * b.den, a.den * b.num));
}

bool Scalar::operator==(const Scalar& o) const {
  // Canonical forms make representational equality semantic equality.
  return value_ == o.value_;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) {
    if (a.rational() == b.rational()) return 0;
    return a.rational() < b.rational() ? -1 : 1;
  }
  if (a.is_rational() != b.is_rational()) return a.is_rational() ? -1 : 1;
  const auto& fa = a.function();
  const auto& fb = b.function();
  int c = Polynomial::compare(fa.num, fb.num);
  if (c != 0) return c;
  return Polynomial::compare(fa.den, fb.den);
}

std::string Scalar::to_string() const {
  if (is_rational()) return rational_to_string(rational());
  const auto& f = function();
  return "(" + f.num.to_string() + ")/(" + f.den.to_string() + ")";
}

std::optional<Scalar> Scalar::from_string(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text.front() == '(') {
    // "(num)/(den)"
    std::size_t close = text.find(')');
    if (close == std::string::npos) return std::nullopt;
    if (close + 2 >= text.size() || text[close + 1] != '/' || text[close + 2] != '(')
      return std::nullopt;
    if (text.back() != ')') return std::nullopt;
    std::string num_text = text.substr(1, close - 1);
    std::string den_text = text.substr(close + 3, text.size() - close - 4);
    auto num = Polynomial::from_string(num_text);
    auto den = Polynomial::from_string(den_text);
    if (!num || !den || den->is_zero()) return std::nullopt;
    return from_fraction(*num, *den);
  }
  auto r = rational_from_string(text);
  if (r) return Scalar(std::move(*r));
  // Bare polynomial text like "t+1" is accepted for robustness.
  auto p = Polynomial::from_string(text);
  if (!p) return std::nullopt;
  return from_fraction(*p, Polynomial(Rational(1)));
}

namespace {

// Row-reduce a rational matrix in place, returning its rank.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Rational inv = Rational(1) / rows[rank][col];
    for (std::size_t j = col; j < cols; ++j) rows[rank][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      Rational f = rows[i][col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

} // namespace

std::vector<std::vector<Rational>>
q_coordinate_rows(const std::vector<std::vector<Scalar>>& vectors) {
  if (vectors.empty()) return {};
  std::size_t dim = vectors[0].size();
  // Per coordinate: clear denominators across all vectors, then record the
  // needed t-power range of the cleared numerators.
  std::vector<Polynomial> common_den(dim, Polynomial(Rational(1)));
  for (std::size_t k = 0; k < dim; ++k) {
    for (const auto& v : vectors) {
      RationalFunction f = v[k].as_function();
      Polynomial g = Polynomial::gcd(common_den[k], f.den);
      Polynomial q, r;
      Polynomial::divmod(f.den, g, q, r);
      common_den[k] = common_den[k] * q;
    }
  }
  std::vector<int> max_deg(dim, -1);
  std::vector<std::vector<Polynomial>> cleared(vectors.size(),
                                               std::vector<Polynomial>(dim));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      RationalFunction f = vectors[i][k].as_function();
      Polynomial q, r;
      Polynomial::divmod(common_den[k], f.den, q, r);
      cleared[i][k] = f.num * q;
      max_deg[k] = std::max(max_deg[k], cleared[i][k].degree());
    }
  }
  std::vector<std::size_t> offset(dim, 0);
  std::size_t cols = 0;
  for (std::size_t k = 0; k < dim; ++k) {
    offset[k] = cols;
    cols += static_cast<std::size_t>(max_deg[k] + 1);
  }
  if (cols == 0) cols = 1; // all-zero input still yields well-formed rows
  std::vector<std::vector<Rational>> rows(vectors.size(),
                                          std::vector<Rational>(cols, Rational(0)));
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t k = 0; k < dim; ++k)
      for (int d = 0; d <= cleared[i][k].degree(); ++d)
        rows[i][offset[k] + static_cast<std::size_t>(d)] =
            cleared[i][k].coeff(static_cast<std::size_t>(d));
  return rows;
}

bool q_linear_independent(const std::vector<Scalar>& values) {
  if (values.empty()) return true;
  std::vector<std::vector<Scalar>> as_vectors;
  as_vectors.reserve(values.size());
  for (const auto& v : values) as_vectors.push_back({v});
  auto rows = q_coordinate_rows(as_vectors);
  return rational_rank(std::move(rows)) == values.size();
}

} // namespace leala
