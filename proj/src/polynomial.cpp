#include "leala/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace leala {

Polynomial::Polynomial(Rational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::t() { return monomial(Rational(1), 1); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  if (c == 0) return Polynomial();
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

bool Polynomial::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational Polynomial::coeff(std::size_t degree) const {
  return degree < coeffs_.size() ? coeffs_[degree] : Rational(0);
}

Rational Polynomial::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v(coeffs_);
  for (auto& c : v) c = -c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial();
  std::vector<Rational> v(coeffs_);
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b,
                        Polynomial& quot, Polynomial& rem) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rational> r = a.coeffs_;
  std::vector<Rational> q;
  int db = b.degree();
  if (static_cast<int>(r.size()) - 1 >= db)
    q.assign(r.size() - db, Rational(0));
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    while (!r.empty() && r.back() == 0) r.pop_back();
    int dr = static_cast<int>(r.size()) - 1;
    if (dr < db || r.empty()) break;
    Rational f = r.back() / b.leading();
    q[dr - db] = f;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= f * b.coeff(i);
  }
  quot = Polynomial(std::move(q));
  rem = Polynomial(std::move(r));
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial q, r;
    divmod(x, y, q, r);
    x = y;
    y = r;
  }
  return x.monic();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading());
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i] ? -1 : 1;
  }
  return 0;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational abs_c = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? "-" : "+");
    }
    if (i == 0) {
      out << rational_to_string(abs_c);
    } else {
      if (abs_c != 1) out << rational_to_string(abs_c) << "*";
      out << "t";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

namespace {

// Recursive-descent parser for the to_string grammar: a signed sum of
// terms "c", "c*t^k", "t^k", "t".
struct PolyParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit PolyParser(const std::string& str) : s(str) {}

  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }

  std::optional<Rational> number() {
    std::size_t start = pos;
    while (!done() && (std::isdigit(static_cast<unsigned char>(peek())))) ++pos;
    if (pos == start) return std::nullopt;
    std::string num = s.substr(start, pos - start);
    if (!done() && peek() == '/') {
      ++pos;
      std::size_t dstart = pos;
      while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
      if (pos == dstart) return std::nullopt;
      return rational_from_string(num + "/" + s.substr(dstart, pos - dstart));
    }
    return rational_from_string(num);
  }

  std::optional<Polynomial> parse() {
    Polynomial acc;
    bool first = true;
    while (!done()) {
      int sign = 1;
      if (peek() == '+') { ++pos; }
      else if (peek() == '-') { sign = -1; ++pos; }
      else if (!first) return std::nullopt;
      first = false;
      if (done()) return std::nullopt;

      Rational coeff(1);
      bool have_coeff = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        auto n = number();
        if (!n) return std::nullopt;
        coeff = *n;
        have_coeff = true;
        if (!done() && peek() == '*') ++pos;
        else if (!done() && peek() == 't') return std::nullopt; // require '*'
      }
      std::size_t deg = 0;
      if (!done() && peek() == 't') {
        ++pos;
        deg = 1;
        if (!done() && peek() == '^') {
          ++pos;
          std::size_t start = pos;
          while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
          if (pos == start) return std::nullopt;
          deg = std::stoul(s.substr(start, pos - start));
        }
      } else if (!have_coeff) {
        return std::nullopt;
      }
      acc = acc + Polynomial::monomial(sign < 0 ? Rational(-coeff) : coeff, deg);
    }
    if (first) return std::nullopt;
    return acc;
  }
};

} // namespace

std::optional<Polynomial> Polynomial::from_string(const std::string& text) {
  if (text == "0") return Polynomial();
  PolyParser p(text);
  return p.parse();
}

} // namespace leala
