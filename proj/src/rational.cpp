#include "leala/rational.hpp"

namespace leala {

std::string rational_to_string(const Rational& r) {
  std::string out = rat_num(r).str();
  if (rat_den(r) != 1) {
    out += "/";
    out += rat_den(r).str();
  }
  return out;
}

std::optional<Rational> rational_from_string(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto parse_int = [](const std::string& s) -> std::optional<Int> {
    if (s.empty()) return std::nullopt;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return std::nullopt;
    return Int(s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto n = parse_int(text.substr(0, slash));
  auto d = parse_int(text.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rational(*n, *d);
}

} // namespace leala
