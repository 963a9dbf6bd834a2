#include "sojourn/qr2.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace sojourn {

Qr2::Qr2(Rational rat, Rational rad) : rat_(std::move(rat)), rad_(std::move(rad)) {
  rat_.canonicalize();
  rad_.canonicalize();
}

Qr2 Qr2::inverse() const {
  if (is_zero()) throw DivisionByZero("Qr2: division by zero");
  Rational n = norm();
  return Qr2(rat_ / n, -rad_ / n);
}

int Qr2::sign() const {
  int sa = sgn(rat_);
  int sb = sgn(rad_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and 2b^2 wins (they are never equal).
  return ::cmp(rat_ * rat_, 2 * rad_ * rad_) > 0 ? sa : sb;
}

double Qr2::to_double() const { return rat_.get_d() + rad_.get_d() * std::sqrt(2.0); }

Qr2& Qr2::operator+=(const Qr2& o) {
  rat_ += o.rat_;
  rad_ += o.rad_;
  return *this;
}

Qr2& Qr2::operator-=(const Qr2& o) {
  rat_ -= o.rat_;
  rad_ -= o.rad_;
  return *this;
}

Qr2& Qr2::operator*=(const Qr2& o) {
  if (o.is_rational()) {
    rat_ *= o.rat_;
    rad_ *= o.rat_;
    return *this;
  }
  Rational a = rat_ * o.rat_ + 2 * rad_ * o.rad_;
  Rational b = rat_ * o.rad_ + rad_ * o.rat_;
  rat_ = std::move(a);
  rad_ = std::move(b);
  return *this;
}

Qr2& Qr2::operator/=(const Qr2& o) { return *this *= o.inverse(); }

std::string Qr2::to_string() const {
  if (is_rational()) return rat_.get_str();
  std::string out;
  if (sgn(rat_) != 0) {
    out = rat_.get_str();
    out += sgn(rad_) < 0 ? " - " : " + ";
    out += Rational(abs(rad_)).get_str();
  } else {
    out = rad_.get_str();
  }
  out += "*sqrt(2)";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Qr2& x) { return os << x.to_string(); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// "c*sqrt(2)", "sqrt(2)", "-sqrt(2)" -> c.
bool parse_radical(std::string_view term, Rational& out) {
  constexpr std::string_view kRoot = "sqrt(2)";
  term = trim(term);
  if (term.size() < kRoot.size() || term.substr(term.size() - kRoot.size()) != kRoot) return false;
  std::string_view coeff = trim(term.substr(0, term.size() - kRoot.size()));
  if (coeff.empty() || coeff == "+") {
    out = 1;
  } else if (coeff == "-") {
    out = -1;
  } else {
    if (coeff.back() != '*') throw ParseError("malformed radical term: " + std::string(term));
    out = parse_rational(coeff.substr(0, coeff.size() - 1));
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty rational");
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t j = i; j < text.size(); ++j) {
    char c = text[j];
    if (c == '/' && !seen_slash) {
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw ParseError("malformed rational: " + std::string(text));
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) {
    throw ParseError("malformed rational: " + std::string(text));
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("malformed rational: " + s);
  if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

Qr2 Qr2::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty Qr2 literal");
  // Split at a binary '+' or '-' (one preceded by a space, not at position 0).
  for (std::size_t i = 1; i + 1 < text.size(); ++i) {
    char c = text[i];
    if ((c == '+' || c == '-') && text[i - 1] == ' ') {
      Rational rat = parse_rational(text.substr(0, i));
      Rational rad;
      if (!parse_radical(text.substr(i + 1), rad)) {
        throw ParseError("expected sqrt(2) term in: " + std::string(text));
      }
      if (c == '-') rad = -rad;
      return Qr2(rat, rad);
    }
  }
  Rational rad;
  if (parse_radical(text, rad)) return Qr2(0, rad);
  return Qr2(parse_rational(text));
}

}  // namespace sojourn
