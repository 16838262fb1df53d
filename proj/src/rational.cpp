#include "cantor/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <ostream>

#include "cantor/error.hpp"

namespace cantor {

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw invalid_input("denominator must be nonzero");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> Int {
    if (s.empty()) throw invalid_input("empty integer in rational literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw invalid_input("sign without digits in rational literal");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw invalid_input("rational literal must be p/q with integer p, q");
    return Int(std::string(s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text), Int(1));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  Int lhs = num_ * o.den_;
  Int rhs = o.num_ * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::base_power(std::uint32_t base, std::size_t k) {
  if (base < 2) throw invalid_input("base must be at least 2");
  Int den = 1;
  for (std::size_t i = 0; i < k; ++i) den *= base;
  return Rational(Int(1), den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace cantor
