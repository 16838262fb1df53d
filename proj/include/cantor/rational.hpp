#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cantor {

using Int = boost::multiprecision::cpp_int;

/// Exact fraction. Arithmetic is arbitrary precision and always canonical
/// (gcd(p,q) = 1, q > 0). List fixtures additionally require values in (0,1];
/// that is checked where the fixture is ingested, not here, because partial
/// sums and interval bounds legitimately take the value 0.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int num, Int den);
  Rational(long long num, long long den) : Rational(Int(num), Int(den)) {}
  explicit Rational(long long n) : num_(n), den_(1) {}

  // Parses "p/q" or a bare integer "p". Throws invalid_input on junk or q = 0.
  static Rational parse(std::string_view text);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool in_unit_interval() const { return num_ > 0 && num_ <= den_; }

  std::string str() const;  // "p/q", or "p" when q = 1

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;

  bool operator==(const Rational& o) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

  // b^-k as an exact fraction.
  static Rational base_power(std::uint32_t base, std::size_t k);

 private:
  Int num_;
  Int den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cantor
