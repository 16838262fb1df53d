#include "cantor/exactreal.hpp"

#include <map>
#include <ostream>
#include <utility>

#include "cantor/error.hpp"

namespace cantor::exactreal {

namespace {

void check_digits(const std::vector<Digit>& digits, Base base) {
  for (Digit d : digits)
    if (d >= base) throw invalid_input("digit out of range for base " + std::to_string(base));
}

std::string digits_str(const std::vector<Digit>& digits, Base base) {
  std::string s;
  bool compact = base <= 10;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (!compact && i > 0) s.push_back(',');
    s += std::to_string(digits[i]);
  }
  return s;
}

// Integer value of a digit word read in the given base.
Int digits_int(const std::vector<Digit>& digits, Base base) {
  Int v = 0;
  for (Digit d : digits) v = v * base + d;
  return v;
}

Int pow_int(Base base, std::size_t k) {
  Int v = 1;
  for (std::size_t i = 0; i < k; ++i) v *= base;
  return v;
}

Rational fetch(const RationalProvider& list, std::size_t k) {
  auto r = list(k);
  if (!r) throw provider_exhausted(k);
  if (!r->in_unit_interval())
    throw invalid_input("list element " + std::to_string(k) + " must lie in (0,1], got " +
                        r->str());
  return *r;
}

}  // namespace

Rational DigitWord::value() const {
  // sum d_j b^-j = digits_int / b^n
  return Rational(digits_int(digits, base), pow_int(base, digits.size()));
}

std::string DigitWord::str() const { return digits_str(digits, base); }

DigitStream::DigitStream(Base base, std::vector<Digit> preperiod, std::vector<Digit> period)
    : base_(base), preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (base_ < 2) throw invalid_input("base must be at least 2");
  if (period_.empty()) throw invalid_input("expansion period must be nonempty");
  check_digits(preperiod_, base_);
  check_digits(period_, base_);
  bool all_zero = true;
  for (Digit d : period_)
    if (d != 0) all_zero = false;
  if (all_zero) throw invalid_input("expansion must not be ultimately 0");
}

Digit DigitStream::at(std::size_t i) const {
  if (i == 0) throw invalid_input("digit positions are 1-based");
  if (i <= preperiod_.size()) return preperiod_[i - 1];
  return period_[(i - preperiod_.size() - 1) % period_.size()];
}

DigitWord DigitStream::take(std::size_t n) const {
  DigitWord w;
  w.base = base_;
  w.digits.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) w.digits.push_back(at(i));
  return w;
}

Rational DigitStream::value() const {
  // preperiod part plus the repeating tail: P/b^L + R/(b^L (b^m - 1))
  Int p = digits_int(preperiod_, base_);
  Int r = digits_int(period_, base_);
  Int bl = pow_int(base_, preperiod_.size());
  Int bm1 = pow_int(base_, period_.size()) - 1;
  return Rational(p * bm1 + r, bl * bm1);
}

std::string DigitStream::str() const {
  return "0." + digits_str(preperiod_, base_) + "(" + digits_str(period_, base_) + ")_" +
         std::to_string(base_);
}

RationalProvider from_list(std::vector<Rational> values) {
  return [values = std::move(values)](std::size_t k) -> std::optional<Rational> {
    if (k == 0 || k > values.size()) return std::nullopt;
    return values[k - 1];
  };
}

DigitStream expansion(const Rational& r, Base base) {
  if (base < 2) throw invalid_input("base must be at least 2");
  if (!r.in_unit_interval()) throw invalid_input("expansion requires a value in (0,1]");
  const Int& q = r.den();

  // Long division that keeps the remainder in (0, q], which forces the
  // non-terminating branch: digit i is ceil(rem*b/q) - 1 and the tail value
  // stays strictly positive. The remainder determines every later digit, so
  // the first repeated remainder closes the (minimal) period.
  std::vector<Digit> digits;
  std::map<Int, std::size_t> seen;  // remainder -> 1-based digit index it precedes
  Int rem = r.num();
  for (std::size_t i = 1;; ++i) {
    auto [it, fresh] = seen.emplace(rem, i);
    if (!fresh) {
      std::size_t start = it->second;  // period begins at digit index `start`
      std::vector<Digit> pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start - 1));
      std::vector<Digit> per(digits.begin() + static_cast<std::ptrdiff_t>(start - 1), digits.end());
      return DigitStream(base, std::move(pre), std::move(per));
    }
    Int scaled = rem * base;
    Int d = (scaled - 1) / q;  // ceil(scaled/q) - 1
    digits.push_back(static_cast<Digit>(d));
    rem = scaled - d * q;
  }
}

Rational partial_sum(const DigitStream& d, std::size_t n) { return d.take(n).value(); }

DigitWord anti_diagonal(const RationalProvider& list, Base base, std::size_t n) {
  if (base <= 2) throw invalid_input("base must exceed 2 for the anti-diagonal construction");
  if (n == 0) throw invalid_input("depth must be at least 1");
  DigitWord c;
  c.base = base;
  c.digits.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    Digit diag = expansion(fetch(list, i), base).at(i);
    c.digits.push_back(diag == 1 ? 2 : 1);
  }
  return c;
}

std::pair<DigitWord, ConstructionTrace> inductive_real(const RationalProvider& list, Base base,
                                                       std::size_t n) {
  if (base <= 2) throw invalid_input("base must exceed 2 for the inductive construction");
  if (n == 0) throw invalid_input("depth must be at least 1");
  DigitWord sigma;
  sigma.base = base;
  ConstructionTrace trace;
  Rational partial;  // sum of sigma_i b^-i so far
  for (std::size_t k = 1; k <= n; ++k) {
    Rational r_k = fetch(list, k);
    Rational candidate = partial + Rational::base_power(base, k);
    Rational segment = partial_sum(expansion(r_k, base), k);
    bool matched = candidate == segment;
    Digit emitted = matched ? 2 : 1;
    trace.push_back({k, candidate.str(), segment.str(), matched, std::to_string(emitted)});
    sigma.digits.push_back(emitted);
    partial = partial + Rational(Int(emitted), Int(1)) * Rational::base_power(base, k);
  }
  return {std::move(sigma), std::move(trace)};
}

DigitWord hanf_h(const RationalProvider& list, std::size_t pairs) {
  if (pairs == 0) throw invalid_input("pair count must be at least 1");
  DigitWord h;
  h.base = 2;
  h.digits.reserve(2 * pairs);
  for (std::size_t k = 1; k <= pairs; ++k) {
    Digit b = expansion(fetch(list, k), 2).at(2 * k);
    if (b == 0) {
      h.digits.push_back(0);
      h.digits.push_back(1);
    } else {
      h.digits.push_back(1);
      h.digits.push_back(0);
    }
  }
  return h;
}

DigitWord pair_s(const RationalProvider& list, std::size_t pairs) {
  if (pairs == 0) throw invalid_input("pair count must be at least 1");
  DigitWord s;
  s.base = 2;
  s.digits.reserve(2 * pairs);
  for (std::size_t k = 1; k <= pairs; ++k) {
    DigitStream b = expansion(fetch(list, k), 2);
    bool is01 = b.at(2 * k - 1) == 0 && b.at(2 * k) == 1;
    if (is01) {
      s.digits.push_back(1);
      s.digits.push_back(0);
    } else {
      s.digits.push_back(0);
      s.digits.push_back(1);
    }
  }
  return s;
}

std::pair<DigitWord, ConstructionTrace> pair_sigma(const RationalProvider& list,
                                                   std::size_t pairs) {
  if (pairs == 0) throw invalid_input("pair count must be at least 1");
  DigitWord sigma;
  sigma.base = 2;
  ConstructionTrace trace;
  Rational partial;  // sum through position 2k-2
  for (std::size_t k = 1; k <= pairs; ++k) {
    Rational r_k = fetch(list, k);
    Rational candidate = partial + Rational::base_power(2, 2 * k);
    Rational segment = partial_sum(expansion(r_k, 2), 2 * k);
    bool matched = candidate == segment;
    trace.push_back({k, candidate.str(), segment.str(), matched, matched ? "10" : "01"});
    if (matched) {
      sigma.digits.push_back(1);
      sigma.digits.push_back(0);
      partial = partial + Rational::base_power(2, 2 * k - 1);
    } else {
      sigma.digits.push_back(0);
      sigma.digits.push_back(1);
      partial = partial + Rational::base_power(2, 2 * k);
    }
  }
  return {std::move(sigma), std::move(trace)};
}

std::ostream& operator<<(std::ostream& os, const DigitWord& w) { return os << w.str(); }
std::ostream& operator<<(std::ostream& os, const DigitStream& s) { return os << s.str(); }

}  // namespace cantor::exactreal
