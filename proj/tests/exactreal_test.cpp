#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "cantor/error.hpp"
#include "cantor/exactreal.hpp"
#include "cantor/oracle.hpp"

using namespace cantor;
using namespace cantor::exactreal;

namespace {

// The reference base-3 list: 0.1(2), 0.(1), 0.(2), 0.(21), 0.2(1), 0.(12).
std::vector<Rational> base3_list() {
  return {Rational(2, 3), Rational(1, 2), Rational(1, 1),
          Rational(7, 8), Rational(5, 6), Rational(5, 8)};
}

// Term-by-term summation, a separate route from DigitWord::value().
Rational replay_partial_sum(const DigitStream& d, std::size_t n) {
  Rational sum;
  for (std::size_t j = 1; j <= n; ++j)
    sum = sum + Rational(Int(d.at(j)), Int(1)) * Rational::base_power(d.base(), j);
  return sum;
}

}  // namespace

TEST_CASE("rational parsing and ordering") {
  CHECK_EQ(Rational::parse("2/4"), Rational(1, 2));
  CHECK_EQ(Rational::parse("1"), Rational(1, 1));
  CHECK_EQ(Rational::parse("7/8").str(), "7/8");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(0, 5).is_zero());
  CHECK_FALSE(Rational(3, 2).in_unit_interval());
  CHECK_THROWS_AS(Rational::parse("1/0"), invalid_input);
  CHECK_THROWS_AS(Rational::parse("a/b"), invalid_input);
  CHECK_THROWS_AS(Rational::parse(""), invalid_input);
}

TEST_CASE("expansion returns the non-terminating form") {
  DigitStream third = expansion(Rational(1, 3), 3);
  CHECK_EQ(third.preperiod(), std::vector<Digit>{0});
  CHECK_EQ(third.period(), std::vector<Digit>{2});
  CHECK_EQ(third.str(), "0.0(2)_3");

  for (Base b : {Base{2}, Base{3}, Base{10}}) {
    DigitStream one = expansion(Rational(1, 1), b);
    CHECK(one.preperiod().empty());
    CHECK_EQ(one.period(), std::vector<Digit>{b - 1});

    DigitStream unit = expansion(Rational(Int(1), Int(b)), b);  // the terminating case 1/b
    CHECK_EQ(unit.preperiod(), std::vector<Digit>{0});
    CHECK_EQ(unit.period(), std::vector<Digit>{b - 1});
  }

  DigitStream half = expansion(Rational(1, 2), 3);
  CHECK(half.preperiod().empty());
  CHECK_EQ(half.period(), std::vector<Digit>{1});
}

TEST_CASE("expansion sums back exactly for small denominators") {
  for (Base b : {Base{2}, Base{3}, Base{10}}) {
    for (int q = 1; q <= 20; ++q) {
      for (int p = 1; p <= q; ++p) {
        Rational r(p, q);
        DigitStream d = expansion(r, b);
        CHECK_EQ(d.value(), r);
        bool all_zero = true;
        for (Digit dg : d.period())
          if (dg != 0) all_zero = false;
        CHECK_FALSE(all_zero);
      }
    }
  }
}

TEST_CASE("partial sums are exact fractions") {
  DigitStream third = expansion(Rational(1, 3), 3);  // 0.0(2)_3
  CHECK_EQ(partial_sum(third, 0), Rational(0));
  CHECK_EQ(partial_sum(third, 1), Rational(0));
  CHECK_EQ(partial_sum(third, 3), Rational(8, 27));
  for (std::size_t n : {std::size_t{1}, std::size_t{4}, std::size_t{9}})
    CHECK_EQ(partial_sum(third, n), replay_partial_sum(third, n));
}

TEST_CASE("digit stream validation") {
  CHECK_THROWS_AS(DigitStream(3, {1}, {0}), invalid_input);      // ultimately 0
  CHECK_THROWS_AS(DigitStream(3, {1}, {0, 0}), invalid_input);   // ultimately 0
  CHECK_THROWS_AS(DigitStream(3, {3}, {1}), invalid_input);      // digit out of range
  CHECK_THROWS_AS(DigitStream(3, {1}, {}), invalid_input);       // empty period
  CHECK_THROWS_AS(DigitStream(1, {}, {0}), invalid_input);       // bad base
  CHECK_THROWS_AS(expansion(Rational(3, 2), 3), invalid_input);  // outside (0,1]
  CHECK_THROWS_AS(expansion(Rational(0), 3), invalid_input);
}

TEST_CASE("anti-diagonal digits on the reference list") {
  auto provider = from_list(base3_list());
  DigitWord c = anti_diagonal(provider, 3, 6);
  CHECK_EQ(c.digits, std::vector<Digit>{2, 2, 1, 2, 2, 1});
  CHECK_EQ(c.str(), "221221");

  // branch rule replayed on the diagonal digits
  for (std::size_t i = 1; i <= 6; ++i) {
    Digit diag = expansion(base3_list()[i - 1], 3).at(i);
    CHECK_EQ(c.digits[i - 1], diag == 1 ? 2 : 1);
    CHECK_NE(c.digits[i - 1], diag);
  }

  std::vector<Rational> ones(3, Rational(1, 1));
  CHECK_EQ(anti_diagonal(from_list(ones), 3, 3).digits, std::vector<Digit>{1, 1, 1});
  std::vector<Rational> halves(3, Rational(1, 2));  // 0.(1)_3
  CHECK_EQ(anti_diagonal(from_list(halves), 3, 3).digits, std::vector<Digit>{2, 2, 2});
}

TEST_CASE("inductive digits on the reference list") {
  auto [sigma, trace] = inductive_real(from_list(base3_list()), 3, 6);
  CHECK_EQ(sigma.digits, std::vector<Digit>{2, 1, 1, 1, 2, 1});
  REQUIRE_EQ(trace.size(), 6);
  CHECK(trace[0].matched);       // 1/3 equals 2/3's first digit sum
  CHECK_FALSE(trace[1].matched);
  CHECK(trace[4].matched);
  CHECK_EQ(trace[4].candidate, trace[4].target);

  // the two constructions really differ (index 2 on this list)
  DigitWord c = anti_diagonal(from_list(base3_list()), 3, 6);
  CHECK_NE(c.digits, sigma.digits);
  CHECK_NE(c.digits[1], sigma.digits[1]);

  // divergence: the partial value never equals the list element's segment
  Rational partial;
  for (std::size_t k = 1; k <= 6; ++k) {
    partial = partial + Rational(Int(sigma.digits[k - 1]), Int(1)) * Rational::base_power(3, k);
    CHECK_NE(partial, partial_sum(expansion(base3_list()[k - 1], 3), k));
  }
}

TEST_CASE("inductive digits single-element lists") {
  CHECK_EQ(inductive_real(from_list({Rational(1, 1)}), 3, 1).first.digits,
           std::vector<Digit>{1});  // first digit 2, not 1
  CHECK_EQ(inductive_real(from_list({Rational(2, 3)}), 3, 1).first.digits,
           std::vector<Digit>{2});  // 0.1(2): first digit is 1
}

TEST_CASE("paired binary constructions") {
  std::vector<Rational> ones(2, Rational(1, 1));
  CHECK_EQ(hanf_h(from_list(ones), 2).digits, std::vector<Digit>{1, 0, 1, 0});
  std::vector<Rational> thirds(2, Rational(1, 3));  // 0.(01)_2
  CHECK_EQ(hanf_h(from_list(thirds), 2).digits, std::vector<Digit>{1, 0, 1, 0});
  CHECK_EQ(hanf_h(from_list({Rational(2, 3)}), 1).digits, std::vector<Digit>{0, 1});

  CHECK_EQ(pair_s(from_list({Rational(1, 3)}), 1).digits, std::vector<Digit>{1, 0});
  CHECK_EQ(pair_s(from_list({Rational(1, 1)}), 1).digits, std::vector<Digit>{0, 1});
  CHECK_EQ(pair_s(from_list({Rational(1, 3), Rational(1, 1)}), 2).digits,
           std::vector<Digit>{1, 0, 0, 1});

  CHECK_EQ(pair_sigma(from_list({Rational(1, 4)}), 1).first.digits, std::vector<Digit>{0, 1});
  CHECK_EQ(pair_sigma(from_list({Rational(1, 3)}), 1).first.digits, std::vector<Digit>{1, 0});
}

TEST_CASE("paired constructions diverge pairwise on random lists") {
  oracle::SeededRng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> list;
    for (int k = 0; k < 8; ++k) list.push_back(oracle::random_unit_rational(rng, 64));
    auto provider = from_list(list);

    DigitWord h = hanf_h(provider, 8);
    DigitWord s = pair_s(provider, 8);
    DigitWord ps = pair_sigma(provider, 8).first;
    for (std::size_t k = 1; k <= 8; ++k) {
      DigitStream b = expansion(list[k - 1], 2);
      CHECK_NE(h.digits[2 * k - 1], b.at(2 * k));
      bool same_pair = s.digits[2 * k - 2] == b.at(2 * k - 1) && s.digits[2 * k - 1] == b.at(2 * k);
      CHECK_FALSE(same_pair);
      CHECK_NE(ps.digits[2 * k - 2], ps.digits[2 * k - 1]);  // pair is 01 or 10
      DigitWord head{2, std::vector<Digit>(ps.digits.begin(), ps.digits.begin() + 2 * k)};
      CHECK_NE(head.value(), partial_sum(b, 2 * k));
    }

    // exact interval containment for the inductive pairs
    Rational value = ps.value();
    Rational low = Rational(1, 3) * (Rational(1) - Rational::base_power(4, 8));
    CHECK(low <= value);
    CHECK(value <= Rational(2, 3));
  }
}

TEST_CASE("base preconditions are enforced") {
  auto provider = from_list(base3_list());
  CHECK_THROWS_AS(anti_diagonal(provider, 2, 3), invalid_input);
  CHECK_THROWS_AS(inductive_real(provider, 2, 3), invalid_input);
  CHECK_THROWS_AS(inductive_real(provider, 3, 0), invalid_input);
  CHECK_THROWS_AS(inductive_real(provider, 3, 7), provider_exhausted);
  CHECK_THROWS_AS(hanf_h(from_list({Rational(1, 2)}), 2), provider_exhausted);
  auto bad = from_list({Rational(3, 2)});
  CHECK_THROWS_AS(inductive_real(bad, 3, 1), invalid_input);
}

TEST_CASE("digit word rendering carries the base") {
  DigitWord w{3, {2, 1, 1}};
  CHECK_EQ(w.str(), "211");
  CHECK_EQ(w.value(), Rational(2 * 9 + 1 * 3 + 1, 27));
  DigitWord wide{16, {11, 3}};
  CHECK_EQ(wide.str(), "11,3");
}
