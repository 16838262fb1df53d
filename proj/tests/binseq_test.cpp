#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "cantor/binseq.hpp"
#include "cantor/error.hpp"
#include "cantor/oracle.hpp"

using namespace cantor;
using namespace cantor::binseq;

namespace {

// Literal re-evaluation of the branch condition against prefixes, kept apart
// from the library path so the two can disagree.
BitWord replay_sigma(const std::vector<BitStream>& list, std::size_t n) {
  BitWord sigma;
  for (std::size_t k = 1; k <= n; ++k) {
    BitWord candidate = sigma;
    candidate.push_back(0);
    sigma.push_back(candidate == prefix(list[k - 1], k) ? 1 : 0);
  }
  return sigma;
}

BitWord replay_diagonal(const std::vector<BitStream>& list, std::size_t n) {
  BitWord c;
  for (std::size_t i = 1; i <= n; ++i) c.push_back(1 - list[i - 1].at(i));
  return c;
}

}  // namespace

TEST_CASE("prefix unrolls the period rule") {
  CHECK_EQ(prefix(BitStream({}, {0}), 3), BitWord{0, 0, 0});
  CHECK_EQ(prefix(BitStream({1}, {0, 1}), 4), BitWord{1, 0, 1, 0});
  CHECK_EQ(prefix(BitStream({1}, {0, 1}), 0), BitWord{});
}

TEST_CASE("stream positions are 1-based and total") {
  BitStream s({1, 1}, {0, 1, 1});
  for (std::size_t i = 1; i <= 32; ++i) {
    Bit expected = i <= 2 ? 1 : std::vector<Bit>{0, 1, 1}[(i - 3) % 3];
    CHECK_EQ(s.at(i), expected);
  }
  CHECK_THROWS_AS(s.at(0), invalid_input);
}

TEST_CASE("stream fixture notation round-trips") {
  for (const char* text : {"1:01", ":0", ":1", "0110:101"}) {
    BitStream s = BitStream::parse(text);
    CHECK_EQ(s.str(), text);
    CHECK_EQ(BitStream::parse(s.str()), s);
  }
  CHECK_THROWS_AS(BitStream::parse("101"), invalid_input);   // no colon
  CHECK_THROWS_AS(BitStream::parse("1:"), invalid_input);    // empty period
  CHECK_THROWS_AS(BitStream::parse("1:02"), invalid_input);  // non-binary
}

TEST_CASE("word concatenation is associative with empty identity") {
  oracle::SeededRng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto word = [&rng] {
      BitWord w;
      for (std::uint64_t i = rng.below(5); i > 0; --i)
        w.push_back(static_cast<Bit>(rng.below(2)));
      return w;
    };
    BitWord a = word(), b = word(), c = word();
    CHECK_EQ((a + b) + c, a + (b + c));
    CHECK_EQ(a + BitWord{}, a);
    CHECK_EQ(BitWord{} + a, a);
  }
}

TEST_CASE("classical diagonal flips the diagonal bits") {
  std::vector<BitStream> ones(3, BitStream::parse(":1"));
  CHECK_EQ(classical_diagonal(from_list(ones), 3), BitWord{0, 0, 0});

  std::vector<BitStream> mixed{BitStream::parse(":1"), BitStream::parse(":0"),
                               BitStream::parse(":01")};
  CHECK_EQ(classical_diagonal(from_list(mixed), 3), replay_diagonal(mixed, 3));
  CHECK_EQ(classical_diagonal(from_list(mixed), 3), BitWord{0, 1, 1});

  std::vector<BitStream> one{BitStream::parse("10:110")};
  CHECK_EQ(classical_diagonal(from_list(one), 1), BitWord{1 - one[0].at(1)});
}

TEST_CASE("inductive word branches on prefix agreement") {
  std::vector<BitStream> list{BitStream::parse(":1"), BitStream::parse(":0"),
                              BitStream::parse(":01")};
  auto [sigma, trace] = inductive_sigma(from_list(list), 3);
  CHECK_EQ(sigma, replay_sigma(list, 3));
  CHECK_EQ(sigma, BitWord{0, 1, 1});
  REQUIRE_EQ(trace.size(), 3);
  CHECK_EQ(trace[0].candidate, "0");
  CHECK_EQ(trace[0].target, "1");
  CHECK_FALSE(trace[0].matched);
  CHECK(trace[1].matched);  // candidate 00 equals s_2's first two bits

  std::vector<BitStream> ones(4, BitStream::parse(":1"));
  CHECK_EQ(inductive_sigma(from_list(ones), 4).first, BitWord{0, 0, 0, 0});
}

TEST_CASE("both constructions start with the complement of the first bit") {
  oracle::SeededRng rng(20260810);
  for (int trial = 0; trial < 200; ++trial) {
    BitStream s = oracle::random_bitstream(rng, 3, 3);
    auto provider = from_list({s});
    BitWord sigma = inductive_sigma(provider, 1).first;
    CHECK_EQ(sigma.bits[0], 1 - s.at(1));
    CHECK_EQ(classical_diagonal(provider, 1), sigma);
  }
}

TEST_CASE("prefix divergence holds on an exhaustive small family") {
  auto family = oracle::stream_family(1, 1);  // 6 streams
  REQUIRE_EQ(family.size(), 6);
  std::vector<std::size_t> idx;
  for (std::size_t len = 1; len <= 3; ++len) {
    idx.assign(len, 0);
    for (;;) {
      std::vector<BitStream> list;
      for (std::size_t i : idx) list.push_back(family[i]);
      BitWord sigma = inductive_sigma(from_list(list), len).first;
      for (std::size_t k = 1; k <= len; ++k)
        REQUIRE_NE(sigma.take(k), prefix(list[k - 1], k));
      std::size_t pos = 0;
      while (pos < len && ++idx[pos] == family.size()) idx[pos++] = 0;
      if (pos == len) break;
    }
  }
}

TEST_CASE("identical providers give identical outputs and traces") {
  std::vector<BitStream> list{BitStream::parse("1:01"), BitStream::parse(":10")};
  auto a = inductive_sigma(from_list(list), 2);
  auto b = inductive_sigma(from_list(list), 2);
  CHECK_EQ(a.first, b.first);
  CHECK(a.second == b.second);
}

TEST_CASE("rule-generated infinite lists work through the provider") {
  // s_k = constant-k-mod-2 stream, defined by a rule instead of a list
  BitStreamProvider rule = [](std::size_t k) -> std::optional<BitStream> {
    return BitStream({}, {static_cast<Bit>(k % 2)});
  };
  BitWord sigma = inductive_sigma(rule, 6).first;
  CHECK_EQ(sigma.size(), 6);
  for (std::size_t k = 1; k <= 6; ++k)
    CHECK_NE(sigma.take(k), prefix(BitStream({}, {static_cast<Bit>(k % 2)}), k));
}

TEST_CASE("exhausted or empty lists are reported") {
  std::vector<BitStream> two{BitStream::parse(":1"), BitStream::parse(":0")};
  CHECK_THROWS_AS(inductive_sigma(from_list(two), 3), provider_exhausted);
  CHECK_THROWS_AS(classical_diagonal(from_list(two), 5), provider_exhausted);
  CHECK_THROWS_AS(inductive_sigma(from_list(two), 0), invalid_input);
}
