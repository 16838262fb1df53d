#include "cantor/binseq.hpp"

#include <ostream>
#include <utility>

#include "cantor/error.hpp"

namespace cantor::binseq {

namespace {

std::vector<Bit> parse_bits(std::string_view text, std::string_view what) {
  std::vector<Bit> out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1')
      throw invalid_input(std::string(what) + " may contain only 0 and 1, got '" + c + "'");
    out.push_back(static_cast<Bit>(c - '0'));
  }
  return out;
}

std::string bits_str(const std::vector<Bit>& bits) {
  std::string s;
  s.reserve(bits.size());
  for (Bit b : bits) s.push_back(static_cast<char>('0' + b));
  return s;
}

BitStream fetch(const BitStreamProvider& list, std::size_t k) {
  auto s = list(k);
  if (!s) throw provider_exhausted(k);
  return *std::move(s);
}

}  // namespace

BitWord::BitWord(std::initializer_list<int> bs) {
  bits.reserve(bs.size());
  for (int b : bs) bits.push_back(static_cast<Bit>(b != 0));
}

BitWord BitWord::operator+(const BitWord& other) const {
  BitWord out = *this;
  out.bits.insert(out.bits.end(), other.bits.begin(), other.bits.end());
  return out;
}

BitWord BitWord::take(std::size_t k) const {
  if (k > bits.size()) throw invalid_input("take beyond word length");
  BitWord out;
  out.bits.assign(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

std::string BitWord::str() const { return bits.empty() ? "ε" : bits_str(bits); }

BitStream::BitStream(std::vector<Bit> preperiod, std::vector<Bit> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw invalid_input("stream period must be nonempty");
  for (Bit b : preperiod_)
    if (b > 1) throw invalid_input("stream symbols must be 0 or 1");
  for (Bit b : period_)
    if (b > 1) throw invalid_input("stream symbols must be 0 or 1");
}

BitStream BitStream::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw invalid_input("stream fixture must be pre:period, e.g. 1:01 or :0");
  return BitStream(parse_bits(text.substr(0, colon), "preperiod"),
                   parse_bits(text.substr(colon + 1), "period"));
}

std::string BitStream::str() const { return bits_str(preperiod_) + ":" + bits_str(period_); }

Bit BitStream::at(std::size_t i) const {
  if (i == 0) throw invalid_input("stream positions are 1-based");
  if (i <= preperiod_.size()) return preperiod_[i - 1];
  return period_[(i - preperiod_.size() - 1) % period_.size()];
}

BitStreamProvider from_list(std::vector<BitStream> streams) {
  return [streams = std::move(streams)](std::size_t k) -> std::optional<BitStream> {
    if (k == 0 || k > streams.size()) return std::nullopt;
    return streams[k - 1];
  };
}

BitWord prefix(const BitStream& s, std::size_t n) {
  BitWord w;
  w.bits.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) w.push_back(s.at(i));
  return w;
}

BitWord classical_diagonal(const BitStreamProvider& list, std::size_t n) {
  if (n == 0) throw invalid_input("depth must be at least 1");
  BitWord c;
  c.bits.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) c.push_back(static_cast<Bit>(1 - fetch(list, i).at(i)));
  return c;
}

std::pair<BitWord, ConstructionTrace> inductive_sigma(const BitStreamProvider& list,
                                                      std::size_t n) {
  if (n == 0) throw invalid_input("depth must be at least 1");
  BitWord sigma;
  ConstructionTrace trace;
  sigma.bits.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    BitStream s_k = fetch(list, k);
    BitWord candidate = sigma;  // <sigma_i>_{i<k}
    candidate.push_back(0);     // * <0>
    BitWord segment = prefix(s_k, k);
    bool matched = candidate == segment;
    Bit emitted = matched ? Bit{1} : Bit{0};
    trace.push_back({k, candidate.str(), segment.str(), matched, std::string(1, '0' + emitted)});
    sigma.push_back(emitted);
  }
  return {std::move(sigma), std::move(trace)};
}

std::ostream& operator<<(std::ostream& os, const BitWord& w) { return os << w.str(); }
std::ostream& operator<<(std::ostream& os, const BitStream& s) { return os << s.str(); }

}  // namespace cantor::binseq
