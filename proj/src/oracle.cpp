#include "cantor/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <span>
#include <sstream>

#include "cantor/error.hpp"

namespace cantor::oracle {

namespace {

using binseq::BitStream;
using binseq::BitWord;
using exactreal::Base;
using exactreal::Digit;
using exactreal::DigitStream;
using exactreal::DigitWord;
using powerset::ChainCondition;
using powerset::PowersetInstance;
using powerset::Subset;
using powerset::subset_str;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }

// ---------------------------------------------------------------------------
// Set-construction property checks. Each takes already-computed witnesses so
// the mutation self-test can feed corrupted ones through the same path.
// ---------------------------------------------------------------------------

void check_inductive_b_local(const PowersetInstance& inst, Subset b,
                             std::vector<Failure>& out) {
  for (std::size_t a = 0; a < inst.size(); ++a) {
    Subset up = inst.up_to(a);
    if ((b & up) == (inst.f(a) & up))
      out.push_back(
          {inst.str(), "inductive_b.local", "segments agree at a=" + std::to_string(a)});
  }
}

void check_not_in_range(const PowersetInstance& inst, Subset s, const std::string& property,
                        std::vector<Failure>& out) {
  if (auto a = powerset::in_range(inst, s))
    out.push_back({inst.str(), property,
                   "f(" + std::to_string(*a) + ") = " + subset_str(s)});
}

void check_chain_maximal(const PowersetInstance& inst, Subset chain, ChainCondition cond,
                         const std::string& property, std::vector<Failure>& out) {
  for (std::size_t b = 0; b < inst.size(); ++b) {
    if (chain >> b & 1) continue;
    bool extends = cond == ChainCondition::kStar ? inst.f(b) == chain
                                                 : subset_of(inst.f(b), chain);
    if (extends)
      out.push_back({inst.str(), property, "chain extends by b=" + std::to_string(b)});
  }
}

void check_stage_shape(const PowersetInstance& inst, const powerset::StageSequence& seq,
                       std::vector<Failure>& out) {
  Subset fix = seq.fixpoint();
  for (std::size_t i = 0; i + 1 < seq.stages.size(); ++i)
    if (!subset_of(seq.stages[i], seq.stages[i + 1]))
      out.push_back({inst.str(), "stages.shape", "stages not increasing at " + std::to_string(i)});
  for (std::size_t i = 0; i < seq.stages.size(); ++i)
    if (!subset_of(seq.stages[i], fix))
      out.push_back({inst.str(), "stages.shape", "stage overshoots at " + std::to_string(i)});
  if (seq.fixpoint_index > inst.size() + 1)
    out.push_back({inst.str(), "stages.shape",
                   "fixpoint index " + std::to_string(seq.fixpoint_index)});
  // literal re-application of the stage operator
  Subset phi = 0;
  for (std::size_t x = 0; x < inst.size(); ++x)
    if (subset_of(inst.f(x), fix)) phi |= Subset{1} << x;
  if (phi != fix)
    out.push_back({inst.str(), "stages.fixpoint", "operator moves " + subset_str(fix)});
}

// Literal chain search: exists x_1..x_k with x_1 in f(a), x_{i+1} in f(x_i),
// a in f(x_k). Forward enumeration, independent of the backward-set route in
// powerset::d_n.
bool chain_closes(const PowersetInstance& inst, std::size_t a, std::size_t prev,
                  std::size_t remaining) {
  if (remaining == 0) return (inst.f(prev) >> a & 1) != 0;
  for (std::size_t x = 0; x < inst.size(); ++x)
    if (inst.f(prev) >> x & 1)
      if (chain_closes(inst, a, x, remaining - 1)) return true;
  return false;
}

Subset brute_force_dn(const PowersetInstance& inst, std::size_t chain) {
  Subset out = 0;
  for (std::size_t a = 0; a < inst.size(); ++a) {
    bool closes = chain == 0 ? (inst.f(a) >> a & 1) != 0 : chain_closes(inst, a, a, chain);
    if (!closes) out |= Subset{1} << a;
  }
  return out;
}

void check_dn_definition(const PowersetInstance& inst, std::size_t chain, Subset dn,
                         std::vector<Failure>& out) {
  Subset expected = brute_force_dn(inst, chain);
  if (dn != expected)
    out.push_back({inst.str(), "dn.definition",
                   "k=" + std::to_string(chain) + " got " + subset_str(dn) + " expected " +
                       subset_str(expected)});
}

// All maximal chain sets under the given condition, over every choice
// function. The condition only sees the set of predecessors, so memoizing on
// the set covers every pick order.
void collect_maximal_chains(const PowersetInstance& inst, ChainCondition cond, Subset chain,
                            std::set<Subset>& expanded, std::set<Subset>& maximal) {
  if (!expanded.insert(chain).second) return;
  bool extended = false;
  for (std::size_t b = 0; b < inst.size(); ++b) {
    if (chain >> b & 1) continue;
    bool ok = cond == ChainCondition::kStar ? inst.f(b) == chain
                                            : subset_of(inst.f(b), chain);
    if (ok) {
      extended = true;
      collect_maximal_chains(inst, cond, chain | (Subset{1} << b), expanded, maximal);
    }
  }
  if (!extended) maximal.insert(chain);
}

void check_all_maximal_chains(const PowersetInstance& inst, std::vector<Failure>& out) {
  for (ChainCondition cond : {ChainCondition::kStar, ChainCondition::kRelaxed}) {
    std::set<Subset> expanded, maximal;
    collect_maximal_chains(inst, cond, 0, expanded, maximal);
    for (Subset chain : maximal)
      if (auto a = powerset::in_range(inst, chain))
        out.push_back({inst.str(), "chain.all_maximal",
                       std::string(cond == ChainCondition::kStar ? "star" : "relaxed") +
                           " chain " + subset_str(chain) + " = f(" + std::to_string(*a) + ")"});
  }
}

// ---------------------------------------------------------------------------
// Sequence property checks.
// ---------------------------------------------------------------------------

std::string render_stream_list(std::span<const BitStream> list) {
  std::string s = "[";
  for (std::size_t i = 0; i < list.size(); ++i) s += (i ? " " : "") + list[i].str();
  return s + "]";
}

std::string render_rational_list(std::span<const Rational> list) {
  std::string s = "[";
  for (std::size_t i = 0; i < list.size(); ++i) s += (i ? " " : "") + list[i].str();
  return s + "]";
}

void check_sigma_divergence(std::span<const BitStream> list, const BitWord& sigma,
                            std::vector<Failure>& out) {
  for (std::size_t k = 1; k <= list.size(); ++k)
    if (sigma.take(k) == binseq::prefix(list[k - 1], k))
      out.push_back({render_stream_list(list), "binseq.divergence",
                     "prefix agrees with s_" + std::to_string(k)});
}

void check_binary_list(std::span<const BitStream> list, std::vector<Failure>& out) {
  std::vector<BitStream> copy(list.begin(), list.end());
  auto provider = binseq::from_list(copy);
  BitWord sigma = binseq::inductive_sigma(provider, list.size()).first;
  check_sigma_divergence(list, sigma, out);
  BitWord c = binseq::classical_diagonal(provider, list.size());
  for (std::size_t i = 1; i <= list.size(); ++i)
    if (c.bits[i - 1] == list[i - 1].at(i))
      out.push_back({render_stream_list(list), "binseq.classical",
                     "diagonal agrees at i=" + std::to_string(i)});
  if (sigma.bits[0] != 1 - list[0].at(1))
    out.push_back({render_stream_list(list), "binseq.base_case", "sigma_1 != 1 - s_1|_1"});
}

// Raw digit form so a corrupted terminating expansion is representable; the
// DigitStream constructor itself refuses all-zero periods.
void check_expansion_raw(const Rational& r, Base base, const std::vector<Digit>& preperiod,
                         const std::vector<Digit>& period, std::vector<Failure>& out) {
  std::string what = "expansion(" + r.str() + ", base " + std::to_string(base) + ")";
  bool all_zero = true;
  for (Digit d : period)
    if (d != 0) all_zero = false;
  if (all_zero) {
    out.push_back({what, "expansion.period", "period is all zero"});
    return;
  }
  Int p = 0, rr = 0;
  for (Digit d : preperiod) p = p * base + d;
  for (Digit d : period) rr = rr * base + d;
  Int bl = 1, bm = 1;
  for (std::size_t i = 0; i < preperiod.size(); ++i) bl *= base;
  for (std::size_t i = 0; i < period.size(); ++i) bm *= base;
  Rational value(p * (bm - 1) + rr, bl * (bm - 1));
  if (!(value == r))
    out.push_back({what, "expansion.value", "sums to " + value.str()});
}

void check_rational_list(const std::vector<Rational>& list, std::size_t depth,
                         const std::vector<Base>& bases, std::vector<Failure>& out) {
  std::string what = render_rational_list(list);
  auto provider = exactreal::from_list(list);

  for (Base base : bases) {
    DigitWord anti = exactreal::anti_diagonal(provider, base, depth);
    for (std::size_t i = 1; i <= depth; ++i) {
      Digit c = anti.digits[i - 1];
      if (c != 1 && c != 2)
        out.push_back({what, "real.anti.digits", "c_" + std::to_string(i) + " out of {1,2}"});
      if (c == exactreal::expansion(list[i - 1], base).at(i))
        out.push_back({what, "real.anti.diagonal", "agrees at i=" + std::to_string(i)});
    }

    DigitWord sigma = exactreal::inductive_real(provider, base, depth).first;
    for (std::size_t k = 1; k <= depth; ++k) {
      DigitWord head{base, std::vector<Digit>(sigma.digits.begin(),
                                              sigma.digits.begin() + static_cast<std::ptrdiff_t>(k))};
      Rational target = exactreal::partial_sum(exactreal::expansion(list[k - 1], base), k);
      if (head.value() == target)
        out.push_back({what, "real.inductive.divergence",
                       "base " + std::to_string(base) + " agrees at k=" + std::to_string(k)});
    }
  }

  // binary pairwise constructions: pair k concerns r_k
  DigitWord h = exactreal::hanf_h(provider, depth);
  DigitWord s = exactreal::pair_s(provider, depth);
  DigitWord ps = exactreal::pair_sigma(provider, depth).first;
  for (std::size_t k = 1; k <= depth; ++k) {
    DigitStream b = exactreal::expansion(list[k - 1], 2);
    if (h.digits[2 * k - 1] == b.at(2 * k))
      out.push_back({what, "real.hanf.pair", "h_{2k} agrees at k=" + std::to_string(k)});
    if (s.digits[2 * k - 2] == b.at(2 * k - 1) && s.digits[2 * k - 1] == b.at(2 * k))
      out.push_back({what, "real.pairs.pair", "pair agrees at k=" + std::to_string(k)});

    Digit hi = ps.digits[2 * k - 2], lo = ps.digits[2 * k - 1];
    if (!((hi == 0 && lo == 1) || (hi == 1 && lo == 0)))
      out.push_back({what, "real.pairsigma.shape", "pair k=" + std::to_string(k)});
    DigitWord head{2, std::vector<Digit>(ps.digits.begin(),
                                         ps.digits.begin() + static_cast<std::ptrdiff_t>(2 * k))};
    if (head.value() == exactreal::partial_sum(b, 2 * k))
      out.push_back({what, "real.pairsigma.divergence", "agrees at k=" + std::to_string(k)});
  }
  Rational value = ps.value();
  Rational low = Rational(1, 3) * (Rational(1) - Rational::base_power(4, depth));
  if (value < low || Rational(2, 3) < value)
    out.push_back({what, "real.pairsigma.interval", "value " + value.str()});
}

}  // namespace

// ---------------------------------------------------------------------------
// Enumeration.
// ---------------------------------------------------------------------------

InstanceEnumerator::InstanceEnumerator(std::size_t n, OrderMode mode) : n_(n), mode_(mode) {
  order_.resize(n);
  for (std::size_t i = 0; i < n; ++i) order_[i] = i;
  f_.assign(n, 0);
}

std::optional<powerset::PowersetInstance> InstanceEnumerator::next() {
  if (done_) return std::nullopt;
  PowersetInstance inst(n_, order_, f_);
  advance();
  return inst;
}

void InstanceEnumerator::advance() {
  Subset full = n_ == 64 ? ~Subset{0} : (Subset{1} << n_) - 1;
  for (auto& row : f_) {
    if (row < full) {
      ++row;
      return;
    }
    row = 0;
  }
  if (mode_ == OrderMode::kAll && std::next_permutation(order_.begin(), order_.end())) return;
  done_ = true;
}

Int InstanceEnumerator::count(std::size_t n, OrderMode mode) {
  Int functions = 1;
  for (std::size_t i = 0; i < n * n; ++i) functions *= 2;  // (2^n)^n
  if (mode == OrderMode::kIdentity) return functions;
  Int orders = 1;
  for (std::size_t i = 2; i <= n; ++i) orders *= i;
  return functions * orders;
}

// ---------------------------------------------------------------------------
// Reports.
// ---------------------------------------------------------------------------

void VerificationReport::merge(const VerificationReport& other) {
  instances_checked += other.instances_checked;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

void VerificationReport::sort_failures() { std::sort(failures.begin(), failures.end()); }

std::string VerificationReport::str() const {
  std::ostringstream os;
  os << "instances checked: " << instances_checked << "\n";
  os << "failures: " << failures.size() << "\n";
  for (const auto& f : failures)
    os << "  FAIL " << f.property << " :: " << f.instance << " :: " << f.witness << "\n";
  os.precision(3);
  os << "elapsed: " << std::fixed << elapsed_seconds << " s\n";
  return os.str();
}

std::uint64_t SeededRng::below(std::uint64_t bound) {
  return bound == 0 ? 0 : eng_() % bound;
}

Rational random_unit_rational(SeededRng& rng, std::uint64_t max_denominator) {
  std::uint64_t den = 1 + rng.below(max_denominator);
  std::uint64_t num = 1 + rng.below(den);
  return Rational(Int(num), Int(den));
}

binseq::BitStream random_bitstream(SeededRng& rng, std::size_t max_preperiod,
                                   std::size_t max_period) {
  std::vector<binseq::Bit> pre(rng.below(max_preperiod + 1));
  std::vector<binseq::Bit> per(1 + rng.below(max_period));
  for (auto& b : pre) b = static_cast<binseq::Bit>(rng.below(2));
  for (auto& b : per) b = static_cast<binseq::Bit>(rng.below(2));
  return binseq::BitStream(std::move(pre), std::move(per));
}

powerset::PowersetInstance random_instance(SeededRng& rng, std::size_t n) {
  Subset full = n == 64 ? ~Subset{0} : (Subset{1} << n) - 1;
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::vector<Subset> f(n);
  for (auto& row : f) row = rng.raw() & full;
  return PowersetInstance(n, std::move(order), std::move(f));
}

std::vector<binseq::BitStream> stream_family(std::size_t max_preperiod,
                                             std::size_t max_period) {
  std::vector<binseq::BitStream> family;
  auto words = [](std::size_t len) {
    std::vector<std::vector<binseq::Bit>> out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      std::vector<binseq::Bit> w(len);
      for (std::size_t i = 0; i < len; ++i) w[i] = static_cast<binseq::Bit>(v >> i & 1);
      out.push_back(std::move(w));
    }
    return out;
  };
  for (std::size_t pl = 0; pl <= max_preperiod; ++pl)
    for (const auto& pre : words(pl))
      for (std::size_t ql = 1; ql <= max_period; ++ql)
        for (const auto& per : words(ql)) family.emplace_back(pre, per);
  return family;
}

// ---------------------------------------------------------------------------
// Verification drivers.
// ---------------------------------------------------------------------------

VerificationReport verify_instance(const powerset::PowersetInstance& inst,
                                   std::size_t max_chain) {
  auto t0 = Clock::now();
  VerificationReport rep;
  rep.instances_checked = 1;
  auto& out = rep.failures;

  auto b = powerset::inductive_B(inst);
  check_inductive_b_local(inst, b.subset, out);
  check_not_in_range(inst, b.subset, "inductive_b.range", out);

  auto star = powerset::greedy_chain(inst, ChainCondition::kStar);
  check_chain_maximal(inst, star.subset, ChainCondition::kStar, "chain.star.maximal", out);
  check_not_in_range(inst, star.subset, "chain.star.range", out);

  auto relaxed = powerset::greedy_chain(inst, ChainCondition::kRelaxed);
  check_chain_maximal(inst, relaxed.subset, ChainCondition::kRelaxed,
                      "chain.relaxed.maximal", out);
  check_not_in_range(inst, relaxed.subset, "chain.relaxed.range", out);

  auto [seq, fix] = powerset::stages(inst);
  check_stage_shape(inst, seq, out);
  check_not_in_range(inst, fix.subset, "stages.range", out);

  auto dinf = powerset::d_infinity(inst);
  if (dinf.subset != fix.subset)
    out.push_back({inst.str(), "dinf.eq_fixpoint",
                   "stages " + subset_str(fix.subset) + " vs chains " + subset_str(dinf.subset)});
  check_not_in_range(inst, dinf.subset, "dinf.range", out);

  // the singleton-stage strategy: its union must land on the same fixpoint
  if (relaxed.subset != fix.subset)
    out.push_back({inst.str(), "chain.relaxed_union",
                   subset_str(relaxed.subset) + " vs " + subset_str(fix.subset)});

  for (std::size_t k = 0; k <= max_chain; ++k) {
    auto dk = powerset::d_n(inst, k);
    check_not_in_range(inst, dk.subset, "dn.range", out);
    check_dn_definition(inst, k, dk.subset, out);
  }

  if (inst.size() <= 3) check_all_maximal_chains(inst, out);

  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

VerificationReport verify_powerset(const PowersetSweep& sweep) {
  auto t0 = Clock::now();
  VerificationReport rep;
  for (std::size_t n = 0; n <= sweep.max_n_all; ++n) {
    InstanceEnumerator en(n, OrderMode::kAll);
    while (auto inst = en.next()) rep.merge(verify_instance(*inst, sweep.max_chain));
  }
  if (sweep.identity_n > 0) {
    InstanceEnumerator en(sweep.identity_n, OrderMode::kIdentity);
    while (auto inst = en.next()) rep.merge(verify_instance(*inst, sweep.max_chain));
  }
  rep.sort_failures();
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

VerificationReport verify_sequences(std::size_t depth, const SequenceFamily& family) {
  auto t0 = Clock::now();
  VerificationReport rep;

  if (family.max_period > 0 && family.max_list > 0 && depth > 0) {
    auto streams = stream_family(family.max_preperiod, family.max_period);
    std::size_t longest = std::min(family.max_list, depth);
    std::vector<BitStream> list;
    for (std::size_t len = 1; len <= longest; ++len) {
      std::vector<std::size_t> idx(len, 0);
      for (;;) {
        list.clear();
        for (std::size_t i : idx) list.push_back(streams[i]);
        check_binary_list(list, rep.failures);
        ++rep.instances_checked;
        std::size_t pos = 0;
        while (pos < len && ++idx[pos] == streams.size()) idx[pos++] = 0;
        if (pos == len) break;
      }
    }
  }

  SeededRng rng(family.seed);
  for (std::size_t i = 0; i < family.rational_lists; ++i) {
    std::vector<Rational> list;
    list.reserve(depth);
    for (std::size_t k = 0; k < depth; ++k)
      list.push_back(random_unit_rational(rng, family.max_denominator));
    check_rational_list(list, depth, family.bases, rep.failures);
    ++rep.instances_checked;
  }

  for (const auto& list : family.explicit_lists) {
    if (list.empty()) continue;
    check_rational_list(list, list.size(), family.bases, rep.failures);
    ++rep.instances_checked;
  }

  rep.sort_failures();
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------
// Mutation self-test: five deliberate corruptions, each aimed at the one
// property check that must report it.
// ---------------------------------------------------------------------------

std::vector<MutationOutcome> mutation_self_test() {
  std::vector<MutationOutcome> outcomes;

  {  // 1. inductive_B with the branch flipped
    MutationOutcome m{"inductive_B wrong branch", "inductive_b.local", {}, false};
    PowersetInstance inst(1, {0}, {0});
    Subset corrupt = 0;  // flipped branch keeps B_0 empty
    Subset built = 0;
    for (std::size_t a : inst.order()) {
      bool matched = built == (inst.f(a) & inst.up_to(a));
      if (!matched) built |= Subset{1} << a;  // wrong branch
    }
    corrupt = built;
    check_inductive_b_local(inst, corrupt, m.reported);
    std::vector<Failure> clean;
    check_inductive_b_local(inst, powerset::inductive_B(inst).subset, clean);
    m.clean_passes = clean.empty();
    outcomes.push_back(std::move(m));
  }

  {  // 2. sigma compared against prefixes one position short
    MutationOutcome m{"prefix off by one", "binseq.divergence", {}, false};
    std::vector<BitStream> list{BitStream::parse(":1")};
    BitWord corrupt;
    for (std::size_t k = 1; k <= list.size(); ++k) {
      BitWord candidate = corrupt;  // missing the appended 0
      bool matched = candidate == binseq::prefix(list[k - 1], k - 1);
      corrupt.push_back(matched ? 1 : 0);
    }
    check_sigma_divergence(list, corrupt, m.reported);
    std::vector<Failure> clean;
    auto honest = binseq::inductive_sigma(binseq::from_list(list), list.size()).first;
    check_sigma_divergence(list, honest, clean);
    m.clean_passes = clean.empty();
    outcomes.push_back(std::move(m));
  }

  {  // 3. fixpoint replaced by a range element
    MutationOutcome m{"fixpoint replaced by f(0)", "stages.range", {}, false};
    PowersetInstance inst(2, {0, 1}, {0b01, 0});  // f(0)={0}, f(1)={}
    check_not_in_range(inst, inst.f(0), "stages.range", m.reported);
    std::vector<Failure> clean;
    check_not_in_range(inst, powerset::stages(inst).second.subset, "stages.range", clean);
    m.clean_passes = clean.empty();
    outcomes.push_back(std::move(m));
  }

  {  // 4. terminating expansion allowed: 1/3 in base 3 as 0.1(0)
    MutationOutcome m{"terminating expansion", "expansion.period", {}, false};
    Rational third(1, 3);
    check_expansion_raw(third, 3, {1}, {0}, m.reported);
    std::vector<Failure> clean;
    auto honest = exactreal::expansion(third, 3);
    check_expansion_raw(third, 3, honest.preperiod(), honest.period(), clean);
    m.clean_passes = clean.empty();
    outcomes.push_back(std::move(m));
  }

  {  // 5. D_n computed with the chain bound off by one
    MutationOutcome m{"d_n chain bound off by one", "dn.definition", {}, false};
    PowersetInstance inst(2, {0, 1}, {0b10, 0b01});  // f(0)={1}, f(1)={0}
    Subset corrupt = powerset::d_n(inst, 2).subset;   // D_2 passed off as D_1
    check_dn_definition(inst, 1, corrupt, m.reported);
    std::vector<Failure> clean;
    check_dn_definition(inst, 1, powerset::d_n(inst, 1).subset, clean);
    m.clean_passes = clean.empty();
    outcomes.push_back(std::move(m));
  }

  return outcomes;
}

}  // namespace cantor::oracle
