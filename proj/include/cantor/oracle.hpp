#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cantor/binseq.hpp"
#include "cantor/exactreal.hpp"
#include "cantor/powerset.hpp"
#include "cantor/rational.hpp"

namespace cantor::oracle {

enum class OrderMode { kAll, kIdentity };

/// Walks every f: A -> powerset(A) on A = {0..n-1}, crossed with every
/// well-order (kAll) or just the identity order (kIdentity).
class InstanceEnumerator {
 public:
  InstanceEnumerator(std::size_t n, OrderMode mode);

  std::optional<powerset::PowersetInstance> next();

  static Int count(std::size_t n, OrderMode mode);

 private:
  void advance();

  std::size_t n_;
  OrderMode mode_;
  std::vector<std::size_t> order_;
  std::vector<powerset::Subset> f_;
  bool done_ = false;
};

struct Failure {
  std::string instance;
  std::string property;
  std::string witness;

  bool operator==(const Failure&) const = default;
  auto operator<=>(const Failure&) const = default;
};

struct VerificationReport {
  std::uint64_t instances_checked = 0;
  std::vector<Failure> failures;
  double elapsed_seconds = 0.0;

  bool ok() const { return failures.empty(); }
  void merge(const VerificationReport& other);
  void sort_failures();  // canonical order, independent of evaluation order
  std::string str() const;
};

/// Deterministic source for reproducible fixtures. Draws below() values by
/// modulo so results depend only on the seed, not on library internals.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t below(std::uint64_t bound);
  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

Rational random_unit_rational(SeededRng& rng, std::uint64_t max_denominator);
binseq::BitStream random_bitstream(SeededRng& rng, std::size_t max_preperiod,
                                   std::size_t max_period);
powerset::PowersetInstance random_instance(SeededRng& rng, std::size_t n);

/// Every eventually-periodic binary stream with preperiod length up to
/// max_preperiod and period length 1..max_period.
std::vector<binseq::BitStream> stream_family(std::size_t max_preperiod, std::size_t max_period);

/// Runs every set-construction property on one instance: the local and
/// global diagonal disagreements, both chain conditions with maximality, the
/// stage sequence shape and its fixpoint, the fixpoint/cycle-reachability
/// agreement, and each D_k up to max_chain checked against a literal chain
/// search. Instances with at most 3 elements additionally get every maximal
/// chain enumerated, not just the greedy one.
VerificationReport verify_instance(const powerset::PowersetInstance& inst,
                                   std::size_t max_chain);

struct PowersetSweep {
  std::size_t max_n_all = 3;     // all orders for every n up to this
  std::size_t identity_n = 4;    // one extra identity-order sweep (0 = skip)
  std::size_t max_chain = 3;
};

VerificationReport verify_powerset(const PowersetSweep& sweep);

/// Which sequence fixtures to check. An all-zero family checks nothing.
struct SequenceFamily {
  std::size_t max_preperiod = 1;  // exhaustive binary part: all streams with
  std::size_t max_period = 2;     // preperiod <= max_preperiod, 1 <= period <= max_period
  std::size_t max_list = 4;       // ... over all lists up to this length

  std::size_t rational_lists = 0;  // randomized part: how many lists
  std::uint64_t max_denominator = 64;
  std::vector<exactreal::Base> bases = {3};  // bases for the inductive digits
  std::uint64_t seed = 1;

  std::vector<std::vector<Rational>> explicit_lists;  // always checked, at `depth`
};

/// Checks the sequence constructions: prefix divergence for every exhaustive
/// binary list, and digit divergence, pair shape, and interval containment
/// for the rational lists (each of length `depth`).
VerificationReport verify_sequences(std::size_t depth, const SequenceFamily& family);

/// One deliberately corrupted witness fed to the property check that must
/// catch it.
struct MutationOutcome {
  std::string name;
  std::string property;
  std::vector<Failure> reported;   // from the corrupted witness
  bool clean_passes = false;       // the honest witness passes the same check
  bool detected_exactly() const {
    return clean_passes && reported.size() == 1 && reported[0].property == property;
  }
};

/// Harness self-test: each corruption must produce exactly its own failure.
std::vector<MutationOutcome> mutation_self_test();

}  // namespace cantor::oracle
