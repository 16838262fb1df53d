#include "cantor/powerset.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <sstream>
#include <utility>

#include "cantor/error.hpp"

namespace cantor::powerset {

namespace {

constexpr std::size_t kMaxElements = 64;  // Subset is a 64-bit mask

bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }

}  // namespace

std::string subset_str(Subset s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t e = 0; e < kMaxElements; ++e) {
    if (s >> e & 1) {
      if (!first) out += ", ";
      out += std::to_string(e);
      first = false;
    }
  }
  return out + "}";
}

PowersetInstance::PowersetInstance(std::size_t n, std::vector<std::size_t> order,
                                   std::vector<Subset> f)
    : n_(n), order_(std::move(order)), f_(std::move(f)) {
  if (n_ > kMaxElements) throw invalid_input("instance size must be at most 64");
  if (order_.size() != n_) throw invalid_input("order must be a permutation of 0..n-1");
  std::vector<bool> seen(n_, false);
  for (std::size_t e : order_) {
    if (e >= n_ || seen[e]) throw invalid_input("order must be a permutation of 0..n-1");
    seen[e] = true;
  }
  if (f_.size() != n_) throw invalid_input("f must assign a subset to every element of A");
  for (Subset s : f_)
    if (!subset_of(s, universe())) throw invalid_input("f(a) must be a subset of A");
}

PowersetInstance PowersetInstance::parse(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw invalid_input(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("order") || !j.contains("f"))
    throw invalid_input("instance must be an object with fields n, order, f");
  if (!j["n"].is_number_unsigned()) throw invalid_input("n must be a nonnegative integer");
  std::size_t n = j["n"].get<std::size_t>();
  if (n > kMaxElements) throw invalid_input("instance size must be at most 64");
  if (!j["order"].is_array() || !j["f"].is_array())
    throw invalid_input("order and f must be arrays");

  std::vector<std::size_t> order;
  for (const auto& e : j["order"]) {
    if (!e.is_number_unsigned()) throw invalid_input("order entries must be elements of A");
    order.push_back(e.get<std::size_t>());
  }
  std::vector<Subset> f;
  for (const auto& row : j["f"]) {
    if (!row.is_array()) throw invalid_input("each f(a) must be a list of elements");
    Subset s = 0;
    for (const auto& e : row) {
      if (!e.is_number_unsigned() || e.get<std::size_t>() >= n)
        throw invalid_input("f(a) must be a subset of A");
      s |= Subset{1} << e.get<std::size_t>();
    }
    f.push_back(s);
  }
  return PowersetInstance(n, std::move(order), std::move(f));
}

std::string PowersetInstance::serialize() const {
  nlohmann::json j;
  j["n"] = n_;
  j["order"] = order_;
  auto rows = nlohmann::json::array();
  for (Subset s : f_) {
    auto row = nlohmann::json::array();
    for (std::size_t e = 0; e < n_; ++e)
      if (s >> e & 1) row.push_back(e);
    rows.push_back(std::move(row));
  }
  j["f"] = std::move(rows);
  return j.dump();
}

Subset PowersetInstance::universe() const {
  return n_ == kMaxElements ? ~Subset{0} : (Subset{1} << n_) - 1;
}

Subset PowersetInstance::strictly_below(std::size_t a) const {
  Subset s = 0;
  for (std::size_t e : order_) {
    if (e == a) return s;
    s |= Subset{1} << e;
  }
  throw invalid_input("element not in A");
}

Subset PowersetInstance::up_to(std::size_t a) const {
  return strictly_below(a) | (Subset{1} << a);
}

PowersetInstance PowersetInstance::with_order(std::vector<std::size_t> order) const {
  return PowersetInstance(n_, std::move(order), f_);
}

std::string PowersetInstance::str() const {
  std::ostringstream os;
  os << "n=" << n_ << " order=[";
  for (std::size_t i = 0; i < order_.size(); ++i) os << (i ? "," : "") << order_[i];
  os << "] f=[";
  for (std::size_t a = 0; a < n_; ++a) os << (a ? "," : "") << subset_str(f_[a]);
  os << "]";
  return os.str();
}

SubsetWitness inductive_B(const PowersetInstance& inst) {
  SubsetWitness out;
  Subset built = 0;  // union of B_i over i preceding a
  std::size_t step = 1;
  for (std::size_t a : inst.order()) {
    Subset restricted = inst.f(a) & inst.up_to(a);
    bool matched = built == restricted;
    out.trace.push_back({step++, subset_str(built), subset_str(restricted), matched,
                         matched ? "B_" + std::to_string(a) + "={" + std::to_string(a) + "}"
                                 : "B_" + std::to_string(a) + "={}"});
    if (matched) built |= Subset{1} << a;
  }
  out.subset = built;
  return out;
}

SubsetWitness greedy_chain(const PowersetInstance& inst, ChainCondition condition) {
  SubsetWitness out;
  Subset chain = 0;
  std::size_t step = 1;
  for (;;) {
    std::optional<std::size_t> pick;
    for (std::size_t b : inst.order()) {  // tie-break: least in the instance order
      if (chain >> b & 1) continue;
      bool ok = condition == ChainCondition::kStar ? inst.f(b) == chain
                                                   : subset_of(inst.f(b), chain);
      if (ok) {
        pick = b;
        break;
      }
    }
    if (!pick) break;
    out.trace.push_back({step++, subset_str(inst.f(*pick)), subset_str(chain), true,
                         "b=" + std::to_string(*pick)});
    chain |= Subset{1} << *pick;
  }
  out.subset = chain;
  return out;
}

std::pair<StageSequence, SubsetWitness> stages(const PowersetInstance& inst) {
  StageSequence seq;
  seq.stages.push_back(0);  // the empty union below stage 0
  SubsetWitness witness;
  std::size_t step = 1;
  for (;;) {
    Subset prev = seq.stages.back();
    Subset next = 0;
    for (std::size_t x = 0; x < inst.size(); ++x)
      if (subset_of(inst.f(x), prev)) next |= Subset{1} << x;
    witness.trace.push_back({step++, subset_str(prev), subset_str(next), next == prev,
                             "B_" + std::to_string(seq.stages.size()) + "=" + subset_str(next)});
    seq.stages.push_back(next);
    if (next == prev) break;
  }
  seq.fixpoint_index = seq.stages.size() - 2;  // first index attaining the fixpoint
  witness.subset = seq.fixpoint();
  return {std::move(seq), std::move(witness)};
}

SubsetWitness d_infinity(const PowersetInstance& inst) {
  std::size_t n = inst.size();

  // Transitive closure of the membership graph a -> f(a): reach[v] is the set
  // reachable from v in one or more steps.
  std::vector<Subset> reach(n);
  for (std::size_t v = 0; v < n; ++v) reach[v] = inst.f(v);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t v = 0; v < n; ++v) {
      Subset next = reach[v];
      for (std::size_t w = 0; w < n; ++w)
        if (reach[v] >> w & 1) next |= reach[w];
      if (next != reach[v]) {
        reach[v] = next;
        grew = true;
      }
    }
  }

  // v lies on a cycle iff it reaches itself; an infinite chain exists from a
  // iff a reaches a cycle vertex.
  Subset on_cycle = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (reach[v] >> v & 1) on_cycle |= Subset{1} << v;

  SubsetWitness out;
  for (std::size_t a = 0; a < n; ++a) {
    bool doomed = (reach[a] & on_cycle) != 0;
    out.trace.push_back({a + 1, subset_str(reach[a]), subset_str(on_cycle), doomed,
                         doomed ? "out" : "in"});
    if (!doomed) out.subset |= Subset{1} << a;
  }
  return out;
}

SubsetWitness d_n(const PowersetInstance& inst, std::size_t chain) {
  std::size_t n = inst.size();
  SubsetWitness out;
  for (std::size_t a = 0; a < n; ++a) {
    bool closes;
    if (chain == 0) {
      closes = (inst.f(a) >> a & 1) != 0;
    } else {
      // Backward sets: Y_chain = {x : a in f(x)}, then Y_{j-1} = {x : f(x)
      // meets Y_j}; a chain exists iff f(a) meets Y_1.
      Subset y = 0;
      for (std::size_t x = 0; x < n; ++x)
        if (inst.f(x) >> a & 1) y |= Subset{1} << x;
      for (std::size_t j = chain; j > 1; --j) {
        Subset prev = 0;
        for (std::size_t x = 0; x < n; ++x)
          if ((inst.f(x) & y) != 0) prev |= Subset{1} << x;
        y = prev;
      }
      closes = (inst.f(a) & y) != 0;
    }
    out.trace.push_back({a + 1, subset_str(inst.f(a)), "chain length " + std::to_string(chain),
                         closes, closes ? "out" : "in"});
    if (!closes) out.subset |= Subset{1} << a;
  }
  return out;
}

std::optional<std::size_t> in_range(const PowersetInstance& inst, Subset s) {
  for (std::size_t a = 0; a < inst.size(); ++a)
    if (inst.f(a) == s) return a;
  return std::nullopt;
}

}  // namespace cantor::powerset
