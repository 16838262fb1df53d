// Command-line front end: one subcommand per construction, fixtures from
// stdin or --input, optional step traces, and the brute-force verifier.
//
// Exit codes: 0 success, 1 verification failures, 2 parse/validation error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cantor/binseq.hpp"
#include "cantor/error.hpp"
#include "cantor/exactreal.hpp"
#include "cantor/oracle.hpp"
#include "cantor/powerset.hpp"

namespace {

using namespace cantor;

std::string read_all(const std::string& path) {
  if (path.empty()) {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Nonempty lines, '#' starts a comment.
std::vector<std::string> fixture_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    auto end = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(begin, end - begin + 1));
  }
  return lines;
}

std::vector<binseq::BitStream> load_streams(const std::string& path) {
  std::vector<binseq::BitStream> out;
  for (const auto& line : fixture_lines(read_all(path)))
    out.push_back(binseq::BitStream::parse(line));
  if (out.empty()) throw invalid_input("stream list fixture is empty");
  return out;
}

std::vector<Rational> load_rationals(const std::string& path) {
  std::vector<Rational> out;
  for (const auto& line : fixture_lines(read_all(path))) {
    Rational r = Rational::parse(line);
    if (!r.in_unit_interval())
      throw invalid_input("rational fixture must lie in (0,1], got " + r.str());
    out.push_back(r);
  }
  if (out.empty()) throw invalid_input("rational list fixture is empty");
  return out;
}

powerset::PowersetInstance load_instance(const std::string& path,
                                         const std::string& order_override) {
  auto inst = powerset::PowersetInstance::parse(read_all(path));
  if (order_override.empty()) return inst;
  std::vector<std::size_t> order;
  std::istringstream in(order_override);
  std::string tok;
  while (std::getline(in, tok, ','))
    order.push_back(static_cast<std::size_t>(std::stoull(tok)));
  return inst.with_order(std::move(order));
}

void print_trace(const ConstructionTrace& trace) {
  std::size_t cand_w = 9, targ_w = 6;
  for (const auto& step : trace) {
    cand_w = std::max(cand_w, step.candidate.size());
    targ_w = std::max(targ_w, step.target.size());
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  std::cout << "step  " << pad("candidate", cand_w) << "  " << pad("target", targ_w)
            << "  branch  emitted\n";
  for (const auto& step : trace)
    std::cout << pad(std::to_string(step.index), 4) << "  " << pad(step.candidate, cand_w)
              << "  " << pad(step.target, targ_w) << "  " << pad(step.matched ? "=" : "!=", 6)
              << "  " << step.emitted << "\n";
}

std::string word_str(const exactreal::DigitWord& w) {
  return "0." + w.str() + (w.str().empty() ? "" : "…") + "_" + std::to_string(w.base);
}

void print_digit_word(const std::string& name, const exactreal::DigitWord& w) {
  std::cout << name << " = " << word_str(w) << "\n";
  std::cout << "value = " << w.value().str() << "\n";
}

struct CommonOpts {
  std::string input;
  std::size_t depth = 0;
  bool trace = false;
  bool emit = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_depth = true) {
  cmd->add_option("--input", o.input, "fixture file (default: stdin)");
  if (with_depth) cmd->add_option("--depth,-n", o.depth, "construction depth (default: list length)");
  cmd->add_flag("--trace", o.trace, "print the per-step trace");
  cmd->add_flag("--emit-fixture", o.emit, "re-emit the parsed fixture canonically and exit");
}

std::size_t effective_depth(std::size_t requested, std::size_t list_len) {
  return requested == 0 ? list_len : requested;
}

bool emit_streams(const CommonOpts& o, const std::vector<binseq::BitStream>& streams) {
  if (!o.emit) return false;
  for (const auto& s : streams) std::cout << s.str() << "\n";
  return true;
}

bool emit_rationals(const CommonOpts& o, const std::vector<Rational>& list) {
  if (!o.emit) return false;
  for (const auto& r : list) std::cout << r.str() << "\n";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact anti-list constructions: binary sequences, base-b reals, finite powerset models"};
  app.require_subcommand(1);

  CommonOpts seq_diag_o, seq_ind_o, real_anti_o, real_ind_o, real_h_o, real_pairs_o,
      real_pairind_o, pow_b_o, pow_chain_o, pow_stages_o, pow_dn_o, pow_dinf_o;
  exactreal::Base anti_base = 10, ind_base = 10;
  std::string chain_cond = "star";
  std::size_t dn_chain = 0;
  std::string order_override_b, order_override_chain, order_override_stages, order_override_dn,
      order_override_dinf;

  auto* seq_diag = app.add_subcommand("seq-diag", "classical diagonal over a binary stream list");
  add_common(seq_diag, seq_diag_o);
  auto* seq_ind = app.add_subcommand("seq-ind", "inductive word over a binary stream list");
  add_common(seq_ind, seq_ind_o);

  auto* real_anti = app.add_subcommand("real-anti", "anti-diagonal digits over a rational list");
  add_common(real_anti, real_anti_o);
  real_anti->add_option("--base,-b", anti_base, "expansion base (must exceed 2)")->required();
  auto* real_ind = app.add_subcommand("real-ind", "inductive digits over a rational list");
  add_common(real_ind, real_ind_o);
  real_ind->add_option("--base,-b", ind_base, "expansion base (must exceed 2)")->required();

  auto* real_h = app.add_subcommand("real-h", "paired binary construction from even-indexed digits");
  add_common(real_h, real_h_o);
  real_h->get_option("--depth")->description("pair count (output has 2n digits)");
  auto* real_pairs = app.add_subcommand("real-pairs", "paired binary construction from digit pairs");
  add_common(real_pairs, real_pairs_o);
  real_pairs->get_option("--depth")->description("pair count (output has 2n digits)");
  auto* real_pairind = app.add_subcommand("real-pairind", "inductive paired binary construction");
  add_common(real_pairind, real_pairind_o);
  real_pairind->get_option("--depth")->description("pair count (output has 2n digits)");

  auto* pow_b = app.add_subcommand("pow-b", "order-driven diagonal subset");
  add_common(pow_b, pow_b_o, false);
  pow_b->add_option("--order", order_override_b, "override the instance order, e.g. 2,0,1");
  auto* pow_chain = app.add_subcommand("pow-chain", "greedy maximal chain");
  add_common(pow_chain, pow_chain_o, false);
  pow_chain->add_option("--order", order_override_chain, "override the instance order");
  pow_chain->add_option("--condition", chain_cond, "star (f(b) equals the chain) or relaxed (subset)")
      ->check(CLI::IsMember({"star", "relaxed"}));
  auto* pow_stages = app.add_subcommand("pow-stages", "stage iteration to the least fixpoint");
  add_common(pow_stages, pow_stages_o, false);
  pow_stages->add_option("--order", order_override_stages, "override the instance order");
  auto* pow_dn = app.add_subcommand("pow-dn", "finite-chain diagonal set");
  add_common(pow_dn, pow_dn_o, false);
  pow_dn->add_option("--order", order_override_dn, "override the instance order");
  pow_dn->add_option("--chain,-k", dn_chain, "chain length (0 = the classical anti-diagonal)");
  auto* pow_dinf = app.add_subcommand("pow-dinf", "elements with no infinite membership chain");
  add_common(pow_dinf, pow_dinf_o, false);
  pow_dinf->add_option("--order", order_override_dinf, "override the instance order");

  auto* verify = app.add_subcommand("verify", "exhaustive and randomized property verification");
  std::size_t v_max_n = 3, v_max_chain = 3, v_lists = 500, v_depth = 20;
  std::uint64_t v_seed = 1845;
  bool v_quick = false;
  verify->add_option("--max-n", v_max_n, "exhaustive sweep bound (all orders up to this size)");
  verify->add_option("--max-chain", v_max_chain, "largest finite chain length to verify");
  verify->add_option("--seed", v_seed, "seed for the randomized rational lists");
  verify->add_option("--lists", v_lists, "number of randomized rational lists");
  verify->add_option("--depth", v_depth, "depth of each randomized rational list");
  verify->add_flag("--quick", v_quick, "skip the identity-order sweep one size up");

  try {
    app.parse(argc, argv);

    if (seq_diag->parsed() || seq_ind->parsed()) {
      const CommonOpts& o = seq_diag->parsed() ? seq_diag_o : seq_ind_o;
      auto streams = load_streams(o.input);
      if (emit_streams(o, streams)) return 0;
      std::size_t n = effective_depth(o.depth, streams.size());
      auto provider = binseq::from_list(streams);
      if (seq_diag->parsed()) {
        std::cout << "c = " << binseq::classical_diagonal(provider, n).str() << "\n";
      } else {
        auto [sigma, trace] = binseq::inductive_sigma(provider, n);
        std::cout << "σ = " << sigma.str() << "\n";
        if (o.trace) print_trace(trace);
      }
      return 0;
    }

    if (real_anti->parsed() || real_ind->parsed()) {
      const CommonOpts& o = real_anti->parsed() ? real_anti_o : real_ind_o;
      auto list = load_rationals(o.input);
      if (emit_rationals(o, list)) return 0;
      std::size_t n = effective_depth(o.depth, list.size());
      auto provider = exactreal::from_list(list);
      if (real_anti->parsed()) {
        print_digit_word("c", exactreal::anti_diagonal(provider, anti_base, n));
      } else {
        auto [sigma, trace] = exactreal::inductive_real(provider, ind_base, n);
        print_digit_word("σ", sigma);
        if (o.trace) print_trace(trace);
      }
      return 0;
    }

    if (real_h->parsed() || real_pairs->parsed() || real_pairind->parsed()) {
      const CommonOpts& o = real_h->parsed()    ? real_h_o
                            : real_pairs->parsed() ? real_pairs_o
                                                   : real_pairind_o;
      auto list = load_rationals(o.input);
      if (emit_rationals(o, list)) return 0;
      std::size_t pairs = effective_depth(o.depth, list.size());
      auto provider = exactreal::from_list(list);
      if (real_h->parsed()) {
        print_digit_word("h", exactreal::hanf_h(provider, pairs));
      } else if (real_pairs->parsed()) {
        print_digit_word("s", exactreal::pair_s(provider, pairs));
      } else {
        auto [sigma, trace] = exactreal::pair_sigma(provider, pairs);
        print_digit_word("σ", sigma);
        if (o.trace) print_trace(trace);
      }
      return 0;
    }

    if (pow_b->parsed() || pow_chain->parsed() || pow_stages->parsed() || pow_dn->parsed() ||
        pow_dinf->parsed()) {
      const CommonOpts& o = pow_b->parsed()        ? pow_b_o
                            : pow_chain->parsed()  ? pow_chain_o
                            : pow_stages->parsed() ? pow_stages_o
                            : pow_dn->parsed()     ? pow_dn_o
                                                   : pow_dinf_o;
      const std::string& order_override = pow_b->parsed()        ? order_override_b
                                          : pow_chain->parsed()  ? order_override_chain
                                          : pow_stages->parsed() ? order_override_stages
                                          : pow_dn->parsed()     ? order_override_dn
                                                                 : order_override_dinf;
      auto inst = load_instance(o.input, order_override);
      if (o.emit) {
        std::cout << inst.serialize() << "\n";
        return 0;
      }
      if (pow_b->parsed()) {
        auto b = powerset::inductive_B(inst);
        std::cout << "B = " << powerset::subset_str(b.subset) << "\n";
        if (o.trace) print_trace(b.trace);
      } else if (pow_chain->parsed()) {
        auto cond = chain_cond == "star" ? powerset::ChainCondition::kStar
                                         : powerset::ChainCondition::kRelaxed;
        auto chain = powerset::greedy_chain(inst, cond);
        std::cout << "B = " << powerset::subset_str(chain.subset) << "\n";
        if (o.trace) print_trace(chain.trace);
      } else if (pow_stages->parsed()) {
        auto [seq, fix] = powerset::stages(inst);
        std::cout << "𝓑 = " << powerset::subset_str(fix.subset) << "\n";
        std::cout << "fixpoint index = " << seq.fixpoint_index << "\n";
        if (o.trace) print_trace(fix.trace);
      } else if (pow_dn->parsed()) {
        auto d = powerset::d_n(inst, dn_chain);
        std::cout << "D_" << dn_chain << " = " << powerset::subset_str(d.subset) << "\n";
        if (o.trace) print_trace(d.trace);
      } else {
        auto d = powerset::d_infinity(inst);
        std::cout << "D_∞ = " << powerset::subset_str(d.subset) << "\n";
        if (o.trace) print_trace(d.trace);
      }
      return 0;
    }

    // verify
    oracle::PowersetSweep sweep;
    sweep.max_n_all = v_max_n;
    sweep.identity_n = v_quick ? 0 : v_max_n + 1;
    sweep.max_chain = v_max_chain;
    auto pow_report = oracle::verify_powerset(sweep);
    std::cout << "[powerset]\n" << pow_report.str();

    oracle::SequenceFamily family;
    family.rational_lists = v_lists;
    family.seed = v_seed;
    auto seq_report = oracle::verify_sequences(v_depth == 0 ? 4 : v_depth, family);
    std::cout << "[sequences]\n" << seq_report.str();

    auto mutations = oracle::mutation_self_test();
    std::size_t detected = 0;
    std::cout << "[mutations]\n";
    for (const auto& m : mutations) {
      bool ok = m.detected_exactly();
      detected += ok;
      std::cout << "  " << (ok ? "DETECTED " : "MISSED   ") << m.name << " -> " << m.property
                << "\n";
    }
    bool ok = pow_report.ok() && seq_report.ok() && detected == mutations.size();
    std::cout << (ok ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
    return ok ? 0 : 1;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
