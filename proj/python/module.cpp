#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "cantor/binseq.hpp"
#include "cantor/error.hpp"
#include "cantor/exactreal.hpp"
#include "cantor/oracle.hpp"
#include "cantor/powerset.hpp"
#include "cantor/rational.hpp"

namespace py = pybind11;
using namespace cantor;

namespace {

py::object big_int(const Int& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

std::vector<std::size_t> subset_elements(powerset::Subset s, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < n; ++e)
    if (s >> e & 1) out.push_back(e);
  return out;
}

powerset::PowersetInstance make_instance(std::size_t n, std::vector<std::size_t> order,
                                         const std::vector<std::vector<std::size_t>>& f) {
  std::vector<powerset::Subset> table;
  table.reserve(f.size());
  for (const auto& row : f) {
    powerset::Subset s = 0;
    for (std::size_t e : row) {
      if (e >= 64) throw invalid_input("f(a) must be a subset of A");
      s |= powerset::Subset{1} << e;
    }
    table.push_back(s);
  }
  return powerset::PowersetInstance(n, std::move(order), std::move(table));
}

py::list witness_set(const powerset::PowersetInstance& inst, powerset::Subset s) {
  py::list out;
  for (std::size_t e : subset_elements(s, inst.size())) out.append(e);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact anti-list constructions over sequences, reals, and finite powerset models";

  py::register_exception<invalid_input>(m, "InvalidInput", PyExc_ValueError);

  py::class_<TraceStep>(m, "TraceStep")
      .def_readonly("index", &TraceStep::index)
      .def_readonly("candidate", &TraceStep::candidate)
      .def_readonly("target", &TraceStep::target)
      .def_readonly("matched", &TraceStep::matched)
      .def_readonly("emitted", &TraceStep::emitted)
      .def("__repr__", [](const TraceStep& t) {
        return "TraceStep(" + std::to_string(t.index) + ", " + t.candidate +
               (t.matched ? " = " : " != ") + t.target + " -> " + t.emitted + ")";
      });

  py::class_<Rational>(m, "Rational")
      .def(py::init([](long long num, long long den) { return Rational(num, den); }),
           py::arg("num"), py::arg("den") = 1)
      .def_static("parse", [](const std::string& s) { return Rational::parse(s); })
      .def_property_readonly("num", [](const Rational& r) { return big_int(r.num()); })
      .def_property_readonly("den", [](const Rational& r) { return big_int(r.den()); })
      .def("in_unit_interval", &Rational::in_unit_interval)
      .def("__str__", &Rational::str)
      .def("__repr__", [](const Rational& r) { return "Rational(" + r.str() + ")"; })
      .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
      .def("__lt__", [](const Rational& a, const Rational& b) { return a < b; })
      .def("__le__", [](const Rational& a, const Rational& b) { return a <= b; })
      .def("__hash__", [](const Rational& r) { return py::hash(py::str(r.str())); });

  py::class_<binseq::BitStream>(m, "BitStream")
      .def(py::init([](const std::string& text) { return binseq::BitStream::parse(text); }),
           py::arg("fixture"), "parse 'pre:period', e.g. '1:01' or ':0'")
      .def("at", &binseq::BitStream::at, py::arg("i"), "1-based digit")
      .def("prefix",
           [](const binseq::BitStream& s, std::size_t n) { return binseq::prefix(s, n).str(); })
      .def("__str__", &binseq::BitStream::str)
      .def("__repr__",
           [](const binseq::BitStream& s) { return "BitStream('" + s.str() + "')"; });

  m.def(
      "classical_diagonal",
      [](const std::vector<binseq::BitStream>& list, std::size_t n) {
        return binseq::classical_diagonal(binseq::from_list(list), n).str();
      },
      py::arg("streams"), py::arg("depth"));
  m.def(
      "inductive_sigma",
      [](const std::vector<binseq::BitStream>& list, std::size_t n) {
        auto [word, trace] = binseq::inductive_sigma(binseq::from_list(list), n);
        return py::make_tuple(word.str(), trace);
      },
      py::arg("streams"), py::arg("depth"));

  py::class_<exactreal::DigitWord>(m, "DigitWord")
      .def_readonly("base", &exactreal::DigitWord::base)
      .def_readonly("digits", &exactreal::DigitWord::digits)
      .def("value", &exactreal::DigitWord::value)
      .def("__str__", &exactreal::DigitWord::str)
      .def("__repr__", [](const exactreal::DigitWord& w) {
        return "DigitWord(0." + w.str() + "..._" + std::to_string(w.base) + ")";
      });

  py::class_<exactreal::DigitStream>(m, "DigitStream")
      .def_property_readonly("base", &exactreal::DigitStream::base)
      .def_property_readonly("preperiod", &exactreal::DigitStream::preperiod)
      .def_property_readonly("period", &exactreal::DigitStream::period)
      .def("at", &exactreal::DigitStream::at, py::arg("i"), "1-based digit")
      .def("value", &exactreal::DigitStream::value)
      .def("take", &exactreal::DigitStream::take, py::arg("n"))
      .def("__str__", &exactreal::DigitStream::str)
      .def("__repr__",
           [](const exactreal::DigitStream& s) { return "DigitStream(" + s.str() + ")"; });

  m.def("expansion", &exactreal::expansion, py::arg("r"), py::arg("base"),
        "unique non-terminating base-b expansion of r in (0,1]");
  m.def("partial_sum", &exactreal::partial_sum, py::arg("stream"), py::arg("n"));
  m.def(
      "anti_diagonal",
      [](const std::vector<Rational>& list, exactreal::Base base, std::size_t n) {
        return exactreal::anti_diagonal(exactreal::from_list(list), base, n);
      },
      py::arg("reals"), py::arg("base"), py::arg("depth"));
  m.def(
      "inductive_real",
      [](const std::vector<Rational>& list, exactreal::Base base, std::size_t n) {
        auto [word, trace] = exactreal::inductive_real(exactreal::from_list(list), base, n);
        return py::make_tuple(word, trace);
      },
      py::arg("reals"), py::arg("base"), py::arg("depth"));
  m.def(
      "hanf_h",
      [](const std::vector<Rational>& list, std::size_t pairs) {
        return exactreal::hanf_h(exactreal::from_list(list), pairs);
      },
      py::arg("reals"), py::arg("pairs"));
  m.def(
      "pair_s",
      [](const std::vector<Rational>& list, std::size_t pairs) {
        return exactreal::pair_s(exactreal::from_list(list), pairs);
      },
      py::arg("reals"), py::arg("pairs"));
  m.def(
      "pair_sigma",
      [](const std::vector<Rational>& list, std::size_t pairs) {
        auto [word, trace] = exactreal::pair_sigma(exactreal::from_list(list), pairs);
        return py::make_tuple(word, trace);
      },
      py::arg("reals"), py::arg("pairs"));

  py::class_<powerset::PowersetInstance>(m, "PowersetInstance")
      .def(py::init(&make_instance), py::arg("n"), py::arg("order"), py::arg("f"),
           "f is one list of elements per member of A")
      .def_static("parse",
                  [](const std::string& text) { return powerset::PowersetInstance::parse(text); })
      .def("serialize", &powerset::PowersetInstance::serialize)
      .def_property_readonly("n", &powerset::PowersetInstance::size)
      .def_property_readonly("order", &powerset::PowersetInstance::order)
      .def("f",
           [](const powerset::PowersetInstance& inst, std::size_t a) {
             if (a >= inst.size()) throw invalid_input("element outside A");
             return subset_elements(inst.f(a), inst.size());
           })
      .def("__repr__",
           [](const powerset::PowersetInstance& i) { return "PowersetInstance(" + i.str() + ")"; });

  m.def("inductive_b", [](const powerset::PowersetInstance& inst) {
    auto w = powerset::inductive_B(inst);
    return py::make_tuple(witness_set(inst, w.subset), w.trace);
  });
  m.def(
      "greedy_chain",
      [](const powerset::PowersetInstance& inst, const std::string& condition) {
        powerset::ChainCondition cond;
        if (condition == "star")
          cond = powerset::ChainCondition::kStar;
        else if (condition == "relaxed")
          cond = powerset::ChainCondition::kRelaxed;
        else
          throw invalid_input("condition must be 'star' or 'relaxed'");
        auto w = powerset::greedy_chain(inst, cond);
        return py::make_tuple(witness_set(inst, w.subset), w.trace);
      },
      py::arg("instance"), py::arg("condition") = "star");
  m.def("stages", [](const powerset::PowersetInstance& inst) {
    auto [seq, w] = powerset::stages(inst);
    py::list stage_sets;
    for (auto s : seq.stages) stage_sets.append(witness_set(inst, s));
    return py::make_tuple(stage_sets, seq.fixpoint_index, witness_set(inst, w.subset));
  });
  m.def("d_infinity", [](const powerset::PowersetInstance& inst) {
    auto w = powerset::d_infinity(inst);
    return py::make_tuple(witness_set(inst, w.subset), w.trace);
  });
  m.def(
      "d_n",
      [](const powerset::PowersetInstance& inst, std::size_t chain) {
        auto w = powerset::d_n(inst, chain);
        return py::make_tuple(witness_set(inst, w.subset), w.trace);
      },
      py::arg("instance"), py::arg("chain"));
  m.def(
      "in_range",
      [](const powerset::PowersetInstance& inst, const std::vector<std::size_t>& s)
          -> py::object {
        powerset::Subset mask = 0;
        for (std::size_t e : s) {
          if (e >= inst.size()) throw invalid_input("subset must lie inside A");
          mask |= powerset::Subset{1} << e;
        }
        auto a = powerset::in_range(inst, mask);
        if (!a) return py::none();
        return py::int_(*a);
      },
      py::arg("instance"), py::arg("subset"));

  py::class_<oracle::Failure>(m, "Failure")
      .def_readonly("instance", &oracle::Failure::instance)
      .def_readonly("property", &oracle::Failure::property)
      .def_readonly("witness", &oracle::Failure::witness)
      .def("__repr__", [](const oracle::Failure& f) {
        return "Failure(" + f.property + " :: " + f.instance + " :: " + f.witness + ")";
      });

  py::class_<oracle::VerificationReport>(m, "VerificationReport")
      .def_readonly("instances_checked", &oracle::VerificationReport::instances_checked)
      .def_readonly("failures", &oracle::VerificationReport::failures)
      .def_readonly("elapsed_seconds", &oracle::VerificationReport::elapsed_seconds)
      .def("ok", &oracle::VerificationReport::ok)
      .def("__str__", &oracle::VerificationReport::str);

  m.def(
      "verify_instance",
      [](const powerset::PowersetInstance& inst, std::size_t max_chain) {
        return oracle::verify_instance(inst, max_chain);
      },
      py::arg("instance"), py::arg("max_chain") = 3);
  m.def(
      "verify_powerset",
      [](std::size_t max_n_all, std::size_t identity_n, std::size_t max_chain) {
        return oracle::verify_powerset({max_n_all, identity_n, max_chain});
      },
      py::arg("max_n_all") = 3, py::arg("identity_n") = 4, py::arg("max_chain") = 3);
  m.def(
      "verify_sequences",
      [](std::size_t depth, std::size_t max_preperiod, std::size_t max_period,
         std::size_t max_list, std::size_t rational_lists, std::uint64_t max_denominator,
         const std::vector<exactreal::Base>& bases, std::uint64_t seed,
         const std::vector<std::vector<Rational>>& explicit_lists) {
        oracle::SequenceFamily family{max_preperiod, max_period,  max_list,
                                      rational_lists, max_denominator, bases,
                                      seed,           explicit_lists};
        return oracle::verify_sequences(depth, family);
      },
      py::arg("depth") = 4, py::arg("max_preperiod") = 1, py::arg("max_period") = 2,
      py::arg("max_list") = 4, py::arg("rational_lists") = 0, py::arg("max_denominator") = 64,
      py::arg("bases") = std::vector<exactreal::Base>{3}, py::arg("seed") = 1,
      py::arg("explicit_lists") = std::vector<std::vector<Rational>>{});

  py::class_<oracle::MutationOutcome>(m, "MutationOutcome")
      .def_readonly("name", &oracle::MutationOutcome::name)
      .def_readonly("property", &oracle::MutationOutcome::property)
      .def("detected_exactly", &oracle::MutationOutcome::detected_exactly);
  m.def("mutation_self_test", &oracle::mutation_self_test);
}
