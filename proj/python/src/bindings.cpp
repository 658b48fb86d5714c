#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "addcomp/complement.hpp"
#include "addcomp/greedy_builder.hpp"
#include "addcomp/residue_cover.hpp"
#include "addcomp/serialization.hpp"
#include "addcomp/verifier.hpp"

namespace py = pybind11;
using namespace addcomp;

namespace {

// Big integers go through decimal text; Python ints are unbounded too.
py::int_ to_py(const BigInt& v) { return py::int_(py::str(to_decimal(v))); }

BigInt from_py(const py::handle& h) {
  return parse_bigint(std::string(py::str(py::int_(py::reinterpret_borrow<py::object>(h)))));
}

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_py(numerator_of(r)), to_py(denominator_of(r)));
}

std::vector<BigInt> big_list(const py::iterable& items) {
  std::vector<BigInt> out;
  for (auto h : items) out.push_back(from_py(h));
  return out;
}

py::list py_list(const std::vector<BigInt>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

py::dict report_dict(const CriterionReport& r) {
  py::dict d;
  d["x"] = to_py(r.x);
  d["A"] = to_py(r.a_count);
  d["B"] = to_py(r.b_count);
  d["a_star"] = to_py(r.a_star);
  d["T"] = fraction(r.excess);
  d["scale"] = fraction(r.scale);
  d["R"] = r.normalized ? fraction(*r.normalized) : py::none();
  d["exactness"] = fraction(r.exactness);
  return d;
}

py::dict block_dict(const Block& b) {
  py::dict d;
  d["k"] = b.k;
  d["a_k"] = to_py(b.a);
  d["U_k"] = py_list(b.translates);
  d["j_min"] = to_py(b.j_min);
  d["j_max"] = to_py(b.j_max);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Additive complement construction and verification";

  // The instance carries the error category as `.kind`. The type object is
  // kept alive for the life of the interpreter.
  static PyObject* error_type = py::exception<Error>(m, "AddcompError", PyExc_ValueError).release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = std::string(error_kind_name(e.kind()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<Sequence>(m, "Sequence")
      .def(py::init([](const py::iterable& terms, int exponent, const std::string& rule) {
             return Sequence(big_list(terms), exponent, parse_growth_rule(rule));
           }),
           py::arg("terms"), py::arg("growth_exponent") = 4, py::arg("growth_factor_rule") = "linear")
      .def_property_readonly("terms", [](const Sequence& s) { return py_list(s.terms()); })
      .def_property_readonly("growth_exponent", &Sequence::growth_exponent)
      .def_property_readonly("growth_factor_rule",
                             [](const Sequence& s) { return std::string(growth_rule_name(s.growth_rule())); })
      .def("__len__", &Sequence::size)
      .def("__eq__", [](const Sequence& a, const Sequence& b) { return a == b; })
      .def("to_json", &sequence_to_json)
      .def_static("from_json", [](const std::string& text) { return sequence_from_json(text); })
      .def("__repr__", [](const Sequence& s) { return "Sequence(" + std::to_string(s.size()) + " terms)"; });

  py::class_<ComplementBlocks>(m, "ComplementBlocks")
      .def_property_readonly("blocks",
                             [](const ComplementBlocks& c) {
                               py::list out;
                               for (const auto& b : c.blocks()) out.append(block_dict(b));
                               return out;
                             })
      .def("__len__", &ComplementBlocks::size)
      .def("__eq__", [](const ComplementBlocks& a, const ComplementBlocks& b) { return a == b; })
      .def("__contains__", [](const ComplementBlocks& c, const py::int_& v) { return c.contains(from_py(v)); })
      .def("count", [](const ComplementBlocks& c, const py::int_& x) { return to_py(c.count(from_py(x))); })
      .def(
          "members",
          [](const ComplementBlocks& c, const py::int_& lo, const py::int_& hi, std::uint64_t cap) {
            return py_list(c.members(from_py(lo), from_py(hi), cap));
          },
          py::arg("lo"), py::arg("hi"), py::arg("cap") = 10'000'000)
      .def_property_readonly("extent", [](const ComplementBlocks& c) { return to_py(c.extent()); })
      .def("to_json", &blocks_to_json)
      .def_static("from_json", [](const std::string& text) { return blocks_from_json(text); });

  m.def(
      "build_sequence",
      [](std::size_t levels, const std::string& growth, std::size_t max_terms) {
        return build_sequence(levels, parse_growth_rule(growth), BuildLimits{max_terms}).seq;
      },
      py::arg("levels"), py::arg("growth") = "linear", py::arg("max_terms") = 64);
  m.def(
      "build_terms",
      [](std::size_t n, const std::string& growth, std::size_t max_terms) {
        return build_terms(n, parse_growth_rule(growth), BuildLimits{max_terms}).seq;
      },
      py::arg("count"), py::arg("growth") = "linear", py::arg("max_terms") = 64);
  m.def("level_ladder", [](const Sequence& s) {
    py::list out;
    for (const auto& l : level_ladder(s).levels) {
      py::dict d;
      d["k"] = l.k;
      d["n"] = to_py(l.n);
      d["x"] = l.x ? py::object(to_py(*l.x)) : py::none();
      out.append(d);
    }
    return out;
  });
  m.def("count", [](const Sequence& s, const py::int_& x) { return count(s, from_py(x)); });
  m.def("largest_le", [](const Sequence& s, const py::int_& x) { return to_py(largest_le(s, from_py(x))); });
  m.def("growth_ratios", [](const Sequence& s) {
    py::list out;
    for (const auto& g : growth_ratios(s)) out.append(py::make_tuple(g.m, fraction(g.linear), fraction(g.scaled)));
    return out;
  });
  m.def("q_of", [](const Sequence& s, std::size_t k) { return to_py(q_of(s, k)); });

  m.def(
      "cover",
      [](const py::int_& modulus, const py::iterable& elements, const std::string& mode, std::uint64_t n,
         std::uint64_t exact_cap) {
        auto elems = big_list(elements);
        auto inst = CoverInstance::from_elements(from_py(modulus), elems);
        CoverSolution s;
        if (mode == "exact") {
          s = cover_exact(inst, ExactSearchLimits{exact_cap});
        } else if (mode == "greedy") {
          s = cover_greedy(inst);
        } else if (mode == "structured") {
          s = cover_structured(n, inst);
        } else {
          throw Error(ErrorKind::parse, "unknown cover mode '" + mode + "'");
        }
        py::dict d;
        d["L"] = s.size();
        d["translates"] = s.translates;
        d["kind"] = std::string(cover_kind_name(s.kind));
        d["k"] = inst.k;
        return d;
      },
      py::arg("m"), py::arg("elements"), py::arg("mode") = "exact", py::arg("n") = 0,
      py::arg("exact_cap") = std::uint64_t{1} << 14);
  m.def(
      "cover_validate",
      [](const py::int_& modulus, const py::iterable& elements, const std::vector<std::uint64_t>& translates) {
        auto elems = big_list(elements);
        auto check = cover_validate(CoverInstance::from_elements(from_py(modulus), elems), translates);
        return py::make_tuple(check.complete, check.uncovered);
      },
      py::arg("m"), py::arg("elements"), py::arg("translates"));

  m.def(
      "build_blocks",
      [](const Sequence& s, std::size_t k, const std::string& strategy, std::uint64_t exact_cap) {
        BlockOptions opts;
        opts.exact.modulus_cap = exact_cap;
        if (strategy == "greedy") {
          opts.strategy = CoverStrategy::greedy;
        } else if (strategy != "auto") {
          throw Error(ErrorKind::parse, "unknown cover strategy '" + strategy + "'");
        }
        auto built = build_blocks(s, k, opts);
        py::list diags;
        for (const auto& d : built.diagnostics) {
          py::dict item;
          item["k"] = d.k;
          item["kind"] = std::string(cover_kind_name(d.kind));
          item["ratio"] = fraction(d.ratio);
          item["fallback_reason"] = d.fallback_reason;
          diags.append(item);
        }
        return py::make_tuple(built.blocks, diags);
      },
      py::arg("seq"), py::arg("blocks"), py::arg("strategy") = "auto",
      py::arg("exact_cap") = std::uint64_t{1} << 14);

  m.def(
      "sumset_coverage",
      [](const Sequence& s, const ComplementBlocks& b, const py::int_& limit, std::uint64_t sieve_cap) {
        auto rep = sumset_coverage(s, b, from_py(limit), sieve_cap);
        py::dict d;
        d["X"] = to_py(rep.limit);
        d["N0"] = to_py(rep.threshold);
        d["gaps"] = py_list(rep.gaps);
        return d;
      },
      py::arg("seq"), py::arg("blocks"), py::arg("limit"), py::arg("sieve_cap") = 100'000'000);

  m.def("criterion", [](const Sequence& s, const ComplementBlocks& b, const py::int_& x) {
    return report_dict(criterion(s, b, from_py(x)));
  });
  m.def("criterion_sweep", [](const Sequence& s, const ComplementBlocks& b, const py::iterable& points) {
    py::list out;
    for (const auto& r : criterion_sweep(s, b, big_list(points))) out.append(report_dict(r));
    return out;
  });
  m.def("default_sweep_points",
        [](const Sequence& s, const ComplementBlocks& b) { return py_list(default_sweep_points(s, b)); });

  m.def("lemma_check", [](const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v) {
    auto c = lemma_check(u, v);
    return py::make_tuple(c.lhs, fraction(c.rhs), c.holds);
  });
  m.def("lemma_exhaustive", [](int max_element) {
    auto t = lemma_exhaustive(max_element);
    return py::make_tuple(t.held, t.checked);
  });
  m.def(
      "lemma_random",
      [](std::uint64_t pairs, int max_element, std::uint64_t seed) {
        auto t = lemma_random(pairs, max_element, seed);
        return py::make_tuple(t.held, t.checked);
      },
      py::arg("pairs"), py::arg("max_element") = 50, py::arg("seed") = 20240601);
}
