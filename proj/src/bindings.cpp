#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fusd/ancilla.hpp"
#include "fusd/discrimination.hpp"
#include "fusd/instance_io.hpp"
#include "fusd/optimality.hpp"
#include "fusd/oracle.hpp"

namespace py = pybind11;
using namespace fusd;

namespace {

FermionicVector vector_from_dict(int modes, const std::map<std::string, Amplitude>& amps) {
  std::vector<std::pair<std::string, Amplitude>> entries(amps.begin(), amps.end());
  return FermionicVector::from_amplitudes(modes, entries);
}

DiscriminationInstance make_instance(double p, const FermionicVector& psi, double q,
                                     const FermionicVector& phi, int alice_modes) {
  DiscriminationInstance inst{{p, psi}, {q, phi},
                              {alice_modes, psi.modes() - alice_modes}};
  inst.validate();
  return inst;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Unambiguous discrimination of bipartite Fermionic states";

  py::enum_<Parity>(m, "Parity").value("Even", Parity::Even).value("Odd", Parity::Odd);

  py::class_<FermionicVector>(m, "FermionicVector")
      .def(py::init(&vector_from_dict), py::arg("modes"), py::arg("amplitudes"))
      .def_property_readonly("modes", &FermionicVector::modes)
      .def_property_readonly("parity", &FermionicVector::parity)
      .def("norm", &FermionicVector::norm)
      .def("normalized", &FermionicVector::normalized)
      .def("amplitudes", [](const FermionicVector& v) {
        std::map<std::string, Amplitude> out;
        for (const auto& [label, value] : v.amplitudes()) out[label.to_string()] = value;
        return out;
      });

  m.def("inner_product", &inner_product);

  py::class_<DiscriminationInstance>(m, "DiscriminationInstance")
      .def(py::init(&make_instance), py::arg("p"), py::arg("psi"), py::arg("q"),
           py::arg("phi"), py::arg("alice_modes"));

  py::class_<SectorSlot>(m, "SectorSlot")
      .def_readonly("pr", &SectorSlot::pr)
      .def_readonly("psi_norm", &SectorSlot::psi_norm)
      .def_readonly("phi_norm", &SectorSlot::phi_norm)
      .def_readonly("s", &SectorSlot::s)
      .def_readonly("degenerate", &SectorSlot::degenerate)
      .def_readonly("p_cond", &SectorSlot::p_cond)
      .def_readonly("q_cond", &SectorSlot::q_cond)
      .def_readonly("overlap", &SectorSlot::overlap);

  py::class_<SectorData>(m, "SectorData")
      .def_readonly("even", &SectorData::even)
      .def_readonly("odd", &SectorData::odd)
      .def_readonly("delta", &SectorData::delta);

  m.def("sector_data", &sector_data);
  m.def("xi", &xi);
  m.def("optimal_success_unconstrained", &optimal_success_unconstrained);
  m.def("optimal_success_sep",
        [](const DiscriminationInstance& inst) { return optimal_success_sep(inst).total; });

  py::class_<OptimalityVerdict>(m, "OptimalityVerdict")
      .def_readonly("locc_optimal", &OptimalityVerdict::locc_optimal)
      .def_readonly("p_s", &OptimalityVerdict::p_s)
      .def_readonly("p_s_sep", &OptimalityVerdict::p_s_sep)
      .def_readonly("gap", &OptimalityVerdict::gap)
      .def_readonly("degenerate_case", &OptimalityVerdict::degenerate_case)
      .def_property_readonly(
          "case_tag", [](const OptimalityVerdict& v) { return to_string(v.case_tag); });

  m.def("check_locc_optimal", &check_locc_optimal);

  py::class_<AncillaSpec>(m, "AncillaSpec")
      .def(py::init([](double a_sq, double phase) {
             return AncillaSpec::from_weight_and_phase(a_sq, phase);
           }),
           py::arg("a_sq"), py::arg("phase") = 0.0);
  m.def("attach", &attach);
  m.def("phase_obstruction", &phase_obstruction);

  m.def("brute_force_unconstrained",
        [](double p, double q, double s_abs) { return brute_force_unconstrained(p, q, s_abs); });
  m.def("brute_force_sep",
        [](const DiscriminationInstance& inst) { return brute_force_sep(inst); });

  m.def("parse_instance_text", [](const std::string& text) {
    const auto file = parse_instance_text(text);
    return std::make_pair(file.instance, file.ancilla);
  });
}
