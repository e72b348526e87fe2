// Python bindings for the core invariants.  Exact integers cross the
// boundary as native Python ints (via their decimal representation);
// polynomials cross as their canonical text rendering.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <bit>
#include <map>
#include <string>
#include <vector>

#include "toric/affine.hpp"
#include "toric/graphs.hpp"
#include "toric/ncpoly.hpp"
#include "toric/poset.hpp"
#include "toric/toric_arr.hpp"

namespace py = pybind11;
using namespace toric;

namespace {

py::object pyint(const Int& v) {
    std::string s = v.str();
    return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::dict flag_dict(const std::map<std::uint32_t, Int>& m, int height) {
    py::dict out;
    for (const auto& [mask, val] : m) {
        py::tuple key(static_cast<int>(std::popcount(mask)));
        int k = 0;
        for (int r = 1; r < height; ++r)
            if (mask & (1u << (r - 1))) key[k++] = r;
        out[key] = pyint(val);
    }
    return out;
}

py::dict zaslavsky_dict(const GradedPoset& p) {
    Zaslavsky z = zaslavsky_invariants(p);
    py::dict out;
    out["z"] = pyint(z.z);
    out["z_bounded"] = pyint(z.z_bounded);
    out["z_toric"] = pyint(z.z_toric);
    out["z_unbounded"] = pyint(z.z_unbounded);
    return out;
}

Int parse_int(const std::string& s) { return Int(s); }

}  // namespace

PYBIND11_MODULE(_toricarr, m) {
    m.doc() = "Exact flag-vector invariants of graded posets and of "
              "Euclidean, toric and graphical hyperplane arrangements.";

    py::class_<GradedPoset>(m, "Poset")
        .def_static("parse", &parse_poset, py::arg("text"))
        .def_static("load", &load_poset, py::arg("path"))
        .def_static("boolean", &boolean_lattice, py::arg("n"))
        .def_static("butterfly", &butterfly_poset, py::arg("rank"))
        .def_static("chain", &chain_poset, py::arg("length"))
        .def("__len__", &GradedPoset::size)
        .def_property_readonly("height", &GradedPoset::height)
        .def("ab_index", [](const GradedPoset& p) { return ab_index_stanley(p).str(); })
        .def("cd_index", [](const GradedPoset& p) { return cd_index(p).str(); })
        .def("flag_f",
             [](const GradedPoset& p) { return flag_dict(flag_vectors(p).f, p.height()); })
        .def("flag_h",
             [](const GradedPoset& p) { return flag_dict(flag_vectors(p).h, p.height()); })
        .def("moebius", [](const GradedPoset& p) { return pyint(p.moebius()); })
        .def("euler_char", [](const GradedPoset& p) { return pyint(euler_char(p)); })
        .def("is_eulerian", &is_eulerian)
        .def("zaslavsky", &zaslavsky_dict)
        .def("dual", &dual);

    py::class_<AffineArrangement>(m, "AffineArrangement")
        .def_static("parse", &AffineArrangement::parse, py::arg("text"))
        .def_static("load", &AffineArrangement::load, py::arg("path"))
        .def_property_readonly("n", [](const AffineArrangement& a) { return a.n; })
        .def_property_readonly("m", &AffineArrangement::m)
        .def("is_central", &AffineArrangement::is_central)
        .def("is_essential",
             [](const AffineArrangement& a) { return !a.non_essential_witness(); })
        .def("intersection_lattice",
             [](const AffineArrangement& a) { return intersection_lattice(a).poset; })
        .def("chi", [](const AffineArrangement& a) {
            return characteristic_polynomial(a).str("t");
        })
        .def("chi_at",
             [](const AffineArrangement& a, const std::string& t) {
                 return pyint(characteristic_polynomial(a).eval(parse_int(t)));
             },
             py::arg("t"))
        .def("region_counts",
             [](const AffineArrangement& a) {
                 RegionCounts rc = region_counts(a);
                 py::dict out;
                 out["regions"] = pyint(rc.regions);
                 out["bounded"] = pyint(rc.bounded);
                 out["unbounded"] = pyint(rc.unbounded);
                 return out;
             })
        .def("psi_central",
             [](const AffineArrangement& a) { return psi_central(a).str(); })
        .def("psi_unbounded",
             [](const AffineArrangement& a) { return psi_unbounded(a).str(); });

    py::class_<ToricArrangement>(m, "ToricArrangement")
        .def_static("parse", &ToricArrangement::parse, py::arg("text"))
        .def_static("load", &ToricArrangement::load, py::arg("path"))
        .def_property_readonly("n", [](const ToricArrangement& a) { return a.n; })
        .def_property_readonly("m", &ToricArrangement::m)
        .def("intersection_poset",
             [](const ToricArrangement& a) { return intersection_poset(a).poset; })
        .def("chi", [](const ToricArrangement& a) {
            return toric_characteristic_polynomial(a).str("t");
        })
        .def("chi_at",
             [](const ToricArrangement& a, const std::string& t) {
                 return pyint(toric_characteristic_polynomial(a).eval(parse_int(t)));
             },
             py::arg("t"))
        .def("regions",
             [](const ToricArrangement& a) {
                 ToricRegionCounts rc = toric_region_count(a);
                 if (rc.by_characteristic != rc.by_zaslavsky)
                     throw std::logic_error("region count routes disagree");
                 return pyint(rc.by_characteristic);
             })
        .def("psi_toric",
             [](const ToricArrangement& a) {
                 AbPoly psi = psi_toric(a);
                 CdResult cd = ab_to_cd(psi - a_minus_b_pow(a.n + 1));
                 if (!cd.ok())
                     throw std::domain_error("toric cd-part is not a cd-polynomial");
                 return "(a-b)^" + std::to_string(a.n + 1) + " + " + cd.cd.str();
             })
        .def("f_vector",
             [](const ToricArrangement& a) {
                 std::vector<Int> f = toric_f_vector_from_flag_h(a);
                 if (toric_f_vector_from_moebius(a) != f)
                     throw std::logic_error("f-vector routes disagree");
                 py::list out;
                 for (const Int& v : f) out.append(pyint(v));
                 return out;
             })
        .def("grid_count",
             [](const ToricArrangement& a, long q) {
                 return pyint(off_hyperplane_grid_count(a, q));
             },
             py::arg("q"))
        .def("modulus", [](const ToricArrangement& a) { return pyint(n_of_arrangement(a)); })
        .def("offsets", [](const ToricArrangement& a) {
            std::vector<std::string> out;
            for (const Rat& r : a.offsets) out.push_back(rat_str(r));
            return out;
        });

    py::class_<Graph>(m, "Graph")
        .def_static("parse", &Graph::parse, py::arg("text"))
        .def_static("load", &Graph::load, py::arg("path"))
        .def_property_readonly("n", [](const Graph& g) { return g.n; })
        .def_property_readonly("edges", [](const Graph& g) { return g.edges; })
        .def("components", &Graph::components)
        .def("chromatic_polynomial",
             [](const Graph& g) { return chromatic_polynomial(g).str("t"); })
        .def("toric_regions",
             [](const Graph& g) { return pyint(toric_graphical_region_count(g)); })
        .def("unique_sink_orientations",
             [](const Graph& g) { return pyint(unique_sink_acyclic_orientations(g)); })
        .def("acyclic_orientations",
             [](const Graph& g) { return pyint(acyclic_orientations_brute(g)); })
        .def("euclidean_arrangement", &graphical_arrangement_euclidean)
        .def("toric_arrangement", &graphical_arrangement_toric);

    m.def("omega", [](const std::string& ab) { return omega(AbPoly::parse(ab)).str(); },
          py::arg("ab_polynomial"));
    m.def("cd_expand",
          [](const std::string& cd) { return cd_expand(CdPoly::parse(cd)).str(); },
          py::arg("cd_polynomial"));
    m.def("ab_to_cd", [](const std::string& ab) {
        CdResult r = ab_to_cd(AbPoly::parse(ab));
        if (!r.ok()) throw std::domain_error("not expressible in c and d");
        return r.cd.str();
    },
          py::arg("ab_polynomial"));
}
