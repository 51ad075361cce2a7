#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skeinlab/fdr.hpp"
#include "skeinlab/fermions.hpp"
#include "skeinlab/quadring.hpp"
#include "skeinlab/repsym.hpp"
#include "skeinlab/setpart.hpp"
#include "skeinlab/skein.hpp"
#include "skeinlab/verify.hpp"

namespace py = pybind11;
using namespace skeinlab;

namespace {

std::vector<std::pair<std::string, std::string>> ncvector_terms(const skein::NCVector& v) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [pi, c] : v.terms()) out.push_back({c.get_str(), format_set_partition(pi)});
    return out;
}

}  // namespace

PYBIND11_MODULE(skeinlab, m) {
    m.doc() = "Exact skein calculus on noncrossing set partitions";

    m.def("is_noncrossing",
          [](const std::string& text) { return is_noncrossing(parse_set_partition(text)); },
          py::arg("partition"));

    m.def("tangle",
          [](const std::string& text) { return tangle(parse_set_partition(text)); },
          py::arg("partition"));

    m.def(
        "enumerate_partitions",
        [](int n, py::object k, py::object m, bool noncrossing) {
            std::optional<int> ko, mo;
            if (!k.is_none()) ko = k.cast<int>();
            if (!m.is_none()) mo = m.cast<int>();
            std::vector<std::string> out;
            for (const auto& pi : enumerate_partitions(n, ko, mo, noncrossing))
                out.push_back(format_set_partition(pi));
            return out;
        },
        py::arg("n"), py::arg("k") = py::none(), py::arg("m") = py::none(),
        py::arg("noncrossing") = false);

    m.def("fermion_F",
          [](const std::string& text) {
              return format_fermion(fermions::F(parse_set_partition(text)));
          },
          py::arg("partition"));
    m.def("fermion_f",
          [](const std::string& text) {
              return format_fermion(fermions::f(parse_set_partition(text)));
          },
          py::arg("partition"));
    m.def("fermion_G",
          [](const std::string& text) {
              return format_fermion(fermions::G(parse_segmented_permutation(text)));
          },
          py::arg("segmented_permutation"));

    m.def(
        "resolve",
        [](const std::string& text, const std::string& route) {
            SetPartition pi = parse_set_partition(text);
            skein::NCVector out =
                route == "algebraic" ? skein::resolve_algebraic(pi) : skein::resolve_greedy(pi);
            return ncvector_terms(out);
        },
        py::arg("partition"), py::arg("route") = "greedy");

    m.def(
        "act",
        [](const std::string& perm, const std::string& partition) {
            skein::NCVector v = skein::NCVector::basis_element(parse_set_partition(partition));
            return ncvector_terms(skein::skein_act(parse_permutation(perm), v));
        },
        py::arg("permutation"), py::arg("partition"));

    m.def(
        "sigma",
        [](const std::string& partition, int i) {
            SetPartition pi = parse_set_partition(partition);
            if (i <= 0) {
                auto valid = skein::resolution_indices(pi);
                if (valid.empty()) throw std::invalid_argument("not almost noncrossing");
                i = valid.front();
            }
            return ncvector_terms(skein::sigma(pi, i));
        },
        py::arg("partition"), py::arg("i") = 0);

    m.def(
        "frobenius",
        [](int n, int k, py::object m) {
            repsym::SymFunc total = repsym::SymFunc::zero(n);
            auto add_stratum = [&](int mm) {
                auto basis = enumerate_partitions(n, k, mm, true);
                if (basis.empty()) return;
                std::vector<std::vector<std::vector<long long>>> gens;
                for (int i = 1; i < n; ++i)
                    gens.push_back(skein::rep_matrix(Perm::adjacent_transposition(n, i), basis));
                total = total + repsym::frobenius_from_rep(gens, n);
            };
            if (m.is_none())
                for (int mm = 0; mm <= k; ++mm) add_stratum(mm);
            else
                add_stratum(m.cast<int>());
            std::vector<std::pair<long long, std::vector<int>>> out;
            for (const auto& [lambda, c] : total.coeffs())
                out.push_back({c.get_si(), lambda});
            return out;
        },
        py::arg("n"), py::arg("k"), py::arg("m") = py::none());

    m.def("fdr_dimension", &fdr::fdr_dimension, py::arg("n"), py::arg("i"), py::arg("j"));

    m.def(
        "hilbert_table",
        [](int n, const std::string& quotient) {
            auto which = quotient == "J" ? quadring::Quotient::DisjointOnly
                                         : quadring::Quotient::DisjointNoncrossing;
            auto table = quadring::hilbert_series(n, which);
            std::vector<std::vector<long long>> out;
            for (const auto& row : table) {
                std::vector<long long> r;
                for (const auto& v : row) r.push_back(v.get_si());
                out.push_back(std::move(r));
            }
            return out;
        },
        py::arg("n"), py::arg("quotient") = "IJ");

    m.def(
        "verify",
        [](int n_max, int threads) {
            std::vector<std::pair<std::string, bool>> out;
            for (const auto& r : verify::run_all(n_max, threads))
                out.push_back({r.name, r.pass});
            return out;
        },
        py::arg("n_max") = 6, py::arg("threads") = 1);
}
