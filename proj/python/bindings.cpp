#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <sstream>

#include "mcs/core.hpp"
#include "mcs/enumgraph.hpp"
#include "mcs/enumpaths.hpp"
#include "mcs/minimality.hpp"
#include "mcs/oracle.hpp"
#include "mcs/reduce2.hpp"
#include "mcs/reducek.hpp"

namespace py = pybind11;

namespace {

std::vector<mcs::Seq> to_seqs(const std::vector<std::string>& strs) {
  std::vector<mcs::Seq> out;
  out.reserve(strs.size());
  for (const std::string& s : strs) out.emplace_back(s);
  return out;
}

py::object big_to_int(const mcs::BigCount& n) {
  std::ostringstream oss;
  oss << n;
  return py::module_::import("builtins").attr("int")(oss.str());
}

}  // namespace

PYBIND11_MODULE(_mcs, m) {
  m.doc() = "minimal common supersequence algorithms";

  m.def(
      "is_subsequence",
      [](const std::string& x, const std::string& s) {
        return mcs::is_subsequence(mcs::Seq{x}, mcs::Seq{s});
      },
      py::arg("x"), py::arg("s"),
      "True iff x embeds into s order-preservingly.");

  m.def(
      "left_embedding",
      [](const std::string& x, const std::string& s) {
        return mcs::left_embedding(mcs::Seq{x}, mcs::Seq{s}).image();
      },
      py::arg("x"), py::arg("s"),
      "1-based positions of the pointwise smallest embedding of x into s.");

  m.def(
      "right_embedding",
      [](const std::string& x, const std::string& s) {
        return mcs::right_embedding(mcs::Seq{x}, mcs::Seq{s}).image();
      },
      py::arg("x"), py::arg("s"),
      "1-based positions of the pointwise largest embedding of x into s.");

  m.def(
      "essential_indices",
      [](const std::string& s, const std::string& x) {
        return mcs::essential_indices(mcs::Seq{s}, mcs::Seq{x});
      },
      py::arg("s"), py::arg("x"),
      "Indices of s whose deletion destroys containment of x.");

  m.def(
      "verify_minimal",
      [](const std::string& s, const std::vector<std::string>& inputs) {
        return mcs::verify_minimal(mcs::Seq{s}, to_seqs(inputs));
      },
      py::arg("s"), py::arg("inputs"),
      "True iff s is a minimal common supersequence of the inputs.");

  m.def(
      "reduce_two",
      [](const std::string& s, const std::string& a, const std::string& b) {
        return mcs::reduce_two(mcs::Seq{s}, mcs::Seq{a}, mcs::Seq{b}).str();
      },
      py::arg("s"), py::arg("a"), py::arg("b"),
      "Reduce a common supersequence of a and b to a minimal one, O(|s|).");

  m.def(
      "mcs_two",
      [](const std::string& a, const std::string& b) {
        return mcs::mcs_two(mcs::Seq{a}, mcs::Seq{b}).str();
      },
      py::arg("a"), py::arg("b"),
      "One minimal common supersequence of a and b.");

  m.def(
      "reduce_k",
      [](const std::string& s, const std::vector<std::string>& inputs) {
        return mcs::reduce_k(mcs::Seq{s}, to_seqs(inputs)).str();
      },
      py::arg("s"), py::arg("inputs"),
      "Reduce a common supersequence of the inputs to a minimal one, "
      "O(N log N).");

  m.def(
      "mcs_k",
      [](const std::vector<std::string>& inputs) {
        return mcs::mcs_k(to_seqs(inputs)).str();
      },
      py::arg("inputs"),
      "One minimal common supersequence of the input strings.");

  m.def(
      "enumerate_mcs",
      [](const std::string& a, const std::string& b, std::size_t limit) {
        return mcs::enumerate_mcs(mcs::Seq{a}, mcs::Seq{b}, limit);
      },
      py::arg("a"), py::arg("b"),
      py::arg("limit") = std::numeric_limits<std::size_t>::max(),
      "All minimal common supersequences of a and b, in enumeration order.");

  m.def(
      "count_mcs",
      [](const std::string& a, const std::string& b) {
        return big_to_int(mcs::count_mcs(mcs::Seq{a}, mcs::Seq{b}));
      },
      py::arg("a"), py::arg("b"),
      "Exact number of minimal common supersequences of a and b.");

  m.def(
      "delay_probe",
      [](const std::string& a, const std::string& b, std::size_t max_outputs) {
        return mcs::delay_probe(mcs::Seq{a}, mcs::Seq{b}, max_outputs);
      },
      py::arg("a"), py::arg("b"),
      py::arg("max_outputs") = std::numeric_limits<std::size_t>::max(),
      "Work performed before each emitted sequence.");

  m.def(
      "st_graph_dot",
      [](const std::string& a, const std::string& b) {
        mcs::McsEnumerator e(mcs::Seq{a}, mcs::Seq{b});
        return mcs::export_dot(e.graph());
      },
      py::arg("a"), py::arg("b"),
      "DOT text of the enumeration graph (common prefix removed).");

  m.def(
      "brute_is_minimal",
      [](const std::string& s, const std::vector<std::string>& inputs) {
        return mcs::brute_is_minimal(mcs::Seq{s}, to_seqs(inputs));
      },
      py::arg("s"), py::arg("inputs"),
      "Deletion-based minimality check, the independent oracle.");

  m.def(
      "brute_mcs_set",
      [](const std::string& a, const std::string& b, int max_len) {
        const auto set = mcs::brute_mcs_set(mcs::Seq{a}, mcs::Seq{b}, max_len);
        return std::vector<std::string>(set.begin(), set.end());
      },
      py::arg("a"), py::arg("b"), py::arg("max_len"),
      "Exhaustive minimal-common-supersequence set for tiny instances.");
}
