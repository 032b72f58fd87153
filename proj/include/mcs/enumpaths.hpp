#ifndef MCS_ENUMPATHS_HPP
#define MCS_ENUMPATHS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "mcs/core.hpp"
#include "mcs/enumgraph.hpp"

namespace mcs {

using BigCount = boost::multiprecision::cpp_int;

/// Pull-based stream over all minimal common supersequences of two strings.
/// Strips the common prefix, builds the st-subgraph of the suffixes once,
/// then walks it depth-first: start node (A,0,B,0) before (B,0,A,0), edges
/// in ascending y'. Each output is produced exactly once. The output buffer
/// grows one character per fill-recurrence step and is truncated on
/// backtrack, which keeps the work between two outputs linear in the input
/// length.
class McsEnumerator {
 public:
  McsEnumerator(const Seq& a, const Seq& b);

  /// Writes the next sequence into out. False when exhausted.
  bool next(std::string& out);

  long dp_steps() const { return dp_steps_; }
  long backtrack_steps() const { return backtracks_; }

  bool has_graph() const { return has_graph_; }
  const EnumGraph& graph() const { return graph_; }

 private:
  struct Frame {
    VertexId v;
    EdgeStream stream;
    int stop_y;
    std::size_t base_len;
  };

  void push_frame(VertexId v);

  std::string prefix_;
  bool has_graph_ = false;
  EnumGraph graph_;
  std::vector<std::string> pending_;  // degenerate answers, emitted directly
  std::vector<Frame> stack_;
  std::string buf_;
  int start_idx_ = 0;
  long dp_steps_ = 0;
  long backtracks_ = 0;
};

/// Materialized enumeration, at most `limit` entries, in stream order.
std::vector<std::string> enumerate_mcs(
    const Seq& a, const Seq& b,
    std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Exact number of minimal common supersequences of a and b: path counting
/// over the st-subgraph.
BigCount count_mcs(const Seq& a, const Seq& b);

/// Work performed before each emission (fill-recurrence steps plus
/// backtrack pops since the previous one), for at most `max_outputs`
/// outputs. Regression probe for the enumeration delay.
std::vector<long> delay_probe(
    const Seq& a, const Seq& b,
    std::size_t max_outputs = std::numeric_limits<std::size_t>::max());

}  // namespace mcs

#endif
