#ifndef MCS_ENUMGRAPH_HPP
#define MCS_ENUMGRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mcs/core.hpp"

namespace mcs {

/// Vertex of the bipartite supersequence graph. orient 0 names the tuple
/// (A, x, B, y), orient 1 the tuple (B, x, A, y). The first cursor walks the
/// string whose block was consumed last; the second cursor walks the string
/// the next out-edge emits a block of.
struct VertexId {
  std::uint8_t orient = 0;
  int x = 0;
  int y = 0;

  bool operator==(const VertexId&) const = default;
  auto operator<=>(const VertexId&) const = default;
};

/// Half-open block [lo, hi] (stored inclusive on both ends, already clamped
/// to real indices) of the string an edge emits.
struct LabelInterval {
  int lo = 1;
  int hi = 0;
  bool empty() const { return hi < lo; }
  bool operator==(const LabelInterval&) const = default;
};

struct Edge {
  VertexId from;
  VertexId to;
  LabelInterval label;  // indices of the string `from` emits
  bool operator==(const Edge&) const = default;
};

/// Streaming evaluation of the fill bound l(x, y, y') for ascending y':
/// the largest x' in [0, |X|+1] such that X(x..x') is a subsequence of
/// Y[y..y']. Constructed at y' = y-1, where the value is x+1; each advance()
/// moves to the next y' in O(1).
class FillRow {
 public:
  /// Views must outlive the row.
  FillRow(std::string_view x_seq, std::string_view y_seq, int x, int y);

  int value() const { return value_; }
  int yprime() const { return yprime_; }

  void advance() {
    ++yprime_;
    if (yprime_ >= 1 && yprime_ <= ny_ && value_ <= nx_ &&
        xs_[static_cast<std::size_t>(value_) - 1] ==
            ys_[static_cast<std::size_t>(yprime_) - 1])
      ++value_;
  }

 private:
  std::string_view xs_;
  std::string_view ys_;
  int nx_;
  int ny_;
  int value_;
  int yprime_;
};

/// True iff the open interval (x, x') fills j in ys using xs: the covered
/// substring of xs embeds into ys[j] and neither endpoint extension still
/// does.
bool fills(const Seq& xs, int x, int xprime, const Seq& ys, ExtInterval j);

/// Out-edges of the vertex (X, x, Y, y), streamed in ascending y' with O(1)
/// work per y' step. Four fill rows advance in lockstep; a candidate at y'
/// is an edge when the closed and open fill conditions both hold. Edges with
/// empty labels do not exist, so y' starts at max(y, 1) and ends at |Y|+1.
class EdgeStream {
 public:
  EdgeStream() = default;
  EdgeStream(std::string_view xs, std::string_view ys, int x, int y);

  /// Advances one y'. Returns false when the stream is past |Y|+1.
  /// When it returns true, *yprime/*xprime describe the candidate target;
  /// *is_edge says whether the fill conditions hold there.
  bool step(int* yprime, int* xprime, bool* is_edge);

  /// Advances until the next edge. False when exhausted.
  bool next(int* yprime, int* xprime);

  /// y' of the next step.
  int next_yp() const { return yp_ + 1; }

  long steps() const { return steps_; }

 private:
  void consume(int& l, char cy) {
    if (l <= nx_ && xs_[static_cast<std::size_t>(l) - 1] == cy) ++l;
  }

  std::string_view xs_;
  std::string_view ys_;
  int nx_ = 0;
  int ny_ = 0;
  int x_ = 0;
  int y_ = 0;
  int yp_ = 0;
  int l1_ = 0;  // l(x,   closed window)
  int l2_ = 0;  // l(x-1, closed window); -1 stands for "no left extension"
  int l3_ = 0;  // l(x,   open window)
  int l4_ = 0;  // l(x-1, open window)
  bool dead_ = true;
  long steps_ = 0;
};

/// Vertices of the graph restricted to start-to-end paths, with the largest
/// useful y' cached per vertex. Holds the two (prefix-stripped) strings; no
/// adjacency lists are materialized.
class EnumGraph {
 public:
  EnumGraph() = default;

  const Seq& a() const { return a_; }
  const Seq& b() const { return b_; }

  /// Length of the string the first / second cursor of v ranges over.
  int first_len(VertexId v) const { return v.orient == 0 ? a_.size() : b_.size(); }
  int second_len(VertexId v) const { return v.orient == 0 ? b_.size() : a_.size(); }

  bool is_start(VertexId v) const { return v.x == 0 && v.y == 0; }
  bool is_end(VertexId v) const {
    return v.x == first_len(v) + 1 && v.y == second_len(v) + 1;
  }

  bool contains(VertexId v) const;
  /// Largest y' with an edge into a surviving vertex; -1 when none.
  int max_edge_y(VertexId v) const;

  /// Surviving vertices, sorted by (orient, x, y).
  std::vector<VertexId> vertices() const;

  /// Out-edges of v whose targets survive, ascending y'. Transient.
  std::vector<Edge> out_edges(VertexId v) const;

  /// Stream over all out-edges of v in the unrestricted graph.
  EdgeStream raw_stream(VertexId v) const;

  VertexId edge_target(VertexId v, int yprime, int xprime) const {
    return VertexId{static_cast<std::uint8_t>(1 - v.orient), yprime, xprime};
  }
  LabelInterval edge_label(VertexId v, int yprime) const {
    return LabelInterval{std::max(v.y, 1), std::min(yprime, second_len(v))};
  }
  /// Text of an edge's label, drawn from the string v emits.
  std::string label_text(VertexId v, LabelInterval label) const;

  friend EnumGraph build_st_subgraph(const Seq& a, const Seq& b);

 private:
  std::size_t grid_index(VertexId v) const;

  Seq a_;
  Seq b_;
  // One flag/counter per vertex of either orientation, flattened.
  std::vector<std::uint8_t> st_[2];
  std::vector<int> max_y_[2];
};

/// Builds the subgraph induced by the vertices lying on start-to-end paths.
/// Callers strip any common prefix of a and b first. O(n^3) time, O(n^2)
/// space: one backward sweep over vertex sums for co-reachability, then a
/// forward search from the two start nodes, recomputing edges on demand.
EnumGraph build_st_subgraph(const Seq& a, const Seq& b);

/// Deterministic DOT text of the surviving subgraph: vertices labeled
/// "(A,x,B,y)" sorted by (string, x, y), edges labeled with their block text.
std::string export_dot(const EnumGraph& g);

}  // namespace mcs

#endif
