#include "mcs/enumgraph.hpp"

#include <algorithm>
#include <stack>

namespace mcs {

FillRow::FillRow(std::string_view x_seq, std::string_view y_seq, int x, int y)
    : xs_(x_seq),
      ys_(y_seq),
      nx_(static_cast<int>(x_seq.size())),
      ny_(static_cast<int>(y_seq.size())),
      value_(x + 1),
      yprime_(y - 1) {}

namespace {

// Fill bound over the index window [lo, hi] of ys, starting from cursor x.
int fill_bound(std::string_view xs, std::string_view ys, int x, int lo,
               int hi) {
  const int nx = static_cast<int>(xs.size());
  int l = x + 1;
  for (int t = lo; t <= hi; ++t) {
    if (l <= nx && xs[static_cast<std::size_t>(l) - 1] ==
                       ys[static_cast<std::size_t>(t) - 1])
      ++l;
  }
  return l;
}

}  // namespace

bool fills(const Seq& xs, int x, int xprime, const Seq& ys, ExtInterval j) {
  if (xprime < x + 1 || xprime > xs.size() + 1) return false;
  const int lo = std::max(j.first_int(), 1);
  const int hi = std::min(j.last_int(), ys.size());
  const int l1 = fill_bound(xs.view(), ys.view(), x, lo, hi);
  if (xprime != l1) return false;
  if (x >= 1) {
    const int l2 = fill_bound(xs.view(), ys.view(), x - 1, lo, hi);
    if (xprime <= l2) return false;
  }
  return true;
}

EdgeStream::EdgeStream(std::string_view xs, std::string_view ys, int x, int y)
    : xs_(xs),
      ys_(ys),
      nx_(static_cast<int>(xs.size())),
      ny_(static_cast<int>(ys.size())),
      x_(x),
      y_(y) {
  // Vertices whose consumed cursor is past the end, or whose emit cursor
  // leaves no index to emit, have no out-edges. ny == 0 leaves no index
  // either: every label would be empty.
  dead_ = x_ > nx_ || y_ > ny_ || x_ < 0 || y_ < 0 || ny_ == 0;
  yp_ = std::max(y_, 1) - 1;
  l1_ = l3_ = x_ + 1;
  l2_ = l4_ = x_ >= 1 ? x_ : -1;
}

bool EdgeStream::step(int* yprime, int* xprime, bool* is_edge) {
  if (dead_ || yp_ > ny_) return false;
  ++yp_;
  ++steps_;
  if (yp_ <= ny_) {
    const char cy = ys_[static_cast<std::size_t>(yp_) - 1];
    consume(l1_, cy);
    if (x_ >= 1) consume(l2_, cy);
    if (yp_ >= y_ + 1) {
      consume(l3_, cy);
      if (x_ >= 1) consume(l4_, cy);
    }
  }
  *yprime = yp_;
  *xprime = l1_;
  *is_edge = l1_ == l3_ && (x_ == 0 || (l1_ > l2_ && l1_ > l4_));
  return true;
}

bool EdgeStream::next(int* yprime, int* xprime) {
  bool is_edge = false;
  while (step(yprime, xprime, &is_edge)) {
    if (is_edge) return true;
  }
  return false;
}

std::size_t EnumGraph::grid_index(VertexId v) const {
  const int stride = second_len(v) + 2;
  return static_cast<std::size_t>(v.x) * static_cast<std::size_t>(stride) +
         static_cast<std::size_t>(v.y);
}

bool EnumGraph::contains(VertexId v) const {
  if (v.orient > 1) return false;
  if (v.x < 0 || v.x > first_len(v) + 1) return false;
  if (v.y < 0 || v.y > second_len(v) + 1) return false;
  if (st_[v.orient].empty()) return false;
  return st_[v.orient][grid_index(v)] != 0;
}

int EnumGraph::max_edge_y(VertexId v) const {
  if (!contains(v)) return -1;
  return max_y_[v.orient][grid_index(v)];
}

std::vector<VertexId> EnumGraph::vertices() const {
  std::vector<VertexId> out;
  for (std::uint8_t o = 0; o < 2; ++o) {
    const int nx = o == 0 ? a_.size() : b_.size();
    const int ny = o == 0 ? b_.size() : a_.size();
    for (int x = 0; x <= nx + 1; ++x) {
      for (int y = 0; y <= ny + 1; ++y) {
        VertexId v{o, x, y};
        if (contains(v)) out.push_back(v);
      }
    }
  }
  return out;
}

EdgeStream EnumGraph::raw_stream(VertexId v) const {
  if (v.orient == 0) return EdgeStream(a_.view(), b_.view(), v.x, v.y);
  return EdgeStream(b_.view(), a_.view(), v.x, v.y);
}

std::vector<Edge> EnumGraph::out_edges(VertexId v) const {
  std::vector<Edge> out;
  if (!contains(v)) return out;
  const int stop = max_edge_y(v);
  EdgeStream es = raw_stream(v);
  int yp = 0, xp = 0;
  while (es.next_yp() <= stop && es.next(&yp, &xp)) {
    if (yp > stop) break;
    VertexId t = edge_target(v, yp, xp);
    if (contains(t)) out.push_back(Edge{v, t, edge_label(v, yp)});
  }
  return out;
}

std::string EnumGraph::label_text(VertexId v, LabelInterval label) const {
  const Seq& emitted = v.orient == 0 ? b_ : a_;
  if (label.empty()) return {};
  return emitted.substring(label.lo, label.hi).str();
}

EnumGraph build_st_subgraph(const Seq& a, const Seq& b) {
  EnumGraph g;
  g.a_ = a;
  g.b_ = b;
  const int na = a.size();
  const int nb = b.size();
  const std::size_t cells =
      static_cast<std::size_t>(na + 2) * static_cast<std::size_t>(nb + 2);

  std::vector<std::uint8_t> co[2] = {std::vector<std::uint8_t>(cells, 0),
                                     std::vector<std::uint8_t>(cells, 0)};
  g.max_y_[0].assign(cells, -1);
  g.max_y_[1].assign(cells, -1);
  g.st_[0].assign(cells, 0);
  g.st_[1].assign(cells, 0);

  auto cell = [&](std::uint8_t o, int x, int y) {
    const int stride = (o == 0 ? nb : na) + 2;
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(stride) +
           static_cast<std::size_t>(y);
  };

  // Co-reachability sweep. Every edge strictly increases x+y of the vertex
  // it enters, so scanning sums downward sees each target before its
  // sources. Also records, per vertex, the largest y' whose edge enters a
  // co-reachable vertex.
  for (int s = na + nb + 2; s >= 0; --s) {
    for (std::uint8_t o = 0; o < 2; ++o) {
      const int nx = o == 0 ? na : nb;
      const int ny = o == 0 ? nb : na;
      for (int x = std::max(0, s - (ny + 1)); x <= std::min(nx + 1, s); ++x) {
        const int y = s - x;
        if (x == nx + 1 && y == ny + 1) {
          co[o][cell(o, x, y)] = 1;
          continue;
        }
        if (x > nx || y > ny) continue;
        EdgeStream es = g.raw_stream(VertexId{o, x, y});
        int yp = 0, xp = 0;
        int best = -1;
        while (es.next(&yp, &xp)) {
          if (co[1 - o][cell(static_cast<std::uint8_t>(1 - o), yp, xp)]) {
            best = yp;
          }
        }
        if (best >= 0) {
          co[o][cell(o, x, y)] = 1;
          g.max_y_[o][cell(o, x, y)] = best;
        }
      }
    }
  }

  // Forward search from the two start nodes, following only edges into
  // co-reachable vertices. Reached-and-co-reachable is exactly the vertex
  // set of the start-to-end paths.
  std::stack<VertexId> work;
  for (std::uint8_t o = 0; o < 2; ++o) {
    if (co[o][cell(o, 0, 0)]) {
      g.st_[o][cell(o, 0, 0)] = 1;
      work.push(VertexId{o, 0, 0});
    }
  }
  while (!work.empty()) {
    VertexId v = work.top();
    work.pop();
    const int nx = v.orient == 0 ? na : nb;
    const int ny = v.orient == 0 ? nb : na;
    if (v.x > nx || v.y > ny) continue;
    const int stop = g.max_y_[v.orient][cell(v.orient, v.x, v.y)];
    EdgeStream es = g.raw_stream(v);
    int yp = 0, xp = 0;
    while (es.next_yp() <= stop && es.next(&yp, &xp)) {
      if (yp > stop) break;
      const std::uint8_t to = static_cast<std::uint8_t>(1 - v.orient);
      const std::size_t c = cell(to, yp, xp);
      if (co[to][c] && !g.st_[to][c]) {
        g.st_[to][c] = 1;
        work.push(VertexId{to, yp, xp});
      }
    }
  }
  return g;
}

namespace {

std::string vertex_name(VertexId v) {
  const char* first = v.orient == 0 ? "A" : "B";
  const char* second = v.orient == 0 ? "B" : "A";
  return std::string("(") + first + "," + std::to_string(v.x) + "," + second +
         "," + std::to_string(v.y) + ")";
}

std::string escape_dot(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string export_dot(const EnumGraph& g) {
  std::string out = "digraph mcs_st {\n  rankdir=LR;\n";
  const std::vector<VertexId> verts = g.vertices();
  for (VertexId v : verts) {
    out += "  \"" + vertex_name(v) + "\";\n";
  }
  for (VertexId v : verts) {
    for (const Edge& e : g.out_edges(v)) {
      out += "  \"" + vertex_name(e.from) + "\" -> \"" + vertex_name(e.to) +
             "\" [label=\"" + escape_dot(g.label_text(v, e.label)) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace mcs
