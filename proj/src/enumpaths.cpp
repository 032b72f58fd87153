#include "mcs/enumpaths.hpp"

#include <algorithm>

namespace mcs {

McsEnumerator::McsEnumerator(const Seq& a, const Seq& b) {
  const int p = longest_common_prefix(a, b);
  prefix_ = std::string(a.view().substr(0, static_cast<std::size_t>(p)));
  const Seq sa = a.substring(p + 1, a.size());
  const Seq sb = b.substring(p + 1, b.size());
  if (sa.empty() || sb.empty()) {
    // One suffix contains the other trivially; minimality forces a single
    // answer and the graph is never built.
    pending_.push_back(prefix_ + (sa.empty() ? sb.str() : sa.str()));
    return;
  }
  graph_ = build_st_subgraph(sa, sb);
  has_graph_ = true;
  buf_ = prefix_;
}

void McsEnumerator::push_frame(VertexId v) {
  stack_.push_back(
      Frame{v, graph_.raw_stream(v), graph_.max_edge_y(v), buf_.size()});
}

bool McsEnumerator::next(std::string& out) {
  if (!has_graph_) {
    if (pending_.empty()) return false;
    out = std::move(pending_.back());
    pending_.pop_back();
    return true;
  }
  while (true) {
    if (stack_.empty()) {
      if (start_idx_ >= 2) return false;
      VertexId start{static_cast<std::uint8_t>(start_idx_), 0, 0};
      ++start_idx_;
      if (!graph_.contains(start)) continue;
      buf_.resize(prefix_.size());
      push_frame(start);
      continue;
    }
    Frame& f = stack_.back();
    if (f.stream.next_yp() > f.stop_y) {
      buf_.resize(f.base_len);
      stack_.pop_back();
      ++backtracks_;
      continue;
    }
    int yp = 0, xp = 0;
    bool is_edge = false;
    f.stream.step(&yp, &xp, &is_edge);
    ++dp_steps_;
    const int emit_len = graph_.second_len(f.v);
    if (yp <= emit_len) {
      const Seq& emitted = f.v.orient == 0 ? graph_.b() : graph_.a();
      buf_.push_back(emitted.at(yp));
    }
    if (is_edge) {
      VertexId t = graph_.edge_target(f.v, yp, xp);
      if (graph_.is_end(t)) {
        out = buf_;
        return true;
      }
      if (graph_.contains(t)) push_frame(t);
    }
  }
}

std::vector<std::string> enumerate_mcs(const Seq& a, const Seq& b,
                                       std::size_t limit) {
  McsEnumerator e(a, b);
  std::vector<std::string> out;
  std::string s;
  while (out.size() < limit && e.next(s)) out.push_back(s);
  return out;
}

BigCount count_mcs(const Seq& a, const Seq& b) {
  const int p = longest_common_prefix(a, b);
  const Seq sa = a.substring(p + 1, a.size());
  const Seq sb = b.substring(p + 1, b.size());
  if (sa.empty() || sb.empty()) return 1;

  EnumGraph g = build_st_subgraph(sa, sb);
  const int na = sa.size();
  const int nb = sb.size();
  const std::size_t cells =
      static_cast<std::size_t>(na + 2) * static_cast<std::size_t>(nb + 2);
  std::vector<BigCount> paths[2] = {std::vector<BigCount>(cells),
                                    std::vector<BigCount>(cells)};
  auto cell = [&](std::uint8_t o, int x, int y) {
    const int stride = (o == 0 ? nb : na) + 2;
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(stride) +
           static_cast<std::size_t>(y);
  };

  // Edges enter vertices of strictly larger x+y, so one descending sweep
  // suffices.
  for (int s = na + nb + 2; s >= 0; --s) {
    for (std::uint8_t o = 0; o < 2; ++o) {
      const int nx = o == 0 ? na : nb;
      const int ny = o == 0 ? nb : na;
      for (int x = std::max(0, s - (ny + 1)); x <= std::min(nx + 1, s); ++x) {
        const int y = s - x;
        VertexId v{o, x, y};
        if (!g.contains(v)) continue;
        if (g.is_end(v)) {
          paths[o][cell(o, x, y)] = 1;
          continue;
        }
        BigCount total = 0;
        for (const Edge& e : g.out_edges(v)) {
          total += paths[e.to.orient][cell(e.to.orient, e.to.x, e.to.y)];
        }
        paths[o][cell(o, x, y)] = std::move(total);
      }
    }
  }
  BigCount result = 0;
  if (g.contains(VertexId{0, 0, 0})) result += paths[0][cell(0, 0, 0)];
  if (g.contains(VertexId{1, 0, 0})) result += paths[1][cell(1, 0, 0)];
  return result;
}

std::vector<long> delay_probe(const Seq& a, const Seq& b,
                              std::size_t max_outputs) {
  McsEnumerator e(a, b);
  std::vector<long> gaps;
  std::string s;
  long last = 0;
  while (gaps.size() < max_outputs && e.next(s)) {
    const long now = e.dp_steps() + e.backtrack_steps();
    gaps.push_back(now - last);
    last = now;
  }
  return gaps;
}

}  // namespace mcs
