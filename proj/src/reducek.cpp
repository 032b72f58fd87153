#include "mcs/reducek.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace mcs {

OccString::OccString(const Seq& templ) {
  for (int i = 1; i <= templ.size(); ++i) ++cap_[byte(templ.at(i))];
  for (std::size_t c = 0; c < 256; ++c) {
    if (cap_[c] > 0) occ_[c].reserve(static_cast<std::size_t>(cap_[c]));
  }
}

void OccString::insert(char c) {
  std::vector<int>& arr = occ_[byte(c)];
  if (static_cast<int>(arr.size()) >= cap_[byte(c)]) {
    throw std::logic_error("OccString::insert: symbol capacity exceeded");
  }
  arr.push_back(++size_);
}

int OccString::find_next(char c, int i) const {
  const std::vector<int>& arr = occ_[byte(c)];
  auto it = std::upper_bound(arr.begin(), arr.end(), i);
  return it == arr.end() ? size_ + 1 : *it;
}

Seq OccString::build_str(const Seq& templ) const {
  std::array<std::size_t, 256> cursor{};
  std::string out;
  out.reserve(static_cast<std::size_t>(size_));
  int produced = 0;
  for (int t = 1; t <= templ.size() && produced < size_; ++t) {
    char c = templ.at(t);
    const std::vector<int>& arr = occ_[byte(c)];
    std::size_t& k = cursor[byte(c)];
    if (k < arr.size() && arr[k] == produced + 1) {
      out.push_back(c);
      ++k;
      ++produced;
    }
  }
  if (produced != size_) {
    throw std::logic_error(
        "OccString::build_str: stored string is not a subsequence of the "
        "template");
  }
  return Seq{std::move(out)};
}

std::vector<MergedRightIndex> merge_right_embeddings(
    const Seq& s, std::span<const Seq> inputs) {
  std::vector<std::vector<int>> images;
  images.reserve(inputs.size());
  std::size_t total = 0;
  for (std::size_t id = 0; id < inputs.size(); ++id) {
    try {
      images.push_back(right_embedding(inputs[id], s).image());
    } catch (const NotASubsequenceError&) {
      throw NotASupersequenceError(
          id, "merge_right_embeddings: input " + std::to_string(id) +
                  " is not a subsequence of the supersequence");
    }
    total += images.back().size();
  }

  // (s_index, string_id) pairs compare the way the output must be ordered.
  using Head = std::pair<int, std::size_t>;
  std::priority_queue<Head, std::vector<Head>, std::greater<Head>> heads;
  std::vector<std::size_t> offset(inputs.size(), 0);
  for (std::size_t id = 0; id < inputs.size(); ++id) {
    if (!images[id].empty()) heads.emplace(images[id][0], id);
  }

  std::vector<MergedRightIndex> merged;
  merged.reserve(total);
  while (!heads.empty()) {
    auto [s_index, id] = heads.top();
    heads.pop();
    merged.push_back({s_index, id});
    std::size_t next = ++offset[id];
    if (next < images[id].size()) heads.emplace(images[id][next], id);
  }
  return merged;
}

namespace detail {

Seq reduce_k_observed(const Seq& s, std::span<const Seq> inputs,
                      const std::function<void(const ReduceKStep&)>* observer,
                      ReduceKStats* stats) {
  std::vector<MergedRightIndex> merged = merge_right_embeddings(s, inputs);
  OccString outp(s);
  std::vector<int> l_all(inputs.size(), 0);
  std::vector<int> matched(inputs.size(), 0);
  std::size_t j = 0;
  int pos = 1;
  while (pos <= s.size()) {
    if (observer) {
      (*observer)({pos, j, outp.build_str(s).str(), l_all, matched});
    }
    if (j < merged.size() && merged[j].s_index == pos) {
      const std::size_t id = merged[j].string_id;
      const char c = s.at(pos);
      const int new_top = outp.find_next(c, l_all[id]);
      if (stats) ++stats->find_next_calls;
      if (new_top == outp.size() + 1) outp.insert(c);
      l_all[id] = new_top;
      ++matched[id];
      ++j;
    } else {
      ++pos;
    }
  }
  return outp.build_str(s);
}

}  // namespace detail

Seq reduce_k(const Seq& s, std::span<const Seq> inputs) {
  return detail::reduce_k_observed(s, inputs, nullptr, nullptr);
}

Seq mcs_k(std::span<const Seq> inputs) {
  Seq all;
  for (const Seq& x : inputs) all = all.concat(x);
  return reduce_k(all, inputs);
}

}  // namespace mcs
