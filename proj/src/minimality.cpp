#include "mcs/minimality.hpp"

#include <stdexcept>

namespace mcs {

namespace {

// Marks in `covered` every index of s essential for x. Returns false when x
// is not a subsequence of s.
bool mark_essential(const Seq& s, const Seq& x, std::vector<char>& covered) {
  if (!is_subsequence(x, s)) return false;
  EmbeddingMap l = left_embedding(x, s);
  EmbeddingMap r = right_embedding(x, s);
  for (int j = 1; j <= x.size(); ++j) {
    if (l.at(j) == r.at(j)) covered[static_cast<std::size_t>(l.at(j))] = 1;
  }
  return true;
}

}  // namespace

std::vector<int> essential_indices(const Seq& s, const Seq& x) {
  EmbeddingMap l = left_embedding(x, s);
  EmbeddingMap r = right_embedding(x, s);
  std::vector<int> out;
  for (int j = 1; j <= x.size(); ++j) {
    if (l.at(j) == r.at(j)) out.push_back(l.at(j));
  }
  return out;
}

bool is_essential_for_pair(const Seq& s, int i, const Seq& x, int j) {
  if (i < 1 || i > s.size()) {
    throw std::out_of_range("is_essential_for_pair: index into S out of range");
  }
  if (j < 1 || j > x.size()) {
    throw std::out_of_range("is_essential_for_pair: index into X out of range");
  }
  EmbeddingMap l = left_embedding(x, s);
  EmbeddingMap r = right_embedding(x, s);
  return l.at(j) == i && r.at(j) == i;
}

bool verify_minimal(const Seq& s, std::span<const Seq> inputs) {
  std::vector<char> covered(static_cast<std::size_t>(s.size()) + 1, 0);
  for (const Seq& x : inputs) {
    if (!mark_essential(s, x, covered)) return false;
  }
  for (int i = 1; i <= s.size(); ++i) {
    if (!covered[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

std::optional<int> first_deletable_index(const Seq& s,
                                         std::span<const Seq> inputs) {
  std::vector<char> covered(static_cast<std::size_t>(s.size()) + 1, 0);
  for (const Seq& x : inputs) {
    if (!mark_essential(s, x, covered)) return std::nullopt;
  }
  for (int i = 1; i <= s.size(); ++i) {
    if (!covered[static_cast<std::size_t>(i)]) return i;
  }
  return std::nullopt;
}

}  // namespace mcs
