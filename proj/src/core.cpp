#include "mcs/core.hpp"

namespace mcs {

bool is_subsequence(const Seq& x, const Seq& s) {
  std::string_view xv = x.view();
  std::string_view sv = s.view();
  std::size_t i = 0;
  for (std::size_t j = 0; j < sv.size() && i < xv.size(); ++j) {
    if (sv[j] == xv[i]) ++i;
  }
  return i == xv.size();
}

EmbeddingMap left_embedding(const Seq& x, const Seq& s) {
  std::vector<int> image;
  image.reserve(static_cast<std::size_t>(x.size()));
  int i = 1;
  for (int j = 1; j <= s.size() && i <= x.size(); ++j) {
    if (s.at(j) == x.at(i)) {
      image.push_back(j);
      ++i;
    }
  }
  if (i <= x.size()) {
    throw NotASubsequenceError("left_embedding: not a subsequence");
  }
  return EmbeddingMap{std::move(image), s.size()};
}

EmbeddingMap right_embedding(const Seq& x, const Seq& s) {
  std::vector<int> image(static_cast<std::size_t>(x.size()), 0);
  int i = x.size();
  for (int j = s.size(); j >= 1 && i >= 1; --j) {
    if (s.at(j) == x.at(i)) {
      image[static_cast<std::size_t>(i) - 1] = j;
      --i;
    }
  }
  if (i >= 1) {
    throw NotASubsequenceError("right_embedding: not a subsequence");
  }
  return EmbeddingMap{std::move(image), s.size()};
}

int longest_common_prefix(const Seq& a, const Seq& b) {
  int n = std::min(a.size(), b.size());
  int p = 0;
  while (p < n && a.at(p + 1) == b.at(p + 1)) ++p;
  return p;
}

}  // namespace mcs
