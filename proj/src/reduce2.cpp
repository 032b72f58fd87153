#include "mcs/reduce2.hpp"

#include <cassert>

namespace mcs {

namespace {

std::vector<int> right_image_or_throw(const Seq& s, const Seq& x,
                                      std::size_t input_index) {
  try {
    return right_embedding(x, s).image();
  } catch (const NotASubsequenceError&) {
    throw NotASupersequenceError(
        input_index, "reduce: input " + std::to_string(input_index) +
                         " is not a subsequence of the supersequence");
  }
}

}  // namespace

std::vector<int> build_right_embedding_image(const Seq& s, const Seq& x) {
  return right_embedding(x, s).image();
}

std::vector<char> reduce_two_marks(const Seq& s, const Seq& a, const Seq& b) {
  const int n = s.size();
  std::vector<int> ra = right_image_or_throw(s, a, 0);
  std::vector<int> rb = right_image_or_throw(s, b, 1);
  ra.push_back(n + 1);
  rb.push_back(n + 1);

  std::vector<char> del(static_cast<std::size_t>(n) + 1, 0);
  std::size_t ja = 0, jb = 0;  // 0-based cursors into ra/rb
  int la = 0, lb = 0;          // last left-embedding position, 0 initially
  for (int pos = 1; pos <= n; ++pos) {
    if (ra[ja] == pos) {
      ++la;
      while (del[static_cast<std::size_t>(la)] ||
             a.at(static_cast<int>(ja) + 1) != s.at(la)) {
        ++la;
      }
      assert(la <= pos);
      ++ja;
    }
    if (rb[jb] == pos) {
      ++lb;
      while (del[static_cast<std::size_t>(lb)] ||
             b.at(static_cast<int>(jb) + 1) != s.at(lb)) {
        ++lb;
      }
      assert(lb <= pos);
      ++jb;
    }
    if (la != pos && lb != pos) del[static_cast<std::size_t>(pos)] = 1;
  }
  return del;
}

Seq reduce_two(const Seq& s, const Seq& a, const Seq& b) {
  std::vector<char> del = reduce_two_marks(s, a, b);
  std::string out;
  out.reserve(static_cast<std::size_t>(s.size()));
  for (int i = 1; i <= s.size(); ++i) {
    if (!del[static_cast<std::size_t>(i)]) out.push_back(s.at(i));
  }
  return Seq{std::move(out)};
}

Seq mcs_two(const Seq& a, const Seq& b) {
  return reduce_two(a.concat(b), a, b);
}

}  // namespace mcs
