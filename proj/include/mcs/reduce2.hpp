#ifndef MCS_REDUCE2_HPP
#define MCS_REDUCE2_HPP

#include <cstddef>
#include <vector>

#include "mcs/core.hpp"

namespace mcs {

class NotASupersequenceError : public std::invalid_argument {
 public:
  NotASupersequenceError(std::size_t input_index, const std::string& what)
      : std::invalid_argument(what), input_index_(input_index) {}
  /// 0-based index of the input string that is not contained.
  std::size_t input_index() const { return input_index_; }

 private:
  std::size_t input_index_;
};

/// Sorted indices of s used by the right embedding of x into s.
/// Throws NotASubsequenceError.
std::vector<int> build_right_embedding_image(const Seq& s, const Seq& x);

/// Deletion mask of the linear sweep: mask[i] is true when index i of s got
/// removed. mask[0] is unused. Throws NotASupersequenceError.
std::vector<char> reduce_two_marks(const Seq& s, const Seq& a, const Seq& b);

/// Reduces a common supersequence s of a and b to a minimal one, keeping a
/// subsequence of s. O(|s|). Throws NotASupersequenceError.
Seq reduce_two(const Seq& s, const Seq& a, const Seq& b);

/// A minimal common supersequence of a and b, obtained by reducing a.b.
Seq mcs_two(const Seq& a, const Seq& b);

}  // namespace mcs

#endif
