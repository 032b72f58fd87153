#include "mcs/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcs {

bool brute_is_minimal(const Seq& s, std::span<const Seq> inputs) {
  for (const Seq& x : inputs) {
    if (!is_subsequence(x, s)) return false;
  }
  for (int i = 1; i <= s.size(); ++i) {
    const Seq shorter = s.substring(1, i - 1).concat(s.substring(i + 1, s.size()));
    bool still_common = true;
    for (const Seq& x : inputs) {
      if (!is_subsequence(x, shorter)) {
        still_common = false;
        break;
      }
    }
    if (still_common) return false;
  }
  return true;
}

std::set<std::string> brute_mcs_set(const Seq& a, const Seq& b, int max_len,
                                    long candidate_cap) {
  std::string alphabet(a.str());
  alphabet += b.str();
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()),
                 alphabet.end());
  const long sigma = static_cast<long>(alphabet.size());
  const int min_len = std::max(a.size(), b.size());

  long candidates = 0;
  for (int len = min_len; len <= max_len; ++len) {
    long count = 1;
    for (int i = 0; i < len; ++i) {
      count *= sigma;
      if (count > candidate_cap) break;
    }
    candidates += count;
    if (candidates > candidate_cap) {
      throw std::runtime_error(
          "brute_mcs_set: candidate space exceeds the configured cap");
    }
  }

  const Seq pair[2] = {a, b};
  std::set<std::string> out;
  std::string cand;
  for (int len = min_len; len <= max_len; ++len) {
    if (len == 0) {
      if (brute_is_minimal(Seq{}, pair)) out.insert("");
      continue;
    }
    if (sigma == 0) continue;
    std::vector<int> odo(static_cast<std::size_t>(len), 0);
    cand.assign(static_cast<std::size_t>(len), alphabet[0]);
    while (true) {
      Seq c{cand};
      if (is_subsequence(a, c) && is_subsequence(b, c) &&
          brute_is_minimal(c, pair)) {
        out.insert(cand);
      }
      int pos = len - 1;
      while (pos >= 0 && odo[static_cast<std::size_t>(pos)] ==
                             static_cast<int>(sigma) - 1) {
        odo[static_cast<std::size_t>(pos)] = 0;
        cand[static_cast<std::size_t>(pos)] = alphabet[0];
        --pos;
      }
      if (pos < 0) break;
      ++odo[static_cast<std::size_t>(pos)];
      cand[static_cast<std::size_t>(pos)] =
          alphabet[static_cast<std::size_t>(odo[static_cast<std::size_t>(pos)])];
    }
  }
  return out;
}

}  // namespace mcs
