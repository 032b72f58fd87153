#include <doctest.h>

#include <random>
#include <vector>

#include "mcs/minimality.hpp"
#include "mcs/oracle.hpp"
#include "testutil.hpp"

using mcs::Seq;

namespace {

// Essential indices by definition: deleting the index breaks containment.
std::vector<int> essential_by_deletion(const std::string& s,
                                       const std::string& x) {
  std::vector<int> out;
  for (int i = 1; i <= static_cast<int>(s.size()); ++i) {
    if (!mcs::is_subsequence(Seq{x}, Seq{testutil::delete_at(s, i)})) {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("essential_indices on the worked example") {
  std::vector<int> ess = mcs::essential_indices(Seq{"abcbacb"}, Seq{"abab"});
  CHECK(ess == std::vector<int>{1, 5, 7});
  CHECK(std::count(ess.begin(), ess.end(), 5) == 1);
  CHECK(ess == essential_by_deletion("abcbacb", "abab"));
}

TEST_CASE("essential_indices of an exact copy is every index") {
  Seq x{"abca"};
  std::vector<int> ess = mcs::essential_indices(x, x);
  CHECK(ess == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("essential_indices equals the deletion oracle on random instances") {
  std::mt19937 rng(23);
  int checked = 0;
  while (checked < 150) {
    std::string x = testutil::random_string(rng, 1 + (checked % 5), 3);
    std::string s = testutil::noisy_supersequence(rng, x, "", checked % 6, 3);
    if (!mcs::is_subsequence(Seq{x}, Seq{s})) continue;
    ++checked;
    CHECK(mcs::essential_indices(Seq{s}, Seq{x}) ==
          essential_by_deletion(s, x));
  }
}

TEST_CASE("is_essential_for_pair") {
  CHECK(mcs::is_essential_for_pair(Seq{"abcbacb"}, 5, Seq{"abab"}, 3));
  // Deleting index 1 of abcbacb leaves bcbacb, which no longer contains
  // abab, while bab still fits.
  CHECK(mcs::is_essential_for_pair(Seq{"abcbacb"}, 1, Seq{"abab"}, 1));
  CHECK_FALSE(mcs::is_essential_for_pair(Seq{"aa"}, 1, Seq{"a"}, 1));
  CHECK_THROWS_AS(mcs::is_essential_for_pair(Seq{"aa"}, 3, Seq{"a"}, 1),
                  std::out_of_range);
  CHECK_THROWS_AS(mcs::is_essential_for_pair(Seq{"aa"}, 1, Seq{"a"}, 2),
                  std::out_of_range);
}

TEST_CASE("is_essential_for_pair against the deletion formulation") {
  // The embedding coincidence picks one canonical j per essential index;
  // the deletion wording can hold for several j when symbols repeat (take
  // S = aa, A = aa, i = 1, j = 2). So: pairwise it implies the deletion
  // conditions, and quantified over j the two notions coincide.
  std::mt19937 rng(29);
  int checked = 0;
  while (checked < 40) {
    std::string x = testutil::random_string(rng, 1 + (checked % 4), 2);
    std::string s = testutil::noisy_supersequence(rng, x, "", 2, 2);
    if (!mcs::is_subsequence(Seq{x}, Seq{s})) continue;
    ++checked;
    for (int i = 1; i <= static_cast<int>(s.size()); ++i) {
      const std::string s_del = testutil::delete_at(s, i);
      bool any_pair = false;
      for (int j = 1; j <= static_cast<int>(x.size()); ++j) {
        if (!mcs::is_essential_for_pair(Seq{s}, i, Seq{x}, j)) continue;
        any_pair = true;
        const std::string x_del = testutil::delete_at(x, j);
        CHECK(mcs::is_subsequence(Seq{x_del}, Seq{s_del}));
        CHECK_FALSE(mcs::is_subsequence(Seq{x}, Seq{s_del}));
      }
      CHECK(any_pair == !mcs::is_subsequence(Seq{x}, Seq{s_del}));
    }
  }
}

TEST_CASE("verify_minimal basics") {
  std::vector<Seq> in{Seq{"abab"}, Seq{"acbcb"}};
  CHECK(mcs::verify_minimal(Seq{"abacbcb"}, in));
  CHECK_FALSE(mcs::verify_minimal(Seq{"ababacbcb"}, in));
  std::vector<Seq> single{Seq{"ab"}};
  CHECK(mcs::verify_minimal(Seq{"ab"}, single));
  // an input that is not contained makes the predicate false, not an error
  std::vector<Seq> bad{Seq{"zz"}};
  CHECK_FALSE(mcs::verify_minimal(Seq{"ab"}, bad));
  CHECK(mcs::verify_minimal(Seq{""}, std::vector<Seq>{Seq{""}}));
}

TEST_CASE("verify_minimal agrees with brute_is_minimal") {
  std::mt19937 rng(31);
  for (int iter = 0; iter < 300; ++iter) {
    const int k = 1 + iter % 3;
    std::vector<Seq> inputs;
    std::string merged;
    for (int i = 0; i < k; ++i) {
      std::string x = testutil::random_string(rng, 1 + (iter + i) % 4, 2);
      merged = testutil::random_interleaving(rng, merged, x);
      inputs.emplace_back(x);
    }
    std::string s = testutil::noisy_supersequence(rng, merged, "", iter % 4, 2);
    if (s.size() > 15) continue;
    CHECK(mcs::verify_minimal(Seq{s}, inputs) ==
          mcs::brute_is_minimal(Seq{s}, inputs));
  }
}

TEST_CASE("essential indices survive deleting a non-essential index") {
  std::mt19937 rng(37);
  int checked = 0;
  while (checked < 80) {
    std::string a = testutil::random_string(rng, 2 + (checked % 4), 2);
    std::string b = testutil::random_string(rng, 2 + (checked % 3), 2);
    std::string s = testutil::noisy_supersequence(rng, a, b, 3, 2);
    std::vector<Seq> inputs{Seq{a}, Seq{b}};
    if (mcs::verify_minimal(Seq{s}, inputs)) continue;
    auto deletable = mcs::first_deletable_index(Seq{s}, inputs);
    REQUIRE(deletable.has_value());
    ++checked;
    const int j = *deletable;
    const std::string s_del = testutil::delete_at(s, j);
    for (const Seq& x : inputs) {
      for (int i : mcs::essential_indices(Seq{s}, x)) {
        if (i == j) continue;
        const int shifted = i > j ? i - 1 : i;
        std::vector<int> after = mcs::essential_indices(Seq{s_del}, x);
        CHECK(std::count(after.begin(), after.end(), shifted) == 1);
      }
    }
  }
}

TEST_CASE("first_deletable_index reports the earliest removable position") {
  std::vector<Seq> in{Seq{"abab"}, Seq{"acbcb"}};
  auto idx = mcs::first_deletable_index(Seq{"ababacbcb"}, in);
  REQUIRE(idx.has_value());
  CHECK(*idx == 1);
  CHECK_FALSE(mcs::first_deletable_index(Seq{"abacbcb"}, in).has_value());
}
