#include <doctest.h>

#include "mcs/oracle.hpp"
#include "testutil.hpp"

using mcs::Seq;

TEST_CASE("brute_is_minimal") {
  std::vector<Seq> in{Seq{"abab"}, Seq{"acbcb"}};
  CHECK(mcs::brute_is_minimal(Seq{"abacbcb"}, in));
  CHECK_FALSE(mcs::brute_is_minimal(Seq{"ababacbcb"}, in));
  CHECK(mcs::brute_is_minimal(Seq{""}, std::vector<Seq>{Seq{""}}));
  CHECK_FALSE(mcs::brute_is_minimal(Seq{"ab"}, std::vector<Seq>{Seq{"ba"}}));
}

TEST_CASE("brute_mcs_set tiny instances") {
  CHECK(mcs::brute_mcs_set(Seq{"a"}, Seq{"b"}, 2) ==
        std::set<std::string>{"ab", "ba"});
  CHECK(mcs::brute_mcs_set(Seq{"abc"}, Seq{"abc"}, 6) ==
        std::set<std::string>{"abc"});
  CHECK(mcs::brute_mcs_set(Seq{""}, Seq{""}, 0) ==
        std::set<std::string>{""});
  CHECK(mcs::brute_mcs_set(Seq{"xay"}, Seq{"zaw"}, 6).count("xayzaw") == 1);
}

TEST_CASE("brute_mcs_set members are incomparable common supersequences") {
  std::set<std::string> set = mcs::brute_mcs_set(Seq{"bacba"}, Seq{"abcca"}, 10);
  for (const std::string& s : set) {
    CHECK(mcs::is_subsequence(Seq{"bacba"}, Seq{s}));
    CHECK(mcs::is_subsequence(Seq{"abcca"}, Seq{s}));
    for (const std::string& t : set) {
      if (s == t) continue;
      CHECK_FALSE(mcs::is_subsequence(Seq{s}, Seq{t}));
    }
  }
}

TEST_CASE("brute_mcs_set enforces its search-space cap") {
  CHECK_THROWS_AS(mcs::brute_mcs_set(Seq{"abcab"}, Seq{"bcabc"}, 10, 100),
                  std::runtime_error);
}
