#include <doctest.h>

#include <random>

#include "mcs/minimality.hpp"
#include "mcs/oracle.hpp"
#include "mcs/reduce2.hpp"
#include "testutil.hpp"

using mcs::Seq;

TEST_CASE("build_right_embedding_image") {
  CHECK(mcs::build_right_embedding_image(Seq{"ababacbcb"}, Seq{"abab"}) ==
        std::vector<int>{3, 4, 5, 9});
  CHECK(mcs::build_right_embedding_image(Seq{"ababacbcb"}, Seq{"acbcb"}) ==
        std::vector<int>{5, 6, 7, 8, 9});
  CHECK(mcs::build_right_embedding_image(Seq{"abc"}, Seq{""}).empty());
  CHECK_THROWS_AS(mcs::build_right_embedding_image(Seq{"ab"}, Seq{"ba"}),
                  mcs::NotASubsequenceError);
}

TEST_CASE("reduce_two on the worked example") {
  Seq s{"ababacbcb"}, a{"abab"}, b{"acbcb"};
  CHECK(mcs::reduce_two(s, a, b).str() == "abacbcb");
  std::vector<char> marks = mcs::reduce_two_marks(s, a, b);
  CHECK(marks[1]);
  CHECK(marks[2]);
  for (int i = 3; i <= 9; ++i) CHECK_FALSE(marks[static_cast<std::size_t>(i)]);
}

TEST_CASE("reduce_two trivia") {
  Seq a{"abca"};
  CHECK(mcs::reduce_two(a, a, Seq{""}).str() == "abca");
  CHECK(mcs::reduce_two(Seq{""}, Seq{""}, Seq{""}).str() == "");
  CHECK_THROWS_AS(mcs::reduce_two(Seq{"ab"}, Seq{"ab"}, Seq{"ba"}),
                  mcs::NotASupersequenceError);
  try {
    mcs::reduce_two(Seq{"ab"}, Seq{"ab"}, Seq{"ba"});
  } catch (const mcs::NotASupersequenceError& e) {
    CHECK(e.input_index() == 1);
  }
}

TEST_CASE("reduce_two output is minimal on random instances") {
  std::mt19937 rng(41);
  for (int iter = 0; iter < 500; ++iter) {
    const int sigma = 2 + iter % 3;
    std::string a = testutil::random_string(rng, iter % 12, sigma);
    std::string b = testutil::random_string(rng, (iter * 7) % 12, sigma);
    std::string s = testutil::noisy_supersequence(rng, a, b, iter % 6, sigma);
    Seq out = mcs::reduce_two(Seq{s}, Seq{a}, Seq{b});
    std::vector<Seq> inputs{Seq{a}, Seq{b}};
    CHECK(mcs::is_subsequence(out, Seq{s}));
    CHECK(mcs::verify_minimal(out, inputs));
    CHECK(mcs::brute_is_minimal(out, inputs));
    // idempotent
    CHECK(mcs::reduce_two(out, Seq{a}, Seq{b}) == out);
    // surviving indices are exactly the essential ones of the output
    std::vector<char> covered(static_cast<std::size_t>(out.size()) + 1, 0);
    for (const Seq& x : inputs) {
      for (int i : mcs::essential_indices(out, x)) {
        covered[static_cast<std::size_t>(i)] = 1;
      }
    }
    for (int i = 1; i <= out.size(); ++i) {
      CHECK(covered[static_cast<std::size_t>(i)]);
    }
  }
}

TEST_CASE("sweep keeps a common supersequence alive at every position") {
  std::mt19937 rng(43);
  for (int iter = 0; iter < 60; ++iter) {
    std::string a = testutil::random_string(rng, 1 + iter % 5, 2);
    std::string b = testutil::random_string(rng, 1 + (iter * 3) % 5, 2);
    std::string s = testutil::noisy_supersequence(rng, a, b, iter % 4, 2);
    std::vector<char> del = mcs::reduce_two_marks(Seq{s}, Seq{a}, Seq{b});
    // Deletions happen in sweep order, so the state at the start of
    // iteration `pos` keeps indices >= pos plus every undeleted earlier one.
    for (int pos = 1; pos <= static_cast<int>(s.size()) + 1; ++pos) {
      std::string survivor;
      for (int i = 1; i <= static_cast<int>(s.size()); ++i) {
        if (i >= pos || !del[static_cast<std::size_t>(i)]) {
          survivor.push_back(s[static_cast<std::size_t>(i) - 1]);
        }
      }
      CHECK(mcs::is_subsequence(Seq{a}, Seq{survivor}));
      CHECK(mcs::is_subsequence(Seq{b}, Seq{survivor}));
    }
  }
}

TEST_CASE("mcs_two") {
  CHECK(mcs::mcs_two(Seq{"abab"}, Seq{"acbcb"}).str() == "abacbcb");
  CHECK(mcs::mcs_two(Seq{""}, Seq{"bab"}).str() == "bab");
  CHECK(mcs::mcs_two(Seq{"xay"}, Seq{"zaw"}).str() == "xayzaw");
  CHECK(mcs::mcs_two(Seq{"a"}, Seq{"a"}).str() == "a");
}
