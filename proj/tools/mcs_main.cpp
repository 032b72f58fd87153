#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <span>
#include <string>
#include <vector>

#include "mcs/enumgraph.hpp"
#include "mcs/enumpaths.hpp"
#include "mcs/minimality.hpp"
#include "mcs/reduce2.hpp"
#include "mcs/reducek.hpp"

namespace {

std::vector<mcs::Seq> to_seqs(const std::vector<std::string>& strs) {
  std::vector<mcs::Seq> out;
  out.reserve(strs.size());
  for (const std::string& s : strs) out.emplace_back(s);
  return out;
}

int run_reduce(const std::string& super, bool have_super,
               const std::vector<std::string>& strs) {
  std::vector<mcs::Seq> inputs = to_seqs(strs);
  mcs::Seq start;
  if (have_super) {
    start = mcs::Seq{super};
  } else {
    for (const mcs::Seq& x : inputs) start = start.concat(x);
  }
  try {
    mcs::Seq result = inputs.size() == 2
                          ? mcs::reduce_two(start, inputs[0], inputs[1])
                          : mcs::reduce_k(start, inputs);
    std::cout << result.str() << "\n";
  } catch (const mcs::NotASupersequenceError& e) {
    std::cerr << "error: not a common supersequence: input #"
              << e.input_index() + 1 << " (" << strs[e.input_index()]
              << ") is not contained\n";
    return 2;
  }
  return 0;
}

int run_enum(const std::string& a, const std::string& b, std::size_t limit,
             bool count_only, const std::string& dot_path) {
  mcs::Seq sa{a}, sb{b};
  if (!dot_path.empty()) {
    mcs::McsEnumerator e(sa, sb);
    std::ofstream out(dot_path);
    if (!out) {
      std::cerr << "error: cannot open " << dot_path << " for writing\n";
      return 2;
    }
    out << mcs::export_dot(e.graph());
    if (!out) {
      std::cerr << "error: failed writing " << dot_path << "\n";
      return 2;
    }
  }
  if (count_only) {
    std::cout << mcs::count_mcs(sa, sb) << "\n";
    return 0;
  }
  mcs::McsEnumerator e(sa, sb);
  std::string s;
  std::size_t produced = 0;
  while (produced < limit && e.next(s)) {
    std::cout << s << "\n";
    ++produced;
  }
  return 0;
}

int run_verify(const std::vector<std::string>& strs) {
  std::vector<mcs::Seq> seqs = to_seqs(strs);
  const mcs::Seq& s = seqs.front();
  std::span<const mcs::Seq> inputs(seqs.data() + 1, seqs.size() - 1);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (!mcs::is_subsequence(inputs[i], s)) {
      std::cout << "not a common supersequence: input #" << i + 1
                << " is not contained\n";
      return 1;
    }
  }
  if (auto idx = mcs::first_deletable_index(s, inputs)) {
    std::cout << "not minimal: index " << *idx << " is deletable\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal common supersequence toolkit"};
  app.require_subcommand(1);

  auto* reduce = app.add_subcommand(
      "reduce", "print one minimal common supersequence of the inputs");
  std::string super;
  std::vector<std::string> reduce_strs;
  auto* super_opt = reduce->add_option(
      "--super", super, "starting supersequence (default: concatenation)");
  reduce->add_option("strings", reduce_strs, "input strings")
      ->required()
      ->expected(1, -1);

  auto* enumerate = app.add_subcommand(
      "enum", "enumerate every minimal common supersequence of two strings");
  std::string enum_a, enum_b, dot_path;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  bool count_only = false;
  enumerate->add_option("A", enum_a, "first string")->required();
  enumerate->add_option("B", enum_b, "second string")->required();
  enumerate->add_option("--limit", limit, "emit at most N sequences");
  enumerate->add_flag("--count", count_only, "print only the exact count");
  enumerate->add_option("--dot", dot_path,
                        "write the enumeration graph (of the pair with its "
                        "common prefix removed) as DOT");

  auto* verify = app.add_subcommand(
      "verify", "exit 0 iff S is a minimal common supersequence of the rest");
  std::vector<std::string> verify_strs;
  std::string verify_file;
  auto* file_opt = verify->add_option(
      "--file", verify_file, "read strings from a file, one per line, S first");
  verify->add_option("strings", verify_strs, "S followed by the inputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (reduce->parsed()) {
    return run_reduce(super, super_opt->count() > 0, reduce_strs);
  }
  if (enumerate->parsed()) {
    return run_enum(enum_a, enum_b, limit, count_only, dot_path);
  }
  // verify
  if (file_opt->count() > 0) {
    std::ifstream in(verify_file);
    if (!in) {
      std::cerr << "error: cannot open " << verify_file << "\n";
      return 2;
    }
    verify_strs.clear();
    std::string line;
    while (std::getline(in, line)) verify_strs.push_back(line);
    if (in.bad()) {
      std::cerr << "error: failed reading " << verify_file << "\n";
      return 2;
    }
  }
  if (verify_strs.empty()) {
    std::cerr << "error: verify needs at least the candidate supersequence\n";
    return 2;
  }
  return run_verify(verify_strs);
}
