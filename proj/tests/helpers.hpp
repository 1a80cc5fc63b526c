#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "artin/garside.hpp"
#include "artin/graph.hpp"

namespace testutil {

inline std::string fixtures_dir() {
  const char* env = std::getenv("ARTIN_FIXTURES");
  return env ? std::string(env) : std::string("tests/fixtures");
}

inline artin::DefiningGraph load_fixture(const std::string& name) {
  return artin::load_graph_file(fixtures_dir() + "/" + name + ".graph");
}

// freely reduced random signed word over the first `rank` vertices
inline std::vector<artin::SignedLetter> random_word(std::mt19937& rng, int rank, int len) {
  std::vector<artin::SignedLetter> w;
  std::uniform_int_distribution<int> pick(0, 2 * rank - 1);
  while (static_cast<int>(w.size()) < len) {
    int x = pick(rng);
    artin::SignedLetter cand{x / 2, (x % 2) ? 1 : -1};
    if (!w.empty() && w.back().first == cand.first && w.back().second == -cand.second) continue;
    w.push_back(cand);
  }
  return w;
}

inline std::vector<artin::SignedLetter> inverse_word(const std::vector<artin::SignedLetter>& w) {
  std::vector<artin::SignedLetter> r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->first, -it->second});
  return r;
}

inline std::vector<artin::SignedLetter> concat(std::vector<artin::SignedLetter> a,
                                               const std::vector<artin::SignedLetter>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace testutil
