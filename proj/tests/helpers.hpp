#pragma once

#include <string>
#include <vector>

#include "latcheck/core.hpp"

namespace testing_helpers {

inline latcheck::ElemSet elems(const latcheck::FiniteLattice& L, const std::vector<std::string>& labels) {
  latcheck::ElemSet out;
  for (const auto& s : labels) out.push_back(L.index_of(s));
  return out;
}

inline std::vector<std::string> labels_of(const latcheck::FiniteLattice& L, const latcheck::ElemSet& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(L.label(x));
  return out;
}

}  // namespace testing_helpers
