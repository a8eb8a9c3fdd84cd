// SPDX-License-Identifier: Apache-2.0

#include "glq/superalgebra.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace glq {

namespace {

const std::vector<std::pair<std::string, std::function<Algebra()>>>& makers() {
  static const std::vector<std::pair<std::string, std::function<Algebra()>>> table = {
      {"dual", [] { return derive_inverse_rules(dual_algebra()); }},
      {"gl", [] { return gl_algebra(); }},
      {"plane", [] { return superplane(); }},
      {"dualplane", [] { return dual_superplane(); }},
      {"dualxdual",
       [] {
         Algebra d = derive_inverse_rules(dual_algebra());
         return tensor(d, renamed(d, "2"));
       }},
      {"glxplane", [] { return tensor(gl_algebra(), superplane()); }},
      {"glxdualplane", [] { return tensor(gl_algebra(), dual_superplane()); }},
      {"dualxplane", [] { return tensor(derive_inverse_rules(dual_algebra()), superplane()); }},
      {"dualxdualplane",
       [] { return tensor(derive_inverse_rules(dual_algebra()), dual_superplane()); }},
  };
  return table;
}

}  // namespace

Algebra builtin_algebra(std::string_view name) {
  static std::mutex mutex;
  static std::map<std::string, Algebra, std::less<>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  for (const auto& [n, make] : makers())
    if (n == name) return cache.emplace(n, make()).first->second;
  throw AlgebraError("unknown algebra '" + std::string(name) + "'");
}

std::vector<std::string> builtin_algebra_names() {
  std::vector<std::string> names;
  for (const auto& [n, make] : makers()) names.push_back(n);
  return names;
}

}  // namespace glq
