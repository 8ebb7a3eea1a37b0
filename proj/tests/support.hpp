#pragma once

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "coxjsj/coxeter_system.hpp"
#include "coxjsj/io.hpp"

namespace coxjsj::testing {

inline CoxeterSystem fixture(const std::string& name) {
  std::ifstream in(std::string(COXJSJ_FIXTURE_DIR) + "/" + name);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_cox(buffer.str());
}

inline CoxeterSystem cox(const std::string& text) { return parse_cox(text); }

inline GeneratorSubset set(const CoxeterSystem& sys, std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return sys.subset(v);
}

inline std::vector<GeneratorSubset> family(const CoxeterSystem& sys,
                                           std::initializer_list<std::initializer_list<const char*>> sets) {
  std::vector<GeneratorSubset> out;
  for (auto s : sets) out.push_back(set(sys, s));
  sort_unique(out);
  return out;
}

inline std::vector<GeneratorSubset> sorted(std::vector<GeneratorSubset> v) {
  sort_unique(v);
  return v;
}

// n pairwise infinite generators named g0, g1, ...
inline CoxeterSystem free_product(std::size_t n) {
  std::string text = "gens";
  for (std::size_t i = 0; i < n; ++i) text += " g" + std::to_string(i);
  return parse_cox(text);
}

inline CoxeterSystem complete(std::size_t n, unsigned m = 3) {
  std::string text = "gens";
  for (std::size_t i = 0; i < n; ++i) text += " g" + std::to_string(i);
  text += "\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      text += "edge g" + std::to_string(i) + " g" + std::to_string(j) + " " + std::to_string(m) + "\n";
  return parse_cox(text);
}

inline CoxeterSystem square() { return parse_cox("gens a b c d\nedge a b 3\nedge b c 3\nedge c d 3\nedge d a 3\n"); }

}  // namespace coxjsj::testing
