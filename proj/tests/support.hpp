#pragma once

#include <string>

#include "vartin/corpus.hpp"
#include "vartin/crystal.hpp"
#include "vartin/selftest.hpp"

namespace fixture {

struct Finite {
  vartin::CoxeterGraph graph;
  vartin::RootSystem roots;
  vartin::WGroupTable table;

  explicit Finite(std::string_view name)
      : graph(vartin::corpus_graph(name)),
        roots(vartin::enumerate_roots(graph)),
        table(vartin::enumerate_w(graph)) {}
};

inline const char* const kSpherical[] = {"A1", "A2", "B2", "I2(5)", "I2(6)", "A1xA1", "A3"};

inline std::string data(const std::string& rel) { return std::string(VARTIN_DATA_DIR) + "/" + rel; }

}  // namespace fixture
