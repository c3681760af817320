#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "vartin/coxeter.hpp"

namespace vartin {

struct CorpusEntry {
  std::string_view name;
  std::string_view document;  // graph JSON
  bool spherical;
};

/// A1, A2, B2, I2(5), I2(6), A1xA1, A3, affine A2.
std::span<const CorpusEntry> corpus();
const CorpusEntry& corpus_entry(std::string_view name);
CoxeterGraph corpus_graph(std::string_view name);

}  // namespace vartin
