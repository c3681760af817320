#include "vartin/corpus.hpp"

#include <array>
#include <string>

#include "vartin/error.hpp"

namespace vartin {

namespace {

constexpr std::array<CorpusEntry, 8> kCorpus{{
    {"A1", R"({"vertices":["s"],"edges":[]})", true},
    {"A2", R"({"vertices":["s","t"],"edges":[{"u":"s","v":"t","m":3}]})", true},
    {"B2", R"({"vertices":["s","t"],"edges":[{"u":"s","v":"t","m":4}]})", true},
    {"I2(5)", R"({"vertices":["s","t"],"edges":[{"u":"s","v":"t","m":5}]})", true},
    {"I2(6)", R"({"vertices":["s","t"],"edges":[{"u":"s","v":"t","m":6}]})", true},
    {"A1xA1", R"({"vertices":["s","t"],"edges":[]})", true},
    {"A3", R"({"vertices":["s","t","u"],"edges":[{"u":"s","v":"t","m":3},{"u":"t","v":"u","m":3}]})",
     true},
    {"affine-A2",
     R"({"vertices":["s","t","u"],"edges":[{"u":"s","v":"t","m":3},{"u":"t","v":"u","m":3},{"u":"s","v":"u","m":3}]})",
     false},
}};

}  // namespace

std::span<const CorpusEntry> corpus() { return kCorpus; }

const CorpusEntry& corpus_entry(std::string_view name) {
  for (const auto& e : kCorpus)
    if (e.name == name) return e;
  throw InvalidInput("no corpus graph named '" + std::string(name) + "'");
}

CoxeterGraph corpus_graph(std::string_view name) {
  return parse_graph(corpus_entry(name).document);
}

}  // namespace vartin
