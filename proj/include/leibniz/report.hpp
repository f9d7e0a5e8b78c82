#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace leibniz {

/// One failed axiom instance with the basis indices that instantiate it.
struct Violation {
  std::string axiom;
  std::vector<std::size_t> indices;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string axiom, std::vector<std::size_t> indices) {
    violations.push_back({std::move(axiom), std::move(indices)});
  }
};

}  // namespace leibniz
