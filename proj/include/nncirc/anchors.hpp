#pragma once

#include "nncirc/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nncirc {

// A candidate NN representation: one rational anchor per row, with a
// binary label and (for the symmetric constructions) a type tag.
struct AnchorSet {
  RatMatrix anchors;  // rows = anchors, cols = n
  std::vector<int> labels;
  std::optional<std::vector<int>> types;

  // construction metadata
  std::string construction;
  Rat d = 0;
  RatVec c;

  size_t size() const { return anchors.rows(); }
  size_t n() const { return anchors.cols(); }
};

}  // namespace nncirc
