#pragma once

// Elementary collapses and replayable collapsibility certificates.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "scarftree/complex.hpp"
#include "scarftree/error.hpp"

namespace scarftree {

struct CollapseStep {
  Face free_face;
  Face coface;

  friend bool operator==(const CollapseStep&, const CollapseStep&) = default;
};

struct CollapseSequence {
  std::vector<CollapseStep> steps;
  SimplicialComplex terminal;
};

// Raised by tree_collapse_certificate; keeps the evidence that the input is
// not a tree.
class NotATreeError : public Error {
 public:
  NotATreeError(const std::string& message, bool connected, ForestCheck forest)
      : Error(ErrorCode::NotATree, message), connected_(connected), forest_(std::move(forest)) {}

  bool connected() const noexcept { return connected_; }
  const ForestCheck& forest() const noexcept { return forest_; }

 private:
  bool connected_;
  ForestCheck forest_;
};

// All (free face, coface) pairs available on the complex, in lexicographic
// order of (free face, coface).
std::vector<CollapseStep> free_pairs(const SimplicialComplex& complex);

// Checks validity without applying; returns the violated condition.
std::optional<std::string> step_violation(const SimplicialComplex& complex, const CollapseStep& step);

// Throws InvalidStep naming the violated condition.
SimplicialComplex elementary_collapse(const SimplicialComplex& complex, const CollapseStep& step);

// Collapses the simplex on `face` down to the simplex on `target`, using the
// facet-by-facet schedule: remove the facet through F \ {x_1}, then clear each
// F \ {x_i} by walking its private faces in binary-counting order, then
// recurse on the last remaining facet. Throws BadFacePair unless
// target is a nonempty proper subset of face.
CollapseSequence collapse_simplex_to_face(const Face& face, const Face& target);

// Certificate that a simplicial tree collapses to a point: strip a leaf down
// to its intersection with the joint, drop the leaf, repeat. Throws
// NotATreeError.
CollapseSequence tree_collapse_certificate(const SimplicialComplex& complex);

struct GreedyCollapse {
  CollapseSequence sequence;
  // Same value as sequence.terminal; may be larger than a point.
  SimplicialComplex residual;
};

// Applies the first free pair until none remain. A non-point residual says
// nothing about collapsibility.
GreedyCollapse greedy_collapse(const SimplicialComplex& complex);

struct VerifyResult {
  bool ok = true;
  // Index of the first invalid step; equals steps.size() when every step was
  // valid but the result differs from the claimed terminal.
  std::optional<std::size_t> failing_step;
  std::string reason;
};

VerifyResult verify_sequence(const SimplicialComplex& complex, const CollapseSequence& sequence);

// Sum over dimensions of (-1)^i f_i.
long long euler_characteristic(const SimplicialComplex& complex);

bool is_single_point(const SimplicialComplex& complex);

}  // namespace scarftree
