#pragma once

// Labels of every subset of a generator list, deduplicated into ids.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "scarftree/monomial.hpp"

namespace scarftree::detail {

inline constexpr std::size_t kMaxTaylorVertices = 24;

struct TaylorLattice {
  explicit TaylorLattice(const MonomialIdeal& ideal);

  std::size_t generator_count() const noexcept { return code.generator_count(); }
  // Subsets of generators whose labels divide the label with this id.
  std::uint64_t divisor_mask(std::uint32_t id) const;

  LcmCode code;
  // label_id[S] for every subset mask S, the empty set included.
  std::vector<std::uint32_t> label_id;
  // Distinct label codes, indexed by id.
  std::vector<LcmCode::Code> labels;
  // Number of nonempty subsets carrying each id.
  std::vector<std::uint32_t> multiplicity;
  // Ids that occur on some nonempty subset, sorted lexicographically by code.
  std::vector<std::uint32_t> lattice;
};

}  // namespace scarftree::detail
