#include "taylor.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "scarftree/error.hpp"

namespace scarftree::detail {

TaylorLattice::TaylorLattice(const MonomialIdeal& ideal) : code(ideal.variables(), ideal.generators()) {
  const std::size_t n = code.generator_count();
  if (n > kMaxTaylorVertices) {
    throw Error(ErrorCode::TooManyVertices,
                "Taylor simplex on " + std::to_string(n) + " generators exceeds the supported 24");
  }
  const std::size_t subsets = std::size_t{1} << n;
  label_id.resize(subsets);
  std::unordered_map<LcmCode::Code, std::uint32_t, CodeHash> ids;
  auto intern = [&](LcmCode::Code c) {
    auto [it, fresh] = ids.emplace(c, static_cast<std::uint32_t>(labels.size()));
    if (fresh) {
      labels.push_back(std::move(c));
      multiplicity.push_back(0);
    }
    return it->second;
  };
  label_id[0] = intern(LcmCode::Code(code.width(), 0));
  LcmCode::Code scratch;
  for (std::size_t s = 1; s < subsets; ++s) {
    const int low = std::countr_zero(s);
    scratch = labels[label_id[s & (s - 1)]];
    code_lcm_into(scratch, code.generator(static_cast<std::size_t>(low)));
    label_id[s] = intern(scratch);
    ++multiplicity[label_id[s]];
  }
  for (std::uint32_t id = 0; id < labels.size(); ++id) {
    if (multiplicity[id] > 0) lattice.push_back(id);
  }
  std::sort(lattice.begin(), lattice.end(), [&](std::uint32_t a, std::uint32_t b) { return labels[a] < labels[b]; });
}

std::uint64_t TaylorLattice::divisor_mask(std::uint32_t id) const {
  std::uint64_t mask = 0;
  for (std::size_t v = 0; v < code.generator_count(); ++v) {
    if (code_divides(code.generator(v), labels[id])) mask |= std::uint64_t{1} << v;
  }
  return mask;
}

}  // namespace scarftree::detail
