#include "scarftree/collapse.hpp"

#include <algorithm>
#include <bit>

namespace scarftree {
namespace {

struct MaskPair {
  VertexMask free_face;
  VertexMask coface;
};

std::vector<MaskPair> free_mask_pairs(const SimplicialComplex& complex) {
  const auto& facets = complex.facet_masks();
  std::vector<MaskPair> out;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const VertexMask f = facets[i];
    for (VertexMask rest = f; rest; rest &= rest - 1) {
      const VertexMask candidate = f & ~(rest & (~rest + 1));
      if (candidate == 0) continue;
      bool shared = false;
      for (std::size_t j = 0; j < facets.size() && !shared; ++j) {
        shared = j != i && (candidate & ~facets[j]) == 0;
      }
      if (!shared) out.push_back({candidate, f});
    }
  }
  std::sort(out.begin(), out.end(), [](const MaskPair& a, const MaskPair& b) {
    if (a.free_face != b.free_face) return mask_less(a.free_face, b.free_face);
    return mask_less(a.coface, b.coface);
  });
  return out;
}

Face without(const std::vector<Vertex>& ordered, const std::vector<std::size_t>& dropped_positions) {
  std::vector<Vertex> kept;
  for (std::size_t k = 0; k < ordered.size(); ++k) {
    if (std::find(dropped_positions.begin(), dropped_positions.end(), k) == dropped_positions.end()) {
      kept.push_back(ordered[k]);
    }
  }
  return Face(std::move(kept));
}

// Steps taking the full simplex on `face` to the simplex on `target`, which
// is assumed nonempty and proper.
void append_simplex_schedule(Face face, const Face& target, std::vector<CollapseStep>& steps) {
  while (face != target) {
    // x_n is the first vertex missing from the target, the rest keep their order.
    std::vector<Vertex> order;
    Vertex last;
    bool have_last = false;
    for (const Vertex& v : face.vertices()) {
      if (!have_last && !target.contains(v)) {
        last = v;
        have_last = true;
      } else {
        order.push_back(v);
      }
    }
    order.push_back(last);
    const std::size_t n = order.size();

    // Positions are 0-based here: x_1 is order[0], F_S drops the positions in S.
    steps.push_back({without(order, {0}), face});
    for (std::size_t i = 2; i <= n - 1; ++i) {
      const std::size_t extra = i - 2;  // elements {2, ..., i-1}
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << extra); ++bits) {
        std::vector<std::size_t> dropped{i - 1};
        for (std::size_t b = 0; b < extra; ++b) {
          if (bits >> b & 1U) dropped.push_back(b + 1);
        }
        Face coface = without(order, dropped);
        dropped.push_back(0);
        steps.push_back({without(order, dropped), std::move(coface)});
      }
    }
    face = without(order, {n - 1});
  }
}

}  // namespace

std::vector<CollapseStep> free_pairs(const SimplicialComplex& complex) {
  std::vector<CollapseStep> out;
  for (const MaskPair& p : free_mask_pairs(complex)) {
    out.push_back({complex.face_of(p.free_face), complex.face_of(p.coface)});
  }
  return out;
}

std::optional<std::string> step_violation(const SimplicialComplex& complex, const CollapseStep& step) {
  const auto coface_index = complex.facet_index(step.coface);
  if (!coface_index) return "coface " + step.coface.to_string() + " is not a facet";
  if (step.free_face.empty()) return "free face is empty";
  if (step.free_face.size() + 1 != step.coface.size() || !step.free_face.is_subset_of(step.coface)) {
    return "free face " + step.free_face.to_string() + " is not a maximal proper face of " + step.coface.to_string();
  }
  const VertexMask free_mask = complex.mask_of(step.free_face);
  const auto& facets = complex.facet_masks();
  for (std::size_t j = 0; j < facets.size(); ++j) {
    if (j != *coface_index && (free_mask & ~facets[j]) == 0) {
      return "free face " + step.free_face.to_string() + " also lies in facet " + complex.face_of(facets[j]).to_string();
    }
  }
  return std::nullopt;
}

SimplicialComplex elementary_collapse(const SimplicialComplex& complex, const CollapseStep& step) {
  if (auto why = step_violation(complex, step)) throw Error(ErrorCode::InvalidStep, *why);
  const VertexMask coface = complex.mask_of(step.coface);
  const VertexMask free_face = complex.mask_of(step.free_face);
  std::vector<VertexMask> masks;
  for (VertexMask f : complex.facet_masks()) {
    if (f != coface) masks.push_back(f);
  }
  // The other maximal proper faces of the coface survive.
  for (VertexMask rest = free_face; rest; rest &= rest - 1) {
    masks.push_back(coface & ~(rest & (~rest + 1)));
  }
  return SimplicialComplex::from_masks(complex.vertices(), masks);
}

CollapseSequence collapse_simplex_to_face(const Face& face, const Face& target) {
  if (target.empty() || !target.is_subset_of(face) || target == face) {
    throw Error(ErrorCode::BadFacePair,
                target.to_string() + " must be a nonempty proper face of " + face.to_string());
  }
  CollapseSequence out;
  append_simplex_schedule(face, target, out.steps);
  out.terminal = new_complex(std::vector<Face>{target});
  return out;
}

CollapseSequence tree_collapse_certificate(const SimplicialComplex& complex) {
  const bool connected = is_connected(complex);
  ForestCheck forest = is_forest(complex);
  if (!connected || !forest.is_forest || complex.empty()) {
    throw NotATreeError(complex.to_string() + (connected ? " has a subcollection without a leaf" : " is not connected"),
                        connected, std::move(forest));
  }
  CollapseSequence out;
  SimplicialComplex current = complex;
  while (current.facet_count() > 1) {
    bool stripped = false;
    for (const Face& facet : current.facets()) {
      const LeafCheck leaf = is_leaf(current, facet);
      if (!leaf.is_leaf || !leaf.joint) continue;
      std::vector<Vertex> shared;
      for (const Vertex& v : facet.vertices()) {
        if (leaf.joint->contains(v)) shared.push_back(v);
      }
      append_simplex_schedule(facet, Face(std::move(shared)), out.steps);
      current = remove_facet(current, facet);
      stripped = true;
      break;
    }
    if (!stripped) throw Error(ErrorCode::NotATree, current.to_string() + " has no leaf");
  }
  const Face last = current.facets().front();
  if (last.size() > 1) append_simplex_schedule(last, Face{last.vertices().front()}, out.steps);
  out.terminal = new_complex(std::vector<Face>{Face{last.vertices().front()}});
  return out;
}

GreedyCollapse greedy_collapse(const SimplicialComplex& complex) {
  GreedyCollapse out;
  SimplicialComplex current = complex;
  for (;;) {
    const auto pairs = free_mask_pairs(current);
    if (pairs.empty()) break;
    const CollapseStep step{current.face_of(pairs.front().free_face), current.face_of(pairs.front().coface)};
    current = elementary_collapse(current, step);
    out.sequence.steps.push_back(step);
  }
  out.sequence.terminal = current;
  out.residual = std::move(current);
  return out;
}

VerifyResult verify_sequence(const SimplicialComplex& complex, const CollapseSequence& sequence) {
  SimplicialComplex current = complex;
  for (std::size_t i = 0; i < sequence.steps.size(); ++i) {
    if (auto why = step_violation(current, sequence.steps[i])) return {false, i, *why};
    current = elementary_collapse(current, sequence.steps[i]);
  }
  if (current != sequence.terminal) {
    return {false, sequence.steps.size(),
            "replay ends at " + current.to_string() + ", certificate claims " + sequence.terminal.to_string()};
  }
  return {};
}

long long euler_characteristic(const SimplicialComplex& complex) {
  long long chi = 0;
  const FVector f = f_vector(complex);
  for (std::size_t i = 0; i < f.size(); ++i) {
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(f[i]);
  }
  return chi;
}

bool is_single_point(const SimplicialComplex& complex) {
  return complex.vertex_count() == 1 && complex.facet_count() == 1;
}

}  // namespace scarftree
