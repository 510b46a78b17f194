#include "scarftree/complex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "scarftree/error.hpp"

namespace scarftree {
namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return c >= '0' && c <= '9'; });
}

void sort_vertices(std::vector<Vertex>& vs) { std::sort(vs.begin(), vs.end(), vertex_less); }

bool is_subset(VertexMask a, VertexMask b) { return (a & ~b) == 0; }

// Keeps the inclusion-maximal masks, deduplicated and sorted.
std::vector<VertexMask> maximal_masks(std::vector<VertexMask> masks) {
  std::sort(masks.begin(), masks.end(), [](VertexMask a, VertexMask b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<VertexMask> kept;
  for (VertexMask m : masks) {
    if (m == 0) continue;
    bool absorbed = std::any_of(kept.begin(), kept.end(), [m](VertexMask k) { return is_subset(m, k); });
    if (!absorbed) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end(), mask_less);
  return kept;
}

}  // namespace

bool vertex_less(const Vertex& a, const Vertex& b) {
  const bool da = all_digits(a);
  const bool db = all_digits(b);
  if (da != db) return da;
  if (da && a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

int popcount(VertexMask mask) { return std::popcount(mask); }

bool mask_less(VertexMask a, VertexMask b) {
  const int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  // Below the lowest differing bit both sets agree; whoever owns that bit has
  // the smaller next element.
  const VertexMask diff = a ^ b;
  return (a & diff & (~diff + 1)) != 0;
}

Face::Face(std::initializer_list<Vertex> vertices) : Face(std::vector<Vertex>(vertices)) {}

Face::Face(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  sort_vertices(vertices_);
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool Face::contains(const Vertex& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v, vertex_less);
}

bool Face::is_subset_of(const Face& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end(),
                       vertex_less);
}

std::string Face::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out += ',';
    out += vertices_[i];
  }
  return out + "}";
}

std::strong_ordering operator<=>(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.vertices_[i] == b.vertices_[i]) continue;
    return vertex_less(a.vertices_[i], b.vertices_[i]) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

SimplicialComplex SimplicialComplex::from_masks(std::vector<Vertex> vertices, const std::vector<VertexMask>& masks) {
  if (vertices.size() > kMaxVertices) {
    throw Error(ErrorCode::TooManyVertices, "at most 64 vertices are supported, got " + std::to_string(vertices.size()));
  }
  const std::vector<VertexMask> kept = maximal_masks(masks);
  VertexMask used = 0;
  for (VertexMask m : kept) used |= m;

  // Re-index the surviving vertices in natural order.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (used >> i & 1U) order.push_back(i);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vertex_less(vertices[a], vertices[b]); });
  std::vector<int> new_index(vertices.size(), -1);
  SimplicialComplex out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    new_index[order[k]] = static_cast<int>(k);
    out.vertices_.push_back(vertices[order[k]]);
  }
  for (std::size_t k = 1; k < out.vertices_.size(); ++k) {
    if (out.vertices_[k] == out.vertices_[k - 1]) {
      throw Error(ErrorCode::InvalidVertexName, "duplicate vertex name '" + out.vertices_[k] + "'");
    }
  }
  for (VertexMask m : kept) {
    VertexMask remapped = 0;
    for (VertexMask rest = m; rest; rest &= rest - 1) {
      remapped |= VertexMask{1} << new_index[std::countr_zero(rest)];
    }
    out.facets_.push_back(remapped);
  }
  std::sort(out.facets_.begin(), out.facets_.end(), mask_less);
  return out;
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  out.reserve(facets_.size());
  for (VertexMask m : facets_) out.push_back(face_of(m));
  return out;
}

VertexMask SimplicialComplex::all_vertices_mask() const noexcept {
  return vertices_.size() == 64 ? ~VertexMask{0} : (VertexMask{1} << vertices_.size()) - 1;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Vertex& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v, vertex_less);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

VertexMask SimplicialComplex::mask_of(const Face& face) const {
  VertexMask mask = 0;
  for (const Vertex& v : face.vertices()) {
    auto idx = index_of(v);
    if (!idx) throw Error(ErrorCode::UnknownVertex, "vertex '" + v + "' is not in the complex");
    mask |= VertexMask{1} << *idx;
  }
  return mask;
}

Face SimplicialComplex::face_of(VertexMask mask) const {
  std::vector<Vertex> vs;
  for (VertexMask rest = mask; rest; rest &= rest - 1) vs.push_back(vertices_[std::countr_zero(rest)]);
  return Face(std::move(vs));
}

bool SimplicialComplex::has_face_mask(VertexMask mask) const {
  return std::any_of(facets_.begin(), facets_.end(), [mask](VertexMask f) { return is_subset(mask, f); });
}

bool SimplicialComplex::has_face(const Face& face) const {
  for (const Vertex& v : face.vertices()) {
    if (!index_of(v)) return false;
  }
  if (face.empty()) return !empty();
  return has_face_mask(mask_of(face));
}

std::optional<std::size_t> SimplicialComplex::facet_index(const Face& face) const {
  for (const Vertex& v : face.vertices()) {
    if (!index_of(v)) return std::nullopt;
  }
  const VertexMask m = mask_of(face);
  auto it = std::find(facets_.begin(), facets_.end(), m);
  if (it == facets_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - facets_.begin());
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (VertexMask m : facets_) d = std::max(d, popcount(m) - 1);
  return d;
}

std::string SimplicialComplex::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (i) out += ',';
    out += face_of(facets_[i]).to_string();
  }
  return out + ">";
}

SimplicialComplex new_complex(const std::vector<std::vector<Vertex>>& candidate_facets) {
  std::vector<Face> faces;
  faces.reserve(candidate_facets.size());
  for (const auto& c : candidate_facets) faces.emplace_back(c);
  return new_complex(faces);
}

SimplicialComplex new_complex(const std::vector<Face>& candidate_facets) {
  if (candidate_facets.empty()) throw Error(ErrorCode::EmptyInput, "a complex needs at least one facet");
  std::vector<Vertex> names;
  for (const Face& f : candidate_facets) {
    if (f.empty()) throw Error(ErrorCode::EmptyFace, "candidate facets must be nonempty");
    names.insert(names.end(), f.vertices().begin(), f.vertices().end());
  }
  sort_vertices(names);
  names.erase(std::unique(names.begin(), names.end()), names.end());
  if (names.size() > kMaxVertices) {
    throw Error(ErrorCode::TooManyVertices, "at most 64 vertices are supported, got " + std::to_string(names.size()));
  }
  std::vector<VertexMask> masks;
  for (const Face& f : candidate_facets) {
    VertexMask m = 0;
    for (const Vertex& v : f.vertices()) {
      auto it = std::lower_bound(names.begin(), names.end(), v, vertex_less);
      m |= VertexMask{1} << (it - names.begin());
    }
    masks.push_back(m);
  }
  return SimplicialComplex::from_masks(std::move(names), masks);
}

std::vector<VertexMask> face_masks(const SimplicialComplex& complex, bool include_empty) {
  std::unordered_set<VertexMask> seen;
  for (VertexMask facet : complex.facet_masks()) {
    for (VertexMask sub = facet; sub; sub = (sub - 1) & facet) seen.insert(sub);
  }
  std::vector<VertexMask> out(seen.begin(), seen.end());
  if (include_empty && !complex.empty()) out.push_back(0);
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

std::vector<Face> faces(const SimplicialComplex& complex, bool include_empty) {
  std::vector<Face> out;
  for (VertexMask m : face_masks(complex, include_empty)) out.push_back(complex.face_of(m));
  return out;
}

FVector f_vector(const SimplicialComplex& complex) {
  FVector counts;
  for (VertexMask m : face_masks(complex)) {
    const auto dim = static_cast<std::size_t>(popcount(m) - 1);
    if (counts.size() <= dim) counts.resize(dim + 1, 0);
    ++counts[dim];
  }
  return counts;
}

SimplicialComplex remove_facet(const SimplicialComplex& complex, const Face& facet) {
  auto idx = complex.facet_index(facet);
  if (!idx) throw Error(ErrorCode::NotAFacet, facet.to_string() + " is not a facet of " + complex.to_string());
  std::vector<VertexMask> rest = complex.facet_masks();
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(*idx));
  return SimplicialComplex::from_masks(complex.vertices(), rest);
}

SimplicialComplex induced_mask(const SimplicialComplex& complex, VertexMask subset) {
  std::vector<VertexMask> cut;
  cut.reserve(complex.facet_count());
  for (VertexMask f : complex.facet_masks()) cut.push_back(f & subset);
  return SimplicialComplex::from_masks(complex.vertices(), cut);
}

SimplicialComplex induced(const SimplicialComplex& complex, const std::vector<Vertex>& subset) {
  VertexMask mask = 0;
  for (const Vertex& v : subset) {
    if (auto idx = complex.index_of(v)) mask |= VertexMask{1} << *idx;
  }
  return induced_mask(complex, mask);
}

namespace {

// Leaf test restricted to the facets selected by `members` (a bitmask over
// facet indices). Returns the joint index, or -1 if the facet is the only
// member, or nullopt if it is not a leaf.
std::optional<int> leaf_joint(const std::vector<VertexMask>& facets, std::uint64_t members, std::size_t f) {
  VertexMask shared = 0;
  for (std::uint64_t rest = members & ~(std::uint64_t{1} << f); rest; rest &= rest - 1) {
    shared |= facets[f] & facets[std::countr_zero(rest)];
  }
  if ((members & ~(std::uint64_t{1} << f)) == 0) return -1;
  for (std::uint64_t rest = members & ~(std::uint64_t{1} << f); rest; rest &= rest - 1) {
    const int g = std::countr_zero(rest);
    if (is_subset(shared, facets[g])) return g;
  }
  return std::nullopt;
}

bool has_leaf(const std::vector<VertexMask>& facets, std::uint64_t members) {
  for (std::uint64_t rest = members; rest; rest &= rest - 1) {
    if (leaf_joint(facets, members, std::countr_zero(rest))) return true;
  }
  return false;
}

}  // namespace

LeafCheck is_leaf(const SimplicialComplex& complex, const Face& facet) {
  auto idx = complex.facet_index(facet);
  if (!idx) throw Error(ErrorCode::NotAFacet, facet.to_string() + " is not a facet of " + complex.to_string());
  const auto& facets = complex.facet_masks();
  const std::uint64_t all = facets.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << facets.size()) - 1;
  auto joint = leaf_joint(facets, all, *idx);
  LeafCheck out;
  out.is_leaf = joint.has_value();
  if (joint && *joint >= 0) out.joint = complex.face_of(facets[static_cast<std::size_t>(*joint)]);
  return out;
}

Face free_vertices(const SimplicialComplex& complex, const Face& facet) {
  auto idx = complex.facet_index(facet);
  if (!idx) throw Error(ErrorCode::NotAFacet, facet.to_string() + " is not a facet of " + complex.to_string());
  const auto& facets = complex.facet_masks();
  VertexMask free = facets[*idx];
  for (std::size_t h = 0; h < facets.size(); ++h) {
    if (h != *idx) free &= ~facets[h];
  }
  return complex.face_of(free);
}

ForestCheck is_forest(const SimplicialComplex& complex) {
  const auto& facets = complex.facet_masks();
  const std::size_t q = facets.size();
  if (q > 63) throw Error(ErrorCode::TooManyVertices, "forest check supports at most 63 facets");
  ForestCheck out;
  // A subcollection of size 1 always has a leaf; start at 2.
  for (std::size_t k = 2; k <= q; ++k) {
    // Gosper's hack: all q-bit masks with k bits set, in increasing order.
    std::uint64_t members = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << q;
    while (members < limit) {
      if (!has_leaf(facets, members)) {
        out.is_forest = false;
        std::vector<Face> witness;
        for (std::uint64_t rest = members; rest; rest &= rest - 1) {
          witness.push_back(complex.face_of(facets[std::countr_zero(rest)]));
        }
        out.witness = std::move(witness);
        return out;
      }
      const std::uint64_t low = members & (~members + 1);
      const std::uint64_t ripple = members + low;
      members = (((ripple ^ members) >> 2) / low) | ripple;
    }
  }
  return out;
}

std::size_t connected_components(const SimplicialComplex& complex) {
  const auto& facets = complex.facet_masks();
  std::vector<std::size_t> parent(facets.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // Facets sharing a vertex are in the same component of the 1-skeleton.
  std::size_t components = facets.size();
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t j = i + 1; j < facets.size(); ++j) {
      if ((facets[i] & facets[j]) == 0) continue;
      const std::size_t a = find(i), b = find(j);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components;
}

bool is_connected(const SimplicialComplex& complex) { return connected_components(complex) <= 1; }

bool is_tree(const SimplicialComplex& complex) { return is_connected(complex) && is_forest(complex).is_forest; }

}  // namespace scarftree
