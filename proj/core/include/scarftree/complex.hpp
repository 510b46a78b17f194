#pragma once

// Finite simplicial complexes over named vertices, stored by their facets.
//
// A complex keeps its vertex names in natural order and encodes every face as
// a bitmask over that order, so at most 64 vertices are supported. Faces are
// only enumerated on demand.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace scarftree {

using Vertex = std::string;
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

// Total order on vertex names: all-digit names compare numerically and come
// first, everything else compares lexicographically.
bool vertex_less(const Vertex& a, const Vertex& b);

// Order on face masks: by size, then lexicographically by sorted members.
bool mask_less(VertexMask a, VertexMask b);

int popcount(VertexMask mask);

// A set of vertex names, kept sorted in vertex order.
class Face {
 public:
  Face() = default;
  Face(std::initializer_list<Vertex> vertices);
  explicit Face(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  // dim(empty face) = -1
  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }

  bool contains(const Vertex& v) const;
  bool is_subset_of(const Face& other) const;

  std::string to_string() const;

  friend bool operator==(const Face&, const Face&) = default;
  // Size first, then lexicographic in vertex order.
  friend std::strong_ordering operator<=>(const Face& a, const Face& b);

 private:
  std::vector<Vertex> vertices_;
};

using FVector = std::vector<std::size_t>;

class SimplicialComplex {
 public:
  // The empty (void) complex: no vertices, no faces.
  SimplicialComplex() = default;

  // Low-level constructor: `masks` index into `vertices`. Non-maximal masks
  // and the empty mask are dropped, vertices that occur in no facet are
  // removed and the remaining ones are put in natural order.
  static SimplicialComplex from_masks(std::vector<Vertex> vertices,
                                      const std::vector<VertexMask>& masks);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<VertexMask>& facet_masks() const noexcept { return facets_; }
  std::vector<Face> facets() const;

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t facet_count() const noexcept { return facets_.size(); }
  bool empty() const noexcept { return facets_.empty(); }
  VertexMask all_vertices_mask() const noexcept;

  std::optional<std::size_t> index_of(const Vertex& v) const;
  // Throws UnknownVertex for names outside the vertex set.
  VertexMask mask_of(const Face& face) const;
  Face face_of(VertexMask mask) const;

  bool has_face(const Face& face) const;
  bool has_face_mask(VertexMask mask) const;
  std::optional<std::size_t> facet_index(const Face& face) const;

  // Dimension of the largest facet; -1 for the empty complex.
  int dimension() const;

  std::string to_string() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<VertexMask> facets_;
};

// Throws EmptyInput for an empty list and EmptyFace for an empty candidate.
SimplicialComplex new_complex(const std::vector<std::vector<Vertex>>& candidate_facets);
SimplicialComplex new_complex(const std::vector<Face>& candidate_facets);

// All faces as masks over `complex.vertices()`, deduplicated, sorted by mask_less.
std::vector<VertexMask> face_masks(const SimplicialComplex& complex, bool include_empty = false);
std::vector<Face> faces(const SimplicialComplex& complex, bool include_empty = false);

FVector f_vector(const SimplicialComplex& complex);

SimplicialComplex remove_facet(const SimplicialComplex& complex, const Face& facet);

// Names outside the vertex set are ignored.
SimplicialComplex induced(const SimplicialComplex& complex, const std::vector<Vertex>& subset);
SimplicialComplex induced_mask(const SimplicialComplex& complex, VertexMask subset);

struct LeafCheck {
  bool is_leaf = false;
  std::optional<Face> joint;
};

LeafCheck is_leaf(const SimplicialComplex& complex, const Face& facet);

Face free_vertices(const SimplicialComplex& complex, const Face& facet);

struct ForestCheck {
  bool is_forest = true;
  // Facets of a smallest subcollection without a leaf.
  std::optional<std::vector<Face>> witness;
};

// Exhaustive over all nonempty subcollections, smallest first.
ForestCheck is_forest(const SimplicialComplex& complex);

bool is_connected(const SimplicialComplex& complex);

bool is_tree(const SimplicialComplex& complex);

// Number of connected components of the 1-skeleton (0 for the empty complex).
std::size_t connected_components(const SimplicialComplex& complex);

}  // namespace scarftree
