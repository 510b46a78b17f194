#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace oracle {

Facets from_complex(const scarftree::SimplicialComplex& complex) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < complex.vertices().size(); ++i) index[complex.vertices()[i]] = static_cast<int>(i);
  Facets out;
  for (const auto& f : complex.facets()) {
    VSet s;
    for (const auto& v : f.vertices()) s.insert(index.at(v));
    out.push_back(s);
  }
  return out;
}

Facets maximal(const Facets& candidates) {
  std::set<VSet> unique(candidates.begin(), candidates.end());
  Facets out;
  for (const VSet& a : unique) {
    bool dominated = false;
    for (const VSet& b : unique) {
      if (a != b && std::includes(b.begin(), b.end(), a.begin(), a.end())) dominated = true;
    }
    if (!dominated && !a.empty()) out.push_back(a);
  }
  return out;
}

std::set<VSet> all_faces(const Facets& facets, bool include_empty) {
  std::set<VSet> out;
  for (const VSet& f : facets) {
    const std::vector<int> v(f.begin(), f.end());
    for (unsigned bits = 1; bits < (1U << v.size()); ++bits) {
      VSet s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (bits >> i & 1U) s.insert(v[i]);
      }
      out.insert(s);
    }
  }
  if (include_empty && !facets.empty()) out.insert(VSet{});
  return out;
}

std::vector<std::size_t> f_vector(const Facets& facets) {
  std::vector<std::size_t> f;
  for (const VSet& s : all_faces(facets, false)) {
    if (f.size() < s.size()) f.resize(s.size(), 0);
    ++f[s.size() - 1];
  }
  return f;
}

bool is_leaf(const Facets& facets, std::size_t index) {
  if (facets.size() == 1) return true;
  const VSet& F = facets[index];
  VSet shared;
  for (std::size_t h = 0; h < facets.size(); ++h) {
    if (h == index) continue;
    for (int v : facets[h]) {
      if (F.count(v)) shared.insert(v);
    }
  }
  for (std::size_t g = 0; g < facets.size(); ++g) {
    if (g != index && std::includes(facets[g].begin(), facets[g].end(), shared.begin(), shared.end())) return true;
  }
  return false;
}

bool has_leaf(const Facets& facets) {
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (is_leaf(facets, i)) return true;
  }
  return facets.empty();
}

bool is_forest(const Facets& facets) {
  const std::size_t q = facets.size();
  for (unsigned long long bits = 1; bits < (1ULL << q); ++bits) {
    Facets sub;
    for (std::size_t i = 0; i < q; ++i) {
      if (bits >> i & 1ULL) sub.push_back(facets[i]);
    }
    if (!has_leaf(sub)) return false;
  }
  return true;
}

bool is_connected(const Facets& facets) {
  if (facets.empty()) return true;
  std::vector<bool> seen(facets.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (seen[j]) continue;
      const bool meet = std::any_of(facets[i].begin(), facets[i].end(), [&](int v) { return facets[j].count(v) > 0; });
      if (meet) {
        seen[j] = true;
        stack.push_back(j);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool is_tree(const Facets& facets) { return is_connected(facets) && is_forest(facets); }

Facets induced(const Facets& facets, const VSet& subset) {
  Facets cut;
  for (const VSet& f : facets) {
    VSet s;
    std::set_intersection(f.begin(), f.end(), subset.begin(), subset.end(), std::inserter(s, s.end()));
    cut.push_back(s);
  }
  return maximal(cut);
}

std::size_t rank(std::vector<std::vector<mpq_class>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const mpq_class factor = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= factor * rows[r][k];
    }
    ++r;
  }
  return r;
}

std::vector<std::size_t> reduced_homology(const std::set<VSet>& faces) {
  if (faces.empty()) return {0};
  std::size_t top = 0;
  for (const VSet& s : faces) top = std::max(top, s.size());
  // by_size[k] holds the faces with k vertices, i.e. dimension k - 1.
  std::vector<std::vector<VSet>> by_size(top + 1);
  for (const VSet& s : faces) by_size[s.size()].push_back(s);

  // rank of the boundary from size k to size k-1, for k = 1..top.
  std::vector<std::size_t> boundary_rank(top + 2, 0);
  for (std::size_t k = 1; k <= top; ++k) {
    const auto& rows_faces = by_size[k - 1];
    const auto& cols_faces = by_size[k];
    if (rows_faces.empty() || cols_faces.empty()) continue;
    std::map<VSet, std::size_t> row_of;
    for (std::size_t i = 0; i < rows_faces.size(); ++i) row_of[rows_faces[i]] = i;
    std::vector<std::vector<mpq_class>> m(rows_faces.size(), std::vector<mpq_class>(cols_faces.size(), 0));
    for (std::size_t j = 0; j < cols_faces.size(); ++j) {
      int sign = 1;
      for (int v : cols_faces[j]) {
        VSet sub = cols_faces[j];
        sub.erase(v);
        m[row_of.at(sub)][j] = sign;
        sign = -sign;
      }
    }
    boundary_rank[k] = rank(m);
  }
  std::vector<std::size_t> out(top + 1, 0);
  for (std::size_t k = 0; k <= top; ++k) {
    out[k] = by_size[k].size() - boundary_rank[k] - boundary_rank[k + 1];
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace oracle
