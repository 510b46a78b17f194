#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "generators.hpp"
#include "oracle.hpp"
#include "scarftree/error.hpp"
#include "scarftree/resolution.hpp"

using namespace scarftree;

namespace {

using Betti = std::vector<std::size_t>;

SimplicialComplex C(const std::vector<std::vector<Vertex>>& facets) { return new_complex(facets); }
Monomial M(std::string_view text) { return parse_monomial(text); }

const std::vector<std::string> kXYZU{"x", "y", "z", "u"};
const MonomialIdeal kIdeal(kXYZU, {M("x*y^2"), M("y*z"), M("x*z^2"), M("z*u")});
const SimplicialComplex kDelta = C({{"1", "2", "4"}, {"2", "3", "4"}});

// xy^2 and yz on the non-adjacent pair 1,3; nothing else divides their lcm.
LabeledComplex adversarial() { return make_labeled(kDelta, kIdeal, {"1", "3", "2", "4"}); }

// Strict-divisor Taylor subcomplexes computed with plain sets and dense
// rational elimination.
Betti brute_betti(const MonomialIdeal& ideal) {
  const auto& g = ideal.generators();
  const std::size_t n = g.size();
  std::map<Monomial, std::vector<oracle::VSet>> by_label;
  std::vector<std::pair<oracle::VSet, Monomial>> labelled;
  for (unsigned bits = 0; bits < (1U << n); ++bits) {
    oracle::VSet s;
    Monomial label;
    for (std::size_t i = 0; i < n; ++i) {
      if (bits >> i & 1U) {
        s.insert(static_cast<int>(i));
        label = lcm(label, g[i]);
      }
    }
    labelled.emplace_back(s, label);
    if (!s.empty()) by_label[label].push_back(s);
  }
  Betti out;
  for (const auto& [m, unused] : by_label) {
    std::set<oracle::VSet> below;
    for (const auto& [s, label] : labelled) {
      if (divides(label, m) && label != m) below.insert(s);
    }
    const auto h = oracle::reduced_homology(below);
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (out.size() <= i) out.resize(i + 1, 0);
      out[i] += h[i];
    }
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

LabeledComplex random_labeled_tree(gen::Rng& rng) {
  const auto tree = gen::random_tree(rng, 7, 8);
  return make_labeled(tree, gen::random_antichain_ideal(rng, tree.vertex_count(), 5, 3));
}

}  // namespace

TEST(FaceLabel, Examples) {
  const auto l = make_labeled(kDelta, kIdeal);
  EXPECT_EQ(face_label(l, Face{"2"}), M("y*z"));
  const auto taylor = taylor_complex(kIdeal);
  EXPECT_EQ(face_label(taylor, Face{"1", "3"}), M("x*y^2*z^2"));
  EXPECT_EQ(face_label(taylor, Face{"1", "2", "3", "4"}), M("x*y^2*z^2*u"));
  try {
    face_label(l, Face{"1", "3"});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAFace);
  }
}

TEST(DivisorSubcomplex, Examples) {
  const auto l = make_labeled(kDelta, kIdeal);
  EXPECT_EQ(divisor_subcomplex(l, M("x*y^2*z^2*u")), kDelta);
  EXPECT_TRUE(divisor_subcomplex(l, Monomial()).empty());
  const auto sub = divisor_subcomplex(l, M("x*y^2*z^2"));
  EXPECT_EQ(sub.vertices(), (std::vector<Vertex>{"1", "2", "3"}));
  EXPECT_TRUE(is_connected(sub));
}

TEST(MakeLabeled, ArityAndOrder) {
  EXPECT_THROW(make_labeled(C({{"1", "2"}}), kIdeal), Error);
  try {
    make_labeled(C({{"1", "2"}}), kIdeal);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ArityMismatch);
  }
  const auto adv = adversarial();
  EXPECT_EQ(adv.ideal.generators()[1], M("x*z^2"));
  EXPECT_EQ(adv.ideal.generators()[2], M("y*z"));
}

TEST(Supports, TaylorAlwaysSupports) {
  EXPECT_TRUE(supports_resolution(taylor_complex(kIdeal)).supports);
  gen::Rng rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    const auto ideal = gen::random_antichain_ideal(rng, 1 + trial % 6, 4, 3);
    EXPECT_TRUE(supports_resolution(taylor_complex(ideal)).supports);
  }
}

TEST(Supports, ScarfExample) {
  const auto l = make_labeled(kDelta, kIdeal);
  const auto s = supports_resolution(l);
  EXPECT_TRUE(s.supports);
  EXPECT_FALSE(s.failing_degree.has_value());
  EXPECT_TRUE(supports_resolution_tree(l).supports);
}

TEST(Supports, AdversarialLabelsFailAtTheDisconnectedPair) {
  const auto adv = adversarial();
  const auto general = supports_resolution(adv);
  EXPECT_FALSE(general.supports);
  EXPECT_EQ(general.failing_degree, M("x*y^2*z"));
  const auto tree = supports_resolution_tree(adv);
  EXPECT_FALSE(tree.supports);
  EXPECT_EQ(tree.failing_degree, general.failing_degree);
}

TEST(Supports, TreeCriterionNeedsAForest) {
  const auto tri = make_labeled(C({{"1", "2"}, {"2", "3"}, {"1", "3"}}),
                                MonomialIdeal({"x", "y", "z"}, {M("x"), M("y"), M("z")}));
  try {
    supports_resolution_tree(tri);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAForest);
  }
  // The hollow triangle on x,y,z misses the top degree xyz.
  const auto s = supports_resolution(tri);
  EXPECT_FALSE(s.supports);
  EXPECT_EQ(s.failing_degree, M("x*y*z"));
}

TEST(Minimal, Examples) {
  const auto taylor = taylor_complex(kIdeal);
  const auto m = is_minimal(taylor);
  EXPECT_FALSE(m.minimal);
  ASSERT_TRUE(m.violation.has_value());
  EXPECT_EQ(face_label(taylor, m.violation->first), face_label(taylor, m.violation->second));
  EXPECT_TRUE(is_minimal(scarf_complex(kIdeal)).minimal);
  const auto coprime = make_labeled(C({{"1", "2", "3"}}), MonomialIdeal({"x", "y", "z"}, {M("x"), M("y^2"), M("z")}));
  EXPECT_TRUE(is_minimal(coprime).minimal);
}

TEST(Betti, Examples) {
  EXPECT_EQ(betti_table(MonomialIdeal({"x", "y"}, {M("x"), M("y")})).vector, (Betti{2, 1}));
  EXPECT_EQ(betti_table(kIdeal).vector, (Betti{4, 4, 1}));
  const auto table = betti_table(kIdeal);
  std::size_t total = 0;
  for (const auto& e : table.by_degree) {
    for (std::size_t r : e.ranks) total += r;
  }
  EXPECT_EQ(total, 9U);
}

TEST(Betti, DegreesLieInTheLcmLattice) {
  gen::Rng rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    const auto ideal = gen::random_antichain_ideal(rng, 2 + trial % 5, 4, 3);
    const auto lattice = lcm_lattice(ideal);
    const auto table = betti_table(ideal);
    EXPECT_EQ(table.vector.at(0), ideal.size());
    for (const auto& e : table.by_degree) {
      EXPECT_NE(std::find(lattice.begin(), lattice.end(), e.degree), lattice.end());
    }
  }
}

TEST(Betti, AgreesWithBruteForce) {
  gen::Rng rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const auto ideal = gen::random_antichain_ideal(rng, 1 + trial % 6, 3 + trial % 3, 3);
    EXPECT_EQ(betti_table(ideal).vector, brute_betti(ideal));
  }
}

TEST(Betti, InvariantUnderPermutationAndRenaming) {
  gen::Rng rng(54);
  for (int trial = 0; trial < 50; ++trial) {
    const auto ideal = gen::random_antichain_ideal(rng, 2 + trial % 5, 4, 3);
    auto gens = ideal.generators();
    std::shuffle(gens.begin(), gens.end(), rng);
    const std::map<std::string, std::string> rename{{"x", "p"}, {"y", "q"}, {"z", "a"}, {"u", "b"}};
    std::vector<Monomial> renamed;
    for (const auto& g : gens) {
      std::map<std::string, Exponent> e;
      for (const auto& [v, k] : g.exponents()) e[rename.at(v)] = k;
      renamed.emplace_back(e);
    }
    const MonomialIdeal other({"b", "a", "q", "p"}, renamed);
    EXPECT_EQ(betti_table(other).vector, betti_table(ideal).vector);
  }
}

TEST(Scarf, Examples) {
  const auto s = scarf_complex(kIdeal);
  EXPECT_EQ(f_vector(s.complex), (FVector{4, 4, 1}));
  EXPECT_TRUE(supports_resolution(s).supports);
  const auto coprime = scarf_complex(MonomialIdeal({"x", "y", "z"}, {M("x"), M("y"), M("z")}));
  EXPECT_EQ(coprime.complex, C({{"1", "2", "3"}}));
}

TEST(Scarf, SubcomplexOfTaylorWithAllVertices) {
  gen::Rng rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ideal = gen::random_antichain_ideal(rng, 1 + trial % 7, 4, 3);
    const auto s = scarf_complex(ideal);
    EXPECT_EQ(s.complex.vertex_count(), ideal.size());
    // Each Scarf face label is unique among all Taylor face labels.
    const auto taylor = taylor_complex(ideal);
    std::map<Monomial, int> counts;
    for (const Face& f : faces(taylor.complex)) ++counts[face_label(taylor, f)];
    for (const Face& f : faces(s.complex)) EXPECT_EQ(counts[face_label(s, f)], 1);
    std::size_t unique = 0;
    for (const auto& [m, c] : counts) unique += c == 1;
    EXPECT_EQ(faces(s.complex).size(), unique);
    if (supports_resolution(s).supports) EXPECT_TRUE(is_minimal(s).minimal);
  }
}

TEST(CompareBettiF, Examples) {
  const auto delta = compare_betti_f(make_labeled(kDelta, kIdeal));
  EXPECT_EQ(delta.betti, (Betti{4, 4, 1}));
  EXPECT_EQ(delta.f, (Betti{4, 5, 2}));
  EXPECT_TRUE(delta.all_bounded);
  EXPECT_FALSE(delta.equal);
  const auto scarf = compare_betti_f(scarf_complex(kIdeal));
  EXPECT_TRUE(scarf.equal);
  const auto koszul = compare_betti_f(make_labeled(C({{"1", "2"}}), MonomialIdeal({"x", "y"}, {M("x"), M("y")})));
  EXPECT_TRUE(koszul.equal);
  EXPECT_EQ(koszul.betti, (Betti{2, 1}));
  try {
    compare_betti_f(adversarial());
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAResolution);
  }
}

TEST(ResolutionProperties, TreeCriterionMatchesGeneralCriterion) {
  gen::Rng rng(56);
  int failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto l = random_labeled_tree(rng);
    const auto general = supports_resolution(l);
    const auto tree = supports_resolution_tree(l);
    EXPECT_EQ(tree.supports, general.supports) << l.complex.to_string();
    EXPECT_EQ(tree.failing_degree, general.failing_degree);
    failures += !general.supports;
  }
  // Both outcomes must actually occur for the comparison to mean anything.
  EXPECT_GT(failures, 10);
  EXPECT_LT(failures, 190);
}

TEST(ResolutionProperties, BettiBoundedByFAndEqualWhenMinimal) {
  gen::Rng rng(57);
  int minimal_supporting = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto l = random_labeled_tree(rng);
    if (!supports_resolution(l).supports) continue;
    const auto cmp = compare_betti_f(l);
    EXPECT_TRUE(cmp.all_bounded);
    const bool minimal = is_minimal(l).minimal;
    EXPECT_EQ(cmp.equal, minimal) << l.complex.to_string();
    minimal_supporting += minimal;
  }
  EXPECT_GT(minimal_supporting, 0);
}
