#include <gtest/gtest.h>

#include <memory>
#include <random>

#include "l21/explorer.hpp"
#include "oracles.hpp"

using namespace l21;

namespace {

std::shared_ptr<const Grid> shared(Grid g) { return std::make_shared<const Grid>(std::move(g)); }

// Directed distance <= 2 in either direction, from the oracle's matrix.
bool close(const std::vector<std::vector<int>>& rel, int u, int v) { return rel[u][v] != 0; }

}  // namespace

TEST(Enumerate, K3TwoClassesWithReversal) {
  auto s = enumerate_orientations(shared(patches::complete(3)));
  ASSERT_EQ(s.classes.size(), 2U);
  EXPECT_EQ(s.total_orientations, 8);
  long long sum = 0;
  for (const auto& c : s.classes) {
    sum += c.class_size;
    EXPECT_EQ(c.longest, 2);
    EXPECT_EQ(c.lambda, 4);
  }
  EXPECT_EQ(sum, 8);
}

TEST(Enumerate, OrbitSumAndHistogramTotals) {
  for (auto g : {shared(patches::cycle(4)), shared(patches::tri_wheel()), shared(patches::square_rect(3, 3)),
                 shared(patches::hex_cycle(2))})
    for (bool rev : {false, true}) {
      SweepOptions opts;
      opts.include_reversal = rev;
      auto s = enumerate_orientations(g, opts);
      long long sum = 0, hist = 0;
      for (const auto& c : s.classes) {
        sum += c.class_size;
        EXPECT_EQ(static_cast<long long>(s.group_order) % c.class_size, 0);
      }
      for (const auto& [key, count] : s.histogram) hist += count;
      EXPECT_EQ(sum, 1LL << g->edge_count()) << g->name();
      EXPECT_EQ(hist, sum);
      EXPECT_TRUE(std::is_sorted(s.classes.begin(), s.classes.end(), [](const auto& a, const auto& b) {
        return Orientation::lex_less(a.canonical.bits(), b.canonical.bits());
      }));
    }
}

TEST(Enumerate, RepresentativeMatchesRandomMembers) {
  std::mt19937_64 rng(17);
  for (auto g : {shared(patches::tri_wheel()), shared(patches::square_rect(3, 3))}) {
    auto s = enumerate_orientations(g);
    auto perms = automorphisms(*g);
    OrientationGroup group(*g, perms, true);
    for (int i = 0; i < 10; ++i) {
      const auto& rep = s.classes[rng() % s.classes.size()];
      std::vector<std::uint64_t> members;
      group.for_each_image(rep.canonical.bits(), [&](std::uint64_t m) { members.push_back(m); });
      for (int k = 0; k < 2; ++k) {
        auto d = orient(g, Orientation(members[rng() % members.size()], g->edge_count()));
        EXPECT_EQ(solve_lambda(d).lambda, *rep.lambda);
        EXPECT_EQ(longest_dipath(d).length, rep.longest);
      }
    }
  }
}

TEST(Enumerate, WheelTotalsAndTheorem) {
  auto s = enumerate_orientations(shared(patches::tri_wheel()));
  EXPECT_EQ(s.total_orientations, 4096);
  for (const auto& [key, count] : s.histogram) {
    EXPECT_GE(key.second, 2);
    if (key.first == 2) EXPECT_EQ(key.second, 4);
  }
}

TEST(Enumerate, IdenticalAcrossJobCounts) {
  auto g = shared(patches::tri_wheel());
  SweepOptions one, many;
  many.jobs = 8;
  auto a = enumerate_orientations(g, one), b = enumerate_orientations(g, many);
  ASSERT_EQ(a.classes.size(), b.classes.size());
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    EXPECT_EQ(a.classes[i].canonical, b.classes[i].canonical);
    EXPECT_EQ(a.classes[i].lambda, b.classes[i].lambda);
    EXPECT_EQ(a.classes[i].witness.colors, b.classes[i].witness.colors);
  }
  EXPECT_EQ(a.histogram, b.histogram);
}

TEST(Enumerate, CapacityGuard) {
  EXPECT_THROW(enumerate_orientations(shared(patches::square_rect(4, 4))), CapacityError);
}

TEST(Enumerate, BudgetRecordedPerClass) {
  SweepOptions opts;
  opts.budget_per_solve = 1;
  auto s = enumerate_orientations(shared(patches::square_rect(3, 3)), opts);
  EXPECT_GT(s.unsolved_classes, 0);
  for (const auto& c : s.classes)
    if (!c.lambda) {
      ASSERT_TRUE(c.bracket.has_value());
      EXPECT_LE(c.bracket->first, c.bracket->second);
    }
}

TEST(FindWitness, Examples) {
  auto sq = shared(patches::square_rect(3, 3));
  auto w = find_witness(sq, 3, 4);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(longest_dipath(w->graph).length, 3);
  EXPECT_EQ(solve_lambda(w->graph).lambda, 4);
  EXPECT_TRUE(find_witness(sq, 8, 6).has_value());
  EXPECT_FALSE(find_witness(shared(patches::path(4)), 3, 5).has_value());
}

TEST(Checks, SquareCenter) {
  auto r = check_square_center_property();
  EXPECT_TRUE(r.confirmed());
  EXPECT_GT(r.qualifying, 0);
  EXPECT_EQ(r.lambdas, std::set<int>{6});
  EXPECT_EQ(r.longest, std::set<int>{8});
}

TEST(Checks, SquareCenterQualifyingCountByOracle) {
  // Every pair at undirected distance 2 in the 3x3 patch must stay within
  // directed distance 2.
  auto g = shared(patches::square_rect(3, 3));
  auto undirected = undirected_constraint_pairs(*g);
  long long count = 0;
  for (std::uint64_t m = 0; m < 4096; ++m) {
    auto d = orient(g, Orientation(m, 12));
    auto rel = oracle::relations(oracle::from(d));
    bool ok = true;
    for (auto [u, v] : undirected.p2()) ok = ok && close(rel, u, v);
    if (!ok) continue;
    ++count;
    EXPECT_EQ(oracle::lambda(oracle::from(d)), 6);
    EXPECT_EQ(oracle::longest_dipath(oracle::from(d)), 8);
  }
  EXPECT_EQ(count, check_square_center_property().qualifying);
}

TEST(Checks, TriangularWheelClasses) {
  auto r = check_triangular_wheel_classes();
  EXPECT_TRUE(r.confirmed());
  EXPECT_EQ(r.matching_mode, "automorphisms");
  EXPECT_EQ(r.classes_automorphisms.size(), 4U);
  EXPECT_EQ(r.lambda4_orientations, 8);
  std::vector<int> ls;
  for (const auto& c : r.classes_automorphisms) ls.push_back(c.longest);
  std::sort(ls.begin(), ls.end());
  EXPECT_EQ(ls, (std::vector<int>{2, 2, 2, 4}));
  EXPECT_TRUE(r.witnesses_use_0_2_4);
}

TEST(Checks, WheelLambdaFourCountByOracle) {
  auto g = shared(patches::tri_wheel());
  int count = 0;
  for (std::uint64_t m = 0; m < 4096; ++m) {
    auto od = oracle::from(orient(g, Orientation(m, 12)));
    if (oracle::labelable(od, 4) && !oracle::labelable(od, 3)) ++count;
  }
  EXPECT_EQ(count, 8);
}

TEST(Checks, Dist2Lemma) {
  auto r = check_dist2_lemma();
  EXPECT_TRUE(r.confirmed());
  EXPECT_GT(r.qualifying, 0);
  EXPECT_GE(r.min_lambda, 7);
  EXPECT_GE(r.min_longest, 5);
}

TEST(Checks, Dist2LemmaQualifyingSetByOracle) {
  // Records the exact (l, lambda) of every qualifying orientation.
  auto g = shared(patches::tri_wheel());
  std::map<std::pair<int, int>, int> hist;
  for (std::uint64_t m = 0; m < 4096; ++m) {
    auto od = oracle::from(orient(g, Orientation(m, 12)));
    auto rel = oracle::relations(od);
    bool ok = true;
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v) ok = ok && close(rel, u, v);
    if (ok) ++hist[{oracle::longest_dipath(od), oracle::lambda(od)}];
  }
  EXPECT_EQ(hist, (std::map<std::pair<int, int>, int>{{{6, 7}, 100}}));
  auto r = check_dist2_lemma();
  EXPECT_EQ(r.qualifying, 100);
}

TEST(Checks, HexagonalSupportedUpToTwoHexagons) {
  auto r = check_hexagonal_conjecture(2);
  EXPECT_TRUE(r.supported());
  EXPECT_LE(r.max_lambda, 4);
  for (auto cell : {std::pair{3, 3}, std::pair{3, 4}, std::pair{4, 4}}) EXPECT_TRUE(r.realized.count(cell));
}

TEST(Checks, HexagonalRefutedByThreeHexagons) {
  auto r = check_hexagonal_conjecture(3);
  EXPECT_FALSE(r.supported());
  EXPECT_EQ(r.max_lambda, 5);
  ASSERT_FALSE(r.refutations.empty());
  auto grid = shared(patches::hex_cycle(3));
  for (const auto& f : r.refutations) {
    auto od = oracle::from(orient(grid, f.orientation));
    EXPECT_FALSE(oracle::labelable(od, 4)) << f.orientation.str();
    EXPECT_TRUE(oracle::valid_labeling(od, f.labeling.colors));
    EXPECT_EQ(f.labeling.span(), 5);
  }
}

TEST(Checks, Girth5) {
  auto r = check_girth5_conjecture(default_girth5_inputs());
  EXPECT_TRUE(r.supported());
  ASSERT_EQ(r.entries.size(), 3U);
  EXPECT_TRUE(r.entries[0].exhaustive);
  EXPECT_LE(r.entries[0].max_lambda, 5);
  EXPECT_LE(r.entries[2].max_lambda, 5);
  EXPECT_FALSE(r.entries[1].planar);
  EXPECT_EQ(r.entries[1].max_lambda, 6);
  std::vector<Girth5Input> c4{shared(patches::cycle(4))};
  auto skipped = check_girth5_conjecture(c4);
  ASSERT_EQ(skipped.entries.size(), 1U);
  EXPECT_TRUE(skipped.entries[0].skipped);
  EXPECT_NE(skipped.entries[0].notice.find("girth 4"), std::string::npos);
}

TEST(Checks, Girth5SampledInputIsSeeded) {
  Girth5Options opts;
  opts.samples = 20;
  std::vector<Girth5Input> in{shared(patches::dodecahedron())};
  auto a = check_girth5_conjecture(in, opts), b = check_girth5_conjecture(in, opts);
  EXPECT_FALSE(a.entries[0].exhaustive);
  EXPECT_EQ(a.entries[0].orientations, 20);
  EXPECT_EQ(a.max_lambda, b.max_lambda);
}

TEST(ThreeWheels, ConstructionByOracle) {
  auto built = three_wheel_construction();
  ASSERT_TRUE(built.has_value());
  const auto& d = built->graph;
  auto od = oracle::from(d);
  auto rel = oracle::relations(od);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) EXPECT_EQ(rel[built->centers[a]][built->centers[b]], 2);
  for (int c : built->centers) {
    auto nb = d.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) EXPECT_TRUE(close(rel, nb[i], nb[j]));
  }
  auto solved = solve_lambda(d);
  EXPECT_EQ(solved.lambda, 8);
  EXPECT_TRUE(oracle::valid_labeling(od, solved.witness.colors));
  EXPECT_FALSE(oracle::labelable(od, 7));
  EXPECT_GE(longest_dipath(d).length, 6);
}

TEST(SummaryTable, AssertedCellsFoundAndOpenCellsInformational) {
  auto r = summary_table();
  EXPECT_TRUE(r.all_asserted_found());
  int open = 0;
  for (const auto& c : r.cells) {
    if (c.status == CellStatus::open) {
      ++open;
      EXPECT_FALSE(c.witness.has_value());
      continue;
    }
    EXPECT_EQ(c.status, CellStatus::found) << c.column << " " << c.row << " " << c.lambda;
    ASSERT_TRUE(c.witness.has_value());
    EXPECT_EQ(c.witness->lambda, c.lambda);
  }
  EXPECT_EQ(open, 5);
}

TEST(Checks, PetersenNeedsSixByOracle) {
  // Non-planar with girth 5: some orientations exceed 5.
  auto g = shared(patches::petersen());
  int above = 0;
  for (std::uint64_t m = 0; m < (1U << 15); ++m)
    if (!oracle::labelable(oracle::from(orient(g, Orientation(m, 15))), 5)) ++above;
  EXPECT_EQ(above, 1808);
  std::vector<Girth5Input> in{{g, false}};
  auto r = check_girth5_conjecture(in);
  EXPECT_TRUE(r.supported());
  ASSERT_FALSE(r.nonplanar_above.empty());
  for (const auto& f : r.nonplanar_above) {
    auto od = oracle::from(orient(g, f.orientation));
    EXPECT_FALSE(oracle::labelable(od, 5));
    EXPECT_TRUE(oracle::valid_labeling(od, f.labeling.colors));
  }
  std::vector<Girth5Input> claimed{{g, true}};
  EXPECT_FALSE(check_girth5_conjecture(claimed).supported());
}
