#include <doctest.h>

#include <set>

#include "../fixtures.hpp"
#include "ngsplit/canonical.hpp"
#include "ngsplit/bijection.hpp"
#include "ngsplit/census.hpp"
#include "ngsplit/degree.hpp"
#include "ngsplit/oracle.hpp"
#include "ngsplit/partition.hpp"

using namespace ngsplit;

TEST_CASE("ABC-partitions of the worked examples") {
  const ABCPartition p1 = abc_partition(fixtures::g1(), 6);
  CHECK(p1.a == VertexSet{3, 4, 5});
  CHECK(p1.b == VertexSet{0, 1, 2});
  CHECK(p1.c == VertexSet{6, 7, 8, 9});
  CHECK(p1.ng_kind == NgKind::NG1);

  const ABCPartition p2 = abc_partition(fixtures::g2());
  CHECK(p2.chi == 4);
  CHECK(p2.a == VertexSet{3, 4, 5});
  CHECK(p2.b == VertexSet{0, 1, 2});
  CHECK(p2.ng_kind == NgKind::NG2);

  const ABCPartition p3 = abc_partition(fixtures::g3());
  CHECK(p3.chi == 6);
  CHECK(p3.a == VertexSet{3, 4, 5, 6, 7});
  CHECK(p3.ng_kind == NgKind::NG3);

  const ABCPartition c5 = abc_partition(cycle_graph(5), 3);
  CHECK(c5.a == VertexSet::range(5));
  CHECK(c5.b.empty());
  CHECK(c5.c.empty());
  CHECK(c5.ng_kind == NgKind::NG3);

  const ABCPartition p3path = abc_partition(path_graph(3), 2);
  CHECK(p3path.a == VertexSet{0, 2});
  CHECK(p3path.b == VertexSet{1});
  CHECK(p3path.ng_kind == NgKind::NG2);
  CHECK(oracle::chromatic_number(path_graph(3)) + oracle::chromatic_number(path_graph(3).complement()) == 4);

  const ABCPartition p4 = abc_partition(path_graph(4), 2);
  CHECK(p4.a == VertexSet{0, 3});
  CHECK(p4.b == VertexSet{1, 2});
  CHECK(p4.ng_kind == NgKind::None);
}

TEST_CASE("ABC-partition errors") {
  CHECK_THROWS_AS(abc_partition(cycle_graph(4)), DomainError);
  CHECK_THROWS_AS(abc_partition(path_graph(3), 0), DomainError);
  CHECK_THROWS_AS(abc_partition(path_graph(3), 4), DomainError);
  CHECK_FALSE(degree_chromatic_number(profile(cycle_graph(4))));
  CHECK(*degree_chromatic_number(profile(cycle_graph(5))) == 3);
}

TEST_CASE("K-max partitions") {
  const KSPartition g1 = kmax_partition(fixtures::g1(), profile(fixtures::g1()));
  CHECK(g1.k == VertexSet{0, 1, 2, 3, 4, 5});
  CHECK(g1.s == VertexSet{6, 7, 8, 9});
  CHECK(g1.kind == KSKind::KMax);
  const KSPartition k1 = kmax_partition(Graph(1), profile(Graph(1)));
  CHECK(k1.k == VertexSet{0});
  CHECK(k1.s.empty());
  const KSPartition p4 = kmax_partition(path_graph(4), profile(path_graph(4)));
  CHECK(p4.k == VertexSet{1, 2});
  CHECK(p4.s == VertexSet{0, 3});
  CHECK(p4.kind == KSKind::Both);
  CHECK_THROWS_AS(kmax_partition(cycle_graph(5), profile(cycle_graph(5))), DomainError);
}

TEST_CASE("all KS-partitions") {
  const auto g1 = all_ks_partitions(fixtures::g1());
  CHECK(g1.size() == 4);
  CHECK(g1[0].kind == KSKind::KMax);
  for (std::size_t i = 1; i < g1.size(); ++i) CHECK(g1[i].kind == KSKind::SMax);

  CHECK(all_ks_partitions(path_graph(4)).size() == 1);

  // K2: one K-max partition and one S-max partition per endpoint.
  const auto k2 = all_ks_partitions(complete_graph(2));
  CHECK(k2.size() == 3);
  std::set<CanonicalCode> classes;
  for (const auto& p : k2) classes.insert(canonical(KSTriple{complete_graph(2), p}));
  CHECK(classes.size() == 2);

  CHECK_THROWS_AS(all_ks_partitions(cycle_graph(5)), DomainError);
}

TEST_CASE("S-max partition of a split graph") {
  const KSPartition s = smax_partition(fixtures::g1());
  CHECK(s.kind == KSKind::SMax);
  CHECK(s.s.size() == 5);
  CHECK(smax_partition(path_graph(4)).kind == KSKind::Both);
}

TEST_CASE("derived sets") {
  const Graph g1 = fixtures::g1();
  const DerivedSets d1 = derived_sets(g1, abc_partition(g1));
  CHECK(d1.c_prime.empty());
  CHECK(d1.b_prime.empty());

  const DerivedSets c5 = derived_sets(cycle_graph(5), abc_partition(cycle_graph(5)));
  CHECK(c5.c_prime.empty());
  CHECK(c5.b_prime.empty());

  const Graph h = fixtures::noninjective_h();
  CHECK(derived_sets(h, abc_partition(h)).b_prime.empty());
  const Graph g = fixtures::noninjective_g();
  CHECK(derived_sets(g, abc_partition(g)).b_prime == VertexSet{6, 7});
}

TEST_CASE("ks_kind validates") {
  const Graph p4 = path_graph(4);
  CHECK(ks_kind(p4, {1, 2}, {0, 3}) == KSKind::Both);
  CHECK_THROWS_AS(ks_kind(p4, {0, 1}, {2, 3}), DomainError);
  CHECK_THROWS_AS(ks_kind(p4, {1, 2}, {0}), DomainError);
}

TEST_CASE("property: KS-partitions match exhaustive search, n <= 6") {
  const auto catalog = census::enumerate_all(6);
  for (const auto& level : catalog) {
    for (const Graph& g : level) {
      if (!classify(g).split) continue;
      auto found = all_ks_partitions(g);
      std::set<std::pair<std::uint64_t, std::uint64_t>> ours;
      for (const auto& p : found) ours.emplace(p.k.bits(), p.s.bits());
      std::set<std::pair<std::uint64_t, std::uint64_t>> theirs;
      for (const auto& [k, s] : oracle::all_ks_splits(g)) theirs.emplace(k.bits(), s.bits());
      REQUIRE(ours == theirs);
      const int omega = oracle::clique_number(g);
      const int alpha = oracle::independence_number(g);
      for (const auto& p : found) {
        const bool kmax = p.k.size() == omega;
        const bool smax = p.s.size() == alpha;
        REQUIRE((kmax || smax));
        REQUIRE(p.kind == (kmax && smax ? KSKind::Both : kmax ? KSKind::KMax : KSKind::SMax));
      }
    }
  }
}
