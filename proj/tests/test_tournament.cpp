#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "volterra/tournament.hpp"

using namespace volterra;

TEST_CASE("scores, sources and sinks", "[tournament]") {
  // (1,1,1,1,0,1): genotype 1 wins all three of its matchups
  const Tournament t16(4, "111101");
  CHECK(scores(t16) == std::vector<int>{3, 1, 1, 1});
  const SourceSink ss16 = sources_and_sinks(t16);
  CHECK(ss16.sources.empty());
  CHECK(ss16.sinks == std::vector<int>{1});

  // (1,1,0,1,1,0): genotype 3 loses all three of its matchups
  const Tournament t17(4, "110110");
  CHECK(scores(t17) == std::vector<int>{2, 2, 0, 2});
  const SourceSink ss17 = sources_and_sinks(t17);
  CHECK(ss17.sources == std::vector<int>{3});
  CHECK(ss17.sinks.empty());

  // total order 1 > 2 > 3 > 4: both a sink and a source
  const Tournament t18(4, "111111");
  CHECK(scores(t18) == std::vector<int>{3, 2, 1, 0});
  const SourceSink ss18 = sources_and_sinks(t18);
  CHECK(ss18.sources == std::vector<int>{4});
  CHECK(ss18.sinks == std::vector<int>{1});
}

TEST_CASE("a tournament has at most one source and one sink", "[tournament]") {
  for (int m = 3; m <= 5; ++m)
    for (std::uint32_t c = 0; c < (1u << strict_pair_count(m)); ++c) {
      const SourceSink ss = sources_and_sinks(Tournament(m, c));
      REQUIRE(ss.sources.size() <= 1);
      REQUIRE(ss.sinks.size() <= 1);
    }
}

TEST_CASE("spanning cycles on three genotypes", "[tournament]") {
  int count = 0;
  for (std::uint32_t c = 0; c < 8; ++c)
    if (has_hamiltonian_cycle(Tournament(3, c))) ++count;
  CHECK(count == 2);
  CHECK(has_hamiltonian_cycle(Tournament(3, "101")));
  CHECK(has_hamiltonian_cycle(Tournament(3, "010")));
  CHECK_FALSE(has_hamiltonian_cycle(Tournament(3, "111")));
  CHECK_FALSE(has_hamiltonian_cycle(Tournament(3, "000")));
}

TEST_CASE("strong connectivity equals the brute-force spanning-cycle search", "[tournament]") {
  for (int m = 3; m <= 5; ++m)
    for (std::uint32_t c = 0; c < (1u << strict_pair_count(m)); ++c) {
      const Tournament t(m, c);
      REQUIRE(has_hamiltonian_cycle(t) == has_hamiltonian_cycle_brute(t));
    }
  // two genotypes can never form a cycle
  CHECK_FALSE(has_hamiltonian_cycle(Tournament(2, "0")));
  CHECK_FALSE(has_hamiltonian_cycle_brute(Tournament(2, "1")));
}

TEST_CASE("transitivity: score test equals the 3-cycle search", "[tournament]") {
  int transitive = 0;
  for (std::uint32_t c = 0; c < 64; ++c) {
    const Tournament t(4, c);
    REQUIRE(has_any_cycle(t) == has_three_cycle(t));
    if (is_transitive(t)) ++transitive;
  }
  CHECK(transitive == 24);  // 4! total orders
}

TEST_CASE("relabeling preserves structure", "[tournament]") {
  std::mt19937_64 g(31);
  const std::vector<Permutation> perms = all_permutations(4);
  for (std::uint32_t c = 0; c < 64; ++c) {
    const Tournament t(4, c);
    const Permutation& pi = perms[g() % perms.size()];
    const Tournament r = relabel(t, pi);
    CHECK(has_hamiltonian_cycle(r) == has_hamiltonian_cycle(t));
    CHECK(is_transitive(r) == is_transitive(t));
    std::vector<int> s = scores(t), rs = scores(r);
    std::sort(s.begin(), s.end());
    std::sort(rs.begin(), rs.end());
    CHECK(s == rs);
    CHECK(canonical_form(r) == canonical_form(t));
  }
}

TEST_CASE("erasing a vertex", "[tournament]") {
  const Tournament t(4, "111101");
  const Tournament r = erase_vertex(t, 1);
  CHECK(r.dim() == 3);
  CHECK(r.bits() == "101");
}

TEST_CASE("canonical forms on three genotypes", "[tournament]") {
  // the two spanning cycles form one orbit, the six total orders the other
  const EquivalenceClassId cyc = canonical_form(Tournament(3, "101"));
  CHECK(cyc.bits == "010");
  CHECK(cyc.size == 2);
  CHECK(canonical_form(Tournament(3, "010")) == cyc);

  const EquivalenceClassId ord = canonical_form(Tournament(3, "111"));
  CHECK(ord.bits == "000");
  CHECK(ord.size == 6);

  // canonical ids are minimal members of their own orbit
  CHECK(canonical_form(Tournament(3, cyc.bits)).bits == cyc.bits);
  CHECK(canonical_form(Tournament(3, ord.bits)).bits == ord.bits);
}

TEST_CASE("partition of all tournaments into relabeling classes", "[tournament]") {
  const std::vector<ClassSummary> m2 = enumerate_classes(2);
  REQUIRE(m2.size() == 1);
  CHECK(m2[0].size == 2);

  const std::vector<ClassSummary> m3 = enumerate_classes(3);
  REQUIRE(m3.size() == 2);
  std::multiset<long> sizes3;
  for (const ClassSummary& c : m3) sizes3.insert(c.size);
  CHECK(sizes3 == std::multiset<long>{2, 6});

  const std::vector<ClassSummary> m4 = enumerate_classes(4);
  REQUIRE(m4.size() == 4);
  std::multiset<long> sizes4;
  for (const ClassSummary& c : m4) sizes4.insert(c.size);
  CHECK(sizes4 == std::multiset<long>{8, 8, 24, 24});

  CHECK(enumerate_classes(5).size() == 12);
  CHECK(enumerate_classes(6).size() == 56);
}

TEST_CASE("class sizes sum to the operator count and divide m!", "[tournament]") {
  const long fact[8] = {1, 1, 2, 6, 24, 120, 720, 5040};
  for (int m = 2; m <= 6; ++m) {
    long total = 0;
    for (const ClassSummary& c : enumerate_classes(m)) {
      total += c.size;
      CHECK(fact[m] % c.size == 0);
    }
    CHECK(total == (1l << strict_pair_count(m)));
  }
}

TEST_CASE("the four classes on four genotypes", "[tournament]") {
  // spanning-cycle class of 24, two 8-element classes with a dominant or a
  // dominated genotype over a 3-cycle, and 24 total orders
  std::map<std::string, long> by_kind;
  for (const ClassSummary& c : enumerate_classes(4)) {
    const Tournament t(ExtremalVolterra::from_bits(c.class_id));
    const SourceSink ss = sources_and_sinks(t);
    std::string kind;
    if (has_hamiltonian_cycle(t)) kind = "hamiltonian";
    else if (is_transitive(t)) kind = "transitive";
    else if (!ss.sinks.empty()) kind = "sink-over-cycle";
    else kind = "source-under-cycle";
    by_kind[kind] += c.size;
  }
  CHECK(by_kind["hamiltonian"] == 24);
  CHECK(by_kind["transitive"] == 24);
  CHECK(by_kind["sink-over-cycle"] == 8);
  CHECK(by_kind["source-under-cycle"] == 8);
}

TEST_CASE("partition_into_classes groups explicit lists", "[tournament]") {
  std::vector<Tournament> all;
  for (std::uint32_t c = 0; c < 8; ++c) all.emplace_back(3, c);
  const std::map<std::string, std::vector<std::string>> classes = partition_into_classes(all);
  REQUIRE(classes.size() == 2);
  CHECK(classes.at("010").size() == 2);
  CHECK(classes.at("000").size() == 6);
  for (const auto& [id, members] : classes)
    for (const std::string& b : members) CHECK(canonical_form(Tournament(ExtremalVolterra::from_bits(b))).bits == id);
}

TEST_CASE("enumeration guard", "[tournament]") {
  CHECK(enumerate_classes(7).size() == 456);
  CHECK_THROWS_AS(enumerate_classes(8), DimensionTooLargeError);
}
