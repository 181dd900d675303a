#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include "cnhom/builders.hpp"
#include "cnhom/homology.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace cnhom;

namespace {

Chain make_chain(int degree, std::map<FaceId, long> coeffs) {
  Chain c;
  c.degree = degree;
  for (const auto& [id, v] : coeffs)
    if (v != 0) c.coeffs[id] = v;
  return c;
}

std::vector<std::string> group_table(const FaceComplex& x) {
  std::vector<std::string> out;
  for (const HomologyGroup& g : all_homology(x)) out.push_back(format_group(g));
  return out;
}

// Free rank in degree p from rational ranks alone, independent of the Smith
// machinery: dim ker(delta_p) - rank(delta_{p+1}).
int betti_oracle(const FaceComplex& x, int p) {
  int faces = static_cast<int>(x.faces_of_codim(p).size());
  int rank_here = p >= 1 ? testutil::rational_rank_oracle(boundary_matrix(x, p).mat) : 0;
  int rank_above =
      p + 1 <= x.codim() ? testutil::rational_rank_oracle(boundary_matrix(x, p + 1).mat) : 0;
  return faces - rank_here - rank_above;
}

// Torsion in degree p lives in the cokernel of delta_{p+1}; the kernel lattice
// is saturated, so the minor-gcd test on delta_{p+1} decides it.
bool torsion_free_oracle(const FaceComplex& x, int p) {
  if (p + 1 > x.codim()) return true;
  return testutil::cokernel_torsion_free(boundary_matrix(x, p + 1).mat);
}

Chain translated(const Chain& c, const std::map<FaceId, FaceId>& names) {
  Chain out;
  out.degree = c.degree;
  for (const auto& [id, coeff] : c.coeffs) out.coeffs[names.at(id)] = coeff;
  return out;
}

Chain random_chain(const FaceComplex& x, int degree, std::mt19937& rng) {
  Chain c;
  c.degree = degree;
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (const FaceId& id : x.faces_of_codim(degree)) {
    int v = coeff(rng);
    if (v) c.coeffs[id] = v;
  }
  return c;
}

}  // namespace

TEST_CASE("golden homology tables") {
  CHECK(group_table(interval()) == std::vector<std::string>({"0", "Z"}));
  CHECK(group_table(disk()) == std::vector<std::string>({"0", "0"}));
  for (int k = 2; k <= 6; ++k) {
    CAPTURE(k);
    CHECK(group_table(polygon(k)) == std::vector<std::string>({"0", "0", "Z"}));
  }
  CHECK(group_table(testutil::square_fixture()) == std::vector<std::string>({"0", "0", "Z"}));
  CHECK(group_table(simplex(2)) == std::vector<std::string>({"0", "0", "Z"}));
  CHECK(group_table(simplex(3)) == std::vector<std::string>({"0", "0", "0", "Z"}));
  CHECK(group_table(hypercube(2)) == std::vector<std::string>({"0", "0", "Z"}));
  CHECK(group_table(hypercube(3)) == std::vector<std::string>({"0", "0", "0", "Z"}));
}

TEST_CASE("ranks and torsion agree with rational oracles") {
  for (const FaceComplex& x : testutil::base_corpus()) {
    CAPTURE(x.name());
    std::vector<HomologyGroup> groups = all_homology(x);
    REQUIRE(groups.size() == static_cast<std::size_t>(x.codim()) + 1);
    for (int p = 0; p <= x.codim(); ++p) {
      CAPTURE(p);
      CHECK(groups[p].degree == p);
      CHECK(groups[p].free_rank == betti_oracle(x, p));
      CHECK(groups[p].invariant_factors.empty() == torsion_free_oracle(x, p));
    }
  }
}

TEST_CASE("top generators are the expected alternating cycles") {
  FaceComplex sq = testutil::square_fixture();
  HomologyGroup h2 = homology_group(sq, 2);
  REQUIRE(h2.free_generators.size() == 1);
  Chain gen = h2.free_generators[0];
  Chain expected = make_chain(2, {{"v13", 1}, {"v14", -1}, {"v23", -1}, {"v24", 1}});
  CHECK((gen == expected || gen == chain_scale(-1, expected)));

  HomologyGroup h1 = homology_group(interval(), 1);
  REQUIRE(h1.free_generators.size() == 1);
  Chain igen = h1.free_generators[0];
  Chain iexp = make_chain(1, {{"left", 1}, {"right", -1}});
  CHECK((igen == iexp || igen == chain_scale(-1, iexp)));
}

TEST_CASE("generators are cycles with unit class coordinates") {
  for (const FaceComplex& x : testutil::base_corpus()) {
    CAPTURE(x.name());
    for (const HomologyGroup& g : all_homology(x)) {
      for (std::size_t i = 0; i < g.free_generators.size(); ++i) {
        const Chain& gen = g.free_generators[i];
        CHECK(is_cycle(x, gen));
        ClassCoordinates cc = homology_class(x, gen);
        REQUIRE(cc.free.size() == g.free_generators.size());
        for (std::size_t j = 0; j < cc.free.size(); ++j)
          CHECK(cc.free[j] == (i == j ? 1 : 0));
        for (const Int& t : cc.torsion) CHECK(t == 0);
        CHECK(!boundary_witness(x, gen).has_value());
      }
    }
  }
}

TEST_CASE("boundaries have zero class and a verifiable witness") {
  std::mt19937 rng(8080);
  for (const FaceComplex& x : {hypercube(3), testutil::square_fixture(), polygon(5)}) {
    CAPTURE(x.name());
    for (int p = 0; p + 1 <= x.codim(); ++p) {
      for (int trial = 0; trial < 5; ++trial) {
        Chain upstairs = random_chain(x, p + 1, rng);
        Chain c = boundary_of(x, upstairs);
        CHECK(is_cycle(x, c));
        CHECK(homology_class(x, c).all_zero());
        std::optional<Chain> w = boundary_witness(x, c);
        REQUIRE(w.has_value());
        CHECK(w->degree == p + 1);
        CHECK(boundary_of(x, *w) == c);
      }
    }
  }
}

TEST_CASE("nonbounding cycles have nonzero class and no witness") {
  FaceComplex x = hypercube(3);
  HomologyGroup top = homology_group(x, 3);
  REQUIRE(top.free_generators.size() == 1);
  Chain gen = top.free_generators[0];
  CHECK(!homology_class(x, gen).all_zero());
  CHECK(!boundary_witness(x, gen).has_value());
  // Scaling preserves nonzero class.
  Chain doubled = chain_scale(2, gen);
  ClassCoordinates cc = homology_class(x, doubled);
  CHECK(cc.free == std::vector<Int>{2});
  SUBCASE("witness at the top degree exists only for zero") {
    Chain zero;
    zero.degree = 3;
    std::optional<Chain> w = boundary_witness(x, zero);
    REQUIRE(w.has_value());
    CHECK(w->degree == 4);
    CHECK(w->is_zero());
  }
}

TEST_CASE("degree-zero chains") {
  FaceComplex x = interval();
  Chain c = make_chain(0, {{"interior", 3}});
  CHECK(is_cycle(x, c));
  // H_0 vanishes here, so every degree-0 chain bounds.
  CHECK(homology_class(x, c).all_zero());
  std::optional<Chain> w = boundary_witness(x, c);
  REQUIRE(w.has_value());
  CHECK(boundary_of(x, *w) == c);
}

TEST_CASE("non-cycles are rejected with the offending faces") {
  FaceComplex x = testutil::square_fixture();
  Chain c = make_chain(2, {{"v13", 1}});
  CHECK(!is_cycle(x, c));
  CHECK_THROWS_AS(homology_class(x, c), NotACycleError);
  CHECK_THROWS_WITH_AS(boundary_witness(x, c),
                       doctest::Contains("chain is not a cycle"), NotACycleError);
  try {
    boundary_witness(x, c);
  } catch (const NotACycleError& e) {
    CHECK(e.offending_faces() == std::vector<FaceId>({"e1", "e3"}));
  }
}

TEST_CASE("degree bounds are enforced") {
  FaceComplex x = testutil::square_fixture();
  CHECK_THROWS_AS(homology_group(x, -1), std::out_of_range);
  CHECK_THROWS_AS(homology_group(x, 3), std::out_of_range);
  Chain deep;
  deep.degree = 9;
  CHECK_THROWS_AS(boundary_witness(x, deep), std::out_of_range);
}

TEST_CASE("free ranks of products satisfy the rational product rule") {
  std::mt19937 rng(987);
  auto factors = testutil::product_factors();
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<std::size_t> pick(0, factors.size() - 1);
    const FaceComplex& a = factors[pick(rng)];
    const FaceComplex& b = factors[pick(rng)];
    FaceComplex x = product(a, b);
    CAPTURE(x.name());
    std::vector<Eigen::Index> ba, bb;
    for (const HomologyGroup& g : all_homology(a)) ba.push_back(g.free_rank);
    for (const HomologyGroup& g : all_homology(b)) bb.push_back(g.free_rank);
    std::vector<HomologyGroup> groups = all_homology(x);
    for (int p = 0; p <= x.codim(); ++p) {
      Eigen::Index expected = 0;
      for (std::size_t i = 0; i < ba.size(); ++i)
        if (p >= static_cast<int>(i) && p - static_cast<int>(i) < static_cast<int>(bb.size()))
          expected += ba[i] * bb[p - i];
      CHECK(groups[p].free_rank == expected);
      CHECK(groups[p].invariant_factors.empty());
    }
  }
}

TEST_CASE("degree-one homology is torsion-free") {
  std::mt19937 rng(321);
  auto factors = testutil::product_factors();
  std::vector<FaceComplex> pool = testutil::base_corpus();
  for (int trial = 0; trial < 10; ++trial) pool.push_back(testutil::random_product(rng, factors));
  for (const FaceComplex& x : pool) {
    CAPTURE(x.name());
    if (x.codim() < 1) continue;
    CHECK(homology_group(x, 1).invariant_factors.empty());
  }
}

TEST_CASE("relabeling changes generators but not groups") {
  std::mt19937 rng(1111);
  for (const FaceComplex& x : {testutil::square_fixture(), hypercube(2), polygon(4)}) {
    std::map<FaceId, FaceId> names;
    FaceComplex y = testutil::relabeled(x, rng, &names);
    CHECK(validate(y).ok());
    CHECK(group_table(y) == group_table(x));
    // Push a generator through the relabeling; its class must stay nonzero.
    HomologyGroup top = homology_group(x, x.codim());
    for (const Chain& gen : top.free_generators) {
      Chain moved = translated(gen, names);
      CHECK(is_cycle(y, moved));
      CHECK(!homology_class(y, moved).all_zero());
    }
  }
}

TEST_CASE("periodic split preserves all groups") {
  FaceComplex x = hypercube(3);
  PeriodicGroups pg = periodic_homology(x);
  REQUIRE(pg.even.size() == 2);
  REQUIRE(pg.odd.size() == 2);
  CHECK(pg.even[0].degree == 0);
  CHECK(pg.even[1].degree == 2);
  CHECK(pg.odd[0].degree == 1);
  CHECK(pg.odd[1].degree == 3);
  CHECK(format_group(pg.odd[1]) == "Z");
}

TEST_CASE("group formatting") {
  auto group = [](Eigen::Index rank, std::vector<Int> factors) {
    HomologyGroup g;
    g.free_rank = rank;
    g.invariant_factors = std::move(factors);
    return g;
  };
  CHECK(format_group(group(0, {})) == "0");
  CHECK(format_group(group(1, {})) == "Z");
  CHECK(format_group(group(3, {})) == "Z^3");
  CHECK(format_group(group(0, {Int(2)})) == "Z/2");
  CHECK(format_group(group(2, {Int(2), Int(4)})) == "Z^2 ⊕ Z/2 ⊕ Z/4");
}

TEST_CASE("json shapes") {
  FaceComplex x = testutil::square_fixture();
  SUBCASE("single group") {
    nlohmann::ordered_json j = group_to_json(homology_group(x, 2));
    CHECK(j["degree"] == 2);
    CHECK(j["free_rank"] == 1);
    CHECK(j["invariant_factors"].empty());
    REQUIRE(j["free_generators"].size() == 1);
    nlohmann::ordered_json gen = j["free_generators"][0];
    nlohmann::ordered_json plus = {{"v13", 1}, {"v14", -1}, {"v23", -1}, {"v24", 1}};
    nlohmann::ordered_json minus = {{"v13", -1}, {"v14", 1}, {"v23", 1}, {"v24", -1}};
    CHECK((gen == plus || gen == minus));
    CHECK(j["torsion_generators"].empty());
  }
  SUBCASE("torsion entry layout") {
    HomologyGroup g;
    g.degree = 2;
    g.torsion_generators.emplace_back(make_chain(2, {{"v13", 1}}), Int(2));
    nlohmann::ordered_json j = group_to_json(g);
    REQUIRE(j["torsion_generators"].size() == 1);
    CHECK(j["torsion_generators"][0]["order"] == 2);
    CHECK(j["torsion_generators"][0]["chain"] == nlohmann::ordered_json({{"v13", 1}}));
  }
  SUBCASE("full report") {
    nlohmann::ordered_json j = homology_report(x);
    CHECK(j["name"] == "square");
    CHECK(j["codim"] == 2);
    REQUIRE(j["groups"].size() == 3);
    for (int p = 0; p <= 2; ++p) CHECK(j["groups"][p]["degree"] == p);
  }
}
