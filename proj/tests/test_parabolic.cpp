#include <random>

#include "doctest.h"
#include "embedlie/error.hpp"
#include "embedlie/parabolic.hpp"
#include "oracles.hpp"

using namespace embedlie;

namespace {

// Levi dimension and R_u(P) dimension from the Weyl-orbit oracle.
std::pair<std::int64_t, std::int64_t> oracle_dims(const SimpleType& t, const NodeSet& kept) {
  std::vector<int> nodes;
  for (int label : kept.labels()) nodes.push_back(label - 1);
  const auto levi_roots = oracle::positive_roots_by_weyl_orbit(cartan_matrix(t), nodes);
  const auto all = oracle::positive_roots_by_weyl_orbit(t);
  std::int64_t outside = 0;
  for (const auto& r : all) {
    for (int i = 0; i < t.rank(); ++i) {
      if (r[static_cast<std::size_t>(i)] != 0 && !kept.contains_index(i)) {
        ++outside;
        break;
      }
    }
  }
  return {static_cast<std::int64_t>(nodes.size() + 2 * levi_roots.size()), outside};
}

}  // namespace

TEST_CASE("NodeSet conversions and errors") {
  const SimpleType b4{Family::B, 4};
  const auto kept = NodeSet::deleted(b4, {2});
  CHECK(kept.labels() == std::vector<int>{1, 3, 4});
  CHECK(kept.deleted_labels() == std::vector<int>{2});
  CHECK(NodeSet::kept(b4, {4, 1, 3}) == kept);
  CHECK(NodeSet::from_mask(b4, 0b1101) == kept);
  CHECK(NodeSet::all(b4).size() == 4);
  CHECK(NodeSet::none(b4).size() == 0);
  CHECK_THROWS_AS(NodeSet::deleted(b4, {5}), InvalidInput);
  CHECK_THROWS_AS(NodeSet::kept(b4, {0}), InvalidInput);
  CHECK_THROWS_AS(NodeSet::kept(b4, {1, 1}), InvalidInput);
  CHECK_THROWS_AS(levi_ss_dim(SimpleType{Family::A, 3}, kept), InvalidInput);
}

TEST_CASE("levi_ss_dim examples") {
  const SimpleType b4{Family::B, 4};
  CHECK(levi_ss_dim(b4, NodeSet::deleted(b4, {2})) == 13);
  CHECK(levi_ss_dim(b4, NodeSet::none(b4)) == 0);
  CHECK(levi_ss_dim(SimpleType{Family::E, 7}, NodeSet::none({Family::E, 7})) == 0);
  const SimpleType a3{Family::A, 3};
  CHECK(levi_ss_dim(a3, NodeSet::all(a3)) == 15);
}

TEST_CASE("unipotent_radical_dim examples") {
  const SimpleType b4{Family::B, 4};
  const auto kept = NodeSet::deleted(b4, {2});
  CHECK(unipotent_radical_dim(b4, kept) == 11);
  CHECK(oracle_dims(b4, kept).second == 11);
  CHECK(unipotent_radical_dim(b4, NodeSet::all(b4)) == 0);
  const SimpleType a1{Family::A, 1};
  CHECK(unipotent_radical_dim(a1, NodeSet::none(a1)) == 1);
}

TEST_CASE("parabolic_profile examples") {
  {
    const SimpleType b4{Family::B, 4};
    const auto p = parabolic_profile(b4, NodeSet::deleted(b4, {2}));
    CHECK(p.dim_G == 36);
    CHECK(p.dim_levi_ss == 13);
    CHECK(p.dim_unip_rad == 11);
    CHECK(p.dim_P == 25);
    CHECK(p.dim_Pu == 24);
    CHECK(p.codim_count == 1);
  }
  {
    const SimpleType g2{Family::G, 2};
    const auto p = parabolic_profile(g2, NodeSet::deleted(g2, {1}));
    CHECK(p.dim_G == 14);
    CHECK(p.dim_levi_ss == 3);
    CHECK(p.dim_unip_rad == 5);
    CHECK(p.dim_P == 9);
    CHECK(p.dim_Pu == 8);
  }
  {
    const SimpleType a1{Family::A, 1};
    const auto p = parabolic_profile(a1, NodeSet::none(a1));
    CHECK(p.dim_G == 3);
    CHECK(p.dim_levi_ss == 0);
    CHECK(p.dim_unip_rad == 1);
    CHECK(p.dim_P == 2);
    CHECK(p.dim_Pu == 1);
  }
}

TEST_CASE("identities and oracle agreement for every parabolic up to rank 8") {
  for (const auto& t : all_types(8)) {
    CAPTURE(t.name());
    const RootSystem sys(t);
    const std::uint64_t full = (std::uint64_t{1} << t.rank()) - 1;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
      const auto kept = NodeSet::from_mask(t, mask);
      const auto p = parabolic_profile(sys, kept);
      CHECK(p.dim_P == p.dim_G - p.dim_unip_rad);
      CHECK(p.dim_Pu == p.dim_levi_ss + p.dim_unip_rad);
      CHECK(p.dim_P - p.dim_Pu == t.rank() - static_cast<std::int64_t>(kept.size()));
      CHECK(p.dim_levi_ss == levi_dim_by_classification(t, kept));
      if (t.rank() <= 6 || mask % 17 == 0) {
        const auto [levi, unip] = oracle_dims(t, kept);
        CHECK(p.dim_levi_ss == levi);
        CHECK(p.dim_unip_rad == unip);
      }
    }
  }
}

TEST_CASE("maximal parabolics have dim P - dim P^u = 1") {
  for (const auto& t : all_types(12)) {
    const RootSystem sys(t);
    for (int s = 1; s <= t.rank(); ++s) {
      const auto p = parabolic_profile(sys, NodeSet::deleted(t, {s}));
      CHECK(p.dim_P - p.dim_Pu == 1);
      CHECK(p.dim_G == p.dim_unip_rad + p.dim_P);
    }
  }
}

TEST_CASE("monotonicity in the kept set") {
  std::mt19937_64 rng(11);
  for (const auto& t : all_types(8)) {
    const RootSystem sys(t);
    const std::uint64_t full = (std::uint64_t{1} << t.rank()) - 1;
    std::uniform_int_distribution<std::uint64_t> pick(0, full);
    for (int trial = 0; trial < 40; ++trial) {
      const std::uint64_t big = pick(rng);
      const std::uint64_t small = big & pick(rng);
      const auto I = NodeSet::from_mask(t, small);
      const auto J = NodeSet::from_mask(t, big);
      REQUIRE(I.subset_of(J));
      CHECK(unipotent_radical_dim(sys, I) >= unipotent_radical_dim(sys, J));
      CHECK(levi_ss_dim(sys, I) <= levi_ss_dim(sys, J));
    }
  }
}

TEST_CASE("Levi components of the subdiagram") {
  auto comps = [](Family f, int n, std::vector<int> deleted) {
    const SimpleType t{f, n};
    return format_components(levi_components(t, NodeSet::deleted(t, std::move(deleted))));
  };
  CHECK(comps(Family::B, 4, {2}) == "A1 x B2");
  CHECK(comps(Family::D, 4, {2}) == "A1 x A1 x A1");
  CHECK(comps(Family::D, 6, {1}) == "D5");
  CHECK(comps(Family::D, 6, {2}) == "A1 x D4");
  CHECK(comps(Family::D, 5, {2}) == "A1 x A3");
  CHECK(comps(Family::D, 5, {4}) == "A4");
  CHECK(comps(Family::E, 6, {4}) == "A1 x A2 x A2");
  CHECK(comps(Family::E, 7, {7}) == "E6");
  CHECK(comps(Family::E, 8, {1}) == "D7");
  CHECK(comps(Family::E, 8, {8}) == "E7");
  CHECK(comps(Family::F, 4, {1}) == "C3");
  CHECK(comps(Family::F, 4, {4}) == "B3");
  CHECK(comps(Family::C, 5, {2}) == "A1 x C3");
  CHECK(comps(Family::C, 4, {2}) == "A1 x B2");
  CHECK(comps(Family::B, 10, {6}) == "A5 x B4");
  CHECK(comps(Family::G, 2, {1, 2}) == "1");
}
