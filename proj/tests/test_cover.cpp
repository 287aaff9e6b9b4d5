#include <doctest.h>

#include <cstdint>
#include <vector>

#include "fermatci/cover.hpp"
#include "fermatci/errors.hpp"
#include "fermatci/group.hpp"
#include "fermatci/numeric.hpp"

using namespace fermatci;

namespace {

bool same_decomposition(const Decomposition& a, const Decomposition& b) {
  if (a.n != b.n || a.r != b.r || a.modulus != b.modulus) return false;
  if (a.total != b.total || a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i].chi != b.entries[i].chi) return false;
    if (a.entries[i].eigen_dim != b.entries[i].eigen_dim) return false;
    if (a.entries[i].wedge_dim != b.entries[i].wedge_dim) return false;
  }
  return true;
}

const DecompEntry* find_entry(const Decomposition& d, const ResidueVec& chi) {
  for (const auto& e : d.entries)
    if (e.chi == chi) return &e;
  return nullptr;
}

}  // namespace

TEST_CASE("branch data: reduced covering degree and exponents") {
  BranchData b = branch_data(make_character(3, {1, 1, 1, 0}));
  CHECK(b.degree == 3);
  CHECK(b.exponents == ResidueVec{1, 1, 1, 0});
  CHECK(b.unbranched_at_infinity);

  // Common factor with the modulus divides out.
  BranchData b2 = branch_data(make_character(6, {2, 2, 2}));
  CHECK(b2.degree == 3);
  CHECK(b2.exponents == ResidueVec{1, 1, 1});

  BranchData b3 = branch_data(make_character(6, {0, 2, 4}));
  CHECK(b3.degree == 3);
  CHECK(b3.exponents == ResidueVec{0, 1, 2});
  CHECK(b3.unbranched_at_infinity);

  CHECK_THROWS_AS(branch_data(make_character(4, {0, 0, 0})), UsageError);
}

TEST_CASE("genus from the branch count: pinned values") {
  auto genus_of = [](std::int64_t d, const ResidueVec& e) {
    return genus_riemann_hurwitz(branch_data(make_character(d, e)));
  };
  CHECK(genus_of(3, {1, 1, 1, 0}) == 1);
  CHECK(genus_of(2, {1, 1, 1, 1, 1, 1}) == 2);
  CHECK(genus_of(2, {1, 1, 1, 1}) == 1);

  // Double covers with 2g branch points have genus g - 1.
  for (std::int64_t g = 2; g <= 6; ++g) {
    ResidueVec ones(static_cast<std::size_t>(2 * g), 1);
    CHECK(genus_of(2, ones) == g - 1);
  }

  BranchData degenerate;
  degenerate.degree = 1;
  degenerate.exponents = {0};
  CHECK_THROWS_AS(genus_riemann_hurwitz(degenerate), UsageError);
}

TEST_CASE("eigenspace dimension: two less than the support size") {
  CHECK(eigenspace_dimension(make_character(3, {1, 1, 1, 0})) == 1);
  CHECK(eigenspace_dimension(make_character(4, {0, 0, 0})) == 0);
  CHECK(eigenspace_dimension(make_character(2, {1, 1, 1, 1, 1, 1})) == 4);
  CHECK(eigenspace_dimension(make_character(5, {1, 4})) == 0);
}

TEST_CASE("cover summary: alternative local-term bookkeeping") {
  SUBCASE("degree-six cover where the variant disagrees") {
    CoverSummary s = cover_summary(make_character(6, {1, 2, 3}));
    CHECK(s.genus == 1);
    CHECK(s.branch_count == 3);
    REQUIRE(s.display_variant_genus.has_value());
    CHECK(*s.display_variant_genus == 0);
    CHECK_FALSE(s.display_variant_matches);
  }
  SUBCASE("degree-five cover where the variant count is odd") {
    CoverSummary s = cover_summary(make_character(5, {1, 1, 3}));
    CHECK(s.genus == 2);
    CHECK_FALSE(s.display_variant_genus.has_value());
    CHECK_FALSE(s.display_variant_matches);
  }
  SUBCASE("double covers always agree") {
    CoverSummary s = cover_summary(make_character(2, {1, 1, 1, 1}));
    CHECK(s.genus == 1);
    CHECK(s.eigen_dim == 2);
    CHECK(s.display_variant_matches);
  }
}

TEST_CASE("cover summary invariants over full character enumerations") {
  for (std::int64_t d = 2; d <= 6; ++d) {
    for_each_character(d, 3, [&](const ResidueVec& raw) {
      CharacterVec chi = make_character(d, raw);
      if (is_trivial(chi)) return;
      CoverSummary s = cover_summary(chi);
      std::int64_t support = 0;
      for (std::int64_t a : raw) support += a != 0;
      CHECK(s.branch_count == support);
      CHECK(s.eigen_dim == (support >= 2 ? support - 2 : 0));
      // A cyclic cover of the line branched over >= 3 points has positive
      // genus; over exactly 2 points it is rational.
      if (support >= 3) CHECK(s.genus >= 1);
      if (support == 2) CHECK(s.genus == 0);
      // Each isotypic piece fits inside the full degree-one cohomology.
      CHECK(s.eigen_dim <= 2 * s.genus);
      if (branch_data(chi).degree == 2) CHECK(s.display_variant_matches);
    });
  }
}

TEST_CASE("primitive decomposition: pinned tables") {
  SUBCASE("five quadrics pencil-style cell") {
    Decomposition dec = primitive_decomposition(5, 2, 2);
    CHECK(dec.total == 4);
    REQUIRE(dec.entries.size() == 1);
    CHECK(dec.entries[0].chi == ResidueVec{1, 1, 1, 1, 1, 1});
    CHECK(dec.entries[0].eigen_dim == 4);
    CHECK(dec.entries[0].wedge_dim == 4);
  }
  SUBCASE("two cubics in P^3") {
    Decomposition dec = primitive_decomposition(3, 2, 3);
    CHECK(dec.total == 20);
    REQUIRE(dec.entries.size() == 14);
    // Lexicographically first and last contributing characters.
    CHECK(dec.entries.front().chi == ResidueVec{0, 1, 1, 1});
    CHECK(dec.entries.back().chi == ResidueVec{2, 2, 2, 0});
    const DecompEntry* e1 = find_entry(dec, {0, 1, 1, 1});
    REQUIRE(e1 != nullptr);
    CHECK(e1->wedge_dim == 1);
    const DecompEntry* e2 = find_entry(dec, {1, 1, 1, 0});
    REQUIRE(e2 != nullptr);
    CHECK(e2->wedge_dim == 1);
    const DecompEntry* e3 = find_entry(dec, {1, 2, 1, 2});
    REQUIRE(e3 != nullptr);
    CHECK(e3->eigen_dim == 2);
    CHECK(e3->wedge_dim == 2);
    // Entries are in strictly ascending lexicographic order.
    for (std::size_t i = 1; i < dec.entries.size(); ++i)
      CHECK(dec.entries[i - 1].chi < dec.entries[i].chi);
  }
  SUBCASE("two quadrics in P^3") {
    Decomposition dec = primitive_decomposition(3, 2, 2);
    CHECK(dec.total == 2);
    REQUIRE(dec.entries.size() == 1);
    CHECK(dec.entries[0].chi == ResidueVec{1, 1, 1, 1});
  }
}

TEST_CASE("primitive decomposition: worker count does not change the result") {
  Decomposition serial = primitive_decomposition(4, 2, 3, 1);
  Decomposition parallel3 = primitive_decomposition(4, 2, 3, 3);
  Decomposition parallel8 = primitive_decomposition(4, 2, 3, 8);
  CHECK(same_decomposition(serial, parallel3));
  CHECK(same_decomposition(serial, parallel8));
}

TEST_CASE("primitive decomposition: totals agree with a direct scan") {
  for (std::int64_t n = 3; n <= 4; ++n) {
    for (std::int64_t r = 2; r < n; ++r) {
      for (std::int64_t d = 2; d <= 4; ++d) {
        Decomposition dec = primitive_decomposition(n, r, d);
        Int expect = 0;
        std::uint64_t visited = 0;
        for_each_character(d, n, [&](const ResidueVec& c) {
          ++visited;
          std::int64_t support = 0;
          for (std::int64_t a : c) support += a != 0;
          std::int64_t eigen = support >= 2 ? support - 2 : 0;
          expect += binomial(eigen, n - r);
        });
        CHECK(dec.total == expect);
        CHECK(visited == static_cast<std::uint64_t>(int_pow(Int(d), n).get_ui()));
        // Every materialized entry contributes a strictly positive dimension.
        for (const auto& e : dec.entries) CHECK(e.wedge_dim >= 1);
      }
    }
  }
}

TEST_CASE("primitive decomposition: precondition violations are rejected") {
  CHECK_THROWS_AS(primitive_decomposition(2, 2, 3), UsageError);
  CHECK_THROWS_AS(primitive_decomposition(4, 1, 3), UsageError);
  CHECK_THROWS_AS(primitive_decomposition(4, 4, 3), UsageError);
  CHECK_THROWS_AS(primitive_decomposition(4, 2, 1), UsageError);
}
