#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "fermatci/cover.hpp"
#include "fermatci/errors.hpp"
#include "fermatci/faithful.hpp"
#include "fermatci/group.hpp"
#include "fermatci/numeric.hpp"
#include "fermatci/perm.hpp"

using namespace fermatci;

namespace {

bool has_diagnostic_containing(const FaithfulnessCertificate& cert, const std::string& needle) {
  return std::any_of(cert.diagnostics.begin(), cert.diagnostics.end(),
                     [&](const std::string& d) { return d.find(needle) != std::string::npos; });
}

// Independent re-check that a claimed witness is invisible to every character
// with positive wedge dimension.
void check_witness_annihilated(std::int64_t n, std::int64_t r, std::int64_t d,
                               const GroupElement& witness) {
  CHECK_FALSE(is_identity(witness));
  for_each_character(d, n, [&](const ResidueVec& a) {
    CharacterVec chi = make_character(d, a);
    if (binomial(eigenspace_dimension(chi), n - r) == 0) return;
    CHECK(evaluate_character(chi, witness) == 0);
  });
}

}  // namespace

TEST_CASE("degree-two verdicts: pencil in odd projective dimension fails") {
  SUBCASE("n = 5, r = 2 is not faithful") {
    FaithfulnessCertificate cert = quadric_verdict(5, 2);
    CHECK(cert.verdict == Verdict::not_faithful);
    CHECK(cert.mode == "quadric");
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness->entries == ResidueVec{0, 1, 1, 0, 0, 0});
    CHECK(has_diagnostic_containing(cert, "unique contributing character"));
    validate_certificate(cert);
    check_witness_annihilated(5, 2, 2, *cert.witness);
  }
  SUBCASE("n = 5, r = 3 is faithful") {
    FaithfulnessCertificate cert = quadric_verdict(5, 3);
    CHECK(cert.verdict == Verdict::faithful);
    // Pair-zero family: one character per position pair.
    CHECK(cert.separating_set.size() == 15);
    CHECK(cert.kernel.is_diagonal);
    validate_certificate(cert);
  }
  SUBCASE("n = 4, r = 2 is faithful via single-zero characters") {
    FaithfulnessCertificate cert = quadric_verdict(4, 2);
    CHECK(cert.verdict == Verdict::faithful);
    CHECK(cert.separating_set.size() == 5);
    validate_certificate(cert);
  }
}

TEST_CASE("certificates for d >= 3: pinned parameter choices") {
  SUBCASE("n = 3, r = 2, d = 3 uses the minimal parameters") {
    FaithfulnessCertificate cert = faithfulness_certificate(3, 2, 3);
    CHECK(cert.verdict == Verdict::faithful);
    CHECK(cert.mode == "star");
    REQUIRE(cert.star.has_value());
    CHECK(*cert.star == StarParams{0, 0, 1});
    REQUIRE(cert.separating_set.size() == 4);
    CHECK(cert.separating_set[0].chi.entries == ResidueVec{1, 1, 1, 0});
    CHECK(cert.separating_set[1].chi.entries == ResidueVec{0, 1, 1, 1});
    CHECK(cert.separating_set[2].chi.entries == ResidueVec{1, 0, 1, 1});
    CHECK(cert.separating_set[3].chi.entries == ResidueVec{1, 1, 0, 1});
    for (const auto& e : cert.separating_set) CHECK(e.wedge_dim == 1);
    CHECK(has_diagnostic_containing(cert, "pencil subcase"));
    CHECK_FALSE(has_diagnostic_containing(cert, "vanishing wedge dimension"));
    validate_certificate(cert);
  }
  SUBCASE("n = 4, r = 2, d = 3 needs the parameter fallback") {
    FaithfulnessCertificate cert = faithfulness_certificate(4, 2, 3);
    CHECK(cert.verdict == Verdict::faithful);
    REQUIRE(cert.star.has_value());
    CHECK(cert.star->k == 2);
    CHECK(cert.star->s == 2);
    CHECK(cert.star->t == 1);
    CHECK(has_diagnostic_containing(cert, "vanishing wedge dimension"));
    CHECK(has_diagnostic_containing(cert, "t = 1, s = 2"));
    validate_certificate(cert);
  }
  SUBCASE("n = 5, r = 2, d = 4 skips an inadmissible shift during fallback") {
    FaithfulnessCertificate cert = faithfulness_certificate(5, 2, 4);
    REQUIRE(cert.star.has_value());
    CHECK(cert.star->k == 3);
    CHECK(cert.star->s == 2);
    CHECK(cert.star->t == 2);
    CHECK(has_diagnostic_containing(cert, "t = 2, s = 2"));
    validate_certificate(cert);
  }
  SUBCASE("n = 4, r = 3, d = 3 works with minimal parameters, no fallback") {
    FaithfulnessCertificate cert = faithfulness_certificate(4, 3, 3);
    REQUIRE(cert.star.has_value());
    CHECK(*cert.star == StarParams{2, 0, 0});
    CHECK_FALSE(has_diagnostic_containing(cert, "vanishing wedge dimension"));
    validate_certificate(cert);
  }
  SUBCASE("precondition violations") {
    CHECK_THROWS_AS(faithfulness_certificate(2, 2, 3), UsageError);
    CHECK_THROWS_AS(faithfulness_certificate(4, 1, 3), UsageError);
    CHECK_THROWS_AS(faithfulness_certificate(4, 4, 3), UsageError);
    CHECK_THROWS_AS(faithfulness_certificate(4, 2, 1), UsageError);
  }
}

TEST_CASE("brute-force oracle: pinned witnesses and guard") {
  SUBCASE("two quadrics in P^3") {
    BruteForceResult res = brute_force_faithful(3, 2, 2);
    CHECK(res.verdict == Verdict::not_faithful);
    CHECK(res.contributing_characters == 1);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->entries == ResidueVec{0, 0, 1, 1});
    check_witness_annihilated(3, 2, 2, *res.witness);
  }
  SUBCASE("two quadrics in P^5") {
    BruteForceResult res = brute_force_faithful(5, 2, 2);
    CHECK(res.verdict == Verdict::not_faithful);
    CHECK(res.contributing_characters == 1);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->entries == ResidueVec{0, 0, 0, 0, 1, 1});
  }
  SUBCASE("two cubics in P^3") {
    BruteForceResult res = brute_force_faithful(3, 2, 3);
    CHECK(res.verdict == Verdict::faithful);
    CHECK(res.contributing_characters == 14);
    CHECK_FALSE(res.witness.has_value());
  }
  SUBCASE("enumeration guard") {
    CHECK_THROWS_AS(brute_force_faithful(8, 2, 7), UsageError);
  }
}

TEST_CASE("certificate and brute force agree across the small grid") {
  for (std::int64_t n = 3; n <= 5; ++n) {
    for (std::int64_t r = 2; r < n; ++r) {
      for (std::int64_t d = 2; d <= 4; ++d) {
        CAPTURE(n);
        CAPTURE(r);
        CAPTURE(d);
        FaithfulnessCertificate cert = faithfulness_certificate(n, r, d);
        BruteForceResult brute = brute_force_faithful(n, r, d, 2);
        CHECK(cert.verdict == brute.verdict);
        validate_certificate(cert);
        const bool expect_bad = (d == 2 && r == 2 && (n % 2) == 1);
        CHECK((cert.verdict == Verdict::not_faithful) == expect_bad);
        if (brute.witness) check_witness_annihilated(n, r, d, *brute.witness);
      }
    }
  }
}

TEST_CASE("permutation witnesses: pinned values") {
  Perm swap01_4(std::vector<int>{1, 0, 2, 3});
  CharacterVec w = permutation_witness(3, 2, 3, swap01_4);
  CHECK(w.entries == ResidueVec{0, 1, 1, 1});

  Perm swap01_5(std::vector<int>{1, 0, 2, 3, 4});
  CharacterVec w2 = permutation_witness(4, 3, 2, swap01_5);
  CHECK(w2.entries == ResidueVec{0, 1, 1, 1, 1});

  CHECK_THROWS_AS(permutation_witness(3, 2, 3, Perm::identity(4)), UsageError);
  CHECK_THROWS_AS(permutation_witness(3, 2, 3, swap01_5), UsageError);
}

TEST_CASE("every non-identity coordinate permutation moves some contributing character") {
  for (std::int64_t n = 3; n <= 4; ++n) {
    for (std::int64_t r = 2; r < n; ++r) {
      for (std::int64_t d = 2; d <= 3; ++d) {
        // The degenerate pencil cell has the symmetric all-ones tuple as its
        // only contributing character, so nothing is ever moved there.
        if (n == 3 && r == 2 && d == 2) continue;
        Perm tau = Perm::identity(static_cast<int>(n + 1));
        while (tau.next()) {
          CharacterVec w = permutation_witness(n, r, d, tau);
          CHECK(binomial(eigenspace_dimension(w), n - r) >= 1);
          CHECK_FALSE(conjugate_character(w, tau) == w);
        }
      }
    }
  }

  // In the degenerate cell the search is exhausted for every permutation.
  Perm tau = Perm::identity(4);
  while (tau.next()) CHECK_THROWS_AS(permutation_witness(3, 2, 2, tau), CheckFailure);
}
