#include <doctest.h>

#include <cstdint>
#include <vector>

#include "fermatci/errors.hpp"
#include "fermatci/hodge.hpp"
#include "fermatci/numeric.hpp"
#include "fermatci/series.hpp"

using namespace fermatci;

namespace {

MultiDegree md(std::vector<std::int64_t> degrees, std::int64_t n) {
  return make_multidegree(std::move(degrees), n);
}

}  // namespace

TEST_CASE("multidegree construction sorts and validates") {
  MultiDegree x = md({3, 2}, 4);
  CHECK(x.degrees == std::vector<std::int64_t>{2, 3});
  CHECK(x.c() == 2);
  CHECK(x.m() == 2);

  CHECK_THROWS_AS(make_multidegree({}, 3), UsageError);
  CHECK_THROWS_AS(make_multidegree({1, 2}, 3), UsageError);
  CHECK_THROWS_AS(make_multidegree({2, 2, 2, 2}, 3), UsageError);
}

TEST_CASE("truncated series toolkit: pinned coefficients") {
  Series td = todd_line(1, 6);
  CHECK(td[0] == make_rat(1));
  CHECK(td[1] == make_rat(1, 2));
  CHECK(td[2] == make_rat(1, 12));
  CHECK(td[3] == make_rat(0));
  CHECK(td[4] == make_rat(-1, 720));

  Series e = exp_series(-1, 4);
  CHECK(e[0] == make_rat(1));
  CHECK(e[1] == make_rat(-1));
  CHECK(e[2] == make_rat(1, 2));
  CHECK(e[3] == make_rat(-1, 6));
  CHECK(e[4] == make_rat(1, 24));

  // (1 + h)^5 has binomial coefficients.
  Series pow5 = geometric_pow(1, 5, 5);
  for (std::size_t i = 0; i <= 5; ++i) CHECK(pow5[i] == Rat(binomial(5, static_cast<std::int64_t>(i))));

  // 1 / (1 + 3h) alternates powers of 3.
  Series inv = geometric_pow(3, -1, 4);
  Rat expect = 1;
  for (std::size_t i = 0; i <= 4; ++i) {
    CHECK(inv[i] == expect);
    expect *= -3;
  }

  // Multiplicative inverses reproduce the identity series.
  CHECK(td * td.inverse() == Series::constant(6, 1));
  CHECK(td.pow(3) == td * td * td);
}

TEST_CASE("Euler characteristics: pinned values") {
  CHECK(euler_characteristic(md({3}, 3)) == 9);
  CHECK(euler_characteristic(md({4}, 3)) == 24);
  CHECK(euler_characteristic(md({2, 2}, 5)) == 0);
  CHECK(euler_characteristic(md({3}, 4)) == -6);
}

TEST_CASE("primitive middle Betti numbers: pinned values and guard") {
  CHECK(primitive_middle_betti(md({2, 2}, 5)) == 4);
  CHECK(primitive_middle_betti(md({3, 3}, 3)) == 20);
  CHECK(primitive_middle_betti(md({2, 2}, 3)) == 2);
  CHECK(primitive_middle_betti(md({3}, 3)) == 6);
  CHECK_THROWS_AS(primitive_middle_betti(md({2, 2, 2}, 3)), UsageError);
}

TEST_CASE("twisted structure-sheaf counts from the alternating subset sum") {
  CHECK(chi_structure_sheaf_twist(md({4}, 3), 4) == 34);
  CHECK(chi_structure_sheaf_twist(md({3}, 4), 4) == 65);
  CHECK(chi_structure_sheaf_twist(md({2}, 3), 0) == 1);
  CHECK(chi_structure_sheaf_twist(md({2, 2}, 5), 0) == 1);
}

TEST_CASE("cotangent-power Euler characteristics and the middle Hodge row") {
  SUBCASE("quartic surface") {
    CHECK(chi_omega(md({4}, 3)) == std::vector<Int>{2, -20, 2});
    HodgeMiddleRow row = hodge_middle_row(md({4}, 3));
    CHECK(row.values == std::vector<Int>{1, 20, 1});
    CHECK(row.primitive == std::vector<Int>{1, 19, 1});
  }
  SUBCASE("cubic surface") {
    HodgeMiddleRow row = hodge_middle_row(md({3}, 3));
    CHECK(row.values == std::vector<Int>{0, 7, 0});
    CHECK(row.primitive == std::vector<Int>{0, 6, 0});
  }
  SUBCASE("cubic threefold") {
    HodgeMiddleRow row = hodge_middle_row(md({3}, 4));
    CHECK(row.values == std::vector<Int>{0, 5, 5, 0});
    CHECK(row.primitive == row.values);
  }
  SUBCASE("two quadrics in P^4") {
    HodgeMiddleRow row = hodge_middle_row(md({2, 2}, 4));
    CHECK(row.values == std::vector<Int>{0, 6, 0});
    CHECK(row.primitive == std::vector<Int>{0, 5, 0});
  }
  SUBCASE("two quadrics in P^5") {
    HodgeMiddleRow row = hodge_middle_row(md({2, 2}, 5));
    CHECK(row.values == std::vector<Int>{0, 2, 2, 0});
  }
}

TEST_CASE("cross-checks among the three Euler-characteristic pipelines") {
  const std::vector<MultiDegree> cases = {md({2}, 3), md({3}, 3),    md({4}, 3),
                                          md({3}, 4), md({2, 2}, 4), md({2, 2}, 5),
                                          md({2, 3}, 5)};
  for (const MultiDegree& x : cases) {
    std::vector<Int> chis = chi_omega(x);
    REQUIRE(chis.size() == static_cast<std::size_t>(x.m() + 1));

    // y = -1 specialization of the generating polynomial is topological.
    Int alt = 0;
    for (std::size_t p = 0; p < chis.size(); ++p) alt += (p % 2 == 0) ? chis[p] : -chis[p];
    CHECK(alt == euler_characteristic(x));

    // The subset sum counts chi(O) exactly when the twist clears the top
    // degree (t + n >= d_1 + ... + d_c); at t = 0 that is the small-degree
    // range.
    std::int64_t total_degree = 0;
    for (std::int64_t d : x.degrees) total_degree += d;
    if (total_degree <= x.n) CHECK(chis[0] == chi_structure_sheaf_twist(x, 0));

    // Middle-row sums match the Betti rank.
    HodgeMiddleRow row = hodge_middle_row(x);
    Int value_sum = 0, prim_sum = 0;
    for (const Int& v : row.values) value_sum += v;
    for (const Int& v : row.primitive) prim_sum += v;
    CHECK(prim_sum == primitive_middle_betti(x));
    CHECK(value_sum == primitive_middle_betti(x) + (x.m() % 2 == 0 ? 1 : 0));
  }
}

TEST_CASE("exhaustive scan for rows vanishing away from the center") {
  std::vector<MultiDegree> got = straight_polygon_scan(7, 5, 3);
  std::vector<MultiDegree> expect = {md({2}, 3),    md({2}, 4), md({2}, 5), md({2}, 6),
                                     md({2}, 7),    md({3}, 3), md({2, 2}, 4),
                                     md({2, 2}, 6)};
  CHECK(got == expect);
  CHECK_THROWS_AS(straight_polygon_scan(2, 5, 3), UsageError);
}

TEST_CASE("classification of multidegrees by their quadric prefix") {
  auto kind_of = [](std::vector<std::int64_t> degrees, std::int64_t n) {
    return classify_theorem_case(make_multidegree(std::move(degrees), n));
  };

  Classification a = classify_theorem_case(md({3, 5}, 6));
  CHECK(a.kind == TheoremCase::covered_main_theorem);
  CHECK(a.reduced_degree == 3);
  CHECK(a.reduced_count == 1);

  CHECK(kind_of({2, 3, 4}, 6).kind == TheoremCase::open_per_remark);
  CHECK(kind_of({3}, 2).kind == TheoremCase::excluded_plane_cubic);
  CHECK(kind_of({2}, 4).kind == TheoremCase::hyperquadric);
  CHECK(kind_of({2, 2}, 6).kind == TheoremCase::two_quadrics);
  CHECK(kind_of({2, 2, 2}, 7).kind == TheoremCase::covered_main_theorem);
  CHECK(kind_of({2, 2, 5}, 6).kind == TheoremCase::open_per_remark);

  Classification b = classify_theorem_case(md({2, 2, 5}, 6));
  CHECK(b.reduced_degree == 2);
  CHECK(b.reduced_count == 2);

  CHECK(to_string(TheoremCase::covered_main_theorem) == "covered_main_theorem");
  CHECK(to_string(TheoremCase::excluded_plane_cubic) == "excluded_plane_cubic");
  CHECK(to_string(TheoremCase::hyperquadric) == "hyperquadric");
  CHECK(to_string(TheoremCase::two_quadrics) == "two_quadrics");
  CHECK(to_string(TheoremCase::open_per_remark) == "open_per_remark");
}
