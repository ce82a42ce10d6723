#include <random>

#include "doctest.h"
#include "linecalc/curves.hpp"
#include "linecalc/error.hpp"
#include "linecalc/grass.hpp"
#include "test_util.hpp"

using namespace linecalc;

namespace {

CompleteIntersection make_x(const FieldSpec& f, std::size_t n, std::vector<unsigned> degrees,
                            const std::vector<std::string>& forms) {
  std::vector<MultiPoly> polys;
  for (const auto& s : forms) polys.push_back(parse_polynomial(s, projective_universe(n), f));
  return CompleteIntersection(f, n, std::move(degrees), std::move(polys));
}

ExactMatrix int_matrix(const FieldSpec& f, std::vector<std::vector<long long>> rows) {
  return ExactMatrix::from_ints(f, rows);
}

}  // namespace

TEST_CASE("line parameterization") {
  const auto q = FieldSpec::rationals();
  auto c = line_param(LineChartPoint::origin(q, 4));
  CHECK(c.degree() == 1);
  CHECK(c.components()[2].is_zero());
  auto p = LineChartPoint::from_ints(q, {1, 0}, {0, 1});
  auto d = line_param(p);
  CHECK(d.components()[2] == BinaryForm::from_ints(q, {1, 0}));
  CHECK(d.components()[3] == BinaryForm::from_ints(q, {0, 1}));
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(d.components()[2 + j].coeff(0).constant_value() == p.a[j]);
    CHECK(d.components()[2 + j].coeff(1).constant_value() == p.b[j]);
  }
}

TEST_CASE("membership system of the (4,6) form") {
  const auto q = FieldSpec::rationals();
  auto x = make_x(q, 6, {4}, {"(c1*S^3 - S^2*T)*Z1 + (c2*S^3 - S*T^2)*Z2 + (c3*S^3 - T^3)*Z3 + T^2*Z4*Z5"});
  auto sys = membership_system(x);
  CHECK(sys.count() == 5);
  CHECK(sys.polys[0][0] == parse_polynomial("c1*a1 + c2*a2 + c3*a3", chart_universe(6), q));
  CHECK(sys.contains(LineChartPoint::origin(q, 6)));
  CHECK_THROWS_AS(make_x(q, 6, {4}, {"S*Z1"}), Error);
}

TEST_CASE("M(h) of the worked examples") {
  const auto q = FieldSpec::rationals();
  auto x = make_x(q, 6, {4}, {"(c1*S^3 - S^2*T)*Z1 + (c2*S^3 - S*T^2)*Z2 + (c3*S^3 - T^3)*Z3 + T^2*Z4*Z5"});
  auto m = nonfree_matrix(x);
  auto cu = chart_universe(6);
  const std::vector<std::vector<std::string>> expected{{"c1", "-1", "0", "0"}, {"c2", "0", "-1", "0"},
                                                       {"c3", "0", "0", "-1"}, {"0", "0", "a5", "b5"},
                                                       {"0", "0", "a4", "b4"}};
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(m.symbolic(i, j) == parse_polynomial(expected[i][j], cu, q));
  }
  auto y = make_x(q, 7, {2, 2}, {"S*Z1 + T*Z2 + Z5*Z6", "S*Z2 + T*Z3 + Z4*Z5"});
  auto m2 = nonfree_matrix(y);
  auto cu7 = chart_universe(7);
  const std::vector<std::vector<std::string>> expected2{{"1", "0", "0", "0"},   {"0", "1", "1", "0"},
                                                        {"0", "0", "0", "1"},   {"0", "0", "a5", "b5"},
                                                        {"a6", "b6", "a4", "b4"}, {"a5", "b5", "0", "0"}};
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(m2.symbolic(i, j) == parse_polynomial(expected2[i][j], cu7, q));
  }
  auto quadric = make_x(q, 3, {2}, {"S*Z1 + T*Z2"});
  auto m3 = nonfree_matrix(quadric, LineChartPoint::origin(q, 3));
  REQUIRE(m3.evaluated());
  CHECK(*m3.evaluated() == int_matrix(q, {{1, 0}, {0, 1}}));
  CHECK(rank_exact(*m3.evaluated()).rank == 2);
  CHECK_THROWS_AS(nonfree_matrix(quadric, LineChartPoint::from_ints(q, {1, 0}, {0, 0})), Error);
}

TEST_CASE("smoothness along a line") {
  const auto q = FieldSpec::rationals();
  auto quadric = make_x(q, 3, {2}, {"S*Z1 + T*Z2"});
  CHECK(is_smooth_along_line(quadric, LineChartPoint::origin(q, 3)));
  auto plane = make_x(q, 3, {2}, {"Z1^2"});
  CHECK_FALSE(is_smooth_along_line(plane, LineChartPoint::origin(q, 3)));
  // Fermat quintic line (s : -s : t : -t) after moving Z1 into the second slot
  const auto f7 = FieldSpec::prime(7);
  auto quintic = make_x(f7, 3, {5}, {"S^5 + T^5 + Z1^5 + Z2^5"});
  const std::vector<std::size_t> perm{0, 2, 1, 3};
  auto moved = quintic.permuted(perm);
  auto point = LineChartPoint::from_ints(f7, {-1, 0}, {0, -1});
  CHECK(membership_system(moved).contains(point));
  CHECK(is_smooth_along_line(moved, point));
  CHECK_THROWS_AS(is_smooth_along_line(quintic, LineChartPoint::origin(f7, 3)), Error);
}

TEST_CASE("line censuses over finite fields") {
  CHECK(enumerate_all_lines_fq(FieldSpec::prime(2), 3).size() == 35);
  CHECK(enumerate_all_lines_fq(FieldSpec::prime(3), 3).size() == 130);
  const auto f3 = FieldSpec::prime(3);
  auto quadric = make_x(f3, 3, {2}, {"S*Z1 + T*Z2"});
  CHECK(enumerate_lines_fq(quadric).size() == 8);
  const auto f7 = FieldSpec::prime(7);
  auto cubic = make_x(f7, 3, {3}, {"S^3 + T^3 + Z1^3 + Z2^3"});
  auto lines = enumerate_lines_fq(cubic);
  CHECK(lines.size() == 27);
  CHECK(std::is_sorted(lines.begin(), lines.end(), canonical_less));
  for (const auto& line : lines) {
    auto view = move_line_to_chart(cubic, line);
    CHECK(membership_system(view.x).contains(view.point));
  }
  CHECK_THROWS_AS(enumerate_lines_fq(make_x(FieldSpec::rationals(), 3, {2}, {"S*Z1"})), Error);
}

TEST_CASE("derivative identities along the chart") {
  std::mt19937_64 rng(4);
  const std::size_t n = 4;
  for (auto f : test_fields()) {
    auto u = projective_universe(n);
    auto lu = line_universe(n);
    std::vector<MultiPoly> xi{MultiPoly::variable(lu, f, 0), MultiPoly::variable(lu, f, 1)};
    for (std::size_t j = 0; j + 1 < n; ++j) {
      xi.push_back(MultiPoly::variable(lu, f, 0) * MultiPoly::variable(lu, f, 2 + j) +
                   MultiPoly::variable(lu, f, 1) * MultiPoly::variable(lu, f, 1 + n + j));
    }
    for (int trial = 0; trial < 100; ++trial) {
      MultiPoly h = random_form(u, f, 1 + rng() % 4, rng);
      MultiPoly composed = substitute(h, xi);
      for (std::size_t j = 0; j + 1 < n; ++j) {
        MultiPoly hz = substitute(differentiate(h, 2 + j), xi);
        CHECK(differentiate(composed, 2 + j) == xi[0] * hz);
        CHECK(differentiate(composed, 1 + n + j) == xi[1] * hz);
      }
    }
  }
}

TEST_CASE("membership count") {
  std::mt19937_64 rng(6);
  const auto f = FieldSpec::prime(5);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 3 + rng() % 3;
    std::vector<unsigned> degrees{1 + static_cast<unsigned>(rng() % 3), 1 + static_cast<unsigned>(rng() % 3)};
    std::vector<MultiPoly> forms;
    for (auto d : degrees) forms.push_back(random_form(projective_universe(n), f, d, rng));
    CompleteIntersection x(f, n, degrees, forms);
    CHECK(membership_system(x).count() == degrees[0] + degrees[1] + 2);
  }
}

TEST_CASE("forms vanishing on a line have codimension d+1") {
  const auto q = FieldSpec::rationals();
  for (std::size_t n = 2; n <= 6; ++n) {
    auto u = projective_universe(n);
    for (unsigned d = 1; d <= 5; ++d) {
      // all monomials of degree d in N+1 variables
      std::vector<MultiPoly> monomials;
      Exponents e(n + 1, 0);
      e[0] = static_cast<std::uint16_t>(d);
      for (;;) {
        MultiPoly m(u, q);
        m.add_term(e, ParamScalar::constant(q, 1));
        monomials.push_back(m);
        // next composition of d into n+1 parts
        std::size_t k = 0;
        while (k < n && e[k] == 0) ++k;
        if (k == n) break;
        const auto v = e[k];
        e[k] = 0;
        e[0] = static_cast<std::uint16_t>(v - 1);
        ++e[k + 1];
      }
      ExactMatrix m(q, d + 1, monomials.size());
      const auto origin = LineChartPoint::origin(q, n).chart_point();
      for (std::size_t c = 0; c < monomials.size(); ++c) {
        auto coeffs = chart_expansion(monomials[c], d);
        for (unsigned k = 0; k <= d; ++k) m(k, c) = coeffs[k].evaluate(origin);
      }
      long long total = 1;
      for (unsigned k = 1; k <= d; ++k) total = total * static_cast<long long>(n + k) / k;
      CHECK(static_cast<long long>(monomials.size()) == total);
      CHECK(static_cast<long long>(kernel_basis(m).size()) == total - (d + 1));
    }
  }
}

TEST_CASE("scaling and Z-permutation invariance") {
  std::mt19937_64 rng(8);
  const auto f = FieldSpec::prime(5);
  auto x = make_x(f, 5, {2, 2}, {"S*Z1 + T*Z2 + Z3*Z4 + 2*S*Z3", "S*Z2 - T*Z3 + Z4^2 + T*Z1"});
  auto base = LineChartPoint::origin(f, 5);
  auto scaled = x.scaled(std::vector<Scalar>{Scalar::from_int(f, 2), Scalar::from_int(f, 3)});
  CHECK(membership_system(scaled).contains(base));
  CHECK(rank_exact(*nonfree_matrix(scaled, base).evaluated()).rank ==
        rank_exact(*nonfree_matrix(x, base).evaluated()).rank);
  CHECK(is_smooth_along_line(scaled, base) == is_smooth_along_line(x, base));
  // permute Z1..Z4 and the chart columns the same way
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::size_t> zperm{0, 1, 2, 3};
    std::shuffle(zperm.begin(), zperm.end(), rng);
    std::vector<std::size_t> full{0, 1};
    for (auto k : zperm) full.push_back(k + 2);
    auto px = x.permuted(full);
    auto pb = base.permuted_z(zperm);
    CHECK(membership_system(px).contains(pb));
    CHECK(rank_exact(*nonfree_matrix(px, pb).evaluated()).rank == rank_exact(*nonfree_matrix(x, base).evaluated()).rank);
    CHECK(is_smooth_along_line(px, pb) == is_smooth_along_line(x, base));
    CHECK(normal_splitting_line(px, pb) == normal_splitting_line(x, base));
  }
}
