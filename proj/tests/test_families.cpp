#include "doctest.h"
#include "linecalc/error.hpp"
#include "linecalc/families.hpp"

using namespace linecalc;

namespace {

std::vector<std::string> printed(const CompleteIntersection& x) {
  std::vector<std::string> out;
  for (const auto& h : x.forms()) out.push_back(h.to_string());
  return out;
}

MultiPoly parse(const std::string& s, std::size_t n) {
  return parse_polynomial(s, projective_universe(n), FieldSpec::rationals());
}

}  // namespace

TEST_CASE("family spec text") {
  auto s = FamilySpec::parse("quadrics-general:N=7,r=2,c=symbolic");
  CHECK(s.n == 7);
  CHECK(s.degrees == std::vector<unsigned>{2, 2});
  CHECK(s.to_string() == "quadrics-general:N=7,r=2,c=symbolic");
  auto m = FamilySpec::parse("mixed-general:N=9,degrees=4/3,c=sampled(7)");
  CHECK(m.c_mode == CMode::Sampled);
  CHECK(m.seed == 7);
  CHECK(FamilySpec::parse(m.to_string()).to_string() == m.to_string());
  CHECK(FamilySpec::parse("hyp-4-6").to_string() == "hyp-4-6:N=6,d=4,c=symbolic");
  CHECK_THROWS_AS(FamilySpec::parse("cubic-fourfold:N=5"), Error);
  CHECK_THROWS_AS(FamilySpec::parse("hyp-general:N=7"), Error);
  CHECK_THROWS_AS(FamilySpec::parse("hyp-general:N=7,d=x"), Error);
  CHECK_THROWS_AS(FamilySpec::parse("hyp-general:N=7,d=3,c=random"), Error);
}

TEST_CASE("quadrics-general at (7,2) is the (2,2) example") {
  auto inst = build_family(FamilySpec::parse("quadrics-general:N=7,r=2"), FieldSpec::rationals());
  CHECK(inst.x.forms()[0] == parse("S*Z1 + T*Z2 + Z5*Z6", 7));
  CHECK(inst.x.forms()[1] == parse("S*Z2 + T*Z3 + Z4*Z5", 7));
}

TEST_CASE("explicit forms") {
  const auto q = FieldSpec::rationals();
  auto h46 = build_family(FamilySpec::parse("hyp-4-6"), q);
  CHECK(h46.x.forms()[0] ==
        parse("(c1*S^3 - S^2*T)*Z1 + (c2*S^3 - S*T^2)*Z2 + (c3*S^3 - T^3)*Z3 + T^2*Z4*Z5", 6));
  auto mixed = build_family(FamilySpec::parse("mixed-general:N=9,degrees=4/3"), q);
  CHECK(mixed.x.forms()[1] == parse("S^2*Z6 + S*T*Z7 + T^2*Z8", 9));
  auto ci = build_family(FamilySpec::parse("ci-4-3-P9"), q);
  CHECK(printed(ci.x) == printed(mixed.x));
  auto odd = build_family(FamilySpec::parse("hyp-general:N=8,d=3"), q);
  CHECK(odd.x.forms()[0] == parse("(c1*S^2 - S*T)*Z1 + (c2*S^2 - T^2)*Z2 + S*Z3*Z4 + T*(Z4*Z5 + Z6*Z7)", 8));
  auto even = build_family(FamilySpec::parse("hyp-general:N=7,d=3"), q);
  CHECK(even.x.forms()[0] == parse("(c1*S^2 - S*T)*Z1 + (c2*S^2 - T^2)*Z2 + T*(Z3*Z4 + Z5*Z6)", 7));
  auto quad_even = build_family(FamilySpec::parse("quadrics-general:N=8,r=3"), q);
  CHECK(quad_even.x.forms()[0] == parse("S*Z1 + T*Z2 + Z6*Z7", 8));
  CHECK(quad_even.x.forms()[1] == parse("S*Z2 + T*Z3", 8));
  CHECK(quad_even.x.forms()[2] == parse("S*Z4 + T*Z5", 8));
  auto three = build_family(FamilySpec::parse("mixed-general:N=10,degrees=3/2/2"), q);
  CHECK(three.x.forms()[0] == parse("(c1*S^2 - S*T)*Z1 + (c2*S^2 - T^2)*Z2 + S*Z3*Z4 + T*Z4*Z5", 10));
  CHECK(three.x.forms()[1] == parse("S*Z6 + T*Z7", 10));
  CHECK(three.x.forms()[2] == parse("S*Z8 + T*Z9", 10));
}

TEST_CASE("constraints") {
  const auto q = FieldSpec::rationals();
  auto kind = [&](const std::string& spec, const FieldSpec& f) {
    try {
      build_family(FamilySpec::parse(spec), f);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind("hyp-general:N=6,d=5", q) == ErrorKind::ConstraintViolated);
  CHECK(kind("hyp-general:N=6,d=2", q) == ErrorKind::ConstraintViolated);
  CHECK(kind("mixed-general:N=9,degrees=2/3", q) == ErrorKind::ConstraintViolated);
  CHECK(kind("mixed-general:N=9,degrees=4/4", q) == ErrorKind::ConstraintViolated);
  CHECK(kind("quadrics-general:N=5,r=2", q) == ErrorKind::ConstraintViolated);
  CHECK(kind("hyp-char-not-2:N=6,d=4", FieldSpec::prime(2)) == ErrorKind::CharTwoForbidden);
  CHECK(kind("ci-4-3-P9:variant=literal", q) == ErrorKind::NotHomogeneous);
  CHECK(kind("ci-4-3-P9:N=10", q) == ErrorKind::ConstraintViolated);
}

TEST_CASE("characteristic two") {
  const auto spec = FamilySpec::parse("hyp-char-not-2:N=6,d=4");
  for (auto p : {3ULL, 5ULL}) {
    CHECK(verify_family(spec, FieldSpec::prime(p)).report.verdict == Verdict::SmoothExpectedDim);
  }
  auto forced = verify_family(spec, FieldSpec::prime(2), 0, BuildOptions{true});
  CHECK(forced.report.verdict != Verdict::SmoothExpectedDim);
  CHECK(verify_family(FamilySpec::parse("hyp-general:N=6,d=4"), FieldSpec::prime(2)).report.verdict ==
        Verdict::SmoothExpectedDim);
}

TEST_CASE("every family contains the standard line") {
  for (const char* spec : {"hyp-4-6", "hyp-general:N=10,d=5", "hyp-char-not-2:N=7,d=3", "mixed-general:N=10,degrees=3/3",
                           "ci-4-3-P9", "quadrics-general:N=10,r=4"}) {
    auto inst = build_family(FamilySpec::parse(spec), FieldSpec::rationals());
    CHECK(membership_system(inst.x).contains(inst.line));
  }
}

TEST_CASE("sampled parameters") {
  const auto big = FieldSpec::prime(1000003);
  auto a = verify_family(FamilySpec::parse("hyp-4-6:c=sampled"), big, 42);
  auto b = verify_family(FamilySpec::parse("hyp-4-6:c=sampled"), big, 42);
  CHECK(a.c == b.c);
  CHECK(a.c.size() == 3);
  CHECK(a.report.verdict == Verdict::SmoothExpectedDim);
  CHECK(a.report.genericity.witness == a.c);
  auto explicit_seed = verify_family(FamilySpec::parse("hyp-4-6:c=sampled(42)"), big, 0);
  CHECK(explicit_seed.c == a.c);
  CHECK(verify_family(FamilySpec::parse("hyp-4-6:c=sampled"), FieldSpec::rationals()).report.verdict ==
        Verdict::SmoothExpectedDim);
  CHECK_THROWS_AS(verify_family(FamilySpec::parse("hyp-4-6:c=sampled"), FieldSpec::prime(7)), Error);
}

TEST_CASE("hypothesis gates") {
  auto a = hypothesis_gates(6, {4});
  CHECK(a.fano);
  CHECK(a.line_exists_iv);
  CHECK(a.product_gt_2);
  CHECK_FALSE(a.j_equals_i);
  CHECK(a.proof_case == ProofCase::NonFreeLineViaJ);
  auto b = hypothesis_gates(3, {5});
  CHECK(b.j_equals_i);
  CHECK_FALSE(b.fano);
  CHECK(b.proof_case == ProofCase::NonFreeByDegreeBound);
  auto c = hypothesis_gates(5, {2});
  CHECK_FALSE(c.product_gt_2);
  CHECK(c.proof_case == ProofCase::DegreeLE2Homogeneous);
  CHECK(proof_case_name(c.proof_case) == "DegreeLE2-Homogeneous");
  // both flags can hold together
  auto d = hypothesis_gates(4, {2, 2});
  CHECK(d.j_equals_i);
  CHECK(d.line_exists_iv);
}
