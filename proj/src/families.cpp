#include "linecalc/families.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <random>

#include "linecalc/error.hpp"

namespace linecalc {

namespace {

constexpr std::uint64_t kRationalSampleRange = 1000003;

unsigned parse_unsigned(std::string_view key, std::string_view text) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::ParseError, "bad value '" + std::string(text) + "' for " + std::string(key));
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

void require(bool ok, const std::string& condition) {
  if (!ok) throw Error(ErrorKind::ConstraintViolated, "constraint violated: " + condition);
}

// Builder for forms in S, T, Z1..Z{N-1} with parameters c_j.
struct Forms {
  UniversePtr u;
  FieldSpec f;

  MultiPoly s() const { return MultiPoly::variable(u, f, 0); }
  MultiPoly t() const { return MultiPoly::variable(u, f, 1); }
  MultiPoly z(std::size_t j) const { return MultiPoly::variable(u, f, 1 + j); }
  MultiPoly zero() const { return MultiPoly(u, f); }
  MultiPoly c(std::size_t j) const { return MultiPoly::constant(u, ParamScalar::parameter(f, j)); }
  // Z_a Z_{a+1} + Z_{a+2} Z_{a+3} + ... + Z_{b-1} Z_b
  MultiPoly pairs(std::size_t a, std::size_t b) const {
    MultiPoly p = zero();
    for (std::size_t j = a; j + 1 <= b; j += 2) p += z(j) * z(j + 1);
    return p;
  }
  // sum_{j<d} (c_j S^{d-1} - S^{d-j-1} T^j) Z_j
  MultiPoly functional_part(unsigned d) const {
    MultiPoly p = zero();
    for (unsigned j = 1; j < d; ++j) p += (c(j) * s().pow(d - 1) - s().pow(d - j - 1) * t().pow(j)) * z(j);
    return p;
  }
  // the generic tail T^{d-2}(...) on Z_d..Z_last, split by the parity of last - d + 1
  MultiPoly pairing_tail(unsigned d, std::size_t last) const {
    const std::size_t count = last + 1 - d;
    if (count % 2 == 0) return t().pow(d - 2) * pairs(d, last);
    return s() * t().pow(d - 3) * z(d) * z(d + 1) + t().pow(d - 2) * pairs(d + 1, last);
  }
};

CompleteIntersection hypersurface_general(const Forms& b, std::size_t n, unsigned d) {
  return CompleteIntersection(b.f, n, {d}, {b.functional_part(d) + b.pairing_tail(d, n - 1)});
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  FamilySpec spec;
  const auto colon = text.find(':');
  spec.name = std::string(text.substr(0, colon));
  static const std::vector<std::string> names{"hyp-4-6",       "hyp-general", "hyp-char-not-2",
                                              "mixed-general", "ci-4-3-P9",   "quadrics-general"};
  if (std::find(names.begin(), names.end(), spec.name) == names.end()) {
    throw Error(ErrorKind::ParseError, "unknown family '" + spec.name + "'");
  }
  std::optional<unsigned> d, r;
  std::optional<std::vector<unsigned>> degrees;
  if (colon != std::string_view::npos && colon + 1 < text.size()) {
    for (auto item : split(text.substr(colon + 1), ',')) {
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) throw Error(ErrorKind::ParseError, "expected key=value, got '" + std::string(item) + "'");
      const auto key = item.substr(0, eq);
      const auto value = item.substr(eq + 1);
      if (key == "N") {
        spec.n = parse_unsigned(key, value);
      } else if (key == "d") {
        d = parse_unsigned(key, value);
      } else if (key == "r") {
        r = parse_unsigned(key, value);
      } else if (key == "degrees") {
        degrees.emplace();
        for (auto part : split(value, '/')) degrees->push_back(parse_unsigned(key, part));
      } else if (key == "c") {
        if (value == "symbolic") {
          spec.c_mode = CMode::Symbolic;
        } else if (value == "sampled") {
          spec.c_mode = CMode::Sampled;
        } else if (value.starts_with("sampled(") && value.ends_with(")")) {
          spec.c_mode = CMode::Sampled;
          spec.seed = parse_unsigned(key, value.substr(8, value.size() - 9));
        } else {
          throw Error(ErrorKind::ParseError, "c must be symbolic, sampled or sampled(seed)");
        }
      } else if (key == "variant") {
        spec.variant = std::string(value);
        if (spec.variant != "literal" && spec.variant != "homogeneous") {
          throw Error(ErrorKind::ParseError, "variant must be literal or homogeneous");
        }
      } else {
        throw Error(ErrorKind::ParseError, "unknown key '" + std::string(key) + "'");
      }
    }
  }
  if (spec.name == "hyp-4-6") {
    if (spec.n == 0) spec.n = 6;
    spec.degrees = {d.value_or(4)};
  } else if (spec.name == "ci-4-3-P9") {
    if (spec.n == 0) spec.n = 9;
    spec.degrees = degrees.value_or(std::vector<unsigned>{4, 3});
    if (spec.variant.empty()) spec.variant = "homogeneous";
  } else if (spec.name == "hyp-general" || spec.name == "hyp-char-not-2") {
    if (!d) throw Error(ErrorKind::ParseError, spec.name + " needs d");
    spec.degrees = {*d};
  } else if (spec.name == "mixed-general") {
    if (!degrees) throw Error(ErrorKind::ParseError, "mixed-general needs degrees");
    spec.degrees = *degrees;
  } else {
    if (!r) throw Error(ErrorKind::ParseError, "quadrics-general needs r");
    spec.degrees.assign(*r, 2);
  }
  if (spec.n == 0) throw Error(ErrorKind::ParseError, spec.name + " needs N");
  if (!spec.variant.empty() && spec.name != "ci-4-3-P9") {
    throw Error(ErrorKind::ParseError, "variant only applies to ci-4-3-P9");
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string s = name + ":N=" + std::to_string(n);
  if (name == "quadrics-general") {
    s += ",r=" + std::to_string(degrees.size());
  } else if (name == "mixed-general" || name == "ci-4-3-P9") {
    s += ",degrees=";
    for (std::size_t i = 0; i < degrees.size(); ++i) s += (i ? "/" : "") + std::to_string(degrees[i]);
  } else {
    s += ",d=" + std::to_string(degrees.at(0));
  }
  if (!variant.empty()) s += ",variant=" + variant;
  if (c_mode == CMode::Symbolic) {
    s += ",c=symbolic";
  } else {
    s += seed ? ",c=sampled(" + std::to_string(*seed) + ")" : ",c=sampled";
  }
  return s;
}

FamilyInstance build_family(const FamilySpec& spec, const FieldSpec& field, const BuildOptions& options) {
  const std::size_t n = spec.n;
  const Forms b{projective_universe(n), field};
  const auto& degrees = spec.degrees;
  const unsigned dsum = std::accumulate(degrees.begin(), degrees.end(), 0U);
  auto line = LineChartPoint::origin(field, n);
  if (spec.name == "hyp-4-6") {
    require(n == 6 && degrees == std::vector<unsigned>{4}, "(N, d) = (6, 4)");
    const MultiPoly h = b.functional_part(4) + b.t().pow(2) * b.z(4) * b.z(5);
    return {CompleteIntersection(field, n, {4}, {h}), line};
  }
  if (spec.name == "hyp-general") {
    require(degrees.size() == 1, "a single degree");
    require(degrees[0] >= 3, "d >= 3");
    require(degrees[0] + 2 <= n, "d <= N-2");
    return {hypersurface_general(b, n, degrees[0]), line};
  }
  if (spec.name == "hyp-char-not-2") {
    require(degrees.size() == 1, "a single degree");
    const unsigned d = degrees[0];
    require(d >= 3, "d >= 3");
    require(d + 2 <= n, "d <= N-2");
    if (field.characteristic() == 2 && !options.force_char_two) {
      throw Error(ErrorKind::CharTwoForbidden, "hyp-char-not-2 needs characteristic other than 2");
    }
    MultiPoly tail = b.zero();
    for (std::size_t j = d; j + 1 <= n; ++j) tail += b.z(j).pow(2);
    return {CompleteIntersection(field, n, {d}, {b.functional_part(d) + b.t().pow(d - 2) * tail}), line};
  }
  if (spec.name == "mixed-general" || spec.name == "ci-4-3-P9") {
    if (spec.name == "ci-4-3-P9") require(n == 9 && degrees == std::vector<unsigned>{4, 3}, "(N, d) = (9, (4, 3))");
    require(!degrees.empty(), "at least one degree");
    require(degrees[0] >= 3, "d^1 >= 3");
    for (std::size_t i = 1; i < degrees.size(); ++i) require(degrees[i] >= 2, "d^i >= 2");
    require(dsum + 2 <= n, "|d| <= N-2");
    // |d|_i for i = 1..r+1, 1-based
    std::vector<unsigned> tail_sum(degrees.size() + 2, 0);
    for (std::size_t i = degrees.size(); i >= 1; --i) tail_sum[i] = tail_sum[i + 1] + degrees[i - 1];
    std::vector<MultiPoly> forms;
    forms.push_back(b.functional_part(degrees[0]) + b.pairing_tail(degrees[0], n - 1 - tail_sum[2]));
    for (std::size_t i = 2; i <= degrees.size(); ++i) {
      const unsigned d = degrees[i - 1];
      MultiPoly h = b.zero();
      for (unsigned u = 0; u < d; ++u) h += b.s().pow(d - 1 - u) * b.t().pow(u) * b.z(n - tail_sum[i] + u);
      forms.push_back(h);
    }
    if (spec.variant == "literal") {
      forms[1] = b.s().pow(2) * b.z(6) + b.t() * b.z(7) + b.t().pow(2) * b.z(8);
    }
    return {CompleteIntersection(field, n, degrees, forms), line};
  }
  // quadrics-general
  const std::size_t r = degrees.size();
  require(r >= 2, "r >= 2");
  require(2 * r + 2 <= n, "2r <= N-2");
  MultiPoly h1 = b.s() * b.z(1) + b.t() * b.z(2);
  MultiPoly h2 = b.s() * b.z(2) + b.t() * b.z(3);
  if ((n - 2 * r) % 2 == 1) {
    h1 += b.pairs(2 * r + 1, n - 1);
    h2 += b.z(2 * r) * b.z(2 * r + 1);
  } else {
    h1 += b.pairs(2 * r, n - 1);
  }
  std::vector<MultiPoly> forms{h1, h2};
  for (std::size_t i = 3; i <= r; ++i) forms.push_back(b.s() * b.z(2 * i - 2) + b.t() * b.z(2 * i - 1));
  return {CompleteIntersection(field, n, degrees, forms), line};
}

FamilyVerification verify_family(const FamilySpec& spec, const FieldSpec& field, std::uint64_t default_seed,
                                 const BuildOptions& options) {
  FamilyInstance inst = build_family(spec, field, options);
  if (spec.c_mode == CMode::Symbolic || !inst.x.has_parameters()) {
    SmoothnessReport rep = expected_pair_report(inst.x, inst.line);
    return FamilyVerification{std::move(inst), {}, 0, std::move(rep)};
  }
  if (field.is_prime_field() && field.modulus() < kMinSampleField) {
    throw Error(ErrorKind::ConstraintViolated,
                "sampling c needs a field with at least " + std::to_string(kMinSampleField) + " elements");
  }
  const std::uint64_t range = field.is_rationals() ? kRationalSampleRange : field.modulus();
  std::mt19937_64 rng(spec.seed.value_or(default_seed));
  const std::size_t k = inst.x.max_parameter();
  std::optional<FamilyVerification> last;
  for (unsigned draw = 1; draw <= 4; ++draw) {
    std::vector<Scalar> c;
    for (std::size_t j = 0; j < k; ++j) c.push_back(Scalar::from_int(field, static_cast<long long>(rng() % range)));
    SmoothnessReport rep = expected_pair_report(inst.x.evaluate_parameters(c), inst.line);
    rep.genericity.witness_field = field;
    rep.genericity.witness = c;
    const bool ok = rep.verdict == Verdict::SmoothExpectedDim;
    last = FamilyVerification{inst, c, draw, std::move(rep)};
    if (ok) break;
  }
  return std::move(*last);
}

std::string_view proof_case_name(ProofCase c) {
  switch (c) {
    case ProofCase::DegreeLE2Homogeneous:
      return "DegreeLE2-Homogeneous";
    case ProofCase::NonFreeLineViaJ:
      return "NonFreeLineViaJ";
    case ProofCase::NonFreeByDegreeBound:
      return "NonFreeByDegreeBound";
  }
  return "?";
}

HypothesisReport hypothesis_gates(std::size_t n, const std::vector<unsigned>& degrees) {
  if (degrees.empty()) throw Error(ErrorKind::InvalidArgument, "at least one degree expected");
  long long dsum = 0;
  unsigned long long product = 1;
  for (auto d : degrees) {
    if (d == 0) throw Error(ErrorKind::InvalidArgument, "degrees must be positive");
    dsum += d;
    product *= d;
  }
  const long long nn = static_cast<long long>(n);
  const long long r = static_cast<long long>(degrees.size());
  HypothesisReport h;
  h.fano = dsum <= nn;
  h.line_exists_iv = 2 * nn - 2 - r >= dsum;
  h.j_equals_i = nn <= dsum;
  h.product_gt_2 = product > 2;
  if (!h.product_gt_2) {
    h.proof_case = ProofCase::DegreeLE2Homogeneous;
  } else if (h.line_exists_iv) {
    h.proof_case = ProofCase::NonFreeLineViaJ;
  } else {
    h.proof_case = ProofCase::NonFreeByDegreeBound;
  }
  return h;
}

}  // namespace linecalc
