#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linecalc/nonfree.hpp"

namespace linecalc {

enum class CMode { Symbolic, Sampled };

/// Textual form "name:key=value,...", e.g. "quadrics-general:N=7,r=2,c=symbolic".
/// Names: hyp-4-6, hyp-general (N, d), hyp-char-not-2 (N, d),
/// mixed-general (N, degrees=d1/d2/...), ci-4-3-P9 (variant=literal|homogeneous),
/// quadrics-general (N, r). c is symbolic, sampled or sampled(seed).
struct FamilySpec {
  std::string name;
  std::size_t n = 0;
  std::vector<unsigned> degrees;
  CMode c_mode = CMode::Symbolic;
  std::optional<std::uint64_t> seed;
  std::string variant;

  /// Throws ParseError.
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
};

struct BuildOptions {
  /// Test hook: build hyp-char-not-2 over characteristic 2 anyway.
  bool force_char_two = false;
};

struct FamilyInstance {
  CompleteIntersection x;
  LineChartPoint line;
};

/// X with parameters c_j still symbolic, and the standard line.
/// Throws ConstraintViolated, CharTwoForbidden, NotHomogeneous (ci-4-3-P9 literal variant).
FamilyInstance build_family(const FamilySpec& spec, const FieldSpec& field, const BuildOptions& options = {});

struct FamilyVerification {
  FamilyInstance instance;
  /// The c values substituted in sampled mode (empty when symbolic).
  std::vector<Scalar> c;
  unsigned draws = 0;
  SmoothnessReport report;
};

/// Fewest field elements a sampled draw may come from.
inline constexpr std::uint64_t kMinSampleField = 1000000;

/// Builds the family and reports on its standard line. Sampled mode draws c
/// from `field` (from [0, 1000003) over Q), resampling up to 3 times.
/// Throws ConstraintViolated when the field is too small to sample from.
FamilyVerification verify_family(const FamilySpec& spec, const FieldSpec& field, std::uint64_t default_seed = 0,
                                 const BuildOptions& options = {});

enum class ProofCase { DegreeLE2Homogeneous, NonFreeLineViaJ, NonFreeByDegreeBound };

std::string_view proof_case_name(ProofCase c);

struct HypothesisReport {
  bool fano = false;
  bool line_exists_iv = false;
  bool j_equals_i = false;
  bool product_gt_2 = false;
  ProofCase proof_case = ProofCase::DegreeLE2Homogeneous;
};

HypothesisReport hypothesis_gates(std::size_t n, const std::vector<unsigned>& degrees);

}  // namespace linecalc
