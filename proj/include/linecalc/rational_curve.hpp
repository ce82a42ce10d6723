#pragma once

#include <vector>

#include "linecalc/binary_form.hpp"

namespace linecalc {

/// Morphism P^1 -> P^N given by N+1 binary forms of a common degree b >= 1
/// (order S, T, Z1..Z{N-1}) without common projective zero.
class RationalCurve {
 public:
  /// Validates the common degree and, for parameter-free components, the
  /// absence of base points (InvalidArgument otherwise).
  explicit RationalCurve(std::vector<BinaryForm> components);

  unsigned degree() const noexcept { return degree_; }
  std::size_t ambient_dimension() const noexcept { return components_.size() - 1; }
  const std::vector<BinaryForm>& components() const noexcept { return components_; }
  const FieldSpec& field() const { return components_.front().field(); }

  /// p restricted along the curve: p(components), a form of degree deg(p) * b.
  BinaryForm pull_back(const MultiPoly& p, unsigned p_degree) const;

 private:
  unsigned degree_ = 1;
  std::vector<BinaryForm> components_;
};

}  // namespace linecalc
