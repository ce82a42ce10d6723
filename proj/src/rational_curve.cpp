#include "linecalc/rational_curve.hpp"

#include <algorithm>

#include "linecalc/error.hpp"

namespace linecalc {

RationalCurve::RationalCurve(std::vector<BinaryForm> components) : components_(std::move(components)) {
  if (components_.size() < 2) throw Error(ErrorKind::InvalidArgument, "a curve needs at least two components");
  degree_ = components_.front().degree();
  if (degree_ == 0) throw Error(ErrorKind::InvalidArgument, "curve degree must be at least 1");
  for (const auto& c : components_) {
    if (c.degree() != degree_) throw Error(ErrorKind::InvalidArgument, "curve components differ in degree");
  }
  const bool parametric =
      std::any_of(components_.begin(), components_.end(), [](const BinaryForm& c) { return c.has_parameters(); });
  if (!parametric) {
    const bool all_zero =
        std::all_of(components_.begin(), components_.end(), [](const BinaryForm& c) { return c.is_zero(); });
    if (all_zero || binary_gcd(components_).degree() != 0) {
      throw Error(ErrorKind::InvalidArgument, "curve components share a common zero");
    }
  }
}

BinaryForm RationalCurve::pull_back(const MultiPoly& p, unsigned p_degree) const {
  if (p.universe()->size() != components_.size()) {
    throw Error(ErrorKind::InvalidArgument, "polynomial and curve live in different ambient spaces");
  }
  const auto st = binary_universe();
  std::vector<MultiPoly> images;
  images.reserve(components_.size());
  for (const auto& c : components_) images.push_back(c.to_multipoly(st));
  MultiPoly q = substitute(p, images);
  if (q.is_zero()) return BinaryForm(field(), p_degree * degree_);
  return BinaryForm::from_multipoly(q, p_degree * degree_);
}

}  // namespace linecalc
