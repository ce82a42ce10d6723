#include "linecalc/grass.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "linecalc/error.hpp"

namespace linecalc {

// --- CIType -----------------------------------------------------------------

unsigned CIType::degree_sum() const { return std::accumulate(degrees.begin(), degrees.end(), 0U); }

unsigned CIType::partial_sum(std::size_t i0) const {
  unsigned s = 0;
  for (std::size_t i = i0; i >= 1 && i <= degrees.size(); ++i) s += degrees[i - 1];
  return s;
}

unsigned long long CIType::degree_product() const {
  unsigned long long p = 1;
  for (auto d : degrees) p *= d;
  return p;
}

// --- CompleteIntersection ---------------------------------------------------

CompleteIntersection::CompleteIntersection(const FieldSpec& f, std::size_t n, std::vector<unsigned> degrees,
                                           std::vector<MultiPoly> forms)
    : field_(f), type_{n, std::move(degrees)}, universe_(projective_universe(n)) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "ambient dimension must be at least 1");
  if (type_.degrees.empty()) throw Error(ErrorKind::InvalidArgument, "a complete intersection needs at least one form");
  if (forms.size() != type_.degrees.size()) {
    throw Error(ErrorKind::InvalidArgument, "number of forms does not match number of degrees");
  }
  forms_.reserve(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].universe()->size() != universe_->size() || !(*forms[i].universe() == *universe_)) {
      throw Error(ErrorKind::InvalidArgument, "form " + std::to_string(i + 1) + " is not in S, T, Z1..Z" +
                                                  std::to_string(n - 1));
    }
    if (!(forms[i].field() == f)) throw Error(ErrorKind::FieldMismatch, "form over a different field");
    if (type_.degrees[i] == 0) throw Error(ErrorKind::InvalidArgument, "degrees must be positive");
    if (!forms[i].is_homogeneous(type_.degrees[i])) {
      throw Error(ErrorKind::NotHomogeneous, "form " + std::to_string(i + 1) + " (" + forms[i].to_string() +
                                                 ") is not homogeneous of degree " +
                                                 std::to_string(type_.degrees[i]));
    }
    forms_.push_back(forms[i].rebased(universe_));
  }
}

bool CompleteIntersection::has_parameters() const {
  return std::any_of(forms_.begin(), forms_.end(), [](const MultiPoly& p) { return p.has_parameters(); });
}

std::size_t CompleteIntersection::max_parameter() const {
  std::size_t k = 0;
  for (const auto& p : forms_) k = std::max(k, p.max_parameter());
  return k;
}

CompleteIntersection CompleteIntersection::evaluate_parameters(std::span<const Scalar> values) const {
  std::vector<MultiPoly> forms;
  for (const auto& p : forms_) forms.push_back(p.evaluate_parameters(values));
  return CompleteIntersection(field_, type_.n, type_.degrees, std::move(forms));
}

CompleteIntersection CompleteIntersection::scaled(std::span<const Scalar> lambdas) const {
  if (lambdas.size() != forms_.size()) throw Error(ErrorKind::InvalidArgument, "one scale factor per form expected");
  std::vector<MultiPoly> forms;
  for (std::size_t i = 0; i < forms_.size(); ++i) forms.push_back(forms_[i].scaled(ParamScalar(lambdas[i])));
  return CompleteIntersection(field_, type_.n, type_.degrees, std::move(forms));
}

CompleteIntersection CompleteIntersection::permuted(std::span<const std::size_t> perm) const {
  const std::size_t m = universe_->size();
  if (perm.size() != m) throw Error(ErrorKind::InvalidArgument, "permutation has wrong length");
  std::vector<MultiPoly> images(m, MultiPoly(universe_, field_));
  std::vector<bool> seen(m, false);
  for (std::size_t k = 0; k < m; ++k) {
    if (perm[k] >= m || seen[perm[k]]) throw Error(ErrorKind::InvalidArgument, "not a permutation");
    seen[perm[k]] = true;
    images[perm[k]] = MultiPoly::variable(universe_, field_, k);
  }
  std::vector<MultiPoly> forms;
  for (const auto& p : forms_) forms.push_back(substitute(p, images));
  return CompleteIntersection(field_, type_.n, type_.degrees, std::move(forms));
}

// --- LineChartPoint ---------------------------------------------------------

LineChartPoint LineChartPoint::origin(const FieldSpec& f, std::size_t n) {
  return LineChartPoint{std::vector<Scalar>(n - 1, Scalar::zero(f)), std::vector<Scalar>(n - 1, Scalar::zero(f))};
}

LineChartPoint LineChartPoint::from_ints(const FieldSpec& f, const std::vector<long long>& a,
                                         const std::vector<long long>& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidArgument, "chart rows differ in length");
  LineChartPoint p;
  for (auto x : a) p.a.push_back(Scalar::from_int(f, x));
  for (auto x : b) p.b.push_back(Scalar::from_int(f, x));
  return p;
}

std::vector<ParamScalar> LineChartPoint::chart_point() const {
  std::vector<ParamScalar> v;
  v.reserve(2 * a.size());
  for (const auto& x : a) v.emplace_back(x);
  for (const auto& x : b) v.emplace_back(x);
  return v;
}

LineChartPoint LineChartPoint::permuted_z(std::span<const std::size_t> perm) const {
  LineChartPoint p;
  for (auto k : perm) {
    p.a.push_back(a.at(k));
    p.b.push_back(b.at(k));
  }
  return p;
}

RationalCurve line_param(const LineChartPoint& point) {
  if (point.a.size() != point.b.size()) throw Error(ErrorKind::InvalidArgument, "chart rows differ in length");
  const FieldSpec f = point.a.empty() ? FieldSpec{} : point.a.front().field();
  std::vector<BinaryForm> comps;
  comps.push_back(BinaryForm::monomial(f, 1, 0));
  comps.push_back(BinaryForm::monomial(f, 1, 1));
  for (std::size_t j = 0; j < point.a.size(); ++j) {
    comps.emplace_back(f, 1, std::vector<ParamScalar>{ParamScalar(point.a[j]), ParamScalar(point.b[j])});
  }
  return RationalCurve(std::move(comps));
}

// --- membership system ------------------------------------------------------

std::vector<MultiPoly> chart_expansion(const MultiPoly& h, unsigned degree) {
  const std::size_t n = h.universe()->size() - 1;
  const FieldSpec& f = h.field();
  const UniversePtr lu = line_universe(n);
  const UniversePtr cu = chart_universe(n);
  std::vector<MultiPoly> images;
  images.reserve(n + 1);
  const MultiPoly s = MultiPoly::variable(lu, f, 0);
  const MultiPoly t = MultiPoly::variable(lu, f, 1);
  images.push_back(s);
  images.push_back(t);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    images.push_back(s * MultiPoly::variable(lu, f, 2 + j) + t * MultiPoly::variable(lu, f, 2 + (n - 1) + j));
  }
  const MultiPoly composed = substitute(h, images);
  std::vector<MultiPoly> coeffs(degree + 1, MultiPoly(cu, f));
  for (const auto& [e, c] : composed.terms()) {
    if (e[0] + e[1] != degree) {
      throw Error(ErrorKind::NotHomogeneous, h.to_string() + " is not homogeneous of degree " + std::to_string(degree));
    }
    coeffs[e[1]].add_term(Exponents(e.begin() + 2, e.end()), c);
  }
  return coeffs;
}

std::size_t MembershipSystem::count() const {
  std::size_t c = 0;
  for (const auto& row : polys) c += row.size();
  return c;
}

bool MembershipSystem::contains(const LineChartPoint& point) const {
  const auto pt = point.chart_point();
  for (const auto& row : polys) {
    for (const auto& p : row) {
      if (!p.evaluate(pt).is_zero()) return false;
    }
  }
  return true;
}

MembershipSystem membership_system(const CompleteIntersection& x) {
  MembershipSystem sys;
  for (std::size_t i = 0; i < x.r(); ++i) sys.polys.push_back(chart_expansion(x.forms()[i], x.type().degrees[i]));
  return sys;
}

// --- M(h) -------------------------------------------------------------------

NonFreeMatrix::NonFreeMatrix(std::size_t rows, std::vector<unsigned> block_widths, std::vector<MultiPoly> entries)
    : rows_(rows),
      cols_(std::accumulate(block_widths.begin(), block_widths.end(), std::size_t{0})),
      block_widths_(std::move(block_widths)),
      entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw Error(ErrorKind::InvalidArgument, "entry count does not match shape");
}

ExactMatrix NonFreeMatrix::evaluate(const LineChartPoint& point) const {
  const auto pt = point.chart_point();
  const FieldSpec f = entries_.empty() ? FieldSpec{} : entries_.front().field();
  ExactMatrix m(f, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = symbolic(i, j).evaluate(pt);
  }
  return m;
}

NonFreeMatrix nonfree_matrix(const CompleteIntersection& x, const std::optional<LineChartPoint>& at) {
  const std::size_t n = x.n();
  const unsigned width = x.type().degree_sum();
  std::vector<MultiPoly> entries(
      (n - 1) * width, MultiPoly(chart_universe(n), x.field()));
  std::size_t col0 = 0;
  for (std::size_t i = 0; i < x.r(); ++i) {
    const unsigned d = x.type().degrees[i];
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const MultiPoly deriv = differentiate(x.forms()[i], 2 + j);
      const auto v = chart_expansion(deriv, d - 1);
      for (unsigned k = 0; k < d; ++k) entries[j * width + col0 + k] = v[k];
    }
    col0 += d;
  }
  NonFreeMatrix m(n - 1, x.type().degrees, std::move(entries));
  if (at) {
    if (!membership_system(x).contains(*at)) throw Error(ErrorKind::LineNotContained, "the line does not lie on X");
    m.set_evaluated(m.evaluate(*at));
  }
  return m;
}

// --- smoothness along a curve -----------------------------------------------

namespace {

BinaryForm binary_det(const std::vector<std::vector<BinaryForm>>& rows, std::span<const std::size_t> cols,
                      std::size_t row, unsigned remaining_degree) {
  const FieldSpec& f = rows[row][0].field();
  if (row + 1 == rows.size()) return rows[row][cols[0]];
  BinaryForm acc(f, remaining_degree);
  std::vector<std::size_t> rest(cols.begin() + 1, cols.end());
  const unsigned tail = remaining_degree - rows[row][0].degree();
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (k > 0) rest[k - 1] = cols[k - 1];
    const BinaryForm& e = rows[row][cols[k]];
    if (e.is_zero()) continue;
    BinaryForm term = e * binary_det(rows, rest, row + 1, tail);
    if (k % 2 == 1) {
      acc -= term;
    } else {
      acc += term;
    }
  }
  return acc;
}

}  // namespace

bool is_smooth_along_curve(const CompleteIntersection& x, const RationalCurve& curve) {
  if (x.has_parameters()) throw Error(ErrorKind::ParameterPresent, "substitute parameters before the smoothness test");
  const std::size_t m = x.n() + 1;
  const std::size_t r = x.r();
  std::vector<std::vector<BinaryForm>> jac(r);
  unsigned total_degree = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const unsigned d = x.type().degrees[i];
    if (!curve.pull_back(x.forms()[i], d).is_zero()) {
      throw Error(ErrorKind::CurveNotOnX, "the curve does not lie on X");
    }
    for (std::size_t j = 0; j < m; ++j) jac[i].push_back(curve.pull_back(differentiate(x.forms()[i], j), d - 1));
    total_degree += (d - 1) * curve.degree();
  }
  if (r > m) return false;
  // r-subsets of columns in lexicographic order
  std::vector<std::size_t> cols(r);
  std::iota(cols.begin(), cols.end(), 0);
  std::optional<BinaryForm> g;
  for (;;) {
    BinaryForm minor = binary_det(jac, cols, 0, total_degree);
    if (!minor.is_zero()) {
      g = g ? binary_gcd(std::vector<BinaryForm>{*g, minor}) : binary_gcd(std::vector<BinaryForm>{minor});
      if (g->degree() == 0) return true;
    }
    std::size_t k = r;
    while (k > 0 && cols[k - 1] == m - r + (k - 1)) --k;
    if (k == 0) break;
    ++cols[k - 1];
    for (std::size_t q = k; q < r; ++q) cols[q] = cols[q - 1] + 1;
  }
  return false;
}

bool is_smooth_along_line(const CompleteIntersection& x, const LineChartPoint& point) {
  if (x.has_parameters()) throw Error(ErrorKind::ParameterPresent, "substitute parameters before the smoothness test");
  if (!membership_system(x).contains(point)) throw Error(ErrorKind::LineNotContained, "the line does not lie on X");
  return is_smooth_along_curve(x, line_param(point));
}

// --- lines over F_p ---------------------------------------------------------

std::size_t ProjectiveLine::pivot0() const {
  for (std::size_t c = 0; c < row0.size(); ++c) {
    if (!row0[c].is_zero()) return c;
  }
  throw Error(ErrorKind::InvalidArgument, "zero row in line matrix");
}

std::size_t ProjectiveLine::pivot1() const {
  for (std::size_t c = 0; c < row1.size(); ++c) {
    if (!row1[c].is_zero()) return c;
  }
  throw Error(ErrorKind::InvalidArgument, "zero row in line matrix");
}

RationalCurve ProjectiveLine::curve() const {
  std::vector<BinaryForm> comps;
  const FieldSpec f = row0.front().field();
  for (std::size_t c = 0; c < row0.size(); ++c) {
    comps.emplace_back(f, 1, std::vector<ParamScalar>{ParamScalar(row0[c]), ParamScalar(row1[c])});
  }
  return RationalCurve(std::move(comps));
}

bool canonical_less(const ProjectiveLine& a, const ProjectiveLine& b) {
  const auto ka = std::make_pair(a.pivot0(), a.pivot1());
  const auto kb = std::make_pair(b.pivot0(), b.pivot1());
  if (ka != kb) return ka < kb;
  for (const auto& [ra, rb] : {std::tie(a.row0, b.row0), std::tie(a.row1, b.row1)}) {
    for (std::size_t c = 0; c < ra.size(); ++c) {
      auto o = canonical_compare(ra[c], rb[c]);
      if (o != 0) return o < 0;
    }
  }
  return false;
}

namespace {

std::vector<std::size_t> chart_permutation(std::size_t m, std::size_t i, std::size_t j) {
  std::vector<std::size_t> perm{i, j};
  for (std::size_t c = 0; c < m; ++c) {
    if (c != i && c != j) perm.push_back(c);
  }
  return perm;
}

// A parameter-free chart polynomial compiled for word-size evaluation mod p.
struct CompiledPoly {
  struct Term {
    std::uint64_t coeff;
    std::vector<std::pair<std::uint16_t, std::uint16_t>> powers;
  };
  std::vector<Term> terms;

  explicit CompiledPoly(const MultiPoly& p) {
    for (const auto& [e, c] : p.terms()) {
      Term t{c.constant_value().residue(), {}};
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] != 0) t.powers.emplace_back(static_cast<std::uint16_t>(v), e[v]);
      }
      terms.push_back(std::move(t));
    }
  }

  bool vanishes(const std::vector<std::uint64_t>& point, std::uint64_t p) const {
    unsigned __int128 acc = 0;
    for (const auto& t : terms) {
      std::uint64_t v = t.coeff;
      for (const auto& [var, exp] : t.powers) {
        for (unsigned k = 0; k < exp && v != 0; ++k) {
          v = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v) * point[var] % p);
        }
      }
      acc += v;
    }
    return acc % p == 0;
  }
};

constexpr double kMaxEnumeration = 2e8;

std::vector<ProjectiveLine> enumerate_impl(const FieldSpec& f, std::size_t n, const CompleteIntersection* x) {
  if (f.is_rationals()) throw Error(ErrorKind::InfiniteField, "line enumeration needs a finite field");
  if (x != nullptr && x->has_parameters()) {
    throw Error(ErrorKind::ParameterPresent, "substitute parameters before enumerating lines");
  }
  const std::uint64_t p = f.modulus();
  const std::size_t m = n + 1;
  const std::size_t z = n - 1;
  std::vector<ProjectiveLine> lines;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto perm = chart_permutation(m, i, j);
      std::vector<CompiledPoly> polys;
      if (x != nullptr) {
        const auto sys = membership_system(x->permuted(perm));
        for (const auto& row : sys.polys) {
          for (const auto& q : row) {
            if (!q.is_zero()) polys.emplace_back(q);
          }
        }
      }
      // free chart coordinates: a_k if its old column exceeds i, b_k if it exceeds j
      std::vector<std::size_t> free_vars;
      for (std::size_t k = 0; k < z; ++k) {
        if (perm[k + 2] > i) free_vars.push_back(k);
      }
      for (std::size_t k = 0; k < z; ++k) {
        if (perm[k + 2] > j) free_vars.push_back(z + k);
      }
      if (std::pow(static_cast<double>(p), static_cast<double>(free_vars.size())) > kMaxEnumeration) {
        throw Error(ErrorKind::InvalidArgument, "line enumeration too large for this field and dimension");
      }
      std::vector<std::uint64_t> point(2 * z, 0);
      for (;;) {
        const bool on_x = std::all_of(polys.begin(), polys.end(),
                                      [&](const CompiledPoly& q) { return q.vanishes(point, p); });
        if (on_x) {
          ProjectiveLine line{std::vector<Scalar>(m, Scalar::zero(f)), std::vector<Scalar>(m, Scalar::zero(f))};
          line.row0[i] = Scalar::one(f);
          line.row1[j] = Scalar::one(f);
          for (std::size_t k = 0; k < z; ++k) {
            line.row0[perm[k + 2]] = Scalar::from_int(f, static_cast<long long>(point[k]));
            line.row1[perm[k + 2]] = Scalar::from_int(f, static_cast<long long>(point[z + k]));
          }
          lines.push_back(std::move(line));
        }
        std::size_t pos = 0;
        while (pos < free_vars.size() && ++point[free_vars[pos]] == p) point[free_vars[pos++]] = 0;
        if (pos == free_vars.size()) break;
      }
    }
  }
  std::sort(lines.begin(), lines.end(), canonical_less);
  return lines;
}

}  // namespace

ChartView move_line_to_chart(const CompleteIntersection& x, const ProjectiveLine& line) {
  const std::size_t m = x.n() + 1;
  const auto perm = chart_permutation(m, line.pivot0(), line.pivot1());
  LineChartPoint point;
  for (std::size_t k = 2; k < m; ++k) {
    point.a.push_back(line.row0[perm[k]]);
    point.b.push_back(line.row1[perm[k]]);
  }
  return ChartView{x.permuted(perm), std::move(point), perm};
}

std::vector<ProjectiveLine> enumerate_lines_fq(const CompleteIntersection& x) {
  return enumerate_impl(x.field(), x.n(), &x);
}

std::vector<ProjectiveLine> enumerate_all_lines_fq(const FieldSpec& f, std::size_t n) {
  return enumerate_impl(f, n, nullptr);
}

}  // namespace linecalc
