#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toricmin/toric_bundle.hpp"

namespace toricmin {

// A local weight value; nullopt stands for -infinity.
using WeightValue = std::optional<Scalar>;

std::string format_weight(const WeightValue &w);

// sum_j 2 <m - m_sigma, v_j> log|x_j| + z H(L0 + m) zbar, with 0^0 = 1.
// Throws NefViolation unless m lies in box_nef.
WeightValue psi_sigma_m(const ToricBundle &bundle, const ChartPoint &p, const Point &m);

// max over box_nef of psi_sigma_m. Repeated evaluations should go through a
// PsiEvaluator, which keeps one prepared solver per chart and zero pattern.
WeightValue psi_sigma(const ToricBundle &bundle, const ChartPoint &p);

class PsiEvaluator {
 public:
  explicit PsiEvaluator(const ToricBundle &bundle);
  ~PsiEvaluator();

  WeightValue operator()(const ChartPoint &p) const;
  // The objective m -> psi_sigma_m(p), as (coefficients, constant), ignoring
  // the coordinates in the zero set.
  std::pair<Point, Scalar> objective(const ChartPoint &p) const;

 private:
  struct Slice;
  const Slice &slice(std::size_t sigma, const std::vector<std::size_t> &zeros) const;

  const ToricBundle &bundle_;
  mutable std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::unique_ptr<Slice>> cache_;
};

// |psi_sigma(p) - psi_sigma'(p') - 2 <m_sigma' - m_sigma, l>| where p' is p
// re-expressed in the chart `other` and l = sum_j log|x_j| v_j.
double glue_check(const ToricBundle &bundle, const ChartPoint &p, std::size_t other);
double glue_check(const PsiEvaluator &psi, const ToricBundle &bundle, const ChartPoint &p, std::size_t other);

// Germ log max_k prod_{j in I} |x_j|^{2 alpha_kj} + O(1), stored through its
// exponent region: the closed convex hull of the alpha_k plus the orthant.
// Germs with curved boundaries (the conic case) have no finite exponent list.
struct LogMonomialWeight {
  std::vector<std::size_t> coords;  // indices j in I
  ConvexRegion region;              // in R^|I|, recession = orthant
  std::vector<Point> exponents;     // generators, when finitely many

  bool trivial() const { return coords.empty(); }
  static LogMonomialWeight from_exponents(std::vector<std::size_t> coords, const std::vector<Point> &alphas);
  LogMonomialWeight scaled(const Scalar &s) const;
};

// The exponent set S(L0,h)_sigma projected to the coordinates vanishing at x0.
LogMonomialWeight singularity_germ(const ToricBundle &bundle, const ChartPoint &x0);

enum class SingularityOrder { Less, Greater, Equivalent, Incomparable };
const char *order_name(SingularityOrder o);

// Less means g1 is more singular than g2 (g1 <_sing g2): the lower support
// function of g2 is <= that of g1 on the orthant.
SingularityOrder compare_singularity(const LogMonomialWeight &g1, const LogMonomialWeight &g2);

// (1/nu) max over m in nu box_nef cap M of psi_sigma_{m/nu}(p). The lattice
// rows of nu box_nef are computed once; an affine objective then only needs
// the two ends of each row. Planar fibers only.
class SectionEnvelope {
 public:
  SectionEnvelope(const ToricBundle &bundle, long nu);

  long nu() const { return nu_; }
  std::size_t lattice_point_count() const;
  Scalar operator()(const PsiEvaluator &psi, const ChartPoint &p) const;

 private:
  struct Row {
    long m2, lo, hi;
  };
  const ToricBundle &bundle_;
  long nu_;
  std::vector<Row> rows_;
};

Scalar section_envelope_oracle(const ToricBundle &bundle, long nu, const ChartPoint &p);

}  // namespace toricmin
