#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

namespace pmcover {

enum class Orientation { kMaximize, kMinimize };

// Valuation of a cover through its part sizes.
//
//   PMean(p)         maximize M_p of the per-element values a_v; p = 0 is the
//                    geometric mean, p = +inf the largest part and p = -inf
//                    the smallest nonempty part (max-min).
//   Entropy          minimize the Shannon entropy (bits) of c_i / n.
//   Unit             minimize the number of nonempty parts.
//   RentOrBuy(beta)  minimize sum of min(1, c_i / (beta n)).
//   ConcaveTable     minimize sum of f(c_i) for a tabulated concave f with
//                    f(0) = 0; table[j-1] holds f(j).
class CostModel {
 public:
  enum class Kind { kPMean, kEntropy, kUnit, kRentOrBuy, kConcaveTable };

  static constexpr double kInf = std::numeric_limits<double>::infinity();

  static CostModel pmean(double p);
  static CostModel geometric() { return pmean(0.0); }
  static CostModel max_part() { return pmean(kInf); }
  static CostModel max_min() { return pmean(-kInf); }
  static CostModel entropy();
  static CostModel unit();
  static CostModel rent_or_buy(double beta);
  // Throws ValidationError if the table is empty, non-finite, or not
  // discretely concave (second differences above 1e-12, with f(0) = 0).
  static CostModel concave_table(std::vector<double> values);

  Kind kind() const { return kind_; }
  double p() const { return p_; }
  double beta() const { return beta_; }
  const std::vector<double>& table() const { return table_; }

  Orientation orientation() const {
    return kind_ == Kind::kPMean ? Orientation::kMaximize : Orientation::kMinimize;
  }

  // True when `a` is strictly better than `b` under this orientation.
  bool better(double a, double b) const {
    return orientation() == Orientation::kMaximize ? a > b : a < b;
  }

  // Compact spec string: pmean:<p>, entropy, unit, rob:<beta>, table, max, maxmin.
  std::string spec() const;

 private:
  CostModel() = default;

  Kind kind_ = Kind::kPMean;
  double p_ = 1.0;
  double beta_ = 0.5;
  std::vector<double> table_;
};

// Objective of a cover with its per-part breakdown.
//
// decomposition[i] is the contribution of part i; the model's combiner
// folds it back into `value`:
//   PMean, finite p != 0: log(c_i^{p+1} / n), value = exp(logsumexp / p)
//   PMean, p = 0:         (c_i / n) ln c_i,  value = exp(sum)
//   PMean, p = +-inf:     c_i,               value = max / min over c_i > 0
//   everything else:      per-part cost,     value = sum
// Empty parts contribute the combiner's identity (-inf for log terms, 0 else).
struct ObjectiveValue {
  double value = 0.0;
  std::vector<double> decomposition;
  CostModel model;
};

ObjectiveValue evaluate(const CostModel& model, std::span<const double> sizes, double n_total);
double combine(const CostModel& model, std::span<const double> decomposition);

// Generalized mean of the a_v values, ((1/n) sum c_i^{p+1})^{1/p}.
// p = 0 and p = +-inf are routed to the geometric, max and max-min paths.
double eval_pmean(std::span<const double> sizes, double n_total, double p);
double eval_geometric(std::span<const double> sizes, double n_total);
// Entropy in bits of the distribution c_i / n_total.
double eval_entropy(std::span<const double> sizes, double n_total);
int eval_unit(std::span<const double> sizes);
double eval_rob(std::span<const double> sizes, double n_total, double beta);
// Sizes must be integral and no larger than the table.
double eval_concave(std::span<const double> sizes, std::span<const double> table);
double eval_maxmin(std::span<const double> sizes);
double eval_max(std::span<const double> sizes);

// Throws ValidationError unless f (with implicit f(0) = 0) has all second
// differences <= 1e-12.
void check_concave(std::span<const double> table);

// f(c) = c / (beta n) for c <= beta n, 1 otherwise, tabulated for c = 1..n.
std::vector<double> rob_table(double beta, int n);

}  // namespace pmcover
