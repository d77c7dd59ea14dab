#include "pmcover/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "pmcover/errors.hpp"
#include "pmcover/format.hpp"

namespace pmcover {
namespace {

constexpr double kLogSpaceExponent = 30.0;
constexpr double kLogSpaceSize = 1e6;
constexpr double kConcavityTol = 1e-12;

// Nonzero sizes sorted descending, after validating the size vector.
std::vector<double> nonzero_sorted(std::span<const double> sizes, double n_total) {
  if (!(n_total > 0.0) || !std::isfinite(n_total)) throw ValidationError("total weight must be positive");
  double sum = 0.0;
  std::vector<double> out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const double c = sizes[i];
    if (!(c >= 0.0) || !std::isfinite(c)) {
      throw ValidationError("part " + std::to_string(i) + " has invalid size " + format_number(c));
    }
    sum += c;
    if (c > 0.0) out.push_back(c);
  }
  if (out.empty()) throw ValidationError("all part sizes are zero");
  if (std::fabs(sum - n_total) > 1e-9 * std::max(1.0, n_total)) {
    throw ValidationError("part sizes sum to " + format_number(sum) + ", expected " + format_number(n_total));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double log_sum_exp(std::span<const double> terms) {
  double top = -CostModel::kInf;
  for (double t : terms) top = std::max(top, t);
  if (!std::isfinite(top)) return top;
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - top);
  return top + std::log(acc);
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  return buf;
}

CostModel CostModel::pmean(double p) {
  if (std::isnan(p)) throw ValidationError("p-mean parameter is NaN");
  CostModel m;
  m.kind_ = Kind::kPMean;
  m.p_ = p;
  return m;
}

CostModel CostModel::entropy() {
  CostModel m;
  m.kind_ = Kind::kEntropy;
  return m;
}

CostModel CostModel::unit() {
  CostModel m;
  m.kind_ = Kind::kUnit;
  return m;
}

CostModel CostModel::rent_or_buy(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw ValidationError("rent-or-buy beta must lie in (0, 1)");
  CostModel m;
  m.kind_ = Kind::kRentOrBuy;
  m.beta_ = beta;
  return m;
}

CostModel CostModel::concave_table(std::vector<double> values) {
  check_concave(values);
  CostModel m;
  m.kind_ = Kind::kConcaveTable;
  m.table_ = std::move(values);
  return m;
}

std::string CostModel::spec() const {
  switch (kind_) {
    case Kind::kPMean:
      if (p_ == kInf) return "max";
      if (p_ == -kInf) return "maxmin";
      return "pmean:" + format_number(p_);
    case Kind::kEntropy:
      return "entropy";
    case Kind::kUnit:
      return "unit";
    case Kind::kRentOrBuy:
      return "rob:" + format_number(beta_);
    case Kind::kConcaveTable:
      return "table";
  }
  return "unknown";
}

double eval_pmean(std::span<const double> sizes, double n_total, double p) {
  if (p == 0.0) return eval_geometric(sizes, n_total);
  if (p == CostModel::kInf) return eval_max(sizes);
  if (p == -CostModel::kInf) return eval_maxmin(sizes);
  const auto parts = nonzero_sorted(sizes, n_total);
  const bool log_space = std::fabs(p + 1.0) > kLogSpaceExponent || parts.front() > kLogSpaceSize;
  if (!log_space) {
    double sum = 0.0;
    for (double c : parts) sum += std::pow(c, p + 1.0);
    return std::pow(sum / n_total, 1.0 / p);
  }
  std::vector<double> terms;
  terms.reserve(parts.size());
  for (double c : parts) terms.push_back((p + 1.0) * std::log(c) - std::log(n_total));
  return std::exp(log_sum_exp(terms) / p);
}

double eval_geometric(std::span<const double> sizes, double n_total) {
  const auto parts = nonzero_sorted(sizes, n_total);
  double acc = 0.0;
  for (double c : parts) acc += c / n_total * std::log(c);
  return std::exp(acc);
}

double eval_entropy(std::span<const double> sizes, double n_total) {
  const auto parts = nonzero_sorted(sizes, n_total);
  double acc = 0.0;
  for (double c : parts) {
    const double q = c / n_total;
    acc -= q * std::log2(q);
  }
  return acc;
}

int eval_unit(std::span<const double> sizes) {
  int count = 0;
  for (double c : sizes) count += c > 0.0 ? 1 : 0;
  return count;
}

double eval_rob(std::span<const double> sizes, double n_total, double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw ValidationError("rent-or-buy beta must lie in (0, 1)");
  const auto parts = nonzero_sorted(sizes, n_total);
  const double breakpoint = beta * n_total;
  double acc = 0.0;
  for (double c : parts) acc += std::min(1.0, c / breakpoint);
  return acc;
}

double eval_concave(std::span<const double> sizes, std::span<const double> table) {
  std::vector<double> parts;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const double c = sizes[i];
    if (c <= 0.0) continue;
    const double rounded = std::round(c);
    if (std::fabs(c - rounded) > 1e-9) {
      throw ValidationError("part " + std::to_string(i) + " has non-integral size " + format_number(c) +
                            "; expand weights before using a concave table");
    }
    if (rounded > static_cast<double>(table.size())) {
      throw ValidationError("part size " + format_number(rounded) + " exceeds table domain 1.." +
                            std::to_string(table.size()));
    }
    parts.push_back(rounded);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  double acc = 0.0;
  for (double c : parts) acc += table[static_cast<std::size_t>(c) - 1];
  return acc;
}

double eval_maxmin(std::span<const double> sizes) {
  double best = CostModel::kInf;
  for (double c : sizes) {
    if (c > 0.0) best = std::min(best, c);
  }
  if (best == CostModel::kInf) throw ValidationError("all part sizes are zero");
  return best;
}

double eval_max(std::span<const double> sizes) {
  double best = 0.0;
  for (double c : sizes) best = std::max(best, c);
  if (best == 0.0) throw ValidationError("all part sizes are zero");
  return best;
}

void check_concave(std::span<const double> table) {
  if (table.empty()) throw ValidationError("concave table is empty");
  for (std::size_t j = 0; j < table.size(); ++j) {
    if (!std::isfinite(table[j])) throw ValidationError("table entry f(" + std::to_string(j + 1) + ") is not finite");
  }
  // j runs over interior points 1..len-1 with f(0) = 0.
  for (std::size_t j = 1; j < table.size(); ++j) {
    const double prev = j >= 2 ? table[j - 2] : 0.0;
    const double second = table[j] - 2.0 * table[j - 1] + prev;
    if (second > kConcavityTol) {
      throw ValidationError("table is not concave at c = " + std::to_string(j) + " (second difference " +
                            format_number(second) + ")");
    }
  }
}

std::vector<double> rob_table(double beta, int n) {
  if (!(beta > 0.0 && beta < 1.0)) throw ValidationError("rent-or-buy beta must lie in (0, 1)");
  const double breakpoint = beta * n;
  std::vector<double> table(n);
  for (int c = 1; c <= n; ++c) table[c - 1] = c <= breakpoint ? c / breakpoint : 1.0;
  return table;
}

ObjectiveValue evaluate(const CostModel& model, std::span<const double> sizes, double n_total) {
  ObjectiveValue out{0.0, std::vector<double>(sizes.size(), 0.0), model};
  using Kind = CostModel::Kind;
  switch (model.kind()) {
    case Kind::kPMean: {
      const double p = model.p();
      out.value = eval_pmean(sizes, n_total, p);
      for (std::size_t i = 0; i < sizes.size(); ++i) {
        const double c = sizes[i];
        if (std::isinf(p)) {
          out.decomposition[i] = c;
        } else if (p == 0.0) {
          out.decomposition[i] = c > 0.0 ? c / n_total * std::log(c) : 0.0;
        } else {
          out.decomposition[i] = c > 0.0 ? (p + 1.0) * std::log(c) - std::log(n_total) : -CostModel::kInf;
        }
      }
      break;
    }
    case Kind::kEntropy:
      out.value = eval_entropy(sizes, n_total);
      for (std::size_t i = 0; i < sizes.size(); ++i) {
        const double q = sizes[i] / n_total;
        out.decomposition[i] = q > 0.0 ? -q * std::log2(q) : 0.0;
      }
      break;
    case Kind::kUnit:
      nonzero_sorted(sizes, n_total);
      out.value = eval_unit(sizes);
      for (std::size_t i = 0; i < sizes.size(); ++i) out.decomposition[i] = sizes[i] > 0.0 ? 1.0 : 0.0;
      break;
    case Kind::kRentOrBuy:
      out.value = eval_rob(sizes, n_total, model.beta());
      for (std::size_t i = 0; i < sizes.size(); ++i) {
        out.decomposition[i] = sizes[i] > 0.0 ? std::min(1.0, sizes[i] / (model.beta() * n_total)) : 0.0;
      }
      break;
    case Kind::kConcaveTable:
      nonzero_sorted(sizes, n_total);
      out.value = eval_concave(sizes, model.table());
      for (std::size_t i = 0; i < sizes.size(); ++i) {
        const auto c = static_cast<std::size_t>(std::llround(sizes[i]));
        out.decomposition[i] = c > 0 ? model.table()[c - 1] : 0.0;
      }
      break;
  }
  return out;
}

double combine(const CostModel& model, std::span<const double> decomposition) {
  if (model.kind() == CostModel::Kind::kPMean) {
    const double p = model.p();
    if (p == CostModel::kInf) return eval_max(decomposition);
    if (p == -CostModel::kInf) return eval_maxmin(decomposition);
    if (p == 0.0) {
      double acc = 0.0;
      for (double d : decomposition) acc += d;
      return std::exp(acc);
    }
    return std::exp(log_sum_exp(decomposition) / p);
  }
  double acc = 0.0;
  for (double d : decomposition) acc += d;
  return acc;
}

}  // namespace pmcover
