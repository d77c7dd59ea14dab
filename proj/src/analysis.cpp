#include "pmcover/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "pmcover/errors.hpp"
#include "pmcover/format.hpp"
#include "pmcover/objectives.hpp"

namespace pmcover {

double ratio_exact(double p, long n) {
  if (p == 0.0 || !std::isfinite(p)) throw ValidationError("ratio_exact needs finite p != 0; use the entropy form at p = 0");
  if (n < 1) throw ValidationError("ratio_exact needs n >= 1");
  const double nd = static_cast<double>(n);
  if (std::fabs(p + 1.0) * std::log(nd) < 600.0 && std::fabs(p) * std::log(nd) < 600.0) {
    double sum = 0.0;
    for (long j = n; j >= 1; --j) sum += std::pow(static_cast<double>(j), p);
    return std::pow(std::pow(nd, p + 1.0) / sum, 1.0 / p);
  }
  // log sum_j j^p by log-sum-exp around the largest term.
  const double top = p > 0.0 ? p * std::log(static_cast<double>(n)) : 0.0;
  double acc = 0.0;
  for (long j = 1; j <= n; ++j) acc += std::exp(p * std::log(static_cast<double>(j)) - top);
  const double log_sum = top + std::log(acc);
  const double log_ratio = ((p + 1.0) * std::log(static_cast<double>(n)) - log_sum) / p;
  return std::exp(log_ratio);
}

double ratio_asymptotic(double p) {
  if (!(p > 0.0)) throw ValidationError("ratio_asymptotic needs p > 0");
  if (std::isinf(p)) return 1.0;
  if (p < 1e-4) return std::exp(std::log1p(p) / p);
  return std::pow(p + 1.0, 1.0 / p);
}

double riemann_zeta(double q) {
  if (!(q > 1.0)) throw ValidationError("zeta series diverges for q <= 1");
  // Sum to N - 1, then integral remainder N^{1-q}/(q-1) with Euler-Maclaurin
  // corrections through B_6; grow N until the first omitted term is tiny.
  long cutoff = 16;
  for (;;) {
    const double nn = static_cast<double>(cutoff);
    const double omitted = q * (q + 1) * (q + 2) * (q + 3) * (q + 4) * (q + 5) * (q + 6) / 1209600.0 *
                           std::pow(nn, -q - 7.0);
    if (omitted < 1e-17 || cutoff > (1L << 20)) break;
    cutoff *= 2;
  }
  const double nn = static_cast<double>(cutoff);
  double partial = 0.0;
  for (long j = cutoff - 1; j >= 1; --j) partial += std::pow(static_cast<double>(j), -q);
  const double tail = std::pow(nn, 1.0 - q) / (q - 1.0) + 0.5 * std::pow(nn, -q) + q / 12.0 * std::pow(nn, -q - 1.0) -
                      q * (q + 1) * (q + 2) / 720.0 * std::pow(nn, -q - 3.0) +
                      q * (q + 1) * (q + 2) * (q + 3) * (q + 4) / 30240.0 * std::pow(nn, -q - 5.0);
  return partial + tail;
}

double ratio_negative(double q, long n) {
  if (!(q > 1.0)) throw ValidationError("ratio_negative needs q > 1: the zeta series does not converge");
  if (n < 1) throw ValidationError("ratio_negative needs n >= 1");
  return std::pow(static_cast<double>(n), 1.0 - 1.0 / q) * std::pow(riemann_zeta(q), 1.0 / q);
}

namespace {

void check_general_cost_args(std::size_t table_size, int c_max) {
  if (c_max < 1 || static_cast<std::size_t>(c_max) > table_size) {
    throw ValidationError("c_max = " + std::to_string(c_max) + " outside table domain 1.." + std::to_string(table_size));
  }
}

}  // namespace

double ratio_general_cost(std::span<const double> table, int c_max) {
  check_general_cost_args(table.size(), c_max);
  check_concave(table.first(c_max));
  double best = 0.0;
  double running = 0.0;
  for (int c = 1; c <= c_max; ++c) {
    const double f = table[c - 1];
    if (!(f > 0.0)) throw ValidationError("f(" + std::to_string(c) + ") is not positive");
    running += f / c;
    best = std::max(best, running / f);
  }
  return best;
}

BigRational ratio_general_cost_exact(std::span<const BigRational> table, int c_max) {
  check_general_cost_args(table.size(), c_max);
  for (int j = 1; j < c_max; ++j) {
    const BigRational prev = j >= 2 ? table[j - 2] : BigRational(0);
    if (table[j] - 2 * table[j - 1] + prev > 0) {
      throw ValidationError("table is not concave at c = " + std::to_string(j));
    }
  }
  BigRational best = 0;
  BigRational running = 0;
  for (int c = 1; c <= c_max; ++c) {
    const BigRational& f = table[c - 1];
    if (f <= 0) throw ValidationError("f(" + std::to_string(c) + ") is not positive");
    running += f / c;
    const BigRational candidate = running / f;
    if (candidate > best) best = candidate;
  }
  return best;
}

BigRational harmonic_exact(long n) {
  BigRational acc = 0;
  for (long j = 1; j <= n; ++j) acc += BigRational(1, j);
  return acc;
}

double harmonic(long n) {
  if (n <= 10000) return harmonic_exact(n).convert_to<double>();
  double acc = 0.0;
  for (long j = n; j >= 1; --j) acc += 1.0 / static_cast<double>(j);
  return acc;
}

double ratio_rob(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw ValidationError("rent-or-buy beta must lie in (0, 1)");
  return 1.0 - std::log(beta);
}

double inapprox_gap(double p, double a) {
  if (!(p > 0.0) || !(a > 0.0)) throw ValidationError("inapprox_gap needs p > 0 and a > 0");
  // Bracket (1 - E)/(p+1) + E with E = e^{-a(p+1)}, written as
  // 1 - (1 - E) p/(p+1) to stay accurate for small a.
  const double covered = -std::expm1(-a * (p + 1.0));
  const double bracket = 1.0 - covered * p / (p + 1.0);
  return std::pow(bracket, -1.0 / p);
}

SumIntegralCheck sum_integral_check(double p, long n) {
  if (!(p >= 0.0) || !std::isfinite(p)) throw ValidationError("sum_integral_check needs finite p >= 0");
  if (n < 1) throw ValidationError("sum_integral_check needs n >= 1");
  double lhs = 0.0;
  for (long j = n; j >= 1; --j) lhs += std::pow(static_cast<double>(j), p);
  const double rhs = std::pow(static_cast<double>(n), p + 1.0) / (p + 1.0);
  const double margin = lhs - rhs;
  return {margin >= 0.0, lhs, rhs, margin};
}

bool dominates(std::span<const double> c, std::span<const double> other) {
  auto check_sorted = [](std::span<const double> seq, const char* name) {
    for (std::size_t i = 1; i < seq.size(); ++i) {
      if (seq[i] > seq[i - 1]) {
        throw ValidationError(std::string(name) + " is not non-increasing at position " + std::to_string(i));
      }
    }
  };
  check_sorted(c, "first sequence");
  check_sorted(other, "second sequence");
  const std::size_t len = std::max(c.size(), other.size());
  double lhs = 0.0;
  double rhs = 0.0;
  for (std::size_t j = 0; j < len; ++j) {
    lhs += j < c.size() ? c[j] : 0.0;
    rhs += j < other.size() ? other[j] : 0.0;
    if (lhs < rhs - 1e-12 * std::max(1.0, std::fabs(rhs))) return false;
  }
  return true;
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kExact:
      return "exact";
    case BoundKind::kAsymptotic:
      return "asymptotic";
    case BoundKind::kNegative:
      return "negative";
    case BoundKind::kGeneralCost:
      return "general_cost";
    case BoundKind::kRentOrBuy:
      return "rob";
    case BoundKind::kGap:
      return "gap";
  }
  return "unknown";
}

std::string bounds_csv_header() { return "kind,p_or_q,n,beta,a,value"; }

std::string to_csv_row(const BoundReport& r) {
  auto opt = [](const auto& field) -> std::string {
    if (!field) return "";
    if constexpr (std::is_same_v<std::decay_t<decltype(*field)>, long>) {
      return std::to_string(*field);
    } else {
      return format_number(*field);
    }
  };
  return to_string(r.kind) + "," + opt(r.p_or_q) + "," + opt(r.n) + "," + opt(r.beta) + "," + opt(r.a) + "," +
         format_number(r.value);
}

}  // namespace pmcover
