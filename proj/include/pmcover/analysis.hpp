#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pmcover {

using BigRational = boost::multiprecision::cpp_rational;

// Greedy's worst-case ratio for the p-mean objective on n elements,
// (n^{p+1} / sum_{j=1}^n j^p)^{1/p}, evaluated in log space. For negative p
// the same expression is returned; it is finite for every n but only
// p < -1 has a closed asymptotic form (ratio_negative).
// Throws ValidationError for p = 0 or n < 1.
double ratio_exact(double p, long n);

// (p+1)^{1/p} for p > 0; tends to e as p -> 0 and to 1 as p -> inf.
double ratio_asymptotic(double p);

// Riemann zeta for q > 1: partial sum plus Euler-Maclaurin tail, accurate
// to about 1e-15 relative.
double riemann_zeta(double q);

// n^{1-1/q} zeta(q)^{1/q} for p = -q < -1. Throws for q <= 1.
double ratio_negative(double q, long n);

// max over 1 <= c <= c_max of (1/f(c)) sum_{j=1}^c f(j)/j, where table[j-1]
// holds f(j). Throws ValidationError if c_max is outside the table, an f
// value is not positive, or the table is not concave.
double ratio_general_cost(std::span<const double> table, int c_max);
BigRational ratio_general_cost_exact(std::span<const BigRational> table, int c_max);

// H_n as an exact fraction.
BigRational harmonic_exact(long n);
// H_n in floating point; exact rational path up to n = 10^4.
double harmonic(long n);

// 1 - ln(beta), the rent-or-buy greedy ratio. Throws unless 0 < beta < 1.
double ratio_rob(double beta);

// Gap between the p-means of the two cases of the hardness reduction,
// ((1 - e^{-a(p+1)})/(p+1) + e^{-a(p+1)})^{-1/p}. Increases in a towards
// (p+1)^{1/p}.
double inapprox_gap(double p, double a);

struct SumIntegralCheck {
  bool holds;
  double lhs;     // sum_{j=1}^n j^p
  double rhs;     // n^{p+1} / (p+1)
  double margin;  // lhs - rhs
};

// Power sum against its integral lower bound, for p >= 0.
SumIntegralCheck sum_integral_check(double p, long n);

// Prefix-sum domination of non-increasing sequences (the shorter one is
// padded with zeros). Throws ValidationError if either is not sorted.
bool dominates(std::span<const double> c, std::span<const double> other);

enum class BoundKind { kExact, kAsymptotic, kNegative, kGeneralCost, kRentOrBuy, kGap };

std::string to_string(BoundKind kind);

struct BoundReport {
  BoundKind kind;
  std::optional<double> p_or_q;
  std::optional<long> n;
  std::optional<double> beta;
  std::optional<double> a;
  double value;
};

// "kind,p_or_q,n,beta,a,value"
std::string bounds_csv_header();
std::string to_csv_row(const BoundReport& report);

}  // namespace pmcover
