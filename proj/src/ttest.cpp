/** Copyright 2026 The Signet Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * 	http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "signet/ttest.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "signet/error.hpp"

#if defined(__GLIBC__)
extern "C" double lgamma_r(double, int*);
#endif

namespace signet::stats {

namespace {

constexpr double kTiny = 1e-300;
constexpr double kEps = 1e-16;
constexpr int kMaxIterations = 200000;
const double kLn10 = std::log(10.0);

double log_gamma(double x) {
#if defined(__GLIBC__)
  int sign = 0;
  return lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

// Continued fraction for I_x(a, b) (modified Lentz). Converges quickly
// for x < (a + 1) / (a + b + 2).
double beta_continued_fraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw Error(ErrorCategory::kInvalidArgument,
              "incomplete beta continued fraction did not converge (a=" +
                  std::to_string(a) + ", b=" + std::to_string(b) +
                  ", x=" + std::to_string(x) + ")");
}

// ln I_x(a, b) given x, y = 1 - x and their logs, each supplied
// independently so neither is formed by cancellation.
double log_ibeta(double a, double b, double x, double y, double log_x,
                 double log_y) {
  if (x <= 0.0) return -std::numeric_limits<double>::infinity();
  if (y <= 0.0) return 0.0;
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return a * log_x + b * log_y - log_beta(a, b) - std::log(a) +
           std::log(beta_continued_fraction(a, b, x));
  }
  const double complement =
      std::exp(b * log_y + a * log_x - log_beta(a, b) - std::log(b) +
               std::log(beta_continued_fraction(b, a, y)));
  return std::log1p(-complement);
}

void check_tail_args(double t, double df) {
  if (!std::isfinite(t))
    throw Error(ErrorCategory::kInvalidArgument,
                "t statistic must be finite");
  if (!std::isfinite(df) || !(df > 0.0))
    throw Error(ErrorCategory::kInvalidArgument,
                "degrees of freedom must be finite and positive");
}

struct Moments {
  double mean;
  double var;  // unbiased
};

// Corrected two-pass algorithm.
Moments moments(std::span<const double> v) {
  const double n = static_cast<double>(v.size());
  double sum = 0.0;
  for (double x : v) sum += x;
  const double mean = sum / n;
  double ss = 0.0, comp = 0.0;
  for (double x : v) {
    const double d = x - mean;
    ss += d * d;
    comp += d;
  }
  double var = (ss - comp * comp / n) / (n - 1.0);
  if (var < 0.0) var = 0.0;
  return {mean, var};
}

void check_sample(std::span<const double> v, const char* name) {
  if (v.size() < 2)
    throw Error(ErrorCategory::kInsufficientData,
                std::string("insufficient samples: ") + name + " has " +
                    std::to_string(v.size()) + " observation(s), need >= 2");
  for (double x : v)
    if (!std::isfinite(x))
      throw Error(ErrorCategory::kInvalidArgument,
                  std::string("non-finite observation in ") + name);
}

}  // namespace

double log_beta(double a, double b) {
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0) || !(x >= 0.0) || !(x <= 1.0))
    throw Error(ErrorCategory::kInvalidArgument,
                "incomplete beta needs a, b > 0 and x in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double y = 1.0 - x;
  return std::exp(log_ibeta(a, b, x, y, std::log(x), std::log1p(-x)));
}

double log_student_t_upper_tail(double t, double df) {
  check_tail_args(t, df);
  if (t == 0.0) return std::log(0.5);

  // P(|T| > |t|) = I_x(df/2, 1/2) with x = df / (df + t^2). Work with
  // s = sqrt(df), r = |t| and h = hypot(s, r) so that x = (s/h)^2 and
  // 1 - x = (r/h)^2 never overflow or cancel.
  const double s = std::sqrt(df);
  const double r = std::fabs(t);
  const double h = std::hypot(s, r);
  const double x = (s / h) * (s / h);
  const double y = (r / h) * (r / h);
  const double log_x = y < 0.5 ? std::log1p(-y) : 2.0 * std::log(s / h);
  const double log_y = x < 0.5 ? std::log1p(-x) : 2.0 * std::log(r / h);

  const double log_two_sided = log_ibeta(0.5 * df, 0.5, x, y, log_x, log_y);
  const double log_half = std::log(0.5);
  if (t > 0.0) return log_half + log_two_sided;
  return std::log1p(-std::exp(log_half + log_two_sided));
}

double student_t_upper_tail(double t, double df) {
  return std::exp(log_student_t_upper_tail(t, df));
}

WelchStatistic welch_t(std::span<const double> a, std::span<const double> b) {
  check_sample(a, "first sample");
  check_sample(b, "second sample");
  const auto ma = moments(a);
  const auto mb = moments(b);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());

  if (ma.var == 0.0 && mb.var == 0.0) {
    if (ma.mean == mb.mean)
      throw Error(ErrorCategory::kDegenerate,
                  "degenerate samples: both constant with equal means");
    const double inf = std::numeric_limits<double>::infinity();
    return {ma.mean > mb.mean ? inf : -inf, na + nb - 2.0};
  }

  const double sa = ma.var / na;
  const double sb = mb.var / nb;
  const double se2 = sa + sb;
  const double t = (ma.mean - mb.mean) / std::sqrt(se2);
  const double df =
      se2 * se2 / (sa * sa / (na - 1.0) + sb * sb / (nb - 1.0));
  return {t, df};
}

TestResult one_sided_test(std::span<const double> h, std::span<const double> l,
                          double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw Error(ErrorCategory::kInvalidArgument, "alpha must be in (0, 1)");
  const auto w = welch_t(h, l);

  double log_p = 0.0;
  if (std::isinf(w.t))
    log_p = w.t > 0 ? -std::numeric_limits<double>::infinity() : 0.0;
  else
    log_p = log_student_t_upper_tail(w.t, w.df);

  TestResult r;
  r.t_statistic = w.t;
  r.degrees_of_freedom = w.df;
  r.p_value = std::exp(log_p);
  r.log10_p_value = log_p / kLn10;
  r.alpha = alpha;
  r.rejected = log_p < std::log(alpha);
  r.n1 = h.size();
  r.n2 = l.size();
  return r;
}

}  // namespace signet::stats
