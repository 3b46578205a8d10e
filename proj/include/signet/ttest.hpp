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

#pragma once

#include <cstddef>
#include <span>

namespace signet::stats {

/// ln B(a, b) for a, b > 0.
double log_beta(double a, double b);

/// Regularized incomplete beta I_x(a, b), a, b > 0, x in [0, 1].
double regularized_incomplete_beta(double a, double b, double x);

/// Natural log of P(T > t) for Student's t with df degrees of freedom.
/// Finite for any finite t; the linear value underflows long before this
/// does (|t| = 50 at df = 1e5 is around 1e-538).
double log_student_t_upper_tail(double t, double df);

/// P(T > t). Throws kInvalidArgument on non-finite t or df <= 0.
double student_t_upper_tail(double t, double df);

struct WelchStatistic {
  double t;
  double df;
};

/// Welch two-sample t statistic and Welch-Satterthwaite degrees of freedom
/// (unbiased variances).
///
/// Needs at least two observations per sample. If both samples are
/// constant, equal means raise kDegenerate; different means give t = +/-inf
/// with df = n_a + n_b - 2, the limit of perfect separation.
WelchStatistic welch_t(std::span<const double> a, std::span<const double> b);

struct TestResult {
  double t_statistic = 0;
  double degrees_of_freedom = 0;
  double p_value = 1;        // one-sided upper tail, H1: mean(h) > mean(l)
  double log10_p_value = 0;  // survives underflow of p_value
  double alpha = 0.01;
  bool rejected = false;     // p_value < alpha, decided in log space
  std::size_t n1 = 0;
  std::size_t n2 = 0;

  bool operator==(const TestResult&) const = default;
};

/// One-sided Welch test of H0: h <= l against H1: h > l.
TestResult one_sided_test(std::span<const double> h, std::span<const double> l,
                          double alpha);

}  // namespace signet::stats
