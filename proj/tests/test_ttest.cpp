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

#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "signet/error.hpp"
#include "signet/ttest.hpp"

using namespace signet;
using namespace signet::stats;

namespace {

double rel_err(double got, double want) {
  return std::fabs(got - want) / std::fabs(want);
}

}  // namespace

TEST_CASE("quadrature oracle sanity") {
  // Cauchy (df = 1): P(T > t) = 1/2 - atan(t) / pi.
  for (double t : {-3.0, 0.0, 0.7, 12.0}) {
    const double want = 0.5 - std::atan(t) / M_PI;
    CHECK(rel_err(static_cast<double>(std::exp(oracle::log_t_tail(t, 1))),
                  want) < 1e-13);
  }
  // df = 2: P(T > t) = (1 - t / sqrt(2 + t^2)) / 2.
  for (double t : {-1.0, 0.5, 9.0}) {
    const double want = 0.5 * (1 - t / std::sqrt(2 + t * t));
    CHECK(rel_err(static_cast<double>(std::exp(oracle::log_t_tail(t, 2))),
                  want) < 1e-13);
  }
}

TEST_CASE("identical samples give t = 0 and p = 1/2") {
  const std::vector<double> a{0, 1, 0, 1, 0, 1};
  const auto w = welch_t(a, a);
  CHECK(w.t == 0.0);
  const auto r = one_sided_test(a, a, 0.05);
  CHECK(r.p_value == 0.5);
  CHECK_FALSE(r.rejected);
}

TEST_CASE("swapping samples negates t and keeps df") {
  const std::vector<double> a{2.1, 2.5, 2.3, 2.7}, b{1.9, 2.0, 2.1};
  const auto x = welch_t(a, b), y = welch_t(b, a);
  CHECK(x.t == -y.t);
  CHECK(x.df == y.df);
}

TEST_CASE("Welch statistic matches a 40-digit reference") {
  // Reference values from exact rational arithmetic carried to 40 digits.
  const std::vector<double> a{2.1, 2.5, 2.3, 2.7}, b{1.9, 2.0, 2.1};
  const auto w = welch_t(a, b);
  CHECK(rel_err(w.t, 2.828427124746190097603377448419396157139) < 1e-13);
  CHECK(rel_err(w.df, 4.075471698113207547169811320754716981132) < 1e-13);
  const auto r = one_sided_test(a, b, 0.05);
  CHECK(rel_err(r.p_value, 0.02320360496323857573711745619382561356024) <
        1e-11);
  CHECK(r.rejected);
}

TEST_CASE("four-point binary samples") {
  // t = sqrt(2), df = 6 exactly; P(T_6 > sqrt 2) = 53/512.
  const std::vector<double> h{1, 1, 1, 0}, l{0, 0, 0, 1};
  const auto r = one_sided_test(h, l, 0.05);
  CHECK(rel_err(r.t_statistic, std::sqrt(2.0)) < 1e-15);
  CHECK(rel_err(r.degrees_of_freedom, 6.0) < 1e-14);
  CHECK(rel_err(r.p_value, 0.103515625) < 1e-13);
  CHECK_FALSE(r.rejected);
  CHECK(one_sided_test(h, l, 0.2).rejected);
}

TEST_CASE("upper tail at t = 0 is one half for any df") {
  for (double df : {0.5, 1.0, 3.0, 40.0, 1e6})
    CHECK(student_t_upper_tail(0.0, df) == 0.5);
}

TEST_CASE("tail limits") {
  CHECK(student_t_upper_tail(1e300, 5) == 0.0);
  CHECK(student_t_upper_tail(-1e300, 5) == 1.0);
  CHECK_THROWS_AS(student_t_upper_tail(
                      std::numeric_limits<double>::infinity(), 5),
                  Error);
  CHECK_THROWS_AS(student_t_upper_tail(1.0, 0.0), Error);
  CHECK_THROWS_AS(student_t_upper_tail(1.0, -2.0), Error);
  CHECK_THROWS_AS(student_t_upper_tail(std::nan(""), 3.0), Error);
}

TEST_CASE("t = 2, df = 10 against quadrature and a 40-digit reference") {
  const double got = student_t_upper_tail(2.0, 10.0);
  CHECK(rel_err(got, 0.03669401738537018280893128470578624335018) < 1e-13);
  const double q = static_cast<double>(std::exp(oracle::log_t_tail(2.0L, 10.0L)));
  CHECK(rel_err(got, q) < 1e-12);
}

TEST_CASE("grid against quadrature") {
  for (double df : {1.0, 2.0, 5.0, 10.0, 30.0, 100.0})
    for (int k = -20; k <= 20; ++k) {
      const double t = 0.5 * k;
      const double q = static_cast<double>(std::exp(oracle::log_t_tail(t, df)));
      INFO("df = " << df << ", t = " << t);
      CHECK(rel_err(student_t_upper_tail(t, df), q) < 1e-9);
    }
}

TEST_CASE("extreme tail stays finite in log space") {
  const double l = log_student_t_upper_tail(50.0, 1e5);
  REQUIRE(std::isfinite(l));
  CHECK(rel_err(l / std::log(10.0), -538.2861422211641800414640970297279731882) <
        1e-10);
  CHECK(rel_err(l, static_cast<double>(oracle::log_t_tail(50.0L, 1e5L))) < 1e-9);
  CHECK(student_t_upper_tail(-50.0, 1e5) == 1.0);
  for (double t = 1; t <= 50; t += 1)
    CHECK(std::isfinite(log_student_t_upper_tail(t, 1e5)));
}

TEST_CASE("complementary tails sum to one") {
  RandomStream rng(5);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<double> h(2 + rng.below(30)), l(2 + rng.below(30));
    for (auto& v : h) v = rng.uniform() + 0.3 * rng.uniform();
    for (auto& v : l) v = rng.uniform();
    const double s = one_sided_test(h, l, 0.05).p_value +
                     one_sided_test(l, h, 0.05).p_value;
    CHECK(std::fabs(s - 1.0) < 1e-14);
  }
}

TEST_CASE("rejection agrees with p < alpha") {
  RandomStream rng(8);
  for (int rep = 0; rep < 300; ++rep) {
    std::vector<double> h(3 + rng.below(20)), l(3 + rng.below(20));
    for (auto& v : h) v = rng.uniform() + 0.2;
    for (auto& v : l) v = rng.uniform();
    const auto r = one_sided_test(h, l, 0.05);
    CHECK(r.rejected == (r.p_value < 0.05));
    CHECK(r.log10_p_value == doctest::Approx(std::log10(r.p_value)).epsilon(1e-12));
  }
}

TEST_CASE("maximal separation") {
  const std::vector<double> ones(5, 1.0), zeros(5, 0.0);
  const auto r = one_sided_test(ones, zeros, 0.01);
  CHECK(std::isinf(r.t_statistic));
  CHECK(r.t_statistic > 0);
  CHECK(r.p_value == 0.0);
  CHECK(r.rejected);
  const auto back = one_sided_test(zeros, ones, 0.01);
  CHECK(back.p_value == 1.0);
  CHECK_FALSE(back.rejected);
}

TEST_CASE("error conditions") {
  const std::vector<double> one{1.0}, two{1.0, 2.0}, flat{3.0, 3.0, 3.0};
  CHECK_THROWS_WITH_AS(welch_t(one, two), doctest::Contains("insufficient"),
                       Error);
  try {
    welch_t(flat, flat);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.category() == ErrorCategory::kDegenerate);
  }
  CHECK_THROWS_AS(one_sided_test(two, two, 0.0), Error);
  CHECK_THROWS_AS(one_sided_test(two, two, 1.0), Error);
  const std::vector<double> bad{1.0, std::nan("")};
  CHECK_THROWS_AS(welch_t(bad, two), Error);
}

TEST_CASE("incomplete beta special cases") {
  CHECK(regularized_incomplete_beta(2, 3, 0) == 0.0);
  CHECK(regularized_incomplete_beta(2, 3, 1) == 1.0);
  // I_x(1, 1) = x; I_x(a, 1) = x^a.
  for (double x : {0.1, 0.5, 0.93}) {
    CHECK(rel_err(regularized_incomplete_beta(1, 1, x), x) < 1e-14);
    CHECK(rel_err(regularized_incomplete_beta(3.5, 1, x), std::pow(x, 3.5)) <
          1e-13);
  }
  CHECK(rel_err(log_beta(2, 3), std::log(1.0 / 12)) < 1e-14);
}
