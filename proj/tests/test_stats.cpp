#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "coanet/stats.hpp"
#include "coanet/util.hpp"
#include "doctest.h"

using namespace coanet;
using stats::EffectClass;

namespace {

// null distribution of U by enumerating every split of the pooled sample
double exact_mwu_p(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> pooled(x);
  pooled.insert(pooled.end(), y.begin(), y.end());
  std::size_t n = x.size(), total = pooled.size();
  std::vector<std::size_t> pick(n);
  std::iota(pick.begin(), pick.end(), 0);

  auto wins_of = [&](const std::vector<std::size_t>& idx) {
    std::vector<char> is_x(total, 0);
    for (auto i : idx) is_x[i] = 1;
    double ux = 0.0;
    for (std::size_t i = 0; i < total; ++i) {
      if (!is_x[i]) continue;
      for (std::size_t j = 0; j < total; ++j) {
        if (is_x[j]) continue;
        if (pooled[i] > pooled[j]) ux += 1.0;
        else if (pooled[i] == pooled[j]) ux += 0.5;
      }
    }
    return ux;
  };

  std::vector<std::size_t> obs_idx(n);
  std::iota(obs_idx.begin(), obs_idx.end(), 0);
  double nm = static_cast<double>(n * (total - n));
  double u_obs = std::min(wins_of(obs_idx), nm - wins_of(obs_idx));

  // two-sided p doubles the lower tail of the U_x null distribution
  double hits = 0.0, count = 0.0;
  while (true) {
    if (wins_of(pick) <= u_obs + 1e-12) hits += 1.0;
    count += 1.0;
    // next combination
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == total - n + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return std::min(1.0, 2.0 * hits / count);
}

std::vector<metrics::MetricVector> make_rows(const std::vector<std::int64_t>& papers) {
  std::vector<metrics::MetricVector> rows;
  for (std::size_t i = 0; i < papers.size(); ++i) {
    metrics::MetricVector v;
    v.topic_id = static_cast<int>(i + 1);
    v.n_papers = papers[i];
    v.n_authors = 10;
    rows.push_back(v);
  }
  return rows;
}

}  // namespace

TEST_CASE("special functions agree with known values") {
  CHECK(stats::normal_cdf(0.0) == doctest::Approx(0.5));
  CHECK(stats::normal_cdf(1.959964) == doctest::Approx(0.975).epsilon(1e-6));
  CHECK(stats::normal_cdf(-1.959964) == doctest::Approx(0.025).epsilon(1e-6));
  CHECK(stats::incomplete_beta(1, 1, 0.3) == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(stats::incomplete_beta(2, 2, 0.5) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(stats::incomplete_beta(2, 2, 0.2) ==
        doctest::Approx(3 * 0.04 - 2 * 0.008).epsilon(1e-9));
  CHECK(stats::student_t_two_sided_p(0.0, 10) == doctest::Approx(1.0));
  CHECK(stats::student_t_two_sided_p(3.0, 7) ==
        stats::student_t_two_sided_p(-3.0, 7));
  // t with huge dof approaches the normal tail
  CHECK(stats::student_t_two_sided_p(1.959964, 1e7) == doctest::Approx(0.05).epsilon(1e-4));
}

TEST_CASE("mann-whitney exact examples") {
  auto r = stats::mann_whitney_u({1, 2, 3}, {4, 5, 6});
  CHECK(r.exact);
  CHECK(r.u == doctest::Approx(0.0));
  CHECK(r.p == doctest::Approx(0.1).epsilon(1e-12));

  auto one = stats::mann_whitney_u({1}, {2});
  CHECK(one.exact);
  CHECK(one.p == doctest::Approx(1.0));

  auto sym = stats::mann_whitney_u({4, 5, 6}, {1, 2, 3});
  CHECK(sym.p == doctest::Approx(r.p));
  CHECK(sym.u == doctest::Approx(r.u));
}

TEST_CASE("mann-whitney exact path matches full enumeration") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + rng() % 4, m = 2 + rng() % 4;
    std::vector<double> pooled(n + m);
    std::iota(pooled.begin(), pooled.end(), 1.0);
    std::shuffle(pooled.begin(), pooled.end(), rng);
    std::vector<double> x(pooled.begin(), pooled.begin() + n);
    std::vector<double> y(pooled.begin() + n, pooled.end());
    auto r = stats::mann_whitney_u(x, y);
    CHECK(r.exact);
    CHECK(r.p == doctest::Approx(exact_mwu_p(x, y)).epsilon(1e-9));
  }
}

TEST_CASE("ties force the corrected normal approximation") {
  auto r = stats::mann_whitney_u({1, 1, 2}, {1, 2, 3});
  CHECK_FALSE(r.exact);
  CHECK(r.p > 0.0);
  CHECK(r.p <= 1.0);
}

TEST_CASE("large samples use the normal approximation") {
  std::vector<double> x, y;
  for (int i = 0; i < 40; ++i) {
    x.push_back(i);
    y.push_back(i + 0.5);
  }
  auto r = stats::mann_whitney_u(x, y);
  CHECK_FALSE(r.exact);
  CHECK(r.p > 0.0);
  CHECK(r.p <= 1.0);
  // approximation stays close to enumeration where both are available
  std::vector<double> sx = {3, 9, 12, 15, 21}, sy = {1, 5, 8, 17, 26, 31};
  auto approx = stats::mann_whitney_u(sx, sy);
  CHECK(approx.exact);
  CHECK(approx.p == doctest::Approx(exact_mwu_p(sx, sy)).epsilon(1e-9));
}

TEST_CASE("cliffs delta examples and rank identity") {
  CHECK(stats::cliffs_delta({1, 2, 3}, {4, 5, 6}) == doctest::Approx(-1.0));
  CHECK(stats::cliffs_delta({4, 5, 6}, {1, 2, 3}) == doctest::Approx(1.0));
  CHECK(stats::cliffs_delta({1, 2, 3}, {1, 2, 3}) == doctest::Approx(0.0));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 2 + rng() % 10, m = 2 + rng() % 10;
    std::vector<double> pooled(n + m);
    std::iota(pooled.begin(), pooled.end(), 1.0);
    std::shuffle(pooled.begin(), pooled.end(), rng);
    std::vector<double> x(pooled.begin(), pooled.begin() + n);
    std::vector<double> y(pooled.begin() + n, pooled.end());
    double wins = 0.0;
    for (double a : x)
      for (double b : y)
        if (a > b) wins += 1.0;
    double u = wins;  // tie-free, so U_x is the win count
    double expected = 2.0 * u / (static_cast<double>(n) * m) - 1.0;
    CHECK(stats::cliffs_delta(x, y) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("cliffs delta labels split at the conventional thresholds") {
  CHECK(std::string(stats::cliffs_delta_label(0.0)) == "negligible");
  CHECK(std::string(stats::cliffs_delta_label(-0.146)) == "negligible");
  CHECK(std::string(stats::cliffs_delta_label(0.147)) == "small");
  CHECK(std::string(stats::cliffs_delta_label(0.33)) == "medium");
  CHECK(std::string(stats::cliffs_delta_label(-0.4)) == "medium");
  CHECK(std::string(stats::cliffs_delta_label(0.474)) == "large");
  CHECK(std::string(stats::cliffs_delta_label(-1.0)) == "large");
}

TEST_CASE("bootstrap interval is deterministic and brackets the estimate") {
  std::vector<double> x = {5.1, 6.2, 5.9, 6.8, 5.5, 6.1, 5.8, 6.4};
  std::vector<double> y = {4.9, 5.3, 5.0, 5.8, 4.7, 5.2, 5.6, 5.1};
  auto ci = stats::bootstrap_delta_ci(x, y, 2000, 0.95, 42);
  auto again = stats::bootstrap_delta_ci(x, y, 2000, 0.95, 42);
  CHECK(ci.low == again.low);
  CHECK(ci.high == again.high);
  double point = stats::cliffs_delta(x, y);
  CHECK(ci.low <= point);
  CHECK(ci.high >= point);
  CHECK(ci.low >= -1.0);
  CHECK(ci.high <= 1.0);

  auto other = stats::bootstrap_delta_ci(x, y, 2000, 0.95, 43);
  CHECK((other.low != ci.low || other.high != ci.high));

  // fully separated samples pin the interval at the boundary
  auto edge = stats::bootstrap_delta_ci({10, 11, 12}, {1, 2, 3}, 1000, 0.95, 1);
  CHECK(edge.low == doctest::Approx(1.0));
  CHECK(edge.high == doctest::Approx(1.0));

  CHECK_THROWS_AS(stats::bootstrap_delta_ci(x, y, 0, 0.95, 1), ValidationError);
  CHECK_THROWS_AS(stats::bootstrap_delta_ci(x, y, 1000, 1.5, 1), ValidationError);
}

TEST_CASE("bonferroni correction divides the family level") {
  CHECK(stats::bonferroni_alpha(0.05, 10) == doctest::Approx(0.005));
  CHECK(stats::bonferroni_alpha(0.05, 1) == doctest::Approx(0.05));
  CHECK_THROWS_AS(stats::bonferroni_alpha(0.05, 0), ValidationError);
}

TEST_CASE("ols recovers planted coefficients exactly") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 15 + rng() % 30, k = 1 + rng() % 3;
    std::vector<std::vector<double>> cols(k, std::vector<double>(n));
    for (auto& c : cols)
      for (auto& v : c) v = gauss(rng);
    std::vector<double> beta(k + 1);
    for (auto& b : beta) b = gauss(rng);
    std::vector<double> y(n, beta[0]);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < n; ++i) y[i] += beta[j + 1] * cols[j][i];
    auto fit = stats::ols(cols, y);
    REQUIRE(fit.valid);
    REQUIRE(fit.beta.size() == k + 1);
    for (std::size_t j = 0; j <= k; ++j)
      CHECK(fit.beta[j] == doctest::Approx(beta[j]).epsilon(1e-9));
    CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("ols matches the partialled-out slope") {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::size_t n = 60;
  std::vector<double> x1(n), x2(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x2[i] = gauss(rng);
    x1[i] = 0.6 * x2[i] + gauss(rng);
    y[i] = 1.5 + 2.0 * x1[i] - 1.0 * x2[i] + gauss(rng);
  }
  auto joint = stats::ols({x1, x2}, y);
  REQUIRE(joint.valid);

  auto resid = [&](const std::vector<double>& target) {
    auto f = stats::ols({x2}, target);
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = target[i] - f.beta[0] - f.beta[1] * x2[i];
    return r;
  };
  auto part = stats::ols({resid(x1)}, resid(y));
  REQUIRE(part.valid);
  CHECK(part.beta[1] == doctest::Approx(joint.beta[1]).epsilon(1e-9));
}

TEST_CASE("ols rejects singular designs") {
  std::vector<double> x1 = {1, 2, 3, 4, 5};
  std::vector<double> x2 = {2, 4, 6, 8, 10};
  std::vector<double> y = {1, 2, 2, 3, 4};
  auto fit = stats::ols({x1, x2}, y);
  CHECK_FALSE(fit.valid);
  // no residual degrees of freedom
  CHECK_FALSE(stats::ols({{1, 2}}, {3, 4}).valid);
  CHECK_THROWS_AS(stats::ols({{1, 2, 3}}, {1, 2, 3, 4}), ValidationError);
}

TEST_CASE("ols p-values detect strong and absent effects") {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::size_t n = 200;
  std::vector<double> x(n), noise(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = gauss(rng);
    noise[i] = gauss(rng);
    y[i] = 3.0 * x[i] + 0.1 * gauss(rng);
  }
  auto fit = stats::ols({x, noise}, y);
  REQUIRE(fit.valid);
  CHECK(fit.p[1] < 1e-6);
  CHECK(fit.p[2] > 0.01);
}

TEST_CASE("standardize centers, scales and is idempotent") {
  std::vector<double> v = {2, 4, 4, 4, 5, 5, 7, 9};
  auto z = stats::standardize(v, "x");
  double mean = std::accumulate(z.begin(), z.end(), 0.0) / z.size();
  double ss = 0.0;
  for (double a : z) ss += (a - mean) * (a - mean);
  double sd = std::sqrt(ss / (z.size() - 1));
  CHECK(mean == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(sd == doctest::Approx(1.0).epsilon(1e-12));
  auto zz = stats::standardize(z, "x");
  for (std::size_t i = 0; i < z.size(); ++i)
    CHECK(zz[i] == doctest::Approx(z[i]).epsilon(1e-12));

  CHECK_THROWS_WITH_AS(stats::standardize({3, 3, 3}, "paper counts"),
                       doctest::Contains("paper counts"), ValidationError);
}

TEST_CASE("popularity classification ranks once by paper count") {
  auto rows = make_rows({100, 50, 10, 5, 1});
  auto classes = stats::classify_popularity(rows, 0.2);
  REQUIRE(classes.size() == 5);
  CHECK(classes[0] == stats::PopClass::kPopular);
  CHECK(classes[4] == stats::PopClass::kNiche);
  for (std::size_t i = 1; i < 4; ++i) CHECK(classes[i] == stats::PopClass::kMid);
}

TEST_CASE("popularity cutoff of one half splits everything") {
  auto rows = make_rows({7, 9, 3, 5});
  auto classes = stats::classify_popularity(rows, 0.5);
  CHECK(classes[0] == stats::PopClass::kPopular);  // 7 ranks second
  CHECK(classes[1] == stats::PopClass::kPopular);  // 9 ranks first
  CHECK(classes[2] == stats::PopClass::kNiche);
  CHECK(classes[3] == stats::PopClass::kNiche);
}

TEST_CASE("tied paper counts break toward the smaller topic id") {
  auto rows = make_rows({4, 4, 4, 4});
  auto classes = stats::classify_popularity(rows, 0.5);
  CHECK(classes[0] == stats::PopClass::kPopular);
  CHECK(classes[1] == stats::PopClass::kPopular);
  CHECK(classes[2] == stats::PopClass::kNiche);
  CHECK(classes[3] == stats::PopClass::kNiche);
}

TEST_CASE("degenerate popularity splits are validation errors") {
  auto rows = make_rows({4, 4, 4, 4});
  CHECK_THROWS_AS(stats::classify_popularity(rows, 0.2), ValidationError);  // floor = 0
  CHECK_THROWS_AS(stats::classify_popularity({}, 0.2), ValidationError);
}

TEST_CASE("group comparison wires ranks, delta and interval together") {
  auto rows = make_rows({30, 29, 28, 10, 9, 8, 3, 2, 1});
  for (std::size_t i = 0; i < rows.size(); ++i)
    rows[i].collaboration_rate = {static_cast<double>(rows.size() - i), true};
  auto classes = stats::classify_popularity(rows, 1.0 / 3);
  auto cmp = stats::compare_metric(rows, classes, 0, 0.005, 1000, 11);
  REQUIRE(cmp.valid);
  CHECK(cmp.n_popular == 3);
  CHECK(cmp.n_niche == 3);
  CHECK(cmp.delta == doctest::Approx(1.0));
  CHECK(cmp.delta_label == "large");
  CHECK(cmp.test.p == doctest::Approx(0.1).epsilon(1e-12));
  CHECK_FALSE(cmp.significant);  // 0.1 is not under alpha = 0.005
  CHECK(cmp.delta_ci.low <= cmp.delta);

  // undefined metric values drop out; too few leaves the row invalid
  rows[0].collaboration_rate.valid = false;
  rows[1].collaboration_rate.valid = false;
  auto sparse = stats::compare_metric(rows, classes, 0, 0.005, 1000, 11);
  CHECK_FALSE(sparse.valid);
}

TEST_CASE("size correlation finds an exact log relationship") {
  std::vector<metrics::MetricVector> rows;
  for (int i = 0; i < 8; ++i) {
    metrics::MetricVector v;
    v.topic_id = i + 1;
    v.n_papers = 10;
    v.n_authors = 5 + 7 * i;
    v.modularity = {std::log(static_cast<double>(v.n_authors)), true};
    rows.push_back(v);
  }
  auto corr = stats::size_correlation(rows, 4);
  REQUIRE(corr.valid);
  CHECK(corr.n == 8);
  CHECK(corr.r == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(corr.p < 1e-6);

  std::vector<metrics::MetricVector> two(rows.begin(), rows.begin() + 2);
  CHECK_FALSE(stats::size_correlation(two, 4).valid);
}

TEST_CASE("effect classification follows the significance pattern") {
  double a = 0.005;
  CHECK(stats::classify_effect(1.26, 1e-4, 0.55, 1e-4, a) == EffectClass::kRobust);
  CHECK(stats::classify_effect(-1.60, 1e-4, -0.73, 1e-4, a) == EffectClass::kRobust);
  CHECK(stats::classify_effect(-0.96, 1e-4, 0.46, 0.004, a) == EffectClass::kRobustReversed);
  CHECK(stats::classify_effect(-0.88, 1e-4, -0.42, 0.008, a) == EffectClass::kConfounded);
  CHECK(stats::classify_effect(1.75, 1e-4, -0.41, 0.026, a) == EffectClass::kConfounded);
  CHECK(stats::classify_effect(0.05, 0.8, -2.33, 1e-4, a) == EffectClass::kEmergent);
  CHECK(stats::classify_effect(0.1, 0.5, 0.1, 0.5, a) == EffectClass::kNone);
  // the boundary is strict
  CHECK(stats::classify_effect(1.0, 0.005, 1.0, 0.004, a) == EffectClass::kEmergent);
  CHECK(std::string(stats::effect_class_name(EffectClass::kRobustReversed)) ==
        "robust_reversed");
}

TEST_CASE("regression suite recovers a clean popularity effect") {
  std::vector<metrics::MetricVector> rows;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    metrics::MetricVector v;
    v.topic_id = i + 1;
    v.n_papers = 100 - i;
    v.n_authors = 5 + static_cast<int>(rng() % 40);
    bool popular = i < 15;
    v.modularity = {popular ? 2.0 : 1.0, true};
    rows.push_back(v);
  }
  auto classes = stats::classify_popularity(rows, 0.5);
  auto row = stats::regress_metric(rows, classes, 4, 0.005);
  REQUIRE(row.valid);
  CHECK(row.n == 30);
  CHECK(row.beta_simple > 0.9);
  CHECK(row.p_simple < 1e-6);
  CHECK(row.effect == EffectClass::kRobust);
  CHECK(row.r2_simple == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("regression marks constant size designs invalid") {
  std::vector<metrics::MetricVector> rows;
  for (int i = 0; i < 10; ++i) {
    metrics::MetricVector v;
    v.topic_id = i + 1;
    v.n_papers = 50 - i;
    v.n_authors = 12;
    v.modularity = {i < 5 ? 1.0 : 0.5, true};
    rows.push_back(v);
  }
  auto classes = stats::classify_popularity(rows, 0.5);
  auto row = stats::regress_metric(rows, classes, 4, 0.005);
  CHECK_FALSE(row.valid);
}
