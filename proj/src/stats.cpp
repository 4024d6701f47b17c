#include "coanet/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "coanet/util.hpp"

namespace coanet::stats {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

namespace {

// Continued fraction for the incomplete beta (Lentz's method).
double beta_cf(double a, double b, double x) {
  const double tiny = 1e-300;
  const double eps = 1e-15;
  double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 300; ++m) {
    double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) break;
  }
  return h;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                    a * std::log(x) + b * std::log(1.0 - x);
  double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
  return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double dof) {
  if (dof <= 0.0) return 1.0;
  if (!std::isfinite(t)) return 0.0;
  double x = dof / (dof + t * t);
  double p = incomplete_beta(dof / 2.0, 0.5, x);
  return std::min(1.0, std::max(0.0, p));
}

namespace {

// Midranks of the pooled sample; also accumulates the tie-term sum(t^3-t).
std::pair<std::vector<double>, double> midranks(const std::vector<double>& pooled) {
  const std::size_t n = pooled.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pooled[a] < pooled[b]; });
  std::vector<double> ranks(n);
  double tie_term = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) ++j;
    double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    double t = static_cast<double>(j - i + 1);
    tie_term += t * t * t - t;
    i = j + 1;
  }
  return {ranks, tie_term};
}

// P(U <= u) under the null: counts[k] is the number of interleavings with
// U = k, i.e. partitions of k fitting an n x m box. Built by expanding the
// Gaussian binomial product prod_i (1 - q^(m+i)) / (1 - q^i).
double exact_mwu_cdf(std::size_t n, std::size_t m, double u) {
  const std::size_t umax = n * m;
  std::vector<long double> counts(umax + 1, 0.0L);
  counts[0] = 1.0L;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t uu = i; uu <= umax; ++uu) counts[uu] += counts[uu - i];
    std::size_t s = m + i;
    for (std::size_t uu = umax; uu >= s && uu <= umax; --uu) {
      counts[uu] -= counts[uu - s];
      if (uu == s) break;
    }
  }
  long double total = 0.0L, below = 0.0L;
  for (std::size_t k = 0; k <= umax; ++k) {
    total += counts[k];
    if (static_cast<double>(k) <= u + 1e-9) below += counts[k];
  }
  return static_cast<double>(below / total);
}

}  // namespace

MannWhitneyResult mann_whitney_u(const std::vector<double>& x,
                                 const std::vector<double>& y) {
  MannWhitneyResult res;
  const std::size_t n = x.size(), m = y.size();
  if (n == 0 || m == 0) return res;
  std::vector<double> pooled;
  pooled.reserve(n + m);
  pooled.insert(pooled.end(), x.begin(), x.end());
  pooled.insert(pooled.end(), y.begin(), y.end());
  auto [ranks, tie_term] = midranks(pooled);

  double rx = 0.0;
  for (std::size_t i = 0; i < n; ++i) rx += ranks[i];
  double ux = rx - static_cast<double>(n) * (static_cast<double>(n) + 1.0) / 2.0;
  double uy = static_cast<double>(n) * static_cast<double>(m) - ux;
  res.u = std::min(ux, uy);

  bool ties = tie_term > 0.0;
  if (std::min(n, m) < 8 && !ties &&
      static_cast<double>(n) * static_cast<double>(m) <= 1e6) {
    res.exact = true;
    res.p = std::min(1.0, 2.0 * exact_mwu_cdf(n, m, res.u));
    return res;
  }
  double nm = static_cast<double>(n) * static_cast<double>(m);
  double big_n = static_cast<double>(n + m);
  double var = nm / 12.0 *
               ((big_n + 1.0) - tie_term / (big_n * (big_n - 1.0)));
  if (var <= 0.0) {
    res.p = 1.0;
    return res;
  }
  double mu = nm / 2.0;
  // continuity correction toward the mean
  double z = (res.u - mu + 0.5) / std::sqrt(var);
  res.p = std::min(1.0, 2.0 * normal_cdf(z));
  return res;
}

double cliffs_delta(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.empty() || y.empty()) return 0.0;
  std::vector<double> ys(y);
  std::sort(ys.begin(), ys.end());
  double gt = 0.0, lt = 0.0;
  for (double v : x) {
    auto lo = std::lower_bound(ys.begin(), ys.end(), v);
    auto hi = std::upper_bound(ys.begin(), ys.end(), v);
    gt += static_cast<double>(lo - ys.begin());       // y strictly below v
    lt += static_cast<double>(ys.end() - hi);         // y strictly above v
  }
  return (gt - lt) / (static_cast<double>(x.size()) * static_cast<double>(y.size()));
}

const char* cliffs_delta_label(double delta) {
  double a = std::fabs(delta);
  if (a < 0.147) return "negligible";
  if (a < 0.33) return "small";
  if (a < 0.474) return "medium";
  return "large";
}

Interval bootstrap_delta_ci(const std::vector<double>& x, const std::vector<double>& y,
                            int iterations, double level, std::uint64_t seed) {
  if (iterations < 1) throw ValidationError("bootstrap iterations must be >= 1");
  if (level <= 0.0 || level >= 1.0)
    throw ValidationError("bootstrap confidence level must be in (0,1)");
  std::vector<double> samples;
  samples.reserve(iterations);
  std::vector<double> bx(x.size()), by(y.size());
  for (int it = 0; it < iterations; ++it) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(it)));
    std::uniform_int_distribution<std::size_t> px(0, x.size() - 1);
    std::uniform_int_distribution<std::size_t> py(0, y.size() - 1);
    for (auto& v : bx) v = x[px(rng)];
    for (auto& v : by) v = y[py(rng)];
    samples.push_back(cliffs_delta(bx, by));
  }
  std::sort(samples.begin(), samples.end());
  auto quantile = [&](double q) {
    double idx = q * static_cast<double>(samples.size() - 1);
    auto lo = static_cast<std::size_t>(idx);
    std::size_t hi = std::min(lo + 1, samples.size() - 1);
    double frac = idx - static_cast<double>(lo);
    return samples[lo] * (1.0 - frac) + samples[hi] * frac;
  };
  double tail = (1.0 - level) / 2.0;
  return {quantile(tail), quantile(1.0 - tail)};
}

double bonferroni_alpha(double family_alpha, std::size_t tests) {
  if (tests == 0) throw ValidationError("bonferroni needs at least one test");
  return family_alpha / static_cast<double>(tests);
}

OlsFit ols(const std::vector<std::vector<double>>& columns, const std::vector<double>& y) {
  OlsFit fit;
  const std::size_t n = y.size();
  const std::size_t k = columns.size() + 1;  // + intercept
  if (n <= k) return fit;
  for (const auto& col : columns)
    if (col.size() != n) throw ValidationError("regression columns differ in length");

  // design matrix access: x(i, 0) = 1
  auto x = [&](std::size_t i, std::size_t j) -> double {
    return j == 0 ? 1.0 : columns[j - 1][i];
  };

  // normal equations X'X b = X'y
  std::vector<std::vector<double>> xtx(k, std::vector<double>(k, 0.0));
  std::vector<double> xty(k, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      xty[a] += x(i, a) * y[i];
      for (std::size_t b = a; b < k; ++b) xtx[a][b] += x(i, a) * x(i, b);
    }
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < a; ++b) xtx[a][b] = xtx[b][a];

  // invert X'X by Gauss-Jordan with partial pivoting, solving for the
  // coefficient vector and the covariance factor in one pass
  std::vector<std::vector<double>> aug(k, std::vector<double>(2 * k + 1, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = xtx[i][j];
    aug[i][k + i] = 1.0;
    aug[i][2 * k] = xty[i];
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (std::fabs(aug[r][col]) > std::fabs(aug[pivot][col])) pivot = r;
    if (std::fabs(aug[pivot][col]) < 1e-12) return fit;  // singular design
    std::swap(aug[col], aug[pivot]);
    double d = aug[col][col];
    for (auto& v : aug[col]) v /= d;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col) continue;
      double f = aug[r][col];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < 2 * k + 1; ++c) aug[r][c] -= f * aug[col][c];
    }
  }

  fit.beta.resize(k);
  for (std::size_t i = 0; i < k; ++i) fit.beta[i] = aug[i][2 * k];

  double y_mean = 0.0;
  for (double v : y) y_mean += v;
  y_mean /= static_cast<double>(n);
  double rss = 0.0, tss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double pred = 0.0;
    for (std::size_t j = 0; j < k; ++j) pred += fit.beta[j] * x(i, j);
    rss += (y[i] - pred) * (y[i] - pred);
    tss += (y[i] - y_mean) * (y[i] - y_mean);
  }
  double dof = static_cast<double>(n - k);
  double s2 = rss / dof;
  fit.se.resize(k);
  fit.t.resize(k);
  fit.p.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    double var = s2 * aug[i][k + i];
    fit.se[i] = var > 0.0 ? std::sqrt(var) : 0.0;
    fit.t[i] = fit.se[i] > 0.0 ? fit.beta[i] / fit.se[i]
                               : std::numeric_limits<double>::infinity();
    fit.p[i] = student_t_two_sided_p(fit.t[i], dof);
  }
  fit.r2 = tss > 0.0 ? 1.0 - rss / tss : 0.0;
  fit.adj_r2 = 1.0 - (1.0 - fit.r2) * (static_cast<double>(n) - 1.0) / dof;
  fit.n = n;
  fit.k = k;
  fit.valid = true;
  return fit;
}

std::vector<double> standardize(const std::vector<double>& v, const std::string& what) {
  if (v.size() < 2) throw ValidationError("cannot standardize " + what + ": too few values");
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  double sd = std::sqrt(ss / (static_cast<double>(v.size()) - 1.0));
  if (sd <= 0.0) throw ValidationError("cannot standardize " + what + ": zero variance");
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] - mean) / sd;
  return out;
}

std::vector<PopClass> classify_popularity(const std::vector<metrics::MetricVector>& rows,
                                          double cutoff) {
  if (cutoff <= 0.0 || cutoff > 0.5)
    throw ValidationError("popularity cutoff must be in (0, 0.5]");
  if (rows.empty()) throw ValidationError("no topics to classify");
  const std::size_t n = rows.size();
  auto k = static_cast<std::size_t>(cutoff * static_cast<double>(n));
  if (k == 0) throw ValidationError("popularity cutoff selects zero topics");
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  // one ranking: paper count descending, ties toward the smaller topic id;
  // top k are popular, bottom k niche, so the groups can never overlap
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (rows[a].n_papers != rows[b].n_papers) return rows[a].n_papers > rows[b].n_papers;
    return rows[a].topic_id < rows[b].topic_id;
  });
  std::vector<PopClass> classes(n, PopClass::kMid);
  for (std::size_t i = 0; i < k; ++i) classes[order[i]] = PopClass::kPopular;
  for (std::size_t i = n - k; i < n; ++i) classes[order[i]] = PopClass::kNiche;
  return classes;
}

namespace {

std::vector<double> group_values(const std::vector<metrics::MetricVector>& rows,
                                 const std::vector<PopClass>& classes, PopClass which,
                                 std::size_t metric) {
  std::vector<double> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (classes[i] != which) continue;
    const auto& m = metrics::metric_value(rows[i], metric);
    if (m.valid) out.push_back(m.value);
  }
  return out;
}

}  // namespace

ComparisonRow compare_metric(const std::vector<metrics::MetricVector>& rows,
                             const std::vector<PopClass>& classes, std::size_t metric,
                             double alpha, int bootstrap_iterations, std::uint64_t seed) {
  ComparisonRow row;
  row.metric = metric;
  auto pop = group_values(rows, classes, PopClass::kPopular, metric);
  auto niche = group_values(rows, classes, PopClass::kNiche, metric);
  row.n_popular = pop.size();
  row.n_niche = niche.size();
  if (pop.size() < 2 || niche.size() < 2) return row;
  row.valid = true;
  row.test = mann_whitney_u(pop, niche);
  row.delta = cliffs_delta(pop, niche);
  row.delta_label = cliffs_delta_label(row.delta);
  row.delta_ci = bootstrap_delta_ci(pop, niche, bootstrap_iterations, 0.95,
                                    derive_seed(seed, metric));
  row.significant = row.test.p < alpha;
  return row;
}

SizeCorrelation size_correlation(const std::vector<metrics::MetricVector>& rows,
                                 std::size_t metric) {
  SizeCorrelation out;
  out.metric = metric;
  std::vector<double> mv, sv;
  for (const auto& r : rows) {
    const auto& m = metrics::metric_value(r, metric);
    if (!m.valid || r.n_authors <= 0) continue;
    mv.push_back(m.value);
    sv.push_back(std::log(static_cast<double>(r.n_authors)));
  }
  out.n = mv.size();
  if (out.n < 3) return out;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < mv.size(); ++i) {
    mx += sv[i];
    my += mv[i];
  }
  mx /= static_cast<double>(out.n);
  my /= static_cast<double>(out.n);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < mv.size(); ++i) {
    double dx = sv[i] - mx, dy = mv[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) return out;
  out.r = sxy / std::sqrt(sxx * syy);
  double dof = static_cast<double>(out.n - 2);
  double denom = 1.0 - out.r * out.r;
  double t = denom > 0.0 ? out.r * std::sqrt(dof / denom)
                         : std::numeric_limits<double>::infinity();
  out.p = student_t_two_sided_p(t, dof);
  out.valid = true;
  return out;
}

const char* effect_class_name(EffectClass c) {
  switch (c) {
    case EffectClass::kRobust: return "robust";
    case EffectClass::kRobustReversed: return "robust_reversed";
    case EffectClass::kConfounded: return "confounded";
    case EffectClass::kEmergent: return "emergent";
    default: return "none";
  }
}

EffectClass classify_effect(double beta_simple, double p_simple, double beta_control,
                            double p_control, double alpha) {
  bool sig_s = p_simple < alpha;
  bool sig_c = p_control < alpha;
  if (sig_s && sig_c) {
    bool same_sign = (beta_simple >= 0.0) == (beta_control >= 0.0);
    return same_sign ? EffectClass::kRobust : EffectClass::kRobustReversed;
  }
  if (sig_s && !sig_c) return EffectClass::kConfounded;
  if (!sig_s && sig_c) return EffectClass::kEmergent;
  return EffectClass::kNone;
}

RegressionRow regress_metric(const std::vector<metrics::MetricVector>& rows,
                             const std::vector<PopClass>& classes, std::size_t metric,
                             double alpha) {
  RegressionRow out;
  out.metric = metric;
  std::vector<double> y, pop, size;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (classes[i] == PopClass::kMid) continue;
    const auto& m = metrics::metric_value(rows[i], metric);
    if (!m.valid || rows[i].n_authors <= 0) continue;  // pairwise deletion
    y.push_back(m.value);
    pop.push_back(classes[i] == PopClass::kPopular ? 1.0 : 0.0);
    size.push_back(std::log(static_cast<double>(rows[i].n_authors)));
  }
  out.n = y.size();
  if (out.n < 5) return out;

  std::string name = metrics::metric_name(metric);
  std::vector<double> ys, pops, sizes;
  try {
    ys = standardize(y, name);
    pops = standardize(pop, "popularity indicator for " + name);
    sizes = standardize(size, "network size for " + name);
  } catch (const ValidationError&) {
    return out;  // degenerate column, leave the row invalid
  }
  std::vector<double> inter(ys.size());
  for (std::size_t i = 0; i < inter.size(); ++i) inter[i] = pops[i] * sizes[i];

  OlsFit m1 = ols({pops}, ys);
  OlsFit m2 = ols({pops, sizes}, ys);
  OlsFit m3 = ols({pops, sizes, inter}, ys);
  if (!m1.valid || !m2.valid || !m3.valid) return out;

  out.beta_simple = m1.beta[1];
  out.se_simple = m1.se[1];
  out.p_simple = m1.p[1];
  out.r2_simple = m1.adj_r2;
  out.beta_control = m2.beta[1];
  out.se_control = m2.se[1];
  out.p_control = m2.p[1];
  out.beta_size = m2.beta[2];
  out.p_size = m2.p[2];
  out.r2_control = m2.adj_r2;
  out.beta_interaction = m3.beta[3];
  out.p_interaction = m3.p[3];
  out.r2_full = m3.adj_r2;
  out.effect = classify_effect(out.beta_simple, out.p_simple, out.beta_control,
                               out.p_control, alpha);
  out.valid = true;
  return out;
}

}  // namespace coanet::stats
