#include "coanet/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "coanet/util.hpp"

namespace coanet::report {

using nlohmann::json;

void AnalysisOptions::validate() const {
  if (cutoff <= 0.0 || cutoff > 0.5)
    throw ValidationError("popularity cutoff must be in (0, 0.5]");
  if (alpha <= 0.0 || alpha >= 1.0)
    throw ValidationError("significance level must be in (0, 1)");
  if (bootstrap_iterations < 1000)
    throw ValidationError("reported intervals need >= 1000 bootstrap iterations");
  if (sensitivity_cutoffs.empty())
    throw ValidationError("at least one sensitivity cutoff is required");
  for (double c : sensitivity_cutoffs)
    if (c <= 0.0 || c > 0.5)
      throw ValidationError("sensitivity cutoffs must be in (0, 0.5]");
}

AnalysisReport analyze(const std::vector<metrics::MetricVector>& rows,
                       const AnalysisOptions& options) {
  options.validate();
  if (rows.size() < 10)
    throw DataError("analysis needs at least 10 topics, got " +
                    std::to_string(rows.size()));
  AnalysisReport rep;
  rep.options = options;
  rep.n_topics = rows.size();

  auto classes = stats::classify_popularity(rows, options.cutoff);
  for (auto c : classes) {
    if (c == stats::PopClass::kPopular) ++rep.n_popular;
    if (c == stats::PopClass::kNiche) ++rep.n_niche;
  }

  for (std::size_t i = 0; i < metrics::kMetricCount; ++i) {
    rep.comparisons.push_back(stats::compare_metric(
        rows, classes, i, options.alpha, options.bootstrap_iterations, options.seed));
    rep.correlations.push_back(stats::size_correlation(rows, i));
    rep.regressions.push_back(stats::regress_metric(rows, classes, i, options.alpha));
  }

  for (double cutoff : options.sensitivity_cutoffs) {
    auto sc = stats::classify_popularity(rows, cutoff);
    for (std::size_t i = 0; i < metrics::kMetricCount; ++i) {
      SensitivityCell cell;
      cell.cutoff = cutoff;
      cell.metric = i;
      std::vector<double> pop, niche;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& m = metrics::metric_value(rows[r], i);
        if (!m.valid) continue;
        if (sc[r] == stats::PopClass::kPopular) pop.push_back(m.value);
        else if (sc[r] == stats::PopClass::kNiche) niche.push_back(m.value);
      }
      if (pop.size() >= 2 && niche.size() >= 2) {
        cell.valid = true;
        cell.delta = stats::cliffs_delta(pop, niche);
        cell.p = stats::mann_whitney_u(pop, niche).p;
        cell.significant = cell.p < options.alpha;
      }
      rep.sensitivity.push_back(cell);
    }
  }
  return rep;
}

namespace {

json options_to_json(const AnalysisOptions& o) {
  return json{{"cutoff", o.cutoff},
              {"alpha", o.alpha},
              {"bootstrap_iterations", o.bootstrap_iterations},
              {"seed", o.seed},
              {"sensitivity_cutoffs", o.sensitivity_cutoffs}};
}

}  // namespace

std::string to_json(const AnalysisReport& rep) {
  json j;
  j["options"] = options_to_json(rep.options);
  j["n_topics"] = rep.n_topics;
  j["n_popular"] = rep.n_popular;
  j["n_niche"] = rep.n_niche;

  j["comparisons"] = json::array();
  for (const auto& c : rep.comparisons) {
    json r{{"metric", metrics::metric_name(c.metric)}, {"valid", c.valid}};
    if (c.valid) {
      r["n_popular"] = c.n_popular;
      r["n_niche"] = c.n_niche;
      r["u"] = c.test.u;
      r["p"] = c.test.p;
      r["exact"] = c.test.exact;
      r["delta"] = c.delta;
      r["delta_label"] = c.delta_label;
      r["delta_ci"] = {c.delta_ci.low, c.delta_ci.high};
      r["significant"] = c.significant;
    }
    j["comparisons"].push_back(r);
  }

  j["correlations"] = json::array();
  for (const auto& c : rep.correlations) {
    json r{{"metric", metrics::metric_name(c.metric)}, {"valid", c.valid}};
    if (c.valid) {
      r["n"] = c.n;
      r["r"] = c.r;
      r["p"] = c.p;
    }
    j["correlations"].push_back(r);
  }

  j["regressions"] = json::array();
  for (const auto& g : rep.regressions) {
    json r{{"metric", metrics::metric_name(g.metric)}, {"valid", g.valid}};
    if (g.valid) {
      r["n"] = g.n;
      r["beta_simple"] = g.beta_simple;
      r["se_simple"] = g.se_simple;
      r["p_simple"] = g.p_simple;
      r["r2_simple"] = g.r2_simple;
      r["beta_control"] = g.beta_control;
      r["se_control"] = g.se_control;
      r["p_control"] = g.p_control;
      r["beta_size"] = g.beta_size;
      r["p_size"] = g.p_size;
      r["r2_control"] = g.r2_control;
      r["beta_interaction"] = g.beta_interaction;
      r["p_interaction"] = g.p_interaction;
      r["r2_full"] = g.r2_full;
      r["effect"] = stats::effect_class_name(g.effect);
    }
    j["regressions"].push_back(r);
  }

  j["sensitivity"] = json::array();
  for (const auto& s : rep.sensitivity) {
    json r{{"cutoff", s.cutoff},
           {"metric", metrics::metric_name(s.metric)},
           {"valid", s.valid}};
    if (s.valid) {
      r["delta"] = s.delta;
      r["p"] = s.p;
      r["significant"] = s.significant;
    }
    j["sensitivity"].push_back(r);
  }
  return j.dump(2) + "\n";
}

namespace {

std::size_t metric_index(const std::string& name) {
  for (std::size_t i = 0; i < metrics::kMetricCount; ++i)
    if (name == metrics::metric_name(i)) return i;
  throw DataError("unknown metric name in report: " + name);
}

}  // namespace

AnalysisReport from_json(const std::string& json_text) try {
  json j = json::parse(json_text, nullptr, false);
  if (j.is_discarded()) throw DataError("report is not valid JSON");
  AnalysisReport rep;
  const auto& o = j.at("options");
  rep.options.cutoff = o.at("cutoff").get<double>();
  rep.options.alpha = o.at("alpha").get<double>();
  rep.options.bootstrap_iterations = o.at("bootstrap_iterations").get<int>();
  rep.options.seed = o.at("seed").get<std::uint64_t>();
  rep.options.sensitivity_cutoffs =
      o.at("sensitivity_cutoffs").get<std::vector<double>>();
  rep.n_topics = j.at("n_topics").get<std::size_t>();
  rep.n_popular = j.at("n_popular").get<std::size_t>();
  rep.n_niche = j.at("n_niche").get<std::size_t>();

  for (const auto& r : j.at("comparisons")) {
    stats::ComparisonRow c;
    c.metric = metric_index(r.at("metric").get<std::string>());
    c.valid = r.at("valid").get<bool>();
    if (c.valid) {
      c.n_popular = r.at("n_popular").get<std::size_t>();
      c.n_niche = r.at("n_niche").get<std::size_t>();
      c.test.u = r.at("u").get<double>();
      c.test.p = r.at("p").get<double>();
      c.test.exact = r.at("exact").get<bool>();
      c.delta = r.at("delta").get<double>();
      c.delta_label = r.at("delta_label").get<std::string>();
      c.delta_ci.low = r.at("delta_ci")[0].get<double>();
      c.delta_ci.high = r.at("delta_ci")[1].get<double>();
      c.significant = r.at("significant").get<bool>();
    }
    rep.comparisons.push_back(c);
  }
  for (const auto& r : j.at("correlations")) {
    stats::SizeCorrelation c;
    c.metric = metric_index(r.at("metric").get<std::string>());
    c.valid = r.at("valid").get<bool>();
    if (c.valid) {
      c.n = r.at("n").get<std::size_t>();
      c.r = r.at("r").get<double>();
      c.p = r.at("p").get<double>();
    }
    rep.correlations.push_back(c);
  }
  for (const auto& r : j.at("regressions")) {
    stats::RegressionRow g;
    g.metric = metric_index(r.at("metric").get<std::string>());
    g.valid = r.at("valid").get<bool>();
    if (g.valid) {
      g.n = r.at("n").get<std::size_t>();
      g.beta_simple = r.at("beta_simple").get<double>();
      g.se_simple = r.at("se_simple").get<double>();
      g.p_simple = r.at("p_simple").get<double>();
      g.r2_simple = r.at("r2_simple").get<double>();
      g.beta_control = r.at("beta_control").get<double>();
      g.se_control = r.at("se_control").get<double>();
      g.p_control = r.at("p_control").get<double>();
      g.beta_size = r.at("beta_size").get<double>();
      g.p_size = r.at("p_size").get<double>();
      g.r2_control = r.at("r2_control").get<double>();
      g.beta_interaction = r.at("beta_interaction").get<double>();
      g.p_interaction = r.at("p_interaction").get<double>();
      g.r2_full = r.at("r2_full").get<double>();
      std::string name = r.at("effect").get<std::string>();
      for (auto e : {stats::EffectClass::kNone, stats::EffectClass::kRobust,
                     stats::EffectClass::kRobustReversed, stats::EffectClass::kConfounded,
                     stats::EffectClass::kEmergent})
        if (name == stats::effect_class_name(e)) g.effect = e;
    }
    rep.regressions.push_back(g);
  }
  for (const auto& r : j.at("sensitivity")) {
    SensitivityCell s;
    s.cutoff = r.at("cutoff").get<double>();
    s.metric = metric_index(r.at("metric").get<std::string>());
    s.valid = r.at("valid").get<bool>();
    if (s.valid) {
      s.delta = r.at("delta").get<double>();
      s.p = r.at("p").get<double>();
      s.significant = r.at("significant").get<bool>();
    }
    rep.sensitivity.push_back(s);
  }
  return rep;
} catch (const json::exception& e) {
  throw DataError(std::string("malformed report json: ") + e.what());
}

namespace {

std::string fmt(double v, int prec = 3) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*f", prec, v);
  return buf;
}

std::string fmt_p(double p) {
  if (p < 0.001) return "<0.001";
  return fmt(p, 3);
}

std::string stars(double p) {
  if (p < 0.001) return "***";
  if (p < 0.01) return "**";
  if (p < 0.05) return "*";
  return "";
}

void pad(std::string& s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
}

std::string row_line(std::vector<std::string> cells, const std::vector<std::size_t>& w) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    pad(cells[i], w[i]);
    out += cells[i];
    if (i + 1 < cells.size()) out += "  ";
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out + "\n";
}

}  // namespace

std::string render_text(const AnalysisReport& rep) {
  std::ostringstream out;
  out << "Popularity split: " << rep.n_topics << " topics, top/bottom "
      << fmt(rep.options.cutoff * 100.0, 0) << "% -> " << rep.n_popular
      << " popular vs " << rep.n_niche << " niche\n";
  out << "Per-test alpha " << format_double(rep.options.alpha) << ", bootstrap "
      << rep.options.bootstrap_iterations << " iterations, seed "
      << rep.options.seed << "\n\n";

  out << "Group comparison (Mann-Whitney U, Cliff's delta, 95% bootstrap CI)\n";
  std::vector<std::size_t> w1 = {22, 10, 8, 8, 11, 18, 5};
  out << row_line({"metric", "p", "delta", "label", "", "ci", "sig"}, w1);
  for (const auto& c : rep.comparisons) {
    if (!c.valid) {
      out << row_line({metrics::metric_name(c.metric), "-", "-", "-", "", "-", ""}, w1);
      continue;
    }
    out << row_line({metrics::metric_name(c.metric), fmt_p(c.test.p), fmt(c.delta),
                     c.delta_label, "",
                     "[" + fmt(c.delta_ci.low) + ", " + fmt(c.delta_ci.high) + "]",
                     c.significant ? "yes" : "no"},
                    w1);
  }
  out << "\n";

  out << "Correlation with ln(network size)\n";
  std::vector<std::size_t> w2 = {22, 8, 10, 6};
  out << row_line({"metric", "r", "p", "n"}, w2);
  for (const auto& c : rep.correlations) {
    if (!c.valid) {
      out << row_line({metrics::metric_name(c.metric), "-", "-", "-"}, w2);
      continue;
    }
    out << row_line({metrics::metric_name(c.metric), fmt(c.r), fmt_p(c.p),
                     std::to_string(c.n)},
                    w2);
  }
  out << "\n";

  out << "Regression on popularity (standardized coefficients)\n";
  std::vector<std::size_t> w3 = {22, 12, 12, 12, 12, 16};
  out << row_line({"metric", "b_simple", "b_control", "b_size", "b_interact",
                   "classification"},
                  w3);
  for (const auto& g : rep.regressions) {
    if (!g.valid) {
      out << row_line({metrics::metric_name(g.metric), "-", "-", "-", "-", "-"}, w3);
      continue;
    }
    out << row_line({metrics::metric_name(g.metric),
                     fmt(g.beta_simple, 2) + stars(g.p_simple),
                     fmt(g.beta_control, 2) + stars(g.p_control),
                     fmt(g.beta_size, 2) + stars(g.p_size),
                     fmt(g.beta_interaction, 2) + stars(g.p_interaction),
                     stats::effect_class_name(g.effect)},
                    w3);
  }
  out << "\n";

  out << "Cutoff sensitivity (Cliff's delta, * = p < alpha)\n";
  std::vector<double> cutoffs = rep.options.sensitivity_cutoffs;
  std::vector<std::size_t> w4(1 + cutoffs.size());
  w4[0] = 22;
  for (std::size_t i = 0; i < cutoffs.size(); ++i) w4[1 + i] = 10;
  std::vector<std::string> head = {"metric"};
  for (double c : cutoffs) head.push_back(fmt(c * 100.0, 0) + "%");
  out << row_line(head, w4);
  for (std::size_t m = 0; m < metrics::kMetricCount; ++m) {
    std::vector<std::string> cells = {metrics::metric_name(m)};
    for (std::size_t ci = 0; ci < cutoffs.size(); ++ci) {
      const SensitivityCell* cell = nullptr;
      for (const auto& s : rep.sensitivity)
        if (s.metric == m && s.cutoff == cutoffs[ci]) cell = &s;
      if (!cell || !cell->valid) cells.push_back("-");
      else cells.push_back(fmt(cell->delta) + (cell->significant ? "*" : ""));
    }
    out << row_line(cells, w4);
  }
  return out.str();
}

}  // namespace coanet::report
