// Command-line front end: solve cubics, evaluate the closed-form
// operators, cross-check them against the brute-force oracles, and emit
// figure-reproduction data as CSV or JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <cubiprox/cubic.hpp>
#include <cubiprox/epigraph.hpp>
#include <cubiprox/errors.hpp>
#include <cubiprox/oracle.hpp>
#include <cubiprox/perspective.hpp>
#include <cubiprox/point.hpp>
#include <cubiprox/quartic.hpp>
#include <cubiprox/reciprocal.hpp>
#include <cubiprox/saddle.hpp>

namespace {

using json = nlohmann::ordered_json;
using namespace cubiprox;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitFallback = 4;

struct Options {
  bool csv = false;
  bool check = false;
  double tol = 1e-6;
  std::uint64_t seed = oracle::default_seed();
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json num(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

json num(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(num(x));
  return a;
}

void flatten(const json& node, const std::string& prefix, std::vector<std::string>& keys,
             std::vector<std::string>& vals) {
  if (node.is_object()) {
    for (const auto& [k, v] : node.items()) {
      flatten(v, prefix.empty() ? k : prefix + "." + k, keys, vals);
    }
    return;
  }
  keys.push_back(prefix);
  if (node.is_number_float()) {
    vals.push_back(fmt17(node.get<double>()));
  } else if (node.is_array()) {
    std::string cell;
    for (std::size_t i = 0; i < node.size(); ++i) {
      if (i) cell += ';';
      cell += node[i].is_number_float() ? fmt17(node[i].get<double>()) : node[i].dump();
    }
    vals.push_back(cell);
  } else if (node.is_string()) {
    vals.push_back(node.get<std::string>());
  } else {
    vals.push_back(node.dump());
  }
}

void emit(const json& record, const Options& opt) {
  if (!opt.csv) {
    std::cout << record.dump() << "\n";
    return;
  }
  std::vector<std::string> keys;
  std::vector<std::string> vals;
  flatten(record, "", keys, vals);
  for (std::size_t i = 0; i < keys.size(); ++i) std::cout << (i ? "," : "") << keys[i];
  std::cout << "\n";
  for (std::size_t i = 0; i < vals.size(); ++i) std::cout << (i ? "," : "") << vals[i];
  std::cout << "\n";
}

std::vector<double> parse_vector(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find(',', pos);
    const std::string item = text.substr(pos, next == std::string::npos ? next : next - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw invalid_input("trailing characters");
    } catch (const std::exception&) {
      throw invalid_input("malformed vector component '" + item + "'");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (out.empty()) throw invalid_input("empty vector");
  return out;
}

json record_header(const std::string& command) {
  json r;
  r["schema"] = 1;
  r["command"] = command;
  return r;
}

json root_set_json(const RealRootSet& rs) {
  json out;
  json roots = json::array();
  json mults = json::array();
  for (const auto& [root, mult] : roots_with_multiplicity(rs)) {
    roots.push_back(num(root));
    mults.push_back(mult);
  }
  out["roots"] = roots;
  out["multiplicities"] = mults;
  if (const auto* one = std::get_if<OneSimple>(&rs)) {
    out["variant"] = "one_simple";
    out["complex_re"] = num(one->pair.re);
    out["complex_im"] = num(one->pair.im);
  } else if (std::holds_alternative<OneTriple>(rs)) {
    out["variant"] = "one_triple";
  } else if (std::holds_alternative<SimpleAndDouble>(rs)) {
    out["variant"] = "simple_and_double";
  } else {
    out["variant"] = "three_simple";
  }
  return out;
}

const char* branch_name(CubicBranch b) {
  switch (b) {
    case CubicBranch::SingleReal: return "single_real";
    case CubicBranch::DoubleRoot: return "double_root";
    default: return "three_real";
  }
}

// ---------------------------------------------------------------------------
// compute commands

int cmd_cubic(const Options& opt, double a, double b, double c, double d) {
  const Cubic f{a, b, c, d};
  const RealRootSet rs = solve_general(f);
  const Trichotomy tri = classify(f.depress());

  double residual = 0.0;
  for (const auto& [root, mult] : roots_with_multiplicity(rs)) {
    residual = std::max(residual, std::fabs(f.eval(root)));
    (void)mult;
  }

  json r = record_header("cubic");
  r["inputs"] = {{"a", num(a)}, {"b", num(b)}, {"c", num(c)}, {"d", num(d)}};
  r["outputs"] = root_set_json(rs);
  r["branch"] = branch_name(tri.branch);
  r["delta"] = num(tri.delta);
  r["residual"] = num(residual);

  int code = kExitOk;
  if (opt.check) {
    std::vector<double> got;
    for (const auto& [root, mult] : roots_with_multiplicity(rs)) got.push_back(root);
    std::sort(got.begin(), got.end());
    std::vector<double> ref;
    for (const auto& br : oracle::isolate_roots(f)) {
      ref.push_back(oracle::bisect(br, [&](double x) { return f.eval(x); }, 1e-13));
    }
    std::sort(ref.begin(), ref.end());
    double diff = got.size() == ref.size() ? 0.0 : std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < got.size() && got.size() == ref.size(); ++i) {
      diff = std::max(diff, std::fabs(got[i] - ref[i]));
    }
    r["oracle"] = num(ref);
    r["oracle_diff"] = num(diff);
    if (!(diff <= opt.tol)) code = kExitCheckFailed;
  }
  emit(r, opt);
  return code;
}

int cmd_depressed(const Options& opt, double p, double q) {
  const DepressedCubic g{p, q};
  const RealRootSet rs = solve_depressed(g);
  const Trichotomy tri = classify(g);

  double residual = 0.0;
  for (const auto& [root, mult] : roots_with_multiplicity(rs)) {
    residual = std::max(residual, std::fabs(g.eval(root)));
    (void)mult;
  }

  json r = record_header("depressed");
  r["inputs"] = {{"p", num(p)}, {"q", num(q)}};
  r["outputs"] = root_set_json(rs);
  r["branch"] = branch_name(tri.branch);
  r["delta"] = num(tri.delta);
  if (tri.theta) r["theta"] = num(*tri.theta);
  r["residual"] = num(residual);
  emit(r, opt);
  return kExitOk;
}

struct QuarticArgs {
  double alpha = 1.0, beta = 0.0, gamma = 0.0, delta = 0.0, epsilon = 0.0, y = 0.0;
};

int cmd_prox_quartic(const Options& opt, const QuarticArgs& a) {
  const ConvexQuartic h{a.alpha, a.beta, a.gamma, a.delta, a.epsilon};
  SolveInfo info;
  const double x = prox(h, a.y, &info);

  json r = record_header("prox quartic");
  r["inputs"] = {{"alpha", num(a.alpha)}, {"beta", num(a.beta)},   {"gamma", num(a.gamma)},
                 {"delta", num(a.delta)}, {"epsilon", num(a.epsilon)}, {"y", num(a.y)}};
  r["outputs"] = {{"prox", num(x)}};
  r["branch"] = info.branch;
  r["delta"] = num(info.delta);
  r["residual"] = num(info.residual);

  int code = info.fallback ? kExitFallback : kExitOk;
  if (opt.check) {
    const double span = std::fabs(a.y) + 10.0;
    const auto best = oracle::golden_min(
        [&](double t) { return h.value(t) + 0.5 * (t - a.y) * (t - a.y); }, -span, span, 1e-10);
    r["oracle"] = num(best.argmin);
    r["oracle_diff"] = num(std::fabs(x - best.argmin));
    if (!(std::fabs(x - best.argmin) <= opt.tol)) code = kExitCheckFailed;
  }
  emit(r, opt);
  return code;
}

int cmd_prox_reciprocal(const Options& opt, double alpha, double y) {
  const ReciprocalFn f{alpha};
  SolveInfo info;
  const double x = prox_reciprocal(f, y, &info);

  json r = record_header("prox reciprocal");
  r["inputs"] = {{"alpha", num(alpha)}, {"y", num(y)}};
  r["outputs"] = {{"prox", num(x)}, {"breakpoint", num(f.breakpoint())}};
  r["branch"] = info.branch;
  r["delta"] = num(info.delta);
  r["residual"] = num(info.residual);

  int code = info.fallback ? kExitFallback : kExitOk;
  if (opt.check) {
    const auto best = oracle::golden_min(
        [&](double t) { return alpha / t + 0.5 * (t - y) * (t - y); }, 1e-9,
        std::fabs(y) + alpha + 2.0, 1e-10);
    r["oracle"] = num(best.argmin);
    r["oracle_diff"] = num(std::fabs(x - best.argmin));
    if (!(std::fabs(x - best.argmin) <= opt.tol)) code = kExitCheckFailed;
  }
  emit(r, opt);
  return code;
}

double perspective_objective(double gamma, const LabeledPoint& input, const LabeledPoint& cand) {
  const double cn2 = dot(cand.vec, cand.vec);
  double h;
  if (cand.scalar > 0.0) {
    h = cn2 / (2.0 * cand.scalar);
  } else if (cand.scalar == 0.0 && cn2 == 0.0) {
    h = 0.0;
  } else {
    return std::numeric_limits<double>::infinity();
  }
  double d2 = (cand.scalar - input.scalar) * (cand.scalar - input.scalar);
  for (std::size_t i = 0; i < cand.vec.size(); ++i) {
    d2 += (cand.vec[i] - input.vec[i]) * (cand.vec[i] - input.vec[i]);
  }
  return gamma * h + 0.5 * d2;
}

double perspective_oracle_best(double gamma, const LabeledPoint& p) {
  const double ny = norm(p.vec);
  double best = 0.5 * (ny * ny + p.scalar * p.scalar);
  const double lam_cap = std::cbrt(2.0 * ny / gamma) + 3.0;
  const double mu_max = std::fabs(p.scalar) + gamma * lam_cap * lam_cap + 2.0;
  const auto value_at = [&](double mu) {
    const double t = ny / (1.0 + gamma / mu);
    return gamma * t * t / (2.0 * mu) +
           0.5 * ((t - ny) * (t - ny) + (mu - p.scalar) * (mu - p.scalar));
  };
  const int cells = 800;
  double best_mu = 1e-9;
  double best_val = value_at(best_mu);
  for (int i = 1; i <= cells; ++i) {
    const double mu = mu_max * i / cells;
    const double v = value_at(mu);
    if (v < best_val) {
      best_val = v;
      best_mu = mu;
    }
  }
  best_val = std::min(best_val, oracle::golden_min(value_at,
                                                   std::max(1e-12, best_mu - 2.0 * mu_max / cells),
                                                   std::min(mu_max, best_mu + 2.0 * mu_max / cells),
                                                   1e-10)
                                    .min);
  return std::min(best, best_val);
}

int cmd_prox_perspective(const Options& opt, double gamma, const std::string& yvec, double eta) {
  const LabeledPoint p{parse_vector(yvec), eta};
  SolveInfo info;
  const PerspectiveProxResult res = prox_perspective(gamma, p, &info);

  json r = record_header("prox perspective");
  r["inputs"] = {{"gamma", num(gamma)}, {"y", num(p.vec)}, {"eta", num(eta)}};
  r["outputs"] = {{"vec", num(res.point.vec)},
                  {"scalar", num(res.point.scalar)},
                  {"lambda", num(res.lambda)},
                  {"case", res.branch == PerspectiveBranch::Zero ? "zero" : "positive"}};
  r["branch"] = info.branch;
  r["delta"] = num(info.delta);
  r["residual"] = num(info.residual);

  int code = info.fallback ? kExitFallback : kExitOk;
  if (opt.check) {
    const double got = perspective_objective(gamma, p, res.point);
    const double best = perspective_oracle_best(gamma, p);
    r["oracle"] = num(best);
    r["oracle_diff"] = num(got - best);
    if (!(got - best <= opt.tol)) code = kExitCheckFailed;
  }
  emit(r, opt);
  return code;
}

int cmd_conjugate_quartic(const Options& opt, const QuarticArgs& a) {
  const ConvexQuartic h{a.alpha, a.beta, a.gamma, a.delta, a.epsilon};
  SolveInfo info;
  const ConjugateValue cv = conjugate(h, a.y, &info);

  json r = record_header("conjugate quartic");
  r["inputs"] = {{"alpha", num(a.alpha)}, {"beta", num(a.beta)},   {"gamma", num(a.gamma)},
                 {"delta", num(a.delta)}, {"epsilon", num(a.epsilon)}, {"y", num(a.y)}};
  r["outputs"] = {{"value", num(cv.value)}, {"argmax", num(cv.argmax)}};
  r["branch"] = info.branch;
  r["delta"] = num(info.delta);
  r["residual"] = num(info.residual);

  int code = kExitOk;
  if (opt.check) {
    const double span = std::fabs(a.y) + 10.0;
    const auto best = oracle::golden_min(
        [&](double x) { return -(a.y * x - h.value(x)); }, -span, span, 1e-10);
    r["oracle"] = num(-best.min);
    r["oracle_diff"] = num(std::fabs(cv.value - -best.min));
    if (!(std::fabs(cv.value - -best.min) <= opt.tol)) code = kExitCheckFailed;
  }
  emit(r, opt);
  return code;
}

int cmd_conjugate_reciprocal(const Options& opt, double alpha, double y) {
  const ReciprocalFn f{alpha};
  const double v = conjugate_reciprocal(f, y);

  json r = record_header("conjugate reciprocal");
  r["inputs"] = {{"alpha", num(alpha)}, {"y", num(y)}};
  r["outputs"] = {{"value", num(v)}};
  r["branch"] = y > 0.0 ? "infinite" : "finite";
  r["delta"] = num(0.0);
  r["residual"] = num(0.0);

  int code = kExitOk;
  if (opt.check && y < 0.0) {
    const auto best = oracle::golden_min(
        [&](double x) { return -(x * y - alpha / x); }, 1e-9,
        std::sqrt(alpha / std::fabs(y)) * 50.0 + 10.0, 1e-12);
    r["oracle"] = num(-best.min);
    r["oracle_diff"] = num(std::fabs(v - -best.min));
    if (!(std::fabs(v - -best.min) <= opt.tol)) code = kExitCheckFailed;
  }
  emit(r, opt);
  return code;
}

int cmd_project_epigraph(const Options& opt, double alpha, const std::string& vec,
                         double scalar) {
  const LabeledPoint p{parse_vector(vec), scalar};
  SolveInfo info;
  const EpiProjection pr = project_epigraph(alpha, p, &info);

  json r = record_header("project epigraph");
  r["inputs"] = {{"alpha", num(alpha)}, {"vec", num(p.vec)}, {"scalar", num(scalar)}};
  r["outputs"] = {{"vec", num(pr.point.vec)},
                  {"scalar", num(pr.point.scalar)},
                  {"shift", num(pr.shift)}};
  r["branch"] = info.branch;
  r["delta"] = num(info.delta);
  r["residual"] = num(info.residual);

  int code = info.fallback ? kExitFallback : kExitOk;
  if (opt.check) {
    // distance against the radial boundary-curve oracle
    const double nu = norm(p.vec);
    const double tmax = nu + std::sqrt(std::max(0.0, p.scalar) / alpha) + 2.0;
    const auto dist2 = [&](double t) {
      const double dv = t - nu;
      const double dh = alpha * t * t - p.scalar;
      return dv * dv + dh * dh;
    };
    double ref;
    if (alpha * nu * nu <= p.scalar) {
      ref = 0.0;
    } else {
      const auto g = oracle::golden_min(dist2, 0.0, tmax, 1e-10);
      ref = std::sqrt(g.min);
    }
    double d2 = (pr.point.scalar - p.scalar) * (pr.point.scalar - p.scalar);
    for (std::size_t i = 0; i < p.vec.size(); ++i) {
      d2 += (pr.point.vec[i] - p.vec[i]) * (pr.point.vec[i] - p.vec[i]);
    }
    const double got = std::sqrt(d2);
    r["oracle"] = num(ref);
    r["oracle_diff"] = num(got - ref);
    if (!(got - ref <= opt.tol)) code = kExitCheckFailed;
  }
  emit(r, opt);
  return code;
}

int cmd_project_saddle(const Options& opt, const std::string& kind, double alpha, double beta,
                       const std::string& zvec, double gamma) {
  const std::vector<double> z = parse_vector(zvec);
  const SaddleSet S{alpha, beta, z.size()};
  SaddleKind k;
  if (kind == "antidiag") {
    k = SaddleKind::AntiDiag;
  } else if (kind == "diag") {
    k = SaddleKind::Diag;
  } else {
    throw invalid_input("project saddle: --kind must be antidiag or diag");
  }
  SolveInfo info;
  const SaddleProjection P = k == SaddleKind::AntiDiag ? project_antidiag(S, z, gamma, &info)
                                                       : project_diag(S, z, gamma, &info);

  json r = record_header("project saddle");
  r["inputs"] = {{"kind", kind},       {"alpha", num(alpha)}, {"beta", num(beta)},
                 {"z", num(z)},        {"gamma", num(gamma)}};
  r["outputs"] = {{"first", num(P.first)},
                  {"second", num(P.second)},
                  {"gamma", num(P.gamma)},
                  {"root", num(P.root)}};
  r["branch"] = info.branch;
  r["delta"] = num(info.delta);
  r["residual"] = num(info.residual);

  int code = info.fallback ? kExitFallback : kExitOk;
  if (opt.check) {
    const double zeta2 = dot(z, z);
    const double b2 = beta * beta;
    const auto scalar_eq = [&](double x) {
      if (k == SaddleKind::AntiDiag) {
        const double w = 1.0 - x;
        return 2.0 * zeta2 / (w * w) + 2.0 * alpha * alpha * x / b2 + 2.0 * alpha * gamma;
      }
      const double w = 1.0 + x;
      return 2.0 * zeta2 / (w * w) - 2.0 * alpha * alpha * x / b2 - 2.0 * alpha * gamma;
    };
    const oracle::Bracket br{-1.0 + 1e-9, 1.0 - 1e-9, scalar_eq(-1.0 + 1e-9),
                             scalar_eq(1.0 - 1e-9)};
    const double ref = oracle::bisect(br, scalar_eq, 1e-13);
    r["oracle"] = num(ref);
    r["oracle_diff"] = num(std::fabs(P.root - ref));
    if (!(std::fabs(P.root - ref) <= opt.tol)) code = kExitCheckFailed;
  }
  emit(r, opt);
  return code;
}

// ---------------------------------------------------------------------------
// sample

struct SampleRange {
  double from = -5.0;
  double to = 5.0;
  int points = 1001;
};

void require_valid(const SampleRange& r) {
  if (r.points < 1 || !(r.from <= r.to)) throw invalid_input("sample: empty range");
}

double at(const SampleRange& r, int i) {
  return r.points == 1 ? r.from : r.from + (r.to - r.from) * i / (r.points - 1);
}

void sample_header(const Options& opt, json& doc, const char* target) {
  doc = record_header("sample");
  doc["target"] = target;
  (void)opt;
}

int cmd_sample_quartic(const Options& opt, const QuarticArgs& a, const SampleRange& range) {
  require_valid(range);
  const ConvexQuartic h{a.alpha, a.beta, a.gamma, a.delta, a.epsilon};
  if (opt.csv) {
    std::cout << "y,h,conjugate,prox,branch,delta\n";
    for (int i = 0; i < range.points; ++i) {
      const double y = at(range, i);
      SolveInfo info;
      const double x = prox(h, y, &info);
      std::cout << fmt17(y) << ',' << fmt17(h.value(y)) << ',' << fmt17(conjugate(h, y).value)
                << ',' << fmt17(x) << ',' << info.branch << ',' << fmt17(info.delta) << "\n";
    }
    return kExitOk;
  }
  json doc;
  sample_header(opt, doc, "quartic");
  json rows = json::array();
  for (int i = 0; i < range.points; ++i) {
    const double y = at(range, i);
    SolveInfo info;
    const double x = prox(h, y, &info);
    rows.push_back({{"y", num(y)},
                    {"h", num(h.value(y))},
                    {"conjugate", num(conjugate(h, y).value)},
                    {"prox", num(x)},
                    {"branch", info.branch},
                    {"delta", num(info.delta)}});
  }
  doc["rows"] = rows;
  std::cout << doc.dump() << "\n";
  return kExitOk;
}

int cmd_sample_reciprocal(const Options& opt, double alpha, const SampleRange& range) {
  require_valid(range);
  const ReciprocalFn f{alpha};
  if (opt.csv) {
    std::cout << "y,prox,branch,delta\n";
    for (int i = 0; i < range.points; ++i) {
      const double y = at(range, i);
      SolveInfo info;
      const double x = prox_reciprocal(f, y, &info);
      std::cout << fmt17(y) << ',' << fmt17(x) << ',' << info.branch << ','
                << fmt17(info.delta) << "\n";
    }
    return kExitOk;
  }
  json doc;
  sample_header(opt, doc, "reciprocal");
  json rows = json::array();
  for (int i = 0; i < range.points; ++i) {
    const double y = at(range, i);
    SolveInfo info;
    const double x = prox_reciprocal(f, y, &info);
    rows.push_back(
        {{"y", num(y)}, {"prox", num(x)}, {"branch", info.branch}, {"delta", num(info.delta)}});
  }
  doc["rows"] = rows;
  std::cout << doc.dump() << "\n";
  return kExitOk;
}

int cmd_sample_epigraph(const Options& opt, double alpha, const SampleRange& eta,
                        const SampleRange& nu) {
  require_valid(eta);
  require_valid(nu);
  const auto row = [&](double e, double v, SolveInfo& info) {
    LabeledPoint p{{v}, e};
    project_epigraph(alpha, p, &info);
    if (std::string(info.branch) == "interior") {
      // classify against the printed discriminant anyway so the map is
      // complete
      const double w = 2.0 * alpha * e - 1.0;
      info.p = -(w * w) / (12.0 * alpha * alpha);
      info.q = (w * w * w - 27.0 * alpha * alpha * v * v) / (108.0 * alpha * alpha * alpha);
      const double pc = info.p / 3.0;
      const double qc = info.q / 2.0;
      info.delta = pc * pc * pc + qc * qc;
    }
  };
  if (opt.csv) {
    std::cout << "eta,nu,branch,delta\n";
    for (int i = 0; i < eta.points; ++i) {
      for (int j = 0; j < nu.points; ++j) {
        SolveInfo info;
        row(at(eta, i), at(nu, j), info);
        std::cout << fmt17(at(eta, i)) << ',' << fmt17(at(nu, j)) << ',' << info.branch << ','
                  << fmt17(info.delta) << "\n";
      }
    }
    return kExitOk;
  }
  json doc;
  sample_header(opt, doc, "epigraph");
  json rows = json::array();
  for (int i = 0; i < eta.points; ++i) {
    for (int j = 0; j < nu.points; ++j) {
      SolveInfo info;
      row(at(eta, i), at(nu, j), info);
      rows.push_back({{"eta", num(at(eta, i))},
                      {"nu", num(at(nu, j))},
                      {"branch", info.branch},
                      {"delta", num(info.delta)}});
    }
  }
  doc["rows"] = rows;
  std::cout << doc.dump() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// check suites

struct SuiteResult {
  bool pass = true;
  double worst = 0.0;
};

void report(const std::string& name, const SuiteResult& r, int n) {
  std::cout << name << ": " << (r.pass ? "pass" : "FAIL") << " (" << n
            << " instances, worst deviation " << fmt17(r.worst) << ")\n";
}

SuiteResult suite_cubic(std::mt19937_64& gen, int n) {
  SuiteResult out;
  std::uniform_real_distribution<double> coef(-10.0, 10.0);
  for (int i = 0; i < n; ++i) {
    double a = coef(gen);
    while (std::fabs(a) < 0.1) a = coef(gen);
    const Cubic f{a, coef(gen), coef(gen), coef(gen)};
    const auto rs = solve_general(f);
    for (const auto& [root, mult] : roots_with_multiplicity(rs)) {
      const double m = std::max(1.0, std::fabs(root));
      const double scale =
          ((std::fabs(f.a) * m + std::fabs(f.b)) * m + std::fabs(f.c)) * m + std::fabs(f.d);
      const double rel = std::fabs(f.eval(root)) / scale;
      out.worst = std::max(out.worst, rel);
      if (rel > 1e-9) out.pass = false;
      (void)mult;
    }
  }
  return out;
}

SuiteResult suite_quartic(std::mt19937_64& gen, int n) {
  SuiteResult out;
  std::uniform_real_distribution<double> ua(0.2, 2.0);
  std::uniform_real_distribution<double> ub(-2.0, 2.0);
  std::uniform_real_distribution<double> pad(0.0, 3.0);
  std::uniform_real_distribution<double> ud(-3.0, 3.0);
  std::uniform_real_distribution<double> uy(-10.0, 10.0);
  for (int i = 0; i < n; ++i) {
    const double alpha = ua(gen);
    const double beta = ub(gen);
    const ConvexQuartic h{alpha, beta, 3.0 * beta * beta / (8.0 * alpha) + pad(gen), ud(gen),
                          ud(gen)};
    const double y = uy(gen);
    const double x = prox(h, y);
    const auto best = oracle::golden_min(
        [&](double t) { return h.value(t) + 0.5 * (t - y) * (t - y); }, -15.0, 15.0, 1e-10);
    const double d = std::fabs(x - best.argmin);
    out.worst = std::max(out.worst, d);
    if (d > 1e-6) out.pass = false;
  }
  return out;
}

SuiteResult suite_reciprocal(std::mt19937_64& gen, int n) {
  SuiteResult out;
  std::uniform_real_distribution<double> ua(0.2, 5.0);
  std::uniform_real_distribution<double> uy(-50.0, 50.0);
  for (int i = 0; i < n; ++i) {
    const ReciprocalFn f{ua(gen)};
    const double y = uy(gen);
    const double x = prox_reciprocal(f, y);
    const auto best = oracle::golden_min(
        [&](double t) { return f.alpha / t + 0.5 * (t - y) * (t - y); }, 1e-9,
        std::fabs(y) + f.alpha + 2.0, 1e-10);
    const double d = std::fabs(x - best.argmin);
    out.worst = std::max(out.worst, d);
    if (d > 1e-6) out.pass = false;
  }
  return out;
}

SuiteResult suite_epigraph(std::mt19937_64& gen, int n) {
  SuiteResult out;
  std::uniform_real_distribution<double> ua(0.3, 3.0);
  std::uniform_real_distribution<double> uv(-3.0, 3.0);
  std::uniform_real_distribution<double> drop(0.05, 4.0);
  for (int i = 0; i < n; ++i) {
    const double alpha = ua(gen);
    LabeledPoint p;
    p.vec = {uv(gen), uv(gen)};
    const double nu = norm(p.vec);
    p.scalar = alpha * nu * nu - drop(gen);
    const auto pr = project_epigraph(alpha, p);
    const double nu2 = dot(pr.point.vec, pr.point.vec);
    const double defect = std::fabs(alpha * nu2 - pr.point.scalar) /
                          std::max(1.0, alpha * dot(p.vec, p.vec));
    out.worst = std::max(out.worst, defect);
    if (defect > 1e-8) out.pass = false;
  }
  return out;
}

SuiteResult suite_saddle(std::mt19937_64& gen, int n) {
  SuiteResult out;
  std::uniform_real_distribution<double> mag(0.3, 3.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> margin(1e-3, 4.0);
  std::uniform_real_distribution<double> uz(-2.0, 2.0);
  for (int i = 0; i < n; ++i) {
    const bool anti = i % 2 == 0;
    const double alpha = (coin(gen) < 0.5 ? -1.0 : 1.0) * mag(gen);
    const double beta = mag(gen);
    std::vector<double> z{uz(gen)};
    while (std::fabs(z[0]) < 1e-3) z[0] = uz(gen);
    const double zeta2 = z[0] * z[0];
    double gamma;
    if (anti) {
      const double bound = alpha / (beta * beta) - zeta2 / (4.0 * alpha);
      gamma = alpha > 0.0 ? bound - margin(gen) : bound + margin(gen);
    } else {
      const double bound = zeta2 / (4.0 * alpha) - alpha / (beta * beta);
      gamma = alpha > 0.0 ? bound + margin(gen) : bound - margin(gen);
    }
    const SaddleSet S{alpha, beta, 1};
    const auto P = anti ? project_antidiag(S, z, gamma) : project_diag(S, z, gamma);
    const double defect = std::fabs(dot(P.first, P.second) - alpha * P.gamma) /
                          std::max({1.0, zeta2, std::fabs(alpha * gamma)});
    out.worst = std::max(out.worst, defect);
    if (defect > 1e-8 || !(P.root > -1.0 && P.root < 1.0)) out.pass = false;
  }
  return out;
}

SuiteResult suite_perspective(std::mt19937_64& gen, int n) {
  SuiteResult out;
  std::uniform_real_distribution<double> ug(0.3, 3.0);
  std::uniform_real_distribution<double> uv(-3.0, 3.0);
  std::uniform_real_distribution<double> ue(-4.0, 4.0);
  for (int i = 0; i < n; ++i) {
    const double gamma = ug(gen);
    LabeledPoint p;
    p.vec = {uv(gen), uv(gen)};
    p.scalar = ue(gen);
    const auto r = prox_perspective(gamma, p);
    const double got = perspective_objective(gamma, p, r.point);
    const double best = perspective_oracle_best(gamma, p);
    const double d = got - best;
    out.worst = std::max(out.worst, d);
    if (d > 1e-5) out.pass = false;
  }
  return out;
}

int cmd_check(const Options& opt, const std::string& suite, int n) {
  std::mt19937_64 gen{opt.seed};
  bool ok = true;
  const auto run = [&](const std::string& name, auto&& fn) {
    if (suite != "all" && suite != name) return;
    const SuiteResult r = fn(gen, n);
    report(name, r, n);
    ok = ok && r.pass;
  };
  run("cubic", suite_cubic);
  run("quartic", suite_quartic);
  run("reciprocal", suite_reciprocal);
  run("epigraph", suite_epigraph);
  run("saddle", suite_saddle);
  run("perspective", suite_perspective);
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed-form real cubic roots and the prox/projection operators built on them"};
  app.require_subcommand(1);

  Options opt;
  bool json_flag = false;
  app.add_flag("--csv", opt.csv, "emit CSV instead of JSON");
  app.add_flag("--json", json_flag, "emit JSON (default)");
  app.add_flag("--check", opt.check, "cross-check the result against the brute-force oracle");
  app.add_option("--seed", opt.seed, "seed for randomized checks (env CUBIPROX_SEED)");
  app.add_option("--tol", opt.tol, "tolerance for --check comparisons")->default_val(1e-6);

  std::function<int()> action;

  // cubic / depressed
  double ca = 1.0, cb = 0.0, cc = 0.0, cd = 0.0;
  auto* cubic_cmd = app.add_subcommand("cubic", "solve a x^3 + b x^2 + c x + d = 0");
  cubic_cmd->fallthrough();
  cubic_cmd->add_option("-a,--a", ca)->required();
  cubic_cmd->add_option("-b,--b", cb)->required();
  cubic_cmd->add_option("-c,--c", cc)->required();
  cubic_cmd->add_option("-d,--d", cd)->required();
  cubic_cmd->callback([&] { action = [&] { return cmd_cubic(opt, ca, cb, cc, cd); }; });

  double dp = 0.0, dq = 0.0;
  auto* dep_cmd = app.add_subcommand("depressed", "solve z^3 + p z + q = 0");
  dep_cmd->fallthrough();
  dep_cmd->add_option("-p,--p", dp)->required();
  dep_cmd->add_option("-q,--q", dq)->required();
  dep_cmd->callback([&] { action = [&] { return cmd_depressed(opt, dp, dq); }; });

  // prox
  auto* prox_cmd = app.add_subcommand("prox", "proximal mappings");
  prox_cmd->require_subcommand(1);
  prox_cmd->fallthrough();

  QuarticArgs pq;
  auto* prox_quartic = prox_cmd->add_subcommand("quartic", "prox of a convex quartic");
  prox_quartic->fallthrough();
  prox_quartic->add_option("--alpha", pq.alpha);
  prox_quartic->add_option("--beta", pq.beta);
  prox_quartic->add_option("--gamma", pq.gamma);
  prox_quartic->add_option("--delta", pq.delta);
  prox_quartic->add_option("--epsilon", pq.epsilon);
  prox_quartic->add_option("--y", pq.y)->required();
  prox_quartic->callback([&] { action = [&] { return cmd_prox_quartic(opt, pq); }; });

  double pra = 1.0, pry = 0.0;
  auto* prox_recip = prox_cmd->add_subcommand("reciprocal", "prox of alpha/x on x > 0");
  prox_recip->fallthrough();
  prox_recip->add_option("--alpha", pra);
  prox_recip->add_option("--y", pry)->required();
  prox_recip->callback([&] { action = [&] { return cmd_prox_reciprocal(opt, pra, pry); }; });

  double ppg = 1.0, ppe = 0.0;
  std::string ppy;
  auto* prox_persp = prox_cmd->add_subcommand("perspective", "prox of the perspective closure");
  prox_persp->fallthrough();
  prox_persp->add_option("--gamma", ppg);
  prox_persp->add_option("--y", ppy, "comma-separated vector")->required();
  prox_persp->add_option("--eta", ppe)->required();
  prox_persp->callback([&] { action = [&] { return cmd_prox_perspective(opt, ppg, ppy, ppe); }; });

  // conjugate
  auto* conj_cmd = app.add_subcommand("conjugate", "Fenchel conjugates");
  conj_cmd->require_subcommand(1);
  conj_cmd->fallthrough();

  QuarticArgs cq;
  auto* conj_quartic = conj_cmd->add_subcommand("quartic", "conjugate of a convex quartic");
  conj_quartic->fallthrough();
  conj_quartic->add_option("--alpha", cq.alpha);
  conj_quartic->add_option("--beta", cq.beta);
  conj_quartic->add_option("--gamma", cq.gamma);
  conj_quartic->add_option("--delta", cq.delta);
  conj_quartic->add_option("--epsilon", cq.epsilon);
  conj_quartic->add_option("--y", cq.y)->required();
  conj_quartic->callback([&] { action = [&] { return cmd_conjugate_quartic(opt, cq); }; });

  double cra = 1.0, cry = 0.0;
  auto* conj_recip = conj_cmd->add_subcommand("reciprocal", "conjugate of alpha/x");
  conj_recip->fallthrough();
  conj_recip->add_option("--alpha", cra);
  conj_recip->add_option("--y", cry)->required();
  conj_recip->callback([&] { action = [&] { return cmd_conjugate_reciprocal(opt, cra, cry); }; });

  // project
  auto* proj_cmd = app.add_subcommand("project", "projections");
  proj_cmd->require_subcommand(1);
  proj_cmd->fallthrough();

  double pea = 1.0, pes = 0.0;
  std::string pev;
  auto* proj_epi = proj_cmd->add_subcommand("epigraph", "projection onto epi(alpha ||.||^2)");
  proj_epi->fallthrough();
  proj_epi->add_option("--alpha", pea);
  proj_epi->add_option("--vec", pev, "comma-separated vector")->required();
  proj_epi->add_option("--scalar", pes)->required();
  proj_epi->callback([&] { action = [&] { return cmd_project_epigraph(opt, pea, pev, pes); }; });

  std::string psk, psz;
  double psa = 1.0, psb = 1.0, psg = 0.0;
  auto* proj_saddle =
      proj_cmd->add_subcommand("saddle", "projection onto <x,y> = alpha*gamma (two cases)");
  proj_saddle->fallthrough();
  proj_saddle->add_option("--kind", psk, "antidiag | diag")->required();
  proj_saddle->add_option("--alpha", psa);
  proj_saddle->add_option("--beta", psb);
  proj_saddle->add_option("--z", psz, "comma-separated vector")->required();
  proj_saddle->add_option("--gamma", psg)->required();
  proj_saddle->callback(
      [&] { action = [&] { return cmd_project_saddle(opt, psk, psa, psb, psz, psg); }; });

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "figure-reproduction data");
  sample_cmd->require_subcommand(1);
  sample_cmd->fallthrough();

  QuarticArgs sq{1.0, 1.0, 1.0, 1.0, 1.0, 0.0};
  SampleRange sqr;
  auto* sample_quartic = sample_cmd->add_subcommand("quartic", "h, h*, prox over a y range");
  sample_quartic->fallthrough();
  sample_quartic->add_option("--alpha", sq.alpha);
  sample_quartic->add_option("--beta", sq.beta);
  sample_quartic->add_option("--gamma", sq.gamma);
  sample_quartic->add_option("--delta", sq.delta);
  sample_quartic->add_option("--epsilon", sq.epsilon);
  sample_quartic->add_option("--from", sqr.from);
  sample_quartic->add_option("--to", sqr.to);
  sample_quartic->add_option("--points", sqr.points);
  sample_quartic->callback([&] { action = [&] { return cmd_sample_quartic(opt, sq, sqr); }; });

  double sra = 1.0;
  SampleRange srr;
  auto* sample_recip = sample_cmd->add_subcommand("reciprocal", "prox curve of alpha/x");
  sample_recip->fallthrough();
  sample_recip->add_option("--alpha", sra);
  sample_recip->add_option("--from", srr.from);
  sample_recip->add_option("--to", srr.to);
  sample_recip->add_option("--points", srr.points);
  sample_recip->callback([&] { action = [&] { return cmd_sample_reciprocal(opt, sra, srr); }; });

  double sea = 0.5;
  SampleRange se_eta{-2.0, 3.0, 101};
  SampleRange se_nu{0.0, 3.0, 101};
  auto* sample_epi = sample_cmd->add_subcommand("epigraph", "branch map over an (eta, nu) grid");
  sample_epi->fallthrough();
  sample_epi->add_option("--alpha", sea);
  sample_epi->add_option("--eta-from", se_eta.from);
  sample_epi->add_option("--eta-to", se_eta.to);
  sample_epi->add_option("--nu-from", se_nu.from);
  sample_epi->add_option("--nu-to", se_nu.to);
  sample_epi->add_option("--points", se_eta.points);
  sample_epi->callback([&] {
    action = [&] {
      se_nu.points = se_eta.points;
      return cmd_sample_epigraph(opt, sea, se_eta, se_nu);
    };
  });

  // check
  std::string suite = "all";
  int check_n = 500;
  auto* check_cmd = app.add_subcommand("check", "run randomized oracle cross-check suites");
  check_cmd->fallthrough();
  check_cmd
      ->add_option("suite", suite,
                   "cubic | quartic | reciprocal | epigraph | saddle | perspective | all")
      ->required();
  check_cmd->add_option("--n", check_n, "instances per suite");
  check_cmd->callback([&] { action = [&] { return cmd_check(opt, suite, check_n); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    return action();
  } catch (const precondition_violation& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const invalid_input& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitBadInput;
  }
}
