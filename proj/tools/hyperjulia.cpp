#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperjulia/detail/parallel.hpp"
#include "hyperjulia/hyperjulia.hpp"
#include "hyperjulia/map_spec.hpp"
#include "hyperjulia/report_json.hpp"

namespace hj = hyperjulia;
using hj::cplx;
using hj::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInvalid = 2, kInconclusive = 3 };

struct Config {
  std::string spec;
  std::string suite = "all";
  std::vector<std::string> sigma;
  std::vector<std::string> points;
  std::vector<std::string> z;
  std::string z0 = "0";
  int k = 1;
  std::uint64_t seed = 1;
  int samples = 20;
  double tol_check = 1e-9;
  double tol_eq = 1e-7;
  double R = 1.0;
  std::string out;
  std::string format = "json";
  // sweep
  std::string var = "z";
  std::vector<double> range;
  int steps = 20;
  std::string path = "radial";
  // beta
  std::string method = "both";
  // random
  int degree = 3;
  int count = 1;
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0,1) from the top 53 bits, independent of the standard library's distributions.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  cplx disk(double radius) {
    const double r = radius * std::sqrt(uniform());
    return std::polar(r, 2.0 * std::numbers::pi * uniform());
  }

 private:
  std::mt19937_64 engine_;
};

cplx parse_complex(const std::string& s) {
  std::string t = s;
  for (char& c : t)
    if (c == ';') c = ',';
  const auto comma = t.find(',');
  std::size_t used = 0;
  try {
    if (comma == std::string::npos) {
      const double re = std::stod(t, &used);
      if (used != t.size()) throw std::invalid_argument(s);
      return {re, 0.0};
    }
    const double re = std::stod(t.substr(0, comma));
    const double im = std::stod(t.substr(comma + 1));
    return {re, im};
  } catch (const std::exception&) {
    throw hj::Error(hj::ErrorKind::invalid_argument, "cannot parse complex number '" + s + "' (expected re or re,im)");
  }
}

std::vector<cplx> parse_complex_list(const std::vector<std::string>& v) {
  std::vector<cplx> out;
  for (const auto& s : v) out.push_back(parse_complex(s));
  return out;
}

json load_spec(const std::string& spec) {
  hj::require(!spec.empty(), hj::ErrorKind::invalid_argument, "--spec is required");
  std::string text = spec;
  if (spec.front() != '{' && spec.front() != '[') {
    std::ifstream in(spec);
    hj::require(static_cast<bool>(in), hj::ErrorKind::invalid_argument, "cannot open spec file '" + spec + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw hj::Error(hj::ErrorKind::invalid_argument, std::string("spec is not valid JSON: ") + e.what());
  }
}

std::vector<hj::SelfMap> load_maps(const std::string& spec) {
  const json j = load_spec(spec);
  std::vector<hj::SelfMap> maps;
  try {
    if (j.is_array()) {
      for (const auto& e : j) maps.push_back(hj::parse_map_spec(e));
    } else {
      maps.push_back(hj::parse_map_spec(j));
    }
  } catch (const json::exception& e) {
    throw hj::Error(hj::ErrorKind::invalid_argument, std::string("malformed map spec: ") + e.what());
  }
  return maps;
}

void write_output(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  hj::require(static_cast<bool>(out), hj::ErrorKind::invalid_argument, "cannot write '" + cfg.out + "'");
  out << text;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool wants_auto_sigma(const Config& cfg) { return cfg.sigma.empty() || (cfg.sigma.size() == 1 && cfg.sigma[0] == "auto"); }

std::vector<hj::BoundaryPoint> explicit_sigmas(const Config& cfg) {
  std::vector<hj::BoundaryPoint> out;
  if (wants_auto_sigma(cfg)) {
    out.push_back(hj::BoundaryPoint(1.0));
    return out;
  }
  for (const auto& s : cfg.sigma) out.push_back(hj::BoundaryPoint(parse_complex(s), 1e-9));
  return out;
}

// ---------------------------------------------------------------------------
// verify

struct Job {
  std::function<std::vector<hj::VerificationReport>()> run;
};

struct SuiteContext {
  const hj::SelfMap& f;
  const Config& cfg;
  hj::Tolerances tol;
  std::vector<cplx> zs;      // evaluation points
  std::vector<cplx> ws;      // secondary points, one per z
  std::vector<cplx> points;  // user chain points
};

std::vector<Job> suite_julia(const SuiteContext& c) {
  std::vector<Job> jobs;
  for (const auto& sigma : explicit_sigmas(c.cfg)) {
    const hj::BoundaryDilation d = hj::dilation(c.f, sigma);
    hj::require(d.finite(), hj::ErrorKind::invalid_argument, "infinite boundary dilation at sigma");
    for (cplx z : c.zs) {
      jobs.push_back({[&c, d, z] { return std::vector{hj::check_julia(c.f, d.sigma, d.tau, d.beta, hj::DiskPoint(z), c.tol, d.confidence)}; }});
    }
    jobs.push_back({[&c, d] { return std::vector{hj::check_horocycle_image(c.f, d.sigma, d.tau, d.beta, c.cfg.R, 1000, c.tol)}; }});
  }
  return jobs;
}

std::vector<Job> suite_two_point(const SuiteContext& c, bool mercer) {
  std::vector<Job> jobs;
  for (const auto& sigma : explicit_sigmas(c.cfg)) {
    for (std::size_t i = 0; i < c.zs.size(); ++i) {
      const cplx z = c.zs[i];
      const cplx w = c.points.empty() ? c.ws[i] : c.points.front();
      if (!mercer) {
        jobs.push_back({[&c, sigma, z, w] { return std::vector{hj::check_two_point_julia(c.f, sigma, hj::DiskPoint(z), hj::DiskPoint(w), c.tol)}; }});
        continue;
      }
      jobs.push_back({[&c, sigma, z, w] {
        const hj::DiskPoint wp(w), zp(z);
        auto r = hj::check_mercer(c.f, sigma, wp, zp, c.tol);
        const hj::MercerDisk d = hj::mercer_disk(c.f, sigma, wp, zp);
        const hj::EuclideanDisk e = hj::mercer_image_disk(c.f, sigma, wp, zp);
        const double diff = std::max(std::abs(d.center - e.center), std::abs(d.radius - e.radius));
        auto agree = hj::make_report("mercer-image-agreement", diff, 1e-8, std::nullopt, c.tol);
        agree.with("map", c.f.label()).with("sigma", sigma.value()).with("w", w).with("z", z);
        return std::vector{r, agree};
      }});
    }
  }
  return jobs;
}

std::vector<Job> suite_multipoint(const SuiteContext& c, Rng& rng) {
  std::vector<Job> jobs;
  const int k = c.cfg.k;
  hj::require(k >= 1, hj::ErrorKind::invalid_argument, "--k must be >= 1 for the multipoint suite");
  hj::require(c.points.empty() || static_cast<int>(c.points.size()) == k, hj::ErrorKind::invalid_argument,
              "--points must list exactly k chain points");
  for (const auto& sigma : explicit_sigmas(c.cfg)) {
    for (cplx z : c.zs) {
      std::vector<cplx> pts = c.points;
      while (static_cast<int>(pts.size()) < k) pts.push_back(rng.disk(0.9));
      jobs.push_back({[&c, sigma, z, pts] {
        std::vector<hj::DiskPoint> dp;
        for (cplx p : pts) dp.emplace_back(p);
        const hj::DeltaChain chain(c.f, dp);
        const hj::BetaChain b = hj::beta_chain(chain, sigma);
        return std::vector{hj::check_multipoint_julia(chain, b, hj::DiskPoint(z), c.tol)};
      }});
    }
  }
  return jobs;
}

std::vector<Job> suite_lower_bounds(const SuiteContext& c) {
  std::vector<Job> jobs;
  int k = c.cfg.k;
  if (auto d = c.f.blaschke_degree()) k = std::min(k, *d - 1);
  hj::require(k >= 0, hj::ErrorKind::invalid_argument, "lower bounds need a chain length >= 0");
  std::vector<cplx> pts = c.points;
  pts.resize(static_cast<std::size_t>(k) + 1, 0.0);
  for (const auto& sigma : explicit_sigmas(c.cfg)) {
    jobs.push_back({[&c, sigma, pts, k] {
      std::vector<hj::DiskPoint> dp;
      for (int i = 0; i < k; ++i) dp.emplace_back(pts[static_cast<std::size_t>(i)]);
      const hj::DeltaChain chain(c.f, dp);
      const hj::BoundaryDilation d = hj::dilation(c.f, sigma);
      hj::require(d.finite(), hj::ErrorKind::invalid_argument, "infinite boundary dilation at sigma");
      const hj::BetaChain b = hj::beta_chain(chain, d);
      const hj::DiskPoint last(pts.back());
      auto full = hj::verify_ladder(hj::lower_bound_ladder(chain, b, last), c.f, d.beta, c.tol, d.confidence);
      auto simple = hj::verify_ladder(hj::lower_bound_simplified(chain, b, last), c.f, d.beta, c.tol, d.confidence);
      simple.name = "lower-bound-simplified";
      simple.equality_expected.reset();
      full.with("sigma", sigma.value());
      simple.with("sigma", sigma.value());
      return std::vector{full, simple};
    }});
  }
  return jobs;
}

std::vector<Job> suite_cowen_pommerenke(const SuiteContext& c, bool multiple) {
  const hj::DiskPoint z0(parse_complex(c.cfg.z0));
  std::vector<hj::BoundaryPoint> sigmas;
  if (wants_auto_sigma(c.cfg)) {
    sigmas = multiple ? hj::boundary_condition_points(c.f, z0, c.cfg.k) : hj::boundary_fixed_points(c.f);
  } else {
    sigmas = explicit_sigmas(c.cfg);
  }
  return {{[&c, z0, sigmas, multiple] {
    std::vector<double> betas;
    for (const auto& s : sigmas) {
      const hj::BoundaryDilation d = hj::dilation(c.f, s);
      hj::require(d.finite(), hj::ErrorKind::invalid_argument, "infinite boundary dilation at a boundary fixed point");
      betas.push_back(d.beta);
    }
    if (multiple) return std::vector{hj::cowen_pommerenke_multiple(c.f, z0, c.cfg.k, sigmas, betas, c.tol)};
    return std::vector{hj::cowen_pommerenke(c.f, z0, sigmas, betas, c.tol)};
  }}};
}

std::vector<Job> suite_origin(const SuiteContext& c) {
  std::vector<Job> jobs;
  for (const auto& sigma : explicit_sigmas(c.cfg)) {
    for (cplx z : c.zs) {
      jobs.push_back({[&c, sigma, z] { return hj::check_corollary_CP(c.f, sigma, hj::DiskPoint(z), c.tol); }});
    }
  }
  return jobs;
}

const std::vector<std::string> kSuites = {"julia", "two-point", "multipoint", "mercer",
                                          "lower-bounds", "cowen-pommerenke", "cp-multiple", "origin"};

std::vector<Job> build_suite(const std::string& name, const SuiteContext& c, Rng& rng) {
  if (name == "julia") return suite_julia(c);
  if (name == "two-point") return suite_two_point(c, false);
  if (name == "mercer") return suite_two_point(c, true);
  if (name == "multipoint") return suite_multipoint(c, rng);
  if (name == "lower-bounds") return suite_lower_bounds(c);
  if (name == "cowen-pommerenke") return suite_cowen_pommerenke(c, false);
  if (name == "cp-multiple") return suite_cowen_pommerenke(c, true);
  if (name == "origin") return suite_origin(c);
  throw hj::Error(hj::ErrorKind::invalid_argument, "unknown suite '" + name + "'");
}

struct Outcome {
  std::vector<hj::VerificationReport> reports;
  json skipped = json::array();
  bool inconclusive = false;
};

/// Runs one named suite. Precondition failures skip the suite under "all" and abort otherwise.
void run_suite(const std::string& name, const SuiteContext& c, Rng& rng, bool tolerant, Outcome& out) {
  std::vector<Job> jobs;
  try {
    jobs = build_suite(name, c, rng);
  } catch (const hj::Error& e) {
    if (e.kind() == hj::ErrorKind::inconclusive) throw;
    if (!tolerant) throw;
    out.skipped.push_back({{"suite", name}, {"map", c.f.label()}, {"reason", e.what()}});
    return;
  }
  std::vector<std::vector<hj::VerificationReport>> results(jobs.size());
  std::vector<std::string> errors(jobs.size());
  std::vector<int> kinds(jobs.size(), -1);
  hj::detail::parallel_for(jobs.size(), [&](std::size_t i) {
    try {
      results[i] = jobs[i].run();
    } catch (const hj::Error& e) {
      errors[i] = e.what();
      kinds[i] = static_cast<int>(e.kind());
    }
  });
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (kinds[i] >= 0) {
      const auto kind = static_cast<hj::ErrorKind>(kinds[i]);
      if (kind == hj::ErrorKind::inconclusive) {
        out.inconclusive = true;
        out.skipped.push_back({{"suite", name}, {"map", c.f.label()}, {"reason", errors[i]}});
        continue;
      }
      if (!tolerant) throw hj::Error(kind, errors[i].substr(errors[i].find(": ") + 2));
      out.skipped.push_back({{"suite", name}, {"map", c.f.label()}, {"reason", errors[i]}});
      if (tolerant) return;
      continue;
    }
    for (auto& r : results[i]) out.reports.push_back(std::move(r));
  }
}

int cmd_verify(const Config& cfg) {
  const auto maps = load_maps(cfg.spec);
  const hj::Tolerances tol{cfg.tol_check, cfg.tol_eq};
  Rng rng(cfg.seed);
  Outcome out;
  for (const auto& f : maps) {
    SuiteContext c{f, cfg, tol, {}, {}, parse_complex_list(cfg.points)};
    if (!cfg.z.empty()) {
      c.zs = parse_complex_list(cfg.z);
    } else {
      for (int i = 0; i < cfg.samples; ++i) c.zs.push_back(rng.disk(0.95));
    }
    for (std::size_t i = 0; i < c.zs.size(); ++i) c.ws.push_back(rng.disk(0.9));
    if (cfg.suite == "all") {
      for (const auto& s : kSuites) run_suite(s, c, rng, true, out);
    } else {
      run_suite(cfg.suite, c, rng, false, out);
    }
  }

  bool all_ok = true;
  for (const auto& r : out.reports) all_ok = all_ok && r.consistent();

  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "# " << hj::kToolName << ' ' << hj::kToolVersion << " seed=" << cfg.seed << " tol_check=" << format_double(tol.check)
       << " tol_eq=" << format_double(tol.eq) << '\n';
    os << "# columns: name,lhs,rhs,gap,holds,equality,equality_expected,consistent\n";
    for (const auto& r : out.reports) {
      os << r.name << ',' << format_double(r.lhs) << ',' << format_double(r.rhs) << ',' << format_double(r.gap) << ','
         << r.holds << ',' << r.equality << ','
         << (r.equality_expected ? std::to_string(static_cast<int>(*r.equality_expected)) : std::string("")) << ','
         << r.consistent() << '\n';
    }
    write_output(cfg, os.str());
  } else {
    json extra{{"suite", cfg.suite}, {"skipped", out.skipped}};
    write_output(cfg, hj::report_document(out.reports, cfg.seed, tol, extra).dump(2) + "\n");
  }
  if (!all_ok) return kFailed;
  if (out.inconclusive) return kInconclusive;
  return kOk;
}

// ---------------------------------------------------------------------------
// sweep

std::vector<double> linear_grid(double a, double b, int steps) {
  std::vector<double> g;
  for (int i = 0; i < steps; ++i) g.push_back(steps == 1 ? a : a + (b - a) * i / (steps - 1));
  return g;
}

/// r values with 1 - r spaced geometrically.
std::vector<double> radial_grid(double a, double b, int steps) {
  std::vector<double> g;
  const double la = std::log(1.0 - a), lb = std::log(1.0 - b);
  for (int i = 0; i < steps; ++i) g.push_back(1.0 - std::exp(steps == 1 ? la : la + (lb - la) * i / (steps - 1)));
  return g;
}

int cmd_sweep(const Config& cfg) {
  const auto maps = load_maps(cfg.spec);
  hj::require(maps.size() == 1, hj::ErrorKind::invalid_argument, "sweep takes a single map");
  const hj::SelfMap& f = maps.front();
  const hj::Tolerances tol{cfg.tol_check, cfg.tol_eq};
  hj::require(cfg.steps >= 1, hj::ErrorKind::invalid_argument, "--steps must be >= 1");
  const hj::BoundaryPoint sigma = explicit_sigmas(cfg).front();
  const auto pts = parse_complex_list(cfg.points);
  const auto zfix = parse_complex_list(cfg.z);

  std::string columns;
  std::vector<double> grid;
  std::function<std::vector<double>(double)> row;

  if (cfg.var == "r") {
    std::vector<double> range = cfg.range.empty() ? std::vector<double>{0.9, 1.0 - std::ldexp(1.0, -30)} : cfg.range;
    hj::require(range.size() == 2 && range[0] < 1.0 && range[1] < 1.0, hj::ErrorKind::invalid_argument,
                "--range for r needs two values below 1");
    grid = radial_grid(range[0], range[1], cfg.steps);
    const hj::BoundaryDilation d = hj::dilation(f, sigma);
    columns = "r,dilation_quotient,lhs,rhs,gap";
    row = [&f, sigma, d, tol](double r) {
      const cplx z = r * sigma.value();
      const double quotient = (1.0 - std::abs(f(z))) / (1.0 - r);
      if (!d.finite()) return std::vector<double>{r, quotient, NAN, NAN, NAN};
      const auto rep = hj::check_julia(f, sigma, d.tau, d.beta, hj::DiskPoint(z), tol);
      return std::vector<double>{r, quotient, rep.lhs, rep.rhs, rep.gap};
    };
  } else if (cfg.var == "k") {
    std::vector<double> range = cfg.range.empty() ? std::vector<double>{0.0, 5.0} : cfg.range;
    hj::require(range.size() == 2 && range[0] >= 0.0, hj::ErrorKind::invalid_argument, "--range for k needs two values >= 0");
    for (int k = static_cast<int>(range[0]); k <= static_cast<int>(range[1]); ++k) grid.push_back(k);
    const hj::BoundaryDilation d = hj::dilation(f, sigma);
    hj::require(d.finite(), hj::ErrorKind::invalid_argument, "infinite boundary dilation at sigma");
    columns = "k,ladder,ladder_simplified,beta,gap";
    row = [&f, d, pts](double kd) {
      int k = static_cast<int>(kd);
      if (auto deg = f.blaschke_degree()) k = std::min(k, *deg - 1);
      std::vector<hj::DiskPoint> dp;
      for (int i = 0; i < k; ++i)
        dp.emplace_back(static_cast<std::size_t>(i) < pts.size() ? pts[static_cast<std::size_t>(i)] : cplx(0.0));
      const hj::DiskPoint last(static_cast<std::size_t>(k) < pts.size() ? pts[static_cast<std::size_t>(k)] : cplx(0.0));
      const hj::DeltaChain chain(f, dp);
      const hj::BetaChain b = hj::beta_chain(chain, d);
      const double full = hj::lower_bound_ladder(chain, b, last).final;
      const double simple = hj::lower_bound_simplified(chain, b, last).final;
      return std::vector<double>{kd, full, simple, d.beta, d.beta - full};
    };
  } else if (cfg.var == "z" || cfg.var == "w") {
    const bool horocycle = cfg.path == "horocycle";
    hj::require(horocycle || cfg.path == "radial", hj::ErrorKind::invalid_argument, "--path must be radial or horocycle");
    std::vector<double> range = cfg.range;
    if (range.empty()) {
      const double half = std::numbers::pi / std::max(cfg.steps, 1);
      range = horocycle ? std::vector<double>{half, 2.0 * std::numbers::pi - half} : std::vector<double>{-0.95, 0.95};
    }
    hj::require(range.size() == 2, hj::ErrorKind::invalid_argument, "--range needs two values");
    grid = linear_grid(range[0], range[1], cfg.steps);
    const hj::BoundaryDilation d = hj::dilation(f, sigma);
    hj::require(d.finite(), hj::ErrorKind::invalid_argument, "infinite boundary dilation at sigma");
    const hj::EuclideanDisk e = hj::horocycle_euclidean(hj::Horocycle(sigma, cfg.R));
    auto place = [sigma, e, horocycle](double t) {
      // t = 0 is the tangent point sigma.
      if (horocycle) return e.center + sigma.value() * std::polar(e.radius, t);
      return t * sigma.value();
    };
    const std::string suite = cfg.suite == "all" ? "julia" : cfg.suite;
    columns = std::string(cfg.var == "z" ? "t,z_re,z_im" : "t,w_re,w_im") + ",lhs,rhs,gap";
    const bool vary_w = cfg.var == "w";
    const cplx wfix = pts.empty() ? cplx(0.0) : pts.front();
    const cplx zfixed = zfix.empty() ? cplx(0.0) : zfix.front();
    hj::require(!vary_w || suite == "two-point" || suite == "mercer", hj::ErrorKind::invalid_argument,
                "sweeping w needs the two-point or mercer suite");
    row = [&f, sigma, d, tol, place, suite, vary_w, wfix, zfixed, pts](double t) {
      const cplx p = place(t);
      const cplx z = vary_w ? zfixed : p;
      const cplx w = vary_w ? p : wfix;
      hj::VerificationReport rep;
      if (std::abs(p) >= 1.0 - 1e-12) return std::vector<double>{t, p.real(), p.imag(), NAN, NAN, NAN};
      if (suite == "julia") {
        rep = hj::check_julia(f, sigma, d.tau, d.beta, hj::DiskPoint(z), tol, d.confidence);
      } else if (suite == "two-point") {
        rep = hj::check_two_point_julia(f, sigma, hj::DiskPoint(z), hj::DiskPoint(w), tol);
      } else if (suite == "mercer") {
        rep = hj::check_mercer(f, sigma, hj::DiskPoint(w), hj::DiskPoint(z), tol);
      } else if (suite == "multipoint") {
        std::vector<hj::DiskPoint> dp;
        for (cplx q : pts) dp.emplace_back(q);
        const hj::DeltaChain chain(f, dp);
        rep = hj::check_multipoint_julia(chain, hj::beta_chain(chain, d), hj::DiskPoint(z), tol);
      } else {
        throw hj::Error(hj::ErrorKind::invalid_argument, "suite '" + suite + "' cannot be swept over z");
      }
      return std::vector<double>{t, p.real(), p.imag(), rep.lhs, rep.rhs, rep.gap};
    };
  } else {
    throw hj::Error(hj::ErrorKind::invalid_argument, "--var must be one of z, w, r, k");
  }

  std::vector<std::vector<double>> rows(grid.size());
  hj::detail::parallel_for(grid.size(), [&](std::size_t i) { rows[i] = row(grid[i]); });

  std::ostringstream os;
  os << "# " << hj::kToolName << ' ' << hj::kToolVersion << " seed=" << cfg.seed << " var=" << cfg.var
     << " suite=" << cfg.suite << '\n';
  os << "# columns: " << columns << '\n';
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < r.size(); ++j) os << (j ? "," : "") << format_double(r[j]);
    os << '\n';
  }
  write_output(cfg, os.str());
  return kOk;
}

// ---------------------------------------------------------------------------
// random

int cmd_random(const Config& cfg) {
  hj::require(cfg.degree >= 1, hj::ErrorKind::invalid_argument, "--degree must be >= 1");
  hj::require(cfg.count >= 1, hj::ErrorKind::invalid_argument, "--count must be >= 1");
  Rng rng(cfg.seed);
  json arr = json::array();
  for (int i = 0; i < cfg.count; ++i) {
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    std::vector<cplx> zeros;
    for (int j = 0; j < cfg.degree; ++j) zeros.push_back(rng.disk(0.9));
    arr.push_back({{"kind", "blaschke"}, {"theta", theta}, {"zeros", hj::complex_list_to_json(zeros)}});
  }
  write_output(cfg, arr.dump(2) + "\n");
  return kOk;
}

// ---------------------------------------------------------------------------
// beta

int cmd_beta(const Config& cfg) {
  const auto maps = load_maps(cfg.spec);
  hj::require(maps.size() == 1, hj::ErrorKind::invalid_argument, "beta takes a single map");
  const hj::SelfMap& f = maps.front();
  const hj::BoundaryPoint sigma = explicit_sigmas(cfg).front();
  hj::require(cfg.method == "exact" || cfg.method == "radial" || cfg.method == "both", hj::ErrorKind::invalid_argument,
              "--method must be exact, radial or both");
  auto to_json = [](const hj::BoundaryDilation& d) {
    return json{{"beta", hj::number_to_json(d.beta)},
                {"tau", hj::complex_to_json(d.tau.value())},
                {"method", hj::to_string(d.method)},
                {"confidence", d.confidence},
                {"finite", d.finite()}};
  };
  json doc{{"tool", hj::kToolName}, {"version", hj::kToolVersion}, {"map", f.label()},
           {"sigma", hj::complex_to_json(sigma.value())}};
  int code = kOk;
  std::optional<hj::BoundaryDilation> exact, radial;
  if (cfg.method != "radial") {
    hj::require(f.is_exact(), hj::ErrorKind::invalid_argument, "exact dilation needs an exact map");
    exact = hj::dilation(f, sigma);
    doc["exact"] = to_json(*exact);
  }
  if (cfg.method != "exact") {
    try {
      radial = hj::beta_radial(f, sigma);
      doc["radial"] = to_json(*radial);
      if (!radial->finite()) {
        doc["note"] = "radial quotient diverges: infinite boundary dilation";
        code = kInconclusive;
      }
    } catch (const hj::Error& e) {
      if (e.kind() != hj::ErrorKind::inconclusive) throw;
      doc["radial"] = {{"error", e.what()}};
      code = kInconclusive;
    }
  }
  if (exact && radial && exact->finite() && radial->finite()) doc["discrepancy"] = std::abs(exact->beta - radial->beta);
  write_output(cfg, doc.dump(2) + "\n");
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iterated hyperbolic difference quotients and multipoint Julia lemmas"};
  app.set_version_flag("--version", std::string(hj::kToolVersion));
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--spec", cfg.spec, "map specification: JSON file or inline JSON");
    sub->add_option("--sigma", cfg.sigma, "boundary points as re or re,im; 'auto' for discovery");
    sub->add_option("--points", cfg.points, "chain points w_1..w_k as re or re,im");
    sub->add_option("--z", cfg.z, "evaluation points (default: seeded random samples)");
    sub->add_option("--z0", cfg.z0, "interior fixed point for Cowen-Pommerenke suites");
    sub->add_option("--k", cfg.k, "chain length or fixed point multiplicity");
    sub->add_option("--seed", cfg.seed, "seed for every randomized input");
    sub->add_option("--samples", cfg.samples, "number of random evaluation points");
    sub->add_option("--tol-check", cfg.tol_check, "inequality slack");
    sub->add_option("--tol-eq", cfg.tol_eq, "equality classification tolerance");
    sub->add_option("--R", cfg.R, "horocycle radius");
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* verify = app.add_subcommand("verify", "run a verification suite and write a JSON report");
  add_common(verify);
  verify->add_option("--suite", cfg.suite, "julia, two-point, multipoint, mercer, lower-bounds, cowen-pommerenke, "
                                           "cp-multiple, origin or all");

  auto* sweep = app.add_subcommand("sweep", "sweep one variable and write CSV rows");
  add_common(sweep);
  sweep->add_option("--suite", cfg.suite, "check evaluated along the sweep");
  sweep->add_option("--var", cfg.var, "z, w, r or k")->check(CLI::IsMember({"z", "w", "r", "k"}));
  sweep->add_option("--range", cfg.range, "two values: start end")->expected(2);
  sweep->add_option("--steps", cfg.steps, "number of grid points");
  sweep->add_option("--path", cfg.path, "radial or horocycle (z and w sweeps)");

  auto* random = app.add_subcommand("random", "generate seeded random Blaschke products as map specs");
  random->add_option("--seed", cfg.seed, "seed");
  random->add_option("--degree", cfg.degree, "degree of each product");
  random->add_option("--count", cfg.count, "number of products");
  random->add_option("--out", cfg.out, "output file (default stdout)");

  auto* beta = app.add_subcommand("beta", "boundary dilation coefficient of a map");
  add_common(beta);
  beta->add_option("--method", cfg.method, "exact, radial or both");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(cfg);
    if (*sweep) {
      cfg.format = "csv";
      return cmd_sweep(cfg);
    }
    if (*random) return cmd_random(cfg);
    if (*beta) return cmd_beta(cfg);
  } catch (const hj::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == hj::ErrorKind::inconclusive ? kInconclusive : kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
