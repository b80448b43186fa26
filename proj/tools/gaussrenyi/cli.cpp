#include "cli.hpp"

#include "gaussrenyi/gaussrenyi.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <regex>
#include <sstream>

namespace gr::cli {

namespace {

using json = nlohmann::ordered_json;
using exact::BigInt;
using exact::Point;
using exact::QuadIrr;
using exact::Rational;

constexpr int kSchema = 1;

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PointSyntaxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json num(long double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::strtod(format15(v).c_str(), nullptr);
}

json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

json point_json(const Point& x) {
  if (const auto* r = std::get_if<Rational>(&x)) return json{{"num", big(r->num())}, {"den", big(r->den())}};
  const auto& q = std::get<QuadIrr>(x);
  return json{{"p", big(q.p())}, {"q", big(q.q())}, {"r", big(q.r())}, {"d", big(q.d())}};
}

json word_json(std::span<const maps::Digit> w) {
  json a = json::array();
  for (auto d : w) a.push_back(d);
  return a;
}

BigInt parse_int(const std::string& s) {
  std::string t = s;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  return BigInt(t);
}

/// "num/den", an integer, or "(p+q*sqrt(d))/r".
Point parse_point(const std::string& s) {
  static const std::regex rational(R"(^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$)");
  static const std::regex surd(
      R"(^\s*\(\s*([+-]?\d+)?\s*([+-])\s*(?:(\d+)\s*\*\s*)?sqrt\s*\(\s*(\d+)\s*\)\s*\)\s*(?:/\s*(\d+))?\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, rational)) {
    const BigInt den = m[2].matched ? parse_int(m[2]) : BigInt(1);
    if (den == 0) throw PointSyntaxError("zero denominator in '" + s + "'");
    return Rational(parse_int(m[1]), den);
  }
  if (std::regex_match(s, m, surd)) {
    const BigInt p = m[1].matched ? parse_int(m[1]) : BigInt(0);
    BigInt q = m[3].matched ? parse_int(m[3]) : BigInt(1);
    if (m[2] == "-") q = -q;
    const BigInt d = parse_int(m[4]);
    const BigInt r = m[5].matched ? parse_int(m[5]) : BigInt(1);
    if (r == 0) throw PointSyntaxError("zero denominator in '" + s + "'");
    return exact::make_point(p, q, r, d);
  }
  throw PointSyntaxError("cannot parse point '" + s + "'; expected num/den or (p+q*sqrt(d))/r");
}

struct Output {
  std::string text;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

/// Resolved enumeration mode of cycles, density, freq, ldtail and pressure.
struct ModeChoice {
  bool quenched = false;
  bool sampled = false;
  maps::ParityWord omega;
  double p = 0;
  std::size_t n = 0;
};

void check_p(double p, bool allow_degenerate) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0 || (!allow_degenerate && (p == 0.0 || p == 1.0)))
    throw ValidationError(allow_degenerate ? "--p must lie in [0, 1]" : "--p must lie in (0, 1)");
}

ModeChoice resolve_mode(const RunConfig& c, bool allow_degenerate_p) {
  ModeChoice m;
  m.quenched = c.quenched.value_or(c.omega.has_value());
  if (m.quenched) {
    if (c.omega) {
      try {
        m.omega = maps::ParityWord::parse(*c.omega);
      } catch (const std::invalid_argument& e) {
        throw ValidationError(std::string("--omega: ") + e.what());
      }
      if (m.omega.empty()) throw ValidationError("--omega must be nonempty");
      m.p = static_cast<double>(m.omega.count_ones()) / static_cast<double>(m.omega.size());
    } else {
      check_p(c.p, true);
      m.sampled = true;
      m.p = c.p;
      m.omega = measures::sample_omega(c.seed, c.p, c.n);
    }
    m.n = m.omega.size();
  } else {
    if (c.omega) throw ValidationError("--omega applies to quenched runs only");
    check_p(c.p, allow_degenerate_p);
    m.p = c.p;
    m.n = c.n;
  }
  return m;
}

cycles::Mode to_mode(const ModeChoice& m) {
  if (m.quenched) return cycles::Quenched{m.omega};
  return measures::mode_for(m.p, m.n);
}

void validate_truncation(const RunConfig& c) {
  if (c.cap < 2) throw CapTooSmall("--cap must be at least 2, got " + std::to_string(c.cap));
  if (!std::isfinite(c.prune) || c.prune < 0) throw ValidationError("--prune must be a finite number >= 0");
}

cycles::Truncation truncation(const RunConfig& c) { return cycles::Truncation{c.cap, c.prune}; }

json mode_config(const RunConfig& c, const ModeChoice& m) {
  json j;
  j["command"] = c.command;
  j["mode"] = m.quenched ? "quenched" : "annealed";
  j["n"] = m.n;
  if (!m.quenched || m.sampled) j["p"] = num(m.p);
  if (m.sampled) j["seed"] = c.seed;
  if (m.quenched) j["omega"] = m.omega.str();
  j["cap"] = c.cap;
  j["prune"] = num(c.prune);
  return j;
}

json header(const json& config) {
  json j;
  j["schema"] = kSchema;
  j["command"] = config["command"];
  j["config"] = config;
  return j;
}

std::string csv_header(const json& config, const json& extra) {
  std::string s = "# schema=" + std::to_string(kSchema) + "\n";
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (const auto& [k, v] : config.items()) s += "# config." + k + "=" + scalar(v) + "\n";
  for (const auto& [k, v] : extra.items()) s += "# " + k + "=" + scalar(v) + "\n";
  return s;
}

std::string csv_cell(const json& v) { return v.is_null() ? "" : v.dump(); }

std::string format_of(const RunConfig& c, const char* fallback) {
  const std::string f = c.format.value_or(fallback);
  if (f != "json" && f != "csv") throw ValidationError("--format must be json or csv");
  return f;
}

Output cmd_cycles(const RunConfig& c) {
  const ModeChoice m = resolve_mode(c, false);
  validate_truncation(c);
  const std::string fmt = format_of(c, "json");
  const cycles::CycleSet set = m.quenched ? cycles::enumerate_quenched(m.omega, c.cap, c.prune, c.workers)
                                          : cycles::enumerate_annealed(m.n, m.p, c.cap, c.prune, c.workers);
  const json config = mode_config(c, m);
  json summary;
  summary["count"] = set.cycles.size();
  summary["z_partial"] = num(set.z_partial);
  summary["tail_bound"] = num(set.tail_bound);
  summary["distortion_max"] = num(set.distortion_max);
  if (fmt == "csv") {
    std::string s = csv_header(config, summary) + "word,x_float,weight,cyl_len,distortion\n";
    for (const auto& cy : set.cycles) {
      std::string w;
      for (std::size_t i = 0; i < cy.word.size(); ++i) w += (i ? " " : "") + std::to_string(cy.word[i]);
      s += w + "," + csv_cell(num(exact::to_long_double(cy.fixed_point))) + "," + csv_cell(num(cy.weight)) + "," +
           csv_cell(num(cy.cyl_len.to_long_double())) + "," + csv_cell(num(cy.distortion)) + "\n";
    }
    return {s};
  }
  json j = header(config);
  j["mode"] = config["mode"];
  j["n"] = m.n;
  if (config.contains("p")) j["p"] = config["p"];
  if (m.quenched) j["omega"] = m.omega.str();
  j["cap"] = c.cap;
  j["prune"] = num(c.prune);
  j.update(summary);
  json list = json::array();
  for (const auto& cy : set.cycles) {
    json e;
    e["word"] = word_json(cy.word.digits());
    e["fixed_point"] = point_json(cy.fixed_point);
    e["fixed_point_str"] = exact::to_string(cy.fixed_point);
    e["x_float"] = num(exact::to_long_double(cy.fixed_point));
    e["weight"] = num(cy.weight);
    e["cyl_len"] = cy.cyl_len.str();
    e["distortion"] = num(cy.distortion);
    list.push_back(std::move(e));
  }
  j["cycles"] = std::move(list);
  return {dump(j)};
}

Output cmd_density(const RunConfig& c) {
  const ModeChoice m = resolve_mode(c, true);
  validate_truncation(c);
  if (c.bins < 2) throw ValidationError("--bins must be at least 2");
  const std::string fmt = format_of(c, "csv");
  const measures::DensityEstimate est =
      m.quenched ? measures::quenched_density(m.omega, truncation(c), c.bins, c.workers)
                 : measures::annealed_density(m.p, m.n, truncation(c), c.bins, c.workers);
  json config = mode_config(c, m);
  config["bins"] = c.bins;
  json summary;
  summary["z_partial"] = num(est.z_partial);
  summary["tail_bound"] = num(est.tail_bound);
  summary["cycles"] = est.cycles;
  summary["transfer_residual"] = num(measures::transfer_residual(est, m.p, c.cap));
  const auto& h = est.histogram;
  if (fmt == "csv") {
    std::string s = csv_header(config, summary) + "bin_left,bin_right,mass,density\n";
    for (std::size_t i = 0; i < h.bins(); ++i)
      s += csv_cell(num(h.left(i))) + "," + csv_cell(num(h.right(i))) + "," + csv_cell(num(h.masses()[i])) + "," +
           csv_cell(num(est.density[i])) + "\n";
    return {s};
  }
  json j = header(config);
  j.update(summary);
  json rows = json::array();
  for (std::size_t i = 0; i < h.bins(); ++i)
    rows.push_back(json{{"bin_left", num(h.left(i))},
                        {"bin_right", num(h.right(i))},
                        {"mass", num(h.masses()[i])},
                        {"density", num(est.density[i])}});
  j["bins"] = std::move(rows);
  return {dump(j)};
}

Output cmd_freq(const RunConfig& c) {
  const ModeChoice m = resolve_mode(c, true);
  validate_truncation(c);
  if (c.k < 1) throw ValidationError("--k must be at least 1");
  const std::string fmt = format_of(c, "json");
  const measures::FrequencyTable t = measures::digit_frequencies(to_mode(m), truncation(c), c.workers);
  json config = mode_config(c, m);
  config["k"] = c.k;
  json summary;
  summary["k"] = c.k;
  summary["value"] = num(t.at(c.k));
  summary["z_partial"] = num(t.z_partial);
  summary["tail_bound"] = num(t.tail_bound);
  if (fmt == "csv") return {csv_header(config, summary) + "k,frequency\n" + std::to_string(c.k) + "," +
                            csv_cell(summary["value"]) + "\n"};
  json j = header(config);
  j.update(summary);
  return {dump(j)};
}

measures::Side parse_side(const std::string& s) {
  if (s == "ge") return measures::Side::Ge;
  if (s == "le") return measures::Side::Le;
  throw ValidationError("--side must be ge or le");
}

std::pair<std::size_t, std::size_t> n_range(const RunConfig& c) {
  const std::size_t hi = c.n_max.value_or(c.n);
  const std::size_t lo = c.n_min.value_or(1);
  if (lo < 1 || hi < lo) throw ValidationError("need 1 <= --n-min <= --n-max");
  return {lo, hi};
}

Output cmd_ldtail(const RunConfig& c) {
  if (c.quenched.value_or(false) || c.omega) throw ValidationError("ldtail runs in annealed mode only");
  check_p(c.p, true);
  validate_truncation(c);
  if (c.k < 1) throw ValidationError("--k must be at least 1");
  if (!(c.alpha >= 0.0 && c.alpha <= 1.0)) throw ValidationError("--alpha must lie in [0, 1]");
  const measures::Side side = parse_side(c.side);
  const auto [lo, hi] = n_range(c);
  const std::string fmt = format_of(c, "csv");
  const measures::TailSumSeries s = measures::ld_tail(c.p, c.k, c.alpha, side, lo, hi, truncation(c), c.workers);
  json config;
  config["command"] = c.command;
  config["mode"] = "annealed";
  config["p"] = num(c.p);
  config["k"] = c.k;
  config["alpha"] = num(c.alpha);
  config["side"] = c.side;
  config["n_min"] = lo;
  config["n_max"] = hi;
  config["cap"] = c.cap;
  config["prune"] = num(c.prune);
  long double tail = 0;
  for (const auto& pt : s.points) tail = std::max(tail, pt.tail_bound);
  json summary;
  summary["slope"] = s.slope ? num(*s.slope) : json(nullptr);
  summary["empty_tail"] = s.empty_tail;
  summary["tail_bound"] = num(tail);
  if (fmt == "csv") {
    std::string out = csv_header(config, summary) + "n,log_tail_ratio\n";
    for (const auto& pt : s.points)
      out += std::to_string(pt.n) + "," + csv_cell(pt.log_tail_ratio ? num(*pt.log_tail_ratio) : json(nullptr)) +
             "\n";
    return {out};
  }
  json j = header(config);
  j.update(summary);
  json rows = json::array();
  for (const auto& pt : s.points)
    rows.push_back(json{{"n", pt.n},
                        {"log_tail_ratio", pt.log_tail_ratio ? num(*pt.log_tail_ratio) : json(nullptr)},
                        {"tail_sum", num(pt.tail_sum)},
                        {"z", num(pt.z)},
                        {"tail_bound", num(pt.tail_bound)}});
  j["points"] = std::move(rows);
  return {dump(j)};
}

Output cmd_pressure(const RunConfig& c) {
  if (c.quenched.value_or(false) || c.omega) throw ValidationError("pressure runs in annealed mode only");
  check_p(c.p, true);
  validate_truncation(c);
  const auto [lo, hi] = n_range(c);
  const std::string fmt = format_of(c, "json");
  json config;
  config["command"] = c.command;
  config["mode"] = "annealed";
  config["p"] = num(c.p);
  config["n_min"] = lo;
  config["n_max"] = hi;
  config["cap"] = c.cap;
  config["prune"] = num(c.prune);
  std::vector<measures::PressureResult> rs;
  long double tail = 0;
  for (std::size_t n = lo; n <= hi; ++n) {
    rs.push_back(measures::pressure_partial(c.p, n, truncation(c), c.workers));
    tail = std::max(tail, rs.back().tail_bound);
  }
  json summary;
  summary["tail_bound"] = num(tail);
  if (fmt == "csv") {
    std::string out = csv_header(config, summary) + "n,value,sum,tail_bound\n";
    for (const auto& r : rs)
      out += std::to_string(r.n) + "," + csv_cell(num(r.value)) + "," + csv_cell(num(r.sum)) + "," +
             csv_cell(num(r.tail_bound)) + "\n";
    return {out};
  }
  json j = header(config);
  j.update(summary);
  json rows = json::array();
  for (const auto& r : rs)
    rows.push_back(
        json{{"n", r.n}, {"value", num(r.value)}, {"sum", num(r.sum)}, {"tail_bound", num(r.tail_bound)}});
  j["series"] = std::move(rows);
  return {dump(j)};
}

Output cmd_expand(const RunConfig& c) {
  if (!c.omega) throw ValidationError("expand needs --omega");
  maps::ParityWord omega;
  try {
    omega = maps::ParityWord::parse(*c.omega);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("--omega: ") + e.what());
  }
  if (omega.empty()) throw ValidationError("--omega must be nonempty");
  const std::size_t steps = c.steps.value_or(omega.size() - 1);
  if (omega.size() < steps + 1) throw ValidationError("--omega needs at least steps + 1 bits");
  if (c.x.empty()) throw PointSyntaxError("expand needs --x");
  const Point x = parse_point(c.x);
  if (exact::compare(x, Point(Rational(0))) < 0 || exact::compare(x, Point(Rational(1))) > 0)
    throw ValidationError("--x must lie in [0, 1]");
  format_of(c, "json");
  const expansion::Expansion e = expansion::expand_until_boundary(omega, x, steps);
  json config;
  config["command"] = c.command;
  config["omega"] = omega.str();
  config["x"] = exact::to_string(x);
  config["steps"] = steps;
  json j = header(config);
  j["x"] = exact::to_string(x);
  j["x_float"] = num(exact::to_long_double(x));
  j["omega"] = e.digits.omega.str();
  json digits = json::array();
  for (const auto& d : e.digits.C) digits.push_back(big(d));
  j["digits"] = std::move(digits);
  if (!e.digits.C.empty()) {
    const maps::CylinderWord w = expansion::word_from_cf(e.digits);
    j["word"] = word_json(w.digits());
    j["convergent"] = expansion::reconstruct(e.digits).str();
    j["error_bound"] = maps::cylinder_interval(w).length().str();
  } else {
    j["word"] = json::array();
  }
  j["steps"] = e.steps;
  j["residual"] = exact::to_string(e.residual);
  j["terminated"] = e.terminated;
  j["tail_bound"] = 0;
  return {dump(j)};
}

Output cmd_quadcheck(const RunConfig& c) {
  if (c.x.empty()) throw PointSyntaxError("quadcheck needs --x");
  const Point px = parse_point(c.x);
  if (!std::holds_alternative<QuadIrr>(px)) throw ValidationError("quadcheck needs an irrational --x");
  const QuadIrr x = std::get<QuadIrr>(px);
  if (c.map != "t0" && c.map != "t1" && c.map != "minus") throw ValidationError("--map must be t0, t1 or minus");
  if (c.budget < 1) throw ValidationError("--budget must be at least 1");
  format_of(c, "json");
  json config;
  config["command"] = c.command;
  config["map"] = c.map;
  config["x"] = x.str();
  config["budget"] = c.budget;
  json j = header(config);
  j["x"] = x.str();
  j["x_float"] = num(x.to_long_double());
  j["conjugate"] = x.conjugate().str();
  j["conjugate_float"] = num(x.conjugate().to_long_double());
  j["map"] = c.map;
  if (c.map == "minus") {
    const quadirr::MinusCF m = quadirr::minus_cf(x, c.budget);
    const bool criterion = quadirr::katok_criterion(x);
    json d = json::array();
    for (const auto& v : m.D) d.push_back(big(v));
    j["digits"] = std::move(d);
    j["found"] = m.found;
    j["preperiod"] = m.preperiod;
    j["period"] = m.period;
    j["purely_periodic"] = m.purely_periodic();
    j["criterion"] = criterion;
    j["agree"] = m.found ? json(m.purely_periodic() == criterion) : json(nullptr);
  } else {
    const maps::MapId id = c.map == "t0" ? maps::MapId::Gauss : maps::MapId::Renyi;
    if (x.compare(Rational(0)) < 0 || x.compare(Rational(1)) > 0) throw ValidationError("--x must lie in (0, 1)");
    try {
      const quadirr::PeriodicityReport r = quadirr::check_periodicity(id, x, c.budget);
      j["found"] = true;
      j["periodic"] = r.periodic;
      j["iteration_periodic"] = r.iteration_periodic;
      j["period"] = r.period;
      j["preperiod"] = r.preperiod;
      j["agree"] = r.agree;
    } catch (const NoPeriodWithinBudget&) {
      j["found"] = false;
      j["periodic"] = x.conjugate().compare(Rational(id == maps::MapId::Gauss ? -1 : 0)) < 0;
      j["agree"] = nullptr;
    }
  }
  j["tail_bound"] = 0;
  return {dump(j)};
}

Output cmd_induce(const RunConfig& c) {
  maps::CylinderWord w;
  try {
    w = maps::CylinderWord::parse(c.word);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("--word: ") + e.what());
  }
  if (w.empty()) throw ValidationError("induce needs a nonempty --word");
  format_of(c, "json");
  const expansion::InducedParse parse = expansion::induce(w);
  json config;
  config["command"] = c.command;
  config["word"] = w.str();
  json j = header(config);
  j["word"] = word_json(w.digits());
  json blocks = json::array();
  std::size_t consumed = 0;
  for (const auto& b : parse.blocks) {
    blocks.push_back(json{{"a", b.a}, {"run", b.run}, {"return_time", b.return_time()}});
    consumed += b.return_time();
  }
  j["blocks"] = std::move(blocks);
  j["consumed"] = consumed;
  j["remainder"] = word_json(parse.remainder.digits());
  j["tail_bound"] = 0;
  return {dump(j)};
}

void add_mode_flags(CLI::App* sub, RunConfig& c) {
  sub->add_flag_callback("--quenched", [&c] { c.quenched = true; }, "Fixed parity word omega");
  sub->add_flag_callback("--annealed", [&c] { c.quenched = false; }, "Average over Bernoulli(p) parity words");
  sub->add_option("--omega", c.omega, "Parity word, e.g. 0101");
  sub->add_option("--n", c.n, "Word length")->check(CLI::PositiveNumber);
  sub->add_option("--p", c.p, "Probability of the Renyi map");
  sub->add_option("--seed", c.seed, "Seed for sampling omega in quenched runs without --omega");
}

void add_truncation_flags(CLI::App* sub, RunConfig& c) {
  sub->add_option("--cap", c.cap, "Largest digit");
  sub->add_option("--prune", c.prune, "Drop cylinders of (weighted) length below this");
  sub->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
}

void add_format_flags(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "json or csv");
  sub->add_option("--out", c.out, "Write output to this file instead of stdout");
}

}  // namespace

std::string format15(long double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15Lg", v);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Random cycles of the Gauss-Renyi random dynamical system", "gaussrenyi"};
  app.require_subcommand(1);

  auto* cycles_cmd = app.add_subcommand("cycles", "Enumerate weighted random cycles");
  auto* density_cmd = app.add_subcommand("density", "Histogram density estimate of the stationary measure");
  auto* freq_cmd = app.add_subcommand("freq", "Digit frequency of the random continued fraction");
  auto* ldtail_cmd = app.add_subcommand("ldtail", "Large-deviation tail sums of a digit frequency");
  auto* pressure_cmd = app.add_subcommand("pressure", "Partial pressure sums");
  auto* expand_cmd = app.add_subcommand("expand", "Random continued fraction digits of a point");
  auto* quadcheck_cmd = app.add_subcommand("quadcheck", "Periodicity of a quadratic irrational");
  auto* induce_cmd = app.add_subcommand("induce", "First-return block parse of a digit word");

  for (auto* sub : {cycles_cmd, density_cmd, freq_cmd}) {
    add_mode_flags(sub, c);
    add_truncation_flags(sub, c);
    add_format_flags(sub, c);
  }
  density_cmd->add_option("--bins", c.bins, "Number of bins");
  freq_cmd->add_option("--k", c.k, "Digit value");
  for (auto* sub : {ldtail_cmd, pressure_cmd}) {
    sub->add_flag_callback("--annealed", [&c] { c.quenched = false; }, "Annealed mode (the only mode)");
    sub->add_option("--p", c.p, "Probability of the Renyi map");
    sub->add_option("--n", c.n, "Default for --n-max")->check(CLI::PositiveNumber);
    sub->add_option("--n-min", c.n_min, "First word length");
    sub->add_option("--n-max", c.n_max, "Last word length");
    add_truncation_flags(sub, c);
    add_format_flags(sub, c);
  }
  ldtail_cmd->add_option("--k", c.k, "Digit value");
  ldtail_cmd->add_option("--alpha", c.alpha, "Frequency threshold");
  ldtail_cmd->add_option("--side", c.side, "ge or le");
  expand_cmd->add_option("--omega", c.omega, "Parity word")->required();
  expand_cmd->add_option("--x", c.x, "Point: num/den or (p+q*sqrt(d))/r")->required();
  expand_cmd->add_option("--steps", c.steps, "Number of digits (default: length of omega - 1)");
  add_format_flags(expand_cmd, c);
  quadcheck_cmd->add_option("--x", c.x, "Quadratic irrational (p+q*sqrt(d))/r")->required();
  quadcheck_cmd->add_option("--map", c.map, "t0, t1 or minus");
  quadcheck_cmd->add_option("--budget", c.budget, "Iteration budget");
  add_format_flags(quadcheck_cmd, c);
  induce_cmd->add_option("--word", c.word, "Digit word, e.g. 3,1,1,4")->required();
  add_format_flags(induce_cmd, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    Output o;
    if (c.command == "cycles") o = cmd_cycles(c);
    else if (c.command == "density") o = cmd_density(c);
    else if (c.command == "freq") o = cmd_freq(c);
    else if (c.command == "ldtail") o = cmd_ldtail(c);
    else if (c.command == "pressure") o = cmd_pressure(c);
    else if (c.command == "expand") o = cmd_expand(c);
    else if (c.command == "quadcheck") o = cmd_quadcheck(c);
    else o = cmd_induce(c);
    if (c.out) {
      std::ofstream f(*c.out, std::ios::binary);
      if (!f) {
        err << "error: cannot open " << *c.out << " for writing\n";
        return kInternal;
      }
      f << o.text;
    } else {
      out << o.text;
    }
    return kOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const CapTooSmall& e) {
    err << "error: " << e.what() << "\n";
    return kCapTooSmall;
  } catch (const PointSyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return kBadPoint;
  } catch (const StartsInDeletedSet& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace gr::cli
