#include "dqw/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "dqw/errors.hpp"

namespace dqw {

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
  return out;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class E>
struct Named {
  const char* name;
  E value;
};

constexpr Named<Scenario> kScenarios[] = {{"flat", Scenario::Flat},
                                          {"flat-hybrid", Scenario::FlatHybrid},
                                          {"gem", Scenario::Gem},
                                          {"custom-metric", Scenario::CustomMetric}};
constexpr Named<CoinVariant> kCoins[] = {{"determinant-one", CoinVariant::DeterminantOne},
                                         {"paper-literal", CoinVariant::PaperLiteral}};
constexpr Named<UnitarizeStrategy> kStrategies[] = {{"auto", UnitarizeStrategy::Auto},
                                                    {"affine", UnitarizeStrategy::Affine},
                                                    {"exponential", UnitarizeStrategy::Exponential}};
constexpr Named<ExponentialPath> kPaths[] = {{"auto", ExponentialPath::Auto},
                                             {"spectral", ExponentialPath::Spectral},
                                             {"dense", ExponentialPath::Dense}};
constexpr Named<TimeSampling> kSamplings[] = {{"start", TimeSampling::StepStart},
                                              {"midpoint", TimeSampling::StepMidpoint}};

template <class E, std::size_t N>
std::string name_of(const Named<E> (&table)[N], E v) {
  for (const auto& t : table)
    if (t.value == v) return t.name;
  return "?";
}

template <class E, std::size_t N>
E lookup(const Named<E> (&table)[N], std::string_view s, int line, const std::string& key) {
  for (const auto& t : table)
    if (s == t.name) return t.value;
  std::string options;
  for (const auto& t : table) options += std::string(options.empty() ? "" : "|") + t.name;
  throw ParseError("line " + std::to_string(line) + ": " + key + "='" + std::string(s) +
                       "' is not one of " + options,
                   line, key);
}

double to_double(std::string_view s, int line, const std::string& key) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("line " + std::to_string(line) + ": " + key + " expects a number, got '" +
                         std::string(s) + "'",
                     line, key);
  return v;
}

long long to_integer(std::string_view s, int line, const std::string& key) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("line " + std::to_string(line) + ": " + key + " expects an integer, got '" +
                         std::string(s) + "'",
                     line, key);
  return v;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error("invalid configuration: " + join(violations)), violations_(std::move(violations)) {}

std::string to_string(Scenario s) { return name_of(kScenarios, s); }
std::string to_string(CoinVariant c) { return name_of(kCoins, c); }
std::string to_string(UnitarizeStrategy s) { return name_of(kStrategies, s); }
std::string to_string(ExponentialPath p) { return name_of(kPaths, p); }
std::string to_string(TimeSampling s) { return name_of(kSamplings, s); }

RunConfig parse_config_text(std::string_view text) {
  RunConfig cfg;
  std::vector<std::string> violations;
  // Signed and optional values are range-checked after all keys are read.
  long long steps = static_cast<long long>(cfg.steps);
  long long n_sites = static_cast<long long>(cfg.n_sites);
  long long cadence = static_cast<long long>(cfg.snapshot_cadence);
  long long dense_cap = static_cast<long long>(cfg.dense_cap);
  long long seed = 0;
  bool center_set = false;
  std::string shape = "gaussian";

  using Setter = std::function<void(std::string_view, int, const std::string&)>;
  const std::map<std::string, Setter, std::less<>> setters{
      {"scenario", [&](auto v, int l, auto& k) { cfg.scenario = lookup(kScenarios, v, l, k); }},
      {"n_sites", [&](auto v, int l, auto& k) { n_sites = to_integer(v, l, k); }},
      {"eps", [&](auto v, int l, auto& k) { cfg.eps = to_double(v, l, k); }},
      {"steps", [&](auto v, int l, auto& k) { steps = to_integer(v, l, k); }},
      {"mass", [&](auto v, int l, auto& k) { cfg.mass = to_double(v, l, k); }},
      {"g", [&](auto v, int l, auto& k) { cfg.g = to_double(v, l, k); }},
      {"packet_center",
       [&](auto v, int l, auto& k) {
         cfg.packet.center = to_double(v, l, k);
         center_set = true;
       }},
      {"packet_variance", [&](auto v, int l, auto& k) { cfg.packet.variance = to_double(v, l, k); }},
      {"packet_momentum", [&](auto v, int l, auto& k) { cfg.packet.momentum = to_double(v, l, k); }},
      {"packet_mix_minus", [&](auto v, int l, auto& k) { cfg.packet.mix_minus = to_double(v, l, k); }},
      {"packet_mix_plus", [&](auto v, int l, auto& k) { cfg.packet.mix_plus = to_double(v, l, k); }},
      {"packet_shape",
       [&](auto v, int l, auto& k) {
         if (v != "gaussian" && v != "delta")
           throw ParseError("line " + std::to_string(l) + ": packet_shape must be gaussian|delta",
                            l, k);
         shape = std::string(v);
       }},
      {"coin", [&](auto v, int l, auto& k) { cfg.coin = lookup(kCoins, v, l, k); }},
      {"strategy", [&](auto v, int l, auto& k) { cfg.strategy = lookup(kStrategies, v, l, k); }},
      {"exponential_path", [&](auto v, int l, auto& k) { cfg.path = lookup(kPaths, v, l, k); }},
      {"dense_cap", [&](auto v, int l, auto& k) { dense_cap = to_integer(v, l, k); }},
      {"time_sampling", [&](auto v, int l, auto& k) { cfg.sampling = lookup(kSamplings, v, l, k); }},
      {"snapshot_cadence", [&](auto v, int l, auto& k) { cadence = to_integer(v, l, k); }},
      {"output_dir", [&](auto v, int, auto&) { cfg.output_dir = std::string(v); }},
      {"seed", [&](auto v, int l, auto& k) { seed = to_integer(v, l, k); }},
      {"metric_g00", [&](auto v, int, auto&) { cfg.metric_g00 = std::string(v); }},
      {"metric_g01", [&](auto v, int, auto&) { cfg.metric_g01 = std::string(v); }},
      {"metric_g11", [&](auto v, int, auto&) { cfg.metric_g11 = std::string(v); }},
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  std::map<std::string, int> seen;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = raw;
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("line " + std::to_string(line) + ": expected key=value", line, "");
    const std::string key(trim(s.substr(0, eq)));
    const std::string_view value = trim(s.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end())
      throw ParseError("line " + std::to_string(line) + ": unknown key '" + key + "'", line, key);
    if (const auto prev = seen.find(key); prev != seen.end())
      throw ParseError("line " + std::to_string(line) + ": '" + key +
                           "' already set on line " + std::to_string(prev->second),
                       line, key);
    seen[key] = line;
    if (value.empty())
      throw ParseError("line " + std::to_string(line) + ": empty value for '" + key + "'", line, key);
    it->second(value, line, key);
  }

  if (steps < 0) violations.push_back("steps must be >= 0 (got " + std::to_string(steps) + ")");
  else cfg.steps = static_cast<std::size_t>(steps);
  if (n_sites < 4) violations.push_back("n_sites must be >= 4 (got " + std::to_string(n_sites) + ")");
  else cfg.n_sites = static_cast<std::size_t>(n_sites);
  if (cadence < 1)
    violations.push_back("snapshot_cadence must be >= 1 (got " + std::to_string(cadence) + ")");
  else cfg.snapshot_cadence = static_cast<std::size_t>(cadence);
  if (dense_cap < 4) violations.push_back("dense_cap must be >= 4");
  else cfg.dense_cap = static_cast<std::size_t>(dense_cap);
  if (seed < 0) violations.push_back("seed must be >= 0");
  else cfg.seed = static_cast<std::uint64_t>(seed);

  cfg.packet.delta = (shape == "delta");
  if (!center_set)
    cfg.packet.center = static_cast<double>(cfg.n_sites) / (cfg.scenario == Scenario::Gem ? 4.0 : 2.0);

  try {
    validate_config(cfg);
  } catch (const ValidationError& e) {
    violations.insert(violations.end(), e.violations().begin(), e.violations().end());
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return cfg;
}

RunConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path.string(), 0, "");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

void validate_config(const RunConfig& c) {
  std::vector<std::string> v;
  auto finite = [&](double x, const char* name) {
    if (!std::isfinite(x)) v.push_back(std::string(name) + " must be finite");
    return std::isfinite(x);
  };
  if (c.n_sites < 4) v.push_back("n_sites must be >= 4");
  if (finite(c.eps, "eps") && !(c.eps > 0.0)) v.push_back("eps must be > 0");
  finite(c.mass, "mass");
  finite(c.g, "g");
  finite(c.packet.center, "packet_center");
  finite(c.packet.momentum, "packet_momentum");
  if (c.snapshot_cadence < 1) v.push_back("snapshot_cadence must be >= 1");
  if (!c.packet.delta && finite(c.packet.variance, "packet_variance")) {
    if (!(c.packet.variance > 0.0)) {
      v.push_back("packet_variance must be > 0");
    } else if (!(3.0 * std::sqrt(c.packet.variance) < static_cast<double>(c.n_sites) / 2.0)) {
      v.push_back("packet does not fit: 3 sigma must be < n_sites / 2");
    }
  }
  const double mix = std::norm(c.packet.mix_minus) + std::norm(c.packet.mix_plus);
  if (!std::isfinite(mix) || std::abs(mix - 1.0) > 1e-9)
    v.push_back("packet mix must satisfy |mix_minus|^2 + |mix_plus|^2 = 1");
  if (c.scenario == Scenario::CustomMetric) {
    const std::pair<const char*, const std::string*> exprs[] = {
        {"metric_g00", &c.metric_g00}, {"metric_g01", &c.metric_g01}, {"metric_g11", &c.metric_g11}};
    for (const auto& [name, text] : exprs) {
      if (text->empty()) {
        v.push_back(std::string("custom-metric scenario requires ") + name);
        continue;
      }
      try {
        (void)Expression::parse(*text);
      } catch (const ExpressionError& e) {
        v.push_back(std::string(name) + ": " + e.what());
      }
    }
  }
  if (c.strategy == UnitarizeStrategy::Affine && c.scenario == Scenario::Gem)
    v.push_back("strategy=affine is not unitary for the gem scenario");
  if (!v.empty()) throw ValidationError(std::move(v));
}

std::string echo_config(const RunConfig& c) {
  std::ostringstream os;
  os.precision(17);
  os << "scenario=" << to_string(c.scenario) << '\n'
     << "n_sites=" << c.n_sites << '\n'
     << "eps=" << c.eps << '\n'
     << "steps=" << c.steps << '\n'
     << "mass=" << c.mass << '\n'
     << "g=" << c.g << '\n'
     << "packet_shape=" << (c.packet.delta ? "delta" : "gaussian") << '\n'
     << "packet_center=" << c.packet.center << '\n'
     << "packet_variance=" << c.packet.variance << '\n'
     << "packet_momentum=" << c.packet.momentum << '\n'
     << "packet_mix_minus=" << c.packet.mix_minus.real() << '\n'
     << "packet_mix_plus=" << c.packet.mix_plus.real() << '\n'
     << "coin=" << to_string(c.coin) << '\n'
     << "strategy=" << to_string(c.strategy) << '\n'
     << "exponential_path=" << to_string(c.path) << '\n'
     << "dense_cap=" << c.dense_cap << '\n'
     << "time_sampling=" << to_string(c.sampling) << '\n'
     << "snapshot_cadence=" << c.snapshot_cadence << '\n'
     << "output_dir=" << c.output_dir << '\n'
     << "seed=" << c.seed << '\n';
  if (!c.metric_g00.empty()) os << "metric_g00=" << c.metric_g00 << '\n';
  if (!c.metric_g01.empty()) os << "metric_g01=" << c.metric_g01 << '\n';
  if (!c.metric_g11.empty()) os << "metric_g11=" << c.metric_g11 << '\n';
  return os.str();
}

MetricField metric_for(const RunConfig& c) {
  switch (c.scenario) {
    case Scenario::Flat:
    case Scenario::FlatHybrid: return MetricField::flat();
    case Scenario::Gem: return MetricField::gem(c.g);
    case Scenario::CustomMetric:
      return MetricField::custom(Expression::parse(c.metric_g00), Expression::parse(c.metric_g01),
                                 Expression::parse(c.metric_g11));
  }
  return MetricField::flat();
}

WalkOptions walk_options_for(const RunConfig& c) {
  WalkOptions o;
  o.coin = c.coin;
  o.sampling = c.sampling;
  o.set_strategy(c.strategy);
  o.set_path(c.path);
  o.minus_unitarize.dense_cap = o.plus_unitarize.dense_cap = c.dense_cap;
  switch (c.scenario) {
    case Scenario::Flat:
    case Scenario::CustomMetric: break;
    case Scenario::FlatHybrid:
      // Phi+ gets the downwind stencil -(f_{p+1} - f_p), which only the
      // exponential form makes unitary.
      o.plus_direction = DirectionRule::Forward;
      if (c.strategy == UnitarizeStrategy::Affine)
        o.plus_unitarize.strategy = UnitarizeStrategy::Exponential;
      break;
    case Scenario::Gem:
      // 1 + L_D is unitary only at x0 = 0; use the exponential shift throughout.
      if (c.strategy == UnitarizeStrategy::Auto) o.set_strategy(UnitarizeStrategy::Exponential);
      break;
  }
  return o;
}

}  // namespace dqw
