#include "dqw/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "dqw/errors.hpp"
#include "dqw/oracles.hpp"

namespace dqw {

namespace {

// %.17g keeps the files bit-reproducible across runs.
std::string num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::filesystem::path& p, bool binary = false) {
  std::ofstream os(p, binary ? std::ios::binary : std::ios::out);
  if (!os) throw Error("cannot write " + p.string());
  return os;
}

}  // namespace

void write_record_csv(std::ostream& os, const RunRecord& rec) {
  os << "# dqw record v1\n";
  os << "j,norm,centroid_minus,centroid_plus\n";
  for (std::size_t i = 0; i < rec.steps.size(); ++i)
    os << rec.steps[i] << ',' << num(rec.norm[i]) << ',' << num(rec.centroid_minus[i]) << ','
       << num(rec.centroid_plus[i]) << '\n';
}

void write_density_matrix(std::ostream& os, const RunRecord& rec) {
  for (const auto& row : rec.density) {
    for (std::size_t p = 0; p < row.size(); ++p) os << (p ? " " : "") << num(row[p]);
    os << '\n';
  }
}

void write_density_pgm(std::ostream& os, const RunRecord& rec) {
  const std::size_t rows = rec.density.size();
  const std::size_t cols = rows ? rec.density.front().size() : 0;
  double peak = 0.0;
  for (const auto& row : rec.density)
    for (double v : row) peak = std::max(peak, v);
  os << "P5\n" << cols << ' ' << rows << "\n255\n";
  std::vector<unsigned char> line(cols);
  for (const auto& row : rec.density) {
    for (std::size_t p = 0; p < cols; ++p) {
      const double level = peak > 0.0 ? std::round(255.0 * row[p] / peak) : 0.0;
      line[p] = static_cast<unsigned char>(std::clamp(level, 0.0, 255.0));
    }
    os.write(reinterpret_cast<const char*>(line.data()), static_cast<std::streamsize>(cols));
  }
}

ScenarioResult execute_scenario(const RunConfig& config) {
  validate_config(config);
  ScenarioResult res;
  res.output_dir = config.output_dir;
  if (const char* env = std::getenv(kOutputDirEnv); env && *env) res.output_dir = env;

  const LatticeSpec lattice(config.n_sites, config.eps);
  WalkEngine engine(metric_for(config), config.mass, walk_options_for(config));
  WalkState state = init_packet(config.packet, lattice);
  RecorderConfig recorder;
  recorder.snapshot_cadence = config.snapshot_cadence;
  res.record = engine.evolve(state, config.steps, recorder);
  res.record.config_echo = echo_config(config);
  for (double n : res.record.norm)
    res.max_norm_drift = std::max(res.max_norm_drift, std::abs(n - res.record.norm.front()));

  std::filesystem::create_directories(res.output_dir);
  {
    auto os = open_out(res.output_dir / "record.csv");
    write_record_csv(os, res.record);
  }
  {
    auto os = open_out(res.output_dir / "density.txt");
    write_density_matrix(os, res.record);
  }
  {
    auto os = open_out(res.output_dir / "density.pgm", true);
    write_density_pgm(os, res.record);
  }
  {
    auto os = open_out(res.output_dir / "config.txt");
    os << res.record.config_echo;
  }
  if (config.scenario == Scenario::Gem) {
    std::vector<double> x0;
    for (std::size_t j : res.record.steps) x0.push_back(lattice.x0(j));
    const double start = lattice.eps * config.packet.center;
    auto os = open_out(res.output_dir / "oracle.csv");
    oracle::write_characteristics_csv(os, config.g, x0, start, start);
  }
  return res;
}

int run_scenario(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const ScenarioResult res = execute_scenario(config);
    out << "scenario " << to_string(config.scenario) << ": " << config.steps << " steps on "
        << config.n_sites << " sites, max |norm - norm0| = " << num(res.max_norm_drift) << '\n'
        << "wrote " << res.output_dir.string() << '\n';
    return exit_code::ok;
  } catch (const ValidationError& e) {
    err << "config error: " << e.what() << '\n';
    return exit_code::config_error;
  } catch (const SignatureError& e) {
    err << "geometry error: " << e.what() << '\n';
    return exit_code::runtime_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::runtime_error;
  }
}

}  // namespace dqw
