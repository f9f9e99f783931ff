#include "ttp/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>

#include "text_scan.hpp"
#include "ttp/schedule_io.hpp"

namespace ttp {

namespace fs = std::filesystem;

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return in;
}

Instance load_instance(const std::string& path) {
  auto in = open_or_throw(path);
  try {
    return parse_instance(in);
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

Schedule load_schedule(const std::string& path, const Instance& inst) {
  auto in = open_or_throw(path);
  try {
    return parse_schedule(in, inst);
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

double to_double(const std::string& key, const std::string& value, int line) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size()) {
    throw ParseError(line, "malformed value '" + value + "' for key '" + key +
                               "'");
  }
  return v;
}

long long to_long(const std::string& key, const std::string& value, int line) {
  long long v = 0;
  if (!detail::parse_long(value, v)) {
    throw ParseError(line, "malformed value '" + value + "' for key '" + key +
                               "'");
  }
  return v;
}

}  // namespace

void apply_config_file(AnnealParams& params, const std::string& path) {
  auto in = open_or_throw(path);
  std::string line;
  int lineno = 0;
  while (detail::next_line(in, line, lineno)) {
    if (line[line.find_first_not_of(" \t")] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(lineno, "expected key=value, got '" + line + "'");
    }
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "t0") {
      params.t0 = to_double(key, value, lineno);
    } else if (key == "beta") {
      params.beta = to_double(key, value, lineno);
    } else if (key == "steps") {
      params.steps = to_long(key, value, lineno);
    } else if (key == "w") {
      params.w = to_double(key, value, lineno);
    } else if (key == "p_look") {
      params.p_look = to_double(key, value, lineno);
    } else if (key == "p_exit") {
      params.p_exit = to_double(key, value, lineno);
    } else if (key == "seed") {
      params.seed = static_cast<std::uint64_t>(to_long(key, value, lineno));
    } else if (key == "chains") {
      params.chains = static_cast<int>(to_long(key, value, lineno));
    } else if (key == "progress_stride") {
      params.progress_stride = to_long(key, value, lineno);
    } else if (key == "weights") {
      std::istringstream vs(value);
      std::string part;
      std::vector<double> parts;
      while (std::getline(vs, part, ',')) {
        parts.push_back(to_double(key, part, lineno));
      }
      if (parts.size() != kMoveKindCount) {
        throw ParseError(lineno,
                         "weights needs " + std::to_string(kMoveKindCount) +
                             " comma-separated values, got " +
                             std::to_string(parts.size()));
      }
      for (int k = 0; k < kMoveKindCount; ++k) {
        params.weights.by_kind[k] = parts[k];
      }
    } else {
      throw ParseError(lineno, "unknown config key '" + key + "'");
    }
  }
}

AnnealParams resolve_params(const RunConfig& cfg) {
  AnnealParams params;
  if (!cfg.config_path.empty()) apply_config_file(params, cfg.config_path);
  if (cfg.steps) params.steps = *cfg.steps;
  if (cfg.seed) params.seed = *cfg.seed;
  if (cfg.chains) params.chains = *cfg.chains;
  return params;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Instance inst;
  AnnealParams params;
  try {
    inst = load_instance(cfg.instance_path);
    params = resolve_params(cfg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  std::mutex progress_mutex;
  ProgressFn progress;
  if (cfg.progress) {
    if (params.progress_stride <= 0) {
      params.progress_stride = std::max<long long>(1, params.steps / 20);
    }
    progress = [&](const ProgressSample& p) {
      std::lock_guard<std::mutex> lock(progress_mutex);
      err << "chain=" << p.chain << " step=" << p.step
          << " temp=" << p.temperature << " cost=" << p.current_cost
          << " best=" << p.best_distance << '\n';
    };
  }

  const AnnealResult result = run_anneal(inst, params, progress);

  std::string out_path = cfg.out_path;
  if (out_path.empty()) {
    out_path = fs::path(cfg.instance_path).stem().string() + ".best.txt";
  }
  try {
    write_file(out_path, render_schedule(result.best, inst));
    write_file(out_path + ".sol", write_solution(result.best));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  out << "distance=" << result.best_distance
      << " feasible=" << (result.best_feasible ? "true" : "false")
      << " proposals=" << result.proposals << '\n';
  return result.best_feasible ? kExitOk : kExitNoFeasible;
}

int cmd_validate(const std::string& instance_path,
                 const std::string& schedule_path, std::ostream& out,
                 std::ostream& err) {
  try {
    const Instance inst = load_instance(instance_path);
    const Schedule s = load_schedule(schedule_path, inst);
    const bool drr = is_double_round_robin(s);
    const ViolationReport v = count_violations(s);
    out << "drr=" << (drr ? "true" : "false") << " atmost=" << v.atmost
        << " norepeat=" << v.norepeat << '\n';
    return (drr && v.total() == 0) ? kExitOk : kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

int cmd_score(const std::string& instance_path,
              const std::string& schedule_path, std::ostream& out,
              std::ostream& err) {
  try {
    const Instance inst = load_instance(instance_path);
    const Schedule s = load_schedule(schedule_path, inst);
    const DistanceVector dist = team_distances(s, inst);
    for (int t = 0; t < inst.n; ++t) out << dist(t) << ' ';
    out << "total=" << dist.sum() << '\n';
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

int cmd_bench(const std::string& dir, const std::vector<std::uint64_t>& seeds,
              long long steps, const std::string& config_path,
              std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::string, Instance>> instances;
  try {
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file()) files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw std::runtime_error("no instance files in " + dir);
    for (const auto& f : files) {
      instances.emplace_back(fs::path(f).filename().string(),
                             load_instance(f));
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  AnnealParams base;
  if (!config_path.empty()) {
    try {
      apply_config_file(base, config_path);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitInputError;
    }
  }
  if (steps > 0) base.steps = steps;

  for (const auto& [name, inst] : instances) {
    for (const std::uint64_t seed : seeds) {
      AnnealParams params = base;
      params.seed = seed;
      const auto start = std::chrono::steady_clock::now();
      try {
        const AnnealResult result = run_anneal(inst, params);
        const std::chrono::duration<double> elapsed =
            std::chrono::steady_clock::now() - start;
        out << name << ' ' << seed << ' ' << result.best_distance << ' '
            << (result.best_feasible ? "true" : "false") << ' ' << std::fixed
            << std::setprecision(3) << elapsed.count() << '\n';
      } catch (const std::exception& e) {
        out << name << ' ' << seed << " error " << e.what() << '\n';
      }
    }
  }
  return kExitOk;
}

}  // namespace ttp
