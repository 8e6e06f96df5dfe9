// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "drvqa/harness.hpp"

namespace drvqa {

namespace {

using nlohmann::ordered_json;

void expect_keys(const ordered_json& obj, const std::string& where,
                 const std::set<std::string>& allowed) {
  if (!obj.is_object()) throw config_error("config: '" + where + "' must be an object");
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      throw config_error("config: unknown key '" + item.key() + "' in " + where);
    }
  }
}

template <typename T>
void read_number(const ordered_json& obj, const char* key, T& out) {
  if (!obj.contains(key)) return;
  const auto& v = obj.at(key);
  if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_integer() && !v.is_number_unsigned()) {
      throw config_error(std::string("config: '") + key + "' must be an integer");
    }
  } else {
    if (!v.is_number()) throw config_error(std::string("config: '") + key + "' must be a number");
  }
  out = v.template get<T>();
}

void read_bool(const ordered_json& obj, const char* key, bool& out) {
  if (!obj.contains(key)) return;
  if (!obj.at(key).is_boolean()) {
    throw config_error(std::string("config: '") + key + "' must be a boolean");
  }
  out = obj.at(key).get<bool>();
}

void read_string(const ordered_json& obj, const char* key, std::string& out) {
  if (!obj.contains(key)) return;
  if (!obj.at(key).is_string()) {
    throw config_error(std::string("config: '") + key + "' must be a string");
  }
  out = obj.at(key).get<std::string>();
}

void parse_problem(const ordered_json& obj, ExperimentConfig& config) {
  std::string kind = "qaoa-maxcut";
  read_string(obj, "kind", kind);
  if (kind == "qaoa-maxcut") {
    config.kind = ProblemKind::QaoaMaxCut;
    expect_keys(obj, "problem",
                {"kind", "n_vertices", "degree", "depth", "graph_count", "graph_seed"});
    read_number(obj, "n_vertices", config.qaoa.n_vertices);
    read_number(obj, "degree", config.qaoa.degree);
    read_number(obj, "depth", config.qaoa.depth);
    read_number(obj, "graph_count", config.qaoa.graph_count);
    read_number(obj, "graph_seed", config.qaoa.graph_seed);
  } else if (kind == "hea-vqe") {
    config.kind = ProblemKind::HeaVqe;
    expect_keys(obj, "problem",
                {"kind", "n_spins", "coupling", "field", "layers", "setup_restarts",
                 "setup_evals", "setup_seed", "periodic"});
    read_number(obj, "n_spins", config.vqe.n_spins);
    read_number(obj, "coupling", config.vqe.coupling);
    read_number(obj, "field", config.vqe.field);
    read_number(obj, "layers", config.vqe.layers);
    read_number(obj, "setup_restarts", config.vqe.setup_restarts);
    read_number(obj, "setup_evals", config.vqe.setup_evals);
    read_number(obj, "setup_seed", config.vqe.setup_seed);
    read_bool(obj, "periodic", config.vqe.periodic);
  } else {
    throw config_error("config: problem kind must be 'qaoa-maxcut' or 'hea-vqe'");
  }
}

void parse_shift_series(const ordered_json& obj, ExperimentConfig& config) {
  expect_keys(obj, "shift_series", {"means", "count", "step", "start", "std"});
  read_number(obj, "std", config.shifts.std_dev);
  if (obj.contains("means")) {
    if (obj.contains("count") || obj.contains("step") || obj.contains("start")) {
      throw config_error("config: shift_series takes either 'means' or (count, step), not both");
    }
    if (!obj.at("means").is_array()) throw config_error("config: 'means' must be an array");
    config.shifts.means.clear();
    for (const auto& v : obj.at("means")) {
      if (!v.is_number()) throw config_error("config: 'means' entries must be numbers");
      config.shifts.means.push_back(v.get<double>());
    }
  } else {
    int count = static_cast<int>(config.shifts.means.size());
    double step = 0.01;
    double start = config.ref_mean;
    read_number(obj, "count", count);
    read_number(obj, "step", step);
    read_number(obj, "start", start);
    config.shifts = ShiftSeries::linear(start, step, count, config.shifts.std_dev);
  }
}

GpConfig::Policy policy_from_name(const std::string& name) {
  if (name == "grid") return GpConfig::Policy::GridSearch;
  if (name == "fixed") return GpConfig::Policy::Fixed;
  throw config_error("config: gp policy must be 'grid' or 'fixed'");
}

} // namespace

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("config: JSON parse failure: ") + e.what());
  }

  ExperimentConfig config;
  expect_keys(doc, "top level",
              {"problem", "noise_grid", "reference_pdf", "shift_series", "epsilon",
               "mmd_lengthscale", "methods", "optimizer", "gp", "seeds", "out_dir", "jobs"});

  if (doc.contains("problem")) parse_problem(doc.at("problem"), config);
  if (doc.contains("noise_grid")) {
    const auto& g = doc.at("noise_grid");
    expect_keys(g, "noise_grid", {"size", "min", "max"});
    read_number(g, "size", config.grid_size);
    read_number(g, "min", config.grid_min);
    read_number(g, "max", config.grid_max);
  }
  if (doc.contains("reference_pdf")) {
    const auto& r = doc.at("reference_pdf");
    expect_keys(r, "reference_pdf", {"mean", "std"});
    read_number(r, "mean", config.ref_mean);
    read_number(r, "std", config.ref_std);
    // default shift series starts at the reference mean
    config.shifts = ShiftSeries::linear(config.ref_mean, 0.01,
                                        static_cast<int>(config.shifts.means.size()),
                                        config.shifts.std_dev);
  }
  if (doc.contains("shift_series")) parse_shift_series(doc.at("shift_series"), config);
  read_number(doc, "epsilon", config.epsilon);
  read_number(doc, "mmd_lengthscale", config.mmd_lengthscale);
  if (doc.contains("methods")) {
    if (!doc.at("methods").is_array()) throw config_error("config: 'methods' must be an array");
    config.methods.clear();
    for (const auto& v : doc.at("methods")) {
      if (!v.is_string()) throw config_error("config: 'methods' entries must be strings");
      config.methods.push_back(method_from_name(v.get<std::string>()));
    }
  }
  if (doc.contains("optimizer")) {
    const auto& o = doc.at("optimizer");
    expect_keys(o, "optimizer",
                {"init_count", "max_iterations", "batch_size", "beta", "outer_restarts",
                 "outer_evals"});
    read_number(o, "init_count", config.init_count);
    read_number(o, "max_iterations", config.max_iterations);
    read_number(o, "batch_size", config.batch_size);
    read_number(o, "beta", config.beta);
    read_number(o, "outer_restarts", config.outer.restarts);
    read_number(o, "outer_evals", config.outer.evals_per_restart);
  }
  if (doc.contains("gp")) {
    const auto& g = doc.at("gp");
    expect_keys(g, "gp",
                {"policy", "fixed_lengthscale", "fixed_noise", "lengthscale_grid_size",
                 "lengthscale_min", "lengthscale_max", "noise_grid_size", "noise_min",
                 "noise_max"});
    std::string policy = "grid";
    read_string(g, "policy", policy);
    config.gp.policy = policy_from_name(policy);
    read_number(g, "fixed_lengthscale", config.gp.fixed_lengthscale);
    read_number(g, "fixed_noise", config.gp.fixed_noise);
    read_number(g, "lengthscale_grid_size", config.gp.lengthscale_grid_size);
    read_number(g, "lengthscale_min", config.gp.lengthscale_min);
    read_number(g, "lengthscale_max", config.gp.lengthscale_max);
    read_number(g, "noise_grid_size", config.gp.noise_grid_size);
    read_number(g, "noise_min", config.gp.noise_min);
    read_number(g, "noise_max", config.gp.noise_max);
  }
  if (doc.contains("seeds")) {
    if (!doc.at("seeds").is_array()) throw config_error("config: 'seeds' must be an array");
    config.seeds.clear();
    for (const auto& v : doc.at("seeds")) {
      if (!v.is_number_integer() && !v.is_number_unsigned()) {
        throw config_error("config: 'seeds' entries must be integers");
      }
      config.seeds.push_back(v.get<std::uint64_t>());
    }
  }
  read_string(doc, "out_dir", config.out_dir);
  read_number(doc, "jobs", config.jobs);

  config.validate();
  return config;
}

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("config: cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_json_text(buffer.str());
}

std::string ExperimentConfig::to_json_text() const {
  ordered_json doc;
  if (kind == ProblemKind::QaoaMaxCut) {
    doc["problem"] = {{"kind", "qaoa-maxcut"},
                      {"n_vertices", qaoa.n_vertices},
                      {"degree", qaoa.degree},
                      {"depth", qaoa.depth},
                      {"graph_count", qaoa.graph_count},
                      {"graph_seed", qaoa.graph_seed}};
  } else {
    doc["problem"] = {{"kind", "hea-vqe"},
                      {"n_spins", vqe.n_spins},
                      {"coupling", vqe.coupling},
                      {"field", vqe.field},
                      {"layers", vqe.layers},
                      {"setup_restarts", vqe.setup_restarts},
                      {"setup_evals", vqe.setup_evals},
                      {"setup_seed", vqe.setup_seed},
                      {"periodic", vqe.periodic}};
  }
  doc["noise_grid"] = {{"size", grid_size}, {"min", grid_min}, {"max", grid_max}};
  doc["reference_pdf"] = {{"mean", ref_mean}, {"std", ref_std}};
  doc["shift_series"] = {{"means", shifts.means}, {"std", shifts.std_dev}};
  doc["epsilon"] = epsilon;
  doc["mmd_lengthscale"] = mmd_lengthscale;
  std::vector<std::string> names;
  for (Method m : methods) names.emplace_back(method_name(m));
  doc["methods"] = names;
  doc["optimizer"] = {{"init_count", init_count},
                      {"max_iterations", max_iterations},
                      {"batch_size", batch_size},
                      {"beta", beta},
                      {"outer_restarts", outer.restarts},
                      {"outer_evals", outer.evals_per_restart}};
  doc["gp"] = {{"policy", gp.policy == GpConfig::Policy::GridSearch ? "grid" : "fixed"},
               {"fixed_lengthscale", gp.fixed_lengthscale},
               {"fixed_noise", gp.fixed_noise}};
  doc["seeds"] = seeds;
  doc["out_dir"] = out_dir;
  doc["jobs"] = jobs;
  return doc.dump(2) + "\n";
}

} // namespace drvqa
