// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "drvqa/harness.hpp"

namespace drvqa {

namespace {

using nlohmann::ordered_json;

// 17 significant digits: doubles round-trip exactly through text.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string xi_column(int i) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "metric_xi_%02d", i);
  return buf;
}

std::string table_header(int grid_size) {
  std::string header = "method,problem_id,seed,shift_index,eval_mean,metric_expected";
  for (int i = 0; i < grid_size; ++i) header += "," + xi_column(i);
  return header;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

ordered_json row_to_json(const ResultRow& row) {
  return ordered_json{{"method", row.method},
                      {"problem_id", row.problem_id},
                      {"seed", row.seed},
                      {"shift_index", row.shift_index},
                      {"eval_mean", row.eval_mean},
                      {"metric_expected", row.metric_expected},
                      {"metric_xi", row.metric_xi}};
}

ordered_json trace_to_json(const OptimizationTrace& trace) {
  ordered_json iterations = ordered_json::array();
  for (const IterationRecord& it : trace.iterations) {
    iterations.push_back({{"explored_theta", it.explored_theta},
                          {"xi_batch", it.xi_batch},
                          {"observed_values", it.observed_values},
                          {"worst_case_weights", it.worst_case_weights},
                          {"selection_value", it.selection_value},
                          {"nominal_value", it.nominal_value},
                          {"incumbent_theta", it.incumbent_theta},
                          {"incumbent_score", it.incumbent_score}});
  }
  return ordered_json{{"initial_thetas", trace.initial_thetas},
                      {"initial_xis", trace.initial_xis},
                      {"initial_values", trace.initial_values},
                      {"iterations", std::move(iterations)},
                      {"theta_star", trace.theta_star}};
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("export_results: cannot write " + path);
  out << text;
  if (!out) throw io_error("export_results: write failed for " + path);
}

} // namespace

void export_results(const ResultsTable& table, const std::vector<RunRecord>& runs,
                    const std::string& out_dir, ExportFormat format) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw io_error("export_results: cannot create directory " + out_dir);

  if (format == ExportFormat::Csv) {
    std::string text = table_header(table.grid_size) + "\n";
    for (const ResultRow& row : table.rows) {
      text += row.method + "," + row.problem_id + "," + std::to_string(row.seed) + "," +
              std::to_string(row.shift_index) + "," + fmt(row.eval_mean) + "," +
              fmt(row.metric_expected);
      for (double v : row.metric_xi) text += "," + fmt(v);
      text += "\n";
    }
    write_text_file(out_dir + "/results.csv", text);
  } else {
    ordered_json doc;
    doc["grid_size"] = table.grid_size;
    doc["rows"] = ordered_json::array();
    for (const ResultRow& row : table.rows) doc["rows"].push_back(row_to_json(row));
    write_text_file(out_dir + "/results.json", doc.dump(2) + "\n");
  }

  ordered_json traces = ordered_json::array();
  for (const RunRecord& run : runs) {
    traces.push_back({{"method", run.method},
                      {"problem_id", run.problem_id},
                      {"seed", run.seed},
                      {"theta_star", run.theta_star},
                      {"trace", trace_to_json(run.trace)}});
  }
  write_text_file(out_dir + "/traces.json", traces.dump(2) + "\n");
}

ResultsTable import_results_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("import_results_csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw io_error("import_results_csv: empty file " + path);

  const auto header = split_csv_line(line);
  if (header.size() < 6) throw io_error("import_results_csv: malformed header in " + path);
  const int grid_size = static_cast<int>(header.size()) - 6;
  if (table_header(grid_size) != line) {
    throw io_error("import_results_csv: unexpected header in " + path);
  }

  ResultsTable table;
  table.grid_size = grid_size;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (static_cast<int>(fields.size()) != 6 + grid_size) {
      throw io_error("import_results_csv: malformed row in " + path);
    }
    ResultRow row;
    row.method = fields[0];
    row.problem_id = fields[1];
    row.seed = std::stoull(fields[2]);
    row.shift_index = std::stoi(fields[3]);
    row.eval_mean = std::strtod(fields[4].c_str(), nullptr);
    row.metric_expected = std::strtod(fields[5].c_str(), nullptr);
    row.metric_xi.resize(grid_size);
    for (int i = 0; i < grid_size; ++i) {
      row.metric_xi[i] = std::strtod(fields[6 + i].c_str(), nullptr);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

ResultsTable import_results_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("import_results_json: cannot open " + path);
  ordered_json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw io_error("import_results_json: parse failure in " + path + ": " + e.what());
  }
  ResultsTable table;
  table.grid_size = doc.at("grid_size").get<int>();
  for (const auto& r : doc.at("rows")) {
    ResultRow row;
    row.method = r.at("method").get<std::string>();
    row.problem_id = r.at("problem_id").get<std::string>();
    row.seed = r.at("seed").get<std::uint64_t>();
    row.shift_index = r.at("shift_index").get<int>();
    row.eval_mean = r.at("eval_mean").get<double>();
    row.metric_expected = r.at("metric_expected").get<double>();
    row.metric_xi = r.at("metric_xi").get<std::vector<double>>();
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_landscape_csv(const LandscapeScan& scan, const std::string& path) {
  std::string text = "# xi=" + fmt(scan.xi) + " argmin_gamma_index=" +
                     std::to_string(scan.argmin_gamma) + " argmin_beta_index=" +
                     std::to_string(scan.argmin_beta) + "\n";
  text += "gamma,beta,value\n";
  for (size_t i = 0; i < scan.gamma_axis.size(); ++i) {
    for (size_t j = 0; j < scan.beta_axis.size(); ++j) {
      text += fmt(scan.gamma_axis[i]) + "," + fmt(scan.beta_axis[j]) + "," +
              fmt(scan.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) + "\n";
    }
  }
  write_text_file(path, text);
}

} // namespace drvqa
