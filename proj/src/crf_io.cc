// Copyright 2026 The Legal SBD Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "legal_sbd/crf.h"
#include "legal_sbd/errors.h"

namespace legal_sbd {
namespace crf {
namespace {

using Json = nlohmann::json;

void append_number(double v, std::string* out) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  *out += buf;
}

void append_vector(std::span<const double> v, std::string* out) {
  *out += '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) *out += ", ";
    append_number(v[i], out);
  }
  *out += ']';
}

Json metadata_json(const ModelMetadata& m) {
  Json j;  // nlohmann::json keeps object keys sorted
  j["c1"] = m.c1;
  j["c2"] = m.c2;
  j["max_iterations"] = m.max_iterations;
  j["iterations_run"] = m.iterations_run;
  j["lbfgs_memory"] = m.lbfgs_memory;
  j["convergence_tol"] = m.convergence_tol;
  j["seed"] = m.seed;
  j["corpus_fingerprint"] = m.corpus_fingerprint;
  j["final_objective"] = m.final_objective;
  j["stop_reason"] = m.stop_reason;
  j["extra"] = m.extra;
  return j;
}

ModelMetadata metadata_from_json(const Json& j) {
  ModelMetadata m;
  m.c1 = j.at("c1").get<double>();
  m.c2 = j.at("c2").get<double>();
  m.max_iterations = j.at("max_iterations").get<int>();
  m.iterations_run = j.at("iterations_run").get<int>();
  m.lbfgs_memory = j.at("lbfgs_memory").get<int>();
  m.convergence_tol = j.at("convergence_tol").get<double>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.corpus_fingerprint = j.at("corpus_fingerprint").get<std::string>();
  m.final_objective = j.at("final_objective").get<double>();
  m.stop_reason = j.at("stop_reason").get<std::string>();
  m.extra = j.at("extra").get<std::map<std::string, std::string>>();
  return m;
}

std::vector<double> read_vector(const Json& j, std::size_t n,
                                const char* what) {
  auto v = j.get<std::vector<double>>();
  if (v.size() != n) {
    throw DataError(std::string("model file: '") + what + "' must have " +
                    std::to_string(n) + " entries");
  }
  return v;
}

}  // namespace

std::string to_json(const Model& model) {
  for (double w : model.weights()) {
    if (!std::isfinite(w)) throw DataError("refusing to save non-finite weights");
  }
  struct Row {
    const std::string* name;
    Label label;
    double weight;
  };
  std::vector<Row> rows;
  const AttributeDictionary& attrs = model.attributes();
  for (std::uint32_t id = 0; id < attrs.size(); ++id) {
    for (Label y : kAllLabels) {
      const double w = model.state(id, y);
      if (w != 0.0) rows.push_back({&attrs.name(id), y, w});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (*a.name != *b.name) return *a.name < *b.name;
    return a.label < b.label;
  });

  std::string out = "{\n  \"end\": ";
  std::vector<double> end_w, start_w;
  for (Label y : kAllLabels) {
    end_w.push_back(model.end(y));
    start_w.push_back(model.start(y));
  }
  append_vector(end_w, &out);
  out += ",\n  \"labels\": [\"B\", \"I\", \"L\", \"O\", \"U\"],\n  \"metadata\": ";
  out += metadata_json(model.metadata).dump();
  out += ",\n  \"start\": ";
  append_vector(start_w, &out);
  out += ",\n  \"state_weights\": [";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += i == 0 ? "\n    [" : ",\n    [";
    out += Json(*rows[i].name).dump();
    out += ", \"";
    out += label_char(rows[i].label);
    out += "\", ";
    append_number(rows[i].weight, &out);
    out += ']';
  }
  out += rows.empty() ? "],\n" : "\n  ],\n";
  out += "  \"transitions\": [";
  for (Label from : kAllLabels) {
    out += from == Label::B ? "\n    " : ",\n    ";
    std::vector<double> row;
    for (Label to : kAllLabels) row.push_back(model.transition(from, to));
    append_vector(row, &out);
  }
  out += "\n  ],\n  \"version\": ";
  out += std::to_string(kModelFormatVersion);
  out += "\n}\n";
  return out;
}

Model from_json(std::string_view json) {
  Json j;
  try {
    j = Json::parse(json);
  } catch (const Json::parse_error& e) {
    throw DataError(std::string("corrupt model file: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("version")) {
      throw DataError("corrupt model file: missing version");
    }
    const auto& version = j.at("version");
    if (!version.is_number_integer() ||
        version.get<std::int64_t>() != kModelFormatVersion) {
      throw VersionError("unsupported model format version " + version.dump() +
                         " (expected " + std::to_string(kModelFormatVersion) +
                         ")");
    }
    const auto labels = j.at("labels").get<std::vector<std::string>>();
    if (labels != std::vector<std::string>{"B", "I", "L", "O", "U"}) {
      throw DataError("model file: unexpected label set");
    }

    AttributeDictionary attrs;
    struct Entry {
      std::uint32_t id;
      Label label;
      double weight;
    };
    std::vector<Entry> entries;
    for (const auto& row : j.at("state_weights")) {
      if (!row.is_array() || row.size() != 3) {
        throw DataError("model file: malformed state weight row");
      }
      const auto label = parse_label(row[1].get<std::string>());
      if (!label) throw DataError("model file: unknown label " + row[1].dump());
      entries.push_back({attrs.intern(row[0].get<std::string>()), *label,
                         row[2].get<double>()});
    }
    Model model(std::move(attrs));
    for (const Entry& e : entries) model.state(e.id, e.label) = e.weight;

    const auto& trans = j.at("transitions");
    if (!trans.is_array() || trans.size() != kNumLabels) {
      throw DataError("model file: transitions must be a 5 x 5 matrix");
    }
    for (Label from : kAllLabels) {
      const auto row = read_vector(trans[static_cast<std::size_t>(from)],
                                   kNumLabels, "transitions");
      for (Label to : kAllLabels) {
        model.transition(from, to) = row[static_cast<std::size_t>(to)];
      }
    }
    const auto start = read_vector(j.at("start"), kNumLabels, "start");
    const auto end = read_vector(j.at("end"), kNumLabels, "end");
    for (Label y : kAllLabels) {
      model.start(y) = start[static_cast<std::size_t>(y)];
      model.end(y) = end[static_cast<std::size_t>(y)];
    }
    for (double w : model.weights()) {
      if (!std::isfinite(w)) throw DataError("model file: non-finite weight");
    }
    model.metadata = metadata_from_json(j.at("metadata"));
    return model;
  } catch (const Json::exception& e) {
    throw DataError(std::string("corrupt model file: ") + e.what());
  }
}

void save_model(const Model& model, const std::string& path) {
  const std::string text = to_json(model);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write model file " + path);
  out << text;
  if (!out) throw DataError("failed writing model file " + path);
}

Model load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open model file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

}  // namespace crf
}  // namespace legal_sbd
