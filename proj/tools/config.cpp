// Copyright 2026 The aplab Authors.
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

#include "config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "aplab/error.hpp"

namespace aplab::cli {
namespace {

using nlohmann::ordered_json;

// One entry per field, in serialization order.
template <typename Visitor>
void visit_fields(ExperimentConfig& c, Visitor&& v) {
  v("command", c.command);
  v("group", c.group);
  v("eps", c.eps);
  v("p", c.p);
  v("k", c.k);
  v("seed", c.seed);
  v("instances", c.instances);
  v("strategy", c.strategy);
  v("max_steps", c.max_steps);
  v("codim0", c.codim0);
  v("noise", c.noise);
  v("rank", c.rank);
  v("ambient", c.ambient);
  v("trials", c.trials);
  v("fixture", c.fixture);
  v("alpha", c.alpha);
  v("freqs", c.freqs);
  v("width", c.width);
  v("shrink", c.shrink);
  v("regular", c.regular);
  v("n", c.n);
  v("input", c.input);
  v("a", c.a);
  v("a1", c.a1);
  v("a2", c.a2);
  v("s", c.s);
  v("c", c.c);
  v("suite", c.suite);
  v("output", c.output);
}

}  // namespace

std::string to_json(const ExperimentConfig& c) {
  ordered_json j = ordered_json::object();
  ExperimentConfig copy = c;
  visit_fields(copy, [&](const char* key, const auto& value) { j[key] = value; });
  return j.dump(2) + "\n";
}

ExperimentConfig from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kFormat, std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::kFormat, "config must be a JSON object");
  ExperimentConfig c;
  std::size_t known = 0;
  visit_fields(c, [&](const char* key, auto& value) {
    if (!j.contains(key)) return;
    ++known;
    try {
      j.at(key).get_to(value);
    } catch (const nlohmann::json::exception&) {
      throw Error(ErrorKind::kFormat, std::string("config field '") + key + "' has the wrong type");
    }
  });
  if (known != j.size()) {
    ExperimentConfig probe;
    for (const auto& item : j.items()) {
      bool found = false;
      visit_fields(probe, [&](const char* key, const auto&) { found = found || item.key() == key; });
      if (!found) throw Error(ErrorKind::kFormat, "unknown config field '" + item.key() + "'");
    }
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kFormat, "cannot open config " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

void save_config(const std::string& path, const ExperimentConfig& c) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kFormat, "cannot write config " + path);
  out << to_json(c);
}

}  // namespace aplab::cli
