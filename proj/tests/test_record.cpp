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

#include <string>

#include <gtest/gtest.h>

#include "aplab/error.hpp"
#include "aplab/record.hpp"
#include "config.hpp"

namespace aplab {
namespace {

TEST(Record, FieldOrderAndNull) {
  Record r;
  r.step = 3;
  r.kind = "increment";
  r.codim_or_rank = 2;
  r.k_used = 11;
  r.alpha = 0.25;
  r.witness = 1.5;
  r.seed = 42;
  EXPECT_EQ(to_json_line(r),
            R"({"step":3,"kind":"increment","codim_or_rank":2,"k_used":11,"alpha":0.25,)"
            R"("witness":1.5,"bound_ratio":null,"seed":42})");
  r.bound_ratio = 0.125;
  const Record back = parse_record(to_json_line(r));
  EXPECT_EQ(to_json_line(back), to_json_line(r));
}

TEST(Record, RejectsMalformedLines) {
  EXPECT_THROW(parse_record("not json"), Error);
  EXPECT_THROW(parse_record(R"({"step":1})"), Error);
  EXPECT_THROW(parse_record(R"({"step":1,"kind":"x","codim_or_rank":0,"k_used":0,"alpha":0,)"
                            R"("witness":0,"bound_ratio":null,"seed":0,"extra":1})"),
               Error);
}

TEST(Config, RoundTripIsByteIdentical) {
  cli::ExperimentConfig c;
  c.command = "bootstrap";
  c.group = "v:5:4";
  c.eps = 0.1;
  c.freqs = {1, -3, 17};
  c.seed = 18446744073709551615ull;
  c.noise = 0.025;
  const std::string text = cli::to_json(c);
  EXPECT_EQ(cli::to_json(cli::from_json(text)), text);
}

TEST(Config, RejectsUnknownAndMistypedFields) {
  EXPECT_THROW(cli::from_json(R"({"bogus": 1})"), Error);
  EXPECT_THROW(cli::from_json(R"({"eps": "small"})"), Error);
  EXPECT_THROW(cli::from_json("[1, 2]"), Error);
  EXPECT_THROW(cli::from_json("{"), Error);
  EXPECT_EQ(cli::from_json(R"({"eps": 0.01})").eps, 0.01);
}

}  // namespace
}  // namespace aplab
