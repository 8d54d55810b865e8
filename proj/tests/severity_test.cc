// augkit/tests/severity_test.cc

// Copyright 2026  The augkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "augkit/severity/severity.h"

namespace augkit {
namespace {

constexpr SeverityMapping kAll[] = {
    SeverityMapping::kLinear, SeverityMapping::kSqrtForward,
    SeverityMapping::kSqrtBackward, SeverityMapping::kGaussianMid};

TEST(MapSeverityTest, ClosedForms) {
  EXPECT_EQ(MapSeverity({SeverityMapping::kLinear}, 0.5), 0.5);
  EXPECT_EQ(MapSeverity({SeverityMapping::kSqrtForward}, 0.25), 0.5);
  EXPECT_EQ(MapSeverity({SeverityMapping::kSqrtBackward}, 0.5), 0.25);
  for (double sigma : {0.05, 0.25, 1.0, 4.0}) {
    EXPECT_NEAR(MapSeverity({SeverityMapping::kGaussianMid, sigma}, 0.5), 0.5,
                1e-12);
  }
}

TEST(MapSeverityTest, GaussianMidMatchesNormalQuantile) {
  // Phi^-1(0.95) = 1.6448536269514722.
  const double z = 1.6448536269514722;
  EXPECT_NEAR(MapSeverity({SeverityMapping::kGaussianMid, 0.25}, 1.0),
              0.5 + 0.25 * z, 1e-9);
  EXPECT_NEAR(MapSeverity({SeverityMapping::kGaussianMid, 0.25}, 0.0),
              0.5 - 0.25 * z, 1e-9);
  EXPECT_EQ(MapSeverity({SeverityMapping::kGaussianMid, 1.0}, 1.0), 1.0);
}

TEST(MapSeverityTest, MonotoneBoundedAndExactEndpoints) {
  for (SeverityMapping m : kAll) {
    double prev = -1.0;
    for (int i = 0; i <= 1000; ++i) {
      const double v = MapSeverity({m}, i / 1000.0);
      ASSERT_GE(v, prev) << SeverityMappingName(m);
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, 1.0);
      prev = v;
    }
    if (m != SeverityMapping::kGaussianMid) {
      EXPECT_EQ(MapSeverity({m}, 0.0), 0.0);
      EXPECT_EQ(MapSeverity({m}, 1.0), 1.0);
    }
  }
}

TEST(MapSeverityTest, Errors) {
  EXPECT_THROW(MapSeverity({}, -0.01), std::out_of_range);
  EXPECT_THROW(MapSeverity({}, 1.01), std::out_of_range);
  EXPECT_THROW(MapSeverity({}, std::nan("")), std::out_of_range);
  EXPECT_THROW(MapSeverity({SeverityMapping::kGaussianMid, 0.0}, 0.5),
               std::invalid_argument);
}

TEST(MapSeverityTest, NamesParseBothSpellings) {
  for (SeverityMapping m : kAll) {
    EXPECT_EQ(ParseSeverityMapping(SeverityMappingName(m)), m);
  }
  EXPECT_EQ(ParseSeverityMapping("sqrt_backward"), SeverityMapping::kSqrtBackward);
  EXPECT_FALSE(ParseSeverityMapping("cubic"));
}

TEST(ResolveParamTest, Endpoints) {
  EXPECT_EQ(ResolveParam(3500, 4500, Harder::kDecreasing, 1.0), 3500);
  EXPECT_EQ(ResolveParam(3500, 4500, Harder::kDecreasing, 0.0), 4500);
  EXPECT_EQ(ResolveParam(-5, 10, Harder::kDecreasing, 0.0), 10);
  EXPECT_EQ(ResolveParam(0.4, 0.6, Harder::kIncreasing, 0.0), 0.4);
  EXPECT_EQ(ResolveParam(0.4, 0.6, Harder::kIncreasing, 1.0), 0.6);
}

TEST(ResolveParamTest, IntegerRounding) {
  const SampledRange r{2, 4, Harder::kIncreasing, ValueKind::kInteger, false};
  EXPECT_EQ(ResolveParam(r, 0.5), 3);
  EXPECT_EQ(ResolveParam(r, 0.0), 2);
  EXPECT_EQ(ResolveParam(r, 1.0), 4);
  EXPECT_EQ(ResolveParam(r, 0.8), 4);
}

TEST(ResolveParamTest, StaysInRangeProperty) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(-100.0, 100.0), m(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    double a = u(gen), b = u(gen);
    if (a > b) std::swap(a, b);
    const Harder h = i % 2 ? Harder::kIncreasing : Harder::kDecreasing;
    const double v = ResolveParam(a, b, h, m(gen));
    ASSERT_GE(v, a);
    ASSERT_LE(v, b);
  }
}

TEST(ResolveChoiceTest, IndexRule) {
  const std::vector<ParamValue> opts = {std::string("easy"), std::string("mid"),
                                        std::string("hard")};
  EXPECT_EQ(std::get<std::string>(ResolveChoice(opts, 0.0)), "easy");
  EXPECT_EQ(std::get<std::string>(ResolveChoice(opts, 0.5)), "mid");
  EXPECT_EQ(std::get<std::string>(ResolveChoice(opts, 1.0)), "hard");
  EXPECT_THROW(ResolveChoice({}, 0.5), std::invalid_argument);
}

TEST(InstantiateTest, DeterministicAndShared) {
  const MergedChain merged = MergeChains({AtomicName::kFarField});
  const SeverityProfile profile{SeverityMapping::kLinear, 0.25, 1234};
  const ResolvedChain a = InstantiateChain(merged, profile, 99);
  EXPECT_EQ(a, InstantiateChain(merged, profile, 99));
  // One m drives every range: room_size rises and cutoff falls together.
  const double m = a.severity;
  EXPECT_NEAR(std::get<double>(a.chain[0].params.at("room_size")), 0.4 + 0.2 * m, 1e-12);
  EXPECT_NEAR(std::get<double>(a.chain[1].params.at("cutoff_hz")), 4500 - 1000 * m, 1e-9);
  EXPECT_NEAR(std::get<double>(a.chain[2].params.at("target_lufs")), -27 - 11 * m, 1e-9);
  EXPECT_EQ(a.latent, m);
}

TEST(InstantiateTest, FixedParamsCarriedThrough) {
  const ResolvedChain r = ResolveChainAt(MergeChains({AtomicName::kRecording}), 0.3, 0.3, 1);
  EXPECT_EQ(std::get<std::int64_t>(r.chain[0].params.at("target_sr")), 8000);
  EXPECT_DOUBLE_EQ(std::get<double>(r.chain[0].params.at("prob")), 0.3);
  EXPECT_TRUE(std::get<bool>(r.chain[1].params.at("use_white_noise")));
}

TEST(InstantiateTest, NeighbouringIdsGetDistinctLatents) {
  std::set<double> latents;
  const int n = 1000000;
  for (int id = 0; id < n; ++id) latents.insert(DrawLatent(SampleStreamSeed(7, id)));
  EXPECT_GT(latents.size(), static_cast<std::size_t>(n - 5));
}

TEST(InstantiateTest, StochasticDominanceAtDeciles) {
  std::vector<double> lin, fwd, bwd;
  for (int id = 0; id < 50000; ++id) {
    const double x = DrawLatent(SampleStreamSeed(11, id));
    lin.push_back(MapSeverity({SeverityMapping::kLinear}, x));
    fwd.push_back(MapSeverity({SeverityMapping::kSqrtForward}, x));
    bwd.push_back(MapSeverity({SeverityMapping::kSqrtBackward}, x));
  }
  for (auto* v : {&lin, &fwd, &bwd}) std::sort(v->begin(), v->end());
  for (int d = 1; d <= 9; ++d) {
    const std::size_t k = d * 5000;
    EXPECT_GT(fwd[k], lin[k]);
    EXPECT_GT(lin[k], bwd[k]);
  }
}

}  // namespace
}  // namespace augkit
