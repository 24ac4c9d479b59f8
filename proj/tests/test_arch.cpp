// Copyright 2026 The zonec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "zonec/arch.hpp"

namespace zonec {
namespace {

TEST(Config, Defaults) {
  MachineConfig c;
  EXPECT_NO_THROW(c.validate());
  EXPECT_EQ(c.zone_sites(), 1681u);
  EXPECT_EQ(c.logical_capacity(), 120u);
  EXPECT_NEAR(c.min_crossing_time(), 36.363636, 1e-6);
  EXPECT_NEAR(c.shuttle_unit_time(), 21.818181, 1e-6);
}

TEST(Config, ParseOverridesAndRoundTrip) {
  MachineConfig c = parse_config("# slower AOD\naod_speed = 0.3\npolicy = type2  # inline\n\narray_rows=10\n"
                                 "x_basis_allowed = yes\ninitial_zone = storage\n");
  EXPECT_DOUBLE_EQ(c.aod_speed, 0.3);
  EXPECT_EQ(c.policy, Policy::Type2);
  EXPECT_EQ(c.array_rows, 10u);
  EXPECT_TRUE(c.x_basis_allowed);
  EXPECT_EQ(c.initial_zone, InitialZone::Storage);
  MachineConfig back = parse_config(dump_config(c));
  EXPECT_EQ(dump_config(back), dump_config(c));
  EXPECT_DOUBLE_EQ(back.f_2q, c.f_2q);
}

TEST(Config, Rejections) {
  for (const char* bad : {"aod_speed = 0", "f_1q = 1.5", "x_cz = 1", "bogus = 1", "aod_speed 3",
                          "array_rows = -2", "policy = type9", "pulse_1q = abc", "pair_offset = 0.5",
                          "physical_per_logical = 5000", "initial_zone = entangling"}) {
    EXPECT_THROW(parse_config(bad), ConfigError) << bad;
  }
  EXPECT_THROW(load_config_file("/nonexistent/zonec.cfg"), ConfigError);
}

TEST(Layout, CapacityBoundary) {
  MachineConfig c;
  EXPECT_NO_THROW(build_layout(c, 120));
  EXPECT_THROW(build_layout(c, 121), CapacityError);
  c.array_rows = 4;
  c.array_cols = 7;
  EXPECT_EQ(c.logical_capacity(), 2u);
  EXPECT_THROW(build_layout(c, 3), CapacityError);
}

TEST(Layout, HomesAreDistinctAndZoned) {
  MachineConfig c;
  AtomLayout l = build_layout(c, 120);
  for (Qubit q = 0; q < 120; ++q) {
    EXPECT_EQ(l.block_sites(q).size(), 14u);
    EXPECT_LE(l.storage_home(q).y, 0.0);
    EXPECT_GE(l.entangling_home(q).y, c.zone_gap);
    EXPECT_EQ(l.state(q).zone, Zone::Storage);
    EXPECT_EQ(l.state(q).trap, Trap::AOD);
    EXPECT_EQ(l.state(q).pos, l.storage_home(q));
    EXPECT_GT(l.readout_target(q).y, l.entangling_home(q).y);
    for (Qubit r = 0; r < q; ++r) {
      EXPECT_GE(distance(l.storage_home(q), l.storage_home(r)), kOccupancyEps);
      EXPECT_GE(distance(l.entangling_home(q), l.entangling_home(r)), c.pair_offset * 2);
    }
  }
  // Blocks tile the grid without overlap.
  std::vector<Site> all;
  for (Qubit q = 0; q < 120; ++q) {
    auto s = l.block_sites(q);
    all.insert(all.end(), s.begin(), s.end());
  }
  std::sort(all.begin(), all.end());
  EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
}

AodMove load_move(const AtomLayout& l, const std::vector<Qubit>& qs) {
  AodMove m;
  for (Qubit q : qs) m.legs.push_back({q, l.state(q).pos, l.entangling_home(q)});
  return m;
}

TEST(Layout, AnyLoadSubsetIsOneLegalMove) {
  MachineConfig c;
  std::mt19937_64 rng(31);
  for (std::size_t n : {2u, 7u, 40u, 120u}) {
    AtomLayout l = build_layout(c, n);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Qubit> qs;
      for (Qubit q = 0; q < n; ++q) {
        if (rng() % 2) qs.push_back(q);
      }
      MoveCheck chk = validate_move(l, load_move(l, qs));
      EXPECT_TRUE(chk.ok) << chk.reason << " n=" << n;
    }
  }
}

// Independent restatement of the AOD rules, used as a cross-check.
bool legal_by_hand(const AtomLayout& l, const AodMove& m) {
  for (std::size_t i = 0; i < m.legs.size(); ++i) {
    for (std::size_t j = 0; j < m.legs.size(); ++j) {
      if (i == j) continue;
      const auto &a = m.legs[i], &b = m.legs[j];
      if (a.from.x < b.from.x - 1e-9 && a.to.x > b.to.x + 1e-9) return false;
      if (a.from.y < b.from.y - 1e-9 && a.to.y > b.to.y + 1e-9) return false;
      if (distance(a.to, b.to) < kOccupancyEps) return false;
    }
  }
  for (const auto& leg : m.legs) {
    for (Qubit q = 0; q < l.num_qubits(); ++q) {
      bool moving = std::any_of(m.legs.begin(), m.legs.end(), [&](const auto& x) { return x.qubit == q; });
      if (!moving && l.state(q).zone != Zone::Readout && distance(l.state(q).pos, leg.to) < kOccupancyEps) {
        return false;
      }
    }
  }
  return true;
}

TEST(Move, ValidatorAgreesWithIndependentCheck) {
  MachineConfig c;
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> shift(-30.0, 30.0), jitter(-4.0, 4.0);
  std::size_t legal = 0, illegal = 0;
  for (int trial = 0; trial < 400; ++trial) {
    AtomLayout l = build_layout(c, 8);
    AodMove m;
    Point d{shift(rng), shift(rng)};
    for (Qubit q = 0; q < 8; ++q) {
      if (rng() % 3 == 0) continue;
      Point to = (rng() % 4 == 0) ? l.storage_home((q + 1) % 8)
                                  : Point{l.state(q).pos.x + d.x + jitter(rng), l.state(q).pos.y + d.y + jitter(rng)};
      m.legs.push_back({q, l.state(q).pos, to});
    }
    bool expect = legal_by_hand(l, m);
    EXPECT_EQ(validate_move(l, m).ok, expect);
    (expect ? legal : illegal)++;
  }
  EXPECT_GT(legal, 20u);
  EXPECT_GT(illegal, 20u);
}

TEST(Move, ExplicitViolations) {
  MachineConfig c;
  AtomLayout l = build_layout(c, 4);
  Point p0 = l.state(0).pos, p1 = l.state(1).pos;
  ASSERT_LT(p0.x, p1.x);
  AodMove cross{{{0, p0, {p1.x + 1, p0.y + 30}}, {1, p1, {p0.x - 1, p1.y + 30}}}};
  MoveCheck chk = validate_move(l, cross);
  EXPECT_FALSE(chk.ok);
  EXPECT_EQ(chk.reason, "column order inverted");

  AodMove onto{{{0, p0, l.state(2).pos}}};
  chk = validate_move(l, onto);
  EXPECT_FALSE(chk.ok);
  EXPECT_EQ(chk.reason, "destination occupied");
  EXPECT_EQ(chk.b, 2u);

  AodMove same{{{0, p0, {0, 50}}, {1, p1, {0.5, 50}}}};
  EXPECT_EQ(validate_move(l, same).reason, "destinations coincide");

  l.state(3).trap = Trap::SLM;
  EXPECT_THROW(validate_move(l, AodMove{{{3, l.state(3).pos, {0, 90}}}}), ConfigError);
  EXPECT_THROW(validate_move(l, AodMove{{{0, p0, {0, 90}}, {0, p0, {0, 95}}}}), ConfigError);
}

TEST(Move, DurationIsLongestLeg) {
  MachineConfig c;
  AodMove m{{{0, {0, 0}, {0, 20}}, {1, {5, 0}, {5, 11}}}};
  EXPECT_NEAR(move_duration(m, c), 20.0 / 0.55, 1e-12);
  EXPECT_EQ(move_duration(AodMove{}, c), 0.0);
  AtomLayout l = build_layout(c, 2);
  AodMove load = load_move(l, {0, 1});
  apply_move(l, load);
  EXPECT_EQ(l.state(0).pos, l.entangling_home(0));
  EXPECT_EQ(l.state(0).zone, Zone::Storage);
}

}  // namespace
}  // namespace zonec
