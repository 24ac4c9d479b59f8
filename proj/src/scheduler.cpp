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

#include "zonec/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <set>

#include "zonec/frontend.hpp"

namespace zonec {

namespace {

constexpr double kAdjacentTol = 1e-6;

struct PlannedLeg {
  Qubit q;
  Point to;
};

class Scheduler {
 public:
  Scheduler(const ZoneStepProgram& program, const AtomLayout& layout, const MachineConfig& config)
      : prog_(program), layout_(layout), cfg_(config), n_(program.num_qubits) {
    if (layout_.num_qubits() != n_) {
      throw RoutingError("schedule: layout holds " + std::to_string(layout_.num_qubits()) +
                         " qubits, program needs " + std::to_string(n_));
    }
    for (const ZoneStep& s : prog_.steps) {
      for (const Gate& g : s.gates) {
        if (g.kind == GateKind::SWAP || g.kind == GateKind::CX) {
          throw RoutingError("schedule: program still contains " + std::string(gate_name(g.kind)));
        }
      }
    }
    pending_ = prog_.remaps;
  }

  Timeline run() {
    tl_.num_qubits = n_;
    tl_.policy = cfg_.policy;
    tl_.t_in.assign(n_, 0.0);
    tl_.t_out.assign(n_, 0.0);
    tl_.measured.assign(n_, false);
    tl_.crosstalk_1q.assign(n_, 0);
    tl_.crosstalk_cz.assign(n_, 0);
    free_.assign(n_, 0.0);
    in_storage_.assign(n_, false);
    since_.assign(n_, 0.0);

    for (const Event& e : ec_prep_events(cfg_, n_)) {
      tl_.events.push_back(e);
      for (Qubit q : e.qubits) free_[q] = std::max(free_[q], e.end());
      aod_free_ = std::max(aod_free_, e.end());
    }
    if (cfg_.policy == Policy::Type3) {
      type3();
    } else {
      place_initial();
      if (cfg_.policy == Policy::Type1) {
        type1();
      } else {
        type2();
      }
    }
    finish();
    return std::move(tl_);
  }

 private:
  // ---- bookkeeping -------------------------------------------------------

  void leave_storage(Qubit q, double t) {
    if (!in_storage_[q]) return;
    tl_.t_in[q] += t - since_[q];
    in_storage_[q] = false;
  }

  void enter_storage(Qubit q, double t) {
    in_storage_[q] = true;
    since_[q] = t;
  }

  void finish() {
    double makespan = 0.0;
    for (const Event& e : tl_.events) makespan = std::max(makespan, e.end());
    tl_.makespan = makespan;
    for (Qubit q = 0; q < n_; ++q) {
      leave_storage(q, makespan);
      tl_.t_out[q] = makespan - tl_.t_in[q];
    }
  }

  Event& push(EventKind kind, std::vector<Qubit> qubits, double start, double duration,
              int batch = -1) {
    Event e;
    e.kind = kind;
    e.qubits = std::move(qubits);
    e.start = start;
    e.duration = duration;
    e.batch = batch;
    tl_.events.push_back(std::move(e));
    return tl_.events.back();
  }

  void place_initial() {
    std::vector<std::optional<Zone>> first(n_);
    for (const ZoneStep& s : prog_.steps) {
      for (const Gate& g : s.gates) {
        if (g.kind == GateKind::MEASURE) continue;
        for (Qubit q : g.operands()) {
          if (!first[q]) first[q] = g.zone();
        }
      }
    }
    const double t0 = n_ ? free_[0] : 0.0;
    for (Qubit q = 0; q < n_; ++q) {
      bool entangling = cfg_.initial_zone == InitialZone::Auto && first[q] &&
                        *first[q] == Zone::Entangling;
      if (entangling) {
        layout_.place(q, Zone::Entangling, layout_.entangling_home(q));
      } else {
        layout_.place(q, Zone::Storage, layout_.storage_home(q));
        enter_storage(q, t0);
      }
      layout_.state(q).trap = Trap::AOD;
    }
  }

  // ---- primitives --------------------------------------------------------

  void transfer(Qubit q, Trap to) {
    QubitState& s = layout_.state(q);
    if (s.trap == to) return;
    push(EventKind::TRAP_TRANSFER, {q}, free_[q], cfg_.trap_transfer_time);
    free_[q] += cfg_.trap_transfer_time;
    s.trap = to;
  }

  double pulse(const Gate& g) {
    if (g.kind == GateKind::RZ) return 0.0;  // virtual frame update
    double start = 0.0;
    for (Qubit q : g.operands()) start = std::max(start, free_[q]);
    double dur = g.arity() == 2 ? cfg_.pulse_2q : cfg_.pulse_1q;
    Event& e = push(g.arity() == 2 ? EventKind::PULSE_2Q : EventKind::PULSE_1Q,
                    {g.operands().begin(), g.operands().end()}, start, dur);
    e.gate = g.kind;
    for (Qubit q : g.operands()) free_[q] = start + dur;
    return start + dur;
  }

  AodMove to_move(const std::vector<PlannedLeg>& legs) const {
    AodMove m;
    for (const PlannedLeg& l : legs) m.legs.push_back({l.q, layout_.state(l.q).pos, l.to});
    return m;
  }

  // Splits legs into order-compatible AOD moves run back to back.
  void run_batch(EventKind kind, const std::vector<PlannedLeg>& legs, Zone dest, int batch) {
    std::vector<std::vector<PlannedLeg>> groups;
    for (const PlannedLeg& leg : legs) {
      if (distance(layout_.state(leg.q).pos, leg.to) == 0.0 && layout_.state(leg.q).zone == dest) {
        continue;
      }
      bool placed = false;
      for (auto& g : groups) {
        g.push_back(leg);
        if (validate_move(layout_, to_move(g))) {
          placed = true;
          break;
        }
        g.pop_back();
      }
      if (!placed) groups.push_back({leg});
    }
    for (const auto& g : groups) {
      AodMove mv = to_move(g);
      MoveCheck check = validate_move(layout_, mv);
      if (!check) {
        throw RoutingError("schedule: " + std::string(event_name(kind)) + " of qubit " +
                           std::to_string(check.a) + " blocked (" + check.reason + ", qubit " +
                           std::to_string(check.b) + ")");
      }
      double start = aod_free_;
      std::vector<Qubit> qs;
      for (const PlannedLeg& l : g) {
        start = std::max(start, free_[l.q]);
        qs.push_back(l.q);
      }
      double dur = move_duration(mv, cfg_);
      push(kind, qs, start, dur, batch);
      apply_move(layout_, mv);
      for (Qubit q : qs) {
        if (layout_.state(q).zone == Zone::Storage && dest != Zone::Storage) leave_storage(q, start);
        layout_.state(q).zone = dest;
        free_[q] = start + dur;
        if (dest == Zone::Storage) enter_storage(q, start + dur);
      }
      aod_free_ = start + dur;
    }
  }

  bool near_planned(Point p, const std::vector<PlannedLeg>& planned) const {
    return std::any_of(planned.begin(), planned.end(),
                       [&](const PlannedLeg& l) { return distance(l.to, p) < kOccupancyEps; });
  }

  // Free spot at pair distance from `partner`, preferring the mover's side.
  std::optional<Point> try_adjacent_spot(Point partner, Point mover_from, Qubit m, Qubit p,
                                         const std::vector<PlannedLeg>& planned) const {
    const double o = cfg_.pair_offset;
    double dx = mover_from.x - partner.x, dy = mover_from.y - partner.y;
    double sx = dx < 0 ? -1.0 : 1.0, sy = dy < 0 ? -1.0 : 1.0;
    std::vector<Point> candidates;
    if (std::abs(dx) > kAdjacentTol || std::abs(dy) <= kAdjacentTol) {
      candidates = {{partner.x + sx * o, partner.y}, {partner.x, partner.y + sy * o},
                    {partner.x - sx * o, partner.y}, {partner.x, partner.y - sy * o}};
    } else {
      candidates = {{partner.x, partner.y + sy * o}, {partner.x + o, partner.y},
                    {partner.x - o, partner.y}, {partner.x, partner.y - sy * o}};
    }
    // Crowded partner: the rest of the ring, 30 degrees apart.
    for (int k = 1; k < 12; ++k) {
      if (k % 3 == 0) continue;
      double th = k * std::acos(-1.0) / 6.0;
      candidates.push_back({partner.x + o * std::cos(th), partner.y + o * std::sin(th)});
    }
    const Qubit ignore[2] = {m, p};
    for (Point c : candidates) {
      if (!layout_.occupied(c, kOccupancyEps, ignore) && !near_planned(c, planned)) return c;
    }
    return std::nullopt;
  }

  // Radius inside which a third atom would see a pair's Rydberg pulse.
  double spectator_radius() const { return 2.0 * cfg_.pair_offset + kOccupancyEps; }

  // Idle atoms (not in `busy`, not already planned) within `radius` of `at`.
  std::vector<Qubit> idle_near(Point at, double radius, Qubit m, Qubit p, const std::vector<PlannedLeg>& planned,
                               const std::set<Qubit>& busy) const {
    std::vector<Qubit> out;
    for (Qubit q = 0; q < n_; ++q) {
      if (q == m || q == p || busy.count(q) || layout_.state(q).zone != Zone::Entangling) continue;
      bool listed = std::any_of(planned.begin(), planned.end(), [&](const PlannedLeg& l) { return l.q == q; });
      if (!listed && distance(layout_.state(q).pos, at) < radius) out.push_back(q);
    }
    return out;
  }

  // Moves an idle atom to the nearest vacant spot around `around`.
  void evict(Qubit q, Point around, const std::vector<PlannedLeg>& planned) {
    Point to = free_near(around, q, planned);
    transfer(q, Trap::AOD);
    run_batch(EventKind::SHUTTLE, {{q, to}}, Zone::Entangling, -1);
  }

  // As try_adjacent_spot, after clearing idle spectators away from the
  // partner so the pulse only reaches the pair.
  Point adjacent_spot(Point partner, Point mover_from, Qubit m, Qubit p,
                      const std::vector<PlannedLeg>& planned, const std::set<Qubit>& busy) {
    for (Qubit q : idle_near(partner, spectator_radius(), m, p, planned, busy)) evict(q, partner, planned);
    if (auto spot = try_adjacent_spot(partner, mover_from, m, p, planned)) return *spot;
    throw RoutingError("schedule: no free site next to qubit " + std::to_string(p) + " for qubit " +
                       std::to_string(m));
  }

  // `target` itself when vacant, else the nearest vacant point on rings
  // of growing radius around it.
  Point free_near(Point target, Qubit self, const std::vector<PlannedLeg>& planned) const {
    const Qubit ignore[1] = {self};
    const double clear = spectator_radius();
    auto vacant = [&](Point c) {
      return !layout_.occupied(c, clear, ignore) &&
             std::none_of(planned.begin(), planned.end(), [&](const PlannedLeg& l) {
               return l.q != self && distance(l.to, c) < clear;
             });
    };
    if (vacant(target)) return target;
    for (int k = 1; k <= 8; ++k) {
      const double r = k * cfg_.pitch_entangling / 2.0;
      for (int j = 0; j < 8 * k; ++j) {
        double th = j * std::acos(-1.0) / (4.0 * k);
        Point c{target.x + r * std::cos(th), target.y + r * std::sin(th)};
        if (vacant(c)) return c;
      }
    }
    throw RoutingError("schedule: no vacant site near the entangling home of qubit " + std::to_string(self));
  }

  // The qubit with more work left rides the AOD; otherwise avoid a
  // transfer if the traps already fit.
  static Qubit choose_mover(Qubit a, Qubit b, const std::vector<std::size_t>& rem) {
    if (rem[b] > rem[a]) return b;
    return a;
  }

  Qubit pick_mover(Qubit a, Qubit b, const std::vector<std::size_t>& rem) const {
    if (rem[a] != rem[b]) return choose_mover(a, b, rem);
    if (layout_.state(b).trap == Trap::AOD && layout_.state(a).trap == Trap::SLM) return b;
    return a;
  }

  bool adjacent(Qubit a, Qubit b) const {
    return distance(layout_.state(a).pos, layout_.state(b).pos) <= cfg_.pair_offset + kAdjacentTol;
  }

  // ---- remaps ------------------------------------------------------------

  void apply_remaps(std::size_t src, std::span<const Qubit> qubits) {
    for (std::size_t i = 0; i < pending_.size();) {
      const RemapDirective& d = pending_[i];
      bool hit = d.before_gate <= src && (std::find(qubits.begin(), qubits.end(), d.a) != qubits.end() ||
                                          std::find(qubits.begin(), qubits.end(), d.b) != qubits.end());
      if (!hit) {
        ++i;
        continue;
      }
      RemapDirective dir = d;
      pending_.erase(pending_.begin() + static_cast<std::ptrdiff_t>(i));
      exchange(dir.a, dir.b);
    }
  }

  void exchange(Qubit a, Qubit b) {
    if (a == b) return;
    if (layout_.state(a).zone != Zone::Entangling || layout_.state(b).zone != Zone::Entangling) {
      return;  // relabeling only
    }
    SwapPlan plan = plan_swap_in_entangling(layout_, a, b);
    if (plan.slm_handoff) {
      transfer(a, layout_.state(a).trap == Trap::AOD ? Trap::SLM : Trap::AOD);
      transfer(b, layout_.state(b).trap == Trap::AOD ? Trap::SLM : Trap::AOD);
      Point pa = layout_.state(a).pos, pb = layout_.state(b).pos;
      layout_.state(a).pos = pb;
      layout_.state(b).pos = pa;
      return;
    }
    transfer(a, Trap::AOD);
    transfer(b, Trap::AOD);
    for (const AodMove& leg : plan.legs) {
      std::vector<PlannedLeg> pl;
      for (const auto& l : leg.legs) pl.push_back({l.qubit, l.to});
      run_batch(EventKind::SHUTTLE, pl, Zone::Entangling, -1);
    }
  }

  void remaps_for(const ZoneStep& step) {
    if (pending_.empty()) return;
    for (std::size_t k = 0; k < step.gates.size(); ++k) apply_remaps(step.source[k], step.gates[k].operands());
  }

  // ---- two-qubit execution --------------------------------------------------

  // Shuttles one mover per gate next to its partner, then pulses. Gates in
  // `formed` were paired during the preceding load.
  void run_2q_layer(std::vector<const Gate*> layer, const std::set<const Gate*>& formed,
                    std::vector<std::size_t>& rem) {
    std::sort(layer.begin(), layer.end(), [](const Gate* x, const Gate* y) {
      return std::pair(x->qubits[1], x->qubits[0]) < std::pair(y->qubits[1], y->qubits[0]);
    });
    std::set<Qubit> busy;
    for (const Gate* g : layer) busy.insert(g->operands().begin(), g->operands().end());
    std::vector<PlannedLeg> legs;
    for (const Gate* g : layer) {
      Qubit a = g->qubits[0], b = g->qubits[1];
      if (formed.count(g) || adjacent(a, b)) continue;
      Qubit m = pick_mover(a, b, rem);
      Qubit p = m == a ? b : a;
      transfer(p, Trap::SLM);  // runs while the mover travels
      transfer(m, Trap::AOD);
      Point dest = adjacent_spot(layout_.state(p).pos, layout_.state(m).pos, m, p, legs, busy);
      legs.push_back({m, dest});
    }
    run_batch(EventKind::SHUTTLE, legs, Zone::Entangling, -1);
    for (const Gate* g : layer) {
      pulse(*g);
      for (Qubit q : g->operands()) --rem[q];
    }
  }

  // ---- Type 1 ---------------------------------------------------------------

  void type1() {
    for (const ZoneStep& step : prog_.steps) {
      remaps_for(step);
      switch (step.zone) {
        case Zone::Entangling: entangling_step(step); break;
        case Zone::Storage: storage_step(step); break;
        case Zone::Readout: readout_step(step); break;
      }
    }
  }

  // Entangling-zone gates are diagonal and commute, so a step runs as
  // rounds of disjoint pairs picked nearest first. `where` gives the
  // position each qubit is expected at.
  template <class Where>
  static std::vector<const Gate*> next_round(std::vector<const Gate*>& pending, Where where) {
    std::vector<std::pair<double, std::size_t>> order;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      const Gate& g = *pending[i];
      order.emplace_back(distance(where(g.qubits[0]), where(g.qubits[1])), i);
    }
    std::sort(order.begin(), order.end());
    std::set<Qubit> used;
    std::vector<bool> take(pending.size(), false);
    for (const auto& [d, i] : order) {
      const Gate& g = *pending[i];
      if (used.count(g.qubits[0]) || used.count(g.qubits[1])) continue;
      used.insert(g.qubits[0]);
      used.insert(g.qubits[1]);
      take[i] = true;
    }
    std::vector<const Gate*> round, rest;
    for (std::size_t i = 0; i < pending.size(); ++i) (take[i] ? round : rest).push_back(pending[i]);
    pending = std::move(rest);
    return round;
  }

  Point current(Qubit q) const { return layout_.state(q).pos; }

  void run_rounds(std::vector<const Gate*> pending, const std::set<const Gate*>& formed,
                  std::vector<std::size_t>& rem) {
    while (!pending.empty()) run_2q_layer(next_round(pending, [&](Qubit q) { return current(q); }), formed, rem);
  }

  void entangling_step(const ZoneStep& step) {
    std::vector<std::size_t> rem(n_, 0);
    for (const Gate& g : step.gates) {
      for (Qubit q : g.operands()) ++rem[q];
    }

    std::set<Qubit> movers;
    for (const Gate& g : step.gates) {
      for (Qubit q : g.operands()) {
        if (layout_.state(q).zone == Zone::Storage) movers.insert(q);
      }
    }
    std::vector<const Gate*> pending, first;
    for (const Gate& g : step.gates) pending.push_back(&g);
    std::set<const Gate*> formed;
    if (!movers.empty()) {
      std::map<Qubit, Point> dest;
      std::vector<PlannedLeg> planned;
      std::set<Qubit> busy = movers;
      first = next_round(pending, [&](Qubit q) {
        return movers.count(q) ? layout_.entangling_home(q) : current(q);
      });
      for (const Gate* g : first) busy.insert(g->operands().begin(), g->operands().end());
      std::sort(first.begin(), first.end(), [](const Gate* x, const Gate* y) {
        return std::pair(x->qubits[1], x->qubits[0]) < std::pair(y->qubits[1], y->qubits[0]);
      });
      for (const Gate* g : first) {
        Qubit a = g->qubits[0], b = g->qubits[1];
        bool la = movers.count(a), lb = movers.count(b);
        if (!la && !lb) continue;
        Qubit m, p;
        Point p_at;
        if (la && lb) {
          m = choose_mover(a, b, rem);
          p = m == a ? b : a;
          p_at = free_near(layout_.entangling_home(p), p, planned);
          dest[p] = p_at;
          planned.push_back({p, p_at});
        } else {
          m = la ? a : b;
          p = la ? b : a;
          p_at = layout_.state(p).pos;
          transfer(p, Trap::SLM);
        }
        Point spot = adjacent_spot(p_at, layout_.state(m).pos, m, p, planned, busy);
        dest[m] = spot;
        planned.push_back({m, spot});
        formed.insert(g);
      }
      std::vector<PlannedLeg> legs;
      for (Qubit q : movers) {
        transfer(q, Trap::AOD);
        auto it = dest.find(q);
        Point to = it != dest.end() ? it->second : free_near(layout_.entangling_home(q), q, planned);
        if (it == dest.end()) planned.push_back({q, to});
        legs.push_back({q, to});
      }
      run_batch(EventKind::LOAD, legs, Zone::Entangling, next_batch_++);
    }

    if (!first.empty()) run_2q_layer(first, formed, rem);
    run_rounds(std::move(pending), formed, rem);
  }

  void storage_step(const ZoneStep& step) {
    std::set<Qubit> movers;
    for (const Gate& g : step.gates) {
      if (g.kind == GateKind::RZ) continue;
      if (layout_.state(g.qubits[0]).zone != Zone::Storage) movers.insert(g.qubits[0]);
    }
    if (!movers.empty()) {
      std::vector<PlannedLeg> legs;
      for (Qubit q : movers) {
        transfer(q, Trap::AOD);
        legs.push_back({q, layout_.storage_home(q)});
      }
      run_batch(EventKind::STORE, legs, Zone::Storage, next_batch_++);
    }
    for (const Gate& g : step.gates) pulse(g);
  }

  void readout_step(const ZoneStep& step) {
    std::vector<Qubit> measured;
    for (const Gate& g : step.gates) {
      if (g.kind != GateKind::MEASURE) continue;
      measured.push_back(g.qubits[0]);
      tl_.measured[g.qubits[0]] = true;
    }
    if (measured.empty()) return;
    if (cfg_.policy != Policy::Type3) {
      // Straight across to the strip, nudged apart in x where atoms share a
      // column, so the x order of the batch is kept.
      std::vector<Qubit> order = measured;
      std::sort(order.begin(), order.end(), [&](Qubit a, Qubit b) {
        const Point pa = layout_.state(a).pos, pb = layout_.state(b).pos;
        return std::pair(pa.x, pa.y) < std::pair(pb.x, pb.y);
      });
      std::vector<PlannedLeg> legs;
      double last_x = -std::numeric_limits<double>::infinity();
      for (Qubit q : order) {
        transfer(q, Trap::AOD);
        double x = std::max(layout_.state(q).pos.x, last_x + cfg_.pair_offset);
        legs.push_back({q, {x, layout_.readout_target(q).y}});
        last_x = x;
      }
      run_batch(EventKind::READOUT_MOVE, legs, Zone::Readout, next_batch_++);
    }
    double start = 0.0;
    for (Qubit q : measured) start = std::max(start, free_[q]);
    push(EventKind::READOUT_IMAGE, measured, start, cfg_.readout_time);
    for (Qubit q : measured) free_[q] = start + cfg_.readout_time;
  }

  // ---- Type 2 ---------------------------------------------------------------

  void type2() {
    std::vector<std::size_t> rem(n_, 0);
    std::set<Qubit> used;
    for (const ZoneStep& s : prog_.steps) {
      if (s.zone == Zone::Readout) continue;
      for (const Gate& g : s.gates) {
        for (Qubit q : g.operands()) {
          ++rem[q];
          used.insert(q);
        }
      }
    }
    std::vector<PlannedLeg> legs;
    for (Qubit q : used) {
      if (layout_.state(q).zone == Zone::Storage) legs.push_back({q, layout_.entangling_home(q)});
    }
    if (!legs.empty()) run_batch(EventKind::LOAD, legs, Zone::Entangling, next_batch_++);

    for (const ZoneStep& step : prog_.steps) {
      remaps_for(step);
      if (step.zone == Zone::Readout) {
        readout_step(step);
        continue;
      }
      if (step.zone == Zone::Entangling) {
        std::vector<const Gate*> pending;
        for (const Gate& g : step.gates) pending.push_back(&g);
        run_rounds(std::move(pending), {}, rem);
        continue;
      }
      for (const Gate& g : step.gates) {
        if (g.kind != GateKind::RZ) isolate(g.qubits[0]);
        pulse(g);
        --rem[g.qubits[0]];
      }
    }
  }

  std::vector<Qubit> crowding(Qubit q, Point at) const {
    std::vector<Qubit> out;
    for (Qubit o = 0; o < n_; ++o) {
      if (o == q || layout_.state(o).zone == Zone::Readout) continue;
      if (distance(layout_.state(o).pos, at) < cfg_.isolation_radius - kAdjacentTol) out.push_back(o);
    }
    return out;
  }

  // Candidate parking spots for an atom at `origin`, nudged away from `anchor`.
  std::vector<Point> escape_spots(Qubit atom, Point origin, Point anchor) const {
    const double r = cfg_.isolation_radius;
    std::vector<Point> out;
    double ax = origin.x - anchor.x, ay = origin.y - anchor.y, len = std::hypot(ax, ay);
    if (len > kAdjacentTol) out.push_back({origin.x + ax / len * r, origin.y + ay / len * r});
    for (double scale : {1.0, 1.5, 2.0, 3.0, 4.0}) {
      for (int k = 0; k < 16; ++k) {
        double th = k * std::acos(-1.0) / 8.0;
        out.push_back({origin.x + scale * r * std::cos(th), origin.y + scale * r * std::sin(th)});
      }
    }
    out.push_back(layout_.entangling_home(atom));
    return out;
  }

  // Clears the isolation radius around `q` before a single-qubit pulse. A
  // lone AOD neighbour of an SLM-held target moves away; otherwise the
  // target does.
  void isolate(Qubit q) {
    std::vector<Qubit> close = crowding(q, layout_.state(q).pos);
    if (close.empty()) return;
    const Point at = layout_.state(q).pos;
    if (layout_.state(q).trap != Trap::AOD && close.size() == 1 &&
        layout_.state(close[0]).trap == Trap::AOD) {
      Qubit nb = close[0];
      const Point saved = layout_.state(nb).pos;
      for (Point c : escape_spots(nb, saved, at)) {
        layout_.state(nb).pos = c;
        bool ok = crowding(q, at).empty() && !layout_.occupied(c, kOccupancyEps, std::span<const Qubit>(&nb, 1));
        layout_.state(nb).pos = saved;
        if (!ok) continue;
        run_batch(EventKind::SHUTTLE, {{nb, c}}, Zone::Entangling, -1);
        return;
      }
    }
    for (Point c : escape_spots(q, at, layout_.state(close[0]).pos)) {
      if (!crowding(q, c).empty()) continue;
      transfer(q, Trap::AOD);
      run_batch(EventKind::SHUTTLE, {{q, c}}, Zone::Entangling, -1);
      return;
    }
    throw RoutingError("schedule: cannot isolate qubit " + std::to_string(q));
  }

  // ---- Type 3 ---------------------------------------------------------------

  void type3() {
    std::map<std::pair<int, double>, std::set<Qubit>> layers;
    for (const ZoneStep& step : prog_.steps) {
      if (step.zone == Zone::Readout) {
        readout_step(step);
        continue;
      }
      for (const Gate& g : step.gates) {
        if (g.kind == GateKind::RZ) continue;
        double end = pulse(g);
        const Event& e = tl_.events.back();
        (void)end;
        auto& targets = layers[{g.arity() == 2 ? 2 : 1, e.start}];
        for (Qubit q : g.operands()) targets.insert(q);
      }
    }
    for (const auto& [key, targets] : layers) {
      auto& exposure = key.first == 2 ? tl_.crosstalk_cz : tl_.crosstalk_1q;
      for (Qubit q = 0; q < n_; ++q) {
        if (!targets.count(q)) ++exposure[q];
      }
    }
  }

  const ZoneStepProgram& prog_;
  AtomLayout layout_;
  MachineConfig cfg_;
  std::size_t n_;
  Timeline tl_;
  std::vector<double> free_;
  std::vector<bool> in_storage_;
  std::vector<double> since_;
  std::vector<RemapDirective> pending_;
  double aod_free_ = 0.0;
  int next_batch_ = 0;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string_view event_name(EventKind kind) {
  switch (kind) {
    case EventKind::LOAD: return "LOAD";
    case EventKind::STORE: return "STORE";
    case EventKind::TRAP_TRANSFER: return "TRAP_TRANSFER";
    case EventKind::SHUTTLE: return "SHUTTLE";
    case EventKind::PULSE_1Q: return "PULSE_1Q";
    case EventKind::PULSE_2Q: return "PULSE_2Q";
    case EventKind::READOUT_MOVE: return "READOUT_MOVE";
    case EventKind::READOUT_IMAGE: return "READOUT_IMAGE";
    case EventKind::EC_PREP: return "EC_PREP";
  }
  return "?";
}

Timeline schedule(const ZoneStepProgram& program, const AtomLayout& layout,
                  const MachineConfig& config) {
  config.validate();
  // Entangling steps are reordered as commuting sets, so only the diagonal
  // two-qubit kinds may reach the scheduler.
  for (const ZoneStep& step : program.steps) {
    for (const Gate& g : step.gates) {
      if (g.kind == GateKind::CX || g.kind == GateKind::SWAP) {
        throw ConfigError("schedule: " + std::string(gate_name(g.kind)) + " must be lowered before scheduling");
      }
    }
  }
  return Scheduler(program, layout, config).run();
}

LdStCount count_ld_st(const Timeline& timeline) {
  std::set<int> loads, stores;
  for (const Event& e : timeline.events) {
    if (e.kind == EventKind::LOAD) loads.insert(e.batch);
    if (e.kind == EventKind::STORE) stores.insert(e.batch);
  }
  return {loads.size(), stores.size()};
}

SwapPlan plan_swap_in_entangling(const AtomLayout& layout, Qubit a, Qubit b) {
  SwapPlan plan;
  if (a == b) return plan;
  if (layout.state(a).zone != Zone::Entangling || layout.state(b).zone != Zone::Entangling) {
    throw ConfigError("plan_swap_in_entangling: both qubits must be in the entangling zone");
  }
  const Point pa = layout.state(a).pos, pb = layout.state(b).pos;
  const double h = layout.config().pitch_entangling / 2.0;
  const Point waypoints[] = {{pa.x, pa.y + h}, {pa.x, pa.y - h}, {pa.x + h, pa.y}, {pa.x - h, pa.y}};
  for (Point w : waypoints) {
    if (layout.occupied(w, kOccupancyEps)) continue;
    AtomLayout scratch = layout;
    scratch.state(a).trap = Trap::AOD;
    scratch.state(b).trap = Trap::AOD;
    std::vector<AodMove> legs = {AodMove{{{a, pa, w}}}, AodMove{{{b, pb, pa}}}, AodMove{{{a, w, pb}}}};
    bool ok = true;
    for (const AodMove& leg : legs) {
      if (!validate_move(scratch, leg)) {
        ok = false;
        break;
      }
      apply_move(scratch, leg);
    }
    if (ok) {
      plan.legs = std::move(legs);
      return plan;
    }
  }
  plan.slm_handoff = true;
  return plan;
}

double ec_prep_duration(const MachineConfig& config) {
  GateCounts c = count_gates(gen_steane_prep());
  double d = static_cast<double>(c.one_qubit) * config.pulse_1q +
             static_cast<double>(c.two_qubit) * config.pulse_2q + config.pulse_2q;
  if (config.policy != Policy::Type3) d += config.min_crossing_time();
  return d;
}

std::vector<Event> ec_prep_events(const MachineConfig& config, std::size_t n_logical) {
  if (n_logical == 0) return {};
  Event e;
  e.kind = EventKind::EC_PREP;
  for (std::size_t q = 0; q < n_logical; ++q) e.qubits.push_back(static_cast<Qubit>(q));
  e.start = 0.0;
  e.duration = ec_prep_duration(config);
  return {e};
}

std::string export_timeline(const Timeline& timeline) {
  std::string out;
  for (const Event& e : timeline.events) {
    out += event_name(e.kind);
    out += '\t';
    for (std::size_t i = 0; i < e.qubits.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(e.qubits[i]);
    }
    out += '\t' + fmt(e.start) + '\t' + fmt(e.duration) + '\t' + std::to_string(e.batch) + '\n';
  }
  return out;
}

void check_no_overlap(const Timeline& timeline) {
  std::vector<std::vector<std::pair<double, double>>> spans(timeline.num_qubits);
  for (const Event& e : timeline.events) {
    for (Qubit q : e.qubits) spans.at(q).push_back({e.start, e.end()});
  }
  for (Qubit q = 0; q < spans.size(); ++q) {
    auto& s = spans[q];
    std::sort(s.begin(), s.end());
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i].first < s[i - 1].second - 1e-9) {
        throw RoutingError("timeline: overlapping events on qubit " + std::to_string(q));
      }
    }
  }
}

}  // namespace zonec
