#include "rsmem/chain.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>

#include "rsmem/errors.hpp"

namespace rsmem {

namespace {

constexpr double kHoursPerDay = 24.0;

// Eligible-symbol multiplicities and state deltas for one duplex event
// class. `doubled_physical` marks classes where the two symbols of the pair
// are interchangeable and both eligible, so the per-symbol rate carries a
// factor 2 that the conventional single-letter rates drop.
struct DuplexClass {
  TransitionKind kind;
  int dx, dy, db, de1, de2, dec;
  bool doubled_physical;
};

constexpr DuplexClass kDuplexClasses[] = {
    {TransitionKind::erasure_a, +1, -1, 0, 0, 0, 0, false},
    {TransitionKind::erasure_b, +1, 0, -1, 0, 0, 0, false},
    {TransitionKind::erasure_c, 0, +1, 0, 0, 0, 0, true},
    {TransitionKind::erasure_d, 0, +1, 0, -1, 0, 0, false},
    {TransitionKind::erasure_e, 0, +1, 0, 0, -1, 0, false},
    {TransitionKind::erasure_f, 0, 0, +1, 0, 0, -1, true},
    {TransitionKind::erasure_g, 0, 0, +1, -1, 0, 0, false},
    {TransitionKind::erasure_h, 0, 0, +1, 0, -1, 0, false},
    {TransitionKind::random_i, 0, -1, +1, 0, 0, 0, false},
    {TransitionKind::random_l, 0, 0, 0, +1, 0, 0, false},
    {TransitionKind::random_m, 0, 0, 0, 0, +1, 0, false},
    {TransitionKind::random_n, 0, 0, 0, -1, 0, +1, false},
    {TransitionKind::random_o, 0, 0, 0, 0, -1, +1, false},
};

int class_multiplicity(const DuplexClass& cls, const DuplexState& d, int free_pairs) {
  switch (cls.kind) {
    case TransitionKind::erasure_a:
      return d.single_erased;
    case TransitionKind::erasure_b:
      return d.erased_error;
    case TransitionKind::erasure_c:
      return free_pairs;
    case TransitionKind::erasure_d:
      return d.errors_w1;
    case TransitionKind::erasure_e:
      return d.errors_w2;
    case TransitionKind::erasure_f:
      return d.both_error;
    case TransitionKind::erasure_g:
      return d.errors_w1;
    case TransitionKind::erasure_h:
      return d.errors_w2;
    case TransitionKind::random_i:
      return d.single_erased;
    case TransitionKind::random_l:
    case TransitionKind::random_m:
      return free_pairs;
    case TransitionKind::random_n:
      return d.errors_w1;
    case TransitionKind::random_o:
      return d.errors_w2;
    default:
      return 0;
  }
}

bool is_erasure_class(TransitionKind kind) {
  switch (kind) {
    case TransitionKind::erasure_a:
    case TransitionKind::erasure_b:
    case TransitionKind::erasure_c:
    case TransitionKind::erasure_d:
    case TransitionKind::erasure_e:
    case TransitionKind::erasure_f:
    case TransitionKind::erasure_g:
    case TransitionKind::erasure_h:
      return true;
    default:
      return false;
  }
}

}  // namespace

const char* to_string(TransitionKind kind) {
  switch (kind) {
    case TransitionKind::erasure_a: return "erasure-A";
    case TransitionKind::erasure_b: return "erasure-B";
    case TransitionKind::erasure_c: return "erasure-C";
    case TransitionKind::erasure_d: return "erasure-D";
    case TransitionKind::erasure_e: return "erasure-E";
    case TransitionKind::erasure_f: return "erasure-F";
    case TransitionKind::erasure_g: return "erasure-G";
    case TransitionKind::erasure_h: return "erasure-H";
    case TransitionKind::random_i: return "random-I";
    case TransitionKind::random_l: return "random-L";
    case TransitionKind::random_m: return "random-M";
    case TransitionKind::random_n: return "random-N";
    case TransitionKind::random_o: return "random-O";
    case TransitionKind::simplex_erasure: return "simplex-erasure";
    case TransitionKind::simplex_error: return "simplex-error";
    case TransitionKind::scrub: return "scrub";
    case TransitionKind::to_fail: return "to-fail";
  }
  return "?";
}

std::vector<SimplexState> enumerate_simplex(const CodeParams& c) {
  std::vector<SimplexState> states;
  for (int er = 0; er <= c.n; ++er) {
    for (int re = 0; er + re <= c.n; ++re) {
      const SimplexState s{er, re};
      if (!simplex_is_fail(s, c)) states.push_back(s);
    }
  }
  return states;
}

std::vector<DuplexState> enumerate_duplex(const CodeParams& c, std::size_t max_states) {
  std::vector<DuplexState> states;
  const int n = c.n;
  for (int x = 0; x <= n; ++x) {
    if (x > c.parity()) break;  // both-word erasures alone already unreadable
    for (int y = 0; x + y <= n; ++y) {
      for (int b = 0; x + y + b <= n; ++b) {
        if (x + 2 * b > c.parity()) break;
        for (int e1 = 0; x + y + b + e1 <= n; ++e1) {
          for (int e2 = 0; x + y + b + e1 + e2 <= n; ++e2) {
            for (int ec = 0; x + y + b + e1 + e2 + ec <= n; ++ec) {
              const DuplexState d{x, y, b, e1, e2, ec};
              if (duplex_is_fail(d, c)) break;  // ec only grows the load
              states.push_back(d);
              if (states.size() > max_states) {
                throw ModelTooLarge("duplex state space exceeds cap of " +
                                    std::to_string(max_states));
              }
            }
          }
        }
      }
    }
  }
  return states;
}

std::vector<SimplexEdge> simplex_transitions(const SimplexState& s, const CodeParams& c,
                                             const FaultRates& r) {
  const double erasure_rate = r.lambda_e_symbol_per_day / kHoursPerDay;
  const double seu_rate = static_cast<double>(c.m) * r.lambda_bit_per_day / kHoursPerDay;
  const int clean = c.n - s.erasures - s.random_errors;

  std::vector<SimplexEdge> edges;
  double fail_rate = 0.0;
  auto emit = [&](SimplexState target, double rate, TransitionKind kind) {
    if (rate <= 0.0) return;
    if (simplex_is_fail(target, c)) {
      fail_rate += rate;
    } else {
      edges.push_back({target, rate, kind});
    }
  };

  emit({s.erasures + 1, s.random_errors}, erasure_rate * clean, TransitionKind::simplex_erasure);
  emit({s.erasures + 1, s.random_errors - 1}, erasure_rate * s.random_errors,
       TransitionKind::simplex_erasure);
  emit({s.erasures, s.random_errors + 1}, seu_rate * clean, TransitionKind::simplex_error);

  if (fail_rate > 0.0) edges.push_back({std::nullopt, fail_rate, TransitionKind::to_fail});
  return edges;
}

std::vector<DuplexEdge> duplex_event_transitions(const DuplexState& d, const CodeParams& c,
                                                 const FaultRates& r, RateMode mode) {
  const double erasure_rate = r.lambda_e_symbol_per_day / kHoursPerDay;
  const double seu_rate = static_cast<double>(c.m) * r.lambda_bit_per_day / kHoursPerDay;
  const int free_pairs = c.n - d.affected();

  std::vector<DuplexEdge> edges;
  double fail_rate = 0.0;
  for (const DuplexClass& cls : kDuplexClasses) {
    const int multiplicity = class_multiplicity(cls, d, free_pairs);
    if (multiplicity == 0) continue;
    double rate = (is_erasure_class(cls.kind) ? erasure_rate : seu_rate) * multiplicity;
    if (cls.doubled_physical && mode == RateMode::physical) rate *= 2.0;
    if (rate <= 0.0) continue;

    const DuplexState target{d.both_erased + cls.dx,  d.single_erased + cls.dy,
                             d.erased_error + cls.db, d.errors_w1 + cls.de1,
                             d.errors_w2 + cls.de2,   d.both_error + cls.dec};
    if (duplex_is_fail(target, c)) {
      fail_rate += rate;
    } else {
      edges.push_back({target, rate, cls.kind});
    }
  }
  if (fail_rate > 0.0) edges.push_back({std::nullopt, fail_rate, TransitionKind::to_fail});
  return edges;
}

namespace {

// Shared assembly: states are already in lexicographic order, so index
// lookup is a binary search. Fail takes the last index.
template <class State, class EdgeFn, class ScrubFn>
Ctmc assemble(Arrangement arrangement, std::vector<State> states, EdgeFn&& edges_of,
              ScrubFn&& scrub_target_of, const ScrubConfig& scrub) {
  Ctmc chain;
  chain.arrangement = arrangement;
  const std::size_t n_states = states.size() + 1;  // + Fail
  chain.fail_index = n_states - 1;

  auto index_of = [&states](const State& s) {
    auto it = std::lower_bound(states.begin(), states.end(), s);
    assert(it != states.end() && *it == s);
    return static_cast<std::size_t>(it - states.begin());
  };
  chain.initial_index = index_of(State{});

  const double scrub_rate = scrub.enabled ? 1.0 / scrub.period_hours : 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (const auto& e : edges_of(states[i])) {
      const std::size_t target = e.target ? index_of(*e.target) : chain.fail_index;
      chain.transitions.push_back({i, target, e.rate_per_hour, e.kind});
    }
    if (scrub_rate > 0.0) {
      const auto target = scrub_target_of(states[i]);
      assert(target.has_value());  // readable states always scrub to a readable state
      if (*target != states[i]) {
        chain.transitions.push_back({i, index_of(*target), scrub_rate, TransitionKind::scrub});
      }
    }
  }

  // CSR with duplicate (source,target) entries merged.
  std::vector<std::map<std::size_t, double>> rows(n_states);
  for (const Transition& t : chain.transitions) rows[t.source][t.target] += t.rate_per_hour;
  chain.row_ptr.assign(n_states + 1, 0);
  chain.exit_rate.assign(n_states, 0.0);
  for (std::size_t i = 0; i < n_states; ++i) {
    chain.row_ptr[i + 1] = chain.row_ptr[i] + rows[i].size();
    for (const auto& [target, rate] : rows[i]) {
      chain.col.push_back(target);
      chain.rate.push_back(rate);
      chain.exit_rate[i] += rate;
    }
  }

  if (arrangement == Arrangement::simplex) {
    if constexpr (std::is_same_v<State, SimplexState>) chain.simplex_states = std::move(states);
  } else {
    if constexpr (std::is_same_v<State, DuplexState>) chain.duplex_states = std::move(states);
  }
  return chain;
}

}  // namespace

Ctmc build_ctmc(const Scenario& s, std::size_t max_states) {
  validate_scenario(s);
  if (s.arrangement == Arrangement::simplex) {
    auto states = enumerate_simplex(s.code);
    if (states.size() > max_states) {
      throw ModelTooLarge("simplex state space exceeds cap of " + std::to_string(max_states));
    }
    return assemble(
        Arrangement::simplex, std::move(states),
        [&](const SimplexState& st) { return simplex_transitions(st, s.code, s.rates); },
        [&](const SimplexState& st) { return simplex_scrub_target(st, s.code); }, s.scrub);
  }
  return assemble(
      Arrangement::duplex, enumerate_duplex(s.code, max_states),
      [&](const DuplexState& st) {
        return duplex_event_transitions(st, s.code, s.rates, s.rate_mode);
      },
      [&](const DuplexState& st) { return duplex_scrub_target(st, s.code); }, s.scrub);
}

Ctmc ctmc_from_transitions(std::size_t state_count, std::size_t fail_index,
                           std::size_t initial_index, std::vector<Transition> transitions) {
  Ctmc chain;
  chain.fail_index = fail_index;
  chain.initial_index = initial_index;
  chain.transitions = std::move(transitions);

  std::vector<std::map<std::size_t, double>> rows(state_count);
  for (const Transition& t : chain.transitions) {
    assert(t.source < state_count && t.target < state_count && t.source != t.target);
    rows[t.source][t.target] += t.rate_per_hour;
  }
  chain.row_ptr.assign(state_count + 1, 0);
  chain.exit_rate.assign(state_count, 0.0);
  for (std::size_t i = 0; i < state_count; ++i) {
    chain.row_ptr[i + 1] = chain.row_ptr[i] + rows[i].size();
    for (const auto& [target, rate] : rows[i]) {
      chain.col.push_back(target);
      chain.rate.push_back(rate);
      chain.exit_rate[i] += rate;
    }
  }
  return chain;
}

std::string Ctmc::state_label(std::size_t index) const {
  if (index == fail_index) return "Fail";
  char buf[96];
  if (!simplex_states.empty()) {
    const SimplexState& s = simplex_states[index];
    std::snprintf(buf, sizeof buf, "(%d,%d)", s.erasures, s.random_errors);
  } else if (!duplex_states.empty()) {
    const DuplexState& d = duplex_states[index];
    std::snprintf(buf, sizeof buf, "(%d,%d,%d,%d,%d,%d)", d.both_erased, d.single_erased,
                  d.erased_error, d.errors_w1, d.errors_w2, d.both_error);
  } else {
    std::snprintf(buf, sizeof buf, "s%zu", index);
  }
  return buf;
}

void write_chain_dump(const Ctmc& chain, std::ostream& out) {
  out << "# states " << chain.state_count() << "\n";
  for (std::size_t i = 0; i < chain.state_count(); ++i) out << chain.state_label(i) << "\n";
  out << "# transitions " << chain.transitions.size() << "\n";
  char rate_buf[40];
  for (const Transition& t : chain.transitions) {
    std::snprintf(rate_buf, sizeof rate_buf, "%.11e", t.rate_per_hour);
    out << chain.state_label(t.source) << " " << chain.state_label(t.target) << " " << rate_buf
        << " " << to_string(t.kind) << "\n";
  }
}

}  // namespace rsmem
