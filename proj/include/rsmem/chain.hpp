#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rsmem/model.hpp"
#include "rsmem/types.hpp"

namespace rsmem {

/// Event classes. The duplex letters follow the conventional one-event
/// taxonomy of pair-state changes; redirected transitions (target
/// unreadable) collapse into a single accumulated `to_fail` edge.
enum class TransitionKind {
  erasure_a,  // pair single-erased -> both erased
  erasure_b,  // erased/errored pair -> both erased
  erasure_c,  // clean pair -> single-erased
  erasure_d,  // word-1 error erased in place -> single-erased
  erasure_e,  // word-2 error erased in place -> single-erased
  erasure_f,  // doubly-errored pair -> erased/errored
  erasure_g,  // clean side of a word-1 error erased -> erased/errored
  erasure_h,  // clean side of a word-2 error erased -> erased/errored
  random_i,   // clean side of a single-erased pair hit -> erased/errored
  random_l,   // clean pair hit in word 1
  random_m,   // clean pair hit in word 2
  random_n,   // word-1 error pair hit on the word-2 side -> both errored
  random_o,   // word-2 error pair hit on the word-1 side -> both errored
  simplex_erasure,
  simplex_error,
  scrub,
  to_fail,
};

const char* to_string(TransitionKind kind);

/// Index-based transition inside an assembled chain. Rates are per hour.
struct Transition {
  std::size_t source = 0;
  std::size_t target = 0;
  double rate_per_hour = 0.0;
  TransitionKind kind = TransitionKind::to_fail;
};

/// One emitted edge from a single state, before index assignment.
/// target == nullopt means the aggregate Fail state.
template <class State>
struct Edge {
  std::optional<State> target;
  double rate_per_hour = 0.0;
  TransitionKind kind = TransitionKind::to_fail;
};

using SimplexEdge = Edge<SimplexState>;
using DuplexEdge = Edge<DuplexState>;

/// All readable states in lexicographic order. The Fail sentinel is not in
/// the list; assembled chains place it at the last index.
std::vector<SimplexState> enumerate_simplex(const CodeParams& c);
std::vector<DuplexState> enumerate_duplex(const CodeParams& c,
                                          std::size_t max_states = 5'000'000);

/// Event edges out of one readable state, rates per hour, unreadable
/// targets merged into one accumulated to_fail edge (always emitted last).
/// Zero-rate edges are never emitted.
std::vector<SimplexEdge> simplex_transitions(const SimplexState& s, const CodeParams& c,
                                             const FaultRates& r);
std::vector<DuplexEdge> duplex_event_transitions(const DuplexState& d, const CodeParams& c,
                                                 const FaultRates& r, RateMode mode);

/// Finite CTMC with an absorbing Fail state at the last index. The sparse
/// generator keeps off-diagonal rates per row; the diagonal is implicit as
/// -exit_rate[row].
struct Ctmc {
  Arrangement arrangement = Arrangement::simplex;
  std::vector<SimplexState> simplex_states;  // populated for simplex chains
  std::vector<DuplexState> duplex_states;    // populated for duplex chains
  std::size_t fail_index = 0;
  std::size_t initial_index = 0;

  std::vector<Transition> transitions;  // deterministic order, per-source grouped

  // CSR over sources; duplicate (source,target) pairs merged by summing.
  std::vector<std::size_t> row_ptr;
  std::vector<std::size_t> col;
  std::vector<double> rate;
  std::vector<double> exit_rate;  // per-row sum of off-diagonal rates

  std::size_t state_count() const { return row_ptr.empty() ? 0 : row_ptr.size() - 1; }
  std::string state_label(std::size_t index) const;  // "(a,b,...)" or "Fail"
};

/// Enumerates, emits event edges, adds one scrub edge per state whose scrub
/// target differs from itself (rate 1/T_sc), and assembles the generator.
/// Throws ModelTooLarge past `max_states` readable states.
Ctmc build_ctmc(const Scenario& s, std::size_t max_states = 5'000'000);

/// Assembles a chain from explicit transitions; used for hand-built chains.
Ctmc ctmc_from_transitions(std::size_t state_count, std::size_t fail_index,
                           std::size_t initial_index, std::vector<Transition> transitions);

/// Plain-text dump: `# states N`, one line per state, then `# transitions M`
/// and one `source target rate kind` line per transition.
void write_chain_dump(const Ctmc& chain, std::ostream& out);

}  // namespace rsmem
