#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace colex {

using StateId = std::uint32_t;
using Symbol = std::uint8_t;

// Symbol 0 is reserved for '#': it labels the source and pads short
// suffixes, and sorts below every alphabet symbol.
inline constexpr Symbol kPadSymbol = 0;
inline constexpr StateId kNoState = static_cast<StateId>(-1);

struct Transition {
  StateId from;
  Symbol symbol;
  StateId to;

  friend bool operator==(const Transition&, const Transition&) = default;
};

// State-labeled DFA with a single source and adjacency in both directions.
// Immutable after build(); all sorting engines share one instance read-only.
class Dfa {
 public:
  Dfa() = default;

  // Accepts any edge set (including invalid ones) so that validate() can
  // diagnose; label data is only populated when the edges are input-consistent.
  static Dfa build(StateId n, StateId source, std::vector<Transition> edges,
                   std::vector<StateId> finals = {});

  StateId n = 0;
  StateId source = 0;
  std::vector<Transition> transitions;  // sorted by (from, symbol, to)
  std::vector<StateId> finals;          // sorted, unique

  // λ(u); labels[source] == kPadSymbol. Valid only if input_consistent.
  std::vector<Symbol> labels;
  bool input_consistent = false;

  std::vector<std::vector<std::pair<Symbol, StateId>>> forward;  // sorted by symbol
  std::vector<std::vector<StateId>> reverse;                     // δ⁻¹(u)

  std::size_t m() const { return transitions.size(); }
};

enum class ViolationKind {
  NonDeterminism,
  SourceIncoming,
  Unreachable,
  InputInconsistency,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Diagnoses every violated model assumption; never throws.
ValidationReport validate(const Dfa& dfa);

// Throws std::invalid_argument with the report text if validate() fails.
void require_valid(const Dfa& dfa);

// Splits each state into one copy per distinct incoming symbol so that every
// state has a well-defined label. Language-preserving. Requires a
// deterministic, source-isolated, fully reachable input.
Dfa make_input_consistent(const Dfa& dfa);

// Sub-automaton induced by the states reachable from the source, ids
// re-densified in increasing original order.
Dfa prune_unreachable(const Dfa& dfa);

struct CyclicInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  int line;
};

// Text format:
//   # comment
//   <n> <m> <source-id>
//   <from> <symbol> <to>     (m lines; symbol is a printable char or \xNN)
//   F <id> <id> ...          (optional)
// The parser re-maps state ids so the source becomes id 0.
// Strict mode rejects duplicate (from, symbol) pairs; the lenient mode keeps
// them so validate() can report the non-determinism.
Dfa parse(std::string_view text, bool strict = true);
std::string serialize(const Dfa& dfa);

std::string render_symbol(Symbol s);

struct GenParams {
  StateId n = 1;
  unsigned alphabet_size = 2;
  double density = 2.0;  // target transitions per state
  bool acyclic = false;
  std::uint64_t seed = 0;
};

// Deterministic in seed; the result always passes validate(). Labels are
// fixed per state, a random label-respecting spanning tree guarantees
// reachability, then extra edges are added up to the density target.
Dfa generate(const GenParams& params);

// Worst-case DFA for the doubling engine: n = 4σ+2 states arranged so that
// the σ states of the final fan-out column have σ extenders each at distance
// 2, for a total extender census of σ²+2σ+1 at doubling level 1.
Dfa build_fig2_gadget(unsigned sigma);

}  // namespace colex
