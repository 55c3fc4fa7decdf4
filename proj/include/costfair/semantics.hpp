#pragma once

#include <optional>
#include <span>
#include <vector>

#include "costfair/model.hpp"

namespace costfair {

/// One resolved run of the protocol: the realized root-to-terminal path and
/// the conducted-move subsequences of each party (the actor of an edge is
/// the owner of its source vertex).
struct PlayOut {
  std::vector<int> path;     // edge indices, root to terminal
  std::vector<int> moves_a;  // subsequence of path conducted by seat A
  std::vector<int> moves_b;
  int terminal = -1;
};

struct PayoffPair {
  Rat a;
  Rat b;

  const Rat& of(Seat s) const { return s == Seat::A ? a : b; }
  bool operator==(const PayoffPair& o) const { return a == o.a && b == o.b; }
};

/// Running escrow balances, one entry per path prefix:
/// balance_k = sum over the first k edges of (deposit - comp_to_a - comp_to_b).
/// A financially closed system keeps every entry >= 0.
struct EscrowTrace {
  std::vector<Rat> balances;
  std::optional<int> first_negative;  // index into balances, if any entry < 0
};

enum class OutcomeKind { Complete, Void, Unbalanced };

/// Item-whereabouts classification of a terminal: complete when both parties
/// received their counterparty's whole item, void when nothing moved,
/// unbalanced otherwise. Exact rational comparison against 1 and 0.
struct Outcome {
  OutcomeKind kind = OutcomeKind::Void;
  Rat received_by_a;  // total share of the B-seat item released to A
  Rat received_by_b;
};

const char* outcome_name(OutcomeKind kind);

/// Walks from the root applying the owning player's choice at each vertex.
/// Throws ProtocolError if a strategy is undefined at a reached vertex.
PlayOut play(const ExchangeProtocol& protocol, const Strategy& strategy_a,
             const Strategy& strategy_b);

/// Payoffs of a strategy pair: value of item shares received minus given
/// away, plus compensations received, minus own deposits and costs.
PayoffPair payoff(const ExchangeProtocol& protocol, const Strategy& strategy_a,
                  const Strategy& strategy_b);

/// Payoffs determined by a realized path alone (strategy details off the
/// path never matter).
PayoffPair payoff_of_path(const ExchangeProtocol& protocol, std::span<const int> path);

EscrowTrace escrow_trace(const ExchangeProtocol& protocol, std::span<const int> path);

Outcome classify_outcome(const ExchangeProtocol& protocol, std::span<const int> path);

/// Root path of a vertex (edge indices). The vertex need not be terminal.
std::vector<int> path_to(const ExchangeProtocol& protocol, int vertex);

/// Payoff pair at every terminal vertex, indexed by vertex id; non-terminal
/// entries are nullopt. Computed once and shared by the solvers.
std::vector<std::optional<PayoffPair>> terminal_payoffs(const ExchangeProtocol& protocol);

}  // namespace costfair
