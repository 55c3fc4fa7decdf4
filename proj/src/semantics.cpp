#include "costfair/semantics.hpp"

#include <algorithm>

namespace costfair {

const char* outcome_name(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::Complete: return "complete";
    case OutcomeKind::Void: return "void";
    case OutcomeKind::Unbalanced: return "unbalanced";
  }
  return "?";
}

PlayOut play(const ExchangeProtocol& protocol, const Strategy& strategy_a,
             const Strategy& strategy_b) {
  PlayOut out;
  int v = protocol.root;
  while (!protocol.is_terminal(v)) {
    Seat owner = *protocol.vertex(v).owner;
    const Strategy& s = owner == Seat::A ? strategy_a : strategy_b;
    if (!s.defined_at(v)) {
      throw ProtocolError("play: strategy of " + protocol.player(owner).id +
                          " undefined at reached vertex '" + protocol.vertex(v).id + "'");
    }
    int e = s.choice[v];
    out.path.push_back(e);
    (owner == Seat::A ? out.moves_a : out.moves_b).push_back(e);
    v = protocol.edge(e).to;
  }
  out.terminal = v;
  return out;
}

PayoffPair payoff_of_path(const ExchangeProtocol& protocol, std::span<const int> path) {
  Rat sum_share_a = 0, sum_share_b = 0;
  Rat flows_a = 0, flows_b = 0;  // compensation/deposit/cost terms per seat
  for (int e : path) {
    const Edge& edge = protocol.edge(e);
    sum_share_a += edge.attr.share_to_a;
    sum_share_b += edge.attr.share_to_b;
    flows_a += edge.attr.comp_to_a;
    flows_b += edge.attr.comp_to_b;
    if (protocol.actor(e) == Seat::A) {
      flows_a -= edge.attr.deposit + edge.attr.cost;
    } else {
      flows_b -= edge.attr.deposit + edge.attr.cost;
    }
  }
  PayoffPair p;
  p.a = value_of(protocol.valuation(Seat::A, Seat::B), sum_share_a) -
        value_of(protocol.valuation(Seat::A, Seat::A), sum_share_b) + flows_a;
  p.b = value_of(protocol.valuation(Seat::B, Seat::A), sum_share_b) -
        value_of(protocol.valuation(Seat::B, Seat::B), sum_share_a) + flows_b;
  return p;
}

PayoffPair payoff(const ExchangeProtocol& protocol, const Strategy& strategy_a,
                  const Strategy& strategy_b) {
  return payoff_of_path(protocol, play(protocol, strategy_a, strategy_b).path);
}

EscrowTrace escrow_trace(const ExchangeProtocol& protocol, std::span<const int> path) {
  EscrowTrace trace;
  trace.balances.reserve(path.size());
  Rat balance = 0;
  for (size_t k = 0; k < path.size(); ++k) {
    const MoveAttributes& a = protocol.edge(path[k]).attr;
    balance += a.deposit - a.comp_to_a - a.comp_to_b;
    trace.balances.push_back(balance);
    if (balance < 0 && !trace.first_negative) trace.first_negative = static_cast<int>(k);
  }
  return trace;
}

Outcome classify_outcome(const ExchangeProtocol& protocol, std::span<const int> path) {
  Outcome outcome;
  for (int e : path) {
    outcome.received_by_a += protocol.edge(e).attr.share_to_a;
    outcome.received_by_b += protocol.edge(e).attr.share_to_b;
  }
  if (outcome.received_by_a == 1 && outcome.received_by_b == 1) {
    outcome.kind = OutcomeKind::Complete;
  } else if (outcome.received_by_a == 0 && outcome.received_by_b == 0) {
    outcome.kind = OutcomeKind::Void;
  } else {
    outcome.kind = OutcomeKind::Unbalanced;
  }
  return outcome;
}

std::vector<int> path_to(const ExchangeProtocol& protocol, int vertex) {
  std::vector<int> path;
  for (int v = vertex; v != protocol.root;) {
    int e = protocol.vertex(v).parent_edge;
    path.push_back(e);
    v = protocol.edge(e).from;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::optional<PayoffPair>> terminal_payoffs(const ExchangeProtocol& protocol) {
  std::vector<std::optional<PayoffPair>> result(protocol.verts.size());
  // One DFS carrying the running sums instead of recomputing per terminal.
  struct Frame {
    int vertex;
    Rat sum_a, sum_b, flows_a, flows_b;
  };
  std::vector<Frame> stack{{protocol.root, 0, 0, 0, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (protocol.is_terminal(f.vertex)) {
      PayoffPair p;
      p.a = value_of(protocol.valuation(Seat::A, Seat::B), f.sum_a) -
            value_of(protocol.valuation(Seat::A, Seat::A), f.sum_b) + f.flows_a;
      p.b = value_of(protocol.valuation(Seat::B, Seat::A), f.sum_b) -
            value_of(protocol.valuation(Seat::B, Seat::B), f.sum_a) + f.flows_b;
      result[f.vertex] = std::move(p);
      continue;
    }
    for (int e : protocol.vertex(f.vertex).out) {
      const Edge& edge = protocol.edge(e);
      Frame next = f;
      next.vertex = edge.to;
      next.sum_a += edge.attr.share_to_a;
      next.sum_b += edge.attr.share_to_b;
      next.flows_a += edge.attr.comp_to_a;
      next.flows_b += edge.attr.comp_to_b;
      if (protocol.actor(e) == Seat::A) {
        next.flows_a -= edge.attr.deposit + edge.attr.cost;
      } else {
        next.flows_b -= edge.attr.deposit + edge.attr.cost;
      }
      stack.push_back(std::move(next));
    }
  }
  return result;
}

}  // namespace costfair
