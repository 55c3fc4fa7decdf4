#include "costfair/model.hpp"

namespace costfair {

std::optional<int> ExchangeProtocol::find_vertex(std::string_view id) const {
  for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
    if (verts[v].id == id) return v;
  }
  return std::nullopt;
}

std::optional<int> ExchangeProtocol::find_out_edge(int vertex, std::string_view label) const {
  for (int e : verts[vertex].out) {
    if (edgelist[e].label == label) return e;
  }
  return std::nullopt;
}

std::optional<Seat> ExchangeProtocol::seat_of_player(std::string_view player_id) const {
  if (players[0].id == player_id) return Seat::A;
  if (players[1].id == player_id) return Seat::B;
  return std::nullopt;
}

Rat value_of(const Valuation& valuation, const Rat& share) {
  if (share < 0 || share > 1) {
    throw ProtocolError("value_of: share " + format_rat(share) + " outside [0, 1]");
  }
  if (valuation.kind == Valuation::Kind::Linear) {
    return share * valuation.full_value;
  }
  // Piecewise-linear over breakpoints, with an implicit (0, 0) start.
  Rat prev_share = 0;
  Rat prev_value = 0;
  for (const auto& [bp_share, bp_value] : valuation.table) {
    if (share <= bp_share) {
      if (share == bp_share) return bp_value;
      Rat span = bp_share - prev_share;
      return prev_value + (bp_value - prev_value) * (share - prev_share) / span;
    }
    prev_share = bp_share;
    prev_value = bp_value;
  }
  return prev_value;  // share == 1 is always covered by the last breakpoint
}

const std::vector<int>& outgoing_edges(const ExchangeProtocol& protocol, int vertex) {
  if (vertex < 0 || vertex >= static_cast<int>(protocol.verts.size())) {
    throw ProtocolError("outgoing_edges: vertex index out of range");
  }
  return protocol.verts[vertex].out;
}

const std::vector<int>& outgoing_edges(const ExchangeProtocol& protocol, std::string_view vertex_id) {
  auto v = protocol.find_vertex(vertex_id);
  if (!v) throw ProtocolError("outgoing_edges: unknown vertex id '" + std::string(vertex_id) + "'");
  return protocol.verts[*v].out;
}

std::vector<int> dfs_order(const ExchangeProtocol& protocol) {
  std::vector<int> order;
  order.reserve(protocol.verts.size());
  std::vector<int> stack{protocol.root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    const auto& out = protocol.verts[v].out;
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
      stack.push_back(protocol.edgelist[*it].to);
    }
  }
  return order;
}

}  // namespace costfair
