#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "costfair/rational.hpp"

namespace costfair {

/// Raised for malformed requests against a validated protocol
/// (unknown vertex id, strategy undefined at a reached vertex, ...).
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The two seats of a two-party exchange. Seat A is the first declared
/// player, seat B the second; display names ("seller", "buyer", ...) live
/// in the protocol's player records.
enum class Seat : int { A = 0, B = 1 };

constexpr Seat other(Seat s) { return s == Seat::A ? Seat::B : Seat::A; }
constexpr int ix(Seat s) { return static_cast<int>(s); }
constexpr const char* seat_tag(Seat s) { return s == Seat::A ? "A" : "B"; }

struct Player {
  std::string id;
};

/// One of the two goods being exchanged; `owner` is the seat initially
/// holding it.
struct Item {
  std::string id;
  Seat owner = Seat::A;
};

/// How much a given share of an item is worth to a given party, in the
/// protocol's currency unit. Linear valuations scale the full value by the
/// share; table valuations interpolate piecewise-linearly between
/// breakpoints (share 0 is always worth 0).
struct Valuation {
  enum class Kind { Linear, Table };
  Kind kind = Kind::Linear;
  Rat full_value;
  std::vector<std::pair<Rat, Rat>> table;  // (share, value), shares strictly increasing, last share = 1
};

/// Financial and item effects of one move. Shares refer to the *receiving*
/// seat: share_to_a is the portion of the B-seat item released to A,
/// share_to_b the portion of the A-seat item released to B. cost is paid by
/// the acting party to the trusted third party; deposit moves funds into
/// (positive) or out of (negative) the shared escrow; compensations are paid
/// out of escrow to the named seat.
struct MoveAttributes {
  Rat share_to_a;
  Rat share_to_b;
  Rat cost;
  Rat deposit;
  Rat comp_to_a;
  Rat comp_to_b;

  bool is_zero() const {
    return share_to_a == 0 && share_to_b == 0 && cost == 0 && deposit == 0 &&
           comp_to_a == 0 && comp_to_b == 0;
  }
};

struct Edge {
  std::string label;  // unique among siblings
  int from = -1;
  int to = -1;
  MoveAttributes attr;
  bool faithful = false;
  bool leave = false;  // abandonment move: all-zero attributes, unfaithful
};

struct Vertex {
  std::string id;
  std::optional<Seat> owner;  // present iff non-terminal
  std::vector<int> out;       // outgoing edges in declaration order
  int parent_edge = -1;
};

/// A choice function: for every owned vertex in its domain, the chosen
/// outgoing edge. A complete strategy covers all owned vertices; a reduced
/// strategy covers exactly the owned vertices consistent with its own
/// earlier choices.
struct Strategy {
  Seat player = Seat::A;
  bool reduced = true;
  std::vector<int> choice;  // edge index per vertex index, -1 = outside domain

  bool defined_at(int vertex) const {
    return vertex >= 0 && vertex < static_cast<int>(choice.size()) && choice[vertex] >= 0;
  }
};

/// A validated attribute-annotated extensive game between two parties.
/// Instances are produced by validate_protocol and never mutated afterwards;
/// all analysis functions take them by const reference and are safe to run
/// concurrently over the same instance.
struct ExchangeProtocol {
  std::array<Player, 2> players;
  std::array<Item, 2> items;                     // indexed by owning seat
  std::array<std::array<Valuation, 2>, 2> vals;  // [viewer seat][item owner seat]
  std::vector<Vertex> verts;
  std::vector<Edge> edgelist;
  int root = -1;
  std::string currency = "unit";

  const Player& player(Seat s) const { return players[ix(s)]; }
  const Item& item(Seat s) const { return items[ix(s)]; }
  const Valuation& valuation(Seat viewer, Seat item_owner) const {
    return vals[ix(viewer)][ix(item_owner)];
  }
  const Vertex& vertex(int v) const { return verts[v]; }
  const Edge& edge(int e) const { return edgelist[e]; }
  bool is_terminal(int v) const { return verts[v].out.empty(); }
  Seat actor(int e) const { return *verts[edgelist[e].from].owner; }

  std::optional<int> find_vertex(std::string_view id) const;
  std::optional<int> find_out_edge(int vertex, std::string_view label) const;
  std::optional<Seat> seat_of_player(std::string_view player_id) const;
};

/// Evaluates a valuation at a share in [0, 1]; throws ProtocolError outside
/// that range.
Rat value_of(const Valuation& valuation, const Rat& share);

/// Outgoing edges of a vertex in declaration order; by-id variant throws on
/// unknown ids.
const std::vector<int>& outgoing_edges(const ExchangeProtocol& protocol, int vertex);
const std::vector<int>& outgoing_edges(const ExchangeProtocol& protocol, std::string_view vertex_id);

/// Vertex indices in depth-first order from the root, children in sibling
/// order. This is the canonical iteration order for all enumerations.
std::vector<int> dfs_order(const ExchangeProtocol& protocol);

}  // namespace costfair
