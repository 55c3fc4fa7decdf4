#include "costfair/validation.hpp"

#include <map>
#include <set>
#include <sstream>

namespace costfair {

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& e : errors) {
    out << "error [" << e.code << "]";
    if (!e.subject.empty()) out << " " << e.subject;
    out << ": " << e.message << "\n";
  }
  for (const auto& w : warnings) {
    out << "warning [" << w.code << "]";
    if (!w.subject.empty()) out << " " << w.subject;
    out << ": " << w.message << "\n";
  }
  return out.str();
}

namespace {

class Checker {
 public:
  explicit Checker(const ProtocolDocument& doc) : doc_(doc) {}

  ValidationResult run() {
    check_players();
    check_items();
    check_valuations();
    check_vertices();
    check_edges_local();
    if (!report_.errors.empty() && !structure_usable_) {
      return {std::nullopt, std::move(report_)};
    }
    check_tree_shape();
    if (report_.errors.empty()) {
      check_paths();
      check_faithless_vertices();
    }
    if (!report_.errors.empty()) return {std::nullopt, std::move(report_)};
    return {std::move(protocol_), std::move(report_)};
  }

 private:
  void error(std::string code, std::string subject, std::string message) {
    report_.errors.push_back({std::move(code), std::move(subject), std::move(message)});
  }
  void warn(std::string code, std::string subject, std::string message) {
    report_.warnings.push_back({std::move(code), std::move(subject), std::move(message)});
  }

  std::optional<Seat> seat_of(const std::string& player_id) const {
    if (doc_.players.size() >= 1 && doc_.players[0] == player_id) return Seat::A;
    if (doc_.players.size() >= 2 && doc_.players[1] == player_id) return Seat::B;
    return std::nullopt;
  }

  void check_players() {
    if (doc_.players.size() != 2) {
      error("player-count", "", "exactly two players required, got " +
                                    std::to_string(doc_.players.size()));
      structure_usable_ = false;
      return;
    }
    if (doc_.players[0] == doc_.players[1]) {
      error("player-duplicate", doc_.players[0], "the two players must be distinct");
      structure_usable_ = false;
      return;
    }
    protocol_.players[0].id = doc_.players[0];
    protocol_.players[1].id = doc_.players[1];
    protocol_.currency = doc_.currency;
  }

  void check_items() {
    if (doc_.items.size() != 2) {
      error("item-count", "", "exactly two items required, got " + std::to_string(doc_.items.size()));
      return;
    }
    std::set<Seat> owners;
    for (const auto& it : doc_.items) {
      auto seat = seat_of(it.owner);
      if (!seat) {
        error("unknown-player", it.id, "item owner '" + it.owner + "' is not a player");
        continue;
      }
      if (!owners.insert(*seat).second) {
        error("item-owner-duplicate", it.id, "both items owned by '" + it.owner + "'");
        continue;
      }
      protocol_.items[ix(*seat)] = Item{it.id, *seat};
    }
  }

  void check_valuation_shape(const DocValuation& v) {
    const Valuation& val = v.value;
    std::string subject = v.player + "/" + v.item;
    if (val.kind == Valuation::Kind::Linear) {
      if (val.full_value < 0) error("bad-valuation", subject, "full value must be >= 0");
      return;
    }
    if (val.table.empty()) {
      error("bad-valuation", subject, "table valuation has no breakpoints");
      return;
    }
    Rat prev_share = -1;
    Rat prev_value = 0;
    for (const auto& [share, value] : val.table) {
      if (share < 0 || share > 1) {
        error("bad-valuation", subject, "breakpoint share " + format_rat(share) + " outside [0, 1]");
        return;
      }
      if (share <= prev_share) {
        error("bad-valuation", subject, "breakpoint shares must be strictly increasing");
        return;
      }
      if (share == 0 && value != 0) {
        error("bad-valuation", subject, "value at share 0 must be 0");
        return;
      }
      if (value < prev_value) {
        error("bad-valuation", subject, "values must be monotonically non-decreasing");
        return;
      }
      prev_share = share;
      prev_value = value;
    }
    if (val.table.back().first != 1) {
      error("bad-valuation", subject, "breakpoints must include share 1");
    }
  }

  void check_valuations() {
    bool have[2][2] = {};
    for (const auto& v : doc_.valuations) {
      auto viewer = seat_of(v.player);
      if (!viewer) {
        error("unknown-player", v.player, "valuation names unknown player");
        continue;
      }
      std::optional<Seat> item_owner;
      for (int s = 0; s < 2; ++s) {
        if (protocol_.items[s].id == v.item) item_owner = static_cast<Seat>(s);
      }
      if (!item_owner) {
        error("unknown-item", v.item, "valuation names unknown item");
        continue;
      }
      if (have[ix(*viewer)][ix(*item_owner)]) {
        error("valuation-duplicate", v.player + "/" + v.item, "duplicate valuation");
        continue;
      }
      have[ix(*viewer)][ix(*item_owner)] = true;
      check_valuation_shape(v);
      Valuation val = v.value;
      if (val.kind == Valuation::Kind::Table && !val.table.empty()) {
        val.full_value = val.table.back().second;
      }
      protocol_.vals[ix(*viewer)][ix(*item_owner)] = std::move(val);
    }
    for (int p = 0; p < 2; ++p) {
      for (int i = 0; i < 2; ++i) {
        if (!have[p][i] && doc_.players.size() == 2 && doc_.items.size() == 2) {
          error("missing-valuation", doc_.players[p] + "/" + protocol_.items[i].id,
                "no valuation declared for this player/item pair");
        }
      }
    }
  }

  void check_vertices() {
    for (const auto& n : doc_.nodes) {
      if (vertex_ix_.count(n.id)) {
        error("duplicate-id", n.id, "vertex id declared twice");
        continue;
      }
      Vertex v;
      v.id = n.id;
      if (n.owner) {
        auto seat = seat_of(*n.owner);
        if (!seat) {
          error("unknown-player", n.id, "vertex owner '" + *n.owner + "' is not a player");
        } else {
          v.owner = *seat;
        }
      }
      vertex_ix_[n.id] = static_cast<int>(protocol_.verts.size());
      protocol_.verts.push_back(std::move(v));
    }
    if (doc_.root.empty()) {
      error("missing-root", "", "no root vertex declared");
      structure_usable_ = false;
    } else if (!vertex_ix_.count(doc_.root)) {
      error("unknown-vertex", doc_.root, "declared root is not a vertex");
      structure_usable_ = false;
    } else {
      protocol_.root = vertex_ix_.at(doc_.root);
    }
  }

  void check_edges_local() {
    for (const auto& de : doc_.edges) {
      auto from = vertex_ix_.find(de.from);
      auto to = vertex_ix_.find(de.to);
      if (from == vertex_ix_.end() || to == vertex_ix_.end()) {
        error("unknown-vertex", de.label,
              "edge '" + de.label + "' references unknown vertex '" +
                  (from == vertex_ix_.end() ? de.from : de.to) + "'");
        structure_usable_ = false;
        continue;
      }
      const MoveAttributes& a = de.attr;
      if (a.share_to_a < 0 || a.share_to_a > 1 || a.share_to_b < 0 || a.share_to_b > 1) {
        error("bad-attribute", de.label, "item shares must lie in [0, 1]");
      }
      if (a.cost < 0) error("bad-attribute", de.label, "cost must be >= 0");
      if (a.comp_to_a < 0 || a.comp_to_b < 0) {
        error("bad-attribute", de.label, "compensations must be >= 0");
      }
      if (de.leave) {
        if (!a.is_zero()) {
          error("leave-nonzero", de.label, "leave edge must have all-zero attributes");
        }
        if (de.faithful) {
          error("leave-faithful", de.label, "leave edge cannot be faithful");
        }
      }
      Edge e;
      e.label = de.label;
      e.from = from->second;
      e.to = to->second;
      e.attr = de.attr;
      e.faithful = de.faithful;
      e.leave = de.leave;
      int edge_index = static_cast<int>(protocol_.edgelist.size());
      protocol_.edgelist.push_back(std::move(e));
      protocol_.verts[from->second].out.push_back(edge_index);
    }
  }

  void check_tree_shape() {
    const auto& verts = protocol_.verts;
    std::vector<int> indegree(verts.size(), 0);
    for (const auto& e : protocol_.edgelist) {
      indegree[e.to]++;
      protocol_.verts[e.to].parent_edge = -1;  // filled below once shape holds
    }
    if (protocol_.root >= 0 && indegree[protocol_.root] > 0) {
      error("tree-shape", verts[protocol_.root].id, "root vertex has an incoming edge");
    }
    for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
      if (v == protocol_.root) continue;
      if (indegree[v] == 0) {
        error("tree-shape", verts[v].id, "vertex is unreachable from the root");
      } else if (indegree[v] > 1) {
        error("tree-shape", verts[v].id, "vertex has more than one incoming edge");
      }
    }
    if (protocol_.edgelist.size() + 1 != verts.size()) {
      error("tree-shape", "",
            "edge/vertex count mismatch: " + std::to_string(protocol_.edgelist.size()) +
                " edges, " + std::to_string(verts.size()) + " vertices");
    }
    // Owner/terminal consistency and sibling label uniqueness.
    for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
      const Vertex& vx = verts[v];
      if (vx.out.empty() && vx.owner) {
        error("owner-on-terminal", vx.id, "terminal vertex must not have an owner");
      }
      if (!vx.out.empty() && !vx.owner) {
        error("unowned-nonterminal", vx.id, "non-terminal vertex must have an owner");
      }
      std::set<std::string> labels;
      for (int e : vx.out) {
        if (!labels.insert(protocol_.edgelist[e].label).second) {
          error("duplicate-id", protocol_.edgelist[e].label,
                "edge label duplicated among siblings of '" + vx.id + "'");
        }
      }
    }
    if (!report_.errors.empty()) return;
    // Reachability doubles as the cycle check given the in-degree counts.
    std::vector<bool> seen(verts.size(), false);
    std::vector<int> stack{protocol_.root};
    seen[protocol_.root] = true;
    size_t reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : verts[v].out) {
        int to = protocol_.edgelist[e].to;
        if (seen[to]) {
          error("tree-shape", verts[to].id, "cycle detected through vertex");
          return;
        }
        protocol_.verts[to].parent_edge = e;
        seen[to] = true;
        ++reached;
        stack.push_back(to);
      }
    }
    if (reached != verts.size()) {
      error("tree-shape", "", "not all vertices are reachable from the root");
    }
  }

  void check_paths() {
    struct Frame {
      int vertex;
      Rat sum_a, sum_b, escrow;
    };
    std::vector<Frame> stack{{protocol_.root, 0, 0, 0}};
    while (!stack.empty()) {
      Frame f = stack.back();
      stack.pop_back();
      for (int e : protocol_.verts[f.vertex].out) {
        const Edge& edge = protocol_.edgelist[e];
        Frame next{edge.to, f.sum_a + edge.attr.share_to_a, f.sum_b + edge.attr.share_to_b,
                   f.escrow + edge.attr.deposit - edge.attr.comp_to_a - edge.attr.comp_to_b};
        if (next.sum_a > 1) {
          error("share-overflow", edge.label,
                "released shares of '" + protocol_.items[ix(Seat::B)].id +
                    "' exceed 1 on the path through edge '" + edge.label + "'");
        } else if (next.sum_b > 1) {
          error("share-overflow", edge.label,
                "released shares of '" + protocol_.items[ix(Seat::A)].id +
                    "' exceed 1 on the path through edge '" + edge.label + "'");
        } else if (next.escrow < 0) {
          error("escrow-prefix-negative", edge.label,
                "escrow prefix negative at edge " + edge.label + " (balance " +
                    format_rat(next.escrow) + ")");
        } else {
          stack.push_back(std::move(next));
        }
      }
    }
  }

  void check_faithless_vertices() {
    for (const Vertex& v : protocol_.verts) {
      if (v.out.empty()) continue;
      bool any_faithful = false;
      for (int e : v.out) any_faithful |= protocol_.edgelist[e].faithful;
      if (!any_faithful) {
        warn("no-faithful-edge", v.id,
             "vertex owned by '" + protocol_.players[ix(*v.owner)].id +
                 "' has no faithful outgoing edge; every faithful strategy of that "
                 "player is trapped here");
      }
    }
  }

  const ProtocolDocument& doc_;
  ExchangeProtocol protocol_;
  ValidationReport report_;
  std::map<std::string, int, std::less<>> vertex_ix_;
  bool structure_usable_ = true;
};

}  // namespace

ValidationResult validate_protocol(const ProtocolDocument& doc) { return Checker(doc).run(); }

}  // namespace costfair
