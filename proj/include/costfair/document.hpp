#pragma once

#include <optional>
#include <string>
#include <vector>

#include "costfair/model.hpp"

namespace costfair {

/// Structurally parsed protocol description, before semantic validation.
/// Field order mirrors the .xproto document: player order fixes the A/B
/// seats and edge order within a source vertex fixes sibling order; both are
/// semantic and preserved by the canonical serializer.
struct DocItem {
  std::string id;
  std::string owner;
  int line = 0;
};

struct DocValuation {
  std::string player;
  std::string item;
  Valuation value;
  int line = 0;
};

struct DocNode {
  std::string id;
  std::optional<std::string> owner;
  int line = 0;
};

struct DocEdge {
  std::string from;
  std::string label;
  std::string to;
  MoveAttributes attr;
  bool faithful = false;
  bool leave = false;
  int line = 0;
};

struct ProtocolDocument {
  int format_version = 1;
  std::string currency = "unit";
  std::vector<std::string> players;  // [A seat, B seat]
  std::vector<DocItem> items;
  std::vector<DocValuation> valuations;
  std::vector<DocNode> nodes;
  std::vector<DocEdge> edges;
  std::string root;
};

/// Rebuilds the document form of a validated protocol (used by the
/// serializer and by tests that mutate a protocol).
ProtocolDocument document_from_protocol(const ExchangeProtocol& protocol);

}  // namespace costfair
