#pragma once

#include <optional>
#include <string>
#include <vector>

#include "costfair/document.hpp"
#include "costfair/model.hpp"

namespace costfair {

struct ValidationIssue {
  std::string code;     // stable machine-readable tag, e.g. "escrow-prefix-negative"
  std::string subject;  // offending vertex/edge id, may be empty
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> errors;
  std::vector<ValidationIssue> warnings;

  bool ok() const { return errors.empty(); }
  std::string to_string() const;
};

struct ValidationResult {
  std::optional<ExchangeProtocol> protocol;  // present iff report.ok()
  ValidationReport report;
};

/// Checks every protocol invariant and either returns an immutable
/// ExchangeProtocol or a report listing all violations:
///   - exactly two players, two items (one per player), four valuations
///   - edges form a directed tree rooted at the declared root
///   - terminal vertices unowned, non-terminal vertices owned with >= 1 edge
///   - edge labels unique among siblings, attributes within range
///   - leave edges all-zero and unfaithful
///   - per path: share sums <= 1 per item, escrow prefix never negative
/// Warns (non-fatally) about owned vertices with no faithful outgoing edge,
/// which trap every faithful strategy of the owner.
ValidationResult validate_protocol(const ProtocolDocument& doc);

}  // namespace costfair
