#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "costfair/model.hpp"

namespace costfair {

/// Default ceiling on enumerated strategy-set sizes. Exceeding the cap is a
/// hard error, never a silent truncation: fairness verdicts must be exact.
inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

class EnumerationOverflow : public std::runtime_error {
 public:
  EnumerationOverflow(std::uint64_t count, std::uint64_t cap)
      : std::runtime_error("strategy enumeration needs " +
                           (count == UINT64_MAX ? std::string(">= 2^64")
                                                : std::to_string(count)) +
                           " entries, cap is " + std::to_string(cap)),
        count(count),
        cap(cap) {}
  std::uint64_t count;
  std::uint64_t cap;
};

enum class StrategyKind { All, Faithful, Unfaithful };

struct StrategySet {
  Seat player = Seat::A;
  StrategyKind kind = StrategyKind::All;
  bool reduced = true;
  std::vector<Strategy> strategies;
};

/// Number of strategies without materializing them; saturates at UINT64_MAX.
std::uint64_t count_strategies(const ExchangeProtocol& protocol, Seat player,
                               StrategyKind kind, bool reduced);

/// Deterministic enumeration in depth-first declaration order. Reduced
/// strategies restrict the domain to vertices reachable under the player's
/// own prior choices (one representative per realizable behavior); complete
/// strategies assign a choice at every owned vertex. Throws
/// EnumerationOverflow when the set would exceed `cap`.
StrategySet enumerate_strategies(const ExchangeProtocol& protocol, Seat player,
                                 StrategyKind kind, bool reduced,
                                 std::uint64_t cap = kDefaultEnumerationCap);

/// True iff every edge chosen by the strategy (over its whole domain) is
/// labeled faithful.
bool is_faithful_strategy(const ExchangeProtocol& protocol, const Strategy& strategy);

/// Structural test for "can unfaithfully leave at any time": every owned
/// non-terminal vertex has an outgoing leave edge, and no subtree below one
/// of the player's leave edges contains a vertex owned by the player.
/// Vacuously true for a player owning no vertices.
bool can_leave_at_any_time(const ExchangeProtocol& protocol, Seat player);

/// True iff every non-leave edge carries strictly positive cost.
bool has_nonnegligible_cost(const ExchangeProtocol& protocol);

struct EnvironmentReport {
  bool nonnegligible_cost = false;
  bool can_leave_any_time_a = false;
  bool can_leave_any_time_b = false;
  std::optional<Seat> initializer;  // owner of the root; nullopt if the root is terminal
};

EnvironmentReport environment_report(const ExchangeProtocol& protocol);

}  // namespace costfair
