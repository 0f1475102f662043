#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ptm/machine.hpp"

namespace ptm {

enum class Symbol : std::uint8_t { Zero = 0, One = 1, Blank = 2 };
enum class Move : std::uint8_t { Left, Right };

using State = std::uint32_t;

struct WriteAction {
  Symbol symbol;
  Move move;
  State next;
  bool operator==(const WriteAction&) const = default;
};
struct ReadAction {
  State on_zero;
  State on_one;
  bool operator==(const ReadAction&) const = default;
};
struct EmitAction {
  bool bit;
  State next;
  bool operator==(const EmitAction&) const = default;
};
struct HaltAction {
  bool operator==(const HaltAction&) const = default;
};

using Action = std::variant<WriteAction, ReadAction, EmitAction, HaltAction>;

/// Transition-table machine: one blank-initialized work tape, unbounded both
/// ways, head at cell 0, start state 0. Input arrives only via ReadAction.
class TableMachine final : public Machine {
 public:
  static constexpr int kSymbols = 3;

  /// `actions` is row-major: actions[state * 3 + symbol]. Throws
  /// std::invalid_argument if the table is not total or names a missing state.
  TableMachine(std::uint32_t state_count, std::vector<Action> actions);

  /// Parses the line-oriented text format. Missing (state, symbol) pairs
  /// default to halt; duplicates are a ParseError.
  static TableMachine parse(std::string_view text);
  /// Canonical text form: one line per (state, symbol), row-major.
  std::string to_text() const;

  std::uint32_t state_count() const { return state_count_; }
  const Action& action(State s, Symbol sym) const {
    return actions_[s * kSymbols + static_cast<int>(sym)];
  }
  const std::vector<Action>& actions() const { return actions_; }

  std::unique_ptr<Process> start() const override;
  std::string describe() const override;

  bool operator==(const TableMachine& o) const {
    return state_count_ == o.state_count_ && actions_ == o.actions_;
  }

 private:
  std::uint32_t state_count_;
  std::vector<Action> actions_;
};

/// Reads one bit; halts with empty output on 0 and runs forever on 1.
TableMachine halt0_machine();

}  // namespace ptm
