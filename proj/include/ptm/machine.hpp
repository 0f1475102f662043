#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "ptm/bitstring.hpp"

namespace ptm {

/// Outcome of advancing a process until it needs attention.
enum class StepStatus {
  NeedBit,      // executed a ReadBit; call supply() before advancing again
  Halted,
  OutOfBudget,
  Diverged,     // provably never reads or halts again (e.g. the DIVERGE machine)
};

/// Resumable execution state of a self-delimiting machine.
///
/// Input is never stored here: the driver answers each ReadBit with supply().
/// Every executed action costs exactly one step, charged against the budget
/// passed to advance(); advance() never lets `steps` exceed `budget`.
class Process {
 public:
  virtual ~Process() = default;
  virtual std::unique_ptr<Process> clone() const = 0;
  virtual StepStatus advance(std::uint64_t& steps, std::uint64_t budget) = 0;
  virtual void supply(bool bit) = 0;
  virtual const BitString& output() const = 0;
};

/// A prefix-free machine. Its domain is prefix-free by construction because
/// input bits are only obtained one at a time through ReadBit.
class Machine {
 public:
  virtual ~Machine() = default;
  /// The returned process may refer to *this; it must not outlive it.
  virtual std::unique_ptr<Process> start() const = 0;
  virtual std::string describe() const = 0;
};

struct RunResult {
  enum class Kind { Halted, OutOfBudget, InputExhausted };

  Kind kind = Kind::OutOfBudget;
  BitString output;           // meaningful for Halted
  std::uint64_t consumed = 0;
  std::uint64_t steps = 0;

  bool halted() const { return kind == Kind::Halted; }
  /// Halted having read the whole input, i.e. the input is in dom(M).
  bool halted_on_whole(const BitString& x) const { return halted() && consumed == x.size(); }

  bool operator==(const RunResult&) const = default;
};

std::string to_string(RunResult::Kind kind);

/// Runs m on x with at most `budget` steps. A certified divergence is
/// reported as OutOfBudget, which is what it would become at any budget.
RunResult run_machine(const Machine& m, const BitString& x, std::uint64_t budget);

/// Machine with empty domain: loops forever without reading.
class DivergeMachine final : public Machine {
 public:
  std::unique_ptr<Process> start() const override;
  std::string describe() const override { return "diverge"; }
};

}  // namespace ptm
