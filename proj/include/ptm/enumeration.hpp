#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "ptm/machine.hpp"
#include "ptm/table_machine.hpp"

namespace ptm {

/// Index into the canonical enumeration (C_i). Index 0 is the PRINT machine.
struct MachineIndex {
  mpz_class value{0};
  MachineIndex() = default;
  MachineIndex(unsigned long v) : value(v) {}  // NOLINT: natural literals
  explicit MachineIndex(mpz_class v) : value(std::move(v)) {}
  std::string str() const { return value.get_str(); }
  bool operator==(const MachineIndex& o) const { return value == o.value; }
};

/// Elias-gamma code of n + 1, so every natural (0 included) has a code:
/// floor(log2(n+1)) zeros followed by the binary form of n + 1.
BitString elias_gamma(std::uint64_t n);

/// PRINT: reads elias_gamma(n), then copies the next n input bits to the
/// output and halts. One step per read, per emitted bit, and for the halt.
class PrintMachine final : public Machine {
 public:
  std::unique_ptr<Process> start() const override;
  std::string describe() const override { return "print"; }
};

/// Index of a table machine. The layout is documented in docs/encoding.md.
MachineIndex encode_machine(const TableMachine& m);
/// Table behind an index, or nullopt for index 0 and invalid payloads.
std::optional<TableMachine> decode_table(const MachineIndex& i);
/// Total: 0 is PRINT, valid payloads are tables, everything else DIVERGE.
std::shared_ptr<const Machine> decode_machine(const MachineIndex& i);

/// 0^i 1 x
BitString u_encode(std::uint64_t i, const BitString& x);

/// The prefix-universal machine U(0^i 1 x) = C_i(x). Header bits cost one
/// step each; afterwards each simulated action costs one step, so a run of
/// C_i with budget b corresponds to a run of U with budget b + i + 1.
class UniversalMachine final : public Machine {
 public:
  std::unique_ptr<Process> start() const override;
  std::string describe() const override { return "universal"; }

  /// Decoded C_i, cached. Thread-safe.
  std::shared_ptr<const Machine> component(std::uint64_t i) const;

 private:
  mutable std::mutex mutex_;
  mutable std::map<std::uint64_t, std::shared_ptr<const Machine>> cache_;
};

const UniversalMachine& universal_machine();
std::shared_ptr<const Machine> universal_machine_ptr();

RunResult run_universal(const BitString& p, std::uint64_t budget);

/// Host steps spent per simulated action.
inline constexpr std::uint64_t kSimulationOverhead = 1;

/// |u_encode(i, x)| = |x| + c with c = i + 1.
struct SimulationConstant {
  std::uint64_t i = 0;
  std::uint64_t c = 0;
  BitString witness(const BitString& x) const { return u_encode(i, x); }
  /// Budget for U that reproduces a budget-b run of C_i.
  std::uint64_t translate_budget(std::uint64_t b) const { return b * kSimulationOverhead + c; }
};

SimulationConstant simulation_constant(std::uint64_t i);

}  // namespace ptm
