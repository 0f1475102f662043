#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "ptm/codebook_machine.hpp"
#include "ptm/dyadic.hpp"

namespace ptm {

/// Online Kraft-Chaitin allocator.
///
/// Free space is a set of subtrees with pairwise distinct depths, so it is
/// the binary expansion of the free mass. A request for length n takes the
/// free node of depth exactly n if there is one, otherwise splits the deepest
/// free node shallower than n along its 0-path; the split leaves exactly one
/// new free node at each depth in between, which keeps depths distinct.
class KCState {
 public:
  /// Whole tree free.
  KCState();
  /// Custom free set; throws std::invalid_argument unless the nodes have
  /// distinct depths and are pairwise prefix-incomparable.
  explicit KCState(std::vector<BitString> free_nodes);

  /// Throws KraftViolation if free mass < 2^-n; the state is then unchanged.
  BitString allocate(std::size_t n);

  Dyadic free_mass() const;
  Dyadic allocated_mass() const;
  Dyadic initial_mass() const { return initial_mass_; }
  std::vector<BitString> free_nodes() const;
  const std::vector<std::pair<std::size_t, BitString>>& allocated() const { return allocated_; }

 private:
  std::map<std::size_t, BitString> free_;  // depth -> node
  std::vector<std::pair<std::size_t, BitString>> allocated_;
  Dyadic initial_mass_;
};

/// Functional form: returns the codeword and the successor state.
std::pair<BitString, KCState> kc_allocate(KCState state, std::size_t n);

/// Powers 2^-n whose sum is d, largest first (the returned values are n).
std::vector<std::uint32_t> dyadic_powers(const Dyadic& d);

/// Builds a codebook machine while consuming an increasing dyadic sequence.
/// The j-th codeword (0-based) outputs nat_to_string(j).
class Forger {
 public:
  Forger() = default;
  explicit Forger(KCState state) : state_(std::move(state)) {}

  /// Next target value; must exceed the previous one. Returns the codewords
  /// added for this step. Throws std::invalid_argument on a non-increasing
  /// target and KraftViolation if the target exceeds the free mass.
  std::vector<CodebookMachine::Entry> push_target(const Dyadic& q);
  /// Adds an increment (> 0) to the current value.
  std::vector<CodebookMachine::Entry> push_increment(const Dyadic& delta);

  const Dyadic& current() const { return current_; }
  const std::vector<CodebookMachine::Entry>& entries() const { return entries_; }
  const KCState& state() const { return state_; }
  CodebookMachine machine() const { return CodebookMachine(entries_); }

 private:
  KCState state_;
  Dyadic current_;
  bool started_ = false;
  std::vector<CodebookMachine::Entry> entries_;
};

/// Codebook machine with halting probability exactly q.back().
CodebookMachine forge_machine(std::span<const Dyadic> q);

/// Universal variant: V(00 p) = U(p); the forged codewords live under "1"
/// and "01", so Omega_V = q.back() + Omega_U / 4 and q.back() <= 3/4.
class SplicedMachine final : public Machine {
 public:
  SplicedMachine(CodebookMachine forged, std::shared_ptr<const Machine> universal);
  std::unique_ptr<Process> start() const override;
  std::string describe() const override;
  const CodebookMachine& forged() const { return forged_; }

 private:
  CodebookMachine forged_;
  std::shared_ptr<const Machine> universal_;
};

SplicedMachine forge_universal(std::span<const Dyadic> q);

}  // namespace ptm
