#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ptm/dyadic.hpp"
#include "ptm/machine.hpp"

namespace ptm {

struct HaltingEntry {
  BitString program;
  BitString output;
  std::uint64_t steps = 0;
  bool operator==(const HaltingEntry&) const = default;
};

enum class FrontierReason { ReadAtMaxDepth, OutOfBudget };

/// An unresolved branch. The path is the input consumed so far, which also
/// identifies the node in the tree of ReadBit answers.
struct FrontierEntry {
  BitString path;
  FrontierReason reason = FrontierReason::OutOfBudget;
  std::size_t depth() const { return path.size(); }
  bool operator==(const FrontierEntry&) const = default;
};

/// Finite snapshot of a machine's domain. All three lists are in short-lex
/// order of their paths. Diverged branches carry no mass in either bound.
struct DomainReport {
  std::vector<HaltingEntry> halting;
  std::vector<FrontierEntry> frontier;
  std::vector<BitString> diverged;
  std::size_t max_depth = 0;
  std::uint64_t node_budget = 0;

  std::vector<BitString> programs() const;
  Dyadic halting_mass() const;
  Dyadic frontier_mass() const;

  bool operator==(const DomainReport&) const = default;
};

/// Explores the tree of ReadBit answers down to max_depth, giving every root
/// to node path a budget of node_budget steps (so a depth-d node agrees with
/// run_machine on its path). Level-parallel with OpenMP; the report is
/// identical to explore_domain_serial for every thread count.
DomainReport explore_domain(const Machine& m, std::size_t max_depth, std::uint64_t node_budget);

/// Depth-first reference implementation.
DomainReport explore_domain_serial(const Machine& m, std::size_t max_depth,
                                   std::uint64_t node_budget);

bool check_prefix_free(std::span<const BitString> s);
Dyadic kraft_sum(std::span<const BitString> s);

}  // namespace ptm
