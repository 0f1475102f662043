#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <mutex>
#include <set>
#include <vector>

#include "ptm/machine.hpp"
#include "ptm/pr.hpp"

namespace ptm {

/// G(x) = base(x) if #{f(1), .., f(j)} > |x| for some j > 0, else undefined.
///
/// G simulates base on demand; once base halts having consumed l bits, G
/// searches j = 1, 2, .. spending one step per j, and halts with base's output
/// as soon as the range count exceeds l. dom(G) is a subset of dom(base).
class GatedMachine final : public Machine {
 public:
  /// Throws ArityMismatch unless the gate is unary.
  GatedMachine(PRTerm gate, std::shared_ptr<const Machine> base);

  const PRTerm& gate() const { return gate_; }
  const Machine& base() const { return *base_; }

  /// range_count(gate, j), memoized. Thread-safe.
  std::size_t range_count_at(std::size_t j) const;

  std::unique_ptr<Process> start() const override;
  std::string describe() const override;

 private:
  PRTerm gate_;
  std::shared_ptr<const Machine> base_;
  mutable std::mutex mutex_;
  mutable std::vector<std::size_t> counts_{0};  // counts_[j]
  mutable std::set<mpz_class> seen_;
};

/// Gate over the universal machine.
GatedMachine build_gated(const PRTerm& t);
/// The index transformation i -> C_{g(i)}: gate built from the i-th PR term.
GatedMachine gated_from_index(const mpz_class& i);

}  // namespace ptm
