#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ptm/explore.hpp"

namespace ptm {

/// u_encode(0, elias_gamma(|x|) x): a PRINT program for x.
BitString print_program(const BitString& x);

struct ComplexityWitness {
  BitString target;
  BitString program;
  std::size_t program_length = 0;
  /// No program shorter than program_length and at most this long produces
  /// target within `budget` steps.
  std::size_t search_exhaustive_up_to = 0;
  std::uint64_t budget = 0;
};

/// One exploration of dom(U) answering shortest-program queries for any
/// target. Ties are broken lexicographically.
class ComplexitySearch {
 public:
  ComplexitySearch(std::size_t max_len, std::uint64_t budget);

  std::optional<ComplexityWitness> find(const BitString& target) const;
  std::size_t max_len() const { return max_len_; }
  std::uint64_t budget() const { return budget_; }
  const DomainReport& report() const { return report_; }

 private:
  std::size_t max_len_;
  std::uint64_t budget_;
  DomainReport report_;
  std::unordered_map<BitString, std::size_t> best_;  // output -> halting index
};

/// Throws NotFound if no program of length <= max_len outputs x in budget.
ComplexityWitness h_upper(const BitString& x, std::size_t max_len, std::uint64_t budget);

enum class Verdict { Refuted, UnrefutedAtBudget };

struct DeficiencyRow {
  std::size_t n = 0;
  Verdict verdict = Verdict::UnrefutedAtBudget;
  std::optional<ComplexityWitness> witness;  // set when refuted
};

/// For each n in 1..n_max: Refuted iff a program shorter than n - c with
/// output alpha(n) was found. Throws std::invalid_argument if
/// |alpha_bits| < n_max.
std::vector<DeficiencyRow> deficiency_check(const BitString& alpha_bits, std::size_t c,
                                            std::size_t n_max, std::size_t max_len,
                                            std::uint64_t budget);

}  // namespace ptm
