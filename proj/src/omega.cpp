#include "ptm/omega.hpp"

#include <algorithm>
#include <unordered_set>

namespace ptm {

OmegaInterval interval_from_report(DomainReport report) {
  OmegaInterval iv;
  iv.lower = report.halting_mass();
  iv.upper = iv.lower + report.frontier_mass();
  iv.report = std::move(report);
  return iv;
}

OmegaInterval omega_bounds(const Machine& m, std::size_t max_depth, std::uint64_t node_budget) {
  return interval_from_report(explore_domain(m, max_depth, node_budget));
}

bool CertifiedBits::is_prefix_of(const CertifiedBits& other) const {
  if (digits.size() <= other.digits.size()) return digits.is_prefix_of(other.digits);
  if (!other.exact || !other.digits.is_prefix_of(digits)) return false;
  for (std::size_t i = other.digits.size(); i < digits.size(); ++i)
    if (digits[i]) return false;
  return true;
}

CertifiedBits certified_bits(const Dyadic& lower, const Dyadic& upper) {
  CertifiedBits out;
  auto digits_of = [](const mpz_class& k, std::uint32_t n) {
    BitString s;
    for (std::uint32_t b = n; b-- > 0;) s.push_back(mpz_tstbit(k.get_mpz_t(), b) != 0);
    return s;
  };
  if (lower == upper) {
    // Point interval: the terminating expansion. 1 itself has no 0.w form.
    if (lower.numerator() >= (mpz_class(1) << lower.exponent())) return out;
    out.digits = digits_of(lower.numerator(), lower.exponent());
    out.exact = true;
    return out;
  }
  // Longest n such that [lower, upper] sits inside one cell [k, k+1) / 2^n.
  // upper may itself be the true value, so it must lie strictly below the
  // cell's right end.
  const std::uint32_t limit = std::max(lower.exponent(), upper.exponent());
  std::uint32_t best = 0;
  for (std::uint32_t n = 1; n <= limit; ++n) {
    if (lower.floor_scaled(n) != upper.floor_scaled(n)) break;
    best = n;
  }
  if (best > 0) {
    mpz_class k = lower.floor_scaled(best);
    if (k >= (mpz_class(1) << best)) return out;
    out.digits = digits_of(k, best);
  }
  return out;
}

Dyadic omega_exact(const CodebookMachine& m) {
  auto words = m.codewords();
  return kraft_sum(words);
}

std::optional<HaltingTable> halting_from_omega(const Machine& m, const BitString& omega_prefix,
                                               const OracleOptions& options) {
  const Dyadic threshold = Dyadic::from_bits(omega_prefix);
  const std::size_t n = omega_prefix.size();

  // Once the found mass reaches 0.w, the unfound mass is below 2^-n (w is a
  // true prefix), so no program of length <= n can still be missing.
  for (std::size_t round = 1;; ++round) {
    if (options.stop.stop_requested()) return std::nullopt;
    if (options.max_rounds != 0 && round > options.max_rounds) return std::nullopt;
    const std::uint64_t budget = std::uint64_t{1} << std::min<std::size_t>(round, 62);
    DomainReport report = explore_domain(m, round, budget);
    Dyadic lower = report.halting_mass();
    if (lower < threshold) continue;

    std::unordered_set<BitString> halts;
    for (const auto& h : report.halting)
      if (h.program.size() <= n) halts.insert(h.program);
    HaltingTable table;
    table.rounds = round;
    table.lower_at_stop = lower;
    for (auto& x : all_strings_up_to(n)) {
      bool h = halts.contains(x);
      table.entries.emplace_back(std::move(x), h);
    }
    return table;
  }
}

}  // namespace ptm
