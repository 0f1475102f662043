#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stop_token>
#include <utility>
#include <vector>

#include "ptm/codebook_machine.hpp"
#include "ptm/dyadic.hpp"
#include "ptm/explore.hpp"

namespace ptm {

/// Exact enclosure of a halting probability:
/// lower = mass of halting programs found, upper = lower + frontier mass.
struct OmegaInterval {
  Dyadic lower;
  Dyadic upper;
  DomainReport report;
};

OmegaInterval omega_bounds(const Machine& m, std::size_t max_depth, std::uint64_t node_budget);
OmegaInterval interval_from_report(DomainReport report);

/// Leading binary digits shared by every real in [lower, upper].
///
/// A dyadic value is read in its terminating expansion. When the interval is
/// a single point the digits are that value's significant digits and
/// `exact` is set: every later digit is 0.
struct CertifiedBits {
  BitString digits;
  bool exact = false;

  /// True iff digits is a prefix of `other`'s digit stream (padding `other`
  /// with zeros when it is exact).
  bool is_prefix_of(const CertifiedBits& other) const;
  bool operator==(const CertifiedBits&) const = default;
};

CertifiedBits certified_bits(const Dyadic& lower, const Dyadic& upper);
inline CertifiedBits certified_bits(const OmegaInterval& iv) {
  return certified_bits(iv.lower, iv.upper);
}

/// Kraft sum of the codebook.
Dyadic omega_exact(const CodebookMachine& m);

struct HaltingTable {
  /// Every x with |x| <= n in short-lex order, with its halting answer.
  std::vector<std::pair<BitString, bool>> entries;
  std::size_t rounds = 0;
  Dyadic lower_at_stop;
};

struct OracleOptions {
  /// Rounds after which the search gives up (0 = unbounded).
  std::size_t max_rounds = 0;
  std::stop_token stop;
};

/// Recovers the halting status of every program of length <= |prefix| from a
/// true prefix of Omega. Round k explores with depth k and budget 2^k (capped
/// at 2^62) until the found mass reaches 0.prefix. Returns nullopt when
/// cancelled or out of rounds; a partial table is never returned.
std::optional<HaltingTable> halting_from_omega(const Machine& m, const BitString& omega_prefix,
                                               const OracleOptions& options = {});

}  // namespace ptm
