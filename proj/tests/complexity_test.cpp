#include <doctest.h>

#include "ptm/complexity.hpp"
#include "ptm/enumeration.hpp"
#include "ptm/errors.hpp"

using namespace ptm;

namespace {

BitString B(const char* s) { return BitString::parse(s); }

std::size_t floor_log2(std::size_t v) {
  std::size_t r = 0;
  while (v >> (r + 1)) ++r;
  return r;
}

}  // namespace

TEST_CASE("print_program runs through U") {
  BitString p = print_program(BitString{});
  CHECK(p == u_encode(0, elias_gamma(0)));
  RunResult r = run_universal(p, 100);
  CHECK(r.halted_on_whole(p));
  CHECK(r.output.empty());

  BitString q = print_program(B("01"));
  CHECK(q.size() == 1 + elias_gamma(2).size() + 2);
  RunResult r2 = run_universal(q, 100);
  CHECK(r2.halted_on_whole(q));
  CHECK(r2.output == B("01"));
}

TEST_CASE("print_program length bound, exhaustive to length 12") {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (const auto& x : all_strings(n)) {
      BitString p = print_program(x);
      // header bit plus the gamma code's leading 1
      CHECK(p.size() - x.size() <= 2 * floor_log2(x.size() + 1) + 1 + 1);
      if (n <= 8) {
        RunResult r = run_universal(p, 10 * p.size());
        CHECK(r.halted_on_whole(p));
        CHECK(r.output == x);
      }
    }
  }
}

TEST_CASE("h_upper examples") {
  ComplexityWitness e = h_upper(BitString{}, print_program(BitString{}).size(), 1000);
  CHECK(e.program_length <= print_program(BitString{}).size());

  const std::size_t len0 = print_program(B("0")).size();
  ComplexityWitness z = h_upper(B("0"), len0, 1000);
  CHECK(z.program_length <= len0);
  CHECK(z.search_exhaustive_up_to == len0);
  RunResult r = run_universal(z.program, 1000);
  CHECK(r.halted_on_whole(z.program));
  CHECK(r.output == B("0"));

  CHECK_THROWS_AS(h_upper(B("0"), 0, 1000), NotFound);
}

TEST_CASE("h_upper picks the lexicographically smallest shortest program") {
  ComplexitySearch s(9, 300);
  for (const char* t : {"-", "0", "1", "00", "01"}) {
    auto w = s.find(B(t));
    REQUIRE(w.has_value());
    for (const auto& h : s.report().halting) {
      if (h.output != B(t)) continue;
      CHECK(h.program.size() >= w->program_length);
      if (h.program.size() == w->program_length) CHECK(w->program <= h.program);
    }
  }
}

TEST_CASE("h_upper is nonincreasing in length and budget") {
  const BitString x = B("000");
  std::size_t prev = SIZE_MAX;
  for (std::uint64_t budget : {40u, 200u, 1000u}) {
    for (std::size_t len : {8u, 10u}) {
      ComplexitySearch s(len, budget);
      auto w = s.find(x);
      if (!w) continue;
      CHECK(w->program_length <= prev);
      prev = w->program_length;
    }
  }
  CHECK(prev <= print_program(x).size());
}

TEST_CASE("deficiency_check") {
  // c >= n_max: n - c <= 0, nothing can be refuted.
  auto rows = deficiency_check(B("0000"), 4, 4, 8, 200);
  REQUIRE(rows.size() == 4);
  for (const auto& r : rows) CHECK(r.verdict == Verdict::UnrefutedAtBudget);

  // Refuted rows carry a replayable witness shorter than n - c.
  auto zeros = deficiency_check(BitString::zeros(10), 0, 10, 10, 500);
  for (const auto& r : zeros) {
    if (r.verdict != Verdict::Refuted) continue;
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->program_length < r.n);
    RunResult run = run_universal(r.witness->program, 500);
    CHECK(run.output == BitString::zeros(r.n));
  }

  // Refutations persist at larger budgets.
  auto more = deficiency_check(BitString::zeros(10), 0, 10, 10, 2000);
  for (std::size_t k = 0; k < zeros.size(); ++k)
    if (zeros[k].verdict == Verdict::Refuted) CHECK(more[k].verdict == Verdict::Refuted);

  CHECK_THROWS_AS(deficiency_check(B("01"), 0, 3, 4, 10), std::invalid_argument);
}
