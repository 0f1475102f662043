// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
//
// Every check compares library results with an oracle computed here: pairwise
// prefix tests, Kraft sums on scaled 64-bit integers, direct runs of single
// inputs, and exhaustive enumeration of short programs.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "golden_cases.hpp"
#include "ptm/complexity.hpp"
#include "ptm/enumeration.hpp"
#include "ptm/explore.hpp"
#include "ptm/forge.hpp"
#include "ptm/gated.hpp"
#include "ptm/machine_io.hpp"
#include "ptm/omega.hpp"
#include "ptm/pr.hpp"
#include "test_support.hpp"

using namespace ptm;
using namespace ptm::testing;

namespace {

struct Tally {
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::string first;
  std::string note;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (violations++ == 0) first = what;
  }
};

bool pairwise_prefix_free(const std::vector<BitString>& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b)
      if (a != b && s[a].is_prefix_of(s[b])) return false;
  return true;
}

// Terminating binary expansion of num / 2^scale, trailing zeros dropped.
BitString expansion(std::uint64_t num, unsigned scale) {
  BitString bits;
  for (unsigned k = 1; k <= scale; ++k) bits.push_back(((num >> (scale - k)) & 1) != 0);
  std::size_t n = bits.size();
  while (n > 0 && !bits[n - 1]) --n;
  return bits.prefix(n);
}

// 1. Kraft soundness of explored domains of random tables.
Tally kraft_soundness() {
  Tally t;
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<std::size_t> depth(1, 10);
  std::uniform_int_distribution<std::uint64_t> budget(1, 10000);
  for (int k = 0; k < 1000; ++k) {
    TableMachine m = random_table(rng, 6);
    const std::size_t d = depth(rng);
    const std::uint64_t b = budget(rng);
    DomainReport r = explore_domain(m, d, b);
    ++t.cases;
    std::vector<BitString> progs;
    for (const auto& h : r.halting) progs.push_back(h.program);
    std::vector<BitString> frontier;
    for (const auto& f : r.frontier) frontier.push_back(f.path);
    std::vector<BitString> all = progs;
    all.insert(all.end(), frontier.begin(), frontier.end());
    std::uint64_t halt_mass = scaled_kraft(progs, 10);
    std::uint64_t front_mass = scaled_kraft(frontier, 10);
    std::string tag = "machine " + std::to_string(k);
    t.check(pairwise_prefix_free(progs), tag + ": halting set not prefix-free");
    t.check(pairwise_prefix_free(all), tag + ": halting and frontier paths overlap");
    t.check(halt_mass + front_mass <= 1024, tag + ": mass exceeds 1");
    t.check(r.halting_mass() == Dyadic(mpz_class(static_cast<unsigned long>(halt_mass)), 10),
            tag + ": halting_mass disagrees with the scaled sum");
    t.check(kraft_sum(progs) + r.frontier_mass() <= Dyadic::from_uint(1), tag + ": kraft_sum + frontier > 1");
    for (const auto& h : r.halting) {
      RunResult rr = run_machine(m, h.program, b);
      t.check(rr.halted_on_whole(h.program) && rr.output == h.output && rr.steps == h.steps,
              tag + ": halting entry does not replay");
    }
  }
  return t;
}

// 2. U(0^i 1 x) = C_i(x) within budget b + i + 1.
Tally universality() {
  Tally t;
  std::size_t halted = 0;
  const std::uint64_t b = 1000;
  auto inputs = all_strings_up_to(6);
  for (std::uint64_t i = 0; i <= 200; ++i) {
    auto ci = decode_machine(MachineIndex(static_cast<unsigned long>(i)));
    SimulationConstant sc = simulation_constant(i);
    t.check(sc.c == i + 1, "simulation constant of " + std::to_string(i));
    for (const auto& x : inputs) {
      ++t.cases;
      BitString p = u_encode(i, x);
      std::string tag = "i=" + std::to_string(i) + " x=" + x.str();
      t.check(p.size() == x.size() + i + 1, tag + ": |u_encode| != |x| + i + 1");
      t.check(p == BitString::zeros(i).with(true).concat(x), tag + ": u_encode is not 0^i 1 x");
      RunResult direct = run_machine(*ci, x, b);
      RunResult via_u = run_universal(p, sc.translate_budget(b));
      const bool dh = direct.halted_on_whole(x), uh = via_u.halted_on_whole(p);
      t.check(dh == uh, tag + ": halting differs");
      t.check(direct.kind == via_u.kind, tag + ": run outcome differs");
      if (direct.halted()) t.check(via_u.consumed == direct.consumed + i + 1, tag + ": consumed differs");
      if (dh && uh) {
        ++halted;
        t.check(direct.output == via_u.output, tag + ": outputs differ");
        t.check(via_u.steps == direct.steps + i + 1, tag + ": step overhead is not i + 1");
      }
    }
  }
  t.note = " halting=" + std::to_string(halted);
  return t;
}

// 3. omega_bounds intervals nest and converge to the exact value.
Tally interval_convergence() {
  Tally t;
  std::mt19937_64 rng(3003);
  const unsigned L = 9;
  for (int k = 0; k < 100; ++k) {
    CodebookMachine m = random_codebook(rng, L);
    ++t.cases;
    std::string tag = "codebook " + std::to_string(k);
    Dyadic exact = omega_exact(m);
    std::uint64_t scaled = scaled_kraft(m.codewords(), L);
    t.check(exact == Dyadic(mpz_class(static_cast<unsigned long>(scaled)), L), tag + ": omega_exact");
    CertifiedBits full{expansion(scaled, L), true};

    std::optional<OmegaInterval> prev;
    std::optional<CertifiedBits> prev_bits;
    // Depth and budget grow in alternation.
    for (std::size_t step = 0; step <= 2 * (L + 1); ++step) {
      std::size_t d = (step + 1) / 2;
      std::uint64_t b = 2 * (step / 2) + 1;
      if (step == 2 * (L + 1)) b = 4 * L + 4;
      OmegaInterval iv = omega_bounds(m, d, b);
      CertifiedBits cb = certified_bits(iv);
      t.check(iv.lower <= exact && exact <= iv.upper, tag + ": interval misses omega");
      if (prev) {
        t.check(prev->lower <= iv.lower && iv.upper <= prev->upper, tag + ": not nested");
        t.check(prev_bits->is_prefix_of(cb), tag + ": certified bits not monotone");
      }
      t.check(cb.is_prefix_of(full), tag + ": certified bits disagree with omega");
      prev = iv;
      prev_bits = cb;
    }
    t.check(prev->lower == exact && prev->upper == exact, tag + ": final interval not a point");
    t.check(*prev_bits == full, tag + ": final bits are not the full expansion");
  }
  return t;
}

// 4. Forged machines hit their target exactly; prefixes of the input forge
// prefixes of the codebook.
Tally forge_exactness() {
  Tally t;
  std::mt19937_64 rng(4004);
  std::uniform_int_distribution<std::size_t> len(1, 20);
  std::uniform_int_distribution<unsigned> expo(0, 24);
  for (int k = 0; k < 500; ++k) {
    ++t.cases;
    std::string tag = "sequence " + std::to_string(k);
    const unsigned e = expo(rng);
    const std::uint64_t one = std::uint64_t{1} << e;
    std::uniform_int_distribution<std::uint64_t> v(1, one);
    std::vector<std::uint64_t> raw;
    const std::size_t n = std::min<std::uint64_t>(len(rng), one);
    while (raw.size() < n) {
      std::uint64_t x = v(rng);
      if (std::find(raw.begin(), raw.end(), x) == raw.end()) raw.push_back(x);
    }
    std::sort(raw.begin(), raw.end());
    std::vector<Dyadic> q;
    for (auto x : raw) q.emplace_back(mpz_class(static_cast<unsigned long>(x)), e);

    CodebookMachine m = forge_machine(q);
    t.check(omega_exact(m) == q.back(), tag + ": omega_exact != last(q)");
    auto words = m.codewords();
    t.check(pairwise_prefix_free(words), tag + ": codebook not prefix-free");
    bool short_enough = std::all_of(words.begin(), words.end(), [&](const BitString& w) { return w.size() <= e; });
    t.check(short_enough, tag + ": codeword longer than the exponent");
    if (short_enough) t.check(scaled_kraft(words, e) == raw.back(), tag + ": scaled Kraft sum != last(q)");

    Forger f;
    std::size_t seen = 0;
    for (std::size_t j = 0; j < q.size(); ++j) {
      f.push_target(q[j]);
      CodebookMachine head = forge_machine(std::span<const Dyadic>(q).first(j + 1));
      t.check(head.entries().size() <= m.entries().size() &&
                  std::equal(head.entries().begin(), head.entries().end(), m.entries().begin()),
              tag + ": forge of a prefix is not a prefix of the forge");
      t.check(f.entries() == head.entries(), tag + ": online forger differs from batch forge");
      t.check(omega_exact(head) == q[j], tag + ": prefix forge misses its target");
      t.check(f.entries().size() >= seen, tag + ": forger dropped entries");
      seen = f.entries().size();
    }
  }
  return t;
}

// 5. The halting table recovered from a true prefix of omega is right.
Tally oracle_recovery() {
  Tally t;
  std::mt19937_64 rng(5005);
  const unsigned L = 10;
  for (int k = 0; k < 50; ++k) {
    CodebookMachine m = random_codebook(rng, L);
    BitString digits = expansion(scaled_kraft(m.codewords(), L), L);
    for (std::size_t n = 1; n <= 8; ++n) {
      ++t.cases;
      std::string tag = "codebook " + std::to_string(k) + " n=" + std::to_string(n);
      BitString prefix = digits.size() >= n ? digits.prefix(n) : digits.concat(BitString::zeros(n - digits.size()));
      auto table = halting_from_omega(m, prefix);
      t.check(table.has_value(), tag + ": no table");
      if (!table) continue;
      t.check(table->entries.size() == (std::size_t{2} << n) - 1, tag + ": wrong table size");
      DomainReport brute = explore_domain(m, n, 4 * L + 4);
      auto dom = brute.programs();
      auto strings = all_strings_up_to(n);
      for (std::size_t s = 0; s < strings.size() && s < table->entries.size(); ++s) {
        const auto& [x, halts] = table->entries[s];
        t.check(x == strings[s], tag + ": table out of order");
        bool in_dom = std::find(dom.begin(), dom.end(), x) != dom.end();
        bool direct = run_machine(m, x, 4 * L + 4).halted_on_whole(x);
        t.check(halts == in_dom && halts == direct, tag + ": disagreement at " + x.str());
      }
    }
  }
  return t;
}

// 6. Finite-range gates cut the domain to short programs; the identity gate
// changes nothing but the step count.
Tally gated_dichotomy() {
  Tally t;
  const std::uint64_t kGateBudget = 600;
  for (unsigned long k = 1; k <= 4; ++k) {
    for (const PRTerm& gate : {terms::mod(k), PRTerm::comp(terms::mod(k), {PRTerm::succ()})}) {
      ++t.cases;
      GatedMachine g = build_gated(gate);
      std::string tag = "gate " + gate.str();
      t.check(g.range_count_at(200) == k, tag + ": range size is not k");
      for (std::size_t depth : {static_cast<std::size_t>(k), std::size_t{8}}) {
        DomainReport r = explore_domain(g, depth, kGateBudget);
        for (const auto& h : r.halting) t.check(h.program.size() < k, tag + ": domain element of length >= k");
        // Oracle: U's halting programs shorter than k, with enough budget for
        // the gate's probes, are exactly the gated domain.
        DomainReport u = explore_domain(universal_machine(), depth, kGateBudget);
        std::vector<BitString> expect;
        for (const auto& h : u.halting) {
          if (h.program.size() >= k) continue;
          std::size_t j = 1;
          while (g.range_count_at(j) <= h.program.size()) ++j;
          if (h.steps + j <= kGateBudget) expect.push_back(h.program);
        }
        t.check(r.programs() == expect, tag + ": gated domain differs from the filtered universal domain");
      }
    }
  }
  for (std::uint64_t budget : {20, 60, 300, 2000}) {
    ++t.cases;
    GatedMachine g = build_gated(terms::identity());
    const std::size_t depth = 6;
    DomainReport gr = explore_domain(g, depth, budget);
    DomainReport ur = explore_domain(universal_machine(), depth, budget);
    std::vector<HaltingEntry> expect;
    for (const auto& h : ur.halting)
      if (h.steps + h.program.size() + 1 <= budget)
        expect.push_back({h.program, h.output, h.steps + h.program.size() + 1});
    t.check(gr.halting == expect, "identity gate at budget " + std::to_string(budget));
    DomainReport wide = explore_domain(g, depth, budget + depth + 1);
    std::vector<BitString> u_progs = ur.programs(), g_progs;
    for (const auto& h : wide.halting)
      if (h.steps - h.program.size() - 1 <= budget) g_progs.push_back(h.program);
    t.check(g_progs == u_progs, "identity gate halting set at matched budget " + std::to_string(budget));
  }
  return t;
}

// 7. h_upper: witnesses exist, replay, are minimal among short programs, and
// shorten as the budget grows.
Tally complexity_bound() {
  Tally t;
  const std::size_t max_len = print_program(BitString::zeros(10)).size();
  std::vector<std::uint64_t> budgets{40, 200, 2000};
  std::vector<ComplexitySearch> searches;
  for (auto b : budgets) searches.emplace_back(max_len, b);
  auto targets = all_strings_up_to(10);
  // Exhaustive oracle for short targets: every program up to 9 bits.
  auto short_programs = all_strings_up_to(9);
  for (const auto& x : targets) {
    ++t.cases;
    std::string tag = "x=" + x.str();
    std::size_t prev = SIZE_MAX;
    for (std::size_t s = 0; s < searches.size(); ++s) {
      auto w = searches[s].find(x);
      t.check(w.has_value(), tag + ": no witness");
      if (!w) continue;
      t.check(w->program_length == w->program.size(), tag + ": length field");
      t.check(w->program_length <= print_program(x).size(), tag + ": witness longer than the print program");
      RunResult r = run_universal(w->program, budgets[s]);
      t.check(r.halted_on_whole(w->program) && r.output == x, tag + ": witness does not replay");
      t.check(w->program_length <= prev, tag + ": length grew with budget");
      prev = w->program_length;
      if (x.size() <= 2) {
        for (const auto& p : short_programs) {
          if (p.size() >= w->program_length) break;
          RunResult rp = run_universal(p, budgets[s]);
          t.check(!(rp.halted_on_whole(p) && rp.output == x), tag + ": shorter program " + p.str() + " exists");
        }
      }
    }
    if (x.size() <= 3) {
      ComplexityWitness h = h_upper(x, max_len, budgets.back());
      t.check(h.program == searches.back().find(x)->program, tag + ": h_upper differs from the shared search");
    }
  }
  return t;
}

// 8. Golden CLI outputs are byte-identical across runs and thread counts.
Tally determinism() {
  Tally t;
  int saved = omp_get_max_threads();
  for (const auto& gc : golden_cases()) {
    std::string expected = read_file(golden_dir + "/" + gc.expected);
    for (int threads : {1, 2, 3, 4, 8}) {
      for (int rep = 0; rep < 3; ++rep) {
        ++t.cases;
        std::vector<std::string> args{"--threads", std::to_string(threads)};
        args.insert(args.end(), gc.args.begin(), gc.args.end());
        Outcome o = call_cli(args);
        t.check(o.code == 0 && o.out == expected, gc.expected + " with " + std::to_string(threads) + " threads");
      }
    }
  }
  // Parallel and serial exploration agree on every machine kind.
  std::mt19937_64 rng(8008);
  for (int k = 0; k < 100; ++k) {
    ++t.cases;
    TableMachine m = random_table(rng, 5);
    DomainReport serial = explore_domain_serial(m, 8, 500);
    for (int threads : {1, 4}) {
      omp_set_num_threads(threads);
      t.check(explore_domain(m, 8, 500) == serial, "table " + std::to_string(k) + " parallel != serial");
    }
  }
  omp_set_num_threads(4);
  t.check(explore_domain(universal_machine(), 12, 300) == explore_domain_serial(universal_machine(), 12, 300),
          "universal parallel != serial");
  omp_set_num_threads(saved);
  return t;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Tally()> run;
  };
  const std::vector<Criterion> criteria{
      {"kraft-soundness", kraft_soundness},
      {"universality-identity", universality},
      {"interval-convergence", interval_convergence},
      {"forge-exactness", forge_exactness},
      {"omega-oracle-recovery", oracle_recovery},
      {"gated-dichotomy", gated_dichotomy},
      {"complexity-upper-bound", complexity_bound},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = criteria[i].run();
    } catch (const std::exception& e) {
      t.check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = t.violations == 0;
    failed += ok ? 0 : 1;
    std::printf("%s %zu %s: cases=%zu violations=%zu time=%.1fs%s%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name, t.cases, t.violations, secs, t.note.c_str(), ok ? "" : " first: ", t.first.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
