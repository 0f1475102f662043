#include "ptm/explore.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ptm {

namespace {

struct Node {
  std::unique_ptr<Process> proc;
  BitString path;
  std::uint64_t steps = 0;
  StepStatus status = StepStatus::OutOfBudget;
};

// Records a settled node. Returns true when the node asks for a bit below
// max_depth and must be expanded.
bool settle(Node& n, std::size_t max_depth, DomainReport& r) {
  switch (n.status) {
    case StepStatus::NeedBit:
      if (n.path.size() < max_depth) return true;
      r.frontier.push_back({n.path, FrontierReason::ReadAtMaxDepth});
      return false;
    case StepStatus::Halted:
      r.halting.push_back({n.path, n.proc->output(), n.steps});
      return false;
    case StepStatus::OutOfBudget:
      r.frontier.push_back({n.path, FrontierReason::OutOfBudget});
      return false;
    case StepStatus::Diverged:
      r.diverged.push_back(n.path);
      return false;
  }
  return false;
}

}  // namespace

std::vector<BitString> DomainReport::programs() const {
  std::vector<BitString> out;
  out.reserve(halting.size());
  for (const auto& h : halting) out.push_back(h.program);
  return out;
}

Dyadic DomainReport::halting_mass() const {
  auto p = programs();
  return kraft_sum(p);
}

Dyadic DomainReport::frontier_mass() const {
  std::vector<BitString> paths;
  paths.reserve(frontier.size());
  for (const auto& f : frontier) paths.push_back(f.path);
  return kraft_sum(paths);
}

DomainReport explore_domain(const Machine& m, std::size_t max_depth, std::uint64_t node_budget) {
  DomainReport r;
  r.max_depth = max_depth;
  r.node_budget = node_budget;

  std::vector<Node> level;
  level.push_back({m.start(), {}, 0, StepStatus::OutOfBudget});

  // Level-synchronous walk. Within a level the nodes stay in lexicographic
  // order of their paths, and children are emitted as (0, 1), so the lists
  // come out short-lex sorted without a final sort.
  while (!level.empty()) {
    const auto count = static_cast<std::int64_t>(level.size());

#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t k = 0; k < count; ++k) {
      Node& n = level[static_cast<std::size_t>(k)];
      n.status = n.proc->advance(n.steps, node_budget);
    }

    std::vector<std::uint8_t> expand(level.size(), 0);
    for (std::size_t k = 0; k < level.size(); ++k) expand[k] = settle(level[k], max_depth, r) ? 1 : 0;

    std::vector<Node> next(2 * level.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t k = 0; k < count; ++k) {
      auto uk = static_cast<std::size_t>(k);
      if (!expand[uk]) continue;
      Node& n = level[uk];
      Node zero{n.proc->clone(), n.path.with(false), n.steps, StepStatus::OutOfBudget};
      zero.proc->supply(false);
      Node one{std::move(n.proc), n.path.with(true), n.steps, StepStatus::OutOfBudget};
      one.proc->supply(true);
      next[2 * uk] = std::move(zero);
      next[2 * uk + 1] = std::move(one);
    }
    std::erase_if(next, [](const Node& n) { return !n.proc; });
    level = std::move(next);
  }
  return r;
}

DomainReport explore_domain_serial(const Machine& m, std::size_t max_depth,
                                   std::uint64_t node_budget) {
  DomainReport r;
  r.max_depth = max_depth;
  r.node_budget = node_budget;

  std::vector<Node> stack;
  stack.push_back({m.start(), {}, 0, StepStatus::OutOfBudget});
  while (!stack.empty()) {
    Node n = std::move(stack.back());
    stack.pop_back();
    n.status = n.proc->advance(n.steps, node_budget);
    if (!settle(n, max_depth, r)) continue;
    Node one{n.proc->clone(), n.path.with(true), n.steps, StepStatus::OutOfBudget};
    one.proc->supply(true);
    n.proc->supply(false);
    n.path.push_back(false);
    stack.push_back(std::move(one));
    stack.push_back(std::move(n));
  }

  ShortLex order;
  std::sort(r.halting.begin(), r.halting.end(),
            [&](const HaltingEntry& a, const HaltingEntry& b) { return order(a.program, b.program); });
  std::sort(r.frontier.begin(), r.frontier.end(),
            [&](const FrontierEntry& a, const FrontierEntry& b) { return order(a.path, b.path); });
  std::sort(r.diverged.begin(), r.diverged.end(), order);
  return r;
}

bool check_prefix_free(std::span<const BitString> s) {
  std::vector<BitString> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  // In lexicographic order a string is immediately followed by its extensions.
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i - 1].is_prefix_of(sorted[i])) return false;
  return true;
}

Dyadic kraft_sum(std::span<const BitString> s) {
  std::size_t deepest = 0;
  for (const auto& x : s) deepest = std::max(deepest, x.size());
  mpz_class total = 0;
  for (const auto& x : s) {
    mpz_class term = 1;
    term <<= static_cast<mp_bitcnt_t>(deepest - x.size());
    total += term;
  }
  return Dyadic(total, static_cast<std::uint32_t>(deepest));
}

}  // namespace ptm
