#include "ptm/gated.hpp"

#include "ptm/enumeration.hpp"
#include "ptm/errors.hpp"

namespace ptm {

namespace {

class GatedProcess final : public Process {
 public:
  GatedProcess(const GatedMachine& g, std::unique_ptr<Process> base) : g_(&g), base_(std::move(base)) {}
  GatedProcess(const GatedProcess& o)
      : g_(o.g_), base_(o.base_->clone()), consumed_(o.consumed_), gating_(o.gating_), j_(o.j_),
        halted_(o.halted_) {}

  std::unique_ptr<Process> clone() const override { return std::make_unique<GatedProcess>(*this); }

  StepStatus advance(std::uint64_t& steps, std::uint64_t budget) override {
    if (halted_) return StepStatus::Halted;
    if (!gating_) {
      StepStatus s = base_->advance(steps, budget);
      if (s != StepStatus::Halted) return s;
      gating_ = true;
    }
    // One step per gate probe j; the run halts on the probe that succeeds.
    while (steps < budget) {
      ++steps;
      ++j_;
      if (g_->range_count_at(j_) > consumed_) {
        halted_ = true;
        return StepStatus::Halted;
      }
    }
    return StepStatus::OutOfBudget;
  }

  void supply(bool bit) override {
    ++consumed_;
    base_->supply(bit);
  }

  const BitString& output() const override { return base_->output(); }

 private:
  const GatedMachine* g_;
  std::unique_ptr<Process> base_;
  std::uint64_t consumed_ = 0;
  bool gating_ = false;
  std::size_t j_ = 0;
  bool halted_ = false;
};

}  // namespace

GatedMachine::GatedMachine(PRTerm gate, std::shared_ptr<const Machine> base)
    : gate_(std::move(gate)), base_(std::move(base)) {
  if (gate_.arity() != 1) throw ArityMismatch("gate term must be unary");
}

std::size_t GatedMachine::range_count_at(std::size_t j) const {
  std::lock_guard lock(mutex_);
  while (counts_.size() <= j) {
    const unsigned long x = counts_.size();
    seen_.insert(eval_pr(gate_, {x}));
    counts_.push_back(seen_.size());
  }
  return counts_[j];
}

std::unique_ptr<Process> GatedMachine::start() const {
  return std::make_unique<GatedProcess>(*this, base_->start());
}

std::string GatedMachine::describe() const { return "gate " + gate_.str(); }

GatedMachine build_gated(const PRTerm& t) { return GatedMachine(t, universal_machine_ptr()); }

GatedMachine gated_from_index(const mpz_class& i) { return build_gated(pr_from_index(i)); }

}  // namespace ptm
