#include "ptm/machine.hpp"

namespace ptm {

std::string to_string(RunResult::Kind kind) {
  switch (kind) {
    case RunResult::Kind::Halted:
      return "halted";
    case RunResult::Kind::OutOfBudget:
      return "out-of-budget";
    case RunResult::Kind::InputExhausted:
      return "input-exhausted";
  }
  return "?";
}

RunResult run_machine(const Machine& m, const BitString& x, std::uint64_t budget) {
  auto proc = m.start();
  RunResult r;
  for (;;) {
    switch (proc->advance(r.steps, budget)) {
      case StepStatus::NeedBit:
        if (r.consumed == x.size()) {
          r.kind = RunResult::Kind::InputExhausted;
          return r;
        }
        proc->supply(x[r.consumed++]);
        break;
      case StepStatus::Halted:
        r.kind = RunResult::Kind::Halted;
        r.output = proc->output();
        return r;
      case StepStatus::Diverged:
        r.steps = budget;
        [[fallthrough]];
      case StepStatus::OutOfBudget:
        r.kind = RunResult::Kind::OutOfBudget;
        return r;
    }
  }
}

namespace {

class DivergeProcess final : public Process {
 public:
  std::unique_ptr<Process> clone() const override { return std::make_unique<DivergeProcess>(); }
  StepStatus advance(std::uint64_t&, std::uint64_t) override { return StepStatus::Diverged; }
  void supply(bool) override {}
  const BitString& output() const override { return output_; }

 private:
  BitString output_;
};

}  // namespace

std::unique_ptr<Process> DivergeMachine::start() const { return std::make_unique<DivergeProcess>(); }

}  // namespace ptm
