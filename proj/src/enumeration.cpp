#include "ptm/enumeration.hpp"

#include <bit>
#include <stdexcept>

namespace ptm {

BitString elias_gamma(std::uint64_t n) {
  std::uint64_t v = n + 1;
  int width = std::bit_width(v);
  BitString s = BitString::zeros(static_cast<std::size_t>(width - 1));
  for (int b = width - 1; b >= 0; --b) s.push_back((v >> b) & 1u);
  return s;
}

// ---------------------------------------------------------------------------
// PRINT

namespace {

class PrintProcess final : public Process {
 public:
  std::unique_ptr<Process> clone() const override { return std::make_unique<PrintProcess>(*this); }

  StepStatus advance(std::uint64_t& steps, std::uint64_t budget) override {
    for (;;) {
      if (phase_ == Phase::Done) return StepStatus::Halted;
      if (steps >= budget) return StepStatus::OutOfBudget;
      ++steps;
      switch (phase_) {
        case Phase::Zeros:
        case Phase::Value:
        case Phase::CopyRead:
          return StepStatus::NeedBit;
        case Phase::CopyEmit:
          output_.push_back(pending_);
          --remaining_;
          phase_ = remaining_ ? Phase::CopyRead : Phase::Halt;
          break;
        case Phase::Halt:
          phase_ = Phase::Done;
          return StepStatus::Halted;
        case Phase::Done:
          break;
      }
    }
  }

  void supply(bool bit) override {
    switch (phase_) {
      case Phase::Zeros:
        if (!bit) {
          ++zeros_;
        } else {
          value_ = 1;
          value_bits_left_ = zeros_;
          if (value_bits_left_ == 0) begin_copy();
          else phase_ = Phase::Value;
        }
        break;
      case Phase::Value:
        value_ = (value_ << 1) | (bit ? 1u : 0u);
        if (--value_bits_left_ == 0) begin_copy();
        break;
      case Phase::CopyRead:
        pending_ = bit;
        phase_ = Phase::CopyEmit;
        break;
      default:
        break;
    }
  }

  const BitString& output() const override { return output_; }

 private:
  enum class Phase { Zeros, Value, CopyRead, CopyEmit, Halt, Done };

  void begin_copy() {
    remaining_ = value_ - 1;
    phase_ = remaining_ ? Phase::CopyRead : Phase::Halt;
  }

  Phase phase_ = Phase::Zeros;
  std::uint64_t zeros_ = 0;
  std::uint64_t value_ = 0;
  std::uint64_t value_bits_left_ = 0;
  std::uint64_t remaining_ = 0;
  bool pending_ = false;
  BitString output_;
};

// ---------------------------------------------------------------------------
// Index layout. The payload of index i >= 1 is the bit stream of i - 1 read
// least-significant bit first, padded with zeros forever:
//
//   state count   k ones then a zero; state_count = k + 1
//   per action    3 * state_count actions, row-major over (state, 0/1/B)
//     opcode      2 bits (first bit is the low bit): 0 halt, 1 write, 2 read, 3 emit
//     write       symbol 2 bits (0, 1, 2 = B; 3 invalid), move 1 bit (0 L, 1 R), next
//     read        next-on-0, next-on-1
//     emit        bit, next
//   states use w = ceil(log2(state_count)) bits, low bit first; a value
//   >= state_count is invalid
//
// A payload is valid iff nothing is invalid and every bit past the last field
// is zero. So decoding is total and each table has exactly one index.

class PayloadReader {
 public:
  explicit PayloadReader(const mpz_class& v) : v_(v) {}
  bool bit() { return mpz_tstbit(v_.get_mpz_t(), pos_++) != 0; }
  std::uint64_t bits(unsigned width) {
    std::uint64_t r = 0;
    for (unsigned b = 0; b < width; ++b)
      if (bit()) r |= (std::uint64_t{1} << b);
    return r;
  }
  bool rest_is_zero() const {
    return mpz_sizeinbase(v_.get_mpz_t(), 2) <= pos_ || v_ == 0;
  }
  mp_bitcnt_t pos() const { return pos_; }

 private:
  const mpz_class& v_;
  mp_bitcnt_t pos_ = 0;
};

unsigned state_width(std::uint32_t n) {
  return n <= 1 ? 0u : static_cast<unsigned>(std::bit_width(n - 1));
}

// Guard against absurd state counts from adversarial indices.
constexpr std::uint32_t kMaxDecodedStates = 1u << 20;

}  // namespace

std::unique_ptr<Process> PrintMachine::start() const { return std::make_unique<PrintProcess>(); }

std::optional<TableMachine> decode_table(const MachineIndex& i) {
  if (i.value <= 0) return std::nullopt;
  mpz_class payload = i.value - 1;
  PayloadReader in(payload);

  std::uint32_t n = 1;
  while (in.bit()) {
    if (++n > kMaxDecodedStates) return std::nullopt;
  }
  const unsigned w = state_width(n);
  std::vector<Action> actions;
  actions.reserve(static_cast<std::size_t>(n) * TableMachine::kSymbols);
  bool bad = false;
  auto state = [&]() -> State {
    auto s = in.bits(w);
    if (s >= n) bad = true;
    return static_cast<State>(s);
  };
  for (std::size_t k = 0; k < static_cast<std::size_t>(n) * TableMachine::kSymbols; ++k) {
    unsigned op = (in.bit() ? 1u : 0u) | (in.bit() ? 2u : 0u);
    switch (op) {
      case 0:
        actions.emplace_back(HaltAction{});
        break;
      case 1: {
        unsigned sym = (in.bit() ? 1u : 0u) | (in.bit() ? 2u : 0u);
        if (sym == 3) return std::nullopt;
        Move mv = in.bit() ? Move::Right : Move::Left;
        State next = state();
        actions.emplace_back(WriteAction{static_cast<Symbol>(sym), mv, next});
        break;
      }
      case 2: {
        State z = state();
        State o = state();
        actions.emplace_back(ReadAction{z, o});
        break;
      }
      default: {
        bool b = in.bit();
        State next = state();
        actions.emplace_back(EmitAction{b, next});
        break;
      }
    }
    if (bad) return std::nullopt;
  }
  if (!in.rest_is_zero()) return std::nullopt;
  return TableMachine(n, std::move(actions));
}

MachineIndex encode_machine(const TableMachine& m) {
  mpz_class v = 0;
  mp_bitcnt_t pos = 0;
  auto put = [&](bool b) {
    if (b) mpz_setbit(v.get_mpz_t(), pos);
    ++pos;
  };
  auto put_bits = [&](std::uint64_t x, unsigned width) {
    for (unsigned b = 0; b < width; ++b) put((x >> b) & 1u);
  };
  const std::uint32_t n = m.state_count();
  const unsigned w = state_width(n);
  for (std::uint32_t k = 1; k < n; ++k) put(true);
  put(false);
  for (const Action& a : m.actions()) {
    if (std::holds_alternative<HaltAction>(a)) {
      put_bits(0, 2);
    } else if (auto wr = std::get_if<WriteAction>(&a)) {
      put_bits(1, 2);
      put_bits(static_cast<unsigned>(wr->symbol), 2);
      put(wr->move == Move::Right);
      put_bits(wr->next, w);
    } else if (auto r = std::get_if<ReadAction>(&a)) {
      put_bits(2, 2);
      put_bits(r->on_zero, w);
      put_bits(r->on_one, w);
    } else {
      const auto& e = std::get<EmitAction>(a);
      put_bits(3, 2);
      put(e.bit);
      put_bits(e.next, w);
    }
  }
  return MachineIndex(mpz_class(v + 1));
}

std::shared_ptr<const Machine> decode_machine(const MachineIndex& i) {
  if (i.value == 0) return std::make_shared<PrintMachine>();
  if (auto t = decode_table(i)) return std::make_shared<TableMachine>(std::move(*t));
  return std::make_shared<DivergeMachine>();
}

BitString u_encode(std::uint64_t i, const BitString& x) {
  BitString p = BitString::zeros(i);
  p.push_back(true);
  p.append(x);
  return p;
}

// ---------------------------------------------------------------------------
// U

namespace {

class UniversalProcess final : public Process {
 public:
  explicit UniversalProcess(const UniversalMachine& u) : u_(&u) {}

  UniversalProcess(const UniversalProcess& o)
      : u_(o.u_), zeros_(o.zeros_), machine_(o.machine_), inner_(o.inner_ ? o.inner_->clone() : nullptr) {}

  std::unique_ptr<Process> clone() const override { return std::make_unique<UniversalProcess>(*this); }

  StepStatus advance(std::uint64_t& steps, std::uint64_t budget) override {
    if (inner_) return inner_->advance(steps, budget);
    if (steps >= budget) return StepStatus::OutOfBudget;
    ++steps;
    return StepStatus::NeedBit;
  }

  void supply(bool bit) override {
    if (inner_) {
      inner_->supply(bit);
    } else if (!bit) {
      ++zeros_;
    } else {
      machine_ = u_->component(zeros_);
      inner_ = machine_->start();
    }
  }

  const BitString& output() const override { return inner_ ? inner_->output() : empty_; }

 private:
  const UniversalMachine* u_;
  std::uint64_t zeros_ = 0;
  std::shared_ptr<const Machine> machine_;  // keeps inner_'s machine alive
  std::unique_ptr<Process> inner_;
  BitString empty_;
};

}  // namespace

std::unique_ptr<Process> UniversalMachine::start() const {
  return std::make_unique<UniversalProcess>(*this);
}

std::shared_ptr<const Machine> UniversalMachine::component(std::uint64_t i) const {
  std::lock_guard lock(mutex_);
  auto& slot = cache_[i];
  if (!slot) slot = decode_machine(MachineIndex(i));
  return slot;
}

std::shared_ptr<const Machine> universal_machine_ptr() {
  static const auto u = std::make_shared<UniversalMachine>();
  return u;
}

const UniversalMachine& universal_machine() {
  return static_cast<const UniversalMachine&>(*universal_machine_ptr());
}

RunResult run_universal(const BitString& p, std::uint64_t budget) {
  return run_machine(universal_machine(), p, budget);
}

SimulationConstant simulation_constant(std::uint64_t i) { return {i, i + 1}; }

}  // namespace ptm
