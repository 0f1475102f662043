#include "ptm/forge.hpp"

#include <stdexcept>

#include "ptm/enumeration.hpp"
#include "ptm/errors.hpp"
#include "ptm/explore.hpp"
#include "ptm/pr.hpp"

namespace ptm {

KCState::KCState() : KCState(std::vector<BitString>{BitString{}}) {}

KCState::KCState(std::vector<BitString> free_nodes) {
  if (!check_prefix_free(free_nodes)) throw std::invalid_argument("free nodes overlap");
  for (auto& node : free_nodes) {
    auto d = node.size();
    if (!free_.emplace(d, std::move(node)).second)
      throw std::invalid_argument("free nodes must have distinct depths");
  }
  initial_mass_ = free_mass();
}

Dyadic KCState::free_mass() const {
  auto nodes = free_nodes();
  return kraft_sum(nodes);
}

Dyadic KCState::allocated_mass() const {
  Dyadic m;
  for (const auto& [len, _] : allocated_) m += Dyadic::pow2_neg(static_cast<std::uint32_t>(len));
  return m;
}

std::vector<BitString> KCState::free_nodes() const {
  std::vector<BitString> out;
  out.reserve(free_.size());
  for (const auto& [_, node] : free_) out.push_back(node);
  return out;
}

BitString KCState::allocate(std::size_t n) {
  // Deepest free node with depth <= n. Depths are distinct, so if none exists
  // every free node is deeper than n and the free mass is below 2^-n.
  auto it = free_.upper_bound(n);
  if (it == free_.begin()) {
    throw KraftViolation("request 2^-" + std::to_string(n) + " exceeds free mass " +
                         free_mass().str());
  }
  --it;
  BitString node = std::move(it->second);
  const std::size_t d = it->first;
  free_.erase(it);
  // node 0^(n-d) is allocated; node 0^j 1 is freed at depth d+j+1 for
  // j < n-d. None of those depths were occupied: d was the deepest <= n.
  for (std::size_t depth = d + 1; depth <= n; ++depth) {
    BitString sibling = node.with(true);
    free_.emplace(depth, std::move(sibling));
    node.push_back(false);
  }
  allocated_.emplace_back(n, node);
  return node;
}

std::pair<BitString, KCState> kc_allocate(KCState state, std::size_t n) {
  BitString w = state.allocate(n);
  return {std::move(w), std::move(state)};
}

std::vector<std::uint32_t> dyadic_powers(const Dyadic& d) {
  std::vector<std::uint32_t> out;
  const mpz_class& num = d.numerator();
  const std::uint32_t e = d.exponent();
  if (num == 0) return out;
  // value = sum over set bits b of num of 2^(b - e); the highest bit first.
  for (auto b = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) - 1; b >= 0; --b) {
    if (!mpz_tstbit(num.get_mpz_t(), static_cast<mp_bitcnt_t>(b))) continue;
    if (static_cast<std::uint32_t>(b) > e) throw std::invalid_argument("increment exceeds 1");
    out.push_back(e - static_cast<std::uint32_t>(b));
  }
  return out;
}

std::vector<CodebookMachine::Entry> Forger::push_increment(const Dyadic& delta) {
  if (delta.is_zero()) throw std::invalid_argument("increments must be positive");
  if (delta > state_.free_mass()) {
    throw KraftViolation("increment " + delta.str() + " exceeds remaining mass " +
                         state_.free_mass().str());
  }
  std::vector<CodebookMachine::Entry> added;
  for (std::uint32_t len : dyadic_powers(delta)) {
    BitString w = state_.allocate(len);
    added.emplace_back(std::move(w), nat_to_string(static_cast<std::uint64_t>(entries_.size())));
    entries_.push_back(added.back());
  }
  current_ += delta;
  started_ = true;
  return added;
}

std::vector<CodebookMachine::Entry> Forger::push_target(const Dyadic& q) {
  if (started_ ? q <= current_ : q < current_)
    throw std::invalid_argument("targets must be strictly increasing");
  if (q == current_) {
    // The first target may be 0: nothing to allocate.
    started_ = true;
    return {};
  }
  return push_increment(q - current_);
}

CodebookMachine forge_machine(std::span<const Dyadic> q) {
  Forger f;
  for (const auto& v : q) f.push_target(v);
  return f.machine();
}

// ---------------------------------------------------------------------------

namespace {

class SplicedProcess final : public Process {
 public:
  SplicedProcess(const SplicedMachine& m, const Machine& u) : m_(&m), u_(&u) {}
  SplicedProcess(const SplicedProcess& o)
      : m_(o.m_), u_(o.u_), read_(o.read_), inner_(o.inner_ ? o.inner_->clone() : nullptr) {}

  std::unique_ptr<Process> clone() const override { return std::make_unique<SplicedProcess>(*this); }

  StepStatus advance(std::uint64_t& steps, std::uint64_t budget) override {
    if (inner_) return inner_->advance(steps, budget);
    if (steps >= budget) return StepStatus::OutOfBudget;
    ++steps;
    return StepStatus::NeedBit;
  }

  void supply(bool bit) override {
    if (inner_) {
      inner_->supply(bit);
      return;
    }
    read_.push_back(bit);
    if (read_.size() == 2 && !read_[0] && !read_[1]) {
      inner_ = u_->start();
    } else if (read_[0] || read_.size() == 2) {
      // Replay the routing bits into the codebook walk; those reads were
      // already charged here.
      inner_ = m_->forged().start();
      std::uint64_t scratch = 0;
      for (std::size_t k = 0; k < read_.size(); ++k) {
        if (inner_->advance(scratch, scratch + 1) != StepStatus::NeedBit) break;
        inner_->supply(read_[k]);
      }
    }
  }

  const BitString& output() const override { return inner_ ? inner_->output() : empty_; }

 private:
  const SplicedMachine* m_;
  const Machine* u_;
  BitString read_;
  std::unique_ptr<Process> inner_;
  BitString empty_;
};

}  // namespace

SplicedMachine::SplicedMachine(CodebookMachine forged, std::shared_ptr<const Machine> universal)
    : forged_(std::move(forged)), universal_(std::move(universal)) {
  for (const auto& w : forged_.codewords()) {
    if (w.size() < 2 ? !(w.size() == 1 && w[0]) : (!w[0] && !w[1]))
      throw std::invalid_argument("forged codewords must avoid the 00 branch");
  }
}

std::unique_ptr<Process> SplicedMachine::start() const {
  return std::make_unique<SplicedProcess>(*this, *universal_);
}

std::string SplicedMachine::describe() const {
  return "spliced(universal under 00, " + forged_.describe() + ")";
}

SplicedMachine forge_universal(std::span<const Dyadic> q) {
  Forger f(KCState({BitString::parse("1"), BitString::parse("01")}));
  for (const auto& v : q) f.push_target(v);
  return SplicedMachine(f.machine(), universal_machine_ptr());
}

}  // namespace ptm
