#include "ptm/codebook_machine.hpp"

#include <sstream>
#include <stdexcept>

#include "ptm/errors.hpp"

namespace ptm {

namespace {

class CodebookProcess final : public Process {
 public:
  explicit CodebookProcess(const CodebookMachine& m) : m_(&m) {}

  std::unique_ptr<Process> clone() const override { return std::make_unique<CodebookProcess>(*this); }

  StepStatus advance(std::uint64_t& steps, std::uint64_t budget) override {
    if (node_ < 0) return StepStatus::Diverged;
    const auto& n = m_->trie()[static_cast<std::size_t>(node_)];
    if (n.entry < 0) {
      if (n.child[0] < 0 && n.child[1] < 0) return StepStatus::Diverged;
      if (steps >= budget) return StepStatus::OutOfBudget;
      ++steps;
      return StepStatus::NeedBit;
    }
    const BitString& target = m_->entries()[static_cast<std::size_t>(n.entry)].second;
    while (output_.size() < target.size()) {
      if (steps >= budget) return StepStatus::OutOfBudget;
      ++steps;
      output_.push_back(target[output_.size()]);
    }
    if (!halted_) {
      if (steps >= budget) return StepStatus::OutOfBudget;
      ++steps;
      halted_ = true;
    }
    return StepStatus::Halted;
  }

  void supply(bool bit) override {
    node_ = m_->trie()[static_cast<std::size_t>(node_)].child[bit ? 1 : 0];
  }

  const BitString& output() const override { return output_; }

 private:
  const CodebookMachine* m_;
  int node_ = 0;
  BitString output_;
  bool halted_ = false;
};

}  // namespace

CodebookMachine::CodebookMachine(std::vector<Entry> entries)
    : entries_(std::move(entries)), trie_(1) {
  for (std::size_t e = 0; e < entries_.size(); ++e) {
    const BitString& w = entries_[e].first;
    std::size_t cur = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (trie_[cur].entry >= 0) throw std::invalid_argument("codebook is not prefix-free");
      int child = trie_[cur].child[w[i] ? 1 : 0];
      if (child < 0) {
        child = static_cast<int>(trie_.size());
        trie_[cur].child[w[i] ? 1 : 0] = child;
        trie_.emplace_back();
      }
      cur = static_cast<std::size_t>(child);
    }
    const Node& end = trie_[cur];
    if (end.entry >= 0 || end.child[0] >= 0 || end.child[1] >= 0)
      throw std::invalid_argument("codebook is not prefix-free");
    trie_[cur].entry = static_cast<int>(e);
  }
}

std::vector<BitString> CodebookMachine::codewords() const {
  std::vector<BitString> out;
  out.reserve(entries_.size());
  for (const auto& [w, _] : entries_) out.push_back(w);
  return out;
}

CodebookMachine CodebookMachine::parse(std::string_view text) {
  std::vector<Entry> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string w, arrow, out, extra;
    if (!(ls >> w)) continue;
    if (!(ls >> arrow >> out) || arrow != "->" || (ls >> extra))
      throw ParseError("line " + std::to_string(line_no) + ": expected 'codeword -> output'");
    entries.emplace_back(BitString::parse(w), BitString::parse(out));
  }
  try {
    return CodebookMachine(std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string CodebookMachine::to_text() const {
  std::string s;
  for (const auto& [w, out] : entries_) s += w.str() + " -> " + out.str() + "\n";
  return s;
}

std::unique_ptr<Process> CodebookMachine::start() const {
  return std::make_unique<CodebookProcess>(*this);
}

std::string CodebookMachine::describe() const {
  return "codebook(" + std::to_string(entries_.size()) + " codewords)";
}

}  // namespace ptm
