#include "ptm/table_machine.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "ptm/errors.hpp"

namespace ptm {

namespace {

State next_state(const Action& a) {
  if (auto w = std::get_if<WriteAction>(&a)) return w->next;
  if (auto e = std::get_if<EmitAction>(&a)) return e->next;
  return 0;
}

// Work tape unbounded in both directions; cells default to blank.
class Tape {
 public:
  Symbol read() const {
    if (head_ >= 0) {
      auto i = static_cast<std::size_t>(head_);
      return i < right_.size() ? right_[i] : Symbol::Blank;
    }
    auto i = static_cast<std::size_t>(-head_ - 1);
    return i < left_.size() ? left_[i] : Symbol::Blank;
  }

  void write(Symbol s) {
    auto& side = head_ >= 0 ? right_ : left_;
    auto i = static_cast<std::size_t>(head_ >= 0 ? head_ : -head_ - 1);
    if (i >= side.size()) {
      if (s == Symbol::Blank) return;
      side.resize(i + 1, Symbol::Blank);
    }
    side[i] = s;
  }

  void move(Move m) { head_ += (m == Move::Right) ? 1 : -1; }

 private:
  std::vector<Symbol> right_;  // cells 0, 1, 2, ..
  std::vector<Symbol> left_;   // cells -1, -2, ..
  std::int64_t head_ = 0;
};

class TableProcess final : public Process {
 public:
  explicit TableProcess(const TableMachine& m) : m_(&m) {}

  std::unique_ptr<Process> clone() const override { return std::make_unique<TableProcess>(*this); }

  StepStatus advance(std::uint64_t& steps, std::uint64_t budget) override {
    if (halted_) return StepStatus::Halted;
    while (steps < budget) {
      ++steps;
      const Action& a = m_->action(state_, tape_.read());
      if (auto w = std::get_if<WriteAction>(&a)) {
        tape_.write(w->symbol);
        tape_.move(w->move);
        state_ = w->next;
      } else if (auto r = std::get_if<ReadAction>(&a)) {
        pending_ = *r;
        return StepStatus::NeedBit;
      } else if (auto e = std::get_if<EmitAction>(&a)) {
        output_.push_back(e->bit);
        state_ = e->next;
      } else {
        halted_ = true;
        return StepStatus::Halted;
      }
    }
    return StepStatus::OutOfBudget;
  }

  void supply(bool bit) override { state_ = bit ? pending_.on_one : pending_.on_zero; }

  const BitString& output() const override { return output_; }

 private:
  const TableMachine* m_;
  Tape tape_;
  State state_ = 0;
  ReadAction pending_{0, 0};
  BitString output_;
  bool halted_ = false;
};

char symbol_char(Symbol s) {
  switch (s) {
    case Symbol::Zero:
      return '0';
    case Symbol::One:
      return '1';
    case Symbol::Blank:
      return 'B';
  }
  return '?';
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::uint32_t parse_state(const std::string& tok, int line_no) {
  std::uint32_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": bad state '" + tok + "'");
  return v;
}

Symbol parse_symbol(const std::string& tok, int line_no) {
  if (tok == "0") return Symbol::Zero;
  if (tok == "1") return Symbol::One;
  if (tok == "B") return Symbol::Blank;
  throw ParseError("line " + std::to_string(line_no) + ": bad symbol '" + tok + "'");
}

}  // namespace

TableMachine::TableMachine(std::uint32_t state_count, std::vector<Action> actions)
    : state_count_(state_count), actions_(std::move(actions)) {
  if (state_count_ == 0) throw std::invalid_argument("table machine needs at least one state");
  if (actions_.size() != static_cast<std::size_t>(state_count_) * kSymbols)
    throw std::invalid_argument("transition table is not total");
  for (const auto& a : actions_) {
    if (auto r = std::get_if<ReadAction>(&a)) {
      if (r->on_zero >= state_count_ || r->on_one >= state_count_)
        throw std::invalid_argument("read names a missing state");
    } else if (next_state(a) >= state_count_) {
      throw std::invalid_argument("transition names a missing state");
    }
  }
}

std::unique_ptr<Process> TableMachine::start() const { return std::make_unique<TableProcess>(*this); }

std::string TableMachine::describe() const {
  return "table(" + std::to_string(state_count_) + " states)";
}

TableMachine TableMachine::parse(std::string_view text) {
  struct Row {
    State state;
    Symbol symbol;
    Action action;
  };
  std::vector<Row> rows;
  std::uint32_t max_state = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw ParseError("line " + std::to_string(line_no) + ": " + why);
    };
    if (tok.size() < 4 || tok[2] != "->") fail("expected 'state symbol -> action'");
    Row row{parse_state(tok[0], line_no), parse_symbol(tok[1], line_no), HaltAction{}};
    const std::string& op = tok[3];
    auto track = [&](State s) { max_state = std::max(max_state, s); return s; };
    if (op == "halt" && tok.size() == 4) {
      row.action = HaltAction{};
    } else if (op == "read" && tok.size() == 6) {
      row.action = ReadAction{track(parse_state(tok[4], line_no)), track(parse_state(tok[5], line_no))};
    } else if (op == "emit" && tok.size() == 7 && tok[5] == "goto") {
      if (tok[4] != "0" && tok[4] != "1") fail("emit takes a bit");
      row.action = EmitAction{tok[4] == "1", track(parse_state(tok[6], line_no))};
    } else if (op == "write" && tok.size() == 9 && tok[5] == "move" && tok[7] == "goto") {
      Move mv;
      if (tok[6] == "L") {
        mv = Move::Left;
      } else if (tok[6] == "R") {
        mv = Move::Right;
      } else {
        fail("move must be L or R");
      }
      row.action = WriteAction{parse_symbol(tok[4], line_no), mv, track(parse_state(tok[8], line_no))};
    } else {
      fail("unrecognized action");
    }
    track(row.state);
    rows.push_back(row);
  }
  if (rows.empty()) throw ParseError("machine file has no transitions");
  std::uint32_t n = max_state + 1;
  std::vector<Action> actions(static_cast<std::size_t>(n) * kSymbols, HaltAction{});
  std::vector<bool> seen(actions.size(), false);
  for (const auto& r : rows) {
    auto k = static_cast<std::size_t>(r.state) * kSymbols + static_cast<int>(r.symbol);
    if (seen[k]) {
      throw ParseError("duplicate transition for state " + std::to_string(r.state) + " symbol " +
                       symbol_char(r.symbol));
    }
    seen[k] = true;
    actions[k] = r.action;
  }
  return TableMachine(n, std::move(actions));
}

std::string TableMachine::to_text() const {
  std::ostringstream out;
  for (State s = 0; s < state_count_; ++s) {
    for (int sym = 0; sym < kSymbols; ++sym) {
      out << s << ' ' << symbol_char(static_cast<Symbol>(sym)) << " -> ";
      const Action& a = actions_[s * kSymbols + sym];
      if (auto w = std::get_if<WriteAction>(&a)) {
        out << "write " << symbol_char(w->symbol) << " move " << (w->move == Move::Left ? 'L' : 'R')
            << " goto " << w->next;
      } else if (auto r = std::get_if<ReadAction>(&a)) {
        out << "read " << r->on_zero << ' ' << r->on_one;
      } else if (auto e = std::get_if<EmitAction>(&a)) {
        out << "emit " << (e->bit ? 1 : 0) << " goto " << e->next;
      } else {
        out << "halt";
      }
      out << '\n';
    }
  }
  return out.str();
}

TableMachine halt0_machine() {
  // 0: read; 1: walk left forever; 2: halt. Only the blank column is ever
  // consulted; the rest stay halt so the index remains small.
  std::vector<Action> a(9, HaltAction{});
  a[0 * 3 + 2] = ReadAction{2, 1};
  a[1 * 3 + 2] = WriteAction{Symbol::Blank, Move::Left, 1};
  return TableMachine(3, std::move(a));
}

}  // namespace ptm
