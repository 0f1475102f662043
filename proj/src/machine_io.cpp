#include "ptm/machine_io.hpp"

#include <fstream>
#include <sstream>

#include "ptm/codebook_machine.hpp"
#include "ptm/enumeration.hpp"
#include "ptm/errors.hpp"
#include "ptm/gated.hpp"
#include "ptm/pr.hpp"
#include "ptm/table_machine.hpp"

namespace ptm {

namespace {

std::string strip(std::string s) {
  if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::shared_ptr<const Machine> parse_directive(const std::string& line) {
  std::istringstream in(line);
  std::string word;
  in >> word;
  std::string rest;
  std::getline(in, rest);
  rest = strip(rest);
  if (word == "universal" && rest.empty()) return universal_machine_ptr();
  if (word == "diverge" && rest.empty()) return std::make_shared<DivergeMachine>();
  if (word == "print" && rest.empty()) return std::make_shared<PrintMachine>();
  if (word == "index") {
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("index directive needs a decimal natural");
    return decode_machine(MachineIndex(mpz_class(rest, 10)));
  }
  if (word == "gate") {
    auto g = std::make_shared<GatedMachine>(PRTerm::parse(rest), universal_machine_ptr());
    return g;
  }
  throw ParseError("unrecognized machine file line: " + line);
}

}  // namespace

std::shared_ptr<const Machine> parse_machine(std::string_view text) {
  enum class Kind { None, Table, Codebook, Directive } kind = Kind::None;
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = strip(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string a, b;
    ls >> a >> b;
    Kind k = b == "->" ? Kind::Codebook : (line.find("->") != std::string::npos ? Kind::Table : Kind::Directive);
    if (kind != Kind::None && (k != kind || k == Kind::Directive))
      throw ParseError("machine file mixes line kinds");
    kind = k;
    lines.push_back(line);
  }
  switch (kind) {
    case Kind::None:
      throw ParseError("empty machine file");
    case Kind::Directive:
      return parse_directive(lines.front());
    case Kind::Codebook:
      return std::make_shared<CodebookMachine>(CodebookMachine::parse(text));
    case Kind::Table:
      try {
        return std::make_shared<TableMachine>(TableMachine::parse(text));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
  }
  throw ParseError("unreachable");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::shared_ptr<const Machine> load_machine_file(const std::string& path) {
  return parse_machine(read_file(path));
}

}  // namespace ptm
