#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ptm/dyadic.hpp"
#include "ptm/machine.hpp"

namespace ptm {

/// Machine given by an explicit finite prefix-free codebook. It reads input
/// bits while the bits read so far extend to some codeword; on a complete
/// codeword it emits the mapped output and halts. Once no codeword can be
/// reached it diverges (certified: StepStatus::Diverged).
///
/// Step cost: one per read, one per emitted bit, one for the halt.
class CodebookMachine final : public Machine {
 public:
  using Entry = std::pair<BitString, BitString>;  // codeword -> output

  /// Throws std::invalid_argument if the codewords are not prefix-free.
  explicit CodebookMachine(std::vector<Entry> entries);

  /// Parses `codeword -> output` lines (`#` comments, `-` for empty).
  static CodebookMachine parse(std::string_view text);
  std::string to_text() const;

  const std::vector<Entry>& entries() const { return entries_; }
  std::vector<BitString> codewords() const;

  std::unique_ptr<Process> start() const override;
  std::string describe() const override;

  struct Node {
    int child[2] = {-1, -1};
    int entry = -1;  // index into entries_ when a codeword ends here
  };
  const std::vector<Node>& trie() const { return trie_; }

 private:
  std::vector<Entry> entries_;
  std::vector<Node> trie_;
};

}  // namespace ptm
