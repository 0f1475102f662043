#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ptm/bitstring.hpp"

namespace ptm {

/// Length-lexicographic bijection N <-> {0,1}*: n is n+1 in binary with the
/// leading 1 dropped (0 <-> eps, 1 <-> "0", 2 <-> "1", 3 <-> "00", ...).
BitString nat_to_string(const mpz_class& n);
BitString nat_to_string(std::uint64_t n);
mpz_class string_to_nat(const BitString& x);

/// Primitive recursive term. Immutable; subterms are shared.
///
/// zero(k)          : N^k -> 0
/// succ             : x -> x + 1
/// proj(n, i)       : (x1..xn) -> xi, 1 <= i <= n
/// comp(f, g1..gm)  : x -> f(g1(x), .., gm(x)), f of arity m, all gj equal arity
/// primrec(b, s)    : h(0, y) = b(y), h(n+1, y) = s(n, h(n, y), y)
class PRTerm {
 public:
  enum class Kind { Zero, Succ, Proj, Comp, PrimRec };

  // The factories throw ArityMismatch on ill-formed terms.
  static PRTerm zero(std::size_t arity = 1);
  static PRTerm succ();
  static PRTerm proj(std::size_t n, std::size_t i);
  static PRTerm comp(PRTerm f, std::vector<PRTerm> gs);
  static PRTerm primrec(PRTerm base, PRTerm step);

  /// s-expression syntax: (zero [k]) (succ) (proj n i) (comp f g..) (primrec b s)
  static PRTerm parse(std::string_view text);
  std::string str() const;

  Kind kind() const { return node_->kind; }
  std::size_t arity() const { return node_->arity; }
  /// proj's index (1-based); 0 otherwise.
  std::size_t index() const { return node_->index; }
  const std::vector<PRTerm>& children() const { return node_->children; }

 private:
  struct Node {
    Kind kind;
    std::size_t arity;
    std::size_t index;
    std::vector<PRTerm> children;
  };
  explicit PRTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Throws ArityMismatch when args.size() != arity(t).
mpz_class eval_pr(const PRTerm& t, std::span<const mpz_class> args);
mpz_class eval_pr(const PRTerm& t, std::initializer_list<unsigned long> args);

/// Number of distinct values among t(1), ..., t(j). Needs a unary term.
std::size_t range_count(const PRTerm& t, std::size_t j);

/// Goedel coding term <-> natural. pr_from_index is total: codes that do not
/// parse, or parse to a non-unary term, give the unary constant zero.
mpz_class pr_index(const PRTerm& t);
PRTerm pr_from_index(const mpz_class& i);

namespace terms {
PRTerm identity();                 // x
PRTerm constant(unsigned long c);  // unary constant
PRTerm add();                      // binary x + y
PRTerm is_zero();                  // 1 if x = 0 else 0
PRTerm parity();                   // x mod 2
PRTerm mod(unsigned long k);       // x mod k, k >= 1
}  // namespace terms

}  // namespace ptm
