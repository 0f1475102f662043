#include "ptm/pr.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

#include "ptm/enumeration.hpp"
#include "ptm/errors.hpp"

namespace ptm {

BitString nat_to_string(const mpz_class& n) {
  mpz_class v = n + 1;
  BitString s;
  for (auto b = static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2)) - 2; b >= 0; --b)
    s.push_back(mpz_tstbit(v.get_mpz_t(), static_cast<mp_bitcnt_t>(b)) != 0);
  return s;
}

BitString nat_to_string(std::uint64_t n) { return nat_to_string(mpz_class(static_cast<unsigned long>(n))); }

mpz_class string_to_nat(const BitString& x) {
  mpz_class v = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    v <<= 1;
    if (x[i]) v += 1;
  }
  return v - 1;
}

// ---------------------------------------------------------------------------
// Construction

PRTerm PRTerm::zero(std::size_t arity) {
  return PRTerm(std::make_shared<const Node>(Node{Kind::Zero, arity, 0, {}}));
}

PRTerm PRTerm::succ() { return PRTerm(std::make_shared<const Node>(Node{Kind::Succ, 1, 0, {}})); }

PRTerm PRTerm::proj(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) throw ArityMismatch("proj needs 1 <= i <= n");
  return PRTerm(std::make_shared<const Node>(Node{Kind::Proj, n, i, {}}));
}

PRTerm PRTerm::comp(PRTerm f, std::vector<PRTerm> gs) {
  if (gs.empty()) throw ArityMismatch("comp needs at least one inner term");
  if (f.arity() != gs.size()) throw ArityMismatch("comp: outer arity differs from inner count");
  const std::size_t a = gs.front().arity();
  for (const auto& g : gs)
    if (g.arity() != a) throw ArityMismatch("comp: inner terms differ in arity");
  std::vector<PRTerm> children;
  children.reserve(gs.size() + 1);
  children.push_back(std::move(f));
  for (auto& g : gs) children.push_back(std::move(g));
  return PRTerm(std::make_shared<const Node>(Node{Kind::Comp, a, 0, std::move(children)}));
}

PRTerm PRTerm::primrec(PRTerm base, PRTerm step) {
  if (step.arity() != base.arity() + 2) throw ArityMismatch("primrec: step arity must be base arity + 2");
  const std::size_t a = base.arity() + 1;
  return PRTerm(std::make_shared<const Node>(Node{Kind::PrimRec, a, 0, {std::move(base), std::move(step)}}));
}

// ---------------------------------------------------------------------------
// Text form

std::string PRTerm::str() const {
  switch (kind()) {
    case Kind::Zero:
      return arity() == 1 ? "(zero)" : "(zero " + std::to_string(arity()) + ")";
    case Kind::Succ:
      return "(succ)";
    case Kind::Proj:
      return "(proj " + std::to_string(arity()) + " " + std::to_string(index()) + ")";
    case Kind::Comp: {
      std::string s = "(comp";
      for (const auto& c : children()) s += " " + c.str();
      return s + ")";
    }
    case Kind::PrimRec:
      return "(primrec " + children()[0].str() + " " + children()[1].str() + ")";
  }
  return "";
}

namespace {

class SexprParser {
 public:
  explicit SexprParser(std::string_view text) : text_(text) {}

  PRTerm parse_all() {
    PRTerm t = term();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("PR term, offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string atom() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a word");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t number() {
    std::string a = atom();
    std::size_t v = 0;
    for (char c : a) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected a number");
      v = v * 10 + static_cast<std::size_t>(c - '0');
      if (v > 1'000'000) fail("number too large");
    }
    return v;
  }

  PRTerm term() {
    expect('(');
    std::string head = atom();
    PRTerm t = PRTerm::succ();
    if (head == "zero") {
      t = peek(')') ? PRTerm::zero(1) : PRTerm::zero(number());
    } else if (head == "succ") {
      t = PRTerm::succ();
    } else if (head == "proj") {
      std::size_t n = number();
      std::size_t i = number();
      t = PRTerm::proj(n, i);
    } else if (head == "comp") {
      PRTerm f = term();
      std::vector<PRTerm> gs;
      while (!peek(')')) gs.push_back(term());
      t = PRTerm::comp(std::move(f), std::move(gs));
    } else if (head == "primrec") {
      PRTerm b = term();
      PRTerm s = term();
      t = PRTerm::primrec(std::move(b), std::move(s));
    } else {
      fail("unknown term '" + head + "'");
    }
    expect(')');
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PRTerm PRTerm::parse(std::string_view text) { return SexprParser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

mpz_class eval(const PRTerm& t, std::span<const mpz_class> args) {
  switch (t.kind()) {
    case PRTerm::Kind::Zero:
      return 0;
    case PRTerm::Kind::Succ:
      return args[0] + 1;
    case PRTerm::Kind::Proj:
      return args[t.index() - 1];
    case PRTerm::Kind::Comp: {
      const auto& c = t.children();
      std::vector<mpz_class> inner;
      inner.reserve(c.size() - 1);
      for (std::size_t k = 1; k < c.size(); ++k) inner.push_back(eval(c[k], args));
      return eval(c[0], inner);
    }
    case PRTerm::Kind::PrimRec: {
      const auto& base = t.children()[0];
      const auto& step = t.children()[1];
      // step args: (counter, accumulator, y...)
      std::vector<mpz_class> sargs(args.size() + 1);
      for (std::size_t k = 1; k < args.size(); ++k) sargs[k + 1] = args[k];
      mpz_class acc = eval(base, args.subspan(1));
      for (mpz_class n = 0; n < args[0]; ++n) {
        sargs[0] = n;
        sargs[1] = acc;
        acc = eval(step, sargs);
      }
      return acc;
    }
  }
  return 0;
}

}  // namespace

mpz_class eval_pr(const PRTerm& t, std::span<const mpz_class> args) {
  if (args.size() != t.arity()) {
    throw ArityMismatch("term of arity " + std::to_string(t.arity()) + " applied to " +
                        std::to_string(args.size()) + " arguments");
  }
  return eval(t, args);
}

mpz_class eval_pr(const PRTerm& t, std::initializer_list<unsigned long> args) {
  std::vector<mpz_class> v;
  for (auto a : args) v.emplace_back(a);
  return eval_pr(t, v);
}

std::size_t range_count(const PRTerm& t, std::size_t j) {
  if (t.arity() != 1) throw ArityMismatch("range_count needs a unary term");
  std::set<mpz_class> seen;
  std::vector<mpz_class> arg(1);
  for (std::size_t x = 1; x <= j; ++x) {
    arg[0] = static_cast<unsigned long>(x);
    seen.insert(eval(t, arg));
  }
  return seen.size();
}

// ---------------------------------------------------------------------------
// Goedel coding. Prefix code over term trees:
//   zero k  00 gamma(k)        succ        01
//   proj    100 gamma(n) gamma(i)
//   comp    101 gamma(m-1) f g1 .. gm       primrec  11 base step
// with gamma the Elias code of v+1. The index is the code's position in
// length-lexicographic order.

namespace {

void put_gamma(BitString& out, std::size_t v) { out.append(elias_gamma(v)); }

void put_term(BitString& out, const PRTerm& t) {
  switch (t.kind()) {
    case PRTerm::Kind::Zero:
      out.append(BitString::parse("00"));
      put_gamma(out, t.arity());
      break;
    case PRTerm::Kind::Succ:
      out.append(BitString::parse("01"));
      break;
    case PRTerm::Kind::Proj:
      out.append(BitString::parse("100"));
      put_gamma(out, t.arity());
      put_gamma(out, t.index());
      break;
    case PRTerm::Kind::Comp:
      out.append(BitString::parse("101"));
      put_gamma(out, t.children().size() - 2);
      for (const auto& c : t.children()) put_term(out, c);
      break;
    case PRTerm::Kind::PrimRec:
      out.append(BitString::parse("11"));
      put_term(out, t.children()[0]);
      put_term(out, t.children()[1]);
      break;
  }
}

class CodeReader {
 public:
  explicit CodeReader(const BitString& s) : s_(s) {}
  bool done() const { return pos_ == s_.size(); }

  bool bit() {
    if (pos_ >= s_.size()) throw ParseError("truncated code");
    return s_[pos_++];
  }

  std::size_t gamma() {
    int zeros = 0;
    while (!bit())
      if (++zeros > 30) throw ParseError("gamma too long");
    std::size_t x = 1;
    for (int k = 0; k < zeros; ++k) x = (x << 1) | (bit() ? 1u : 0u);
    return x - 1;
  }

  PRTerm term(int depth = 0) {
    if (depth > 256) throw ParseError("code nests too deep");
    if (!bit()) {
      if (!bit()) return PRTerm::zero(gamma());
      return PRTerm::succ();
    }
    if (bit()) {
      PRTerm b = term(depth + 1);
      PRTerm s = term(depth + 1);
      return PRTerm::primrec(std::move(b), std::move(s));
    }
    if (!bit()) {
      std::size_t n = gamma();
      std::size_t i = gamma();
      return PRTerm::proj(n, i);
    }
    std::size_t m = gamma() + 1;
    PRTerm f = term(depth + 1);
    std::vector<PRTerm> gs;
    for (std::size_t k = 0; k < m; ++k) gs.push_back(term(depth + 1));
    return PRTerm::comp(std::move(f), std::move(gs));
  }

 private:
  const BitString& s_;
  std::size_t pos_ = 0;
};

}  // namespace

mpz_class pr_index(const PRTerm& t) {
  BitString code;
  put_term(code, t);
  return string_to_nat(code);
}

PRTerm pr_from_index(const mpz_class& i) {
  BitString code = nat_to_string(i);
  try {
    CodeReader in(code);
    PRTerm t = in.term();
    if (in.done() && t.arity() == 1) return t;
  } catch (const Error&) {
  }
  return PRTerm::zero(1);
}

// ---------------------------------------------------------------------------

namespace terms {

PRTerm identity() { return PRTerm::proj(1, 1); }

PRTerm constant(unsigned long c) {
  PRTerm t = PRTerm::zero(1);
  for (unsigned long k = 0; k < c; ++k) t = PRTerm::comp(PRTerm::succ(), {t});
  return t;
}

PRTerm add() {
  return PRTerm::primrec(PRTerm::proj(1, 1), PRTerm::comp(PRTerm::succ(), {PRTerm::proj(3, 2)}));
}

PRTerm is_zero() {
  PRTerm one = PRTerm::comp(PRTerm::succ(), {PRTerm::zero(0)});
  return PRTerm::primrec(one, PRTerm::zero(2));
}

PRTerm parity() {
  return PRTerm::primrec(PRTerm::zero(0), PRTerm::comp(is_zero(), {PRTerm::proj(2, 2)}));
}

PRTerm mod(unsigned long k) {
  if (k == 0) throw std::invalid_argument("mod needs k >= 1");
  // h(0) = 0, h(n+1) = (h(n) + 1) * sg((k-1) - h(n)) with truncated minus.
  PRTerm pred = PRTerm::primrec(PRTerm::zero(0), PRTerm::proj(2, 1));
  PRTerm rev_monus = PRTerm::primrec(PRTerm::proj(1, 1), PRTerm::comp(pred, {PRTerm::proj(3, 2)}));
  PRTerm monus = PRTerm::comp(rev_monus, {PRTerm::proj(2, 2), PRTerm::proj(2, 1)});
  PRTerm sg = PRTerm::comp(is_zero(), {is_zero()});
  PRTerm mult = PRTerm::primrec(PRTerm::zero(1), PRTerm::comp(add(), {PRTerm::proj(3, 2), PRTerm::proj(3, 3)}));
  PRTerm limit = PRTerm::comp(constant(k - 1), {PRTerm::proj(2, 1)});
  PRTerm gap = PRTerm::comp(sg, {PRTerm::comp(monus, {limit, PRTerm::proj(2, 2)})});
  PRTerm next = PRTerm::comp(PRTerm::succ(), {PRTerm::proj(2, 2)});
  return PRTerm::primrec(PRTerm::zero(0), PRTerm::comp(mult, {next, gap}));
}

}  // namespace terms

}  // namespace ptm
