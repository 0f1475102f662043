#include "ptm/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ptm/codebook_machine.hpp"
#include "ptm/complexity.hpp"
#include "ptm/enumeration.hpp"
#include "ptm/errors.hpp"
#include "ptm/explore.hpp"
#include "ptm/forge.hpp"
#include "ptm/gated.hpp"
#include "ptm/machine_io.hpp"
#include "ptm/omega.hpp"
#include "ptm/pr.hpp"

namespace ptm {

namespace {

using json = nlohmann::ordered_json;

struct Config {
  std::size_t default_depth = 12;
  std::uint64_t default_node_budget = 10000;
  bool machine_readable = false;
};

// PTM_BUDGET and PTM_DEPTH override the built-in defaults.
Config config_from_env() {
  Config c;
  auto read = [](const char* name, auto& slot) {
    if (const char* v = std::getenv(name)) {
      try {
        slot = static_cast<std::remove_reference_t<decltype(slot)>>(std::stoull(v));
      } catch (const std::exception&) {
        throw ParseError(std::string(name) + " is not a natural number");
      }
    }
  };
  read("PTM_BUDGET", c.default_node_budget);
  read("PTM_DEPTH", c.default_depth);
  return c;
}

// Result records: `key=value` pairs in text mode, one JSON object per line
// otherwise.
class Record {
 public:
  Record& add(const std::string& k, const std::string& v) {
    fields_.emplace_back(k, v);
    return *this;
  }
  Record& add(const std::string& k, const char* v) { return add(k, std::string(v)); }
  Record& add(const std::string& k, std::uint64_t v) {
    fields_.emplace_back(k, v);
    return *this;
  }

  void emit(std::ostream& out, bool machine_readable) const {
    if (machine_readable) {
      json j = json::object();
      for (const auto& [k, v] : fields_) j[k] = v;
      out << j.dump() << '\n';
      return;
    }
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      const json& v = fields_[i].second;
      out << (i ? " " : "") << fields_[i].first << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
    }
    out << '\n';
  }

 private:
  std::vector<std::pair<std::string, json>> fields_;
};

Record run_record(const RunResult& r) {
  Record rec;
  rec.add("result", to_string(r.kind));
  if (r.halted()) rec.add("output", r.output.str());
  rec.add("consumed", r.consumed).add("steps", r.steps);
  return rec;
}

std::string frontier_reason(FrontierReason r) {
  return r == FrontierReason::ReadAtMaxDepth ? "depth" : "budget";
}

std::string read_arg_or_file(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '(' || arg == "-" ||
                       arg.find_first_not_of("01") == std::string::npos))
    return arg;
  return read_file(arg);
}

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(trim(item));
  return out;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return dispatch(args, out, err, std::cin);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             std::istream& in) {
  Config cfg;
  try {
    cfg = config_from_env();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  CLI::App app{"Prefix-free Turing machine toolkit", "ptm"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  int threads = 0;
  app.add_option("--format", format, "text or jsonl")->check(CLI::IsMember({"text", "jsonl"}));
  app.add_option("--threads", threads, "OpenMP threads (0 = runtime default)");

  std::string machine_path, bits, index_text, alpha, targets, term, omega_prefix;
  std::size_t depth = cfg.default_depth, max_len = 0, n_max = 0, c = 0, wall_budget = 0;
  std::uint64_t budget = cfg.default_node_budget;
  bool show_exact = false, stream = false;

  auto budget_opt = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "steps per run (default 10000, env PTM_BUDGET)");
  };
  auto depth_opt = [&](CLI::App* sub) {
    sub->add_option("--depth", depth, "exploration depth (default 12, env PTM_DEPTH)");
  };

  auto* run = app.add_subcommand("run", "run a machine on one input");
  run->add_option("machine", machine_path)->required();
  run->add_option("bits", bits, "input bits, '-' for empty")->required();
  budget_opt(run);

  auto* domain = app.add_subcommand("domain", "explore the domain tree");
  domain->add_option("machine", machine_path)->required();
  depth_opt(domain);
  budget_opt(domain);

  auto* omega = app.add_subcommand("omega", "exact bounds on the halting probability");
  omega->add_option("machine", machine_path)->required();
  depth_opt(omega);
  budget_opt(omega);
  omega->add_flag("--bits", show_exact, "also report whether the certified digits are exact");

  auto* oracle = app.add_subcommand("oracle", "halting table from a true Omega prefix");
  oracle->add_option("machine", machine_path)->required();
  oracle->add_option("--omega-prefix", omega_prefix)->required();
  oracle->add_option("--wall-budget", wall_budget, "give up after this many rounds (0 = never)");

  auto* complexity = app.add_subcommand("complexity", "upper bound on prefix complexity");
  complexity->add_option("bits", bits)->required();
  complexity->add_option("--max-len", max_len, "longest program searched (default |print program|)");
  budget_opt(complexity);

  auto* deficiency = app.add_subcommand("deficiency", "finite randomness-deficiency check");
  deficiency->add_option("--alpha", alpha, "bits or a file holding them")->required();
  deficiency->add_option("-c", c)->required();
  deficiency->add_option("-n", n_max)->required();
  deficiency->add_option("--max-len", max_len, "longest program searched (default n)");
  budget_opt(deficiency);

  auto* forge = app.add_subcommand("forge", "codebook machine with a prescribed halting probability");
  forge->add_option("--targets", targets, "increasing dyadics, comma separated");
  forge->add_flag("--stream", stream, "read one increment per line from standard input");

  auto* gate = app.add_subcommand("gate", "gated universal machine from a PR term");
  gate->add_option("--term", term, "s-expression or file");
  gate->add_option("--index", index_text, "Goedel index of the term");

  auto* encode = app.add_subcommand("encode", "index of a table machine");
  encode->add_option("machine", machine_path)->required();

  auto* decode = app.add_subcommand("decode", "machine at an index");
  decode->add_option("index", index_text)->required();

  auto* uencode = app.add_subcommand("uencode", "universal program 0^i 1 x");
  uencode->add_option("index", index_text)->required();
  uencode->add_option("bits", bits)->required();

  auto* urun = app.add_subcommand("urun", "run the universal machine");
  urun->add_option("bits", bits)->required();
  budget_opt(urun);

  auto* kraft = app.add_subcommand("kraft-check", "prefix-freeness and Kraft sum of a codebook");
  kraft->add_option("codebook", machine_path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return 1;
  }
  cfg.machine_readable = format == "jsonl";
  const bool mr = cfg.machine_readable;
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    if (*run) {
      auto m = load_machine_file(machine_path);
      run_record(run_machine(*m, BitString::parse(bits), budget)).emit(out, mr);
    } else if (*urun) {
      run_record(run_universal(BitString::parse(bits), budget)).emit(out, mr);
    } else if (*domain) {
      auto m = load_machine_file(machine_path);
      DomainReport r = explore_domain(*m, depth, budget);
      for (const auto& h : r.halting) {
        Record().add("kind", "halt").add("program", h.program.str()).add("output", h.output.str())
            .add("steps", h.steps).emit(out, mr);
      }
      for (const auto& f : r.frontier) {
        Record().add("kind", "frontier").add("path", f.path.str()).add("depth", f.depth())
            .add("reason", frontier_reason(f.reason)).emit(out, mr);
      }
      for (const auto& d : r.diverged) Record().add("kind", "diverged").add("path", d.str()).emit(out, mr);
      Record().add("halting", r.halting.size()).add("frontier", r.frontier.size())
          .add("diverged", r.diverged.size()).emit(out, mr);
    } else if (*omega) {
      auto m = load_machine_file(machine_path);
      OmegaInterval iv = omega_bounds(*m, depth, budget);
      CertifiedBits cb = certified_bits(iv);
      Record rec;
      rec.add("lower", iv.lower.str()).add("upper", iv.upper.str()).add("bits", cb.digits.str());
      if (show_exact) rec.add("exact", cb.exact ? "yes" : "no");
      rec.emit(out, mr);
    } else if (*oracle) {
      auto m = load_machine_file(machine_path);
      OracleOptions opts;
      opts.max_rounds = wall_budget;
      auto table = halting_from_omega(*m, BitString::parse(omega_prefix), opts);
      if (!table) {
        Record().add("result", "inconclusive").add("rounds", wall_budget).emit(out, mr);
        return 2;
      }
      for (const auto& [x, halts] : table->entries)
        Record().add("program", x.str()).add("answer", halts ? "halts" : "diverges").emit(out, mr);
      Record().add("entries", table->entries.size()).add("rounds", table->rounds)
          .add("lower", table->lower_at_stop.str()).emit(out, mr);
    } else if (*complexity) {
      BitString x = BitString::parse(bits);
      std::size_t len = max_len ? max_len : print_program(x).size();
      ComplexityWitness w = h_upper(x, len, budget);
      Record().add("target", w.target.str()).add("program", w.program.str())
          .add("length", w.program_length).add("exhaustive-up-to", w.search_exhaustive_up_to)
          .add("budget", w.budget).emit(out, mr);
    } else if (*deficiency) {
      BitString a = BitString::parse(trim(read_arg_or_file(alpha)));
      auto rows = deficiency_check(a, c, n_max, max_len ? max_len : n_max, budget);
      for (const auto& row : rows) {
        Record rec;
        rec.add("n", row.n).add("verdict", row.verdict == Verdict::Refuted ? "refuted" : "unrefuted-at-budget");
        if (row.witness) rec.add("program", row.witness->program.str()).add("length", row.witness->program_length);
        rec.emit(out, mr);
      }
    } else if (*forge) {
      if (stream == !targets.empty()) throw ParseError("forge needs exactly one of --targets, --stream");
      Forger f;
      auto emit_entries = [&](const std::vector<CodebookMachine::Entry>& es) {
        for (const auto& [w, o] : es) {
          if (mr) {
            Record().add("codeword", w.str()).add("output", o.str()).emit(out, mr);
          } else {
            out << w.str() << " -> " << o.str() << '\n';
          }
        }
        out.flush();
      };
      if (stream) {
        std::string line;
        while (std::getline(in, line)) {
          line = trim(line);
          if (line.empty() || line.front() == '#') continue;
          emit_entries(f.push_increment(Dyadic::parse(line)));
        }
      } else {
        std::vector<Dyadic> q;
        for (const auto& t : split_commas(targets)) q.push_back(Dyadic::parse(t));
        for (const auto& v : q) emit_entries(f.push_target(v));
      }
    } else if (*gate) {
      if (term.empty() == index_text.empty()) throw ParseError("gate needs exactly one of --term, --index");
      PRTerm t = term.empty() ? pr_from_index(mpz_class(index_text, 10))
                              : PRTerm::parse(trim(read_arg_or_file(term)));
      if (t.arity() != 1) throw ArityMismatch("gate term must be unary");
      out << "gate " << t.str() << '\n';
    } else if (*encode) {
      std::string text = read_file(machine_path);
      out << encode_machine(TableMachine::parse(text)).str() << '\n';
    } else if (*decode) {
      MachineIndex i(mpz_class(index_text, 10));
      if (i.value == 0) {
        out << "print\n";
      } else if (auto t = decode_table(i)) {
        out << t->to_text();
      } else {
        out << "diverge\n";
      }
    } else if (*uencode) {
      out << u_encode(std::stoull(index_text), BitString::parse(bits)).str() << '\n';
    } else if (*kraft) {
      std::string text = read_file(machine_path);
      std::vector<BitString> words;
      std::istringstream lines(text);
      std::string line;
      while (std::getline(lines, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string w;
        if (ls >> w) words.push_back(BitString::parse(w));
      }
      if (!check_prefix_free(words)) {
        Record().add("result", "not prefix-free").emit(out, mr);
        return 1;
      }
      Record().add("result", "prefix-free").add("kraft", kraft_sum(words).str()).emit(out, mr);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace ptm
