#include "lrembed_cli/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lrembed/embed.hpp"
#include "lrembed/error.hpp"
#include "lrembed/io.hpp"
#include "lrembed/lrseq.hpp"
#include "lrembed/oracle.hpp"
#include "lrembed/realize.hpp"

namespace lrembed::cli {
namespace {

struct Options {
  Int p = 2;
  int max_weight = 4;
  bool json = false;
  std::string out_path;
};

// Inline JSON, or the path of a file holding it.
std::string read_input(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) return arg;
  std::ifstream in(arg);
  if (!in) throw Error(Errc::parse_error, "'" + arg + "' is neither inline JSON nor a readable file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

void require_prime(Int p) {
  if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not a prime");
}

int cmd_check(const std::string& input, const Options& opt, std::ostream& out) {
  const PartitionSequence seq = parse_sequence(read_input(input));
  bool ineq = false, word = false, windows = false;
  const bool increasing = seq.is_increasing();
  if (increasing) {
    ineq = validate_inequalities(seq);
    word = validate_word(seq);
    windows = validate_windows(seq);
  }
  const bool agree = ineq == word && word == windows;
  if (opt.json) {
    out << Json{{"sequence", to_json(seq)}, {"increasing", increasing}, {"inequalities", ineq},
                {"word", word},         {"windows", windows},       {"agree", agree}}
               .dump()
        << "\n";
  } else {
    out << "sequence:     " << seq.to_string() << "\n";
    if (!increasing) out << "increasing:   false\n";
    out << "inequalities: " << yes_no(ineq) << "\n";
    out << "word:         " << yes_no(word) << "\n";
    out << "windows:      " << yes_no(windows) << "\n";
    out << "agreement:    " << (agree ? "yes" : "NO") << "\n";
  }
  if (!agree) return kInternal;
  return ineq ? kOk : kFalse;
}

SequenceType read_type(const std::vector<std::string>& parts) {
  return {parse_partition(read_input(parts[0])), parse_partition(read_input(parts[1])),
          parse_partition(read_input(parts[2]))};
}

int cmd_coeff(const std::vector<std::string>& parts, const Options& opt, std::ostream& out) {
  const SequenceType t = read_type(parts);
  const std::size_t c = lr_coefficient(t);
  if (opt.json) {
    out << Json{{"alpha", to_json(t.alpha)}, {"beta", to_json(t.beta)}, {"gamma", to_json(t.gamma)},
                {"coefficient", c}}
               .dump()
        << "\n";
  } else {
    out << c << "\n";
  }
  return kOk;
}

int cmd_enumerate(const std::vector<std::string>& parts, const Options& opt, std::ostream& out) {
  const auto seqs = enumerate_lr(read_type(parts));
  if (opt.json) {
    Json j = Json::array();
    for (const auto& s : seqs) j.push_back(to_json(s));
    out << j.dump() << "\n";
  } else {
    for (const auto& s : seqs) out << s.to_string() << "\n";
  }
  return kOk;
}

int cmd_realize(const std::string& input, const Options& opt, std::ostream& out, std::ostream& err) {
  require_prime(opt.p);
  const PartitionSequence seq = parse_sequence(read_input(input));
  if (!seq.is_increasing() || !validate_inequalities(seq)) {
    throw Error(Errc::not_lr_sequence, seq.to_string() + " is not an LR sequence");
  }
  const Realization r = realize_full(seq, opt.p);
  const auto failures = verify_realization(r);
  if (!failures.empty() || analyze(Embedding(r.a)) != seq) {
    for (const auto& f : failures) err << "certificate failure: " << f << "\n";
    err << "error: realization did not verify; nothing printed\n";
    return kInternal;
  }
  Json j = to_json(r);
  j["verified"] = true;
  out << (opt.json ? j.dump() : j.dump(2)) << "\n";
  return kOk;
}

int cmd_analyze(const std::string& input, const Options& opt, std::ostream& out) {
  const Embedding e = parse_embedding(read_input(input));
  const PartitionSequence seq = analyze(e);
  const SequenceType t = sequence_type(seq);
  const bool bounded = exponent(e.sub) <= 2;
  std::string decomposition;
  if (bounded) decomposition = decompose(e).to_string();
  if (opt.json) {
    Json j{{"sequence", to_json(seq)},
           {"type_A", to_json(t.alpha)},
           {"type_B", to_json(t.beta)},
           {"type_B_mod_A", to_json(t.gamma)},
           {"decomposition", bounded ? Json(decomposition) : Json(nullptr)}};
    out << j.dump() << "\n";
  } else {
    out << "sequence:      " << seq.to_string() << "\n";
    out << "type A:        " << t.alpha.to_string() << "\n";
    out << "type B:        " << t.beta.to_string() << "\n";
    out << "type B/A:      " << t.gamma.to_string() << "\n";
    if (bounded) {
      out << "decomposition: " << decomposition << "\n";
    } else {
      out << "decomposition: (exponent of A exceeds 2)\n";
    }
  }
  return kOk;
}

int cmd_decompose(const std::string& input, const Options& opt, std::ostream& out) {
  const Embedding e = parse_embedding(read_input(input));
  const SummandMultiset m = decompose(e);
  if (opt.json) {
    Json items = Json::array();
    for (const auto& [s, c] : m.items()) {
      items.push_back(Json{{"kind", s.kind == SummandKind::P ? "P" : "Q"}, {"l", s.ell}, {"index", s.index},
                           {"count", c}});
    }
    out << Json{{"summands", items}, {"text", m.to_string()}}.dump() << "\n";
  } else {
    out << m.to_string() << "\n";
  }
  return kOk;
}

int cmd_oracle(const Options& opt, std::ostream& out) {
  require_prime(opt.p);
  const Report rep = cross_validate(opt.p, opt.max_weight);
  if (opt.json) {
    out << to_json(rep).dump() << "\n";
  } else {
    out << rep.to_text();
  }
  return rep.ok() ? kOk : kFalse;
}

int cmd_tableau(const std::string& input, std::ostream& out) {
  const PartitionSequence seq = parse_sequence(read_input(input));
  out << render_tableau(seq);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Littlewood-Richardson sequences and subgroup embeddings of finite abelian p-groups", "lrembed"};
  app.require_subcommand(1);

  Options opt;
  std::string input;
  std::vector<std::string> triple(3);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", opt.p, "prime (default 2)");
    sub->add_flag("--json", opt.json, "JSON output");
    sub->add_option("--out", opt.out_path, "write output to this file");
  };

  // Three plain positionals: a vector option would split "[2,1]" itself.
  auto add_triple = [&](CLI::App* sub) {
    sub->add_option("alpha", triple[0], "partition alpha")->required();
    sub->add_option("beta", triple[1], "partition beta")->required();
    sub->add_option("gamma", triple[2], "partition gamma")->required();
  };

  auto* check = app.add_subcommand("check", "run the three LR validators on a sequence");
  check->add_option("sequence", input, "sequence as JSON or a file path")->required();
  add_common(check);

  auto* coeff = app.add_subcommand("coeff", "LR coefficient for alpha beta gamma");
  add_triple(coeff);
  add_common(coeff);

  auto* enumerate = app.add_subcommand("enumerate", "list LR sequences of type alpha beta gamma");
  add_triple(enumerate);
  add_common(enumerate);

  auto* realize = app.add_subcommand("realize", "construct a subgroup chain for an LR sequence");
  realize->add_option("sequence", input, "sequence as JSON or a file path")->required();
  add_common(realize);

  auto* analyze_cmd = app.add_subcommand("analyze", "partition sequence of an embedding");
  analyze_cmd->add_option("embedding", input, "embedding as JSON or a file path")->required();
  add_common(analyze_cmd);

  auto* decompose_cmd = app.add_subcommand("decompose", "indecomposable summands of a p^2-bounded embedding");
  decompose_cmd->add_option("embedding", input, "embedding as JSON or a file path")->required();
  add_common(decompose_cmd);

  auto* oracle = app.add_subcommand("oracle", "exhaustive cross validation against the subgroup census");
  oracle->add_option("--max-weight", opt.max_weight, "largest |type(B)| (default 4)")->check(CLI::NonNegativeNumber);
  add_common(oracle);

  auto* tableau = app.add_subcommand("tableau", "render the tableau of a sequence");
  tableau->add_option("sequence", input, "sequence as JSON or a file path")->required();
  add_common(tableau);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (*check) {
      code = cmd_check(input, opt, buffer);
    } else if (*coeff) {
      code = cmd_coeff(triple, opt, buffer);
    } else if (*enumerate) {
      code = cmd_enumerate(triple, opt, buffer);
    } else if (*realize) {
      code = cmd_realize(input, opt, buffer, err);
    } else if (*analyze_cmd) {
      code = cmd_analyze(input, opt, buffer);
    } else if (*decompose_cmd) {
      code = cmd_decompose(input, opt, buffer);
    } else if (*oracle) {
      code = cmd_oracle(opt, buffer);
    } else if (*tableau) {
      code = cmd_tableau(input, buffer);
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == Errc::internal ? kInternal : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }

  if (!opt.out_path.empty()) {
    std::ofstream file(opt.out_path);
    if (!file) {
      err << "error: cannot write " << opt.out_path << "\n";
      return kUsage;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace lrembed::cli
