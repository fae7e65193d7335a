#include "loopforge/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "loopforge/corpus.hpp"
#include "loopforge/finder.hpp"
#include "loopforge/perm.hpp"
#include "loopforge/report.hpp"
#include "loopforge/steiner.hpp"
#include "loopforge/suites.hpp"
#include "loopforge/words.hpp"

namespace loopforge {

namespace {

struct LoopSource {
  std::string file;
  std::string corpus_name;
  std::string data_dir;

  // Returns the loop plus its display name; corpus entries also carry the
  // point-labeling convention.
  std::tuple<CayleyLoop, std::string, bool> load() const {
    if (!corpus_name.empty()) {
      auto entries = corpus(data_dir);
      const CorpusEntry& e = corpus_entry(entries, corpus_name);
      return {e.loop, e.name, e.steiner_labels};
    }
    CayleyLoop L = load_loop_file(file);
    std::string name = file;
    auto slash = name.find_last_of('/');
    if (slash != std::string::npos) name = name.substr(slash + 1);
    auto dot = name.rfind(".tbl");
    if (dot != std::string::npos) name = name.substr(0, dot);
    return {std::move(L), std::move(name), false};
  }
};

void print_text_report(std::ostream& out, const std::string& name,
                       const CayleyLoop& L, const PropertyReport& rep) {
  out << "loop: " << name << "\norder: " << L.order() << "\n";
  for (const auto& [prop, val] : rep.entries) {
    out << prop << ": " << (val.holds ? "yes" : "no");
    if (!val.holds) {
      if (val.witness) {
        out << "  witness (";
        for (std::size_t i = 0; i < val.witness->size(); ++i)
          out << (i ? "," : "") << (*val.witness)[i];
        out << ")";
      }
      if (!val.note.empty()) out << "  [" << val.note << "]";
    }
    out << "\n";
  }
  auto nuc = nucleus(L);
  out << "nucleus: {";
  for (std::size_t i = 0; i < nuc.size(); ++i) out << (i ? "," : "") << nuc[i];
  out << "}\n";
}

int cmd_check(const LoopSource& src, bool json, const std::string& golden,
              const std::vector<std::string>& identities, bool rif_full,
              std::ostream& out, std::ostream& err) {
  auto [L, name, labels] = src.load();
  (void)labels;
  PropertyReport rep = classify(L);
  std::string rendered = report_string(report_json(name, L, rep));
  if (json)
    out << rendered;
  else
    print_text_report(out, name, L, rep);

  int rc = 0;
  for (const std::string& line : identities) {
    auto parsed = parse_identity_file(line);
    for (const Identity& id : parsed) {
      CheckResult r = holds(L, id);
      out << "identity "
          << (id.name.empty() ? serialize_identity(id) : id.name) << ": "
          << (r.holds ? "holds" : "fails");
      if (r.witness) {
        out << "  witness (";
        for (std::size_t i = 0; i < r.witness->size(); ++i)
          out << (i ? "," : "") << (*r.witness)[i];
        out << ")";
      }
      out << "\n";
      if (!r.holds) rc = 1;
    }
  }
  if (rif_full) {
    auto full = is_rif_inner_full(L);
    if (!full.has_value()) {
      out << "rif_full: capped\n";
    } else {
      out << "rif_full: " << (full->holds ? "yes" : "no") << "\n";
      if (full->holds != rep.value("rif")) {
        err << "full-closure RIF oracle disagrees with the generator test\n";
        rc = 1;
      }
    }
  }
  if (!src.corpus_name.empty()) {
    auto entries = corpus(src.data_dir);
    auto diffs = verify_expected(corpus_entry(entries, src.corpus_name), rep);
    for (const auto& d : diffs) err << "mismatch: " << d << "\n";
    if (!diffs.empty()) rc = 1;
  }
  if (!golden.empty()) {
    std::ifstream g(golden);
    if (!g) {
      err << "cannot open golden file: " << golden << "\n";
      return 2;
    }
    std::ostringstream want;
    want << g.rdbuf();
    if (want.str() != rendered) {
      err << "golden mismatch for " << name << " vs " << golden << "\n";
      rc = 1;
    }
  }
  return rc;
}

int cmd_search(const std::string& file, const std::string& mode_override,
               std::ostream& out, std::ostream& err) {
  SearchProblem p = load_problem_file(file);
  if (!mode_override.empty()) {
    if (mode_override == "first")
      p.mode = SearchMode::First;
    else if (mode_override == "count")
      p.mode = SearchMode::Count;
    else if (mode_override == "enumerate")
      p.mode = SearchMode::Enumerate;
    else if (mode_override == "enumerate_iso")
      p.mode = SearchMode::EnumerateUpToIso;
    else
      throw InvalidProblemError("unknown mode: " + mode_override);
  }
  SearchOutcome res = solve(p);
  err << "stats: nodes=" << res.stats.nodes
      << " propagations=" << res.stats.propagations
      << " seconds=" << res.stats.seconds << "\n";
  switch (res.status) {
    case SearchOutcome::Status::BudgetExhausted:
      out << "INCONCLUSIVE (budget exhausted)\n";
      return 3;
    case SearchOutcome::Status::Unsat:
      out << "UNSAT";
      if (!res.reason.empty()) out << " (" << res.reason << ")";
      out << "\n";
      return 1;
    case SearchOutcome::Status::Sat:
      if (p.mode == SearchMode::Count) {
        out << res.count << "\n";
      } else {
        for (std::size_t i = 0; i < res.models.size(); ++i) {
          if (i) out << "\n";
          out << "# model " << i + 1 << "\n" << serialize_loop(res.models[i]);
        }
        if (p.mode != SearchMode::First)
          err << "models: " << res.count << "\n";
      }
      return 0;
  }
  return 2;
}

int cmd_words(const LoopSource& src, const std::string& word_csv,
              const std::string& op, std::ostream& out, std::ostream& err) {
  auto [L, name, labels] = src.load();
  (void)name;
  Word w;
  std::stringstream ss(word_csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    w.push_back(labels ? element_of_point_label(tok, L.order())
                       : std::stoi(tok));
  }
  auto show = [&](Elem e) {
    return labels ? point_label(e) : std::to_string(e);
  };
  if (op == "pi") {
    auto all = pi_all(L, w);
    out << "{";
    for (std::size_t i = 0; i < all.size(); ++i)
      out << (i ? "," : "") << show(all[i]);
    out << "}\n";
  } else if (op == "pir") {
    out << show(pi_r(L, w)) << "\n";
  } else if (op == "blocks") {
    out << block_length(L, w) << "\n";
  } else {
    err << "unknown op: " << op << " (expected pi|pir|blocks)\n";
    return 2;
  }
  return 0;
}

int cmd_suite(const std::string& data_dir, const std::string& only_loop,
              const std::string& only_suite, bool json, std::ostream& out,
              std::ostream& err) {
  if (!only_suite.empty()) {
    static const char* known[] = {
        "inclusions",      "p_factorization",
        "c_translation_squares", "square_sandwich",
        "parity_shift",    "power_merge",
        "conjugate_powers", "commutative_diassociative"};
    bool found = false;
    for (const char* k : known) found = found || only_suite == k;
    if (!found) {
      err << "unknown suite: " << only_suite << "\n";
      return 2;
    }
  }
  auto entries = corpus(data_dir);
  int rc = 0;
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (const CorpusEntry& e : entries) {
    if (!only_loop.empty() && e.name != only_loop) continue;
    PropertyReport rep = classify(e.loop);
    for (const auto& d : verify_expected(e, rep)) {
      err << "mismatch: " << d << "\n";
      rc = 1;
    }
    std::vector<SuiteResult> suites = run_suites(e.loop, rep);
    if (!only_suite.empty()) {
      suites.erase(std::remove_if(suites.begin(), suites.end(),
                                  [&](const SuiteResult& s) {
                                    return s.name != only_suite;
                                  }),
                   suites.end());
    }
    for (const SuiteResult& s : suites) {
      if (s.failed > 0) rc = 1;
      if (!json)
        out << e.name << " " << s.name << ": passed=" << s.passed
            << " failed=" << s.failed
            << (s.first_failure.empty() ? "" : "  [" + s.first_failure + "]")
            << "\n";
    }
    if (json) all.push_back(report_json(e.name, e.loop, rep, suites));
  }
  if (json) out << all.dump(2) << "\n";
  return rc;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"finite loop workbench"};
  app.require_subcommand(1);

  std::string data_dir = default_data_dir();
  app.add_option("--data", data_dir, "data directory (default: $LOOPFORGE_DATA or ./data)");

  // check
  auto* check = app.add_subcommand("check", "classify a loop");
  LoopSource check_src;
  bool check_json = false, check_rif_full = false;
  std::string check_golden;
  std::vector<std::string> check_identities;
  check->add_option("file", check_src.file, "loop table file");
  check->add_option("--corpus", check_src.corpus_name, "corpus entry name");
  check->add_flag("--json", check_json, "emit the JSON report");
  check->add_option("--golden", check_golden,
                    "compare the JSON report byte-for-byte with this file");
  check->add_option("--identity", check_identities,
                    "also decide these identities (`name : lhs = rhs` or "
                    "`lhs = rhs`); exit 1 when one fails");
  check->add_flag("--rif-full", check_rif_full,
                  "also run the full-closure RIF oracle (slow)");

  // search
  auto* search = app.add_subcommand("search", "run the model finder");
  std::string search_file, search_mode;
  search->add_option("file", search_file, "problem file")->required();
  search->add_option("--mode", search_mode,
                     "first|count|enumerate|enumerate_iso");

  // steiner
  auto* steiner = app.add_subcommand("steiner", "emit a Steiner loop table");
  bool use_z13 = false, use_sts9 = false;
  std::string steiner_file;
  steiner->add_flag("--z13", use_z13, "cyclic system on 13 points");
  steiner->add_flag("--sts9", use_sts9, "affine system on 9 points");
  steiner->add_option("--file", steiner_file, "triple system file");

  // words
  auto* words = app.add_subcommand("words", "word machinery on a loop");
  LoopSource words_src;
  std::string word_csv, words_op = "pi";
  words->add_option("file", words_src.file, "loop table file");
  words->add_option("--corpus", words_src.corpus_name, "corpus entry name");
  words->add_option("--word", word_csv, "comma-separated entries")->required();
  words->add_option("--ops", words_op, "pi|pir|blocks");

  // product
  auto* product = app.add_subcommand("product", "direct product of two loops");
  std::string prod_a, prod_b;
  product->add_option("left", prod_a, "loop table file")->required();
  product->add_option("right", prod_b, "loop table file")->required();

  // chein
  auto* chein = app.add_subcommand("chein", "Moufang double of a group");
  std::string chein_file;
  chein->add_option("file", chein_file, "group table file")->required();

  // suite
  auto* suite = app.add_subcommand("suite", "corpus classification + suites");
  std::string suite_loop, suite_name;
  bool suite_json = false;
  suite->add_option("--corpus", suite_loop, "restrict to one corpus entry");
  suite->add_option("--lemma", suite_name, "restrict to one suite by name");
  suite->add_flag("--json", suite_json, "emit JSON reports");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    check_src.data_dir = data_dir;
    words_src.data_dir = data_dir;
    if (*check) {
      if (check_src.file.empty() == check_src.corpus_name.empty()) {
        err << "check: give exactly one of <file> or --corpus\n";
        return 2;
      }
      return cmd_check(check_src, check_json, check_golden, check_identities,
                       check_rif_full, out, err);
    }
    if (*search) return cmd_search(search_file, search_mode, out, err);
    if (*steiner) {
      int picked = (use_z13 ? 1 : 0) + (use_sts9 ? 1 : 0) +
                   (steiner_file.empty() ? 0 : 1);
      if (picked != 1) {
        err << "steiner: give exactly one of --z13, --sts9, --file\n";
        return 2;
      }
      TripleSystem ts = use_z13    ? z13_system()
                        : use_sts9 ? sts9_system()
                                   : load_system_file(steiner_file);
      out << serialize_loop(steiner_loop(ts));
      return 0;
    }
    if (*words) {
      if (words_src.file.empty() == words_src.corpus_name.empty()) {
        err << "words: give exactly one of <file> or --corpus\n";
        return 2;
      }
      return cmd_words(words_src, word_csv, words_op, out, err);
    }
    if (*product) {
      out << serialize_loop(
          direct_product(load_loop_file(prod_a), load_loop_file(prod_b)));
      return 0;
    }
    if (*chein) {
      try {
        out << serialize_loop(chein_double(load_loop_file(chein_file)));
      } catch (const NotAGroupError& e) {
        err << e.what() << "\n";
        return 1;
      }
      return 0;
    }
    if (*suite)
      return cmd_suite(data_dir, suite_loop, suite_name, suite_json, out, err);
  } catch (const LoopError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace loopforge
