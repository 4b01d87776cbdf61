// Command-line driver over the rfsm library.
//
// Exit status: 0 success or claim holds, 1 claim fails, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rfsm/rfsm.hpp"

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

rfsm::Machine load(const std::string& path) {
  try {
    return rfsm::parse_machine(read_file(path));
  } catch (const rfsm::Error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

int report_verdict(const rfsm::Verdict& v, const rfsm::Machine& states_of,
                   const rfsm::Machine& inputs_of) {
  if (v.holds) {
    std::cout << "holds\n";
    return kHolds;
  }
  std::cout << "fails: " << rfsm::describe(*v.counterexample, states_of, inputs_of) << "\n";
  return kFails;
}

void print_summary(const rfsm::TrialSummary& s, std::string_view label) {
  std::cout << label << ": " << s.trials << " trials, " << s.held << " held, " << s.failed
            << " failed, " << s.gaps << " known gaps, " << s.skipped << " skipped\n";
  for (const auto& r : s.failures) {
    std::cout << "  " << r.claim << " [" << r.covered << " -> " << r.covering
              << "]: " << r.counterexample << "\n";
    for (const auto& n : r.notes) std::cout << "    note: " << n << "\n";
  }
  for (const auto& reason : s.skip_reasons) std::cout << "  skipped: " << reason << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rough finite state machines and their products"};
  app.require_subcommand(1);

  std::string file, file2, map_file, word, state, set, kind, bridge_file, omega_file, out_file,
      expect_file, table = "state", prop;
  std::size_t depth = 2;
  std::size_t budget = rfsm::default_search_budget;
  std::size_t wreath_budget = rfsm::default_wreath_budget;
  std::uint64_t seed = 1;
  std::size_t trials = 20;
  bool strict = false, all_rows = false;

  auto* validate = app.add_subcommand("validate", "Check a machine file");
  validate->add_option("file", file)->required();
  validate->add_flag("--strict", strict, "Also reject entries that approximate no subset");

  auto* run = app.add_subcommand("run", "Evaluate the word extension from one state");
  run->add_option("file", file)->required();
  run->add_option("--state", state)->required();
  run->add_option("--word", word)->required();

  auto add_table_options = [&](CLI::App* cmd) {
    cmd->add_option("--word", word, "Add a column for the extension over this word");
    cmd->add_option("--expect", expect_file, "Reference cells; differing cells are marked");
    cmd->add_flag("--all", all_rows, "One row per non-empty definable set");
  };

  auto* blocks = app.add_subcommand("blocks", "Print the block transition table");
  blocks->add_option("file", file)->required();
  add_table_options(blocks);

  auto* approx = app.add_subcommand("approx", "Lower and upper approximation of a subset");
  approx->add_option("file", file)->required();
  approx->add_option("--set", set, "Comma-separated state names")->required();

  auto* product = app.add_subcommand("product", "Build a product machine");
  product->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"full", "restricted", "general", "wreath", "cascade"}));
  product->add_option("file1", file)->required();
  product->add_option("file2", file2)->required();
  product->add_option("--bridge", bridge_file, "Bridge file for general products");
  product->add_option("--omega", omega_file, "Wiring file for cascade products");
  product->add_option("--budget", wreath_budget, "Largest wreath alphabet allowed");
  product->add_option("-o,--output", out_file, "Output file (default stdout)");

  auto* check_hom = app.add_subcommand("check-hom", "Check a homomorphism");
  auto* check_cover = app.add_subcommand("check-cover", "Check a covering of file1 by file2");
  for (auto* cmd : {check_hom, check_cover}) {
    cmd->add_option("file1", file)->required();
    cmd->add_option("file2", file2)->required();
    cmd->add_option("--map", map_file)->required();
    cmd->add_option("--depth", depth, "Longest word checked");
  }

  auto* search = app.add_subcommand("search-cover", "List all coverings of file1 by file2");
  search->add_option("file1", file)->required();
  search->add_option("file2", file2)->required();
  search->add_option("--depth", depth, "Longest word checked");
  search->add_option("--budget", budget, "Largest candidate space searched");

  auto* verify = app.add_subcommand("verify", "Randomized check of a product covering claim");
  verify->add_option("--prop", prop)->required()->check(
      CLI::IsMember({"3.1", "3.2", "3.3", "3.4", "3.5"}));
  verify->add_option("--kind", kind)->check(CLI::IsMember({"full", "restricted", "wreath", "cascade"}));
  verify->add_option("--seed", seed);
  verify->add_option("--trials", trials);
  verify->add_option("--depth", depth, "Longest word checked");

  auto* render = app.add_subcommand("render", "Print a transition table");
  render->add_option("file", file)->required();
  render->add_option("--table", table)->check(CLI::IsMember({"state", "block"}));
  add_table_options(render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*validate) {
      std::optional<rfsm::Machine> parsed;
      try {
        parsed = rfsm::parse_machine(read_file(file));
      } catch (const rfsm::SemanticError& e) {
        for (const auto& p : e.problems()) std::cout << "violation: " << p << "\n";
        return kFails;
      }
      const auto& m = *parsed;
      auto unrealizable = rfsm::unrealizable_entries(m);
      for (const auto& v : unrealizable)
        std::cout << (strict ? "violation: " : "warning: ") << rfsm::to_string(v) << "\n";
      std::cout << m.name() << ": " << m.num_states() << " states, " << m.space().num_blocks()
                << " blocks, " << m.num_symbols() << " inputs, "
                << (strict ? unrealizable.size() : 0) << " violations\n";
      return strict && !unrealizable.empty() ? kFails : kHolds;
    }
    if (*run) {
      auto m = load(file);
      auto q = m.space().state_id(state);
      auto w = rfsm::parse_word(m, word);
      std::cout << "δ*(" << state << "," << rfsm::format_word(m, w)
                << ") = " << rfsm::format_rough_set(m.space(), rfsm::word_step(m, q, w)) << "\n";
      return kHolds;
    }
    if (*blocks || (*render && table == "block")) {
      auto m = load(file);
      rfsm::BlockTableOptions options;
      if (!word.empty()) options.word = rfsm::parse_word(m, word);
      options.all_rows = all_rows;
      if (!expect_file.empty()) options.expected = rfsm::parse_expected_cells(read_file(expect_file), m);
      std::cout << rfsm::render_block_table(m, options);
      return kHolds;
    }
    if (*render) {
      auto m = load(file);
      std::optional<rfsm::Word> w;
      if (!word.empty()) w = rfsm::parse_word(m, word);
      std::cout << rfsm::render_state_table(m, w);
      return kHolds;
    }
    if (*approx) {
      auto m = load(file);
      std::vector<std::string> names;
      for (auto& n : rfsm::split_top_level(set))
        if (!n.empty()) names.push_back(n);
      auto a = m.space().subset(names);
      auto r = rfsm::approximate(m.space(), a);
      std::cout << "lower " << rfsm::format_definable(m.space(), r.lower) << "\n"
                << "upper " << rfsm::format_definable(m.space(), r.upper) << "\n"
                << "definable " << (r.lower == r.upper ? "yes" : "no") << "\n";
      return kHolds;
    }
    if (*product) {
      auto m1 = load(file);
      auto m2 = load(file2);
      std::optional<rfsm::Machine> p;
      if (kind == "full") p = rfsm::full_direct(m1, m2);
      if (kind == "restricted") p = rfsm::restricted_direct(m1, m2);
      if (kind == "wreath") p = rfsm::wreath(m1, m2, wreath_budget);
      if (kind == "general") {
        auto b = bridge_file.empty() ? rfsm::identity_bridge(m1, m2)
                                     : rfsm::parse_bridge(read_file(bridge_file), m1, m2);
        p = rfsm::general_direct(m1, m2, b);
      }
      if (kind == "cascade") {
        auto w = omega_file.empty() ? rfsm::passthrough_wiring(m1, m2)
                                    : rfsm::parse_wiring(read_file(omega_file), m1, m2);
        p = rfsm::cascade(m1, m2, w);
      }
      auto text = rfsm::serialize_machine(*p);
      if (out_file.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_file, std::ios::binary);
        if (!(out << text)) throw std::runtime_error("cannot write '" + out_file + "'");
      }
      return kHolds;
    }
    if (*check_hom) {
      auto m1 = load(file);
      auto m2 = load(file2);
      auto pair = rfsm::parse_morphism(read_file(map_file), m1, m2);
      return report_verdict(rfsm::check_homomorphism(m1, m2, pair, depth), m1, m1);
    }
    if (*check_cover) {
      auto m1 = load(file);
      auto m2 = load(file2);
      auto pair = rfsm::parse_covering(read_file(map_file), m1, m2);
      return report_verdict(rfsm::check_covering(m1, m2, pair, depth), m2, m1);
    }
    if (*search) {
      auto m1 = load(file);
      auto m2 = load(file2);
      auto found = rfsm::search_coverings(m1, m2, depth, budget);
      std::cout << "# " << found.size() << " coverings\n";
      for (std::size_t i = 0; i < found.size(); ++i)
        std::cout << "# covering " << i + 1 << "\n" << rfsm::serialize_covering(found[i], m1, m2);
      return found.empty() ? kFails : kHolds;
    }
    if (*verify) {
      auto claim = *rfsm::parse_claim(prop);
      std::optional<rfsm::ProductKind> k;
      if (!kind.empty()) k = rfsm::parse_product_kind(kind);
      auto s = rfsm::run_trials(claim, k, seed, trials, depth);
      print_summary(s, rfsm::to_string(claim));
      return s.failed == 0 ? kHolds : kFails;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
