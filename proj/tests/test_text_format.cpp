#include <catch_amalgamated.hpp>

#include <string>

#include "fixtures.hpp"
#include "rfsm/products.hpp"
#include "rfsm/random.hpp"
#include "rfsm/render.hpp"
#include "rfsm/text_format.hpp"

using namespace rfsm;

namespace {

template <class F>
ParseError parse_error(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error");
  throw std::logic_error("unreachable");
}

const char* kHeader = "machine M\nstates p q r\nblock p q\nblock r\ninputs a\n";

}  // namespace

TEST_CASE("syntax errors carry line and column", "[text]") {
  auto e = parse_error([] { parse_machine("machine M\nstates p\nblock p\ninputs a\nfrob p\n"); });
  CHECK(e.kind() == ErrorKind::syntax);
  CHECK(e.line() == 5);
  CHECK(e.column() == 1);

  e = parse_error([] { parse_machine("machine M\nstates p\nblock p\ninputs a\ntrans p a lower p } upper { p }\n"); });
  CHECK(e.kind() == ErrorKind::syntax);
  CHECK(e.line() == 5);

  e = parse_error([] { parse_machine("machine M\nstates p\nblock p\ninputs a\ntrans p a lower { p } upper { p } x\n"); });
  CHECK(e.column() == 35);

  e = parse_error([] { parse_machine("machine M\nmachine N\n"); });
  CHECK(e.line() == 2);

  e = parse_error([] { parse_machine("machine M\nstates p\nblock p\n"); });
  CHECK(e.line() == 0);
}

TEST_CASE("comments and blank lines are ignored", "[text]") {
  auto m = parse_machine("# leading\n\nmachine M   # name\nstates p\nblock p\ninputs a\n"
                         "trans p a lower {p} upper {p}\n");
  CHECK(m.num_states() == 1);
  CHECK(m.transition(0, 0).lower.count() == 1);
}

TEST_CASE("an empty table is reported as not total", "[text]") {
  try {
    parse_machine(kHeader);
    FAIL("accepted an empty table");
  } catch (const SemanticError& e) {
    REQUIRE(e.problems().size() == 1);
    CHECK(e.problems()[0] == "table not total, missing (p, a) (q, a) (r, a)");
  }
}

TEST_CASE("entries must be unions of blocks", "[text]") {
  std::string text = std::string(kHeader) +
                     "trans p a lower { } upper { p q }\n"
                     "trans q a lower { r } upper { r }\n"
                     "trans r a lower { p } upper { p q }\n";
  auto e = parse_error([&] { parse_machine(text); });
  CHECK(e.kind() == ErrorKind::non_definable_entry);
  CHECK(e.line() == 8);
  CHECK(e.column() == 19);
}

TEST_CASE("duplicate entries and unknown names", "[text]") {
  std::string text = std::string(kHeader) +
                     "trans p a lower { } upper { }\n"
                     "trans p a lower { } upper { }\n"
                     "trans q a lower { } upper { }\n"
                     "trans r a lower { } upper { }\n";
  try {
    parse_machine(text);
    FAIL("accepted a duplicate entry");
  } catch (const SemanticError& e) {
    REQUIRE(e.problems().size() == 1);
    CHECK(e.problems()[0] == "line 7: duplicate entry for (p, a)");
  }
  auto e = parse_error([] { parse_machine(std::string(kHeader) + "trans z a lower { } upper { }\n"); });
  CHECK(e.kind() == ErrorKind::unknown_state);
  CHECK(e.column() == 7);
  e = parse_error([] { parse_machine(std::string(kHeader) + "trans p b lower { } upper { }\n"); });
  CHECK(e.kind() == ErrorKind::unknown_symbol);
}

TEST_CASE("containment violations surface as a semantic error", "[text]") {
  std::string text = std::string(kHeader) +
                     "trans p a lower { r } upper { }\n"
                     "trans q a lower { } upper { }\n"
                     "trans r a lower { } upper { }\n";
  CHECK_THROWS_AS(parse_machine(text), SemanticError);
}

TEST_CASE("serialize then parse is the identity", "[text]") {
  auto m = fixtures::five_state();
  auto text = serialize_machine(m);
  auto back = parse_machine(text);
  CHECK(back == m);
  CHECK(back.name() == m.name());
  CHECK(serialize_machine(back) == text);
  for (const auto* f : {"hom_source.rfsm", "hom_target.rfsm"}) {
    auto x = fixtures::machine(f);
    CHECK(parse_machine(serialize_machine(x)) == x);
  }
}

TEST_CASE("product machines round trip with tuple names", "[text]") {
  auto m = fixtures::five_state();
  auto u = fixtures::unit();
  for (const auto& p : {full_direct(m, m), restricted_direct(m, m), wreath(m, u),
                        cascade(m, m, passthrough_wiring(m, m))}) {
    auto back = parse_machine(serialize_machine(p));
    CHECK(back == p);
    CHECK(back.name() == p.name());
    CHECK(back.state_name(1) == p.state_name(1));
  }
  Rng rng(6);
  for (int i = 0; i < 10; ++i) {
    auto a = random_machine(rng, {1, 3, 1, 2}, "A", "p");
    auto b = random_machine(rng, {1, 3, 1, 2}, "B", "r");
    auto w = wreath(a, b);
    CHECK(parse_machine(serialize_machine(w)) == w);
  }
}

TEST_CASE("rendered cells use phi and block unions", "[text]") {
  auto m = fixtures::five_state();
  auto cells = state_table_cells(m);
  CHECK(cells[1][0] == "(φ,{q3,q5})");
  CHECK(cells[0][1] == "({q4},{q3,q5}∪{q4})");
  auto table = render_state_table(m);
  CHECK(table.find("δ(q,a)") != std::string::npos);
  CHECK(table.find("| q2 ") != std::string::npos);

  auto blocks = render_block_table(m);
  CHECK(blocks.find("| {q1,q2}∪{q4} ") != std::string::npos);
  CHECK(blocks.find("({q1,q2}∪{q4},{q1,q2}∪{q3,q5}∪{q4})") != std::string::npos);
  CHECK(blocks.find("†") == std::string::npos);
}

TEST_CASE("block table rows", "[text]") {
  auto m = fixtures::five_state();
  auto rows = block_table_rows(m);
  REQUIRE(rows.size() == 3);
  CHECK(format_definable(m.space(), rows[0]) == "{q1,q2}∪{q3,q5}");
  CHECK(format_definable(m.space(), rows[1]) == "{q1,q2}∪{q4}");
  CHECK(format_definable(m.space(), rows[2]) == "{q3,q5}∪{q4}");
  CHECK(block_table_rows(m, true).size() == 7);
  auto u = fixtures::unit();
  CHECK(block_table_rows(u).empty());
  CHECK(state_table_cells(u) == std::vector<std::vector<std::string>>{{"({u},{u})"}});
}

TEST_CASE("reference cells that disagree are marked", "[text]") {
  auto m = fixtures::five_state();
  auto expected = parse_expected_cells(fixtures::read("five_state_blocks.ref"), m);
  REQUIRE(expected.size() == 6);
  auto out = render_block_table(m, {std::nullopt, false, expected});
  std::size_t marks = 0;
  for (auto p = out.find("†"); p != std::string::npos; p = out.find("†", p + 1)) ++marks;
  CHECK(marks == 2);  // one in the grid, one in the footnote
  CHECK(out.find("† ({q3,q5}∪{q4}, b): reference table gives ({q1,q2}∪{q3,q5}∪{q4},") != std::string::npos);
  CHECK(out.find("union over the row's states gives ({q1,q2}∪{q4},") != std::string::npos);
}

TEST_CASE("block table with a word column", "[text]") {
  auto m = fixtures::five_state();
  auto out = render_block_table(m, {parse_word(m, "ab"), false, {}});
  CHECK(out.find("δ*D(D,ab)") != std::string::npos);
}

TEST_CASE("map files", "[text]") {
  auto m1 = fixtures::machine("hom_source.rfsm");
  auto m2 = fixtures::machine("hom_target.rfsm");
  auto text = fixtures::read("hom.map");
  auto p = parse_morphism(text, m1, m2);
  CHECK(p.state_map == std::vector<StateId>{0, 3, 2, 1});
  CHECK(p.input_map == std::vector<SymbolId>{0, 1});
  CHECK(parse_morphism(serialize_morphism(p, m1, m2), m1, m2) == p);

  try {
    parse_morphism("state q1 q1'\ninput a a'\ninput b b'\n", m1, m2);
    FAIL("accepted a partial map");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::totality);
  }
  auto e = parse_error([&] { parse_morphism(text + "state q1 q2'\n", m1, m2); });
  CHECK(e.kind() == ErrorKind::syntax);
  CHECK(e.line() == 7);
  e = parse_error([&] { parse_morphism("state q9 q1'\n", m1, m2); });
  CHECK(e.kind() == ErrorKind::unknown_state);

  auto m = fixtures::five_state();
  auto c = identity_covering(m);
  CHECK(parse_covering(serialize_covering(c, m, m), m, m) == c);
}

TEST_CASE("wiring and bridge files", "[text]") {
  auto m = fixtures::five_state();
  auto u = fixtures::unit("U", "x");
  auto w = parse_wiring("u x b\n", m, u);
  CHECK(w.omega == std::vector<SymbolId>{1});
  try {
    parse_wiring("", m, u);
    FAIL("accepted an empty wiring");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::wiring_totality);
  }
  CHECK_THROWS_AS(parse_wiring("u x b\nu x a\n", m, u), ParseError);
  CHECK_THROWS_AS(parse_wiring("u x c\n", m, u), ParseError);

  auto b = parse_bridge("s a x\nt b x\n", m, u);
  CHECK(b.carrier == std::vector<std::string>{"s", "t"});
  CHECK(b.decode == std::vector<std::pair<SymbolId, SymbolId>>{{0, 0}, {1, 0}});
  CHECK_THROWS_AS(parse_bridge("s a x\ns b x\n", m, u), Error);
}

TEST_CASE("split_top_level keeps tuple names whole", "[text]") {
  CHECK(split_top_level("q1,q3") == std::vector<std::string>{"q1", "q3"});
  CHECK(split_top_level("(q1,q2),(q3,q4)") == std::vector<std::string>{"(q1,q2)", "(q3,q4)"});
  CHECK(split_top_level("(f[a,b],x)") == std::vector<std::string>{"(f[a,b],x)"});
  CHECK(split_top_level("") == std::vector<std::string>{""});
}
