#include <doctest.h>

#include "fixtures.hpp"
#include "ideal/inter_decomp.hpp"
#include "ideal/io.hpp"

using namespace ideal;
using fixtures::linear4;
using fixtures::sigma_star;

TEST_CASE("automaton JSON round-trips bit-identically") {
    Dfa a = linear4();
    std::string text = emit_automaton_json(a);
    Dfa back = parse_automaton_json(text);
    CHECK(back == a);
    CHECK(emit_automaton_json(back) == text);
}

TEST_CASE("emitted JSON matches the canonical form byte for byte") {
    Dfa a = principal_automaton("a", {'a', 'b'});
    CHECK(emit_automaton_json(a) == R"({
  "alphabet": [
    "a",
    "b"
  ],
  "finals": [
    1
  ],
  "initial": 0,
  "states": 2,
  "transitions": [
    [
      0,
      "a",
      1
    ],
    [
      0,
      "b",
      0
    ],
    [
      1,
      "a",
      1
    ],
    [
      1,
      "b",
      1
    ]
  ]
}
)");
}

TEST_CASE("emitted DOT matches the expected rendering byte for byte") {
    Dfa a = principal_automaton("a", {'a', 'b'});
    CHECK(emit_dot(a) == R"(digraph dfa {
  rankdir=LR;
  __start [shape=point];
  q0 [shape=circle];
  q1 [shape=doublecircle];
  __start -> q0;
  q0 -> q0 [label="b"];
  q0 -> q1 [label="a"];
  q1 -> q1 [label="a,b"];
}
)");
}

TEST_CASE("automaton JSON validates shape and contents") {
    CHECK_THROWS_AS(parse_automaton_json("not json"), ParseError);
    CHECK_THROWS_AS(parse_automaton_json("{}"), ParseError);
    CHECK_THROWS_AS(parse_automaton_json(R"({"alphabet":["a"],"states":1,"initial":0,
        "finals":[],"transitions":[]})"),
                    ParseError);
    // Structurally fine but missing a transition: a semantic error.
    CHECK_THROWS_AS(parse_automaton_json(R"({"alphabet":["a","b"],"states":1,"initial":0,
        "finals":[],"transitions":[[0,"a",0],[0,"a",0]]})"),
                    Error);
}

TEST_CASE("DOT export is deterministic and groups letters per edge") {
    std::string dot = emit_dot(linear4());
    CHECK(dot.find("q3 [shape=doublecircle];") != std::string::npos);
    CHECK(dot.find("q0 -> q2 [label=\"b,c\"];") != std::string::npos);
    CHECK(dot.find("q3 -> q3 [label=\"a,b,c\"];") != std::string::npos);
    CHECK(dot == emit_dot(linear4()));
}

TEST_CASE("word-set text format round-trips with headers and comments") {
    WordSet k = parse_wordset_text("# generators\n@alphabet abc\n\ncabb\ncacca\ncbca\n");
    CHECK(k.alphabet == std::vector<char>{'a', 'b', 'c'});
    CHECK(k.words.size() == 3);

    std::string text = emit_wordset_text(k);
    CHECK(parse_wordset_text(text) == k);

    WordSet inferred = parse_wordset_text("ab\nba\n");
    CHECK(inferred.alphabet == std::vector<char>{'a', 'b'});

    WordSet eps = parse_wordset_text("@alphabet ab\n\"\"\n");
    CHECK(eps.words == std::vector<std::string>{""});
    CHECK(parse_wordset_text(emit_wordset_text(eps)) == eps);

    CHECK_THROWS_AS(parse_wordset_text("# nothing\n"), ParseError);
}

TEST_CASE("decomposition JSON carries mode, tags and verification") {
    IdealAutomaton ia = check_ideal(linear4());
    Decomposition d = decompose_linear(ia);
    std::string text = emit_decomposition_json(d);
    Decomposition back = parse_decomposition_json(text);
    CHECK(back.mode == DecompMode::Inter);
    CHECK(back.verified);
    REQUIRE(back.components.size() == 2);
    CHECK(back.components[0].tag == "reduced:k=0");
    CHECK(back.components[0].dfa == d.components[0].dfa);
    CHECK(back.source == d.source);
}
