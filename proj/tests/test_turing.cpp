#include <doctest.h>

#include <random>

#include "satkit/turing.hpp"
#include "support.hpp"

using namespace satkit;
using namespace satkit::tm;

namespace {

using testing::contains_b;
using testing::ends_in_b;
using testing::looper;

MachineSpec guesser() {
    auto m = testing::machine_skeleton({"q0"}, {"a"});
    m.add("q0", "a", "q0", "a", Move::R);
    m.add("q0", "a", "accept", "a", Move::R);
    return m;
}

bool is_s_hash_s(const Word& w) {
    std::size_t hashes = 0, at = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == "#") {
            ++hashes;
            at = i;
        }
    }
    if (hashes != 1) return false;
    return Word(w.begin(), w.begin() + at) == Word(w.begin() + at + 1, w.end());
}

}  // namespace

TEST_CASE("equality checker transitions") {
    auto m = build_equality_checker();
    m.validate();
    CHECK(m.deterministic());
    Configuration c{split_word("1#1"), 0, "A"};
    auto n = step(m, c, 0);
    CHECK(n.state == "F1");
    CHECK(n.tape[0] == "x");
    CHECK(n.head == 1);

    Configuration mismatch{split_word("x#0"), 2, "C1"};
    auto r = step(m, mismatch, 0);
    CHECK(r.state == "reject");
    CHECK(r.tape[2] == "0");
    CHECK(r.head == 1);

    CHECK_THROWS_AS(step(m, r, 0), InvalidInput);
    CHECK_THROWS_AS(step(m, c, 1), InvalidInput);
}

TEST_CASE("missing entries reject and left moves stop at the edge") {
    auto m = ends_in_b();
    Configuration c{split_word("a"), 0, "back"};
    auto r = step(m, c, 0);
    CHECK(r.state == "reject");
    CHECK(r.tape == split_word("a"));
    CHECK(r.head == 1);

    auto left = testing::machine_skeleton({"q0"}, {"a"});
    left.add("q0", "a", "q0", "a", Move::L);
    auto stay = step(left, Configuration{split_word("a"), 0, "q0"}, 0);
    CHECK(stay.head == 0);
}

TEST_CASE("equality checker worked runs") {
    auto m = build_equality_checker();
    auto run = [&](const char* w) { return run_dtm(m, split_word(w), 10000); };
    CHECK(run("101#101").verdict == Verdict::Accept);
    CHECK(run("101#100").verdict == Verdict::Reject);
    CHECK(run("101101").verdict == Verdict::Reject);
    CHECK(run("0#1").verdict == Verdict::Reject);

    // traced by hand from the transition table
    auto hash = run("#");
    CHECK(hash.verdict == Verdict::Accept);
    CHECK(hash.steps_used == 2);
    auto zero = run("0#0");
    CHECK(zero.verdict == Verdict::Accept);
    CHECK(zero.steps_used == 8);
    CHECK(zero.final.state == "accept");
}

TEST_CASE("equality checker language up to length 7") {
    auto m = build_equality_checker();
    std::size_t mismatches = 0;
    for (const auto& w : testing::all_words({"0", "1", "#"}, 7)) {
        auto r = run_dtm(m, w, 100000);
        REQUIRE(r.verdict != Verdict::StepLimitExceeded);
        mismatches += (r.verdict == Verdict::Accept) != is_s_hash_s(w);
    }
    CHECK(mismatches == 0);
}

TEST_CASE("trace records every configuration") {
    auto m = build_equality_checker();
    std::vector<Configuration> trace;
    auto r = run_dtm(m, split_word("0#0"), 100, &trace);
    CHECK(trace.size() == r.steps_used + 1);
    CHECK(trace.front() == initial_configuration(m, split_word("0#0")));
    CHECK(format_configuration(trace.front(), m.blank) == "[A] 0 #0");
    CHECK(format_configuration(trace[1], m.blank) == "x [F0] # 0");
}

TEST_CASE("step limit and input validation") {
    auto r = run_dtm(looper(), split_word("aa"), 4);
    CHECK(r.verdict == Verdict::StepLimitExceeded);
    CHECK(r.steps_used == 4);
    CHECK_THROWS_AS(run_dtm(build_equality_checker(), split_word("012"), 10), InvalidInput);
    CHECK_THROWS_AS(run_dtm(guesser(), split_word("a"), 10), InvalidInput);
    CHECK(to_string(Verdict::StepLimitExceeded) == "step_limit_exceeded");
}

TEST_CASE("nondeterministic simulation") {
    auto g = run_ntm(guesser(), split_word("a"), 3);
    CHECK(g.outcome.verdict == Verdict::Accept);
    REQUIRE(g.choices);
    CHECK(*g.choices == std::vector<int>{1});
    CHECK(g.outcome.steps_used == 1);

    auto loop = run_ntm(looper(), split_word("a"), 4);
    CHECK(loop.outcome.verdict == Verdict::StepLimitExceeded);
    CHECK_FALSE(loop.choices);

    auto c = run_ntm(contains_b(), split_word("aab"), 10);
    CHECK(c.outcome.verdict == Verdict::Accept);
    CHECK(*c.choices == std::vector<int>{1, 1, 1});

    auto none = run_ntm(contains_b(), split_word("aa"), 10);
    CHECK(none.outcome.verdict == Verdict::Reject);
}

TEST_CASE("run_ntm matches run_dtm on deterministic machines") {
    for (const auto& m : {build_equality_checker(), ends_in_b()}) {
        for (const auto& w : testing::all_words(m.input_alphabet, 4)) {
            auto d = run_dtm(m, w, 200);
            auto n = run_ntm(m, w, 200);
            CHECK(d.verdict == n.outcome.verdict);
            CHECK(d.steps_used == n.outcome.steps_used);
            if (d.verdict == Verdict::Accept) {
                REQUIRE(n.choices);
                CHECK(*n.choices == std::vector<int>(d.steps_used, 1));
            }
        }
    }
}

TEST_CASE("run_ntm agrees with breadth-first search") {
    for (const auto& m : {guesser(), contains_b(), ends_in_b(), looper()}) {
        for (const auto& w : testing::all_words(m.input_alphabet, 4)) {
            for (std::size_t depth : {1u, 2u, 3u, 5u}) {
                auto r = run_ntm(m, w, depth);
                CHECK((r.outcome.verdict == Verdict::Accept) == testing::bfs_accepts(m, w, depth));
            }
        }
    }
}

TEST_CASE("machine text round trip") {
    auto m = build_equality_checker();
    auto text = write_machine(m);
    auto back = parse_machine(text);
    CHECK(back.delta == m.delta);
    CHECK(back.states == m.states);
    CHECK(back.tape_alphabet == m.tape_alphabet);
    CHECK(write_machine(back) == text);

    auto g = parse_machine("; guesser\nstates: q0 accept reject\ninput: a\ntape: a _\nstart: q0\n"
                           "accept: accept\nreject: reject\ndelta: q0 a -> q0 a R\ndelta: q0 a -> accept a R\n");
    CHECK(g.delta == guesser().delta);
    CHECK_FALSE(g.deterministic());

    CHECK_THROWS_AS(parse_machine("states: q\n"), ParseError);
    CHECK_THROWS_AS(parse_machine("bogus line\n"), ParseError);
    try {
        parse_machine("states: q0 accept reject\ninput: a\ntape: a _\nstart: q0\naccept: accept\nreject: reject\n"
                      "delta: q0 a -> q0 a X\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 7);
    }
}

TEST_CASE("words split and join") {
    CHECK(split_word("101#") == Word{"1", "0", "1", "#"});
    CHECK(split_word("ab cd") == Word{"ab", "cd"});
    CHECK(split_word("") == Word{});
    CHECK(join_word(Word{"1", "0"}) == "10");
    CHECK(join_word(Word{"ab", "c"}) == "ab c");
}

TEST_CASE("multitape snapshots") {
    const std::string dot(kHeadMark);
    auto one = encode_multitape({{{"a", "b"}}, {0}});
    CHECK(one == Word{"#", "a" + dot, "b", "#"});
    auto empty = encode_multitape({{{}, {}}, {0, 0}});
    CHECK(empty == Word{"#", "_" + dot, "#", "_" + dot, "#"});
    CHECK(decode_multitape(empty) == MultitapeSnapshot{{{}, {}}, {0, 0}});

    CHECK_THROWS_AS(encode_multitape({{{"#"}}, {0}}), InvalidInput);
    CHECK_THROWS_AS(encode_multitape({{{"a"}}, {2}}), InvalidInput);

    std::mt19937 rng(83);
    std::uniform_int_distribution<int> len(0, 4), sym(0, 1);
    const Symbol alphabet[] = {"a", "b"};
    for (int trial = 0; trial < 500; ++trial) {
        MultitapeSnapshot s;
        for (int t = 0; t < 3; ++t) {
            Word w;
            const int n = len(rng);
            for (int i = 0; i < n; ++i) w.push_back(alphabet[sym(rng)]);
            s.heads.push_back(std::uniform_int_distribution<std::size_t>(0, w.size())(rng));
            s.tapes.push_back(std::move(w));
        }
        CHECK(decode_multitape(encode_multitape(s)) == s);
    }
}
