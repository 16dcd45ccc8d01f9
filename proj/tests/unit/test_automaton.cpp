#include <random>
#include <set>

#include "doctest.h"

#include "cqm/automaton.hpp"

using namespace cqm;

namespace {

std::vector<Config> all_configs(std::size_t max_length) {
    std::vector<Config> out{Config()};
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i].size() < max_length)
            for (char c : {'L', 'R'}) out.emplace_back(out[i].letters() + c);
    return out;
}

ConfigAutomaton random_nfa(std::mt19937_64& rng, std::size_t states) {
    ConfigAutomaton a;
    for (std::size_t i = 0; i < states; ++i) a.add_state();
    for (ConfigAutomaton::State s = 0; s < states; ++s) {
        if (rng() % 4 == 0) a.set_initial(s);
        if (rng() % 3 == 0) a.set_accepting(s);
        for (Letter x : {Letter::L, Letter::R})
            for (int k = 0; k < 2; ++k)
                if (rng() % 2) a.add_transition(s, x, ConfigAutomaton::State(rng() % states));
    }
    a.set_initial(0);
    return a;
}

}  // namespace

TEST_CASE("config text form") {
    CHECK(Config::parse("RRL^") == Config("RRL"));
    CHECK(Config::parse("^").empty());
    CHECK(Config::parse("LR") == Config("LR"));
    CHECK(Config("RRL").to_string() == "RRL^");
    CHECK(Config().to_string() == "^");
    CHECK(Config::of(ShiftWord("RRL")) == Config("LRR"));
    CHECK(Config::of(ShiftWord("RRL")).to_shift() == ShiftWord("RRL"));
    CHECK_THROWS_AS(Config::parse("RXL^"), ParseError);
}

TEST_CASE("finite languages") {
    auto a = ConfigAutomaton::from_configs({Config("L"), Config("RR"), Config()});
    CHECK(a.accepts(Config()));
    CHECK(a.accepts(Config("RR")));
    CHECK_FALSE(a.accepts(Config("R")));
    CHECK(a.is_finite());
    CHECK_FALSE(a.is_empty());
    CHECK(a.enumerate(5) == std::vector<Config>{Config(), Config("L"), Config("RR")});
    CHECK(ConfigAutomaton::empty_language().is_empty());
    CHECK(ConfigAutomaton::empty_language().is_finite());
    CHECK(ConfigAutomaton::from_configs({}).is_empty());
    CHECK_FALSE(ConfigAutomaton::universal().is_finite());
}

TEST_CASE("complement, product and union denote the set operations") {
    std::mt19937_64 rng(41);
    const auto words = all_configs(8);
    for (int i = 0; i < 60; ++i) {
        ConfigAutomaton a = random_nfa(rng, 1 + rng() % 5);
        ConfigAutomaton b = random_nfa(rng, 1 + rng() % 5);
        ConfigAutomaton na = a.complement();
        ConfigAutomaton nna = na.complement();
        ConfigAutomaton ab = a.intersect(b);
        ConfigAutomaton aub = a.unite(b);
        ConfigAutomaton ma = a.minimize();
        for (const Config& w : words) {
            const bool in_a = a.accepts(w), in_b = b.accepts(w);
            CHECK(na.accepts(w) == !in_a);
            CHECK(nna.accepts(w) == in_a);
            CHECK(ab.accepts(w) == (in_a && in_b));
            CHECK(aub.accepts(w) == (in_a || in_b));
            CHECK(ma.accepts(w) == in_a);
        }
        CHECK(nna.equivalent(a));
        CHECK(a.equivalent(ma));
        CHECK(a.is_empty() == a.enumerate(8).empty());
    }
}

TEST_CASE("finiteness agrees with length growth") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 100; ++i) {
        ConfigAutomaton a = random_nfa(rng, 1 + rng() % 4);
        // A trimmed automaton with n states has a word of length in [n, 2n)
        // iff its language is infinite.
        const std::size_t n = a.normalized().state_count();
        bool long_word = false;
        for (const Config& c : a.enumerate(2 * n + 1)) long_word = long_word || (c.size() >= n && n > 0);
        CHECK(a.is_finite() == !long_word);
    }
}

TEST_CASE("minimization is canonical") {
    auto a = ConfigAutomaton::from_configs({Config("L"), Config("R")});
    auto b = ConfigAutomaton::from_configs({Config("R"), Config("L"), Config("L")});
    CHECK(a.minimize() == b.minimize());
    CHECK(a.minimize().serialize() == "states 2\ninitial 0\naccepting 1\n0 L 1\n0 R 1\n");
    CHECK(ConfigAutomaton::universal().complement().minimize().state_count() == 0);
}

TEST_CASE("serialization round-trips") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 30; ++i) {
        ConfigAutomaton a = random_nfa(rng, 1 + rng() % 6);
        CHECK(ConfigAutomaton::deserialize(a.serialize()) == a);
    }
    CHECK_THROWS_AS(ConfigAutomaton::deserialize("initial 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(ConfigAutomaton::deserialize("states 1\n0 X 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(ConfigAutomaton::deserialize("states 1\n0 L 4\n"), std::invalid_argument);
}
