#include <map>
#include <random>
#include <set>

#include "doctest.h"

#include "cqm/shift_system.hpp"
#include "generators.hpp"

using namespace cqm;

namespace {

NormalForm nf(const char* text) { return cq_normalize(parse_term(text)); }

std::vector<NormalForm> gens(std::initializer_list<const char*> texts) {
    std::vector<NormalForm> out;
    for (const char* t : texts) out.push_back(nf(t));
    return out;
}

std::vector<Config> all_configs(std::size_t max_length) {
    std::vector<Config> out{Config()};
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i].size() < max_length)
            for (char c : {'L', 'R'}) out.emplace_back(out[i].letters() + c);
    return out;
}

ConfigAutomaton just(std::initializer_list<const char*> configs) {
    std::vector<Config> cs;
    for (const char* c : configs) cs.push_back(Config::parse(c));
    return ConfigAutomaton::from_configs(cs);
}

/// Explicit-state search of ordinary steps plus whole-stack expansions, for
/// stacks up to `cap` letters. Returns nullopt when the cap truncated the
/// search, else whether some reachable cycle contains an expansion.
std::optional<bool> expansion_cycle_oracle(const std::vector<NormalForm>& b, const Config& start,
                                           std::size_t cap) {
    const PrefixRewriteSystem sys(b);
    std::map<Config, std::vector<Config>> edges;
    std::vector<std::pair<Config, Config>> expansions;
    std::vector<Config> work{start};
    std::set<Config> seen{start};
    bool truncated = false;
    while (!work.empty()) {
        Config c = work.back();
        work.pop_back();
        std::vector<Config> next;
        for (std::size_t g = 0; g < b.size(); ++g)
            if (auto r = sys.step(c, g)) next.push_back(*r);
        for (const ExpansionRule& e : sys.expansion_rules())
            if (e.whole_stack == c) {
                next.push_back(e.replacement);
                expansions.emplace_back(c, e.replacement);
            }
        for (const Config& n : next) {
            if (n.size() > cap) {
                truncated = true;
                continue;
            }
            edges[c].push_back(n);
            if (seen.insert(n).second) work.push_back(n);
        }
    }
    if (truncated) return std::nullopt;
    auto reaches = [&](const Config& from, const Config& to) {
        std::set<Config> vis{from};
        std::vector<Config> st{from};
        while (!st.empty()) {
            Config c = st.back();
            st.pop_back();
            if (c == to) return true;
            for (const Config& n : edges[c])
                if (vis.insert(n).second) st.push_back(n);
        }
        return false;
    };
    for (const auto& [from, to] : expansions)
        if (reaches(to, from)) return true;
    return false;
}

}  // namespace

TEST_CASE("build_system reads rules off the trees") {
    auto a = build_system(gens({"<L,R*R>"}));
    CHECK(a.rules() == std::vector<PopPushRule>{{Config("L"), Config("L"), 0}, {Config("R"), Config("RR"), 0}});
    CHECK(a.fail_configs() == std::vector<Config>{Config()});

    auto b = build_system(gens({"<I,I>"}));
    CHECK(b.rules() == std::vector<PopPushRule>{{Config("L"), Config(), 0}, {Config("R"), Config(), 0}});
    CHECK(b.fail_configs() == std::vector<Config>{Config()});

    auto c = build_system(gens({"<<I,I>,R>"}));
    CHECK(c.rules() == std::vector<PopPushRule>{
                           {Config("LL"), Config(), 0}, {Config("LR"), Config(), 0}, {Config("R"), Config("R"), 0}});
    CHECK(c.fail_configs() == std::vector<Config>{Config(), Config("L")});
    // Root expansions may pick any leaf; the node at L only its own two.
    CHECK(c.expansion_rules().size() == 5);
    CHECK(c.expansion_rules().front().whole_stack == Config());

    auto d = build_system(gens({"<L,R*L>", "R*R"}));
    CHECK(d.rules().back() == PopPushRule{Config(), Config("RR"), 1});
    CHECK(d.fail_configs() == std::vector<Config>{Config()});
}

TEST_CASE("build_system rejects non-normal terms") {
    std::vector<Term> ok{parse_term("<L,R*R>")};
    CHECK(build_system(std::span<const Term>(ok)).generators().size() == 1);
    std::vector<Term> bad{parse_term("L*<I,I>")};
    CHECK_THROWS_AS(build_system(std::span<const Term>(bad)), std::invalid_argument);
}

TEST_CASE("step examples") {
    CHECK(step(Config::parse("RR^"), nf("<L,R*R>")) == Config("RRR"));
    CHECK_FALSE(step(Config(), nf("<I,I>")));
    CHECK(step(Config::parse("L^"), nf("<L,R*R>")) == Config("L"));
    CHECK(step(Config::parse("LR^"), nf("R*L")) == Config("LRLR"));
}

TEST_CASE("step agrees with apply_shift") {
    std::mt19937_64 rng(61);
    const auto stacks = all_configs(8);
    for (int i = 0; i < 100; ++i) {
        auto b = testing::random_generators(rng, 3, 3, 3, true);
        for (const NormalForm& f : b)
            for (const Config& c : stacks) {
                NormalForm r = apply_shift(c.to_shift(), f);
                auto s = step(c, f);
                REQUIRE(s.has_value() == r.is_leaf());
                if (s) CHECK(s->to_shift() == r.word());
            }
    }
}

TEST_CASE("pre_star examples") {
    const auto everything = all_configs(6);
    auto a = pre_star(build_system(gens({"<I,I>"})), just({"^"}));
    for (const Config& c : everything) CHECK(a.accepts(c));
    CHECK(a.equivalent(ConfigAutomaton::universal()));

    CHECK(pre_star(build_system(gens({"<L,R*R>"})), ConfigAutomaton::empty_language()).is_empty());

    auto c = pre_star(build_system(gens({"<L,R*R>"})), just({"^"}));
    CHECK(c.enumerate(8) == std::vector<Config>{Config()});
}

TEST_CASE("post_star examples") {
    auto a = post_star(build_system(gens({"<L,R*R>"})), just({"RR^"}));
    CHECK_FALSE(a.is_finite());
    std::vector<Config> expected;
    for (std::size_t n = 2; n <= 9; ++n) expected.emplace_back(std::string(n, 'R'));
    CHECK(a.enumerate(9) == expected);

    auto b = post_star(build_system(gens({"<R,L>"})), just({"R^"}));
    CHECK(b.enumerate(10) == std::vector<Config>{Config("L"), Config("R")});
    CHECK(b.is_finite());

    CHECK(post_star(build_system(gens({"<R,L>"})), ConfigAutomaton::empty_language()).is_empty());

    // Shift generators push unconditionally, including on the empty stack.
    auto c = post_star(build_system(gens({"L"})), just({"^"}));
    CHECK(c.enumerate(3) == std::vector<Config>{Config(), Config("L"), Config("LL"), Config("LLL")});
}

TEST_CASE("bad_set examples") {
    const auto stacks = all_configs(6);
    auto a = bad_set(gens({"<L,R*R>"}));
    for (const Config& c : stacks) CHECK(a.accepts(c) == !c.empty());
    CHECK(bad_set(gens({"<I,I>"})).is_empty());
    auto c = bad_set(gens({"<R,L>"}));
    for (const Config& s : stacks) CHECK(c.accepts(s) == !s.empty());
}

TEST_CASE("bad_set is the complement of can_fail") {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 30; ++i) {
        ShiftAnalysis an(testing::random_generators(rng, 3, 3, 2, true));
        CHECK(an.bad_set().equivalent(an.can_fail().complement()));
        CHECK(an.bad_set().intersect(an.can_fail()).is_empty());
        CHECK(an.bad_set().unite(an.can_fail()).equivalent(ConfigAutomaton::universal()));
    }
}

TEST_CASE("shift predicates examples") {
    CHECK(is_bad(ShiftWord("RR"), gens({"<L,R*R>"})));
    CHECK_FALSE(is_bad(ShiftWord(), gens({"<I,I>"})));
    CHECK(is_bad(ShiftWord("R"), gens({"<R,L>"})));

    CHECK(is_extenuative(ShiftWord("RR"), gens({"<L,R*R>"})));
    CHECK_FALSE(is_extenuative(ShiftWord("L"), gens({"<L,R*R>"})));
    CHECK_FALSE(is_extenuative(ShiftWord("R"), gens({"<R,L>"})));
    CHECK_FALSE(is_extenuative(ShiftWord("L"), gens({"<I,I>"})));

    CHECK(unbounded_expansions(ShiftWord("L"), gens({"<I,I>"})));
    CHECK_FALSE(unbounded_expansions(ShiftWord("RR"), gens({"<L,R*R>"})));
    CHECK_FALSE(unbounded_expansions(ShiftWord("R"), gens({"<R,L>"})));
}

TEST_CASE("enumerate_reachable examples") {
    auto a = enumerate_reachable(ShiftWord("RR"), gens({"<L,R*R>"}), 3, 10);
    CHECK(a.configs == std::vector<Config>{Config("RR"), Config("RRR"), Config("RRRR"), Config("RRRRR")});
    CHECK_FALSE(a.saw_failure);
    CHECK_FALSE(a.exhausted);

    auto b = enumerate_reachable(ShiftWord(), gens({"<I,I>"}), 1, 10);
    CHECK(b.saw_failure);

    auto c = enumerate_reachable(ShiftWord("R"), gens({"<R,L>"}), 5, 10);
    CHECK(c.configs == std::vector<Config>{Config("L"), Config("R")});
    CHECK_FALSE(c.saw_failure);
    CHECK(c.exhausted);
}

TEST_CASE("saturation agrees with the brute-force oracle") {
    std::mt19937_64 rng(71);
    const auto stacks = all_configs(5);
    for (int i = 0; i < 40; ++i) {
        auto b = testing::random_generators(rng, 3, 3, 2);
        ShiftAnalysis an(b);
        for (const Config& c : stacks) {
            auto r = enumerate_reachable(c.to_shift(), b, 12, 14);
            if (r.saw_failure) {
                CHECK(an.can_fail().accepts(c));
            } else if (r.exhausted) {
                CHECK_FALSE(an.can_fail().accepts(c));
                // Closed search: post* is exactly what the oracle found.
                auto post = post_star(an.system(), ConfigAutomaton::from_configs({c}));
                CHECK(post.is_finite());
                CHECK(post.enumerate(14) == r.configs);
                CHECK_FALSE(an.is_extenuative(c.to_shift()));
            }
            if (an.is_extenuative(c.to_shift())) {
                auto deep = enumerate_reachable(c.to_shift(), b, 1000000, 14);
                CHECK(deep.hit_length_cap);
            }
        }
    }
}

TEST_CASE("unbounded_expansions agrees with explicit cycle search") {
    std::mt19937_64 rng(73);
    int compared = 0;
    for (int i = 0; i < 60; ++i) {
        auto b = testing::random_generators(rng, 3, 3, 2);
        ShiftAnalysis an(b);
        for (const NormalForm& f : b)
            for (const auto& entry : shifts_of(f)) {
                auto oracle = expansion_cycle_oracle(b, Config::of(entry.word), 12);
                if (!oracle) continue;
                CHECK(an.unbounded_expansions(entry.word) == *oracle);
                ++compared;
            }
    }
    CHECK(compared > 50);
}
