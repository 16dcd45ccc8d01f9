#include "cqm/shift_system.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace cqm {

// ------------------------------------------------------------------ Config

Config::Config(std::string_view letters) : letters_(letters) {
    for (char c : letters_)
        if (c != 'L' && c != 'R')
            throw std::invalid_argument("configs contain only L and R, got '" + std::string(letters) + "'");
}

Config Config::of(const ShiftWord& word) {
    const std::string& w = word.letters();
    return Config(std::string(w.rbegin(), w.rend()));
}

ShiftWord Config::to_shift() const { return ShiftWord(std::string(letters_.rbegin(), letters_.rend())); }

Config Config::parse(std::string_view text) {
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    if (!text.empty() && text.back() == '^') text.remove_suffix(1);
    for (std::size_t i = 0; i < text.size(); ++i)
        if (text[i] != 'L' && text[i] != 'R') throw ParseError("configs contain only L and R", i);
    return Config(text);
}

std::string Config::to_string() const { return letters_ + '^'; }

// ------------------------------------------------------ PrefixRewriteSystem

namespace {

void read_generator(const NormalForm& f, std::string& path, std::size_t g,
                    std::vector<PopPushRule>& rules, std::vector<Config>& fails,
                    std::vector<ExpansionRule>& expansions) {
    if (f.is_leaf()) {
        rules.push_back({Config(path), Config::of(f.word()), g});
        return;
    }
    fails.emplace_back(path);
    const std::size_t first_rule = rules.size();
    path.push_back('L');
    read_generator(f.first(), path, g, rules, fails, expansions);
    path.back() = 'R';
    read_generator(f.second(), path, g, rules, fails, expansions);
    path.pop_back();
    // Every leaf below this node is a possible expansion target.
    for (std::size_t i = first_rule; i < rules.size(); ++i)
        expansions.push_back({Config(path), rules[i].push, g});
}

}  // namespace

PrefixRewriteSystem::PrefixRewriteSystem(std::vector<NormalForm> generators)
    : generators_(std::move(generators)) {
    for (std::size_t g = 0; g < generators_.size(); ++g) {
        std::string path;
        std::vector<ExpansionRule> expansions;
        read_generator(generators_[g], path, g, rules_, fail_configs_, expansions);
        // Outer nodes were appended last; list root expansions first.
        std::stable_sort(expansions.begin(), expansions.end(),
                         [](const ExpansionRule& a, const ExpansionRule& b) {
                             return a.whole_stack < b.whole_stack;
                         });
        expansion_rules_.insert(expansion_rules_.end(), expansions.begin(), expansions.end());
    }
    std::sort(fail_configs_.begin(), fail_configs_.end());
    fail_configs_.erase(std::unique(fail_configs_.begin(), fail_configs_.end()), fail_configs_.end());
}

std::optional<Config> PrefixRewriteSystem::step(const Config& c, std::size_t generator) const {
    return cqm::step(c, generators_.at(generator));
}

PrefixRewriteSystem build_system(std::vector<NormalForm> generators) {
    return PrefixRewriteSystem(std::move(generators));
}

PrefixRewriteSystem build_system(std::span<const Term> generators) {
    std::vector<NormalForm> forms;
    for (const Term& t : generators) {
        auto f = as_normal_form(t);
        if (!f) throw std::invalid_argument("generator is not in CQ normal form: " + to_string(t));
        forms.push_back(*f);
    }
    return PrefixRewriteSystem(std::move(forms));
}

std::optional<Config> step(const Config& c, const NormalForm& f) {
    const std::string& letters = c.letters();
    const NormalForm* cur = &f;
    std::size_t used = 0;
    while (!cur->is_leaf()) {
        if (used == letters.size()) return std::nullopt;
        cur = letters[used++] == 'L' ? &cur->first() : &cur->second();
    }
    const std::string& w = cur->word().letters();
    std::string out(w.rbegin(), w.rend());
    out.append(letters, used, std::string::npos);
    return Config(out);
}

// -------------------------------------------------------- brute-force oracle

Reachability enumerate_reachable(const ShiftWord& s, const std::vector<NormalForm>& generators,
                                 std::size_t max_depth, std::size_t max_length) {
    Reachability out;
    std::vector<Config> frontier{Config::of(s)};
    std::vector<Config> seen = frontier;
    std::unordered_set<Config, ConfigHash> index(seen.begin(), seen.end());
    std::size_t depth = 0;
    for (; depth < max_depth && !frontier.empty(); ++depth) {
        std::vector<Config> next;
        for (const Config& c : frontier) {
            for (const NormalForm& f : generators) {
                auto r = step(c, f);
                if (!r) {
                    out.saw_failure = true;
                } else if (r->size() > max_length) {
                    out.hit_length_cap = true;
                } else if (index.insert(*r).second) {
                    seen.push_back(*r);
                    next.push_back(std::move(*r));
                }
            }
        }
        frontier = std::move(next);
    }
    out.exhausted = frontier.empty() && !out.hit_length_cap;
    std::sort(seen.begin(), seen.end());
    out.configs = std::move(seen);
    return out;
}

}  // namespace cqm
