#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cqm/config.hpp"

namespace cqm {

/// Nondeterministic finite automaton over {L, R} denoting a regular set of
/// configs (words read top of stack first; end of word is the stack bottom).
class ConfigAutomaton {
public:
    using State = std::uint32_t;
    static constexpr std::size_t kLetters = 2;

    ConfigAutomaton() = default;

    static ConfigAutomaton empty_language();
    static ConfigAutomaton universal();
    static ConfigAutomaton from_configs(const std::vector<Config>& configs);

    State add_state();
    void add_transition(State from, Letter a, State to);
    void set_initial(State s, bool on = true);
    void set_accepting(State s, bool on = true);

    std::size_t state_count() const { return delta_.size(); }
    bool is_initial(State s) const { return initial_[s]; }
    bool is_accepting(State s) const { return accepting_[s]; }
    const std::vector<State>& successors(State s, Letter a) const {
        return delta_[s][static_cast<std::size_t>(a)];
    }

    bool accepts(const Config& c) const;
    bool is_empty() const;
    /// True iff the language is finite.
    bool is_finite() const;

    ConfigAutomaton intersect(const ConfigAutomaton& other) const;
    ConfigAutomaton unite(const ConfigAutomaton& other) const;
    /// Complete deterministic automaton for the same language.
    ConfigAutomaton determinize() const;
    ConfigAutomaton complement() const;
    /// Minimal trimmed DFA with breadth-first state numbering; two automata
    /// denote the same language iff their minimized forms are identical.
    ConfigAutomaton minimize() const;
    /// Useful states only (reachable and co-reachable), renumbered
    /// breadth-first from the initial states.
    ConfigAutomaton normalized() const;

    bool equivalent(const ConfigAutomaton& other) const;

    /// Accepted configs of length <= max_length, shortlex order.
    std::vector<Config> enumerate(std::size_t max_length) const;

    /// Line format: "states N", "initial ...", "accepting ...", then one
    /// "FROM LETTER TO" line per transition.
    std::string serialize() const;
    static ConfigAutomaton deserialize(std::string_view text);

    friend bool operator==(const ConfigAutomaton&, const ConfigAutomaton&) = default;

private:
    std::vector<std::array<std::vector<State>, kLetters>> delta_;
    std::vector<bool> initial_;
    std::vector<bool> accepting_;

    std::vector<bool> reachable() const;
    std::vector<bool> coreachable() const;
    ConfigAutomaton restricted(const std::vector<bool>& keep) const;
};

}  // namespace cqm
