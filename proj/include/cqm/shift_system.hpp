#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cqm/automaton.hpp"
#include "cqm/config.hpp"
#include "cqm/normal_form.hpp"

namespace cqm {

/// Reading generator `generator` with `pop` exactly on top of the stack
/// replaces it by `push`.
struct PopPushRule {
    Config pop;
    Config push;
    std::size_t generator = 0;

    friend bool operator==(const PopPushRule&, const PopPushRule&) = default;
};

/// Applies only when `whole_stack` is the entire stack: the stack navigates
/// to an internal node of the generator and is replaced by the config of a
/// leaf word below that node.
struct ExpansionRule {
    Config whole_stack;
    Config replacement;
    std::size_t generator = 0;

    friend bool operator==(const ExpansionRule&, const ExpansionRule&) = default;
};

/// The shift machine for a generator list: configs are stacks, each
/// generator is an input letter, and right multiplication by a generator is
/// a prefix rewrite.
class PrefixRewriteSystem {
public:
    explicit PrefixRewriteSystem(std::vector<NormalForm> generators);

    const std::vector<NormalForm>& generators() const { return generators_; }
    /// Generator order, then leaf order within each generator.
    const std::vector<PopPushRule>& rules() const { return rules_; }
    /// Sorted shortlex, deduplicated across generators.
    const std::vector<Config>& fail_configs() const { return fail_configs_; }
    const std::vector<ExpansionRule>& expansion_rules() const { return expansion_rules_; }

    /// nullopt when the product becomes a pair (the run fails).
    std::optional<Config> step(const Config& c, std::size_t generator) const;

private:
    std::vector<NormalForm> generators_;
    std::vector<PopPushRule> rules_;
    std::vector<Config> fail_configs_;
    std::vector<ExpansionRule> expansion_rules_;
};

PrefixRewriteSystem build_system(std::vector<NormalForm> generators);

/// Throws std::invalid_argument if some term is not already in CQ normal form.
PrefixRewriteSystem build_system(std::span<const Term> generators);

/// Config of shift(c)*f when that is a shift; nullopt when it is a pair.
std::optional<Config> step(const Config& c, const NormalForm& f);

/// Configs from which some run of ordinary steps reaches `target`.
ConfigAutomaton pre_star(const PrefixRewriteSystem& sys, const ConfigAutomaton& target);

/// Configs reachable from `start` by ordinary steps.
ConfigAutomaton post_star(const PrefixRewriteSystem& sys, const ConfigAutomaton& start);

/// Caches the saturations a generator set needs for the shift analyses.
class ShiftAnalysis {
public:
    explicit ShiftAnalysis(std::vector<NormalForm> generators);

    const PrefixRewriteSystem& system() const { return system_; }

    /// Configs that can be driven to a failure.
    const ConfigAutomaton& can_fail() const { return can_fail_; }
    /// Complement of can_fail(): exactly the bad shifts, as configs.
    const ConfigAutomaton& bad_set() const { return bad_; }

    bool is_bad(const ShiftWord& s) const;
    bool is_extenuative(const ShiftWord& s) const;
    bool unbounded_expansions(const ShiftWord& s) const;

private:
    PrefixRewriteSystem system_;
    ConfigAutomaton can_fail_;
    ConfigAutomaton bad_;

    // Expansion graph over replacement configs: replacements[i] can run to
    // a stack that expands into replacements[j].
    std::vector<Config> replacements_;
    std::vector<std::vector<std::size_t>> expansion_edges_;
    std::vector<bool> on_cycle_path_;  // can reach a cycle of the graph
    std::vector<ConfigAutomaton> reach_internal_;  // pre* of each distinct whole_stack
    std::vector<Config> internal_nodes_;

    void build_expansion_graph();
};

ConfigAutomaton bad_set(const std::vector<NormalForm>& generators);
bool is_bad(const ShiftWord& s, const std::vector<NormalForm>& generators);
bool is_extenuative(const ShiftWord& s, const std::vector<NormalForm>& generators);
bool unbounded_expansions(const ShiftWord& s, const std::vector<NormalForm>& generators);

struct Reachability {
    /// Shortlex order, including the start config.
    std::vector<Config> configs;
    bool saw_failure = false;
    /// True when the search closed without hitting the depth or length caps.
    bool exhausted = false;
    /// True when some successor was dropped for exceeding max_length.
    bool hit_length_cap = false;
};

/// Breadth-first closure of step() from config(s), at most max_depth steps,
/// dropping configs longer than max_length.
Reachability enumerate_reachable(const ShiftWord& s, const std::vector<NormalForm>& generators,
                                 std::size_t max_depth, std::size_t max_length);

}  // namespace cqm
