#include <algorithm>

#include "cqm/shift_system.hpp"

namespace cqm {

ShiftAnalysis::ShiftAnalysis(std::vector<NormalForm> generators)
    : system_(std::move(generators)),
      can_fail_(pre_star(system_, ConfigAutomaton::from_configs(system_.fail_configs()))),
      bad_(can_fail_.complement().minimize()) {
    build_expansion_graph();
}

bool ShiftAnalysis::is_bad(const ShiftWord& s) const { return bad_.accepts(Config::of(s)); }

bool ShiftAnalysis::is_extenuative(const ShiftWord& s) const {
    if (!is_bad(s)) return false;
    return !post_star(system_, ConfigAutomaton::from_configs({Config::of(s)})).is_finite();
}

// Expansions fire only on a whole stack equal to an internal node, and always
// leave one of finitely many replacement configs. A run with unboundedly many
// expansions therefore revisits some replacement config, so it suffices to
// look for a cycle in the graph "replacement -> (ordinary run) -> internal
// node -> (expansion) -> replacement".
void ShiftAnalysis::build_expansion_graph() {
    for (const ExpansionRule& e : system_.expansion_rules()) {
        internal_nodes_.push_back(e.whole_stack);
        replacements_.push_back(e.replacement);
    }
    for (auto* v : {&internal_nodes_, &replacements_}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    for (const Config& u : internal_nodes_)
        reach_internal_.push_back(pre_star(system_, ConfigAutomaton::from_configs({u})));

    auto replacement_index = [&](const Config& c) {
        return std::size_t(std::lower_bound(replacements_.begin(), replacements_.end(), c) -
                           replacements_.begin());
    };
    auto internal_index = [&](const Config& c) {
        return std::size_t(std::lower_bound(internal_nodes_.begin(), internal_nodes_.end(), c) -
                           internal_nodes_.begin());
    };

    const std::size_t n = replacements_.size();
    expansion_edges_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        for (const ExpansionRule& e : system_.expansion_rules())
            if (reach_internal_[internal_index(e.whole_stack)].accepts(replacements_[i]))
                expansion_edges_[i].push_back(replacement_index(e.replacement));
        std::sort(expansion_edges_[i].begin(), expansion_edges_[i].end());
        expansion_edges_[i].erase(std::unique(expansion_edges_[i].begin(), expansion_edges_[i].end()),
                                  expansion_edges_[i].end());
    }

    auto reachable_from = [&](std::size_t start) {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack(expansion_edges_[start]);
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            if (seen[v]) continue;
            seen[v] = true;
            for (std::size_t w : expansion_edges_[v]) stack.push_back(w);
        }
        return seen;  // strictly after at least one edge
    };
    std::vector<bool> on_cycle(n, false);
    std::vector<std::vector<bool>> reach(n);
    for (std::size_t i = 0; i < n; ++i) {
        reach[i] = reachable_from(i);
        on_cycle[i] = reach[i][i];
    }
    on_cycle_path_.assign(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        on_cycle_path_[i] = on_cycle[i];
        for (std::size_t j = 0; j < n && !on_cycle_path_[i]; ++j) on_cycle_path_[i] = reach[i][j] && on_cycle[j];
    }
}

bool ShiftAnalysis::unbounded_expansions(const ShiftWord& s) const {
    const Config start = Config::of(s);
    for (const ExpansionRule& e : system_.expansion_rules()) {
        auto k = std::size_t(std::lower_bound(internal_nodes_.begin(), internal_nodes_.end(), e.whole_stack) -
                             internal_nodes_.begin());
        if (!reach_internal_[k].accepts(start)) continue;
        auto r = std::size_t(std::lower_bound(replacements_.begin(), replacements_.end(), e.replacement) -
                             replacements_.begin());
        if (on_cycle_path_[r]) return true;
    }
    return false;
}

ConfigAutomaton bad_set(const std::vector<NormalForm>& generators) {
    return ShiftAnalysis(generators).bad_set();
}

bool is_bad(const ShiftWord& s, const std::vector<NormalForm>& generators) {
    return ShiftAnalysis(generators).is_bad(s);
}

bool is_extenuative(const ShiftWord& s, const std::vector<NormalForm>& generators) {
    return ShiftAnalysis(generators).is_extenuative(s);
}

bool unbounded_expansions(const ShiftWord& s, const std::vector<NormalForm>& generators) {
    return ShiftAnalysis(generators).unbounded_expansions(s);
}

}  // namespace cqm
