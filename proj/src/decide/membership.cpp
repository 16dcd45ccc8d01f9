#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "cqm/decisions.hpp"
#include "cqm/invertible.hpp"

namespace cqm {

Verdict Verdict::yes(std::vector<std::size_t> witness) {
    Verdict v;
    v.kind = VerdictKind::Yes;
    v.witness = std::move(witness);
    return v;
}

Verdict Verdict::no(bool exhaustive) {
    Verdict v;
    v.kind = VerdictKind::No;
    v.exhaustive = exhaustive;
    return v;
}

Verdict Verdict::unknown(std::size_t spent, std::string diagnostic) {
    Verdict v;
    v.kind = VerdictKind::Unknown;
    v.budget_spent = spent;
    v.certificate = std::move(diagnostic);
    return v;
}

Verdict Verdict::infinite(std::string certificate) {
    Verdict v;
    v.kind = VerdictKind::Infinite;
    v.certificate = std::move(certificate);
    return v;
}

Verdict Verdict::finite(std::vector<NormalForm> elements) {
    Verdict v;
    v.kind = VerdictKind::Finite;
    v.elements = std::move(elements);
    return v;
}

std::string to_string(VerdictKind kind) {
    switch (kind) {
    case VerdictKind::Yes: return "yes";
    case VerdictKind::No: return "no";
    case VerdictKind::Unknown: return "unknown";
    case VerdictKind::Infinite: return "infinite";
    case VerdictKind::Finite: return "finite";
    }
    return "unknown";
}

MembershipConstraints MembershipConstraints::of(const NormalForm& target) {
    MembershipConstraints out;
    for (const ShiftEntry& e : shifts_of(target)) {
        Leaf leaf{e.address.access_word(), e.word, std::nullopt};
        if (!leaf.access.empty()) {
            leaf.parent = ShiftWord(std::string_view(leaf.access.letters()).substr(1));
            out.pair_constraints.push_back(*leaf.parent);
        }
        out.leaves.push_back(std::move(leaf));
    }
    std::sort(out.pair_constraints.begin(), out.pair_constraints.end());
    out.pair_constraints.erase(std::unique(out.pair_constraints.begin(), out.pair_constraints.end()),
                               out.pair_constraints.end());
    return out;
}

NormalForm product_of(const std::vector<std::size_t>& indices, const std::vector<NormalForm>& generators) {
    NormalForm p;
    for (std::size_t i : indices) p = multiply(p, generators.at(i));
    return p;
}

namespace {

ConfigAutomaton failing_configs(const PrefixRewriteSystem& sys) {
    return pre_star(sys, ConfigAutomaton::from_configs(sys.fail_configs()));
}

std::vector<std::size_t> trace_back(const std::vector<std::pair<std::size_t, std::size_t>>& parents,
                                    std::size_t node) {
    std::vector<std::size_t> out;
    while (node != 0) {
        out.push_back(parents[node].second);
        node = parents[node].first;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

// M-process configs, then pair-process configs; a latched pair process is
// nullopt.
struct SearchState {
    std::vector<Config> leaves;
    std::vector<std::optional<Config>> pairs;

    std::string key() const {
        std::string k;
        for (const Config& c : leaves) k += c.letters() + ',';
        k += ';';
        for (const auto& c : pairs) k += c ? c->letters() + ',' : std::string("*,");
        return k;
    }
};

}  // namespace

Verdict is_member(const NormalForm& target, const std::vector<NormalForm>& generators, std::size_t budget) {
    const MembershipConstraints mc = MembershipConstraints::of(target);
    const PrefixRewriteSystem sys(generators);

    std::vector<Config> goals;
    std::vector<ConfigAutomaton> can_reach_goal;
    for (const auto& leaf : mc.leaves) {
        goals.push_back(Config::of(leaf.word));
        can_reach_goal.push_back(pre_star(sys, ConfigAutomaton::from_configs({goals.back()})));
    }
    const ConfigAutomaton can_fail = failing_configs(sys);
    const std::size_t max_leaves = target.leaf_count();

    auto accepted = [&](const SearchState& s) {
        for (std::size_t i = 0; i < s.leaves.size(); ++i)
            if (s.leaves[i] != goals[i]) return false;
        return std::all_of(s.pairs.begin(), s.pairs.end(), [](const auto& c) { return !c; });
    };
    auto viable = [&](const SearchState& s) {
        for (std::size_t i = 0; i < s.leaves.size(); ++i)
            if (!can_reach_goal[i].accepts(s.leaves[i])) return false;
        for (const auto& c : s.pairs)
            if (c && !can_fail.accepts(*c)) return false;
        return true;
    };

    SearchState start;
    for (const auto& leaf : mc.leaves) start.leaves.push_back(Config::of(leaf.access));
    for (const ShiftWord& p : mc.pair_constraints) start.pairs.emplace_back(Config::of(p));

    if (accepted(start)) return Verdict::yes({});
    if (!viable(start)) return Verdict::no(true);

    // Search nodes: (parent, generator) with the state and product alongside.
    std::vector<std::pair<std::size_t, std::size_t>> parents{{0, 0}};
    std::deque<std::pair<std::size_t, std::pair<SearchState, NormalForm>>> queue;
    std::unordered_set<std::string> seen{start.key()};
    queue.push_back({0, {start, NormalForm()}});
    std::size_t expanded = 0;

    while (!queue.empty()) {
        if (expanded >= budget) return Verdict::unknown(expanded, "search budget exhausted");
        auto [node, payload] = std::move(queue.front());
        queue.pop_front();
        ++expanded;
        const auto& [state, product] = payload;
        for (std::size_t g = 0; g < generators.size(); ++g) {
            SearchState next;
            bool dead = false;
            for (const Config& c : state.leaves) {
                auto r = sys.step(c, g);
                if (!r) {
                    dead = true;
                    break;
                }
                next.leaves.push_back(std::move(*r));
            }
            if (dead) continue;
            for (const auto& c : state.pairs) next.pairs.push_back(c ? sys.step(*c, g) : std::nullopt);
            NormalForm next_product = multiply(product, generators[g]);
            // Leaf counts never shrink under right multiplication.
            if (next_product.leaf_count() > max_leaves) continue;
            if (!seen.insert(next.key()).second) continue;
            parents.emplace_back(node, g);
            if (accepted(next)) return Verdict::yes(trace_back(parents, parents.size() - 1));
            if (!viable(next)) continue;
            queue.push_back({parents.size() - 1, {std::move(next), std::move(next_product)}});
        }
    }
    return Verdict::no(true);
}

Verdict is_member_ri(const NormalForm& target, const std::vector<NormalForm>& generators, std::size_t budget) {
    if (collapse(target) != target) throw std::invalid_argument("target is not in CM normal form");
    if (!is_right_invertible(target)) throw std::invalid_argument("target is not right-invertible");
    std::vector<NormalForm> collapsed;
    for (const NormalForm& g : generators) {
        if (!is_right_invertible(g)) throw std::invalid_argument("generator is not right-invertible");
        collapsed.push_back(collapse(g));
    }
    if (target.is_identity()) return Verdict::yes({});
    return is_member(target, collapsed, budget);
}

KillResult killing_sequence(const ShiftWord& s, const std::vector<NormalForm>& generators, std::size_t budget) {
    const PrefixRewriteSystem sys(generators);
    const ConfigAutomaton can_fail = failing_configs(sys);
    KillResult out;

    const Config start = Config::of(s);
    if (!can_fail.accepts(start)) {
        out.frontier_closed = true;
        return out;
    }
    std::vector<std::pair<std::size_t, std::size_t>> parents{{0, 0}};
    std::deque<std::pair<std::size_t, Config>> queue{{0, start}};
    std::unordered_set<Config, ConfigHash> seen{start};
    while (!queue.empty()) {
        if (out.states_expanded >= budget) return out;
        auto [node, c] = std::move(queue.front());
        queue.pop_front();
        ++out.states_expanded;
        for (std::size_t g = 0; g < generators.size(); ++g) {
            auto r = sys.step(c, g);
            if (!r) {
                parents.emplace_back(node, g);
                out.sequence = trace_back(parents, parents.size() - 1);
                return out;
            }
            if (!can_fail.accepts(*r) || !seen.insert(*r).second) continue;
            parents.emplace_back(node, g);
            queue.emplace_back(parents.size() - 1, std::move(*r));
        }
    }
    out.frontier_closed = true;
    return out;
}

}  // namespace cqm
