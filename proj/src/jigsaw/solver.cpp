#include <algorithm>
#include <stdexcept>

#include "cqm/jigsaw.hpp"

namespace cqm::jigsaw {

namespace {

bool identities_hold(const PuzzleInstance& p, const std::map<std::string, Term>& binding) {
    for (const Identity& id : p.identities)
        if (normalize(id.lhs.substitute(binding), p.mode) != normalize(id.rhs, p.mode)) return false;
    return true;
}

bool slot_counts_fit(const PuzzleInstance& p) {
    return p.policy == UsagePolicy::ExactlyOnce ? p.variables.size() == p.gadgets.size()
                                                : p.variables.size() <= p.gadgets.size();
}

}  // namespace

bool verify_assignment(const PuzzleInstance& p, const PuzzleAssignment& a) {
    try {
        p.validate();
    } catch (const std::invalid_argument&) {
        return false;
    }
    if (a.gadget_of.size() != p.variables.size() || !slot_counts_fit(p)) return false;
    std::vector<bool> used(p.gadgets.size());
    std::map<std::string, Term> binding;
    for (std::size_t v = 0; v < a.gadget_of.size(); ++v) {
        const std::size_t g = a.gadget_of[v];
        if (g >= p.gadgets.size() || used[g]) return false;
        used[g] = true;
        binding.emplace(p.variables[v], p.gadgets[g]);
    }
    return identities_hold(p, binding);
}

SolveResult solve_puzzle(const PuzzleInstance& p, std::size_t budget) {
    p.validate();
    SolveResult out;
    if (!slot_counts_fit(p)) {
        out.status = SolveStatus::Unsolvable;
        return out;
    }

    // Distinct gadgets in first-occurrence order, with their occurrences.
    std::vector<Term> kinds;
    std::vector<std::vector<std::size_t>> occurrences;
    for (std::size_t g = 0; g < p.gadgets.size(); ++g) {
        auto it = std::find(kinds.begin(), kinds.end(), p.gadgets[g]);
        if (it == kinds.end()) {
            kinds.push_back(p.gadgets[g]);
            occurrences.push_back({g});
        } else {
            occurrences[std::size_t(it - kinds.begin())].push_back(g);
        }
    }

    std::map<std::string, std::size_t> index_of;
    for (std::size_t v = 0; v < p.variables.size(); ++v) index_of[p.variables[v]] = v;

    // Each identity is checked once its last variable is assigned; closed
    // identities up front.
    const std::size_t nvars = p.variables.size();
    std::vector<std::vector<std::size_t>> due(nvars);
    std::vector<NormalForm> rhs;
    for (std::size_t i = 0; i < p.identities.size(); ++i) {
        rhs.push_back(normalize(p.identities[i].rhs, p.mode));
        const auto holes = p.identities[i].lhs.holes();
        if (holes.empty()) {
            if (normalize(p.identities[i].lhs.closed(), p.mode) != rhs.back()) {
                out.status = SolveStatus::Unsolvable;
                return out;
            }
            continue;
        }
        std::size_t last = 0;
        for (const auto& h : holes) last = std::max(last, index_of.at(h));
        due[last].push_back(i);
    }

    std::vector<std::size_t> kind_of(nvars);
    std::vector<std::size_t> used(kinds.size(), 0);
    std::map<std::string, Term> binding;
    bool out_of_budget = false;

    auto holds = [&](std::size_t identity) {
        return normalize(p.identities[identity].lhs.substitute(binding), p.mode) == rhs[identity];
    };

    auto search = [&](auto&& self, std::size_t v) -> bool {
        if (v == nvars) return true;
        for (std::size_t k = 0; k < kinds.size(); ++k) {
            if (used[k] == occurrences[k].size()) continue;
            if (out.nodes >= budget) {
                out_of_budget = true;
                return false;
            }
            ++out.nodes;
            kind_of[v] = k;
            ++used[k];
            binding.insert_or_assign(p.variables[v], kinds[k]);
            bool ok = std::all_of(due[v].begin(), due[v].end(), holds);
            if (ok && self(self, v + 1)) return true;
            --used[k];
            if (out_of_budget) return false;
        }
        return false;
    };

    if (search(search, 0)) {
        PuzzleAssignment a;
        std::vector<std::size_t> taken(kinds.size(), 0);
        for (std::size_t v = 0; v < nvars; ++v) a.gadget_of.push_back(occurrences[kind_of[v]][taken[kind_of[v]]++]);
        out.status = SolveStatus::Solved;
        out.assignment = std::move(a);
    } else {
        out.status = out_of_budget ? SolveStatus::Unknown : SolveStatus::Unsolvable;
    }
    return out;
}

std::optional<PuzzleAssignment> solve_naively(const PuzzleInstance& p) {
    const std::size_t nvars = p.variables.size();
    if (!slot_counts_fit(p)) return std::nullopt;
    // Every arrangement of gadget occurrences up to swapping equal gadgets,
    // each checked in full by verify_assignment.
    std::vector<bool> used(p.gadgets.size());
    PuzzleAssignment a;
    a.gadget_of.assign(nvars, 0);
    auto walk = [&](auto&& self, std::size_t v) -> bool {
        if (v == nvars) return verify_assignment(p, a);
        for (std::size_t g = 0; g < p.gadgets.size(); ++g) {
            if (used[g]) continue;
            bool first_free = true;
            for (std::size_t h = 0; h < g && first_free; ++h) first_free = used[h] || !(p.gadgets[h] == p.gadgets[g]);
            if (!first_free) continue;
            used[g] = true;
            a.gadget_of[v] = g;
            if (self(self, v + 1)) return true;
            used[g] = false;
        }
        return false;
    };
    if (walk(walk, 0)) return a;
    return std::nullopt;
}

}  // namespace cqm::jigsaw
