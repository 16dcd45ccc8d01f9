#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "cqm/decisions.hpp"

namespace cqm {

namespace {

std::string sequence_text(const std::vector<std::size_t>& seq) {
    std::string out = "[";
    for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? "," : "") + std::to_string(seq[i]);
    return out + "]";
}

}  // namespace

std::optional<std::vector<NormalForm>> closure(const std::vector<NormalForm>& generators,
                                               std::size_t max_elements, std::size_t max_leaves) {
    std::unordered_set<NormalForm, NormalFormHash> seen{NormalForm()};
    std::deque<NormalForm> queue{NormalForm()};
    if (seen.size() > max_elements) return std::nullopt;
    while (!queue.empty()) {
        NormalForm p = std::move(queue.front());
        queue.pop_front();
        for (const NormalForm& g : generators) {
            NormalForm q = multiply(p, g);
            if (q.leaf_count() > max_leaves) return std::nullopt;
            if (!seen.insert(q).second) continue;
            if (seen.size() > max_elements) return std::nullopt;
            queue.push_back(std::move(q));
        }
    }
    std::vector<NormalForm> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool covers_cantor(const std::vector<NormalForm>& generators) {
    return !generators.empty() && bad_set(generators).is_empty();
}

Verdict submonoid_infinite(const std::vector<NormalForm>& generators, std::size_t tree_cap) {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].is_leaf() && !generators[i].is_identity())
            return Verdict::infinite("generator " + std::to_string(i) + " is the shift " +
                                     generators[i].word().to_string());

    const ShiftAnalysis analysis(generators);
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (const ShiftEntry& e : shifts_of(generators[i]))
            if (analysis.unbounded_expansions(e.word))
                return Verdict::infinite("shift " + e.word.to_string() + " of generator " + std::to_string(i) +
                                         " expands without bound");

    // Tree of products, one node per distinct normal form. A node stays a
    // leaf of the tree once all its shifts are bad.
    struct Node {
        NormalForm product;
        std::vector<std::size_t> sequence;
    };
    std::unordered_set<NormalForm, NormalFormHash> seen{NormalForm()};
    std::deque<Node> queue{{NormalForm(), {}}};
    std::set<ShiftWord> checked;
    while (!queue.empty()) {
        Node n = std::move(queue.front());
        queue.pop_front();
        bool all_bad = true;
        for (const ShiftEntry& e : shifts_of(n.product)) {
            if (!checked.insert(e.word).second) {
                all_bad = all_bad && analysis.is_bad(e.word);
                continue;
            }
            if (analysis.is_extenuative(e.word))
                return Verdict::infinite("shift " + e.word.to_string() + " of product " + sequence_text(n.sequence) +
                                         " is extenuative");
            all_bad = all_bad && analysis.is_bad(e.word);
        }
        if (all_bad) continue;
        for (std::size_t g = 0; g < generators.size(); ++g) {
            NormalForm q = multiply(n.product, generators[g]);
            if (!seen.insert(q).second) continue;
            if (seen.size() > tree_cap)
                return Verdict::unknown(seen.size(), "product tree exceeded " + std::to_string(tree_cap) + " nodes");
            std::vector<std::size_t> seq = n.sequence;
            seq.push_back(g);
            queue.push_back({std::move(q), std::move(seq)});
        }
    }

    auto elements = closure(generators, tree_cap);
    if (!elements)
        return Verdict::unknown(tree_cap, "no extenuative shift, but the closure exceeded " +
                                              std::to_string(tree_cap) + " elements");
    return Verdict::finite(std::move(*elements));
}

}  // namespace cqm
