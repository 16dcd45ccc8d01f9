#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cqm/normal_form.hpp"
#include "cqm/shift_system.hpp"

namespace cqm {

inline constexpr std::size_t kDefaultSearchBudget = 10'000;
inline constexpr std::size_t kDefaultTreeCap = 100'000;
inline constexpr std::size_t kDefaultLeafCap = 1u << 10;

enum class VerdictKind { Yes, No, Unknown, Infinite, Finite };

struct Verdict {
    VerdictKind kind = VerdictKind::Unknown;
    /// Yes: generator indices whose product is the target.
    std::vector<std::size_t> witness;
    /// No: the search space was closed rather than cut off.
    bool exhaustive = false;
    /// Unknown: states expanded before giving up.
    std::size_t budget_spent = 0;
    /// Infinite: why. Unknown: diagnostic.
    std::string certificate;
    /// Finite: the whole submonoid, sorted.
    std::vector<NormalForm> elements;

    static Verdict yes(std::vector<std::size_t> witness);
    static Verdict no(bool exhaustive);
    static Verdict unknown(std::size_t spent, std::string diagnostic = {});
    static Verdict infinite(std::string certificate);
    static Verdict finite(std::vector<NormalForm> elements);

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string to_string(VerdictKind kind);

/// Per-leaf constraints that pin down a target F. A product P equals F iff
/// access*P is the leaf word for every leaf and parent*P is a pair for every
/// leaf below the root.
struct MembershipConstraints {
    struct Leaf {
        ShiftWord access;
        ShiftWord word;
        /// Access word of the parent node: `access` without its leftmost
        /// letter. Empty optional for a root leaf.
        std::optional<ShiftWord> parent;
    };
    std::vector<Leaf> leaves;
    /// Distinct parent words, shortlex.
    std::vector<ShiftWord> pair_constraints;

    static MembershipConstraints of(const NormalForm& target);
};

/// Breadth-first search over products of `generators`, shortest witness
/// first with ties broken by generator index. `budget` bounds the number of
/// expanded search states.
Verdict is_member(const NormalForm& target, const std::vector<NormalForm>& generators,
                  std::size_t budget = kDefaultSearchBudget);

/// Membership for right-invertible inputs. Generators are CM-collapsed and
/// searched in CQ. Throws std::invalid_argument if the target is not CM
/// normal or some input is not right-invertible.
Verdict is_member_ri(const NormalForm& target, const std::vector<NormalForm>& generators,
                     std::size_t budget = kDefaultSearchBudget);

/// Infinite, Finite (with all elements) or Unknown when the search tree
/// outgrows `tree_cap` products.
Verdict submonoid_infinite(const std::vector<NormalForm>& generators, std::size_t tree_cap = kDefaultTreeCap);

/// No shift is bad and there is at least one generator.
bool covers_cantor(const std::vector<NormalForm>& generators);

struct KillResult {
    /// Shortest generator sequence turning config(s) into a pair.
    std::optional<std::vector<std::size_t>> sequence;
    /// The search ran out of configs rather than budget. With no sequence,
    /// this proves s bad.
    bool frontier_closed = false;
    std::size_t states_expanded = 0;
};

KillResult killing_sequence(const ShiftWord& s, const std::vector<NormalForm>& generators,
                            std::size_t budget = kDefaultSearchBudget);

/// Closure of {I} under right multiplication, sorted. nullopt once more
/// than `max_elements` are found or some element has more than `max_leaves`
/// leaves.
std::optional<std::vector<NormalForm>> closure(const std::vector<NormalForm>& generators,
                                               std::size_t max_elements, std::size_t max_leaves = kDefaultLeafCap);

/// Left-to-right product of the indexed generators; I for an empty list.
NormalForm product_of(const std::vector<std::size_t>& indices, const std::vector<NormalForm>& generators);

}  // namespace cqm
