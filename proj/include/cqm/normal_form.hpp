#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cqm/term.hpp"

namespace cqm {

/// A CQ normal form: a binary pair-tree with shift words at the leaves.
/// Every value of this type is normal by construction. `Leaf("")` is I.
class NormalForm {
public:
    /// The identity, Leaf("").
    NormalForm();

    static NormalForm leaf(ShiftWord word);
    static NormalForm node(NormalForm first, NormalForm second);

    bool is_leaf() const;
    bool is_identity() const;

    /// Only valid on leaves.
    const ShiftWord& word() const;
    /// Only valid on nodes.
    const NormalForm& first() const;
    const NormalForm& second() const;

    std::size_t leaf_count() const;
    /// Number of pair nodes.
    std::size_t node_count() const { return leaf_count() - 1; }
    std::size_t depth() const;
    std::size_t hash() const;

    friend bool operator==(const NormalForm& a, const NormalForm& b);
    /// Leaves before nodes, leaves by shortlex word, nodes lexicographically.
    friend std::strong_ordering operator<=>(const NormalForm& a, const NormalForm& b);

private:
    struct Rep;
    explicit NormalForm(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
    std::shared_ptr<const Rep> rep_;
};

struct NormalFormHash {
    std::size_t operator()(const NormalForm& f) const { return f.hash(); }
};

enum class Theory { CQ, CM };

enum class Side : std::uint8_t { First, Second };

/// Root-to-leaf path in a NormalForm.
struct LeafAddress {
    std::vector<Side> path;

    /// The shift that extracts this leaf: path letters (First->L, Second->R)
    /// reversed, so apply_shift(access_word(), f) is the leaf's word.
    ShiftWord access_word() const;
    std::string to_string() const;

    friend bool operator==(const LeafAddress&, const LeafAddress&) = default;
};

struct ShiftEntry {
    LeafAddress address;
    ShiftWord word;

    friend bool operator==(const ShiftEntry&, const ShiftEntry&) = default;
};

/// Unique normal form under the CQ axioms (projections, pointwise lifting,
/// identity), modulo associativity.
NormalForm cq_normalize(const Term& t);

/// Unique normal form under the CQ axioms plus surjective pairing.
NormalForm cm_normalize(const Term& t);

/// Bottom-up fixpoint of <L.w, R.w> -> w on a CQ normal form.
NormalForm collapse(const NormalForm& f);

NormalForm normalize(const Term& t, Theory theory);

/// Normalized product a*b.
NormalForm multiply(const NormalForm& a, const NormalForm& b);

/// Normal form of s*f. Letters of s are consumed from the right, descending
/// f (L to the first component, R to the second).
NormalForm apply_shift(const ShiftWord& s, const NormalForm& f);

/// Leaves in left-to-right order.
std::vector<ShiftEntry> shifts_of(const NormalForm& f);

/// Inverse of shifts_of; throws std::invalid_argument if the addresses do not
/// describe a complete binary tree.
NormalForm from_shifts(const std::vector<ShiftEntry>& entries);

bool equal(const Term& a, const Term& b, Theory theory);

/// True iff t = I in CM.
bool in_kernel(const Term& t);

/// Term spelling of a normal form, e.g. "<L,R*R>".
Term to_term(const NormalForm& f);
std::string to_string(const NormalForm& f);

/// The normal form denoted by t when t is already syntactically a CQ normal
/// form (pair-tree, leaves either I or products of L and R); nullopt otherwise.
std::optional<NormalForm> as_normal_form(const Term& t);

/// Trie over consumption-order paths: each (path, target) puts Leaf(target)
/// at the end of its path, every other slot is Leaf(""). Paths must be
/// prefix-free; throws std::invalid_argument otherwise.
NormalForm build_trie(const std::vector<std::pair<std::string, ShiftWord>>& entries);

}  // namespace cqm
