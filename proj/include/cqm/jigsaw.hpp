#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cqm/normal_form.hpp"
#include "cqm/term.hpp"

namespace cqm::jigsaw {

// ---------------------------------------------------------------- CNF

struct Cnf {
    std::size_t variables = 0;
    /// Signed 1-based variable indices; repeated literals are kept.
    std::vector<std::vector<int>> clauses;

    friend bool operator==(const Cnf&, const Cnf&) = default;
};

/// Strict DIMACS: comment lines, one `p cnf N M` header, exactly M
/// zero-terminated clauses with indices in [1, N]. Throws ParseError.
Cnf parse_dimacs(std::string_view text);
std::string to_dimacs(const Cnf& cnf);

/// First satisfying assignment counting upward in binary with x1 as the
/// most significant bit; entry i is x_{i+1}. Throws std::invalid_argument
/// for more than 20 variables.
std::optional<std::vector<bool>> sat_brute(const Cnf& cnf);

bool satisfies(const Cnf& cnf, const std::vector<bool>& assignment);

/// Every CNF over 1 or 2 variables with at most 2 clauses (as a multiset)
/// of 1 or 2 literals (as a multiset), plus the empty CNF.
std::vector<Cnf> desk_corpus();

// ------------------------------------------------------------ Patterns

/// A term whose leaves may also be named holes, written `?name`.
class Pattern {
public:
    enum class Kind : std::uint8_t { Term, Hole, Compose, Pair };

    static Pattern term(Term t);
    static Pattern hole(std::string name);
    static Pattern compose(Pattern lhs, Pattern rhs);
    static Pattern pair(Pattern first, Pattern second);

    Kind kind() const;
    /// Kind::Term only.
    const Term& closed() const;
    /// Kind::Hole only.
    const std::string& name() const;
    /// Kind::Compose and Kind::Pair only.
    const Pattern& lhs() const;
    const Pattern& rhs() const;

    /// Hole names in left-to-right order, with repeats.
    std::vector<std::string> holes() const;
    /// Throws std::out_of_range for an unbound hole.
    Term substitute(const std::map<std::string, Term>& binding) const;

    friend bool operator==(const Pattern& a, const Pattern& b);

private:
    struct Node;
    explicit Pattern(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Term syntax plus `?name` leaves (name: letters, digits, '_').
Pattern parse_pattern(std::string_view text);
std::string to_string(const Pattern& p);

// ------------------------------------------------------------- Puzzles

enum class UsagePolicy {
    /// Every gadget occurrence is used by exactly one variable.
    ExactlyOnce,
    /// Each occurrence is used by at most one variable; leftovers allowed.
    AtMostOnce,
};

struct Identity {
    Pattern lhs;
    Term rhs;

    friend bool operator==(const Identity&, const Identity&) = default;
};

struct PuzzleInstance {
    std::vector<std::string> variables;
    std::vector<Identity> identities;
    /// Multiset, in file order.
    std::vector<Term> gadgets;
    Theory mode = Theory::CQ;
    UsagePolicy policy = UsagePolicy::ExactlyOnce;

    /// Throws std::invalid_argument on an undeclared, duplicated or
    /// repeated variable.
    void validate() const;

    friend bool operator==(const PuzzleInstance&, const PuzzleInstance&) = default;
};

/// Lines: `var NAME`, `gadget TERM`, `identity PATTERN = TERM`,
/// `mode CQ|CM`, `policy exact-once|at-most-once`; `#` starts a comment.
/// Throws ParseError (offset counts from the start of the text).
PuzzleInstance parse_puzzle(std::string_view text);
std::string to_text(const PuzzleInstance& p);

/// gadget_of[v] is the gadget occurrence assigned to variables[v].
struct PuzzleAssignment {
    std::vector<std::size_t> gadget_of;

    friend bool operator==(const PuzzleAssignment&, const PuzzleAssignment&) = default;
};

/// Total, within the usage policy, and every identity holds in the
/// instance's mode.
bool verify_assignment(const PuzzleInstance& p, const PuzzleAssignment& a);

enum class SolveStatus { Solved, Unsolvable, Unknown };

struct SolveResult {
    SolveStatus status = SolveStatus::Unknown;
    std::optional<PuzzleAssignment> assignment;
    std::size_t nodes = 0;
};

inline constexpr std::size_t kDefaultSolverBudget = 1'000'000;

/// Backtracking over variables in declaration order and distinct gadgets in
/// first-occurrence order; the first solution found is the lexicographically
/// least. Each variable takes the first free occurrence of its gadget.
/// Throws std::invalid_argument if the instance is not linear.
SolveResult solve_puzzle(const PuzzleInstance& p, std::size_t budget = kDefaultSolverBudget);

/// Tries every assignment (up to swapping equal gadgets) through
/// verify_assignment, without pruning. Slow; an independent check for
/// small instances.
std::optional<PuzzleAssignment> solve_naively(const PuzzleInstance& p);

// ------------------------------------------------------------- Encoder

struct EncoderOptions {
    /// Literal x_a selects gadget slot a (Shifted) via L*R^(a-1), or reads
    /// the exponent as printed, L*R^a.
    enum class Exponent { Shifted, AsPrinted } exponent = Exponent::Shifted;
    /// The negative literal behind y_i (i > k) is b(k-i) with negative
    /// indices counting from the end, or b(i-k).
    enum class NegativeIndex { FromEnd, Swapped } negative = NegativeIndex::FromEnd;
    /// Consistency chain over the z variables of x_i: through the slot
    /// selector of x_i (Selector) or with bare z's as printed.
    enum class Consistency { Selector, AsPrinted } consistency = Consistency::Selector;

    friend bool operator==(const EncoderOptions&, const EncoderOptions&) = default;
};

std::string to_string(const EncoderOptions& o);

/// The y hole for one literal occurrence.
struct LiteralSlot {
    std::string hole;
    std::size_t clause = 0;
    int literal = 0;
};

struct Encoding {
    PuzzleInstance puzzle;
    std::vector<LiteralSlot> literals;
    /// consistency_holes[i] are the z holes of x_{i+1}.
    std::vector<std::vector<std::string>> consistency_holes;
    /// gadget_g[i] and gadget_h[i] are G_{i+1} and H_{i+1}.
    std::vector<Term> gadget_g;
    std::vector<Term> gadget_h;
};

/// G_i (with L) or H_i (with R) for n variables: the list of i-1 copies of
/// <I,I>, the letter, and n-i+1 copies of <I,I>, each cell paired onto the
/// rest and terminated by I.
Term gadget(std::size_t i, std::size_t n, Letter letter);

Encoding encode(const Cnf& cnf, const EncoderOptions& options = {});

/// x true puts G gadgets on its literal holes and H on its z holes; false
/// the other way round. Gadget occurrences are taken first-free.
PuzzleAssignment canonical_assignment(const Encoding& e, const std::vector<bool>& truth);

// ----------------------------------------------------------- Reduction

struct ReductionReport {
    Cnf cnf;
    EncoderOptions options;
    std::size_t identities = 0;
    std::optional<std::vector<bool>> sat_witness;
    SolveResult puzzle;
    /// Unpruned search; set when the instance is small enough.
    std::optional<bool> naive_solvable;
    /// Whether the canonical image of sat_witness verifies.
    std::optional<bool> canonical_verifies;

    bool satisfiable() const { return sat_witness.has_value(); }
    bool solvable() const { return puzzle.status == SolveStatus::Solved; }
    bool conclusive() const { return puzzle.status != SolveStatus::Unknown; }
    bool agree() const { return conclusive() && satisfiable() == solvable(); }
    /// A disagreement both puzzle searches confirm.
    bool disagreement_confirmed() const;
    std::string render() const;
};

ReductionReport verify_reduction(const Cnf& cnf, const EncoderOptions& options = {},
                                 std::size_t budget = kDefaultSolverBudget);

struct CorpusSummary {
    EncoderOptions options;
    std::size_t total = 0;
    std::size_t agreements = 0;
    std::size_t confirmed_disagreements = 0;
    std::size_t inconclusive = 0;
    std::vector<ReductionReport> disagreements;

    std::string render() const;
};

CorpusSummary verify_corpus(const std::vector<Cnf>& corpus, const EncoderOptions& options = {});

/// All eight encoder configurations.
std::vector<EncoderOptions> all_encoder_options();

}  // namespace cqm::jigsaw
