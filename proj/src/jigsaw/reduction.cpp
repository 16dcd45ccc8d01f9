#include <sstream>

#include "cqm/jigsaw.hpp"

namespace cqm::jigsaw {

namespace {

// Unpruned search visits every injective map; keep it to desk scale.
constexpr std::size_t kNaiveLimit = 8;

std::string cnf_text(const Cnf& cnf) {
    std::string out = "n=" + std::to_string(cnf.variables) + " ";
    if (cnf.clauses.empty()) return out + "(no clauses)";
    for (std::size_t c = 0; c < cnf.clauses.size(); ++c) {
        out += c ? " & (" : "(";
        for (std::size_t i = 0; i < cnf.clauses[c].size(); ++i) {
            const int lit = cnf.clauses[c][i];
            out += (i ? " | " : "") + std::string(lit < 0 ? "~x" : "x") + std::to_string(std::abs(lit));
        }
        out += ")";
    }
    return out;
}

std::string truth_text(const std::vector<bool>& a) {
    if (a.empty()) return "{}";
    std::string out = "{";
    for (std::size_t i = 0; i < a.size(); ++i) out += (i ? " x" : "x") + std::to_string(i + 1) + "=" + (a[i] ? "1" : "0");
    return out + "}";
}

std::string status_text(SolveStatus s) {
    switch (s) {
    case SolveStatus::Solved: return "solvable";
    case SolveStatus::Unsolvable: return "unsolvable";
    case SolveStatus::Unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace

bool ReductionReport::disagreement_confirmed() const {
    if (!conclusive() || agree() || !naive_solvable || *naive_solvable != solvable()) return false;
    return !satisfiable() || canonical_verifies == false;
}

std::string ReductionReport::render() const {
    std::ostringstream out;
    out << "cnf:        " << cnf_text(cnf) << "\n";
    out << "encoder:    " << to_string(options) << "\n";
    out << "identities: " << identities << "\n";
    out << "sat:        " << (sat_witness ? "satisfiable " + truth_text(*sat_witness) : "unsatisfiable") << "\n";
    out << "puzzle:     " << status_text(puzzle.status) << " after " << puzzle.nodes << " nodes";
    if (puzzle.assignment) {
        out << " [";
        for (std::size_t v = 0; v < puzzle.assignment->gadget_of.size(); ++v)
            out << (v ? " " : "") << puzzle.assignment->gadget_of[v];
        out << "]";
    }
    out << "\n";
    if (naive_solvable) out << "naive:      " << (*naive_solvable ? "solvable" : "unsolvable") << "\n";
    if (canonical_verifies)
        out << "canonical:  image of the SAT witness " << (*canonical_verifies ? "verifies" : "fails") << "\n";
    out << "verdict:    ";
    if (!conclusive()) out << "INCONCLUSIVE (solver budget)";
    else if (agree()) out << "agree";
    else if (disagreement_confirmed()) out << "DISAGREE (reproduced by both puzzle searches)";
    else out << "DISAGREE (unconfirmed)";
    out << "\n";
    return out.str();
}

ReductionReport verify_reduction(const Cnf& cnf, const EncoderOptions& options, std::size_t budget) {
    ReductionReport r;
    r.cnf = cnf;
    r.options = options;
    const Encoding e = encode(cnf, options);
    r.identities = e.puzzle.identities.size();
    r.sat_witness = sat_brute(cnf);
    r.puzzle = solve_puzzle(e.puzzle, budget);
    if (e.puzzle.variables.size() <= kNaiveLimit) r.naive_solvable = solve_naively(e.puzzle).has_value();
    if (r.sat_witness) r.canonical_verifies = verify_assignment(e.puzzle, canonical_assignment(e, *r.sat_witness));
    return r;
}

CorpusSummary verify_corpus(const std::vector<Cnf>& corpus, const EncoderOptions& options) {
    CorpusSummary s;
    s.options = options;
    for (const Cnf& cnf : corpus) {
        ReductionReport r = verify_reduction(cnf, options);
        ++s.total;
        if (!r.conclusive()) {
            ++s.inconclusive;
            s.disagreements.push_back(std::move(r));
        } else if (r.agree()) {
            ++s.agreements;
        } else {
            if (r.disagreement_confirmed()) ++s.confirmed_disagreements;
            s.disagreements.push_back(std::move(r));
        }
    }
    return s;
}

std::string CorpusSummary::render() const {
    std::ostringstream out;
    out << "encoder " << to_string(options) << ": " << agreements << "/" << total << " agree, "
        << confirmed_disagreements << " confirmed disagreements, " << inconclusive << " inconclusive\n";
    for (const ReductionReport& r : disagreements) {
        out << "  " << cnf_text(r.cnf) << ": sat=" << (r.satisfiable() ? "yes" : "no")
            << " puzzle=" << status_text(r.puzzle.status);
        if (r.naive_solvable) out << " naive=" << (*r.naive_solvable ? "solvable" : "unsolvable");
        if (r.canonical_verifies) out << " canonical=" << (*r.canonical_verifies ? "verifies" : "fails");
        out << "\n";
    }
    return out.str();
}

}  // namespace cqm::jigsaw
