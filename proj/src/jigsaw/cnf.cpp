#include <charconv>
#include <cstdlib>
#include <stdexcept>

#include "cqm/jigsaw.hpp"

namespace cqm::jigsaw {

namespace {

struct Token {
    std::string_view text;
    std::size_t offset = 0;
};

long parse_number(const Token& t) {
    long value = 0;
    auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || end != t.text.data() + t.text.size())
        throw ParseError("expected an integer, got '" + std::string(t.text) + "'", t.offset);
    return value;
}

}  // namespace

Cnf parse_dimacs(std::string_view text) {
    std::vector<Token> header;
    std::vector<Token> body;
    bool seen_header = false;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        std::vector<Token> tokens;
        for (std::size_t i = 0; i < line.size();) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) tokens.push_back({line.substr(i, j - i), line_start + i});
            i = j;
        }
        if (!tokens.empty() && tokens[0].text != "c") {
            if (tokens[0].text == "p") {
                if (seen_header) throw ParseError("second problem line", tokens[0].offset);
                seen_header = true;
                header = tokens;
            } else if (!seen_header) {
                throw ParseError("clause before the problem line", tokens[0].offset);
            } else {
                body.insert(body.end(), tokens.begin(), tokens.end());
            }
        }
        line_start = line_end + 1;
    }
    if (!seen_header) throw ParseError("missing problem line", 0);
    if (header.size() != 4 || header[1].text != "cnf") throw ParseError("expected 'p cnf N M'", header[0].offset);
    const long n = parse_number(header[2]);
    const long m = parse_number(header[3]);
    if (n < 0 || m < 0) throw ParseError("negative count in problem line", header[2].offset);

    Cnf cnf;
    cnf.variables = static_cast<std::size_t>(n);
    std::vector<int> clause;
    for (const Token& t : body) {
        const long lit = parse_number(t);
        if (lit == 0) {
            cnf.clauses.push_back(std::move(clause));
            clause.clear();
            continue;
        }
        if (std::labs(lit) > n) throw ParseError("variable index out of range", t.offset);
        clause.push_back(static_cast<int>(lit));
    }
    if (!clause.empty()) throw ParseError("last clause is not terminated by 0", text.size());
    if (cnf.clauses.size() != static_cast<std::size_t>(m))
        throw ParseError("problem line announces " + std::to_string(m) + " clauses, found " +
                             std::to_string(cnf.clauses.size()),
                         header[3].offset);
    return cnf;
}

std::string to_dimacs(const Cnf& cnf) {
    std::string out = "p cnf " + std::to_string(cnf.variables) + " " + std::to_string(cnf.clauses.size()) + "\n";
    for (const auto& clause : cnf.clauses) {
        for (int lit : clause) out += std::to_string(lit) + " ";
        out += "0\n";
    }
    return out;
}

bool satisfies(const Cnf& cnf, const std::vector<bool>& assignment) {
    for (const auto& clause : cnf.clauses) {
        bool sat = false;
        for (int lit : clause) sat = sat || assignment.at(std::size_t(std::abs(lit)) - 1) == (lit > 0);
        if (!sat) return false;
    }
    return true;
}

std::optional<std::vector<bool>> sat_brute(const Cnf& cnf) {
    if (cnf.variables > 20) throw std::invalid_argument("sat_brute handles at most 20 variables");
    const std::size_t n = cnf.variables;
    std::vector<bool> a(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
        for (std::size_t i = 0; i < n; ++i) a[i] = (bits >> (n - 1 - i)) & 1;
        if (satisfies(cnf, a)) return a;
    }
    return std::nullopt;
}

std::vector<Cnf> desk_corpus() {
    std::vector<Cnf> out{Cnf{}};
    for (int n = 1; n <= 2; ++n) {
        std::vector<int> literals;
        for (int v = 1; v <= n; ++v) {
            literals.push_back(v);
            literals.push_back(-v);
        }
        std::vector<std::vector<int>> clauses;
        for (std::size_t i = 0; i < literals.size(); ++i) {
            clauses.push_back({literals[i]});
            for (std::size_t j = i; j < literals.size(); ++j) clauses.push_back({literals[i], literals[j]});
        }
        const std::size_t vars = static_cast<std::size_t>(n);
        out.push_back(Cnf{vars, {}});
        for (std::size_t i = 0; i < clauses.size(); ++i) {
            out.push_back(Cnf{vars, {clauses[i]}});
            for (std::size_t j = i; j < clauses.size(); ++j) out.push_back(Cnf{vars, {clauses[i], clauses[j]}});
        }
    }
    return out;
}

}  // namespace cqm::jigsaw
