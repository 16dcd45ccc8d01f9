#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "cqm/term.hpp"

namespace cqm {

/// Stack contents of the shift machine, top first. The config of a shift
/// word is its reversal: the last letter of the word is consumed first.
class Config {
public:
    Config() = default;
    explicit Config(std::string_view letters);

    static Config of(const ShiftWord& word);
    ShiftWord to_shift() const;

    /// "RRL^"; an optional trailing '^' marks the bottom. "^" is empty.
    static Config parse(std::string_view text);
    std::string to_string() const;

    const std::string& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    friend bool operator==(const Config&, const Config&) = default;
    /// Shortlex.
    friend std::strong_ordering operator<=>(const Config& a, const Config& b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        return a.letters_.compare(b.letters_) <=> 0;
    }

private:
    std::string letters_;
};

struct ConfigHash {
    std::size_t operator()(const Config& c) const { return std::hash<std::string>{}(c.letters()); }
};

}  // namespace cqm
