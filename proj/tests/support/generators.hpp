#pragma once

#include <random>
#include <vector>

#include "cqm/normal_form.hpp"
#include "cqm/term.hpp"

namespace cqm::testing {

ShiftWord random_shift(std::mt19937_64& rng, std::size_t max_length);

/// Random raw term with exactly `nodes` nodes (nodes >= 1; even counts are
/// rounded down to the nearest odd count since every node is binary or an atom).
Term random_term(std::mt19937_64& rng, std::size_t nodes);

/// Random normal form of depth <= max_depth with words of length <= max_word.
NormalForm random_normal_form(std::mt19937_64& rng, std::size_t max_depth, std::size_t max_word,
                              double pair_probability = 0.5);

/// Random generator set of 1..max_size elements, none a bare shift unless
/// allow_shifts.
std::vector<NormalForm> random_generators(std::mt19937_64& rng, std::size_t max_size, std::size_t max_depth,
                                          std::size_t max_word, bool allow_shifts = false);

/// Random right-invertible CM normal form, built by splitting leaves of I
/// (which keeps leaf words suffix-free) and then permuting leaves.
NormalForm random_ri(std::mt19937_64& rng, std::size_t splits);

/// `count` elements sharing one random shape with `leaves` leaves, each
/// mapping the leaves to a permutation of the shape's access words. They
/// generate a finite group.
std::vector<NormalForm> random_permutations(std::mt19937_64& rng, std::size_t leaves, std::size_t count);

/// Replaces one leaf w by <L.w, R.w>.
NormalForm expand_random_leaf(std::mt19937_64& rng, const NormalForm& f);

}  // namespace cqm::testing
