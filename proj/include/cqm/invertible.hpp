#pragma once

#include "cqm/normal_form.hpp"

namespace cqm {

/// Right-invertibility in CM. The argument is CM-collapsed first; the result
/// is true iff no leaf word is a suffix of the word at a different leaf
/// (equal words at two leaves count as a violation).
bool is_right_invertible(const NormalForm& f);

/// Some g with f*g = I in CM. Throws std::invalid_argument unless
/// is_right_invertible(f).
NormalForm right_inverse(const NormalForm& f);

/// Witness that two CM-equal elements with different CQ normal forms are
/// separated: h*u[index]*k is I in CQ while h*u[1-index]*k is a non-trivial
/// element of the kernel.
struct Separation {
    Term h;
    Term k;
    int index = 0;
};

/// Follows the leftmost disagreement between u0 and u1. Throws
/// std::invalid_argument if u0 == u1 or the two differ in CM.
Separation cq_separator(const NormalForm& u0, const NormalForm& u1);

}  // namespace cqm
