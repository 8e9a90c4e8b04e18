#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "eikq/constructors.hpp"

namespace eikq {

struct SearchOptions {
  std::size_t budget = 1'000'000;  // candidate (pencil, theta3 direction) pairs examined
  std::uint64_t seed = 0;          // drives the Cayley conjugations
  std::size_t max_results = 1;     // 0 = no limit
  std::size_t conjugations = 2;    // random rational conjugates appended per structured pencil
  std::size_t directions_per_pencil = 20000;
};

struct SearchResult {
  std::vector<NormalFormData> results;
  std::size_t candidates_examined = 0;
  bool exhausted = false;  // the whole search space was visited within budget
};

/// Searches for normal-form data (p, q, pencil, theta3) whose assembled
/// quartic is exactly eikonal, with pencil spectrum (+1^nu, -1^nu, 0^(p-2nu)).
///
/// Pencils are direct sums of 2x2 blocks from {+-diag(1,-1), +-offdiag(1,1)}
/// placed under a coordinate permutation per matrix, filtered by
/// check_pencil, followed by Cayley conjugates. For each pencil theta3 is
/// taken from the exact solution space of the identities linear in theta3,
/// a direction with small rational coordinates is chosen and its scale is
/// solved from the quadratic identity. Only candidates passing the exact
/// eikonal check are returned, in enumeration order.
///
/// nu = 0 means the zero pencil and is allowed for any p, q. For nu >= 1
/// the parameters must satisfy 2 nu <= p and 2 nu = p + 1 - q, otherwise
/// InfeasibleParameters is thrown.
SearchResult search_isoparametric_pencil(int p, int q, int nu, const SearchOptions& options = {});

/// Pencils enumerated by the structured part of the search (before
/// conjugation), deduplicated, each passing check_pencil.
std::vector<Pencil> structured_pencils(std::size_t p, std::size_t q, std::size_t nu);

/// Basis of the theta3 in xi^3 (x) eta satisfying every identity that is
/// linear in theta3 for the given pencil (er1, er2, es2, es4 and
/// harmonicity in xi).
std::vector<Polynomial> theta3_linear_solutions(const Pencil& pencil, std::size_t p, std::size_t q);

}  // namespace eikq
