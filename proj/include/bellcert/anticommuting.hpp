#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bellcert/pauli.hpp"

namespace bellcert {

/// A set of mutually anticommuting Pauli strings, stored as ascending basis
/// indices. Maximal sets carry exactly 2m+1 members.
struct AnticommutingSet {
  int m = 1;
  std::vector<int> indices;  // ascending, each in [1, 4^m - 1]

  std::size_t size() const { return indices.size(); }
  std::vector<PauliString> members() const;
  bool operator==(const AnticommutingSet& o) const = default;
};

bool is_pairwise_anticommuting(const std::vector<int>& indices, int m);

/// Streams every anticommuting set of size exactly 2m+1, in lexicographic
/// order of the ascending index list. Return false from the callback to stop.
void for_each_maximal_set(int m, const std::function<bool(const AnticommutingSet&)>& fn,
                          int qubit_cap = kDefaultQubitCap);

/// Materializes the whole family (6 sets for m=2, 288 for m=3).
std::vector<AnticommutingSet> maximal_sets(int m, int qubit_cap = kDefaultQubitCap);

std::size_t count_maximal_sets(int m, int qubit_cap = kDefaultQubitCap);

/// All C(|s|, n) subsets of size n, lexicographic; each is itself a valid set.
std::vector<AnticommutingSet> n_subsets(const AnticommutingSet& s, int n);

}  // namespace bellcert
