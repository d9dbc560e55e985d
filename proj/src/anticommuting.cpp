#include "bellcert/anticommuting.hpp"

#include <bit>

#include "bellcert/errors.hpp"

namespace bellcert {

namespace {

// Anticommutation adjacency over basis indices, as bitmasks in 64-bit words.
struct Adjacency {
  int count;  // 4^m - 1
  int words;
  std::vector<std::uint64_t> bits;  // row-major, `words` per index

  bool get(int u, int v) const {
    return (bits[(u - 1) * words + (v - 1) / 64] >> ((v - 1) % 64)) & 1;
  }
};

Adjacency build_adjacency(int m) {
  Adjacency adj;
  adj.count = (1 << (2 * m)) - 1;
  adj.words = (adj.count + 63) / 64;
  adj.bits.assign(static_cast<std::size_t>(adj.count) * adj.words, 0);
  std::vector<PauliString> basis = pauli_basis(m);
  for (int u = 1; u <= adj.count; ++u)
    for (int v = u + 1; v <= adj.count; ++v)
      if (anticommutes(basis[u - 1], basis[v - 1])) {
        adj.bits[(u - 1) * adj.words + (v - 1) / 64] |= 1ull << ((v - 1) % 64);
        adj.bits[(v - 1) * adj.words + (u - 1) / 64] |= 1ull << ((u - 1) % 64);
      }
  return adj;
}

}  // namespace

std::vector<PauliString> AnticommutingSet::members() const {
  std::vector<PauliString> out;
  out.reserve(indices.size());
  for (int u : indices) out.push_back(PauliString::from_index(u, m));
  return out;
}

bool is_pairwise_anticommuting(const std::vector<int>& indices, int m) {
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = i + 1; j < indices.size(); ++j)
      if (!anticommutes(PauliString::from_index(indices[i], m),
                        PauliString::from_index(indices[j], m)))
        return false;
  return true;
}

void for_each_maximal_set(int m, const std::function<bool(const AnticommutingSet&)>& fn,
                          int qubit_cap) {
  if (m < 1 || m > qubit_cap)
    throw InvalidArgumentError("qubit count m=" + std::to_string(m) + " outside [1, " +
                               std::to_string(qubit_cap) + "]");
  const Adjacency adj = build_adjacency(m);
  const int target = 2 * m + 1;
  std::vector<int> current;
  current.reserve(target);
  // Candidate masks restricted to indices > the last chosen one keep the
  // enumeration lexicographic and deduplicated.
  std::vector<std::uint64_t> cand(adj.words);
  bool stop = false;

  auto emit = [&]() {
    AnticommutingSet s;
    s.m = m;
    s.indices = current;
    if (!fn(s)) stop = true;
  };

  std::function<void(const std::vector<std::uint64_t>&)> extend =
      [&](const std::vector<std::uint64_t>& candidates) {
        if (stop) return;
        if (static_cast<int>(current.size()) == target) {
          emit();
          return;
        }
        int needed = target - static_cast<int>(current.size());
        int available = 0;
        for (auto w : candidates) available += std::popcount(w);
        if (available < needed) return;
        for (int w = 0; w < adj.words && !stop; ++w) {
          std::uint64_t word = candidates[w];
          while (word && !stop) {
            int bit = std::countr_zero(word);
            word &= word - 1;
            int u = w * 64 + bit + 1;
            std::vector<std::uint64_t> next(adj.words);
            // keep only candidates above u that anticommute with u
            for (int q = 0; q < adj.words; ++q)
              next[q] = candidates[q] & adj.bits[(u - 1) * adj.words + q];
            // mask off indices <= u
            for (int q = 0; q < adj.words; ++q) {
              if (q * 64 + 63 < u)
                next[q] = 0;
              else if (q * 64 < u)
                next[q] &= ~((1ull << (u - q * 64)) - 1);
            }
            current.push_back(u);
            extend(next);
            current.pop_back();
          }
        }
      };

  std::vector<std::uint64_t> all(adj.words, 0);
  for (int u = 1; u <= adj.count; ++u) all[(u - 1) / 64] |= 1ull << ((u - 1) % 64);
  extend(all);
}

std::vector<AnticommutingSet> maximal_sets(int m, int qubit_cap) {
  std::vector<AnticommutingSet> out;
  for_each_maximal_set(
      m,
      [&](const AnticommutingSet& s) {
        out.push_back(s);
        return true;
      },
      qubit_cap);
  return out;
}

std::size_t count_maximal_sets(int m, int qubit_cap) {
  std::size_t count = 0;
  for_each_maximal_set(
      m,
      [&](const AnticommutingSet&) {
        ++count;
        return true;
      },
      qubit_cap);
  return count;
}

std::vector<AnticommutingSet> n_subsets(const AnticommutingSet& s, int n) {
  const int total = static_cast<int>(s.indices.size());
  if (n < 0 || n > total)
    throw InvalidArgumentError("n_subsets: n=" + std::to_string(n) + " exceeds set size " +
                               std::to_string(total));
  std::vector<AnticommutingSet> out;
  std::vector<int> pick(n);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n) {
      AnticommutingSet sub;
      sub.m = s.m;
      sub.indices.reserve(n);
      for (int i : pick) sub.indices.push_back(s.indices[i]);
      out.push_back(std::move(sub));
      return;
    }
    for (int i = start; i <= total - (n - depth); ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace bellcert
