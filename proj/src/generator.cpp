#include "hemiring/generator.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <numeric>
#include <string>

namespace hemiring {

namespace {

std::vector<std::uint8_t> permuted_tables(int n, const std::vector<std::uint8_t>& add,
                                          const std::vector<std::uint8_t>& mul,
                                          const std::vector<int>& perm) {
  std::vector<std::uint8_t> out(2 * static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::size_t ij = static_cast<std::size_t>(perm[i]) * n + perm[j];
      out[ij] = static_cast<std::uint8_t>(perm[add[static_cast<std::size_t>(i) * n + j]]);
      out[static_cast<std::size_t>(n) * n + ij] =
          static_cast<std::uint8_t>(perm[mul[static_cast<std::size_t>(i) * n + j]]);
    }
  return out;
}

CanonicalForm canonicalize(int n, const std::vector<std::uint8_t>& add,
                           const std::vector<std::uint8_t>& mul) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalForm best{n, permuted_tables(n, add, mul, perm)};
  while (std::next_permutation(perm.begin() + 1, perm.end())) {
    auto cand = permuted_tables(n, add, mul, perm);
    if (cand < best.tables) best.tables = std::move(cand);
  }
  return best;
}

constexpr int kUnset = -1;

// Commutative monoids with identity at index 0: fill the upper triangle of
// the free cells and reject non-associative assignments.
void generate_additions(int n, std::vector<std::vector<int>>& out) {
  std::vector<int> t(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    t[static_cast<std::size_t>(i) * n] = i;
    t[static_cast<std::size_t>(i)] = i;
  }
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < n; ++i)
    for (int j = i; j < n; ++j) cells.emplace_back(i, j);

  auto assoc_ok = [&](std::vector<int>& tab) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (tab[static_cast<std::size_t>(tab[static_cast<std::size_t>(a) * n + b]) * n + c] !=
              tab[static_cast<std::size_t>(a) * n + tab[static_cast<std::size_t>(b) * n + c]])
            return false;
    return true;
  };

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      if (assoc_ok(t)) out.push_back(t);
      return;
    }
    const auto [i, j] = cells[idx];
    for (int v = 0; v < n; ++v) {
      t[static_cast<std::size_t>(i) * n + j] = v;
      t[static_cast<std::size_t>(j) * n + i] = v;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
}

struct MulSearch {
  int n;
  const std::vector<int>& add;
  std::vector<int> mul;
  std::vector<std::pair<int, int>> cells;

  int at(const std::vector<int>& t, int i, int j) const {
    return t[static_cast<std::size_t>(i) * n + j];
  }

  // Checks only the constraint instances whose inputs are all decided.
  bool consistent() const {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int ab = at(mul, a, b);
        if (ab == kUnset) continue;
        for (int c = 0; c < n; ++c) {
          const int bc = at(mul, b, c);
          if (bc != kUnset) {
            const int l = at(mul, ab, c);
            const int r = at(mul, a, bc);
            if (l != kUnset && r != kUnset && l != r) return false;
          }
          const int ac = at(mul, a, c);
          if (ac != kUnset) {
            const int l = at(mul, a, at(add, b, c));
            if (l != kUnset && l != at(add, ab, ac)) return false;
            const int ba = at(mul, b, a);
            const int ca = at(mul, c, a);
            if (ba != kUnset && ca != kUnset) {
              const int rl = at(mul, at(add, b, c), a);
              if (rl != kUnset && rl != at(add, ba, ca)) return false;
            }
          }
        }
      }
    return true;
  }

  void run(const std::function<void(const std::vector<int>&)>& sink) {
    rec(0, sink);
  }

  void rec(std::size_t idx, const std::function<void(const std::vector<int>&)>& sink) {
    if (idx == cells.size()) {
      sink(mul);
      return;
    }
    const auto [i, j] = cells[idx];
    for (int v = 0; v < n; ++v) {
      mul[static_cast<std::size_t>(i) * n + j] = v;
      if (consistent()) rec(idx + 1, sink);
    }
    mul[static_cast<std::size_t>(i) * n + j] = kUnset;
  }
};

} // namespace

CanonicalForm canonical_form(const Hemiring& H) {
  const TableData t = H.table_data();
  std::vector<std::uint8_t> add(t.add.begin(), t.add.end());
  std::vector<std::uint8_t> mul(t.mul.begin(), t.mul.end());
  return canonicalize(H.order(), add, mul);
}

bool are_isomorphic(const Hemiring& a, const Hemiring& b) {
  if (a.order() != b.order())
    throw domain_error("are_isomorphic requires equal orders");
  return canonical_form(a) == canonical_form(b);
}

std::vector<Hemiring> enumerate_hemirings(int order, const Config& cfg) {
  if (order < 1) throw domain_error("order must be positive");
  if (order > 4 || order > cfg.generator_order_cap)
    throw capacity_error("generation is capped at order " +
                         std::to_string(std::min(4, cfg.generator_order_cap)));

  const int n = order;
  std::vector<std::vector<int>> additions;
  generate_additions(n, additions);

  std::set<CanonicalForm> seen;
  for (const auto& add : additions) {
    MulSearch search{n, add, std::vector<int>(static_cast<std::size_t>(n) * n, kUnset), {}};
    for (int i = 0; i < n; ++i) {
      search.mul[static_cast<std::size_t>(i) * n] = 0;
      search.mul[static_cast<std::size_t>(i)] = 0;
    }
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) search.cells.emplace_back(i, j);
    search.run([&](const std::vector<int>& mul) {
      std::vector<std::uint8_t> a8(add.begin(), add.end());
      std::vector<std::uint8_t> m8(mul.begin(), mul.end());
      seen.insert(canonicalize(n, a8, m8));
    });
  }

  std::vector<Hemiring> out;
  int index = 0;
  for (const auto& cf : seen) {
    TableData t;
    t.name = "order" + std::to_string(n) + "_" + std::to_string(index++);
    t.elements.push_back("0");
    for (int i = 1; i < n; ++i) t.elements.push_back("x" + std::to_string(i));
    t.add.assign(cf.tables.begin(), cf.tables.begin() + static_cast<std::ptrdiff_t>(n) * n);
    t.mul.assign(cf.tables.begin() + static_cast<std::ptrdiff_t>(n) * n, cf.tables.end());
    out.push_back(Hemiring::from_tables(t));
  }
  return out;
}

} // namespace hemiring
