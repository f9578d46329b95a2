#include "monreg/betti.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "monreg/error.hpp"

namespace monreg {

namespace {

bool face_order(std::uint32_t a, std::uint32_t b) {
  int pa = std::popcount(a);
  int pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out{};
  if (__builtin_mul_overflow(a, b, &out)) throw ContractViolation("rank computation overflowed");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out{};
  if (__builtin_sub_overflow(a, b, &out)) throw ContractViolation("rank computation overflowed");
  return out;
}

void check_limits(const MonomialIdeal& ideal, const BettiLimits& limits) {
  if (ideal.is_zero()) throw PreconditionError("the zero ideal has no Betti numbers");
  if (ideal.num_vars() > limits.max_vars) {
    throw PreconditionError("Betti oracle refuses " + std::to_string(ideal.num_vars()) +
                            " variables (limit " + std::to_string(limits.max_vars) + ")");
  }
  int lcm_degree = ideal.generator_lcm().degree();
  if (lcm_degree > limits.max_lcm_degree) {
    throw PreconditionError("Betti oracle refuses lcm degree " + std::to_string(lcm_degree) +
                            " (limit " + std::to_string(limits.max_lcm_degree) + ")");
  }
}

void record_multidegree(BettiTable& table, const MonomialIdeal& ideal, const Monomial& a) {
  ReducedHomology h = reduced_homology_dims(upper_koszul(ideal, a));
  for (std::size_t k = 0; k < h.dims.size(); ++k) {
    // dims[k] = dim H̃_{k-1} = beta_{k,a}
    if (h.dims[k] != 0) table.set(static_cast<int>(k), a, h.dims[k]);
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(int num_vertices, std::vector<std::uint32_t> faces)
    : num_vertices_(num_vertices), faces_(std::move(faces)) {
  if (num_vertices < 0 || num_vertices > 31) throw std::invalid_argument("bad vertex count");
  std::sort(faces_.begin(), faces_.end(), face_order);
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  const std::uint32_t universe = num_vertices == 0 ? 0u : (1u << num_vertices) - 1u;
  for (auto f : faces_) {
    if (f & ~universe) throw std::invalid_argument("face uses a vertex outside the complex");
    for (std::uint32_t rest = f; rest; rest &= rest - 1) {
      std::uint32_t sub = f & ~(rest & -rest);
      if (!contains(sub)) throw std::invalid_argument("face family is not closed under subsets");
    }
  }
}

bool SimplicialComplex::contains(std::uint32_t face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face, face_order);
}

std::optional<int> SimplicialComplex::dimension() const {
  if (faces_.empty()) return std::nullopt;
  return std::popcount(faces_.back()) - 1;
}

std::int64_t ReducedHomology::dim(int k) const {
  auto idx = static_cast<std::size_t>(k + 1);
  return k >= -1 && idx < dims.size() ? dims[idx] : 0;
}

bool ReducedHomology::is_acyclic() const {
  return std::all_of(dims.begin(), dims.end(), [](std::int64_t d) { return d == 0; });
}

std::size_t rational_rank(std::vector<std::vector<std::int64_t>> rows) {
  // Bareiss fraction-free elimination; every division below is exact.
  const std::size_t m = rows.size();
  if (m == 0) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  std::int64_t prev_pivot = 1;
  for (std::size_t col = 0; col < cols && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && rows[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[pivot], rows[rank]);
    const std::int64_t p = rows[rank][col];
    for (std::size_t r = rank + 1; r < m; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        std::int64_t v = checked_sub(checked_mul(p, rows[r][c]), checked_mul(rows[r][col], rows[rank][c]));
        rows[r][c] = v / prev_pivot;
      }
      rows[r][col] = 0;
    }
    prev_pivot = p;
    ++rank;
  }
  return rank;
}

SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& multidegree) {
  const int n = ideal.num_vars();
  if (multidegree.num_vars() != n) throw std::invalid_argument("multidegree in wrong ring");
  std::vector<std::uint32_t> faces;
  for (std::uint32_t sigma = 0; sigma < (1u << n); ++sigma) {
    std::array<Exponent, kMaxVariables> exps{};
    bool fits = true;
    for (int k = 0; k < n; ++k) {
      Exponent e = multidegree.exponent(k + 1) - ((sigma >> k) & 1u ? 1 : 0);
      if (e < 0) {
        fits = false;
        break;
      }
      exps[static_cast<std::size_t>(k)] = e;
    }
    if (!fits) continue;
    if (contains(ideal, Monomial(n, std::span<const Exponent>(exps.data(), static_cast<std::size_t>(n))))) {
      faces.push_back(sigma);
    }
  }
  return SimplicialComplex(n, std::move(faces));
}

ReducedHomology reduced_homology_dims(const SimplicialComplex& complex) {
  ReducedHomology out;
  auto top = complex.dimension();
  if (!top) return out;  // void complex: no reduced homology at all

  // faces_by_dim[k + 1] lists the k-dimensional faces.
  std::vector<std::vector<std::uint32_t>> faces_by_dim(static_cast<std::size_t>(*top + 2));
  for (auto f : complex.faces()) faces_by_dim[static_cast<std::size_t>(std::popcount(f))].push_back(f);

  // rank of boundary C_k -> C_{k-1}, indexed by k + 1; C_{-1} has no boundary.
  std::vector<std::size_t> boundary_rank(faces_by_dim.size() + 1, 0);
  for (std::size_t level = 1; level < faces_by_dim.size(); ++level) {
    const auto& lower = faces_by_dim[level - 1];
    const auto& upper = faces_by_dim[level];
    std::unordered_map<std::uint32_t, std::size_t> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = i;
    std::vector<std::vector<std::int64_t>> rows(upper.size(), std::vector<std::int64_t>(lower.size(), 0));
    for (std::size_t r = 0; r < upper.size(); ++r) {
      std::int64_t sign = 1;
      for (std::uint32_t rest = upper[r]; rest; rest &= rest - 1) {
        std::uint32_t v = rest & -rest;
        rows[r][index.at(upper[r] & ~v)] = sign;
        sign = -sign;
      }
    }
    boundary_rank[level] = rational_rank(std::move(rows));
  }

  out.dims.resize(faces_by_dim.size(), 0);
  for (std::size_t level = 0; level < faces_by_dim.size(); ++level) {
    auto cycles = static_cast<std::int64_t>(faces_by_dim[level].size() - boundary_rank[level]);
    out.dims[level] = cycles - static_cast<std::int64_t>(boundary_rank[level + 1]);
  }
  while (!out.dims.empty() && out.dims.back() == 0) out.dims.pop_back();
  return out;
}

void BettiTable::set(int homological, const Monomial& multidegree, std::int64_t value) {
  if (value < 0) throw std::invalid_argument("Betti numbers are non-negative");
  Key key{homological, multidegree};
  if (value == 0) {
    entries_.erase(key);
  } else {
    entries_[key] = value;
  }
}

std::int64_t BettiTable::value(int homological, const Monomial& multidegree) const {
  auto it = entries_.find(Key{homological, multidegree});
  return it == entries_.end() ? 0 : it->second;
}

std::optional<int> BettiTable::regularity() const {
  std::optional<int> out;
  for (const auto& [key, v] : entries_) {
    int r = key.second.degree() - key.first;
    if (!out || r > *out) out = r;
  }
  return out;
}

std::int64_t BettiTable::total(int homological) const {
  std::int64_t s = 0;
  for (const auto& [key, v] : entries_) {
    if (key.first == homological) s += v;
  }
  return s;
}

int BettiTable::projective_dimension() const {
  int p = 0;
  for (const auto& [key, v] : entries_) p = std::max(p, key.first);
  return p;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal) {
  std::set<Monomial> lattice;
  for (const auto& g : ideal.generators()) {
    std::vector<Monomial> fresh{g};
    for (const auto& x : lattice) fresh.push_back(lcm(x, g));
    lattice.insert(fresh.begin(), fresh.end());
  }
  return {lattice.begin(), lattice.end()};
}

BettiTable betti_table(const MonomialIdeal& ideal, const BettiLimits& limits) {
  check_limits(ideal, limits);
  BettiTable table;
  for (const auto& a : lcm_lattice(ideal)) record_multidegree(table, ideal, a);
  return table;
}

BettiTable betti_table_exhaustive(const MonomialIdeal& ideal, const BettiLimits& limits) {
  check_limits(ideal, limits);
  const int n = ideal.num_vars();
  const Monomial bound = ideal.generator_lcm();
  BettiTable table;
  std::array<Exponent, kMaxVariables> exps{};
  while (true) {
    record_multidegree(table, ideal,
                       Monomial(n, std::span<const Exponent>(exps.data(), static_cast<std::size_t>(n))));
    int k = 0;
    while (k < n && exps[static_cast<std::size_t>(k)] == bound.exponent(k + 1)) {
      exps[static_cast<std::size_t>(k)] = 0;
      ++k;
    }
    if (k == n) break;
    ++exps[static_cast<std::size_t>(k)];
  }
  return table;
}

BettiRegularity regularity_betti(const MonomialIdeal& ideal, const BettiLimits& limits) {
  BettiTable table = betti_table(ideal, limits);
  BettiRegularity out;
  bool first = true;
  for (const auto& [key, v] : table.entries()) {
    int r = key.second.degree() - key.first;
    if (first || r > out.value) {
      out = BettiRegularity{r, key.first, key.second};
      first = false;
    }
  }
  if (first) throw ContractViolation("nonzero ideal produced an empty Betti table");
  return out;
}

}  // namespace monreg
