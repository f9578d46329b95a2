#include "monreg/dfixed.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "monreg/error.hpp"

namespace monreg {

DSequence::DSequence(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.front() != 1) {
    throw std::invalid_argument("a d-sequence starts with d_0 = 1");
  }
  for (std::size_t t = 1; t < entries_.size(); ++t) {
    if (entries_[t] <= entries_[t - 1] || entries_[t] % entries_[t - 1] != 0) {
      throw std::invalid_argument("d-sequence entries must strictly increase with d_t | d_{t+1}: " +
                                  std::to_string(entries_[t - 1]) + " -> " +
                                  std::to_string(entries_[t]));
    }
  }
}

DSequence DSequence::parse(std::string_view text) {
  std::vector<int> entries;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view part = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || end != part.data() + part.size()) {
      throw std::invalid_argument("malformed d-sequence '" + std::string(text) + "'");
    }
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return DSequence(std::move(entries));
}

std::string to_string(const DSequence& d) {
  std::string out;
  for (std::size_t t = 0; t < d.entries().size(); ++t) {
    if (t > 0) out += '|';
    out += std::to_string(d.entries()[t]);
  }
  return out;
}

std::vector<DSequence> enumerate_dsequences(int max_entry) {
  std::vector<DSequence> out;
  std::vector<int> current{1};
  auto extend = [&](auto&& self) -> void {
    out.emplace_back(current);
    for (int next = current.back() * 2; next <= max_entry; next += current.back()) {
      current.push_back(next);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return out;
}

std::optional<int> DDecomposition::top_nonzero() const {
  for (int t = static_cast<int>(digits.size()) - 1; t >= 0; --t) {
    if (digits[static_cast<std::size_t>(t)] != 0) return t;
  }
  return std::nullopt;
}

DDecomposition d_decompose(int value, const DSequence& d) {
  if (value < 0) throw std::invalid_argument("d-decomposition of a negative integer");
  DDecomposition out;
  out.digits.assign(d.entries().size(), 0);
  int rest = value;
  for (int t = d.top(); t >= 0; --t) {
    out.digits[static_cast<std::size_t>(t)] = rest / d[t];
    rest %= d[t];
  }
  return out;
}

bool d_leq(int a, int b, const DSequence& d) {
  auto da = d_decompose(a, d);
  auto db = d_decompose(b, d);
  for (std::size_t t = 0; t < da.digits.size(); ++t) {
    if (da.digits[t] > db.digits[t]) return false;
  }
  return true;
}

MonomialIdeal frobenius_power(int prefix, int power, int num_vars) {
  if (prefix < 1 || prefix > num_vars) throw std::invalid_argument("prefix outside 1..n");
  if (power < 1) throw std::invalid_argument("Frobenius power must be positive");
  std::vector<Monomial> gens;
  for (int k = 1; k <= prefix; ++k) gens.push_back(Monomial::variable(num_vars, k, power));
  return MonomialIdeal(num_vars, std::move(gens));
}

PrincipalSpec make_principal_spec(const Monomial& u, const DSequence& d) {
  if (u.is_one()) throw std::invalid_argument("principal d-fixed ideal of the constant monomial");
  PrincipalSpec spec;
  spec.generator = u;
  spec.dseq = d;
  spec.inert_degree = u.exponent(1);

  // running[t] accumulates sum_{e <= q} sum_{j >= t}^{s_e} alpha_{ej} d_j.
  std::vector<int> running(d.entries().size(), 0);
  for (int var = 2; var <= u.num_vars(); ++var) {
    int alpha = u.exponent(var);
    if (alpha == 0) continue;
    PrincipalFactor f;
    f.var = var;
    f.exponent = alpha;
    f.digits = d_decompose(alpha, d);
    f.top_digit = *f.digits.top_nonzero();
    for (int t = 0; t <= d.top(); ++t) {
      for (int j = t; j <= f.top_digit; ++j) {
        running[static_cast<std::size_t>(t)] += f.digits.digits[static_cast<std::size_t>(j)] * d[j];
      }
    }
    f.partial_degree = running[static_cast<std::size_t>(f.top_digit)];
    f.bound = f.partial_degree + (var - 1) * (d[f.top_digit] - 1);
    spec.factors.push_back(std::move(f));
  }
  return spec;
}

MonomialIdeal principal_dfixed(const Monomial& u, const DSequence& d) {
  const PrincipalSpec spec = make_principal_spec(u, d);
  const int n = u.num_vars();
  MonomialIdeal out = MonomialIdeal::unit(n);
  for (const auto& f : spec.factors) {
    for (int j = 0; j <= d.top(); ++j) {
      int times = f.digits.digits[static_cast<std::size_t>(j)];
      if (times == 0) continue;
      MonomialIdeal frob = frobenius_power(f.var, d[j], n);
      for (int k = 0; k < times; ++k) out = product(out, frob);
    }
  }
  if (spec.inert_degree > 0) {
    out = product(out, MonomialIdeal(n, {Monomial::variable(n, 1, spec.inert_degree)}));
  }
  return out;
}

bool is_d_fixed(const MonomialIdeal& ideal, const DSequence& d) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw PreconditionError("d-fixed test needs a proper nonzero ideal");
  }
  MonomialIdeal closure = MonomialIdeal::zero(ideal.num_vars());
  for (const auto& g : ideal.generators()) {
    closure = sum(closure, principal_dfixed(g, d));
    if (!is_subideal(closure, ideal)) return false;
  }
  return closure == ideal;
}

bool satisfies_d_moves_on_generators(const MonomialIdeal& ideal, const DSequence& d) {
  for (const auto& g : ideal.generators()) {
    for (int i : support(g)) {
      const int nu = g.exponent(i);
      for (int t = 1; t <= nu; ++t) {
        if (!d_leq(t, nu, d)) continue;
        for (int j = 1; j < i; ++j) {
          Monomial moved = g.with_exponent(i, nu - t).with_exponent(j, g.exponent(j) + t);
          if (!contains(ideal, moved)) return false;
        }
      }
    }
  }
  return true;
}

MonomialIdeal dfixed_sum(const std::vector<DFixedSpec>& specs) {
  if (specs.empty()) throw std::invalid_argument("dfixed_sum needs at least one spec");
  const int n = specs.front().generator.num_vars();
  std::vector<Monomial> gens;
  for (const auto& s : specs) {
    if (s.generator.num_vars() != n) throw std::invalid_argument("specs live in different rings");
    auto part = principal_dfixed(s.generator, s.dseq);
    gens.insert(gens.end(), part.generators().begin(), part.generators().end());
  }
  return minimalize(n, std::move(gens));
}

std::optional<std::vector<DFixedSpec>> find_dfixed_presentation(
    const MonomialIdeal& ideal, const std::vector<DSequence>& candidates) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw PreconditionError("D-fixed presentation needs a proper nonzero ideal");
  }
  std::vector<DFixedSpec> witness;
  for (const auto& g : ideal.generators()) {
    auto hit = std::find_if(candidates.begin(), candidates.end(), [&](const DSequence& d) {
      return is_subideal(principal_dfixed(g, d), ideal);
    });
    if (hit == candidates.end()) return std::nullopt;
    witness.push_back({g, *hit});
  }
  return witness;
}

std::optional<std::vector<DFixedSpec>> find_dfixed_presentation(const MonomialIdeal& ideal) {
  return find_dfixed_presentation(ideal, enumerate_dsequences(std::max(1, ideal.max_degree())));
}

int pardue_regularity(const PrincipalSpec& spec) {
  if (spec.factors.empty()) return spec.inert_degree;
  int best = 0;
  for (const auto& f : spec.factors) best = std::max(best, f.bound);
  return spec.inert_degree + best;
}

int dfixed_reg_bound(const std::vector<DFixedSpec>& specs) {
  if (specs.empty()) throw std::invalid_argument("dfixed_reg_bound needs at least one spec");
  int best = 0;
  for (const auto& s : specs) {
    best = std::max(best, pardue_regularity(make_principal_spec(s.generator, s.dseq)));
  }
  return best;
}

}  // namespace monreg
