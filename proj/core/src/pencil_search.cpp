#include "eikq/pencil_search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_map>

#include "eikq/analysis.hpp"
#include "eikq/error.hpp"
#include "eikq/matrix.hpp"

namespace eikq {

namespace {

// The 2x2 seeds: +-diag(1,-1), +-offdiag(1,1).
RationalMatrix block_seed(int kind) {
  RationalMatrix b(2, 2);
  const int s = kind % 2 == 0 ? 1 : -1;
  if (kind < 2) {
    b(0, 0) = s;
    b(1, 1) = -s;
  } else {
    b(0, 1) = s;
    b(1, 0) = s;
  }
  return b;
}

RationalMatrix block_sum(std::size_t p, const std::vector<int>& kinds) {
  RationalMatrix a(p, p);
  for (std::size_t k = 0; k < kinds.size(); ++k) {
    const auto b = block_seed(kinds[k]);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) a(2 * k + r, 2 * k + c) = b(r, c);
  }
  return a;
}

// P^T A P for the permutation matrix of `perm`.
RationalMatrix permute(const RationalMatrix& a, const std::vector<std::size_t>& perm) {
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(perm[r], perm[c]) = a(r, c);
  return out;
}

std::string key_of(const Pencil& pencil) {
  std::string k;
  for (const auto& a : pencil) {
    for (const auto& v : a.data()) {
      k += to_string(v);
      k += ',';
    }
    k += ';';
  }
  return k;
}

std::vector<std::vector<int>> all_block_choices(std::size_t nu) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(nu, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < nu && ++cur[i] == 4) cur[i++] = 0;
    if (i == nu) break;
  }
  return out;
}

bool pencil_ok(const Pencil& pencil) {
  if (pencil.empty()) return true;
  return check_pencil(pencil).passes();
}

int height_of(const Rational& r) {
  const mpz_class num = abs(r.get_num());
  return static_cast<int>(std::max(num.get_si(), r.get_den().get_si()));
}

// Small rationals with numerator and denominator at most 4, ordered by
// height max(|num|, den), then positive before negative, then magnitude.
std::vector<Rational> small_rationals() {
  std::vector<Rational> vals;
  for (int den = 1; den <= 4; ++den)
    for (int num = -4; num <= 4; ++num) {
      Rational r(num, den);
      r.canonicalize();
      if (std::find(vals.begin(), vals.end(), r) == vals.end()) vals.push_back(r);
    }
  std::stable_sort(vals.begin(), vals.end(), [&](const Rational& a, const Rational& b) {
    const int ha = height_of(a), hb = height_of(b);
    if (sgn(a) == 0 || sgn(b) == 0) return sgn(a) == 0 && sgn(b) != 0;
    if (ha != hb) return ha < hb;
    if (sgn(a) != sgn(b)) return sgn(a) > 0;
    return abs(a) < abs(b);
  });
  return vals;
}

// Calls visit(coeffs) for direction vectors in increasing height with first
// nonzero entry equal to 1 (one representative per projective class).
// Stops when visit returns false.
template <typename Visit>
void enumerate_directions(std::size_t d, Visit visit) {
  if (d == 0) return;
  static const auto values = small_rationals();
  for (int h = 1; h <= 4; ++h) {
    std::vector<Rational> allowed;
    for (const auto& v : values)
      if (height_of(v) <= h) allowed.push_back(v);
    std::vector<std::size_t> idx(d, 0);
    while (true) {
      std::vector<Rational> coeffs(d);
      int max_h = 0;
      int lead = -1;
      for (std::size_t j = 0; j < d; ++j) {
        coeffs[j] = allowed[idx[j]];
        if (sgn(coeffs[j]) != 0) {
          max_h = std::max(max_h, height_of(coeffs[j]));
          if (lead < 0) lead = static_cast<int>(j);
        }
      }
      if (lead >= 0 && coeffs[lead] == 1 && max_h == h) {
        if (!visit(coeffs)) return;
      }
      std::size_t j = d;
      while (j > 0) {
        --j;
        if (++idx[j] < allowed.size()) break;
        idx[j] = 0;
        if (j == 0) {
          j = d + 1;
          break;
        }
      }
      if (j == d + 1) break;
    }
  }
}

}  // namespace

std::vector<Pencil> structured_pencils(std::size_t p, std::size_t q, std::size_t nu) {
  if (nu == 0) return {Pencil(q, RationalMatrix(p, p))};
  if (2 * nu > p) throw InfeasibleParameters("2 nu exceeds p");
  const auto choices = all_block_choices(nu);

  std::vector<RationalMatrix> first;
  for (const auto& c : choices) first.push_back(block_sum(p, c));

  // Candidates for A_2..A_q: every block choice under every coordinate permutation.
  std::vector<RationalMatrix> others;
  std::set<std::string> seen_matrix;
  std::vector<std::size_t> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (const auto& c : choices) {
      auto a = permute(block_sum(p, c), perm);
      if (seen_matrix.insert(key_of({a})).second) others.push_back(std::move(a));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Pencil> out;
  std::set<std::string> seen;
  Pencil cur;
  // Depth-first with pruning: every leading sub-pencil must itself pass.
  auto extend = [&](auto&& self) -> void {
    if (cur.size() == q) {
      if (seen.insert(key_of(cur)).second) out.push_back(cur);
      return;
    }
    const auto& pool = cur.empty() ? first : others;
    for (const auto& a : pool) {
      cur.push_back(a);
      if (pencil_ok(cur)) self(self);
      cur.pop_back();
    }
  };
  extend(extend);
  return out;
}

std::vector<Polynomial> theta3_linear_solutions(const Pencil& pencil, std::size_t p, std::size_t q) {
  const std::size_t dim = p + q;
  if (p == 0 || q == 0) return {};
  const auto forms = pencil_forms(pencil, p, q);

  // Basis: cubic monomials in xi times a single eta_j.
  std::vector<Polynomial> basis;
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = a; b < p; ++b)
        for (std::size_t c = b; c < p; ++c) {
          Monomial m(dim);
          m.set(a, m[a] + 1);
          m.set(b, m[b] + 1);
          m.set(c, m[c] + 1);
          m.set(p + j, 1);
          basis.push_back(Polynomial::term(m, Rational(1)));
        }
  }

  const auto gx4 = gradient(forms.theta4, 0, p);
  const auto gx2 = gradient(forms.theta2, 0, p);
  const auto ge2 = gradient(forms.theta2, p, dim);
  const auto ge0 = gradient(forms.theta0, p, dim);

  // Row key: identity index and monomial.
  std::map<std::pair<int, std::vector<int>>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns(basis.size());
  auto add = [&](std::size_t col, int identity, const Polynomial& r) {
    for (const auto& t : r.terms()) {
      std::vector<int> exps(dim);
      for (std::size_t i = 0; i < dim; ++i) exps[i] = t.monomial[i];
      auto [it, inserted] = row_of.try_emplace({identity, std::move(exps)}, row_of.size());
      columns[col].emplace_back(it->second, t.coefficient);
    }
  };
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& b = basis[k];
    const auto gx = gradient(b, 0, p);
    const auto ge = gradient(b, p, dim);
    add(k, 0, dot(forms.tau, ge, dim));
    add(k, 1, dot(forms.a_eta_xi, gx, dim));
    add(k, 2, dot(gx4, gx, dim) + dot(ge, ge2, dim));
    add(k, 3, dot(gx, gx2, dim) + dot(ge, ge0, dim));
    add(k, 4, laplacian(b, 0, p));
  }
  RationalMatrix m(row_of.size(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (const auto& [r, v] : columns[k]) m(r, k) += v;

  std::vector<std::vector<Rational>> kernel;
  if (row_of.empty()) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<Rational> e(basis.size());
      e[k] = 1;
      kernel.push_back(std::move(e));
    }
  } else {
    kernel = nullspace(m);
  }
  std::vector<Polynomial> out;
  for (const auto& v : kernel) {
    Polynomial s(dim);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (sgn(v[k]) != 0) s += basis[k] * v[k];
    out.push_back(std::move(s));
  }
  return out;
}

SearchResult search_isoparametric_pencil(int p, int q, int nu, const SearchOptions& options) {
  if (p < 0 || q < 0 || nu < 0) throw InfeasibleParameters("p, q and nu must be nonnegative");
  if (p + q == 0) throw InfeasibleParameters("p + q must be positive");
  if (nu > 0) {
    if (2 * nu > p) throw InfeasibleParameters("2 nu = " + std::to_string(2 * nu) + " exceeds p = " + std::to_string(p));
    if (2 * nu != p + 1 - q) {
      throw InfeasibleParameters("2 nu = " + std::to_string(2 * nu) + " differs from p + 1 - q = " +
                                 std::to_string(p + 1 - q));
    }
  }
  const auto up = static_cast<std::size_t>(p);
  const auto uq = static_cast<std::size_t>(q);
  const std::size_t dim = up + uq;

  auto pencils = structured_pencils(up, uq, static_cast<std::size_t>(nu));
  if (nu > 0 && up >= 2 && options.conjugations > 0) {
    std::mt19937_64 rng(options.seed);
    const std::size_t base = pencils.size();
    for (std::size_t c = 0; c < options.conjugations; ++c) {
      for (std::size_t i = 0; i < base; ++i) {
        const auto u = random_cayley_orthogonal(up, rng);
        const auto ut = u.transpose();
        Pencil conj;
        for (const auto& a : pencils[i]) conj.push_back(ut * a * u);
        pencils.push_back(std::move(conj));
      }
    }
  }

  SearchResult result;
  bool stopped = false;
  auto done = [&] {
    return result.candidates_examined >= options.budget ||
           (options.max_results != 0 && result.results.size() >= options.max_results);
  };
  auto try_candidate = [&](const Pencil& pencil, const Polynomial& theta3) {
    NormalFormData data{up, uq, pencil, theta3};
    if (check_eikonal(assemble_from_normal_form(data), 4).zero) result.results.push_back(std::move(data));
  };

  for (const auto& pencil : pencils) {
    if (done()) {
      stopped = true;
      break;
    }
    const auto forms = pencil_forms(pencil, up, uq);
    const auto gx4 = gradient(forms.theta4, 0, up);
    // The quadratic identity fixes |grad_eta theta3|^2 = 16 |xi|^6 - |grad_xi theta4|^2.
    const auto target = forms.xi_sq * forms.xi_sq * forms.xi_sq * Rational(16) - dot(gx4, gx4, dim);

    ++result.candidates_examined;
    if (target.is_zero()) {
      try_candidate(pencil, Polynomial(dim));
      continue;
    }
    const auto sols = theta3_linear_solutions(pencil, up, uq);
    std::size_t visited = 0;
    enumerate_directions(sols.size(), [&](const std::vector<Rational>& coeffs) {
      if (done()) {
        stopped = true;
        return false;
      }
      if (visited++ >= options.directions_per_pencil) {
        stopped = true;
        return false;
      }
      ++result.candidates_examined;
      Polynomial dir(dim);
      for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (sgn(coeffs[j]) != 0) dir += sols[j] * coeffs[j];
      const auto ge = gradient(dir, up, dim);
      const auto g = dot(ge, ge, dim);
      if (g.is_zero()) return true;
      const auto& lead = g.terms().front();
      const Rational scale_sq = target.coefficient(lead.monomial) / lead.coefficient;
      if (sgn(scale_sq) <= 0 || !(g * scale_sq == target)) return true;
      const auto scale = exact_sqrt(scale_sq);
      if (!scale) return true;
      try_candidate(pencil, dir * *scale);
      if (!done()) try_candidate(pencil, dir * Rational(-*scale));
      return true;
    });
  }
  if (done()) stopped = true;
  result.exhausted = !stopped;
  if (options.max_results != 0 && result.results.size() > options.max_results) {
    result.results.resize(options.max_results);
  }
  return result;
}

}  // namespace eikq
