#include <algorithm>
#include <numeric>

#include "avoid/error.hpp"
#include "avoid/integer.hpp"
#include "avoid/residue.hpp"

namespace avoid {

namespace {

void require_modulus(std::int64_t m) {
  if (m < 2) throw Error(Errc::invalid_modulus, "modulus must be at least 2, got " + std::to_string(m));
}

ResidueSet from_indicator(std::int64_t m, const std::vector<bool>& hit) {
  std::vector<std::int64_t> out;
  for (std::int64_t r = 0; r < m; ++r) {
    if (hit[static_cast<std::size_t>(r)]) out.push_back(r);
  }
  if (out.empty()) return ResidueSet::empty_image(m);
  return ResidueSet(m, std::move(out));
}

std::uint64_t enumeration_cost(std::int64_t M, std::size_t n) {
  std::uint64_t cost = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(cost, static_cast<std::uint64_t>(M), &cost)) return UINT64_MAX;
  }
  return cost;
}

// Visits every point of [0, M)^n; stops early when visit returns false.
template <typename Visit>
void for_each_point(std::int64_t M, std::size_t n, Visit&& visit) {
  std::vector<std::int64_t> x(n, 0);
  while (true) {
    if (!visit(std::span<const std::int64_t>(x))) return;
    std::size_t i = 0;
    while (i < n && ++x[i] == M) x[i++] = 0;
    if (i == n) return;
  }
}

// Residues reachable as sum_i c_i x_i^k mod M, one table per "some
// coordinate is nonzero mod m" flag. flagged[r] is true when r is reachable
// with at least one x_i not divisible by m.
struct DiagonalSums {
  std::vector<bool> plain;
  std::vector<bool> flagged;
};

DiagonalSums fold_diagonal(const HomogeneousForm& F, std::int64_t M, std::int64_t m) {
  const auto size = static_cast<std::size_t>(M);
  DiagonalSums sums{std::vector<bool>(size, false), std::vector<bool>(size, false)};
  sums.plain[0] = true;
  for (const auto c : F.diagonal_coefficients()) {
    std::vector<bool> zero_values(size, false), unit_values(size, false);
    for (std::int64_t x = 0; x < M; ++x) {
      const auto v = static_cast<std::size_t>(mul_mod(mod(c, M), pow_mod(x, F.degree(), M), M));
      (x % m == 0 ? zero_values : unit_values)[v] = true;
    }
    DiagonalSums next{std::vector<bool>(size, false), std::vector<bool>(size, false)};
    for (std::size_t r = 0; r < size; ++r) {
      if (!sums.plain[r] && !sums.flagged[r]) continue;
      for (std::size_t v = 0; v < size; ++v) {
        if (!zero_values[v] && !unit_values[v]) continue;
        const auto s = (r + v) % size;
        if (sums.plain[r] && zero_values[v]) next.plain[s] = true;
        if ((sums.flagged[r] && (zero_values[v] || unit_values[v])) || (sums.plain[r] && unit_values[v])) {
          next.flagged[s] = true;
        }
      }
    }
    sums = std::move(next);
  }
  return sums;
}

}  // namespace

ResidueSet power_residues(std::int64_t m, unsigned k) {
  require_modulus(m);
  std::vector<bool> hit(static_cast<std::size_t>(m), false);
  for (std::int64_t x = 0; x < m; ++x) hit[static_cast<std::size_t>(pow_mod(x, k, m))] = true;
  return from_indicator(m, hit);
}

ResidueSet poly_image_mod(const UnivariatePolynomial& f, std::int64_t m) {
  require_modulus(m);
  std::vector<bool> hit(static_cast<std::size_t>(m), false);
  for (std::int64_t x = 0; x < m; ++x) hit[static_cast<std::size_t>(f.evaluate_mod(x, m))] = true;
  return from_indicator(m, hit);
}

bool root_condition_univariate(const UnivariatePolynomial& f, std::int64_t m) {
  require_modulus(m);
  if (!is_square_free(m)) throw Error(Errc::not_square_free, std::to_string(m));
  for (std::int64_t x = 1; x < m; ++x) {
    if (f.evaluate_mod(x, m) == 0) return false;
  }
  return true;
}

bool root_condition_form(const HomogeneousForm& F, std::int64_t m, unsigned k, std::uint64_t budget) {
  require_modulus(m);
  if (k != F.degree()) {
    throw Error(Errc::invalid_argument, "k=" + std::to_string(k) + " differs from form degree " +
                                            std::to_string(F.degree()));
  }
  const std::int64_t M = pow_i64(m, k);
  if (F.is_diagonal()) return !fold_diagonal(F, M, m).flagged[0];

  const auto cost = enumeration_cost(M, F.arity());
  if (cost > budget) {
    throw Error(Errc::cost_exceeded, std::to_string(M) + "^" + std::to_string(F.arity()) + " points");
  }
  bool ok = true;
  for_each_point(M, F.arity(), [&](std::span<const std::int64_t> x) {
    if (F.evaluate_mod(x, M) != 0) return true;
    ok = std::all_of(x.begin(), x.end(), [m](std::int64_t xi) { return xi % m == 0; });
    return ok;
  });
  return ok;
}

ResidueSet form_image_mod(const HomogeneousForm& F, std::int64_t M, std::uint64_t budget) {
  require_modulus(M);
  if (!F.is_diagonal()) return form_image_mod_enumerate(F, M, budget);
  // m = M here makes every x except 0 "flagged"; the union is the image.
  const auto sums = fold_diagonal(F, M, M);
  std::vector<bool> hit(static_cast<std::size_t>(M), false);
  for (std::size_t r = 0; r < hit.size(); ++r) hit[r] = sums.plain[r] || sums.flagged[r];
  return from_indicator(M, hit);
}

ResidueSet form_image_mod_enumerate(const HomogeneousForm& F, std::int64_t M, std::uint64_t budget) {
  require_modulus(M);
  const auto cost = enumeration_cost(M, F.arity());
  if (cost > budget) {
    throw Error(Errc::cost_exceeded, std::to_string(M) + "^" + std::to_string(F.arity()) + " points");
  }
  std::vector<bool> hit(static_cast<std::size_t>(M), false);
  for_each_point(M, F.arity(), [&](std::span<const std::int64_t> x) {
    hit[static_cast<std::size_t>(F.evaluate_mod(x, M))] = true;
    return true;
  });
  return from_indicator(M, hit);
}

bool divisibility_lift_check(const UnivariatePolynomial& f, std::int64_t m, unsigned j, std::int64_t bound) {
  if (j < 1) throw Error(Errc::invalid_argument, "j must be positive");
  if (!root_condition_univariate(f, m)) {
    throw Error(Errc::root_condition_failed, f.to_string() + " has a nonzero root modulo " + std::to_string(m));
  }
  const unsigned k = f.low_degree();
  const std::int64_t mj = pow_i64(m, j);
  const std::int64_t target = pow_i64(m, (j + k - 1) / k);
  for (std::int64_t x = 0; x <= bound; ++x) {
    if (mod(f.evaluate(x), mj) == 0 && x % target != 0) return false;
  }
  return true;
}

std::int64_t hensel_lift(const UnivariatePolynomial& f, std::int64_t a, std::int64_t p, unsigned N) {
  if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p));
  if (N < 1) throw Error(Errc::invalid_argument, "N must be positive");
  if (f.evaluate_mod(a, p) != 0) {
    throw Error(Errc::not_a_root, std::to_string(a) + " is not a root of " + f.to_string() + " modulo " +
                                      std::to_string(p));
  }
  const auto df = [&]() -> std::int64_t {
    if (f.degree() == 0) return 0;
    return f.derivative().evaluate_mod(a, p);
  }();
  if (df == 0) {
    throw Error(Errc::singular_root, "f'(" + std::to_string(a) + ") = 0 modulo " + std::to_string(p));
  }
  const std::int64_t inv = inverse_mod(df, p);
  // Newton step with the derivative frozen at a; each pass gains one power of p.
  std::int64_t root = mod(a, p);
  std::int64_t modulus = p;
  for (unsigned level = 2; level <= N; ++level) {
    modulus = pow_i64(p, level);
    const std::int64_t value = f.evaluate_mod(root, modulus);
    const std::int64_t step = mul_mod(value / (modulus / p), inv, p);
    root = mod(static_cast<i128>(root) - static_cast<i128>(step) * (modulus / p), modulus);
  }
  return root;
}

bool is_kth_power_residue_stable(std::int64_t w, std::int64_t p, unsigned k, unsigned N) {
  if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p));
  if (k < 1 || N < 1) throw Error(Errc::invalid_argument, "k and N must be positive");
  if (k % p == 0) throw Error(Errc::divides_power, std::to_string(p) + " | " + std::to_string(k));
  if (w % p == 0) throw Error(Errc::divides_value, std::to_string(p) + " | " + std::to_string(w));
  const auto f = UnivariatePolynomial({{k, 1}, {0, -w}});
  for (std::int64_t x = 1; x < p; ++x) {
    if (f.evaluate_mod(x, p) != 0) continue;
    const std::int64_t lifted = hensel_lift(f, x, p, N);
    return f.evaluate_mod(lifted, pow_i64(p, N)) == 0;
  }
  return false;
}

}  // namespace avoid
