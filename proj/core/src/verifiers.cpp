#include "avoid/verifiers.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <thread>

#include "avoid/error.hpp"
#include "avoid/integer.hpp"

namespace avoid {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::microseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
}

// Bitmap over [lo, hi] for constant-time membership.
class Membership {
 public:
  explicit Membership(std::span<const std::int64_t> sorted) {
    if (sorted.empty()) return;
    lo_ = sorted.front();
    hi_ = sorted.back();
    bits_.assign(static_cast<std::size_t>(hi_ - lo_) + 1, false);
    for (const auto e : sorted) bits_[static_cast<std::size_t>(e - lo_)] = true;
  }

  bool contains(std::int64_t x) const {
    return !bits_.empty() && x >= lo_ && x <= hi_ && bits_[static_cast<std::size_t>(x - lo_)];
  }
  std::int64_t max() const { return hi_; }

 private:
  std::int64_t lo_ = 0, hi_ = -1;
  std::vector<bool> bits_;
};

void require_sorted(std::span<const std::int64_t> A) {
  for (std::size_t i = 1; i < A.size(); ++i) {
    if (A[i] <= A[i - 1]) throw Error(Errc::invalid_argument, "set must be strictly increasing");
  }
}

// Runs scan(begin, end) over chunks of [0, n) and returns the first chunk
// result that reports a violation, preserving single-threaded order.
struct ChunkOutcome {
  bool violated = false;
  std::vector<std::int64_t> witness;
  std::uint64_t checked = 0;
};

template <typename Scan>
ChunkOutcome run_chunks(std::size_t n, unsigned threads, Scan&& scan) {
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<ChunkOutcome> outcomes(threads);
  if (threads == 1) {
    outcomes[0] = scan(0, n);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t step = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        const std::size_t begin = std::min(n, t * step);
        outcomes[t] = scan(begin, std::min(n, begin + step));
      });
    }
  }
  ChunkOutcome total;
  for (auto& o : outcomes) {
    total.checked += o.checked;
    if (o.violated && !total.violated) {
      total.violated = true;
      total.witness = std::move(o.witness);
    }
  }
  return total;
}

i128 magnitude(std::int64_t v) { return v < 0 ? -static_cast<i128>(v) : static_cast<i128>(v); }

}  // namespace

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::verified_exhaustive: return "verified-exhaustive";
    case Verdict::verified_sampled: return "verified-sampled";
    case Verdict::refuted: return "refuted";
  }
  return "unknown";
}

Verdict parse_verdict(std::string_view text) {
  for (const auto v : {Verdict::verified_exhaustive, Verdict::verified_sampled, Verdict::refuted}) {
    if (text == to_string(v)) return v;
  }
  throw Error(Errc::parse_error, "unknown verdict '" + std::string(text) + "'");
}

std::string set_digest(std::span<const std::int64_t> elements) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const auto e : elements) {
    auto u = static_cast<std::uint64_t>(e);
    for (int byte = 0; byte < 8; ++byte) {
      hash ^= u & 0xffU;
      hash *= 0x100000001b3ULL;
      u >>= 8;
    }
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

std::vector<std::int64_t> enumerate_poly_values(const UnivariatePolynomial& f, std::int64_t N) {
  if (N < 1) throw Error(Errc::invalid_argument, "N must be positive");
  const unsigned d = f.degree();
  if (d == 0) {
    const auto c = f.leading_coefficient();
    return c >= 1 && c <= N ? std::vector<std::int64_t>{c} : std::vector<std::int64_t>{};
  }
  const i128 lead = magnitude(f.leading_coefficient());
  // Past 2 * sum_{i<d} |a_i| / |a_d| the leading term is more than twice the rest.
  i128 rest = 0;
  for (const auto& t : f.terms()) {
    if (t.exponent != d) rest = checked_add(rest, magnitude(t.coefficient));
  }
  i128 bound = checked_mul(2, rest) / lead + 1;
  while (checked_mul(lead, checked_pow(bound, d)) <= checked_mul(2, N)) ++bound;

  std::vector<std::int64_t> values;
  for (i128 x = -bound + 1; x < bound; ++x) {
    const i128 v = f.evaluate(x);
    if (v >= 1 && v <= N) values.push_back(static_cast<std::int64_t>(v));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

AvoidanceCertificate verify_difference_avoidance(std::span<const std::int64_t> A,
                                                 std::span<const std::int64_t> values,
                                                 const VerifyOptions& options) {
  const auto start = Clock::now();
  require_sorted(A);
  std::vector<std::int64_t> sorted_values(values.begin(), values.end());
  std::sort(sorted_values.begin(), sorted_values.end());
  if (!sorted_values.empty() && sorted_values.front() < 1) {
    throw Error(Errc::invalid_argument, "forbidden values must be positive");
  }
  const Membership member(A);
  const auto outcome = run_chunks(A.size(), options.threads, [&](std::size_t begin, std::size_t end) {
    ChunkOutcome out;
    for (std::size_t i = begin; i < end; ++i) {
      for (const auto v : sorted_values) {
        if (A[i] + v > member.max()) break;
        ++out.checked;
        if (member.contains(A[i] + v)) {
          out.violated = true;
          out.witness = {A[i], v};
          return out;
        }
      }
    }
    return out;
  });
  AvoidanceCertificate cert;
  cert.set_digest = set_digest(A);
  cert.N = A.empty() ? 0 : A.back();
  cert.method = "difference-avoidance";
  cert.verdict = outcome.violated ? Verdict::refuted : Verdict::verified_exhaustive;
  cert.witness = outcome.witness;
  cert.checked = outcome.checked;
  cert.elapsed = since(start);
  return cert;
}

AvoidanceCertificate verify_difference_sampled(std::span<const std::int64_t> A,
                                               std::span<const std::int64_t> values, std::uint64_t samples,
                                               std::uint64_t seed) {
  const auto start = Clock::now();
  require_sorted(A);
  AvoidanceCertificate cert;
  cert.set_digest = set_digest(A);
  cert.N = A.empty() ? 0 : A.back();
  cert.method = "difference-sampled";
  cert.verdict = Verdict::verified_sampled;
  if (!A.empty() && !values.empty()) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_a(0, A.size() - 1), pick_v(0, values.size() - 1);
    for (std::uint64_t s = 0; s < samples; ++s) {
      const auto a = A[pick_a(rng)];
      const auto v = values[pick_v(rng)];
      ++cert.checked;
      if (std::binary_search(A.begin(), A.end(), a + v)) {
        cert.verdict = Verdict::refuted;
        cert.witness = {a, v};
        break;
      }
    }
  }
  cert.elapsed = since(start);
  return cert;
}

AvoidanceCertificate verify_nonlinear_roth(std::span<const std::int64_t> A, unsigned k, std::int64_t N,
                                           const VerifyOptions& options) {
  const auto start = Clock::now();
  if (k < 1) throw Error(Errc::invalid_argument, "k must be positive");
  require_sorted(A);
  if (!A.empty() && (A.front() < 1 || A.back() > N)) throw Error(Errc::invalid_argument, "set not inside [1, N]");
  const Membership member(A);
  const bool odd = k % 2 == 1;
  const auto outcome = run_chunks(A.size(), options.threads, [&](std::size_t begin, std::size_t end) {
    ChunkOutcome out;
    for (std::size_t i = begin; i < end; ++i) {
      const std::int64_t x = A[i];
      for (std::int64_t t = 1;; ++t) {
        const i128 power = checked_pow(t, k);
        const bool up = x + power <= N;            // y = t
        const bool down_even = !odd && up;          // y = -t, same y^k
        const bool down_odd = odd && x - power >= 1;  // y = -t, y^k = -t^k
        if (!up && !down_odd) break;
        const auto check = [&](std::int64_t y, std::int64_t target) {
          ++out.checked;
          if (member.contains(x + y) && member.contains(target)) {
            out.violated = true;
            out.witness = {x, y};
          }
          return out.violated;
        };
        if (up && check(t, x + static_cast<std::int64_t>(power))) return out;
        if (down_even && check(-t, x + static_cast<std::int64_t>(power))) return out;
        if (down_odd && check(-t, x - static_cast<std::int64_t>(power))) return out;
      }
    }
    return out;
  });
  AvoidanceCertificate cert;
  cert.set_digest = set_digest(A);
  cert.N = N;
  cert.method = "nonlinear-roth";
  cert.verdict = outcome.violated ? Verdict::refuted : Verdict::verified_exhaustive;
  cert.witness = outcome.witness;
  cert.checked = outcome.checked;
  cert.elapsed = since(start);
  return cert;
}

bool replay_difference_witness(std::span<const std::int64_t> A, std::span<const std::int64_t> values,
                               const AvoidanceCertificate& certificate) {
  if (certificate.verdict != Verdict::refuted || certificate.witness.size() != 2) return false;
  const auto a = certificate.witness[0];
  const auto v = certificate.witness[1];
  return std::find(values.begin(), values.end(), v) != values.end() &&
         std::binary_search(A.begin(), A.end(), a) && std::binary_search(A.begin(), A.end(), a + v);
}

bool replay_roth_witness(std::span<const std::int64_t> A, unsigned k, const AvoidanceCertificate& certificate) {
  if (certificate.verdict != Verdict::refuted || certificate.witness.size() != 2) return false;
  const auto x = certificate.witness[0];
  const auto y = certificate.witness[1];
  if (y == 0) return false;
  const i128 target = x + checked_pow(y, k);
  const auto in = [&](i128 v) { return std::binary_search(A.begin(), A.end(), static_cast<std::int64_t>(v)); };
  return in(x) && in(x + y) && in(target);
}

std::vector<bool> sums_of_two_squares_sieve(std::int64_t N) {
  if (N < 1) throw Error(Errc::invalid_argument, "N must be positive");
  std::vector<bool> table(static_cast<std::size_t>(N) + 1, false);
  for (std::int64_t x = 0; x * x <= N; ++x) {
    for (std::int64_t y = x; x * x + y * y <= N; ++y) table[static_cast<std::size_t>(x * x + y * y)] = true;
  }
  table[0] = false;
  return table;
}

std::vector<bool> sums_of_k_powers_sieve(std::int64_t N, unsigned k, unsigned count) {
  if (N < 1 || count < 1 || k < 1) throw Error(Errc::invalid_argument, "N, k and count must be positive");
  if (N > 100'000'000) throw Error(Errc::cost_exceeded, "sieve limited to N <= 10^8");
  const std::size_t bits = static_cast<std::size_t>(N) + 1;
  const std::size_t words = (bits + 63) / 64;
  std::vector<std::int64_t> powers;
  for (std::int64_t x = 1; checked_pow(x, k) <= N; ++x) powers.push_back(static_cast<std::int64_t>(checked_pow(x, k)));

  std::vector<std::uint64_t> reach(words, 0);
  reach[0] = 1;  // the empty sum
  for (unsigned round = 0; round < count; ++round) {
    std::vector<std::uint64_t> next = reach;  // a zero term
    for (const auto p : powers) {
      const std::size_t word_shift = static_cast<std::size_t>(p) / 64;
      const unsigned bit_shift = static_cast<unsigned>(p % 64);
      for (std::size_t w = words; w-- > word_shift;) {
        std::uint64_t shifted = reach[w - word_shift] << bit_shift;
        if (bit_shift != 0 && w - word_shift > 0) shifted |= reach[w - word_shift - 1] >> (64 - bit_shift);
        next[w] |= shifted;
      }
    }
    reach = std::move(next);
  }
  std::vector<bool> table(bits, false);
  for (std::size_t v = 1; v < bits; ++v) table[v] = (reach[v / 64] >> (v % 64)) & 1U;
  return table;
}

std::vector<std::int64_t> marked_values(const std::vector<bool>& table) {
  std::vector<std::int64_t> out;
  for (std::size_t v = 1; v < table.size(); ++v) {
    if (table[v]) out.push_back(static_cast<std::int64_t>(v));
  }
  return out;
}

namespace {

class SubsetSearch {
 public:
  SubsetSearch(std::int64_t m, unsigned k) : m_(m), bad_(static_cast<std::size_t>(m), false) {
    for (std::int64_t x = 0; x < m; ++x) {
      std::int64_t v = 1;
      for (unsigned i = 0; i < k; ++i) v = (v * x) % m;
      if (v != 0) bad_[static_cast<std::size_t>(v)] = true;
    }
  }

  // Some valid subset of the given size with minimum element 0?
  bool find(std::size_t size) {
    chosen_ = {0};
    return extend(1, size);
  }
  const std::vector<std::int64_t>& chosen() const { return chosen_; }

 private:
  bool compatible(std::int64_t x) const {
    for (const auto c : chosen_) {
      if (bad_[static_cast<std::size_t>((x - c + m_) % m_)] || bad_[static_cast<std::size_t>((c - x + m_) % m_)]) {
        return false;
      }
    }
    return true;
  }

  bool extend(std::int64_t from, std::size_t size) {
    if (chosen_.size() == size) return true;
    for (std::int64_t x = from; x < m_; ++x) {
      if (chosen_.size() + static_cast<std::size_t>(m_ - x) < size) return false;
      if (!compatible(x)) continue;
      chosen_.push_back(x);
      if (extend(x + 1, size)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::int64_t m_;
  std::vector<bool> bad_;
  std::vector<std::int64_t> chosen_;
};

}  // namespace

ExactRk brute_force_r_k(std::int64_t m, unsigned k) {
  if (m < 2) throw Error(Errc::invalid_modulus, std::to_string(m));
  if (m > 40) throw Error(Errc::cost_exceeded, "brute force limited to m <= 40");
  SubsetSearch search(m, k);
  ExactRk best{1, {0}};
  for (std::size_t size = 2; size <= static_cast<std::size_t>(m); ++size) {
    if (!search.find(size)) break;
    best = {size, search.chosen()};
  }
  return best;
}

Prop51Report check_prop_51(std::int64_t p, unsigned k, const Budget& budget) {
  if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p));
  if (k < 2) throw Error(Errc::invalid_argument, "k must be at least 2");
  if (k % p == 0) throw Error(Errc::divides_power, std::to_string(p) + " divides " + std::to_string(k));
  const std::int64_t pk = pow_i64(p, k);
  const auto exact = [&](std::int64_t m) -> std::size_t {
    if (m <= 40) return brute_force_r_k(m, k).size;
    const auto result = r_k(m, k, budget);
    if (!result.optimal) throw Error(Errc::cost_exceeded, "r_k(" + std::to_string(m) + ") not proved within budget");
    return result.size;
  };
  Prop51Report report;
  report.lhs = exact(pk);
  report.rhs = static_cast<std::size_t>(pow_i64(p, k - 1)) * exact(p);
  report.equal = report.lhs == report.rhs;
  return report;
}

}  // namespace avoid
