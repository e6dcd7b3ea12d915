#include "hamq/bounds.hpp"

#include <cmath>
#include <string>

namespace hamq {

namespace {

void check_nm(std::int64_t n, std::uint32_t m) {
  if (n < 1) throw ParamError("need n >= 1");
  if (m < 2) throw ParamError("need m >= 2");
}

mpz_class pow_ui(std::uint64_t base, std::uint64_t exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

/// Sum over the trinomial state space (N1=a, N2=b, other=n-a-b) of
/// C(n,a) C(n-a,b) (m-2)^(n-a-b) * weight(a,b). Dividing by m^n turns it
/// into an expectation of the weight. Binomials are updated incrementally
/// with exact divisions; the result is independent of summation order.
template <typename W>
mpz_class trinomial_weighted_sum(std::int64_t n, std::uint32_t m, W&& weight) {
  std::vector<mpz_class> pw(static_cast<std::size_t>(n) + 1);
  pw[0] = 1;
  for (std::int64_t c = 1; c <= n; ++c) pw[static_cast<std::size_t>(c)] = pw[c - 1] * (m - 2);

  mpz_class total = 0;
  mpz_class ca = 1;  // C(n, a)
  mpz_class term;
  for (std::int64_t a = 0; a <= n; ++a) {
    mpz_class cb = 1;  // C(n-a, b)
    for (std::int64_t b = 0; b <= n - a; ++b) {
      const std::int64_t w = weight(a, b);
      const std::size_t c = static_cast<std::size_t>(n - a - b);
      if (w != 0 && pw[c] != 0) {
        term = ca * cb;
        term *= pw[c];
        term *= static_cast<unsigned long>(w);
        total += term;
      }
      if (b < n - a) {
        cb *= static_cast<unsigned long>(n - a - b);
        mpz_divexact_ui(cb.get_mpz_t(), cb.get_mpz_t(), static_cast<unsigned long>(b + 1));
      }
    }
    if (a < n) {
      ca *= static_cast<unsigned long>(n - a);
      mpz_divexact_ui(ca.get_mpz_t(), ca.get_mpz_t(), static_cast<unsigned long>(a + 1));
    }
  }
  return total;
}

/// d >= sqrt(s) for rationals with s >= 0, decided exactly.
bool geq_sqrt(const mpq_class& d, const mpq_class& s) {
  if (d < 0) return false;
  return d * d >= s;
}

/// d <= sqrt(s) for rationals with s >= 0, decided exactly.
bool leq_sqrt(const mpq_class& d, const mpq_class& s) {
  if (d <= 0) return true;
  return d * d <= s;
}

/// Expected correctly-predicted count of the one-query attack, times m^n.
mpz_class small_k1_count_numerator(std::int64_t n, std::uint32_t m) {
  return trinomial_weighted_sum(n, m, [n, m](std::int64_t a, std::int64_t b) {
    return a * static_cast<std::int64_t>(m) >= n ? a : b;
  });
}

}  // namespace

double bound_small(std::int64_t n, std::uint32_t m, std::int64_t k) {
  check_nm(n, m);
  if (k < 1) return 1.0 / m;
  return 1.0 / m + 0.125 * std::sqrt(static_cast<double>(k) / (static_cast<double>(m) * n));
}

bool bound_small_applicable(std::int64_t n, std::uint32_t m, std::int64_t k) {
  // k <= 1 + n/(2m) without rounding: (k-1) * 2m <= n.
  return n >= static_cast<std::int64_t>(m) && k >= 1 &&
         (k - 1) * 2 * static_cast<std::int64_t>(m) <= n;
}

double bound_large(std::int64_t n, std::uint32_t m, std::int64_t k) {
  check_nm(n, m);
  return 1.0 / m + static_cast<double>(k) / (36.0 * n * std::log(static_cast<double>(m)));
}

bool bound_large_applicable(std::uint32_t m, std::int64_t k) {
  return static_cast<double>(k) > 9.0 * m * std::log(static_cast<double>(m));
}

double bound_large_realized(std::int64_t n, std::uint32_t m, std::int64_t t) {
  check_nm(n, m);
  return 1.0 / m + static_cast<double>(t) * (0.75 - 1.0 / m) / n;
}

double bound_upper_k1(std::int64_t n, std::uint32_t m) {
  check_nm(n, m);
  return 1.0 / m + 0.5 * std::sqrt(1.0 / (static_cast<double>(n) * (m - 1)));
}

double bound_small_unknown(std::int64_t n, std::uint32_t m, std::int64_t k) {
  check_nm(n, m);
  if (k < 1) return 1.0 / m;
  return 1.0 / m + 0.0625 * std::sqrt(static_cast<double>(k) / (static_cast<double>(m) * n));
}

double bound_large_unknown(std::int64_t n, std::uint32_t m, std::int64_t k) {
  check_nm(n, m);
  return 1.0 / m + static_cast<double>(k) / (72.0 * n * std::log(static_cast<double>(m)));
}

BoundReport make_bound_report(std::int64_t n, std::uint32_t m, std::int64_t k) {
  check_nm(n, m);
  if (k < 0) throw ParamError("need k >= 0");
  BoundReport r;
  r.n = n;
  r.m = m;
  r.k = k;
  r.baseline = 1.0 / m;
  r.lower_small = bound_small(n, m, k);
  r.small_applicable = bound_small_applicable(n, m, k);
  r.lower_large = bound_large(n, m, k);
  r.large_applicable = bound_large_applicable(m, k);
  r.upper_k1 = bound_upper_k1(n, m);
  r.upper_k1_applicable = (k == 1);
  const double kk = static_cast<double>(k);
  r.ffh_envelope = std::max(std::sqrt(kk / (static_cast<double>(m) * n)), kk / n);
  return r;
}

mpq_class exact_small_k1_accuracy(std::int64_t n, std::uint32_t m) {
  check_nm(n, m);
  const mpz_class num = small_k1_count_numerator(n, m);
  mpz_class den = pow_ui(m, static_cast<std::uint64_t>(n));
  den *= static_cast<unsigned long>(n);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

mpq_class exact_max_pair_expectation(std::int64_t n_prime, std::uint32_t m) {
  check_nm(n_prime, m);
  const mpz_class num = trinomial_weighted_sum(
      n_prime, m, [](std::int64_t a, std::int64_t b) { return a > b ? a : b; });
  mpq_class q(num, pow_ui(m, static_cast<std::uint64_t>(n_prime)));
  q.canonicalize();
  return q;
}

MadCheck mad_binomial_lower(std::int64_t n, const mpq_class& p) {
  if (n < 1) throw ParamError("need n >= 1");
  if (p <= 0 || p >= 1) throw ParamError("need 0 < p < 1");
  MadCheck out;
  const mpq_class lo(1, static_cast<unsigned long>(n));
  out.applicable = (p >= lo) && (p <= 1 - lo);

  // E|Y - np| = sum_y C(n,y) pa^y (pb-pa)^(n-y) |y pb - n pa| / pb^(n+1).
  const mpz_class pa = p.get_num();
  const mpz_class pb = p.get_den();
  const mpz_class qa = pb - pa;
  std::vector<mpz_class> pow_pa(static_cast<std::size_t>(n) + 1),
      pow_qa(static_cast<std::size_t>(n) + 1);
  pow_pa[0] = 1;
  pow_qa[0] = 1;
  for (std::int64_t i = 1; i <= n; ++i) {
    pow_pa[static_cast<std::size_t>(i)] = pow_pa[i - 1] * pa;
    pow_qa[static_cast<std::size_t>(i)] = pow_qa[i - 1] * qa;
  }
  mpz_class total = 0;
  mpz_class binom = 1;
  mpz_class dev, term;
  for (std::int64_t y = 0; y <= n; ++y) {
    dev = pb * y - pa * n;
    if (dev < 0) dev = -dev;
    term = binom * pow_pa[static_cast<std::size_t>(y)];
    term *= pow_qa[static_cast<std::size_t>(n - y)];
    term *= dev;
    total += term;
    if (y < n) {
      binom *= static_cast<unsigned long>(n - y);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(y + 1));
    }
  }
  mpz_class den = pb;
  mpz_pow_ui(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n + 1));
  out.value = mpq_class(total, den);
  out.value.canonicalize();

  const mpq_class var_half = mpq_class(n) * p * (1 - p) / 2;
  out.holds = geq_sqrt(out.value, var_half);
  return out;
}

bool lemma1_lower_holds(std::int64_t n, std::uint32_t m) {
  check_nm(n, m);
  mpq_class expected(small_k1_count_numerator(n, m), pow_ui(m, static_cast<std::uint64_t>(n)));
  expected.canonicalize();
  const mpq_class d = expected - mpq_class(n, m);
  return geq_sqrt(d, mpq_class(n, 16ul * m));
}

bool lemma2_lower_holds(std::int64_t n_prime, std::uint32_t m) {
  const mpq_class d = exact_max_pair_expectation(n_prime, m) - mpq_class(n_prime, m);
  return geq_sqrt(d, mpq_class(n_prime, 16ul * m));
}

bool k1_sandwich_holds(std::int64_t n, std::uint32_t m) {
  const mpq_class advantage = exact_small_k1_accuracy(n, m) - mpq_class(1, m);
  // (1/8) sqrt(1/(nm)) <= advantage <= (1/2) sqrt(1/(n(m-1))).
  mpq_class lower_sq(1, 64ul);
  lower_sq /= mpq_class(n) * m;
  mpq_class upper_sq(1, 4ul);
  upper_sq /= mpq_class(n) * (m - 1);
  return geq_sqrt(advantage, lower_sq) && leq_sqrt(advantage, upper_sq);
}

mpq_class exhaustive_average_accuracy(std::size_t n, std::uint32_t m, const Attack& attack,
                                      const std::vector<std::uint64_t>& seeds, bool parallel) {
  check_nm(static_cast<std::int64_t>(n), m);
  if (seeds.empty()) throw ParamError("need at least one seed");
  constexpr std::uint64_t kMaxStates = 1000000;
  std::uint64_t states = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (states > kMaxStates / m)
      throw ParamError("state space m^n exceeds " + std::to_string(kMaxStates));
    states *= m;
  }

  const std::int64_t num_states = static_cast<std::int64_t>(states);
  std::int64_t total_matches = 0;
#pragma omp parallel for schedule(static) reduction(+ : total_matches) if (parallel)
  for (std::int64_t idx = 0; idx < num_states; ++idx) {
    std::vector<Label> labels(n);
    std::uint64_t rest = static_cast<std::uint64_t>(idx);
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = static_cast<Label>(1 + rest % m);
      rest /= m;
    }
    const LabelSequence hidden(LabelSequence::Unchecked{}, labels, m);
    for (const std::uint64_t seed : seeds) {
      MatchOracle oracle(hidden);
      Rng rng(seed);
      const LabelSequence estimate = attack.run(oracle, rng);
      total_matches += oracle.final_accuracy(estimate).num;
    }
  }

  mpz_class den(static_cast<unsigned long>(n));
  den *= static_cast<unsigned long>(states);
  den *= static_cast<unsigned long>(seeds.size());
  mpq_class q(mpz_class(total_matches), den);
  q.canonicalize();
  return q;
}

}  // namespace hamq
