#include "girthlab/gdel.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "girthlab/analysis.hpp"

namespace girthlab {
namespace {

uint64_t hash_rank(uint64_t seed, uint64_t rank) {
  uint64_t z = seed + (rank + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t choose3(uint64_t n) { return n * (n - 1) / 2 * (n - 2) / 3; }

BigInt ipow(BigInt b, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

} // namespace

double RationalPower::to_double(uint64_t n) const {
  return coeff.convert_to<double>() *
         std::pow(double(n), double(exp_num) / double(exp_den));
}

RationalPower deletion_rate(int k) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  RationalPower r;
  r.coeff = Rational(BigInt(1), BigInt(10) * ipow(BigInt(k), 100));
  r.exp_num = -(2 * k - 2);
  r.exp_den = 2 * k - 1;
  return r;
}

Rational parse_rational(const std::string& s) {
  auto digits = [](const std::string& t) {
    if (t.empty()) throw std::invalid_argument("bad rational: " + t);
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("bad rational: " + t);
    return BigInt(t);
  };
  std::string body = s;
  bool neg = !body.empty() && body[0] == '-';
  if (neg || (!body.empty() && body[0] == '+')) body.erase(0, 1);
  Rational v;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    BigInt den = digits(body.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    v = Rational(digits(body.substr(0, slash)), den);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string frac = body.substr(dot + 1);
    BigInt scale = ipow(BigInt(10), unsigned(frac.size()));
    v = Rational(digits(body.substr(0, dot)) * scale + digits(frac), scale);
  } else {
    v = Rational(digits(body));
  }
  return neg ? -v : v;
}

uint64_t threshold_from_rate(uint64_t n, const RationalPower& rate) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (rate.exp_den <= 0)
    throw std::invalid_argument("exponent denominator must be positive");
  BigInt cn = numerator(rate.coeff), cd = denominator(rate.coeff);
  if (cn <= 0) throw std::invalid_argument("rate must be positive");
  unsigned den = unsigned(rate.exp_den);
  // T <= coeff * n^(num/den) * 2^64  iff
  // (T cd)^den * n^max(0,-num) <= (cn 2^64)^den * n^max(0,num)
  BigInt lhs_extra =
      rate.exp_num < 0 ? ipow(BigInt(n), unsigned(-rate.exp_num)) : BigInt(1);
  BigInt rhs = ipow(cn * (BigInt(1) << 64), den) *
               (rate.exp_num > 0 ? ipow(BigInt(n), unsigned(rate.exp_num))
                                 : BigInt(1));
  auto fits = [&](uint64_t t) {
    return ipow(BigInt(t) * cd, den) * lhs_extra <= rhs;
  };
  if (fits(UINT64_MAX)) return UINT64_MAX; // probability saturates at 1
  uint64_t lo = 0, hi = UINT64_MAX - 1;
  while (lo < hi) {
    uint64_t mid = lo + (hi - lo + 1) / 2;
    if (fits(mid)) lo = mid;
    else hi = mid - 1;
  }
  return lo;
}

TripleSystem sample_g3(uint32_t n, uint64_t threshold, uint64_t seed) {
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  if (choose3(n) > 200'000'000ULL)
    throw std::invalid_argument("sample_g3: size guard exceeded");
  std::vector<std::array<uint32_t, 3>> triples;
  uint64_t rank = 0;
  for (uint32_t i = 0; i + 2 < n; ++i)
    for (uint32_t j = i + 1; j + 1 < n; ++j)
      for (uint32_t l = j + 1; l < n; ++l) {
        if (hash_rank(seed, rank) < threshold) triples.push_back({i, j, l});
        ++rank;
      }
  GraphMeta meta;
  meta.family = "g3";
  meta.set_extra("threshold", std::to_string(threshold));
  meta.set_extra("seed", std::to_string(seed));
  return TripleSystem::build(1, {n}, std::move(triples), std::move(meta));
}

uint64_t deletion_process(TripleSystem& H, int k) {
  if (H.num_parts != 1)
    throw std::invalid_argument("deletion runs on plain triple systems");
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  const uint32_t n = H.part_sizes[0];
  const auto& T = H.triples;
  std::vector<char> alive(T.size(), 1);
  std::vector<std::vector<uint32_t>> inc(n);
  for (uint32_t t = 0; t < T.size(); ++t)
    for (int j = 0; j < 3; ++j) inc[T[t][j]].push_back(t);

  uint64_t deleted = 0;
  for (uint32_t v = 0; v < n; ++v) {
    for (;;) {
      std::vector<std::pair<uint32_t, uint32_t>> ledges;
      for (uint32_t t : inc[v]) {
        if (!alive[t]) continue;
        uint32_t x = T[t][0] == v ? T[t][1] : T[t][0];
        uint32_t y = T[t][2] == v ? T[t][1] : T[t][2];
        ledges.push_back({x, y});
      }
      if (ledges.size() < size_t(2 * k)) break;
      Graph L = Graph::build(1, {n}, std::move(ledges));
      CycleWitness w = has_cycle_of_length(L, uint32_t(2 * k));
      if (!w.found) break;
      uint32_t a = w.cycle[0], b = w.cycle[1];
      for (uint32_t t : inc[v]) {
        if (!alive[t]) continue;
        uint32_t x = T[t][0] == v ? T[t][1] : T[t][0];
        uint32_t y = T[t][2] == v ? T[t][1] : T[t][2];
        if ((x == a && y == b) || (x == b && y == a)) {
          alive[t] = 0;
          ++deleted;
          break;
        }
      }
    }
  }

  std::vector<std::array<uint32_t, 3>> rem;
  rem.reserve(T.size() - deleted);
  for (uint32_t t = 0; t < T.size(); ++t)
    if (alive[t]) rem.push_back(T[t]);
  GraphMeta meta = H.meta;
  meta.set_extra("deleted", std::to_string(deleted));
  H = TripleSystem::build(1, {n}, std::move(rem), std::move(meta));
  return deleted;
}

Rational expected_final_lower_bound(uint32_t n, int k, const Rational& p) {
  Rational c3(BigInt(n) * (n - 1) * (n - 2), 6);
  Rational pk = 1;
  for (int i = 0; i < 2 * k; ++i) pk *= p;
  return p * c3 - Rational(2 * k + 1) * Rational(ipow(BigInt(n), unsigned(2 * k + 1))) * pk;
}

Rational expected_final_lower_bound_alt(uint32_t n, int k,
                                        uint64_t threshold) {
  BigInt t = threshold;
  BigInt two64 = BigInt(1) << 64;
  BigInt num1 =
      t * n * BigInt(n - 1) * (n - 2) * ipow(two64, unsigned(2 * k - 1));
  BigInt num2 = BigInt(6) * (2 * k + 1) * ipow(BigInt(n), unsigned(2 * k + 1)) *
                ipow(t, unsigned(2 * k));
  return Rational(num1 - num2, BigInt(6) * ipow(two64, unsigned(2 * k)));
}

DeletionReport deletion_experiment(uint32_t n, int k,
                                   const RationalPower& rate, uint64_t seed,
                                   TripleSystem* out) {
  DeletionReport rep;
  rep.n = n;
  rep.k = k;
  rep.seed = seed;
  rep.threshold = threshold_from_rate(n, rate);
  rep.p = Rational(BigInt(rep.threshold), BigInt(1) << 64);
  TripleSystem H = sample_g3(n, rep.threshold, seed);
  rep.initial_edges = H.num_edges();
  rep.expected_initial = rep.p * Rational(BigInt(n) * (n - 1) * (n - 2), 6);
  rep.expected_final_lb = expected_final_lower_bound(n, k, rep.p);
  if (rep.expected_final_lb !=
      expected_final_lower_bound_alt(n, k, rep.threshold))
    throw std::logic_error("expected-value cross-check failed");
  rep.deleted_edges = deletion_process(H, k);
  rep.final_edges = H.num_edges();
  rep.suspension_free = is_suspension_free(H, k).free;
  if (out) *out = std::move(H);
  return rep;
}

} // namespace girthlab
