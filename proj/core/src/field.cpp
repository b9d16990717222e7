#include "girthlab/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace girthlab {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense polynomial over GF(p), coefficients c0.., trailing zeros trimmed.
using Poly = std::vector<int>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const Poly& f) { return int(f.size()) - 1; } // deg(0) = -1

Poly poly_mul(const Poly& f, const Poly& g, int p) {
  if (f.empty() || g.empty()) return {};
  Poly h(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j)
      h[i + j] = (h[i + j] + f[i] * g[j]) % p;
  trim(h);
  return h;
}

// Remainder of f mod monic g.
Poly poly_rem(Poly f, const Poly& g, int p) {
  trim(f);
  while (deg(f) >= deg(g)) {
    int shift = deg(f) - deg(g);
    int c = f.back();
    for (int i = 0; i <= deg(g); ++i) {
      int& t = f[i + shift];
      t = ((t - c * g[i]) % p + p) % p;
    }
    trim(f);
  }
  return f;
}

// Exhaustive factor search: f (monic, deg n >= 1) is irreducible over GF(p)
// iff no monic divisor of degree 1..n/2 exists.  Desk scale (q <= 3^5).
bool is_irreducible(const Poly& f, int p) {
  int n = deg(f);
  if (n < 1) return false;
  for (int d = 1; 2 * d <= n; ++d) {
    // enumerate monic polynomials of degree d
    uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= uint64_t(p);
    for (uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      uint64_t c = code;
      for (int i = 0; i < d; ++i) { g[i] = int(c % p); c /= p; }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

struct TableEntry { uint32_t q; std::vector<int> mod; };

// Fixed moduli for the supported orders.  All verified irreducible at
// construction time as well.
const TableEntry kModuli[] = {
  {2, {0, 1}},
  {3, {0, 1}},
  {4, {1, 1, 1}},             // x^2+x+1
  {5, {0, 1}},
  {7, {0, 1}},
  {8, {1, 1, 0, 1}},          // x^3+x+1
  {9, {1, 0, 1}},             // x^2+1
  {16, {1, 1, 0, 0, 1}},      // x^4+x+1
  {25, {1, 1, 1}},            // x^2+x+1
  {27, {1, 2, 0, 1}},         // x^3+2x+1
  {32, {1, 0, 1, 0, 0, 1}},   // x^5+x^2+1
  {81, {2, 1, 0, 0, 1}},      // x^4+x+2
  {243, {1, 2, 0, 0, 0, 1}},  // x^5+2x+1
};

} // namespace

Field Field::make(int p, int n) {
  if (n < 1) throw std::invalid_argument("field: n must be >= 1");
  uint64_t q = 1;
  for (int i = 0; i < n; ++i) q *= uint64_t(p);
  for (const auto& e : kModuli)
    if (e.q == q && int(e.mod.size()) == n + 1)
      return make(p, n, e.mod);
  throw std::invalid_argument("field: no built-in modulus for q=" +
                              std::to_string(q) + "; pass one explicitly");
}

Field Field::make_order(uint32_t q) {
  for (int p = 2; p <= int(q); ++p) {
    if (!is_prime(p)) continue;
    uint64_t pw = p;
    int n = 1;
    while (pw < q) { pw *= uint64_t(p); ++n; }
    if (pw == q) return make(p, n);
  }
  throw std::invalid_argument("field: q=" + std::to_string(q) +
                              " is not a prime power");
}

Field Field::make(int p, int n, const std::vector<int>& modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field: p is not prime");
  if (n < 1) throw std::invalid_argument("field: n must be >= 1");
  if (int(modulus.size()) != n + 1)
    throw std::invalid_argument("field: modulus must have n+1 coefficients");
  Poly m;
  for (int c : modulus) {
    if (c < 0 || c >= p)
      throw std::invalid_argument("field: modulus coefficients must be in [0,p)");
    m.push_back(c);
  }
  if (m[n] != 1) throw std::invalid_argument("field: modulus must be monic");
  if (n > 1 && !is_irreducible(m, p))
    throw std::invalid_argument("field: modulus is reducible over GF(p)");

  uint64_t q = 1;
  for (int i = 0; i < n; ++i) {
    q *= uint64_t(p);
    if (q > 100000) throw std::invalid_argument("field: q too large");
  }

  Field F;
  F.p_ = p;
  F.n_ = n;
  F.q_ = uint32_t(q);
  F.modulus_ = modulus;
  F.build_tables();
  return F;
}

void Field::build_tables() {
  const uint32_t q = q_;
  add_.assign(size_t(q) * q, 0);
  mul_.assign(size_t(q) * q, 0);
  neg_.assign(q, 0);
  inv_.assign(q, 0);

  auto decode = [&](Scalar v) {
    Poly c(n_, 0);
    for (int i = 0; i < n_; ++i) { c[i] = int(v % p_); v /= p_; }
    return c;
  };
  auto encode = [&](const Poly& c) {
    Scalar v = 0;
    for (int i = std::min<int>(int(c.size()), n_) - 1; i >= 0; --i)
      v = v * p_ + Scalar(c[i]);
    return v;
  };

  for (Scalar a = 0; a < q; ++a) {
    Poly ca = decode(a);
    Poly na(n_, 0);
    for (int i = 0; i < n_; ++i) na[i] = (p_ - ca[i]) % p_;
    neg_[a] = encode(na);
    for (Scalar b = a; b < q; ++b) {
      Poly cb = decode(b);
      Poly s(n_, 0);
      for (int i = 0; i < n_; ++i) s[i] = (ca[i] + cb[i]) % p_;
      add_[idx(a, b)] = add_[idx(b, a)] = encode(s);
      Poly prod = poly_rem(poly_mul(ca, cb, p_), modulus_, p_);
      mul_[idx(a, b)] = mul_[idx(b, a)] = encode(prod);
    }
  }
  for (Scalar a = 1; a < q; ++a)
    for (Scalar b = 1; b < q; ++b)
      if (mul_[idx(a, b)] == 1) { inv_[a] = b; break; }
}

Scalar Field::inv(Scalar a) const {
  if (a == 0) throw std::domain_error("field: inverse of zero");
  return inv_[a];
}

Scalar Field::pow(Scalar a, uint64_t e) const {
  Scalar r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Scalar Field::frob_pow(Scalar a, int s) const {
  Scalar r = a;
  for (int i = 0; i < s; ++i) r = pow(r, uint64_t(p_));
  return r;
}

Scalar Field::from_int(int64_t v) const {
  int64_t r = v % p_;
  if (r < 0) r += p_;
  return Scalar(r);
}

std::vector<Scalar> Field::elements() const {
  std::vector<Scalar> e(q_);
  for (uint32_t i = 0; i < q_; ++i) e[i] = i;
  return e;
}

std::vector<int> Field::coeffs(Scalar a) const {
  std::vector<int> c(n_, 0);
  for (int i = 0; i < n_; ++i) { c[i] = int(a % p_); a /= p_; }
  return c;
}

Field parse_field(const std::string& s) {
  auto caret = s.find('^');
  if (caret == std::string::npos)
    return Field::make_order(uint32_t(std::stoul(s)));
  int p = std::stoi(s.substr(0, caret));
  auto colon = s.find(':', caret);
  if (colon == std::string::npos)
    return Field::make(p, std::stoi(s.substr(caret + 1)));
  int n = std::stoi(s.substr(caret + 1, colon - caret - 1));
  std::vector<int> mod;
  std::string rest = s.substr(colon + 1);
  size_t pos = 0;
  while (pos <= rest.size()) {
    auto comma = rest.find(',', pos);
    if (comma == std::string::npos) comma = rest.size();
    mod.push_back(std::stoi(rest.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return Field::make(p, n, mod);
}

} // namespace girthlab
