#pragma once
// Exact arithmetic in GF(p^n), p prime, with an explicit irreducible monic
// modulus over GF(p).  Elements are canonical integers in [0, q):
//   value = c0 + c1*p + ... + c_{n-1}*p^{n-1}
// for the coefficient vector (c0, ..., c_{n-1}) of the residue polynomial.
// All operation tables are precomputed at construction; arithmetic never
// touches floating point.

#include <cstdint>
#include <string>
#include <vector>

namespace girthlab {

using Scalar = uint32_t; // canonical element encoding, < q

class Field {
public:
  // Built-in modulus table, q in {2,3,4,5,7,8,9,16,25,27,32,81,243}.
  static Field make(int p, int n);
  // Explicit modulus: n+1 coefficients c0..cn (constant term first), cn = 1.
  // Throws std::invalid_argument if p is not prime, the modulus is not monic
  // of degree n, or it is reducible over GF(p).
  static Field make(int p, int n, const std::vector<int>& modulus);
  // Convenience: q = p^n from the built-in table.
  static Field make_order(uint32_t q);

  int p() const { return p_; }
  int n() const { return n_; }
  uint32_t q() const { return q_; }
  int characteristic() const { return p_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Scalar add(Scalar a, Scalar b) const { return add_[idx(a, b)]; }
  Scalar sub(Scalar a, Scalar b) const { return add_[idx(a, neg_[b])]; }
  Scalar neg(Scalar a) const { return neg_[a]; }
  Scalar mul(Scalar a, Scalar b) const { return mul_[idx(a, b)]; }
  Scalar inv(Scalar a) const; // throws std::domain_error on 0
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  Scalar pow(Scalar a, uint64_t e) const;
  // Frobenius power a^(p^s), s >= 0, computed as s-fold a -> a^p.
  Scalar frob_pow(Scalar a, int s) const;

  Scalar from_int(int64_t v) const; // reduce an integer into the prime subfield
  std::vector<Scalar> elements() const;

  // Coefficient vector (length n, constant term first) of an element.
  std::vector<int> coeffs(Scalar a) const;

  bool same_field(const Field& other) const {
    return p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_;
  }

private:
  Field() = default;
  void build_tables();
  size_t idx(Scalar a, Scalar b) const { return size_t(a) * q_ + b; }

  int p_ = 0, n_ = 0;
  uint32_t q_ = 0;
  std::vector<int> modulus_;          // c0..cn, monic
  std::vector<Scalar> add_, mul_;     // q*q tables
  std::vector<Scalar> neg_, inv_;     // q tables; inv_[0] unused
};

// Parse "q" or "p^n:c0,c1,...,cn" (explicit modulus) into a Field.
Field parse_field(const std::string& s);

} // namespace girthlab
