#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hallmod {

bool is_prime(long n);
/// Smallest quadratic nonresidue mod an odd prime p.
int smallest_nonresidue(int p);

/* Z/p^k when c == 0, otherwise the Galois ring Z[ξ]/(p^k, ξ² − c) with c a
   nonresidue mod p. */
struct RingDescriptor {
  int p = 2;
  int k = 1;
  int c = 0;

  bool galois() const { return c != 0; }
  long modulus() const;           // p^k
  int residue_size() const { return galois() ? p * p : p; }
  long size() const;              // number of elements
  /// Same ring at another precision (p and c unchanged).
  RingDescriptor with_precision(int k2) const { return {p, k2, c}; }
  std::string to_string() const;  // "Z/9" or "GR(3,1;2)"
  bool operator==(const RingDescriptor&) const = default;
};

RingDescriptor make_cyclic_ring(int p, int k);
/// Throws EvenPrimeUnsupported for p = 2 and InvalidArgument for p not prime.
RingDescriptor make_galois_ring(int p, int k);

struct CyclicElem {
  RingDescriptor ring;
  long value = 0;

  static CyclicElem make(const RingDescriptor& r, long v);
  bool is_zero() const { return value == 0; }
  bool is_unit() const { return value % ring.p != 0; }
  CyclicElem operator+(const CyclicElem& o) const { return make(ring, value + o.value); }
  CyclicElem operator-(const CyclicElem& o) const { return make(ring, value - o.value); }
  CyclicElem operator-() const { return make(ring, -value); }
  CyclicElem operator*(const CyclicElem& o) const;
  bool operator==(const CyclicElem& o) const { return value == o.value && ring == o.ring; }
  std::string to_string() const { return std::to_string(value); }
};

struct GaloisElem {
  RingDescriptor ring;
  long a = 0, b = 0;  // a + bξ

  static GaloisElem make(const RingDescriptor& r, long a, long b);
  static GaloisElem xi(const RingDescriptor& r) { return make(r, 0, 1); }
  bool is_zero() const { return a == 0 && b == 0; }
  bool is_unit() const;
  GaloisElem operator+(const GaloisElem& o) const { return make(ring, a + o.a, b + o.b); }
  GaloisElem operator-(const GaloisElem& o) const { return make(ring, a - o.a, b - o.b); }
  GaloisElem operator-() const { return make(ring, -a, -b); }
  GaloisElem operator*(const GaloisElem& o) const;
  bool operator==(const GaloisElem& o) const { return a == o.a && b == o.b && ring == o.ring; }
  std::string to_string() const;  // "a" or "a+b*x"
};

GaloisElem conjugate(const GaloisElem& x);
/// x·x* = a² − c b² as an element of Z/p^k.
CyclicElem norm(const GaloisElem& x);

/// Largest j ≤ k with x ∈ p^j R; k for x = 0.
int valuation(const CyclicElem& x);
int valuation(const GaloisElem& x);

/// All elements of the ring, in increasing (a, b) order.
std::vector<GaloisElem> galois_elements(const RingDescriptor& r);

}  // namespace hallmod
