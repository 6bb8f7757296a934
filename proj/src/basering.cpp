#include "hallmod/basering.hpp"

#include "hallmod/error.hpp"

namespace hallmod {

namespace {

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

long reduce(long v, long m) {
  v %= m;
  return v < 0 ? v + m : v;
}

int valuation_of(long v, int p, int k) {
  if (v == 0) return k;
  int j = 0;
  while (j < k && v % p == 0) {
    v /= p;
    ++j;
  }
  return j;
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int smallest_nonresidue(int p) {
  for (int c = 2; c < p; ++c) {
    bool square = false;
    for (long x = 1; x < p && !square; ++x) square = (x * x) % p == c;
    if (!square) return c;
  }
  throw Error(ErrorCode::InvalidArgument, "no nonresidue mod " + std::to_string(p));
}

long RingDescriptor::modulus() const { return ipow(p, k); }

long RingDescriptor::size() const { return galois() ? modulus() * modulus() : modulus(); }

std::string RingDescriptor::to_string() const {
  if (!galois()) return "Z/" + std::to_string(modulus());
  return "GR(" + std::to_string(p) + "," + std::to_string(k) + ";" + std::to_string(c) + ")";
}

RingDescriptor make_cyclic_ring(int p, int k) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative precision");
  return {p, k, 0};
}

RingDescriptor make_galois_ring(int p, int k) {
  if (p == 2) throw Error(ErrorCode::EvenPrimeUnsupported, "Galois rings need an odd prime");
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative precision");
  return {p, k, smallest_nonresidue(p)};
}

CyclicElem CyclicElem::make(const RingDescriptor& r, long v) { return {r, reduce(v, r.modulus())}; }

CyclicElem CyclicElem::operator*(const CyclicElem& o) const { return make(ring, value * o.value); }

GaloisElem GaloisElem::make(const RingDescriptor& r, long a, long b) {
  long m = r.modulus();
  return {r, reduce(a, m), reduce(b, m)};
}

GaloisElem GaloisElem::operator*(const GaloisElem& o) const {
  long m = ring.modulus();
  long re = (a * o.a + reduce(ring.c * b, m) * o.b) % m;
  return make(ring, re, a * o.b + b * o.a);
}

bool GaloisElem::is_unit() const { return norm(*this).is_unit(); }

std::string GaloisElem::to_string() const {
  if (b == 0) return std::to_string(a);
  return std::to_string(a) + "+" + std::to_string(b) + "*x";
}

GaloisElem conjugate(const GaloisElem& x) { return GaloisElem::make(x.ring, x.a, -x.b); }

CyclicElem norm(const GaloisElem& x) {
  RingDescriptor base{x.ring.p, x.ring.k, 0};
  long m = x.ring.modulus();
  return CyclicElem::make(base, x.a * x.a - reduce(x.ring.c * x.b, m) * x.b);
}

int valuation(const CyclicElem& x) { return valuation_of(x.value, x.ring.p, x.ring.k); }

int valuation(const GaloisElem& x) {
  return std::min(valuation_of(x.a, x.ring.p, x.ring.k), valuation_of(x.b, x.ring.p, x.ring.k));
}

std::vector<GaloisElem> galois_elements(const RingDescriptor& r) {
  std::vector<GaloisElem> out;
  long m = r.modulus();
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < (r.galois() ? m : 1); ++b) out.push_back({r, a, b});
  return out;
}

}  // namespace hallmod
