#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hallmod/basering.hpp"
#include "hallmod/kind.hpp"
#include "hallmod/partitions.hpp"

namespace hallmod {

inline constexpr long kDefaultSizeBound = 4096;

/// Elements are mixed-radix codes in [0, size); code 0 is the zero element.
using Elem = std::int32_t;

/* ⊕_i R/p^{λ_i} over R = Z_p-like (cyclic) or its unramified quadratic
   extension (Galois). A Galois coordinate occupies two components a + bξ. */
class FiniteModule {
 public:
  FiniteModule(const RingDescriptor& base, const Partition& type);

  const RingDescriptor& base() const { return base_; }
  const Partition& type() const { return type_; }
  long size() const { return size_; }
  int ncoords() const { return type_.length(); }

  std::vector<long> decode(Elem x) const;
  Elem encode(const std::vector<long>& comps) const;

  Elem add(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem mul_p(Elem x) const;
  /// Multiplication by a + bξ (b must be 0 for a cyclic base).
  Elem scale(Elem x, long a, long b = 0) const;
  /// ξ·x for a Galois base.
  Elem mul_xi(Elem x) const { return scale(x, 0, 1); }
  /// i-th standard generator.
  Elem basis(int i) const;
  /// Coordinate i as a ring element of precision λ_i.
  GaloisElem coord(Elem x, int i) const;

 private:
  RingDescriptor base_;
  Partition type_;
  std::vector<long> moduli_;  // one per component
  std::vector<long> place_;   // mixed-radix place values
  long size_ = 1;
};

/// Submodule as its sorted element list plus a generating set.
struct Submodule {
  std::vector<Elem> elements;
  std::vector<Elem> gens;

  long size() const { return static_cast<long>(elements.size()); }
  bool contains(Elem x) const;
  bool subset_of(const Submodule& o) const;
  bool operator==(const Submodule& o) const { return elements == o.elements; }
};

Submodule zero_submodule(const FiniteModule& M);
Submodule whole_module(const FiniteModule& M);
Submodule span(const FiniteModule& M, const std::vector<Elem>& gens);
/// S + R·g
Submodule adjoin(const FiniteModule& M, const Submodule& S, Elem g);
Submodule intersect(const Submodule& a, const Submodule& b);

/// Every submodule exactly once (closure BFS). Throws SizeBound when |M| > size_bound.
std::vector<Submodule> enumerate_submodules(const FiniteModule& M, long size_bound = kDefaultSizeBound);
/// Every submodule containing `base`.
std::vector<Submodule> enumerate_submodules_containing(const FiniteModule& M, const Submodule& base,
                                                       long size_bound = kDefaultSizeBound);

/// Type from the ladder |p^j H|; throws InternalInconsistency on a non-integral log.
Partition module_type(const FiniteModule& M, const Submodule& H);
Partition module_type(const FiniteModule& M);
/// Type of A/B for B ⊆ A; throws NotASubmodule otherwise.
Partition quotient_type(const FiniteModule& M, const Submodule& A, const Submodule& B);
Partition quotient_type(const FiniteModule& M, const Submodule& H);

/* Alternating modules of type λ live on ⊕(Z/p^{λ_i})² with the block form;
   Hermitian modules of type λ live on ⊕ GR(p, λ_i) with the diagonal form. */
class PairedModule {
 public:
  PairedModule(Kind kind, const Partition& lambda, int p);

  Kind kind() const { return kind_; }
  const Partition& paired_type() const { return lambda_; }
  const FiniteModule& module() const { return module_; }

  /// p^{λ1}·⟨x,y⟩ in R/p^{λ1}; zero iff ⟨x,y⟩ = 0 in F/o.
  GaloisElem pairing(Elem x, Elem y) const;
  bool orthogonal(Elem x, Elem y) const;

 private:
  Kind kind_;
  Partition lambda_;
  FiniteModule module_;
  RingDescriptor value_ring_;
};

GaloisElem pairing_eval(const PairedModule& P, Elem x, Elem y);
Submodule perp(const PairedModule& P, const Submodule& H);
bool is_isotropic(const PairedModule& P, const Submodule& H);
/// Every isotropic submodule, grown by adjoining isotropic vectors of the current perp.
std::vector<Submodule> enumerate_isotropic(const PairedModule& P, long size_bound = kDefaultSizeBound);

/// Paired type of M'/M'^⊥: halved for alternating, plain for Hermitian.
Partition paired_quotient_type(const PairedModule& P, const Submodule& Mprime, const Submodule& Mperp);

/// #{H ⊆ M_λ : M/H has type μ, H has type ν} over the given base (p and c; precision ignored).
long count_G_classical(const Partition& lambda, const Partition& mu, const Partition& nu,
                       const RingDescriptor& base, long size_bound = kDefaultSizeBound);
/// #{M' : M/M' type μ, M'^⊥ ⊆ M', M'/M'^⊥ of paired type ν}.
long count_G_paired(Kind kind, const Partition& lambda, const Partition& mu, const Partition& nu, int p,
                    long size_bound = kDefaultSizeBound);

/// (quotient type, sub type) -> count over all submodules of M_λ. Cached.
const std::map<std::pair<Partition, Partition>, long>& classical_table(const Partition& lambda,
                                                                        const RingDescriptor& base,
                                                                        long size_bound = kDefaultSizeBound);
/// (μ, ν) -> count over all valid M'. Cached.
const std::map<std::pair<Partition, Partition>, long>& paired_table(Kind kind, const Partition& lambda, int p,
                                                                     long size_bound = kDefaultSizeBound);

/// #{x in the Hermitian module of type λ : ⟨x,x⟩ = π^{-λ1}}.
long count_norm_sphere(const Partition& lambda, int p, long size_bound = kDefaultSizeBound);

/// Automorphisms preserving the pairing (all module automorphisms for Classical).
long count_paired_automorphisms(Kind kind, const Partition& lambda, int p, long size_bound = kDefaultSizeBound);

struct HomCounts {
  long hom = 0;
  long sur = 0;
  long inj = 0;
};
/// Homomorphisms Z_p-modules of type λ -> type μ, by enumerating generator images.
HomCounts count_homs(const Partition& lambda, const Partition& mu, int p, long size_bound = kDefaultSizeBound);

}  // namespace hallmod
