#pragma once

#include <optional>
#include <vector>

#include "gomplab/check_result.hpp"
#include "gomplab/directoid.hpp"
#include "gomplab/ortho_poset.hpp"

namespace gomplab {

/// A partition of {0..n-1}, stored as a block-id map normalised so block ids
/// appear in order of their least element.
class Partition {
 public:
  explicit Partition(std::vector<int> block_of);
  static Partition identity(int n);
  static Partition total(int n);

  int size() const { return static_cast<int>(block_of_.size()); }
  int block(Element x) const { return block_of_[x]; }
  bool related(Element x, Element y) const { return block_of_[x] == block_of_[y]; }
  int block_count() const;
  ElementSet class_of(Element x) const;
  std::vector<ElementSet> blocks() const;
  const std::vector<int>& block_map() const { return block_of_; }

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> block_of_;
};

/// Intersection of two equivalences.
Partition meet(const Partition& a, const Partition& b);
/// Equivalence join (transitive closure of the union).
Partition equivalence_join(const Partition& a, const Partition& b);
/// a o b = b o a as relations.
bool permutes(const Partition& a, const Partition& b);

/// Whether `q` is compatible with join and ' of `d`.
bool is_congruence(const Directoid& d, const Partition& q);

/// Smallest congruence containing `seed` (closure under unary polynomial
/// translations u -> u join c, c join u, u').
Partition congruence_closure(const Directoid& d, const Partition& seed);

/// Smallest congruence relating a and b.
Partition principal_congruence(const Directoid& d, Element a, Element b);

/// Join in Con(d): equivalence join, re-closed under the operations.
Partition congruence_join(const Directoid& d, const Partition& a, const Partition& b);

inline constexpr int kMaxCongruenceLatticeSize = 12;

/// All congruences of `d`, sorted. Built from principal congruences by join
/// closure. Throws std::length_error when d has more than 12 elements.
std::vector<Partition> congruence_lattice(const Directoid& d);

/// Properties of Con(d) decided directly on the lattice. The witness fields
/// hold indices into `lattice` (and an element for regularity) when the
/// property fails.
struct CongruenceProperties {
  std::vector<Partition> lattice;
  bool permutable = true;
  bool distributive = true;
  bool regular = true;
  std::vector<std::size_t> permutable_witness;    // theta, phi
  std::vector<std::size_t> distributive_witness;  // theta, phi, psi
  std::vector<std::size_t> regular_witness;       // theta, phi
  std::optional<Element> regular_element;
};
CongruenceProperties direct_congruence_properties(const Directoid& d);

/// m(x,x,y) = m(x,y,x) = m(y,x,x) = x for all x, y. Tags "xxy", "xyx", "yxx";
/// witness (x, y).
CheckResult verify_majority(const Directoid& d);
/// p(x,x,y) = y and p(y,x,x) = y. Tags "xxy", "yxx"; witness (x, y).
CheckResult verify_maltsev(const Directoid& d);
/// t1(x,x,z) = t2(x,x,z) = z, and t1(x,y,z) = t2(x,y,z) = z only when x = y.
/// Tags "t1_diagonal", "t2_diagonal", "separation".
CheckResult verify_regularity_terms(const Directoid& d);

/// p(x,y,z) = (x v L(y', y join z)) meet (z v L(y', x join y)) where v is the
/// supremum in `p`. Empty when either supremum does not exist.
std::optional<Element> partial_maltsev_eval(const OrthoPoset& p, const Directoid& d, Element x,
                                            Element y, Element z);

}  // namespace gomplab
