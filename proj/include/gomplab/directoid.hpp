#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gomplab/check_result.hpp"
#include "gomplab/ortho_poset.hpp"

namespace gomplab {

/// A finite algebra (D, join, ', 0, 1) of type (2,1,0,0) given by tables.
///
/// Nothing beyond table shape is assumed; the directoid and class
/// conditions are decided by the checks below. The meet is always derived
/// as x meet y = (x' join y')'.
class Directoid {
 public:
  Directoid(int n, std::vector<Element> join_table, std::vector<Element> comp,
            Element bottom, Element top);

  int size() const { return n_; }
  Element join(Element x, Element y) const { return join_[static_cast<std::size_t>(x) * n_ + y]; }
  Element meet(Element x, Element y) const { return comp_[join(comp_[x], comp_[y])]; }
  Element comp(Element x) const { return comp_[x]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  const std::vector<Element>& join_table() const { return join_; }
  const std::vector<Element>& comp_map() const { return comp_; }
  /// p <= q in the induced order, i.e. p join q = q.
  bool below(Element p, Element q) const { return join(p, q) == q; }

  bool operator==(const Directoid&) const = default;

 private:
  int n_;
  std::vector<Element> join_;
  std::vector<Element> comp_;
  Element bottom_;
  Element top_;
};

/// x join y is the larger of a comparable pair; for an incomparable pair it
/// is the minimal upper bound with the least id.
Directoid assign_canonical_directoid(const OrthoPoset& p);

/// Whether `d` is assigned to `p`: same unary map and constants, x join y = y
/// when x <= y, join commutative, and x join y in U(x, y).
bool is_assigned_to(const Directoid& d, const OrthoPoset& p);

/// Number of directoids assigned to `p` (product of |U(x,y)| over
/// incomparable pairs), saturated at `cap`.
std::uint64_t assignment_count(const OrthoPoset& p, std::uint64_t cap = UINT64_MAX);

/// Streams up to `budget` distinct assigned directoids. Choice points are the
/// incomparable pairs ordered by (min, max); each ranges over U(x, y) with the
/// canonical choice first, then the rest by id, advanced odometer-style with
/// the last pair varying fastest. The canonical directoid comes first.
/// The callback may return false to stop early.
void enumerate_assignments(const OrthoPoset& p, std::uint64_t budget,
                           const std::function<bool(const Directoid&)>& visit);
std::vector<Directoid> enumerate_assignments(const OrthoPoset& p, std::uint64_t budget);

/// The canonical directoid followed by `count - 1` assignments drawn
/// uniformly (with a fixed seed) over the choice space.
std::vector<Directoid> sample_assignments(const OrthoPoset& p, std::size_t count,
                                          std::uint64_t seed = 0x5eed);

/// "idempotent", "commutative", "weak_associative" (x join ((x join y) join z)
/// = (x join y) join z).
CheckResult is_directoid(const Directoid& d);

struct InducedOrderReport {
  /// relation[x * n + y] is true iff x join y = y.
  std::vector<bool> relation;
  bool is_poset = false;
};
InducedOrderReport induced_order(const Directoid& d);
/// The induced order as an OrthoPoset carrying d's unary map, when it is a
/// bounded poset.
std::optional<OrthoPoset> induced_poset(const Directoid& d);

/// The four conditions characterising directoids assigned to generalized
/// orthomodular posets:
///   (i)   if (x join z) join (((x' meet w) meet ((x join y) meet w)) join z) = z
///         for all w, then (x join y) join z = z      (witness x, y, z)
///   (ii)  (x meet y) join x = x
///   (iii) (x join y) join (x' join y) = 1
///   (iv)  x'' = x
struct CharacterizationReport {
  CheckResult condition_i;
  CheckResult condition_ii;
  CheckResult condition_iii;
  CheckResult condition_iv;

  bool all_pass() const {
    return condition_i.passed && condition_ii.passed && condition_iii.passed &&
           condition_iv.passed;
  }
};
CharacterizationReport theorem_characterization_report(const Directoid& d);

/// Conditions (i)-(iv) together; reports the first failure in that order.
CheckResult in_class_A(const Directoid& d);

/// Identities (ii)-(iv) plus
///   (i') x join y <= (x join z) join ((x' meet (x join y)) join z)
/// with p <= q read as p join q = q. Reported in the order (i'), ii, iii, iv.
CheckResult in_variety_W(const Directoid& d);

/// For every pair (a, b):
///   L(a,b) = {(a meet x) meet (b meet x)} = {x : (a meet x) meet (b meet x) = x}
///   U(a,b) = {(a join x) join (b join x)} = {x : (a join x) join (b join x) = x}
/// Tags: "lower_image", "lower_fixed", "upper_image", "upper_fixed".
CheckResult cone_characterization_check(const OrthoPoset& p, const Directoid& d);

}  // namespace gomplab
