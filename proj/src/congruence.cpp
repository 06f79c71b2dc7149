#include "gomplab/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gomplab/term.hpp"

namespace gomplab {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  explicit UnionFind(const Partition& p) : UnionFind(p.size()) {
    std::vector<int> first(p.size(), -1);
    for (Element x = 0; x < p.size(); ++x) {
      int& f = first[p.block(x)];
      if (f < 0) f = x;
      else unite(f, x);
    }
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }
  Partition partition() {
    std::vector<int> ids(parent_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i) ids[i] = find(static_cast<int>(i));
    return Partition(std::move(ids));
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Partition::Partition(std::vector<int> block_of) : block_of_(std::move(block_of)) {
  std::vector<int> rename;
  for (int& b : block_of_) {
    if (b < 0) throw std::invalid_argument("negative block id");
    if (static_cast<std::size_t>(b) >= rename.size()) rename.resize(b + 1, -1);
  }
  int next = 0;
  for (int& b : block_of_) {
    if (rename[b] < 0) rename[b] = next++;
    b = rename[b];
  }
}

Partition Partition::identity(int n) {
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return Partition(std::move(ids));
}

Partition Partition::total(int n) { return Partition(std::vector<int>(n, 0)); }

int Partition::block_count() const {
  return block_of_.empty() ? 0 : *std::max_element(block_of_.begin(), block_of_.end()) + 1;
}

ElementSet Partition::class_of(Element x) const {
  ElementSet s;
  for (Element y = 0; y < size(); ++y) {
    if (block_of_[y] == block_of_[x]) s.insert(y);
  }
  return s;
}

std::vector<ElementSet> Partition::blocks() const {
  std::vector<ElementSet> out(block_count());
  for (Element x = 0; x < size(); ++x) out[block_of_[x]].insert(x);
  return out;
}

Partition meet(const Partition& a, const Partition& b) {
  std::vector<int> ids(a.size());
  for (Element x = 0; x < a.size(); ++x) ids[x] = a.block(x) * b.size() + b.block(x);
  return Partition(std::move(ids));
}

Partition equivalence_join(const Partition& a, const Partition& b) {
  UnionFind uf(a);
  for (Element x = 0; x < b.size(); ++x) {
    for (Element y : b.class_of(x)) uf.unite(x, y);
  }
  return uf.partition();
}

bool permutes(const Partition& a, const Partition& b) {
  const auto a_blocks = a.blocks();
  const auto b_blocks = b.blocks();
  for (Element x = 0; x < a.size(); ++x) {
    ElementSet ab, ba;
    for (Element y : a_blocks[a.block(x)]) ab |= b_blocks[b.block(y)];
    for (Element y : b_blocks[b.block(x)]) ba |= a_blocks[a.block(y)];
    if (ab != ba) return false;
  }
  return true;
}

bool is_congruence(const Directoid& d, const Partition& q) {
  const int n = d.size();
  for (Element u = 0; u < n; ++u) {
    for (Element v = u + 1; v < n; ++v) {
      if (!q.related(u, v)) continue;
      if (!q.related(d.comp(u), d.comp(v))) return false;
      for (Element c = 0; c < n; ++c) {
        if (!q.related(d.join(u, c), d.join(v, c))) return false;
        if (!q.related(d.join(c, u), d.join(c, v))) return false;
      }
    }
  }
  return true;
}

Partition congruence_closure(const Directoid& d, const Partition& seed) {
  const int n = d.size();
  UnionFind uf(seed);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element u = 0; u < n; ++u) {
      const Element rep = uf.find(u);
      if (rep == u) continue;
      changed |= uf.unite(d.comp(u), d.comp(rep));
      for (Element c = 0; c < n; ++c) {
        changed |= uf.unite(d.join(u, c), d.join(rep, c));
        changed |= uf.unite(d.join(c, u), d.join(c, rep));
      }
    }
  }
  return uf.partition();
}

Partition principal_congruence(const Directoid& d, Element a, Element b) {
  UnionFind uf(d.size());
  uf.unite(a, b);
  return congruence_closure(d, uf.partition());
}

Partition congruence_join(const Directoid& d, const Partition& a, const Partition& b) {
  return congruence_closure(d, equivalence_join(a, b));
}

std::vector<Partition> congruence_lattice(const Directoid& d) {
  const int n = d.size();
  if (n > kMaxCongruenceLatticeSize) {
    throw std::length_error("congruence lattice is only computed for at most " +
                            std::to_string(kMaxCongruenceLatticeSize) + " elements");
  }
  std::set<Partition> principal;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) principal.insert(principal_congruence(d, a, b));
  }
  std::set<Partition> all(principal.begin(), principal.end());
  all.insert(Partition::identity(n));
  all.insert(Partition::total(n));
  std::vector<Partition> work(all.begin(), all.end());
  while (!work.empty()) {
    const Partition theta = work.back();
    work.pop_back();
    for (const Partition& pc : principal) {
      Partition j = congruence_join(d, theta, pc);
      if (all.insert(j).second) work.push_back(std::move(j));
    }
  }
  return {all.begin(), all.end()};
}

CongruenceProperties direct_congruence_properties(const Directoid& d) {
  CongruenceProperties out;
  out.lattice = congruence_lattice(d);
  const auto& con = out.lattice;
  const std::size_t k = con.size();
  for (std::size_t i = 0; i < k && out.permutable; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!permutes(con[i], con[j])) {
        out.permutable = false;
        out.permutable_witness = {i, j};
        break;
      }
    }
  }
  for (std::size_t i = 0; i < k && out.distributive; ++i) {
    for (std::size_t j = 0; j < k && out.distributive; ++j) {
      const Partition ij = congruence_join(d, con[i], con[j]);
      for (std::size_t l = 0; l < k; ++l) {
        const Partition lhs = meet(ij, con[l]);
        const Partition rhs = congruence_join(d, meet(con[i], con[l]), meet(con[j], con[l]));
        if (lhs != rhs) {
          out.distributive = false;
          out.distributive_witness = {i, j, l};
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < k && out.regular; ++i) {
    for (std::size_t j = i + 1; j < k && out.regular; ++j) {
      for (Element a = 0; a < d.size(); ++a) {
        if (con[i].class_of(a) == con[j].class_of(a)) {
          out.regular = false;
          out.regular_witness = {i, j};
          out.regular_element = a;
          break;
        }
      }
    }
  }
  return out;
}

CheckResult verify_majority(const Directoid& d) {
  const Term m = majority_term();
  for (Element x = 0; x < d.size(); ++x) {
    for (Element y = 0; y < d.size(); ++y) {
      if (eval_term(d, m, {{'x', x}, {'y', x}, {'z', y}}) != x) return CheckResult::fail("xxy", {x, y});
      if (eval_term(d, m, {{'x', x}, {'y', y}, {'z', x}}) != x) return CheckResult::fail("xyx", {x, y});
      if (eval_term(d, m, {{'x', y}, {'y', x}, {'z', x}}) != x) return CheckResult::fail("yxx", {x, y});
    }
  }
  return CheckResult::pass();
}

CheckResult verify_maltsev(const Directoid& d) {
  const Term p = maltsev_term();
  for (Element x = 0; x < d.size(); ++x) {
    for (Element y = 0; y < d.size(); ++y) {
      if (eval_term(d, p, {{'x', x}, {'y', x}, {'z', y}}) != y) return CheckResult::fail("xxy", {x, y});
      if (eval_term(d, p, {{'x', y}, {'y', x}, {'z', x}}) != y) return CheckResult::fail("yxx", {x, y});
    }
  }
  return CheckResult::pass();
}

CheckResult verify_regularity_terms(const Directoid& d) {
  const Term t1 = regularity_term_1();
  const Term t2 = regularity_term_2();
  const int n = d.size();
  for (Element x = 0; x < n; ++x) {
    for (Element z = 0; z < n; ++z) {
      const Assignment a{{'x', x}, {'y', x}, {'z', z}};
      if (eval_term(d, t1, a) != z) return CheckResult::fail("t1_diagonal", {x, z});
      if (eval_term(d, t2, a) != z) return CheckResult::fail("t2_diagonal", {x, z});
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x == y) continue;
      for (Element z = 0; z < n; ++z) {
        const Assignment a{{'x', x}, {'y', y}, {'z', z}};
        if (eval_term(d, t1, a) == z && eval_term(d, t2, a) == z) {
          return CheckResult::fail("separation", {x, y, z});
        }
      }
    }
  }
  return CheckResult::pass();
}

std::optional<Element> partial_maltsev_eval(const OrthoPoset& p, const Directoid& d, Element x,
                                            Element y, Element z) {
  const Element yc = p.comp(y);
  ElementSet left = lower_cone(p, ElementSet{yc, d.join(y, z)});
  left.insert(x);
  ElementSet right = lower_cone(p, ElementSet{yc, d.join(x, y)});
  right.insert(z);
  const auto left_sup = supremum(p, left);
  const auto right_sup = supremum(p, right);
  if (!left_sup || !right_sup) return std::nullopt;
  return d.meet(*left_sup, *right_sup);
}

}  // namespace gomplab
