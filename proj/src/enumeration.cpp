#include "gomplab/enumeration.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "gomplab/canonical.hpp"

namespace gomplab {

namespace {

using DownSets = std::vector<ElementSet>;

unsigned worker_count(const EnumerationOptions& options) {
  unsigned w = options.workers;
  if (w == 0) w = std::max(1U, std::thread::hardware_concurrency());
  return w;
}

// Runs body(i, worker) for i in [0, count), striding indices across workers.
void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t, unsigned)>& body) {
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i, 0);
    return;
  }
  std::vector<std::jthread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) body(i, w);
    });
  }
}

DownSets relabel(const DownSets& down, const std::vector<Element>& perm) {
  DownSets out(down.size());
  for (std::size_t x = 0; x < down.size(); ++x) {
    for (Element y : down[x]) out[perm[x]].insert(perm[y]);
  }
  return out;
}

std::vector<DownSets> extend_posets(const std::vector<DownSets>& parents, unsigned workers) {
  std::vector<std::map<CanonicalCode, DownSets>> found(workers);
  parallel_for(parents.size(), workers, [&](std::size_t i, unsigned w) {
    const DownSets& parent = parents[i];
    const int k = static_cast<int>(parent.size());
    const std::uint64_t subsets = std::uint64_t{1} << k;
    for (std::uint64_t bits = 0; bits < subsets; ++bits) {
      const ElementSet ideal(bits);
      bool closed = true;
      for (Element x : ideal) closed = closed && parent[x].is_subset_of(ideal);
      if (!closed) continue;
      DownSets child = parent;
      ElementSet fresh = ideal;
      fresh.insert(k);
      child.push_back(fresh);
      auto labeling = canonical_order_labeling(child);
      if (found[w].count(labeling.code)) continue;
      found[w].emplace(std::move(labeling.code), relabel(child, labeling.perm));
    }
  });
  std::map<CanonicalCode, DownSets> merged;
  for (auto& m : found) merged.merge(m);
  std::vector<DownSets> out;
  out.reserve(merged.size());
  for (auto& [code, down] : merged) out.push_back(std::move(down));
  return out;
}

const std::vector<DownSets>& cached_posets(int m, unsigned workers) {
  static std::mutex mutex;
  static std::map<int, std::vector<DownSets>> cache{{0, {DownSets{}}}};
  std::lock_guard lock(mutex);
  int have = cache.rbegin()->first;
  while (have < m) {
    cache[have + 1] = extend_posets(cache[have], workers);
    ++have;
  }
  return cache.at(m);
}

// Every involution sigma of the middle order with no fixed point and
// x <= y <=> sigma(y) <= sigma(x). A fixed point x = x' can never be
// complemented, since L(x, x') = L(x) contains more than 0.
void order_reversing_involutions(const DownSets& middle,
                                 const std::function<void(const std::vector<Element>&)>& visit) {
  const int m = static_cast<int>(middle.size());
  auto leq = [&](Element x, Element y) { return middle[y].contains(x); };
  std::vector<Element> sigma(m, -1);
  std::function<void()> step = [&] {
    Element x = 0;
    while (x < m && sigma[x] >= 0) ++x;
    if (x == m) {
      visit(sigma);
      return;
    }
    for (Element y = x + 1; y < m; ++y) {
      if (sigma[y] >= 0) continue;
      sigma[x] = y;
      sigma[y] = x;
      bool ok = true;
      for (Element u = 0; u < m && ok; ++u) {
        if (sigma[u] < 0) continue;
        for (Element v : {x, y}) {
          if (leq(v, u) != leq(sigma[u], sigma[v]) || leq(u, v) != leq(sigma[v], sigma[u])) {
            ok = false;
            break;
          }
        }
      }
      if (ok) step();
      sigma[x] = -1;
      sigma[y] = -1;
    }
  };
  step();
}

OrthoPoset bounded_extension(const DownSets& middle, const std::vector<Element>& sigma) {
  const int m = static_cast<int>(middle.size());
  const int n = m + 2;
  const Element top = n - 1;
  DownSets down(n);
  down[0].insert(0);
  for (Element x = 0; x < m; ++x) {
    down[x + 1].insert(0);
    for (Element y : middle[x]) down[x + 1].insert(y + 1);
  }
  down[top] = ElementSet::universe(n);
  std::vector<Element> comp(n);
  comp[0] = top;
  comp[top] = 0;
  for (Element x = 0; x < m; ++x) comp[x + 1] = sigma[x] + 1;
  return OrthoPoset::from_down_sets(std::move(down), std::move(comp));
}

std::vector<std::string> pair_names(const OrthoPoset& p) {
  const int n = p.size();
  std::vector<std::string> names(n);
  names[p.bottom()] = "0";
  names[p.top()] = "1";
  int next = 0;
  for (Element x = 0; x < n; ++x) {
    if (!names[x].empty()) continue;
    std::string base(1, static_cast<char>('a' + next % 26));
    if (next >= 26) base += std::to_string(next / 26);
    ++next;
    names[x] = base;
    if (names[p.comp(x)].empty()) names[p.comp(x)] = base + "'";
  }
  return names;
}

}  // namespace

std::vector<std::vector<ElementSet>> enumerate_posets(int m, const EnumerationOptions& options) {
  if (m < 0 || m > kMaxEnumerationSize - 2) {
    throw std::out_of_range("poset enumeration supports 0.." +
                            std::to_string(kMaxEnumerationSize - 2) + " elements");
  }
  return cached_posets(m, worker_count(options));
}

std::vector<OrthoPoset> enumerate_orthoposets(int n, const EnumerationOptions& options) {
  if (n < kMinEnumerationSize || n > kMaxEnumerationSize) {
    throw std::out_of_range("orthoposet enumeration supports n in " +
                            std::to_string(kMinEnumerationSize) + ".." +
                            std::to_string(kMaxEnumerationSize) + ", got " + std::to_string(n));
  }
  const unsigned workers = worker_count(options);
  const auto& middles = cached_posets(n - 2, workers);
  std::vector<std::map<CanonicalCode, OrthoPoset>> found(workers);
  parallel_for(middles.size(), workers, [&](std::size_t i, unsigned w) {
    order_reversing_involutions(middles[i], [&](const std::vector<Element>& sigma) {
      OrthoPoset candidate = bounded_extension(middles[i], sigma);
      if (!is_orthoposet(candidate)) return;
      auto labeling = canonical_labeling(candidate);
      if (found[w].count(labeling.code)) return;
      OrthoPoset canonical = candidate.relabeled(labeling.perm);
      found[w].emplace(std::move(labeling.code), canonical.renamed(pair_names(canonical)));
    });
  });
  std::map<CanonicalCode, OrthoPoset> merged;
  for (auto& m : found) merged.merge(m);
  std::vector<OrthoPoset> out;
  out.reserve(merged.size());
  for (auto& [code, p] : merged) out.push_back(std::move(p));
  return out;
}

}  // namespace gomplab
