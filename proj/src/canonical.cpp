#include "gomplab/canonical.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace gomplab {

namespace {

struct Input {
  int n;
  std::span<const ElementSet> down;
  std::span<const Element> comp;  // empty when there is no unary map
  std::vector<ElementSet> up;
  std::vector<std::vector<Element>> preimage;
};

// Refines `colors` to a stable, densely numbered colouring.
void refine(const Input& in, std::vector<int>& colors) {
  int classes = static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
  while (true) {
    std::vector<std::vector<int>> signature(in.n);
    for (Element x = 0; x < in.n; ++x) {
      auto& sig = signature[x];
      sig.push_back(colors[x]);
      std::vector<int> below, above, pre;
      for (Element y : in.down[x]) {
        if (y != x) below.push_back(colors[y]);
      }
      for (Element y : in.up[x]) {
        if (y != x) above.push_back(colors[y]);
      }
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      sig.push_back(static_cast<int>(below.size()));
      sig.insert(sig.end(), below.begin(), below.end());
      sig.push_back(-1);
      sig.insert(sig.end(), above.begin(), above.end());
      if (!in.comp.empty()) {
        sig.push_back(-2);
        sig.push_back(colors[in.comp[x]]);
        for (Element y : in.preimage[x]) pre.push_back(colors[y]);
        std::sort(pre.begin(), pre.end());
        sig.insert(sig.end(), pre.begin(), pre.end());
      }
    }
    std::vector<std::vector<int>> sorted = signature;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Element x = 0; x < in.n; ++x) {
      colors[x] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), signature[x]) - sorted.begin());
    }
    const int now = static_cast<int>(sorted.size());
    if (now == classes) return;
    classes = now;
  }
}

CanonicalCode encode(const Input& in, const std::vector<int>& perm) {
  CanonicalCode code;
  code.words.assign(in.comp.empty() ? in.n : 2 * in.n, 0);
  for (Element x = 0; x < in.n; ++x) {
    std::uint64_t row = 0;
    for (Element y : in.down[x]) row |= std::uint64_t{1} << perm[y];
    code.words[perm[x]] = row;
    if (!in.comp.empty()) code.words[in.n + perm[x]] = static_cast<std::uint64_t>(perm[in.comp[x]]);
  }
  return code;
}

void search(const Input& in, std::vector<int> colors, std::optional<CanonicalLabeling>& best) {
  refine(in, colors);
  std::vector<int> count(in.n, 0);
  for (int c : colors) ++count[c];
  int target = -1;
  for (int c = 0; c < in.n; ++c) {
    if (count[c] > 1) {
      target = c;
      break;
    }
  }
  if (target < 0) {
    CanonicalCode code = encode(in, colors);
    if (!best || code < best->code) best = CanonicalLabeling{colors, std::move(code)};
    return;
  }
  for (Element v = 0; v < in.n; ++v) {
    if (colors[v] != target) continue;
    std::vector<int> next(in.n);
    for (Element y = 0; y < in.n; ++y) {
      next[y] = 2 * colors[y] + ((colors[y] == target && y != v) ? 1 : 0);
    }
    search(in, std::move(next), best);
  }
}

CanonicalLabeling run(int n, std::span<const ElementSet> down, std::span<const Element> comp,
                      std::vector<int> initial) {
  Input in{n, down, comp, std::vector<ElementSet>(n), {}};
  for (Element x = 0; x < n; ++x) {
    for (Element y : down[x]) in.up[y].insert(x);
  }
  if (!comp.empty()) {
    in.preimage.resize(n);
    for (Element x = 0; x < n; ++x) in.preimage[comp[x]].push_back(x);
  }
  std::optional<CanonicalLabeling> best;
  search(in, std::move(initial), best);
  return std::move(*best);
}

}  // namespace

CanonicalLabeling canonical_labeling(const OrthoPoset& p) {
  const int n = p.size();
  std::vector<ElementSet> down(n);
  for (Element x = 0; x < n; ++x) down[x] = p.down(x);
  std::vector<int> initial(n, 1);
  initial[p.bottom()] = 0;
  if (p.top() != p.bottom()) initial[p.top()] = 2;
  return run(n, down, p.comp_map(), std::move(initial));
}

CanonicalLabeling canonical_order_labeling(std::span<const ElementSet> down) {
  const int n = static_cast<int>(down.size());
  return run(n, down, {}, std::vector<int>(n, 0));
}

bool isomorphic(const OrthoPoset& a, const OrthoPoset& b) {
  return a.size() == b.size() && canonical_labeling(a).code == canonical_labeling(b).code;
}

}  // namespace gomplab
