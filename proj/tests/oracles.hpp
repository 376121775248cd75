#pragma once

// Small brute-force reference implementations used only by the tests. They
// work on plain strings and share no code with the library.

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Arcs = std::vector<std::pair<int, int>>;

// Cups of a weight string: each '^' closes the nearest open 'v' to its left
// (ignoring 'o' and 'x'). Returns arcs as string indices, sorted by left end.
inline Arcs cups(const std::string& w, std::vector<int>* rays = nullptr) {
  Arcs out;
  std::vector<int> open;
  std::vector<int> lone;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    char c = w[static_cast<std::size_t>(i)];
    if (c == 'v') open.push_back(i);
    if (c == '^') {
      if (open.empty()) {
        lone.push_back(i);
      } else {
        out.emplace_back(open.back(), i);
        open.pop_back();
      }
    }
  }
  for (int i : open) lone.push_back(i);
  std::sort(out.begin(), out.end());
  std::sort(lone.begin(), lone.end());
  if (rays) *rays = lone;
  return out;
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[static_cast<std::size_t>(x)] == x ? x : p[static_cast<std::size_t>(x)] = find(p[static_cast<std::size_t>(x)]); }
  void join(int a, int b) { p[static_cast<std::size_t>(find(a))] = find(b); }
};

// Number of closed components of cups(lambda) glued to the mirrored cups(mu).
inline int circles(const std::string& lambda, const std::string& mu) {
  int n = static_cast<int>(lambda.size());
  Dsu d(n);
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (auto arcs : {cups(lambda), cups(mu)})
    for (auto [a, b] : arcs) {
      d.join(a, b);
      ++deg[static_cast<std::size_t>(a)];
      ++deg[static_cast<std::size_t>(b)];
    }
  std::vector<int> closed(static_cast<std::size_t>(n), 1), seen(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    char c = lambda[static_cast<std::size_t>(i)];
    if (c != 'v' && c != '^') {
      closed[static_cast<std::size_t>(d.find(i))] = 0;
      continue;
    }
    if (deg[static_cast<std::size_t>(i)] != 2) closed[static_cast<std::size_t>(d.find(i))] = 0;
  }
  int count = 0;
  for (int i = 0; i < n; ++i) {
    char c = lambda[static_cast<std::size_t>(i)];
    if (c != 'v' && c != '^') continue;
    int r = d.find(i);
    if (closed[static_cast<std::size_t>(r)] && !seen[static_cast<std::size_t>(r)]) {
      seen[static_cast<std::size_t>(r)] = 1;
      ++count;
    }
  }
  return count;
}

// Position function: stars count 1, crosses 2, everything else 0.
inline int pos(const std::string& w, int i) {
  int p = 0;
  for (int k = 0; k <= i && k < static_cast<int>(w.size()); ++k) {
    char c = w[static_cast<std::size_t>(k)];
    p += (c == 'x') ? 2 : (c == 'o' ? 0 : 1);
  }
  return p;
}

// Arcs whose left endpoint carries '^' in nu, over both arc sets.
inline int degree(const std::string& lambda, const std::string& nu, const std::string& mu) {
  int d = 0;
  for (auto arcs : {cups(lambda), cups(mu)})
    for (auto [a, b] : arcs) d += nu[static_cast<std::size_t>(a)] == '^';
  return d;
}

// All balanced sign fillings of the stars of a block string.
inline std::vector<std::string> fillings(const std::string& seq, bool cups_only) {
  std::vector<int> stars;
  for (int i = 0; i < static_cast<int>(seq.size()); ++i)
    if (seq[static_cast<std::size_t>(i)] == '*') stars.push_back(i);
  std::vector<std::string> out;
  for (int m = 0; m < (1 << stars.size()); ++m) {
    std::string w = seq;
    int ups = 0;
    for (std::size_t k = 0; k < stars.size(); ++k) {
      bool up = (m >> k) & 1;
      ups += up;
      w[static_cast<std::size_t>(stars[k])] = up ? '^' : 'v';
    }
    if (2 * ups != static_cast<int>(stars.size())) continue;
    std::vector<int> rays;
    cups(w, &rays);
    if (cups_only && !rays.empty()) continue;
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
