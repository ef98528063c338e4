#include "iso_search.hpp"

namespace towerlab::detail {

namespace {

struct Search {
  const FiniteGroup& g;
  const FiniteGroup& h;
  const std::vector<int>& gens;
  const std::function<bool(const std::vector<int>&)>& sink;
  std::vector<int> img;       // g element -> h element, -1 unknown
  std::vector<char> used;     // h elements taken
  std::vector<int> defined;   // g elements with known image, insertion order
  bool stopped = false;

  Search(const FiniteGroup& g_, const FiniteGroup& h_,
         const std::vector<int>& gens_,
         const std::function<bool(const std::vector<int>&)>& sink_)
      : g(g_), h(h_), gens(gens_), sink(sink_) {
    img.assign(g.order(), -1);
    used.assign(h.order(), 0);
    img[0] = 0;
    used[0] = 1;
    defined.push_back(0);
  }

  bool assign(int x, int y) {
    if (img[x] != -1) return img[x] == y;
    if (used[y]) return false;
    img[x] = y;
    used[y] = 1;
    defined.push_back(x);
    return true;
  }

  // Propagate products among defined elements, starting with the element at
  // position `from`. Newly forced images are appended to `defined` and
  // propagated in turn. Returns false on any conflict.
  bool close(size_t from) {
    for (size_t qi = from; qi < defined.size(); ++qi) {
      int a = defined[qi];
      for (size_t pj = 0; pj <= qi; ++pj) {
        int b = defined[pj];
        if (!assign(g.op(a, b), h.op(img[a], img[b]))) return false;
        if (!assign(g.op(b, a), h.op(img[b], img[a]))) return false;
      }
    }
    return true;
  }

  void undo_to(size_t checkpoint) {
    while (defined.size() > checkpoint) {
      int x = defined.back();
      defined.pop_back();
      used[img[x]] = 0;
      img[x] = -1;
    }
  }

  void run(size_t gi) {
    if (stopped) return;
    if (gi == gens.size()) {
      // gens generate g and closure is complete, so the map is total.
      if (!sink(img)) stopped = true;
      return;
    }
    int x = gens[gi];
    if (img[x] != -1) {
      run(gi + 1);
      return;
    }
    for (int y = 0; y < h.order(); ++y) {
      if (used[y] || g.profile(x) != h.profile(y)) continue;
      size_t checkpoint = defined.size();
      if (assign(x, y) && close(checkpoint)) run(gi + 1);
      undo_to(checkpoint);
      if (stopped) return;
    }
  }
};

}  // namespace

void for_each_isomorphism(
    const FiniteGroup& g, const FiniteGroup& h, const std::vector<int>& gens,
    const std::function<bool(const std::vector<int>&)>& sink) {
  if (g.order() != h.order()) return;
  if (g.order() == 1) {
    std::vector<int> ident = {0};
    sink(ident);
    return;
  }
  Search s(g, h, gens, sink);
  s.run(0);
}

}  // namespace towerlab::detail
