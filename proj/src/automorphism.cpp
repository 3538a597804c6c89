#include "wordmap/automorphism.hpp"

#include <algorithm>

#include "wordmap/parallel.hpp"

namespace wordmap {

namespace {

inline std::uint32_t pair_key(Elem a, Elem b) { return (std::uint32_t(a) << 16) | b; }

// Anchor generating pair: the defining generators when there are exactly
// two, otherwise the first generating pair in index order.
std::pair<Elem, Elem> find_anchor(const GroupTable& g) {
  if (g.gen_ids.size() == 2) return {g.gen_ids[0], g.gen_ids[1]};
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      if (generates(g, a, b)) return {a, b};
  throw InputError("group has no generating pair; is it simple?");
}

// Breadth-first spanning tree over right multiplication by the anchor pair
// and its inverses. parent/letter drive candidate extension in O(|G|).
struct AnchorTree {
  std::vector<Elem> bfs_order;
  std::vector<Elem> parent;
  std::vector<std::uint8_t> letter;  // 0: *u, 1: *u^-1, 2: *v, 3: *v^-1

  AnchorTree(const GroupTable& g, Elem u, Elem v) {
    const std::size_t n = g.order();
    parent.assign(n, 0);
    letter.assign(n, 0);
    std::vector<std::uint8_t> seen(n, 0);
    const Elem step[4] = {u, g.inv(u), v, g.inv(v)};
    seen[g.identity()] = 1;
    bfs_order.push_back(g.identity());
    for (std::size_t head = 0; head < bfs_order.size(); ++head) {
      Elem cur = bfs_order[head];
      for (std::uint8_t l = 0; l < 4; ++l) {
        Elem next = g.mult(cur, step[l]);
        if (!seen[next]) {
          seen[next] = 1;
          parent[next] = cur;
          letter[next] = l;
          bfs_order.push_back(next);
        }
      }
    }
  }

  bool spans(std::size_t n) const { return bfs_order.size() == n; }

  // Extends images of the anchor pair along the tree; the result is the only
  // map that could be a homomorphism with these generator images.
  void extend(const GroupTable& g, Elem a, Elem b, std::vector<Elem>& map) const {
    const Elem step[4] = {a, g.inv(a), b, g.inv(b)};
    map[g.identity()] = g.identity();
    for (std::size_t i = 1; i < bfs_order.size(); ++i) {
      Elem x = bfs_order[i];
      map[x] = g.mult(map[parent[x]], step[letter[x]]);
    }
  }
};

struct Fingerprint {
  std::uint16_t oa, ob, oab, oab_inv, ocomm;
  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const GroupTable& g, Elem a, Elem b) {
  Elem ab = g.mult(a, b);
  Elem abi = g.mult(a, g.inv(b));
  Elem comm = g.mult(ab, g.mult(g.inv(a), g.inv(b)));
  return {g.element_order(a), g.element_order(b), g.element_order(ab), g.element_order(abi),
          g.element_order(comm)};
}

// True iff map respects right multiplication by u and by v at every element.
// Together with map(e) = e this forces the homomorphism property, since
// every element is a product of anchor letters.
bool respects_anchor_multiplication(const GroupTable& g, const std::vector<Elem>& map, Elem u,
                                    Elem v, Elem a, Elem b) {
  const std::size_t n = g.order();
  for (Elem x = 0; x < n; ++x) {
    if (map[g.mult(x, u)] != g.mult(map[x], a)) return false;
    if (map[g.mult(x, v)] != g.mult(map[x], b)) return false;
  }
  return true;
}

bool is_bijective(const std::vector<Elem>& map, std::vector<std::uint8_t>& scratch) {
  std::fill(scratch.begin(), scratch.end(), 0);
  for (Elem y : map) {
    if (y >= scratch.size() || scratch[y]) return false;
    scratch[y] = 1;
  }
  return true;
}

}  // namespace

std::vector<Elem> inner_automorphism(const GroupTable& g, Elem x) {
  std::vector<Elem> map(g.order());
  for (Elem h = 0; h < g.order(); ++h) map[h] = g.mult(g.mult(x, h), g.inv(x));
  return map;
}

bool is_automorphism(const GroupTable& g, std::span<const Elem> map) {
  const std::size_t n = g.order();
  if (map.size() != n) return false;
  std::vector<std::uint8_t> seen(n, 0);
  for (Elem y : map) {
    if (y >= n || seen[y]) return false;
    seen[y] = 1;
  }
  if (map[g.identity()] != g.identity()) return false;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (map[g.mult(a, b)] != g.mult(map[a], map[b])) return false;
  return true;
}

std::uint32_t AutGroup::find(Elem image_a, Elem image_b) const {
  auto it = by_images_.find(pair_key(image_a, image_b));
  return it == by_images_.end() ? npos : it->second;
}

std::uint32_t AutGroup::compose(std::uint32_t i, std::uint32_t j) const {
  const auto& fi = autos[i].map;
  const auto& fj = autos[j];
  return find(fi[fj.image_a], fi[fj.image_b]);
}

std::uint32_t AutGroup::inverse_of(std::uint32_t i) const {
  // Preimages of the anchor pair under autos[i].
  const auto& map = autos[i].map;
  Elem pre_a = 0, pre_b = 0;
  for (Elem x = 0; x < map.size(); ++x) {
    if (map[x] == anchor_a) pre_a = x;
    if (map[x] == anchor_b) pre_b = x;
  }
  return find(pre_a, pre_b);
}

void AutGroup::build_index(const GroupTable* g) {
  by_images_.clear();
  by_images_.reserve(autos.size() * 2);
  for (std::uint32_t i = 0; i < autos.size(); ++i) {
    autos[i].image_a = autos[i].map[anchor_a];
    autos[i].image_b = autos[i].map[anchor_b];
    if (!by_images_.emplace(pair_key(autos[i].image_a, autos[i].image_b), i).second)
      throw InternalInconsistency("two automorphisms share anchor images");
    if (g != nullptr) {
      bool ident = true;
      for (Elem x = 0; x < g->order(); ++x)
        if (autos[i].map[x] != x) {
          ident = false;
          break;
        }
      if (ident) index_of_identity = i;
    }
  }

  // Greedy generating subset: enough members to close the whole list.
  gen_indices.clear();
  std::vector<std::uint8_t> closed(autos.size(), 0);
  std::vector<std::uint32_t> frontier;
  closed[index_of_identity] = 1;
  std::size_t closed_count = 1;
  for (std::uint32_t i = 0; i < autos.size() && closed_count < autos.size(); ++i) {
    if (closed[i]) continue;
    gen_indices.push_back(i);
    frontier.clear();
    for (std::uint32_t j = 0; j < autos.size(); ++j)
      if (closed[j]) frontier.push_back(j);
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      for (std::uint32_t s : gen_indices) {
        std::uint32_t next = compose(s, frontier[head]);
        if (next == npos) throw InternalInconsistency("automorphism list is not closed");
        if (!closed[next]) {
          closed[next] = 1;
          ++closed_count;
          frontier.push_back(next);
        }
      }
    }
  }
}

AutGroup AutGroup::from_maps(const GroupTable& g, std::vector<std::vector<Elem>> maps,
                             Verification verification) {
  auto [u, v] = find_anchor(g);
  AutGroup out;
  out.anchor_a = u;
  out.anchor_b = v;
  out.autos.reserve(maps.size());
  std::vector<std::uint8_t> scratch(g.order());
  for (auto& m : maps) {
    bool good;
    if (verification == Verification::full) {
      good = is_automorphism(g, m);
    } else {
      good = m.size() == g.order() && is_bijective(m, scratch) &&
             m[g.identity()] == g.identity() &&
             respects_anchor_multiplication(g, m, u, v, m[u], m[v]);
    }
    if (!good) throw InputError("supplied map is not an automorphism");
    Automorphism a;
    a.map = std::move(m);
    out.autos.push_back(std::move(a));
  }
  std::sort(out.autos.begin(), out.autos.end(), [&](const Automorphism& x, const Automorphism& y) {
    return pair_key(x.map[u], x.map[v]) < pair_key(y.map[u], y.map[v]);
  });
  out.build_index(&g);
  return out;
}

AutGroup compute_automorphisms(const GroupTable& g, unsigned workers) {
  const std::size_t n = g.order();
  auto [u, v] = find_anchor(g);
  AnchorTree tree(g, u, v);
  if (!tree.spans(n)) throw InternalInconsistency("anchor pair does not span the group");

  const Fingerprint target = fingerprint(g, u, v);

  // Candidate images, prefiltered by element orders.
  std::vector<Elem> a_candidates, b_candidates;
  for (Elem x = 0; x < n; ++x) {
    if (g.element_order(x) == target.oa) a_candidates.push_back(x);
    if (g.element_order(x) == target.ob) b_candidates.push_back(x);
  }
  std::vector<std::uint64_t> pairs;  // (a index, b index) packed, ascending
  for (std::size_t i = 0; i < a_candidates.size(); ++i)
    for (std::size_t j = 0; j < b_candidates.size(); ++j)
      pairs.push_back((std::uint64_t(i) << 32) | j);

  std::vector<std::uint8_t> accepted(pairs.size(), 0);
  parallel_chunks(pairs.size(), workers, [&](std::size_t begin, std::size_t end) {
    std::vector<Elem> map(n);
    std::vector<std::uint8_t> scratch(n);
    for (std::size_t k = begin; k < end; ++k) {
      Elem a = a_candidates[pairs[k] >> 32];
      Elem b = b_candidates[pairs[k] & 0xffffffff];
      if (fingerprint(g, a, b) != target) continue;
      tree.extend(g, a, b, map);
      if (!is_bijective(map, scratch)) continue;
      if (!respects_anchor_multiplication(g, map, u, v, a, b)) continue;
      accepted[k] = 1;
    }
  });

  AutGroup out;
  out.anchor_a = u;
  out.anchor_b = v;
  std::vector<Elem> map(n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!accepted[k]) continue;
    Elem a = a_candidates[pairs[k] >> 32];
    Elem b = b_candidates[pairs[k] & 0xffffffff];
    Automorphism au;
    au.map.resize(n);
    tree.extend(g, a, b, au.map);
    // Accepted candidates must survive the full homomorphism test.
    if (n <= 360 && !is_automorphism(g, au.map))
      throw InternalInconsistency("accepted candidate fails the full homomorphism re-check");
    out.autos.push_back(std::move(au));
  }

  if (out.autos.empty()) throw InternalInconsistency("no automorphisms found, not even identity");
  out.build_index(&g);
  return out;
}

OrbitPartition orbits_on_elements(const GroupTable& g, const AutGroup& aut) {
  const std::size_t n = g.order();
  OrbitPartition op;
  op.orbit_id.assign(n, -1);
  std::vector<Elem> queue;
  for (Elem x = 0; x < n; ++x) {
    if (op.orbit_id[x] >= 0) continue;
    std::int32_t label = std::int32_t(op.reps.size());
    op.reps.push_back(x);
    op.orbit_id[x] = label;
    queue.clear();
    queue.push_back(x);
    std::uint32_t size = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Elem cur = queue[head];
      for (std::uint32_t gi : aut.gen_indices) {
        Elem next = aut.map_of(gi)[cur];
        if (op.orbit_id[next] < 0) {
          op.orbit_id[next] = label;
          queue.push_back(next);
          ++size;
        }
      }
    }
    op.sizes.push_back(size);
  }
  return op;
}

OrbitPartition all_pairs_orbits(const GroupTable& g, const AutGroup& aut) {
  const std::size_t n = g.order();
  const std::uint64_t total = g.pair_count();
  OrbitPartition op;
  op.orbit_id.assign(total, -1);
  std::vector<PairIdx> queue;
  for (std::uint64_t p = 0; p < total; ++p) {
    if (op.orbit_id[p] >= 0) continue;
    std::int32_t label = std::int32_t(op.reps.size());
    op.reps.push_back(std::uint32_t(p));
    op.orbit_id[p] = label;
    queue.clear();
    queue.push_back(PairIdx(p));
    std::uint32_t size = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      PairIdx cur = queue[head];
      Elem a = Elem(cur / n), b = Elem(cur % n);
      for (std::uint32_t gi : aut.gen_indices) {
        const auto& m = aut.map_of(gi);
        PairIdx next = PairIdx(m[a]) * PairIdx(n) + m[b];
        if (op.orbit_id[next] < 0) {
          op.orbit_id[next] = label;
          queue.push_back(next);
          ++size;
        }
      }
    }
    op.sizes.push_back(size);
  }
  return op;
}

OrbitPartition orbits_on_pairs(const GroupTable& g, const AutGroup& aut,
                               std::span<const PairIdx> pairs) {
  if (pairs.empty()) throw InputError("pair list is empty");
  const std::size_t n = g.order();
  std::unordered_map<PairIdx, std::uint32_t> pos;
  pos.reserve(pairs.size() * 2);
  for (std::uint32_t i = 0; i < pairs.size(); ++i) pos.emplace(pairs[i], i);

  OrbitPartition op;
  op.orbit_id.assign(pairs.size(), -1);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t i = 0; i < pairs.size(); ++i) {
    if (op.orbit_id[i] >= 0) continue;
    std::int32_t label = std::int32_t(op.reps.size());
    op.reps.push_back(pairs[i]);
    op.orbit_id[i] = label;
    queue.clear();
    queue.push_back(i);
    std::uint32_t size = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      PairIdx cur = pairs[queue[head]];
      Elem a = Elem(cur / n), b = Elem(cur % n);
      for (std::uint32_t gi : aut.gen_indices) {
        const auto& m = aut.map_of(gi);
        PairIdx next = PairIdx(m[a]) * PairIdx(n) + m[b];
        auto it = pos.find(next);
        if (it == pos.end())
          throw InputError("pair list is not invariant under the automorphisms");
        if (op.orbit_id[it->second] < 0) {
          op.orbit_id[it->second] = label;
          queue.push_back(it->second);
          ++size;
        }
      }
    }
    op.sizes.push_back(size);
  }
  return op;
}

FreeActionReport verify_free_action(const GroupTable& g, const AutGroup& aut,
                                    std::span<const std::uint8_t> is_gen, FreeActionMode mode) {
  const std::size_t n = g.order();
  FreeActionReport rep;

  if (mode == FreeActionMode::naive) {
    for (std::uint32_t ai = 0; ai < aut.order(); ++ai) {
      if (ai == aut.index_of_identity) continue;
      const auto& m = aut.map_of(ai);
      for (std::uint64_t p = 0; p < is_gen.size(); ++p) {
        if (!is_gen[p]) continue;
        Elem a = Elem(p / n), b = Elem(p % n);
        if (m[a] == a && m[b] == b) {
          rep.free = false;
          rep.auto_index = ai;
          rep.fixed_pair = PairIdx(p);
          return rep;
        }
      }
    }
    return rep;
  }

  // Enumerate each automorphism's fixed elements; fixed pairs are exactly
  // F x F, which is tiny for nonidentity automorphisms.
  std::vector<Elem> fixed;
  for (std::uint32_t ai = 0; ai < aut.order(); ++ai) {
    if (ai == aut.index_of_identity) continue;
    const auto& m = aut.map_of(ai);
    fixed.clear();
    for (Elem x = 0; x < n; ++x)
      if (m[x] == x) fixed.push_back(x);
    for (Elem a : fixed)
      for (Elem b : fixed)
        if (is_gen[g.pair_index(a, b)]) {
          rep.free = false;
          rep.auto_index = ai;
          rep.fixed_pair = g.pair_index(a, b);
          return rep;
        }
  }
  return rep;
}

}  // namespace wordmap
