#include "wordmap/group.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace wordmap {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t half_factorial(int n) {  // n!/2, saturating well past any cap
  std::uint64_t r = 1;
  for (int i = 3; i <= n; ++i) {
    r *= std::uint64_t(i);
    if (r > (1ull << 40)) return r;
  }
  return r;
}

int mod_inverse(int a, int p) {
  // p is prime and a != 0 mod p.
  int r = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = int(std::int64_t(r) * base % p);
    base = int(std::int64_t(base) * base % p);
    e >>= 1;
  }
  return r;
}

}  // namespace

GroupSpec GroupSpec::alternating(int n) {
  GroupSpec s;
  s.name = "a" + std::to_string(n);
  s.kind = Kind::alternating;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::psl2(int p) {
  GroupSpec s;
  s.name = "psl2_" + std::to_string(p);
  s.kind = Kind::psl2;
  s.n = p;
  return s;
}

GroupSpec GroupSpec::explicit_gens_spec(std::string name, std::uint32_t degree,
                                        std::vector<Permutation> generators) {
  GroupSpec s;
  s.name = std::move(name);
  s.kind = Kind::explicit_gens;
  s.degree = degree;
  s.generators = std::move(generators);
  return s;
}

namespace {

// Resolves a family spec into concrete permutation generators.
std::vector<Permutation> family_generators(const GroupSpec& spec, std::size_t order_cap,
                                           std::uint32_t& degree_out) {
  if (spec.kind == GroupSpec::Kind::alternating) {
    int n = spec.n;
    if (n < 5) throw InputError("alternating degree n must be at least 5");
    if (half_factorial(n) > order_cap)
      throw InputError("alternating group of degree " + std::to_string(n) +
                       " exceeds the order cap " + std::to_string(order_cap));
    degree_out = std::uint32_t(n);
    // A long even cycle and a 3-cycle.
    std::vector<std::uint8_t> cyc(n);
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) cyc[i] = std::uint8_t((i + 1) % n);
    } else {
      cyc[0] = 0;
      for (int i = 1; i < n; ++i) cyc[i] = std::uint8_t(i == n - 1 ? 1 : i + 1);
    }
    std::vector<std::uint8_t> tri(n);
    for (int i = 0; i < n; ++i) tri[i] = std::uint8_t(i);
    tri[0] = 1;
    tri[1] = 2;
    tri[2] = 0;
    return {Permutation(cyc), Permutation(tri)};
  }

  // PSL(2,p) acting on the projective line {0..p-1, infinity}, with
  // z -> z+1 and z -> -1/z. Point p stands for infinity.
  int p = spec.n;
  if (p < 5 || !is_prime(p)) throw InputError("psl2 parameter p must be a prime >= 5");
  std::uint64_t order = std::uint64_t(p) * (std::uint64_t(p) * p - 1) / 2;
  if (order > order_cap)
    throw InputError("psl2(" + std::to_string(p) + ") has order " + std::to_string(order) +
                     ", over the order cap " + std::to_string(order_cap));
  degree_out = std::uint32_t(p + 1);
  std::vector<std::uint8_t> t(p + 1), s(p + 1);
  for (int z = 0; z < p; ++z) t[z] = std::uint8_t((z + 1) % p);
  t[p] = std::uint8_t(p);
  s[0] = std::uint8_t(p);
  s[p] = 0;
  for (int z = 1; z < p; ++z) s[z] = std::uint8_t((p - mod_inverse(z, p)) % p);
  return {Permutation(t), Permutation(s)};
}

}  // namespace

Elem GroupTable::evaluate(const Word& w, Elem a, Elem b) const {
  const Elem ops[4] = {a, inv(a), b, inv(b)};
  Elem acc = identity();
  for (Letter l : w.letters) acc = mult(acc, ops[l]);
  return acc;
}

Elem GroupTable::eval_gen_word(const GenWord& w, std::span<const Elem> gen_images) const {
  Elem acc = identity();
  for (std::uint8_t l : w) {
    Elem op = gen_images[l >> 1];
    if (l & 1) op = inv(op);
    acc = mult(acc, op);
  }
  return acc;
}

GroupTable build_group(const GroupSpec& spec, std::size_t order_cap) {
  if (order_cap < 1 || order_cap > 65535)
    throw InputError("order cap must be between 1 and 65535");

  std::uint32_t degree = spec.degree;
  std::vector<Permutation> gens = spec.generators;
  if (spec.kind != GroupSpec::Kind::explicit_gens) gens = family_generators(spec, order_cap, degree);

  if (gens.empty()) throw InputError("generator list is empty");
  if (degree == 0 || degree > 256) throw InputError("degree must be in 1..256");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].degree() != degree)
      throw InputError("generator " + std::to_string(i) + " has degree " +
                       std::to_string(gens[i].degree()) + ", expected " + std::to_string(degree));
    if (!gens[i].is_bijection())
      throw InputError("generator " + std::to_string(i) + " is not a permutation");
  }

  GroupTable g;
  g.name = spec.name;
  g.degree = degree;

  // Breadth-first closure from the identity; expr words follow the spanning
  // tree, so they are shortest over the discovered tree and freely reduced.
  std::unordered_map<std::string, Elem> index;
  index.reserve(order_cap * 2);
  std::vector<Permutation> gen_perms;  // generator and inverse, interleaved
  for (const auto& p : gens) {
    gen_perms.push_back(p);
    gen_perms.push_back(p.inverse());
  }

  Permutation id = Permutation::identity(degree);
  g.elements.push_back(id);
  g.expr.push_back({});
  index.emplace(id.key(), 0);

  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    Permutation cur = g.elements[head];  // copy: elements may reallocate
    for (std::size_t li = 0; li < gen_perms.size(); ++li) {
      Permutation next = compose(cur, gen_perms[li]);
      if (!index.emplace(next.key(), Elem(g.elements.size())).second) continue;
      if (g.elements.size() == order_cap)
        throw InputError("closure exceeds the order cap " + std::to_string(order_cap));
      g.elements.push_back(next);
      GenWord w = g.expr[head];
      w.push_back(std::uint8_t(li));
      g.expr.push_back(std::move(w));
    }
  }

  const std::size_t n = g.elements.size();
  g.id_of_identity = 0;

  for (const auto& p : gens) {
    auto it = index.find(p.key());
    g.gen_ids.push_back(it->second);
  }

  g.mult_table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      g.mult_table[a * n + b] = index.at(compose(g.elements[a], g.elements[b]).key());

  g.inv_table.resize(n);
  for (std::size_t a = 0; a < n; ++a) g.inv_table[a] = index.at(g.elements[a].inverse().key());

  g.orders.resize(n);
  for (Elem a = 0; a < n; ++a) {
    Elem p = a;
    std::uint16_t k = 1;
    while (p != g.id_of_identity) {
      p = g.mult(p, a);
      ++k;
    }
    g.orders[a] = k;
  }

  // Self-checks: these can only fail on an implementation bug.
  for (Elem a = 0; a < n; ++a)
    if (g.mult(g.inv(a), a) != g.id_of_identity)
      throw InternalInconsistency("inverse table mismatch at element " + std::to_string(a));

  auto check_assoc = [&](Elem a, Elem b, Elem c) {
    if (g.mult(g.mult(a, b), c) != g.mult(a, g.mult(b, c)))
      throw InternalInconsistency("associativity failure");
  };
  if (n <= 200) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) check_assoc(a, b, c);
  } else {
    std::mt19937 rng(12345);
    for (int t = 0; t < 10000; ++t)
      check_assoc(Elem(rng() % n), Elem(rng() % n), Elem(rng() % n));
  }

  for (Elem a = 0; a < n; ++a)
    if (g.eval_gen_word(g.expr[a], g.gen_ids) != a)
      throw InternalInconsistency("expression word fails to reproduce element " +
                                  std::to_string(a));

  return g;
}

std::uint32_t normal_closure_size(const GroupTable& g, Elem x) {
  const std::size_t n = g.order();
  // All conjugates of x, deduplicated, then subgroup closure by right
  // multiplication with early exit at |G|.
  std::vector<std::uint8_t> in_class(n, 0);
  std::vector<Elem> cls;
  for (Elem c = 0; c < n; ++c) {
    Elem y = g.mult(g.mult(c, x), g.inv(c));
    if (!in_class[y]) {
      in_class[y] = 1;
      cls.push_back(y);
    }
  }

  std::vector<std::uint8_t> member(n, 0);
  std::vector<Elem> queue;
  member[g.identity()] = 1;
  queue.push_back(g.identity());
  std::size_t count = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elem cur = queue[head];
    for (Elem s : cls) {
      Elem next = g.mult(cur, s);
      if (!member[next]) {
        member[next] = 1;
        queue.push_back(next);
        if (++count == n) return std::uint32_t(n);
      }
    }
  }
  return std::uint32_t(count);
}

SimplicityReport validate_simple(const GroupTable& g) {
  SimplicityReport rep;
  const std::size_t n = g.order();
  if (n == 1) {
    rep.simple = false;
    rep.why = SimplicityReport::Why::trivial;
    return rep;
  }

  bool abelian = true;
  for (Elem a = 0; a < n && abelian; ++a)
    for (Elem b = Elem(a + 1); b < n; ++b)
      if (g.mult(a, b) != g.mult(b, a)) {
        abelian = false;
        break;
      }
  if (abelian) {
    rep.simple = false;
    rep.why = SimplicityReport::Why::abelian;
    rep.offender = 1;
    return rep;
  }

  // Normal closure is constant on conjugacy classes, so one representative
  // per class suffices. Classes are orbits of conjugation by the generators.
  std::vector<std::int32_t> cls(n, -1);
  std::vector<Elem> reps;
  std::vector<Elem> queue;
  for (Elem x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    cls[x] = std::int32_t(reps.size());
    reps.push_back(x);
    queue.clear();
    queue.push_back(x);
    while (!queue.empty()) {
      Elem cur = queue.back();
      queue.pop_back();
      for (Elem s : g.gen_ids) {
        Elem y = g.mult(g.mult(s, cur), g.inv(s));
        if (cls[y] < 0) {
          cls[y] = cls[x];
          queue.push_back(y);
        }
      }
    }
  }

  for (Elem x : reps) {
    if (x == g.identity()) continue;
    std::uint32_t size = normal_closure_size(g, x);
    if (size != n) {
      rep.simple = false;
      rep.why = SimplicityReport::Why::proper_normal_closure;
      rep.offender = x;
      rep.closure_size = size;
      return rep;
    }
  }

  rep.simple = true;
  rep.why = SimplicityReport::Why::ok;
  return rep;
}

bool generates(const GroupTable& g, Elem a, Elem b) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> member(n, 0);
  std::vector<Elem> queue;
  queue.reserve(n);
  member[g.identity()] = 1;
  queue.push_back(g.identity());
  std::size_t count = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elem cur = queue[head];
    for (Elem s : {a, b}) {
      Elem next = g.mult(cur, s);
      if (!member[next]) {
        member[next] = 1;
        queue.push_back(next);
        if (++count == n) return true;
      }
    }
  }
  return count == n;
}

}  // namespace wordmap
