#include "wordmap/cache.hpp"

#include <cstring>
#include <fstream>

#include "wordmap/errors.hpp"

namespace wordmap {

namespace {

constexpr char kGroupTag[8] = {'W', 'M', 'G', 'R', 'P', '0', '0', '1'};
constexpr char kAutTag[8] = {'W', 'M', 'A', 'U', 'T', '0', '0', '1'};

void write_u32(std::ofstream& out, std::uint32_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

void write_u16(std::ofstream& out, std::uint16_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

bool read_u32(std::ifstream& in, std::uint32_t& v) {
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  return bool(in);
}

bool read_u16(std::ifstream& in, std::uint16_t& v) {
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  return bool(in);
}

}  // namespace

void save_group_cache(const GroupTable& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write cache file: " + path);
  out.write(kGroupTag, sizeof kGroupTag);
  write_u32(out, std::uint32_t(g.name.size()));
  out.write(g.name.data(), std::streamsize(g.name.size()));
  write_u32(out, g.degree);
  write_u32(out, std::uint32_t(g.order()));
  write_u32(out, std::uint32_t(g.gen_ids.size()));
  for (const auto& p : g.elements)
    out.write(reinterpret_cast<const char*>(p.images.data()), std::streamsize(p.images.size()));
  for (Elem id : g.gen_ids) write_u16(out, id);
  if (!out) throw InputError("failed writing cache file: " + path);
}

std::optional<GroupTable> load_group_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  char tag[8];
  in.read(tag, sizeof tag);
  if (!in || std::memcmp(tag, kGroupTag, sizeof tag) != 0) return std::nullopt;

  std::uint32_t name_len, degree, order, n_gens;
  if (!read_u32(in, name_len) || name_len > 4096) throw InputError("corrupt group cache: " + path);
  std::string name(name_len, '\0');
  in.read(name.data(), name_len);
  if (!read_u32(in, degree) || !read_u32(in, order) || !read_u32(in, n_gens) || degree == 0 ||
      degree > 256 || order == 0 || order > 65535)
    throw InputError("corrupt group cache: " + path);

  std::vector<Permutation> perms;
  perms.reserve(order);
  for (std::uint32_t i = 0; i < order; ++i) {
    std::vector<std::uint8_t> images(degree);
    in.read(reinterpret_cast<char*>(images.data()), degree);
    Permutation p(std::move(images));
    if (!in || !p.is_bijection()) throw InputError("corrupt group cache: " + path);
    perms.push_back(std::move(p));
  }
  std::vector<std::uint16_t> gen_ids(n_gens);
  for (auto& id : gen_ids)
    if (!read_u16(in, id) || id >= order) throw InputError("corrupt group cache: " + path);

  // Rebuild from the stored generators; element ids are the closure order,
  // which the builder reproduces deterministically.
  std::vector<Permutation> gens;
  for (Elem id : gen_ids) gens.push_back(perms[id]);
  GroupTable g = build_group(GroupSpec::explicit_gens_spec(name, degree, gens),
                             std::size_t(order));
  if (g.order() != order || !(g.elements == perms))
    throw InputError("group cache does not reproduce its table: " + path);
  return g;
}

void save_aut_cache(const AutGroup& aut, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write cache file: " + path);
  out.write(kAutTag, sizeof kAutTag);
  write_u16(out, aut.anchor_a);
  write_u16(out, aut.anchor_b);
  write_u32(out, std::uint32_t(aut.order()));
  for (const auto& a : aut.autos) {
    write_u16(out, a.image_a);
    write_u16(out, a.image_b);
  }
  if (!out) throw InputError("failed writing cache file: " + path);
}

std::optional<AutGroup> load_aut_cache(const GroupTable& g, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  char tag[8];
  in.read(tag, sizeof tag);
  if (!in || std::memcmp(tag, kAutTag, sizeof tag) != 0) return std::nullopt;

  std::uint16_t u, v;
  std::uint32_t count;
  if (!read_u16(in, u) || !read_u16(in, v) || !read_u32(in, count) || u >= g.order() ||
      v >= g.order() || count == 0)
    throw InputError("corrupt automorphism cache: " + path);

  // Re-extend each stored image pair along a spanning tree from the anchor.
  std::vector<Elem> bfs_order, parent;
  std::vector<std::uint8_t> letter, seen(g.order(), 0);
  parent.assign(g.order(), 0);
  letter.assign(g.order(), 0);
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
  if (bfs_order.size() != g.order())
    throw InputError("automorphism cache anchor does not span the group: " + path);

  std::vector<std::vector<Elem>> maps;
  maps.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    std::uint16_t a, b;
    if (!read_u16(in, a) || !read_u16(in, b) || a >= g.order() || b >= g.order())
      throw InputError("corrupt automorphism cache: " + path);
    const Elem imgs[4] = {Elem(a), g.inv(Elem(a)), Elem(b), g.inv(Elem(b))};
    std::vector<Elem> map(g.order());
    map[g.identity()] = g.identity();
    for (std::size_t k = 1; k < bfs_order.size(); ++k) {
      Elem x = bfs_order[k];
      map[x] = g.mult(map[parent[x]], imgs[letter[x]]);
    }
    maps.push_back(std::move(map));
  }
  AutGroup out = AutGroup::from_maps(g, std::move(maps), AutGroup::Verification::anchored);
  if (out.order() != count) throw InputError("corrupt automorphism cache: " + path);
  return out;
}

}  // namespace wordmap
