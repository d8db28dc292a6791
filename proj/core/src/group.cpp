#include "coxsig/group.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <deque>
#include <unordered_map>

namespace coxsig {

namespace {

// One irreducible factor of the enumeration state.  Matrix components use
// entries a + b*w with w = sqrt2 (w^2 = 2), w = phi (w^2 = w + 1) or
// nothing (ring 0); all finite matrix-mode generator matrices are integral
// in these bases.  I2(m) components use a (rotation, flip) pair.
struct Block {
  bool dihedral = false;
  int m = 0;            // dihedral only
  std::size_t dim = 0;  // matrix only
  int ring = 0;         // 0 plain, 2 sqrt2, 5 phi
  std::size_t offset = 0;
  std::size_t state_len = 0;
  // Per local generator, the matrix as pairs (a, b), row-major.
  std::vector<std::vector<long long>> gens;
};

struct Kernel {
  std::size_t ngens = 0;
  std::vector<long long> identity;
  std::vector<Block> blocks;
  std::vector<std::pair<std::size_t, std::size_t>> gen_loc;  // global gen -> (block, local)

  void apply(const std::vector<long long>& st, std::size_t g,
             std::vector<long long>& out) const {
    out = st;
    auto [bi, lg] = gen_loc[g];
    const Block& b = blocks[bi];
    if (b.dihedral) {
      long long rot = st[b.offset], flip = st[b.offset + 1];
      if (lg == 0) {  // s1 = f
        out[b.offset + 1] = 1 - flip;
      } else {  // s2 = r f
        out[b.offset] = ((flip ? rot - 1 : rot + 1) % b.m + b.m) % b.m;
        out[b.offset + 1] = 1 - flip;
      }
      return;
    }
    const std::size_t n = b.dim;
    const auto& gm = b.gens[lg];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        long long a = 0, c = 0;
        for (std::size_t k = 0; k < n; ++k) {
          long long xa = st[b.offset + 2 * (i * n + k)];
          long long xb = st[b.offset + 2 * (i * n + k) + 1];
          long long ya = gm[2 * (k * n + j)];
          long long yb = gm[2 * (k * n + j) + 1];
          if (b.ring == 2) {
            a += xa * ya + 2 * xb * yb;
            c += xa * yb + xb * ya;
          } else if (b.ring == 5) {
            a += xa * ya + xb * yb;
            c += xa * yb + xb * ya + xb * yb;
          } else {
            a += xa * ya;
          }
        }
        out[b.offset + 2 * (i * n + j)] = a;
        out[b.offset + 2 * (i * n + j) + 1] = c;
      }
  }
};

// Express a QuadScalar known to be integral in the block's ring basis.
std::pair<long long, long long> ring_coords(const QuadScalar& q, int ring) {
  auto as_ll = [](const BigRat& r) {
    if (boost::multiprecision::denominator(r) != 1)
      throw domain_error("generator entry not integral in enumeration ring");
    return static_cast<long long>(boost::multiprecision::numerator(r));
  };
  if (q.disc() == 1) return {as_ll(q.rat()), 0};
  if (ring == 2 && q.disc() == 2) return {as_ll(q.rat()), as_ll(q.irr())};
  if (ring == 5 && q.disc() == 5) {
    // a + b sqrt5 = (a - b) + (2b) phi
    BigRat b2 = q.irr() * 2;
    return {as_ll(q.rat() - q.irr()), as_ll(b2)};
  }
  throw domain_error("generator entry outside enumeration ring");
}

Kernel make_kernel(const CoxeterSystem& sys) {
  Kernel k;
  k.ngens = sys.rank;
  k.gen_loc.resize(sys.rank);
  std::size_t offset = 0;
  for (std::size_t ci = 0; ci < sys.components.size(); ++ci) {
    const Component& c = sys.components[ci];
    Block b;
    b.offset = offset;
    if (c.family == 'I') {
      b.dihedral = true;
      b.m = c.param;
      b.state_len = 2;
      for (std::size_t li = 0; li < 2; ++li) k.gen_loc[c.nodes[li]] = {ci, li};
      k.identity.push_back(0);
      k.identity.push_back(0);
    } else {
      b.dim = c.nodes.size();
      int ring = 0;
      for (std::size_t a = 0; a < b.dim; ++a)
        for (std::size_t d = a + 1; d < b.dim; ++d) {
          int lbl = sys.m(c.nodes[a], c.nodes[d]);
          if (lbl == 4) ring = 2;
          if (lbl == 5) ring = 5;
        }
      b.ring = ring;
      b.state_len = 2 * b.dim * b.dim;
      CoxeterSystem sub = parabolic_system(sys, c.nodes);
      auto mats = reflection_generators(sub);
      for (std::size_t li = 0; li < b.dim; ++li) {
        k.gen_loc[c.nodes[li]] = {ci, li};
        std::vector<long long> gm(b.state_len);
        for (std::size_t i = 0; i < b.dim; ++i)
          for (std::size_t j = 0; j < b.dim; ++j) {
            auto [x, y] = ring_coords(mats[li](i, j), ring);
            gm[2 * (i * b.dim + j)] = x;
            gm[2 * (i * b.dim + j) + 1] = y;
          }
        b.gens.push_back(std::move(gm));
      }
      for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j) {
          k.identity.push_back(i == j ? 1 : 0);
          k.identity.push_back(0);
        }
    }
    offset += b.state_len;
    k.blocks.push_back(std::move(b));
  }
  return k;
}

struct VecHash {
  std::size_t operator()(const std::vector<long long>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (long long x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

Word GroupTable::parent_word(std::uint32_t x) const {
  Word w;
  while (x != identity) {
    w.push_back(parent_gen[x]);
    x = parent_elem[x];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

Word GroupTable::lexmin_word(std::uint32_t x) const {
  Word w;
  while (lengths[x] > 0) {
    for (std::size_t i = 0; i < ngens; ++i) {
      std::uint32_t y = left(x, i);
      if (lengths[y] < lengths[x]) {
        w.push_back(i);
        x = y;
        break;
      }
    }
  }
  return w;
}

std::size_t GroupTable::max_length() const {
  return lengths.empty() ? 0 : lengths.back();
}

GroupTable enumerate_group(const CoxeterSystem& sys, std::size_t cap) {
  BigInt predicted = sys.order();
  if (predicted > cap)
    throw domain_error("type " + sys.type_spec + " too large for enumeration (order " +
                       predicted.str() + " exceeds cap " + std::to_string(cap) + ")");
  const std::size_t n = std::max<std::size_t>(sys.rank, 1);
  Kernel kernel = make_kernel(sys);
  GroupTable t;
  t.ngens = sys.rank;
  std::unordered_map<std::vector<long long>, std::uint32_t, VecHash> ids;
  std::vector<std::vector<long long>> states;
  ids.emplace(kernel.identity, 0);
  states.push_back(kernel.identity);
  t.lengths.push_back(0);
  t.parent_elem.push_back(0);
  t.parent_gen.push_back(0);
  t.gen_mult.resize(n, 0);
  std::vector<long long> next;
  for (std::uint32_t x = 0; x < states.size(); ++x) {
    for (std::size_t i = 0; i < sys.rank; ++i) {
      kernel.apply(states[x], i, next);
      auto [it, inserted] = ids.emplace(next, static_cast<std::uint32_t>(states.size()));
      if (inserted) {
        states.push_back(next);
        t.lengths.push_back(t.lengths[x] + 1);
        t.parent_elem.push_back(x);
        t.parent_gen.push_back(static_cast<std::uint8_t>(i));
        t.gen_mult.resize(states.size() * n, 0);
      }
      t.gen_mult[x * n + i] = it->second;
    }
  }
  t.order = states.size();
  t.gen_id.resize(sys.rank);
  for (std::size_t i = 0; i < sys.rank; ++i) t.gen_id[i] = t.gen_mult[i];
  // Left multiplication: s_i * (p s_j) = (s_i * p) * s_j, filled in BFS
  // (= id) order so parents are always ready.
  t.left_mult.resize(t.order * n, 0);
  for (std::size_t i = 0; i < sys.rank; ++i) t.left_mult[i] = t.gen_id[i];
  for (std::uint32_t x = 1; x < t.order; ++x) {
    std::uint32_t p = t.parent_elem[x];
    std::size_t j = t.parent_gen[x];
    for (std::size_t i = 0; i < sys.rank; ++i)
      t.left_mult[x * n + i] = t.right(t.left_mult[p * n + i], j);
  }
  return t;
}

namespace {

std::string cache_path(const std::string& type_spec, const std::string& dir) {
  std::string name = type_spec;
  for (char& c : name)
    if (c == '(' || c == ')') c = '_';
  return dir + "/" + name + ".coxg";
}

template <typename T>
bool write_vec(std::FILE* f, const std::vector<T>& v) {
  return std::fwrite(v.data(), sizeof(T), v.size(), f) == v.size();
}

template <typename T>
bool read_vec(std::FILE* f, std::vector<T>& v, std::size_t count) {
  v.resize(count);
  return std::fread(v.data(), sizeof(T), count, f) == count;
}

constexpr std::uint32_t kCacheVersion = 1;

}  // namespace

bool save_group_cache(const GroupTable& t, const std::string& type_spec,
                      const std::string& dir) {
  std::FILE* f = std::fopen(cache_path(type_spec, dir).c_str(), "wb");
  if (!f) return false;
  bool ok = std::fwrite("COXG", 1, 4, f) == 4;
  std::uint32_t ver = kCacheVersion, slen = type_spec.size(), ng = t.ngens;
  std::uint64_t order = t.order;
  ok = ok && std::fwrite(&ver, 4, 1, f) == 1 && std::fwrite(&slen, 4, 1, f) == 1 &&
       std::fwrite(type_spec.data(), 1, slen, f) == slen &&
       std::fwrite(&order, 8, 1, f) == 1 && std::fwrite(&ng, 4, 1, f) == 1 &&
       write_vec(f, t.gen_mult) && write_vec(f, t.lengths) &&
       write_vec(f, t.parent_elem) && write_vec(f, t.parent_gen) &&
       write_vec(f, t.gen_id);
  std::fclose(f);
  return ok;
}

bool load_group_cache(GroupTable& t, const std::string& type_spec, const std::string& dir) {
  std::FILE* f = std::fopen(cache_path(type_spec, dir).c_str(), "rb");
  if (!f) return false;
  char magic[4];
  std::uint32_t ver = 0, slen = 0, ng = 0;
  std::uint64_t order = 0;
  bool ok = std::fread(magic, 1, 4, f) == 4 && std::memcmp(magic, "COXG", 4) == 0 &&
            std::fread(&ver, 4, 1, f) == 1 && ver == kCacheVersion &&
            std::fread(&slen, 4, 1, f) == 1 && slen < 4096;
  if (ok) {
    std::string spec(slen, 0);
    ok = std::fread(spec.data(), 1, slen, f) == slen && spec == type_spec;
  }
  ok = ok && std::fread(&order, 8, 1, f) == 1 && std::fread(&ng, 4, 1, f) == 1;
  if (ok) {
    t = GroupTable{};
    t.order = order;
    t.ngens = ng;
    std::size_t n = std::max<std::size_t>(ng, 1);
    ok = read_vec(f, t.gen_mult, order * n) && read_vec(f, t.lengths, order) &&
         read_vec(f, t.parent_elem, order) && read_vec(f, t.parent_gen, order) &&
         read_vec(f, t.gen_id, ng);
  }
  std::fclose(f);
  if (!ok) return false;
  t.left_mult.assign(t.order * std::max<std::size_t>(t.ngens, 1), 0);
  for (std::size_t i = 0; i < t.ngens; ++i) t.left_mult[i] = t.gen_id[i];
  for (std::uint32_t x = 1; x < t.order; ++x) {
    std::uint32_t p = t.parent_elem[x];
    std::size_t j = t.parent_gen[x];
    for (std::size_t i = 0; i < t.ngens; ++i)
      t.left_mult[x * t.ngens + i] = t.right(t.left_mult[p * t.ngens + i], j);
  }
  return true;
}

GroupTable enumerate_group_cached(const CoxeterSystem& sys, std::size_t cap) {
  const char* dir = std::getenv("COXSIG_CACHE_DIR");
  GroupTable t;
  if (dir && load_group_cache(t, sys.type_spec, dir)) return t;
  t = enumerate_group(sys, cap);
  if (dir) save_group_cache(t, sys.type_spec, dir);
  return t;
}

}  // namespace coxsig
