#include "caystir/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "caystir/class_enum.hpp"
#include "caystir/metric.hpp"

namespace caystir {

namespace {

constexpr int kMaxRankDegree = 20;  // 20! still fits in uint64_t

std::array<std::uint64_t, kMaxRankDegree + 1> factorial_table() {
  std::array<std::uint64_t, kMaxRankDegree + 1> f{};
  f[0] = 1;
  for (int i = 1; i <= kMaxRankDegree; ++i)
    f[static_cast<size_t>(i)] = f[static_cast<size_t>(i) - 1] *
                                static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t rank_of(const int* w, int n, const std::uint64_t* fact) {
  std::uint32_t used = 0;
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    const int v = w[i] - 1;
    const int smaller =
        v - std::popcount(used & ((std::uint32_t{1} << v) - 1));
    rank += static_cast<std::uint64_t>(smaller) * fact[n - 1 - i];
    used |= std::uint32_t{1} << v;
  }
  return rank;
}

void unrank_into(std::uint64_t rank, int n, const std::uint64_t* fact,
                 int* out) {
  int pool[kMaxRankDegree];
  std::iota(pool, pool + n, 1);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t f = fact[n - 1 - i];
    const int idx = static_cast<int>(rank / f);
    rank %= f;
    out[i] = pool[idx];
    std::copy(pool + idx + 1, pool + n, pool + idx);
  }
}

int deficit_of(const int* w, int n) {
  std::uint32_t seen = 0;
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen & (std::uint32_t{1} << i)) continue;
    ++cycles;
    for (int j = i; !(seen & (std::uint32_t{1} << j)); j = w[j] - 1)
      seen |= std::uint32_t{1} << j;
  }
  return n - cycles;
}

/// Generator class enumerated into one flat buffer of image rows.
std::vector<std::uint8_t> flat_generators(const GraphSpec& spec) {
  std::vector<std::uint8_t> flat;
  const CycleType h_type = spec.generator_type();
  flat.reserve(static_cast<size_t>(spec.n) * 1024);
  for_each_in_class(h_type, [&](const Permutation& h) {
    for (int v : h.images()) flat.push_back(static_cast<std::uint8_t>(v));
    return true;
  });
  return flat;
}

}  // namespace

ElementBfs::ElementBfs(const GraphSpec& spec, const OracleLimits& limits)
    : spec_(spec) {
  const int n = spec.n;
  if (n > 12)
    throw std::domain_error(
        "element oracle: degree too large for a rank-indexed array");
  if (spec.group_order() > BigInt(limits.element_cap))
    throw std::domain_error(
        "element oracle cap exceeded: group order " +
        spec.group_order().str() + " > cap " +
        std::to_string(limits.element_cap));

  const auto fact = factorial_table();
  const std::uint64_t total = fact[static_cast<size_t>(n)];
  dist_.assign(total, 0xFF);

  const std::vector<std::uint8_t> gens = flat_generators(spec_);
  const size_t gen_count = gens.size() / static_cast<size_t>(n);

  std::vector<std::uint64_t> frontier{0};  // identity has rank 0
  dist_[0] = 0;
  order_ = 1;
  int level = 0;
  int w[kMaxRankDegree];
  int nb[kMaxRankDegree];
  std::vector<std::uint64_t> next;
  while (!frontier.empty()) {
    next.clear();
    for (const std::uint64_t r : frontier) {
      unrank_into(r, n, fact.data(), w);
      for (size_t gi = 0; gi < gen_count; ++gi) {
        const std::uint8_t* h = gens.data() + gi * static_cast<size_t>(n);
        for (int i = 0; i < n; ++i) nb[i] = h[w[i] - 1];
        const std::uint64_t rr = rank_of(nb, n, fact.data());
        if (dist_[rr] == 0xFF) {
          dist_[rr] = static_cast<std::uint8_t>(level + 1);
          next.push_back(rr);
          ++order_;
        }
      }
    }
    if (!next.empty()) ecc_ = level + 1;
    ++level;
    frontier.swap(next);
  }
}

int ElementBfs::distance_of(const Permutation& v) const {
  if (v.degree() != spec_.n)
    throw std::invalid_argument("element oracle: degree mismatch");
  const std::uint8_t d = dist_[v.lex_rank()];
  if (d == 0xFF)
    throw std::invalid_argument(
        "element oracle: permutation is not a vertex of this graph");
  return d;
}

std::vector<std::uint64_t> ElementBfs::sphere_histogram() const {
  std::vector<std::uint64_t> counts(static_cast<size_t>(ecc_) + 1, 0);
  for (const std::uint8_t d : dist_)
    if (d != 0xFF) ++counts[d];
  return counts;
}

std::map<CycleType, int> ElementBfs::class_distances() const {
  const auto fact = factorial_table();
  const int n = spec_.n;
  std::map<CycleType, int> out;
  int w[kMaxRankDegree];
  for (std::uint64_t r = 0; r < dist_.size(); ++r) {
    if (dist_[r] == 0xFF) continue;
    unrank_into(r, n, fact.data(), w);
    std::vector<int> lengths;
    std::uint32_t seen = 0;
    for (int i = 0; i < n; ++i) {
      if (seen & (std::uint32_t{1} << i)) continue;
      int len = 0;
      for (int j = i; !(seen & (std::uint32_t{1} << j)); j = w[j] - 1) {
        seen |= std::uint32_t{1} << j;
        ++len;
      }
      lengths.push_back(len);
    }
    CycleType type(std::move(lengths));
    const auto [it, inserted] = out.emplace(std::move(type), dist_[r]);
    if (!inserted && it->second != dist_[r])
      throw std::logic_error(
          "element oracle: BFS distance not constant on a conjugacy class");
  }
  return out;
}

BigInt ElementBfs::phi(int r, const Permutation& g) const {
  if (r < 0) return 0;
  (void)distance_of(g);  // vertex check
  const auto fact = factorial_table();
  const int n = spec_.n;
  const std::vector<int>& gim = g.images();
  int w[kMaxRankDegree];
  int winv[kMaxRankDegree];
  int y[kMaxRankDegree];
  std::uint64_t count = 0;
  for (std::uint64_t rk = 0; rk < dist_.size(); ++rk) {
    if (dist_[rk] == 0xFF || dist_[rk] > r) continue;
    unrank_into(rk, n, fact.data(), w);
    for (int i = 0; i < n; ++i) winv[w[i] - 1] = i + 1;
    // d(x, g) = d(e, x^-1 g); compose applies the left factor first.
    for (int i = 0; i < n; ++i) y[i] = gim[static_cast<size_t>(winv[i]) - 1];
    const std::uint8_t dg = dist_[rank_of(y, n, fact.data())];
    if (dg != 0xFF && dg <= r) ++count;
  }
  return BigInt(count);
}

// ------------------------------------------------------------- class BFS

namespace {

std::uint64_t fnv1a(const int* data, int count) {
  std::uint64_t h = 1469598103934665603ULL;
  for (int i = 0; i < count; ++i) {
    h ^= static_cast<std::uint64_t>(data[i]);
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t partition_count(int n) {
  // p(m) for m <= n by the coin-change recurrence; p(n) fits uint64_t far
  // beyond any degree the budgets admit.
  std::vector<std::uint64_t> p(static_cast<size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int m = part; m <= n; ++m) p[static_cast<size_t>(m)] +=
        p[static_cast<size_t>(m - part)];
  return p[static_cast<size_t>(n)];
}

}  // namespace

ClassBfsResult class_bfs(const GraphSpec& spec, const OracleLimits& limits) {
  const int n = spec.n;
  if (n > 64)
    throw std::domain_error(
        "class oracle: degree above 64 (cycle scan uses 64-bit masks)");
  const BigInt h_size = spec.generator_type().class_size();
  const BigInt work = BigInt(partition_count(n)) * h_size;
  if (work > BigInt(limits.class_budget))
    throw std::domain_error(
        "class oracle budget exceeded: p(n) x |H| = " + work.str() +
        " > budget " + std::to_string(limits.class_budget));

  const std::vector<std::uint8_t> gens = flat_generators(spec);
  const size_t gen_count = gens.size() / static_cast<size_t>(n);

  // Distances keyed by the sorted cycle-length list: entries live in a deque
  // (stable addresses), found through a hash index with exact collision
  // chains so lookups on the hot path never allocate.
  struct Entry {
    std::vector<int> lengths;  // ascending
    CycleType type;
    int dist;
  };
  std::deque<Entry> entries;
  std::unordered_map<std::uint64_t, std::vector<size_t>> index;
  std::deque<size_t> queue;

  const auto find_entry = [&](const int* lengths, int count) -> const Entry* {
    const auto it = index.find(fnv1a(lengths, count));
    if (it == index.end()) return nullptr;
    for (const size_t ei : it->second) {
      const Entry& e = entries[ei];
      if (static_cast<int>(e.lengths.size()) == count &&
          std::equal(e.lengths.begin(), e.lengths.end(), lengths))
        return &e;
    }
    return nullptr;
  };
  const auto insert_entry = [&](const int* lengths, int count,
                                int dist) -> size_t {
    std::vector<int> ls(lengths, lengths + count);
    CycleType type(ls);
    entries.push_back(Entry{std::move(ls), std::move(type), dist});
    index[fnv1a(lengths, count)].push_back(entries.size() - 1);
    return entries.size() - 1;
  };

  {
    std::vector<int> id_lengths(static_cast<size_t>(n), 1);
    queue.push_back(insert_entry(id_lengths.data(), n, 0));
  }

  int diameter = 0;
  int w[64];
  int lengths[64];
  while (!queue.empty()) {
    const size_t cur = queue.front();
    queue.pop_front();
    const Permutation rep = entries[cur].type.canonical_rep();
    const int cur_dist = entries[cur].dist;
    const std::vector<int>& rim = rep.images();
    for (size_t gi = 0; gi < gen_count; ++gi) {
      const std::uint8_t* h = gens.data() + gi * static_cast<size_t>(n);
      for (int i = 0; i < n; ++i) w[i] = h[rim[static_cast<size_t>(i)] - 1];
      // cycle lengths of w, ascending
      int count = 0;
      std::uint64_t seen = 0;
      for (int i = 0; i < n; ++i) {
        if (seen & (std::uint64_t{1} << i)) continue;
        int len = 0;
        for (int j = i; !(seen & (std::uint64_t{1} << j)); j = w[j] - 1) {
          seen |= std::uint64_t{1} << j;
          ++len;
        }
        lengths[count++] = len;
      }
      std::sort(lengths, lengths + count);
      if (find_entry(lengths, count) != nullptr) continue;
      const size_t e = insert_entry(lengths, count, cur_dist + 1);
      diameter = std::max(diameter, entries[e].dist);
      queue.push_back(e);
    }
  }

  ClassBfsResult out;
  out.diameter = diameter;
  for (const CycleType& type : partitions_of(n)) {
    std::vector<int> ls;
    for (auto [l, c] : type.parts())
      for (int i = 0; i < c; ++i) ls.push_back(l);
    if (const Entry* e = find_entry(ls.data(), static_cast<int>(ls.size())))
      out.distances.emplace_back(type, e->dist);
  }
  return out;
}

// ----------------------------------------------------- deficit histogram

DeficitPairHistogram DeficitPairHistogram::scan(const Permutation& g,
                                                const OracleLimits& limits) {
  const int n = g.degree();
  if (n < 1 || n > limits.enumeration_cap)
    throw std::domain_error(
        "deficit scan: degree " + std::to_string(n) +
        " outside the enumeration cap " +
        std::to_string(limits.enumeration_cap));
  if (n > 16)
    throw std::domain_error(
        "deficit scan: n! enumeration is infeasible beyond degree 16");
  DeficitPairHistogram out;
  out.n_ = n;
  out.counts_.assign(static_cast<size_t>(n),
                     std::vector<std::uint64_t>(static_cast<size_t>(n), 0));
  const Permutation ginv = g.inverse();
  const std::vector<int>& gv = ginv.images();
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  int y[kMaxRankDegree];
  do {
    const int d1 = deficit_of(w.data(), n);
    for (int i = 0; i < n; ++i)
      y[i] = gv[static_cast<size_t>(w[static_cast<size_t>(i)]) - 1];
    const int d2 = deficit_of(y, n);
    ++out.counts_[static_cast<size_t>(d1)][static_cast<size_t>(d2)];
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

BigInt DeficitPairHistogram::count_leq(int c1, int c2, int d2_parity) const {
  if (c1 < 0 || c2 < 0) return 0;
  c1 = std::min(c1, n_ - 1);
  c2 = std::min(c2, n_ - 1);
  std::uint64_t total = 0;
  for (int d1 = 0; d1 <= c1; ++d1)
    for (int d2 = 0; d2 <= c2; ++d2) {
      if (d2_parity >= 0 && d2 % 2 != d2_parity) continue;
      total += counts_[static_cast<size_t>(d1)][static_cast<size_t>(d2)];
    }
  return BigInt(total);
}

BigInt i_g_direct(int n, int r, const Permutation& g,
                  const OracleLimits& limits) {
  if (g.degree() != n)
    throw std::invalid_argument("i_g_direct: degree(g) must equal n");
  if (r < 0) return 0;
  const auto hist = DeficitPairHistogram::scan(g, limits);
  return hist.count_leq(r, r, r % 2);
}

BigInt shifted_overlap_direct(int rho, int offset, const Permutation& g,
                              const OracleLimits& limits) {
  if (offset < 0)
    throw std::invalid_argument("shifted overlap: negative offset");
  if (rho < offset) return 0;
  const auto hist = DeficitPairHistogram::scan(g, limits);
  return hist.count_leq(rho, rho - offset, (rho - offset) % 2);
}

// ------------------------------------------------------------ phi_direct

BigInt phi_direct(const GraphSpec& spec, int r, const Permutation& g,
                  const OracleLimits& limits) {
  if (g.degree() != spec.n)
    throw std::invalid_argument("phi_direct: degree(g) must equal n");
  if (spec.group() == Group::Alt && !g.is_even())
    throw std::invalid_argument("phi_direct: g is not a vertex of this graph");
  if (r < 0) return 0;

  if (spec.group_order() <= BigInt(limits.element_cap)) {
    const ElementBfs bfs(spec, limits);
    return bfs.phi(r, g);
  }

  if (limits.allow_streaming && spec.analytic_valid()) {
    // Stream all of Sym(n) in rank order, testing ball membership with the
    // closed forms — O(1) memory, so it reaches n = 11..12. Useful as a
    // cross-check of one formula against another, not as an independent
    // oracle (membership itself is analytic here).
    const int n = spec.n;
    if (n > kMaxRankDegree)
      throw std::domain_error("phi_direct: degree too large to stream");
    const auto fact = factorial_table();
    const std::uint64_t total = fact[static_cast<size_t>(n)];
    const std::vector<int>& gim = g.images();
    int w[kMaxRankDegree];
    int winv[kMaxRankDegree];
    int y[kMaxRankDegree];
    const auto radius_leq = [&](const int* im, int bound) -> bool {
      const int d = deficit_of(im, n);
      // generator-class test: deficit k and no cycle longer than 2
      bool gen = d == spec.k;
      if (gen) {
        for (int i = 0; i < n && gen; ++i) {
          const int j = im[i];
          if (j != i + 1 && im[j - 1] != i + 1) gen = false;
        }
      }
      const int rad = radius_from_invariants(spec, d, gen);
      return rad >= 0 && rad <= bound;
    };
    std::vector<int> ww(static_cast<size_t>(n));
    std::iota(ww.begin(), ww.end(), 1);
    std::uint64_t count = 0;
    for (std::uint64_t rk = 0; rk < total; ++rk) {
      std::copy(ww.begin(), ww.end(), w);
      if (radius_leq(w, r)) {
        for (int i = 0; i < n; ++i) winv[w[i] - 1] = i + 1;
        for (int i = 0; i < n; ++i)
          y[i] = gim[static_cast<size_t>(winv[i]) - 1];
        if (radius_leq(y, r)) ++count;
      }
      std::next_permutation(ww.begin(), ww.end());
    }
    return BigInt(count);
  }

  throw std::domain_error(
      "phi_direct: group order exceeds the element oracle cap (raise the "
      "cap, or enable streaming within the closed-form range)");
}

// -------------------------------------------------------------- seed rows

std::string seed_kind_name(SeedKind kind) {
  switch (kind) {
    case SeedKind::PhiK1:
      return "phi-k1";
    case SeedKind::IRow:
      return "i-row";
    case SeedKind::CrossRow:
      return "cross-row";
  }
  throw std::logic_error("unreachable seed kind");
}

SeedKind seed_kind_from_name(const std::string& name) {
  if (name == "phi-k1") return SeedKind::PhiK1;
  if (name == "i-row") return SeedKind::IRow;
  if (name == "cross-row") return SeedKind::CrossRow;
  throw std::invalid_argument("unknown seed kind: " + name);
}

StirlingFunction SeedRow::to_stirling() const {
  std::map<int, BigInt> seed;
  for (const auto& [r, v] : row) seed[threshold - r] = v;
  return StirlingFunction(threshold, m_floor, std::move(seed), tail);
}

std::string SeedRow::key() const {
  std::string k = seed_kind_name(kind) + ":" + type.str();
  if (offset != 0) k += ":o" + std::to_string(offset);
  return k;
}

std::string SeedRow::to_json() const {
  nlohmann::json j;
  j["kind"] = seed_kind_name(kind);
  j["type"] = type.str();
  j["offset"] = offset;
  j["threshold"] = threshold;
  j["m_floor"] = m_floor;
  j["tail"] = tail.str();
  nlohmann::json jr = nlohmann::json::object();
  for (const auto& [r, v] : row) jr[std::to_string(r)] = v.str();
  j["row"] = std::move(jr);
  return j.dump(2);
}

SeedRow SeedRow::from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  SeedRow out;
  out.kind = seed_kind_from_name(j.at("kind").get<std::string>());
  out.type = CycleType::parse(j.at("type").get<std::string>());
  out.offset = j.at("offset").get<int>();
  out.threshold = j.at("threshold").get<int>();
  out.m_floor = j.at("m_floor").get<int>();
  out.tail = BigInt(j.at("tail").get<std::string>());
  for (const auto& [key, value] : j.at("row").items())
    out.row[std::stoi(key)] = BigInt(value.get<std::string>());
  return out;
}

SeedRow compute_seed_row(SeedKind kind, const CycleType& type, int offset,
                         const OracleLimits& limits) {
  if (kind != SeedKind::CrossRow && offset != 0)
    throw std::invalid_argument("seed row: offset applies only to cross-row");
  if (kind == SeedKind::CrossRow && offset < 1)
    throw std::invalid_argument("seed row: cross-row needs a positive offset");

  SeedRow out;
  out.kind = kind;
  out.type = type.reduced();
  out.offset = offset;
  const int t = std::max(out.type.support_size(), 2);
  out.threshold = t;
  if (t > limits.enumeration_cap)
    throw std::domain_error(
        "seed infeasible: support " + std::to_string(out.type.support_size()) +
        " exceeds the enumeration cap " +
        std::to_string(limits.enumeration_cap));

  const Permutation g = out.type.embedded(t).canonical_rep();
  const auto hist = DeficitPairHistogram::scan(g, limits);

  int r_max = 0;
  switch (kind) {
    case SeedKind::PhiK1:
      // Phi of the single-transposition graph, whose distance equals the
      // deficit, so both ball memberships are deficit cutoffs.
      r_max = t - 1;
      out.m_floor = 1;
      out.tail = factorial(t);
      for (int r = 0; r <= r_max; ++r)
        out.row[r] = hist.count_leq(r, r, -1);
      break;
    case SeedKind::IRow:
      r_max = 2 * (t - 1);
      out.m_floor = 2 - t;
      out.tail = factorial(t) / 2;
      for (int r = 0; r <= r_max; ++r)
        out.row[r] = hist.count_leq(r, r, r % 2);
      break;
    case SeedKind::CrossRow:
      r_max = offset + 2 * (t - 1);
      out.m_floor = 2 - t - offset;
      out.tail = factorial(t) / 2;
      for (int r = 0; r <= r_max; ++r)
        out.row[r] = r < offset
                         ? BigInt(0)
                         : hist.count_leq(r, r - offset, (r - offset) % 2);
      break;
  }
  if (out.row.at(r_max) != out.tail)
    throw std::logic_error("seed row did not stabilize at its tail value");
  return out;
}

}  // namespace caystir
