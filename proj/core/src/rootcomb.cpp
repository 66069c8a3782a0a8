#include "affgrass/rootcomb.hpp"

#include "affgrass/error.hpp"

#include <algorithm>
#include <numeric>

namespace affgrass {

LeviDatum::LeviDatum(int n, std::vector<Block> blocks) : n_(n) {
  if (n <= 0)
    throw InputError("Levi datum: n must be positive");
  block_of_.assign(n, -1);
  for (auto& b : blocks) {
    if (b.empty())
      throw InputError("Levi datum: empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end());
  for (std::size_t k = 0; k < blocks.size(); ++k)
    for (int i : blocks[k]) {
      if (i < 0 || i >= n)
        throw InputError("Levi datum: index out of range");
      if (block_of_[i] >= 0)
        throw InputError("Levi datum: blocks overlap");
      block_of_[i] = static_cast<int>(k);
    }
  for (int i = 0; i < n; ++i)
    if (block_of_[i] < 0)
      throw InputError("Levi datum: blocks do not cover all indices");
  blocks_ = std::move(blocks);
}

LeviDatum LeviDatum::torus(int n) {
  std::vector<Block> b;
  for (int i = 0; i < n; ++i)
    b.push_back({i});
  return LeviDatum(n, std::move(b));
}

LeviDatum LeviDatum::whole(int n) {
  Block b(n);
  std::iota(b.begin(), b.end(), 0);
  return LeviDatum(n, {b});
}

int LeviDatum::index_of(const Block& b) const {
  auto it = std::find(blocks_.begin(), blocks_.end(), b);
  if (it == blocks_.end())
    throw LeviMismatch("block is not a block of this Levi");
  return static_cast<int>(it - blocks_.begin());
}

ParabolicDatum::ParabolicDatum(int n, std::vector<Block> order) {
  for (auto& b : order)
    std::sort(b.begin(), b.end());
  levi_ = LeviDatum(n, order);
  order_ = std::move(order);
  position_.assign(n, 0);
  for (std::size_t k = 0; k < order_.size(); ++k)
    for (int i : order_[k])
      position_[i] = static_cast<int>(k);
}

std::vector<int> ParabolicDatum::flattened() const {
  std::vector<int> out;
  for (const auto& b : order_)
    out.insert(out.end(), b.begin(), b.end());
  return out;
}

BorelDatum BorelDatum::standard(int n) {
  BorelDatum b;
  b.perm.resize(n);
  std::iota(b.perm.begin(), b.perm.end(), 0);
  return b;
}

ParabolicDatum BorelDatum::parabolic() const {
  std::vector<Block> order;
  for (int i : perm)
    order.push_back({i});
  return ParabolicDatum(static_cast<int>(perm.size()), std::move(order));
}

BorelDatum BorelDatum::opposite() const {
  BorelDatum b{perm};
  std::reverse(b.perm.begin(), b.perm.end());
  return b;
}

long CoweightM::total() const {
  return std::accumulate(components.begin(), components.end(), 0L);
}

CoweightM CoweightM::operator-(const CoweightM& o) const {
  if (!(levi == o.levi))
    throw LeviMismatch("coweight difference across Levis");
  CoweightM out = *this;
  for (std::size_t k = 0; k < components.size(); ++k)
    out.components[k] -= o.components[k];
  return out;
}

std::optional<SwapPair> adjacent(const ParabolicDatum& P, const ParabolicDatum& P2) {
  if (!(P.levi() == P2.levi()))
    throw LeviMismatch("parabolics have different Levi components");
  const auto& a = P.order();
  const auto& b = P2.order();
  std::vector<int> diff;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k])
      diff.push_back(static_cast<int>(k));
  if (diff.size() != 2 || diff[1] != diff[0] + 1)
    return std::nullopt;
  const int k = diff[0];
  if (a[k] != b[k + 1] || a[k + 1] != b[k])
    return std::nullopt;
  return SwapPair{k, a[k], a[k + 1]};
}

namespace {

SwapPair require_adjacent(const ParabolicDatum& P, const ParabolicDatum& P2) {
  auto s = adjacent(P, P2);
  if (!s)
    throw NotAdjacent("parabolics " + to_string(P) + " and " + to_string(P2) +
                      " are not adjacent");
  return *s;
}

std::string block_list_text(const std::vector<Block>& blocks) {
  std::string out = "[";
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k)
      out += ',';
    out += '[';
    for (std::size_t j = 0; j < blocks[k].size(); ++j) {
      if (j)
        out += ',';
      out += std::to_string(blocks[k][j] + 1);
    }
    out += ']';
  }
  return out + "]";
}

} // namespace

CoweightM beta(const ParabolicDatum& P, const ParabolicDatum& P2) {
  SwapPair s = require_adjacent(P, P2);
  const LeviDatum& levi = P.levi();
  CoweightM b{levi, std::vector<long>(levi.rank(), 0)};
  b.components[levi.index_of(s.first)] = 1;
  b.components[levi.index_of(s.second)] = -1;
  return b;
}

std::vector<Root> roots_between(const ParabolicDatum& P, const ParabolicDatum& P2) {
  SwapPair s = require_adjacent(P, P2);
  std::vector<Root> out;
  for (int i : s.first)
    for (int j : s.second)
      out.emplace_back(i, j);
  return out;
}

int m_alpha(const Root& alpha, const ParabolicDatum& P, const ParabolicDatum& P2) {
  auto roots = roots_between(P, P2);
  if (std::find(roots.begin(), roots.end(), alpha) == roots.end())
    throw RootNotInNNbar("root is not in n intersect nbar'");
  const LeviDatum& levi = P.levi();
  std::vector<long> image(levi.rank(), 0);
  image[levi.block_of(alpha.first)] += 1;
  image[levi.block_of(alpha.second)] -= 1;
  const CoweightM b = beta(P, P2);
  // image = m * b with m > 0; b has a single +1 entry.
  long m = 0;
  for (std::size_t k = 0; k < image.size(); ++k)
    if (b.components[k] == 1)
      m = image[k];
  for (std::size_t k = 0; k < image.size(); ++k)
    if (image[k] != m * b.components[k] || m <= 0)
      throw InvariantViolation("coroot image is not a positive multiple of beta");
  return static_cast<int>(m);
}

std::vector<BorelDatum> minimal_gallery(const BorelDatum& B, const BorelDatum& B2) {
  const int n = static_cast<int>(B.perm.size());
  std::vector<int> target_pos(n);
  for (int k = 0; k < n; ++k)
    target_pos[B2.perm[k]] = k;
  std::vector<BorelDatum> out{B};
  BorelDatum cur = B;
  for (;;) {
    int k = 0;
    while (k + 1 < n && target_pos[cur.perm[k]] < target_pos[cur.perm[k + 1]])
      ++k;
    if (k + 1 >= n)
      break;
    std::swap(cur.perm[k], cur.perm[k + 1]);
    out.push_back(cur);
  }
  return out;
}

std::vector<Root> crossing_roots(const std::vector<BorelDatum>& gallery) {
  std::vector<Root> out;
  for (std::size_t s = 1; s < gallery.size(); ++s) {
    const auto& a = gallery[s - 1].perm;
    const auto& b = gallery[s].perm;
    for (std::size_t k = 0; k + 1 < a.size(); ++k)
      if (a[k] != b[k]) {
        out.emplace_back(a[k], a[k + 1]);
        break;
      }
  }
  return out;
}

BorelDatum borel_lift(const ParabolicDatum& P,
                      const std::vector<std::vector<int>>& within_blocks) {
  BorelDatum out;
  for (const Block& b : P.order()) {
    const std::vector<int>* match = nullptr;
    for (const auto& w : within_blocks) {
      std::vector<int> sorted = w;
      std::sort(sorted.begin(), sorted.end());
      if (sorted == b)
        match = &w;
    }
    if (!match)
      throw LeviMismatch("borel_lift: no order given for a block");
    out.perm.insert(out.perm.end(), match->begin(), match->end());
  }
  return out;
}

std::vector<ParabolicDatum> parabolics(const LeviDatum& levi) {
  std::vector<int> idx(levi.rank());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<ParabolicDatum> out;
  do {
    std::vector<Block> order;
    for (int k : idx)
      order.push_back(levi.blocks()[k]);
    out.emplace_back(levi.n(), std::move(order));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

std::vector<std::pair<ParabolicDatum, ParabolicDatum>> adjacent_pairs(const LeviDatum& levi) {
  std::vector<std::pair<ParabolicDatum, ParabolicDatum>> out;
  for (const auto& P : parabolics(levi))
    for (int k = 0; k + 1 < levi.rank(); ++k) {
      auto order = P.order();
      std::swap(order[k], order[k + 1]);
      out.emplace_back(P, ParabolicDatum(levi.n(), std::move(order)));
    }
  return out;
}

ParabolicDatum merge_consecutive(const ParabolicDatum& P, int k) {
  auto order = P.order();
  order[k].insert(order[k].end(), order[k + 1].begin(), order[k + 1].end());
  order.erase(order.begin() + k + 1);
  return ParabolicDatum(P.n(), std::move(order));
}

ParabolicDatum restrict_to_block(const ParabolicDatum& P, const Block& L_block) {
  std::vector<Block> local;
  for (const Block& b : P.order()) {
    Block mapped;
    for (int i : b) {
      auto it = std::lower_bound(L_block.begin(), L_block.end(), i);
      if (it != L_block.end() && *it == i)
        mapped.push_back(static_cast<int>(it - L_block.begin()));
    }
    if (mapped.empty())
      continue;
    if (mapped.size() != b.size())
      throw LeviMismatch("restrict_to_block: block straddles the Levi block");
    local.push_back(std::move(mapped));
  }
  return ParabolicDatum(static_cast<int>(L_block.size()), std::move(local));
}

std::string to_string(const ParabolicDatum& P) { return block_list_text(P.order()); }

std::string pair_key(const ParabolicDatum& P, const ParabolicDatum& P2) {
  return to_string(P) + "|" + to_string(P2);
}

} // namespace affgrass
