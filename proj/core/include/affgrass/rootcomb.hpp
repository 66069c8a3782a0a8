#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace affgrass {

// Indices are 0-based internally; text and JSON forms are 1-based.
using Block = std::vector<int>; // sorted, nonempty

// A Levi subgroup of GL(n) containing the diagonal torus: a partition of
// {0..n-1}. Blocks are kept sorted by their smallest element.
class LeviDatum {
public:
  LeviDatum() = default;
  // Throws InputError unless blocks partition {0..n-1}.
  LeviDatum(int n, std::vector<Block> blocks);

  static LeviDatum torus(int n);
  static LeviDatum whole(int n);

  int n() const { return n_; }
  int rank() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }
  // Position in blocks() of the block containing index i.
  int block_of(int i) const { return block_of_[i]; }
  int index_of(const Block& b) const;

  friend bool operator==(const LeviDatum& a, const LeviDatum& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }

private:
  int n_ = 0;
  std::vector<Block> blocks_;
  std::vector<int> block_of_;
};

// A parabolic P in P(M): the blocks of M in a linear order. Roots
// e_i - e_j with block(i) before block(j) lie in the unipotent radical N.
class ParabolicDatum {
public:
  ParabolicDatum() = default;
  ParabolicDatum(int n, std::vector<Block> order);

  int n() const { return levi_.n(); }
  const LeviDatum& levi() const { return levi_; }
  const std::vector<Block>& order() const { return order_; }
  // Position of index i's block in order().
  int position_of(int i) const { return position_[i]; }
  bool precedes(int i, int j) const { return position_[i] < position_[j]; }
  bool is_borel() const { return levi_.rank() == n(); }

  // Indices listed block by block in order.
  std::vector<int> flattened() const;

  friend bool operator==(const ParabolicDatum& a, const ParabolicDatum& b) {
    return a.order_ == b.order_;
  }
  friend bool operator<(const ParabolicDatum& a, const ParabolicDatum& b) {
    return a.order_ < b.order_;
  }

private:
  LeviDatum levi_;
  std::vector<Block> order_;
  std::vector<int> position_;
};

// A Borel containing the torus, given by the order of the indices.
struct BorelDatum {
  std::vector<int> perm;

  static BorelDatum standard(int n);
  ParabolicDatum parabolic() const;
  BorelDatum opposite() const;
  friend bool operator==(const BorelDatum&, const BorelDatum&) = default;
};

// An element of Lambda_M = Z^{blocks}, aligned with levi.blocks().
struct CoweightM {
  LeviDatum levi;
  std::vector<long> components;

  long total() const;
  friend bool operator==(const CoweightM&, const CoweightM&) = default;
  CoweightM operator-(const CoweightM& o) const;
};

// Root e_i - e_j as (i, j).
using Root = std::pair<int, int>;

// The two consecutive blocks exchanged between adjacent parabolics. first
// precedes second in the first argument of adjacent().
struct SwapPair {
  int position;
  Block first;
  Block second;
};

// Throws LeviMismatch when P and P2 have different Levis.
std::optional<SwapPair> adjacent(const ParabolicDatum& P, const ParabolicDatum& P2);

// e_b - e_b' for the swapped pair (b before b' in P). Throws NotAdjacent.
CoweightM beta(const ParabolicDatum& P, const ParabolicDatum& P2);

// Image of alpha^vee in Lambda_M as a multiple of beta(P, P2); always 1 for
// GL(n). Throws NotAdjacent, RootNotInNNbar.
int m_alpha(const Root& alpha, const ParabolicDatum& P, const ParabolicDatum& P2);

// Roots in n intersect nbar': pairs (i, j), i in b, j in b'. Throws NotAdjacent.
std::vector<Root> roots_between(const ParabolicDatum& P, const ParabolicDatum& P2);

// Bubble-sort gallery: repeatedly swap the first adjacent pair that is out
// of order with respect to B2.
std::vector<BorelDatum> minimal_gallery(const BorelDatum& B, const BorelDatum& B2);

// alpha_i for each step of a gallery: the root positive for B_{i-1} and
// negative for B_i.
std::vector<Root> crossing_roots(const std::vector<BorelDatum>& gallery);

// The Borel refining P by the given orders inside the blocks. Each entry of
// within_blocks is an ordering of one block of P's Levi.
BorelDatum borel_lift(const ParabolicDatum& P, const std::vector<std::vector<int>>& within_blocks);

// All r! parabolics in P(M), in lexicographic order of block orders.
std::vector<ParabolicDatum> parabolics(const LeviDatum& levi);

// Ordered pairs (P, P2) of adjacent parabolics; r! * (r - 1) of them.
std::vector<std::pair<ParabolicDatum, ParabolicDatum>> adjacent_pairs(const LeviDatum& levi);

// Q containing P whose Levi merges the blocks at positions k and k + 1.
ParabolicDatum merge_consecutive(const ParabolicDatum& P, int k);

// P intersected with the Levi block L_block (a union of P-blocks), in local
// coordinates 0..|L_block|-1 following the sorted order of L_block.
ParabolicDatum restrict_to_block(const ParabolicDatum& P, const Block& L_block);

// 1-based text forms: "[[1,2],[3]]" and "[[1,2],[3]]|[[3],[1,2]]".
std::string to_string(const ParabolicDatum& P);
std::string pair_key(const ParabolicDatum& P, const ParabolicDatum& P2);

} // namespace affgrass
