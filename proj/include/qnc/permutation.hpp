#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qnc/digraph.hpp"
#include "qnc/errors.hpp"
#include "qnc/limits.hpp"

namespace qnc {

// A bijection on {1..n}. image()[i-1] is the image of i.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  // 1 -> 2 -> ... -> n -> 1
  static Permutation shift_cycle(int n);
  // One-line image list, e.g. "2 3 1".
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const;  // 1 <= i <= size()
  const std::vector<int>& image() const { return image_; }
  bool is_identity() const;
  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.image_ == b.image_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.image_ < b.image_;
  }

 private:
  std::vector<int> image_;
};

// (a b)(i) = a(b(i))
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);

// Disjoint cycles covering {1..n}; fixed points appear as length-1 cycles.
// Each cycle starts at its smallest member; cycles are ordered by that member.
std::vector<std::vector<int>> cycle_decomposition(const Permutation& p);

// Basis-index convention: qubit 1 is the leftmost character of the bit-string
// label and the most significant bit of the integer encoding.
std::string basis_label(std::uint32_t x, int n);

// Reorders the bits of an n-bit basis index: bit i of the result is bit p(i)
// of x (1-based, MSB first).
std::uint32_t permute_bits(std::uint32_t x, const Permutation& p);

// Duplicate-free set of equally sized permutations, ordered lexicographically
// by image so that iteration order is reproducible.
class PermSet {
 public:
  PermSet(int n, std::vector<Permutation> members);

  // All n! permutations, in lexicographic order.
  static PermSet full_group(int n, const Limits& limits = {});

  int qubits() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Permutation>& members() const { return members_; }
  bool contains(const Permutation& p) const;

  friend bool operator==(const PermSet& a, const PermSet& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

 private:
  int n_;
  std::vector<Permutation> members_;
};

// Smallest set containing s that is closed under composition; always contains
// the identity. Grown breadth-first by left-composition with the generators.
PermSet closure(const PermSet& s, const Limits& limits = {});

// Digraph on qubits {1..n} with an arc (i, p(i)) for every non-fixed i.
Digraph interaction_graph(const Permutation& p);
// Union of the members' interaction graphs.
Digraph interaction_graph(const PermSet& s);

}  // namespace qnc
