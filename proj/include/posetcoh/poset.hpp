#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetcoh/errors.hpp"

namespace posetcoh {

// A chain c_0 < c_1 < ... < c_n, stored as element indexes into its poset.
struct Chain {
  std::vector<int> members;
  bool unrefinable = false;

  int length() const { return static_cast<int>(members.size()) - 1; }
};

// Finite poset with explicit cover relation. Element ids are opaque strings;
// every enumeration in the library follows their insertion order, so all
// outputs are deterministic. Immutable after validation.
class Poset {
 public:
  // Rejects cycles and pairs that are not covers (an intermediate element
  // exists). The full relation is the reflexive-transitive closure of the
  // covers, cached here.
  static Poset validate(const std::vector<std::string>& elements,
                        const std::vector<std::pair<std::string, std::string>>& covers);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::string& id(int i) const { return ids_[i]; }
  const std::vector<std::string>& ids() const { return ids_; }
  int index(const std::string& id) const;          // throws UnknownElement
  std::optional<int> find(const std::string& id) const;

  bool leq(int a, int b) const { return leq_[a][b]; }
  bool less(int a, int b) const { return a != b && leq_[a][b]; }
  bool is_cover(int q, int p) const;  // q ≺ p

  const std::vector<std::pair<int, int>>& cover_pairs() const { return covers_; }
  const std::vector<int>& lower_covers(int p) const { return lower_covers_[p]; }  // P_{≺p}
  const std::vector<int>& upper_covers(int q) const { return upper_covers_[q]; }

  // Longest chain ending at p / overall.
  int degree(int p) const { return degree_[p]; }
  int poset_degree() const;

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  std::optional<int> unique_minimum() const;
  std::optional<int> unique_maximum() const;

  // ⟨Q⟩ = everything below some element of Q, in insertion order.
  std::vector<int> lower_set(const std::vector<int>& q) const;

  // Induced subposet on the given elements (ids preserved). The cover
  // relation is recomputed for the subposet.
  Poset induced(const std::vector<int>& elements) const;

  // All chains ending at `top` that are unrefinable and have exactly
  // `length` covers.
  std::vector<std::vector<int>> unrefinable_chains_to(int top, int length) const;

  // Maximal chains (start at a minimal element, end at a maximal one,
  // every step a cover).
  std::vector<std::vector<int>> maximal_chains() const;

  // All nonempty chains, i.e. the faces of the order complex, grouped by
  // enumeration order (each face lists ascending element indexes).
  std::vector<std::vector<int>> order_complex_faces() const;

  // True iff all maximal chains share one length; otherwise two witnesses
  // of different lengths are returned.
  bool is_pure(std::pair<Chain, Chain>* witness = nullptr) const;

  std::vector<std::string> ids_of(const std::vector<int>& elements) const;

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> lower_covers_;
  std::vector<std::vector<int>> upper_covers_;
  std::vector<int> degree_;
};

// A poset with a checked minimum and maximum.
class BoundedPoset {
 public:
  // `bottom`/`top` may be empty, in which case a unique minimum/maximum is
  // inferred; NotBounded if none exists.
  static BoundedPoset wrap(Poset poset, const std::string& bottom = "",
                           const std::string& top = "");

  const Poset& poset() const { return poset_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  // Shortest unrefinable chain from p to the top.
  int codegree(int p) const { return codegree_[p]; }

  std::vector<int> atoms() const { return poset_.upper_covers(bottom_); }
  std::vector<int> coatoms() const { return poset_.lower_covers(top_); }

  // All unrefinable chains c_0 ≺ ... ≺ c_i = 1̂ of length i.
  std::vector<std::vector<int>> unrefinable_top_chains(int i) const;

  // Every unrefinable chain ending at the top, of any length, ordered by
  // decreasing start degree and then lexicographically.
  std::vector<std::vector<int>> all_top_chains() const;

 private:
  Poset poset_;
  int bottom_ = -1;
  int top_ = -1;
  std::vector<int> codegree_;
};

// Simplicial complex given by its faces (used for order complexes).
struct SimplicialComplex {
  std::vector<std::string> vertices;
  std::vector<std::vector<int>> faces;  // ascending vertex indexes, all dims
  int dimension() const;
};

SimplicialComplex order_complex(const Poset& p);

}  // namespace posetcoh
