#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace chartab {

constexpr int kMaxDegree = 16;

/// Permutation of {1..degree}. Products compose left to right:
/// i^(a*b) = (i^a)^b.
class Perm {
public:
  Perm() = default;
  static Perm identity(int degree);
  /// images[i] is the image of point i+1 (1-based values).
  static Perm from_images(const std::vector<int>& images);

  int degree() const { return degree_; }
  /// Image of a 1-based point.
  int operator()(int point) const { return img_[static_cast<std::size_t>(point - 1)] + 1; }

  Perm operator*(const Perm& other) const;
  Perm inverse() const;
  Perm pow(long k) const;

  /// Cycle lengths in non-increasing order, fixed points included as 1s.
  std::vector<int> cycle_type() const;
  int order() const;
  int fixed_points() const;
  bool is_even() const;
  bool is_identity() const;

  /// Injective 4-bit-per-point packing; equal keys iff equal permutations
  /// of the same degree.
  std::uint64_t key() const;
  /// Disjoint-cycle notation, "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Perm& a, const Perm& b)
  {
    return a.degree_ == b.degree_ && a.img_ == b.img_;
  }

private:
  int degree_ = 0;
  std::array<std::uint8_t, kMaxDegree> img_{};
};

/// Parses disjoint-cycle notation such as "(1,2,3)(4,5)"; unmentioned points
/// are fixed. Throws ParseError on repeated points, out-of-range points or
/// malformed syntax.
Perm parse_perm(std::string_view text, int degree);

struct ClassData {
  int id = 0;
  Perm representative;
  std::uint64_t size = 0;
  /// Cycle type without fixed points, e.g. "2^1 3^1 6^1"; "_A", "_B", ...
  /// appended when several classes share a cycle type.
  std::string label;
  std::vector<int> cycle_type;
  int element_order = 1;
  int fixed_points = 0;
  std::uint64_t centralizer_order = 0;
  /// prime p dividing |G| -> class of g^p
  std::map<int, int> power_map;
  int inverse_class = 0;
  bool real = true;
};

/// Fully enumerated permutation group with its conjugacy classes in
/// canonical order. Immutable once built.
class GroupData {
public:
  int degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  /// Elements in breadth-first discovery order; index 0 is the identity.
  const std::vector<Perm>& elements() const { return elements_; }

  std::optional<std::uint32_t> index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p).has_value(); }

  int class_of_index(std::uint32_t element) const { return class_of_[element]; }
  /// Throws std::invalid_argument if p is not an element.
  int class_of(const Perm& p) const;
  const std::vector<ClassData>& classes() const { return classes_; }
  std::size_t class_count() const { return classes_.size(); }
  const std::vector<std::uint32_t>& class_elements(int c) const
  {
    return class_elements_[static_cast<std::size_t>(c)];
  }
  /// Class containing g^k for g in class c.
  int power_class(int c, long k) const;

  /// support()[i] is the parent point carried by point i+1. Identity for
  /// groups that are not point stabilizers.
  const std::vector<int>& support() const { return support_; }
  int parent_degree() const { return parent_degree_; }
  /// Rewrites p on the parent's point set, fixing the removed points.
  Perm lift(const Perm& p) const;

private:
  friend std::shared_ptr<const GroupData> build_group(int, std::vector<Perm>, std::vector<Perm>,
                                                      std::vector<int>, int);
  void compute_classes();

  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<int> class_of_;
  std::vector<ClassData> classes_;
  std::vector<std::vector<std::uint32_t>> class_elements_;
  std::vector<int> support_;
  int parent_degree_ = 0;
};

using GroupPtr = std::shared_ptr<const GroupData>;

/// Builds a group from an already closed element list. Used by the closure and
/// stabilizer constructions.
GroupPtr build_group(int degree, std::vector<Perm> generators, std::vector<Perm> elements,
                     std::vector<int> support, int parent_degree);

/// Breadth-first closure under right multiplication by generators. Throws
/// CapacityError when more than cap elements are found.
GroupPtr group_closure(const std::vector<Perm>& generators, std::uint64_t cap = 1'000'000);

const std::vector<ClassData>& conjugacy_classes(const GroupData& g);

enum class SharpReason { ok, bad_k, order_mismatch, not_transitive, odd_generator };

struct SharpReport {
  bool ok = false;
  SharpReason reason = SharpReason::bad_k;
  std::string detail;
};

std::string to_string(SharpReason r);

/// Sharp k-transitivity plus evenness of every generator.
SharpReport verify_sharp_transitivity(const GroupData& g, int k);

/// Pointwise stabilizer, relabelled onto points 1..n-k in increasing order of
/// the surviving points.
GroupPtr stabilizer(const GroupPtr& g, const std::vector<int>& points);

/// H-class id -> G-class id. H and G must share a root point set (H a
/// stabilizer in G's chain, or a subgroup on the same points). Throws
/// std::invalid_argument when an element of H is not in G.
std::vector<int> fusion_map(const GroupData& h, const GroupData& g);

/// #{(x, y) : x in class j, y in class k, x*y = representative of class l}.
std::uint64_t class_mult_coeff(const GroupData& g, int j, int k, int l);

struct SylowReport {
  int p = 0;
  std::uint64_t order = 0;
  bool abelian = false;
  int exponent = 1;
  /// element order -> count
  std::map<int, std::uint64_t> order_census;
  /// sizes of the nontrivial and trivial orbits on points, ascending
  std::vector<int> orbit_sizes;
  std::vector<Perm> generators;
};

/// Grows a Sylow p-subgroup by adjoining seeded random p-elements of the
/// normalizer. Throws std::invalid_argument if p is not a prime dividing |G|.
SylowReport sylow_probe(const GroupData& g, int p, std::uint64_t seed = 0);

} // namespace chartab
