#pragma once

#include <bentkit/bf_core.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace bentkit {

/// Coordinate face through 0: Γ(mask) = {x : x & ~mask == 0}. Set bits of the
/// mask are the free coordinates.
class FaceMask {
 public:
  FaceMask(int arity, std::uint64_t mask);

  static FaceMask full(int arity) { return FaceMask(arity, (std::uint64_t{1} << arity) - 1); }

  int arity() const { return arity_; }
  std::uint64_t mask() const { return mask_; }
  int dimension() const { return popcount(mask_); }
  std::uint64_t size() const { return std::uint64_t{1} << dimension(); }
  bool contains(std::uint64_t x) const { return (x & ~mask_) == 0; }

  friend bool operator==(const FaceMask&, const FaceMask&) = default;

 private:
  int arity_;
  std::uint64_t mask_;
};

/// Calls visit(s) for every submask s of m, starting at 0 and ascending.
template <typename Visit>
void for_each_submask(std::uint64_t m, Visit&& visit) {
  std::uint64_t s = 0;
  do {
    visit(s);
    s = (s - m) & m;
  } while (s != 0);
}

std::vector<Point> subcube_points(const FaceMask& m);

/// Γ^⊥ of a coordinate face is the complementary coordinate face.
FaceMask dual_face(const FaceMask& m);

/// Σ_{x ∈ z ⊕ Γ(m)} (-1)^{f(x)}.
std::int64_t coset_sum(const BooleanFunction& f, const FaceMask& m, const Point& z);

struct CosetSum {
  std::uint64_t representative;  // minimal-index member
  std::int64_t sum;
  friend bool operator==(const CosetSum&, const CosetSum&) = default;
};

/// One entry per coset of Γ(m), ordered by representative.
std::vector<CosetSum> coset_spectrum(const BooleanFunction& f, const FaceMask& m);

/// Hamming ball B_r; members ordered by (weight, index).
struct Ball {
  int arity;
  int radius;
  std::vector<std::uint64_t> members;
};

Ball ball_points(int n, int r);

/// Number of cosets of Γ(m) that meet B_r.
std::uint64_t covering_coset_count(int n, int r, const FaceMask& m);

/// For every sign pattern on a coset of dimension `dim` (all 2^{2^dim} of
/// them), the count of patterns achieving each coset sum.
std::map<int, std::uint64_t> sum_pattern_multiplicities(int dim);

}  // namespace bentkit
