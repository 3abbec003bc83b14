#include <bentkit/geometry.hpp>

#include <algorithm>
#include <set>
#include <string>

namespace bentkit {

FaceMask::FaceMask(int arity, std::uint64_t mask) : arity_(arity), mask_(mask) {
  if (arity < 1 || arity > 63) throw DomainError("face arity out of range");
  if ((mask >> arity) != 0) {
    throw DomainError("mask " + std::to_string(mask) + " has bits beyond arity " +
                      std::to_string(arity));
  }
}

std::vector<Point> subcube_points(const FaceMask& m) {
  std::vector<Point> points;
  points.reserve(m.size());
  for_each_submask(m.mask(), [&](std::uint64_t s) { points.push_back(Point{m.arity(), s}); });
  return points;
}

FaceMask dual_face(const FaceMask& m) {
  const std::uint64_t all = (std::uint64_t{1} << m.arity()) - 1;
  return FaceMask(m.arity(), all & ~m.mask());
}

std::int64_t coset_sum(const BooleanFunction& f, const FaceMask& m, const Point& z) {
  if (f.arity() != m.arity() || z.dim != f.arity()) throw DomainError("coset_sum: arity mismatch");
  std::int64_t sum = 0;
  for_each_submask(m.mask(), [&](std::uint64_t s) { sum += f.bit(z.bits ^ s) ? -1 : 1; });
  return sum;
}

std::vector<CosetSum> coset_spectrum(const BooleanFunction& f, const FaceMask& m) {
  if (f.arity() != m.arity()) throw DomainError("coset_spectrum: arity mismatch");
  const FaceMask reps = dual_face(m);
  std::vector<CosetSum> out;
  out.reserve(reps.size());
  for_each_submask(reps.mask(), [&](std::uint64_t z) {
    out.push_back({z, coset_sum(f, m, Point{f.arity(), z})});
  });
  return out;
}

Ball ball_points(int n, int r) {
  if (n < 1 || n > 30) throw DomainError("ball_points: arity out of range");
  if (r < 0 || r > n) throw DomainError("ball_points: radius must be in [0, n]");
  Ball ball{n, r, {}};
  for (int w = 0; w <= r; ++w) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      if (popcount(x) == w) ball.members.push_back(x);
    }
  }
  return ball;
}

std::uint64_t covering_coset_count(int n, int r, const FaceMask& m) {
  if (m.arity() != n) throw DomainError("covering_coset_count: arity mismatch");
  if (r < 0 || r > n) throw DomainError("covering_coset_count: radius must be in [0, n]");
  // The lightest member of z ⊕ Γ(m) is its representative z (z ∩ m = ∅), so a
  // coset meets B_r iff wt(z) <= r.
  const int free = n - m.dimension();
  std::uint64_t count = 0;
  std::uint64_t c = 1;  // C(free, k)
  for (int k = 0; k <= std::min(r, free); ++k) {
    count += c;
    c = static_cast<std::uint64_t>(static_cast<unsigned __int128>(c) * (free - k) / (k + 1));
  }
  return count;
}

std::map<int, std::uint64_t> sum_pattern_multiplicities(int dim) {
  if (dim < 0 || dim > 4) throw DomainError("sum_pattern_multiplicities: dim must be in [0, 4]");
  const std::uint64_t points = std::uint64_t{1} << dim;
  std::map<int, std::uint64_t> classes;
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << points); ++pattern) {
    const int sum = static_cast<int>(points) - 2 * popcount(pattern);
    ++classes[sum];
  }
  return classes;
}

}  // namespace bentkit
