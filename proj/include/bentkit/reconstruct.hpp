#pragma once

#include <bentkit/bf_core.hpp>
#include <bentkit/geometry.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bentkit {

/// Values of a function on B_r, listed in ball_points(n, r) order.
struct BallAssignment {
  int arity = 0;
  int radius = 0;
  std::vector<std::uint8_t> values;

  friend bool operator==(const BallAssignment&, const BallAssignment&) = default;
};

/// Validates the shape (value count = |B_r|, 0/1 entries).
BallAssignment make_ball_assignment(int n, int r, std::vector<std::uint8_t> values);

BallAssignment restrict_to_ball(const BooleanFunction& f, int r);

/// The unique f with deg f <= r and f|B_r = a. Points of weight r+1..n are
/// filled in weight order with f(y) = ⊕_{x ⊊ y} f(x), which forces the ANF
/// coefficient at y to zero.
BooleanFunction reconstruct_from_ball(const BallAssignment& a);

/// {"n": n, "r": r, "values": [...]}
BallAssignment parse_ball_assignment(std::string_view json_text);
std::string format_ball_assignment(const BallAssignment& a);

/// W_f = W_g on Γ(gamma).
bool lemma1_premise(const BooleanFunction& f, const BooleanFunction& g, const FaceMask& gamma);

/// Equal coset sums of f and g on every coset of Γ(gamma)^⊥.
bool lemma1_conclusion(const BooleanFunction& f, const BooleanFunction& g, const FaceMask& gamma);

struct Lemma1Report {
  bool premise = false;
  bool conclusion = false;
  bool holds() const { return !premise || conclusion; }
};

Lemma1Report check_lemma1(const BooleanFunction& f, const BooleanFunction& g, const FaceMask& gamma);

}  // namespace bentkit
