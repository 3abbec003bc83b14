#include <bentkit/reconstruct.hpp>

#include <bentkit/transforms.hpp>

#include <json.hpp>

#include <stdexcept>

namespace bentkit {

BallAssignment make_ball_assignment(int n, int r, std::vector<std::uint8_t> values) {
  check_arity(n);
  if (r < 0 || r > n) throw DomainError("ball radius must be in [0, n]");
  const std::uint64_t expected = degree_space_log2(n, r);
  if (values.size() != expected) {
    throw DomainError("ball assignment for n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                      " needs " + std::to_string(expected) + " values, got " +
                      std::to_string(values.size()));
  }
  for (auto v : values) {
    if (v > 1) throw DomainError("ball assignment values must be 0 or 1");
  }
  return BallAssignment{n, r, std::move(values)};
}

BallAssignment restrict_to_ball(const BooleanFunction& f, int r) {
  const Ball ball = ball_points(f.arity(), r);
  BallAssignment a{f.arity(), r, {}};
  a.values.reserve(ball.members.size());
  for (auto x : ball.members) a.values.push_back(f.bit(x) ? 1 : 0);
  return a;
}

BooleanFunction reconstruct_from_ball(const BallAssignment& a) {
  const BallAssignment checked = make_ball_assignment(a.arity, a.radius, a.values);
  const int n = checked.arity;
  const Ball ball = ball_points(n, checked.radius);
  BooleanFunction f(n);
  for (std::size_t i = 0; i < ball.members.size(); ++i) {
    if (checked.values[i]) f.set_bit(ball.members[i], true);
  }
  for (int w = checked.radius + 1; w <= n; ++w) {
    for (std::uint64_t y = 0; y < f.size(); ++y) {
      if (popcount(y) != w) continue;
      bool acc = false;
      for_each_submask(y, [&](std::uint64_t x) {
        if (x != y) acc ^= f.bit(x);
      });
      f.set_bit(y, acc);
    }
  }
  if (degree(f) > checked.radius || restrict_to_ball(f, checked.radius) != checked) {
    throw std::logic_error("reconstruct_from_ball: postcondition violated");
  }
  return f;
}

BallAssignment parse_ball_assignment(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("ball assignment: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("r") || !doc.contains("values") ||
      !doc["n"].is_number_integer() || !doc["r"].is_number_integer() || !doc["values"].is_array()) {
    throw ParseError(R"(ball assignment must be {"n": int, "r": int, "values": [bits]})");
  }
  std::vector<std::uint8_t> values;
  for (const auto& v : doc["values"]) {
    if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1)) {
      throw ParseError("ball assignment values must be 0 or 1");
    }
    values.push_back(static_cast<std::uint8_t>(v.get<int>()));
  }
  return make_ball_assignment(doc["n"].get<int>(), doc["r"].get<int>(), std::move(values));
}

std::string format_ball_assignment(const BallAssignment& a) {
  nlohmann::json doc = {{"n", a.arity}, {"r", a.radius}, {"values", a.values}};
  return doc.dump();
}

bool lemma1_premise(const BooleanFunction& f, const BooleanFunction& g, const FaceMask& gamma) {
  if (f.arity() != g.arity() || f.arity() != gamma.arity()) {
    throw DomainError("lemma1_premise: arity mismatch");
  }
  const WalshSpectrum wf = walsh_fast(f);
  const WalshSpectrum wg = walsh_fast(g);
  bool equal = true;
  for_each_submask(gamma.mask(), [&](std::uint64_t y) { equal = equal && wf.values[y] == wg.values[y]; });
  return equal;
}

bool lemma1_conclusion(const BooleanFunction& f, const BooleanFunction& g, const FaceMask& gamma) {
  if (f.arity() != g.arity() || f.arity() != gamma.arity()) {
    throw DomainError("lemma1_conclusion: arity mismatch");
  }
  const FaceMask perp = dual_face(gamma);
  return coset_spectrum(f, perp) == coset_spectrum(g, perp);
}

Lemma1Report check_lemma1(const BooleanFunction& f, const BooleanFunction& g, const FaceMask& gamma) {
  return Lemma1Report{lemma1_premise(f, g, gamma), lemma1_conclusion(f, g, gamma)};
}

}  // namespace bentkit
