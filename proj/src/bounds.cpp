#include <bentkit/bounds.hpp>

#include <bentkit/bent.hpp>
#include <bentkit/errors.hpp>
#include <bentkit/geometry.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace bentkit {
namespace {

void require_even(int n, int minimum, const char* what) {
  if (n % 2 != 0 || n < minimum || n > kBoundsMaxArity) {
    throw DomainError(std::string(what) + ": n must be even in [" + std::to_string(minimum) + ", " +
                      std::to_string(kBoundsMaxArity) + "], got " + std::to_string(n));
  }
}

BigInt pow2(int e) { return BigInt(1) << e; }

double to_double(const BigInt& x) { return x.convert_to<double>(); }

nlohmann::json big_json(const BigInt& x) {
  if (x <= std::numeric_limits<std::uint64_t>::max()) return x.convert_to<std::uint64_t>();
  return x.str();
}

}  // namespace

BigInt trivial_upper_log2(int n) {
  require_even(n, 2, "trivial_upper_log2");
  return pow2(n - 1) + binomial(n, n / 2) / 2;
}

BigInt tokareva_lower_log2(int n) {
  require_even(n, 2, "tokareva_lower_log2");
  return pow2(n - 2) + binomial(n, n / 2) / 2;
}

BigInt t_n_log2(int n) {
  require_even(n, 4, "t_n_log2");
  BigInt sum = 0;
  for (int i = 0; i <= n / 2; ++i) sum += binomial(n - 2, i);
  return sum;
}

BigInt q_n(int n) {
  require_even(n, 4, "q_n");
  if (n <= 62) {
    const FaceMask perp(n, std::uint64_t{3} << (n - 2));
    return BigInt(covering_coset_count(n, n / 2, perp));
  }
  BigInt sum = 0;
  for (int k = 0; k <= n / 2; ++k) sum += binomial(n - 2, k);
  return sum;
}

BigInt simplified_log2(int n) {
  require_even(n, 4, "simplified_log2");
  return 3 * pow2(n - 3);
}

double a_n_log2(int n) { return affine_group_size_log2(n); }

double theorem_upper_log2(int n) {
  require_even(n, 4, "theorem_upper_log2");
  const double q = to_double(q_n(n));
  return a_n_log2(n) + to_double(t_n_log2(n)) + q + (3.0 * q / 8.0) * std::log2(6.0);
}

double headline_log2(int n) {
  require_even(n, 6, "headline_log2");
  return 3.0 * std::ldexp(1.0, n - 6) * std::log2(6.0) + std::ldexp(1.0, n - 2);
}

std::vector<KnownCount> parse_known_counts(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("known counts: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("known counts must be a JSON array");
  std::vector<KnownCount> out;
  for (const auto& entry : doc) {
    if (!entry.is_object() || !entry.contains("n") || !entry["n"].is_number_integer() ||
        !entry.contains("count") || !entry["count"].is_string() || !entry.contains("source") ||
        !entry["source"].is_string()) {
      throw ParseError(R"(known count entries need {"n": int, "count": "decimal", "source": string})");
    }
    KnownCount k;
    k.n = entry["n"].get<int>();
    k.count = parse_decimal(entry["count"].get<std::string>());
    if (k.count <= 0) throw ParseError("known count must be positive");
    k.source = entry["source"].get<std::string>();
    k.provenance = "external";
    out.push_back(std::move(k));
  }
  return out;
}

BoundReport bound_report(int n, std::span<const KnownCount> known) {
  require_even(n, 2, "bound_report");
  BoundReport r;
  r.arity = n;
  r.trivial_upper_log2 = trivial_upper_log2(n);
  r.tokareva_lower_log2 = tokareva_lower_log2(n);
  r.a_n_log2 = a_n_log2(n);
  if (n >= 4) {
    r.t_n_log2 = t_n_log2(n);
    r.q_n = q_n(n);
    r.simplified_log2 = simplified_log2(n);
    r.theorem_upper_log2 = theorem_upper_log2(n);
    r.theorem_exceeds_trivial = *r.theorem_upper_log2 > to_double(r.trivial_upper_log2);
  }
  if (n >= 6) r.headline_log2 = headline_log2(n);

  for (const auto& k : known) {
    if (k.n != n) continue;
    r.known_count = k.count;
    r.known_count_log2 = log2_big(k.count);
    r.known_source = k.source;
    r.known_provenance = k.provenance;
    break;
  }
  if (r.known_count_log2) {
    const double known_log = *r.known_count_log2;
    auto flag = [&](const char* name, double value) {
      if (value < known_log) r.asymptotic_only.emplace_back(name);
    };
    flag("trivial_upper_log2", to_double(r.trivial_upper_log2));
    if (r.simplified_log2) flag("simplified_log2", to_double(*r.simplified_log2));
    if (r.theorem_upper_log2) flag("theorem_upper_log2", *r.theorem_upper_log2);
    if (r.headline_log2) flag("headline_log2", *r.headline_log2);
    r.lower_bound_exceeds_known = to_double(r.tokareva_lower_log2) > known_log;
  }
  return r;
}

std::string report_to_json(const BoundReport& r) {
  nlohmann::json doc;
  doc["n"] = r.arity;
  doc["exact"] = {{"trivial_upper_log2", big_json(r.trivial_upper_log2)},
                  {"tokareva_lower_log2", big_json(r.tokareva_lower_log2)}};
  if (r.t_n_log2) doc["exact"]["t_n_log2"] = big_json(*r.t_n_log2);
  if (r.q_n) doc["exact"]["q_n"] = big_json(*r.q_n);
  if (r.simplified_log2) doc["exact"]["simplified_log2"] = big_json(*r.simplified_log2);
  doc["real"] = {{"a_n_log2", r.a_n_log2}};
  if (r.theorem_upper_log2) doc["real"]["theorem_upper_log2"] = *r.theorem_upper_log2;
  if (r.headline_log2) doc["real"]["headline_log2"] = *r.headline_log2;
  if (r.known_count) {
    doc["known"] = {{"count", r.known_count->str()},
                    {"log2", *r.known_count_log2},
                    {"source", r.known_source},
                    {"provenance", r.known_provenance}};
  }
  doc["flags"] = {{"asymptotic_only", r.asymptotic_only},
                  {"lower_bound_exceeds_known", r.lower_bound_exceeds_known},
                  {"theorem_exceeds_trivial", r.theorem_exceeds_trivial}};
  return doc.dump();
}

std::string report_to_table(const BoundReport& r) {
  std::ostringstream out;
  char line[128];
  auto row = [&](const char* name, const std::string& value) {
    std::snprintf(line, sizeof line, "  %-22s %s\n", name, value.c_str());
    out << line;
  };
  auto real = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return std::string(buf);
  };
  out << "bounds for n = " << r.arity << " (log2 scale)\n";
  row("trivial_upper", r.trivial_upper_log2.str());
  row("tokareva_lower", r.tokareva_lower_log2.str());
  row("a_n", real(r.a_n_log2));
  if (r.t_n_log2) row("T_n", r.t_n_log2->str());
  if (r.q_n) row("Q_n", r.q_n->str());
  if (r.theorem_upper_log2) row("theorem_upper", real(*r.theorem_upper_log2));
  if (r.headline_log2) row("headline", real(*r.headline_log2));
  if (r.simplified_log2) row("3*2^(n-3)", r.simplified_log2->str());
  if (r.known_count_log2) {
    row("known_count", real(*r.known_count_log2) + "  [" + r.known_provenance + ": " +
                           r.known_source + "]");
  }
  for (const auto& name : r.asymptotic_only) row("asymptotic-only", name);
  if (r.theorem_exceeds_trivial) row("note", "theorem bound weaker than trivial bound at this n");
  return out.str();
}

}  // namespace bentkit
