// bentkit: command-line front end. One JSON document on stdout per
// successful run, diagnostics on stderr.
//
// Exit codes: 0 ok, 1 usage, 2 domain/input error, 3 verification failure,
// 4 resource cap.

#include <bentkit/bent.hpp>
#include <bentkit/bf_core.hpp>
#include <bentkit/bounds.hpp>
#include <bentkit/census.hpp>
#include <bentkit/geometry.hpp>
#include <bentkit/reconstruct.hpp>
#include <bentkit/transforms.hpp>
#include <bentkit/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using json = nlohmann::json;
using namespace bentkit;

enum ExitCode { kOk = 0, kUsage = 1, kDomain = 2, kVerifyFailed = 3, kResource = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "bf:..." literal or "@file" holding one.
BooleanFunction load_function(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::string text = read_file(arg.substr(1));
    const auto end = text.find_last_not_of(" \t\r\n");
    text.erase(end == std::string::npos ? 0 : end + 1);
    const auto begin = text.find_first_not_of(" \t\r\n");
    return parse_bf(begin == std::string::npos ? "" : std::string_view(text).substr(begin));
  }
  return parse_bf(arg);
}

std::uint64_t parse_mask(const std::string& text) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw ParseError("invalid mask '" + text + "'");
  return v;
}

std::string hex(std::uint64_t v) {
  std::ostringstream ss;
  ss << "0x" << std::hex << v;
  return ss.str();
}

void emit(const json& doc) { std::cout << doc.dump() << '\n'; }

json census_json(const CensusResult& r) {
  return {{"n", r.arity},
          {"method", to_string(r.method)},
          {"candidates", r.candidates},
          {"count", r.count},
          {"elapsed_ms", std::chrono::duration<double, std::milli>(r.elapsed).count()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bentkit: bent function analysis toolkit"};
  app.require_subcommand(1);
  int code = kOk;

  std::string f_arg;
  std::string g_text;

  auto* wht = app.add_subcommand("wht", "Walsh-Hadamard spectrum");
  bool naive = false;
  wht->add_option("--f", f_arg, "bf:<n>:<hex> or @file")->required();
  wht->add_flag("--naive", naive, "use the O(4^n) direct sum");
  wht->callback([&] {
    const auto f = load_function(f_arg);
    const WalshSpectrum w = naive ? walsh_naive(f) : walsh_fast(f);
    emit({{"n", w.arity}, {"values", w.values}});
  });

  auto* anf = app.add_subcommand("anf", "Moebius transform (ANF coefficient table)");
  anf->add_option("--f", f_arg)->required();
  anf->callback([&] {
    const auto m = moebius(load_function(f_arg));
    std::vector<int> values(m.size());
    for (std::uint64_t i = 0; i < m.size(); ++i) values[i] = m.bit(i);
    emit({{"n", m.arity()}, {"values", values}});
  });

  auto* deg = app.add_subcommand("degree", "algebraic degree");
  deg->add_option("--f", f_arg)->required();
  deg->callback([&] {
    const auto f = load_function(f_arg);
    emit({{"n", f.arity()}, {"degree", degree(f)}});
  });

  auto* bent = app.add_subcommand("bent", "bent-function analysis");
  bent->require_subcommand(1);
  auto* bent_test = bent->add_subcommand("test", "is the function bent");
  bent_test->add_option("--f", f_arg)->required();
  bent_test->callback([&] {
    const auto f = load_function(f_arg);
    emit({{"n", f.arity()}, {"f", format_bf(f)}, {"bent", is_bent(f)}});
  });
  auto* bent_dual = bent->add_subcommand("dual", "dual bent function");
  bent_dual->add_option("--f", f_arg)->required();
  bent_dual->callback([&] {
    const auto f = load_function(f_arg);
    emit({{"n", f.arity()}, {"f", format_bf(f)}, {"dual", format_bf(dual_bent(f))}});
  });
  auto* bent_flats = bent->add_subcommand("flats", "coset sums over all 2-dimensional affine flats");
  bent_flats->add_option("--f", f_arg)->required();
  bent_flats->callback([&] {
    const auto f = load_function(f_arg);
    const FlatSumDistribution d = two_flat_sum_distribution(f);
    json counts = json::object();
    for (const auto& [sum, c] : d.counts) counts[std::to_string(sum)] = c;
    const double pm2 = static_cast<double>(d.count(-2) + d.count(2)) / static_cast<double>(d.total());
    emit({{"n", d.arity}, {"total", d.total()}, {"counts", counts}, {"pm2_proportion", pm2}});
  });
  auto* bent_affine = bent->add_subcommand("affine", "apply a seeded random invertible affine map");
  std::uint64_t seed = 1;
  bent_affine->add_option("--f", f_arg)->required();
  bent_affine->add_option("--seed", seed, "map seed")->capture_default_str();
  bent_affine->callback([&] {
    const auto f = load_function(f_arg);
    const AffineMap t = random_invertible(f.arity(), seed);
    const auto g = apply_affine(f, t);
    std::vector<std::string> rows;
    for (auto r : t.rows) rows.push_back(hex(r));
    emit({{"n", f.arity()},
          {"seed", seed},
          {"map", {{"rows", rows}, {"translation", hex(t.translation)},
                   {"functional", hex(t.functional)}, {"constant", t.constant ? 1 : 0}}},
          {"f", format_bf(f)},
          {"image", format_bf(g)},
          {"bent_input", is_bent(f)},
          {"bent_image", is_bent(g)}});
  });

  auto* coset = app.add_subcommand("coset-spectrum", "sums of (-1)^f over the cosets of a face");
  std::string mask_text;
  coset->add_option("--f", f_arg)->required();
  coset->add_option("--mask", mask_text, "free coordinates, e.g. 0xC")->required();
  coset->callback([&] {
    const auto f = load_function(f_arg);
    const FaceMask m(f.arity(), parse_mask(mask_text));
    json cosets = json::array();
    for (const auto& c : coset_spectrum(f, m)) cosets.push_back({{"rep", c.representative}, {"sum", c.sum}});
    emit({{"n", f.arity()}, {"mask", hex(m.mask())}, {"dimension", m.dimension()}, {"cosets", cosets}});
  });

  auto* recon = app.add_subcommand("reconstruct", "rebuild a degree<=r function from its ball values");
  std::string ball_arg;
  recon->add_option("--ball", ball_arg, "@file or inline JSON {\"n\",\"r\",\"values\"}")->required();
  recon->callback([&] {
    const std::string text = (!ball_arg.empty() && ball_arg[0] == '@') ? read_file(ball_arg.substr(1)) : ball_arg;
    const BallAssignment a = parse_ball_assignment(text);
    const auto f = reconstruct_from_ball(a);
    emit({{"n", a.arity}, {"r", a.radius}, {"f", format_bf(f)}, {"degree", degree(f)}});
  });

  auto* census = app.add_subcommand("census", "count bent functions exhaustively");
  int census_n = 0;
  std::string method = "degree";
  unsigned jobs = 1;
  std::string emit_path;
  census->add_option("--n", census_n)->required();
  census->add_option("--method", method, "naive | degree | both")->capture_default_str();
  census->add_option("--jobs", jobs, "shards")->capture_default_str()->check(CLI::PositiveNumber);
  census->add_option("--emit", emit_path, "write bf:<n>:<hex> lines, ascending");
  census->callback([&] {
    const bool collect = !emit_path.empty();
    const CensusOptions options{jobs, collect};
    json doc;
    std::vector<BooleanFunction> functions;
    if (method == "both") {
      check_census_feasible(census_n, CensusMethod::naive);
      check_census_feasible(census_n, CensusMethod::degree_restricted);
      auto a = enumerate_bent_naive(census_n, options);
      auto b = enumerate_bent_by_degree(census_n, options);
      doc = {{"n", census_n}, {"naive", census_json(a)}, {"degree", census_json(b)},
             {"count", a.count}, {"agree", a.count == b.count && a.functions == b.functions}};
      functions = std::move(a.functions);
    } else {
      const CensusMethod m = parse_census_method(method);
      auto r = m == CensusMethod::naive ? enumerate_bent_naive(census_n, options)
                                        : enumerate_bent_by_degree(census_n, options);
      doc = census_json(r);
      functions = std::move(r.functions);
    }
    if (collect) {
      std::ofstream out(emit_path);
      if (!out) throw ParseError("cannot write '" + emit_path + "'");
      for (const auto& f : functions) out << format_bf(f) << '\n';
      doc["emitted"] = emit_path;
    }
    emit(doc);
  });

  auto* bounds = app.add_subcommand("bounds", "exact bound quantities for even n");
  int bounds_n = 0;
  std::string known_path;
  bool with_census = false;
  bounds->add_option("--n", bounds_n)->required();
  bounds->add_option("--known", known_path, "counts.json: [{n, count, source}]");
  bounds->add_flag("--census", with_census, "use the exhaustive census count when n <= 4");
  bounds->callback([&] {
    std::vector<KnownCount> known;
    if (!known_path.empty()) known = parse_known_counts(read_file(known_path));
    if (with_census && bounds_n % 2 == 0 && bounds_n >= 2 && bounds_n <= kNaiveCensusMaxArity) {
      known.insert(known.begin(), KnownCount{bounds_n, BigInt(bent_count(bounds_n, CensusMethod::degree_restricted)),
                                             "exhaustive census", "census"});
    }
    const BoundReport r = bound_report(bounds_n, known);
    std::cerr << report_to_table(r);
    std::cout << report_to_json(r) << '\n';
  });

  auto* verify = app.add_subcommand("verify", "run a self-check suite");
  std::string suite;
  SuiteOptions suite_options;
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember(
      std::vector<std::string>(suite_names().begin(), suite_names().end())));
  verify->add_option("--n", suite_options.n, "arity (suite default if omitted)");
  verify->add_option("--samples", suite_options.samples)->capture_default_str();
  verify->add_option("--seed", suite_options.seed)->capture_default_str();
  verify->add_option("--jobs", suite_options.jobs)->capture_default_str()->check(CLI::PositiveNumber);
  verify->callback([&] {
    const SuiteResult r = run_suite(suite, suite_options);
    std::cout << suite_to_json(r) << '\n';
    if (!r.passed()) {
      std::cerr << "counterexample: " << r.first_failure << '\n';
      code = kVerifyFailed;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kResource;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  }
  return code;
}
