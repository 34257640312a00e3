#include "cli.hpp"

#include "zonoforge/activity.hpp"
#include "zonoforge/io.hpp"
#include "zonoforge/linalg.hpp"
#include "zonoforge/parking.hpp"
#include "zonoforge/rng.hpp"
#include "zonoforge/spaces.hpp"
#include "zonoforge/volumes.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

namespace zonoforge::cli {

namespace {

enum class Format { json, table };

struct RunConfig {
  std::string tree_file;
  std::size_t n = 0;
  std::string k;
  std::string t;
  std::string s;
  std::string x;
  std::string y;
  std::string cls = "all";
  std::string kind = "central";
  std::string checks = "partition,dspace,parking,mc";
  bool internal = false;
  std::uint64_t samples = 100000;
  std::uint64_t partition_samples = 200;
  std::uint64_t seed = 42;
  double sigma = 3.0;
  Format format = Format::json;
};

/// Raised by a command whose own consistency check failed; carries the report to print.
struct VerificationFailure {
  json report;
  std::string message;
};

void require_range(const char* what, std::size_t v, std::size_t lo, std::size_t hi) {
  if (v < lo || v > hi)
    throw ParseError(std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

std::string exp_str(const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
  return out;
}

json rat_list(const std::vector<Rat>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

std::vector<Rat> params_or_ones(const std::string& text, std::size_t n) {
  if (text.empty()) return std::vector<Rat>(n, Rat(1));
  auto t = parse_rational_list(text);
  if (t.size() != n) throw ParseError("--t needs " + std::to_string(n) + " values");
  for (const auto& v : t)
    if (v.sign() <= 0) throw ParseError("--t values must be positive");
  return t;
}

std::set<Exponent> support_set(const MPoly& p) {
  const auto s = support(p);
  return {s.begin(), s.end()};
}

void emit(std::ostream& out, const RunConfig& cfg, const json& j, const std::string& table) {
  if (cfg.format == Format::json)
    out << j.dump(2) << "\n";
  else
    out << table;
}

// ---- bw ----

void bw_tutte(const RunConfig& cfg, std::ostream& out) {
  require_range("--n", cfg.n, 1, kMaxBasisColumns / 2);
  const auto g = broken_wheel(cfg.n);
  const auto t = tutte(edge_matrix(g));
  const json j = to_json(t, cfg.n);
  if (mpz_class(static_cast<long>(t.eval(1, 1))) != spanning_tree_count(g))
    throw VerificationFailure{j, "T(1,1) differs from the spanning-tree count"};
  std::ostringstream tab;
  tab << "s\tt\tc\n";
  for (const auto& [st, c] : t.coeffs) tab << st.first << "\t" << st.second << "\t" << c << "\n";
  emit(out, cfg, j, tab.str());
}

void bw_parking(const RunConfig& cfg, std::ostream& out) {
  require_range("--n", cfg.n, 1, kMaxParkingVertices - 1);
  const auto g = broken_wheel(cfg.n);
  std::vector<Exponent> fs;
  MPoly reference(cfg.n);
  if (cfg.cls == "all") {
    fs = exponents(enumerate_parking(g, 0));
    reference = bw_p1(cfg.n);
  } else if (cfg.cls == "maximal") {
    fs = exponents(maximal_parking(g, 0));
    reference = bw_p0(cfg.n);
  } else if (cfg.cls == "internal") {
    for (const auto& s : exponents(enumerate_parking(g, 0)))
      if (bw_internal_parking(cfg.n, s)) fs.push_back(s);
    reference = bw_pminus(cfg.n);
  } else {
    throw ParseError("--class must be all, internal or maximal");
  }
  std::sort(fs.begin(), fs.end());
  const json j = parking_json(cfg.n, cfg.cls, fs);
  if (std::set<Exponent>(fs.begin(), fs.end()) != support_set(reference))
    throw VerificationFailure{j, "parking set differs from the product-polynomial support"};
  std::ostringstream tab;
  for (const auto& s : fs) tab << exp_str(s) << "\n";
  emit(out, cfg, j, tab.str());
}

void bw_hilbert(const RunConfig& cfg, std::ostream& out) {
  require_range("--n", cfg.n, 1, 5);
  SpaceKind kind;
  if (cfg.kind == "central")
    kind = SpaceKind::central;
  else if (cfg.kind == "internal")
    kind = SpaceKind::internal;
  else
    throw ParseError("--kind must be central or internal");
  const auto x = edge_matrix(broken_wheel(cfg.n));
  const auto dims = hilbert_series(x, kind);
  const auto activity = kind == SpaceKind::central ? hilbert_from_bases(x) : internal_hilbert_from_bases(x);
  const json j = {{"n", cfg.n}, {"kind", cfg.kind}, {"dims", dims}, {"activity", activity}};
  if (dims != activity) throw VerificationFailure{j, "graded dimensions differ from the activity histogram"};
  std::ostringstream tab;
  tab << "j\tdim\n";
  for (std::size_t d = 0; d < dims.size(); ++d) tab << d << "\t" << dims[d] << "\n";
  emit(out, cfg, j, tab.str());
}

void bw_qn(const RunConfig& cfg, std::ostream& out) {
  require_range("--n", cfg.n, 1, kMaxVolumeN);
  const auto q = stanley_pitman_q(cfg.n);
  emit(out, cfg, to_json(q), q.str() + "\n");
}

void bw_monic(const RunConfig& cfg, std::ostream& out) {
  require_range("--n", cfg.n, 1, 5);
  if (cfg.s.empty()) throw ParseError("--s is required");
  Exponent s;
  for (long v : parse_int_list(cfg.s)) {
    if (v < 0) throw ParseError("--s entries must be nonnegative");
    s.push_back(static_cast<unsigned>(v));
  }
  if (s.size() != cfg.n) throw ParseError("--s needs " + std::to_string(cfg.n) + " entries");
  const auto g = broken_wheel(cfg.n);
  std::vector<Exponent> park;
  for (const auto& p : exponents(enumerate_parking(g, 0)))
    if (!cfg.internal || bw_internal_parking(cfg.n, p)) park.push_back(p);
  if (std::find(park.begin(), park.end(), s) == park.end())
    throw ParseError("--s is not a" + std::string(cfg.internal ? "n internal" : "") + " parking function of BW_" +
                     std::to_string(cfg.n));
  const auto m = monic_basis(edge_matrix(g), park, cfg.internal).at(s);
  const json j = {{"n", cfg.n}, {"s", s}, {"internal", cfg.internal}, {"polynomial", to_json(m)}};
  emit(out, cfg, j, m.str() + "\n");
}

// ---- gbw ----

void gbw_subdivide(const RunConfig& cfg, std::ostream& out) {
  const auto tree = read_tree_file(cfg.tree_file);
  require_range("tree size", tree.n(), 1, 8);
  const auto t = params_or_ones(cfg.t, tree.n());
  json chambers = json::array();
  std::ostringstream tab;
  tab << "k\tref\tterms\tvolume\n";
  for (const auto& k : enumerate_orientations(tree.n())) {
    const auto c = chamber(tree, k);
    json rec = chamber_json(c);
    const Rat vol = eval(q_tk(tree, k), t);
    rec["volume"] = vol.str();
    chambers.push_back(rec);
    std::string ks;
    for (int v : k.values()) ks += v > 0 ? '+' : '-';
    tab << ks << "\t" << exp_str(ref_monomial(tree, k)) << "\t" << q_tk(tree, k).size() << "\t" << vol.str() << "\n";
  }
  const auto rep = partition_check(tree, t, cfg.partition_samples, cfg.seed);
  json j = {{"tree", to_json(tree)},
            {"t", rat_list(t)},
            {"chambers", chambers},
            {"partition_ok", rep.partition_ok()},
            {"sum_identity_ok", rep.sum_identity_ok},
            {"report", to_json(rep)}};
  tab << "partition_ok\t" << rep.partition_ok() << "\nsum_identity_ok\t" << rep.sum_identity_ok << "\n";
  if (!rep.ok()) throw VerificationFailure{j, "subdivision check failed: " + rep.witness};
  emit(out, cfg, j, tab.str());
}

json check_dspace(const RootedTree& tree) {
  const auto ks = enumerate_orientations(tree.n());
  std::vector<MPoly> qs;
  for (const auto& k : ks) qs.push_back(q_tk(tree, k));
  std::string witness;
  for (const auto& k0 : ks) {
    const auto fam = cocircuit_ideal_ops(edge_matrix(gbw(tree, k0)));
    for (std::size_t a = 0; a < ks.size() && witness.empty(); ++a)
      if (!annihilates(fam, qs[a])) witness = "q for k index " + std::to_string(a) + " not in the cocircuit kernel";
  }
  const std::size_t rank = span_component(tree.n(), static_cast<unsigned>(tree.n()), qs).dim();
  if (witness.empty() && rank != ks.size()) witness = "chamber polynomials are linearly dependent";
  return {{"ok", witness.empty()}, {"rank", rank}, {"expected_rank", ks.size()}, {"witness", witness}};
}

json check_parking(const RootedTree& tree) {
  const auto ks = enumerate_orientations(tree.n());
  std::set<Exponent> refs;
  for (const auto& k : ks) refs.insert(ref_monomial(tree, k));
  const auto maximal = exponents(maximal_parking(gbw(tree, ks.front()), 0));
  const std::set<Exponent> mset(maximal.begin(), maximal.end());
  std::string witness;
  for (const auto& r : refs)
    if (!mset.count(r) && witness.empty()) witness = "reference exponent " + exp_str(r) + " is not maximal parking";
  for (const auto& m : mset)
    if (!refs.count(m) && witness.empty()) witness = "maximal parking " + exp_str(m) + " is not a reference exponent";
  return {{"ok", witness.empty()}, {"references", refs.size()}, {"maximal_parking", mset.size()}, {"witness", witness}};
}

json check_mc(const RootedTree& tree, const std::vector<Rat>& t, const RunConfig& cfg) {
  json records = json::array();
  std::string witness;
  for (const auto& k : enumerate_orientations(tree.n())) {
    const double exact = eval(q_tk(tree, k), t).to_double();
    const auto e = mc_volume(chamber_system(chamber(tree, k), t), cfg.samples, cfg.seed);
    const double z = e.stderr_ > 0 ? (e.estimate - exact) / e.stderr_ : (e.estimate == exact ? 0.0 : INFINITY);
    const bool ok = std::abs(z) <= cfg.sigma;
    if (!ok && witness.empty()) witness = "k " + json(k.values()).dump() + " off by " + std::to_string(z) + " sigma";
    records.push_back({{"k", k.values()},
                       {"exact", eval(q_tk(tree, k), t).str()},
                       {"estimate_float", e.estimate},
                       {"stderr_float", e.stderr_},
                       {"hits", e.hits},
                       {"samples", e.samples},
                       {"ok", ok}});
  }
  return {{"ok", witness.empty()},
          {"generator", CounterRng::kName},
          {"seed", cfg.seed},
          {"sigma", cfg.sigma},
          {"chambers", records},
          {"witness", witness}};
}

void gbw_verify(const RunConfig& cfg, std::ostream& out) {
  const auto tree = read_tree_file(cfg.tree_file);
  require_range("tree size", tree.n(), 1, 8);
  const auto t = params_or_ones(cfg.t, tree.n());
  std::vector<std::string> checks;
  {
    std::istringstream in(cfg.checks);
    std::string c;
    while (std::getline(in, c, ',')) {
      if (c != "partition" && c != "dspace" && c != "parking" && c != "mc") throw ParseError("unknown check \"" + c + "\"");
      if (std::find(checks.begin(), checks.end(), c) == checks.end()) checks.push_back(c);
    }
    if (checks.empty()) throw ParseError("--checks is empty");
  }
  for (const auto& c : checks) {
    if (c == "dspace" && tree.n() > 4) throw ParseError("dspace check supports trees with at most 4 vertices");
    if (c == "parking" && tree.n() > kMaxParkingVertices - 1)
      throw ParseError("parking check supports trees with at most 6 vertices");
    if (c == "mc" && tree.n() > 6) throw ParseError("mc check supports trees with at most 6 vertices");
  }
  json results = json::object();
  bool ok = true;
  std::string witness;
  for (const auto& c : checks) {
    json r;
    if (c == "partition") {
      const auto rep = partition_check(tree, t, cfg.partition_samples, cfg.seed);
      r = to_json(rep);
      r["ok"] = rep.ok();
    } else if (c == "dspace") {
      r = check_dspace(tree);
    } else if (c == "parking") {
      r = check_parking(tree);
    } else {
      r = check_mc(tree, t, cfg);
    }
    if (!r["ok"].get<bool>()) {
      ok = false;
      if (witness.empty()) witness = c + ": " + r["witness"].get<std::string>();
    }
    results[c] = r;
  }
  const json j = {{"tree", to_json(tree)}, {"t", rat_list(t)}, {"checks", results}, {"ok", ok}, {"witness", witness}};
  std::ostringstream tab;
  for (const auto& c : checks) tab << c << "\t" << (results[c]["ok"].get<bool>() ? "pass" : "FAIL") << "\n";
  if (!ok) {
    if (cfg.format == Format::table) throw VerificationFailure{json(tab.str()), witness};
    throw VerificationFailure{j, witness};
  }
  emit(out, cfg, j, tab.str());
}

// ---- assoc ----

void assoc_list(const RunConfig& cfg, std::ostream& out) {
  require_range("--n", cfg.n, 1, kMaxPlaneTrees);
  json rows = json::array();
  std::set<Exponent> ks;
  MPoly total(cfg.n);
  std::ostringstream tab;
  tab << "tree\tkT\tvolume\n";
  for (const auto& t : plane_binary_trees(cfg.n)) {
    const auto k = kT(t);
    const auto vol = normalized_monomial(k);
    ks.insert(k);
    total += vol;
    rows.push_back({{"tree", t.code()}, {"kT", k}, {"volume", to_json(vol)}});
    tab << t.code() << "\t" << exp_str(k) << "\t" << vol.str() << "\n";
  }
  const auto kn = composition_set(cfg.n).members;
  MPoly expected(cfg.n);
  for (const auto& k : kn) expected += normalized_monomial(k);
  const bool set_ok = ks == kn;
  const bool sum_ok = total == expected && total.reversed() == stanley_pitman_q(cfg.n);
  const json j = {{"n", cfg.n},       {"trees", rows},      {"sum", to_json(total)},
                  {"kT_set_ok", set_ok}, {"sum_ok", sum_ok}};
  if (!set_ok || !sum_ok) throw VerificationFailure{j, "kT data disagree with the composition set"};
  emit(out, cfg, j, tab.str());
}

void assoc_locate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.x.empty() || cfg.y.empty() || cfg.s.empty()) throw ParseError("--x, --y and --s are required");
  const auto x = parse_rational_list(cfg.x);
  const auto y = parse_rational_list(cfg.y);
  const auto ss = parse_rational_list(cfg.s);
  if (ss.size() != 1) throw ParseError("--s takes one rational");
  if (x.size() != y.size()) throw ParseError("--x and --y need equal lengths");
  require_range("length of --x", x.size(), 1, kMaxPlaneTrees);
  const auto w = phi_walk(x, y, ss[0]);
  const auto back = rewalk(w);
  const bool round_ok = back.x == x && back.y == y && back.s == ss[0];
  json internal = json::array();
  for (std::size_t v = 1; v <= w.shape.size(); ++v)
    internal.push_back(v == w.shape.root ? json(nullptr) : json(w.internal_length[v - 1].str()));
  const json j = {{"x", rat_list(x)},
                  {"y", rat_list(y)},
                  {"s", ss[0].str()},
                  {"tree", w.shape.code()},
                  {"kT", kT(w.shape)},
                  {"stem", w.stem.str()},
                  {"leaf_length", rat_list(w.leaf_length)},
                  {"internal_length", internal},
                  {"roundtrip_ok", round_ok}};
  if (!round_ok) throw VerificationFailure{j, "contour round trip failed"};
  emit(out, cfg, j, w.shape.code() + "\t" + exp_str(kT(w.shape)) + "\n");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact zonotopal algebra of broken wheel graphs", "zonoforge"};
  app.require_subcommand(1);
  const std::map<std::string, Format> formats{{"json", Format::json}, {"table", Format::table}};
  auto add_format = [&](CLI::App* a) {
    a->add_option("--format", cfg.format, "json or table")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* bw = app.add_subcommand("bw", "broken wheel computations");
  bw->require_subcommand(1);
  auto add_n = [&](CLI::App* a) { a->add_option("--n", cfg.n, "size")->required(); };
  auto* tutte_cmd = bw->add_subcommand("tutte", "Tutte polynomial from activities");
  add_n(tutte_cmd);
  add_format(tutte_cmd);
  auto* parking_cmd = bw->add_subcommand("parking", "parking functions");
  add_n(parking_cmd);
  parking_cmd->add_option("--class", cfg.cls, "all, internal or maximal");
  add_format(parking_cmd);
  auto* hilbert_cmd = bw->add_subcommand("hilbert", "graded dimensions");
  add_n(hilbert_cmd);
  hilbert_cmd->add_option("--kind", cfg.kind, "central or internal");
  add_format(hilbert_cmd);
  auto* qn_cmd = bw->add_subcommand("qn", "Stanley-Pitman volume polynomial");
  add_n(qn_cmd);
  add_format(qn_cmd);
  auto* monic_cmd = bw->add_subcommand("monic", "s-monic element of the D-space");
  add_n(monic_cmd);
  monic_cmd->add_option("--s", cfg.s, "parking function, comma separated")->required();
  monic_cmd->add_flag("--internal", cfg.internal, "use the internal space");
  add_format(monic_cmd);

  auto* gbw_cmd = app.add_subcommand("gbw", "generalized broken wheel and simplex subdivision");
  gbw_cmd->require_subcommand(1);
  auto add_tree = [&](CLI::App* a) {
    a->add_option("--tree", cfg.tree_file, "tree JSON file")->required();
    a->add_option("--t", cfg.t, "positive rationals, comma separated");
    a->add_option("--seed", cfg.seed, "generator seed");
    a->add_option("--partition-samples", cfg.partition_samples, "exact sample points for the partition check");
    add_format(a);
  };
  auto* subdivide_cmd = gbw_cmd->add_subcommand("subdivide", "chambers of the subdivision");
  add_tree(subdivide_cmd);
  auto* verify_cmd = gbw_cmd->add_subcommand("verify", "theorem checks for one tree");
  add_tree(verify_cmd);
  verify_cmd->add_option("--checks", cfg.checks, "subset of partition,dspace,parking,mc");
  verify_cmd->add_option("--samples", cfg.samples, "Monte Carlo samples");
  verify_cmd->add_option("--sigma", cfg.sigma, "Monte Carlo tolerance in standard errors");

  auto* assoc_cmd = app.add_subcommand("assoc", "plane binary trees and the contour walk");
  assoc_cmd->add_option("--n", cfg.n, "number of internal vertices");
  add_format(assoc_cmd);
  auto* locate_cmd = assoc_cmd->add_subcommand("locate", "chamber of a contour");
  locate_cmd->add_option("--x", cfg.x, "up steps")->required();
  locate_cmd->add_option("--y", cfg.y, "down steps")->required();
  locate_cmd->add_option("--s", cfg.s, "total length")->required();
  add_format(locate_cmd);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (tutte_cmd->parsed()) bw_tutte(cfg, out);
    else if (parking_cmd->parsed()) bw_parking(cfg, out);
    else if (hilbert_cmd->parsed()) bw_hilbert(cfg, out);
    else if (qn_cmd->parsed()) bw_qn(cfg, out);
    else if (monic_cmd->parsed()) bw_monic(cfg, out);
    else if (subdivide_cmd->parsed()) gbw_subdivide(cfg, out);
    else if (verify_cmd->parsed()) gbw_verify(cfg, out);
    else if (locate_cmd->parsed()) assoc_locate(cfg, out);
    else if (assoc_cmd->parsed()) {
      if (cfg.n == 0) throw ParseError("assoc needs --n or the locate subcommand");
      assoc_list(cfg, out);
    }
    return 0;
  } catch (const VerificationFailure& f) {
    if (f.report.is_string())
      out << f.report.get<std::string>();
    else if (!f.report.is_null())
      out << f.report.dump(2) << "\n";
    err << "verification failed: " << f.message << "\n";
    return 1;
  } catch (const DegenerateContour& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace zonoforge::cli
