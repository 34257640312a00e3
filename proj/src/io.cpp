#include "zonoforge/io.hpp"

#include <fstream>
#include <sstream>

namespace zonoforge {

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(item);
  if (!s.empty() && s.back() == ',') out.emplace_back();
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json to_json(const Rat& r) { return r.str(); }

json to_json(const MPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"num", c.num_str()}, {"den", c.den_str()}});
  return {{"nvars", p.nvars()}, {"terms", terms}};
}

MPoly poly_from_json(const json& j) {
  try {
    const auto nvars = field(j, "nvars").get<std::size_t>();
    MPoly p(nvars);
    for (const auto& t : field(j, "terms")) {
      const auto e = field(t, "exp").get<Exponent>();
      if (e.size() != nvars) throw ParseError("exponent length does not match nvars");
      p.add_term(e, Rat::from_parts(field(t, "num").get<std::string>(), field(t, "den").get<std::string>()));
    }
    return p;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json to_json(const TuttePoly& t, std::size_t n) {
  json terms = json::array();
  for (const auto& [st, c] : t.coeffs) terms.push_back({{"s", st.first}, {"t", st.second}, {"c", c}});
  return {{"n", n}, {"terms", terms}};
}

json parking_json(std::size_t n, const std::string& cls, const std::vector<Exponent>& functions) {
  return {{"n", n}, {"class", cls}, {"functions", functions}};
}

json to_json(const GradedComponent& c) {
  json basis = json::array();
  for (const auto& b : c.basis) basis.push_back(to_json(b));
  return {{"degree", c.degree}, {"dim", c.dim()}, {"basis", basis}};
}

json to_json(const RootedTree& t) { return {{"n", t.n()}, {"parent", t.parents()}}; }

RootedTree tree_from_json(const json& j) {
  try {
    const auto parent = field(j, "parent").get<std::vector<std::size_t>>();
    if (j.contains("n") && j.at("n").get<std::size_t>() != parent.size())
      throw ParseError("\"n\" does not match the length of \"parent\"");
    return RootedTree(parent);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

RootedTree read_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return tree_from_json(j);
}

json to_json(const Orientation& k) { return {{"k", k.values()}}; }

Orientation orientation_from_json(const json& j) {
  try {
    return Orientation(field(j, "k").get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string sense_str(Sense s) { return s == Sense::leq ? "<=" : ">="; }

json chamber_json(const Chamber& c) {
  json rows = json::array();
  for (const auto& r : c.rows) rows.push_back({{"vars", r.vars}, {"sense", sense_str(r.sense)}});
  return {{"tree", to_json(c.tree)},
          {"k", c.k.values()},
          {"rows", rows},
          {"ref", ref_monomial(c.tree, c.k)},
          {"q", to_json(q_tk(c.tree, c.k))}};
}

json to_json(const PartitionReport& r) {
  return {{"partition_ok", r.partition_ok()},
          {"sum_identity_ok", r.sum_identity_ok},
          {"disjoint_ok", r.disjoint_ok},
          {"cover_ok", r.cover_ok},
          {"sampling_ok", r.sampling_ok},
          {"union_size", r.union_size},
          {"sampled", r.sampled},
          {"interior_hits", r.interior_hits},
          {"boundary_hits", r.boundary_hits},
          {"witness", r.witness}};
}

std::vector<Rat> parse_rational_list(const std::string& s) {
  std::vector<Rat> out;
  for (const auto& item : split_commas(s)) {
    try {
      out.push_back(Rat::parse(item));
    } catch (const std::exception&) {
      throw ParseError("not a rational: \"" + item + "\"");
    }
  }
  if (out.empty()) throw ParseError("empty list");
  return out;
}

std::vector<long> parse_int_list(const std::string& s) {
  std::vector<long> out;
  for (const auto& item : split_commas(s)) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw ParseError("not an integer: \"" + item + "\"");
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty list");
  return out;
}

}  // namespace zonoforge
