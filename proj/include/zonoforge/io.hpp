#pragma once

#include "zonoforge/activity.hpp"
#include "zonoforge/graphs.hpp"
#include "zonoforge/qpoly.hpp"
#include "zonoforge/spaces.hpp"
#include "zonoforge/volumes.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace zonoforge {

using json = nlohmann::ordered_json;

/// Malformed serialized input.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

json to_json(const Rat& r);
json to_json(const MPoly& p);
MPoly poly_from_json(const json& j);

json to_json(const TuttePoly& t, std::size_t n);
json parking_json(std::size_t n, const std::string& cls, const std::vector<Exponent>& functions);
json to_json(const GradedComponent& c);

json to_json(const RootedTree& t);
RootedTree tree_from_json(const json& j);
RootedTree read_tree_file(const std::string& path);

json to_json(const Orientation& k);
Orientation orientation_from_json(const json& j);

std::string sense_str(Sense s);
json chamber_json(const Chamber& c);
json to_json(const PartitionReport& r);

/// "1,1/2,3" -> rationals.
std::vector<Rat> parse_rational_list(const std::string& s);
/// "1,-1,1" -> integers.
std::vector<long> parse_int_list(const std::string& s);

}  // namespace zonoforge
