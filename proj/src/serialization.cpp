#include "addcomp/serialization.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace addcomp {

using Json = nlohmann::ordered_json;

namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed JSON: ") + e.what());
  }
}

const Json& field(const Json& object, const char* name) {
  if (!object.is_object() || !object.contains(name)) {
    throw Error(ErrorKind::parse, std::string("missing field '") + name + "'");
  }
  return object.at(name);
}

BigInt decimal_field(const Json& value, const char* what) {
  if (!value.is_string()) {
    throw Error(ErrorKind::parse, std::string(what) + " must be a decimal string");
  }
  return parse_bigint(value.get<std::string>());
}

std::vector<BigInt> decimal_array(const Json& value, const char* what) {
  if (!value.is_array()) throw Error(ErrorKind::parse, std::string(what) + " must be an array");
  std::vector<BigInt> out;
  out.reserve(value.size());
  for (const auto& item : value) out.push_back(decimal_field(item, what));
  return out;
}

Json decimal_array(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

}  // namespace

std::string sequence_to_json(const Sequence& seq) {
  Json j;
  j["terms"] = decimal_array(seq.terms());
  j["growth_exponent"] = seq.growth_exponent();
  j["growth_factor_rule"] = std::string(growth_rule_name(seq.growth_rule()));
  return j.dump() + "\n";
}

Sequence sequence_from_json(std::string_view text) {
  Json j = parse_json(text);
  auto terms = decimal_array(field(j, "terms"), "terms");
  int exponent = 4;
  GrowthRule rule = GrowthRule::linear;
  if (j.contains("growth_exponent")) {
    const auto& e = j.at("growth_exponent");
    if (!e.is_number_integer()) throw Error(ErrorKind::parse, "growth_exponent must be an integer");
    exponent = e.get<int>();
  }
  if (j.contains("growth_factor_rule")) {
    const auto& r = j.at("growth_factor_rule");
    if (!r.is_string()) throw Error(ErrorKind::parse, "growth_factor_rule must be a string");
    rule = parse_growth_rule(r.get<std::string>());
  }
  return Sequence(std::move(terms), exponent, rule);
}

std::string blocks_to_json(const ComplementBlocks& blocks) {
  Json list = Json::array();
  for (const auto& b : blocks.blocks()) {
    Json item;
    item["k"] = b.k;
    item["a_k"] = to_decimal(b.a);
    item["U_k"] = decimal_array(b.translates);
    item["j_min"] = to_decimal(b.j_min);
    item["j_max"] = to_decimal(b.j_max);
    list.push_back(std::move(item));
  }
  Json j;
  j["blocks"] = std::move(list);
  return j.dump() + "\n";
}

ComplementBlocks blocks_from_json(std::string_view text) {
  Json j = parse_json(text);
  const Json& list = field(j, "blocks");
  if (!list.is_array()) throw Error(ErrorKind::parse, "blocks must be an array");
  std::vector<Block> blocks;
  for (const auto& item : list) {
    const Json& k = field(item, "k");
    if (!k.is_number_unsigned()) throw Error(ErrorKind::parse, "block index k must be a positive integer");
    Block b;
    b.k = k.get<std::size_t>();
    b.a = decimal_field(field(item, "a_k"), "a_k");
    b.translates = decimal_array(field(item, "U_k"), "U_k");
    b.j_min = decimal_field(field(item, "j_min"), "j_min");
    b.j_max = decimal_field(field(item, "j_max"), "j_max");
    blocks.push_back(std::move(b));
  }
  return ComplementBlocks(std::move(blocks));
}

std::string cover_to_json(const CoverSolution& solution) {
  Json j;
  j["L"] = solution.size();
  j["translates"] = solution.translates;
  return j.dump();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::precondition, "cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

}  // namespace addcomp
