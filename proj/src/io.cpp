#include "wsq/io.hpp"

#include "wsq/errors.hpp"

namespace wsq::io {

namespace {

int get_int(const json& j, const char* key, const std::string& what) {
  require(j.is_object() && j.contains(key), what + " lacks \"" + key + "\"");
  const auto& v = j.at(key);
  require(v.is_number_integer(), what + " field \"" + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_array(const json& j, const std::string& what) {
  require(j.is_array(), what + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    require(x.is_number_integer(), what + " must be an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

json to_json(const KSubset& s) { return s.indices(); }

KSubset ksubset_from_json(const json& j, int n) {
  const auto idx = int_array(j, "subset");
  return KSubset::from_indices(n, idx);
}

json to_json(const MinorIndex& mi) {
  return json{{"A", to_json(mi.rows)}, {"B", to_json(mi.cols)}, {"k", mi.k()}, {"m", mi.m()}};
}

MinorIndex minor_from_json(const json& j) {
  const int k = get_int(j, "k", "minor");
  const int m = get_int(j, "m", "minor");
  require(j.contains("A") && j.contains("B"), "minor needs \"A\" and \"B\"");
  return MinorIndex::make(k, m, int_array(j.at("A"), "A"), int_array(j.at("B"), "B"));
}

json to_json(const WSCollection& c) {
  json sets = json::array();
  for (const auto& s : c.sets()) sets.push_back(to_json(s));
  return json{{"k", c.k()}, {"n", c.n()}, {"sets", std::move(sets)}};
}

WSCollection collection_from_json(const json& j) {
  const int k = get_int(j, "k", "collection");
  const int n = get_int(j, "n", "collection");
  require(n >= 1 && n <= kMaxGround, "collection: n out of range");
  require(j.contains("sets") && j.at("sets").is_array(), "collection needs a \"sets\" array");
  std::vector<KSubset> sets;
  for (const auto& s : j.at("sets")) sets.push_back(ksubset_from_json(s, n));
  return WSCollection(k, n, std::move(sets));
}

json to_json(const MoveSpec& mv) {
  return json{{"remove", to_json(mv.removed())},
              {"add", to_json(mv.added())},
              {"base", to_json(mv.base)},
              {"i", mv.i},
              {"s", mv.s},
              {"j", mv.j},
              {"t", mv.t}};
}

json to_json(const Chamber& ch) {
  return json{{"level", ch.level},
              {"span", {ch.start, ch.end}},
              {"I", to_json(ch.red)},
              {"J", to_json(ch.black)}};
}

json to_json(const PluckerVector<Rational>& v) {
  json out = json::object();
  for (const auto& [s, x] : v) out[to_json(s).dump()] = x.get_str();
  return out;
}

json to_json(const PluckerVector<double>& v) {
  json out = json::object();
  for (const auto& [s, x] : v) out[to_json(s).dump()] = x;
  return out;
}

PluckerVector<Rational> values_from_json(const json& j, int k, int n) {
  require(j.is_object(), "values must be a JSON object");
  PluckerVector<Rational> out;
  for (const auto& [key, val] : j.items()) {
    std::string text = key;
    if (!text.empty() && text.front() == '[') {
      require(text.back() == ']', "bad subset key " + key);
      text = text.substr(1, text.size() - 2);
    }
    const KSubset s = KSubset::parse(n, text);
    require(s.size() == k, "key " + key + " is not a " + std::to_string(k) + "-subset");
    Rational x;
    if (val.is_string()) {
      try {
        x = Rational(val.get<std::string>());
      } catch (const std::invalid_argument&) {
        throw PreconditionError("value for " + key + " is not a rational: " + val.dump());
      }
      require(sgn(x.get_den()) != 0, "value for " + key + " has zero denominator");
      x.canonicalize();
    } else if (val.is_number_integer()) {
      x = Rational(val.get<long>());
    } else {
      throw PreconditionError("value for " + key + " must be a string or an integer");
    }
    require(out.emplace(s, x).second, "duplicate key " + key);
  }
  return out;
}

json parse_json(std::istream& in, const std::string& what) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw PreconditionError("cannot parse " + what + ": " + e.what());
  }
}

}  // namespace wsq::io
