// Copyright 2026 The Kakeya-Fq Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON file formats. Every document carries "format": 1.
//
//   field:  {"q", "p", "k", "modulus": [c_0, ..., c_k]}   (modulus only for k > 1)
//   set:    {"format", "q", "n", "field", "provenance", "points": [[...], ...],
//            "witnesses": [{"dir": [...], "base": [...]}, ...]}   (witnesses optional)
//   poly:   {"format", "q", "n", "field", "terms": [{"e": [...], "c": int}, ...]}
//
// Coordinates and coefficients are element representatives in [0, q).
// Points are written sorted and terms in graded-lex order.

#ifndef KAKEYA_IO_HPP_
#define KAKEYA_IO_HPP_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "kakeya/bounds.hpp"
#include "kakeya/gf.hpp"
#include "kakeya/kakeya_set.hpp"
#include "kakeya/polymethod.hpp"
#include "kakeya/space.hpp"

namespace kakeya::io {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json field_to_json(const Field& f) {
  json j = {{"q", f.q()}, {"p", f.p()}, {"k", f.k()}};
  if (f.k() > 1) j["modulus"] = f.modulus();
  return j;
}

inline FieldPtr field_from_json(const json& j) {
  FieldPtr f = Field::make(j.at("q").get<std::uint32_t>());
  if (j.contains("p") && j["p"].get<std::uint32_t>() != f->p()) {
    throw FormatError("io: field p does not match q");
  }
  if (j.contains("k") && j["k"].get<unsigned>() != f->k()) {
    throw FormatError("io: field k does not match q");
  }
  if (j.contains("modulus") && j["modulus"].get<std::vector<std::uint32_t>>() != f->modulus()) {
    throw FormatError("io: unsupported modulus; only the canonical modulus of each q is accepted");
  }
  return f;
}

inline void check_format(const json& j) {
  if (j.contains("format") && j["format"].get<int>() != kFormatVersion) {
    throw FormatError("io: unsupported format version " + j["format"].dump());
  }
}

inline json point_to_json(const Point& a) { return a.coords; }

inline Point point_from_json(const json& j) { return Point{j.get<std::vector<Rep>>()}; }

inline json set_to_json(const KakeyaSet& set) {
  json pts = json::array();
  for (const auto& a : set.points()) pts.push_back(point_to_json(a));
  json j = {{"format", kFormatVersion},
            {"q", set.field().q()},
            {"n", set.dim()},
            {"field", field_to_json(set.field())},
            {"provenance", to_string(set.provenance())},
            {"points", std::move(pts)}};
  if (set.witnesses()) {
    json w = json::array();
    for (const auto& wit : *set.witnesses()) {
      w.push_back({{"dir", wit.dir.coords}, {"base", wit.base.coords}});
    }
    j["witnesses"] = std::move(w);
  }
  return j;
}

inline json witnesses_to_json(const Field& f, std::size_t n, const std::vector<Witness>& ws) {
  json w = json::array();
  for (const auto& wit : ws) w.push_back({{"dir", wit.dir.coords}, {"base", wit.base.coords}});
  return {{"format", kFormatVersion}, {"q", f.q()}, {"n", n}, {"witnesses", std::move(w)}};
}

// Accepts the plain point-list form {"q", "n", "points"} as well.
inline KakeyaSet set_from_json(const json& j) {
  try {
    check_format(j);
    FieldPtr field = j.contains("field") ? field_from_json(j["field"])
                                         : Field::make(j.at("q").get<std::uint32_t>());
    if (j.at("q").get<std::uint32_t>() != field->q()) {
      throw FormatError("io: q does not match field description");
    }
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Point> pts;
    for (const auto& p : j.at("points")) pts.push_back(point_from_json(p));
    std::optional<std::vector<Witness>> witnesses;
    if (j.contains("witnesses")) {
      witnesses.emplace();
      for (const auto& w : j["witnesses"]) {
        Direction d{w.at("dir").get<std::vector<Rep>>(), false};
        Point base = point_from_json(w.at("base"));
        check_point(*field, base, n);
        check_point(*field, Point{d.coords}, n);
        witnesses->push_back({std::move(d), std::move(base)});
      }
    }
    const Provenance prov = j.contains("provenance")
                                ? provenance_from_string(j["provenance"].get<std::string>())
                                : Provenance::kCustom;
    return KakeyaSet(field, n, std::move(pts), prov, std::move(witnesses));
  } catch (const json::exception& e) {
    throw FormatError(std::string("io: malformed set file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("io: invalid set file: ") + e.what());
  }
}

inline json poly_to_json(const MultiPoly& g) {
  json terms = json::array();
  for (const auto& [mono, c] : g.terms()) terms.push_back({{"e", mono.exponents}, {"c", c}});
  return {{"format", kFormatVersion},
          {"q", g.field().q()},
          {"n", g.dim()},
          {"field", field_to_json(g.field())},
          {"terms", std::move(terms)}};
}

inline MultiPoly poly_from_json(const json& j) {
  try {
    check_format(j);
    FieldPtr field = j.contains("field") ? field_from_json(j["field"])
                                         : Field::make(j.at("q").get<std::uint32_t>());
    MultiPoly g(field, j.at("n").get<std::size_t>());
    for (const auto& t : j.at("terms")) {
      Monomial mono{t.at("e").get<std::vector<unsigned>>()};
      g.add_to(mono, t.at("c").get<Rep>());
    }
    return g;
  } catch (const json::exception& e) {
    throw FormatError(std::string("io: malformed polynomial file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("io: invalid polynomial file: ") + e.what());
  }
}

inline std::string str(const BigInt& v) { return v.str(); }

inline std::string str(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

// Big values go out as decimal strings so no reader truncates them.
inline json bound_to_json(const BoundReport& r) {
  return {{"q", r.q},
          {"n", r.n},
          {"m", r.m},
          {"N", str(r.N)},
          {"denom", str(r.denom)},
          {"bound", str(r.bound)},
          {"bound_ceiling", str(r.bound_ceiling)}};
}

inline json size_to_json(const SizeReport& r) {
  return {{"variant", to_string(r.variant)},
          {"q", r.q},
          {"n", r.n},
          {"exact", str(r.exact)},
          {"core", str(r.core)},
          {"leading", str(r.leading)},
          {"remainder", str(r.remainder)},
          {"constant", str(r.constant)}};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("io: cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("io: " + path + " is not valid JSON: " + e.what());
  }
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("io: cannot write " + path);
  out << j.dump() << "\n";
}

}  // namespace kakeya::io

#endif  // KAKEYA_IO_HPP_
