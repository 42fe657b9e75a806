#pragma once

#include <json.hpp>
#include <string>

#include "foxprim/delta.hpp"
#include "foxprim/endomorphism.hpp"
#include "foxprim/primitivity.hpp"
#include "foxprim/ring.hpp"
#include "foxprim/word.hpp"

namespace foxprim {

using Json = nlohmann::json;

inline Json word_to_json(const Word& w) {
  Json letters = Json::array();
  for (Letter l : w.letters()) letters.push_back({generator_of(l), l > 0 ? 1 : -1});
  return Json{{"rank", w.rank()}, {"letters", letters}};
}

inline Word word_from_json(const Json& j) {
  int rank = j.at("rank").get<int>();
  std::vector<Letter> ls;
  for (const auto& pair : j.at("letters")) {
    auto gen = pair.at(0).get<int>();
    auto sign = pair.at(1).get<int>();
    if (sign != 1 && sign != -1) throw std::invalid_argument("letter sign must be +-1");
    ls.push_back(sign > 0 ? static_cast<Letter>(gen) : -static_cast<Letter>(gen));
  }
  return {rank, ls};
}

inline Json int_to_json(const Int& v) {
  // exact: numbers that fit in 64 bits stay numbers, larger ones decimal strings
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline Int int_from_json(const Json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(j.get<std::int64_t>());
}

/// list of [coeff, word] pairs
inline Json ring_to_json(const RingElement& a) {
  Json out = Json::array();
  for (const auto& [w, c] : a.terms()) out.push_back({int_to_json(c), format_word(w)});
  return out;
}

inline RingElement ring_from_json(const Json& j, int rank) {
  RingElement out(rank);
  for (const auto& pair : j) out.add_term(parse_word(pair.at(1).get<std::string>(), rank), int_from_json(pair.at(0)));
  return out;
}

/// list of [coeff, [e1..en]] pairs
inline Json laurent_to_json(const LaurentElement& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) out.push_back({int_to_json(c), Json(m)});
  return out;
}

inline Json endomorphism_to_json(const Endomorphism& phi) {
  Json images = Json::array();
  for (const Word& w : phi.images()) images.push_back(format_word(w));
  return Json{{"rank", phi.rank()}, {"images", images}};
}

/// array of arrays of ring-element text forms
inline Json ring_matrix_to_json(const RingMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(format_ring_element(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

inline RingMatrix ring_matrix_from_json(const Json& j, int rank) {
  auto nrows = static_cast<int>(j.size());
  if (nrows == 0) throw std::invalid_argument("empty matrix");
  auto ncols = static_cast<int>(j.at(0).size());
  RingMatrix m(nrows, ncols, RingElement::zero(rank));
  for (int r = 0; r < nrows; ++r) {
    if (static_cast<int>(j.at(static_cast<std::size_t>(r)).size()) != ncols)
      throw std::invalid_argument("ragged matrix rows");
    for (int c = 0; c < ncols; ++c)
      m.at(r, c) =
          parse_ring_element(j.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c)).get<std::string>(), rank);
  }
  return m;
}

inline Json int_matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

inline Json blocking_verdict_to_json(const BlockingVerdict& v) {
  Json out;
  switch (v.kind) {
    case BlockingVerdict::Kind::Extendable:
      out["verdict"] = "extendable";
      out["witness"] = format_word(*v.witness);
      break;
    case BlockingVerdict::Kind::BlockedUpTo:
      out["verdict"] = "blocked-up-to";
      break;
    case BlockingVerdict::Kind::BlockedProven:
      out["verdict"] = "blocked-proven";
      out["rule"] = v.rule;
      break;
  }
  out["bound"] = v.bound;
  out["nodes_explored"] = v.nodes;
  return out;
}

}  // namespace foxprim
