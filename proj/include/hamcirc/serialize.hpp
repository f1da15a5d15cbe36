#pragma once

// JSON forms of the reports; every to_json has a matching from_json.

#include <string>
#include <vector>

#include "json.hpp"

#include "hamcirc/automorphism.hpp"
#include "hamcirc/certifier.hpp"
#include "hamcirc/error.hpp"
#include "hamcirc/finite.hpp"
#include "hamcirc/legge.hpp"
#include "hamcirc/outerplanar_check.hpp"

namespace hamcirc {

namespace detail {

template <class Enum, std::size_t N>
Enum enum_from_string(const std::string& text, const Enum (&values)[N]) {
  for (Enum v : values) {
    if (to_string(v) == text) return v;
  }
  throw ParseError("unknown value '" + text + "'");
}

inline std::vector<std::string> moves_to_strings(const std::vector<Move>& moves) {
  std::vector<std::string> out;
  for (const Move& m : moves) out.push_back(to_string(m));
  return out;
}

inline std::vector<Move> moves_from_json(const nlohmann::json& j) {
  std::vector<Move> out;
  for (const auto& item : j) out.push_back(parse_move(item.get<std::string>()));
  return out;
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const Certificate& c) {
  j = nlohmann::json{{"verdict", to_string(c.verdict)},
                     {"unique", c.unique},
                     {"reason", to_string(c.reason)},
                     {"witness", detail::moves_to_strings(c.witness)},
                     {"checked_levels", c.checked_levels},
                     {"diagnostic", c.diagnostic}};
}

inline void from_json(const nlohmann::json& j, Certificate& c) {
  static constexpr Verdict verdicts[] = {Verdict::Yes, Verdict::No, Verdict::Unknown};
  static constexpr Reason reasons[] = {Reason::X1Cycle,         Reason::MissingGenerator, Reason::X1NotCycleDegreeTwo,
                                       Reason::NoCanonicalForm, Reason::TrivialWord,      Reason::Undecided};
  c.verdict = detail::enum_from_string(j.at("verdict").get<std::string>(), verdicts);
  c.unique = j.at("unique").get<bool>();
  c.reason = detail::enum_from_string(j.at("reason").get<std::string>(), reasons);
  c.witness = detail::moves_from_json(j.at("witness"));
  c.checked_levels = j.at("checked_levels").get<std::vector<std::size_t>>();
  c.diagnostic = j.at("diagnostic").get<std::string>();
}

inline void to_json(nlohmann::json& j, const CanonicalForm& f) {
  j = nlohmann::json{{"kind", to_string(f.kind)}, {"witness", detail::moves_to_strings(f.witness)}};
}

inline void from_json(const nlohmann::json& j, CanonicalForm& f) {
  static constexpr CanonicalKind kinds[] = {CanonicalKind::Squares, CanonicalKind::Commutators, CanonicalKind::None};
  f.kind = detail::enum_from_string(j.at("kind").get<std::string>(), kinds);
  f.witness = detail::moves_from_json(j.at("witness"));
}

inline void to_json(nlohmann::json& j, const LeggeLevel& l) {
  j = nlohmann::json{{"r", l.r},
                     {"vertices", l.vertices},
                     {"circle_is_cycle", l.circle_is_cycle},
                     {"full_connected", l.full_connected},
                     {"circle_spans_full", l.circle_spans_full}};
}

inline void from_json(const nlohmann::json& j, LeggeLevel& l) {
  j.at("r").get_to(l.r);
  j.at("vertices").get_to(l.vertices);
  j.at("circle_is_cycle").get_to(l.circle_is_cycle);
  j.at("full_connected").get_to(l.full_connected);
  j.at("circle_spans_full").get_to(l.circle_spans_full);
}

inline void to_json(nlohmann::json& j, const LeggeReport& r) {
  j = nlohmann::json{{"m", r.m}, {"n", r.n}, {"pass", r.pass()}, {"levels", r.levels}};
}

inline void from_json(const nlohmann::json& j, LeggeReport& r) {
  j.at("m").get_to(r.m);
  j.at("n").get_to(r.n);
  j.at("levels").get_to(r.levels);
}

inline void to_json(nlohmann::json& j, const OuterplanarLevel& l) {
  j = nlohmann::json{{"l", l.l}, {"vertices", l.vertices}, {"outerplanar", l.outerplanar}, {"circle_is_ham_cycle", l.circle_is_ham_cycle}};
}

inline void from_json(const nlohmann::json& j, OuterplanarLevel& l) {
  j.at("l").get_to(l.l);
  j.at("vertices").get_to(l.vertices);
  j.at("outerplanar").get_to(l.outerplanar);
  j.at("circle_is_ham_cycle").get_to(l.circle_is_ham_cycle);
}

inline void to_json(nlohmann::json& j, const OuterplanarReport& r) { j = nlohmann::json{{"word", r.word}, {"levels", r.levels}}; }

inline void from_json(const nlohmann::json& j, OuterplanarReport& r) {
  j.at("word").get_to(r.word);
  j.at("levels").get_to(r.levels);
}

inline void to_json(nlohmann::json& j, const UniquenessResult& u) { j = nlohmann::json{{"count", u.count}, {"unique", u.unique}}; }

inline void from_json(const nlohmann::json& j, UniquenessResult& u) {
  j.at("count").get_to(u.count);
  j.at("unique").get_to(u.unique);
}

}  // namespace hamcirc
