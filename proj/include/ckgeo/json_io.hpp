#ifndef CKGEO_JSON_IO_HPP_
#define CKGEO_JSON_IO_HPP_

// JSON forms of elements and reports (nlohmann/json).

#include <json.hpp>

#include <string>
#include <vector>

#include "element.hpp"
#include "moves.hpp"
#include "oracle.hpp"
#include "words.hpp"

namespace ckgeo {

inline void to_json(nlohmann::json& j, const Element& g) {
  j = nlohmann::json{{"k", g.k}, {"m", g.m}, {"n", g.n}};
}

inline void from_json(const nlohmann::json& j, Element& g) {
  j.at("k").get_to(g.k);
  j.at("m").get_to(g.m);
  j.at("n").get_to(g.n);
}

inline void to_json(nlohmann::json& j, const AuditReport& r) {
  j = nlohmann::json{{"check", r.check},
                     {"model", r.model},
                     {"radius", r.radius},
                     {"words_checked", r.words_checked},
                     {"geodesic_failures", r.geodesic_failures},
                     {"prefix_failures", r.prefix_failures},
                     {"dead_end_candidates", r.dead_end_candidates},
                     {"parity_failures", r.parity_failures},
                     {"dec_violations", r.dec_violations},
                     {"verdict", r.verdict()}};
}

inline void from_json(const nlohmann::json& j, AuditReport& r) {
  j.at("check").get_to(r.check);
  j.at("model").get_to(r.model);
  j.at("radius").get_to(r.radius);
  j.at("words_checked").get_to(r.words_checked);
  j.at("geodesic_failures").get_to(r.geodesic_failures);
  j.at("prefix_failures").get_to(r.prefix_failures);
  j.at("dead_end_candidates").get_to(r.dead_end_candidates);
  j.at("parity_failures").get_to(r.parity_failures);
  j.at("dec_violations").get_to(r.dec_violations);
}

inline void to_json(nlohmann::json& j, const LastLetterReport& r) {
  j = nlohmann::json{{"radius", r.radius},
                     {"elements_checked", r.elements_checked},
                     {"pairs_checked", r.pairs_checked},
                     {"violations", r.violations},
                     {"verdict", r.pass() ? "pass" : "fail"}};
}

inline void to_json(nlohmann::json& j, const ContinuationReport& r) {
  nlohmann::json zero;
  for (Letter x : kAlphabet) zero[to_string(x)] = r.zero_k_extensions[static_cast<std::size_t>(x)];
  j = nlohmann::json{{"radius", r.radius},
                     {"elements_checked", r.elements_checked},
                     {"violations", r.violations},
                     {"zero_k_elements", r.zero_k_elements},
                     {"zero_k_extensions", zero},
                     {"verdict", r.pass() ? "pass" : "fail"}};
}

inline void to_json(nlohmann::json& j, const MoveEdge& e) {
  j = nlohmann::json{{"from", format_word(e.from)}, {"to", format_word(e.to)},
                     {"kind", to_string(e.kind)}};
}

inline MoveKind move_kind_from_string(const std::string& s) {
  for (MoveKind k : {MoveKind::even_castling, MoveKind::detowering, MoveKind::clipping,
                     MoveKind::reflection}) {
    if (to_string(k) == s) return k;
  }
  throw std::invalid_argument("unknown move kind: " + s);
}

inline void from_json(const nlohmann::json& j, MoveEdge& e) {
  e.from = parse_word(j.at("from").get<std::string>());
  e.to = parse_word(j.at("to").get<std::string>());
  e.kind = move_kind_from_string(j.at("kind").get<std::string>());
  e.site.clear();
}

inline void to_json(nlohmann::json& j, const Theorem2Report& r) {
  j = nlohmann::json{{"element", r.element},
                     {"geodesic_count", r.geodesic_count},
                     {"orbit_size", r.orbit_size},
                     {"connected", r.connected},
                     {"edges", r.edges}};
}

inline void from_json(const nlohmann::json& j, Theorem2Report& r) {
  j.at("element").get_to(r.element);
  j.at("geodesic_count").get_to(r.geodesic_count);
  j.at("orbit_size").get_to(r.orbit_size);
  j.at("connected").get_to(r.connected);
  j.at("edges").get_to(r.edges);
}

inline void to_json(nlohmann::json& j, const YoungDiagram& d) {
  j = nlohmann::json{{"start", d.start}, {"heights", d.heights}};
}

inline void to_json(nlohmann::json& j, const YoungDecomposition& y) {
  auto corner = [](const RectanglePoint& p) { return nlohmann::json::array({p.x, p.y}); };
  j = nlohmann::json{{"element", y.element},
                     {"rectangle",
                      {{"A", corner(y.rectangle.a)},
                       {"B", corner(y.rectangle.b)},
                       {"C", corner(y.rectangle.c)},
                       {"D", corner(y.rectangle.d)}}},
                     {"mirrored", y.mirrored},
                     {"upper", y.upper},
                     {"lower", y.lower}};
}

}  // namespace ckgeo

#endif  // CKGEO_JSON_IO_HPP_
