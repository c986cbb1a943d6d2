#pragma once

#include <string>

#include <json.hpp>

#include "aw/operators.hpp"
#include "aw/params.hpp"
#include "aw/polys.hpp"
#include "aw/report.hpp"
#include "aw/transform.hpp"

namespace aw {

using Json = nlohmann::json;

// Scalars: rationals as "numerator/denominator" strings, complex floats as
// {"re": string, "im": string, "bits": int}.

inline Json scalar_json(const Rat& v) {
  return Json(numerator(v).str() + "/" + denominator(v).str());
}

inline Json scalar_json(const Complex& v) {
  unsigned bits = float_precision_bits();
  unsigned d = bits_to_digits10(bits);
  return Json{{"re", v.re.str(d)}, {"im", v.im.str(d)}, {"bits", bits}};
}

inline Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw Error(Err::ParseError, "expected a rational string");
  try {
    return Rat(j.get<std::string>());
  } catch (const std::exception&) {
    throw Error(Err::ParseError, "bad rational " + j.dump());
  }
}

inline Rat rat_from_string(const std::string& s) {
  try {
    return Rat(s);
  } catch (const std::exception&) {
    throw Error(Err::ParseError, "bad rational \"" + s + "\"");
  }
}

inline Complex complex_from_json(const Json& j) {
  if (j.is_string()) return Complex(rat_from_json(j));
  if (!j.is_object() || !j.contains("re"))
    throw Error(Err::ParseError, "expected {re, im, bits} scalar");
  try {
    Real re(j.at("re").get<std::string>());
    Real im = j.contains("im") ? Real(j.at("im").get<std::string>()) : Real(0);
    return Complex(re, im);
  } catch (const std::exception&) {
    throw Error(Err::ParseError, "bad float scalar " + j.dump());
  }
}

template <class K>
Json params_json(const Params<K>& t) {
  return Json{{"p", scalar_json(t.p)},
              {"k0", scalar_json(t.k0)},
              {"k1", scalar_json(t.k1)},
              {"u0", scalar_json(t.u0)},
              {"u1", scalar_json(t.u1)}};
}

inline Params<Rat> params_from_json(const Json& j) {
  return Params<Rat>::make(rat_from_json(j.at("p")), rat_from_json(j.at("k0")),
                           rat_from_json(j.at("k1")), rat_from_json(j.at("u0")),
                           rat_from_json(j.at("u1")));
}

template <class K>
Json laurent_json(const Laurent<K>& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(Json{{"e", e}, {"c", scalar_json(c)}});
  return Json{{"terms", terms}};
}

template <class K>
Laurent<K> laurent_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms")) throw Error(Err::ParseError, "expected {terms: [...]}");
  Laurent<K> f;
  for (const auto& term : j.at("terms")) {
    long e = term.at("e").get<long>();
    if constexpr (ScalarOps<K>::exact)
      f.add_term(e, rat_from_json(term.at("c")));
    else
      f.add_term(e, complex_from_json(term.at("c")));
  }
  return f;
}

template <class K>
Json awpoly_json(const AWPoly<K>& p) {
  Json j = laurent_json(p.poly);
  j["kind"] = poly_kind_name(p.kind);
  j["m"] = p.m;
  j["method"] = method_name(p.method);
  return j;
}

template <class K>
Json opexpr_json(const OpExpr<K>& e) {
  Json terms = Json::array();
  for (const auto& term : e.terms) {
    Json word = Json::array();
    for (const Token& tok : term.word) word.push_back(token_name(tok));
    terms.push_back(Json{{"coeff", scalar_json(term.coeff)}, {"word", word}});
  }
  return Json{{"terms", terms}};
}

inline Json spectral_json(const SpectralFn& g, const Params<Rat>& t) {
  Json vals = Json::array();
  for (const auto& [m, v] : g.values) vals.push_back(Json{{"m", m}, {"v", scalar_json(v)}});
  return Json{{"params", params_json(t)}, {"values", vals}};
}

inline SpectralFn spectral_from_json(const Json& j) {
  SpectralFn g;
  for (const auto& entry : j.at("values"))
    g.values.emplace(entry.at("m").get<long>(), complex_from_json(entry.at("v")));
  return g;
}

// Report JSON. Timing is intentionally omitted so identical exact-backend runs
// serialize byte-identically; the text rendering carries it instead.
inline Json report_json(const Report& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json jc{{"name", c.name}, {"ref", c.ref}, {"status", status_name(c.status)}};
    if (c.exact)
      jc["residual"] = "exact";
    else
      jc["residual"] = c.residual;
    if (!c.note.empty()) jc["note"] = c.note;
    checks.push_back(std::move(jc));
  }
  return Json{{"checks", checks}, {"status", rep.passed() ? "pass" : "fail"}};
}

inline std::string report_text(const Report& rep) {
  std::string out;
  for (const auto& c : rep.checks) {
    std::string line = "[" + std::string(status_name(c.status)) + "] " + c.name;
    if (line.size() < 58) line.resize(58, ' ');
    line += "  " + c.ref;
    if (!c.exact) {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "  residual=%.3g", c.residual);
      line += buf;
    } else {
      line += "  residual=exact";
    }
    char tbuf[32];
    std::snprintf(tbuf, sizeof(tbuf), "  (%.3fs)", c.elapsed);
    line += tbuf;
    if (!c.note.empty()) line += "  [" + c.note + "]";
    out += line + "\n";
  }
  out += rep.passed() ? "overall: pass\n" : "overall: FAIL\n";
  return out;
}

}  // namespace aw
