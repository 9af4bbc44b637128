#include "ribbon/json_io.hpp"

#include <stdexcept>

namespace ribbon {

namespace {

const char* kOverlapNames[3] = {"01", "02", "12"};

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Json laurent_to_json(const LaurentPoly& p) {
  Json j = Json::array();
  for (const auto& [e, c] : p.terms()) j.push_back(Json::array({e, rational_str(c)}));
  return j;
}

LaurentPoly laurent_from_json(const Json& j) {
  require(j.is_array(), "Laurent polynomial must be a list of [exponent, coefficient] pairs");
  LaurentPoly p;
  for (const auto& term : j) {
    require(term.is_array() && term.size() == 2, "bad Laurent term");
    int e = term[0].get<int>();
    Rational c = rational_parse(term[1].get<std::string>());
    p += LaurentPoly::monomial(c, e);
  }
  return p;
}

Json trunc_to_json(const TruncElem& e) {
  Json j = Json::array();
  for (int i = 0; i < e.n(); ++i) j.push_back(laurent_to_json(e.coeff(i)));
  return j;
}

TruncElem trunc_from_json(const Json& j) {
  require(j.is_array() && !j.empty(), "truncated element must be a nonempty list");
  TruncElem e(static_cast<int>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) e.set_coeff(static_cast<int>(i), laurent_from_json(j[i]));
  return e;
}

Json auto_to_json(const TruncAuto& a) {
  return Json{{"n", a.n()}, {"x", trunc_to_json(a.image_x())}, {"t", trunc_to_json(a.image_t())}};
}

TruncAuto auto_from_json(const Json& j) {
  require(j.is_object() && j.contains("n") && j.contains("x") && j.contains("t"),
          "automorphism needs n, x and t");
  int n = j["n"].get<int>();
  TruncElem ix = trunc_from_json(j["x"]);
  TruncElem it = trunc_from_json(j["t"]);
  require(ix.n() == n && it.n() == n, "automorphism image lengths disagree with n");
  return TruncAuto(ix, it);
}

Json cochain_to_json(const Cochain& c) {
  Json values = Json::object();
  if (c.q == 0) {
    const char* names[3] = {"0", "1", "2"};
    for (int s = 0; s < c.slot_count(); ++s)
      values[names[s]] = laurent_to_json(c.values[static_cast<size_t>(s)]);
  } else if (c.q == 1) {
    for (int s = 0; s < c.slot_count(); ++s)
      values[kOverlapNames[s]] = laurent_to_json(c.values[static_cast<size_t>(s)]);
  } else {
    values["012"] = laurent_to_json(c.values[0]);
  }
  Json bundle{{"d", c.twist.d}};
  if (c.twist.shift1 != 0) bundle["shift1"] = c.twist.shift1;
  return Json{{"q", c.q}, {"charts", chart_count(c.cover)}, {"bundle", bundle},
              {"values", values}};
}

Cochain cochain_from_json(const Json& j) {
  require(j.is_object() && j.contains("q") && j.contains("bundle") && j.contains("values"),
          "cochain needs q, bundle and values");
  int q = j["q"].get<int>();
  Cover cover = Cover::two_charts;
  if (j.contains("charts"))
    cover = j["charts"].get<int>() == 3 ? Cover::three_charts : Cover::two_charts;
  else if (q == 2 || (j["values"].is_object() && j["values"].size() > (q == 1 ? 1u : 2u)))
    cover = Cover::three_charts;
  Twist t{j["bundle"]["d"].get<int>(),
          j["bundle"].contains("shift1") ? j["bundle"]["shift1"].get<int>() : 0};
  Cochain c = Cochain::zero(q, cover, t);
  const Json& values = j["values"];
  for (int s = 0; s < c.slot_count(); ++s) {
    std::string key = q == 0   ? std::to_string(s)
                      : q == 1 ? kOverlapNames[s]
                               : "012";
    if (values.contains(key)) c.values[static_cast<size_t>(s)] = laurent_from_json(values[key]);
  }
  return c;
}

Json class_to_json(const CohClass& c) {
  Json coeffs = Json::array();
  Json basis = Json::array();
  for (int k = 0; k < c.dim(); ++k) {
    coeffs.push_back(rational_str(c.coeffs[static_cast<size_t>(k)]));
    basis.push_back(basis_exponent(c.twist, c.index, k));
  }
  return Json{{"h", c.index},
              {"degree", effective_degree(c.twist)},
              {"basis_exponents", basis},
              {"coeffs", coeffs},
              {"zero", c.is_zero()}};
}

Json scheme_to_json(const MultiScheme& X) {
  Json gluing = Json::object(), ideal = Json::object();
  for (int idx = 0; idx < overlap_count(X.cover); ++idx) {
    gluing[kOverlapNames[idx]] = auto_to_json(X.glue(idx));
    if (X.n >= 2) ideal[kOverlapNames[idx]] = trunc_to_json(X.ideal[static_cast<size_t>(idx)]);
  }
  return Json{{"base", "p1"},     {"charts", chart_count(X.cover)}, {"n", X.n},
              {"l_degree", X.l_degree}, {"gluing", gluing},          {"ideal", ideal}};
}

MultiScheme scheme_from_json(const Json& j) {
  require(j.is_object(), "scheme must be an object");
  require(j.value("base", "p1") == std::string("p1"), "unsupported base");
  MultiScheme X;
  X.cover = j.at("charts").get<int>() == 3 ? Cover::three_charts : Cover::two_charts;
  X.n = j.at("n").get<int>();
  X.l_degree = j.at("l_degree").get<int>();
  for (int idx = 0; idx < overlap_count(X.cover); ++idx) {
    require(j.at("gluing").contains(kOverlapNames[idx]),
            std::string("missing gluing entry ") + kOverlapNames[idx]);
    X.gluing.push_back(auto_from_json(j.at("gluing")[kOverlapNames[idx]]));
    if (X.n >= 2) {
      require(j.at("ideal").contains(kOverlapNames[idx]),
              std::string("missing ideal entry ") + kOverlapNames[idx]);
      X.ideal.push_back(trunc_from_json(j.at("ideal")[kOverlapNames[idx]]));
    }
  }
  return X;
}

Json bundle_to_json(const BundleCocycle& E) {
  Json trans = Json::object();
  for (int idx = 0; idx < overlap_count(E.scheme.cover); ++idx) {
    Json m = Json::array();
    for (const auto& row : E.at(idx)) {
      Json r = Json::array();
      for (const auto& e : row) r.push_back(trunc_to_json(e));
      m.push_back(r);
    }
    trans[kOverlapNames[idx]] = m;
  }
  return Json{{"scheme", scheme_to_json(E.scheme)}, {"rank", E.rank}, {"transitions", trans}};
}

BundleCocycle bundle_from_json(const Json& j) {
  require(j.is_object() && j.contains("scheme") && j.contains("transitions"),
          "bundle needs scheme and transitions");
  MultiScheme X = scheme_from_json(j["scheme"]);
  int rank = j.value("rank", 1);
  std::vector<TruncMat> mats;
  for (int idx = 0; idx < overlap_count(X.cover); ++idx) {
    require(j["transitions"].contains(kOverlapNames[idx]),
            std::string("missing transition ") + kOverlapNames[idx]);
    const Json& m = j["transitions"][kOverlapNames[idx]];
    TruncMat mat;
    for (const auto& row : m) {
      std::vector<TruncElem> r;
      for (const auto& e : row) r.push_back(trunc_from_json(e));
      mat.push_back(std::move(r));
    }
    mats.push_back(std::move(mat));
  }
  return make_bundle(X, rank, std::move(mats));
}

CurveProfile profile_from_json(const Json& j) {
  CurveProfile p;
  p.genus = j.at("genus").get<int>();
  p.hyperelliptic = j.value("hyperelliptic", false);
  if (j.contains("bundles"))
    for (const auto& [name, spec] : j["bundles"].items()) {
      std::optional<int> h0o;
      if (spec.contains("h0")) h0o = spec["h0"].get<int>();
      p.add_bundle(name, spec.at("degree").get<int>(), h0o);
    }
  return p;
}

}  // namespace ribbon
