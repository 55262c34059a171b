#include "runiv/descriptor_json.hpp"

#include <stdexcept>

namespace runiv {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  throw std::domain_error("descriptor field '" + field + "': " + why);
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) bad(name, "missing");
  return *it;
}

int int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) bad(name, "expected an integer");
  return v.get<int>();
}

Rational rational_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) bad(name, "expected a \"p/q\" string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::exception& e) {
    bad(name, e.what());
  }
}

Place place_from_json(const json& v, const char* name) {
  try {
    if (v.is_string()) {
      std::string s = v.get<std::string>();
      if (s == "inf") return Place::infinite();
      return Place::finite(Int(s));
    }
    if (v.is_number_integer()) return Place::finite(Int(v.get<long long>()));
  } catch (const std::exception& e) {
    bad(name, e.what());
  }
  bad(name, "place must be \"inf\" or a prime");
}

QuadExt quad_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) bad(name, "expected a squarefree integer d");
  try {
    return QuadExt(Int(v.get<long long>()));
  } catch (const std::exception& e) {
    bad(name, e.what());
  }
}

DiagonalForm form_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_array() || v.empty()) bad(name, "expected a nonempty array");
  std::vector<Rational> e;
  for (const auto& x : v) {
    if (x.is_number_integer())
      e.emplace_back(x.get<long long>());
    else if (x.is_string())
      try {
        e.push_back(parse_rational(x.get<std::string>()));
      } catch (const std::exception& ex) {
        bad(name, ex.what());
      }
    else
      bad(name, "entries must be integers or \"p/q\" strings");
  }
  try {
    return DiagonalForm(std::move(e));
  } catch (const std::exception& ex) {
    bad(name, ex.what());
  }
}

BrauerClass class_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_array()) bad(name, "expected [[place,num,den],...]");
  std::map<Place, Rational> inv;
  for (const auto& t : v) {
    if (!t.is_array() || t.size() != 3 || !t[1].is_number_integer() ||
        !t[2].is_number_integer())
      bad(name, "each invariant must be [place, numerator, denominator]");
    Place p = place_from_json(t[0], name);
    long long den = t[2].get<long long>();
    if (den == 0) bad(name, "zero denominator");
    if (!inv.emplace(p, Rational(t[1].get<long long>(), den)).second)
      bad(name, "duplicate place " + p.str());
  }
  try {
    return BrauerClass(std::move(inv));
  } catch (const std::exception& ex) {
    bad(name, ex.what());
  }
}

RootSystem system_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_string()) bad(name, "expected a label like \"A3\"");
  std::string s = v.get<std::string>();
  if (s.size() < 2) bad(name, "expected a label like \"A3\"");
  try {
    Family f = family_from_letter(s[0]);
    size_t done = 0;
    int rank = std::stoi(s.substr(1), &done);
    if (done != s.size() - 1) bad(name, "trailing characters in rank");
    return RootSystem(f, rank);
  } catch (const std::domain_error&) {
    throw;
  } catch (const std::exception& e) {
    bad(name, e.what());
  }
}

std::string type_field(const json& j) {
  if (!j.is_object()) throw std::domain_error("descriptor must be an object");
  const json& v = field(j, "type");
  if (!v.is_string()) bad("type", "expected a string tag");
  return v.get<std::string>();
}

json place_json(const Place& p) { return p.str(); }

json rational_json(const Rational& r) { return to_string(r); }

json form_json(const DiagonalForm& f) {
  json a = json::array();
  for (const auto& e : f.entries()) a.push_back(to_string(e));
  return a;
}

json system_json(const RootSystem& s) {
  return std::string(1, family_letter(s.family())) + std::to_string(s.rank());
}

}  // namespace

json brauer_to_json(const BrauerClass& c) {
  json a = json::array();
  for (const auto& [p, r] : c.invariants()) {
    Int num = numerator(r), den = denominator(r);
    a.push_back(json::array({place_json(p),
                             static_cast<long long>(num),
                             static_cast<long long>(den)}));
  }
  return a;
}

BrauerClass brauer_from_json(const json& j) {
  json wrap = json::object();
  wrap["class"] = j;
  return class_field(wrap, "class");
}

LieDescriptor descriptor_from_json(const json& j) {
  std::string type = type_field(j);
  auto wrap = [](auto node) { return LieDescriptor(std::move(node)); };

  if (type == "SplitSimple") return wrap(SplitSimple{system_field(j, "system")});
  if (type == "AInner")
    return wrap(AInner{int_field(j, "n"), int_field(j, "d"),
                       class_field(j, "class")});
  if (type == "AOuter") {
    std::optional<std::vector<Rational>> diag;
    if (j.contains("diag")) diag = form_field(j, "diag").entries();
    return wrap(AOuter{int_field(j, "n"), quad_field(j, "L"),
                       int_field(j, "dD"), rational_field(j, "detB"),
                       std::move(diag)});
  }
  if (type == "BOdd") return wrap(BOdd{form_field(j, "form")});
  if (type == "CSplit") return wrap(CSplit{int_field(j, "n")});
  if (type == "CQuat")
    return wrap(CQuat{int_field(j, "n"), class_field(j, "D")});
  if (type == "DOrth")
    return wrap(DOrth{int_field(j, "k"), form_field(j, "form")});
  if (type == "DQuat") {
    std::optional<BrauerClass> c0;
    if (j.contains("c0_class")) c0 = class_field(j, "c0_class");
    return wrap(DQuat{int_field(j, "k"), class_field(j, "D"),
                      rational_field(j, "reduced_norm_B"), std::move(c0)});
  }
  if (type == "E6Inner") {
    const json& v = field(j, "index");
    if (!v.is_string()) bad("index", "expected a label");
    auto idx = e6_from_label(v.get<std::string>());
    if (!idx) bad("index", "unknown E6 index label");
    return wrap(E6Inner{*idx});
  }
  if (type == "E6Outer") {
    const json& v = field(j, "splits_over_L");
    if (!v.is_boolean()) bad("splits_over_L", "expected a boolean");
    return wrap(E6Outer{quad_field(j, "L"), v.get<bool>()});
  }
  if (type == "E7") {
    auto lbl = [&](const char* name) {
      const json& v = field(j, name);
      if (!v.is_string()) bad(name, "expected a label");
      auto idx = e7_from_label(v.get<std::string>());
      if (!idx) bad(name, "unknown E7 index label");
      return *idx;
    };
    return wrap(E7{lbl("index_Q"), lbl("index_R")});
  }
  if (type == "Exceptional")
    return wrap(Exceptional{system_field(j, "system")});
  if (type == "ResScalars") {
    const json& v = field(j, "strongly_inner");
    if (!v.is_boolean()) bad("strongly_inner", "expected a boolean");
    return wrap(ResScalars{quad_field(j, "L"), system_field(j, "system"),
                           v.get<bool>()});
  }
  if (type == "DirectSum") {
    const json& v = field(j, "factors");
    if (!v.is_array() || v.empty()) bad("factors", "expected a nonempty array");
    std::vector<LieDescriptor> factors;
    for (const auto& f : v) factors.push_back(descriptor_from_json(f));
    return wrap(DirectSum{std::move(factors)});
  }
  bad("type", "unknown descriptor type " + type);
}

json descriptor_to_json(const LieDescriptor& desc) {
  struct S {
    json operator()(const SplitSimple& x) {
      return {{"type", "SplitSimple"}, {"system", system_json(x.sys)}};
    }
    json operator()(const AInner& x) {
      return {{"type", "AInner"}, {"n", x.n}, {"d", x.d},
              {"class", brauer_to_json(x.cls)}};
    }
    json operator()(const AOuter& x) {
      json j = {{"type", "AOuter"}, {"n", x.n},
                {"L", static_cast<long long>(x.L.d())}, {"dD", x.dD},
                {"detB", rational_json(x.detB)}};
      if (x.diag) {
        json a = json::array();
        for (const auto& e : *x.diag) a.push_back(to_string(e));
        j["diag"] = a;
      }
      return j;
    }
    json operator()(const BOdd& x) {
      return {{"type", "BOdd"}, {"form", form_json(x.form)}};
    }
    json operator()(const CSplit& x) {
      return {{"type", "CSplit"}, {"n", x.n}};
    }
    json operator()(const CQuat& x) {
      return {{"type", "CQuat"}, {"n", x.n}, {"D", brauer_to_json(x.D)}};
    }
    json operator()(const DOrth& x) {
      return {{"type", "DOrth"}, {"k", x.k}, {"form", form_json(x.form)}};
    }
    json operator()(const DQuat& x) {
      json j = {{"type", "DQuat"}, {"k", x.k}, {"D", brauer_to_json(x.D)},
                {"reduced_norm_B", rational_json(x.reduced_norm_B)}};
      if (x.c0_class) j["c0_class"] = brauer_to_json(*x.c0_class);
      return j;
    }
    json operator()(const E6Inner& x) {
      return {{"type", "E6Inner"}, {"index", e6_label(x.index)}};
    }
    json operator()(const E6Outer& x) {
      return {{"type", "E6Outer"}, {"L", static_cast<long long>(x.L.d())},
              {"splits_over_L", x.splits_over_L}};
    }
    json operator()(const E7& x) {
      return {{"type", "E7"}, {"index_Q", e7_label(x.index_Q)},
              {"index_R", e7_label(x.index_R)}};
    }
    json operator()(const Exceptional& x) {
      return {{"type", "Exceptional"}, {"system", system_json(x.sys)}};
    }
    json operator()(const ResScalars& x) {
      return {{"type", "ResScalars"}, {"L", static_cast<long long>(x.L.d())},
              {"system", system_json(x.family_rank)},
              {"strongly_inner", x.strongly_inner}};
    }
    json operator()(const DirectSum& x) {
      json a = json::array();
      for (const auto& f : x.factors) a.push_back(descriptor_to_json(f));
      return {{"type", "DirectSum"}, {"factors", a}};
    }
  };
  return std::visit(S{}, desc.node());
}

LieDescriptor parse_descriptor(const std::string& text) {
  return descriptor_from_json(json::parse(text));
}

std::string serialize_descriptor(const LieDescriptor& desc) {
  return descriptor_to_json(desc).dump(2);
}

json verdict_to_json(const Verdict& v) {
  json trace = json::array();
  for (const auto& t : v.trace)
    trace.push_back({{"criterion", t.criterion}, {"values", t.values},
                     {"citation", t.citation}});
  return {{"universal", universal_name(v.universal)}, {"trace", trace}};
}

}  // namespace runiv
