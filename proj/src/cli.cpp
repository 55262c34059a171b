#include "runiv/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "runiv/descriptor_json.hpp"
#include "runiv/quadform.hpp"

namespace runiv {

namespace {

using nlohmann::json;

LieDescriptor load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::domain_error("cannot open descriptor file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_descriptor(buf.str());
}

int verdict_code(Universal u) {
  switch (u) {
    case Universal::Yes: return 0;
    case Universal::No: return 3;
    case Universal::Indeterminate: return 4;
  }
  return 1;
}

void print_verdict(const Verdict& v, bool as_json) {
  if (as_json) {
    std::cout << verdict_to_json(v).dump(2) << "\n";
    return;
  }
  std::cout << "verdict: " << universal_name(v.universal) << "\n";
  for (const auto& t : v.trace) {
    std::cout << "  [" << t.criterion << "] " << t.values << "\n";
    std::cout << "    -- " << t.citation << "\n";
  }
}

std::vector<long long> parse_longs(const std::string& s, const char* what) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t done = 0;
      out.push_back(std::stoll(tok, &done));
      if (done != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::domain_error(std::string(what) + ": bad entry '" + tok + "'");
    }
  }
  if (out.empty()) throw std::domain_error(std::string(what) + ": empty list");
  return out;
}

int cmd_decide(const std::string& file, bool as_json) {
  Verdict v = decide(load(file));
  print_verdict(v, as_json);
  return verdict_code(v.universal);
}

int cmd_invariants(const std::string& file, bool as_json) {
  LieDescriptor desc = load(file);
  json out;
  out["descriptor"] = descriptor_to_json(desc);
  if (!desc.is_sum()) {
    RootSystem sys = root_system(desc);
    out["root_system"] = std::string(1, family_letter(sys.family())) +
                         std::to_string(sys.rank());
    json fg = json::array();
    auto orders = fundamental_group(sys);
    for (long long o : orders) fg.push_back(o);
    out["fundamental_group"] = fg;
    GaloisProfile p = galois_profile(desc);
    out["outer_over_Q"] = p.outer_Q;
    out["outer_over_R"] = p.outer_R;
    if (p.L) out["L"] = static_cast<long long>(p.L->d());
  }
  const DiagonalForm* form = nullptr;
  if (const auto* b = desc.get<BOdd>()) form = &b->form;
  if (const auto* d = desc.get<DOrth>()) form = &d->form;
  if (form) {
    FormInvariants fi = invariants(*form);
    json f;
    f["dim"] = fi.dim;
    f["det_mod_squares"] = static_cast<long long>(fi.det_mod_squares);
    f["disc"] = static_cast<long long>(fi.disc);
    f["signature"] = {fi.positive, fi.negative};
    json hasse = json::array();
    for (const auto& [v, s] : fi.hasse) hasse.push_back({v.str(), s});
    f["hasse_minus_one_at"] = hasse;
    f["witt_class"] = brauer_to_json(fi.witt_class);
    f["even_clifford_class"] = brauer_to_json(fi.even.q_class);
    out["form"] = f;
  }
  if (const auto* a = desc.get<AInner>()) out["class"] = brauer_to_json(a->cls);
  if (const auto* c = desc.get<CQuat>()) out["class"] = brauer_to_json(c->D);
  if (const auto* d = desc.get<DQuat>()) out["class"] = brauer_to_json(d->D);
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& [k, v] : out.items())
      std::cout << k << ": " << v.dump() << "\n";
  }
  return 0;
}

int cmd_tits(const std::string& file, long long character, bool as_json) {
  LieDescriptor desc = load(file);
  RootSystem sys = root_system(desc);
  CenterCharacter c = character_by_index(sys, character);
  TitsReport r = tits_class_Q(desc, c);
  json out;
  out["character"] = c.str();
  out["center"] = r.center ? json(static_cast<long long>(r.center->d()))
                           : json("Q");
  if (r.q_class) out["q_class"] = brauer_to_json(*r.q_class);
  if (r.q_trivial.has_value()) out["trivial_over_center"] = *r.q_trivial;
  if (r.r_algebra) out["r_algebra"] = real_alg_name(*r.r_algebra);
  if (r.division_after_real.has_value())
    out["division_after_real"] = *r.division_after_real;
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& [k, v] : out.items())
      std::cout << k << ": " << v.dump() << "\n";
  }
  return 0;
}

int cmd_dimension(const std::string& file, const std::string& weight,
                  bool as_json) {
  LieDescriptor desc = load(file);
  Weight w(parse_longs(weight, "--weight"));
  Int dim = q_irreducible_dimension(desc, w);
  if (as_json)
    std::cout << json{{"weight", w.str()}, {"dimension", dim.str()}}.dump(2)
              << "\n";
  else
    std::cout << dim.str() << "\n";
  return 0;
}

int cmd_construct(const std::string& realform, const std::string& bound,
                  bool as_json) {
  SearchBound sb;
  if (!bound.empty()) sb.entries = parse_longs(bound, "--bound");
  LieDescriptor desc = find_runiversal_qform(realform, sb);
  if (as_json) {
    json out = {{"realform", real_form_of(desc)},
                {"descriptor", descriptor_to_json(desc)},
                {"verdict", verdict_to_json(decide(desc))}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << serialize_descriptor(desc) << "\n";
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"R-universality of semisimple Lie algebras over Q"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string file, weight, realform, bound;
  long long character = 0;

  auto* c_decide = app.add_subcommand("decide", "decide R-universality");
  c_decide->add_option("file", file, "descriptor file")->required();

  auto* c_inv = app.add_subcommand("invariants", "print descriptor invariants");
  c_inv->add_option("file", file, "descriptor file")->required();

  auto* c_tits = app.add_subcommand("tits", "Tits algebra at a character");
  c_tits->add_option("file", file, "descriptor file")->required();
  c_tits->add_option("--character", character, "character index in Z*")
      ->required();

  auto* c_dim = app.add_subcommand("dimension", "Q-irreducible dimension");
  c_dim->add_option("file", file, "descriptor file")->required();
  c_dim->add_option("--weight", weight, "comma-separated coordinates")
      ->required();

  auto* c_con = app.add_subcommand("construct",
                                   "search for an R-universal Q-form");
  c_con->add_option("--realform", realform, "real-form label")->required();
  c_con->add_option("--bound", bound, "comma-separated form entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, usage errors exit 2
  }

  bool as_json = format == "json";
  try {
    if (c_decide->parsed()) return cmd_decide(file, as_json);
    if (c_inv->parsed()) return cmd_invariants(file, as_json);
    if (c_tits->parsed()) return cmd_tits(file, character, as_json);
    if (c_dim->parsed()) return cmd_dimension(file, weight, as_json);
    if (c_con->parsed()) return cmd_construct(realform, bound, as_json);
    return 2;
  } catch (const json::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const MissingInvariantError& e) {
    std::cerr << "missing invariant: " << e.what() << "\n";
    return 4;
  } catch (const UnsupportedQueryError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const NotFoundError& e) {
    std::cerr << "not found: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace runiv
