#include "fi1/io.hpp"

#include <fstream>
#include <sstream>

#include "fi1/errors.hpp"

namespace fi1::io {

namespace {

std::int64_t as_int(Json const& j, char const* what) {
  if (!j.is_number_integer()) {
    throw DomainError(std::string(what) + " must be an integer");
  }
  return j.get<std::int64_t>();
}

Json word_json(Presentation const& p, SymbolWord const& w) {
  Json out = Json::array();
  for (char32_t c : w) {
    out.push_back(p.alphabet().at(c));
  }
  return out;
}

SymbolWord word_from_json(Presentation const& p, Json const& j) {
  if (!j.is_array()) {
    throw DomainError("relation side must be an array of symbol names");
  }
  SymbolWord out;
  for (auto const& s : j) {
    if (!s.is_string()) {
      throw DomainError("symbol names must be strings");
    }
    out.push_back(static_cast<char32_t>(p.symbol(s.get<std::string>())));
  }
  return out;
}

Json factorization_json(numerical::Factorization const& f) {
  Json out = Json::array();
  for (auto k : f) {
    out.push_back(k);
  }
  return out;
}

}  // namespace

Json to_json(Element const& e) {
  return Json::array({-e.left(), e.shift(), e.right()});
}

Element element_from_json(Json const& j) {
  if (!j.is_array() || j.size() != 3) {
    throw DomainError("element must be a triple [-a, p, b]");
  }
  return Element::from_triple(as_int(j[0], "-a"), as_int(j[1], "p"),
                              as_int(j[2], "b"));
}

Element parse_element(std::string const& text) {
  std::string t = text;
  if (t.find('[') == std::string::npos) {
    t = "[" + t + "]";
  }
  Json j;
  try {
    j = Json::parse(t);
  } catch (Json::exception const&) {
    throw DomainError("cannot parse element '" + text + "'");
  }
  return element_from_json(j);
}

Json to_json(PartialMap const& f) {
  Json out = Json::object();
  for (std::int32_t t = 0; t <= f.degree(); ++t) {
    if (auto img = f(t)) {
      out[std::to_string(t)] = *img;
    }
  }
  return out;
}

Json to_json(std::vector<Element> const& es) {
  Json out = Json::array();
  for (auto const& e : es) {
    out.push_back(to_json(e));
  }
  return out;
}

GeneratorSet generators_from_json(Json const& j) {
  if (!j.is_object() || !j.contains("generators")
      || !j["generators"].is_array()) {
    throw DomainError("expected {\"generators\": [[-a, p, b], ...]}");
  }
  std::vector<Element> gens;
  for (auto const& g : j["generators"]) {
    gens.push_back(element_from_json(g));
  }
  return GeneratorSet(std::move(gens));
}

numerical::NumericalSgp numerical_from_json(Json const& j) {
  if (!j.is_object() || !j.contains("gens") || !j["gens"].is_array()) {
    throw DomainError("expected {\"gens\": [n1, n2, ...]}");
  }
  std::vector<std::int64_t> gens;
  for (auto const& g : j["gens"]) {
    gens.push_back(as_int(g, "generator"));
  }
  return numerical::NumericalSgp(std::move(gens));
}

Json to_json(ClassificationReport const& r) {
  Json out;
  out["verdict"] = to_string(r.verdict);
  if (r.idempotent_count) {
    out["idempotent_count"] = *r.idempotent_count;
  } else {
    out["idempotent_count"] = "infinite";
  }
  out["positive_generators"] = r.evidence.positive;
  out["negative_generators"] = r.evidence.negative;
  out["idempotent_generators"] = r.evidence.zero;
  out["finite_semilattice"] = r.finite_semilattice;
  return out;
}

Json to_json(Witness const& w) {
  Json out;
  out["u1"] = to_json(w.u1);
  out["u2"] = to_json(w.u2);
  out["n1"] = w.n1;
  out["n2"] = w.n2;
  out["e"] = to_json(w.e);
  out["e_xy"] = Json::array({w.e_x, w.e_y});
  out["f"] = to_json(w.f);
  out["f_zt"] = Json::array({w.f_z, w.f_t});
  out["n"] = w.n;
  out["m"] = w.m;
  out["sigma_e_sigma_f"] = to_json(w.ef);
  out["sigma_f_sigma_e"] = to_json(w.fe);
  return out;
}

Json to_json(Decomposition const& d) {
  Json out;
  out["mirrored"] = d.mirrored;
  out["chain_bound"] = d.chain_bound;
  out["Q"] = d.q;
  out["preperiod"] = d.preperiod;
  out["period"] = d.period;
  Json pieces = Json::array();
  for (auto const& p : d.pieces) {
    Json pj;
    pj["x"] = p.key.x;
    pj["y"] = p.key.y;
    pj["generators"] = minimal_generators(p.values);
    pj["upper_generators"] = p.upper.gens();
    pieces.push_back(std::move(pj));
  }
  out["pieces"] = std::move(pieces);
  out["u_generators"] = to_json(d.u_generators);
  out["complement"] = to_json(d.complement);
  return out;
}

Json to_json(ScheinReport const& r) {
  Json out;
  out["n"] = r.n;
  out["max_ij"] = r.max_ij;
  out["passed"] = r.passed;
  out["checks"] = r.checks;
  if (r.first_failure) {
    auto const& f = *r.first_failure;
    out["first_failure"] = {{"family", to_string(f.family)},
                            {"i", f.i},
                            {"j", f.j},
                            {"lhs", to_json(f.lhs)},
                            {"rhs", to_json(f.rhs)}};
  } else {
    out["first_failure"] = nullptr;
  }
  if (r.inequality_witness) {
    auto const& w = *r.inequality_witness;
    out["inequality_witness"] = {
        {"i", w.i}, {"j", w.j}, {"lhs", to_json(w.lhs)}, {"rhs", to_json(w.rhs)}};
  } else {
    out["inequality_witness"] = nullptr;
  }
  return out;
}

Json to_json(numerical::CommutativePresentation const& p) {
  Json out;
  out["generators"] = p.generators;
  Json rels = Json::array();
  for (auto const& [l, r] : p.relations) {
    rels.push_back(Json::array({factorization_json(l), factorization_json(r)}));
  }
  out["relations"] = std::move(rels);
  out["betti_elements"] = p.betti_elements;
  return out;
}

Json to_json(Presentation const& p) {
  Json out;
  out["alphabet"] = p.alphabet();
  Json rels = Json::array();
  for (auto const& r : p.relations()) {
    rels.push_back(Json::array({word_json(p, r.lhs), word_json(p, r.rhs)}));
  }
  out["relations"] = std::move(rels);
  return out;
}

Presentation presentation_from_json(Json const& j) {
  if (!j.is_object() || !j.contains("alphabet") || !j["alphabet"].is_array()
      || !j.contains("relations") || !j["relations"].is_array()) {
    throw DomainError("expected {\"alphabet\": [...], \"relations\": [...]}");
  }
  std::vector<std::string> alphabet;
  for (auto const& s : j["alphabet"]) {
    if (!s.is_string()) {
      throw DomainError("symbol names must be strings");
    }
    alphabet.push_back(s.get<std::string>());
  }
  Presentation p(std::move(alphabet));
  for (auto const& r : j["relations"]) {
    if (!r.is_array() || r.size() != 2) {
      throw DomainError("relation must be a pair of words");
    }
    p.add_relation(word_from_json(p, r[0]), word_from_json(p, r[1]));
  }
  return p;
}

Json to_json(Presentation const& p, VerificationReport const& r) {
  Json out;
  out["sound"] = r.sound;
  out["unsound_relations"] = r.unsound_relations;
  out["complete_up_to_length"] = r.max_word_length;
  out["complete"] = r.complete();
  out["words"] = r.words;
  out["value_classes"] = r.value_classes;
  out["searches"] = r.searches;
  auto pairs = [&p](std::vector<VerificationReport::Unresolved> const& us) {
    Json a = Json::array();
    for (auto const& u : us) {
      a.push_back(Json::array({word_json(p, u.u), word_json(p, u.v)}));
    }
    return a;
  };
  out["counterexamples"] = pairs(r.counterexamples);
  out["budget_exhausted"] = pairs(r.budget_exhausted);
  return out;
}

Json read_json_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw DomainError("cannot open '" + path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (Json::exception const& e) {
    throw DomainError("invalid JSON in '" + path + "'");
  }
}

}  // namespace fi1::io
