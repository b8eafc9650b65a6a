#include "codeaut/json_io.hpp"

#include "codeaut/error.hpp"

namespace codeaut {

Json code_to_json(const LinearCode& c) {
  Json basis = Json::array();
  for (const auto& row : c.basis().rows()) basis.push_back(row.to_string());
  return Json{{"n", c.length()}, {"k", c.dimension()}, {"basis", std::move(basis)}};
}

LinearCode code_from_json(const Json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<BitVector> rows;
    for (const auto& row : j.at("basis")) {
      BitVector v = BitVector::parse(row.get<std::string>());
      if (v.size() != n) throw Error(ErrorKind::LengthMismatch, "basis vector length differs from n");
      rows.push_back(std::move(v));
    }
    LinearCode c(n, rows);
    if (j.contains("k") && j.at("k").get<std::size_t>() != c.dimension()) {
      throw Error(ErrorKind::InvalidArgument, "declared k differs from the rank of the basis");
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed code JSON: ") + e.what());
  }
}

Json group_to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(p.images());
  return Json{{"degree", g.degree()}, {"order", to_decimal(g.order())}, {"generators", std::move(gens)}};
}

PermGroup group_from_json(const Json& j) {
  try {
    const auto degree = j.at("degree").get<std::size_t>();
    std::vector<Permutation> gens;
    for (const auto& images : j.at("generators")) {
      gens.emplace_back(images.get<std::vector<Permutation::Point>>());
    }
    PermGroup g(degree, std::move(gens));
    if (j.contains("order") && j.at("order").get<std::string>() != to_decimal(g.order())) {
      throw Error(ErrorKind::InvalidArgument, "declared order differs from the generated group");
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed group JSON: ") + e.what());
  }
}

Json factorization_to_json(const Factorization& f) {
  Json factors = Json::array();
  for (const auto& factor : f.factors) {
    factors.push_back(Json{{"polynomial", factor.polynomial.to_string()},
                           {"coefficients", factor.polynomial.to_bits()},
                           {"degree", factor.polynomial.degree()},
                           {"coset", factor.coset}});
  }
  return Json{{"N", f.modulus},
              {"extension_degree", f.extension_degree},
              {"field_modulus", f.field_modulus.to_string()},
              {"factors", std::move(factors)}};
}

Json cyclic_code_to_json(const EnumeratedCyclicCode& e, const Factorization& f) {
  Json defining = Json::array();
  for (std::size_t i : e.factor_indices) defining.push_back(f.factors[i].polynomial.to_string());
  return Json{{"subset", e.subset},
              {"factors", std::move(defining)},
              {"generator", e.generator.to_string()},
              {"code", code_to_json(e.code)}};
}

Json record_to_json(const CodeRecord& r) {
  Json j;
  j["source"] = r.source;
  j["n"] = r.n;
  j["k"] = r.k;
  j["d"] = r.d ? Json(*r.d) : Json(nullptr);
  j["weight_spectrum"] = r.weight_spectrum ? Json(*r.weight_spectrum) : Json(nullptr);
  j["aut_order"] = r.aut_order ? Json(to_decimal(*r.aut_order)) : Json(nullptr);
  j["aut_classification"] = r.aut_classification ? Json(*r.aut_classification) : Json(nullptr);
  switch (r.cyclic) {
    case Cyclicity::Yes:
      j["cyclic"] = true;
      break;
    case Cyclicity::No:
      j["cyclic"] = false;
      break;
    case Cyclicity::Undecided:
      j["cyclic"] = "undecided";
      break;
  }
  j["regular_cycle"] = r.regular_cycle ? Json(r.regular_cycle->images()) : Json(nullptr);
  if (r.aut_search) {
    j["aut_search"] = Json{{"nodes", r.aut_search->nodes},
                           {"via_dual", r.aut_search->via_dual},
                           {"weights_used", r.aut_search->weights_used},
                           {"class_sizes", r.aut_search->class_sizes}};
  } else {
    j["aut_search"] = nullptr;
  }
  Json errors = Json::array();
  for (const auto& e : r.errors) errors.push_back(Json{{"field", e.field}, {"tag", e.tag}, {"message", e.message}});
  j["errors"] = std::move(errors);
  j["timing"] = Json{{"total_seconds", r.total_seconds}, {"aut_seconds", r.aut_seconds}};
  return j;
}

}  // namespace codeaut
