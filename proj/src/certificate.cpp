#include "sidem/certificate.hpp"

#include <stdexcept>

namespace sidem {

using nlohmann::json;

json element_to_json(const Gf2Element& e) {
  json out = json::array();
  for (std::uint32_t s : e.support()) out.push_back(s);
  return out;
}

Gf2Element element_from_json(std::uint32_t n, const json& support) {
  std::vector<std::int64_t> exps;
  for (const auto& v : support) exps.push_back(v.get<std::int64_t>());
  return Gf2Element::make(n, exps);
}

json witness_to_json(const SWitness& w) {
  return json{{"beta", element_to_json(w.beta)},
              {"law", to_string(w.law)},
              {"method", to_string(w.method)}};
}

json cyclo_to_json(const CycloNumber& z) {
  json coeffs = json::array();
  for (const Rational& c : z.coeffs()) coeffs.push_back(c.to_string());
  return json{{"order", z.order()}, {"coeffs", coeffs}};
}

CycloNumber cyclo_from_json(const json& j) {
  const std::uint32_t order = j.at("order").get<std::uint32_t>();
  CycloNumber out = CycloNumber::zero(order);
  const auto& coeffs = j.at("coeffs");
  if (coeffs.size() != out.coeffs().size()) {
    throw std::invalid_argument("cyclo_from_json: wrong coefficient count");
  }
  std::size_t i = 0;
  for (const auto& c : coeffs) {
    out = out + CycloNumber::zeta_pow(order, static_cast<std::int64_t>(i)) *
                    CycloNumber::from_rational(order,
                                               Rational::from_string(c.get<std::string>()));
    ++i;
  }
  return out;
}

json cyclo_element_to_json(const CycloElement& e) {
  json coeffs = json::array();
  for (const auto& [idx, c] : e.coeffs()) {
    coeffs.push_back(json{{"index", idx}, {"value", cyclo_to_json(c)}});
  }
  return coeffs;
}

CycloElement cyclo_element_from_json(const AbGroup& group, const json& j) {
  CycloElement out(group);
  for (const auto& entry : j) {
    out.set(entry.at("index").get<std::uint32_t>(), cyclo_from_json(entry.at("value")));
  }
  return out;
}

AbGroup group_from_descriptor(const std::string& descriptor) {
  const auto colon = descriptor.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("group descriptor must be cyclic:N or product:MxN");
  }
  const std::string kind = descriptor.substr(0, colon);
  const std::string rest = descriptor.substr(colon + 1);
  if (kind == "cyclic") {
    return AbGroup::cyclic(static_cast<std::uint32_t>(std::stoul(rest)));
  }
  if (kind == "product") {
    const auto x = rest.find('x');
    if (x == std::string::npos) {
      throw std::invalid_argument("product descriptor must be product:MxN");
    }
    return AbGroup::product(static_cast<std::uint32_t>(std::stoul(rest.substr(0, x))),
                            static_cast<std::uint32_t>(std::stoul(rest.substr(x + 1))));
  }
  throw std::invalid_argument("unknown group kind \"" + kind + "\"");
}

json certificate_envelope(const std::string& command) {
  return json{{"schema_version", kCertificateSchemaVersion}, {"command", command}};
}

namespace {

bool reverify_gf2_witness(std::uint32_t n, const json& idempotent, const json& witness) {
  const Gf2Element x = element_from_json(n, idempotent);
  const Gf2Element beta = element_from_json(n, witness.at("beta"));
  if (beta.square() != x) return false;
  const Gf2Element prod = x.mul(beta);
  const std::string law = witness.at("law").get<std::string>();
  if (law == "absorb_witness") return prod == beta;
  if (law == "absorb_idempotent") return prod == x;
  throw std::invalid_argument("unknown absorption law \"" + law + "\"");
}

bool reverify_classify(const json& cert) {
  const std::uint32_t n = cert.at("modulus").get<std::uint32_t>();
  for (const auto& entry : cert.at("entries")) {
    if (entry.at("status").get<std::string>() != "s") continue;
    const Gf2Element x = element_from_json(n, entry.at("idempotent"));
    if (!x.is_idempotent() || x.is_zero() || x.is_one()) return false;
    if (!reverify_gf2_witness(n, entry.at("idempotent"), entry.at("witness"))) return false;
  }
  return true;
}

bool reverify_pair(const json& cert) {
  const std::uint32_t n = cert.at("modulus").get<std::uint32_t>();
  const Gf2Element alpha = element_from_json(n, cert.at("alpha"));
  const Gf2Element beta = element_from_json(n, cert.at("beta"));
  return alpha.is_idempotent() && beta.square() == alpha && alpha.mul(beta) == beta;
}

bool reverify_char0(const json& cert) {
  const AbGroup group = group_from_descriptor(cert.at("group").get<std::string>());
  for (const auto& entry : cert.at("entries")) {
    const CycloElement alpha = cyclo_element_from_json(group, entry.at("idempotent"));
    const CycloElement beta = cyclo_element_from_json(group, entry.at("witness"));
    if (!alpha.is_idempotent()) return false;
    if (beta.mul(beta) != alpha || alpha.mul(beta) != beta) return false;
    if (beta.is_zero() || beta.is_one() || beta == alpha) return false;
  }
  return true;
}

template <class K, class Parse>
bool reverify_theorem23_domain(const json& cert, const AbGroup& group, Parse parse) {
  auto element = [&](const json& j) {
    AlgElement<K> out(group);
    for (const auto& entry : j) {
      out.set(entry.at("index").get<std::uint32_t>(), parse(entry.at("value")));
    }
    return out;
  };
  const AlgElement<K> alpha = element(cert.at("alpha"));
  const AlgElement<K> beta = element(cert.at("beta"));
  const auto& report = cert.at("report");
  const bool alpha_ok = alpha.is_idempotent() && !alpha.is_zero() && !alpha.is_one();
  const bool squares = beta.mul(beta) == alpha;
  const bool absorbs = alpha.mul(beta) == beta;
  const bool excluded = !beta.is_zero() && !beta.is_one() && beta != alpha;
  return report.at("alpha_nontrivial_idempotent").get<bool>() == alpha_ok &&
         report.at("beta_squares_to_alpha").get<bool>() == squares &&
         report.at("absorption_holds").get<bool>() == absorbs &&
         report.at("beta_excluded").get<bool>() == excluded;
}

bool reverify_theorem23(const json& cert) {
  const AbGroup group = group_from_descriptor(cert.at("group").get<std::string>());
  const std::string field = cert.at("field").get<std::string>();
  if (field == "rational") {
    return reverify_theorem23_domain<Rational>(cert, group, [](const json& v) {
      return Rational::from_string(v.get<std::string>());
    });
  }
  const std::uint64_t q = std::stoull(field);
  return reverify_theorem23_domain<PrimeFieldElem>(cert, group, [q](const json& v) {
    return PrimeFieldElem(q, v.get<std::int64_t>());
  });
}

}  // namespace

bool reverify_certificate(const json& certificate) {
  const std::string command = certificate.at("command").get<std::string>();
  if (command == "classify") return reverify_classify(certificate);
  if (command == "construct" || command == "sum" || command == "theorem13") {
    return reverify_pair(certificate);
  }
  if (command == "char0") return reverify_char0(certificate);
  if (command == "theorem23") return reverify_theorem23(certificate);
  throw std::invalid_argument("certificate for \"" + command + "\" embeds no witnesses");
}

}  // namespace sidem
