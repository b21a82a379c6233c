#include "sidem/cli.hpp"

#include "sidem/certificate.hpp"
#include "sidem/constructions.hpp"
#include "sidem/exact_algebra.hpp"
#include "sidem/idem_enum.hpp"
#include "sidem/numtheory.hpp"
#include "sidem/paper_suite.hpp"
#include "sidem/s_classify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace sidem::cli {

namespace {

using nlohmann::json;

struct CommandOutput {
  json cert;
  std::vector<std::string> table;
  std::vector<std::string> csv;
  bool ok = true;
};

void add_check(CommandOutput& out, const std::string& name, bool pass) {
  if (!out.cert.contains("checks")) out.cert["checks"] = json::array();
  out.cert["checks"].push_back(json{{"name", name}, {"pass", pass}});
  out.ok = out.ok && pass;
}

std::string csv_ints(const std::vector<std::uint32_t>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s << ' ';
    s << v[i];
  }
  return s.str();
}

// ---------------------------------------------------------------------------
// classify / enumerate
// ---------------------------------------------------------------------------

CommandOutput run_classify(std::uint32_t n, std::size_t kernel_cap) {
  CommandOutput out;
  out.cert = certificate_envelope("classify");
  out.cert["modulus"] = n;
  out.cert["kernel_cap"] = kernel_cap;

  const SReport report = classify(n, kernel_cap);
  json entries = json::array();
  bool witnesses_ok = true;
  std::size_t index = 0;
  out.csv.push_back("index,idempotent,status,law,method,beta");
  for (const SEntry& e : report.entries) {
    json entry{{"index", index},
               {"idempotent", element_to_json(e.idempotent)},
               {"text", e.idempotent.to_string()},
               {"status", to_string(e.status)},
               {"is_s", e.is_s()}};
    std::string law_str, method_str, beta_str;
    if (e.witness) {
      entry["witness"] = witness_to_json(*e.witness);
      law_str = to_string(e.witness->law);
      method_str = to_string(e.witness->method);
      beta_str = csv_ints(e.witness->beta.support());
      const Gf2Element prod = e.idempotent.mul(e.witness->beta);
      const bool good =
          e.witness->beta.square() == e.idempotent &&
          prod == (e.witness->law == AbsorptionLaw::AbsorbWitness ? e.witness->beta
                                                                  : e.idempotent);
      witnesses_ok = witnesses_ok && good;
    }
    entries.push_back(std::move(entry));
    std::ostringstream line;
    line << "  [" << index << "] " << e.idempotent.to_string() << "  ->  "
         << to_string(e.status);
    if (e.witness) {
      line << "  witness " << e.witness->beta.to_string() << "  (" << law_str << ", "
           << method_str << ")";
    }
    out.table.push_back(line.str());
    out.csv.push_back(std::to_string(index) + "," + csv_ints(e.idempotent.support()) + "," +
                      to_string(e.status) + "," + law_str + "," + method_str + "," + beta_str);
    ++index;
  }
  out.cert["entries"] = std::move(entries);
  out.cert["counts"] = json{{"total", report.total},
                            {"nontrivial", report.nontrivial},
                            {"s", report.s_count},
                            {"non_s", report.non_s_count},
                            {"inconclusive", report.inconclusive_count}};

  bool closure_ok = true;
  std::unordered_map<Gf2Element, SStatus, Gf2ElementHash> status_of;
  for (const SEntry& e : report.entries) status_of.emplace(e.idempotent, e.status);
  for (const SEntry& e : report.entries) {
    const auto it = status_of.find(e.idempotent.complement_one());
    closure_ok = closure_ok && it != status_of.end() && it->second == e.status;
  }
  add_check(out, "witnesses_reverify_by_convolution", witnesses_ok);
  add_check(out, "complement_closure", closure_ok);

  std::ostringstream head;
  head << "S-classification of Z2[C" << n << "]: " << report.nontrivial << " nontrivial, "
       << report.s_count << " S, " << report.non_s_count << " non-S, "
       << report.inconclusive_count << " inconclusive";
  out.table.insert(out.table.begin(), head.str());
  return out;
}

CommandOutput run_enumerate(std::uint32_t n) {
  CommandOutput out;
  out.cert = certificate_envelope("enumerate");
  out.cert["modulus"] = n;
  const std::vector<Gf2Element> idems = enumerate_idempotents(n);
  json list = json::array();
  bool all_idem = true;
  out.csv.push_back("index,idempotent");
  std::size_t index = 0;
  for (const Gf2Element& e : idems) {
    list.push_back(element_to_json(e));
    all_idem = all_idem && e.is_idempotent();
    out.table.push_back("  [" + std::to_string(index) + "] " + e.to_string());
    out.csv.push_back(std::to_string(index) + "," + csv_ints(e.support()));
    ++index;
  }
  out.cert["idempotents"] = std::move(list);
  out.cert["count"] = idems.size();
  add_check(out, "all_idempotent", all_idem);
  out.table.insert(out.table.begin(),
                   "Z2[C" + std::to_string(n) + "] has " + std::to_string(idems.size()) +
                       " idempotents (" + std::to_string(idems.size() - 2) + " nontrivial)");
  return out;
}

// ---------------------------------------------------------------------------
// construct / sum / theorem13 / census
// ---------------------------------------------------------------------------

void fill_pair(CommandOutput& out, const Gf2Element& alpha, const Gf2Element& beta) {
  out.cert["modulus"] = alpha.modulus();
  out.cert["alpha"] = element_to_json(alpha);
  out.cert["beta"] = element_to_json(beta);
  out.cert["alpha_text"] = alpha.to_string();
  out.cert["beta_text"] = beta.to_string();
  out.table.push_back("alpha = " + alpha.to_string());
  out.table.push_back("beta  = " + beta.to_string());
  out.csv.push_back("role,support");
  out.csv.push_back("alpha," + csv_ints(alpha.support()));
  out.csv.push_back("beta," + csv_ints(beta.support()));
  add_check(out, "beta_squares_to_alpha", beta.square() == alpha);
  add_check(out, "alpha_absorbs_beta", alpha.mul(beta) == beta);
  add_check(out, "beta_outside_0_1_alpha",
            !beta.is_zero() && !beta.is_one() && beta != alpha);
}

CommandOutput run_construct(std::uint64_t p, std::uint32_t l) {
  CommandOutput out;
  out.cert = certificate_envelope("construct");
  const BasicPair bp = basic_pair(p, l);
  out.cert["p"] = bp.spec.p;
  out.cert["k"] = bp.spec.k;
  out.cert["l"] = bp.spec.l;
  out.cert["m"] = bp.spec.m;
  out.cert["x"] = bp.spec.x;
  out.cert["t"] = bp.spec.t;
  out.table.push_back("basic pair at order " + std::to_string(2 * p) + " (p = " +
                      std::to_string(p) + ", k = " + std::to_string(bp.spec.k) +
                      ", l = " + std::to_string(l) + ")");
  fill_pair(out, bp.alpha, bp.beta);
  return out;
}

CommandOutput run_sum(std::uint64_t p, const std::string& leaders_csv) {
  CommandOutput out;
  out.cert = certificate_envelope("sum");
  const std::vector<BasicPair> all = enumerate_basic_pairs(p);
  std::vector<BasicPair> chosen;
  if (leaders_csv.empty()) {
    chosen = all;
  } else {
    std::stringstream ss(leaders_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      const std::uint32_t l = static_cast<std::uint32_t>(std::stoul(tok));
      const auto it = std::find_if(all.begin(), all.end(),
                                   [&](const BasicPair& bp) { return bp.spec.l == l; });
      if (it == all.end()) {
        throw std::invalid_argument("l = " + tok + " is not a canonical class leader for p = " +
                                    std::to_string(p));
      }
      chosen.push_back(*it);
    }
  }
  out.cert["p"] = p;
  json leaders = json::array();
  for (const BasicPair& bp : chosen) leaders.push_back(bp.spec.l);
  out.cert["leaders"] = std::move(leaders);
  const SumPair sp = sum_pair(chosen);  // verifies identities and cross terms
  out.table.push_back("sum of " + std::to_string(chosen.size()) + " basic pair(s) at order " +
                      std::to_string(2 * p));
  fill_pair(out, sp.alpha, sp.beta);
  add_check(out, "cross_terms_cancel", true);  // sum_pair would have thrown otherwise
  return out;
}

CommandOutput run_theorem13(std::uint64_t q) {
  CommandOutput out;
  out.cert = certificate_envelope("theorem13");
  const SumPair pair = theorem13_pair(q);
  out.cert["q"] = q;
  out.table.push_back("even/odd split pair at order " + std::to_string(2 * q) + " (q = " +
                      std::to_string(q) + ")");
  fill_pair(out, pair.alpha, pair.beta);
  return out;
}

CommandOutput run_census(std::uint64_t p) {
  CommandOutput out;
  out.cert = certificate_envelope("census");
  const CensusReport r = verify_census(p);
  out.cert["p"] = r.p;
  out.cert["k"] = r.k;
  out.cert["m"] = r.m;
  out.cert["expected_nontrivial"] = r.expected_nontrivial;
  out.cert["enumerated_nontrivial"] = r.enumerated_nontrivial;
  if (!r.detail.empty()) out.cert["detail"] = r.detail;
  add_check(out, "count_matches_formula", r.count_ok);
  add_check(out, "family_equals_census", r.family_matches);
  add_check(out, "witnesses_verified", r.witnesses_ok);
  out.table.push_back("census at order " + std::to_string(2 * p) + ": expected " +
                      std::to_string(r.expected_nontrivial) + " nontrivial S-idempotents, " +
                      "enumerated " + std::to_string(r.enumerated_nontrivial));
  out.table.push_back(std::string("  count:     ") + (r.count_ok ? "ok" : "MISMATCH"));
  out.table.push_back(std::string("  family:    ") + (r.family_matches ? "ok" : "MISMATCH"));
  out.table.push_back(std::string("  witnesses: ") + (r.witnesses_ok ? "ok" : "FAILED"));
  out.csv.push_back("p,expected,enumerated,count_ok,family_ok,witnesses_ok");
  out.csv.push_back(std::to_string(p) + "," + std::to_string(r.expected_nontrivial) + "," +
                    std::to_string(r.enumerated_nontrivial) + "," +
                    std::to_string(r.count_ok) + "," + std::to_string(r.family_matches) + "," +
                    std::to_string(r.witnesses_ok));
  return out;
}

// ---------------------------------------------------------------------------
// cosets / mersenne
// ---------------------------------------------------------------------------

CommandOutput run_cosets(std::uint32_t n, bool odd_only) {
  CommandOutput out;
  out.cert = certificate_envelope("cosets");
  out.cert["modulus"] = n;
  out.cert["odd_only"] = odd_only;
  const std::vector<CycCoset> cosets = cyclotomic_cosets(n, odd_only);
  json list = json::array();
  out.csv.push_back("leader,members");
  for (const CycCoset& c : cosets) {
    list.push_back(json{{"leader", c.leader}, {"members", c.members}});
    std::ostringstream line;
    line << "  leader " << c.leader << ": {";
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      if (i) line << ", ";
      line << c.members[i];
    }
    line << "}";
    out.table.push_back(line.str());
    out.csv.push_back(std::to_string(c.leader) + "," + csv_ints(c.members));
  }
  out.cert["cosets"] = std::move(list);
  out.cert["count"] = cosets.size();
  if (!odd_only) {
    std::vector<bool> seen(n, false);
    bool partition_ok = true;
    for (const CycCoset& c : cosets) {
      for (std::uint32_t x : c.members) {
        if (x >= n || seen[x]) partition_ok = false;
        if (x < n) seen[x] = true;
        if (std::find(c.members.begin(), c.members.end(),
                      static_cast<std::uint32_t>((2ull * x) % n)) == c.members.end()) {
          partition_ok = false;
        }
      }
    }
    partition_ok =
        partition_ok && std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    add_check(out, "partition_of_residues", partition_ok);
  } else {
    add_check(out, "classes_nonempty", std::all_of(cosets.begin(), cosets.end(),
                                                   [](const CycCoset& c) {
                                                     return !c.members.empty();
                                                   }));
  }
  out.table.insert(out.table.begin(),
                   (odd_only ? std::string("odd generator classes mod ")
                             : std::string("2-cyclotomic cosets mod ")) +
                       std::to_string(n) + ": " + std::to_string(cosets.size()));
  return out;
}

CommandOutput run_mersenne(std::optional<std::uint64_t> p_opt,
                           std::optional<std::uint32_t> k_opt) {
  CommandOutput out;
  out.cert = certificate_envelope("mersenne");
  if (p_opt.has_value() == k_opt.has_value()) {
    throw std::invalid_argument("mersenne: pass exactly one of --p or --k");
  }
  std::uint64_t p = 0;
  std::uint32_t k = 0;
  if (k_opt) {
    k = *k_opt;
    if (k < 2 || k > 63) throw std::invalid_argument("mersenne: k must be in [2, 63]");
    p = (std::uint64_t{1} << k) - 1;
  } else {
    p = *p_opt;
  }
  const auto witness = mersenne_exponent(p);
  out.cert["p"] = p;
  out.cert["is_mersenne_prime"] = witness.has_value();
  if (witness) {
    out.cert["k"] = witness->k;
    k = witness->k;
  }
  bool agreement = true;
  if (k != 0) {
    const bool ll = lucas_lehmer(k);
    out.cert["lucas_lehmer"] = ll;
    // lucas_lehmer speaks about 2^k - 1 alone; the witness additionally
    // requires k prime.
    agreement = (ll == is_prime(p)) && (witness.has_value() == (ll && is_prime(k)));
  }
  add_check(out, "lucas_lehmer_agrees_with_primality", agreement);
  if (witness) {
    add_check(out, "k_divides_p_minus_1", (witness->p - 1) % witness->k == 0);
    out.table.push_back(std::to_string(p) + " = 2^" + std::to_string(witness->k) +
                        " - 1 is a Mersenne prime");
  } else {
    out.table.push_back(std::to_string(p) + " is not a Mersenne prime");
  }
  out.csv.push_back("p,is_mersenne_prime,k");
  out.csv.push_back(std::to_string(p) + "," + std::to_string(witness.has_value()) + "," +
                    (witness ? std::to_string(witness->k) : ""));
  return out;
}

// ---------------------------------------------------------------------------
// char0 / theorem23
// ---------------------------------------------------------------------------

CommandOutput run_char0(const std::string& group_desc) {
  CommandOutput out;
  out.cert = certificate_envelope("char0");
  const AbGroup group = group_from_descriptor(group_desc);
  if (group.size() > 8) {
    throw std::invalid_argument("char0: group order " + std::to_string(group.size()) +
                                " exceeds the cap 8 (2^8 masks)");
  }
  out.cert["group"] = group.describe();
  out.cert["exponent"] = group.exponent();

  const std::vector<CycloElement> prim = primitive_idempotents(group);
  bool orthogonal = true;
  CycloElement total(group);
  for (std::size_t i = 0; i < prim.size(); ++i) {
    total = total.add(prim[i]);
    orthogonal = orthogonal && prim[i].is_idempotent();
    for (std::size_t j = i + 1; j < prim.size(); ++j) {
      orthogonal = orthogonal && prim[i].mul(prim[j]).is_zero();
    }
  }
  add_check(out, "primitive_idempotents_orthogonal_and_complete",
            orthogonal && total.is_one());

  json entries = json::array();
  bool witnesses_ok = true;
  bool co_counts_ok = true;
  out.csv.push_back("mask,idempotent,witness,co_idempotents");
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << group.size()); ++mask) {
    CycloElement alpha(group);
    for (std::uint32_t j = 0; j < group.size(); ++j) {
      if ((mask >> j) & 1) alpha = alpha.add(prim[j]);
    }
    const auto witness = negation_witness(alpha);
    witnesses_ok = witnesses_ok && witness.beta.mul(witness.beta) == alpha &&
                   alpha.mul(witness.beta) == witness.beta;
    const std::size_t mask_bits = std::popcount(mask);
    const std::uint64_t expected_cos = (std::uint64_t{1} << mask_bits) - 1;
    std::uint64_t co_count = expected_cos;
    if (mask_bits <= 6) {
      const auto cos = co_idempotents(alpha);
      co_count = cos.size();
      for (const CycloElement& beta : cos) {
        co_counts_ok = co_counts_ok && beta.mul(beta) == alpha && alpha.mul(beta) == beta;
      }
    }
    co_counts_ok = co_counts_ok && co_count == expected_cos;
    entries.push_back(json{{"mask", mask},
                           {"idempotent", cyclo_element_to_json(alpha)},
                           {"text", alpha.to_string()},
                           {"witness", cyclo_element_to_json(witness.beta)},
                           {"witness_text", witness.beta.to_string()},
                           {"law", to_string(witness.law)},
                           {"co_idempotents", co_count}});
    out.table.push_back("  mask " + std::to_string(mask) + ": " + alpha.to_string() +
                        "  witness " + witness.beta.to_string() + "  (" +
                        std::to_string(co_count) + " co-idempotents)");
    out.csv.push_back(std::to_string(mask) + "," + alpha.to_string() + "," +
                      witness.beta.to_string() + "," + std::to_string(co_count));
  }
  out.cert["entries"] = std::move(entries);
  add_check(out, "negation_witnesses_verify", witnesses_ok);
  add_check(out, "co_idempotent_counts", co_counts_ok);
  out.table.insert(out.table.begin(),
                   group.describe() + " over Q(zeta_" + std::to_string(group.exponent()) +
                       "): " + std::to_string((std::uint64_t{1} << group.size()) - 2) +
                       " nontrivial idempotents, all S");
  return out;
}

template <class K>
json domain_element_json(const AlgElement<K>& e) {
  json arr = json::array();
  for (const auto& [idx, c] : e.coeffs()) {
    if constexpr (std::is_same_v<K, PrimeFieldElem>) {
      arr.push_back(json{{"index", idx}, {"value", c.value()}});
    } else {
      arr.push_back(json{{"index", idx}, {"value", c.to_string()}});
    }
  }
  return arr;
}

template <class K>
void fill_theorem23(CommandOutput& out, const SubgroupPair<K>& pair) {
  out.cert["alpha"] = domain_element_json(pair.alpha);
  out.cert["beta"] = domain_element_json(pair.beta);
  out.cert["alpha_text"] = pair.alpha.to_string();
  out.cert["beta_text"] = pair.beta.to_string();
  out.cert["report"] = json{
      {"alpha_nontrivial_idempotent", pair.report.alpha_nontrivial_idempotent},
      {"beta_squares_to_alpha", pair.report.beta_squares_to_alpha},
      {"absorption_holds", pair.report.absorption_holds},
      {"beta_excluded", pair.report.beta_excluded}};
  out.cert["valid"] = pair.report.valid();
  out.table.push_back("alpha = " + pair.alpha.to_string());
  out.table.push_back("beta  = " + pair.beta.to_string());
  out.table.push_back(std::string("verdict: ") + (pair.report.valid() ? "VALID" : "INVALID"));
  if (!pair.report.valid()) {
    out.table.push_back("failed: " + pair.report.failed_requirements());
    out.cert["failed_requirements"] = pair.report.failed_requirements();
  }
  add_check(out, "alpha_nontrivial_idempotent", pair.report.alpha_nontrivial_idempotent);
  add_check(out, "beta_squares_to_alpha", pair.report.beta_squares_to_alpha);
  add_check(out, "absorption_holds", pair.report.absorption_holds);
  add_check(out, "beta_outside_0_1_alpha", pair.report.beta_excluded);
}

CommandOutput run_theorem23(const std::string& field, std::uint32_t n, std::uint64_t p,
                            int case_id) {
  CommandOutput out;
  out.cert = certificate_envelope("theorem23");
  out.cert["group"] = "cyclic:" + std::to_string(n);
  out.cert["p"] = p;
  out.cert["case"] = case_id;
  out.csv.push_back("field,group,p,case,valid");
  if (field == "rational") {
    out.cert["field"] = "rational";
    const auto pair = subgroup_idempotent_pair_rational(n, p, case_id);
    out.table.push_back("subgroup pair over Q, cyclic(" + std::to_string(n) + "), p = " +
                        std::to_string(p) + ", case " + std::to_string(case_id));
    fill_theorem23(out, pair);
    out.csv.push_back("rational,cyclic:" + std::to_string(n) + "," + std::to_string(p) + "," +
                      std::to_string(case_id) + "," + std::to_string(pair.report.valid()));
  } else {
    const std::uint64_t q = std::stoull(field);
    out.cert["field"] = std::to_string(q);
    const auto pair = subgroup_idempotent_pair_mod(q, n, p, case_id);
    out.table.push_back("subgroup pair over F" + std::to_string(q) + ", cyclic(" +
                        std::to_string(n) + "), p = " + std::to_string(p) + ", case " +
                        std::to_string(case_id));
    fill_theorem23(out, pair);
    out.csv.push_back(std::to_string(q) + ",cyclic:" + std::to_string(n) + "," +
                      std::to_string(p) + "," + std::to_string(case_id) + "," +
                      std::to_string(pair.report.valid()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

CommandOutput run_verify(const std::string& suite, std::uint64_t seed) {
  if (suite != "paper") {
    throw std::invalid_argument("verify: unknown suite \"" + suite + "\" (try --suite paper)");
  }
  CommandOutput out;
  out.cert = certificate_envelope("verify");
  out.cert["suite"] = suite;
  out.cert["seed"] = seed;
  const std::vector<CriterionResult> results = run_paper_suite(seed);
  json criteria = json::array();
  bool all = true;
  out.csv.push_back("id,name,pass");
  for (const CriterionResult& r : results) {
    criteria.push_back(
        json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    all = all && r.pass;
    std::ostringstream line;
    line << "[" << (r.id < 10 ? " " : "") << r.id << "/12] " << (r.pass ? "PASS" : "FAIL")
         << "  " << r.name;
    if (!r.pass) line << "  -- " << r.detail;
    out.table.push_back(line.str());
    out.csv.push_back(std::to_string(r.id) + ",\"" + r.name + "\"," + std::to_string(r.pass));
  }
  out.cert["criteria"] = std::move(criteria);
  out.cert["all_pass"] = all;
  out.ok = all;
  out.table.push_back(all ? "all criteria passed" : "SOME CRITERIA FAILED");
  return out;
}

// ---------------------------------------------------------------------------

void render(const CommandOutput& result, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << result.cert.dump(2) << "\n";
  } else if (format == "csv") {
    for (const std::string& line : result.csv) out << line << "\n";
  } else {
    for (const std::string& line : result.table) out << line << "\n";
    if (result.cert.contains("checks")) {
      for (const auto& check : result.cert["checks"]) {
        out << "check " << check["name"].get<std::string>() << ": "
            << (check["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
      }
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact S-idempotent computations in group rings"};
  app.require_subcommand(1);

  std::string format = "table";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  std::uint32_t n = 0;
  std::uint64_t p = 0;
  std::uint32_t l = 1;
  std::uint64_t q = 0;
  std::size_t kernel_cap = 20;
  std::uint64_t seed = 20260808;
  std::string group_desc, field = "rational", suite = "paper", leaders;
  std::optional<std::uint64_t> mersenne_p;
  std::optional<std::uint32_t> mersenne_k;
  bool odd_only = false;
  int case_id = 1;

  CLI::App* classify_cmd = app.add_subcommand("classify", "classify every idempotent of Z2[Cn]");
  classify_cmd->add_option("--n", n, "group order")->required();
  classify_cmd->add_option("--kernel-cap", kernel_cap, "search cap: at most 2^cap candidates");

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "list the idempotents of Z2[Cn]");
  enumerate_cmd->add_option("--n", n, "group order")->required();

  CLI::App* construct_cmd =
      app.add_subcommand("construct", "basic S-idempotent pair at order 2p");
  construct_cmd->add_option("--p", p, "Mersenne prime")->required();
  construct_cmd->add_option("--l", l, "odd generator, 0 < l < p");

  CLI::App* sum_cmd = app.add_subcommand("sum", "sum of basic pairs at order 2p");
  sum_cmd->add_option("--p", p, "Mersenne prime")->required();
  sum_cmd->add_option("--l", leaders, "comma-separated class leaders (default: all)");

  CLI::App* t13_cmd =
      app.add_subcommand("theorem13", "even/odd S-idempotent pair at order 2q, q an odd prime");
  t13_cmd->add_option("--q", q, "odd prime")->required();

  CLI::App* census_cmd =
      app.add_subcommand("census", "verify the full S-idempotent census at order 2p");
  census_cmd->add_option("--p", p, "Mersenne prime")->required();

  CLI::App* cosets_cmd = app.add_subcommand("cosets", "2-cyclotomic cosets mod n");
  cosets_cmd->add_option("--n", n, "modulus")->required();
  cosets_cmd->add_flag("--odd-only", odd_only, "group odd generators by their doubling orbit");

  CLI::App* mersenne_cmd = app.add_subcommand("mersenne", "Mersenne prime certification");
  mersenne_cmd->add_option("--p", mersenne_p, "candidate value p = 2^k - 1");
  mersenne_cmd->add_option("--k", mersenne_k, "exponent k");

  CLI::App* char0_cmd =
      app.add_subcommand("char0", "characteristic-0 idempotents and witnesses");
  char0_cmd->add_option("--group", group_desc, "cyclic:N or product:MxN")->required();

  CLI::App* t23_cmd =
      app.add_subcommand("theorem23", "subgroup-average pair over F_q or the rationals");
  t23_cmd->add_option("--field", field, "q (prime) or \"rational\"");
  t23_cmd->add_option("--n", n, "cyclic group order")->required();
  t23_cmd->add_option("--p", p, "prime divisor of n")->required();
  t23_cmd->add_option("--case", case_id, "1, 2 or 3")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
  verify_cmd->add_option("--suite", suite, "suite name (paper)");
  verify_cmd->add_option("--seed", seed, "seed for randomized samples");

  app.fallthrough();
  for (auto* sub :
       {classify_cmd, enumerate_cmd, construct_cmd, sum_cmd, t13_cmd, census_cmd, cosets_cmd,
        mersenne_cmd, char0_cmd, t23_cmd, verify_cmd}) {
    sub->fallthrough();
  }

  std::vector<char*> argv;
  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("sidem");
  for (const std::string& a : args) storage.push_back(a);
  for (std::string& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help / --version
      return app.exit(e, out, err);
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    CommandOutput result;
    if (classify_cmd->parsed()) {
      result = run_classify(n, kernel_cap);
    } else if (enumerate_cmd->parsed()) {
      result = run_enumerate(n);
    } else if (construct_cmd->parsed()) {
      result = run_construct(p, l);
    } else if (sum_cmd->parsed()) {
      result = run_sum(p, leaders);
    } else if (t13_cmd->parsed()) {
      result = run_theorem13(q);
    } else if (census_cmd->parsed()) {
      result = run_census(p);
    } else if (cosets_cmd->parsed()) {
      result = run_cosets(n, odd_only);
    } else if (mersenne_cmd->parsed()) {
      result = run_mersenne(mersenne_p, mersenne_k);
    } else if (char0_cmd->parsed()) {
      result = run_char0(group_desc);
    } else if (t23_cmd->parsed()) {
      result = run_theorem23(field, n, p, case_id);
    } else if (verify_cmd->parsed()) {
      result = run_verify(suite, seed);
    } else {
      err << "error: no subcommand\n";
      return 1;
    }
    render(result, format, out);
    return result.ok ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace sidem::cli
