#pragma once

/**
 * @file certificate.hpp
 * @brief JSON certificate schema shared by the CLI and its consumers.
 *
 * Certificates are deterministic: supports are sorted integer arrays,
 * rationals are strings "a/b", cyclotomic numbers are coefficient lists,
 * object keys are emitted sorted. Every witness a certificate embeds can be
 * re-parsed and re-verified by direct multiplication; reverify_certificate
 * does exactly that.
 */

#include "sidem/constructions.hpp"
#include "sidem/exact_algebra.hpp"
#include "sidem/gf2_ring.hpp"
#include "sidem/s_classify.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>

namespace sidem {

inline constexpr int kCertificateSchemaVersion = 1;

nlohmann::json element_to_json(const Gf2Element& e);
Gf2Element element_from_json(std::uint32_t n, const nlohmann::json& support);

nlohmann::json witness_to_json(const SWitness& w);

nlohmann::json cyclo_to_json(const CycloNumber& z);
CycloNumber cyclo_from_json(const nlohmann::json& j);

nlohmann::json cyclo_element_to_json(const CycloElement& e);
CycloElement cyclo_element_from_json(const AbGroup& group, const nlohmann::json& j);

AbGroup group_from_descriptor(const std::string& descriptor);

/// Fresh certificate envelope with the schema version and command echo.
nlohmann::json certificate_envelope(const std::string& command);

/// Re-checks every witness identity a certificate embeds, from the parsed
/// JSON alone. Returns false when any identity fails; throws on malformed
/// certificates.
bool reverify_certificate(const nlohmann::json& certificate);

}  // namespace sidem
