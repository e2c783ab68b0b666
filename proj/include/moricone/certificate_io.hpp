#pragma once

#include "moricone/json_io.hpp"
#include "moricone/nefcert.hpp"

#include <optional>
#include <string>

namespace moricone::nefcert {

/// A certificate file. "kind" is "chain" (full chain criterion, the default
/// when absent), "he" (pi^*H' - E hypotheses) or "grid" (phi^*H'' - E - F).
struct CertificateDocument {
    std::string kind = "chain";
    std::optional<ChainCertificate> chain;
    std::optional<GridCertificate> grid;
};

json_io::Json to_json(const ChainCertificate& cert, const std::string& kind = "chain");
json_io::Json to_json(const GridCertificate& cert);
json_io::Json to_json(const Verdict& v);

/// Throws InputError or CertificateShapeError on malformed documents.
CertificateDocument document_from_json(const json_io::Json& j);
/// Also throws InputError when the file cannot be read or parsed.
CertificateDocument load_certificate(const std::string& path);

Verdict verify(const CertificateDocument& doc);

}  // namespace moricone::nefcert
