#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "quandlekit/commutators.hpp"

namespace quandlekit {

// Text serialization of commutator certificates:
//
//   certificate = commutator-decomposition
//   quandle = R4
//   ring = z
//   element = a1 - a0
//   terms = 1
//   term = 1 ; a2 ; a0 - a1 - a3
//
// Certificates are separated by blank lines. Parsing is strict and
// verification re-evaluates every decomposition, so any corruption of a
// meaningful byte either fails to parse or fails to verify.
std::string format_certificate(const std::string& quandle_name, const CommutatorCertificate& cert);

struct ParsedCertificates {
    std::vector<CommutatorCertificate> certificates;
    std::vector<std::string> quandle_names;
};

ParsedCertificates parse_certificates(std::istream& in);

struct CertificateVerification {
    std::size_t total = 0;
    std::size_t verified = 0;
    std::string first_failure;
    bool all_verified() const { return total > 0 && verified == total; }
};

CertificateVerification verify_certificate_stream(std::istream& in);
CertificateVerification verify_certificate_file(const std::string& path);

}  // namespace quandlekit
