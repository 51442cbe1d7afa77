#include "quandlekit/certificates.hpp"

#include <fstream>
#include <sstream>

#include "quandlekit/catalog.hpp"

namespace quandlekit {

std::string format_certificate(const std::string& quandle_name, const CommutatorCertificate& cert) {
    std::ostringstream out;
    out << "certificate = commutator-decomposition\n";
    out << "quandle = " << quandle_name << "\n";
    out << "ring = " << cert.element.ring().str() << "\n";
    out << "element = " << cert.element.str() << "\n";
    out << "terms = " << cert.claimed_length << "\n";
    for (const auto& term : cert.decomposition) {
        out << "term = " << term.scalar.str() << " ; " << term.left.str() << " ; "
            << term.right.str() << "\n";
    }
    return out.str();
}

namespace {

std::pair<std::string, std::string> split_kv(const std::string& line) {
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) throw ParseError("expected 'key = value' in '" + line + "'");
    return {line.substr(0, eq), line.substr(eq + 3)};
}

}  // namespace

ParsedCertificates parse_certificates(std::istream& in) {
    ParsedCertificates out;
    std::string line;
    std::vector<std::string> block;
    auto flush_block = [&]() {
        if (block.empty()) return;
        std::size_t i = 0;
        auto expect = [&](const std::string& key) {
            if (i >= block.size()) throw ParseError("truncated certificate (missing '" + key + "')");
            auto [k, v] = split_kv(block[i++]);
            if (k != key) throw ParseError("expected key '" + key + "', got '" + k + "'");
            return v;
        };
        const std::string kind = expect("certificate");
        if (kind != "commutator-decomposition") {
            throw ParseError("unknown certificate kind '" + kind + "'");
        }
        const std::string qname = expect("quandle");
        const QuandlePtr q = catalog::quandle(qname);
        const CoefficientRing ring = CoefficientRing::parse(expect("ring"));
        const RingElement element = RingElement::parse(q, ring, expect("element"));
        const std::string terms_text = expect("terms");
        std::size_t term_count = 0;
        for (char c : terms_text) {
            if (c < '0' || c > '9') throw ParseError("bad term count '" + terms_text + "'");
            term_count = term_count * 10 + static_cast<std::size_t>(c - '0');
        }
        CommutatorCertificate cert{element, {}, term_count};
        for (std::size_t t = 0; t < term_count; ++t) {
            const std::string value = expect("term");
            const auto s1 = value.find(" ; ");
            const auto s2 = value.find(" ; ", s1 == std::string::npos ? 0 : s1 + 3);
            if (s1 == std::string::npos || s2 == std::string::npos) {
                throw ParseError("bad term line '" + value + "'");
            }
            cert.decomposition.push_back(
                {Scalar::parse(ring, value.substr(0, s1)),
                 RingElement::parse(q, ring, value.substr(s1 + 3, s2 - s1 - 3)),
                 RingElement::parse(q, ring, value.substr(s2 + 3))});
        }
        if (i != block.size()) throw ParseError("unexpected extra line '" + block[i] + "'");
        out.certificates.push_back(std::move(cert));
        out.quandle_names.push_back(qname);
        block.clear();
    };
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            flush_block();
        } else {
            block.push_back(line);
        }
    }
    flush_block();
    return out;
}

CertificateVerification verify_certificate_stream(std::istream& in) {
    CertificateVerification result;
    ParsedCertificates parsed;
    try {
        parsed = parse_certificates(in);
    } catch (const std::exception& e) {
        result.total = 1;
        result.first_failure = e.what();
        return result;
    }
    result.total = parsed.certificates.size();
    for (std::size_t i = 0; i < parsed.certificates.size(); ++i) {
        if (verify_commutator_certificate(parsed.certificates[i])) {
            ++result.verified;
        } else if (result.first_failure.empty()) {
            result.first_failure = "certificate " + std::to_string(i + 1) +
                                   " does not re-evaluate to its element";
        }
    }
    return result;
}

CertificateVerification verify_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        CertificateVerification result;
        result.total = 1;
        result.first_failure = "cannot open '" + path + "'";
        return result;
    }
    return verify_certificate_stream(in);
}

}  // namespace quandlekit
