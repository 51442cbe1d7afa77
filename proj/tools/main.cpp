// quandlekit command line front end. Every subcommand prints a deterministic
// report: "key = value" lines, lists as repeated keys, stable ordering.
// Exit codes: 0 success, 1 usage or input error, 2 violated expectation.

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "quandlekit/catalog.hpp"
#include "quandlekit/certificates.hpp"
#include "quandlekit/commutators.hpp"
#include "quandlekit/free_quandle.hpp"
#include "quandlekit/idempotents.hpp"
#include "quandlekit/nonassoc.hpp"
#include "quandlekit/order_zero.hpp"
#include "quandlekit/quandle_io.hpp"
#include "quandlekit/ring_automorphisms.hpp"
#include "quandlekit/substructures.hpp"

namespace qk = quandlekit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitExpectation = 2;

struct Report {
    std::string format = "text";
    std::ostringstream body;

    void comment(const std::string& text) {
        if (format == "text") body << "# " << text << "\n";
    }
    template <typename T>
    void kv(const std::string& key, const T& value) {
        body << key << " = " << value << "\n";
    }
    void flush() { std::cout << body.str(); }
};

// Accepts catalog names, generic T<n>/R<n>, or a path to a table file.
qk::QuandlePtr resolve_quandle(const std::string& spec) {
    if (qk::catalog::has(spec) && qk::catalog::kind(spec) == qk::catalog::Kind::finite) {
        return qk::catalog::quandle(spec);
    }
    if (spec.size() >= 2 && (spec[0] == 'T' || spec[0] == 't' || spec[0] == 'R' || spec[0] == 'r')) {
        bool digits = true;
        for (std::size_t i = 1; i < spec.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(spec[i]))) {
                digits = false;
                break;
            }
        }
        if (digits) {
            const int n = std::stoi(spec.substr(1));
            if (n < 1 || n > 64) throw qk::Error("order out of range in '" + spec + "'");
            return qk::share((spec[0] == 'T' || spec[0] == 't') ? qk::make_trivial(n)
                                                                : qk::make_dihedral(n));
        }
    }
    if (std::filesystem::exists(spec)) {
        return qk::share(qk::read_quandle_file(spec));
    }
    throw qk::UnknownNameError("cannot resolve quandle '" + spec + "'");
}

std::vector<qk::Integer> parse_integer_list(const std::string& text) {
    std::vector<qk::Integer> out;
    std::string token;
    std::istringstream ss(text);
    while (std::getline(ss, token, ',')) {
        std::size_t a = token.find_first_not_of(" \t");
        std::size_t b = token.find_last_not_of(" \t");
        if (a == std::string::npos) continue;
        out.push_back(qk::Integer::parse(token.substr(a, b - a + 1)));
    }
    if (out.empty()) throw qk::ParseError("empty integer list '" + text + "'");
    return out;
}

int check_expected_count(Report& report, long long expect, long long actual) {
    if (expect >= 0 && expect != actual) {
        report.kv("expected_count", expect);
        report.kv("expectation_met", "false");
        report.flush();
        return kExitExpectation;
    }
    if (expect >= 0) report.kv("expectation_met", "true");
    report.flush();
    return kExitOk;
}

std::string element_list(const std::vector<qk::RingElement>& elements) {
    std::string out;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        out += (i ? ", " : "") + elements[i].str();
    }
    return out;
}

void describe_ring_quandle(Report& report, const std::string& prefix, const qk::RingQuandle& rq,
                           int catalog_max_order = 6) {
    report.kv(prefix, "{" + element_list(rq.elements) + "}");
    std::ostringstream table;
    for (std::size_t i = 0; i < rq.table.size(); ++i) {
        if (i) table << " ; ";
        for (std::size_t j = 0; j < rq.table[i].size(); ++j) {
            if (j) table << " ";
            table << rq.table[i][j];
        }
    }
    report.kv(prefix + "_table", table.str());
    if (static_cast<int>(rq.elements.size()) <= catalog_max_order) {
        const auto inner = qk::FiniteQuandle::verified(rq.table);
        std::string tag = "none";
        for (const auto& [name, q] : qk::catalog::finite_quandles(catalog_max_order)) {
            if (qk::are_isomorphic(inner, *q)) {
                tag = name;
                break;
            }
        }
        report.kv(prefix + "_isomorphic_to", tag);
    }
}

int cmd_verify(const std::string& in, Report& report) {
    std::ifstream stream(in);
    if (!stream) {
        std::cerr << "error: cannot open '" << in << "'\n";
        return kExitUsage;
    }
    try {
        const qk::FiniteQuandle q = qk::read_quandle(stream);
        report.kv("valid", "true");
        report.kv("order", q.size());
        report.flush();
        return kExitOk;
    } catch (const qk::QuandleAxiomError& e) {
        report.kv("valid", "false");
        report.kv("violation", e.violation().message);
        report.flush();
        return kExitExpectation;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quandlekit: exact computations in quandle rings"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Report format: text or kv")->check(CLI::IsMember({"text", "kv"}));

    std::string quandle_spec, ring_spec = "z", in_path, out_path, side = "right";
    std::string strategy = "auto", identity, algebra = "ring", relations, a_list, b_list;
    std::string left_literal, right_literal, parametric_name, cl_literal;
    long long bound = 2, budget = qk::kDefaultEnumerationBudget, expect_count = -1;
    long long samples = 100, trials = 10000, n_arg = 4, max_support = 3, coeff_bound = 2;
    long long mod_reduction = 0, rank = 2, max_word_len = 5, cl_max_len = 2, cl_bound = 1;
    std::uint64_t seed = 0;
    bool closure = false, with_family = false, delta_equality = false, two_transitive = false;

    auto* verify = app.add_subcommand("verify", "Validate a quandle table file");
    verify->add_option("--in", in_path, "Table file")->required();

    auto* make = app.add_subcommand("make", "Construct a named quandle and print its table");
    make->add_option("--quandle", quandle_spec, "Catalog name or T<n>/R<n>")->required();
    make->add_option("--out", out_path, "Write the table to a file instead of stdout");

    auto* preds = app.add_subcommand("predicates", "Structural predicates of a finite quandle");
    preds->add_option("--quandle", quandle_spec)->required();
    preds->add_flag("--two-transitive", two_transitive,
                    "Also decide 2-transitivity of the automorphism action (n <= 8)");

    auto* idem = app.add_subcommand("idempotents", "Enumerate idempotents of R[Q]");
    idem->add_option("--quandle", quandle_spec)->required();
    idem->add_option("--ring", ring_spec, "z or zmod:<m>");
    idem->add_option("--bound", bound, "Coefficient box bound over z");
    idem->add_option("--budget", budget);
    idem->add_option("--expect-count", expect_count, "Expected number of nonzero idempotents");
    idem->add_flag("--family", with_family, "Certify the built-in parametric family and coverage");

    auto* mq = app.add_subcommand("maximal-quandles", "Maximal quandles among enumerated idempotents");
    mq->add_option("--quandle", quandle_spec)->required();
    mq->add_option("--ring", ring_spec);
    mq->add_option("--bound", bound);
    mq->add_option("--budget", budget);
    mq->add_option("--expect-count", expect_count);
    mq->add_option("--mod-reduction", mod_reduction,
                   "Compare integral maximal quandles against the mod-<m> ones");
    mq->add_option("--parametric", parametric_name,
                   "Certify a built-in parametric maximal quandle: T<n>, R4, Cs4:N1, Cs4:N2");

    auto* auts = app.add_subcommand("automorphisms", "Bounded search for ring automorphism matrices");
    auts->add_option("--quandle", quandle_spec)->required();
    auts->add_option("--bound", bound);
    auts->add_option("--budget", budget);
    auts->add_option("--expect-count", expect_count);
    auts->add_flag("--closure", closure, "Close the found matrices under multiplication");
    auts->add_option("--relations", relations, "Verify canned relations: t2 or r4");

    auto* comm = app.add_subcommand("commutators", "Commutator subalgebra closure");
    comm->add_option("--quandle", quandle_spec)->required();
    comm->add_option("--ring", ring_spec, "z, q or zmod:<p>");
    comm->add_flag("--delta-equality", delta_equality,
                   "Emit the pairwise witnesses behind R[Q]' = Delta when the hypothesis holds");
    comm->add_option("--cl", cl_literal, "Exact commutator length of a ring-element literal");
    comm->add_option("--cl-max-len", cl_max_len);
    comm->add_option("--cl-bound", cl_bound);

    auto* cw = app.add_subcommand("cw", "Width-one commutator certificates for T<n>, R4, Cs4");
    cw->add_option("--quandle", quandle_spec)->required();
    cw->add_option("--samples", samples);
    cw->add_option("--seed", seed);
    cw->add_option("--out", out_path, "Write the certificates to a file");

    auto* order = app.add_subcommand("order", "Search for a one-sided linear order");
    order->add_option("--quandle", quandle_spec,
                      "Finite quandle for exhaustive search; CoreZ or AlexZ(-1) for "
                      "monotonicity sampling under the natural integer order")
        ->required();
    order->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
    order->add_option("--trials", trials, "Sample count for integer-rule quandles");
    order->add_option("--seed", seed);

    auto* fq = app.add_subcommand("fq", "Free quandle arithmetic in the a<g>^[...] literal syntax");
    fq->add_option("--rank", rank, "Number of generators");
    fq->add_option("--mul-left", left_literal, "Left factor, e.g. a0^[+1 -0]");
    fq->add_option("--mul-right", right_literal, "Right factor");
    fq->add_option("--semi-latin-trials", samples, "Random semi-latin sampling trials");
    fq->add_option("--max-word-len", max_word_len);
    fq->add_option("--seed", seed);

    auto* dsq = app.add_subcommand("delta-square", "Does Delta_R(Q)^2 vanish?");
    dsq->add_option("--quandle", quandle_spec)->required();
    dsq->add_option("--ring", ring_spec);

    auto* up = app.add_subcommand("unique-products", "Unique product census over finite subsets");
    up->add_option("--quandle", quandle_spec, "CoreZ, AlexZ(-1) or a finite quandle")->required();
    up->add_option("--a", a_list, "Comma separated elements of A")->required();
    up->add_option("--b", b_list, "Comma separated elements of B")->required();

    auto* zd = app.add_subcommand("zero-divisor", "Zero-divisor witness search");
    zd->add_option("--quandle", quandle_spec)->required();
    zd->add_option("--ring", ring_spec);
    zd->add_option("--strategy", strategy)
        ->check(CLI::IsMember({"auto", "trivial-subquandle", "finite-subquandle", "not-semi-latin", "inert"}));

    auto* ident = app.add_subcommand("identities", "Check a non-associative identity");
    ident->add_option("--quandle", quandle_spec)->required();
    ident->add_option("--ring", ring_spec);
    ident->add_option("--identity", identity,
                      "left-alternative, right-alternative, elastic, jordan, associative, "
                      "lie-jacobi or anticommutative")
        ->required();
    ident->add_option("--algebra", algebra)->check(CLI::IsMember({"ring", "minus", "plus"}));
    ident->add_option("--bound", bound);
    ident->add_option("--trials", trials);

    auto* lie = app.add_subcommand("lie-analysis", "Derived-algebra analysis of a trivial quandle ring");
    lie->add_option("--n", n_arg, "Order of the trivial quandle");
    lie->add_option("--ring", ring_spec, "q or zmod:<odd p> for the Jordan part");

    auto* vc = app.add_subcommand("verify-certificate", "Re-verify emitted certificates");
    vc->add_option("--in", in_path)->required();

    auto* pa = app.add_subcommand("power-associative", "Search for a power-associativity witness");
    pa->add_option("--quandle", quandle_spec)->required();
    pa->add_option("--bound", bound);

    auto* sample = app.add_subcommand("sample-zero-divisors",
                                      "Random nonzero pairs in Z[Q] for integer-rule or free quandles");
    sample->add_option("--quandle", quandle_spec, "CoreZ, AlexZ(-1), FQ1..FQ3")->required();
    sample->add_option("--trials", trials);
    sample->add_option("--support", max_support);
    sample->add_option("--coeff-bound", coeff_bound);
    sample->add_option("--seed", seed);

    auto* list = app.add_subcommand("list-catalog", "Built-in named quandles");
    (void)list;

    // parent flags like --format may trail the subcommand arguments
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    Report report;
    report.format = format;

    try {
        if (verify->parsed()) return cmd_verify(in_path, report);

        if (make->parsed()) {
            const auto q = resolve_quandle(quandle_spec);
            const std::string text = qk::format_quandle(*q);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path);
                if (!out) throw qk::Error("cannot write '" + out_path + "'");
                out << text;
                report.kv("written", out_path);
                report.flush();
            }
            return kExitOk;
        }

        if (preds->parsed()) {
            const auto q = resolve_quandle(quandle_spec);
            const auto p = qk::predicates(*q);
            report.comment("predicates of " + quandle_spec);
            report.kv("order", q->size());
            report.kv("trivial", p.trivial ? "true" : "false");
            report.kv("latin", p.latin ? "true" : "false");
            report.kv("semi_latin", p.semi_latin ? "true" : "false");
            report.kv("involutary", p.involutary ? "true" : "false");
            report.kv("commutative", p.commutative ? "true" : "false");
            report.kv("strongly_non_commutative", p.strongly_non_commutative ? "true" : "false");
            report.kv("connected", p.connected ? "true" : "false");
            if (two_transitive) {
                report.kv("two_transitive", qk::is_2transitive(*q) ? "true" : "false");
            }
            report.flush();
            return kExitOk;
        }

        if (idem->parsed()) {
            const auto q = resolve_quandle(quandle_spec);
            const auto ring = qk::CoefficientRing::parse(ring_spec);
            std::vector<qk::RingElement> all;
            if (ring.kind() == qk::RingKind::integers) {
                all = qk::idempotents_box(q, bound, budget);
                report.comment("integer idempotents with |coefficients| <= " + std::to_string(bound));
                report.kv("bound", bound);
            } else if (ring.kind() == qk::RingKind::integers_mod) {
                all = qk::idempotents_modular(q, ring.modulus(), budget);
                report.comment("all idempotents over " + ring.str());
            } else {
                throw qk::Error("idempotent enumeration supports z and zmod:<m>");
            }
            const auto nz = qk::nonzero(all);
            for (const auto& e : nz) report.kv("idempotent", e.str());
            report.kv("count", nz.size());
            report.kv("zero_is_idempotent", all.size() != nz.size() ? "true" : "false");
            if (with_family) {
                const auto family = qk::builtin_family(quandle_spec);
                const auto cert = qk::verify_family(family);
                report.kv("family_certified", cert.certified ? "true" : "false");
                if (!cert.certified) report.kv("family_witness", cert.witness);
                if (ring.kind() == qk::RingKind::integers) {
                    const auto cover = qk::family_covers_box(family, bound, budget);
                    report.kv("family_covers_box", cover.covers_all ? "true" : "false");
                    for (const auto& u : cover.uncovered) report.kv("uncovered", u.str());
                }
            }
            return check_expected_count(report, expect_count, static_cast<long long>(nz.size()));
        }

        if (mq->parsed()) {
            const auto q = resolve_quandle(quandle_spec);
            if (!parametric_name.empty()) {
                const auto pq = qk::builtin_parametric_quandle(parametric_name);
                const auto cert = qk::certify_parametric_quandle(pq);
                report.kv("parametric", pq.name);
                for (const auto& branch : pq.branches) report.kv("branch", branch.name);
                report.kv("certified", cert.certified ? "true" : "false");
                report.kv("points_checked", cert.points_checked);
                if (!cert.certified) report.kv("failure", cert.failure);
                if (parametric_name.rfind("Cs4", 0) == 0 || parametric_name.rfind("cs4", 0) == 0) {
                    const auto obstruction = qk::certify_cs4_not_extendable();
                    report.kv("not_extendable", obstruction.certified ? "true" : "false");
                    for (const auto& c : obstruction.cases) {
                        if (!c.bijective) {
                            report.kv("obstruction",
                                      "alpha = " + c.alpha.str() + ": coefficient " +
                                          c.linear_coefficient.str() + "; " + c.unreachable);
                        }
                    }
                }
                report.flush();
                return cert.certified ? kExitOk : kExitExpectation;
            }
            if (mod_reduction > 0) {
                const auto result = qk::mq_reduction_check(q, mod_reduction, bound, budget);
                report.kv("integral_count", result.integral.size());
                report.kv("modular_count", result.modular.size());
                for (std::size_t i = 0; i < result.modular.size(); ++i) {
                    describe_ring_quandle(report, "modular_" + std::to_string(i + 1),
                                          result.modular[i]);
                    report.kv("modular_" + std::to_string(i + 1) + "_hit",
                              result.hit[i] ? "true" : "false");
                }
                report.kv("surjective", result.surjective ? "true" : "false");
                report.flush();
                return kExitOk;
            }
            const auto ring = qk::CoefficientRing::parse(ring_spec);
            std::vector<qk::RingElement> all;
            if (ring.kind() == qk::RingKind::integers) {
                all = qk::idempotents_box(q, bound, budget);
                report.kv("bound", bound);
            } else if (ring.kind() == qk::RingKind::integers_mod) {
                all = qk::idempotents_modular(q, ring.modulus(), budget);
            } else {
                throw qk::Error("maximal-quandles supports z and zmod:<m>");
            }
            const auto quandles = qk::maximal_quandles_finite(all);
            report.comment("the zero quandle {0} is excluded by convention");
            for (std::size_t i = 0; i < quandles.size(); ++i) {
                describe_ring_quandle(report, "maximal_quandle_" + std::to_string(i + 1), quandles[i]);
            }
            report.kv("count", quandles.size());
            return check_expected_count(report, expect_count, static_cast<long long>(quandles.size()));
        }

        if (auts->parsed()) {
            const auto q = resolve_quandle(quandle_spec);
            const auto mats = qk::automorphisms_bounded(q, bound, budget);
            report.comment("complete within entry bound " + std::to_string(bound) +
                           "; no claim beyond the bound without a relation certificate");
            for (std::size_t i = 0; i < mats.size(); ++i) {
                std::ostringstream flat;
                for (int r = 0; r < mats[i].rows(); ++r) {
                    if (r) flat << " ; ";
                    for (int c = 0; c < mats[i].cols(); ++c) {
                        if (c) flat << " ";
                        flat << mats[i].at(r, c).str();
                    }
                }
                report.kv("matrix_" + std::to_string(i + 1), flat.str());
            }
            report.kv("count", mats.size());
            if (closure) {
                const auto group = qk::group_order_small(mats);
                report.kv("closure_finite", group.finite ? "true" : "false");
                if (group.finite) report.kv("closure_order", group.elements.size());
            }
            if (!relations.empty()) {
                const auto cert = relations == "t2" ? qk::verify_t2_relations()
                                                    : qk::verify_r4_relations();
                for (const auto& inst : cert.instances) {
                    report.kv(inst.holds ? "relation_ok" : "relation_failed", inst.text);
                }
                report.kv("relations_all_hold", cert.all_hold ? "true" : "false");
                if (!cert.all_hold) {
                    report.flush();
                    return kExitExpectation;
                }
            }
            return check_expected_count(report, expect_count, static_cast<long long>(mats.size()));
        }

        if (comm->parsed()) {
            const auto q = resolve_quandle(quandle_spec);
            const auto ring = qk::CoefficientRing::parse(ring_spec);
            if (!cl_literal.empty()) {
                const auto u = qk::RingElement::parse(q, ring, cl_literal);
                const auto result = qk::cl_exact_small(u, static_cast<int>(cl_max_len), cl_bound);
                report.kv("element", u.str());
                report.kv("decided", result.decided ? "true" : "false");
                if (result.decided) {
                    report.kv("length", result.length);
                    if (result.certificate) {
                        for (const auto& term : result.certificate->decomposition) {
                            report.kv("term", term.scalar.str() + " ; " + term.left.str() + " ; " +
                                                  term.right.str());
                        }
                    }
                } else {
                    report.kv("note", result.note);
                }
                report.flush();
                return kExitOk;
            }
            const auto closure_basis = qk::commutator_subalgebra(q, ring);
            const auto delta = qk::delta_lattice(q, ring);
            for (const auto& row : closure_basis.rows()) {
                std::string line;
                for (std::size_t i = 0; i < row.size(); ++i) line += (i ? " " : "") + row[i].str();
                report.kv("basis_row", line);
            }
            report.kv("rank", closure_basis.rank());
            report.kv("contained_in_delta", qk::contained_in_delta(q, ring) ? "true" : "false");
            report.kv("equals_delta", closure_basis == delta ? "true" : "false");
            if (delta_equality) {
                const auto cert = qk::strongly_noncomm_delta_equality(q);
                report.kv("delta_equality_certified", cert.certified ? "true" : "false");
                if (cert.certified) {
                    report.kv("hypothesis", cert.hypothesis);
                    for (const auto& w : cert.witnesses) {
                        report.kv("pair_witness", "x=" + std::to_string(w.x) + " y=" +
                                                      std::to_string(w.y) + " a=" + std::to_string(w.a) +
                                                      " b=" + std::to_string(w.b));
                    }
                } else {
                    report.kv("hypothesis_failure", cert.failure);
                }
            }
            report.flush();
            return kExitOk;
        }

        if (cw->parsed()) {
            const auto certs = qk::cw_certificates(quandle_spec, static_cast<std::size_t>(samples), seed);
            std::size_t verified = 0;
            std::ostringstream serialized;
            for (const auto& cert : certs) {
                if (qk::verify_commutator_certificate(cert)) ++verified;
                serialized << qk::format_certificate(qk::catalog::normalize_name(quandle_spec), cert)
                           << "\n";
            }
            report.kv("samples", certs.size());
            report.kv("verified", verified);
            // lower bound: one nonzero commutator shows cw >= 1
            const auto q = qk::catalog::quandle(quandle_spec);
            std::string lower = "none (commutative: cw = 0)";
            const auto ring = qk::CoefficientRing::integers();
            for (int i = 0; i < q->size() && lower[0] == 'n'; ++i) {
                for (int j = 0; j < q->size(); ++j) {
                    const auto c = qk::commutator(qk::RingElement::basis(q, ring, i),
                                                  qk::RingElement::basis(q, ring, j));
                    if (!c.is_zero()) {
                        lower = "[" + q->label(i) + ", " + q->label(j) + "] = " + c.str();
                        break;
                    }
                }
            }
            report.kv("nonzero_commutator", lower);
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                if (!out) throw qk::Error("cannot write '" + out_path + "'");
                out << serialized.str();
                report.kv("written", out_path);
            }
            report.flush();
            return verified == certs.size() ? kExitOk : kExitExpectation;
        }

        if (order->parsed()) {
            const auto side_val = side == "right" ? qk::OrderSide::right : qk::OrderSide::left;
            if (qk::catalog::has(quandle_spec) &&
                qk::catalog::kind(quandle_spec) == qk::catalog::Kind::integer_rule) {
                const auto q = qk::catalog::int_quandle(quandle_spec);
                const auto result = qk::order_monotonicity_sample(
                    q, side_val, static_cast<std::uint64_t>(trials), seed);
                report.kv("side", side);
                report.kv("trials", result.trials);
                report.kv("violations", result.violations);
                for (const auto& w : result.witnesses) {
                    report.kv("witness", "x=" + w.x.str() + " y=" + w.y.str() + " z=" + w.z.str() +
                                             " gives " + w.left.str() + " vs " + w.right.str());
                }
                report.flush();
                return kExitOk;
            }
            const auto q = resolve_quandle(quandle_spec);
            const auto found = qk::find_order(*q, side_val);
            report.kv("side", side);
            if (found) {
                report.kv("order", found->str(*q));
            } else {
                report.kv("order", "none");
                report.comment("search exhausted every consistent ranking");
            }
            report.flush();
            return kExitOk;
        }

        if (fq->parsed()) {
            report.kv("rank", rank);
            if (!left_literal.empty() && !right_literal.empty()) {
                const auto x = qk::FreeQuandleElement::parse(static_cast<int>(rank), left_literal);
                const auto y = qk::FreeQuandleElement::parse(static_cast<int>(rank), right_literal);
                report.kv("left", x.str());
                report.kv("right", y.str());
                report.kv("product", qk::fq_multiply(x, y).str());
                report.kv("equal", qk::fq_equal(x, y) ? "true" : "false");
                report.kv("right_quotient", qk::fq_right_divide(x, y).str());
            }
            if (samples > 0) {
                const auto result = qk::fq_semi_latin_sample(static_cast<int>(rank),
                                                             static_cast<std::uint64_t>(samples),
                                                             static_cast<int>(max_word_len), seed);
                report.kv("semi_latin_trials", result.trials);
                report.kv("semi_latin_violations", result.violations);
                if (!result.witness.empty()) report.kv("violation_witness", result.witness);
            }
            report.flush();
            return kExitOk;
        }

        if (dsq->parsed()) {
            const auto q = resolve_quandle(quandle_spec);
            const auto ring = qk::CoefficientRing::parse(ring_spec);
            const bool zero = qk::delta_square_is_zero(q, ring);
            report.kv("delta_square_zero", zero ? "true" : "false");
            report.kv("trivial", qk::predicates(*q).trivial ? "true" : "false");
            report.flush();
            return kExitOk;
        }

        if (up->parsed()) {
            qk::UniqueProductReport result;
            if (qk::catalog::has(quandle_spec) &&
                qk::catalog::kind(quandle_spec) == qk::catalog::Kind::integer_rule) {
                const auto q = qk::catalog::int_quandle(quandle_spec);
                result = qk::unique_products(q, parse_integer_list(a_list), parse_integer_list(b_list));
            } else {
                const auto q = resolve_quandle(quandle_spec);
                std::vector<int> a, b;
                for (const auto& x : parse_integer_list(a_list)) a.push_back(static_cast<int>(x.to_long_long()));
                for (const auto& x : parse_integer_list(b_list)) b.push_back(static_cast<int>(x.to_long_long()));
                result = qk::unique_products(*q, a, b);
            }
            for (const auto& [p, reps] : result.census) {
                std::string line = p.str() + " :";
                for (const auto& [x, y] : reps) line += " (" + x.str() + "," + y.str() + ")";
                report.kv("product", line);
            }
            for (const auto& u : result.unique_products) report.kv("unique", u.str());
            report.kv("up", result.up ? "true" : "false");
            report.kv("tup", result.tup ? "true" : "false");
            if (result.a_max_witness) {
                report.kv("a_max_witness", "b' = " + result.a_max_witness->first.str() +
                                               " gives unique product " + result.a_max_witness->second.str());
            }
            if (result.a_min_witness) {
                report.kv("a_min_witness", "b'' = " + result.a_min_witness->first.str() +
                                               " gives unique product " + result.a_min_witness->second.str());
            }
            report.flush();
            return kExitOk;
        }

        if (zd->parsed()) {
            const auto q = resolve_quandle(quandle_spec);
            const auto ring = qk::CoefficientRing::parse(ring_spec);
            qk::ZeroDivisorStrategy s = qk::ZeroDivisorStrategy::automatic;
            if (strategy == "trivial-subquandle") s = qk::ZeroDivisorStrategy::trivial_subquandle;
            if (strategy == "finite-subquandle") s = qk::ZeroDivisorStrategy::finite_subquandle;
            if (strategy == "not-semi-latin") s = qk::ZeroDivisorStrategy::not_semi_latin;
            if (strategy == "inert") s = qk::ZeroDivisorStrategy::inert;
            const auto witness = qk::zero_divisor_witness(q, ring, s);
            if (witness) {
                report.kv("found", "true");
                report.kv("strategy", witness->strategy);
                report.kv("u", witness->u.str());
                report.kv("v", witness->v.str());
                report.kv("product", (witness->u * witness->v).str());
                report.kv("detail", witness->detail);
                report.flush();
                return kExitOk;
            }
            report.kv("found", "false");
            report.comment("no witness found by the configured strategies; not a nonexistence proof");
            report.flush();
            return kExitExpectation;
        }

        if (ident->parsed()) {
            const auto q = resolve_quandle(quandle_spec);
            const auto ring = qk::CoefficientRing::parse(ring_spec);
            const auto kind = algebra == "ring"    ? qk::AlgebraKind::ring
                              : algebra == "minus" ? qk::AlgebraKind::minus
                                                   : qk::AlgebraKind::plus;
            const qk::DerivedAlgebra alg(q, ring, kind);
            const auto result = qk::check_identity(alg, qk::parse_identity(identity), bound,
                                                   static_cast<std::uint64_t>(trials));
            report.kv("identity", identity);
            report.kv("algebra", algebra);
            report.kv("exact", result.exact ? "true" : "false");
            report.kv("cases_checked", result.cases_checked);
            report.kv("counterexample_found", result.counterexample_found ? "true" : "false");
            if (result.counterexample_found) {
                report.kv("witness", result.witness_elements);
                report.kv("lhs", result.witness_lhs);
                report.kv("rhs", result.witness_rhs);
            }
            report.kv("verdict", result.verdict);
            report.flush();
            return kExitOk;
        }

        if (lie->parsed()) {
            const auto ring = qk::CoefficientRing::parse(ring_spec == "z" ? "q" : ring_spec);
            const auto result = qk::trivial_quandle_lie_analysis(static_cast<int>(n_arg), ring);
            report.kv("n", result.n);
            report.kv("l2_rank", result.l2_rank);
            report.kv("l2_basis_is_chain", result.l2_basis_is_chain ? "true" : "false");
            report.kv("l2_equals_l3", result.l2_equals_l3 ? "true" : "false");
            report.kv("l2_squared_zero", result.l2_squared_zero ? "true" : "false");
            report.kv("j_supported", result.j_supported ? "true" : "false");
            if (result.j_supported) report.kv("j2_equals_j", result.j2_equals_j ? "true" : "false");
            report.flush();
            return kExitOk;
        }

        if (vc->parsed()) {
            const auto result = qk::verify_certificate_file(in_path);
            report.kv("total", result.total);
            report.kv("verified", result.verified);
            if (!result.first_failure.empty()) report.kv("failure", result.first_failure);
            report.flush();
            return result.all_verified() ? kExitOk : kExitExpectation;
        }

        if (pa->parsed()) {
            const auto q = resolve_quandle(quandle_spec);
            const auto witness =
                qk::power_associative_witness(q, qk::CoefficientRing::integers(), bound, 4);
            if (witness) {
                report.kv("found", "true");
                report.kv("x", witness->x.str());
                report.kv("lhs", witness->lhs.str());
                report.kv("rhs", witness->rhs.str());
                report.kv("bound_used", witness->bound_used);
            } else {
                report.kv("found", "false");
                report.comment("no witness with |coefficients| <= 4");
            }
            report.flush();
            return kExitOk;
        }

        if (sample->parsed()) {
            qk::NoZeroDivisorSampleReport result;
            const auto k = qk::catalog::kind(quandle_spec);
            if (k == qk::catalog::Kind::integer_rule) {
                result = qk::up_sample_no_zero_divisors(qk::catalog::int_quandle(quandle_spec),
                                                        static_cast<std::uint64_t>(trials),
                                                        static_cast<int>(max_support), coeff_bound, seed);
            } else if (k == qk::catalog::Kind::free_quandle) {
                result = qk::up_sample_no_zero_divisors_free(qk::catalog::free_rank(quandle_spec),
                                                             static_cast<std::uint64_t>(trials),
                                                             static_cast<int>(max_support), coeff_bound,
                                                             seed);
            } else {
                throw qk::Error("sample-zero-divisors needs an integer-rule or free quandle");
            }
            report.kv("trials", result.trials);
            report.kv("zero_products", result.zero_products);
            report.kv("up_confirmed", result.up_confirmed);
            if (!result.witness.empty()) report.kv("witness", result.witness);
            report.flush();
            return result.zero_products == 0 ? kExitOk : kExitExpectation;
        }

        if (list->parsed()) {
            for (const auto& e : qk::catalog::entries()) {
                std::string order_text = e.order < 0 ? "inf" : std::to_string(e.order);
                report.kv(e.name, order_text + " | " + e.note);
            }
            report.flush();
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
}
