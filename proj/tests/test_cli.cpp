#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Integration tests that drive the built CLI binary end to end.

namespace {

const std::string kCli = QUANDLEKIT_CLI_PATH;
const std::string kTmp = QUANDLEKIT_TEST_TMPDIR;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string out_file = kTmp + "/cli_out.txt";
    const std::string cmd = kCli + " " + args + " > " + out_file + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("idempotents verb with expectation") {
    const auto ok = run("idempotents --quandle R3 --ring z --bound 3 --expect-count 3");
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.out, "count = 3"));

    const auto bad = run("idempotents --quandle R3 --ring z --bound 3 --expect-count 4");
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.out, "expectation_met = false"));
}

TEST_CASE("maximal quandles over Z2[R3]") {
    const auto r = run("maximal-quandles --quandle R3 --ring zmod:2 --expect-count 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "count = 3"));
    CHECK(contains(r.out, "maximal_quandle_2_isomorphic_to = R3"));
}

TEST_CASE("cw emits verified certificates that the verifier accepts") {
    const std::string cert_file = kTmp + "/cw_r4.cert";
    const auto cw = run("cw --quandle R4 --samples 20 --seed 3 --out " + cert_file);
    CHECK(cw.exit_code == 0);
    CHECK(contains(cw.out, "verified = 20"));

    const auto verify = run("verify-certificate --in " + cert_file);
    CHECK(verify.exit_code == 0);
    CHECK(contains(verify.out, "verified = 20"));

    SUBCASE("single-byte corruption of a decomposition line is rejected") {
        std::ifstream in(cert_file);
        std::ostringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        const auto pos = text.find("term = ");
        REQUIRE(pos != std::string::npos);
        // flip the first digit after "term = "
        auto digit = text.find_first_of("0123456789", pos);
        REQUIRE(digit != std::string::npos);
        text[digit] = text[digit] == '9' ? '8' : static_cast<char>(text[digit] + 1);
        const std::string corrupted_file = kTmp + "/cw_r4_corrupted.cert";
        std::ofstream out(corrupted_file);
        out << text;
        out.close();
        const auto rejected = run("verify-certificate --in " + corrupted_file);
        CHECK(rejected.exit_code == 2);
    }
}

TEST_CASE("make and verify round trip bit-exactly") {
    const std::string table_file = kTmp + "/cs4.q";
    const auto made = run("make --quandle Cs4 --out " + table_file);
    CHECK(made.exit_code == 0);

    const auto verified = run("verify --in " + table_file);
    CHECK(verified.exit_code == 0);
    CHECK(contains(verified.out, "valid = true"));

    // writing the same quandle again produces identical bytes
    const std::string second = kTmp + "/cs4_again.q";
    run("make --quandle Cs4 --out " + second);
    std::ifstream a(table_file), b(second);
    std::ostringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(sa.str() == "3\n0 0 1\n1 1 0\n2 2 2\nlabels: x y z\n");
}

TEST_CASE("verify rejects a broken table with exit 2") {
    const std::string bad_file = kTmp + "/broken.q";
    std::ofstream out(bad_file);
    out << "2\n1 0\n1 1\n";  // Q1 fails at 0
    out.close();
    const auto r = run("verify --in " + bad_file);
    CHECK(r.exit_code == 2);
    CHECK(contains(r.out, "valid = false"));
    CHECK(contains(r.out, "Q1"));
}

TEST_CASE("reports are byte-deterministic for fixed seeds") {
    const auto a = run("cw --quandle Cs4 --samples 5 --seed 11");
    const auto b = run("cw --quandle Cs4 --samples 5 --seed 11");
    CHECK(a.out == b.out);
    const auto c = run("identities --quandle R4 --ring z --identity elastic --bound 1 --format kv");
    const auto d = run("identities --quandle R4 --ring z --identity elastic --bound 1 --format kv");
    CHECK(c.out == d.out);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run("idempotents --quandle R3 --ring q --bound 2").exit_code == 1);
    CHECK(run("idempotents --quandle NoSuchThing --ring z --bound 2").exit_code == 1);
    CHECK(run("bogus-verb").exit_code != 0);
    CHECK(run("make --quandle R3 --unknown-flag 3").exit_code != 0);
}

TEST_CASE("list-catalog names every entry with order and note") {
    const auto r = run("list-catalog --format kv");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "R3 = 3 | dihedral quandle on Z_3"));
    CHECK(contains(r.out, "CoreZ = inf |"));
    CHECK(contains(r.out, "FQ3 = inf |"));
}

TEST_CASE("zero-divisor and order verbs") {
    const auto zd = run("zero-divisor --quandle T2 --ring z --format kv");
    CHECK(zd.exit_code == 0);
    CHECK(contains(zd.out, "strategy = trivial-subquandle"));
    CHECK(contains(zd.out, "product = 0"));

    const auto order = run("order --quandle R3 --side right --format kv");
    CHECK(order.exit_code == 0);
    CHECK(contains(order.out, "order = none"));

    const auto t1 = run("order --quandle T4 --side right --format kv");
    CHECK(contains(t1.out, "order = x0 < x1 < x2 < x3"));
}

TEST_CASE("automorphisms with relations and closure") {
    const auto r = run("automorphisms --quandle R4 --bound 2 --closure --relations r4 --expect-count 8 --format kv");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "count = 8"));
    CHECK(contains(r.out, "closure_order = 8"));
    CHECK(contains(r.out, "relations_all_hold = true"));
}

TEST_CASE("unique products over the integer core quandle") {
    const auto r = run("unique-products --quandle CoreZ --a 0,1,2 --b 5,6 --format kv");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "unique = 8"));
    CHECK(contains(r.out, "unique = 12"));
    CHECK(contains(r.out, "tup = true"));
    CHECK(contains(r.out, "a_max_witness = b' = 5 gives unique product 8"));
}

TEST_CASE("free quandle verb multiplies literals and samples semi-latinness") {
    const auto r = run("fq --rank 2 --mul-left \"a0^[]\" --mul-right \"a1^[]\" "
                       "--semi-latin-trials 200 --seed 4 --format kv");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "product = a0^[+1]"));
    CHECK(contains(r.out, "right_quotient = a0^[-1]"));
    CHECK(contains(r.out, "semi_latin_violations = 0"));
}

TEST_CASE("delta-square verb pairs the test with triviality") {
    const auto trivial = run("delta-square --quandle T5 --ring z --format kv");
    CHECK(trivial.exit_code == 0);
    CHECK(contains(trivial.out, "delta_square_zero = true"));
    CHECK(contains(trivial.out, "trivial = true"));
    const auto r3 = run("delta-square --quandle R3 --ring z --format kv");
    CHECK(contains(r3.out, "delta_square_zero = false"));
    CHECK(contains(r3.out, "trivial = false"));
}

TEST_CASE("predicates verb reports 2-transitivity on request") {
    const auto r3 = run("predicates --quandle R3 --two-transitive --format kv");
    CHECK(contains(r3.out, "two_transitive = true"));
    const auto r4 = run("predicates --quandle R4 --two-transitive --format kv");
    CHECK(contains(r4.out, "two_transitive = false"));
}

TEST_CASE("parametric certification and mod reduction via maximal-quandles") {
    const auto m = run("maximal-quandles --quandle R4 --parametric R4 --format kv");
    CHECK(m.exit_code == 0);
    CHECK(contains(m.out, "certified = true"));

    const auto n2 = run("maximal-quandles --quandle Cs4 --parametric Cs4:N2 --format kv");
    CHECK(n2.exit_code == 0);
    CHECK(contains(n2.out, "not_extendable = true"));

    const auto red = run("maximal-quandles --quandle R3 --mod-reduction 2 --bound 2 --format kv");
    CHECK(red.exit_code == 0);
    CHECK(contains(red.out, "surjective = false"));
}

TEST_CASE("order verb samples monotonicity for integer-rule quandles") {
    const auto left = run("order --quandle CoreZ --side left --trials 2000 --seed 0 --format kv");
    CHECK(left.exit_code == 0);
    CHECK(contains(left.out, "violations = 0"));
    const auto right = run("order --quandle CoreZ --side right --trials 200 --seed 0 --format kv");
    CHECK(contains(right.out, "witness = "));
}

TEST_CASE("commutators verb: exact length and delta-equality witnesses") {
    const auto cl = run("commutators --quandle R4 --ring z --cl \"a1 - a0\" --cl-bound 1 --format kv");
    CHECK(cl.exit_code == 0);
    CHECK(contains(cl.out, "decided = true"));
    CHECK(contains(cl.out, "length = 1"));

    const auto de = run("commutators --quandle \"Alex(Z5,2)\" --ring z --delta-equality --format kv");
    CHECK(de.exit_code == 0);
    CHECK(contains(de.out, "delta_equality_certified = true"));
    CHECK(contains(de.out, "hypothesis = strongly non-commutative"));
}

TEST_CASE("kv format omits comment lines, text format includes them") {
    const auto text = run("maximal-quandles --quandle R3 --ring zmod:2 --format text");
    CHECK(contains(text.out, "# the zero quandle"));
    const auto kv = run("maximal-quandles --quandle R3 --ring zmod:2 --format kv");
    CHECK_FALSE(contains(kv.out, "#"));
}

TEST_CASE("table files accept interior comments") {
    const std::string f = kTmp + "/commented.q";
    std::ofstream out(f);
    out << "# order three\n3\n0 0 1\n# middle comment\n1 1 0\n2 2 2\nlabels: x y z\n";
    out.close();
    const auto r = run("verify --in " + f);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "valid = true"));
}
