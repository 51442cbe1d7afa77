#include "quandlekit/catalog.hpp"

#include <algorithm>
#include <cctype>

namespace quandlekit::catalog {

namespace {

std::string lower(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = {
        {"T1", Kind::finite, 1, "trivial quandle"},
        {"T2", Kind::finite, 2, "trivial quandle"},
        {"T3", Kind::finite, 3, "trivial quandle"},
        {"T4", Kind::finite, 4, "trivial quandle"},
        {"T5", Kind::finite, 5, "trivial quandle"},
        {"T6", Kind::finite, 6, "trivial quandle"},
        {"R3", Kind::finite, 3, "dihedral quandle on Z_3"},
        {"R4", Kind::finite, 4, "dihedral quandle on Z_4"},
        {"R5", Kind::finite, 5, "dihedral quandle on Z_5"},
        {"R6", Kind::finite, 6, "dihedral quandle on Z_6"},
        {"Cs4", Kind::finite, 3, "3-element singular cyclic quandle"},
        {"Conj(S3)", Kind::finite, 6, "conjugation quandle of the symmetric group S3"},
        {"Core(Z5)", Kind::finite, 5, "core quandle of the cyclic group Z_5"},
        {"Alex(Z5,2)", Kind::finite, 5, "Alexander quandle of Z_5 with multiplication by 2"},
        {"CoreZ", Kind::integer_rule, -1, "core quandle of the integers, a*b = 2b - a"},
        {"AlexZ(-1)", Kind::integer_rule, -1, "Alexander quandle of Z with c = -1"},
        {"FQ1", Kind::free_quandle, -1, "free quandle of rank 1"},
        {"FQ2", Kind::free_quandle, -1, "free quandle of rank 2"},
        {"FQ3", Kind::free_quandle, -1, "free quandle of rank 3"},
    };
    return table;
}

std::string normalize_name(const std::string& name) {
    const std::string key = lower(name);
    for (const auto& e : entries()) {
        if (lower(e.name) == key) return e.name;
    }
    throw UnknownNameError("'" + name + "' is not in the catalog");
}

bool has(const std::string& name) {
    const std::string key = lower(name);
    return std::any_of(entries().begin(), entries().end(),
                       [&](const Entry& e) { return lower(e.name) == key; });
}

Kind kind(const std::string& name) {
    const std::string canonical = normalize_name(name);
    for (const auto& e : entries()) {
        if (e.name == canonical) return e.kind;
    }
    throw UnknownNameError(name);
}

QuandlePtr quandle(const std::string& name) {
    const std::string canonical = normalize_name(name);
    if (canonical[0] == 'T' && canonical.size() == 2) {
        return share(make_trivial(canonical[1] - '0'));
    }
    if (canonical[0] == 'R' && canonical.size() == 2) {
        return share(make_dihedral(canonical[1] - '0'));
    }
    if (canonical == "Cs4") return share(make_cs4());
    if (canonical == "Conj(S3)") return share(make_conj(FiniteGroup::symmetric(3)));
    if (canonical == "Core(Z5)") return share(make_core(FiniteGroup::cyclic(5)));
    if (canonical == "Alex(Z5,2)") {
        const std::vector<int> phi = {0, 2, 4, 1, 3};  // multiplication by 2 mod 5
        return share(make_alex(FiniteGroup::cyclic(5), phi));
    }
    throw UnknownNameError("'" + name + "' is not a finite catalog quandle");
}

IntQuandle int_quandle(const std::string& name) {
    const std::string canonical = normalize_name(name);
    if (canonical == "CoreZ") return IntQuandle::core();
    if (canonical == "AlexZ(-1)") return IntQuandle::alex(-1);
    throw UnknownNameError("'" + name + "' is not an integer-rule catalog quandle");
}

int free_rank(const std::string& name) {
    const std::string canonical = normalize_name(name);
    if (canonical.rfind("FQ", 0) == 0) return canonical[2] - '0';
    throw UnknownNameError("'" + name + "' is not a free catalog quandle");
}

std::vector<std::pair<std::string, QuandlePtr>> finite_quandles(int max_order) {
    std::vector<std::pair<std::string, QuandlePtr>> out;
    for (const auto& e : entries()) {
        if (e.kind != Kind::finite || e.order > max_order) continue;
        out.emplace_back(e.name, quandle(e.name));
    }
    return out;
}

}  // namespace quandlekit::catalog
