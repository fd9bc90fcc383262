#include "pg/catalog.hpp"

#include "pg/errors.hpp"

#include <algorithm>
#include <cctype>

namespace pg {

namespace {

bool parse_num(const std::string& s, num& out) {
    if (s.empty()) return false;
    num v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        v = v * 10 + (c - '0');
        if (v > 100000000) return false;
    }
    out = v;
    return true;
}

GroupSpec parse_atom(const std::string& atom) {
    num n = 0;
    if (atom.size() >= 2 && parse_num(atom.substr(1), n)) {
        switch (atom[0]) {
        case 'C': return GroupSpec::Cyclic(n);
        case 'D': return GroupSpec::Dihedral(n);
        case 'Q': return GroupSpec::GeneralizedQuaternion(n);
        case 'S': return GroupSpec::Symmetric(n);
        default: break;
        }
    }
    if (atom.rfind("UT3_", 0) == 0 && parse_num(atom.substr(4), n))
        return GroupSpec::UniTriangular3(n);
    if (atom.rfind("GL2_", 0) == 0 && parse_num(atom.substr(4), n))
        return GroupSpec::GL2(n);
    fail(errc::invalid_spec, "unrecognized group name '" + atom + "'");
}

} // namespace

GroupTable alternating4() {
    GroupTable s4 = build_group(GroupSpec::Symmetric(4));
    // even permutations = even inversion count
    SymmetricMul sym(4);
    std::vector<int> even;
    for (int r = 0; r < s4.order(); ++r) {
        const auto& p = sym.perm(r);
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) ++inv;
        if (inv % 2 == 0) even.push_back(r);
    }
    std::vector<int> pos(s4.order(), -1);
    for (std::size_t i = 0; i < even.size(); ++i) pos[even[i]] = static_cast<int>(i);
    int m = static_cast<int>(even.size());
    std::vector<int> t(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int c = pos[s4.mul(even[a], even[b])];
            if (c < 0) fail(errc::not_a_group, "even permutations not closed under product");
            t[static_cast<std::size_t>(a) * m + b] = c;
        }
    return GroupTable::from_dense(m, std::move(t), "A4");
}

GroupTable build_named_group(const std::string& name, int order_cap) {
    if (name.rfind("file:", 0) == 0)
        return build_group(GroupSpec::FromCayleyFile(name.substr(5)), order_cap);
    if (name == "A4") return alternating4();

    std::vector<std::string> atoms;
    std::string cur;
    for (char c : name) {
        if (c == 'x') {
            atoms.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    atoms.push_back(cur);
    if (atoms.size() == 1) return build_group(parse_atom(atoms[0]), order_cap);
    std::vector<GroupSpec> factors;
    factors.reserve(atoms.size());
    for (const auto& a : atoms) factors.push_back(parse_atom(a));
    return build_group(GroupSpec::DirectProduct(std::move(factors)), order_cap);
}

std::vector<std::string> catalog_names(CatalogTier tier) {
    std::vector<std::string> names;
    for (int n = 2; n <= 30; ++n) names.push_back("C" + std::to_string(n));
    for (int n = 3; n <= 15; ++n) names.push_back("D" + std::to_string(n));
    names.insert(names.end(), {"Q8", "Q16", "Q32", "S3", "S4", "A4", "C2xC4", "C2xC10",
                               "C6xC2", "C3xC3xC3", "UT3_3"});
    if (tier == CatalogTier::extended || tier == CatalogTier::huge) names.push_back("GL2_5");
    if (tier == CatalogTier::huge) names.push_back("S8");
    return names;
}

} // namespace pg
