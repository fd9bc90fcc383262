#include "pg/group.hpp"

#include "pg/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <sstream>

namespace pg {

namespace {

num checked_order(const GroupSpec& spec);

std::vector<int> cyclic_table(int n) {
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    return t;
}

// Elements of D_n: a^i for i in [0,n) mapped to i, a^i b mapped to n+i.
std::vector<int> dihedral_table(int n) {
    int m = 2 * n;
    std::vector<int> t(static_cast<std::size_t>(m) * m);
    auto id = [&](bool refl, int i) { return (refl ? n : 0) + ((i % n) + n) % n; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            t[static_cast<std::size_t>(id(false, i)) * m + id(false, j)] = id(false, i + j);
            t[static_cast<std::size_t>(id(false, i)) * m + id(true, j)] = id(true, i + j);
            t[static_cast<std::size_t>(id(true, i)) * m + id(false, j)] = id(true, i - j);
            t[static_cast<std::size_t>(id(true, i)) * m + id(true, j)] = id(false, i - j);
        }
    }
    return t;
}

// Q_{4n}: x^i for i in [0,2n) mapped to i, x^i y mapped to 2n+i.
// Relations: x^{2n} = 1, y^2 = x^n, y^{-1} x y = x^{-1}.
std::vector<int> quaternion_table(int fourn) {
    int n = fourn / 4;
    int twon = 2 * n;
    int m = fourn;
    std::vector<int> t(static_cast<std::size_t>(m) * m);
    auto id = [&](bool ypart, int i) { return (ypart ? twon : 0) + ((i % twon) + twon) % twon; };
    for (int i = 0; i < twon; ++i) {
        for (int j = 0; j < twon; ++j) {
            t[static_cast<std::size_t>(id(false, i)) * m + id(false, j)] = id(false, i + j);
            t[static_cast<std::size_t>(id(false, i)) * m + id(true, j)] = id(true, i + j);
            t[static_cast<std::size_t>(id(true, i)) * m + id(false, j)] = id(true, i - j);
            t[static_cast<std::size_t>(id(true, i)) * m + id(true, j)] = id(false, i - j + n);
        }
    }
    return t;
}

// Upper unitriangular 3x3 matrices over F_p, encoded as (a, b, c) with
// rows [[1,a,b],[0,1,c],[0,0,1]]; id = a*p^2 + b*p + c.
std::vector<int> unitriangular3_table(int p) {
    int m = p * p * p;
    std::vector<int> t(static_cast<std::size_t>(m) * m);
    auto enc = [&](int a, int b, int c) { return (a * p + b) * p + c; };
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int a2 = 0; a2 < p; ++a2)
                    for (int b2 = 0; b2 < p; ++b2)
                        for (int c2 = 0; c2 < p; ++c2)
                            t[static_cast<std::size_t>(enc(a, b, c)) * m +
                              enc(a2, b2, c2)] =
                                enc((a + a2) % p, (b + b2 + a * c2) % p, (c + c2) % p);
    return t;
}

// Invertible 2x2 matrices over F_p, (a,b,c,d) lexicographic, identity swapped
// to element 0 so the catalog convention (element 0 is the identity) holds.
std::vector<int> gl2_table(int p, int& out_n) {
    std::vector<std::array<int, 4>> mats;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d)
                    if ((a * d - b * c) % p != 0)
                        mats.push_back({a, b, c, d});
    std::array<int, 4> const eye{1, 0, 0, 1};
    auto it = std::find(mats.begin(), mats.end(), eye);
    std::swap(mats.front(), *it);

    int m = static_cast<int>(mats.size());
    out_n = m;
    std::vector<int> index(static_cast<std::size_t>(p) * p * p * p, -1);
    auto key = [&](const std::array<int, 4>& x) {
        return ((static_cast<std::size_t>(x[0]) * p + x[1]) * p + x[2]) * p + x[3];
    };
    for (int i = 0; i < m; ++i) index[key(mats[i])] = i;

    std::vector<int> t(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
        const auto& x = mats[i];
        for (int j = 0; j < m; ++j) {
            const auto& y = mats[j];
            std::array<int, 4> z{(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
                                 (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
            t[static_cast<std::size_t>(i) * m + j] = index[key(z)];
        }
    }
    return t;
}

GroupTable direct_product(const std::vector<GroupSpec>& factors, int order_cap,
                          const std::string& name) {
    if (factors.empty()) fail(errc::invalid_spec, "DirectProduct: no factors");
    std::vector<GroupTable> gs;
    num n = 1;
    for (const auto& f : factors) {
        n *= checked_order(f);
        if (n > order_cap) fail(errc::too_large, "DirectProduct: order exceeds cap");
        gs.push_back(build_group(f, order_cap));
    }
    int m = static_cast<int>(n);
    // mixed radix, first factor most significant
    std::vector<int> radix(gs.size());
    for (std::size_t i = 0; i < gs.size(); ++i) radix[i] = gs[i].order();
    auto decode = [&](int id, std::vector<int>& digits) {
        for (std::size_t i = gs.size(); i-- > 0;) {
            digits[i] = id % radix[i];
            id /= radix[i];
        }
    };
    auto encode = [&](const std::vector<int>& digits) {
        int id = 0;
        for (std::size_t i = 0; i < gs.size(); ++i) id = id * radix[i] + digits[i];
        return id;
    };
    std::vector<int> t(static_cast<std::size_t>(m) * m);
    std::vector<int> da(gs.size()), db(gs.size()), dc(gs.size());
    for (int a = 0; a < m; ++a) {
        decode(a, da);
        for (int b = 0; b < m; ++b) {
            decode(b, db);
            for (std::size_t i = 0; i < gs.size(); ++i) dc[i] = gs[i].mul(da[i], db[i]);
            t[static_cast<std::size_t>(a) * m + b] = encode(dc);
        }
    }
    return GroupTable::from_dense(m, std::move(t), name);
}

num checked_order(const GroupSpec& spec) {
    using Kind = GroupSpec::Kind;
    switch (spec.kind) {
    case Kind::cyclic:
        if (spec.param < 1) fail(errc::invalid_spec, "Cyclic: n must be >= 1");
        return spec.param;
    case Kind::dihedral:
        if (spec.param < 2) fail(errc::invalid_spec, "Dihedral: n must be >= 2");
        return 2 * spec.param;
    case Kind::generalized_quaternion:
        if (spec.param < 8 || spec.param % 4 != 0)
            fail(errc::invalid_spec, "GeneralizedQuaternion: order must be >= 8 and divisible by 4");
        return spec.param;
    case Kind::symmetric: {
        if (spec.param < 1 || spec.param > 8)
            fail(errc::invalid_spec, "Symmetric: degree must be in [1, 8]");
        num f = 1;
        for (num i = 2; i <= spec.param; ++i) f *= i;
        return f;
    }
    case Kind::direct_product: {
        num n = 1;
        for (const auto& f : spec.factors) n *= checked_order(f);
        return n;
    }
    case Kind::unitriangular3:
        if (!is_prime(spec.param)) fail(errc::invalid_spec, "UniTriangular3: p must be prime");
        return spec.param * spec.param * spec.param;
    case Kind::gl2:
        if (!is_prime(spec.param)) fail(errc::invalid_spec, "GL2: p must be prime");
        return (spec.param * spec.param - 1) * (spec.param * spec.param - spec.param);
    case Kind::cayley_file:
        return 0; // unknown until parsed; cap checked by the loader
    }
    fail(errc::invalid_spec, "unknown group spec");
}

} // namespace

SymmetricMul::SymmetricMul(int degree) : degree_(degree) {
    order_ = 1;
    for (int i = 2; i <= degree; ++i) order_ *= i;
    perms_.reserve(order_);
    std::vector<std::uint8_t> p(degree);
    std::iota(p.begin(), p.end(), std::uint8_t{0});
    do {
        perms_.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

int SymmetricMul::rank_of(const std::vector<std::uint8_t>& p) const {
    // Lehmer code, factorial base
    int rank = 0;
    for (int i = 0; i < degree_; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < degree_; ++j)
            if (p[j] < p[i]) ++smaller;
        int f = 1;
        for (int k = 2; k <= degree_ - 1 - i; ++k) f *= k;
        rank += smaller * f;
    }
    return rank;
}

int SymmetricMul::mul(int a, int b) const {
    const auto& pa = perms_[a];
    const auto& pb = perms_[b];
    std::vector<std::uint8_t> c(degree_);
    for (int i = 0; i < degree_; ++i) c[i] = pa[pb[i]];
    return rank_of(c);
}

void GroupTable::check_element(int g, const char* who) const {
    if (g < 0 || g >= n_)
        fail(errc::out_of_range, std::string(who) + ": element id out of range");
}

void GroupTable::init_caches() {
    inv_.assign(n_, -1);
    order_.assign(n_, 0);
    cyc_.assign(n_, {});
    for (int g = 0; g < n_; ++g) {
        std::vector<int> seen;
        int x = g;
        int k = 1;
        while (x != identity_) {
            seen.push_back(x);
            x = mul(x, g);
            ++k;
            if (k > n_) fail(errc::not_a_group, "element has no finite order within |G| steps");
        }
        order_[g] = k;
        seen.push_back(identity_);
        std::sort(seen.begin(), seen.end());
        cyc_[g] = std::move(seen);
    }
    for (int g = 0; g < n_; ++g) {
        // g^(o(g)-1) is the inverse
        inv_[g] = power(g, order_[g] - 1);
        if (inv_[g] == -1 || mul(g, inv_[g]) != identity_ || mul(inv_[g], g) != identity_)
            fail(errc::not_a_group, "no two-sided inverse");
    }
}

int GroupTable::inverse(int g) const {
    check_element(g, "inverse");
    return inv_[g];
}

int GroupTable::element_order(int g) const {
    check_element(g, "element_order");
    return order_[g];
}

int GroupTable::power(int g, num k) const {
    check_element(g, "power");
    num o = order_[g];
    k %= o;
    if (k < 0) k += o;
    int acc = identity_;
    int base = g;
    while (k) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

const std::vector<int>& GroupTable::cyclic_subgroup(int g) const {
    check_element(g, "cyclic_subgroup");
    return cyc_[g];
}

bool GroupTable::generates(int g, int x) const {
    check_element(g, "generates");
    check_element(x, "generates");
    const auto& c = cyc_[g];
    return std::binary_search(c.begin(), c.end(), x);
}

GroupTable GroupTable::from_dense(int n, std::vector<int> table, std::string name) {
    if (n < 1) fail(errc::invalid_spec, "group order must be positive");
    if (table.size() != static_cast<std::size_t>(n) * n)
        fail(errc::invalid_spec, "Cayley table has wrong size");
    for (int v : table)
        if (v < 0 || v >= n) fail(errc::not_a_group, "Cayley table entry out of range");
    GroupTable G;
    G.n_ = n;
    G.name_ = std::move(name);
    G.dense_ = std::move(table);
    // identity: the row acting as the identity permutation, checked two-sided
    int id = -1;
    for (int e = 0; e < n && id < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = G.dense_[static_cast<std::size_t>(e) * n + x] == x &&
                 G.dense_[static_cast<std::size_t>(x) * n + e] == x;
        if (ok) id = e;
    }
    if (id < 0) fail(errc::not_a_group, "no identity row in Cayley table");
    G.identity_ = id;
    G.init_caches();
    return G;
}

GroupTable GroupTable::from_symmetric(int degree, std::string name) {
    GroupTable G;
    G.sym_ = std::make_shared<SymmetricMul>(degree);
    G.n_ = G.sym_->order();
    G.name_ = std::move(name);
    G.identity_ = 0; // identity permutation has rank 0
    G.init_caches();
    return G;
}

GroupSpec GroupSpec::Cyclic(num n) { return {Kind::cyclic, n, {}, {}}; }
GroupSpec GroupSpec::Dihedral(num n) { return {Kind::dihedral, n, {}, {}}; }
GroupSpec GroupSpec::GeneralizedQuaternion(num m) { return {Kind::generalized_quaternion, m, {}, {}}; }
GroupSpec GroupSpec::Symmetric(num n) { return {Kind::symmetric, n, {}, {}}; }
GroupSpec GroupSpec::DirectProduct(std::vector<GroupSpec> factors) {
    return {Kind::direct_product, 0, std::move(factors), {}};
}
GroupSpec GroupSpec::UniTriangular3(num p) { return {Kind::unitriangular3, p, {}, {}}; }
GroupSpec GroupSpec::GL2(num p) { return {Kind::gl2, p, {}, {}}; }
GroupSpec GroupSpec::FromCayleyFile(std::string path) { return {Kind::cayley_file, 0, {}, std::move(path)}; }

std::string GroupSpec::describe() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::cyclic: os << "C" << param; break;
    case Kind::dihedral: os << "D" << param; break;
    case Kind::generalized_quaternion: os << "Q" << param; break;
    case Kind::symmetric: os << "S" << param; break;
    case Kind::unitriangular3: os << "UT3_" << param; break;
    case Kind::gl2: os << "GL2_" << param; break;
    case Kind::cayley_file: os << "file:" << path; break;
    case Kind::direct_product:
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) os << "x";
            os << factors[i].describe();
        }
        break;
    }
    return os.str();
}

GroupTable load_cayley_csv(const std::string& path, int order_cap); // io.cpp

GroupTable build_group(const GroupSpec& spec, int order_cap) {
    using Kind = GroupSpec::Kind;
    if (spec.kind != Kind::cayley_file) {
        num n = checked_order(spec);
        if (n > order_cap) fail(errc::too_large, spec.describe() + ": order exceeds cap");
    }
    switch (spec.kind) {
    case Kind::cyclic:
        return GroupTable::from_dense(static_cast<int>(spec.param),
                                      cyclic_table(static_cast<int>(spec.param)), spec.describe());
    case Kind::dihedral:
        return GroupTable::from_dense(static_cast<int>(2 * spec.param),
                                      dihedral_table(static_cast<int>(spec.param)), spec.describe());
    case Kind::generalized_quaternion:
        return GroupTable::from_dense(static_cast<int>(spec.param),
                                      quaternion_table(static_cast<int>(spec.param)), spec.describe());
    case Kind::symmetric: {
        int deg = static_cast<int>(spec.param);
        if (deg >= 7) return GroupTable::from_symmetric(deg, spec.describe());
        num n = checked_order(spec);
        GroupTable big = GroupTable::from_symmetric(deg <= 1 ? 1 : deg);
        // small degrees: copy into a dense table
        std::vector<int> t(static_cast<std::size_t>(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = big.mul(a, b);
        return GroupTable::from_dense(static_cast<int>(n), std::move(t), spec.describe());
    }
    case Kind::direct_product:
        return direct_product(spec.factors, order_cap, spec.describe());
    case Kind::unitriangular3:
        return GroupTable::from_dense(static_cast<int>(checked_order(spec)),
                                      unitriangular3_table(static_cast<int>(spec.param)),
                                      spec.describe());
    case Kind::gl2: {
        int n = 0;
        auto t = gl2_table(static_cast<int>(spec.param), n);
        return GroupTable::from_dense(n, std::move(t), spec.describe());
    }
    case Kind::cayley_file:
        return load_cayley_csv(spec.path, order_cap);
    }
    fail(errc::invalid_spec, "unknown group spec");
}

int element_order(const GroupTable& G, int g) { return G.element_order(g); }

std::vector<int> centralizer(const GroupTable& G, int g) {
    if (g < 0 || g >= G.order()) fail(errc::out_of_range, "centralizer: element out of range");
    std::vector<int> out;
    for (int h = 0; h < G.order(); ++h)
        if (G.mul(g, h) == G.mul(h, g)) out.push_back(h);
    return out;
}

std::string check_group_axioms(const GroupTable& G) {
    int n = G.order();
    int e = G.identity();
    for (int x = 0; x < n; ++x)
        if (G.mul(e, x) != x || G.mul(x, e) != x)
            return "identity is not two-sided neutral at " + std::to_string(x);
    for (int x = 0; x < n; ++x) {
        int y = G.inverse(x);
        if (G.mul(x, y) != e || G.mul(y, x) != e)
            return "inverse fails at " + std::to_string(x);
    }
    auto check_triple = [&](int a, int b, int c) {
        return G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c));
    };
    if (n <= 256) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (!check_triple(a, b, c))
                        return "associativity fails at (" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) + ")";
    } else {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
        std::uniform_int_distribution<int> d(0, n - 1);
        long long samples = 10LL * n * n;
        for (long long i = 0; i < samples; ++i) {
            int a = d(rng), b = d(rng), c = d(rng);
            if (!check_triple(a, b, c))
                return "associativity fails at (" + std::to_string(a) + "," +
                       std::to_string(b) + "," + std::to_string(c) + ")";
        }
    }
    return {};
}

GroupTable relabel_group(const GroupTable& G, const std::vector<int>& perm) {
    int n = G.order();
    if (static_cast<int>(perm.size()) != n)
        fail(errc::invalid_params, "relabel_group: permutation has wrong size");
    std::vector<int> inv(n, -1);
    for (int i = 0; i < n; ++i) {
        if (perm[i] < 0 || perm[i] >= n || inv[perm[i]] != -1)
            fail(errc::invalid_params, "relabel_group: not a permutation");
        inv[perm[i]] = i;
    }
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[static_cast<std::size_t>(a) * n + b] = perm[G.mul(inv[a], inv[b])];
    return GroupTable::from_dense(n, std::move(t), G.name());
}

} // namespace pg
