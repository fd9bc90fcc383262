#pragma once

#include "pg/numtheory.hpp"

#include <memory>
#include <string>
#include <vector>

namespace pg {

// Multiplication backend for symmetric groups too large for a dense table
// (degree 7 and 8). Permutations are indexed by lexicographic rank.
class SymmetricMul {
public:
    explicit SymmetricMul(int degree);
    int degree() const { return degree_; }
    int order() const { return order_; }
    int mul(int a, int b) const; // rank of composition p_a ∘ p_b, (p∘q)(i) = p[q[i]]
    const std::vector<std::uint8_t>& perm(int rank) const { return perms_[rank]; }
    int rank_of(const std::vector<std::uint8_t>& p) const;

private:
    int degree_;
    int order_;
    std::vector<std::vector<std::uint8_t>> perms_; // rank -> permutation
};

// A finite group materialized behind a single multiplication entry point:
// either a dense Cayley table or a rank-indexed permutation backend.
// Element orders and cyclic subgroups are cached at construction.
class GroupTable {
public:
    GroupTable() = default;

    static GroupTable from_dense(int n, std::vector<int> table, std::string name = {});
    static GroupTable from_symmetric(int degree, std::string name = {});

    int order() const { return n_; }
    int identity() const { return identity_; }
    const std::string& name() const { return name_; }

    int mul(int a, int b) const {
        return dense_.empty() ? sym_->mul(a, b) : dense_[static_cast<std::size_t>(a) * n_ + b];
    }

    int inverse(int g) const;
    int element_order(int g) const;
    int power(int g, num k) const;

    // ⟨g⟩ as a sorted list of element ids.
    const std::vector<int>& cyclic_subgroup(int g) const;
    // x ∈ ⟨g⟩, by binary search in the cached subgroup.
    bool generates(int g, int x) const;

    bool is_dense() const { return !dense_.empty(); }

private:
    void check_element(int g, const char* who) const;
    void init_caches(); // identity must be set; fills inv/order/cyc

    int n_ = 0;
    int identity_ = 0;
    std::string name_;
    std::vector<int> dense_; // n*n row-major; empty when permutation-backed
    std::shared_ptr<const SymmetricMul> sym_;
    std::vector<int> inv_;
    std::vector<int> order_;
    std::vector<std::vector<int>> cyc_;
};

struct GroupSpec {
    enum class Kind {
        cyclic,
        dihedral,
        generalized_quaternion,
        symmetric,
        direct_product,
        unitriangular3,
        gl2,
        cayley_file,
    };

    Kind kind = Kind::cyclic;
    num param = 0;                  // n, 4n, degree, or the prime p
    std::vector<GroupSpec> factors; // direct_product only
    std::string path;               // cayley_file only

    static GroupSpec Cyclic(num n);
    static GroupSpec Dihedral(num n);              // order 2n
    static GroupSpec GeneralizedQuaternion(num m); // order m, m divisible by 4, m >= 8
    static GroupSpec Symmetric(num n);
    static GroupSpec DirectProduct(std::vector<GroupSpec> factors);
    static GroupSpec UniTriangular3(num p);
    static GroupSpec GL2(num p);
    static GroupSpec FromCayleyFile(std::string path);

    std::string describe() const;
};

inline constexpr int kDefaultOrderCap = 50000;

GroupTable build_group(const GroupSpec& spec, int order_cap = kDefaultOrderCap);

// Least k >= 1 with g^k = 1; equals |⟨g⟩|.
int element_order(const GroupTable& G, int g);

// {h : gh = hg}, sorted.
std::vector<int> centralizer(const GroupTable& G, int g);

// Group axioms: full check for n <= 256, sampled (>= 10 n^2 triples) above.
// Returns an explanation of the first violation, or empty when none found.
std::string check_group_axioms(const GroupTable& G);

// Relabel elements by a bijection perm (new id = perm[old id]).
GroupTable relabel_group(const GroupTable& G, const std::vector<int>& perm);

} // namespace pg
