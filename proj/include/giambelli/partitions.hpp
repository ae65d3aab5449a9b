#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace isotropic {

// Partitions are weakly decreasing vectors of positive parts; trailing
// zeros are stripped by normalize(). Integer sequences that may contain
// zeros or negatives (compositions, raising-operator indices) use the
// same vector<int> representation.
using Partition = std::vector<int>;
using IntVec = std::vector<int>;

enum class Family { B, C };

// Box [row, col] of a Young diagram, 1-indexed.
struct Box {
    int row;
    int col;
    friend auto operator<=>(const Box&, const Box&) = default;
};

Partition normalize(IntVec v);
bool is_partition(const IntVec& v);
bool is_strict(const Partition& p);
bool is_k_strict(const Partition& p, int k);
int weight(const IntVec& v);
int part(const IntVec& v, int i);  // 1-indexed, 0 past the end
Partition conjugate(const Partition& p);
bool contains(const Partition& outer, const Partition& inner);

// λ = (λ¹, λ²) with λ¹ the parts exceeding k (shifted down by k) and λ²
// the parts capped at k.
std::pair<Partition, Partition> k_split(const Partition& p, int k);
int ell_k(const Partition& p, int k);

// λ ∈ P(k,n): at most n-k parts, first part at most n+k.
bool in_P(const Partition& p, int k, int n);

// Index set p_1 < ... < p_ℓ of the Schubert variety for λ.
std::vector<int> schubert_index(const Partition& p, int k, int n, Family family);

// Diagonal coordinate shared by k-related boxes.
int k_diagonal(const Box& b, int k);
bool k_related(const Box& a, const Box& b, int k);

std::vector<Box> boxes(const Partition& p);
// Boxes of outer that are not in inner (outer need not contain inner).
std::vector<Box> skew_boxes(const IntVec& outer, const IntVec& inner);

// μ ⪰ λ in dominance order, padding with zeros.
bool dominates(const IntVec& mu, const IntVec& lambda);

std::vector<Partition> partitions_of(int d, int max_part = -1);
std::vector<Partition> k_strict_partitions(int d, int k);
std::vector<Partition> k_strict_partitions_up_to(int max_weight, int k);
std::vector<Partition> P_kn(int k, int n);

// (#k-strict partitions of d, #k-odd partitions of d), where k-odd means
// every part greater than 2k is odd.
std::pair<std::uint64_t, std::uint64_t> count_bases(int d, int k);

std::string to_string(const IntVec& v);
IntVec parse_intvec(const std::string& s);

}  // namespace isotropic
