#pragma once

#include <cstdint>
#include <vector>

#include "regmat/formulas.hpp"
#include "regmat/matrix.hpp"

// Brute-force ground truth at small n: the whole matrix set, its orbit
// partition under row/column permutations, and checks of the canonical
// element claims against it. A test fixture, not a production path.
namespace regmat {

inline constexpr int kOracleMaxN = 6;

// Tuples are packed into one word for set membership: row i occupies bits
// [i*n, (i+1)*n). Requires n*n <= 64, amply covered by the n <= 6 cap.
std::uint64_t pack_tuple(const RowTuple& t);
RowTuple unpack_tuple(std::uint64_t packed, int n);

// Every tuple over MaskPool^n (rows in any order, repeats allowed) whose
// columns all have popcount k; ascending lexicographic order.
std::vector<RowTuple> enumerate_lambda_set(int n, int k);

// Two independent grouping strategies, kept separate so that one can
// cross-validate the other:
//   closure  - breadth-first closure under adjacent row and column swaps
//   min_key  - bucket by the lexicographic minimum over all n!^2 images
//              (practical only for small n)
enum class Grouping { closure, min_key };

struct OrbitPartition {
    int n = 0;
    int k = 0;
    // members of each class as packed tuples, ascending within a class
    std::vector<std::vector<std::uint64_t>> classes;
    std::uint64_t total = 0;  // sum of class sizes
};

OrbitPartition orbit_partition(int n, int k, Grouping how = Grouping::closure);

struct UniquenessReport {
    int n = 0;
    int k = 0;
    bool holds = false;  // every class contains exactly one canonical element
    struct Witness {
        std::size_t class_index;
        std::uint64_t canonical_members;  // 0 or >= 2
        RowTuple representative;
    };
    std::vector<Witness> witnesses;
};

UniquenessReport verify_canonical_uniqueness(int n, int k);

struct CountsReport {
    int n = 0;
    int k = 0;
    std::uint64_t set_size = 0;     // brute-force |lambda set|
    bool has_formula = false;       // k <= 3
    BigCount lambda_formula;        // meaningful when has_formula
    std::uint64_t class_count = 0;  // orbits found by the oracle
    std::uint64_t canonical_mu = 0; // pruned search result
    bool lambda_matches = false;    // true when no formula applies
    bool mu_matches = false;
};

CountsReport verify_counts(int n, int k);

}  // namespace regmat
