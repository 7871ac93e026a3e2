#pragma once

#include "ebg/census.hpp"
#include "ebg/ints.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace ebg {

// Target subgraph counts forced on any 3-edge-balanced graph with the given
// parameters. All entries are exact nonnegative integers.
struct TargetProfile {
    std::int64_t n = 0;
    std::int64_t k = 0;
    Int c, p, s, d, m;  // K3, P4, K1,3, P3uK2, 3K2
    Int a, b;           // P3, 2K2
    // int64 view for the search hot path; throws if any entry does not fit.
    Profile3 profile3_i64() const;
    Profile2 profile2_i64() const;
};

// (C1): n+1 divides 2k(k-1). Forced by 2-edge balance.
bool check_c1(std::int64_t n, std::int64_t k);
// (C2): 3(n+1)(n^2-n-4) divides 4k(k-1)(k-2). Forced by 3-edge balance.
bool check_c2(std::int64_t n, std::int64_t k);

// Both divisibility conditions inside the nontrivial range
// n >= 6, 4 <= k <= C(n,2)/2.
bool is_admissible(std::int64_t n, std::int64_t k);

// All admissible pairs with n <= n_max, ordered by n then k, truncated to
// count_limit. Either bound may be 0 to mean "no bound", but not both.
std::vector<std::pair<std::int64_t, std::int64_t>> scan_admissible(std::int64_t n_max,
                                                                   std::int64_t count_limit);

// Throws InputError (naming the failed condition) when (n,k) is inadmissible.
TargetProfile target_profile(std::int64_t n, std::int64_t k);

// Formula evaluation without the admissibility gate; needed for complements,
// whose k exceeds C(n,2)/2. Throws InternalError on any inexact division.
TargetProfile target_profile_unchecked(std::int64_t n, std::int64_t k);

}  // namespace ebg
