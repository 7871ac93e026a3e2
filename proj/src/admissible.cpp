#include "ebg/admissible.hpp"

#include "ebg/errors.hpp"

#include <limits>
#include <string>

namespace ebg {

namespace {

std::int64_t to_i64(const Int& v, const char* what) {
    if (v < 0 || v > std::numeric_limits<std::int64_t>::max())
        throw InputError(std::string(what) + " does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

}  // namespace

Profile3 TargetProfile::profile3_i64() const {
    return {to_i64(c, "target c"), to_i64(p, "target p"), to_i64(s, "target s"),
            to_i64(d, "target d"), to_i64(m, "target m")};
}

Profile2 TargetProfile::profile2_i64() const {
    return {to_i64(a, "target a"), to_i64(b, "target b")};
}

bool check_c1(std::int64_t n, std::int64_t k) {
    if (n < 4 || k < 2) throw InputError("check_c1: need n >= 4, k >= 2");
    Int num = Int(2) * k * (k - 1);
    return num % (Int(n) + 1) == 0;
}

bool check_c2(std::int64_t n, std::int64_t k) {
    if (n < 6 || k < 3) throw InputError("check_c2: need n >= 6, k >= 3");
    Int num = Int(4) * k * (k - 1) * (k - 2);
    Int den = Int(3) * (Int(n) + 1) * (Int(n) * n - n - 4);
    return num % den == 0;
}

bool is_admissible(std::int64_t n, std::int64_t k) {
    if (n < 6 || k < 4) return false;
    Int pairs = Int(n) * (n - 1) / 2;
    if (Int(2) * k > pairs) return false;
    return check_c1(n, k) && check_c2(n, k);
}

std::vector<std::pair<std::int64_t, std::int64_t>> scan_admissible(std::int64_t n_max,
                                                                   std::int64_t count_limit) {
    if (n_max <= 0 && count_limit <= 0)
        throw InputError("scan_admissible: need n_max >= 6 or count_limit >= 1");
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t n = 6; n_max <= 0 || n <= n_max; ++n) {
        // Fast residue prefilter for (C1): products stay well inside 128 bits
        // for any plausible n.
        unsigned __int128 mod = static_cast<unsigned __int128>(n) + 1;
        std::int64_t k_hi = n * (n - 1) / 4;
        for (std::int64_t k = 4; k <= k_hi; ++k) {
            auto r = static_cast<unsigned __int128>(k) % mod;
            auto r1 = (r + mod - 1) % mod;
            if ((2 * r * r1) % mod != 0) continue;
            if (check_c2(n, k)) {
                out.emplace_back(n, k);
                if (count_limit > 0 && static_cast<std::int64_t>(out.size()) >= count_limit)
                    return out;
            }
        }
    }
    return out;
}

TargetProfile target_profile_unchecked(std::int64_t n, std::int64_t k) {
    if (n < 6) throw InputError("target profile needs n >= 6");
    TargetProfile t;
    t.n = n;
    t.k = k;
    Int num = Int(4) * k * (k - 1) * (k - 2);
    Int den = Int(3) * (Int(n) + 1) * (Int(n) * n - n - 4);
    if (num % den != 0) throw InternalError("target profile: triangle count not integral");
    t.c = num / den;
    t.p = Int(3) * (n - 3) * t.c;
    t.s = Int(n - 3) * t.c;
    Int d2 = Int(3) * (n - 3) * (n - 4) * t.c;
    if (d2 % 2 != 0) throw InternalError("target profile: P3uK2 count not integral");
    t.d = d2 / 2;
    Int m8 = Int(n - 3) * (n - 4) * (n - 5) * t.c;
    if (m8 % 8 != 0) throw InternalError("target profile: 3K2 count not integral");
    t.m = m8 / 8;

    Int a_num = Int(2) * k * (k - 1);
    if (a_num % (Int(n) + 1) != 0) throw InternalError("target profile: P3 count not integral");
    t.a = a_num / (Int(n) + 1);
    t.b = binom(k, 2) - t.a;

    if (t.c + t.p + t.s + t.d + t.m != binom(k, 3))
        throw InternalError("target profile: 3-edge counts do not sum to C(k,3)");
    if (t.a + t.b != binom(k, 2))
        throw InternalError("target profile: 2-edge counts do not sum to C(k,2)");
    return t;
}

TargetProfile target_profile(std::int64_t n, std::int64_t k) {
    if (n < 6 || k < 4)
        throw InputError("inadmissible parameters: need n >= 6 and k >= 4");
    if (Int(2) * k > Int(n) * (n - 1) / 2)
        throw InputError("inadmissible parameters: k exceeds C(n,2)/2");
    if (!check_c1(n, k))
        throw InputError("inadmissible parameters: (C1) fails, " + std::to_string(n + 1) +
                         " does not divide 2k(k-1)");
    if (!check_c2(n, k))
        throw InputError("inadmissible parameters: (C2) fails, 3(n+1)(n^2-n-4) does not divide "
                         "4k(k-1)(k-2)");
    return target_profile_unchecked(n, k);
}

}  // namespace ebg
