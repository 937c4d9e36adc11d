#include "binform/repdim.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace binform {

namespace {

// Coefficient table of the Gaussian binomial [parts+maxpart, maxpart]_q,
// whose q^k coefficient counts partitions of k inside a parts x maxpart
// box. Memoized per (parts, maxpart).
class PartitionTable {
public:
    static Int count(long k, int parts, int maxpart) {
        if (k < 0) return 0;
        if (k == 0) return 1;
        if (parts <= 0 || maxpart <= 0) return 0;
        if (k > static_cast<long>(parts) * maxpart) return 0;
        static std::mutex mu;
        static std::map<std::pair<int, int>, std::vector<Int>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(parts, maxpart);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, build(parts, maxpart)).first;
        return it->second.at(static_cast<std::size_t>(k));
    }

private:
    static std::vector<Int> build(int parts, int maxpart) {
        // prod_{i=1..maxpart} (1 - q^(parts+i)) / (1 - q^i); every partial
        // product is itself a Gaussian binomial, so the division is exact.
        long total = static_cast<long>(parts) * maxpart;
        std::vector<Int> c(static_cast<std::size_t>(total) + 1, 0);
        c[0] = 1;
        for (int i = 1; i <= maxpart; ++i) {
            // multiply by (1 - q^(parts+i))
            for (long t = total; t >= parts + i; --t)
                c[static_cast<std::size_t>(t)] -= c[static_cast<std::size_t>(t - parts - i)];
            // divide by (1 - q^i): c'_t = c_t + c'_{t-i}
            for (long t = i; t <= total; ++t)
                c[static_cast<std::size_t>(t)] += c[static_cast<std::size_t>(t - i)];
        }
        return c;
    }
};

}  // namespace

Int partition_count(long k, int parts, int maxpart) {
    // Partitions into at most `parts` parts each at most `maxpart`; conjugate
    // so the DP above (multiplicity of each size bounded by `parts`) applies.
    return PartitionTable::count(k, parts, maxpart);
}

long eta(int d, int m, int n) {
    if (d < 0 || m < 0) throw std::domain_error("eta: d, m >= 0 required");
    if (n < 0) return 0;
    long md = static_cast<long>(m) * d;
    if ((md - n) % 2 != 0 || md - n < 0) return 0;
    long k = (md - n) / 2;
    Int diff = partition_count(k, m, d) - partition_count(k - 1, m, d);
    if (diff < 0) throw std::logic_error("eta: negative multiplicity");
    return diff.get_si();
}

IsotypicDecomposition decompose_sym(int d, int m) {
    IsotypicDecomposition dec;
    dec.d = d;
    dec.m = m;
    long md = static_cast<long>(m) * d;
    for (long n = md; n >= 0; n -= 2) {
        long mult = eta(d, m, static_cast<int>(n));
        if (mult > 0) dec.parts.emplace_back(static_cast<int>(n), mult);
    }
    // dim identity: sum mult*(n+1) = binom(m+d, d)
    Int total = 0;
    for (const auto& [n, mult] : dec.parts) total += Int(mult) * (n + 1);
    if (total != dim_graded_ring(d, m)) throw std::logic_error("decompose_sym: dimension identity failed");
    return dec;
}

std::string decomposition_to_string(const IsotypicDecomposition& dec) {
    if (dec.parts.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [n, mult] : dec.parts) {
        if (!first) out << " + ";
        first = false;
        if (mult != 1) out << mult << "*";
        out << "S_" << n;
    }
    return out.str();
}

long h_invariant_dim(int d) {
    if (d < 1) throw std::domain_error("h_invariant_dim: d >= 1 required");
    long e = d / 6;
    int k = d % 6;
    return e + (k == 1 ? 0 : 1);
}

long h_invariant_dim_bruteforce(int d) {
    long count = 0;
    for (int b = 0; 3 * b <= d; ++b)
        if ((d - 3 * b) % 2 == 0) ++count;
    return count;
}

Int dim_graded_ring(int d, int m) {
    if (d < 0 || m < 0) return 0;
    return binomial(Int(m) + d, d);
}

}  // namespace binform
