#include "homcount/partition.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <sstream>

#include "homcount/errors.hpp"

namespace homcount {

namespace {

// p(30) = 5604; beyond that the lists stop being useful as table indices.
constexpr int kPartitionBound = 30;

void check_partition(const Partition& mu) {
    for (std::size_t i = 0; i < mu.parts.size(); ++i) {
        if (mu.parts[i] <= 0)
            throw InvalidSpec("partition parts must be positive");
        if (i > 0 && mu.parts[i] > mu.parts[i - 1])
            throw InvalidSpec("partition parts must be weakly decreasing");
    }
}

}  // namespace

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
    }
    os << ')';
    return os.str();
}

std::vector<Partition> partitions(int n) {
    if (n < 0) throw InvalidSpec("partitions: negative n");
    if (n > kPartitionBound)
        throw BoundExceeded("partitions: n = " + std::to_string(n) +
                            " exceeds bound " + std::to_string(kPartitionBound));
    std::vector<Partition> out;
    std::vector<int> cur;
    // Descending first-part choice yields reverse lexicographic order.
    std::function<void(int, int)> gen = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(Partition{cur});
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            gen(remaining - p, p);
            cur.pop_back();
        }
    };
    gen(n, n);
    if (n == 0) out = {Partition{{}}};
    return out;
}

int partition_index(const std::vector<Partition>& list, const Partition& mu) {
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i] == mu) return static_cast<int>(i);
    throw IndexOutOfRange("partition " + mu.to_string() + " not in class list");
}

Int z_factor(const Partition& mu) {
    check_partition(mu);
    Int z = 1;
    std::size_t i = 0;
    while (i < mu.parts.size()) {
        std::size_t j = i;
        while (j < mu.parts.size() && mu.parts[j] == mu.parts[i]) ++j;
        Int mult = Int(j - i);
        // part^multiplicity * multiplicity!
        for (std::size_t r = i; r < j; ++r) z *= mu.parts[i];
        z *= factorial(mult);
        i = j;
    }
    return z;
}

Int symmetric_class_size(const Partition& mu) {
    Int f = factorial(Int(mu.n()));
    Int z = z_factor(mu);
    if (f % z != 0) throw Error("class size: z does not divide n!");
    return f / z;
}

Partition power_cycle_type(const Partition& mu, long long m) {
    check_partition(mu);
    unsigned long long a = (m == LLONG_MIN)
                               ? (1ULL + static_cast<unsigned long long>(LLONG_MAX))
                               : static_cast<unsigned long long>(m < 0 ? -m : m);
    std::vector<int> parts;
    for (int l : mu.parts) {
        // gcd(l, 0) = l, so m = 0 correctly splits every cycle into fixed points.
        auto g = static_cast<long long>(std::gcd(static_cast<unsigned long long>(l), a));
        for (long long c = 0; c < g; ++c) parts.push_back(static_cast<int>(l / g));
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition{parts};
}

Partition conjugate_partition(const Partition& lambda) {
    check_partition(lambda);
    std::vector<int> parts;
    if (!lambda.parts.empty()) {
        parts.resize(lambda.parts[0], 0);
        for (int p : lambda.parts)
            for (int j = 0; j < p; ++j) ++parts[j];
    }
    return Partition{parts};
}

Partition permutation_cycle_type(const std::vector<int>& images) {
    std::vector<bool> seen(images.size(), false);
    std::vector<int> parts;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            if (images[j] < 0 || static_cast<std::size_t>(images[j]) >= images.size())
                throw IndexOutOfRange("image table entry out of range");
            j = static_cast<std::size_t>(images[j]);
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition{parts};
}

}  // namespace homcount
