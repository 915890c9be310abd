#include "tfg/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace tfg {

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    for (Int p : parts_) {
        if (p < 1) throw std::invalid_argument("partition parts must be >= 1");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<Int>());
    sum_ = std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

Int delta_pairsum(const Partition& p, const Partition& q) {
    Int total = 0;
    for (Int a : p.parts())
        for (Int b : q.parts()) total += delta(a, b);
    return total;
}

PartitionGenerator::PartitionGenerator(Int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    if (n > 0) cur_.assign(1, n);
}

bool PartitionGenerator::next(Partition& out) {
    if (done_) return false;
    if (first_) {
        first_ = false;
        out = Partition(cur_);
        if (cur_.empty() || cur_.front() == 1) done_ = true;
        return true;
    }
    // Decrement the rightmost part > 1 and redistribute the tail greedily;
    // this walks the nonincreasing sequences in descending lex order.
    Int i = static_cast<Int>(cur_.size()) - 1;
    while (i >= 0 && cur_[i] == 1) --i;
    if (i < 0) {
        done_ = true;
        return false;
    }
    Int rest = std::accumulate(cur_.begin() + i, cur_.end(), Int{0});
    Int x = cur_[i] - 1;
    cur_.resize(i);
    while (rest >= x) {
        cur_.push_back(x);
        rest -= x;
    }
    if (rest > 0) cur_.push_back(rest);
    out = Partition(cur_);
    if (cur_.front() == 1) done_ = true;
    return true;
}

std::vector<Partition> partitions_of(Int n) {
    std::vector<Partition> out;
    out.reserve(static_cast<std::size_t>(std::min<Int>(partition_count(n), Int{1} << 22)));
    PartitionGenerator gen(n);
    Partition p;
    while (gen.next(p)) out.push_back(p);
    return out;
}

Int partition_count(Int n) {
    if (n < 0) return 0;
    std::vector<Int> dp(static_cast<std::size_t>(n) + 1, 0);
    dp[0] = 1;
    for (Int k = 1; k <= n; ++k)
        for (Int s = k; s <= n; ++s) dp[s] += dp[s - k];
    return dp[static_cast<std::size_t>(n)];
}

static std::string render(const Partition& p, const char* sep) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) os << sep;
        os << p.parts()[i];
    }
    os << ']';
    return os.str();
}

std::string bracket(const Partition& p) { return render(p, ","); }
std::string bracket_spaced(const Partition& p) { return render(p, " "); }

} // namespace tfg
