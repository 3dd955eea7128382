#include "bn/partition.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace bn {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    if (!parts_.empty() && parts_.back() < 0)
        throw std::invalid_argument("partition parts must be nonnegative");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::row(int n) {
    return n > 0 ? Partition({n}) : Partition();
}

Partition Partition::column(int n) {
    return Partition(std::vector<int>(static_cast<size_t>(std::max(n, 0)), 1));
}

Partition Partition::box(int rows, int cols) {
    if (rows <= 0 || cols <= 0) return Partition();
    return Partition(std::vector<int>(static_cast<size_t>(rows), cols));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
}

bool Partition::fits_in_box(int rows, int cols) const {
    return length() <= rows && width() <= cols;
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 0; i < other.length(); ++i)
        if (part(i) < other.part(i)) return false;
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> out(static_cast<size_t>(width()), 0);
    for (int col = 0; col < width(); ++col)
        for (int row = 0; row < length(); ++row)
            if (part(row) > col) ++out[static_cast<size_t>(col)];
    return Partition(std::move(out));
}

Partition Partition::complement(int rows, int cols) const {
    if (!fits_in_box(rows, cols))
        throw std::invalid_argument("partition does not fit in the box");
    std::vector<int> out;
    for (int i = rows - 1; i >= 0; --i) out.push_back(cols - part(i));
    return Partition(std::move(out));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

PartitionSum pieri_row(const Partition& p, int strip, int max_rows) {
    PartitionSum out;
    if (strip < 0) return out;
    if (strip == 0) {
        out[p] = 1;
        return out;
    }
    // Distribute the strip over rows 0..len(p) with lambda_i <= p_{i-1}.
    std::vector<int> lambda(p.parts().begin(), p.parts().end());
    lambda.push_back(0);
    const int nrows = static_cast<int>(lambda.size());
    std::vector<int> add(static_cast<size_t>(nrows), 0);

    auto recurse = [&](auto&& self, int row, int remaining) -> void {
        if (row == nrows) {
            if (remaining != 0) return;
            std::vector<int> shape;
            for (int i = 0; i < nrows; ++i) shape.push_back(p.part(i) + add[static_cast<size_t>(i)]);
            Partition lam(shape);
            if (lam.length() > max_rows) return;
            out[lam] += 1;
        } else {
            const int cap = (row == 0) ? remaining
                                       : std::min(remaining, p.part(row - 1) - p.part(row));
            for (int k = 0; k <= cap; ++k) {
                add[static_cast<size_t>(row)] = k;
                self(self, row + 1, remaining - k);
            }
            add[static_cast<size_t>(row)] = 0;
        }
    };
    recurse(recurse, 0, strip);
    return out;
}

namespace {

using LrKey = std::tuple<std::vector<int>, std::vector<int>, int>;

PartitionSum lr_expand_uncached(const Partition& p, const Partition& q, int max_rows) {
    PartitionSum out;
    const int l = q.length();
    if (l == 0) {
        if (p.length() <= max_rows) out[p] = 1;
        return out;
    }
    // Jacobi-Trudi: s_q = det(h_{q_i - i + j})_{1<=i,j<=l}; each permutation
    // term is a product of complete homogeneous classes, multiplied into p by
    // iterated Pieri steps.  Shapes only grow, so the row cap prunes safely.
    std::vector<int> perm(static_cast<size_t>(l));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int sign = 1;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) sign = -sign;
        std::vector<int> strips;
        bool dead = false;
        for (int i = 0; i < l; ++i) {
            const int s = q.part(i) - (i + 1) + (perm[static_cast<size_t>(i)] + 1);
            if (s < 0) {
                dead = true;
                break;
            }
            strips.push_back(s);
        }
        if (dead) continue;
        PartitionSum acc;
        acc[p] = 1;
        for (int s : strips) {
            PartitionSum next;
            for (const auto& [shape, mult] : acc)
                for (const auto& [grown, ways] : pieri_row(shape, s, max_rows))
                    next[grown] += mult * ways;
            acc.swap(next);
        }
        for (const auto& [shape, mult] : acc) {
            out[shape] += sign * mult;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace

PartitionSum lr_expand(const Partition& p, const Partition& q, int max_rows) {
    static std::map<LrKey, PartitionSum> cache;
    static std::mutex mutex;
    LrKey key{p.parts(), q.parts(), max_rows};
    {
        std::scoped_lock lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    PartitionSum result = lr_expand_uncached(p, q, max_rows);
    std::scoped_lock lock(mutex);
    return cache.emplace(std::move(key), std::move(result)).first->second;
}

PartitionSum lr_expand_boxed(const Partition& p, const Partition& q, int rows, int cols) {
    PartitionSum full = lr_expand(p, q, rows);
    std::erase_if(full, [&](const auto& kv) { return !kv.first.fits_in_box(rows, cols); });
    return full;
}

Int lr_coefficient(const Partition& p, const Partition& q, const Partition& lambda) {
    PartitionSum sum = lr_expand(p, q, lambda.length() + 1);
    auto it = sum.find(lambda);
    return it == sum.end() ? Int(0) : it->second;
}

}  // namespace bn
