#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bn/rational.hpp"

namespace bn {

// Integer partition, weakly decreasing parts, trailing zeros stripped.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition empty() { return Partition(); }
    static Partition row(int n);
    static Partition column(int n);
    static Partition box(int rows, int cols);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;                       // number of cells
    int part(int i) const;                  // 0-indexed, 0 beyond the end
    int width() const { return parts_.empty() ? 0 : parts_.front(); }

    bool fits_in_box(int rows, int cols) const;
    bool contains(const Partition& other) const;
    Partition conjugate() const;
    // Complement inside a rows x cols box; the partition must fit.
    Partition complement(int rows, int cols) const;

    auto operator<=>(const Partition&) const = default;

    std::string str() const;

private:
    std::vector<int> parts_;
};

using PartitionSum = std::map<Partition, Int>;

// Pieri rule: s_p * h_strip = sum of s_lambda over shapes obtained from p by
// adding a horizontal strip of the given size.  Shapes growing beyond
// max_rows are dropped (they vanish in that many variables).
PartitionSum pieri_row(const Partition& p, int strip, int max_rows);

// Littlewood-Richardson expansion s_p * s_q = sum c^lambda_{p,q} s_lambda,
// computed via the Jacobi-Trudi determinant of complete homogeneous classes
// expanded by iterated Pieri steps.  Memoized on (p, q, max_rows).
PartitionSum lr_expand(const Partition& p, const Partition& q, int max_rows);

// Same product truncated to a rows x cols box: shapes escaping the box are
// dropped.  This is the ring of the finite Grassmannian of that box.
PartitionSum lr_expand_boxed(const Partition& p, const Partition& q, int rows, int cols);

// Single Littlewood-Richardson coefficient c^lambda_{p,q}.
Int lr_coefficient(const Partition& p, const Partition& q, const Partition& lambda);

}  // namespace bn
