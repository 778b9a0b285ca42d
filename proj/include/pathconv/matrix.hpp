#pragma once

#include <cstddef>
#include <vector>

namespace pathconv {

// Dense n x n integer matrix indexed by 1-based vertex labels.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n, int fill = 0)
        : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {}

    int size() const noexcept { return n_; }

    int operator()(int i, int j) const { return data_[index(i, j)]; }
    int& operator()(int i, int j) { return data_[index(i, j)]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j - 1);
    }

    int n_ = 0;
    std::vector<int> data_;
};

}  // namespace pathconv
