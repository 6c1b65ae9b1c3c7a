#pragma once

#include <cstddef>
#include <vector>

#include "bandinv/dense_matrix.hpp"
#include "bandinv/errors.hpp"

namespace bandinv {

/// Bijection on {0..n-1}. Used to conjugate matrices whose banded structure
/// is hidden behind a known index relabeling.
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
        if (image_.empty()) throw InputError("Permutation: size must be positive");
        std::vector<bool> seen(image_.size(), false);
        for (std::size_t v : image_) {
            if (v >= image_.size() || seen[v]) throw InputError("Permutation: image is not a bijection");
            seen[v] = true;
        }
    }

    static Permutation identity(std::size_t n) {
        std::vector<std::size_t> img(n);
        for (std::size_t i = 0; i < n; ++i) img[i] = i;
        return Permutation(std::move(img));
    }

    std::size_t size() const noexcept { return image_.size(); }
    std::size_t operator()(std::size_t i) const { return image_[i]; }
    const std::vector<std::size_t>& image() const noexcept { return image_; }

    Permutation inverse() const {
        std::vector<std::size_t> inv(image_.size());
        for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
        return Permutation(std::move(inv));
    }

private:
    std::vector<std::size_t> image_;
};

/// Pi A Pi^T for the permutation matrix Pi of pi (acting as (Pi x)_i = x_{pi(i)}):
/// result(i, j) = A(pi(i), pi(j)). Pure entry relocation, so conjugating by pi
/// and then pi^{-1} restores A bit-exactly.
inline DenseMatrix permute_conjugate(const DenseMatrix& a, const Permutation& pi) {
    if (!a.square()) throw InputError("permute_conjugate: matrix must be square");
    if (pi.size() != a.rows()) throw InputError("permute_conjugate: size mismatch");
    DenseMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(pi(i), pi(j));
    return c;
}

}  // namespace bandinv
