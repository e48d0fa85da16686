#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace evmoseg {

/// Dense row-major H x W grid.
template <typename T>
class Array2D {
public:
    Array2D() = default;
    Array2D(int height, int width, T fill = T{})
        : height_(height), width_(width),
          data_(static_cast<size_t>(check_dims(height, width)) * width, fill) {}

    int height() const { return height_; }
    int width() const { return width_; }
    size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    T& operator()(int y, int x) { return data_[static_cast<size_t>(y) * width_ + x]; }
    const T& operator()(int y, int x) const { return data_[static_cast<size_t>(y) * width_ + x]; }
    T& at(int y, int x) {
        bounds_check(y, x);
        return (*this)(y, x);
    }
    const T& at(int y, int x) const {
        bounds_check(y, x);
        return (*this)(y, x);
    }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }
    auto begin() { return data_.begin(); }
    auto end() { return data_.end(); }
    auto begin() const { return data_.begin(); }
    auto end() const { return data_.end(); }

    void fill(T v) { data_.assign(data_.size(), v); }

    bool same_shape(const Array2D& o) const { return height_ == o.height_ && width_ == o.width_; }
    bool operator==(const Array2D& o) const {
        return height_ == o.height_ && width_ == o.width_ && data_ == o.data_;
    }

private:
    static int check_dims(int h, int w) {
        if (h < 0 || w < 0) throw std::invalid_argument("Array2D: negative dimensions");
        return h;
    }
    void bounds_check(int y, int x) const {
        if (y < 0 || y >= height_ || x < 0 || x >= width_)
            throw std::out_of_range("Array2D: index (" + std::to_string(y) + "," + std::to_string(x) +
                                    ") outside " + std::to_string(height_) + "x" + std::to_string(width_));
    }

    int height_ = 0;
    int width_ = 0;
    std::vector<T> data_;
};

/// Dense plane-major P x H x W block (plane stride = H*W, row stride = W).
template <typename T>
class Array3D {
public:
    Array3D() = default;
    Array3D(int planes, int height, int width, T fill = T{})
        : planes_(planes), height_(height), width_(width),
          data_(check_size(planes, height, width), fill) {}

    int planes() const { return planes_; }
    int height() const { return height_; }
    int width() const { return width_; }
    size_t size() const { return data_.size(); }
    size_t plane_size() const { return static_cast<size_t>(height_) * width_; }

    T& operator()(int p, int y, int x) {
        return data_[(static_cast<size_t>(p) * height_ + y) * width_ + x];
    }
    const T& operator()(int p, int y, int x) const {
        return data_[(static_cast<size_t>(p) * height_ + y) * width_ + x];
    }

    T* plane_data(int p) { return data_.data() + p * plane_size(); }
    const T* plane_data(int p) const { return data_.data() + p * plane_size(); }

    Array2D<T> plane(int p) const {
        Array2D<T> out(height_, width_);
        const T* src = plane_data(p);
        std::copy(src, src + plane_size(), out.data());
        return out;
    }
    void set_plane(int p, const Array2D<T>& img) {
        if (img.height() != height_ || img.width() != width_)
            throw std::invalid_argument("Array3D::set_plane: shape mismatch");
        std::copy(img.data(), img.data() + plane_size(), plane_data(p));
    }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }
    auto begin() { return data_.begin(); }
    auto end() { return data_.end(); }
    auto begin() const { return data_.begin(); }
    auto end() const { return data_.end(); }

    void fill(T v) { data_.assign(data_.size(), v); }

    bool same_shape(const Array3D& o) const {
        return planes_ == o.planes_ && height_ == o.height_ && width_ == o.width_;
    }
    bool operator==(const Array3D& o) const { return same_shape(o) && data_ == o.data_; }

private:
    static size_t check_size(int p, int h, int w) {
        if (p < 0 || h < 0 || w < 0) throw std::invalid_argument("Array3D: negative dimensions");
        return static_cast<size_t>(p) * h * w;
    }

    int planes_ = 0;
    int height_ = 0;
    int width_ = 0;
    std::vector<T> data_;
};

using Image = Array2D<double>;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

}  // namespace evmoseg
