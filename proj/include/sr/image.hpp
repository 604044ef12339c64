#pragma once

#include <string>
#include <vector>

namespace sr {

// Dense row-major raster, 1 (greyscale) or 3 (RGB) channels, values in [0,1].
// Channel index varies fastest: data[(y*width + x)*channels + c].
struct Image {
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<float> data;

    Image() = default;
    Image(int w, int h, int c, float fill = 0.0f)
        : width(w), height(h), channels(c),
          data(static_cast<size_t>(w) * h * c, fill) {}

    float& at(int x, int y, int c = 0) {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }
    float at(int x, int y, int c = 0) const {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }

    size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

// 8-bit PNG, grey or RGB. Quantization round(v*255) happens here only;
// the in-memory pipeline stays floating point.
void write_png(const std::string& path, const Image& img);
Image read_png(const std::string& path);

}  // namespace sr
