#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ripeline/image.hpp"

namespace ripeline {

// Decodes PNG or JPEG by file signature. Throws IoError on anything that
// cannot be decoded to 8-bit RGB.
RgbImage load_image(const std::string& path);

// Lossless interchange format; load_png(save_png(img)) == img.
void save_png(const RgbImage& img, const std::string& path);

// Label maps as 16-bit single-channel PNG. Values must fit in u16.
void save_label_png(const std::vector<std::int32_t>& labels, int width, int height,
                    const std::string& path);
std::vector<std::int32_t> load_label_png(const std::string& path, int& width, int& height);

}  // namespace ripeline
