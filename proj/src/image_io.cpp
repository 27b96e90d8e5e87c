#include "ripeline/image_io.hpp"

#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <memory>

#include <jpeglib.h>
#include <png.h>

#include "ripeline/errors.hpp"

namespace ripeline {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::string& path, const char* mode) {
    FilePtr f(std::fopen(path.c_str(), mode));
    if (!f) throw IoError("cannot open " + path);
    return f;
}

RgbImage load_png_rgb(std::FILE* fp, const std::string& path) {
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("png reader init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw IoError("png reader init failed");
    }
    std::vector<png_bytep> rows;
    RgbImage img;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("png decode failed: " + path);
    }
    png_init_io(png, fp);
    png_read_info(png, info);

    png_set_strip_16(png);
    png_set_palette_to_rgb(png);
    png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    if (png_get_color_type(png, info) == PNG_COLOR_TYPE_GRAY ||
        png_get_color_type(png, info) == PNG_COLOR_TYPE_GRAY_ALPHA)
        png_set_gray_to_rgb(png);
    png_read_update_info(png, info);

    img.width = static_cast<int>(png_get_image_width(png, info));
    img.height = static_cast<int>(png_get_image_height(png, info));
    if (png_get_rowbytes(png, info) != static_cast<std::size_t>(img.width) * 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("png decode: unexpected row size in " + path);
    }
    img.data.resize(static_cast<std::size_t>(img.width) * img.height * 3);
    rows.resize(img.height);
    for (int y = 0; y < img.height; ++y)
        rows[y] = img.data.data() + static_cast<std::size_t>(y) * img.width * 3;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

struct JpegErrorMgr {
    jpeg_error_mgr base;
    std::jmp_buf jmp;
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto* mgr = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
    longjmp(mgr->jmp, 1);
}

RgbImage load_jpeg_rgb(std::FILE* fp, const std::string& path) {
    jpeg_decompress_struct cinfo;
    JpegErrorMgr err;
    cinfo.err = jpeg_std_error(&err.base);
    err.base.error_exit = jpeg_error_exit;
    if (setjmp(err.jmp)) {
        jpeg_destroy_decompress(&cinfo);
        throw IoError("jpeg decode failed: " + path);
    }
    jpeg_create_decompress(&cinfo);
    jpeg_stdio_src(&cinfo, fp);
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);

    RgbImage img(static_cast<int>(cinfo.output_width), static_cast<int>(cinfo.output_height));
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW row = img.data.data() +
                       static_cast<std::size_t>(cinfo.output_scanline) * img.width * 3;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return img;
}

}  // namespace

RgbImage load_image(const std::string& path) {
    FilePtr f = open_file(path, "rb");
    unsigned char sig[8] = {0};
    const std::size_t got = std::fread(sig, 1, sizeof(sig), f.get());
    std::rewind(f.get());
    if (got >= 8 && png_sig_cmp(sig, 0, 8) == 0) return load_png_rgb(f.get(), path);
    if (got >= 2 && sig[0] == 0xFF && sig[1] == 0xD8) return load_jpeg_rgb(f.get(), path);
    throw IoError("not a PNG or JPEG file: " + path);
}

void save_png(const RgbImage& img, const std::string& path) {
    if (img.width < 1 || img.height < 1) throw IoError("save_png: empty image");
    FilePtr f = open_file(path, "wb");
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("png writer init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("png writer init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("png encode failed: " + path);
    }
    png_init_io(png, f.get());
    png_set_IHDR(png, info, img.width, img.height, 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int y = 0; y < img.height; ++y) {
        png_write_row(png, const_cast<png_bytep>(
                               img.data.data() + static_cast<std::size_t>(y) * img.width * 3));
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

void save_label_png(const std::vector<std::int32_t>& labels, int width, int height,
                    const std::string& path) {
    if (labels.size() != static_cast<std::size_t>(width) * height)
        throw IoError("save_label_png: size mismatch");
    for (std::int32_t v : labels)
        if (v < 0 || v > 0xFFFF) throw IoError("save_label_png: label out of u16 range");

    FilePtr f = open_file(path, "wb");
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("png writer init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("png writer init failed");
    }
    std::vector<std::uint8_t> row(static_cast<std::size_t>(width) * 2);
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("png encode failed: " + path);
    }
    png_init_io(png, f.get());
    png_set_IHDR(png, info, width, height, 16, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const std::uint16_t v =
                static_cast<std::uint16_t>(labels[static_cast<std::size_t>(y) * width + x]);
            row[2 * x] = static_cast<std::uint8_t>(v >> 8);  // PNG is big-endian
            row[2 * x + 1] = static_cast<std::uint8_t>(v & 0xFF);
        }
        png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

std::vector<std::int32_t> load_label_png(const std::string& path, int& width, int& height) {
    FilePtr f = open_file(path, "rb");
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("png reader init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw IoError("png reader init failed");
    }
    std::vector<std::uint8_t> raw;
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("png decode failed: " + path);
    }
    png_init_io(png, f.get());
    png_read_info(png, info);
    if (png_get_color_type(png, info) != PNG_COLOR_TYPE_GRAY ||
        png_get_bit_depth(png, info) != 16) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("label map must be 16-bit grayscale PNG: " + path);
    }
    width = static_cast<int>(png_get_image_width(png, info));
    height = static_cast<int>(png_get_image_height(png, info));
    raw.resize(static_cast<std::size_t>(width) * height * 2);
    rows.resize(height);
    for (int y = 0; y < height; ++y)
        rows[y] = raw.data() + static_cast<std::size_t>(y) * width * 2;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    std::vector<std::int32_t> labels(static_cast<std::size_t>(width) * height);
    for (std::size_t i = 0; i < labels.size(); ++i)
        labels[i] = (static_cast<std::int32_t>(raw[2 * i]) << 8) | raw[2 * i + 1];
    return labels;
}

}  // namespace ripeline
