#include "lcvwm/jpeg.hpp"

#include "lcvwm/error.hpp"

#include <csetjmp>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <jpeglib.h>

namespace lcvwm {
namespace {

struct ErrorManager {
    jpeg_error_mgr base;
    std::jmp_buf jump;
    char message[JMSG_LENGTH_MAX];
};

void on_error(j_common_ptr info) {
    auto* err = reinterpret_cast<ErrorManager*>(info->err);
    (*info->err->format_message)(info, err->message);
    std::longjmp(err->jump, 1);
}

}  // namespace

std::vector<std::uint8_t> encode_jpeg(const GrayImage& image, int quality) {
    if (quality < 1 || quality > 100)
        throw InputError("JPEG quality must be in [1, 100]");

    jpeg_compress_struct cinfo{};
    ErrorManager err{};
    cinfo.err = jpeg_std_error(&err.base);
    err.base.error_exit = on_error;
    unsigned char* buffer = nullptr;
    unsigned long size = 0;

    if (setjmp(err.jump)) {
        jpeg_destroy_compress(&cinfo);
        std::free(buffer);
        throw InputError(std::string("JPEG encode failed: ") + err.message);
    }
    jpeg_create_compress(&cinfo);
    jpeg_mem_dest(&cinfo, &buffer, &size);
    cinfo.image_width = static_cast<JDIMENSION>(image.width());
    cinfo.image_height = static_cast<JDIMENSION>(image.height());
    cinfo.input_components = 1;
    cinfo.in_color_space = JCS_GRAYSCALE;
    jpeg_set_defaults(&cinfo);
    jpeg_set_quality(&cinfo, quality, TRUE);
    jpeg_start_compress(&cinfo, TRUE);
    const auto samples = image.samples();
    while (cinfo.next_scanline < cinfo.image_height) {
        auto* row = const_cast<JSAMPLE*>(samples.data() + cinfo.next_scanline * image.width());
        jpeg_write_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_compress(&cinfo);
    jpeg_destroy_compress(&cinfo);

    std::vector<std::uint8_t> out(buffer, buffer + size);
    std::free(buffer);
    return out;
}

GrayImage decode_jpeg(std::span<const std::uint8_t> bytes) {
    jpeg_decompress_struct dinfo{};
    ErrorManager err{};
    dinfo.err = jpeg_std_error(&err.base);
    err.base.error_exit = on_error;
    std::vector<std::uint8_t> samples;

    if (setjmp(err.jump)) {
        jpeg_destroy_decompress(&dinfo);
        throw InputError(std::string("JPEG decode failed: ") + err.message);
    }
    jpeg_create_decompress(&dinfo);
    jpeg_mem_src(&dinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
    jpeg_read_header(&dinfo, TRUE);
    dinfo.out_color_space = JCS_GRAYSCALE;
    jpeg_start_decompress(&dinfo);
    const std::size_t w = dinfo.output_width, h = dinfo.output_height;
    samples.resize(w * h);
    while (dinfo.output_scanline < dinfo.output_height) {
        JSAMPLE* row = samples.data() + dinfo.output_scanline * w;
        jpeg_read_scanlines(&dinfo, &row, 1);
    }
    jpeg_finish_decompress(&dinfo);
    jpeg_destroy_decompress(&dinfo);
    return GrayImage(w, h, std::move(samples));
}

}  // namespace lcvwm
