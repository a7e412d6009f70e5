#include "iqa/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <memory>
#include <string>
#include <vector>

#include "iqa/error.hpp"

namespace iqa {
namespace {

struct FileCloser {
  void operator()(std::FILE* f) const noexcept {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

std::vector<Plane> make_planes(int channels, int height, int width) {
  std::vector<Plane> planes;
  for (int c = 0; c < channels; ++c) planes.emplace_back(height, width);
  return planes;
}

// Ancillary-chunk complaints (e.g. iCCP profiles) do not affect the samples.
void ignore_png_warning(png_structp, png_const_charp) {}

Image load_png(const std::filesystem::path& path) {
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  require(fp != nullptr, ErrorKind::unreadable_file, "cannot open " + path.string());

  png_byte header[8];
  require(std::fread(header, 1, 8, fp.get()) == 8 && png_sig_cmp(header, 0, 8) == 0,
          ErrorKind::unreadable_file, "not a PNG file: " + path.string());

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, ignore_png_warning);
  require(png != nullptr, ErrorKind::unreadable_file, "libpng initialisation failed");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    fail(ErrorKind::unreadable_file, "libpng initialisation failed");
  }

  std::vector<png_byte> buffer;
  std::vector<png_bytep> rows;
  png_uint_32 width = 0;
  png_uint_32 height = 0;
  int bit_depth = 0;
  int color_type = 0;
  volatile ErrorKind status = ErrorKind::unreadable_file;
  volatile bool ok = false;

  if (setjmp(png_jmpbuf(png)) == 0) {
    png_init_io(png, fp.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);
    png_get_IHDR(png, info, &width, &height, &bit_depth, &color_type, nullptr, nullptr,
                 nullptr);
    const bool layout_ok = color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_RGB;
    const bool depth_ok = bit_depth == 8 || bit_depth == 16;
    if (!layout_ok || !depth_ok) {
      status = ErrorKind::unsupported_format;
    } else {
      const std::size_t rowbytes = png_get_rowbytes(png, info);
      buffer.resize(rowbytes * height);
      rows.resize(height);
      for (png_uint_32 r = 0; r < height; ++r) rows[r] = buffer.data() + r * rowbytes;
      png_read_image(png, rows.data());
      png_read_end(png, nullptr);
      ok = true;
    }
  }
  png_destroy_read_struct(&png, &info, nullptr);

  if (!ok) {
    if (status == ErrorKind::unsupported_format) {
      fail(ErrorKind::unsupported_format, path.string() + ": PNG must be 8/16-bit gray or RGB (color type " +
                       std::to_string(color_type) + ", bit depth " +
                       std::to_string(bit_depth) + ")");
    }
    fail(ErrorKind::unreadable_file, "corrupt PNG: " + path.string());
  }

  const int channels = color_type == PNG_COLOR_TYPE_RGB ? 3 : 1;
  const double scale = bit_depth == 16 ? 65535.0 : 255.0;
  auto planes = make_planes(channels, static_cast<int>(height), static_cast<int>(width));
  for (png_uint_32 r = 0; r < height; ++r) {
    const png_byte* row = rows[r];
    for (png_uint_32 c = 0; c < width; ++c) {
      for (int ch = 0; ch < channels; ++ch) {
        const std::size_t idx = static_cast<std::size_t>(c) * channels + ch;
        double v = 0.0;
        if (bit_depth == 16) {
          v = static_cast<double>((row[2 * idx] << 8) | row[2 * idx + 1]);
        } else {
          v = static_cast<double>(row[idx]);
        }
        planes[ch](static_cast<int>(r), static_cast<int>(c)) = v / scale;
      }
    }
  }
  return Image(std::move(planes));
}

class PnmReader {
 public:
  PnmReader(std::string bytes, std::string name) : bytes_(std::move(bytes)), name_(std::move(name)) {}

  long next_int() {
    skip_space_and_comments();
    require(pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_])),
            ErrorKind::unreadable_file, "malformed PNM header in " + name_);
    long value = 0;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      value = value * 10 + (bytes_[pos_] - '0');
      require(value <= 1'000'000'000L, ErrorKind::unreadable_file, "PNM value overflow");
      ++pos_;
    }
    return value;
  }

  // Binary rasters start after exactly one whitespace byte.
  void skip_single_space() {
    require(pos_ < bytes_.size() && std::isspace(static_cast<unsigned char>(bytes_[pos_])),
            ErrorKind::unreadable_file, "malformed PNM header in " + name_);
    ++pos_;
  }

  unsigned read_binary(bool wide) {
    const std::size_t need = wide ? 2 : 1;
    require(pos_ + need <= bytes_.size(), ErrorKind::unreadable_file,
            "truncated PNM raster in " + name_);
    unsigned v = static_cast<unsigned char>(bytes_[pos_]);
    if (wide) v = (v << 8) | static_cast<unsigned char>(bytes_[pos_ + 1]);
    pos_ += need;
    return v;
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const char ch = bytes_[pos_];
      if (ch == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string bytes_;
  std::string name_;
  std::size_t pos_ = 2;
};

Image load_pnm(const std::string& bytes, const std::filesystem::path& path) {
  const char kind = bytes[1];
  require(kind == '2' || kind == '3' || kind == '5' || kind == '6', ErrorKind::unsupported_format,
          path.string() + ": only P2/P3/P5/P6 netpbm variants are supported");
  const bool binary = kind == '5' || kind == '6';
  const int channels = (kind == '3' || kind == '6') ? 3 : 1;

  PnmReader reader(bytes, path.string());
  const long width = reader.next_int();
  const long height = reader.next_int();
  const long maxval = reader.next_int();
  require(width > 0 && height > 0, ErrorKind::unreadable_file, "empty PNM image " + path.string());
  require(maxval > 0 && maxval <= 65535, ErrorKind::unsupported_format,
          path.string() + ": PNM maxval must be in [1, 65535]");
  if (binary) reader.skip_single_space();

  const bool wide = maxval > 255;
  auto planes = make_planes(channels, static_cast<int>(height), static_cast<int>(width));
  const double scale = static_cast<double>(maxval);
  for (long r = 0; r < height; ++r) {
    for (long c = 0; c < width; ++c) {
      for (int ch = 0; ch < channels; ++ch) {
        const long v = binary ? static_cast<long>(reader.read_binary(wide)) : reader.next_int();
        require(v <= maxval, ErrorKind::unreadable_file, "PNM sample above maxval in " + path.string());
        planes[ch](static_cast<int>(r), static_cast<int>(c)) = static_cast<double>(v) / scale;
      }
    }
  }
  return Image(std::move(planes));
}

std::uint16_t quantize(double v, double scale) {
  const double q = std::round(std::clamp(v, 0.0, 1.0) * scale);
  return static_cast<std::uint16_t>(q);
}

}  // namespace

Image load_image(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorKind::unreadable_file, "cannot open " + path.string());
  char magic[2] = {0, 0};
  in.read(magic, 2);
  require(in.gcount() == 2, ErrorKind::unreadable_file, "file too short: " + path.string());

  if (static_cast<unsigned char>(magic[0]) == 0x89 && magic[1] == 'P') {
    in.close();
    return load_png(path);
  }
  if (magic[0] == 'P') {
    in.seekg(0);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return load_pnm(bytes, path);
  }
  fail(ErrorKind::unsupported_format, path.string() + ": not a PNG or netpbm file");
}

void save_png(const Image& image, const std::filesystem::path& path, BitDepth depth) {
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  require(fp != nullptr, ErrorKind::unreadable_file, "cannot write " + path.string());

  const int channels = image.channels();
  const int width = image.width();
  const int height = image.height();
  const bool wide = depth == BitDepth::sixteen;
  const double scale = wide ? 65535.0 : 255.0;
  const std::size_t bytes_per_sample = wide ? 2 : 1;
  const std::size_t rowbytes = static_cast<std::size_t>(width) * channels * bytes_per_sample;

  std::vector<png_byte> buffer(rowbytes * height);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      for (int ch = 0; ch < channels; ++ch) {
        const std::uint16_t q = quantize(image.channel(ch)(r, c), scale);
        const std::size_t idx = r * rowbytes + (static_cast<std::size_t>(c) * channels + ch) * bytes_per_sample;
        if (wide) {
          buffer[idx] = static_cast<png_byte>(q >> 8);
          buffer[idx + 1] = static_cast<png_byte>(q & 0xff);
        } else {
          buffer[idx] = static_cast<png_byte>(q);
        }
      }
    }
  }
  std::vector<png_bytep> rows(height);
  for (int r = 0; r < height; ++r) rows[r] = buffer.data() + r * rowbytes;

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  require(png != nullptr, ErrorKind::unreadable_file, "libpng initialisation failed");
  png_infop info = png_create_info_struct(png);
  volatile bool ok = false;
  if (info != nullptr && setjmp(png_jmpbuf(png)) == 0) {
    png_init_io(png, fp.get());
    png_set_IHDR(png, info, width, height, wide ? 16 : 8,
                 channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    ok = true;
  }
  png_destroy_write_struct(&png, &info);
  require(ok, ErrorKind::unreadable_file, "failed to write PNG " + path.string());
}

void save_pnm(const Image& image, const std::filesystem::path& path, BitDepth depth) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorKind::unreadable_file, "cannot write " + path.string());
  const bool wide = depth == BitDepth::sixteen;
  const int channels = image.channels();
  out << (channels == 3 ? "P6" : "P5") << '\n'
      << image.width() << ' ' << image.height() << '\n'
      << (wide ? 65535 : 255) << '\n';
  const double scale = wide ? 65535.0 : 255.0;
  for (int r = 0; r < image.height(); ++r) {
    for (int c = 0; c < image.width(); ++c) {
      for (int ch = 0; ch < channels; ++ch) {
        const std::uint16_t q = quantize(image.channel(ch)(r, c), scale);
        if (wide) out.put(static_cast<char>(q >> 8));
        out.put(static_cast<char>(q & 0xff));
      }
    }
  }
  require(out.good(), ErrorKind::unreadable_file, "failed to write " + path.string());
}

}  // namespace iqa
