#include "varsmooth/pgm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace varsmooth {

namespace {

// Minimal tokenizer over the raw bytes so errors can report exact offsets.
class PgmReader {
public:
    explicit PgmReader(const std::filesystem::path& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw format_error("load_pgm: cannot open '" + path.string() + "'", 0);
        bytes_.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }

    std::size_t pos() const { return pos_; }

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            const char c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::string magic() {
        if (bytes_.size() < 2) throw format_error("load_pgm: truncated header", bytes_.size());
        std::string m{bytes_[0], bytes_[1]};
        pos_ = 2;
        return m;
    }

    std::int64_t read_int(const char* what) {
        skip_space_and_comments();
        const std::size_t start = pos_;
        std::int64_t v = 0;
        while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            v = v * 10 + (bytes_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start)
            throw format_error(std::string("load_pgm: expected ") + what, start);
        return v;
    }

    // One whitespace byte separates the maxval from binary payload.
    void expect_single_space() {
        if (pos_ >= bytes_.size() ||
            !std::isspace(static_cast<unsigned char>(bytes_[pos_])))
            throw format_error("load_pgm: expected whitespace before payload", pos_);
        ++pos_;
    }

    std::uint8_t read_byte() {
        if (pos_ >= bytes_.size()) throw format_error("load_pgm: truncated payload", pos_);
        return static_cast<std::uint8_t>(bytes_[pos_++]);
    }

private:
    std::vector<char> bytes_;
    std::size_t pos_ = 0;
};

} // namespace

BlockVector load_pgm(const std::filesystem::path& path) {
    PgmReader r(path);
    const std::string magic = r.magic();
    if (magic != "P2" && magic != "P5")
        throw format_error("load_pgm: expected P2 or P5 magic, got '" + magic + "'", 0);

    const std::int64_t width = r.read_int("width");
    const std::int64_t height = r.read_int("height");
    const std::int64_t maxval = r.read_int("maxval");
    if (width < 1 || height < 1)
        throw format_error("load_pgm: dimensions must be positive", r.pos());
    if (maxval < 1 || maxval > 65535)
        throw format_error("load_pgm: maxval out of range", r.pos());

    BlockVector img(Shape{height, width});
    auto px = img.data();
    const double scale = 1.0 / static_cast<double>(maxval);

    if (magic == "P2") {
        for (auto& v : px) v = scale * static_cast<double>(r.read_int("pixel"));
    } else {
        r.expect_single_space();
        const bool wide = maxval > 255;
        for (auto& v : px) {
            std::int64_t raw = r.read_byte();
            if (wide) raw = raw * 256 + r.read_byte(); // big-endian per the format
            if (raw > maxval)
                throw format_error("load_pgm: sample exceeds maxval", r.pos() - 1);
            v = scale * static_cast<double>(raw);
        }
    }
    return img;
}

void save_pgm(const BlockVector& img, const std::filesystem::path& path) {
    if (img.num_blocks() != 1 || img.shape(0).ndim() > 2)
        throw shape_error("save_pgm: expected a single image block");
    for (double v : img.data())
        if (!std::isfinite(v)) throw param_error("save_pgm: pixel values must be finite");

    const std::int64_t m = img.shape(0).rows();
    const std::int64_t n = img.shape(0).cols();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw format_error("save_pgm: cannot open '" + path.string() + "'", 0);
    out << "P5\n" << n << " " << m << "\n255\n";
    std::vector<unsigned char> row(static_cast<std::size_t>(n));
    auto px = img.data();
    for (std::int64_t i = 0; i < m; ++i) {
        for (std::int64_t j = 0; j < n; ++j) {
            const double v = std::clamp(px[i * n + j], 0.0, 1.0);
            row[static_cast<std::size_t>(j)] =
                static_cast<unsigned char>(std::lround(v * 255.0));
        }
        out.write(reinterpret_cast<const char*>(row.data()), n);
    }
    if (!out) throw format_error("save_pgm: write failed", 0);
}

} // namespace varsmooth
