#pragma once

#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <string_view>

#include <openssl/evp.h>

#include "debatebench/errors.hpp"

namespace debatebench {

namespace detail {

class Sha256 {
public:
    Sha256() : ctx_(EVP_MD_CTX_new(), &EVP_MD_CTX_free) {
        if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1)
            throw Error("sha256 init failed");
    }

    void update(const void* data, std::size_t len) {
        if (EVP_DigestUpdate(ctx_.get(), data, len) != 1) throw Error("sha256 update failed");
    }

    std::string hex() {
        unsigned char raw[EVP_MAX_MD_SIZE];
        unsigned int raw_len = 0;
        if (EVP_DigestFinal_ex(ctx_.get(), raw, &raw_len) != 1) throw Error("sha256 final failed");
        std::string out;
        out.reserve(raw_len * 2);
        for (unsigned int i = 0; i < raw_len; ++i) {
            char buf[3];
            std::snprintf(buf, sizeof(buf), "%02x", raw[i]);
            out += buf;
        }
        return out;
    }

private:
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

}  // namespace detail

inline std::string sha256_hex(std::string_view data) {
    detail::Sha256 h;
    h.update(data.data(), data.size());
    return h.hex();
}

/// Digest of a file's raw bytes. Throws IoError if the file cannot be read.
inline std::string sha256_file_hex(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for digest: " + path);
    detail::Sha256 h;
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        h.update(buf, static_cast<std::size_t>(in.gcount()));
        if (!in) break;
    }
    if (in.bad()) throw IoError("read failed during digest: " + path);
    return h.hex();
}

}  // namespace debatebench
