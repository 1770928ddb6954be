#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "weylstab/cli.hpp"

namespace weylstab::cli {

Cache::Cache(std::filesystem::path workspace) : dir_(std::move(workspace) / "cache") {}

std::string Cache::key(std::string_view material) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(material.data(), material.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        fail(ErrorCode::InvalidArgument, "SHA-256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

std::filesystem::path Cache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<std::pair<int, std::string>> Cache::get(const std::string& key,
                                                      std::vector<std::string>& diagnostics) const {
    std::ifstream in(path_for(key), std::ios::binary);
    if (!in)
        return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        auto doc = nlohmann::ordered_json::parse(ss.str());
        if (doc.at("key").get<std::string>() != key)
            throw std::runtime_error("key mismatch");
        return std::make_pair(doc.at("exit_code").get<int>(), doc.at("report").get<std::string>());
    } catch (const std::exception& e) {
        diagnostics.push_back("warning: ignoring corrupt cache entry " + path_for(key).string() + ": " + e.what());
        return std::nullopt;
    }
}

void Cache::put(const std::string& key, int exit_code, const std::string& report) const {
    std::filesystem::create_directories(dir_);
    nlohmann::ordered_json doc;
    doc["key"] = key;
    doc["version"] = std::string(kVersion);
    doc["created"] = std::chrono::duration_cast<std::chrono::seconds>(
                         std::chrono::system_clock::now().time_since_epoch())
                         .count();
    doc["exit_code"] = exit_code;
    doc["report"] = report;

    std::random_device rd;
    auto tmp = dir_ / (key + ".tmp." + std::to_string(rd()) + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            fail(ErrorCode::InvalidArgument, "cannot write " + tmp.string());
        out << doc.dump(2) << '\n';
        if (!out)
            fail(ErrorCode::InvalidArgument, "cannot write " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path_for(key), ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        fail(ErrorCode::InvalidArgument, "cannot install cache entry " + path_for(key).string());
    }
}

} // namespace weylstab::cli
