#include "chilab/lab/manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <boost/version.hpp>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "chilab/errors.hpp"

namespace chilab::lab {

std::string sha256_hex(std::string_view bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    std::ostringstream o;
    for (unsigned int i = 0; i < len; ++i) o << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return o.str();
}

std::string sha256_file(const std::string& path) { return sha256_hex(read_text_file(path)); }

Json toolchain_fingerprint() {
    Json j;
#if defined(__clang__)
    j["compiler"] = std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
    j["compiler"] = std::string("gcc ") + __VERSION__;
#else
    j["compiler"] = "unknown";
#endif
    j["cplusplus"] = static_cast<long>(__cplusplus);
#ifdef NDEBUG
    j["build"] = "release";
#else
    j["build"] = "debug";
#endif
#if defined(__linux__)
    j["platform"] = "linux";
#elif defined(__APPLE__)
    j["platform"] = "darwin";
#elif defined(_WIN32)
    j["platform"] = "windows";
#else
    j["platform"] = "unknown";
#endif
    j["pointer_bits"] = static_cast<int>(sizeof(void*) * 8);
    j["boost"] = BOOST_LIB_VERSION;
    return j;
}

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream o;
    o << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return o.str();
}

Json to_json(const Manifest& m) {
    Json j;
    j["schema"] = schema_id("manifest");
    j["experiment"] = m.experiment;
    j["parameters"] = m.parameters;
    j["master_seed"] = m.master_seed;
    j["stream_assignment"] = m.stream_assignment;
    j["workers"] = m.workers;
    j["node_budget"] = m.node_budget ? Json(*m.node_budget) : Json(nullptr);
    j["started"] = m.started;
    j["finished"] = m.finished;
    Json outs = Json::array();
    for (const auto& o : m.outputs) outs.push_back(Json{{"path", o.path}, {"sha256", o.sha256}, {"bytes", o.bytes}});
    j["outputs"] = outs;
    j["toolchain"] = m.toolchain;
    return j;
}

Manifest manifest_from_json(const Json& j) {
    if (j.value("schema", "") != schema_id("manifest")) throw DomainError("not a chilab manifest");
    Manifest m;
    m.experiment = j.at("experiment").get<std::string>();
    m.parameters = j.at("parameters");
    m.master_seed = j.at("master_seed").get<std::uint64_t>();
    m.stream_assignment = j.at("stream_assignment").get<std::string>();
    m.workers = j.at("workers").get<std::size_t>();
    if (!j.at("node_budget").is_null()) m.node_budget = j.at("node_budget").get<std::uint64_t>();
    m.started = j.at("started").get<std::string>();
    m.finished = j.at("finished").get<std::string>();
    for (const auto& o : j.at("outputs"))
        m.outputs.push_back({o.at("path").get<std::string>(), o.at("sha256").get<std::string>(),
                             o.at("bytes").get<std::uint64_t>()});
    m.toolchain = j.at("toolchain");
    return m;
}

Manifest read_manifest(const std::string& path) {
    try {
        return manifest_from_json(Json::parse(read_text_file(path)));
    } catch (const Json::exception& e) {
        throw DomainError("malformed manifest " + path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("short write to " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace chilab::lab
