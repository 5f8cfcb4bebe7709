#ifndef ORBVCD_CACHE_HPP
#define ORBVCD_CACHE_HPP

#include "orbvcd/enumeration.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbvcd {

/// Raised for unreadable records; carries the offending record identifier.
class CacheCorruption : public std::runtime_error {
public:
    CacheCorruption(std::string record_id, const std::string& what)
        : std::runtime_error("corrupt cache record " + record_id + ": " + what), record_id_(std::move(record_id))
    {
    }
    const std::string& record_id() const { return record_id_; }

private:
    std::string record_id_;
};

/// Signature-fiber cache stored as `signatures.cache` inside a directory.
///
/// The file starts with the header line `orbvcd-signature-cache v1`, followed
/// by one tab-separated record per (g, order, options hash):
///
///     g=2  order=2  opts=<16 hex>  sigs=0;2,2,2,2,2,2|1;2,2  sum=<16 hex>
///
/// `sum` is an FNV-1a checksum over the preceding fields. Readers reject any
/// other version header.
class SignatureCache {
public:
    static constexpr const char* file_name = "signatures.cache";
    static constexpr const char* header = "orbvcd-signature-cache v1";

    struct Record {
        int g = 2;
        int order = 1;
        std::string options_hash;
        std::vector<Signature> signatures;

        std::string id() const;
    };

    struct VerifyReport {
        std::size_t checked = 0;
        std::size_t valid = 0;
        std::vector<std::string> invalid_ids;
    };

    explicit SignatureCache(std::filesystem::path dir);

    std::filesystem::path file() const { return dir_ / file_name; }

    /// All records in file order. Throws CacheCorruption.
    std::vector<Record> load() const;

    std::optional<std::vector<Signature>> lookup(int g, int order, const EnumOptions& opts) const;
    void store(int g, int order, const EnumOptions& opts, const std::vector<Signature>& signatures);
    void clear();

    /// Recomputes a sample of records (all of them when sample_size is
    /// nullopt) and compares. The sample is drawn with a fixed seed.
    VerifyReport verify(std::optional<std::size_t> sample_size = std::nullopt) const;

    static std::string options_hash(const EnumOptions& opts);

private:
    void write_all(const std::vector<Record>& records);

    std::filesystem::path dir_;
};

} // namespace orbvcd

#endif
