#include "orbvcd/cache.hpp"
#include "scratch_dir.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace orbvcd;

namespace {

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::filesystem::path& p, const std::string& text)
{
    std::ofstream(p, std::ios::trunc) << text;
}

} // namespace

TEST_CASE("empty cache")
{
    testing::ScratchDir dir("cache-empty");
    SignatureCache cache(dir.path() / "sub");
    CHECK(cache.load().empty());
    CHECK_FALSE(cache.lookup(2, 2, {}).has_value());
    CHECK(cache.verify().checked == 0);
}

TEST_CASE("store, lookup and file layout")
{
    testing::ScratchDir dir("cache-store");
    SignatureCache cache(dir.path());
    const EnumOptions opts;
    cache.store(2, 2, opts, enumerate_signatures(2, 2, opts));
    cache.store(2, 1, opts, enumerate_signatures(2, 1, opts));
    cache.store(2, 2, opts, enumerate_signatures(2, 2, opts)); // replaces, no duplicate

    const auto records = cache.load();
    REQUIRE(records.size() == 2);
    CHECK(records[0].order == 1);
    CHECK(records[1].order == 2);
    CHECK(cache.lookup(2, 2, opts) == enumerate_signatures(2, 2, opts));

    EnumOptions wide;
    wide.periods_divide_order = false;
    CHECK(SignatureCache::options_hash(wide) != SignatureCache::options_hash(opts));
    CHECK_FALSE(cache.lookup(2, 2, wide).has_value());
    // The order bound does not change a single fiber, so it is not hashed.
    EnumOptions bounded;
    bounded.max_order = 12;
    CHECK(SignatureCache::options_hash(bounded) == SignatureCache::options_hash(opts));

    const std::string text = slurp(cache.file());
    CHECK(text.rfind(std::string(SignatureCache::header) + "\n", 0) == 0);
    CHECK(text.find("g=2\torder=2\topts=" + SignatureCache::options_hash(opts) + "\tsigs=0;2,2,2,2,2,2|1;2,2\tsum=") !=
          std::string::npos);

    const auto report = cache.verify();
    CHECK(report.checked == 2);
    CHECK(report.valid == 2);
    CHECK(cache.verify(1).checked == 1);

    cache.clear();
    CHECK_FALSE(std::filesystem::exists(cache.file()));
    CHECK(cache.load().empty());
}

TEST_CASE("a record with a wrong but well-formed answer fails verify")
{
    testing::ScratchDir dir("cache-stale");
    SignatureCache cache(dir.path());
    cache.store(2, 2, {}, {Signature(1, {2, 2})});
    const auto report = cache.verify();
    CHECK(report.valid == 0);
    REQUIRE(report.invalid_ids.size() == 1);
    CHECK(report.invalid_ids[0].rfind("g=2 order=2 opts=", 0) == 0);
}

TEST_CASE("seeded corruption raises CacheCorruption with the record id")
{
    testing::ScratchDir dir("cache-corrupt");
    SignatureCache cache(dir.path());
    cache.store(2, 2, {}, enumerate_signatures(2, 2));
    std::string text = slurp(cache.file());
    const auto at = text.find("1;2,2");
    REQUIRE(at != std::string::npos);
    text.replace(at, 5, "1;2,3");
    spit(cache.file(), text);
    try {
        (void)cache.load();
        FAIL("expected CacheCorruption");
    } catch (const CacheCorruption& e) {
        CHECK(e.record_id().rfind("g=2 order=2 opts=", 0) == 0);
        CHECK(std::string(e.what()).find("checksum") != std::string::npos);
    }
}

TEST_CASE("unknown versions and malformed records are rejected")
{
    testing::ScratchDir dir("cache-version");
    SignatureCache cache(dir.path());
    spit(cache.file(), "orbvcd-signature-cache v2\n");
    CHECK_THROWS_AS(cache.load(), CacheCorruption);
    spit(cache.file(), std::string(SignatureCache::header) + "\ng=2\torder=2\n");
    CHECK_THROWS_AS(cache.load(), CacheCorruption);
    spit(cache.file(), std::string(SignatureCache::header) + "\ng=x\torder=2\topts=0\tsigs=\tsum=0\n");
    CHECK_THROWS_AS(cache.load(), CacheCorruption);
}
