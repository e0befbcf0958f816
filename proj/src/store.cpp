// Persistent table cache: decimal text, auditable with any pager, atomic
// replace on write.

#include "overp/store.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <string>
#include <system_error>

#include <unistd.h>

#include "overp/errors.hpp"

namespace overp::store {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (const char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

std::uint64_t parse_u64(std::string_view s, const std::string& context) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw FormatError(context);
    return value;
}

} // namespace

void save(const OverpartitionTable& table, const std::filesystem::path& path) {
    namespace fs = std::filesystem;
    const fs::path parent = path.parent_path();
    if (!parent.empty())
        fs::create_directories(parent);

    fs::path tmp = path;
    tmp += ".tmp-" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << kMagic << '\n' << table.values.size() << '\n';
        for (std::size_t i = 0; i < table.values.size(); ++i)
            out << i << '\t' << table.values[i].get_str() << '\n';
        out.flush();
        if (!out)
            throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, path); // same directory, atomic replace
}

OverpartitionTable load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open cache file " + path.string());
    const auto fail = [&](const std::string& why) {
        return FormatError(path.string() + ": " + why);
    };

    std::string line;
    if (!std::getline(in, line) || line != kMagic)
        throw fail("bad magic (expected " + std::string(kMagic) + ")");
    if (!std::getline(in, line) || !all_digits(line))
        throw fail("bad count line");
    const std::uint64_t count = parse_u64(line, path.string() + ": unparsable count");
    if (count == 0)
        throw fail("empty table (record for index 0 is required)");

    OverpartitionTable table;
    table.values.clear();
    // clamp: a corrupt count must surface as "truncated", not an allocation blowup
    table.values.reserve(std::min<std::uint64_t>(count, std::uint64_t{1} << 20));
    for (std::uint64_t i = 0; i < count; ++i) {
        if (!std::getline(in, line))
            throw fail("truncated: " + std::to_string(count) + " records promised, " +
                       std::to_string(i) + " present");
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw fail("record " + std::to_string(i) + " has no tab separator");
        const std::string_view idx(line.data(), tab);
        const std::string_view val(line.data() + tab + 1, line.size() - tab - 1);
        if (!all_digits(idx) || !all_digits(val))
            throw fail("record " + std::to_string(i) + " is not two decimal integers");
        if (parse_u64(idx, path.string() + ": unparsable index") != i)
            throw fail("index gap or disorder at record " + std::to_string(i));
        if (i == 0 && val != "1")
            throw fail("record 0 must hold the value 1");
        if (i >= 1) {
            const char last = val.back();
            if ((last - '0') % 2 != 0)
                throw fail("odd value at index " + std::to_string(i));
        }
        table.values.emplace_back(std::string(val), 10);
    }
    if (std::getline(in, line))
        throw fail("trailing data after record " + std::to_string(count - 1));
    if (in.bad())
        throw std::runtime_error("read error on " + path.string());
    return table;
}

} // namespace overp::store
