// The propagation pipeline builds time dependence from finite double sums.
// The resummed infinite-product form may only appear in the arithmetic layer
// and in the diagnostic that compares against it.
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("resummed products stay out of the pipeline") {
    const fs::path root(QEUCLID_SOURCE_DIR);
    REQUIRE(fs::exists(root / "src"));
    int scanned = 0;
    for (const fs::path& dir : {root / "src", root / "include", root / "tools", root / "python"}) {
        if (!fs::exists(dir)) continue;
        for (const auto& entry : fs::recursive_directory_iterator(dir)) {
            if (!entry.is_regular_file()) continue;
            const std::string ext = entry.path().extension().string();
            if (ext != ".cpp" && ext != ".hpp" && ext != ".py") continue;
            ++scanned;
            const std::string rel = fs::relative(entry.path(), root).generic_string();
            const bool allowed = rel.rfind("src/qarith/", 0) == 0 || rel == "src/schrodinger/heine.cpp" ||
                                 rel == "include/qeuclid/qscalar.hpp";
            if (allowed) continue;
            INFO(rel);
            CHECK(slurp(entry.path()).find("q_pochhammer") == std::string::npos);
        }
    }
    CHECK(scanned > 10);
}
