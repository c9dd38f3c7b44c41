#include "tsurf/corpus.hpp"

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace tsurf;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run cli(const std::string& args)
{
    std::string cmd = std::string(TSURF_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch_dir(const std::string& tag)
{
    auto d = fs::temp_directory_path() / ("tsurf_test_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_SUITE("cli_corpus")
{
    TEST_CASE("cli examples")
    {
        auto r = cli("hj expand 25 9");
        CHECK(r.code == 0);
        CHECK(r.out == "[3,5,2]\n");

        r = cli("pres all 19 7 --render");
        CHECK(r.code == 0);
        auto ls = lines(r.out);
        REQUIRE(ls.size() == 3);
        CHECK(ls.back() == "[(2,1)]-(1)-[(3,1)]");

        r = cli("small horikawa --pg 4 --json");
        CHECK(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["status"] == "ok");
        CHECK(j["payload"]["families"].size() == 10);

        r = cli("zcf enum 12 --limit 5");
        CHECK(lines(r.out).size() == 5);
        CHECK(lines(cli("zcf enum 12").out).at(4) == lines(r.out).at(4));
    }

    TEST_CASE("cli exit codes")
    {
        CHECK(cli("frobnicate").code == 1);
        CHECK(cli("hj expand 25").code == 1);
        CHECK(cli("hj expand 25 10").code == 1);
        CHECK(cli("hj expand 25 9 --bogus").code == 1);
        CHECK(cli("tchain check 2,2").code == 2);
        CHECK(cli("quot scan-duval --max-index 40").code == 2);
        CHECK(cli("quot scan-wahl --max-n 20").code == 0);
        CHECK(cli("small assemble --pg 3 --block S0F --r 5 --fib I1").code == 1);
    }

    TEST_CASE("json output is canonical and round-trips")
    {
        for (const char* args : {"pres all 19 7 --json", "tchain disc 2,5 --json", "quot cases 49 6 --json",
                                 "small geography --pg 5 --json", "small leepark --pg 6 --json",
                                 "small block S2F.7 --r 6 --f I18 --f2 I18 --json", "hj expand 10 3 --json"}) {
            INFO(args);
            auto r = cli(args);
            REQUIRE(r.code == 0);
            auto j = nlohmann::json::parse(r.out);
            CHECK(j.dump(2) + "\n" == r.out);
            CHECK(j.contains("status"));
            CHECK(j.contains("payload"));
            CHECK(cli(args).out == r.out);
        }
        // Rationals are strings p/q, never floats.
        auto j = nlohmann::json::parse(cli("tchain disc 2,5 --json").out);
        CHECK(j["payload"]["deltas"][0] == "-1/3");
    }

    TEST_CASE("pristine corpus has an empty diff")
    {
        auto rep = corpus_check(TSURF_DATA_DIR);
        CHECK(rep.empty());
        CHECK(rep.records > 0);
        CHECK(cli("corpus check").code == 0);
    }

    TEST_CASE("regeneration is byte identical")
    {
        auto a = scratch_dir("regen_a");
        auto b = scratch_dir("regen_b");
        auto n = corpus_regen(a);
        CHECK(corpus_regen(b) == n);
        for (const auto& e : fs::directory_iterator(a)) {
            auto name = e.path().filename();
            CHECK(slurp(e.path()) == slurp(b / name));
            CHECK(slurp(e.path()) == slurp(fs::path(TSURF_DATA_DIR) / name));
        }
        fs::remove_all(a);
        fs::remove_all(b);
    }

    TEST_CASE("one edited notation gives a one-entry diff")
    {
        auto d = scratch_dir("perturb");
        corpus_regen(d);
        auto file = d / corpus_file_name("typeII");
        auto ls = lines(slurp(file));
        REQUIRE(ls.size() > 2);
        auto rec = nlohmann::json::parse(ls[1]);
        rec["notation"] = rec["notation"].get<std::string>() + "-(2)";
        ls[1] = rec.dump();
        {
            std::ofstream out(file, std::ios::binary);
            for (const auto& l : ls) out << l << '\n';
        }
        auto rep = corpus_check(d);
        REQUIRE(rep.entries.size() == 1);
        CHECK(rep.entries[0].family == "typeII");
        CHECK(rep.entries[0].line == 2);
        CHECK(cli("corpus check --dir " + d.string()).code == 2);

        // A corrupt line and a missing file are validation errors.
        {
            std::ofstream out(file, std::ios::binary | std::ios::app);
            out << "{not json\n";
        }
        CHECK_THROWS_AS(corpus_check(d), ValidationError);
        CHECK(cli("corpus check --dir " + d.string()).code == 1);
        fs::remove(file);
        CHECK_THROWS_AS(corpus_check(d), ValidationError);
        CHECK(cli("corpus check --dir " + d.string()).code == 1);
        fs::remove_all(d);
    }
}
