#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tenskit/error.hpp"
#include "tenskit/io.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <sys/wait.h>

using namespace tenskit;
using nlohmann::json;

namespace fs = std::filesystem;

// Path of the command-line binary, injected by the build so the test can
// drive the real executable.
#ifndef TENSKIT_CLI_PATH
#define TENSKIT_CLI_PATH "tenskit"
#endif

namespace {

const fs::path kTmp = "io_cli_tmp";

std::string tmp_path(const std::string& leaf)
{
    fs::create_directories(kTmp);
    return (kTmp / leaf).string();
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    out << text;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct RunResult {
    int status = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args)
{
    const std::string outP = tmp_path("run_stdout.txt");
    const std::string errP = tmp_path("run_stderr.txt");
    const std::string cmd =
        std::string(TENSKIT_CLI_PATH) + " " + args + " >" + outP + " 2>" + errP;
    const int raw = std::system(cmd.c_str());
    RunResult r;
    if (raw != -1 && WIFEXITED(raw))
        r.status = WEXITSTATUS(raw);
    r.out = slurp(outP);
    r.err = slurp(errP);
    return r;
}

TensorMap frozen_operator()
{
    Array x(2, Valence{1, 1});
    x.set({1}, {1}, Scalar(1));
    x.set({1}, {2}, Scalar(2));
    x.set({2}, {1}, Scalar(3));
    x.set({2}, {2}, Scalar(4));
    return TensorMap(2, {lbl("a")}, {lbl("b")}, x);
}

void write_env_dir(const std::string& dir)
{
    fs::create_directories(dir);
    write_text(dir + "/g.json",
               R"({"name":"g","dim":2,"sub":["x","y"],"super":[],"entries":[1,2,2,5]})");
    write_text(dir + "/u.json",
               R"({"name":"u","dim":2,"sub":[],"super":["x"],"entries":[1,0]})");
    write_text(dir + "/v.json",
               R"({"name":"v","dim":2,"sub":[],"super":["x"],"entries":[0,1]})");
}

} // namespace

TEST_CASE("arrays and tensor maps round-trip through JSON")
{
    Array a(2, Valence{1, 1});
    for (std::size_t i = 0; i < 4; ++i)
        a.flat(i) = Scalar(static_cast<int>(i) + 1, 3);
    CHECK(array_from_json(array_to_json(a)) == a);

    TensorMap t(2, {lbl("p*")}, {lbl("q")}, a, "f");
    const nlohmann::ordered_json j = tensor_to_json(t, "t");
    std::string name;
    CHECK(tensor_from_json(j, &name) == t);
    CHECK(name == "t");

    // field order is part of the format, so serialized bytes stay stable
    const std::string dumped = j.dump();
    CHECK(dumped.rfind("{\"name\":\"t\",\"dim\":2,\"sub\":[\"p*\"],\"super\":[\"q\"]", 0) == 0);

    // integer and string entries are interchangeable on input
    const json ji = json::parse(R"({"dim":2,"sub":[],"super":["x"],"entries":[4,5]})");
    const json js = json::parse(R"({"dim":2,"sub":[],"super":["x"],"entries":["4","5"]})");
    CHECK(tensor_from_json(ji) == tensor_from_json(js));

    const BilateralTensor b = lambda_B_inv(frozen_operator());
    std::string bname;
    const BilateralTensor back = bilateral_from_json(bilateral_to_json(b, "b"), &bname);
    CHECK(lambda_B(back) == lambda_B(b));
    CHECK(bname == "b");
}

TEST_CASE("schema violations map onto the right error classes")
{
    const json bil = json::parse(
        R"({"name":"b","kind":"bilateral","dim":2,"sub":["a"],"super":["b"],"entries":[1,2,3,4]})");
    try {
        (void)tensor_from_json(bil);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrCode::usage);
        CHECK(std::string(e.what()).find("bilateral") != std::string::npos);
    }

    const json shortEntries =
        json::parse(R"({"dim":2,"sub":[],"super":["x"],"entries":[4]})");
    CHECK_THROWS_AS((void)tensor_from_json(shortEntries), Error);

    // a malformed rational in a file is a format problem
    const json badEntry =
        json::parse(R"({"dim":2,"sub":[],"super":["x"],"entries":["1.5","2"]})");
    try {
        (void)tensor_from_json(badEntry);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrCode::usage);
        CHECK(std::string(e.what()).find("1.5") != std::string::npos);
    }

    try {
        (void)load_json_file(tmp_path("no_such_file.json"));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrCode::io);
    }

    const std::string broken = tmp_path("broken.json");
    write_text(broken, "{ not json");
    try {
        (void)load_json_file(broken);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrCode::usage);
    }
}

TEST_CASE("environments load from directories with standalone files winning")
{
    const std::string dir = tmp_path("envdup");
    fs::create_directories(dir);
    write_text(dir + "/01_t.json",
               R"({"name":"t","dim":2,"sub":[],"super":["x"],"entries":[1,2]})");
    write_text(dir + "/02_more.json", R"({"tensors":[
        {"name":"t","dim":2,"sub":[],"super":["x"],"entries":[9,9]},
        {"name":"w","dim":2,"sub":[],"super":["x"],"entries":[3,4]}]})");
    write_text(dir + "/03_t.json",
               R"({"name":"t","dim":2,"sub":[],"super":["x"],"entries":[7,8]})");

    std::ostringstream captured;
    std::streambuf* old = std::cerr.rdbuf(captured.rdbuf());
    Env env = load_env(dir);
    std::cerr.rdbuf(old);

    REQUIRE(env.count("t") == 1);
    REQUIRE(env.count("w") == 1);
    // the collection entry loses to the standalone file; the later
    // standalone file replaces the earlier one
    CHECK(env.at("t").coeffs().at({}, {1}) == Scalar(7));
    CHECK(env.at("t").coeffs().at({}, {2}) == Scalar(8));
    CHECK(captured.str().find("duplicate tensor 't'") != std::string::npos);

    const std::string noname = tmp_path("noname.json");
    write_text(noname, R"({"dim":2,"sub":[],"super":["x"],"entries":[1,2]})");
    CHECK_THROWS_AS((void)load_env(noname), Error);
    CHECK_THROWS_AS((void)load_env(tmp_path("missing_dir_xyz")), Error);
}

TEST_CASE("the command line evaluates expressions deterministically")
{
    const std::string dir = tmp_path("envdir");
    write_env_dir(dir);

    const RunResult r1 = run_cli("eval --env " + dir + " --expr 'g_ab u^a v^b'");
    CHECK(r1.status == 0);
    CHECK(r1.out == "2\n");
    CHECK(r1.err.empty());

    const RunResult r2 = run_cli("eval --env " + dir + " --expr 'g_ab u^a v^b'");
    CHECK(r2.out == r1.out);

    // --out writes the file and keeps stdout quiet
    const std::string outFile = tmp_path("eval_result.json");
    const RunResult r3 =
        run_cli("eval --env " + dir + " --expr 'g_ab u^a v^b' --out " + outFile);
    CHECK(r3.status == 0);
    CHECK(r3.out.empty());
    std::string name;
    const TensorMap loaded = load_tensor_file(outFile, &name);
    CHECK(name == "result");
    CHECK(loaded.coeffs().flat(0) == Scalar(2));

    const RunResult ver = run_cli("--version");
    CHECK(ver.status == 0);
    CHECK(ver.out == "tenskit 0.1.0\n");
}

TEST_CASE("the command line reports parses and plans")
{
    const RunResult pretty = run_cli("parse --expr 'f_a^b . g_c^a'");
    CHECK(pretty.status == 0);
    CHECK(pretty.out == "f_a^b g_c^a\n");

    const RunResult plan = run_cli("parse --plan --expr 'f_a^b . g_c^a'");
    CHECK(plan.status == 0);
    CHECK(plan.out.find("compose matches[(a,a)]") != std::string::npos);
    CHECK(plan.out.find("result subs[c] supers[b] valence (1 over 1)") != std::string::npos);
}

TEST_CASE("the command line maps error classes onto exit codes")
{
    const std::string dir = tmp_path("envdir");
    write_env_dir(dir);

    const RunResult usage = run_cli("parse --expr 't^a . s_a'");
    CHECK(usage.status == 2);
    CHECK(usage.err.rfind("ERROR 2: ", 0) == 0);
    CHECK(usage.out.empty());

    const RunResult unbound = run_cli("eval --env " + dir + " --expr 'nope^a'");
    CHECK(unbound.status == 2);
    CHECK(unbound.err.rfind("ERROR 2: ", 0) == 0);

    const RunResult io = run_cli("eval --env " + tmp_path("absent") + " --expr 'u^a'");
    CHECK(io.status == 4);
    CHECK(io.err.rfind("ERROR 4: ", 0) == 0);

    write_text(tmp_path("vec.json"),
               R"({"name":"v","dim":2,"sub":[],"super":["x"],"entries":[1,1]})");
    write_text(tmp_path("metric.json"),
               R"({"role":"metric","dim":2,"subs":2,"supers":0,"entries":[2,0,0,3]})");
    const RunResult domain = run_cli("lower --tensor " + tmp_path("vec.json") +
                                     " --metric " + tmp_path("metric.json") + " --label z");
    CHECK(domain.status == 3);
    CHECK(domain.err.rfind("ERROR 3: ", 0) == 0);

    const RunResult noArgs = run_cli("eval");
    CHECK(noArgs.status == 2);
}

TEST_CASE("the command line lowers, contracts, and changes basis")
{
    write_text(tmp_path("vec.json"),
               R"({"name":"v","dim":2,"sub":[],"super":["x"],"entries":[1,1]})");
    write_text(tmp_path("metric.json"),
               R"({"role":"metric","dim":2,"subs":2,"supers":0,"entries":[2,0,0,3]})");

    const std::string lowered = tmp_path("lowered.json");
    const RunResult lo = run_cli("lower --tensor " + tmp_path("vec.json") + " --metric " +
                                 tmp_path("metric.json") + " --label x --out " + lowered);
    CHECK(lo.status == 0);
    std::string name;
    const TensorMap vLow = load_tensor_file(lowered, &name);
    CHECK(name == "v");
    CHECK(vLow.subs() == std::vector<IndexLabel>{lbl("x'")});
    CHECK(vLow.coeffs().at({1}, {}) == Scalar(2));
    CHECK(vLow.coeffs().at({2}, {}) == Scalar(3));

    // raising with the same metric undoes the lowering
    const std::string raised = tmp_path("raised.json");
    const RunResult ra = run_cli("raise --tensor " + lowered + " --metric " +
                                 tmp_path("metric.json") + " --label \"x'\" --out " + raised);
    CHECK(ra.status == 0);
    const TensorMap vUp = load_tensor_file(raised);
    CHECK(vUp.coeffs().at({}, {1}) == Scalar(1));
    CHECK(vUp.coeffs().at({}, {2}) == Scalar(1));

    write_text(tmp_path("op.json"),
               R"({"name":"X","dim":2,"sub":["a"],"super":["b"],"entries":[1,2,3,4]})");
    const RunResult tr = run_cli("contract --tensor " + tmp_path("op.json") + " --pair a:b");
    CHECK(tr.status == 0);
    const json j = json::parse(tr.out);
    CHECK(j["entries"][0].get<std::string>() == "5");

    write_text(tmp_path("identity_change.json"),
               R"({"role":"basis_change","from":"e","to":"f","dim":2,"subs":1,"supers":1,"entries":[1,0,0,1]})");
    const RunResult ch = run_cli("transform --tensor " + tmp_path("op.json") + " --change " +
                                 tmp_path("identity_change.json"));
    CHECK(ch.status == 0);
    const json jc = json::parse(ch.out);
    CHECK(jc["basis"].get<std::string>() == "f");
    CHECK(jc["entries"] == json::parse(R"(["1","2","3","4"])"));
}

TEST_CASE("the command line runs its own verification suites")
{
    const RunResult ok = run_cli("check --suite lambdaB --dim 1 --cases 5 --seed 1");
    CHECK(ok.status == 0);
    CHECK(ok.out.find("lambdaB dim=1 seed=1: 5/5 passed") != std::string::npos);

    const RunResult bad = run_cli("check --suite nosuch --dim 2 --cases 1 --seed 1");
    CHECK(bad.status == 2);
}
