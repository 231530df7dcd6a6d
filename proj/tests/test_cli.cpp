#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(GBCRYPT_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    int status = pclose(p);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string tmp(const std::string& name) { return std::string(TEST_TMPDIR) + "/" + name; }

} // namespace

TEST_CASE("estimate emits the expected figures") {
    RunResult r = run("estimate --cipher ciminion --rounds 33");
    CHECK(r.code == 0);
    CHECK(r.out.find("bariant=46.67") != std::string::npos);
    CHECK(r.out.find("eigenvalue=63.09") != std::string::npos);
    CHECK(r.out.find("fully_substituted=130.00") != std::string::npos);
    RunResult h = run("estimate --cipher hydra --rounds 31");
    CHECK(h.code == 0);
    CHECK(h.out.find("fglm=125.91") != std::string::npos);
    CHECK(h.out.find("eigenvalue=119.09") != std::string::npos);
    CHECK(h.out.find("semiregular=141.77") != std::string::npos);
    CHECK(h.out.find("version=") != std::string::npos);
}

TEST_CASE("estimate table mode renders rows") {
    RunResult r = run("estimate --table ciminion");
    CHECK(r.code == 0);
    CHECK(r.out.find("46.67") != std::string::npos);
    CHECK(r.out.find("128.47") != std::string::npos);
}

TEST_CASE("missing arguments exit with the usage code") {
    CHECK(run("estimate --cipher ciminion").code == 2);
    CHECK(run("attack --params /nonexistent --sample /nonexistent").code == 2);
    CHECK(run("bogus-subcommand").code == 2);
}

TEST_CASE("ciminion end-to-end through files") {
    std::string params = tmp("cim_params.txt"), sample = tmp("cim_sample.txt"),
                witness = tmp("cim_witness.txt"), out1 = tmp("cim_out1.txt"), out2 = tmp("cim_out2.txt");
    CHECK(run("gen-params --cipher ciminion --q 7741 --rc 4 --re 1 --variant standard --seed 42 --out " +
              params).code == 0);
    CHECK(run("gen-sample --params " + params + " --seed 7 --out " + sample + " --witness-out " +
              witness).code == 0);
    RunResult a = run("attack --params " + params + " --sample " + sample + " --seed 1 --out " + out1);
    CHECK(a.code == 0);
    CHECK(a.out.find("status=ok") != std::string::npos);
    // the witness key is among the reported keys
    std::string w = slurp(witness);
    auto grab = [&](const std::string& key) {
        auto pos = w.find(key + "=");
        REQUIRE(pos != std::string::npos);
        auto end = w.find('\n', pos);
        return w.substr(pos + key.size() + 1, end - pos - key.size() - 1);
    };
    CHECK(a.out.find("k1=" + grab("k1")) != std::string::npos);
    CHECK(a.out.find("k2=" + grab("k2")) != std::string::npos);
    // identical command and seed produce byte-identical output files
    RunResult b = run("attack --params " + params + " --sample " + sample + " --seed 1 --out " + out2);
    CHECK(b.code == 0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(!slurp(out1).empty());
}

TEST_CASE("corrupted sample file exits with the parse code") {
    std::string params = tmp("cim_params2.txt"), sample = tmp("cim_sample2.txt");
    CHECK(run("gen-params --cipher ciminion --q 7741 --rc 3 --re 1 --seed 5 --out " + params).code == 0);
    std::ofstream(sample) << "cipher=ciminion\nq=7741\nnonce=;;;\n";
    CHECK(run("attack --params " + params + " --sample " + sample).code == 2);
}

TEST_CASE("tampered sample exits with the no-solution code") {
    std::string params = tmp("cim_params3.txt"), sample = tmp("cim_sample3.txt");
    CHECK(run("gen-params --cipher ciminion --q 7741 --rc 3 --re 1 --seed 6 --out " + params).code == 0);
    CHECK(run("gen-sample --params " + params + " --seed 8 --out " + sample).code == 0);
    // flip one ciphertext digit
    std::string text = slurp(sample);
    auto pos = text.find("c1=");
    char& digit = text[pos + 3];
    digit = digit == '9' ? '8' : static_cast<char>(digit + 1);
    std::ofstream(sample) << text;
    CHECK(run("attack --params " + params + " --sample " + sample).code == 1);
}

TEST_CASE("hydra end-to-end through files") {
    std::string params = tmp("hyd_params.txt"), sample = tmp("hyd_sample.txt"), witness = tmp("hyd_witness.txt");
    CHECK(run("gen-params --cipher hydra --q 7741 --rounds 2 --seed 11 --out " + params).code == 0);
    CHECK(run("gen-sample --params " + params + " --seed 12 --out " + sample + " --witness-out " +
              witness).code == 0);
    RunResult a = run("attack --params " + params + " --sample " + sample);
    CHECK(a.code == 0);
    CHECK(a.out.find("status=ok") != std::string::npos);
    std::string w = slurp(witness);
    auto pos = w.find("k=");
    REQUIRE(pos != std::string::npos);
    std::string kline = w.substr(pos + 2, w.find('\n', pos) - pos - 2);
    for (auto& c : kline)
        if (c == ' ') c = ',';
    CHECK(a.out.find("k=" + kline) != std::string::npos);
}

TEST_CASE("experiments") {
    RunResult rk = run("experiment rank-check --rounds 2..3 --q 7741");
    CHECK(rk.code == 0);
    CHECK(rk.out.find("full_rank=1") != std::string::npos);
    CHECK(rk.out.find("rounds=3") != std::string::npos);
    RunResult gv = run("experiment gb-verify --ciminion --rounds 4 --q 7741");
    CHECK(gv.code == 0);
    CHECK(gv.out.find("pass=1") != std::string::npos);
    CHECK(gv.out.find("staircase=8") != std::string::npos);
    RunResult sd = run("experiment solve-degree --hydra --rounds 3 --boolean");
    CHECK(sd.code == 0);
    CHECK(sd.out.find("solve-degree-result") != std::string::npos);
    CHECK(sd.out.find("degree=3") != std::string::npos);
}
