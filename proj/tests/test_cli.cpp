// End-to-end checks of the command-line interface: output formats, engine
// selection, exit codes, and JSON schemas.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(BSC4_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("spectrum prints csv rows") {
    RunResult r = run_cli("spectrum --profile 3:1,5:1 --engine oracle --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "d,alpha_d\n0,4\n1,0\n2,0\n");
}

TEST_CASE("spectrum engines agree and text format lists alpha") {
    RunResult analytic = run_cli("spectrum --profile 1:1,2:1,3:1,4:1,5:1,6:1,7:1 "
                                 "--engine analytic --format csv");
    RunResult oracle = run_cli("spectrum --profile 1:1,2:1,3:1,4:1,5:1,6:1,7:1 "
                               "--engine oracle --format csv");
    RunResult autoeng = run_cli("spectrum --profile 1:1,2:1,3:1,4:1,5:1,6:1,7:1 "
                                "--engine auto --format csv");
    CHECK(analytic.exit_code == 0);
    CHECK(analytic.out == oracle.out);
    CHECK(analytic.out == autoeng.out);

    RunResult text = run_cli("spectrum --profile 3:1,5:1 --format text");
    CHECK(text.exit_code == 0);
    CHECK(text.out == "n = 2\nalpha = 4 0 0\n");
}

TEST_CASE("the oracle engine refuses long codes but the analytic engine runs them") {
    RunResult too_long = run_cli("spectrum --profile 3:10,5:10,6:10 --engine oracle");
    CHECK(too_long.exit_code == 1);
    RunResult fine = run_cli("spectrum --profile 3:10,5:10,6:10 --engine analytic --format csv");
    CHECK(fine.exit_code == 0);
}

TEST_CASE("lambda prints exact fractions and optional decimals") {
    RunResult r = run_cli("lambda --profile 3:1,5:1 --eps 1/10");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "eps = 1/10: lambda = 81/100\n");

    RunResult more = run_cli("lambda --profile 1:1,2:1,3:1,4:1,5:1,6:1,7:1 "
                             "--eps 1/10 --eps 1/4 --decimal 6");
    CHECK(more.exit_code == 0);
    CHECK(more.out.find("2916/3125") != std::string::npos);
    CHECK(more.out.find("351/512") != std::string::npos);
    CHECK(more.out.find("0.933120 (approximate)") != std::string::npos);

    RunResult missing = run_cli("lambda --profile 3:1,5:1");
    CHECK(missing.exit_code == 1);
}

TEST_CASE("codebook files load as codes") {
    const char* path = "cli_test_codebook.txt";
    {
        std::ofstream f(path);
        f << "0000000\n0001111\n0110011\n1010101\n";
    }
    RunResult r = run_cli(std::string("lambda --codebook-file ") + path + " --eps 1/10");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("2916/3125") != std::string::npos);

    RunResult missing = run_cli("lambda --codebook-file does_not_exist.txt --eps 1/10");
    CHECK(missing.exit_code == 1);
    std::remove(path);
}

TEST_CASE("compare orders two codes at each eps") {
    RunResult r = run_cli("compare --profile 3:1,5:1 --profile 1:2 --eps 1/10 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "eps,ordering,lambda_a,lambda_b\n1/10,greater,81/100,9/20\n");

    RunResult dom = run_cli("compare --profile 1:3,3:2,5:2,6:2 --profile 1:2,3:3,5:2,6:2 "
                            "--eps 1/10 --format json");
    CHECK(dom.exit_code == 0);
    auto doc = nlohmann::json::parse(dom.out);
    CHECK(doc["dominance"]["kind"] == "universal");
    CHECK(doc["results"][0]["ordering"] == "less");
}

TEST_CASE("classify reports canonical form and class membership") {
    RunResult r = run_cli("classify --profile 9:2,7:1 --format json");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["canonical"]["counts"] == nlohmann::json({{"6", 2}, {"7", 1}}));
    CHECK(doc["linear"] == false);
    CHECK(doc["class_i"] == false);

    RunResult classi = run_cli("classify --profile 1:3,3:2,5:2,6:2 --format json");
    auto doc2 = nlohmann::json::parse(classi.out);
    CHECK(doc2["class_i"] == true);
    CHECK(doc2["class_i_profile"]["n1"] == 3);
}

TEST_CASE("reduce audits each step and single rules exit 2 when inapplicable") {
    RunResult r = run_cli("reduce --profile 4:1,7:1 --format json");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["linear"] == true);
    CHECK(doc["final"]["counts"] == nlohmann::json({{"5", 1}, {"6", 1}}));
    REQUIRE(doc["steps"].size() >= 1);
    CHECK(doc["steps"][0]["rule"] == "two-bit-flip");

    RunResult single = run_cli("reduce --profile 1:1,7:1 --rule two-bit-flip --source 1 "
                               "--format json");
    CHECK(single.exit_code == 0);

    RunResult inapplicable = run_cli("reduce --profile 3:2 --rule two-bit-flip --source 1");
    CHECK(inapplicable.exit_code == 2);
    RunResult odd = run_cli("reduce --profile 2:1,3:1 --rule even-replace --source 3 --target 4");
    CHECK(odd.exit_code == 2);
}

TEST_CASE("class1 emits certificates") {
    RunResult r = run_cli("class1 --profile 1:3,3:2,5:2,6:2 --check dominance --format json");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["kind"] == "universal");
    CHECK(doc["margins"].size() == 9);

    RunResult spectra = run_cli("class1 --profile 1:3,3:2,5:2,6:2 --format csv");
    CHECK(spectra.exit_code == 0);
    CHECK(spectra.out.find("d,alpha3_d,alpha5_d\n") == 0);
    CHECK(spectra.out.find("3,11,12\n") != std::string::npos);

    RunResult not_classi = run_cli("class1 --profile 2:2 --check dominance");
    CHECK(not_classi.exit_code == 1);
}

TEST_CASE("verify-linear emits the verdict schema") {
    RunResult r = run_cli("verify-linear --n 8 --format json");
    CHECK(r.exit_code == 0);
    const std::string prefix = "{\n  \"verdict\": \"linear-optimal\",\n  \"profiles_checked\": 0,";
    CHECK(r.out.rfind(prefix, 0) == 0);

    RunResult r9 = run_cli("verify-linear --n 9 --format json");
    auto doc = nlohmann::json::parse(r9.out);
    CHECK(doc["verdict"] == "linear-optimal");
    CHECK(doc["profiles_checked"] == 1);
    CHECK(doc["counterexample"].is_null());

    RunResult full = run_cli("verify-linear --n 12 --full --workers 2 --format json");
    auto doc_full = nlohmann::json::parse(full.out);
    CHECK(doc_full.contains("all_counterexamples"));
    CHECK(doc_full["all_counterexamples"].empty());
}

TEST_CASE("search and best-linear run end to end") {
    RunResult search = run_cli("search --n 3 --eps 1/10 --format json");
    CHECK(search.exit_code == 0);
    auto doc = nlohmann::json::parse(search.out);
    CHECK(doc["per_eps"][0]["lambda_max"] == "81/100");
    CHECK(doc["per_eps"][0]["maximizers"].size() == 5);

    RunResult best = run_cli("best-linear --n 9 --eps 1/10 --format csv");
    CHECK(best.exit_code == 0);
    CHECK(best.out == "n3,n5,n6\n1,4,4\n2,3,4\n");
}

TEST_CASE("input errors exit with code 1") {
    CHECK(run_cli("lambda --profile 16:1 --eps 1/10").exit_code == 1);
    CHECK(run_cli("lambda --profile 3:1,5:1 --eps 1/2").exit_code == 1);
    CHECK(run_cli("lambda --profile 3:1,5:1 --eps nonsense").exit_code == 1);
    CHECK(run_cli("spectrum").exit_code == 1);
    CHECK(run_cli("spectrum --profile 3:1 --codebook-file x.txt").exit_code == 1);
    CHECK(run_cli("nonsense-subcommand").exit_code == 1);
    CHECK(run_cli("search --n 13 --eps 1/10").exit_code == 1);
}

TEST_CASE("json output is parseable and ordered for spectra") {
    RunResult r = run_cli("spectrum --profile 3:1,5:1 --format json");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["n"] == 2);
    CHECK(doc["alpha"] == nlohmann::json::array({"4", "0", "0"}));
}
