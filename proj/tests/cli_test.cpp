#include "quanta/cli.hpp"

#include <sstream>

#include <gtest/gtest.h>

#include "quanta/render.hpp"

namespace quanta {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

TEST(Cli, TetradicCadences) {
    const auto r = run({"cadences", "--width", "4"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "{I7,II7}\n{I7,IV7}\n{II7,III7}\n{III7,IV7}\n{V7}\n{VII7}\n");
}

TEST(Cli, CadencesJsonAndCsv) {
    EXPECT_EQ(run({"cadences", "--format", "csv"}).out, "cadence\nII;III\nII;V\nIII;IV\nIV;V\nVII\n");
    const auto json = run({"cadences", "--format", "json"});
    EXPECT_EQ(json.code, kExitOk);
    EXPECT_NE(json.out.find("\"VII\""), std::string::npos);
}

TEST(Cli, QuantumRow) {
    const auto r = run({"quantum", "--width", "4", "--target-distance", "2", "--modulator", "T6.11", "--cadence", "V"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out,
              "quantized: true\nquantum: 1,2,4,5,7,9,11\ntrace: 1,2,4,7,9,11\npivots: II7,V7,VII7\ncovered: true\n");
    const auto alt = run({"quantum", "--width", "4", "--target-distance", "2", "--modulator", "T6.-1", "--cadence", "V7"});
    EXPECT_EQ(alt.out, r.out);
}

TEST(Cli, QuantumNotQuantizedIsSuccess) {
    const auto r = run({"quantum", "--width", "4", "--target-distance", "4", "--modulator", "T4", "--cadence", "V"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("quantized: false"), std::string::npos);
    EXPECT_NE(r.out.find("symmetry: T0.11"), std::string::npos);
}

TEST(Cli, InvalidInputExitsTwo) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"quantum", "--width", "4", "--target-distance", "2", "--modulator", "X6", "--cadence", "V"},
             {"quantum", "--width", "4", "--target-distance", "2", "--modulator", "T6.11", "--cadence", "VIII"},
             {"quantum", "--width", "4", "--target-distance", "2", "--modulator", "T3", "--cadence", "V"},
             {"cadences", "--scale", "0,2,x"},
             {"cadences", "--scale", "0,2,2"},
             {"cadences", "--scale", "0,12"},
             {"cadences", "--modulus", "20"},
             {"cadences", "--modulus", "99", "--scale", "0,1"},
             {"cadences", "--format", "yaml"},
             {"catalog", "--format", "dot"},
             {"bogus"},
             {}}) {
        const auto r = run(args);
        EXPECT_EQ(r.code, kExitInvalidInput) << (args.empty() ? "" : args[0]);
    }
    const auto r = run({"quantum", "--width", "4", "--target-distance", "2", "--modulator", "X6", "--cadence", "V"});
    EXPECT_EQ(lines(r.err).size(), 1u);
}

TEST(Cli, CapacityErrorExitsThree) {
    const auto r = run({"cadences", "--modulus", "20", "--scale", "0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16"});
    EXPECT_EQ(r.code, kExitCapacity);
    EXPECT_EQ(run({"nerve", "--modulus", "20", "--scale", "0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16"}).code,
              kExitCapacity);
}

TEST(Cli, CatalogCsv) {
    const auto r = run({"catalog", "--width", "4", "--format", "csv"});
    EXPECT_EQ(r.code, kExitOk);
    const auto rows = lines(r.out);
    ASSERT_FALSE(rows.empty());
    EXPECT_EQ(rows[0], "tr,cadence,quantum,modulator,pivots,covered,annotations");
    // 22 printed modulations plus the two diminished-scale {VII7} rows at T3 and T9
    EXPECT_EQ(rows.size() - 1, 24u);
    EXPECT_EQ(rows[1], "1,V7,0;2;3;5;6;8;9;11,T5.11,III7;V7,true,diminished-scale");
    for (const auto& row : rows) EXPECT_EQ(std::count(row.begin(), row.end(), ','), 6) << row;
}

TEST(Cli, CatalogJsonRoundTrips) {
    const auto r = run({"catalog", "--width", "4", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk);
    const auto parsed = parse_catalog_json(r.out, 12, 7);
    EXPECT_EQ(render_catalog(parsed, 4, Format::Json), r.out);
    EXPECT_EQ(run({"catalog", "--width", "4", "--format", "json"}).out, r.out);
}

TEST(Cli, CatalogText) {
    const auto r = run({"catalog", "--width", "4"});
    const auto rows = lines(r.out);
    ASSERT_GT(rows.size(), 2u);
    EXPECT_EQ(rows[0].rfind("Tr", 0), 0u);
    EXPECT_NE(r.out.find("{VII7}*"), std::string::npos);
}

TEST(Cli, CheckGoldenReportsTheDifference) {
    const auto r = run({"catalog", "--width", "4", "--check-golden", QUANTA_GOLDEN_FILE});
    EXPECT_EQ(r.code, kExitGoldenMismatch);
    const auto out = lines(r.out);
    ASSERT_EQ(out.size(), 3u);
    EXPECT_EQ(out[0], "surplus: Tr=3 cadence={VII7} quantum={0,2,3,5,6,8,9,11} modulator=T3 pivots={II7,VII7} covered=true");
    EXPECT_EQ(out[1], "surplus: Tr=9 cadence={VII7} quantum={0,2,3,5,6,8,9,11} modulator=T9 pivots={II7,VII7} covered=true");
    EXPECT_EQ(out[2], "golden: MISMATCH (24 computed, 22 golden)");

    // bare flag falls back to the bundled fixture
    EXPECT_EQ(run({"catalog", "--width", "4", "--check-golden"}).out, r.out);
    EXPECT_EQ(run({"catalog", "--width", "4", "--check-golden", "/nonexistent.json"}).code, kExitInvalidInput);
}

TEST(Cli, Nerve) {
    const auto r = run({"nerve", "--width", "4"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("f-vector: 7,21,21,7\neuler: 0\nskeleton-complete: true\n"), std::string::npos);
    const auto dot = run({"nerve", "--width", "4", "--format", "dot"});
    EXPECT_EQ(dot.out.rfind("graph nerve {", 0), 0u);
    EXPECT_EQ(std::count(dot.out.begin(), dot.out.end(), '-') / 2, 21);
    EXPECT_EQ(run({"nerve"}).out.find("f-vector: 7,14,7\neuler: 0\n"), 0u);
}

TEST(Cli, Microtonal) {
    for (const char* width : {"3", "4"}) {
        for (const char* cmd : {"cadences", "catalog", "nerve"}) {
            const auto r = run({cmd, "--modulus", "20", "--scale", "0,3,6,8,11,14,17", "--width", width});
            EXPECT_EQ(r.code, kExitOk) << cmd << " " << r.err;
        }
    }
}

}  // namespace
}  // namespace quanta
