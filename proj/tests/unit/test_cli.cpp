#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "alba/cli.hpp"

using alba::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::ostringstream out;
    std::ostringstream err;
    std::istringstream in(stdin_text);
    const int code = run(args, out, err, in);
    return {code, out.str(), err.str()};
}

const std::string kBinderIneq = "down $x . (dia box p1 /\\ box (@'i $x /\\ box p2)) <= dia box dia p1 \\/ dia box dia p2";

}  // namespace

TEST(Cli, ExitCodes) {
    EXPECT_EQ(call({"classify", "p <= dia p"}).code, 0);
    EXPECT_EQ(call({"run", "p <= ("}).code, 1);
    EXPECT_EQ(call({"run", "box dia p <= dia box p", "--order-type", "1"}).code, 2);
    EXPECT_EQ(call({"run", "p <= q", "--order-type", "1,1,1"}).code, 1);
    EXPECT_EQ(call({"verify", "p <= dia p", "--max-worlds", "9"}).code, 1);
    EXPECT_EQ(call({}).code, 1);
}

TEST(Cli, ParseErrorMentionsPosition) {
    const Outcome o = call({"classify", "p /\\ )"});
    EXPECT_EQ(o.code, 1);
    EXPECT_NE(o.err.find("parse error"), std::string::npos);
}

TEST(Cli, ClassifyReportsOrderTypes) {
    const Outcome o = call({"classify", kBinderIneq});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = nlohmann::json::parse(o.out);
    EXPECT_TRUE(j["sahlqvist"].get<bool>());
    EXPECT_EQ(j["variables"], nlohmann::json({"p1", "p2"}));
    bool found = false;
    for (const auto& e : j["order_types"]) found = found || e == nlohmann::json({"1", "1"});
    EXPECT_TRUE(found) << o.out;
}

TEST(Cli, ClassifyTree) {
    const Outcome o = call({"classify", "--tree", "box (p \\/ ~ dia q) -> box q"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = nlohmann::json::parse(o.out);
    ASSERT_TRUE(j["trees"].contains("formula"));
    const std::string t = j["trees"]["formula"];
    EXPECT_EQ(t.rfind("+→", 0), 0U) << t;
    EXPECT_NE(t.find("-¬"), std::string::npos);
}

TEST(Cli, RunJsonSchema) {
    const Outcome o = call({"run", kBinderIneq, "--order-type", "1,1", "--trace", "json"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = nlohmann::json::parse(o.out);
    for (const char* k : {"input", "variables", "epsilon", "strategy", "preprocess_steps", "branches", "fo_text"})
        EXPECT_TRUE(j.contains(k)) << k;
    EXPECT_TRUE(j["success"].get<bool>());
    ASSERT_EQ(j["branches"].size(), 1U);
    const auto& b = j["branches"][0];
    ASSERT_FALSE(b["steps"].empty());
    const auto& s = b["steps"][0];
    for (const char* k : {"rule", "stage", "item", "path", "quantifier_depth", "before", "after"})
        EXPECT_TRUE(s.contains(k)) << k;
    EXPECT_EQ(s["rule"], "first_approx");
    EXPECT_TRUE(b["quasi"].is_string());
}

TEST(Cli, RunTextOutput) {
    const Outcome o = call({"run", "dia box p <= box dia p"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_NE(o.out.find("order type: (1)"), std::string::npos) << o.out;
    EXPECT_NE(o.out.find("quasi: "), std::string::npos);
    EXPECT_NE(o.out.find("fo: forall"), std::string::npos);
    const Outcome t = call({"run", "dia box p <= box dia p", "--trace", "text"});
    EXPECT_NE(t.out.find("first_approx"), std::string::npos);
}

TEST(Cli, FailureIsDiagnosed) {
    const Outcome o = call({"run", "box dia p <= dia box p", "--order-type", "1"});
    EXPECT_EQ(o.code, 2);
    EXPECT_NE(o.err.find("cannot eliminate p"), std::string::npos) << o.err;
}

TEST(Cli, VerifyEquivalent) {
    const Outcome o = call({"verify", "p <= dia p", "--max-worlds", "3"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.out.rfind("Equivalent (530 frames", 0), 0U) << o.out;
}

TEST(Cli, Translate) {
    const Outcome o = call({"translate", "p <= dia p"});
    ASSERT_EQ(o.code, 0);
    EXPECT_EQ(o.out, "forall x. P_p(x) -> exists y1. R(x,y1) /\\ P_p(y1)\n");
    const Outcome c = call({"translate", "--closed", "'i <= dia 'i"});
    EXPECT_EQ(c.out.rfind("forall i.", 0), 0U) << c.out;
}

TEST(Cli, StdinAndFileInput) {
    const Outcome a = call({"translate"}, "p <= dia p");
    const Outcome b = call({"translate", "-"}, "p <= dia p");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const std::string path = testing::TempDir() + "alba_cli_input.txt";
    {
        std::ofstream f(path);
        f << "p <= dia p\n";
    }
    const Outcome c = call({"translate", "--file", path});
    EXPECT_EQ(c.out, a.out);
    std::remove(path.c_str());
    EXPECT_EQ(call({"translate", "--file", path}).code, 1);
}

TEST(Cli, BareFormulaIsReadAsValidity) {
    const Outcome o = call({"classify", "dia p -> p"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(nlohmann::json::parse(o.out)["variables"], nlohmann::json({"p"}));
}
