#include <gtest/gtest.h>

#include <cstring>
#include <string>

#include "vnumlab.h"

namespace {

const char* kTorsion =
    "ring X Y Z\n"
    "ideal I = (X*Y, Z)\n"
    "module M += [0] / (X^3, Y, X*Z)\n";

std::string take(char* s) {
  std::string out(s ? s : "");
  vnl_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, ParseEchoAndFree) {
  vnl_family* f = nullptr;
  ASSERT_EQ(vnl_family_parse(kTorsion, &f), VNL_OK);
  char* text = nullptr;
  ASSERT_EQ(vnl_family_echo(f, &text), VNL_OK);
  EXPECT_EQ(take(text), "ring X Y Z\nideal I = (Z, X*Y)\nmodule M += [0] / (Y, X*Z, X^3)\n");
  vnl_family_free(f);
  vnl_family_free(nullptr);
  EXPECT_STRNE(vnl_version(), "");
}

TEST(CApi, InputErrors) {
  vnl_family* f = nullptr;
  EXPECT_EQ(vnl_family_parse("ring X\nideal I = (1)\nmodule M += [0]\n", &f), VNL_ERR_INPUT);
  EXPECT_EQ(f, nullptr);
  EXPECT_NE(std::strstr(vnl_last_error(), "line 2"), nullptr);
  EXPECT_EQ(vnl_family_parse(nullptr, &f), VNL_ERR_ARGUMENT);
  EXPECT_EQ(vnl_family_parse(kTorsion, nullptr), VNL_ERR_ARGUMENT);
}

TEST(CApi, VerifyReport) {
  vnl_family* f = nullptr;
  ASSERT_EQ(vnl_family_parse(kTorsion, &f), VNL_OK);
  vnl_lab_options o = vnl_lab_options_default();
  EXPECT_EQ(o.n_max, 15u);
  EXPECT_EQ(o.window, 5u);
  o.n_max = 10;
  vnl_report* r = nullptr;
  ASSERT_EQ(vnl_run_verify(f, &o, &r), VNL_OK);
  EXPECT_EQ(vnl_report_flagged(r), 0u);
  EXPECT_EQ(vnl_report_truncated(r), 0);
  char* csv = nullptr;
  ASSERT_EQ(vnl_report_render(r, VNL_FORMAT_CSV, 0, &csv), VNL_OK);
  EXPECT_EQ(take(csv).rfind("check,prime,status,detail\n", 0), 0u);
  char* bad = nullptr;
  EXPECT_EQ(vnl_report_render(r, static_cast<vnl_format>(9), 0, &bad), VNL_ERR_ARGUMENT);
  vnl_report_free(r);
  vnl_family_free(f);
}

TEST(CApi, PointReports) {
  vnl_family* f = nullptr;
  ASSERT_EQ(vnl_family_parse(kTorsion, &f), VNL_OK);
  vnl_report* r = nullptr;
  ASSERT_EQ(vnl_run_ass(f, 2, nullptr, &r), VNL_OK);
  char* table = nullptr;
  ASSERT_EQ(vnl_report_render(r, VNL_FORMAT_TABLE, 0, &table), VNL_OK);
  EXPECT_NE(take(table).find("{(X,Y,Z)}"), std::string::npos);
  vnl_report_free(r);
  ASSERT_EQ(vnl_run_vnumber(f, 2, nullptr, &r), VNL_OK);
  char* csv = nullptr;
  ASSERT_EQ(vnl_report_render(r, VNL_FORMAT_CSV, 0, &csv), VNL_OK);
  EXPECT_NE(take(csv).find("2,quotient,*,1,Z,0"), std::string::npos);
  vnl_report_free(r);
  vnl_family_free(f);
}

TEST(CApi, BadOptions) {
  vnl_family* f = nullptr;
  ASSERT_EQ(vnl_family_parse(kTorsion, &f), VNL_OK);
  vnl_lab_options o = vnl_lab_options_default();
  o.window = 0;
  vnl_report* r = nullptr;
  EXPECT_EQ(vnl_run_analyze(f, &o, &r), VNL_ERR_ARGUMENT);
  EXPECT_EQ(r, nullptr);
  vnl_family_free(f);
}

TEST(CApi, ResourceCapIsPartial) {
  vnl_family* f = nullptr;
  ASSERT_EQ(vnl_family_parse("ring X Y Z W\nideal I = (X*Y, Y*Z, Z*W, X*W, X^2)\nmodule M += [0]\n",
                             &f),
            VNL_OK);
  vnl_lab_options o = vnl_lab_options_default();
  o.n_max = 30;
  o.window = 4;
  o.generator_limit = 40;
  vnl_report* r = nullptr;
  ASSERT_EQ(vnl_run_analyze(f, &o, &r), VNL_OK);
  EXPECT_EQ(vnl_report_truncated(r), 1);
  vnl_report_free(r);
  vnl_family_free(f);
}

TEST(CApi, RandomAndExplore) {
  vnl_random_params p = vnl_random_params_default();
  vnl_family* a = nullptr;
  vnl_family* b = nullptr;
  ASSERT_EQ(vnl_family_random(5, &p, &a), VNL_OK);
  ASSERT_EQ(vnl_family_random(5, &p, &b), VNL_OK);
  char* ta = nullptr;
  char* tb = nullptr;
  vnl_family_echo(a, &ta);
  vnl_family_echo(b, &tb);
  EXPECT_EQ(take(ta), take(tb));
  vnl_family_free(a);
  vnl_family_free(b);

  p.gens = 0;
  EXPECT_EQ(vnl_family_random(5, &p, &a), VNL_ERR_ARGUMENT);

  vnl_lab_options o = vnl_lab_options_default();
  o.n_max = 10;
  o.window = 4;
  vnl_report* r = nullptr;
  p = vnl_random_params_default();
  ASSERT_EQ(vnl_run_explore(3, 10, &p, &o, &r), VNL_OK);
  EXPECT_EQ(vnl_report_flagged(r), 0u);
  char* json = nullptr;
  ASSERT_EQ(vnl_report_render(r, VNL_FORMAT_JSON, 0, &json), VNL_OK);
  EXPECT_NE(take(json).find("\"trials\""), std::string::npos);
  vnl_report_free(r);
}
