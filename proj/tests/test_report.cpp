#include "loclab/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <vector>

using namespace loclab;

namespace {

OutputRecord sample_theory_record()
{
    auto theory = theory_for(MeasurementCase::Count, 4.0, 0.0, 50.0);
    return make_record(theory, 50.0, 0.0);
}

OutputRecord sample_full_record()
{
    auto params = ScenarioParams::from_mean(4.0, 50.0, 2.5,
                                            MeasurementCase::RangeSet);
    auto theory = theory_for(MeasurementCase::RangeSet, 4.0, 2.5, 50.0);
    auto est = estimate_n_loc(params, 2000, 17, 2, 0.95);
    return make_record(theory, est, 50.0, 2.5);
}

} // namespace

TEST_CASE("csv header and row shape")
{
    auto csv = to_csv({sample_theory_record()});
    std::istringstream in(csv);
    std::string header, row;
    REQUIRE(std::getline(in, header));
    CHECK(header ==
          "case,m,d_v,eps,eps_ratio,theory_kind,theory_n_loc,theory_lower,"
          "theory_upper,mc_p_hat,mc_ci_low,mc_ci_high,trials,seed");
    REQUIRE(std::getline(in, row));
    // 14 columns => 13 commas
    CHECK(std::count(row.begin(), row.end(), ',') == 13);
    CHECK(row.rfind("count,", 0) == 0);
    // theory-only rows leave every Monte Carlo column empty
    CHECK(row.substr(row.size() - 5) == ",,,,,");
}

TEST_CASE("doubles round-trip through the csv")
{
    auto rec = sample_full_record();
    auto csv = to_csv({rec});
    std::istringstream in(csv);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);

    std::vector<std::string> cols;
    std::string col;
    std::istringstream cells(row);
    while (std::getline(cells, col, ','))
        cols.push_back(col);
    REQUIRE(cols.size() >= 12);

    CHECK(std::strtod(cols[1].c_str(), nullptr) == rec.m);
    CHECK(std::strtod(cols[7].c_str(), nullptr) == *rec.theory_lower);
    CHECK(std::strtod(cols[8].c_str(), nullptr) == *rec.theory_upper);
    CHECK(std::strtod(cols[9].c_str(), nullptr) == *rec.mc_p_hat);
}

TEST_CASE("format_double is exact to the bit")
{
    for (double v : {0.1, 1.0 / 3.0, 0.0037056878758749710845, 1e-300,
                     123456789.123456789}) {
        auto s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("json output")
{
    auto records = {sample_theory_record(), sample_full_record()};
    auto parsed = nlohmann::json::parse(to_json(records));
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 2);

    const auto& t = parsed[0];
    CHECK(t["case"] == "count");
    CHECK(t["theory_kind"] == "exact");
    CHECK(t["theory_n_loc"].is_number());
    CHECK(t["theory_lower"].is_null());
    CHECK(t["mc_p_hat"].is_null());
    CHECK(t["trials"].is_null());

    const auto& f = parsed[1];
    CHECK(f["case"] == "range-set");
    CHECK(f["theory_kind"] == "bounds");
    CHECK(f["theory_n_loc"].is_null());
    CHECK(f["theory_lower"].is_number());
    CHECK(f["theory_upper"].is_number());
    CHECK(f["mc_p_hat"].is_number());
    CHECK(f["trials"] == 2000);
    CHECK(f["seed"] == 17);
    CHECK(f["eps_ratio"] == doctest::Approx(0.05));
}

TEST_CASE("record construction fills the right fields")
{
    auto t = sample_theory_record();
    CHECK(t.theory_kind == "exact");
    CHECK(t.theory_n_loc.has_value());
    CHECK_FALSE(t.theory_lower.has_value());
    CHECK_FALSE(t.mc_p_hat.has_value());
    CHECK_FALSE(t.trials.has_value());

    auto f = sample_full_record();
    CHECK(f.theory_kind == "bounds");
    CHECK_FALSE(f.theory_n_loc.has_value());
    CHECK(f.theory_lower.has_value());
    CHECK(f.theory_upper.has_value());
    CHECK(f.mc_p_hat.has_value());
    CHECK(f.mc_ci_low.has_value());
    CHECK(*f.mc_ci_low <= *f.mc_p_hat);
    CHECK(*f.mc_p_hat <= *f.mc_ci_high);
}
