// SPDX-License-Identifier: Apache-2.0
//
// dapb - deployment planning for distributed-antenna power beacons
// Copyright (C) 2026 The dapb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "dapb/errors.hpp"
#include "dapb/scenario.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>

using namespace dapb;

TEST_CASE("k0 for the reference rectenna")
{
    const double expected = 0.85 * 1e-3 * 1.0 * 1.0 / (2.0 * 0.02885 * 0.02885);
    CHECK(k0(Rectenna{}) == doctest::Approx(expected).epsilon(1e-15));
    CHECK(k0(Rectenna{}) == doctest::Approx(0.51060).epsilon(1e-4));
}

TEST_CASE("k0 scales linearly in xi, I_s, c, sigma_h2 and inversely in (rho V_T)^2")
{
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> u(0.1, 3.0);
    for (int i = 0; i < 200; ++i) {
        Rectenna a;
        a.I_s = u(gen) * 1e-3;
        a.rho = 1.0 + 0.5 * u(gen) / 3.0;
        a.V_T = u(gen) * 0.02;
        a.xi = u(gen) / 3.1;
        a.c = u(gen);
        a.sigma_h2 = u(gen);
        const double base = k0(a);
        const double f = u(gen);
        for (double Rectenna::*m : {&Rectenna::xi, &Rectenna::I_s, &Rectenna::c, &Rectenna::sigma_h2}) {
            Rectenna b = a;
            b.*m *= f;
            CHECK(k0(b) == doctest::Approx(base * f).epsilon(1e-13));
        }
        Rectenna b = a;
        b.rho *= f;
        CHECK(k0(b) == doctest::Approx(base / (f * f)).epsilon(1e-13));
        Rectenna c = a;
        c.V_T *= f;
        CHECK(k0(c) == doctest::Approx(base / (f * f)).epsilon(1e-13));
    }
}

TEST_CASE("k0 halves with xi and quarters with doubled V_T")
{
    Rectenna r;
    const double base = k0(r);
    r.xi /= 2.0;
    CHECK(k0(r) == doctest::Approx(base / 2.0).epsilon(1e-15));
    Rectenna v;
    v.V_T *= 2.0;
    CHECK(k0(v) == doctest::Approx(base / 4.0).epsilon(1e-15));
}

TEST_CASE("empty config gives reference defaults")
{
    const auto cfg = parse_config("");
    CHECK(cfg == Config{});
    CHECK(cfg.scenario.R == 30.0);
    CHECK(cfg.ca.h_C == 7.75);
    CHECK(cfg.r == 20.0);
    CHECK(cfg.scenario.N == 100);
    CHECK(cfg.scenario.P == 20.0);
    CHECK(cfg.scenario.alpha == 2.0);
    CHECK(cfg.scenario.psi0 == 10.0);
    CHECK(cfg.scenario.d_ref == 1.0);
    CHECK(cfg.rectenna.V_T == 0.02885);
}

TEST_CASE("single key override keeps the rest")
{
    const auto cfg = parse_config("# urban\nalpha=4\n");
    Config expected;
    expected.scenario.alpha = 4.0;
    CHECK(cfg == expected);
}

TEST_CASE("comments, blanks and whitespace are tolerated")
{
    const auto cfg = parse_config("  R = 40   # bigger cell\n\n\tP=50\r\n");
    CHECK(cfg.scenario.R == 40.0);
    CHECK(cfg.scenario.P == 50.0);
}

TEST_CASE("config errors name the offending key")
{
    auto key_of_validation = [](std::string_view text) {
        try {
            parse_config(text);
        } catch (const ValidationError &e) {
            return e.key();
        }
        return std::string("<none>");
    };
    auto key_of_parse = [](std::string_view text) {
        try {
            parse_config(text);
        } catch (const ConfigParseError &e) {
            return e.key();
        }
        return std::string("<none>");
    };
    CHECK(key_of_validation("R=-1") == "R");
    CHECK(key_of_validation("P=0") == "P");
    CHECK(key_of_validation("N=0") == "N");
    CHECK(key_of_validation("alpha=1.5") == "alpha");
    CHECK(key_of_validation("psi0=-2") == "psi0");
    CHECK(key_of_validation("xi=1") == "xi");
    CHECK(key_of_validation("rho=2.5") == "rho");
    CHECK(key_of_validation("r=31") == "r");
    CHECK(key_of_validation("h_C=0") == "h_C");
    CHECK(key_of_parse("R=abc") == "R");
    CHECK(key_of_parse("N=2.5") == "N");
    CHECK(key_of_parse("frequency=915e6") == "frequency");
    CHECK_THROWS_AS(parse_config("just words"), ConfigParseError);
    CHECK_THROWS_AS(parse_config("=3"), ConfigParseError);
}

TEST_CASE("relaxed mode skips the ideality range only")
{
    CHECK_THROWS_AS(parse_config("rho=3"), ValidationError);
    CHECK(parse_config("rho=3", false).rectenna.rho == 3.0);
    CHECK_THROWS_AS(parse_config("rho=-1", false), ValidationError);
}

TEST_CASE("deployment validation")
{
    Scenario s;
    CHECK_NOTHROW(validate(Deployment{CaDeployment{7.75}}, s));
    CHECK_NOTHROW(validate(Deployment{DaDeployment{0.0, 1.0}}, s));
    CHECK_NOTHROW(validate(Deployment{DaDeployment{30.0, 1.0}}, s));
    CHECK_THROWS_AS(validate(Deployment{DaDeployment{30.5, 1.0}}, s), ValidationError);
    CHECK_THROWS_AS(validate(Deployment{DaDeployment{10.0, 0.0}}, s), ValidationError);
    CHECK_THROWS_AS(validate(Deployment{CaDeployment{-1.0}}, s), ValidationError);
}

TEST_CASE("height regime bounds")
{
    Scenario s;
    CHECK(validate_height_regime(s, 7.75));
    CHECK_FALSE(validate_height_regime(s, 30.0));
    CHECK_FALSE(validate_height_regime(s, 7.0));
    CHECK(validate_height_regime(s, std::sqrt(60.0)));
    CHECK(validate_height_regime(s, std::nextafter(30.0, 0.0)));
    s.d_ref = 2.0;
    CHECK_FALSE(validate_height_regime(s, 7.75));
}

TEST_CASE("format/parse round trip is bit identical")
{
    const Config defaults;
    CHECK(parse_config(format_config(defaults)) == defaults);

    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        Config c;
        c.scenario.R = 10.0 + 90.0 * u(gen);
        c.scenario.P = 1.0 + 1000.0 * u(gen);
        c.scenario.N = 1 + static_cast<int>(500 * u(gen));
        c.scenario.alpha = 2.0 + 4.0 * u(gen);
        c.ca.h_C = 0.1 + 50.0 * u(gen);
        c.r = c.scenario.R * u(gen);
        c.rectenna.V_T = 0.01 + 0.03 * u(gen);
        c.rectenna.xi = 0.01 + 0.98 * u(gen);
        const auto back = parse_config(format_config(c));
        CHECK(back == c);
    }
}

TEST_CASE("save/load round trip through a file")
{
    const auto path = std::filesystem::temp_directory_path() / "dapb_roundtrip.cfg";
    Config c;
    c.scenario.P = 200.0;
    c.scenario.alpha = 4.0;
    save_config(c, path);
    CHECK(load_config(path) == c);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_config(path), InputError);
}
