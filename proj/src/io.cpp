// SPDX-License-Identifier: Apache-2.0
//
// uavsv: UWB air-to-ground channel modelling toolkit
// Copyright (C) 2026 The uavsv authors
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

#include "uavsv/io.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace uavsv
{
    using nlohmann::json;

    CirFile make_cir_file(std::vector<Cir> scans, std::uint64_t seed, std::optional<ScenarioKey> key)
    {
        CirFile f;
        if (!scans.empty())
        {
            f.sample_spacing_ns = scans.front().sample_spacing_ns;
            f.window_ns = scans.front().window_ns;
        }
        f.seed = seed;
        f.key = key;
        f.scans = std::move(scans);
        return f;
    }

    std::string format_cir_file(const CirFile &file)
    {
        std::string out;
        out.reserve(64 + file.scans.size() * 256);
        out += kCirMagic;
        out += "\n# sample_spacing_ns=" + text::format_shortest(file.sample_spacing_ns);
        out += "\n# window_ns=" + text::format_shortest(file.window_ns);
        out += "\n# n_scans=" + std::to_string(file.scans.size());
        out += "\n# seed=" + std::to_string(file.seed);
        out += "\n# scenario=" + (file.key ? describe(*file.key) : std::string("custom"));
        out += "\nscan_id,delay_ns,real,imag\n";
        for (std::size_t s = 0; s < file.scans.size(); ++s)
        {
            const Cir &cir = file.scans[s];
            if (cir.sample_spacing_ns != file.sample_spacing_ns || cir.window_ns != file.window_ns)
                throw std::invalid_argument("All scans in a CIR file must share one grid.");
            cir.validate();
            const std::string id = std::to_string(s) + ",";
            for (const auto &t : cir.taps)
            {
                out += id;
                out += text::format_shortest(t.delay_ns);
                out += ",";
                out += text::format_significant(t.amplitude.real(), 9);
                out += ",";
                out += text::format_significant(t.amplitude.imag(), 9);
                out += "\n";
            }
        }
        return out;
    }

    namespace
    {
        struct LineReader
        {
            std::string_view text;
            std::size_t pos = 0;
            std::size_t line_no = 0;

            bool next(std::string_view &line)
            {
                if (pos >= text.size())
                    return false;
                std::size_t end = text.find('\n', pos);
                if (end == std::string_view::npos)
                    end = text.size();
                line = text.substr(pos, end - pos);
                if (!line.empty() && line.back() == '\r')
                    line.remove_suffix(1);
                pos = end + 1;
                ++line_no;
                return true;
            }
        };

        template <typename Fn>
        auto field(std::size_t line, std::size_t column, Fn &&fn)
        {
            try
            {
                return fn();
            }
            catch (const std::invalid_argument &e)
            {
                throw ParseError(e.what(), line, column);
            }
        }
    }

    CirFile parse_cir_file(std::string_view content)
    {
        LineReader rd{content};
        std::string_view line;
        if (!rd.next(line) || line != kCirMagic)
            throw ParseError("expected '" + std::string(kCirMagic) + "'", 1);

        std::map<std::string, std::pair<std::string, std::size_t>> header;
        while (true)
        {
            if (!rd.next(line))
                throw ParseError("missing column header", rd.line_no);
            if (line.starts_with("#"))
            {
                const auto body = text::trim(line.substr(1));
                const auto eq = body.find('=');
                if (eq == std::string_view::npos)
                    continue; // free comment
                header[std::string(text::trim(body.substr(0, eq)))] = {std::string(text::trim(body.substr(eq + 1))),
                                                                       rd.line_no};
                continue;
            }
            if (line != "scan_id,delay_ns,real,imag")
                throw ParseError("expected column header 'scan_id,delay_ns,real,imag'", rd.line_no);
            break;
        }

        auto require = [&](const std::string &k) -> const std::pair<std::string, std::size_t> &
        {
            const auto it = header.find(k);
            if (it == header.end())
                throw ParseError("missing header entry '" + k + "'", rd.line_no);
            return it->second;
        };

        CirFile f;
        const auto &sp = require("sample_spacing_ns");
        f.sample_spacing_ns = field(sp.second, 0, [&] { return text::parse_double(sp.first); });
        const auto &wn = require("window_ns");
        f.window_ns = field(wn.second, 0, [&] { return text::parse_double(wn.first); });
        const auto &ns = require("n_scans");
        const auto n_scans = field(ns.second, 0, [&] { return text::parse_uint(ns.first); });
        const auto &sd = require("seed");
        f.seed = field(sd.second, 0, [&] { return text::parse_uint(sd.first); });
        const auto &sc = require("scenario");
        if (sc.first != "custom")
            f.key = field(sc.second, 0, [&] { return parse_scenario_key(sc.first); });
        if (!(f.sample_spacing_ns > 0.0) || !(f.window_ns > 0.0))
            throw ParseError("sample spacing and window must be positive", sp.second);
        if (n_scans > 100'000'000)
            throw ParseError("implausible n_scans", ns.second);

        f.scans.resize(n_scans);
        for (std::size_t i = 0; i < f.scans.size(); ++i)
        {
            f.scans[i].sample_spacing_ns = f.sample_spacing_ns;
            f.scans[i].window_ns = f.window_ns;
            f.scans[i].meta = CirMeta{f.seed, i, f.key};
        }

        std::uint64_t last_scan = 0;
        bool any = false;
        while (rd.next(line))
        {
            if (line.empty() || line.starts_with("#"))
                continue;
            const auto cols = text::split(line, ',');
            if (cols.size() != 4)
                throw ParseError("expected 4 fields, got " + std::to_string(cols.size()), rd.line_no,
                                 std::min<std::size_t>(cols.size(), 4) + 1);
            const std::size_t ln = rd.line_no;
            const auto scan = field(ln, 1, [&] { return text::parse_uint(cols[0]); });
            if (scan >= n_scans)
                throw ParseError("scan_id " + std::to_string(scan) + " outside n_scans", ln, 1);
            Tap t;
            t.delay_ns = field(ln, 2, [&] { return text::parse_double(cols[1]); });
            const double re = field(ln, 3, [&] { return text::parse_double(cols[2]); });
            const double im = field(ln, 4, [&] { return text::parse_double(cols[3]); });
            if (!std::isfinite(re) || !std::isfinite(im))
                throw ParseError("amplitude must be finite", ln, std::isfinite(re) ? 4 : 3);
            t.amplitude = {re, im};
            if (!(t.delay_ns >= 0.0) || t.delay_ns > f.window_ns)
                throw ParseError("delay outside [0, window_ns]", ln, 2);

            if (any && scan < last_scan)
                throw ParseError("rows must be sorted by scan_id", ln, 1);
            auto &taps = f.scans[scan].taps;
            if (!taps.empty() && !(t.delay_ns > taps.back().delay_ns))
                throw ParseError("delays must be strictly increasing within a scan", ln, 2);
            taps.push_back(t);
            last_scan = scan;
            any = true;
        }
        return f;
    }

    void RunConfig::validate() const
    {
        if (n_scans == 0)
            throw std::invalid_argument("n_scans must be at least 1.");
        key.validate();
        rf.validate();
        rule.validate();
        synthesis.validate();
    }

    std::string run_config_to_json(const RunConfig &cfg)
    {
        json j;
        j["seed"] = cfg.seed;
        j["n_scans"] = cfg.n_scans;
        j["scenario"] = {{"scenario", to_string(cfg.key.scenario)},
                         {"rx", to_string(cfg.key.rx)},
                         {"orientation", to_string(cfg.key.orientation)},
                         {"x_m", cfg.key.x_m}};
        j["rf"] = {{"center_frequency_hz", cfg.rf.center_frequency_hz},
                   {"reference_distance_m", cfg.rf.reference_distance_m},
                   {"epsilon_r", cfg.rf.epsilon_r},
                   {"g_r_circular", cfg.rf.g_r_circular},
                   {"dynamic_range_db", cfg.rf.dynamic_range_db},
                   {"harmonize_gains", cfg.rf.harmonize_gains}};
        j["rule"] = {{"min_duration_ns", cfg.rule.min_duration_ns},
                     {"min_drop_db", cfg.rule.min_drop_db},
                     {"dynamic_range_db", cfg.rule.dynamic_range_db}};
        j["synthesis"] = {
            {"amplitude", cfg.synthesis.amplitude == AmplitudeModel::Rayleigh ? "rayleigh" : "deterministic"},
            {"decay_as_time_constant", cfg.synthesis.decay_as_time_constant},
            {"window_ns", cfg.synthesis.window_ns},
            {"sample_spacing_ns", cfg.synthesis.sample_spacing_ns}};
        j["output_dir"] = cfg.output_dir;
        j["threads"] = cfg.threads;
        return j.dump(2) + "\n";
    }

    namespace
    {
        std::pair<std::size_t, std::size_t> line_col(std::string_view s, std::size_t byte)
        {
            std::size_t line = 1, col = 1;
            for (std::size_t i = 0; i < std::min(byte, s.size()); ++i)
            {
                if (s[i] == '\n')
                {
                    ++line;
                    col = 1;
                }
                else
                    ++col;
            }
            return {line, col};
        }

        void reject_unknown(const json &obj, std::initializer_list<std::string_view> allowed, const std::string &where)
        {
            if (!obj.is_object())
                throw std::invalid_argument(where + " must be an object");
            for (const auto &[k, v] : obj.items())
            {
                bool ok = false;
                for (auto a : allowed)
                    ok = ok || k == a;
                if (!ok)
                    throw std::invalid_argument("unknown key '" + k + "' in " + where);
            }
        }

        template <typename T>
        void read(const json &obj, const char *name, T &dst)
        {
            if (obj.contains(name))
                dst = obj.at(name).get<T>();
        }
    }

    RunConfig run_config_from_json(std::string_view src)
    {
        json j;
        try
        {
            j = json::parse(src.begin(), src.end());
        }
        catch (const json::parse_error &e)
        {
            const auto [line, col] = line_col(src, e.byte > 0 ? e.byte - 1 : 0);
            throw ParseError("invalid JSON", line, col);
        }

        RunConfig cfg;
        try
        {
            reject_unknown(j, {"seed", "n_scans", "scenario", "rf", "rule", "synthesis", "output_dir", "threads"},
                           "config");
            read(j, "seed", cfg.seed);
            read(j, "n_scans", cfg.n_scans);
            if (j.contains("scenario"))
            {
                const auto &s = j.at("scenario");
                reject_unknown(s, {"scenario", "rx", "orientation", "x_m"}, "scenario");
                if (s.contains("scenario"))
                    cfg.key.scenario = parse_scenario(s.at("scenario").get<std::string>());
                if (s.contains("rx"))
                    cfg.key.rx = parse_receiver(s.at("rx").get<std::string>());
                if (s.contains("orientation"))
                    cfg.key.orientation = parse_orientation(s.at("orientation").get<std::string>());
                read(s, "x_m", cfg.key.x_m);
            }
            if (j.contains("rf"))
            {
                const auto &r = j.at("rf");
                reject_unknown(r, {"center_frequency_hz", "reference_distance_m", "epsilon_r", "g_r_circular",
                                   "dynamic_range_db", "harmonize_gains"},
                               "rf");
                read(r, "center_frequency_hz", cfg.rf.center_frequency_hz);
                read(r, "reference_distance_m", cfg.rf.reference_distance_m);
                read(r, "epsilon_r", cfg.rf.epsilon_r);
                read(r, "g_r_circular", cfg.rf.g_r_circular);
                read(r, "dynamic_range_db", cfg.rf.dynamic_range_db);
                read(r, "harmonize_gains", cfg.rf.harmonize_gains);
            }
            if (j.contains("rule"))
            {
                const auto &r = j.at("rule");
                reject_unknown(r, {"min_duration_ns", "min_drop_db", "dynamic_range_db"}, "rule");
                read(r, "min_duration_ns", cfg.rule.min_duration_ns);
                read(r, "min_drop_db", cfg.rule.min_drop_db);
                read(r, "dynamic_range_db", cfg.rule.dynamic_range_db);
            }
            if (j.contains("synthesis"))
            {
                const auto &s = j.at("synthesis");
                reject_unknown(s, {"amplitude", "decay_as_time_constant", "window_ns", "sample_spacing_ns"},
                               "synthesis");
                if (s.contains("amplitude"))
                {
                    const auto a = s.at("amplitude").get<std::string>();
                    if (a == "rayleigh")
                        cfg.synthesis.amplitude = AmplitudeModel::Rayleigh;
                    else if (a == "deterministic")
                        cfg.synthesis.amplitude = AmplitudeModel::Deterministic;
                    else
                        throw std::invalid_argument("amplitude must be 'rayleigh' or 'deterministic'");
                }
                read(s, "decay_as_time_constant", cfg.synthesis.decay_as_time_constant);
                read(s, "window_ns", cfg.synthesis.window_ns);
                read(s, "sample_spacing_ns", cfg.synthesis.sample_spacing_ns);
            }
            read(j, "output_dir", cfg.output_dir);
            read(j, "threads", cfg.threads);
        }
        catch (const json::exception &e)
        {
            throw ParseError(std::string("bad config value: ") + e.what(), 1);
        }
        catch (const std::invalid_argument &e)
        {
            throw ParseError(e.what(), 1);
        }
        return cfg;
    }

    std::string read_text_file(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw IoError("cannot open '" + path.string() + "' for reading");
        std::ostringstream ss;
        ss << in.rdbuf();
        if (in.bad())
            throw IoError("failed reading '" + path.string() + "'");
        return ss.str();
    }

    void write_text_file(const std::filesystem::path &path, std::string_view content)
    {
        std::error_code ec;
        if (path.has_parent_path())
            std::filesystem::create_directories(path.parent_path(), ec);
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open '" + path.string() + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out)
            throw IoError("failed writing '" + path.string() + "'");
    }
}
